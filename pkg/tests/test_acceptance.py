"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line.  Run the module directly
(``python tests/test_acceptance.py``) for just the summary.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

import pytest

from octoreg import operators, regspace, sampling, triality
from octoreg.algebra import (
    OCTONION_TABLE,
    Octonion,
    QuatForm,
    Quaternion,
    cross_quat_form,
    e4_cross_identities,
    e4_identities,
    from_quat_form,
    oct_cross,
    oct_mul,
    oct_mul_quat_form,
)
from octoreg.clifford import Multivector, constants
from octoreg.polyfun import Poly, PolyMap, parse, render

SEED = 20240601


def status_line(n: int, title: str, ok: bool, detail: str = "") -> str:
    return f"{'PASS' if ok else 'FAIL'} [{n}] {title}" + (f" ({detail})" if detail else "")


def _table_entry(i: int, j: int) -> Octonion:
    text = OCTONION_TABLE[i].split()[j]
    sign = -1 if text.startswith("-") else 1
    name = text.lstrip("-")
    return Octonion.basis(0 if name == "1" else int(name[1:]), sign)


# 1

def criterion_1() -> tuple[bool, str]:
    t0 = time.perf_counter()
    rng = random.Random(SEED + 1)
    fails = 0
    for i in range(8):
        for j in range(8):
            fails += oct_mul(Octonion.basis(i), Octonion.basis(j)) != _table_entry(i, j)
    for i in range(1, 8):
        ei = Octonion.basis(i)
        fails += oct_mul(ei, ei) != Octonion.scalar(-1)
        for j in range(1, 8):
            if i != j:
                ej = Octonion.basis(j)
                fails += oct_mul(ei, ej) != -oct_mul(ej, ei)
    n = 1000
    for _ in range(n):
        x, y = sampling.octonion(rng), sampling.octonion(rng)
        fails += oct_mul(x, oct_mul(x, y)) != oct_mul(oct_mul(x, x), y)
        fails += oct_mul(oct_mul(y, x), x) != oct_mul(y, oct_mul(x, x))
        fails += oct_mul(x, y).norm2() != x.norm2() * y.norm2()
    elapsed = time.perf_counter() - t0
    return fails == 0 and elapsed < 10, f"{n} samples, {fails} failures, {elapsed:.1f}s"


# 2

def criterion_2() -> tuple[bool, str]:
    rng = random.Random(SEED + 2)
    fails = checks = 0
    units = [Quaternion.basis(i) for i in range(4)]

    def run_all(u, v, a, b):
        nonlocal fails, checks
        pairs = e4_identities(u, v) + e4_cross_identities(QuatForm(u, v), QuatForm(a, b))
        x, y = QuatForm(u, v), QuatForm(a, b)
        X, Y = from_quat_form(x), from_quat_form(y)
        pairs.append(("product", oct_mul_quat_form(x, y), oct_mul(X, Y)))
        pairs.append(("cross", cross_quat_form(X.vector, Y.vector), oct_cross(X.vector, Y.vector)))
        for _, lhs, rhs in pairs:
            checks += 1
            fails += lhs != rhs

    for u in units:
        for v in units:
            for a in units:
                for b in units:
                    run_all(u, v, a, b)
    for _ in range(500):
        run_all(*(sampling.quaternion(rng) for _ in range(4)))
    return fails == 0, f"{checks} checks, {fails} failures"


# 3

def criterion_3() -> tuple[bool, str]:
    rng = random.Random(SEED + 3)
    K = constants()
    fails = 0
    fails += K.W * K.W_inv != Multivector.scalar(1)
    fails += K.I_minus * K.I_minus != K.I_minus
    pairs = [(Octonion.basis(i), Octonion.basis(j)) for i in range(8) for j in range(8)]
    pairs += [(sampling.octonion(rng), sampling.octonion(rng)) for _ in range(1000)]
    for a, b in pairs:
        ab = oct_mul(a, b)
        fails += triality.oct_via_W(a, b) != ab
        fails += triality.oct_via_idempotent(a, b) != ab
    graded = 0
    for _ in range(500):
        a, b = sampling.octonion(rng), sampling.octonion(rng)
        reports = triality.graded_parts(a, b)
        graded += len(reports)
        fails += sum(not r.equal for r in reports)
        fails += not triality.symmetry_holds([r.lhs.is_zero() for r in reports])
    # orthogonal basis pairs, where grade 0 vanishes and the middle grades matter
    for i in range(1, 8):
        for j in range(1, 8):
            if i != j:
                flags = triality.vanishing_flags(Octonion.basis(i), Octonion.basis(j))
                fails += not triality.symmetry_holds(flags)
    return fails == 0, f"{len(pairs)} product pairs, {graded} graded identities, {fails} failures"


# 4

def criterion_4() -> tuple[bool, str]:
    r1 = operators.classify(parse("x2*e1 - x7*e4"))
    ok1 = r1.flags() == {
        "left_regular": True, "right_regular": True, "b_regular": True,
        "r_regular": False, "spinor_kernel": True,
    }
    r2 = operators.classify(parse("x1 - x2*e3"))
    ok2 = r2.left_regular and not r2.right_regular and r2.d_right == PolyMap.from_octonion(Octonion.basis(1, 2))
    dg, dga = operators.not_a_module(parse("x1 - x2*e3"), Octonion.basis(4))
    ok3 = dg.is_zero() and dga == PolyMap.from_octonion(Octonion.basis(5, 2))
    return ok1 and ok2 and ok3, f"fD = {render(r2.d_right)}, D(g e4) = {render(dga)}"


# 5

def criterion_5() -> tuple[bool, str]:
    rng = random.Random(SEED + 5)
    xv = parse(" + ".join(f"x{i}*e{i}" for i in range(1, 8)))
    expected = xv + PolyMap("O", {0: Poly.var(0).scale(7)})
    ok = operators.ck_extension(xv) == expected
    bad = 0
    for _ in range(100):
        p = sampling.poly(rng, variables=range(1, 8), max_degree=3, max_terms=4)
        g = operators.ck_extension(PolyMap("O", {0: p}))
        bad += not operators.classify(g).b_regular
    return ok and bad == 0, f"CK[x] = {render(operators.ck_extension(xv))}; {bad}/100 not B-regular"


# 6

def criterion_6() -> tuple[bool, str]:
    rng = random.Random(SEED + 6)
    bad = regular = 0
    for _ in range(200):
        f = sampling.mixed_octonion_map(rng, max_degree=2)
        rep, sp = operators.classify(f), operators.spinor_tests(f)
        bad += (sp.left_regular, sp.b_regular) != (rep.left_regular, rep.b_regular)
        regular += rep.left_regular
    kbad = kreg = 0
    for n in range(200):
        if n % 2:
            f = sampling.polymap(rng, "O", max_degree=2)
        else:
            f = sampling.from_space(rng, "R", rng.randint(1, 2))
        left, right, riesz = operators.kerdcl_agreement(f)
        kbad += not (left == right == riesz)
        kreg += riesz
    return bad == 0 and kbad == 0, (
        f"spinor vs classify: {bad} mismatches ({regular} regular); "
        f"kerdcl: {kbad} mismatches ({kreg} in kernel)"
    )


# 7

def _dense_rank(dense) -> int:
    A = [list(map(Fraction, r)) for r in dense]
    rank = 0
    for c in range(len(A[0]) if A else 0):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(rank + 1, len(A)):
            if A[r][c]:
                f = A[r][c] / A[rank][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def criterion_7() -> tuple[bool, str]:
    t0 = time.perf_counter()
    k1 = {}
    oracle_ok = True
    for s in ("R", "B", "LEFT"):
        M = regspace.build_matrix(s, 1)
        k1[s] = regspace.solution_dim(s, 1)
        oracle_ok &= M.n_cols - _dense_rank(M.to_dense()) == k1[s]
    ok = oracle_ok and (k1["R"], k1["B"], k1["LEFT"]) == (35, 49, 56)
    chain = {}
    for k in (2, 3):
        d = [regspace.solution_dim(s, k) for s in ("R", "B", "LEFT")]
        chain[k] = d
        ok &= d[0] < d[1] < d[2]
    for k in (1, 2):
        ok &= regspace.solution_dim("QUAT_R", k) == regspace.solution_dim("QUAT_B", k)
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 60, f"k=1 {k1}, k=2 {chain[2]}, k=3 {chain[3]}, {elapsed:.1f}s"


# 8

def criterion_8() -> tuple[bool, str]:
    rng = random.Random(SEED + 8)
    bad = checks = 0
    for _ in range(200):
        f, g = sampling.polymap(rng, "O"), sampling.polymap(rng, "O")
        checks += 1
        bad += not operators.vector_calc_identity(f, g).holds
        fh, gh = sampling.polymap(rng, "H"), sampling.polymap(rng, "H")
        for chk in operators.product_rules(fh, gh):
            checks += 1
            bad += not chk.holds
    return bad == 0, f"{checks} identity checks (vector calculus + 9 product rules per pair), {bad} failures"


# 9

def criterion_9() -> tuple[bool, str]:
    parts = []
    ok = True
    for k in (1, 2):
        low = regspace.matrix_rank(regspace.build_matrix("SPINOR_KERNEL", k, grades=(0, 1, 2)))
        full = regspace.matrix_rank(regspace.build_matrix("SPINOR_KERNEL", k))
        ok &= low == full
        parts.append(f"k={k}: {low} vs {full}")
    return ok, "; ".join(parts)


CRITERIA = [
    (1, "table and algebra suite", criterion_1),
    (2, "quaternion-form suite", criterion_2),
    (3, "triality suite", criterion_3),
    (4, "counterexample reproduction", criterion_4),
    (5, "CK extension", criterion_5),
    (6, "spinor characterization and kerdcl equivalence", criterion_6),
    (7, "dimension chain", criterion_7),
    (8, "vector-calculus and product-rule identities", criterion_8),
    (9, "grade-(0,1,2) sufficiency by rank", criterion_9),
]


@pytest.mark.parametrize("n, title, fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(n, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + status_line(n, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n, title, fn in CRITERIA:
        ok, detail = fn()
        print(status_line(n, title, ok, detail))
        failed += not ok
    sys.exit(1 if failed else 0)
