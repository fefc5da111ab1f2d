"""The lemma-by-lemma verification suite behind ``octoreg verify``.

Each suite receives its own ``random.Random`` seeded from the run seed and the
suite name, so suites are independent of execution order.
"""

from __future__ import annotations

import random
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable

from . import algebra, operators, regspace, sampling, systems, triality
from .algebra import (
    E4,
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
    oct_mul_decomposed,
    oct_mul_quat_form,
    to_quat_form,
)
from .clifford import (
    Multivector,
    constants,
    grade_project,
    mv_mul,
    vec_dot,
    wedge,
)
from .exact import rank
from .polyfun import Poly, PolyMap, parse, render


@dataclass
class Checker:
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)


@dataclass
class LemmaResult:
    lemma: str
    anchor: str
    checks: int
    failures: int
    messages: list[str]
    elapsed: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "lemma": self.lemma,
            "anchor": self.anchor,
            "checks": self.checks,
            "failures": self.failures,
            "messages": self.messages,
        }
        if timing:
            d["elapsed"] = round(self.elapsed or 0.0, 6)
        return d


@dataclass(frozen=True)
class Suite:
    lemma: str
    anchor: str
    run: Callable[[Checker, random.Random, int], None]


SUITES: list[Suite] = []


def suite(lemma: str, anchor: str):
    def deco(fn):
        SUITES.append(Suite(lemma, anchor, fn))
        return fn
    return deco


def _e(i: int) -> Octonion:
    return Octonion.basis(i)


def _table_entry(i: int, j: int) -> Octonion:
    text = OCTONION_TABLE[i].split()[j]
    sign = -1 if text.startswith("-") else 1
    name = text.lstrip("-")
    return _e(0 if name == "1" else int(name[1:])) * sign


def _quat_forms():
    for i in range(4):
        for j in range(4):
            yield Quaternion.basis(i), Quaternion.basis(j)


@suite("octonion-table", "e_i o e_j as tabulated, 64 entries")
def _table(c: Checker, rng, n):
    for i in range(8):
        for j in range(8):
            c.check(oct_mul(_e(i), _e(j)) == _table_entry(i, j), f"e{i} o e{j}")


@suite("octonion-anticommutation", "e_i o e_i = -1, e_i o e_j = -e_j o e_i")
def _anticomm(c: Checker, rng, n):
    for i in range(1, 8):
        c.check(oct_mul(_e(i), _e(i)) == _e(0) * -1, f"e{i}^2")
        for j in range(1, 8):
            if i != j:
                c.check(oct_mul(_e(i), _e(j)) == -oct_mul(_e(j), _e(i)), f"e{i} e{j}")


@suite("octonion-alternativity", "x o (x o y) = (x o x) o y")
def _alt(c: Checker, rng, n):
    for _ in range(n):
        x, y = sampling.octonion(rng), sampling.octonion(rng)
        c.check(oct_mul(x, oct_mul(x, y)) == oct_mul(oct_mul(x, x), y), f"left {x} {y}")
        c.check(oct_mul(oct_mul(y, x), x) == oct_mul(y, oct_mul(x, x)), f"right {x} {y}")


@suite("octonion-norm", "|x o y|^2 = |x|^2 |y|^2")
def _norm(c: Checker, rng, n):
    for _ in range(n):
        x, y = sampling.octonion(rng), sampling.octonion(rng)
        c.check(oct_mul(x, y).norm2() == x.norm2() * y.norm2(), f"{x} {y}")


@suite("octonion-decomposition", "x o y = x0 y0 - x.y + x0 y + y0 x + x cross y")
def _decomp(c: Checker, rng, n):
    for i in range(8):
        for j in range(8):
            c.check(oct_mul(_e(i), _e(j)) == oct_mul_decomposed(_e(i), _e(j)), f"e{i} e{j}")
    for _ in range(n):
        x, y = sampling.octonion(rng), sampling.octonion(rng)
        c.check(oct_mul(x, y) == oct_mul_decomposed(x, y), f"{x} {y}")


@suite("quaternion-form-e4", "six e4 product identities for quaternions")
def _e4ids(c: Checker, rng, n):
    pairs = list(_quat_forms()) + [(sampling.quaternion(rng), sampling.quaternion(rng)) for _ in range(n)]
    for u, v in pairs:
        for name, lhs, rhs in e4_identities(u, v):
            c.check(lhs == rhs, f"{name} u={u} v={v}")


def _random_form(rng) -> QuatForm:
    return QuatForm(sampling.quaternion(rng), sampling.quaternion(rng))


def _basis_forms():
    for i in range(8):
        yield to_quat_form(_e(i))


@suite("cross-e4-identities", "seven cross-product identities involving e4")
def _crossids(c: Checker, rng, n):
    forms = list(_basis_forms())
    pairs = [(x, y) for x in forms for y in forms]
    pairs += [(_random_form(rng), _random_form(rng)) for _ in range(n)]
    for x, y in pairs:
        for name, lhs, rhs in e4_cross_identities(x, y):
            c.check(lhs == rhs, f"{name}")


@suite("cross-quaternion-form", "x cross y through 3-dimensional dot and cross products")
def _crossqf(c: Checker, rng, n):
    vecs = [_e(i) for i in range(1, 8)]
    pairs = [(x, y) for x in vecs for y in vecs]
    pairs += [(sampling.vector_octonion(rng), sampling.vector_octonion(rng)) for _ in range(n)]
    for x, y in pairs:
        c.check(cross_quat_form(x, y) == oct_cross(x, y), f"{x} {y}")
        c.check(oct_cross(x, y) == -oct_cross(y, x), f"antisymmetry {x} {y}")


@suite("product-quaternion-form", "x o y blockwise over R, e1..e3, e4, e5..e7")
def _prodqf(c: Checker, rng, n):
    pairs = [(_e(i), _e(j)) for i in range(8) for j in range(8)]
    pairs += [(sampling.octonion(rng), sampling.octonion(rng)) for _ in range(n)]
    for x, y in pairs:
        c.check(oct_mul_quat_form(to_quat_form(x), to_quat_form(y)) == oct_mul(x, y), f"{x} {y}")
        c.check(from_quat_form(to_quat_form(x)) == x, f"round trip {x}")


def _gen(i: int) -> Multivector:
    return Multivector.e(i)


def _random_mv(rng, density: float = 0.15) -> Multivector:
    return Multivector([sampling.rational(rng, 4, 3) if rng.random() < density else 0 for _ in range(128)])


@suite("clifford-relations", "e_i e_j + e_j e_i = -2 delta_ij, associativity")
def _clrel(c: Checker, rng, n):
    for i in range(1, 8):
        for j in range(1, 8):
            s = _gen(i) * _gen(j) + _gen(j) * _gen(i)
            c.check(s == Multivector.scalar(-2 if i == j else 0), f"e{i} e{j}")
    for _ in range(n):
        a, b, d = _random_mv(rng), _random_mv(rng), _random_mv(rng)
        c.check(mv_mul(mv_mul(a, b), d) == mv_mul(a, mv_mul(b, d)), "associativity")


@suite("clifford-paravector-product", "x y = x0 y0 - x.y + x0 y + y0 x + x ^ y")
def _clpara(c: Checker, rng, n):
    for _ in range(n):
        x = Multivector.from_octonion(sampling.octonion(rng))
        y = Multivector.from_octonion(sampling.octonion(rng))
        xv, yv = grade_project(x, 1), grade_project(y, 1)
        rhs = (Multivector.scalar(x.c[0] * y.c[0] - vec_dot(xv, yv))
               + yv * x.c[0] + xv * y.c[0] + wedge(xv, yv))
        c.check(mv_mul(x, y) == rhs, "paravector product")


@suite("trivector-constants", "W W^-1 = 1, (I+-)^2 = I+-, 16 I- = 1 - W + W e1..7 - e1..7")
def _consts(c: Checker, rng, n):
    K = constants()
    one = Multivector.scalar(1)
    c.check(K.W * K.W_inv == one, "W W^-1")
    c.check(K.W_inv * K.W == one, "W^-1 W")
    c.check(K.I_minus * K.I_minus == K.I_minus, "I- idempotent")
    c.check(K.I_plus * K.I_plus == K.I_plus, "I+ idempotent")
    c.check(K.pseudoscalar * K.pseudoscalar == one, "e1..7^2")
    c.check(grade_project(K.W, 3) == K.W, "W is a 3-vector")
    We = K.W * K.pseudoscalar
    c.check(grade_project(We, 4) == We, "W e1..7 is a 4-vector")
    c.check(K.I_minus * 16 == one - K.W + We - K.pseudoscalar, "16 I- expansion")
    c.check((K.I_plus + K.I_minus) * 8 == one + We, "I+ + I-")


@suite("triality-products", "a o b = [ab(1-W)]_{0,1} = 16[abI-]_{0,1}")
def _tri(c: Checker, rng, n):
    pairs = [(_e(i), _e(j)) for i in range(8) for j in range(8)]
    pairs += [(sampling.octonion(rng), sampling.octonion(rng)) for _ in range(n)]
    for a, b in pairs:
        ref = oct_mul(a, b)
        c.check(triality.oct_via_W(a, b) == ref, f"W {a} {b}")
        c.check(triality.oct_via_idempotent(a, b) == ref, f"I- {a} {b}")
        av, bv = a.vector, b.vector
        c.check(triality.cross_via_W(av, bv) == oct_cross(av, bv), f"cross {a} {b}")


@suite("graded-spinor-identities", "closed forms of 16[abI-]_k, k = 0..7, and their symmetry")
def _graded(c: Checker, rng, n):
    pairs = [(_e(i), _e(j)) for i in range(8) for j in range(8)]
    pairs += [(sampling.octonion(rng), sampling.octonion(rng)) for _ in range(n)]
    for a, b in pairs:
        for rep in triality.graded_parts(a, b):
            c.check(rep.equal, f"grade {rep.k} {a} {b}")
        flags = triality.vanishing_flags(a, b)
        c.check(triality.symmetry_holds(flags), f"symmetry {a} {b}")
        c.check(triality.middle_grades_equivalent(flags), f"middle grades {a} {b}")
        c.check(triality.low_grades_suffice(a, b), f"low grades {a} {b}")


@suite("strict-inclusion-counterexamples", "x2 e1 - x7 e4 in B not R; x1 - x2 e3 left not right")
def _counter(c: Checker, rng, n):
    r1 = operators.classify(parse("x2*e1 - x7*e4"))
    c.check(r1.left_regular and r1.right_regular and r1.b_regular, "x2e1 - x7e4 is B-regular")
    c.check(not r1.r_regular, "x2e1 - x7e4 is not R-regular")
    c.check(r1.spinor_kernel is True, "x2e1 - x7e4 spinor kernel")
    c.check(r1.curl_defects.get((1, 2)) == Poly.const(-1), "d1 f2 - d2 f1 = -1")
    r2 = operators.classify(parse("x1 - x2*e3"))
    c.check(r2.left_regular and not r2.right_regular, "x1 - x2e3 left but not right")
    c.check(render(r2.d_right) == "2*e1", "f D = 2 e1")
    dg, dga = operators.not_a_module(parse("x1 - x2*e3", "H"), E4)
    c.check(dg.is_zero(), "D g = 0")
    c.check(render(dga) == "2*e5", "D (g o e4) = 2 e5")
    c.check(render(operators.clifford_D(parse("x2*e1 - x7*e4"))) == "-e12 + e47", "d_x f = e4e7 - e1e2")


@suite("ck-extension", "CK[f] = exp(-x0 D) f is B-regular for real f")
def _ck(c: Checker, rng, n):
    xv = parse(" + ".join(f"x{i}*e{i}" for i in range(1, 8)))
    c.check(render(operators.ck_extension(xv)) == "7*x0 + " + render(xv), "CK[x] = 7x0 + x")
    for _ in range(n):
        f = sampling.polymap(rng, "R", variables=range(1, 8), max_degree=3, max_terms=4)
        c.check(operators.classify(operators.ck_extension(f)).b_regular, f"CK[{render(f)}]")


@suite("spinor-characterization", "left iff [d f I]_{0,1} = 0; B iff also [d f W]_1 = 0")
def _spinor(c: Checker, rng, n):
    fs = [parse("x2*e1 - x7*e4"), parse("x1 - x2*e3"), parse("x0")]
    fs += [sampling.mixed_octonion_map(rng) for _ in range(n)]
    for f in fs:
        rep = operators.classify(f)
        st = operators.spinor_tests(f)
        c.check(st.left_regular == rep.left_regular, f"left {render(f)}")
        c.check(st.b_regular == rep.b_regular, f"B {render(f)}")
        c.check((st.grade0 + st.grade1).scale(16).to_octonion_map() == rep.d_left,
                f"D f = 16[d f I]_(0,1) {render(f)}")


@suite("clifford-riesz-equivalence", "paravector f: d f = 0 iff f d = 0 iff Riesz system")
def _kerdcl(c: Checker, rng, n):
    for _ in range(n):
        f = sampling.mixed_octonion_map(rng).to_clifford()
        flags = operators.kerdcl_agreement(f)
        c.check(len(set(flags)) == 1, f"{render(f)}: {flags}")


@suite("operator-decomposition", "D f = div + d0 f_v + D f0 + rotor; D f - f D = 2 rotor")
def _opdecomp(c: Checker, rng, n):
    for _ in range(n):
        f = sampling.polymap(rng, "O")
        parts = operators.left_decomposition(f)
        total = parts["divergence"] + parts["d0_vector"] + parts["dirac_real"] + parts["rotor"]
        c.check(total == operators.D_left(f), f"left {render(f)}")
        c.check(operators.D_left(f) - operators.D_right(f) == operators.rotor(f).scale(2), f"rotor {render(f)}")


@suite("componentwise-systems", "componentwise systems match the operators on basis maps")
def _systems(c: Checker, rng, n):
    for i in range(8):
        for j in range(8):
            f = PolyMap("O", {j: Poly.var(i)})
            dl = operators.D_left(f)
            dr = operators.D_right(f)
            for k in range(8):
                c.check(systems.apply_equation(systems.OCT_LEFT[k], f) == dl.comps[k],
                        f"left eq {k} on x{i} e{j}")
                c.check(systems.apply_equation(systems.OCT_RIGHT[k], f) == dr.comps[k],
                        f"right eq {k} on x{i} e{j}")


@suite("biaxial-systems", "quaternion-form systems for left and B-regularity")
def _biaxial(c: Checker, rng, n):
    for _ in range(n):
        f = sampling.mixed_octonion_map(rng)
        c.check(operators.biaxial_D_left(f).reassemble() == operators.D_left(f), f"reassemble {render(f)}")
        rep = operators.classify(f)
        c.check(operators.biaxial_left_system(f) == rep.left_regular, f"left {render(f)}")
        c.check(operators.biaxial_b_system(f) == rep.b_regular, f"B {render(f)}")
    # The curl-only split is neither necessary nor sufficient.
    c.check(not operators.biaxial_b_system_curl_split(parse("x2*e1 - x7*e4")), "curl split, B-regular witness")
    c.check(operators.biaxial_b_system_curl_split(parse("x0*e1 - x4*e5")), "curl split, non-B witness")


@suite("product-rules", "quaternion product rules and their e4 variants")
def _prules(c: Checker, rng, n):
    for _ in range(n):
        f = sampling.polymap(rng, "H")
        g = sampling.polymap(rng, "H")
        for chk in operators.product_rules(f, g):
            c.check(chk.holds, f"{chk.name} f={render(f)} g={render(g)}")


@suite("vector-calculus-identity", "D.(f x g) = (D x f).g - f.(D x g)")
def _vci(c: Checker, rng, n):
    for _ in range(n):
        f, g = sampling.polymap(rng, "O"), sampling.polymap(rng, "O")
        c.check(operators.vector_calc_identity(f, g).holds, f"f={render(f)} g={render(g)}")


@suite("quaternion-classes", "quaternion maps: B-regular iff R-regular")
def _quat(c: Checker, rng, n):
    for _ in range(n):
        kind = rng.randrange(3)
        if kind == 0:
            f = sampling.polymap(rng, "H", variables=range(4))
        else:
            f = sampling.from_space(rng, ("QUAT_B", "QUAT_LEFT")[kind - 1], rng.randint(1, 2))
        rep = operators.classify_quat(f)
        c.check(rep.b_regular == rep.r_regular, f"{render(f)}")


@suite("dimension-chain", "dim R < dim B < dim left (octonion); dim R = dim B (quaternion)")
def _dims(c: Checker, rng, n):
    for k in (1, 2):
        rep = regspace.inclusion_report(k, "oct")
        c.check(rep["strict_chain"], f"octonion chain at degree {k}")
        qrep = regspace.inclusion_report(k, "quat")
        c.check(qrep["r_equals_b"] and qrep["equal_row_spaces"], f"quaternion R = B at degree {k}")
        c.check(qrep["strict_b_in_left"], f"quaternion B < left at degree {k}")
    B1, R1 = regspace.build_matrix("B", 1), regspace.build_matrix("R", 1)
    w = parse("x2*e1 - x7*e4")
    c.check(regspace.in_nullspace(B1, w) and not regspace.in_nullspace(R1, w), "x2e1 - x7e4 in B minus R")
    L1 = regspace.build_matrix("LEFT", 1)
    w = parse("x1 - x2*e3")
    c.check(regspace.in_nullspace(L1, w) and not regspace.in_nullspace(B1, w), "x1 - x2e3 in left minus B")


@suite("spinor-grade-sufficiency", "[abI]_{0,1,2} = 0 implies abI = 0, as a rank equality")
def _spinrank(c: Checker, rng, n):
    full = regspace.build_matrix("SPINOR_KERNEL", 1)
    low = regspace.build_matrix("SPINOR_KERNEL", 1, grades=(0, 1, 2))
    c.check(rank(full.rows) == rank(low.rows), "rank at degree 1")
    c.check(regspace.solution_dim("SPINOR_KERNEL", 1) > regspace.solution_dim("R", 1), "spinor kernel exceeds R")


def _suite_rng(seed: int, name: str) -> random.Random:
    return random.Random(seed * 1_000_003 + zlib.crc32(name.encode()))


def run(seed: int = 0, samples: int = 50, only: list[str] | None = None) -> list[LemmaResult]:
    results = []
    for s in SUITES:
        if only and s.lemma not in only:
            continue
        c = Checker()
        t0 = time.perf_counter()
        try:
            s.run(c, _suite_rng(seed, s.lemma), samples)
        except Exception as exc:  # a crash counts as a failure of that lemma
            c.check(False, f"exception: {type(exc).__name__}: {exc}")
        elapsed = time.perf_counter() - t0
        results.append(LemmaResult(s.lemma, s.anchor, c.checks, len(c.failures), c.failures[:5], elapsed))
    return results
