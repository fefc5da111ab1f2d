"""Dimensions of homogeneous polynomial solution spaces.

For a first-order system and a degree ``k``, the unknowns are the
coefficients of a homogeneous degree-``k`` map (one column per component and
monomial) and each equation contributes one row per monomial of degree
``k - 1``.  The solution space is the nullspace, its dimension is
``columns - rank`` with the rank computed exactly.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement

from . import exact, systems
from .clifford import DIM as CL_DIM
from .clifford import blade_indices
from .clifford import grade as blade_grade
from .operators import clifford_D, spinor_image
from .polyfun import Poly, PolyMap, parse, render


class SystemId(str, Enum):
    LEFT = "LEFT"
    RIGHT = "RIGHT"
    B = "B"
    R = "R"
    SPINOR_KERNEL = "SPINOR_KERNEL"
    CLIFFORD_RIESZ = "CLIFFORD_RIESZ"
    QUAT_LEFT = "QUAT_LEFT"
    QUAT_B = "QUAT_B"
    QUAT_R = "QUAT_R"


_EQUATIONS = {
    SystemId.LEFT: systems.OCT_LEFT,
    SystemId.RIGHT: systems.OCT_RIGHT,
    SystemId.B: systems.OCT_B,
    SystemId.R: systems.OCT_R,
    SystemId.QUAT_LEFT: systems.QUAT_LEFT,
    SystemId.QUAT_B: systems.QUAT_B,
    SystemId.QUAT_R: systems.QUAT_R,
}

QUAT_SYSTEMS = (SystemId.QUAT_LEFT, SystemId.QUAT_B, SystemId.QUAT_R)


@dataclass
class RegspaceConfig:
    degree_cap: int = 4


DEFAULT_CONFIG = RegspaceConfig()


class DegreeCapError(ValueError):
    pass


def n_vars(system: SystemId) -> int:
    return 4 if system in QUAT_SYSTEMS else 8


def n_comps(system: SystemId) -> int:
    return 4 if system in QUAT_SYSTEMS else 8


def monomial_basis(k: int, nv: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total degree ``k`` in ``nv`` variables, grlex descending."""
    if k < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nv), k):
        e = [0] * nv
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def _pad(e: tuple[int, ...]) -> tuple[int, ...]:
    return e + (0,) * (8 - len(e))


@dataclass
class ConstraintMatrix:
    system: SystemId
    degree: int
    n_vars: int
    n_comps: int
    rows: list[dict[int, Fraction]]
    row_labels: list[tuple]
    monomials: list[tuple[int, ...]] = field(repr=False)

    @property
    def n_cols(self) -> int:
        return self.n_comps * len(self.monomials)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.n_cols

    def column(self, comp: int, mono: tuple[int, ...]) -> int:
        return comp * len(self.monomials) + self.monomials.index(mono)

    def to_dense(self) -> list[list[Fraction]]:
        n = self.n_cols
        out = []
        for r in self.rows:
            row = [Fraction(0)] * n
            for c, v in r.items():
                row[c] = Fraction(v)
            out.append(row)
        return out

    def vector_to_map(self, vec) -> PolyMap:
        alg = "H" if self.n_comps == 4 else "O"
        nm = len(self.monomials)
        comps = [dict() for _ in range(self.n_comps)]
        for c, v in vec.items():
            if v:
                comps[c // nm][_pad(self.monomials[c % nm])] = v
        return PolyMap(alg, [Poly(t) for t in comps])

    def map_to_vector(self, f: PolyMap) -> dict[int, Fraction]:
        nm = len(self.monomials)
        index = {_pad(m): i for i, m in enumerate(self.monomials)}
        vec = {}
        for j in range(self.n_comps):
            for e, c in f.comps[j].terms.items():
                if e not in index:
                    raise ValueError(f"monomial {e} is not of degree {self.degree} in {self.n_vars} variables")
                vec[j * nm + index[e]] = c
        return vec


def _equation_matrix(system: SystemId, k: int) -> ConstraintMatrix:
    nv, nc = n_vars(system), n_comps(system)
    cols = monomial_basis(k, nv)
    col_index = {m: i for i, m in enumerate(cols)}
    targets = monomial_basis(k - 1, nv)
    rows, labels = [], []
    for eq_no, eq in enumerate(_EQUATIONS[system]):
        for t in targets:
            row: dict[int, Fraction] = {}
            for coef, var, comp in eq:
                # d/dx_var of x^(t + e_var) = (t_var + 1) x^t
                src = list(t)
                src[var] += 1
                col = comp * len(cols) + col_index[tuple(src)]
                row[col] = row.get(col, 0) + coef * src[var]
            rows.append({c: Fraction(v) for c, v in row.items() if v})
            labels.append((eq_no, t))
    return ConstraintMatrix(system, k, nv, nc, rows, labels, cols)


def _operator_matrix(system: SystemId, k: int, grades=None) -> ConstraintMatrix:
    """Rows from expanding a Clifford-valued operator over the monomial basis."""
    cols = monomial_basis(k, 8)
    targets = monomial_basis(k - 1, 8)
    t_index = {_pad(t): i for i, t in enumerate(targets)}
    blades = sorted(range(CL_DIM), key=lambda m: (blade_grade(m), blade_indices(m)))
    if grades is not None:
        blades = [m for m in blades if blade_grade(m) in set(grades)]
    row_of = {}
    for b in blades:
        for ti in range(len(targets)):
            row_of[(b, ti)] = len(row_of)
    rows: list[dict[int, Fraction]] = [dict() for _ in row_of]
    op = spinor_image if system is SystemId.SPINOR_KERNEL else clifford_D
    for comp in range(8):
        for mi, m in enumerate(cols):
            f = PolyMap("O", {comp: Poly({_pad(m): 1})})
            out = op(f)
            col = comp * len(cols) + mi
            for b, p in enumerate(out.comps):
                for e, v in p.terms.items():
                    key = (b, t_index[e])
                    if key in row_of:
                        rows[row_of[key]][col] = v
    labels = sorted(row_of, key=row_of.get)
    return ConstraintMatrix(system, k, 8, 8, rows, labels, cols)


def build_matrix(system: SystemId | str, k: int, grades=None) -> ConstraintMatrix:
    """Constraint matrix of ``system`` on homogeneous degree-``k`` maps.

    ``grades`` restricts the Clifford-valued systems to the listed blade grades.
    """
    system = SystemId(system)
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if system in _EQUATIONS:
        if grades is not None:
            raise ValueError("grade restriction applies to Clifford-valued systems only")
        return _equation_matrix(system, k)
    return _operator_matrix(system, k, grades)


def matrix_rank(M: ConstraintMatrix) -> int:
    return exact.rank(M.rows)


def solution_dim(system: SystemId | str, k: int, config: RegspaceConfig = DEFAULT_CONFIG) -> int:
    if k > config.degree_cap:
        raise DegreeCapError(f"degree {k} exceeds cap {config.degree_cap}")
    M = build_matrix(system, k)
    return M.n_cols - matrix_rank(M)


def solution_basis(system: SystemId | str, k: int) -> list[PolyMap]:
    M = build_matrix(system, k)
    return [M.vector_to_map(v) for v in exact.nullspace(M.rows, M.n_cols)]


def in_nullspace(M: ConstraintMatrix, f: PolyMap) -> bool:
    return not any(exact.apply(M.rows, M.map_to_vector(f)))


@dataclass(frozen=True)
class DimRow:
    system: str
    degree: int
    unknowns: int
    rank: int
    dimension: int


def dimension_row(system: SystemId | str, k: int) -> DimRow:
    M = build_matrix(system, k)
    r = matrix_rank(M)
    return DimRow(SystemId(system).value, k, M.n_cols, r, M.n_cols - r)


# Known degree-1 witnesses, tried before searching a nullspace basis.
KNOWN_WITNESSES = {
    ("B", "R"): "x2*e1 - x7*e4",
    ("LEFT", "B"): "x1 - x2*e3",
}


def _first_outside(candidates: list[PolyMap], M: ConstraintMatrix) -> PolyMap | None:
    # Prefer the sparsest witness for readability.
    for f in sorted(candidates, key=lambda g: (sum(len(p.terms) for p in g.comps), render(g))):
        if not in_nullspace(M, f):
            return f
    return None


def _witness(big: ConstraintMatrix, small: ConstraintMatrix, key: tuple[str, str]) -> PolyMap | None:
    """A map in the nullspace of ``big`` but not of ``small``."""
    known = KNOWN_WITNESSES.get(key)
    if known is not None and big.degree == 1:
        f = parse(known)
        if in_nullspace(big, f) and not in_nullspace(small, f):
            return f
    return _first_outside(solution_basis(big.system, big.degree), small)


def inclusion_report(k: int, mode: str = "oct", config: RegspaceConfig = DEFAULT_CONFIG) -> dict:
    """Dimensions of the nested solution spaces at degree ``k`` with witnesses."""
    if k < 1:
        raise ValueError("inclusion report needs degree >= 1")
    if k > config.degree_cap:
        raise DegreeCapError(f"degree {k} exceeds cap {config.degree_cap}")
    if mode == "oct":
        ids = (SystemId.R, SystemId.B, SystemId.LEFT)
    elif mode == "quat":
        ids = QUAT_SYSTEMS[::-1]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    mats = {s: build_matrix(s, k) for s in ids}
    rows = []
    for s in ids:
        r = matrix_rank(mats[s])
        rows.append(DimRow(s.value, k, mats[s].n_cols, r, mats[s].n_cols - r))
    d = [r.dimension for r in rows]
    report = {"mode": mode, "degree": k, "rows": rows}
    if mode == "oct":
        R, B, L = ids
        report["strict_chain"] = d[0] < d[1] < d[2]
        wb = _witness(mats[B], mats[R], ("B", "R"))
        wl = _witness(mats[L], mats[B], ("LEFT", "B"))
        report["witness_B_not_R"] = render(wb) if wb is not None else None
        report["witness_left_not_B"] = render(wl) if wl is not None else None
    else:
        R, B, L = ids
        joint = exact.rank(mats[R].rows + mats[B].rows)
        report["equal_row_spaces"] = rows[0].rank == rows[1].rank == joint
        report["r_equals_b"] = d[0] == d[1]
        report["strict_b_in_left"] = d[1] < d[2]
        wl = _first_outside(solution_basis(L, k), mats[B])
        report["witness_left_not_B"] = render(wl) if wl is not None else None
    return report


CSV_FIELDS = ("system", "degree", "unknowns", "rank", "dimension")


def to_csv(rows: list[DimRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow([r.system, r.degree, r.unknowns, r.rank, r.dimension])
    return buf.getvalue()


def to_json(rows: list[DimRow]) -> str:
    return json.dumps([{f: getattr(r, f) for f in CSV_FIELDS} for r in rows], indent=2)
