"""Octonion products realized inside Cl(0,7).

Two embeddings are provided: the paravector picture, where the product is the
paravector part of ``a b (1 - W)``, and the spinor picture through the
primitive idempotent ``I-``.  The graded decomposition of ``16 a b I-`` is
computed twice, once by direct expansion and once from closed forms, and the
two are compared grade by grade.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Octonion, PreconditionError
from .clifford import (
    Multivector,
    constants,
    grade_project,
    mv_mul,
    paravector_part,
    wedge,
)


def _as_paravector(a) -> Multivector:
    if isinstance(a, Octonion):
        return Multivector.from_octonion(a)
    if not a.is_paravector():
        raise PreconditionError("expected a paravector")
    return a


def oct_via_W(a, b) -> Octonion:
    """``a o b = [a b (1 - W)]_{0,1}``."""
    a, b = _as_paravector(a), _as_paravector(b)
    one_minus_W = Multivector.scalar(1) - constants().W
    return paravector_part(mv_mul(mv_mul(a, b), one_minus_W)).to_octonion()


def oct_via_idempotent(a, b) -> Octonion:
    """``a o b = 16 [a b I-]_{0,1}``."""
    a, b = _as_paravector(a), _as_paravector(b)
    prod = mv_mul(mv_mul(a, b), constants().I_minus)
    return (paravector_part(prod) * 16).to_octonion()


def cross_via_W(a, b) -> Octonion:
    """Seven-dimensional cross product as ``-[(a ^ b) W]_1``."""
    a, b = _as_paravector(a), _as_paravector(b)
    if not (a.is_vector() and b.is_vector()):
        raise PreconditionError("cross_via_W expects pure vectors")
    out = -grade_project(mv_mul(wedge(a, b), constants().W), 1)
    return out.to_octonion()


@dataclass(frozen=True)
class GradedIdentityReport:
    k: int
    lhs: Multivector
    rhs: Multivector

    @property
    def equal(self) -> bool:
        return (self.lhs - self.rhs).is_zero()


def _split(a: Multivector) -> tuple[Fraction, Multivector]:
    return a.c[0], grade_project(a, 1)


def graded_closed_forms(a, b) -> list[Multivector]:
    """Closed forms for ``16 [a b I-]_k``, k = 0..7, without forming ``a b I-``."""
    a, b = _as_paravector(a), _as_paravector(b)
    K = constants()
    W, e7 = K.W, K.pseudoscalar
    a0, av = _split(a)
    b0, bv = _split(b)
    s = a0 * b0 - sum((av.c[m] * bv.c[m] for m in range(1, 128)), Fraction(0))
    v = bv * a0 + av * b0
    w = wedge(av, bv)
    We = mv_mul(W, e7)
    vW, vWe = mv_mul(v, W), mv_mul(v, We)
    wW, wWe = mv_mul(w, W), mv_mul(w, We)
    g = grade_project
    return [
        Multivector.scalar(s),
        v - g(wW, 1),
        w - g(vW, 2) + g(wWe, 2),
        -(W * s) + g(vWe, 3) - g(wW, 3),
        We * s - g(vW, 4) + g(wWe, 4),
        g(vWe, 5) - g(wW, 5) - mv_mul(w, e7),
        -mv_mul(v, e7) + g(wWe, 6),
        -(e7 * s),
    ]


def spinor_product(a, b) -> Multivector:
    """``16 a b I-`` by direct multiplication."""
    a, b = _as_paravector(a), _as_paravector(b)
    return mv_mul(mv_mul(a, b), constants().I_minus) * 16


def graded_parts(a, b) -> list[GradedIdentityReport]:
    direct = spinor_product(a, b)
    closed = graded_closed_forms(a, b)
    return [GradedIdentityReport(k, grade_project(direct, k), closed[k]) for k in range(8)]


def vanishing_flags(a, b) -> list[bool]:
    """Whether ``[a b I-]_k`` vanishes, for k = 0..7."""
    direct = spinor_product(a, b)
    return [grade_project(direct, k).is_zero() for k in range(8)]


def symmetry_holds(flags: list[bool]) -> bool:
    """``[abI]_k = 0`` iff ``[abI]_{7-k} = 0`` for every k."""
    return all(flags[k] == flags[7 - k] for k in range(8))


def middle_grades_equivalent(flags: list[bool]) -> bool:
    """When grade 0 vanishes, grades 2, 3, 4, 5 vanish together or not at all."""
    if not flags[0]:
        return True
    return len({flags[k] for k in (2, 3, 4, 5)}) == 1


def low_grades_suffice(a, b) -> bool:
    """If grades 0, 1, 2 of ``a b I-`` vanish then all of it does."""
    direct = spinor_product(a, b)
    if grade_project(direct, (0, 1, 2)).is_zero():
        return direct.is_zero()
    return True
