"""First-order linear PDE systems written out componentwise.

Each equation is a sum of terms ``c * d_{x_i} f_j``.  The tables are written
in the compact form ``"+i.j"`` for ``+ d_{x_i} f_j``, row by row as the
systems are usually printed, so they can be checked against the operator
definitions rather than derived from them.
"""

from __future__ import annotations

from typing import Sequence

from .polyfun import Poly, PolyMap

Term = tuple[int, int, int]  # (coefficient, derivative variable, component)
Equation = tuple[Term, ...]


def _eq(src: str) -> Equation:
    out = []
    for tok in src.split():
        sign = -1 if tok[0] == "-" else 1
        i, j = tok.lstrip("+-").split(".")
        out.append((sign, int(i), int(j)))
    return tuple(out)


DIVERGENCE = "+0.0 -1.1 -2.2 -3.3 -4.4 -5.5 -6.6 -7.7"

# Left regularity (Moisil-Teodorescu type system).
OCT_LEFT: tuple[Equation, ...] = tuple(_eq(s) for s in (
    DIVERGENCE,
    "+0.1 +1.0 +2.3 -3.2 +4.5 -5.4 -6.7 +7.6",
    "+0.2 +2.0 -1.3 +3.1 +4.6 -6.4 +5.7 -7.5",
    "+0.3 +3.0 +1.2 -2.1 +4.7 -7.4 -5.6 +6.5",
    "+0.4 +4.0 -1.5 +5.1 -2.6 +6.2 -3.7 +7.3",
    "+0.5 +5.0 +1.4 -4.1 -2.7 +7.2 +3.6 -6.3",
    "+0.6 +6.0 +1.7 -7.1 +2.4 -4.2 -3.5 +5.3",
    "+0.7 +7.0 -1.6 +6.1 +2.5 -5.2 +3.4 -4.3",
))

_SYMMETRIC = tuple(f"+0.{i} +{i}.0" for i in range(1, 8))

# Left and right regularity.
OCT_B: tuple[Equation, ...] = tuple(_eq(s) for s in (
    DIVERGENCE,
    *_SYMMETRIC,
    "+2.3 -3.2 +4.5 -5.4 -6.7 +7.6",
    "-1.3 +3.1 +4.6 -6.4 +5.7 -7.5",
    "+1.2 -2.1 +4.7 -7.4 -5.6 +6.5",
    "-1.5 +5.1 -2.6 +6.2 -3.7 +7.3",
    "+1.4 -4.1 -2.7 +7.2 +3.6 -6.3",
    "+1.7 -7.1 +2.4 -4.2 -3.5 +5.3",
    "-1.6 +6.1 +2.5 -5.2 +3.4 -4.3",
))

CURL_PAIRS = tuple((i, j) for i in range(1, 8) for j in range(i + 1, 8))

# Riesz system: divergence, symmetric coupling, and every curl component.
OCT_R: tuple[Equation, ...] = tuple(_eq(s) for s in (
    DIVERGENCE,
    *_SYMMETRIC,
    *(f"+{i}.{j} -{j}.{i}" for i, j in CURL_PAIRS),
))


def _flip_rotor(eqs: Sequence[Equation]) -> tuple[Equation, ...]:
    # Right regularity differs from left only in the sign of the rotor terms.
    return tuple(
        tuple((-c if (i and j and i != j) else c, i, j) for c, i, j in eq) for eq in eqs
    )


OCT_RIGHT = _flip_rotor(OCT_LEFT)

QUAT_LEFT: tuple[Equation, ...] = tuple(_eq(s) for s in (
    "+0.0 -1.1 -2.2 -3.3",
    "+0.1 +1.0 +2.3 -3.2",
    "+0.2 +2.0 -1.3 +3.1",
    "+0.3 +3.0 +1.2 -2.1",
))

QUAT_RIGHT = _flip_rotor(QUAT_LEFT)

QUAT_B: tuple[Equation, ...] = tuple(_eq(s) for s in (
    "+0.0 -1.1 -2.2 -3.3",
    "+0.1 +1.0", "+0.2 +2.0", "+0.3 +3.0",
    "+2.3 -3.2", "-1.3 +3.1", "+1.2 -2.1",
))

QUAT_R: tuple[Equation, ...] = tuple(_eq(s) for s in (
    "+0.0 -1.1 -2.2 -3.3",
    "+0.1 +1.0", "+0.2 +2.0", "+0.3 +3.0",
    "+1.2 -2.1", "+1.3 -3.1", "+2.3 -3.2",
))


def apply_equation(eq: Equation, f: PolyMap) -> Poly:
    out = Poly()
    for c, i, j in eq:
        d = f.comps[j].partial(i)
        out = out + d if c > 0 else out - d
    return out


def residuals(eqs: Sequence[Equation], f: PolyMap) -> list[Poly]:
    return [apply_equation(eq, f) for eq in eqs]


def satisfies(eqs: Sequence[Equation], f: PolyMap) -> bool:
    return all(apply_equation(eq, f).is_zero() for eq in eqs)
