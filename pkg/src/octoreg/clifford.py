"""The Clifford algebra Cl(0,7) with dense rational coefficients.

A basis blade is a 7-bit mask: bit ``i`` set means the generator ``e_{i+1}``
is a factor.  The empty mask is the scalar blade, so ``e0 = 1`` is never a
generator.  Generators anticommute and square to ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .algebra import Octonion, PreconditionError, format_scalar

DIM = 128
N_GEN = 7
PSEUDO_MASK = DIM - 1


def grade(mask: int) -> int:
    return bin(mask).count("1")


def blade_mask(indices: Iterable[int]) -> int:
    """Mask of the blade ``e_{i1 i2 ...}``; indices must be distinct and in 1..7."""
    mask = 0
    for i in indices:
        if not 1 <= i <= N_GEN:
            raise ValueError(f"generator index out of range: {i}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator e{i}")
        mask |= bit
    return mask


def blade_indices(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(N_GEN) if mask >> i & 1)


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i) for i in blade_indices(mask))


def _reorder_sign(a: int, b: int) -> int:
    # Count pairs (x in a, y in b) with x > y: each is one transposition
    # needed to merge the two ordered factor lists.
    swaps = 0
    a >>= 1
    while a:
        swaps += grade(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=None)
def blade_mul(a: int, b: int) -> tuple[int, int]:
    """Geometric product of two blades as ``(sign, mask)``."""
    sign = _reorder_sign(a, b)
    # Each shared generator contributes e_i e_i = -1.
    if grade(a & b) & 1:
        sign = -sign
    return sign, a ^ b


_MUL_TABLE = [[blade_mul(a, b) for b in range(DIM)] for a in range(DIM)]


@dataclass(frozen=True)
class Multivector:
    c: tuple[Fraction, ...]

    def __init__(self, c: Iterable = ()):
        vals = tuple(Fraction(x) for x in c)
        if not vals:
            vals = (Fraction(0),) * DIM
        if len(vals) != DIM:
            raise ValueError(f"expected {DIM} coefficients, got {len(vals)}")
        object.__setattr__(self, "c", vals)

    @classmethod
    def from_dict(cls, terms: Mapping[int, object]) -> Multivector:
        c = [Fraction(0)] * DIM
        for mask, v in terms.items():
            c[mask] += Fraction(v)
        return cls(c)

    @classmethod
    def blade(cls, mask: int, coeff=1) -> Multivector:
        return cls.from_dict({mask: coeff})

    @classmethod
    def scalar(cls, value) -> Multivector:
        return cls.blade(0, value)

    @classmethod
    def e(cls, *indices: int) -> Multivector:
        """The blade ``e_{i j ...}`` as the ordered product of its generators."""
        out = cls.scalar(1)
        for i in indices:
            out = out * cls.blade(blade_mask([i]))
        return out

    @classmethod
    def from_octonion(cls, x: Octonion) -> Multivector:
        """Paravector with component i on the blade {i}."""
        c = [Fraction(0)] * DIM
        c[0] = x.c[0]
        for i in range(1, 8):
            c[1 << (i - 1)] = x.c[i]
        return cls(c)

    def to_octonion(self) -> Octonion:
        if not self.is_paravector():
            raise PreconditionError("multivector has parts of grade >= 2")
        return Octonion([self.c[0]] + [self.c[1 << (i - 1)] for i in range(1, 8)])

    def terms(self) -> dict[int, Fraction]:
        return {m: v for m, v in enumerate(self.c) if v}

    def is_zero(self) -> bool:
        return not any(self.c)

    def grades(self) -> set[int]:
        return {grade(m) for m, v in enumerate(self.c) if v}

    def is_paravector(self) -> bool:
        return self.grades() <= {0, 1}

    def is_vector(self) -> bool:
        return self.grades() <= {1}

    def __add__(self, other: Multivector) -> Multivector:
        return Multivector(a + b for a, b in zip(self.c, other.c))

    def __sub__(self, other: Multivector) -> Multivector:
        return Multivector(a - b for a, b in zip(self.c, other.c))

    def __neg__(self) -> Multivector:
        return Multivector(-a for a in self.c)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        return Multivector(a * other for a in self.c)

    def __rmul__(self, other):
        return Multivector(other * a for a in self.c)

    def __repr__(self) -> str:
        return f"Multivector({format_multivector(self)})"


def format_multivector(a: Multivector) -> str:
    parts = []
    for mask in sorted(range(DIM), key=lambda m: (grade(m), blade_indices(m))):
        v = a.c[mask]
        if not v:
            continue
        mag = abs(v)
        if mask == 0:
            body = format_scalar(mag)
        elif mag == 1:
            body = blade_name(mask)
        else:
            body = f"{format_scalar(mag)}*{blade_name(mask)}"
        parts.append(("-" if v < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product."""
    out = [Fraction(0)] * DIM
    bt = [(m, v) for m, v in enumerate(b.c) if v]
    for ma, va in enumerate(a.c):
        if not va:
            continue
        row = _MUL_TABLE[ma]
        for mb, vb in bt:
            sign, mc = row[mb]
            if sign > 0:
                out[mc] += va * vb
            else:
                out[mc] -= va * vb
    return Multivector(out)


def grade_project(a: Multivector, k: int | Iterable[int]) -> Multivector:
    """Keep only the parts of grade ``k`` (or of any grade in ``k``)."""
    keep = {k} if isinstance(k, int) else set(k)
    return Multivector(v if grade(m) in keep else 0 for m, v in enumerate(a.c))


def paravector_part(a: Multivector) -> Multivector:
    return grade_project(a, (0, 1))


def wedge(x: Multivector, y: Multivector) -> Multivector:
    """Outer product of two vectors."""
    if not (x.is_vector() and y.is_vector()):
        raise PreconditionError("wedge expects grade-1 arguments")
    xy, yx = mv_mul(x, y), mv_mul(y, x)
    return (xy - yx) * Fraction(1, 2)


def vec_dot(x: Multivector, y: Multivector) -> Fraction:
    if not (x.is_vector() and y.is_vector()):
        raise PreconditionError("dot expects grade-1 arguments")
    return sum((x.c[1 << i] * y.c[1 << i] for i in range(N_GEN)), Fraction(0))


@dataclass(frozen=True)
class Constants:
    W: Multivector
    pseudoscalar: Multivector
    W_inv: Multivector
    I_plus: Multivector
    I_minus: Multivector


# The trivector realizing the octonion cross product, as written index triples.
W_TRIPLES = ("123", "145", "176", "246", "257", "347", "365")


@lru_cache(maxsize=1)
def constants() -> Constants:
    W = Multivector.scalar(0)
    for t in W_TRIPLES:
        W = W + Multivector.e(*(int(ch) for ch in t))
    e127 = Multivector.e(*range(1, 8))
    W_inv = (W - e127 * 6) * Fraction(1, 7)
    one = Multivector.scalar(1)
    base = one + W * e127
    I_plus = base * (one + e127) * Fraction(1, 16)
    I_minus = base * (one - e127) * Fraction(1, 16)
    return Constants(W, e127, W_inv, I_plus, I_minus)
