"""Exact octonion and quaternion arithmetic.

Scalars are :class:`fractions.Fraction` throughout, so every identity in this
package is checked by exact equality.  The octonion product is driven by the
canonical multiplication table below (``e_i * e_j`` for the basis
``1, e1, ..., e7``).  The cross product is computed from the seven oriented
Fano triples instead, and the quaternion-form product from 3-dimensional dot
and cross products only, so the three routes can be tested against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction


class PreconditionError(ValueError):
    """An operation was called with arguments outside its domain."""


# Row i, column j holds e_i * e_j for the basis 1, e1, ..., e7.
OCTONION_TABLE: tuple[str, ...] = (
    "1   e1  e2  e3  e4  e5  e6  e7",
    "e1  -1  e3  -e2 e5  -e4 -e7 e6",
    "e2  -e3 -1  e1  e6  e7  -e4 -e5",
    "e3  e2  -e1 -1  e7  -e6 e5  -e4",
    "e4  -e5 -e6 -e7 -1  e1  e2  e3",
    "e5  e4  -e7 e6  -e1 -1  -e3 e2",
    "e6  e7  e4  -e5 -e2 e3  -1  -e1",
    "e7  -e6 e5  e4  -e3 -e2 e1  -1",
)


def _parse_entry(entry: str) -> tuple[int, int]:
    sign = -1 if entry.startswith("-") else 1
    name = entry.lstrip("-")
    return sign, 0 if name == "1" else int(name[1:])


def _structure_constants(table) -> list[list[tuple[int, int]]]:
    return [[_parse_entry(e) for e in row.split()] for row in table]


# _MUL[i][j] = (sign, k) with e_i * e_j = sign * e_k.
_MUL = _structure_constants(OCTONION_TABLE)

# Oriented triples (i, j, k) with e_i x e_j = e_k; cyclic shifts also hold.
FANO_TRIPLES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5),
)


def _cross_constants() -> dict[tuple[int, int], tuple[int, int]]:
    out = {}
    for i, j, k in FANO_TRIPLES:
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            out[(a, b)] = (1, c)
            out[(b, a)] = (-1, c)
    return out


_CROSS = _cross_constants()


def basis_product(i: int, j: int) -> tuple[int, int]:
    """Return ``(sign, k)`` such that ``e_i * e_j = sign * e_k``."""
    return _MUL[i][j]


def _frac_tuple(values: Iterable, n: int) -> tuple[Fraction, ...]:
    out = tuple(Fraction(v) for v in values)
    if len(out) != n:
        raise ValueError(f"expected {n} components, got {len(out)}")
    return out


@dataclass(frozen=True)
class Octonion:
    c: tuple[Fraction, ...]

    def __init__(self, c: Iterable = (0,) * 8):
        object.__setattr__(self, "c", _frac_tuple(c, 8))

    @classmethod
    def basis(cls, i: int, coeff=1) -> Octonion:
        c = [0] * 8
        c[i] = coeff
        return cls(c)

    @classmethod
    def scalar(cls, value) -> Octonion:
        return cls.basis(0, value)

    @property
    def real(self) -> Fraction:
        return self.c[0]

    @property
    def vector(self) -> Octonion:
        return Octonion((0,) + self.c[1:])

    def is_vector(self) -> bool:
        return self.c[0] == 0

    def is_zero(self) -> bool:
        return not any(self.c)

    def conj(self) -> Octonion:
        return oct_conj(self)

    def norm2(self) -> Fraction:
        return sum((x * x for x in self.c), Fraction(0))

    def __add__(self, other: Octonion) -> Octonion:
        return Octonion(a + b for a, b in zip(self.c, other.c))

    def __sub__(self, other: Octonion) -> Octonion:
        return Octonion(a - b for a, b in zip(self.c, other.c))

    def __neg__(self) -> Octonion:
        return Octonion(-a for a in self.c)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion(a * other for a in self.c)

    def __rmul__(self, other):
        return Octonion(other * a for a in self.c)

    def __repr__(self) -> str:
        return f"Octonion({format_element(self.c)})"


@dataclass(frozen=True)
class Quaternion:
    c: tuple[Fraction, ...]

    def __init__(self, c: Iterable = (0,) * 4):
        object.__setattr__(self, "c", _frac_tuple(c, 4))

    @classmethod
    def basis(cls, i: int, coeff=1) -> Quaternion:
        c = [0] * 4
        c[i] = coeff
        return cls(c)

    @property
    def real(self) -> Fraction:
        return self.c[0]

    @property
    def vec3(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.c[1:]  # type: ignore[return-value]

    def conj(self) -> Quaternion:
        return Quaternion((self.c[0],) + tuple(-x for x in self.c[1:]))

    def embed(self) -> Octonion:
        return Octonion(self.c + (0, 0, 0, 0))

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(a + b for a, b in zip(self.c, other.c))

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(a - b for a, b in zip(self.c, other.c))

    def __neg__(self) -> Quaternion:
        return Quaternion(-a for a in self.c)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return Quaternion(a * other for a in self.c)

    def __rmul__(self, other):
        return Quaternion(other * a for a in self.c)

    def __repr__(self) -> str:
        return f"Quaternion({format_element(self.c)})"


@dataclass(frozen=True)
class QuatForm:
    """An octonion written as ``u + v * e4`` with quaternions ``u`` and ``v``."""

    u: Quaternion
    v: Quaternion


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_element(c: Sequence[Fraction], names: Sequence[str] | None = None) -> str:
    """Render coefficients over a basis as ``3 - e1 + 1/2*e4``."""
    if names is None:
        names = ["1"] + [f"e{i}" for i in range(1, len(c))]
    parts = []
    for coeff, name in zip(c, names):
        if coeff == 0:
            continue
        mag = abs(coeff)
        if name == "1":
            body = format_scalar(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{format_scalar(mag)}*{name}"
        parts.append(("-" if coeff < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    """Octonion product from the multiplication table."""
    out = [Fraction(0)] * 8
    for i, xi in enumerate(x.c):
        if not xi:
            continue
        row = _MUL[i]
        for j, yj in enumerate(y.c):
            if not yj:
                continue
            sign, k = row[j]
            if sign > 0:
                out[k] += xi * yj
            else:
                out[k] -= xi * yj
    return Octonion(out)


def oct_conj(x: Octonion) -> Octonion:
    return Octonion((x.c[0],) + tuple(-a for a in x.c[1:]))


def _require_vector(*xs: Octonion) -> None:
    for x in xs:
        if x.c[0] != 0:
            raise PreconditionError(f"expected a pure vector, got real part {x.c[0]}")


def oct_dot(x: Octonion, y: Octonion) -> Fraction:
    """Euclidean dot product of two pure-vector octonions."""
    _require_vector(x, y)
    return sum((a * b for a, b in zip(x.c[1:], y.c[1:])), Fraction(0))


def oct_cross(x: Octonion, y: Octonion) -> Octonion:
    """Seven-dimensional cross product built from the Fano triples."""
    _require_vector(x, y)
    out = [Fraction(0)] * 8
    for i in range(1, 8):
        if not x.c[i]:
            continue
        for j in range(1, 8):
            if i == j or not y.c[j]:
                continue
            sign, k = _CROSS[(i, j)]
            out[k] += sign * x.c[i] * y.c[j]
    return Octonion(out)


def oct_mul_decomposed(x: Octonion, y: Octonion) -> Octonion:
    """``x0*y0 - xv.yv + x0*yv + y0*xv + xv x yv``."""
    xv, yv = x.vector, y.vector
    return (
        Octonion.scalar(x.real * y.real - oct_dot(xv, yv))
        + yv * x.real
        + xv * y.real
        + oct_cross(xv, yv)
    )


E4 = Octonion.basis(4)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product."""
    a0, a1, a2, a3 = p.c
    b0, b1, b2, b3 = q.c
    return Quaternion((
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ))


def to_quat_form(x: Octonion) -> QuatForm:
    c = x.c
    return QuatForm(Quaternion(c[0:4]), Quaternion(c[4:8]))


def from_quat_form(q: QuatForm) -> Octonion:
    return q.u.embed() + oct_mul(q.v.embed(), E4)


# 3-dimensional helpers on plain triples.

def dot3(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross3(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _add3(*vs):
    return tuple(sum(v[i] for v in vs) for i in range(3))


def _scale3(s, v):
    return tuple(s * x for x in v)


def _neg3(v):
    return tuple(-x for x in v)


def _assemble(real, v123, e4coef, v567) -> Octonion:
    return Octonion((real, *v123, e4coef, *v567))


def cross_quat_form(x: Octonion, y: Octonion) -> Octonion:
    """Octonion cross product via 3-dimensional dot and cross products only."""
    _require_vector(x, y)
    qx, qy = to_quat_form(x), to_quat_form(y)
    u, v0, v = qx.u.vec3, qx.v.real, qx.v.vec3
    a, b0, b = qy.u.vec3, qy.v.real, qy.v.vec3
    low = _add3(_scale3(v0, b), _neg3(_scale3(b0, v)), cross3(u, a), _neg3(cross3(v, b)))
    mid = dot3(v, a) - dot3(u, b)
    high = _add3(_scale3(b0, u), _neg3(_scale3(v0, a)), _neg3(cross3(u, b)), _neg3(cross3(v, a)))
    return _assemble(0, low, mid, high)


def oct_mul_quat_form(x: QuatForm, y: QuatForm) -> Octonion:
    """Octonion product of two quaternion forms, block by block."""
    u0, u, v0, v = x.u.real, x.u.vec3, x.v.real, x.v.vec3
    a0, a, b0, b = y.u.real, y.u.vec3, y.v.real, y.v.vec3
    real = u0 * a0 - v0 * b0 - dot3(u, a) - dot3(v, b)
    low = _add3(
        _scale3(u0, a), _scale3(a0, u), _scale3(v0, b), _neg3(_scale3(b0, v)),
        cross3(u, a), _neg3(cross3(v, b)),
    )
    mid = u0 * b0 + a0 * v0 + dot3(v, a) - dot3(u, b)
    high = _add3(
        _scale3(u0, b), _scale3(a0, v), _scale3(b0, u), _neg3(_scale3(v0, a)),
        _neg3(cross3(u, b)), _neg3(cross3(v, a)),
    )
    return _assemble(real, low, mid, high)


def e4_identities(u: Quaternion, v: Quaternion) -> list[tuple[str, Octonion, Octonion]]:
    """Both sides of the six ``e4`` product identities for quaternions u, v."""
    U, V = u.embed(), v.embed()
    Ub, Vb = u.conj().embed(), v.conj().embed()
    m = oct_mul
    return [
        ("e4*u = conj(u)*e4", m(E4, U), m(Ub, E4)),
        ("e4*(u*e4) = -conj(u)", m(E4, m(U, E4)), -Ub),
        ("(u*e4)*e4 = -u", m(m(U, E4), E4), -U),
        ("u*(v*e4) = (v*u)*e4", m(U, m(V, E4)), m(m(V, U), E4)),
        ("(u*e4)*v = (u*conj(v))*e4", m(m(U, E4), V), m(m(U, Vb), E4)),
        ("(u*e4)*(v*e4) = -conj(v)*u", m(m(U, E4), m(V, E4)), -m(Vb, U)),
    ]


def e4_cross_identities(x: QuatForm, y: QuatForm) -> list[tuple[str, Octonion, Octonion]]:
    """Both sides of the seven cross-product identities involving ``e4``.

    ``x = u + v*e4`` and ``y = a + b*e4``; only the vector parts of u, v, a, b
    enter.
    """
    def vec(q: Quaternion) -> Octonion:
        return Octonion((0, *q.vec3, 0, 0, 0, 0))

    u, v, a, b = vec(x.u), vec(x.v), vec(y.u), vec(y.v)
    m, cr = oct_mul, oct_cross
    be4, ve4 = m(b, E4), m(v, E4)
    return [
        ("u x e4 = u*e4", cr(u, E4), m(u, E4)),
        ("e4 x a = -a*e4", cr(E4, a), -m(a, E4)),
        ("u x (b*e4) = -(u x b)*e4 - (u.b)e4",
         cr(u, be4), -m(cr(u, b), E4) - E4 * oct_dot(u, b)),
        ("e4 x (b*e4) = b", cr(E4, be4), b),
        ("(v*e4) x a = -(v x a)*e4 + (a.v)e4",
         cr(ve4, a), -m(cr(v, a), E4) + E4 * oct_dot(a, v)),
        ("(v*e4) x e4 = -v", cr(ve4, E4), -v),
        ("(v*e4) x (b*e4) = -v x b", cr(ve4, be4), -cr(v, b)),
    ]
