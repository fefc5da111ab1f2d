"""Cauchy-Riemann and Dirac operators on polynomial maps.

The octonionic operators are applied term by term as
``D f = sum_{i,j} (e_i o e_j) d_i f_j`` and ``f D = sum_{i,j} (e_j o e_i) d_i f_j``;
with a non-associative product this grouping matters, so the operator never
multiplies ``e_i`` into an already formed product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import algebra, systems
from .algebra import PreconditionError
from .clifford import Multivector, constants
from .clifford import grade as blade_grade
from .polyfun import AlgebraMismatchError, Poly, PolyMap, pointwise_mul


class ConsistencyError(RuntimeError):
    """Two independent routes to the same classification disagreed."""


def _require(f: PolyMap, *algs: str) -> None:
    if f.algebra not in algs:
        raise AlgebraMismatchError(f"expected a map into {'/'.join(algs)}, got {f.algebra}")


def _basis_action(f: PolyMap, pairs: Sequence[int], *, left: bool) -> PolyMap:
    """``sum_i e_i d_i f`` (left) or ``sum_i d_i f e_i`` (right) over variables ``pairs``.

    ``pairs[n]`` is the variable differentiated alongside ``e_n``; entries
    that are None are skipped.
    """
    out = [Poly() for _ in f.comps]
    for n, var in enumerate(pairs):
        if var is None:
            continue
        for j, p in enumerate(f.comps):
            d = p.partial(var)
            if d.is_zero():
                continue
            sign, k = algebra.basis_product(n, j) if left else algebra.basis_product(j, n)
            out[k] = out[k] + d if sign > 0 else out[k] - d
    return PolyMap("O", out)


def D_left(f: PolyMap) -> PolyMap:
    """``D_x f``, the octonionic Cauchy-Riemann operator acting from the left."""
    _require(f, "O")
    return _basis_action(f, range(8), left=True)


def D_right(f: PolyMap) -> PolyMap:
    """``f D_x``."""
    _require(f, "O")
    return _basis_action(f, range(8), left=False)


def dirac_vector(f: PolyMap) -> PolyMap:
    """The Dirac operator ``D_xv = sum_{i>=1} e_i o d_i`` applied from the left."""
    f = f.to_octonion_map()
    return _basis_action(f, [None, 1, 2, 3, 4, 5, 6, 7], left=True)


def divergence(f: PolyMap) -> PolyMap:
    """``d_0 f_0 - D_xv . f_v`` as a real-valued octonion map."""
    _require(f, "O")
    total = f.comps[0].partial(0)
    for i in range(1, 8):
        total = total - f.comps[i].partial(i)
    return PolyMap("O", {0: total})


def rotor(f: PolyMap) -> PolyMap:
    """``D_xv x f_v`` using the seven-dimensional cross product."""
    _require(f, "O")
    out = [Poly() for _ in range(8)]
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            d = f.comps[j].partial(i)
            if d.is_zero():
                continue
            sign, k = algebra._CROSS[(i, j)]
            out[k] = out[k] + d if sign > 0 else out[k] - d
    return PolyMap("O", out)


def left_decomposition(f: PolyMap) -> dict[str, PolyMap]:
    """The four pieces summing to ``D_x f``."""
    _require(f, "O")
    vec = f.vector_part()
    return {
        "divergence": divergence(f),
        "d0_vector": vec.partial(0),
        "dirac_real": dirac_vector(f.real_part()),
        "rotor": rotor(f),
    }


def curl_defects(f: PolyMap) -> dict[tuple[int, int], Poly]:
    """Nonzero ``d_i f_j - d_j f_i`` for 1 <= i < j <= 7."""
    _require(f, "O")
    out = {}
    for i, j in systems.CURL_PAIRS:
        d = f.comps[j].partial(i) - f.comps[i].partial(j)
        if not d.is_zero():
            out[(i, j)] = d
    return out


# Clifford-valued derivatives.

def _clifford_action(F: PolyMap, *, left: bool) -> PolyMap:
    out = [Poly() for _ in range(128)]
    for n in range(8):
        gen = 0 if n == 0 else 1 << (n - 1)
        from .clifford import blade_mul
        for m, p in enumerate(F.comps):
            if p.is_zero():
                continue
            d = p.partial(n)
            if d.is_zero():
                continue
            sign, k = blade_mul(gen, m) if left else blade_mul(m, gen)
            out[k] = out[k] + d if sign > 0 else out[k] - d
    return PolyMap("Cl", out)


def _as_paravector_map(f: PolyMap) -> PolyMap:
    if f.algebra == "Cl":
        if not f.is_paravector():
            raise PreconditionError("expected a paravector-valued map")
        return f
    return f.to_clifford()


def clifford_D(f: PolyMap) -> PolyMap:
    """``d_x f = (d_0 + e_1 d_1 + ... + e_7 d_7) f`` in Cl(0,7)."""
    return _clifford_action(_as_paravector_map(f), left=True)


def clifford_D_right(f: PolyMap) -> PolyMap:
    """``f d_x``."""
    return _clifford_action(_as_paravector_map(f), left=False)


def cl_grade(F: PolyMap, ks) -> PolyMap:
    keep = {ks} if isinstance(ks, int) else set(ks)
    return PolyMap("Cl", [p if blade_grade(m) in keep else Poly() for m, p in enumerate(F.comps)])


def times_constant(F: PolyMap, a: Multivector) -> PolyMap:
    return pointwise_mul(F, PolyMap.from_multivector(a))


def spinor_image(f: PolyMap) -> PolyMap:
    """``d_x f I-``."""
    return times_constant(clifford_D(f), constants().I_minus)


@dataclass(frozen=True)
class SpinorTests:
    grade0: PolyMap
    grade1: PolyMap
    w_grade1: PolyMap

    @property
    def left_regular(self) -> bool:
        return self.grade0.is_zero() and self.grade1.is_zero()

    @property
    def b_regular(self) -> bool:
        return self.left_regular and self.w_grade1.is_zero()


def spinor_tests(f: PolyMap) -> SpinorTests:
    """Grades 0 and 1 of ``d_x f I-`` and grade 1 of ``d_x f W``."""
    df = clifford_D(f)
    dfi = times_constant(df, constants().I_minus)
    dfw = times_constant(df, constants().W)
    return SpinorTests(cl_grade(dfi, 0), cl_grade(dfi, 1), cl_grade(dfw, 1))


@dataclass(frozen=True)
class ClassReport:
    left_regular: bool
    right_regular: bool
    b_regular: bool
    r_regular: bool
    spinor_kernel: bool | None
    d_left: PolyMap
    d_right: PolyMap
    rotor: PolyMap | None = None
    curl_defects: dict = field(default_factory=dict)
    spinor: PolyMap | None = None
    algebra: str = "O"

    def flags(self) -> dict[str, bool | None]:
        return {
            "left_regular": self.left_regular,
            "right_regular": self.right_regular,
            "b_regular": self.b_regular,
            "r_regular": self.r_regular,
            "spinor_kernel": self.spinor_kernel,
        }


def classify(f: PolyMap) -> ClassReport:
    """Membership of an octonion-valued map in each function class.

    Left, right and B-regularity are decided twice: from the operators and
    from the componentwise systems.  A disagreement raises
    :class:`ConsistencyError`.
    """
    _require(f, "O")
    dl, dr = D_left(f), D_right(f)
    left, right = dl.is_zero(), dr.is_zero()
    b = left and right
    defects = curl_defects(f)
    r = b and not defects

    checks = {
        "left": (left, systems.satisfies(systems.OCT_LEFT, f)),
        "right": (right, systems.satisfies(systems.OCT_RIGHT, f)),
        "B": (b, systems.satisfies(systems.OCT_B, f)),
        "R": (r, systems.satisfies(systems.OCT_R, f)),
    }
    for name, (via_op, via_sys) in checks.items():
        if via_op != via_sys:
            raise ConsistencyError(f"{name}-regularity: operator says {via_op}, system says {via_sys}")

    spin = spinor_image(f)
    return ClassReport(
        left_regular=left,
        right_regular=right,
        b_regular=b,
        r_regular=r,
        spinor_kernel=spin.is_zero(),
        d_left=dl,
        d_right=dr,
        rotor=rotor(f),
        curl_defects=defects,
        spinor=spin,
    )


# Quaternion and Clifford settings.

def quat_D_left(f: PolyMap) -> PolyMap:
    _require(f, "H")
    return _quat_action(f, left=True)


def quat_D_right(f: PolyMap) -> PolyMap:
    _require(f, "H")
    return _quat_action(f, left=False)


def _quat_action(f: PolyMap, *, left: bool) -> PolyMap:
    out = PolyMap("H")
    for n in range(4):
        unit = PolyMap("H", {n: Poly.const(1)})
        d = f.partial(n)
        out = out + (pointwise_mul(unit, d) if left else pointwise_mul(d, unit))
    return out


def classify_quat(f: PolyMap) -> ClassReport:
    _require(f, "H")
    dl, dr = quat_D_left(f), quat_D_right(f)
    left, right = dl.is_zero(), dr.is_zero()
    b = left and right
    if b != systems.satisfies(systems.QUAT_B, f):
        raise ConsistencyError("quaternion B-regularity disagrees with its system")
    if left != systems.satisfies(systems.QUAT_LEFT, f):
        raise ConsistencyError("quaternion left regularity disagrees with its system")
    r = systems.satisfies(systems.QUAT_R, f)
    defects = {}
    for i in range(1, 4):
        for j in range(i + 1, 4):
            d = f.comps[j].partial(i) - f.comps[i].partial(j)
            if not d.is_zero():
                defects[(i, j)] = d
    return ClassReport(left, right, b, r, None, dl, dr, curl_defects=defects, algebra="H")


def classify_clifford(f: PolyMap) -> ClassReport:
    """Left/right monogenic and Riesz flags for a paravector-valued map."""
    f = _as_paravector_map(f)
    dl, dr = clifford_D(f), clifford_D_right(f)
    o = f.to_octonion_map()
    left, right = dl.is_zero(), dr.is_zero()
    r = systems.satisfies(systems.OCT_R, o)
    spin = times_constant(dl, constants().I_minus)
    return ClassReport(
        left, right, left and right, r, spin.is_zero(), dl, dr,
        curl_defects=curl_defects(o), spinor=spin, algebra="Cl",
    )


def kerdcl_agreement(f: PolyMap) -> tuple[bool, bool, bool]:
    """``(d_x f = 0, f d_x = 0, Riesz system holds)`` for a paravector map."""
    f = _as_paravector_map(f)
    return (
        clifford_D(f).is_zero(),
        clifford_D_right(f).is_zero(),
        systems.satisfies(systems.OCT_R, f.to_octonion_map()),
    )


def ck_extension(f: PolyMap) -> PolyMap:
    """``exp(-x0 D_xv) f`` for polynomial data independent of x0."""
    f = f.to_octonion_map()
    if f.depends_on(0):
        raise PreconditionError("CK extension needs data independent of x0")
    if f.is_zero():
        return f
    x0 = Poly.var(0)
    term, total = f, f
    for k in range(1, int(f.degree()) + 1):
        term = dirac_vector(term).mul_poly(x0.scale(Fraction(-1, k)))
        total = total + term
    return total


# Biaxial quaternion form: u0 = x0, u = (x1, x2, x3), v0 = x4, v = (x5, x6, x7),
# and f = g0 + g + (h0 + h) o e4 with g0 = f0, g = f1..f3, h0 = f4, h = f5..f7.

U_VARS = (1, 2, 3)
V_VARS = (5, 6, 7)


def _grad3(p: Poly, vs) -> tuple[Poly, ...]:
    return tuple(p.partial(v) for v in vs)


def _div3(vs, F) -> Poly:
    return F[0].partial(vs[0]) + F[1].partial(vs[1]) + F[2].partial(vs[2])


def _curl3(vs, F) -> tuple[Poly, ...]:
    d = lambda a, b: F[b].partial(vs[a])  # noqa: E731
    return (d(1, 2) - d(2, 1), d(2, 0) - d(0, 2), d(0, 1) - d(1, 0))


def _v3(*terms):
    return tuple(sum((t[i] for t in terms[1:]), terms[0][i]) for i in range(3))


def _neg(F):
    return tuple(-p for p in F)


@dataclass(frozen=True)
class BiaxialBlocks:
    real: Poly
    low: tuple[Poly, Poly, Poly]   # span{e1, e2, e3}
    e4: Poly
    high: tuple[Poly, Poly, Poly]  # span{e5, e6, e7}, i.e. (...) o e4
    low_rotor: tuple[Poly, Poly, Poly]   # curl terms only
    high_rotor: tuple[Poly, Poly, Poly]
    low_sym: tuple[Poly, Poly, Poly]     # d_{u0} g + d_u g0
    e4_sym: Poly                         # d_{u0} h0 + d_{v0} g0
    high_sym: tuple[Poly, Poly, Poly]    # d_{u0} h + d_v g0

    def reassemble(self) -> PolyMap:
        return PolyMap("O", [self.real, *self.low, self.e4, *self.high])


def biaxial_D_left(f: PolyMap) -> BiaxialBlocks:
    """``D_x f`` computed blockwise from 3-dimensional vector calculus."""
    _require(f, "O")
    c = f.comps
    g0, g, h0, h = c[0], c[1:4], c[4], c[5:8]
    u, v = U_VARS, V_VARS
    du0 = lambda p: p.partial(0)  # noqa: E731
    dv0 = lambda p: p.partial(4)  # noqa: E731
    low_rotor = _v3(_curl3(u, g), _neg(_curl3(v, h)))
    high_rotor = _v3(_neg(_curl3(u, h)), _neg(_curl3(v, g)))
    real = du0(g0) - dv0(h0) - _div3(u, g) - _div3(v, h)
    low = _v3(
        tuple(map(du0, g)), _grad3(g0, u), tuple(map(dv0, h)), _neg(_grad3(h0, v)), low_rotor,
    )
    e4 = du0(h0) + dv0(g0) + _div3(v, g) - _div3(u, h)
    high = _v3(
        tuple(map(du0, h)), _grad3(g0, v), _grad3(h0, u), _neg(tuple(map(dv0, g))), high_rotor,
    )
    low_sym = _v3(tuple(map(du0, g)), _grad3(g0, u))
    e4_sym = du0(h0) + dv0(g0)
    high_sym = _v3(tuple(map(du0, h)), _grad3(g0, v))
    return BiaxialBlocks(real, low, e4, high, low_rotor, high_rotor, low_sym, e4_sym, high_sym)


def _all_zero(*blocks) -> bool:
    for b in blocks:
        polys = b if isinstance(b, tuple) else (b,)
        if any(not p.is_zero() for p in polys):
            return False
    return True


def biaxial_left_system(f: PolyMap) -> bool:
    """The four quaternion-form equations characterizing left regularity."""
    bl = biaxial_D_left(f)
    return _all_zero(bl.e4, bl.real, bl.low, bl.high)


def biaxial_b_system(f: PolyMap) -> bool:
    """Quaternion-form equations characterizing B-regularity.

    ``D_x f`` and ``f D_x`` share their symmetric part and differ by the sign
    of the rotor, so f is B-regular iff the real block vanishes and every
    other block vanishes in its symmetric and rotor halves separately.  The
    rotor halves carry the ``d_{v0} h - d_v h0`` and ``d_v.g - d_u.h`` cross
    terms besides the curls.
    """
    bl = biaxial_D_left(f)
    low_rot = tuple(a - b for a, b in zip(bl.low, bl.low_sym))
    high_rot = tuple(a - b for a, b in zip(bl.high, bl.high_sym))
    return _all_zero(bl.real, bl.e4_sym, bl.e4 - bl.e4_sym, bl.low_sym, low_rot,
                     bl.high_sym, high_rot)


def biaxial_b_system_curl_split(f: PolyMap) -> bool:
    """The six-equation variant that isolates only the curl terms.

    Kept for comparison: it rejects ``x2*e1 - x7*e4``, which is B-regular.
    """
    bl = biaxial_D_left(f)
    low_rest = tuple(a - b for a, b in zip(bl.low, bl.low_rotor))
    high_rest = tuple(a - b for a, b in zip(bl.high, bl.high_rotor))
    return _all_zero(bl.e4, bl.real, low_rest, high_rest, bl.low_rotor, bl.high_rotor)


# Product rules for quaternion-valued maps, evaluated inside O.

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: PolyMap
    rhs: PolyMap

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _emb(f: PolyMap) -> PolyMap:
    return f.to_octonion_map()


def _left_dirac(F: PolyMap, vars3, units=(1, 2, 3)) -> PolyMap:
    pairs = [None] * 8
    for unit, var in zip(units, vars3):
        pairs[unit] = var
    return _basis_action(F, pairs, left=True)


def _right_dirac(F: PolyMap, vars3) -> PolyMap:
    pairs = [None] * 8
    for unit, var in zip((1, 2, 3), vars3):
        pairs[unit] = var
    return _basis_action(F, pairs, left=False)


def _directional(a: PolyMap, F: PolyMap, vars3) -> PolyMap:
    """``(a_v . d) F = sum_i a_i d_{vars3[i]} F`` with ``a_v`` the e1..e3 part of a."""
    out = PolyMap("O")
    for i, var in zip((1, 2, 3), vars3):
        out = out + F.partial(var).mul_poly(a.comps[i])
    return out


def product_rules(f: PolyMap, g: PolyMap) -> list[IdentityCheck]:
    """Both sides of the product rules for quaternion maps f and g.

    ``d_u`` differentiates in (x1, x2, x3) and ``d_v`` in (x5, x6, x7); the
    operator written ``d_v o e4`` pairs ``x_{4+i}`` with ``e_i o e4 = e_{4+i}``.
    """
    _require(f, "H")
    _require(g, "H")
    F, G = _emb(f), _emb(g)
    Fb, Gb = F.conj(), G.conj()
    e4 = PolyMap.from_octonion(algebra.E4)
    m = pointwise_mul
    U, V = U_VARS, V_VARS
    Du = lambda X: _left_dirac(X, U)  # noqa: E731
    uD = lambda X: _right_dirac(X, U)  # noqa: E731
    Dv = lambda X: _left_dirac(X, V)  # noqa: E731
    vD = lambda X: _right_dirac(X, V)  # noqa: E731
    Dve4 = lambda X: _left_dirac(X, V, units=(5, 6, 7))  # noqa: E731
    du = lambda a, X: _directional(a, X, U)  # noqa: E731
    dv = lambda a, X: _directional(a, X, V)  # noqa: E731
    Fe4, Ge4 = m(F, e4), m(G, e4)

    return [
        IdentityCheck(
            "d_u(f g) = (d_u f) g + conj(f)(d_u g) - 2(f.d_u)g",
            Du(m(F, G)), m(Du(F), G) + m(Fb, Du(G)) - du(F, G).scale(2),
        ),
        IdentityCheck(
            "(f g)d_u = (f d_u)conj(g) + f(g d_u) - 2(g.d_u)f",
            uD(m(F, G)), m(uD(F), Gb) + m(F, uD(G)) - du(G, F).scale(2),
        ),
        IdentityCheck(
            "d_u((f e4) g) = [(f d_u)g + f(conj(g) d_u) + 2(g.d_u)f] e4",
            Du(m(Fe4, G)), m(m(uD(F), G) + m(F, uD(Gb)) + du(G, F).scale(2), e4),
        ),
        IdentityCheck(
            "d_u(f (g e4)) = [(g d_u)conj(f) + g(f d_u) - 2(f.d_u)g] e4",
            Du(m(F, Ge4)), m(m(uD(G), Fb) + m(G, uD(F)) - du(F, G).scale(2), e4),
        ),
        IdentityCheck(
            "d_u((f e4)(g e4)) = -(d_u conj(g))f - g(d_u f) - 2(g.d_u)f",
            Du(m(Fe4, Ge4)), -m(Du(Gb), F) - m(G, Du(F)) - du(G, F).scale(2),
        ),
        IdentityCheck(
            "(d_v e4)(f g) = [(d_v conj(g))conj(f) + g(d_v conj(f)) + 2(g.d_v)conj(f)] e4",
            Dve4(m(F, G)), m(m(Dv(Gb), Fb) + m(G, Dv(Fb)) + dv(G, Fb).scale(2), e4),
        ),
        IdentityCheck(
            "(d_v e4)((f e4) g) = -(g d_v)f - g(conj(f) d_v) - 2(f.d_v)g",
            Dve4(m(Fe4, G)), -m(vD(G), F) - m(G, vD(Fb)) - dv(F, G).scale(2),
        ),
        IdentityCheck(
            "(d_v e4)(f (g e4)) = -(conj(f) d_v)g - conj(f)(conj(g) d_v) - 2(g.d_v)conj(f)",
            Dve4(m(F, Ge4)), -m(vD(Fb), G) - m(Fb, vD(Gb)) - dv(G, Fb).scale(2),
        ),
        IdentityCheck(
            "(d_v e4)((f e4)(g e4)) = [-(d_v conj(f))g - f(d_v g) - 2(f.d_v)g] e4",
            Dve4(m(Fe4, Ge4)), m(-m(Dv(Fb), G) - m(F, Dv(G)) - dv(F, G).scale(2), e4),
        ),
    ]


def not_a_module(g: PolyMap, a) -> tuple[PolyMap, PolyMap]:
    """``(D_x g, D_x (g o a))`` for a map g and a constant a."""
    G = g.to_octonion_map()
    A = PolyMap.from_octonion(a)
    return D_left(G), D_left(pointwise_mul(G, A))


def _pointwise_cross(f: PolyMap, g: PolyMap) -> list[Poly]:
    out = [Poly() for _ in range(8)]
    for i in range(1, 8):
        if f.comps[i].is_zero():
            continue
        for j in range(1, 8):
            if i == j or g.comps[j].is_zero():
                continue
            sign, k = algebra._CROSS[(i, j)]
            prod = f.comps[i] * g.comps[j]
            out[k] = out[k] + prod if sign > 0 else out[k] - prod
    return out


def _pointwise_dot(f: PolyMap, g: PolyMap) -> Poly:
    total = Poly()
    for i in range(1, 8):
        total = total + f.comps[i] * g.comps[i]
    return total


def vector_calc_identity(f: PolyMap, g: PolyMap) -> IdentityCheck:
    """``D_xv . (f x g) = (D_xv x f) . g - f . (D_xv x g)`` on vector parts."""
    f, g = f.to_octonion_map().vector_part(), g.to_octonion_map().vector_part()
    cross = _pointwise_cross(f, g)
    lhs = Poly()
    for i in range(1, 8):
        lhs = lhs + cross[i].partial(i)
    rhs = _pointwise_dot(rotor(f), g) - _pointwise_dot(f, rotor(g))
    return IdentityCheck(
        "D.(f x g) = (D x f).g - f.(D x g)", PolyMap("O", {0: lhs}), PolyMap("O", {0: rhs})
    )
