"""Polynomial maps from R^8 into R, H, O or Cl(0,7) with rational coefficients.

A :class:`Poly` is a sparse map from exponent tuples ``(a0, ..., a7)`` to
nonzero :class:`~fractions.Fraction` coefficients.  A :class:`PolyMap` holds
one :class:`Poly` per basis element of its target algebra.

Expressions use a small grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := rational | variable | basis | variable '^' integer
    rational := integer ('/' positive-integer)?
    variable := 'x' digit ;  basis := 'e' digit

An optional sign may precede the first term.  Clifford-valued input accepts
multi-index blades such as ``e123`` with strictly increasing digits.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import algebra
from .algebra import Octonion, Quaternion, format_scalar
from .clifford import DIM as CL_DIM
from .clifford import Multivector, blade_indices, blade_mask, blade_mul
from .clifford import grade as blade_grade

N_VARS = 8
MAX_DEGREE = 64

Exponent = tuple[int, ...]

ALGEBRAS = ("R", "H", "O", "Cl")
ALGEBRA_DIM = {"R": 1, "H": 4, "O": 8, "Cl": CL_DIM}
ALIASES = {
    "r": "R", "real": "R",
    "h": "H", "quat": "H", "quaternion": "H",
    "o": "O", "oct": "O", "octonion": "O",
    "cl": "Cl", "clifford": "Cl",
}


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownSymbolError(ParseError):
    pass


class DegreeOverflowError(ValueError):
    pass


class AlgebraMismatchError(ValueError):
    pass


def normalize_algebra(name: str) -> str:
    if name in ALGEBRAS:
        return name
    try:
        return ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}") from None


def _grlex_key(e: Exponent):
    return (sum(e), e)


class Poly:
    """Sparse multivariate polynomial in x0..x7 over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    if len(e) != N_VARS:
                        e = tuple(e) + (0,) * (N_VARS - len(e))
                    clean[e] = clean.get(e, Fraction(0)) + c
                    if not clean[e]:
                        del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[Exponent, Fraction]) -> Poly:
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> Poly:
        return cls({(0,) * N_VARS: c})

    @classmethod
    def var(cls, i: int) -> Poly:
        e = [0] * N_VARS
        e[i] = 1
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> Poly:
        return cls({tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> float:
        """Total degree; ``-inf`` for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def depends_on(self, i: int) -> bool:
        return any(e[i] for e in self.terms)

    def is_homogeneous(self, k: int) -> bool:
        return all(sum(e) == k for e in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(out)

    def __neg__(self) -> Poly:
        return Poly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, s) -> Poly:
        s = Fraction(s)
        if not s:
            return Poly()
        return Poly._raw({e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        out = {e: c for e, c in out.items() if c}
        if out and max(sum(e) for e in out) > MAX_DEGREE:
            raise DegreeOverflowError(f"total degree exceeds {MAX_DEGREE}")
        return Poly._raw(out)

    __rmul__ = scale

    def partial(self, i: int) -> Poly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return Poly._raw(out)

    def eval(self, x: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for xi, k in zip(x, e):
                if k:
                    term *= Fraction(xi) ** k
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __repr__(self) -> str:
        return f"Poly({render_poly(self)})"


def _monomial_str(e: Exponent) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"x{i}")
        elif k > 1:
            parts.append(f"x{i}^{k}")
    return "*".join(parts)


def _term_body(coeff: Fraction, e: Exponent, basis: str) -> str:
    factors = [f for f in (_monomial_str(e), basis) if f]
    mag = abs(coeff)
    if not factors:
        return format_scalar(mag)
    if mag == 1:
        return "*".join(factors)
    return "*".join([format_scalar(mag)] + factors)


def _join_signed(parts: list[tuple[Fraction, str]]) -> str:
    if not parts:
        return "0"
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for c, body in parts[1:]:
        out += (" - " if c < 0 else " + ") + body
    return out


def render_poly(p: Poly) -> str:
    return _join_signed([(c, _term_body(c, e, "")) for e, c in p.sorted_terms()])


def basis_names(alg: str) -> list[str]:
    if alg == "R":
        return [""]
    if alg == "Cl":
        return ["" if m == 0 else "e" + "".join(map(str, blade_indices(m))) for m in range(CL_DIM)]
    return [""] + [f"e{i}" for i in range(1, ALGEBRA_DIM[alg])]


def component_order(alg: str) -> list[int]:
    if alg == "Cl":
        return sorted(range(CL_DIM), key=lambda m: (blade_grade(m), blade_indices(m)))
    return list(range(ALGEBRA_DIM[alg]))


def _quat_constants():
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            q = algebra.quat_mul(Quaternion.basis(i), Quaternion.basis(j))
            k = next(n for n in range(4) if q.c[n])
            row.append((int(q.c[k]), k))
        out.append(row)
    return out


_QMUL = _quat_constants()


def _structure(alg: str):
    """Structure constants ``table[i][j] = (sign, k)`` for the product."""
    if alg == "O":
        return [[algebra.basis_product(i, j) for j in range(8)] for i in range(8)]
    if alg == "H":
        return _QMUL
    if alg == "R":
        return [[(1, 0)]]
    return None  # Clifford uses blade_mul directly


class PolyMap:
    """A polynomial function ``R^8 -> A`` stored componentwise."""

    __slots__ = ("algebra", "comps")

    def __init__(self, alg: str, comps: Iterable[Poly] | Mapping[int, Poly] | None = None):
        alg = normalize_algebra(alg)
        n = ALGEBRA_DIM[alg]
        if comps is None:
            cs = [Poly() for _ in range(n)]
        elif isinstance(comps, Mapping):
            cs = [Poly() for _ in range(n)]
            for k, p in comps.items():
                cs[k] = cs[k] + p
        else:
            cs = list(comps)
            if len(cs) != n:
                raise ValueError(f"{alg} maps need {n} components, got {len(cs)}")
        self.algebra = alg
        self.comps = tuple(cs)

    @classmethod
    def zero(cls, alg: str) -> PolyMap:
        return cls(alg)

    @classmethod
    def constant(cls, alg: str, coeffs: Sequence) -> PolyMap:
        return cls(alg, [Poly.const(c) for c in coeffs])

    @classmethod
    def from_octonion(cls, x: Octonion) -> PolyMap:
        return cls.constant("O", x.c)

    @classmethod
    def from_multivector(cls, a: Multivector) -> PolyMap:
        return cls.constant("Cl", a.c)

    def __getitem__(self, k: int) -> Poly:
        return self.comps[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyMap):
            return self.algebra == other.algebra and self.comps == other.comps
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.algebra, self.comps))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.comps)

    def degree(self) -> float:
        return max((p.degree() for p in self.comps), default=float("-inf"))

    def depends_on(self, i: int) -> bool:
        return any(p.depends_on(i) for p in self.comps)

    def _check(self, other: PolyMap) -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(f"{self.algebra} vs {other.algebra}")

    def __add__(self, other: PolyMap) -> PolyMap:
        self._check(other)
        return PolyMap(self.algebra, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other: PolyMap) -> PolyMap:
        self._check(other)
        return PolyMap(self.algebra, [a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self) -> PolyMap:
        return PolyMap(self.algebra, [-a for a in self.comps])

    def scale(self, s) -> PolyMap:
        return PolyMap(self.algebra, [a.scale(s) for a in self.comps])

    def mul_poly(self, p: Poly) -> PolyMap:
        """Multiply every component by a scalar-valued polynomial."""
        return PolyMap(self.algebra, [a * p for a in self.comps])

    def __mul__(self, other):
        if isinstance(other, PolyMap):
            return pointwise_mul(self, other)
        if isinstance(other, Poly):
            return self.mul_poly(other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return self.mul_poly(other)
        return self.scale(other)

    def partial(self, i: int) -> PolyMap:
        return PolyMap(self.algebra, [a.partial(i) for a in self.comps])

    def conj(self) -> PolyMap:
        if self.algebra not in ("H", "O"):
            raise AlgebraMismatchError("conjugation is defined for H and O maps")
        return PolyMap(self.algebra, [self.comps[0]] + [-a for a in self.comps[1:]])

    def real_part(self) -> PolyMap:
        return PolyMap(self.algebra, {0: self.comps[0]})

    def vector_part(self) -> PolyMap:
        if self.algebra == "Cl":
            return PolyMap("Cl", {1 << i: self.comps[1 << i] for i in range(7)})
        return PolyMap(self.algebra, {k: self.comps[k] for k in range(1, len(self.comps))})

    def to_octonion_map(self) -> PolyMap:
        """Embed an R or H map into O, or read a paravector Cl map as O."""
        if self.algebra == "O":
            return self
        if self.algebra in ("R", "H"):
            return PolyMap("O", {k: p for k, p in enumerate(self.comps)})
        if not self.is_paravector():
            raise AlgebraMismatchError("only paravector-valued Clifford maps embed into O")
        return PolyMap("O", [self.comps[0]] + [self.comps[1 << i] for i in range(7)])

    def to_clifford(self) -> PolyMap:
        """Paravector Clifford map with the same coordinates."""
        if self.algebra == "Cl":
            return self
        o = self.to_octonion_map()
        comps = {0: o.comps[0]}
        for i in range(1, 8):
            comps[1 << (i - 1)] = o.comps[i]
        return PolyMap("Cl", comps)

    def is_paravector(self) -> bool:
        if self.algebra != "Cl":
            return True
        return all(p.is_zero() for m, p in enumerate(self.comps) if blade_grade(m) > 1)

    def eval(self, x: Sequence):
        vals = [p.eval(x) for p in self.comps]
        if self.algebra == "R":
            return vals[0]
        if self.algebra == "H":
            return Quaternion(vals)
        if self.algebra == "O":
            return Octonion(vals)
        return Multivector(vals)

    def render(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"PolyMap[{self.algebra}]({render(self)})"


def pointwise_mul(f: PolyMap, g: PolyMap) -> PolyMap:
    """``(f g)(x) = f(x) g(x)`` in the target algebra of the two maps."""
    if f.algebra != g.algebra:
        raise AlgebraMismatchError(f"{f.algebra} vs {g.algebra}")
    alg = f.algebra
    n = ALGEBRA_DIM[alg]
    out = [Poly() for _ in range(n)]
    table = _structure(alg)
    gnz = [(j, q) for j, q in enumerate(g.comps) if not q.is_zero()]
    for i, p in enumerate(f.comps):
        if p.is_zero():
            continue
        for j, q in gnz:
            sign, k = table[i][j] if table is not None else blade_mul(i, j)
            prod = p * q
            out[k] = out[k] + prod if sign > 0 else out[k] - prod
    return PolyMap(alg, out)


def partial(f: PolyMap, i: int) -> PolyMap:
    return f.partial(i)


def evaluate(f: PolyMap, x: Sequence):
    return f.eval(x)


def render(f: PolyMap) -> str:
    names = basis_names(f.algebra)
    parts = []
    for k in component_order(f.algebra):
        for e, c in f.comps[k].sorted_terms():
            parts.append((c, _term_body(c, e, names[k])))
    return _join_signed(parts)


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<var>x\d+)|(?P<basis>e\d+)|(?P<op>[-+*/^])|(?P<bad>.)"
)


def _tokenize(src: str):
    line, line_start = 1, 0
    for m in _TOKEN.finditer(src):
        kind = m.lastgroup
        col = m.start() - line_start + 1
        if kind == "ws":
            text = m.group()
            nl = text.count("\n")
            if nl:
                line += nl
                line_start = m.start() + text.rfind("\n") + 1
            continue
        if kind == "bad":
            ch = m.group()
            if ch.isalpha() or ch == "_":
                raise UnknownSymbolError(f"unknown symbol {ch!r}", line, col)
            raise ParseError(f"unexpected character {ch!r}", line, col)
        yield kind, m.group(), line, col
    yield "end", "", line, len(src) - line_start + 1


class _Parser:
    def __init__(self, src: str, alg: str):
        self.alg = alg
        self.tokens = list(_tokenize(src))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_int(self):
        kind, text, line, col = self.next()
        if kind != "int":
            raise ParseError(f"expected integer, found {text or 'end of input'!r}", line, col)
        return int(text), line, col

    def parse(self) -> PolyMap:
        total = PolyMap(self.alg)
        sign = 1
        kind, text, _, _ = self.peek()
        if kind == "op" and text in "+-":
            self.next()
            sign = -1 if text == "-" else 1
        total = total + self.term().scale(sign)
        while True:
            kind, text, line, col = self.peek()
            if kind == "end":
                return total
            if kind == "op" and text in "+-":
                self.next()
                t = self.term()
                total = total + t if text == "+" else total - t
            else:
                raise ParseError(f"unexpected {text!r}", line, col)

    def term(self) -> PolyMap:
        coeff = Fraction(1)
        exps = [0] * N_VARS
        basis = None
        basis_seen = False
        first_line, first_col = self.peek()[2:]
        while True:
            kind, text, line, col = self.next()
            if kind == "int":
                value = Fraction(int(text))
                k2, t2, _, _ = self.peek()
                if k2 == "op" and t2 == "/":
                    self.next()
                    den, dl, dc = self.expect_int()
                    if den == 0:
                        raise ParseError("zero denominator", dl, dc)
                    value /= den
                coeff *= value
            elif kind == "var":
                idx = int(text[1:])
                if len(text) != 2 or idx >= N_VARS:
                    raise UnknownSymbolError(f"unknown variable {text!r}", line, col)
                power = 1
                k2, t2, _, _ = self.peek()
                if k2 == "op" and t2 == "^":
                    self.next()
                    power, pl, pc = self.expect_int()
                    if power > MAX_DEGREE:
                        raise DegreeOverflowError(
                            f"exponent {power} exceeds {MAX_DEGREE} at line {pl}, column {pc}"
                        )
                exps[idx] += power
            elif kind == "basis":
                if basis_seen:
                    raise ParseError("more than one basis symbol in a term", line, col)
                basis_seen = True
                basis = self.basis_index(text, line, col)
            else:
                raise ParseError(f"expected a factor, found {text or 'end of input'!r}", line, col)
            k2, t2, _, _ = self.peek()
            if k2 == "op" and t2 == "*":
                self.next()
                continue
            break
        if sum(exps) > MAX_DEGREE:
            raise DegreeOverflowError(
                f"term degree {sum(exps)} exceeds {MAX_DEGREE} at line {first_line}, column {first_col}"
            )
        return PolyMap(self.alg, {basis or 0: Poly({tuple(exps): coeff})})

    def basis_index(self, text: str, line: int, col: int) -> int:
        digits = text[1:]
        if digits == "0":
            return 0
        if self.alg == "Cl":
            idx = [int(d) for d in digits]
            if any(not 1 <= d <= 7 for d in idx) or any(a >= b for a, b in zip(idx, idx[1:])):
                raise UnknownSymbolError(f"unknown blade {text!r}", line, col)
            return blade_mask(idx)
        top = ALGEBRA_DIM[self.alg] - 1
        if len(digits) != 1 or not 1 <= int(digits) <= top:
            raise UnknownSymbolError(f"unknown basis symbol {text!r} for {self.alg}", line, col)
        return int(digits)


def parse(src: str, alg: str = "O") -> PolyMap:
    """Parse an expression in the polynomial grammar into a :class:`PolyMap`."""
    return _Parser(src, normalize_algebra(alg)).parse()
