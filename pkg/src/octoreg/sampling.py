"""Seeded random rationals, algebra elements and polynomial maps.

Everything takes an explicit :class:`random.Random` (Mersenne Twister), so a
seed reproduces a run exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import Octonion, Quaternion
from .polyfun import Poly, PolyMap


def rational(rng: random.Random, num: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def octonion(rng: random.Random) -> Octonion:
    return Octonion(rational(rng) for _ in range(8))


def vector_octonion(rng: random.Random) -> Octonion:
    return Octonion([0] + [rational(rng) for _ in range(7)])


def quaternion(rng: random.Random) -> Quaternion:
    return Quaternion(rational(rng) for _ in range(4))


def poly(rng: random.Random, variables: Sequence[int] = range(8), max_degree: int = 2,
         max_terms: int = 3) -> Poly:
    variables = list(variables)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = [0] * 8
        for _ in range(rng.randint(0, max_degree)):
            e[rng.choice(variables)] += 1
        terms[tuple(e)] = rational(rng, 5, 3)
    return Poly(terms)


def polymap(rng: random.Random, alg: str = "O", variables: Sequence[int] = range(8),
            max_degree: int = 2, max_terms: int = 3) -> PolyMap:
    n = {"R": 1, "H": 4, "O": 8}[alg]
    return PolyMap(alg, [poly(rng, variables, max_degree, max_terms) for _ in range(n)])


@lru_cache(maxsize=None)
def _basis(system: str, k: int) -> tuple[PolyMap, ...]:
    from .regspace import solution_basis

    return tuple(solution_basis(system, k))


def from_space(rng: random.Random, system: str, k: int, n_terms: int = 3) -> PolyMap:
    """A random combination of solution-space basis elements."""
    basis = _basis(system, k)
    out = basis[0].scale(0)
    for f in rng.sample(basis, min(n_terms, len(basis))):
        out = out + f.scale(rational(rng, 4, 2))
    return out


def mixed_octonion_map(rng: random.Random, max_degree: int = 2) -> PolyMap:
    """Random map that lands in each function class with reasonable frequency."""
    kind = rng.randrange(5)
    if kind == 0:
        return polymap(rng, "O", max_degree=max_degree)
    k = rng.randint(1, max_degree)
    system = ("LEFT", "RIGHT", "B", "R")[kind - 1]
    f = from_space(rng, system, k)
    if rng.random() < 0.3:
        f = f + PolyMap.from_octonion(octonion(rng))
    return f
