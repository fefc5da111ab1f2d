from fractions import Fraction

import pytest
from hypothesis import given

from octoreg import algebra
from octoreg.algebra import (
    E4,
    FANO_TRIPLES,
    Octonion,
    PreconditionError,
    QuatForm,
    Quaternion,
    basis_product,
    cross_quat_form,
    e4_cross_identities,
    e4_identities,
    format_element,
    format_scalar,
    from_quat_form,
    oct_conj,
    oct_cross,
    oct_dot,
    oct_mul,
    oct_mul_decomposed,
    oct_mul_quat_form,
    quat_mul,
    to_quat_form,
)

from strategies import octonions, quaternions, vector_octonions


# Independent oracle: Cayley-Dickson doubling of a hand-written Hamilton product,
# (a + b e4)(c + d e4) = (ac - conj(d) b) + (d a + b conj(c)) e4.

def _ham(p, q):
    a0, a1, a2, a3 = p
    b0, b1, b2, b3 = q
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _qconj(p):
    return (p[0], -p[1], -p[2], -p[3])


def cayley_dickson(x, y):
    a, b = x[:4], x[4:]
    c, d = y[:4], y[4:]
    left = [s - t for s, t in zip(_ham(a, c), _ham(_qconj(d), b))]
    right = [s + t for s, t in zip(_ham(d, a), _ham(b, _qconj(c)))]
    return tuple(left + right)


def _unit(i):
    return tuple(1 if k == i else 0 for k in range(8))


@pytest.mark.parametrize("i", range(8))
@pytest.mark.parametrize("j", range(8))
def test_table_matches_cayley_dickson(i, j):
    assert oct_mul(Octonion.basis(i), Octonion.basis(j)).c == cayley_dickson(_unit(i), _unit(j))


def test_table_rows_are_signed_permutations():
    for i in range(8):
        assert sorted(basis_product(i, j)[1] for j in range(8)) == list(range(8))


def test_fano_triples_drive_the_table():
    for i, j, k in FANO_TRIPLES:
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            assert basis_product(a, b) == (1, c)
            assert basis_product(b, a) == (-1, c)


def test_a_few_entries_read_directly():
    assert basis_product(1, 2) == (1, 3)
    assert basis_product(4, 1) == (-1, 5)
    assert basis_product(7, 7) == (-1, 0)
    assert basis_product(0, 6) == (1, 6)


def test_non_associative():
    e1, e2, e4 = (Octonion.basis(i) for i in (1, 2, 4))
    assert (e1 * e2) * e4 == -(e1 * (e2 * e4))


@given(octonions, octonions)
def test_random_products_match_oracle(x, y):
    assert oct_mul(x, y).c == cayley_dickson(x.c, y.c)


@given(octonions, octonions)
def test_alternative_laws(x, y):
    assert x * (x * y) == (x * x) * y
    assert (y * x) * x == y * (x * x)
    assert (x * y) * x == x * (y * x)


@given(octonions, octonions, octonions)
def test_moufang(x, y, z):
    assert z * (x * (z * y)) == ((z * x) * z) * y


@given(octonions, octonions)
def test_norm_composes(x, y):
    assert (x * y).norm2() == x.norm2() * y.norm2()


@given(octonions, octonions)
def test_conjugation_reverses(x, y):
    assert oct_conj(x * y) == oct_conj(y) * oct_conj(x)
    assert x * oct_conj(x) == Octonion.scalar(x.norm2())


@given(octonions, octonions)
def test_product_decomposes(x, y):
    assert oct_mul_decomposed(x, y) == oct_mul(x, y)


@given(vector_octonions, vector_octonions)
def test_cross_product(x, y):
    c = oct_cross(x, y)
    assert c == -oct_cross(y, x)
    assert oct_dot(c, x) == 0 and oct_dot(c, y) == 0
    assert c.norm2() == x.norm2() * y.norm2() - oct_dot(x, y) ** 2
    assert c == (x * y).vector


def test_cross_rejects_real_part():
    with pytest.raises(PreconditionError):
        oct_cross(Octonion.scalar(1), Octonion.basis(2))
    with pytest.raises(PreconditionError):
        oct_dot(Octonion.basis(1), Octonion([1, 1, 0, 0, 0, 0, 0, 0]))


@given(quaternions, quaternions)
def test_hamilton_matches_embedding(p, q):
    assert quat_mul(p, q).embed() == p.embed() * q.embed()


@given(octonions)
def test_quat_form_round_trip(x):
    q = to_quat_form(x)
    assert from_quat_form(q) == x
    assert q.u.embed() + q.v.embed() * E4 == x


@given(quaternions, quaternions)
def test_e4_identities(u, v):
    for name, lhs, rhs in e4_identities(u, v):
        assert lhs == rhs, name


@given(quaternions, quaternions, quaternions, quaternions)
def test_e4_cross_identities(u, v, a, b):
    ids = e4_cross_identities(QuatForm(u, v), QuatForm(a, b))
    assert len(ids) == 7
    for name, lhs, rhs in ids:
        assert lhs == rhs, name


@given(vector_octonions, vector_octonions)
def test_cross_in_quat_form(x, y):
    assert cross_quat_form(x, y) == oct_cross(x, y)


@given(octonions, octonions)
def test_product_in_quat_form(x, y):
    assert oct_mul_quat_form(to_quat_form(x), to_quat_form(y)) == oct_mul(x, y)


def test_e4_identities_on_basis():
    units = [Quaternion.basis(i) for i in range(4)]
    for u in units:
        for v in units:
            assert all(lhs == rhs for _, lhs, rhs in e4_identities(u, v))
            for a in units:
                for b in units:
                    x, y = QuatForm(u, v), QuatForm(a, b)
                    assert all(lhs == rhs for _, lhs, rhs in e4_cross_identities(x, y))


def test_formatting():
    assert format_scalar(Fraction(3, 4)) == "3/4"
    assert format_scalar(Fraction(-6, 3)) == "-2"
    assert format_element(Octonion([0, 1, 0, 0, Fraction(-1, 2), 0, 0, 0]).c) == "e1 - 1/2*e4"
    assert format_element(Octonion.basis(0, -1).c) == "-1"


def test_fractions_everywhere():
    x = Octonion([1, 2, 3, 4, 5, 6, 7, 8])
    assert all(isinstance(c, Fraction) for c in (x * x).c)


def test_mul_constants_are_module_level():
    # The fault-injection test in test_cli relies on this lookup path.
    assert algebra._MUL[1][2] == (1, 3)
