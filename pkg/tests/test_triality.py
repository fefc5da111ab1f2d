from fractions import Fraction

import pytest
from hypothesis import given

from octoreg.algebra import Octonion, PreconditionError, oct_cross, oct_mul
from octoreg.clifford import Multivector, constants, grade_project
from octoreg.triality import (
    cross_via_W,
    graded_closed_forms,
    graded_parts,
    low_grades_suffice,
    middle_grades_equivalent,
    oct_via_idempotent,
    oct_via_W,
    spinor_product,
    symmetry_holds,
    vanishing_flags,
)

from strategies import octonions, vector_octonions

# Expanded grade-2 and grade-3 parts of 16 a b I-, one bivector / trivector
# factor per component of a o b.  The e5 row is e14 - e27 + e36, with the
# plus sign easy to lose.
GRADE2_FACTORS = {
    1: "+23 +45 -67",
    2: "-13 +46 +57",
    3: "+12 +47 -56",
    4: "-15 -26 -37",
    5: "+14 -27 +36",
    6: "+17 +24 -35",
    7: "-16 +25 +34",
}
GRADE3_FACTORS = {
    1: "+247 -256 -346 -357",
    2: "-147 +156 +345 -367",
    3: "+146 +157 -245 +267",
    4: "+127 -136 +235 -567",
    5: "-126 -137 -234 +467",
    6: "+125 +134 -237 -457",
    7: "-124 +135 +236 +456",
}


def _blades(spec):
    out = Multivector.scalar(0)
    for tok in spec.split():
        term = Multivector.e(*(int(ch) for ch in tok[1:]))
        out = out + term if tok[0] == "+" else out - term
    return out


def _expanded(a, b, factors):
    ab = oct_mul(a, b)
    out = Multivector.scalar(0)
    for k, spec in factors.items():
        factor = _blades(spec) if isinstance(spec, str) else spec
        out = out + factor * ab.c[k]
    return out


def _unit(i):
    return Octonion.basis(i)


@pytest.mark.parametrize("i", range(8))
def test_triality_products_on_basis(i):
    for j in range(8):
        a, b = _unit(i), _unit(j)
        expected = oct_mul(a, b)
        assert oct_via_W(a, b) == expected
        assert oct_via_idempotent(a, b) == expected


@given(octonions, octonions)
def test_triality_products_random(a, b):
    expected = oct_mul(a, b)
    assert oct_via_W(a, b) == expected
    assert oct_via_idempotent(a, b) == expected


@given(vector_octonions, vector_octonions)
def test_cross_via_W(a, b):
    assert cross_via_W(a, b) == oct_cross(a, b)


def test_cross_via_W_needs_vectors():
    with pytest.raises(PreconditionError):
        cross_via_W(Octonion.scalar(1), _unit(1))


def test_non_paravector_rejected():
    with pytest.raises(PreconditionError):
        oct_via_W(Multivector.e(1, 2), _unit(1))


@given(octonions, octonions)
def test_graded_closed_forms(a, b):
    for report in graded_parts(a, b):
        assert report.equal, report.k


@given(octonions, octonions)
def test_closed_forms_reassemble(a, b):
    total = Multivector.scalar(0)
    for part in graded_closed_forms(a, b):
        total = total + part
    assert total == spinor_product(a, b)


@given(octonions, octonions)
def test_grade2_expanded_display(a, b):
    direct = grade_project(spinor_product(a, b), 2)
    assert direct == _expanded(a, b, GRADE2_FACTORS)


def test_grade2_e5_row_needs_the_plus_sign():
    # Read literally, the e5 factor is e14 - e27 e36, a bivector minus a 4-blade.
    printed = dict(GRADE2_FACTORS)
    printed[5] = Multivector.e(1, 4) - Multivector.e(2, 7) * Multivector.e(3, 6)
    a, b = _unit(0), _unit(5)
    direct = grade_project(spinor_product(a, b), 2)
    assert direct == _expanded(a, b, GRADE2_FACTORS)
    assert direct != _expanded(a, b, printed)


@given(octonions, octonions)
def test_grade3_expanded_display(a, b):
    # The expanded display assumes [abI]_0 = 0; in general the -sW term remains.
    s = a.real * b.real - sum((x * y for x, y in zip(a.c[1:], b.c[1:])), Fraction(0))
    direct = grade_project(spinor_product(a, b), 3)
    assert direct == _expanded(a, b, GRADE3_FACTORS) - constants().W * s


@given(octonions, octonions)
def test_vanishing_structure(a, b):
    flags = vanishing_flags(a, b)
    assert symmetry_holds(flags)
    assert middle_grades_equivalent(flags)
    assert low_grades_suffice(a, b)


def test_vanishing_on_orthogonal_pairs():
    # a.b = 0 with a0 = b0 = 0 gives [abI]_0 = 0; exercise the middle grades.
    pairs = [(_unit(1), _unit(2)), (_unit(1) + _unit(2), _unit(3)), (_unit(0), _unit(0) * 0)]
    for a, b in pairs:
        flags = vanishing_flags(a, b)
        assert symmetry_holds(flags)
        assert middle_grades_equivalent(flags)
        assert low_grades_suffice(a, b)


def test_zero_product_in_spinor_picture():
    # a I = 0 has nonzero solutions: a b I- can vanish with a b != 0.
    a = Multivector.e(1, 2) * -1 + Multivector.e(4, 7)
    assert a * constants().I_minus == Multivector.scalar(0)
