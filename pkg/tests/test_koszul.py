from fractions import Fraction
from itertools import combinations

import pytest

from exteriorcov.models.koszul import (
    WedgeElement,
    koszul_boundary,
    koszul_delta,
    phi_wedge,
    psi_wedge,
    sl_algebra,
    verify_koszul,
)
from exteriorcov.models.matrices import RationalMatrix

# sl(2) basis order: e = E12, f = E21, h = H1
E, F, H = 0, 1, 2


def test_wedge_is_alternating():
    assert WedgeElement.basis(1, 0) == -WedgeElement.basis(0, 1)
    assert WedgeElement.basis(2, 2).is_zero()
    assert WedgeElement.basis(0).wedge(WedgeElement.basis(0)).is_zero()


def test_wedge_from_vectors():
    w = WedgeElement.from_vectors([{0: 1, 1: 1}, {0: 1, 1: -1}])
    assert w == WedgeElement.basis(0, 1) * -2
    assert w.degrees() == [2]


def test_ratio_to():
    w = WedgeElement.basis(0, 2) * Fraction(3, 2)
    assert w.ratio_to(WedgeElement.basis(0, 2)) == Fraction(3, 2)
    assert (w + WedgeElement.basis(1, 2)).ratio_to(WedgeElement.basis(0, 2)) is None
    assert WedgeElement().ratio_to(WedgeElement()) == 0


def test_format():
    algebra = sl_algebra(2)
    assert WedgeElement.basis(E, F).format(algebra.labels) == "1*E12^E21"
    assert WedgeElement().format(algebra.labels) == "0"


def test_sl2_algebra():
    algebra = sl_algebra(2)
    assert algebra.labels == ["E12", "E21", "H1"]
    assert algebra.bracket(E, F) == {H: 1}
    assert algebra.bracket(H, E) == {E: 2}
    assert algebra.dual_vector(E) == {F: 1}
    assert algebra.dual_vector(H) == {H: Fraction(1, 2)}
    assert algebra.pair(WedgeElement.basis(E), WedgeElement.basis(F)) == 1
    assert algebra.pair(WedgeElement.basis(H), WedgeElement.basis(H)) == 2


def test_coordinates():
    algebra = sl_algebra(3)
    x = RationalMatrix([[2, 1, 0], [0, -1, 0], [4, 0, -1]])
    coords = algebra.coordinates(x)
    rebuilt = RationalMatrix.zeros(3)
    for index, value in coords.items():
        rebuilt = rebuilt + algebra.matrices[index] * value
    assert rebuilt == x
    with pytest.raises(ValueError):
        algebra.coordinates(RationalMatrix.identity(3))


def test_boundary_of_e_wedge_f_is_h():
    algebra = sl_algebra(2)
    assert koszul_boundary(WedgeElement.basis(E, F), algebra) == WedgeElement.basis(H)
    assert koszul_boundary(WedgeElement.basis(E, F, H), algebra).is_zero()


def test_delta_of_e():
    algebra = sl_algebra(2)
    assert koszul_delta(WedgeElement.basis(E), algebra) == WedgeElement.basis(E, H)
    assert algebra.pair(koszul_delta(WedgeElement.basis(H), algebra), WedgeElement.basis(E, F)) == 2


def test_sl2_covariants():
    algebra = sl_algebra(2)
    assert psi_wedge((2, 0), algebra) == -WedgeElement.basis(E)
    assert phi_wedge((2, 0), algebra) == WedgeElement.basis(E, H) * Fraction(-1, 2)


def test_verify_koszul_sl2():
    report = verify_koszul(2)
    assert report.passes
    assert report.delta_scalar == 2
    assert report.laplacian_scalar == -2
    assert report.psi_top_scalar == -1
    assert report.offending == []


@pytest.mark.slow
def test_verify_koszul_sl3():
    report = verify_koszul(3)
    assert report.boundary_squares_zero
    assert report.delta_squares_zero
    assert report.passes, report.offending


@pytest.mark.parametrize("n,degree", [
    (2, 1),
    (2, 2),
    pytest.param(3, 1, marks=pytest.mark.slow),
    pytest.param(3, 2, marks=pytest.mark.slow),
])
def test_delta_is_adjoint_to_the_boundary(n, degree):
    algebra = sl_algebra(n)
    for left in combinations(range(algebra.dim), degree):
        x = WedgeElement.basis(*left)
        delta_x = koszul_delta(x, algebra)
        for right in combinations(range(algebra.dim), degree + 1):
            y = WedgeElement.basis(*right)
            assert algebra.pair(delta_x, y) == algebra.pair(x, koszul_boundary(y, algebra)), (left, right)
