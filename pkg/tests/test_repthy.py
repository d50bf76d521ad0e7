from itertools import product

import pytest

from exteriorcov.exceptions import InvalidWeightError
from exteriorcov.models.gradedchar import FULL, lambda_g_character
from exteriorcov.models.qpoly import QPoly
from exteriorcov.models.repthy import (
    dominant_weights,
    graded_multiplicity,
    irrep_info,
    is_small,
    little_adjoint_weights,
    weyl_dimension,
)
from exteriorcov.models.rootdata import build_root_system

q = QPoly.monomial(1)


@pytest.mark.parametrize("type_tag,rank,weight,dim", [
    ("A", 2, (1, 1), 8),
    ("A", 2, (3, 0), 10),
    ("B", 2, (1, 0), 5),
    ("B", 2, (0, 1), 4),
    ("G", 2, (1, 0), 7),
    ("G", 2, (0, 1), 14),
    ("C", 3, (0, 1, 0), 14),
    ("F", 4, (0, 0, 0, 1), 26),
])
def test_weyl_dimension(type_tag, rank, weight, dim):
    rs = build_root_system(type_tag, rank)
    assert weyl_dimension(rs, weight) == dim
    assert irrep_info(rs, weight).dim == dim


@pytest.mark.parametrize("type_tag,rank,weight,zero_dim", [
    ("A", 2, (1, 1), 2),
    ("A", 2, (3, 0), 1),
    ("B", 2, (1, 0), 1),
    ("G", 2, (1, 0), 1),
    ("G", 2, (0, 1), 2),
    ("C", 3, (0, 1, 0), 2),
])
def test_zero_weight_dimension(type_tag, rank, weight, zero_dim):
    rs = build_root_system(type_tag, rank)
    assert irrep_info(rs, weight).zero_weight_dim == zero_dim


def test_dominant_weights_of_adjoint():
    rs = build_root_system("A", 2)
    assert set(dominant_weights(rs, (1, 1))) == {(1, 1), (0, 0)}
    assert dominant_weights(rs, (1, 1))[0] == (1, 1)


def test_non_dominant_weight_rejected():
    rs = build_root_system("A", 2)
    with pytest.raises(InvalidWeightError):
        irrep_info(rs, (1, -1))
    with pytest.raises(InvalidWeightError):
        is_small(rs, (-1, 0))


def test_smallness():
    a2 = build_root_system("A", 2)
    assert is_small(a2, (1, 1))
    assert is_small(a2, (3, 0))
    verdict = is_small(a2, (2, 2))
    assert not verdict
    assert verdict.witness == "theta"
    g2 = build_root_system("G", 2)
    assert is_small(g2, (1, 0))
    assert not is_small(g2, (2, 0))


@pytest.mark.parametrize("type_tag,rank", [("A", 2), ("B", 2), ("G", 2), ("B", 3)])
def test_smallness_criterion_matches_weight_test(type_tag, rank):
    rs = build_root_system(type_tag, rank)
    for weight in product(range(4), repeat=rank):
        is_small(rs, weight, cross_check=True)


def test_little_adjoint_weights():
    rs = build_root_system("B", 2)
    weights = little_adjoint_weights(rs)
    assert len(weights) == 5
    assert (0, 0) in weights
    with pytest.raises(InvalidWeightError):
        little_adjoint_weights(build_root_system("A", 2))


@pytest.fixture(scope="module")
def a2_char():
    rs = build_root_system("A", 2)
    return rs, lambda_g_character(rs, FULL)


def test_sl2_multiplicities():
    rs = build_root_system("A", 1)
    char = lambda_g_character(rs, FULL)
    assert graded_multiplicity(rs, (2,), char) == q + q ** 2
    assert graded_multiplicity(rs, (0,), char) == 1 + q ** 3
    assert graded_multiplicity(rs, (4,), char) == 0
    assert graded_multiplicity(rs, (1,), char) == 0


def test_sl3_multiplicities(a2_char):
    rs, char = a2_char
    assert graded_multiplicity(rs, (1, 1), char) == q + q ** 2 + q ** 3 + 2 * q ** 4 + q ** 5 + q ** 6 + q ** 7
    assert graded_multiplicity(rs, (3, 0), char) == q ** 2 + q ** 3 + q ** 5 + q ** 6
    assert graded_multiplicity(rs, (0, 3), char) == q ** 2 + q ** 3 + q ** 5 + q ** 6
    assert graded_multiplicity(rs, (0, 0), char) == (1 + q ** 3) * (1 + q ** 5)
    assert graded_multiplicity(rs, (1, 0), char) == 0


def test_multiplicities_account_for_every_weight(a2_char):
    rs, char = a2_char
    total = 0
    for weight in product(range(8), repeat=2):
        m = graded_multiplicity(rs, weight, char)
        if m:
            total += m.at_one() * weyl_dimension(rs, weight)
    assert total == 2 ** rs.dim


@pytest.mark.parametrize("type_tag,rank,weight,expected", [
    ("G", 2, (1, 0), q ** 5 + q ** 6 + q ** 8 + q ** 9),
    ("B", 2, (1, 0), q ** 3 + q ** 4 + q ** 6 + q ** 7),
])
def test_little_adjoint_multiplicity(type_tag, rank, weight, expected):
    rs = build_root_system(type_tag, rank)
    assert graded_multiplicity(rs, weight, lambda_g_character(rs, FULL)) == expected


@pytest.mark.parametrize("type_tag,rank", [
    ("A", 1),
    ("A", 2),
    ("B", 2),
    ("G", 2),
    pytest.param("A", 3, marks=pytest.mark.slow),
    pytest.param("B", 3, marks=pytest.mark.slow),
    pytest.param("C", 3, marks=pytest.mark.slow),
])
def test_multiplicities_are_palindromic(type_tag, rank):
    rs = build_root_system(type_tag, rank)
    char = lambda_g_character(rs, FULL)
    for weight in product(range(3), repeat=rank):
        m = graded_multiplicity(rs, weight, char)
        assert m.reflect(rs.dim) == m, weight
