import pytest

from exteriorcov.exceptions import BudgetExceededError, InvalidWeightError
from exteriorcov.models.gradedchar import (
    FULL,
    TARGETED,
    GradedCharacter,
    coefficient,
    default_mode,
    lambda_g_character,
    positive_half,
)
from exteriorcov.models.qpoly import QPoly
from exteriorcov.models.rootdata import build_root_system
from exteriorcov.models.weyl import orbit_by_reflections

q = QPoly.monomial(1)


@pytest.fixture(scope="module")
def a1():
    rs = build_root_system("A", 1)
    return rs, lambda_g_character(rs, FULL)


@pytest.fixture(scope="module")
def a2():
    rs = build_root_system("A", 2)
    return rs, lambda_g_character(rs, FULL)


def test_sl2_coefficients(a1):
    rs, char = a1
    assert char.coefficient((0,)) == 1 + q + q ** 2 + q ** 3
    assert char.coefficient((2,)) == q + q ** 2
    assert char.coefficient((-2,)) == q + q ** 2
    assert char.coefficient((4,)) == 0
    assert char.coefficient((1,)) == 0


def test_a2_zero_weight(a2):
    rs, char = a2
    zero = char.coefficient((0, 0))
    assert zero.at_one() == 40
    assert zero.degree() == rs.dim
    assert zero.coefficient(0) == 1


@pytest.mark.parametrize("type_tag,rank", [("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_total_is_two_to_the_dimension(type_tag, rank):
    rs = build_root_system(type_tag, rank)
    char = lambda_g_character(rs, FULL)
    assert char.total_at_one() == 2 ** rs.dim
    assert sum(char.coefficient(mu).at_one() for mu in char.weights()) == 2 ** rs.dim


@pytest.mark.parametrize("type_tag,rank", [("B", 2), ("G", 2)])
def test_weyl_invariance_and_palindrome(type_tag, rank):
    rs = build_root_system(type_tag, rank)
    char = lambda_g_character(rs, FULL)
    for mu in char.weights():
        value = char.coefficient(mu)
        assert value.is_nonnegative()
        for nu in orbit_by_reflections(rs, mu):
            assert char.coefficient(nu) == value
        assert value.reflect(rs.dim) == char.coefficient(tuple(-x for x in mu))


@pytest.mark.parametrize("type_tag,rank", [("A", 2), ("B", 2), ("G", 2), ("B", 3)])
def test_targeted_agrees_with_full(type_tag, rank):
    rs = build_root_system(type_tag, rank)
    full = lambda_g_character(rs, FULL)
    targeted = lambda_g_character(rs, TARGETED)
    assert targeted.total_at_one() == full.total_at_one()
    for mu in full.weights():
        assert targeted.coefficient(mu) == full.coefficient(mu)
    outside = tuple(50 for _ in range(rank))
    assert targeted.coefficient(outside) == 0


def test_full_mode_limits():
    rs = build_root_system("A", 2)
    with pytest.raises(BudgetExceededError):
        lambda_g_character(rs, FULL, full_max_rank=1)
    with pytest.raises(BudgetExceededError):
        lambda_g_character(rs, FULL, max_terms=5, full_max_rank=8)


def test_targeted_support_is_not_enumerable():
    rs = build_root_system("A", 2)
    with pytest.raises(InvalidWeightError):
        lambda_g_character(rs, TARGETED).weights()


def test_unknown_mode():
    with pytest.raises(ValueError):
        lambda_g_character(build_root_system("A", 1), "sparse")


def test_export_restores_the_same_character(a2):
    rs, char = a2
    restored = GradedCharacter.from_coefficients(rs, FULL, char.export_terms())
    for mu in char.weights():
        assert restored.coefficient(mu) == char.coefficient(mu)


def test_default_mode():
    assert default_mode(build_root_system("A", 2), full_max_rank=4) == FULL
    assert default_mode(build_root_system("A", 5), full_max_rank=4) == TARGETED


def test_positive_half_of_sl2():
    rs = build_root_system("A", 1)
    half = positive_half(rs)
    assert set(half) == {(0,), (1,)}
    targeted = lambda_g_character(rs, TARGETED)
    assert coefficient(targeted, (0,)) == 1 + q + q ** 2 + q ** 3
