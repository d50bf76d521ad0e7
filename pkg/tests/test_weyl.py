import pytest
from hypothesis import given
from hypothesis import strategies as st

from exteriorcov.exceptions import BudgetExceededError
from exteriorcov.models.rootdata import build_root_system, highest_roots
from exteriorcov.models.weyl import (
    generate_weyl,
    long_reflection_subgroup_order,
    orbit,
    orbit_by_reflections,
    short_parabolic_order,
    sign_sum,
    weyl_group_for,
)


@pytest.mark.parametrize("type_tag,rank,order", [
    ("A", 1, 2),
    ("A", 2, 6),
    ("A", 3, 24),
    ("B", 2, 8),
    ("B", 3, 48),
    ("C", 3, 48),
    ("D", 4, 192),
    ("G", 2, 12),
    ("F", 4, 1152),
])
def test_orders_and_signs(type_tag, rank, order):
    w_group = weyl_group_for(type_tag, rank)
    assert w_group.order == order
    assert sign_sum(w_group) == 0
    assert w_group.elements[0].word == ()


@pytest.mark.slow
def test_b5_order():
    assert weyl_group_for("B", 5).order == 3840


def test_signs_follow_word_length():
    w_group = weyl_group_for("B", 3)
    assert all(w.sign == (-1) ** w.length for w in w_group)


def test_longest_element_sends_rho_to_minus_rho():
    w_group = weyl_group_for("A", 2)
    longest = max(w_group, key=lambda w: w.length)
    assert longest.length == 3
    assert longest.sign == -1
    assert longest.apply((1, 1)) == (-1, -1)


def test_words_compose_and_invert():
    w_group = weyl_group_for("G", 2)
    identity = w_group.elements[0]
    for w in w_group:
        assert w_group.compose(w, w_group.inverse(w)) == identity
        assert w_group.element_of_word(w.word) == w
    s0 = w_group.element_of_word((0,))
    s1 = w_group.element_of_word((1,))
    assert w_group.compose(s0, s1) == w_group.element_of_word((0, 1))


def test_orbits_agree():
    rs = build_root_system("B", 3)
    w_group = weyl_group_for("B", 3)
    for mu in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)]:
        assert orbit(rs, w_group, mu) == orbit_by_reflections(rs, mu)


def test_orbit_of_highest_root_is_the_long_roots():
    rs = build_root_system("G", 2)
    theta, theta_s = highest_roots(rs)
    assert len(orbit_by_reflections(rs, theta)) == 6
    assert len(orbit_by_reflections(rs, theta_s)) == 6
    assert len(orbit_by_reflections(rs, (0, 0))) == 1


@pytest.mark.parametrize("type_tag,rank,w_s,h", [("B", 2, 2, 4), ("G", 2, 2, 6), ("C", 3, 6, 8)])
def test_short_parabolic_times_long_subgroup(type_tag, rank, w_s, h):
    rs = build_root_system(type_tag, rank)
    assert short_parabolic_order(rs) == w_s
    assert long_reflection_subgroup_order(rs) == h
    assert w_s * h == weyl_group_for(type_tag, rank).order


def test_budget_refuses_large_groups():
    with pytest.raises(BudgetExceededError):
        generate_weyl(build_root_system("E", 8), budget=1000)


@pytest.mark.parametrize("type_tag,rank", [("A", 3), ("B", 3), ("C", 3), ("G", 2)])
@given(data=st.data())
def test_weyl_group_preserves_the_form(type_tag, rank, data):
    w_group = weyl_group_for(type_tag, rank)
    rs = w_group.root_system
    weights = st.tuples(*[st.integers(-4, 4)] * rank)
    w = data.draw(st.sampled_from(w_group.elements))
    mu, nu = data.draw(weights), data.draw(weights)
    assert rs.inner(w.apply(mu), w.apply(nu)) == rs.inner(mu, nu)
