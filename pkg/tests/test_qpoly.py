import pytest
from hypothesis import given, strategies as st

from exteriorcov.exceptions import InexactDivisionError
from exteriorcov.models.qpoly import Q, QPoly


@st.composite
def qpolys(draw, low=-3, high=6, nonzero=False):
    coeffs = draw(st.dictionaries(st.integers(low, high), st.integers(-5, 5), max_size=5))
    poly = QPoly(coeffs)
    if nonzero and poly.is_zero():
        poly = QPoly.one()
    return poly


def test_str_and_latex():
    p = QPoly.from_pairs([(5, 1), (6, 1)])
    assert str(p) == "q^5 + q^6"
    assert p.to_latex() == "q^{5} + q^{6}"
    assert str(QPoly.zero()) == "0"
    assert str(1 - Q) == "1 - q"
    assert str(-Q) == "-q"


def test_arithmetic():
    assert (1 + Q) * (1 - Q) == 1 - Q ** 2
    assert QPoly.binomial(3) == 1 + Q ** 3
    assert QPoly.binomial(2, -1) == 1 - Q ** 2
    assert QPoly.product([]) == 1
    assert (Q ** 2).shift(-3) == QPoly.monomial(-1)


def test_inspection():
    p = QPoly.from_dense([1, 0, 2, 3])
    assert p.degree() == 3
    assert p.min_degree() == 0
    assert p.at_one() == 6
    assert p.to_dense() == [1, 0, 2, 3]
    assert p.to_pairs() == [[0, 1], [2, 2], [3, 3]]
    assert p.is_polynomial() and p.is_nonnegative()
    assert not (p - 4).is_nonnegative()


def test_laurent_terms():
    p = 1 + QPoly.monomial(-1)
    assert not p.is_polynomial()
    assert p * Q == 1 + Q
    with pytest.raises(ValueError):
        p.to_dense()


def test_reflect():
    assert (Q + 2 * Q ** 3).reflect(4) == 2 * Q + Q ** 3


def test_exact_division():
    assert (1 - Q ** 6).exact_div(1 - Q ** 2) == 1 + Q ** 2 + Q ** 4
    assert (Q + Q ** 2).exact_div(1 + Q) == Q


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        (1 + Q ** 2).exact_div(1 + Q)
    with pytest.raises(InexactDivisionError):
        (1 + Q).exact_div(2 + 2 * Q ** 3)
    assert (1 + Q ** 2).try_div(1 + Q) is None


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Q.divmod(QPoly.zero())


@given(qpolys(), qpolys(nonzero=True))
def test_product_divides_back(a, b):
    assert (a * b).exact_div(b) == a


@given(qpolys(), qpolys(), qpolys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


@given(qpolys(low=0))
def test_pairs_round_trip(p):
    assert QPoly.from_pairs(p.to_pairs()) == p
