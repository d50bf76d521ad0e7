import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exteriorcov.exceptions import ConsistencyError
from exteriorcov.models.matrices import RationalMatrix, random_traceless
from exteriorcov.models.slnpairing import (
    alternation_constant,
    alternator,
    canonical_element,
    compose,
    cycles,
    inverse_permutation,
    pairing_psi_phistar,
    permutation_sign,
    phi_eval,
    phi_star_eval,
    polarized_phi_star,
    polarized_psi,
    psi_eval,
    psi_star_eval,
    run_trial,
    shuffle_wedge,
    shuffles,
    sl_basis,
    standard_poly,
    theorem_constant,
    trace_form,
    trace_monomial,
    trace_T,
    verify_pairing,
)

E = RationalMatrix.elementary(2, 0, 1)
F = RationalMatrix.elementary(2, 1, 0)
H = RationalMatrix([[1, 0], [0, -1]])


def test_permutation_helpers():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1
    p = (2, 0, 3, 1)
    assert compose(p, inverse_permutation(p)) == (0, 1, 2, 3)
    assert sorted(len(c) for c in cycles((1, 0, 3, 4, 2))) == [2, 3]


def test_shuffles():
    found = list(shuffles(3, 1))
    assert [(s, r) for s, r, _ in found] == [((0,), (1, 2)), ((1,), (0, 2)), ((2,), (0, 1))]
    assert [sign for _, _, sign in found] == [1, -1, 1]
    assert len(list(shuffles(5, 2))) == 10


def test_standard_polynomial():
    assert standard_poly([E, F]) == E.commutator(F)
    assert trace_T(1, [E, H, F]) == -6


def test_standard_polynomial_vanishes_on_two_by_two():
    rng = random.Random("amitsur")
    xs = [random_traceless(2, rng) for _ in range(4)]
    assert standard_poly(xs) == RationalMatrix.zeros(2)


def test_trace_monomial():
    a, b = RationalMatrix([[1, 2], [3, 4]]), RationalMatrix([[0, 1], [1, 0]])
    assert trace_monomial((0, 1), [a, b]) == a.trace() * b.trace()
    assert trace_monomial((1, 0), [a, b]) == (a * b).trace()


@given(st.permutations(range(3)), st.permutations(range(3)), st.integers(0, 10 ** 6))
def test_trace_monomial_under_relabeling(mu, tau, seed):
    rng = random.Random(seed)
    W = [random_traceless(3, rng) for _ in range(3)]
    relabeled = [W[t] for t in tau]
    conjugate = compose(compose(tau, mu), inverse_permutation(tau))
    assert trace_monomial(mu, relabeled) == trace_monomial(conjugate, W)


def test_trace_monomial_follows_the_cycles():
    rng = random.Random("cycles")
    W = [random_traceless(3, rng) for _ in range(3)]
    assert cycles((1, 2, 0)) == [(0, 1, 2)]
    assert trace_monomial((1, 2, 0), W) == (W[0] * W[2] * W[1]).trace()
    assert trace_monomial((0, 2, 1), W) == W[0].trace() * (W[1] * W[2]).trace() == 0


@pytest.mark.parametrize("n", [2, 3])
def test_trace_T_vanishes_on_a_repeated_argument(n):
    rng = random.Random(f"repeat-{n}")
    a, b = random_traceless(n, rng), random_traceless(n, rng)
    assert trace_T(1, [a, a, b]) == 0
    assert trace_T(1, [a, b, a]) == 0
    if n == 3:
        c, d = random_traceless(n, rng), random_traceless(n, rng)
        assert trace_T(2, [a, b, c, a, d]) == 0


def test_covariants():
    one = RationalMatrix.identity(2)
    assert phi_eval((1, 2), [one, one]) == 0
    assert psi_eval((1, 0), [F]) == -1
    with pytest.raises(ValueError):
        psi_eval((1, 0), [F, F])


def test_canonical_element():
    assert canonical_element(2) == [((2, 0), 1), ((1, 1), 2), ((0, 2), 1)]
    assert len(canonical_element(3)) == 10


def test_constants():
    assert alternation_constant(2) == Fraction(1, 3)
    assert theorem_constant(2) == Fraction(-1, 2)
    assert theorem_constant(3) == Fraction(-1, 6)


def test_sl2_pairing_on_standard_triple():
    result = pairing_psi_phistar(2, [E, H, F])
    assert result.direct == result.trace_form == 3
    assert pairing_psi_phistar(2, [E, H, F], full_alternation=False).value == 3


def test_pairing_is_alternating():
    rng = random.Random("alternating")
    xs = [random_traceless(2, rng) for _ in range(3)]
    swapped = [xs[1], xs[0], xs[2]]
    assert pairing_psi_phistar(2, swapped).value == -pairing_psi_phistar(2, xs).value
    assert pairing_psi_phistar(2, [xs[0], xs[0], xs[2]]).value == 0


def test_trace_form_alternates_in_the_second_block():
    rng = random.Random("direction")
    a = [random_traceless(2, rng)]
    b = [random_traceless(2, rng) for _ in range(2)]
    assert trace_form(2, a, [b[1], b[0]]) == -trace_form(2, a, b)


def test_pairing_rejects_bad_input():
    with pytest.raises(ValueError):
        pairing_psi_phistar(2, [E, H])
    with pytest.raises(ValueError):
        pairing_psi_phistar(2, [E, RationalMatrix.identity(2), F])
    with pytest.raises(ValueError):
        pairing_psi_phistar(1, [E])


def test_sl_basis_labels():
    labels = [label for label, _ in sl_basis(3)]
    assert labels == ["E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"]
    assert all(m.is_traceless() for _, m in sl_basis(3))


def test_trials_are_reproducible():
    assert run_trial(2, 5, 1) == run_trial(2, 5, 1)
    assert run_trial(2, 5, 1).label == "seed=5 trial=1"


def test_verify_pairing_sl2():
    report = verify_pairing(2, trials=3, seed=0)
    assert len(report.trials) == 27 + 3
    assert report.proportional
    assert report.constant == Fraction(-1, 2)
    assert report.constant_matches
    assert report.passes
    assert report.offending == []


@pytest.mark.slow
def test_verify_pairing_sl3():
    report = verify_pairing(3, trials=2, seed=1)
    assert report.proportional
    assert report.equivariant
    assert report.multilinear
    assert report.constant is not None


def test_disagreeing_routes_raise(monkeypatch):
    from exteriorcov.models import slnpairing

    monkeypatch.setattr(slnpairing, "_trace_pairing", lambda n, X, full: Fraction(10 ** 6))
    with pytest.raises(ConsistencyError):
        slnpairing.pairing_psi_phistar(2, [E, H, F])


def test_covariant_checks_hold():
    report = verify_pairing(2, trials=1, seed=4)
    assert report.covariants_equivariant
    assert report.alternation_identity is True


def test_polarization_restricts_to_the_diagonal():
    rng = random.Random("polarize")
    A = [random_traceless(3, rng) for _ in range(3)]
    v = (1, -2, 3)
    gamma = (2, 0, -1)
    assert polarized_psi([v] * 3, A[:2]) == psi_eval(v, A[:2])
    assert polarized_phi_star([gamma] * 3, A) == phi_star_eval(gamma, A)
    assert psi_star_eval(gamma, A[:2]) == psi_eval(gamma, [a.transpose() for a in A[:2]])


def test_alternation_constant_relates_alt_and_wedge():
    rng = random.Random("wedge")
    xs = [random_traceless(2, rng) for _ in range(3)]
    v, gamma = (1, 2), (3, -1)

    def left(ms):
        return psi_eval(v, ms)

    def right(ms):
        return phi_star_eval(gamma, ms)

    alt = alternator(lambda ms: left(ms[:1]) * right(ms[1:]), xs)
    assert alt == alternation_constant(2) * shuffle_wedge(left, right, 1, xs)
