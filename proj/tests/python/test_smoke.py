import json
import math
from fractions import Fraction

import pytest

import magnus_lab as ml


def test_psi2_product():
    # exp(2 Q1) exp(2 Q2) = [[1, 2], [0, 1]] [[1, 0], [-2, 1]]
    assert ml.rexp_psi(2) == [[-3, 2], [-2, 1]]
    assert ml.rexp_exact(ml.psi_measure(2)) == ml.rexp_psi(2)


def test_certificate():
    c = ml.certify_divergence(5)
    assert c["eigencheck"] and c["parity_verdict"]
    assert c["gm_minus_one"] == 1
    assert ml.cumulative_norm(ml.psi_measure(5), "l1") == Fraction(10, 4)


def test_magnus_terms_commuting():
    # a single step has mu_1 = l A and nothing else
    a = [[Fraction(1, 2), 1], [0, Fraction(-1, 3)]]
    terms = ml.magnus_terms([(a, Fraction(3, 2))], 4)
    assert terms[0] == [[Fraction(3, 4), Fraction(3, 2)], [0, Fraction(-1, 2)]]
    assert all(x == 0 for t in terms[1:] for row in t for x in row)


def test_minimal_pair_zeta():
    terms = ml.minimal_magnus_terms(0, 1, 4)
    # mu_2 entry 12 for alpha = 0 is -4 * (-1) * (3/4) * zeta(2) = pi^2 / 2
    assert terms[1][0][1] == pytest.approx(math.pi**2 / 2, rel=1e-12)


def test_bounds():
    assert ml.solve_lambda(math.pi) == pytest.approx(0.0588740902, abs=1e-8)
    assert ml.c_infinity(0.5) == 2.0
    assert ml.rogers_theta(3, "r1") <= ml.rogers_theta(3, "r4")
    r = ml.magnus_radius(9)
    assert r["excess"] > 0
    assert json.loads(ml.dimension_profile(9))["d"] == 9


def test_errors():
    with pytest.raises(ml.MagnusLabError):
        ml.certify_divergence(1)
    with pytest.raises(ValueError):
        ml.parse_measure("{")
