from fractions import Fraction

import pytest
from hypothesis import given, settings

from cind.bounds import (chordal_bound, regular_bound, check_chordal_bound,
                         check_independence_bound)
from cind.cycles import ACYCLIC
from cind.generators import named

from .strategies import cubic_graphs


def test_chordal_bound():
    assert chordal_bound(12, 4) == Fraction(10, 3)
    assert chordal_bound(26, 3) == 9
    assert chordal_bound(10, 6) == Fraction(12, 5)

    with pytest.raises(ValueError):
        chordal_bound(10, 2)

    with pytest.raises(ValueError):
        chordal_bound(10, ACYCLIC)

    with pytest.raises(ValueError):
        chordal_bound(1, 3)


def test_regular_bound():
    assert regular_bound(10, 3) == 3
    assert regular_bound(6, 3) == 2

    with pytest.raises(ValueError):
        regular_bound(10, 2)


def test_check_chordal_bound():
    report = check_chordal_bound(named('Petersen'), oracle=True)
    assert report.k == 6
    assert report.bound == Fraction(12, 5)
    assert report.greedy_order == 6
    assert report.oracle_order == 6
    assert report.verdict

    report = check_chordal_bound(named('K33'))
    assert report.oracle_order is None
    assert report.bound == Fraction(4, 3)


def test_check_independence_bound():
    report = check_independence_bound(named('K4'), '1/8')
    assert report.hypothesis
    assert report.alpha == 1
    assert report.c_ind_limit == Fraction(1, 2)
    assert report.c_ind == 3
    assert report.status == 'pass' and report.verdict

    report = check_independence_bound(named('Petersen'), Fraction(1, 40))
    assert not report.hypothesis
    assert report.verdict
    assert report.c_ind is None

    for eps in (0, '3/8', Fraction(1, 2)):
        with pytest.raises(ValueError):
            check_independence_bound(named('K4'), eps)


@given(cubic_graphs(max_n=16))
@settings(max_examples=25, deadline=None)
def test_bounds_hold(G):
    assert check_chordal_bound(G).verdict
    assert check_independence_bound(G, '1/16').status != 'fail'
