from fractions import Fraction

from cind.utils import iter_bits, lowest_bit, to_bits, format_rational


def test_bits():
    assert list(iter_bits(0)) == []
    assert list(iter_bits(1 << 70 | 1)) == [0, 70]
    assert lowest_bit(0) == -1
    assert lowest_bit(0b1000) == 3
    assert to_bits([3, 0, 3]) == 0b1001


def test_rationals():
    assert format_rational(Fraction(-7, 2)) == '-7/2'
    assert format_rational(5) == '5'
    assert format_rational(Fraction(12, 5)) == '12/5'
