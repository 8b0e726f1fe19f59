"""
Bitset and rational helpers
"""
from fractions import Fraction

__all__ = ['iter_bits', 'lowest_bit', 'to_bits', 'format_rational']


def iter_bits(bits):
    """
    Yield the positions of the set bits of ``bits`` in ascending order

    Examples
    --------
    >>> list(iter_bits(0b10110))
    [1, 2, 4]
    """
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def lowest_bit(bits):
    """
    Return position of the lowest set bit (``-1`` if none)
    """
    return (bits & -bits).bit_length() - 1


def to_bits(vertices):
    """
    Return the bitmask with the given positions set
    """
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def format_rational(x):
    """
    Format an exact rational as ``p/q`` (or ``p`` if integral)

    Examples
    --------
    >>> format_rational(Fraction(10, 3))
    '10/3'
    >>> format_rational(Fraction(8, 2))
    '4'
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '{}/{}'.format(x.numerator, x.denominator)
