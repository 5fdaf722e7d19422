from hypothesis import given
from hypothesis import strategies as st

import pytest

from ap3lattice.polynomial import Q, RankPolynomial


def test_basics():
    p = (1 + Q) ** 2 * (1 + Q**2)
    assert p.coeffs == (1, 2, 2, 2, 1)
    assert str(p) == "1 + 2q + 2q^2 + 2q^3 + q^4"
    assert p(1) == 8 and p.degree == 4
    assert str(RankPolynomial()) == "0" and RankPolynomial() == 0
    assert RankPolynomial([1, 0, 0]) == 1
    assert str(1 - Q) == "1 - q"


def test_from_ranks_and_shift():
    assert RankPolynomial.from_ranks([0, 1, 1, 3]).coeffs == (1, 2, 0, 1)
    assert (1 + Q).shift(2) == Q**2 + Q**3
    with pytest.raises(ValueError):
        RankPolynomial.from_ranks([-1])


polys = st.lists(st.integers(-5, 5), max_size=6).map(RankPolynomial)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert (a * b)(2) == a(2) * b(2)
