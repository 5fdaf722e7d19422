"""Closed forms for the counts and rank-generating functions.

All values are exact Python integers or :class:`RankPolynomial` objects.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .polynomial import Q, RankPolynomial


def _check(n: int, least: int):
    if n < least:
        raise DomainError(f"n must be at least {least}")


def f_closed(n: int) -> int:
    """Number of valid systems on ``[n]``: ``2**C(n-1, 2)``."""
    _check(n, 1)
    return 2 ** math.comb(n - 1, 2)


def sigma_closed(n: int) -> int:
    """Largest size of a valid system: ``m(m-1)`` for ``n = 2m``, ``m**2`` for ``n = 2m+1``."""
    _check(n, 2)
    m, odd = divmod(n, 2)
    return m * m if odd else m * (m - 1)


def sigma_sum(n: int) -> int:
    """The same number as ``sum_{b=1}^{n-2} min(b, n-1-b)``."""
    _check(n, 2)
    return sum(min(b, n - 1 - b) for b in range(1, n - 1))


def g_closed(n: int) -> int:
    """Number of valid systems of the largest size."""
    _check(n, 2)
    m, odd = divmod(n, 2)
    if odd:
        return 2 ** (m * (m - 1))
    return 2 ** ((m - 1) * (m - 2)) * (2**m - 1)


def F_Mn(n: int) -> RankPolynomial:
    """``prod_{i=1}^{n-2} (1 + q^i)^(n-1-i)``."""
    _check(n, 2)
    out = RankPolynomial.one()
    for i in range(1, n - 1):
        out = out * (1 + Q ** i) ** (n - 1 - i)
    return out


def _prod_1_to(m: int) -> RankPolynomial:
    out = RankPolynomial.one()
    for i in range(1, m + 1):
        out = out * (1 + Q ** i)
    return out


def F_Kn(n: int) -> RankPolynomial:
    """Rank-generating function of ``K(n)`` as a closed product.

    Odd ``n = 2m+1``: ``F_Mn(m+1)**2``. Even ``n = 2m``:
    ``F_Mn(m)**2 * (prod_{i<m}(1+q^i) * (1 + q^C(m,2)) - q^C(m,2))``.
    """
    _check(n, 3)
    m, odd = divmod(n, 2)
    if odd:
        return F_Mn(m + 1) ** 2
    c = math.comb(m, 2)
    return F_Mn(m) ** 2 * (_prod_1_to(m - 1) * (1 + Q ** c) - Q ** c)


def F_Kn_parts(n: int) -> tuple[RankPolynomial, RankPolynomial]:
    """Even ``n = 2m``: the two summands from splitting order ideals of the
    join-irreducibles on whether they meet the ``left2`` class.

    ``F_Mn(m+1) F_Mn(m)`` and ``(F_Mn(m+1) - F_Mn(m)) q^(C(m+1,3)-C(m,3)) F_Mn(m)``.
    """
    _check(n, 4)
    m, odd = divmod(n, 2)
    if odd:
        raise DomainError("the two-part split is for even n")
    big, small = F_Mn(m + 1), F_Mn(m)
    shift = count_Qn(m + 1) - count_Qn(m)
    return big * small, ((big - small) * small).shift(shift)


def count_Qn(n: int) -> int:
    """Number of join-irreducibles of ``M(n)``: ``sum_{a=1}^{n-2} C(a+1, 2)``."""
    _check(n, 2)
    return sum(math.comb(a + 1, 2) for a in range(1, n - 1))


def verify_all(n_max: int, budget: float | None = None, jobs: int = 1):
    """Run every closed-form-versus-enumeration comparison; see :mod:`ap3lattice.verify`."""
    from .verify import verify_all as run

    return run(n_max, budget=budget, jobs=jobs)
