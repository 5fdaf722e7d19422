"""The concrete posets behind valid triple systems.

``P(n)`` is the set of points ``(i, j, k)`` of ``[n]^3`` with
``i + j < n + 1 < j + k``, ordered componentwise; its antichains are the
valid systems (via :func:`~ap3lattice.triples.propp_map`). ``Phi(n)`` is
the set of ``(a, b, k)`` with ``1 <= k <= b <= n-1-a`` ordered by
``a >= a', b >= b', k <= k'``. ``phi`` is an order isomorphism
``Phi(n) -> P(n)`` and ``psi`` sends ``Phi(n)`` onto the join-irreducibles
``Q(n)`` of the tableau lattice ``M(n)``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import DomainError
from .poset import FinitePoset
from .tableaux import Tableau, add, join, minimal_tableau, tableau_poset
from .triples import TripleSystem, propp_inverse


class PnElement(NamedTuple):
    i: int
    j: int
    k: int


class PhiElement(NamedTuple):
    a: int
    b: int
    k: int


def is_Pn_element(p, n: int) -> bool:
    i, j, k = p
    return all(1 <= v <= n for v in p) and i + j < n + 1 < j + k


def is_Phi_element(e, n: int) -> bool:
    a, b, k = e
    return a >= 1 and 1 <= k <= b <= n - 1 - a


def pn_elements(n: int) -> list[PnElement]:
    """Points of ``P(n)`` in lexicographic order."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return [PnElement(i, j, k)
            for i in range(1, n + 1) for j in range(1, n + 1) for k in range(1, n + 1)
            if i + j < n + 1 < j + k]


def phin_elements(n: int) -> list[PhiElement]:
    """Points of ``Phi(n)`` in lexicographic order."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return [PhiElement(a, b, k)
            for a in range(1, n) for b in range(1, n - a) for k in range(1, b + 1)]


def build_Pn(n: int) -> FinitePoset:
    els = pn_elements(n)
    if not els:
        return FinitePoset([], [])
    return FinitePoset.from_vectors(els, els)


def build_Phin(n: int) -> FinitePoset:
    els = phin_elements(n)
    if not els:
        return FinitePoset([], [])
    return FinitePoset.from_vectors([(-a, -b, k) for a, b, k in els], els)


def phi(e, n: int) -> PnElement:
    if not is_Phi_element(e, n):
        raise DomainError(f"{tuple(e)} is not in Phi({n})")
    a, b, k = e
    return PnElement(k, n - b, n + 1 - a)


def phi_inverse(p, n: int) -> PhiElement:
    if not is_Pn_element(p, n):
        raise DomainError(f"{tuple(p)} is not in P({n})")
    i, j, ell = p
    return PhiElement(n + 1 - ell, n - j, i)


def psi(e, n: int) -> Tableau:
    """``add(minimal_tableau(n), a, b, k)``: a join-irreducible of ``M(n)``."""
    if not is_Phi_element(e, n):
        raise DomainError(f"{tuple(e)} is not in Phi({n})")
    a, b, k = e
    return add(minimal_tableau(n), a, b, k)


def build_Qn(n: int) -> FinitePoset:
    """Join-irreducibles of ``M(n)`` (the images of ``psi``), componentwise order."""
    return tableau_poset([psi(e, n) for e in phin_elements(n)])


def ideal_to_tableau(ideal: Iterable, n: int) -> Tableau:
    """Birkhoff map ``J(P(n)) -> M(n)``: join of ``psi(phi^-1(x))`` over the ideal."""
    t = minimal_tableau(n)
    for p in ideal:
        t = join(t, psi(phi_inverse(p, n), n))
    return t


def antichain_to_system(antichain: Iterable, n: int) -> TripleSystem:
    """Read an antichain of ``P(n)`` as a system of triples."""
    return TripleSystem(n, tuple(propp_inverse(tuple(p), n) for p in antichain))
