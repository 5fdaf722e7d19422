"""Index patterns of three-term arithmetic progressions and their consistency.

A :class:`Triple` ``(i, j, k)`` with ``1 <= i < j < k <= n`` asks that
``x_i, x_j, x_k`` be an arithmetic progression inside some strictly
increasing integer sequence ``x_1 < ... < x_n``. Two triples are consistent
when a single sequence serves both; a :class:`TripleSystem` is valid when
its members are pairwise consistent.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import BudgetExceeded, DomainError
from .feasibility import find_point

#: refuse brute-force searches whose naive space 2**C(n,3) exceeds this
DEFAULT_SEARCH_BUDGET = 2**40


@dataclass(frozen=True, order=True)
class Triple:
    i: int
    j: int
    k: int
    n: int

    def __post_init__(self):
        if not (1 <= self.i < self.j < self.k <= self.n):
            raise DomainError(f"need 1 <= i < j < k <= n, got {self}")

    def __iter__(self):
        return iter((self.i, self.j, self.k))

    def __str__(self):
        return f"{self.i},{self.j},{self.k}"

    @classmethod
    def parse(cls, text: str, n: int) -> "Triple":
        i, j, k = (int(part) for part in text.split(","))
        return cls(i, j, k, n)


@dataclass(frozen=True)
class TripleSystem:
    """An immutable set of triples sharing the ambient size ``n``.

    Members are kept sorted lexicographically.
    """

    n: int
    triples: tuple[Triple, ...] = ()

    def __post_init__(self):
        ts = tuple(sorted(set(self.triples)))
        for t in ts:
            if t.n != self.n:
                raise DomainError(f"triple {t} does not live in [{self.n}]")
        object.__setattr__(self, "triples", ts)

    @classmethod
    def of(cls, n: int, *patterns: tuple[int, int, int]) -> "TripleSystem":
        return cls(n, tuple(Triple(i, j, k, n) for i, j, k in patterns))

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __contains__(self, t):
        return t in self.triples

    def __str__(self):
        return ";".join(str(t) for t in self.triples)

    @classmethod
    def parse(cls, text: str, n: int) -> "TripleSystem":
        """Parse the ``"1,2,3;1,3,4"`` form; an empty string is the empty system."""
        parts = [p for p in text.replace(" ", "").split(";") if p]
        return cls(n, tuple(Triple.parse(p, n) for p in parts))

    def to_json(self) -> dict:
        return {"n": self.n, "triples": [list(t) for t in self.triples]}

    @classmethod
    def from_json(cls, data: dict | str) -> "TripleSystem":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.of(data["n"], *(tuple(t) for t in data["triples"]))


@dataclass(frozen=True)
class Realization:
    x: tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.x, self.x[1:])):
            raise DomainError("realization must be strictly increasing")

    def realizes(self, system: TripleSystem) -> bool:
        x = (None,) + self.x
        return len(self.x) == system.n and all(x[i] + x[k] == 2 * x[j] for i, j, k in system)

    def __str__(self):
        return " ".join(str(v) for v in self.x)


def all_triples(n: int) -> list[Triple]:
    """Every triple of ``[n]`` in lexicographic order."""
    return [Triple(i, j, k, n) for i, j, k in combinations(range(1, n + 1), 3)]


def is_consistent(t1: Triple, t2: Triple) -> bool:
    """Pairwise consistency via the crossing-pattern criterion.

    Distinct triples clash exactly when one is weakly "nested inside" the
    other: ``i <= i', j >= j', k <= k'`` or the mirror image. A triple is
    consistent with itself.
    """
    if t1.n != t2.n:
        raise DomainError("triples live in different [n]")
    if t1 == t2:
        return True
    i, j, k = t1.i, t1.j, t1.k
    a, b, c = t2.i, t2.j, t2.k
    if i <= a and j >= b and k <= c:
        return False
    if i >= a and j <= b and k >= c:
        return False
    return True


def realize(system: TripleSystem) -> Realization | None:
    """Find integers ``x_1 < ... < x_n`` carrying every triple as an AP.

    Works on the gaps ``y_t = x_{t+1} - x_t >= 1``; each triple gives one
    homogeneous equation in the gaps, so any rational solution scales to an
    integer one. Returns ``None`` when the system is infeasible.
    """
    n = system.n
    nv = max(n - 1, 0)
    eqs = []
    for i, j, k in system:
        row = [0] * nv
        for t in range(j, k):
            row[t - 1] += 1
        for t in range(i, j):
            row[t - 1] -= 1
        eqs.append((row, 0))
    ineqs = [([1 if u == t else 0 for u in range(nv)], 1) for t in range(nv)]
    gaps = find_point(nv, eqs, ineqs)
    if gaps is None:
        return None
    scale = math.lcm(*(g.denominator for g in gaps)) if gaps else 1
    xs = [1]
    for g in gaps:
        xs.append(xs[-1] + int(g * scale))
    witness = Realization(tuple(xs))
    if not witness.realizes(system):  # pragma: no cover - would be an oracle bug
        raise AssertionError(f"oracle produced a bad witness {witness} for {system}")
    return witness


def is_valid(system: TripleSystem) -> bool:
    return all(is_consistent(a, b) for a, b in combinations(system.triples, 2))


def _compat_masks(ts: list[Triple]) -> list[int]:
    masks = []
    for a, t in enumerate(ts):
        m = 0
        for b in range(a + 1, len(ts)):
            if is_consistent(t, ts[b]):
                m |= 1 << b
        masks.append(m)
    return masks


def _guard(n: int, budget: int | None, force: bool) -> None:
    space = 2 ** math.comb(n, 3)
    limit = DEFAULT_SEARCH_BUDGET if budget is None else budget
    if space > limit and not force:
        raise BudgetExceeded(f"2^C({n},3) = 2^{math.comb(n, 3)} exceeds the search budget; pass force=True")


def enumerate_valid(n: int, *, budget: int | None = None, force: bool = False) -> Iterator[TripleSystem]:
    """Yield every valid subset of the triples of ``[n]`` exactly once.

    Depth-first search that only ever appends a triple larger than the
    current maximum and consistent with everything chosen so far. Output is
    in lexicographic order of the sorted member lists, starting with the
    empty set.
    """
    if n < 1:
        raise DomainError("n must be positive")
    _guard(n, budget, force)
    ts = all_triples(n)
    compat = _compat_masks(ts)
    full = (1 << len(ts)) - 1
    stack: list[tuple[tuple[int, ...], int]] = [((), full)]
    while stack:
        chosen, cand = stack.pop()
        yield TripleSystem(n, tuple(ts[c] for c in chosen))
        children = []
        while cand:
            low = cand & -cand
            s = low.bit_length() - 1
            children.append((chosen + (s,), compat[s] & cand))
            cand ^= low
        stack.extend(reversed(children))


def valid_size_histogram(n: int, *, budget: int | None = None, force: bool = False) -> list[int]:
    """``h[s]`` = number of valid subsets with ``s`` members, by the same search."""
    if n < 1:
        raise DomainError("n must be positive")
    _guard(n, budget, force)
    ts = all_triples(n)
    compat = _compat_masks(ts)
    hist = [0] * (len(ts) + 1)
    stack = [(0, (1 << len(ts)) - 1)]
    while stack:
        size, cand = stack.pop()
        hist[size] += 1
        while cand:
            low = cand & -cand
            s = low.bit_length() - 1
            cand ^= low
            stack.append((size + 1, compat[s] & cand))
    while len(hist) > 1 and hist[-1] == 0:
        hist.pop()
    return hist


def count_valid(n: int, **kw) -> int:
    return sum(valid_size_histogram(n, **kw))


def max_valid_stats(n: int, **kw) -> tuple[int, int]:
    """``(sigma, g)``: the largest valid size and how many subsets attain it."""
    hist = valid_size_histogram(n, **kw)
    sigma = len(hist) - 1
    return sigma, hist[sigma]


def propp_map(t: Triple) -> tuple[int, int, int]:
    """Send ``(i, j, k)`` to ``(i, n+1-j, k)``, a point of the poset P_n."""
    return (t.i, t.n + 1 - t.j, t.k)


def propp_inverse(point: tuple[int, int, int], n: int) -> Triple:
    i, jj, k = point
    return Triple(i, n + 1 - jj, k, n)

