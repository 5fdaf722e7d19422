"""Staircase semistandard tableaux and the lattices built from them.

Conventions
-----------
Entries are addressed 1-based as ``(a, b)`` = (row, column) in English
notation. ``entry`` also answers the virtual boundary cells
``T[a, 0] = a`` and ``T[0, b] = 0``; they are never stored.

``M(n)`` is the set of SSYT of staircase shape ``(n-2, ..., 1)`` with
entries at most ``n-1``. ``K(n)`` is the subset with the largest possible
number of reducible entries. Every ``T`` in ``K(n)`` splits into a left
part (columns ``1..h`` with ``h = (n-1)//2``) and a right part (the
remaining columns, reindexed from 1, a staircase with ``n//2 - 1``
columns).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Literal, Sequence

from .errors import BudgetExceeded, DomainError
from .poset import FinitePoset, join_irreducibles

CornerLabel = Literal[1, 2]

#: refuse to stream more tableaux than this unless forced
DEFAULT_ENUM_BUDGET = 10**7


# shapes ---------------------------------------------------------------------


@dataclass(frozen=True)
class Shape:
    """A Young diagram given by its (weakly decreasing) row lengths."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(r for r in self.rows if r > 0)
        if any(b > a for a, b in zip(rows, rows[1:])):
            raise DomainError(f"row lengths must weakly decrease: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def staircase(cls, m: int) -> "Shape":
        """``(m-1, m-2, ..., 1)``; empty for ``m <= 1``."""
        return cls(tuple(range(m - 1, 0, -1)))

    @classmethod
    def left_half(cls, n: int) -> "Shape":
        """Columns ``1..(n-1)//2`` of the staircase ``(n-2, ..., 1)``."""
        h = (n - 1) // 2
        return cls(tuple(min(h, n - 1 - a) for a in range(1, n - 1)))

    @classmethod
    def rectangle(cls, nrows: int, ncols: int) -> "Shape":
        return cls((ncols,) * nrows if ncols > 0 else ())

    @property
    def columns(self) -> tuple[int, ...]:
        """Column heights."""
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r > b) for b in range(self.rows[0]))

    def cells(self) -> list[tuple[int, int]]:
        """All ``(a, b)`` in column-major order."""
        return [(a, b + 1) for b, h in enumerate(self.columns) for a in range(1, h + 1)]

    def __contains__(self, cell) -> bool:
        a, b = cell
        return 1 <= a <= len(self.rows) and 1 <= b <= self.rows[a - 1]

    def __len__(self):
        return sum(self.rows)


# tableaux -------------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """Immutable integer filling of a Young diagram.

    ``<=`` and ``<`` are the componentwise partial order and require equal
    shapes.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows if len(r))
        Shape(tuple(len(r) for r in rows))
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "Tableau":
        nrows = max((len(c) for c in columns), default=0)
        return cls(tuple(tuple(c[a] for c in columns if len(c) > a) for a in range(nrows)))

    @classmethod
    def from_flat(cls, shape: Shape, flat: Sequence[int]) -> "Tableau":
        """Inverse of :meth:`flat` (column-major entries)."""
        cols, t = [], 0
        for h in shape.columns:
            cols.append(flat[t:t + h])
            t += h
        return cls.from_columns(cols)

    @classmethod
    def filled(cls, shape: Shape, fn) -> "Tableau":
        return cls(tuple(tuple(fn(a, b) for b in range(1, r + 1)) for a, r in enumerate(shape.rows, 1)))

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(r) for r in self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[b] for r in self.rows if len(r) > b) for b in range(len(self.rows[0]) if self.rows else 0)]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for c in self.columns() for v in c)

    def entry(self, a: int, b: int) -> int:
        """Entry at ``(a, b)``, with the virtual boundary ``T[a,0]=a``, ``T[0,b]=0``."""
        if b == 0:
            return a
        if a == 0:
            return 0
        return self.rows[a - 1][b - 1]

    __getitem__ = lambda self, ab: self.entry(*ab)  # noqa: E731

    def total(self) -> int:
        return sum(map(sum, self.rows))

    def _same_shape(self, other: "Tableau"):
        if tuple(map(len, self.rows)) != tuple(map(len, other.rows)):
            raise DomainError("tableaux have different shapes")

    def __le__(self, other: "Tableau") -> bool:
        self._same_shape(other)
        return all(x <= y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))

    def __lt__(self, other: "Tableau") -> bool:
        return self != other and self <= other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def to_json(self) -> dict:
        return {"shape": [len(r) for r in self.rows], "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Tableau":
        if isinstance(data, str):
            data = json.loads(data)
        t = cls(tuple(tuple(r) for r in data["rows"]))
        if [len(r) for r in t.rows] != list(data.get("shape", [len(r) for r in t.rows])):
            raise DomainError("rows do not match the declared shape")
        return t

    def __str__(self):
        if not self.rows:
            return "."
        w = max(len(str(v)) for r in self.rows for v in r)
        return "\n".join(" ".join(str(v).rjust(w) for v in r) for r in self.rows)


def join(t1: Tableau, t2: Tableau) -> Tableau:
    """Entrywise maximum."""
    t1._same_shape(t2)
    return Tableau(tuple(tuple(map(max, r, s)) for r, s in zip(t1.rows, t2.rows)))


def meet(t1: Tableau, t2: Tableau) -> Tableau:
    """Entrywise minimum."""
    t1._same_shape(t2)
    return Tableau(tuple(tuple(map(min, r, s)) for r, s in zip(t1.rows, t2.rows)))


def add(t: Tableau, a: int, b: int, k: int) -> Tableau:
    """Add ``k`` to every entry weakly south-east of ``(a, b)``."""
    if (a, b) not in t.shape:
        raise DomainError(f"cell {(a, b)} is not in the shape")
    return Tableau(tuple(
        tuple(v + k if (i >= a and j >= b) else v for j, v in enumerate(r, 1))
        for i, r in enumerate(t.rows, 1)
    ))


# the lattice M(n) -----------------------------------------------------------


def minimal_tableau(n: int) -> Tableau:
    """Bottom of ``M(n)``: entry ``a`` in every cell of row ``a``."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return Tableau.filled(Shape.staircase(n - 1), lambda a, b: a)


def _require_shape(t: Tableau, shape: Shape):
    if t.shape != shape:
        raise DomainError(f"expected shape {shape.rows}, got {t.shape.rows}")


def in_Mn(t: Tableau, n: int) -> bool:
    """SSYT of shape ``(n-2, ..., 1)`` with entries in ``1..n-1``."""
    _require_shape(t, Shape.staircase(n - 1))
    if not t.rows:
        return True
    if t.entry(1, 1) < 1:
        return False
    for a, b in t.shape.cells():
        if b >= 2 and t.entry(a, b) < t.entry(a, b - 1):
            return False
        if a >= 2 and t.entry(a, b) <= t.entry(a - 1, b):
            return False
    return all(t.entry(n - 1 - b, b) <= n - 1 for b in range(1, n - 1))


def _mn_flats(n: int) -> Iterator[tuple[int, ...]]:
    """Column-major entry tuples of ``M(n)`` in lexicographic order."""
    m = n - 1
    cells = Shape.staircase(m).cells()
    pos = {c: t for t, c in enumerate(cells)}
    plan = []
    for a, b in cells:
        length = m - b
        plan.append((pos.get((a, b - 1), -1), pos.get((a - 1, b), -1), a, m - (length - a)))
    vals = [0] * len(cells)
    npos = len(cells)

    def rec(p):
        if p == npos:
            yield tuple(vals)
            return
        left, up, row, upper = plan[p]
        lo = max(vals[left] if left >= 0 else row, (vals[up] if up >= 0 else 0) + 1)
        for v in range(lo, upper + 1):
            vals[p] = v
            yield from rec(p + 1)

    yield from rec(0)


def enumerate_Mn(n: int, *, budget: int = DEFAULT_ENUM_BUDGET, force: bool = False) -> Iterator[Tableau]:
    """Every element of ``M(n)`` once, generated column by column.

    Each cell ranges over ``[max(left, above + 1), n - 1 - (cells below it)]``,
    so no partial filling is ever discarded.
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    if 2 ** math.comb(n - 1, 2) > budget and not force:
        raise BudgetExceeded(f"M({n}) has 2^{math.comb(n - 1, 2)} elements")
    shape = Shape.staircase(n - 1)
    for flat in _mn_flats(n):
        yield Tableau.from_flat(shape, flat)


def reducible_entries(t: Tableau, n: int) -> set[tuple[int, int]]:
    """Cells whose entry can drop by one while staying in ``M(n)``."""
    if not in_Mn(t, n):
        raise DomainError("tableau is not in M(n)")
    return {
        (a, b) for a, b in t.shape.cells()
        if t.entry(a, b) - t.entry(a, b - 1) >= 1 and t.entry(a, b) - t.entry(a - 1, b) >= 2
    }


def has_unique_reducible_at(t: Tableau, n: int, a: int, b: int) -> bool:
    return reducible_entries(t, n) == {(a, b)}


def max_reducible(n: int) -> int:
    """Upper bound ``sum_b min(b, n-1-b)`` on reducible entries in ``M(n)``."""
    return sum(min(b, n - 1 - b) for b in range(1, n - 1))


def mn_rank(t: Tableau, n: int) -> int:
    return t.total() - math.comb(n, 3)


# the sublattice K(n) --------------------------------------------------------


def _half(n: int) -> int:
    return (n - 1) // 2


def _kn_left_ok(t: Tableau, n: int, *, diagonal: bool = True) -> bool:
    """Conditions on columns ``1..h``: fixed top, then steps of 1 or 2 with
    exactly ``b`` twos in column ``b``; optionally the diagonal property."""
    h, k = _half(n), n // 2
    for b in range(1, h + 1):
        for a in range(1, h - b + 1):
            if t.entry(a, b) != a:
                return False
        steps = [t.entry(a, b) - t.entry(a - 1, b) for a in range(h - b + 1, n - b)]
        if len(steps) != k or any(s not in (1, 2) for s in steps) or steps.count(2) != b:
            return False
    if diagonal:
        for b in range(1, h):
            for a in range(h - b + 1, n - b):
                if t.entry(a, b) - t.entry(a - 1, b + 1) > 1:
                    return False
    return True


def in_Kn(t: Tableau, n: int) -> bool:
    """Membership in ``K(n)`` by explicit entry conditions."""
    if n < 2 or t.shape != Shape.staircase(n - 1):
        return False
    if not _kn_left_ok(t, n):
        return False
    h = _half(n)
    for b in range(h + 1, n - 1):
        for a in range(1, n - b):
            v = t.entry(a, b)
            if v > n - 1 or v - t.entry(a - 1, b) < 2 or v - t.entry(a, b - 1) < 1:
                return False
    return True


def in_KnL(t: Tableau, n: int) -> bool:
    return t.shape == Shape.left_half(n) and _kn_left_ok(t, n)


def in_An(t: Tableau, n: int) -> bool:
    """Left-half tableaux meeting the column conditions but not necessarily the diagonal one."""
    return t.shape == Shape.left_half(n) and _kn_left_ok(t, n, diagonal=False)


def in_KnR(t: Tableau, n: int, c: int) -> bool:
    k = n // 2
    if c not in (1, 2) or t.shape != Shape.staircase(k):
        return False
    if not t.rows:
        return True
    if t.entry(1, 1) < c + 1:
        return False
    for a, b in t.shape.cells():
        if b >= 2 and t.entry(a, b) - t.entry(a, b - 1) < 1:
            return False
        if a >= 2 and t.entry(a, b) - t.entry(a - 1, b) < 2:
            return False
    return all(t.entry(k - b, b) <= n - 1 for b in range(1, k))


def corner_label(tl: Tableau, n: int) -> int:
    """Last entry of the first row of a left half (always 1 or 2)."""
    _require_shape(tl, Shape.left_half(n))
    c = tl.entry(1, _half(n))
    if c not in (1, 2):
        raise DomainError(f"corner entry {c} is neither 1 nor 2")
    return c


def split(t: Tableau, n: int) -> tuple[Tableau, Tableau]:
    """Cut after column ``(n-1)//2``; the right part is reindexed from column 1."""
    if not in_Kn(t, n):
        raise DomainError("split expects an element of K(n)")
    return _split_raw(t, n)


def _split_raw(t: Tableau, n: int) -> tuple[Tableau, Tableau]:
    h = _half(n)
    cols = t.columns()
    return Tableau.from_columns(cols[:h]), Tableau.from_columns(cols[h:])


def glue(tl: Tableau, tr: Tableau, n: int) -> Tableau:
    """Inverse of :func:`split`; both halves must carry the same corner label."""
    if not in_KnL(tl, n):
        raise DomainError("left part is not in the left-half family")
    c = corner_label(tl, n)
    if not in_KnR(tr, n, c):
        raise DomainError(f"right part does not accept corner label {c}")
    return Tableau.from_columns(tl.columns() + tr.columns())


def _left_columns(n: int, diagonal: bool) -> Iterator[list[tuple[int, ...]]]:
    h, k = _half(n), n // 2
    options = []
    for b in range(1, h + 1):
        opts = []
        for twos in combinations(range(k), b):
            col = list(range(1, h - b + 1))
            v = h - b
            for s in range(k):
                v += 2 if s in twos else 1
                col.append(v)
            opts.append(tuple(col))
        options.append(opts)

    def rec(b, acc):
        if b == h:
            yield list(acc)
            return
        for col in options[b]:
            if diagonal and b > 0:
                prev = acc[-1]  # column b (1-based) against the new column b+1
                if any(prev[a - 1] - (col[a - 2] if a >= 2 else 0) > 1 for a in range(h - b + 1, n - b)):
                    continue
            acc.append(col)
            yield from rec(b + 1, acc)
            acc.pop()

    yield from rec(0, [])


def enumerate_KnL(n: int) -> list[Tableau]:
    """All left halves, sorted by column-major entries."""
    return sorted((Tableau.from_columns(c) for c in _left_columns(n, True)), key=Tableau.flat)


def enumerate_An(n: int) -> list[Tableau]:
    return sorted((Tableau.from_columns(c) for c in _left_columns(n, False)), key=Tableau.flat)


def enumerate_KnR(n: int, c: int) -> list[Tableau]:
    """All right halves accepting corner label ``c``, sorted."""
    if c not in (1, 2):
        raise DomainError("corner label must be 1 or 2")
    k = n // 2
    shape = Shape.staircase(k)
    cells = shape.cells()
    pos = {x: t for t, x in enumerate(cells)}
    heights = shape.columns
    vals = [0] * len(cells)
    out = []

    def rec(p):
        if p == len(cells):
            out.append(Tableau.from_flat(shape, vals))
            return
        a, b = cells[p]
        lo = c + 1
        if b >= 2:
            lo = max(lo, vals[pos[(a, b - 1)]] + 1)
        if a >= 2:
            lo = max(lo, vals[pos[(a - 1, b)]] + 2)
        hi = n - 1 - 2 * (heights[b - 1] - a)
        for v in range(lo, hi + 1):
            vals[p] = v
            rec(p + 1)

    rec(0)
    return sorted(out, key=Tableau.flat)


def enumerate_Kn(n: int) -> list[Tableau]:
    """``K(n)`` built from compatible halves, sorted by column-major entries."""
    if n < 2:
        raise DomainError("n must be at least 2")
    right = {c: enumerate_KnR(n, c) for c in (1, 2)}
    out = []
    for tl in enumerate_KnL(n):
        c = corner_label(tl, n)
        lcols = tl.columns()
        for tr in right[c]:
            out.append(Tableau.from_columns(lcols + tr.columns()))
    return sorted(out, key=Tableau.flat)


def enumerate_Kn_filtered(n: int, **kw) -> list[Tableau]:
    """``K(n)`` as the elements of ``M(n)`` with the maximum number of reducible entries."""
    bound = max_reducible(n)
    return [t for t in enumerate_Mn(n, **kw) if len(reducible_entries(t, n)) == bound]


def canonical_min_right(m: int, primed: bool = False) -> Tableau:
    """Staircase with ``m-1`` columns filled by ``2a + b`` (or ``2a + b - 1`` if primed)."""
    if m < 1:
        raise DomainError("m must be positive")
    off = 1 if primed else 0
    return Tableau.filled(Shape.staircase(m), lambda a, b: 2 * a + b - off)


# left-half bijection ----------------------------------------------------------


def theta1(tl: Tableau, n: int) -> Tableau:
    """Column steps below the fixed top part, packed into a ``n//2 x (n-1)//2`` rectangle."""
    if not in_An(tl, n):
        raise DomainError("theta1 expects a left half with valid column steps")
    h = _half(n)
    cols = []
    for b in range(1, h + 1):
        cols.append(tuple(tl.entry(a, b) - tl.entry(a - 1, b) for a in range(h - b + 1, n - b)))
    return Tableau.from_columns(cols)


def _ones_rows(col: Sequence[int]) -> tuple[int, ...]:
    """Row indices (1-based) of the 1s of a column."""
    return tuple(i for i, v in enumerate(col, 1) if v == 1)


def count_ones(col: Sequence[int], i: int) -> int:
    """Number of 1s among the first ``i`` entries."""
    return sum(1 for v in col[:i] if v == 1)


def row_of_one(col: Sequence[int], a: int) -> int:
    """Row index of the ``a``-th 1."""
    return _ones_rows(col)[a - 1]


def theta2(tp: Tableau, n: int) -> Tableau:
    """Column ``b`` of the result lists the rows holding the 1s in column ``b``."""
    h, k = _half(n), n // 2
    if tp.shape != Shape.rectangle(k, h):
        raise DomainError("theta2 expects the step rectangle")
    cols = tp.columns()
    for b, col in enumerate(cols, 1):
        if any(v not in (1, 2) for v in col) or col.count(2) != b:
            raise DomainError(f"column {b} must hold exactly {b} twos")
    return Tableau.from_columns([_ones_rows(col) for col in cols if _ones_rows(col)])


def theta(tl: Tableau, n: int) -> Tableau:
    return theta2(theta1(tl, n), n)


def theta_inverse(t: Tableau, n: int) -> Tableau:
    h, k = _half(n), n // 2
    _require_shape(t, Shape.staircase(k))
    cols = t.columns()
    out = []
    for b in range(1, h + 1):
        ones = set(cols[b - 1]) if b - 1 < len(cols) else set()
        if len(ones) != k - b or any(not 1 <= r <= k for r in ones):
            raise DomainError("not in the image of theta")
        col = list(range(1, h - b + 1))
        v = h - b
        for i in range(1, k + 1):
            v += 1 if i in ones else 2
            col.append(v)
        out.append(tuple(col))
    return Tableau.from_columns(out)


def right_iso(t: Tableau, m: int, parity: Literal["even", "odd"]) -> Tableau:
    """``M(m+1)`` onto the right halves for ``n = 2m`` (even) or ``2m+1`` (odd).

    Adds ``a + b - 1`` (even) or ``a + b`` (odd) to the entry at ``(a, b)``.
    """
    if not in_Mn(t, m + 1):
        raise DomainError("right_iso expects an element of M(m+1)")
    off = {"even": -1, "odd": 0}[parity]
    return Tableau.filled(t.shape, lambda a, b: t.entry(a, b) + a + b + off)


def right_iso_inverse(t: Tableau, m: int, parity: Literal["even", "odd"]) -> Tableau:
    off = {"even": -1, "odd": 0}[parity]
    return Tableau.filled(t.shape, lambda a, b: t.entry(a, b) - a - b - off)


# join-irreducibles of K(n) -----------------------------------------------------


class UClass(enum.Enum):
    LEFT1 = "left1"
    LEFT2 = "left2"
    RIGHT1 = "right1"
    RIGHT2 = "right2"

    @property
    def side(self) -> str:
        return self.value[:-1]


def tableau_poset(ts: Sequence[Tableau]) -> FinitePoset:
    """Componentwise order on equally shaped tableaux (labels are the tableaux)."""
    if not ts:
        return FinitePoset([], [])
    return FinitePoset.from_vectors([t.flat() for t in ts], list(ts))


class HalfStructure:
    """Cached left/right half families of ``K(n)`` with their join-irreducibles."""

    def __init__(self, n: int):
        self.n = n
        self.left = enumerate_KnL(n)
        self.left_poset = tableau_poset(self.left)
        self.left_min = _unique_min(self.left_poset)
        self.left_ji = _ji_labels(self.left_poset)
        self.right = {c: enumerate_KnR(n, c) for c in (1, 2)}
        self.right_poset = {c: tableau_poset(v) for c, v in self.right.items()}
        self.right_min = {c: _unique_min(p) for c, p in self.right_poset.items()}
        self.right_ji = {c: _ji_labels(p) for c, p in self.right_poset.items()}
        self.left_min_label = corner_label(self.left_min, n)

    def kn_minimum(self) -> Tableau:
        c = self.left_min_label
        return Tableau.from_columns(self.left_min.columns() + self.right_min[c].columns())


def _unique_min(p: FinitePoset):
    mins = p.minimal()
    if len(mins) != 1:
        raise DomainError(f"expected a unique minimum, found {len(mins)}")
    return p.labels[mins[0]]


def _ji_labels(p: FinitePoset) -> frozenset:
    if p.size <= 1:
        return frozenset()
    sub, _ = join_irreducibles(p)
    return frozenset(sub.labels)


@lru_cache(maxsize=None)
def half_structure(n: int) -> HalfStructure:
    return HalfStructure(n)


def classify_Un(t: Tableau, n: int) -> UClass | None:
    """Which kind of join-irreducible of ``K(n)`` ``t`` is, or ``None``.

    Left kinds: the left half is join-irreducible among left halves and the
    right half is the minimum for its corner label. Right kinds: the left
    half is the minimum and the right half is join-irreducible; it is
    ``RIGHT2`` when the right half lies below the minimum right half for
    label 2.
    """
    if not in_Kn(t, n):
        raise DomainError("classify_Un expects an element of K(n)")
    hs = half_structure(n)
    tl, tr = _split_raw(t, n)
    c = corner_label(tl, n)
    if tl in hs.left_ji and tr == hs.right_min[c]:
        return UClass.LEFT1 if c == 1 else UClass.LEFT2
    if tl == hs.left_min and tr in hs.right_ji[c]:
        return UClass.RIGHT2 if tr <= hs.right_min[2] else UClass.RIGHT1
    return None


def un_elements(n: int) -> dict[UClass, list[Tableau]]:
    """Join-irreducibles of ``K(n)`` assembled from the halves, by class."""
    hs = half_structure(n)
    out: dict[UClass, list[Tableau]] = {u: [] for u in UClass}
    for tl in sorted(hs.left_ji, key=Tableau.flat):
        c = corner_label(tl, n)
        t = Tableau.from_columns(tl.columns() + hs.right_min[c].columns())
        out[UClass.LEFT1 if c == 1 else UClass.LEFT2].append(t)
    c0 = hs.left_min_label
    for tr in sorted(hs.right_ji[c0], key=Tableau.flat):
        t = Tableau.from_columns(hs.left_min.columns() + tr.columns())
        out[UClass.RIGHT2 if tr <= hs.right_min[2] else UClass.RIGHT1].append(t)
    return out


def kn_rank(t: Tableau, n: int) -> int:
    """Entry sum above the minimum of ``K(n)``."""
    return t.total() - half_structure(n).kn_minimum().total()


def iter_json(ts: Iterable[Tableau]) -> Iterator[str]:
    for t in ts:
        yield json.dumps(t.to_json())
