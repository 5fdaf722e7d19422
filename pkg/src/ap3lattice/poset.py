"""Finite posets and lattices on index sets ``0..N-1``.

Orders are stored as Python-int bitsets: ``down[i]`` has bit ``j`` set iff
``j <= i``. Labels are opaque payloads carried along for display and
export, so the same engine serves triple posets, ideal lattices and
tableau lattices.
"""

from __future__ import annotations

import heapq
import json
import random
import sys
import time
from typing import Callable, Hashable, Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import BudgetExceeded, DomainError, IsomorphismUndecided
from .polynomial import RankPolynomial

#: lattices up to this size get every join/meet checked; larger ones are sampled
EAGER_LATTICE_CHECK = 2048
#: default cap on the number of ideals materialized as a poset
DEFAULT_IDEAL_BUDGET = 10**7


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """An immutable finite partial order.

    Build one with :meth:`from_covers`, :meth:`from_relation` or
    :meth:`from_vectors` rather than calling the constructor directly.
    """

    def __init__(self, down: Sequence[int], labels: Sequence | None = None, *, validate: bool = True):
        self.size = len(down)
        self._down = list(down)
        self.labels = list(labels) if labels is not None else list(range(self.size))
        if len(self.labels) != self.size:
            raise DomainError("label count does not match poset size")
        if validate:
            self._validate()
        up = [0] * self.size
        for i, d in enumerate(self._down):
            for j in _bits(d):
                up[j] |= 1 << i
        self._up = up
        self._lower_covers: list[int] | None = None
        self._index: dict | None = None
        self._bounds: tuple[dict, dict] | None = None

    # construction -------------------------------------------------------

    @classmethod
    def from_covers(cls, size: int, covers: Iterable[tuple[int, int]], labels=None) -> "FinitePoset":
        """Poset generated by ``(lower, upper)`` pairs; must be acyclic."""
        below = [0] * size
        for a, b in covers:
            if a == b:
                raise DomainError("a cover cannot be a loop")
            below[b] |= 1 << a
        down = [0] * size
        for v in _topological(size, below):
            acc = 1 << v
            for u in _bits(below[v]):
                acc |= down[u]
            down[v] = acc
        return cls(down, labels, validate=True)

    @classmethod
    def from_relation(cls, elements: Sequence, leq: Callable[[object, object], bool]) -> "FinitePoset":
        """Poset on ``elements`` (which become the labels) under ``leq``."""
        n = len(elements)
        down = [0] * n
        for j, y in enumerate(elements):
            acc = 0
            for i, x in enumerate(elements):
                if leq(x, y):
                    acc |= 1 << i
            down[j] = acc
        return cls(down, elements)

    @classmethod
    def from_vectors(cls, vectors, labels=None, *, validate: bool = False) -> "FinitePoset":
        """Componentwise order on the rows of an integer matrix.

        Componentwise order is always a preorder; with distinct rows it is a
        partial order, so validation is off by default.
        """
        V = np.asarray(vectors, dtype=np.int64)
        n = V.shape[0]
        if n and len({tuple(r) for r in V.tolist()}) != n:
            raise DomainError("duplicate vectors do not form a partial order")
        down = [0] * n
        chunk = max(1, 2_000_000 // max(1, n * V.shape[1])) if V.ndim == 2 else 1
        for start in range(0, n, chunk):
            block = V[start:start + chunk]
            # le[r, i] = V[i] <= block[r]
            le = (V[None, :, :] <= block[:, None, :]).all(axis=2) if n else np.zeros((0, 0), bool)
            packed = np.packbits(le, axis=1, bitorder="little")
            for r in range(block.shape[0]):
                down[start + r] = int.from_bytes(packed[r].tobytes(), "little")
        return cls(down, labels, validate=validate)

    @classmethod
    def chain(cls, k: int) -> "FinitePoset":
        return cls([(1 << (i + 1)) - 1 for i in range(k)])

    @classmethod
    def antichain(cls, k: int) -> "FinitePoset":
        return cls([1 << i for i in range(k)])

    @classmethod
    def boolean_lattice(cls, k: int) -> "FinitePoset":
        elems = list(range(1 << k))
        return cls.from_relation(elems, lambda a, b: a & ~b == 0)

    def _validate(self):
        n = self.size
        for i, d in enumerate(self._down):
            if not (d >> i) & 1:
                raise DomainError(f"relation is not reflexive at {i}")
            if d >> n:
                raise DomainError("relation mentions elements outside the poset")
        for i, d in enumerate(self._down):
            for j in _bits(d & ~(1 << i)):
                if (self._down[j] >> i) & 1:
                    raise DomainError(f"relation is not antisymmetric: {i}, {j}")
                if self._down[j] & ~d:
                    raise DomainError(f"relation is not transitive through {j} <= {i}")

    # basic queries ------------------------------------------------------

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FinitePoset(size={self.size}, covers={len(self.covers())})"

    def leq(self, i: int, j: int) -> bool:
        return bool((self._down[j] >> i) & 1)

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def index_of(self, label: Hashable) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def lower_cover_masks(self) -> list[int]:
        """``result[j]`` = bitmask of elements covered by ``j``."""
        if self._lower_covers is None:
            res = []
            for j, d in enumerate(self._down):
                strict = d & ~(1 << j)
                below = 0
                for k in _bits(strict):
                    below |= self._down[k] & ~(1 << k)
                res.append(strict & ~below)
            self._lower_covers = res
        return self._lower_covers

    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction as sorted ``(lower, upper)`` pairs."""
        return sorted((i, j) for j, m in enumerate(self.lower_cover_masks()) for i in _bits(m))

    def lower_covers(self, j: int) -> list[int]:
        return list(_bits(self.lower_cover_masks()[j]))

    def upper_covers(self, i: int) -> list[int]:
        lc = self.lower_cover_masks()
        return [j for j in _bits(self._up[i]) if (lc[j] >> i) & 1]

    def minimal(self) -> list[int]:
        return [i for i, d in enumerate(self._down) if d == 1 << i]

    def maximal(self) -> list[int]:
        return [i for i, u in enumerate(self._up) if u == 1 << i]

    def linear_extension(self) -> list[int]:
        """Smallest-index-first topological order."""
        below = [d & ~(1 << i) for i, d in enumerate(self._down)]
        return _topological(self.size, below)

    def heights(self) -> list[int]:
        """Length of the longest chain ending at each element."""
        h = [0] * self.size
        lc = self.lower_cover_masks()
        for v in self.linear_extension():
            h[v] = max((h[u] + 1 for u in _bits(lc[v])), default=0)
        return h

    def subposet(self, indices: Sequence[int]) -> "FinitePoset":
        """Induced subposet; labels are carried over."""
        pos = {v: t for t, v in enumerate(indices)}
        down = []
        for v in indices:
            acc = 0
            for u in _bits(self._down[v]):
                if u in pos:
                    acc |= 1 << pos[u]
            down.append(acc)
        return FinitePoset(down, [self.labels[v] for v in indices], validate=False)

    def dual(self) -> "FinitePoset":
        return FinitePoset(list(self._up), self.labels, validate=False)

    def comparability_matrix(self) -> np.ndarray:
        """Boolean ``M[i, j] = (i <= j)``."""
        M = np.zeros((self.size, self.size), dtype=bool)
        for j, d in enumerate(self._down):
            for i in _bits(d):
                M[i, j] = True
        return M

    # lattice structure --------------------------------------------------

    def _bound_tables(self) -> tuple[dict, dict]:
        # an element is the join of i, j iff its up-set is up[i] & up[j]
        if self._bounds is None:
            self._bounds = (
                {u: i for i, u in enumerate(self._up)},
                {d: i for i, d in enumerate(self._down)},
            )
        return self._bounds

    def join(self, i: int, j: int) -> int | None:
        return self._bound_tables()[0].get(self._up[i] & self._up[j])

    def meet(self, i: int, j: int) -> int | None:
        return self._bound_tables()[1].get(self._down[i] & self._down[j])

    def is_lattice(self, *, sample: int = 20000, seed: int = 0) -> bool:
        """Every pair has a least upper and greatest lower bound.

        Exhaustive up to ``EAGER_LATTICE_CHECK`` elements; larger posets are
        checked on ``sample`` random pairs.
        """
        n = self.size
        if n == 0:
            return False
        if n <= EAGER_LATTICE_CHECK:
            pairs = ((i, j) for i in range(n) for j in range(i + 1, n))
        else:
            rng = random.Random(seed)
            pairs = ((rng.randrange(n), rng.randrange(n)) for _ in range(sample))
        return all(self.join(i, j) is not None and self.meet(i, j) is not None for i, j in pairs)

    def join_meet_tables(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.size
        J = np.empty((n, n), dtype=np.int32)
        M = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            for j in range(i, n):
                a, b = self.join(i, j), self.meet(i, j)
                if a is None or b is None:
                    raise DomainError("not a lattice")
                J[i, j] = J[j, i] = a
                M[i, j] = M[j, i] = b
        return J, M

    # export -------------------------------------------------------------

    def to_json(self, label: Callable | None = None) -> dict:
        lab = label or _json_label
        return {"size": self.size, "covers": [list(c) for c in self.covers()], "labels": [lab(x) for x in self.labels]}

    @classmethod
    def from_json(cls, data: dict | str) -> "FinitePoset":
        if isinstance(data, str):
            data = json.loads(data)
        labels = data.get("labels")
        if labels is not None:
            labels = [tuple(x) if isinstance(x, list) else x for x in labels]
        return cls.from_covers(data["size"], [tuple(c) for c in data["covers"]], labels)

    def to_dot(self, name: str = "P", label: Callable | None = None) -> str:
        """Hasse diagram in Graphviz DOT, bottom-to-top, one rank per row."""
        lab = label or (lambda x: str(x))
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
        for i, x in enumerate(self.labels):
            text = lab(x).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
            lines.append(f'  n{i} [label="{text}"];')
        layers: dict[int, list[int]] = {}
        for i, h in enumerate(self.heights()):
            layers.setdefault(h, []).append(i)
        for h in sorted(layers):
            lines.append("  { rank=same; " + " ".join(f"n{i};" for i in layers[h]) + " }")
        for a, b in self.covers():
            lines.append(f"  n{a} -> n{b} [dir=none];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _json_label(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    if isinstance(x, tuple):
        return [_json_label(v) for v in x]
    return x


def _topological(size: int, below: Sequence[int]) -> list[int]:
    indeg = [bin(b).count("1") for b in below]
    above: list[list[int]] = [[] for _ in range(size)]
    for v in range(size):
        for u in _bits(below[v]):
            above[u].append(v)
    heap = [v for v in range(size) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in above[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != size:
        raise DomainError("relation has a cycle")
    return order


# order ideals ---------------------------------------------------------------


class IdealFamily:
    """All order ideals of a poset, streamed on demand.

    Ideals are reported as ``frozenset`` of element indices; :meth:`masks`
    gives the same family as bitmasks, which is much cheaper.
    """

    def __init__(self, base: FinitePoset):
        self.base = base
        self._hist: list[list[int]] | None = None

    def masks(self) -> Iterator[int]:
        """Depth-first over a linear extension, adding one allowed element at a time."""
        p = self.base
        order = p.linear_extension()
        lc = p.lower_cover_masks()
        stack = [(0, 0)]
        while stack:
            ideal, start = stack.pop()
            yield ideal
            for t in range(len(order) - 1, start - 1, -1):
                y = order[t]
                if lc[y] & ~ideal == 0:
                    stack.append((ideal | (1 << y), t + 1))

    def __iter__(self) -> Iterator[frozenset]:
        for m in self.masks():
            yield frozenset(_bits(m))

    def histogram(self) -> list[list[int]]:
        """Joint count ``h[size][antichain_width]`` over the family."""
        if self._hist is None:
            p = self.base
            order = p.linear_extension()
            pos = {v: t for t, v in enumerate(order)}
            lc = p.lower_cover_masks()
            relabeled = []
            for v in order:
                m = 0
                for u in _bits(lc[v]):
                    m |= 1 << pos[u]
                relabeled.append(m)
            if len(relabeled) <= 64:
                self._hist = kernels.ideal_histogram(relabeled)
            else:
                from . import _pykernels

                self._hist = _pykernels.ideal_histogram(relabeled)
        return self._hist

    def __len__(self):
        return sum(sum(row) for row in self.histogram())

    def rank_polynomial(self) -> RankPolynomial:
        return RankPolynomial(sum(row) for row in self.histogram())

    def width_histogram(self) -> list[int]:
        """``w[k]`` = number of ideals with ``k`` maximal elements."""
        h = self.histogram()
        return [sum(row[k] for row in h) for k in range(len(h[0]))] if h else [1]

    def as_lattice(self, budget: int = DEFAULT_IDEAL_BUDGET) -> FinitePoset:
        """Materialize ``J(P)`` ordered by inclusion, labels are frozensets."""
        if len(self) > min(budget, 20000):
            raise BudgetExceeded(f"{len(self)} ideals is too many to materialize")
        masks = sorted(self.masks(), key=lambda m: (bin(m).count("1"), m))
        pos = {m: t for t, m in enumerate(masks)}
        covers = []
        n = self.base.size
        for m in masks:
            for y in range(n):
                bit = 1 << y
                if not m & bit:
                    bigger = m | bit
                    if bigger in pos:
                        covers.append((pos[m], pos[bigger]))
        return FinitePoset.from_covers(len(masks), covers, [frozenset(_bits(m)) for m in masks])


def order_ideals(p: FinitePoset) -> IdealFamily:
    return IdealFamily(p)


def _as_mask(subset) -> int:
    if isinstance(subset, int):
        return subset
    m = 0
    for x in subset:
        m |= 1 << x
    return m


def is_ideal(p: FinitePoset, subset) -> bool:
    m = _as_mask(subset)
    return all(p.down_mask(x) & ~m == 0 for x in _bits(m))


def ideal_to_antichain(p: FinitePoset, ideal) -> frozenset:
    """Maximal elements of an order ideal."""
    m = _as_mask(ideal)
    if not is_ideal(p, m):
        raise DomainError("not an order ideal")
    return frozenset(x for x in _bits(m) if p.up_mask(x) & m == 1 << x)


def antichain_to_ideal(p: FinitePoset, antichain) -> frozenset:
    """Down-closure of an antichain."""
    elems = list(_bits(_as_mask(antichain)))
    for a in elems:
        for b in elems:
            if a != b and p.leq(a, b):
                raise DomainError(f"elements {a} and {b} are comparable")
    m = 0
    for a in elems:
        m |= p.down_mask(a)
    return frozenset(_bits(m))


def covered_count(p: FinitePoset, ideal) -> int:
    """Number of ideals covered by ``ideal`` in ``J(P)``: those one element smaller."""
    m = _as_mask(ideal)
    return sum(1 for x in _bits(m) if is_ideal(p, m & ~(1 << x)))


def join_irreducibles(lattice: FinitePoset, *, check: bool = True) -> tuple[FinitePoset, list[int]]:
    """Induced subposet of elements covering exactly one element.

    Returns the subposet and the lattice indices it came from.
    """
    if check and not lattice.is_lattice():
        raise DomainError("input is not a lattice")
    lc = lattice.lower_cover_masks()
    idx = [j for j, m in enumerate(lc) if m and m & (m - 1) == 0]
    return lattice.subposet(idx), idx


def rank_polynomial(p: FinitePoset, rank) -> RankPolynomial:
    """``sum_x q**rank(x)``; ``rank`` is a callable on indices or a sequence."""
    ranks = [rank(i) for i in range(p.size)] if callable(rank) else list(rank)
    if len(ranks) != p.size:
        raise DomainError("one rank per element is required")
    if any(r < 0 for r in ranks):
        raise DomainError("ranks must be nonnegative")
    return RankPolynomial.from_ranks(ranks)


# sums and products ----------------------------------------------------------


def disjoint_sum(p1: FinitePoset, p2: FinitePoset) -> FinitePoset:
    """No relations between the two parts; labels become ``(0, x)`` / ``(1, y)``."""
    shift = p1.size
    down = list(p1._down) + [d << shift for d in p2._down]
    labels = [(0, x) for x in p1.labels] + [(1, y) for y in p2.labels]
    return FinitePoset(down, labels, validate=False)


def direct_product(p1: FinitePoset, p2: FinitePoset) -> FinitePoset:
    """Componentwise order on pairs; element ``(a, b)`` has index ``a * |p2| + b``."""
    n2 = p2.size
    down = []
    for a in range(p1.size):
        for b in range(n2):
            acc = 0
            for x in _bits(p1._down[a]):
                acc |= p2._down[b] << (x * n2)
            down.append(acc)
    labels = [(x, y) for x in p1.labels for y in p2.labels]
    return FinitePoset(down, labels, validate=False)


# isomorphism ----------------------------------------------------------------


def _refined_colors(posets: Sequence[FinitePoset]) -> list[list[int]]:
    """Joint color refinement so colors are comparable across posets."""
    colors = []
    for p in posets:
        lc = p.lower_cover_masks()
        colors.append([
            (bin(p.down_mask(i)).count("1"), bin(p.up_mask(i)).count("1"),
             bin(lc[i]).count("1"), len(p.upper_covers(i)))
            for i in range(p.size)
        ])
    table: dict = {}
    cur = [[table.setdefault(c, len(table)) for c in cs] for cs in colors]
    while True:
        table = {}
        nxt = []
        for p, cs in zip(posets, cur):
            lc = p.lower_cover_masks()
            row = []
            for i in range(p.size):
                sig = (
                    cs[i],
                    tuple(sorted(cs[u] for u in _bits(lc[i]))),
                    tuple(sorted(cs[u] for u in p.upper_covers(i))),
                )
                row.append(table.setdefault(sig, len(table)))
            nxt.append(row)
        if all(len(set(a)) == len(set(b)) for a, b in zip(cur, nxt)):
            return nxt
        cur = nxt


def are_isomorphic(p1: FinitePoset, p2: FinitePoset, *, max_nodes: int = 2_000_000,
                   max_seconds: float | None = None) -> dict[int, int] | None:
    """Find an order isomorphism ``p1 -> p2`` or prove there is none.

    Backtracking over color-refined candidates. Raises
    :class:`IsomorphismUndecided` if the node or time budget runs out before
    the search finishes; never guesses.
    """
    if p1.size != p2.size:
        return None
    if len(p1.covers()) != len(p2.covers()):
        return None
    if p1.size == 0:
        return {}
    c1, c2 = _refined_colors([p1, p2])
    if sorted(c1) != sorted(c2):
        return None
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(c2):
        by_color.setdefault(c, []).append(v)
    freq = {c: len(vs) for c, vs in by_color.items()}
    # visit p1 along a linear extension, rarest colors first within ties
    order = sorted(p1.linear_extension(), key=lambda v: freq[c1[v]])
    order = _connected_order(p1, order)
    mapping: dict[int, int] = {}
    used = 0
    nodes = 0
    deadline = None if max_seconds is None else time.monotonic() + max_seconds

    def compatible(u, v):
        for w, fw in mapping.items():
            if p1.leq(w, u) != p2.leq(fw, v) or p1.leq(u, w) != p2.leq(v, fw):
                return False
        return True

    def search(t):
        nonlocal used, nodes
        if t == len(order):
            return True
        nodes += 1
        if nodes > max_nodes or (deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline):
            raise IsomorphismUndecided(f"gave up after {nodes} search nodes")
        u = order[t]
        for v in by_color[c1[u]]:
            if (used >> v) & 1 or not compatible(u, v):
                continue
            mapping[u] = v
            used |= 1 << v
            if search(t + 1):
                return True
            del mapping[u]
            used &= ~(1 << v)
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, p1.size + 100))
    try:
        found = search(0)
    finally:
        sys.setrecursionlimit(limit)
    return dict(mapping) if found else None


def _connected_order(p: FinitePoset, order: list[int]) -> list[int]:
    # prefer the next vertex adjacent (by cover) to something already placed
    remaining = list(order)
    placed = 0
    out = []
    lc = p.lower_cover_masks()
    nbr = [lc[i] for i in range(p.size)]
    for i in range(p.size):
        for j in _bits(lc[i]):
            nbr[j] |= 1 << i
    while remaining:
        pick = next((v for v in remaining if nbr[v] & placed), remaining[0])
        remaining.remove(pick)
        out.append(pick)
        placed |= 1 << pick
    return out


def is_isomorphism(p1: FinitePoset, p2: FinitePoset, mapping: dict[int, int] | Sequence[int]) -> bool:
    """Check a candidate bijection preserves and reflects order (all pairs)."""
    f = mapping if isinstance(mapping, dict) else dict(enumerate(mapping))
    if sorted(f) != list(range(p1.size)) or sorted(f.values()) != list(range(p2.size)):
        return False
    return all(p1.leq(a, b) == p2.leq(f[a], f[b]) for a in range(p1.size) for b in range(p1.size))
