"""Closed forms against exhaustive enumeration.

Every check is a function ``n -> (closed, enumerated)``; a report passes
only when the two values are exactly equal. Structural checks (order
isomorphisms, lattice laws) use ``closed = 0`` and count counterexamples as
the enumerated value.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

import numpy as np

from . import formulas, kernels
from .polynomial import RankPolynomial
from .poset import (
    FinitePoset, are_isomorphic, ideal_to_antichain, is_isomorphism, join_irreducibles, order_ideals,
)
from .tableaux import (
    Shape, Tableau, UClass, _mn_flats, _split_raw, classify_Un, enumerate_Kn, enumerate_KnL, enumerate_KnR,
    glue, half_structure, kn_rank, max_reducible, minimal_tableau, reducible_entries, right_iso,
    right_iso_inverse, split, tableau_poset, theta, un_elements,
)
from .triple_posets import antichain_to_system, build_Pn, build_Qn, phi, phi_inverse, phin_elements, psi
from .triples import all_triples, enumerate_valid, is_consistent, realize, TripleSystem, valid_size_histogram

DEFAULT_BUDGET_SECS = 600.0
SAMPLE_TRIPLES = 100_000


@dataclass(frozen=True)
class VerificationReport:
    quantity: str
    n: int
    closed: object
    enumerated: object
    status: str  # "pass" | "fail" | "skipped"

    def to_json(self) -> dict:
        return {"quantity": self.quantity, "n": self.n, "closed": _jsonable(self.closed),
                "enumerated": _jsonable(self.enumerated), "status": self.status}


def _jsonable(v):
    if isinstance(v, RankPolynomial):
        return v.to_json()
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    return v


def _vec(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int32)
    return np.ascontiguousarray(a.reshape(len(rows), -1))


def _order_failures(a_rows, b_rows) -> int:
    """Pairs whose order differs between two encodings of the same elements."""
    if len(a_rows) == 0:
        return 0
    return int(kernels.order_mismatches(_vec(a_rows), _vec(b_rows)))


# cached enumerations (per process) -----------------------------------------------


@lru_cache(maxsize=None)
def _pn_ideal_hist(n: int) -> np.ndarray:
    return np.asarray(order_ideals(build_Pn(n)).histogram(), dtype=object)


@lru_cache(maxsize=None)
def _staircase_hist(n: int) -> np.ndarray:
    return np.asarray(kernels.staircase_histogram(n), dtype=object)


@lru_cache(maxsize=None)
def _kn(n: int) -> tuple[Tableau, ...]:
    return tuple(enumerate_Kn(n))


@lru_cache(maxsize=None)
def _un_poset(n: int) -> tuple[FinitePoset, dict[UClass, list[int]]]:
    groups = un_elements(n)
    elems, cls = [], {}
    for u in UClass:
        cls[u] = list(range(len(elems), len(elems) + len(groups[u])))
        elems.extend(groups[u])
    return tableau_poset(elems), cls


def _max_index(hist_row_or_col) -> int:
    nz = [i for i, v in enumerate(hist_row_or_col) if v]
    return nz[-1] if nz else 0


# checks --------------------------------------------------------------------------


def f_ideals(n):
    return formulas.f_closed(n), int(_pn_ideal_hist(n).sum())


def f_valid(n):
    return formulas.f_closed(n), sum(valid_size_histogram(n))


def antichains_valid(n):
    """Antichains of P(n) read as systems versus the brute-force valid systems."""
    p = build_Pn(n)
    fam = {str(antichain_to_system([p.labels[x] for x in ideal_to_antichain(p, m)], n))
           for m in order_ideals(p).masks()}
    brute = {str(s) for s in enumerate_valid(n)}
    return 0, len(fam ^ brute)


def consistency(n):
    """Crossing-pattern criterion against the realization oracle on every pair of triples."""
    bad = 0
    for t1, t2 in combinations(all_triples(n), 2):
        if is_consistent(t1, t2) != (realize(TripleSystem(n, (t1, t2))) is not None):
            bad += 1
    return 0, bad


def sigma_ideals(n):
    h = _pn_ideal_hist(n)
    return formulas.sigma_closed(n), _max_index(h.sum(axis=0))


def sigma_Mn(n):
    h = _staircase_hist(n)
    return formulas.sigma_closed(n), _max_index(h.sum(axis=0))


def g_ideals(n):
    w = _pn_ideal_hist(n).sum(axis=0)
    return formulas.g_closed(n), int(w[_max_index(w)])


def g_Mn(n):
    """Elements of M(n) with the most reducible entries, read off the histogram."""
    w = _staircase_hist(n).sum(axis=0)
    return formulas.g_closed(n), int(w[_max_index(w)])


def g_Kn(n):
    return formulas.g_closed(n), len(_kn(n))


def F_Mn(n):
    return formulas.F_Mn(n), RankPolynomial(int(v) for v in _staircase_hist(n).sum(axis=1))


def F_Pn_ideals(n):
    """Rank polynomial of J(P(n)) by ideal size against the product formula."""
    return formulas.F_Mn(n), RankPolynomial(int(v) for v in _pn_ideal_hist(n).sum(axis=1))


def F_Kn(n):
    return formulas.F_Kn(n), RankPolynomial.from_ranks(kn_rank(t, n) for t in _kn(n))


def F_Kn_ideals(n):
    """Ideals of the join-irreducibles of K(n) by size: a rank convention-free count."""
    p, _ = _un_poset(n)
    return formulas.F_Kn(n), order_ideals(p).rank_polynomial()


def F_Kn_parts(n):
    """Split J(U_n) on whether an ideal meets the left2 class."""
    p, cls = _un_poset(n)
    up = 0
    for x in cls[UClass.LEFT2]:
        up |= p.up_mask(x)
    keep = [x for x in range(p.size) if not (up >> x) & 1]
    part1 = order_ideals(p.subposet(keep)).rank_polynomial()
    part2 = order_ideals(p).rank_polynomial() - part1
    c1, c2 = formulas.F_Kn_parts(n)
    return [c1, c2], [part1, part2]


def Qn_count(n):
    """Elements of M(n) with a single reducible entry."""
    w = _staircase_hist(n).sum(axis=0)
    return formulas.count_Qn(n), int(w[1]) if len(w) > 1 else 0


def phi_iso(n):
    els = phin_elements(n)
    imgs = [phi(e, n) for e in els]
    p = build_Pn(n)
    bad = len(set(imgs) ^ set(p.labels))
    bad += _order_failures([(-a, -b, k) for a, b, k in els], imgs)
    return 0, bad


def psi_iso(n):
    """psi is an order embedding whose image is exactly the single-reducible elements."""
    els = phin_elements(n)
    imgs = [psi(e, n) for e in els]
    bad = _order_failures([(-a, -b, k) for a, b, k in els], [t.flat() for t in imgs])
    bad += sum(1 for e, t in zip(els, imgs) if reducible_entries(t, n) != {(e.a, e.b)})
    if n <= 7:
        shape = Shape.staircase(n - 1)
        ji = {f for f in _mn_flats(n) if len(reducible_entries(Tableau.from_flat(shape, f), n)) == 1}
        bad += len(ji ^ {t.flat() for t in imgs})
    return 0, bad


def covers_vs_reducible(n):
    """Lower-cover counts in the materialized M(n) equal reducible-entry counts."""
    shape = Shape.staircase(n - 1)
    ts = [Tableau.from_flat(shape, f) for f in _mn_flats(n)]
    p = tableau_poset(ts)
    lc = p.lower_cover_masks()
    return 0, sum(1 for t, m in zip(ts, lc) if len(reducible_entries(t, n)) != m.bit_count())


def JPn_Mn(n):
    """Birkhoff map J(P(n)) -> M(n): bijective and order-preserving both ways."""
    p = build_Pn(n)
    masks = list(order_ideals(p).masks())
    ind = np.array([[(m >> x) & 1 for x in range(p.size)] for m in masks], dtype=np.int32).reshape(len(masks), -1)
    cells = Shape.staircase(n - 1).cells()
    gain = np.zeros((p.size, len(cells)), dtype=np.int32)
    for x, pt in enumerate(p.labels):
        a, b, k = phi_inverse(pt, n)
        for c, (aa, bb) in enumerate(cells):
            if aa >= a and bb >= b:
                gain[x, c] = k
    base = np.array(minimal_tableau(n).flat(), dtype=np.int32)
    if p.size:
        tv = base + (ind[:, :, None] * gain[None, :, :]).max(axis=1)
    else:
        tv = np.tile(base, (len(masks), 1))
    bad = len({tuple(r) for r in tv.tolist()} ^ set(_mn_flats(n)))
    bad += int(kernels.order_mismatches(np.ascontiguousarray(ind), np.ascontiguousarray(tv, dtype=np.int32)))
    return 0, bad


def theta_iso(n):
    left = enumerate_KnL(n)
    imgs = [theta(t, n) for t in left]
    k = n // 2
    bad = len({t.flat() for t in imgs} ^ set(_mn_flats(k + 1)))
    bad += _order_failures([t.flat() for t in left], [t.flat() for t in imgs])
    return 0, bad


def _right_iso_check(m, parity):
    n, c = (2 * m, 1) if parity == "even" else (2 * m + 1, 2)
    shape = Shape.staircase(m)
    src = [Tableau.from_flat(shape, f) for f in _mn_flats(m + 1)]
    imgs = [right_iso(t, m, parity) for t in src]
    bad = len({t.flat() for t in imgs} ^ {t.flat() for t in enumerate_KnR(n, c)})
    bad += sum(1 for s, t in zip(src, imgs) if right_iso_inverse(t, m, parity) != s)
    bad += _order_failures([t.flat() for t in src], [t.flat() for t in imgs])
    return 0, bad


def right_iso_even(n):
    return _right_iso_check(n // 2, "even")


def right_iso_odd(n):
    return _right_iso_check(n // 2, "odd")


def split_glue(n):
    """Split/glue round trip and the disjoint-union count."""
    hs = half_structure(n)
    ks = _kn(n)
    bad = sum(1 for t in ks if glue(*split(t, n), n) != t)
    by_label = {1: 0, 2: 0}
    for tl in hs.left:
        by_label[tl.entry(1, (n - 1) // 2)] += 1
    closed = by_label[1] * len(hs.right[1]) + by_label[2] * len(hs.right[2])
    return 0, bad + abs(closed - len(ks))


def classify_direct(n):
    """Classification against join-irreducibles computed on the materialized K(n)."""
    ks = list(_kn(n))
    p = tableau_poset(ks)
    ji = set(join_irreducibles(p, check=False)[0].labels) if p.size > 1 else set()
    return 0, sum(1 for t in ks if (classify_Un(t, n) is not None) != (t in ji))


def Un_sizes(n):
    """Left and right join-irreducibles each number |Q(n//2 + 1)|."""
    _, cls = _un_poset(n)
    left = len(cls[UClass.LEFT1]) + len(cls[UClass.LEFT2])
    right = len(cls[UClass.RIGHT1]) + len(cls[UClass.RIGHT2])
    q = formulas.count_Qn(n // 2 + 1)
    return [q, q], [left, right]


def _uneven_parts(n):
    p, cls = _un_poset(n)
    sub = lambda *us: p.subposet([x for u in us for x in cls[u]])  # noqa: E731
    return p, cls, sub


def Un_a(n):
    """Left and right join-irreducibles are each isomorphic to Q(m+1)."""
    _, _, sub = _uneven_parts(n)
    q = build_Qn(n // 2 + 1)
    bad = sum(1 for part in (sub(UClass.LEFT1, UClass.LEFT2), sub(UClass.RIGHT1, UClass.RIGHT2))
              if not _iso_ok(part, q))
    return 0, bad


def Un_b(n):
    """The left1 and right1 classes are each isomorphic to Q(m)."""
    _, _, sub = _uneven_parts(n)
    q = build_Qn(n // 2)
    return 0, sum(1 for part in (sub(UClass.LEFT1), sub(UClass.RIGHT1)) if not _iso_ok(part, q))


def _iso_ok(p1, p2) -> bool:
    m = are_isomorphic(p1, p2)
    return m is not None and is_isomorphism(p1, p2, m)


def _comparable(p, xs, ys) -> int:
    return sum(1 for x in xs for y in ys if p.leq(x, y) or p.leq(y, x))


def Un_c(n):
    """No left1 element is comparable to a right element."""
    p, cls, _ = _uneven_parts(n)
    return 0, _comparable(p, cls[UClass.LEFT1], cls[UClass.RIGHT1] + cls[UClass.RIGHT2])


def Un_d(n):
    """No right1 element is comparable to a left element."""
    p, cls, _ = _uneven_parts(n)
    return 0, _comparable(p, cls[UClass.RIGHT1], cls[UClass.LEFT1] + cls[UClass.LEFT2])


def Un_e(n):
    """Every right2 element lies strictly below every left2 element."""
    p, cls, _ = _uneven_parts(n)
    return 0, sum(1 for r in cls[UClass.RIGHT2] for l in cls[UClass.LEFT2] if not (p.leq(r, l) and r != l))


def Un_odd_incomparable(n):
    p, cls, _ = _uneven_parts(n)
    left = cls[UClass.LEFT1] + cls[UClass.LEFT2]
    right = cls[UClass.RIGHT1] + cls[UClass.RIGHT2]
    return 0, _comparable(p, left, right)


def Kn_product_iso(n):
    """Odd n = 2m+1: T -> (theta(left), right shifted back) is K(n) = M(m+1) x M(m+1)."""
    m = n // 2
    ks = _kn(n)
    imgs = []
    for t in ks:
        tl, tr = _split_raw(t, n)
        imgs.append(theta(tl, n).flat() + right_iso_inverse(tr, m, "odd").flat())
    target = {a + b for a in _mn_flats(m + 1) for b in _mn_flats(m + 1)}
    bad = len(set(imgs) ^ target)
    bad += _order_failures([t.flat() for t in ks], imgs)
    return 0, bad


def Kn_filter_vs_product(n):
    """K(n) by its definition inside M(n) against the half-product construction."""
    shape = Shape.staircase(n - 1)
    bound = max_reducible(n)
    filt = {f for f in _mn_flats(n) if len(reducible_entries(Tableau.from_flat(shape, f), n)) == bound}
    return 0, len(filt ^ {t.flat() for t in _kn(n)})


# lattice laws --------------------------------------------------------------------


def _law_failures(join_tab, meet_tab) -> int:
    return sum(kernels.lattice_law_violations(join_tab, meet_tab).values())


def _exhaustive_laws(ts: list[Tableau]) -> int:
    """Laws on the abstract lattice, plus agreement with entrywise max/min."""
    p = tableau_poset(ts)
    J, M = p.join_meet_tables()
    bad = _law_failures(J, M)
    V = np.array([t.flat() for t in ts], dtype=np.int64).reshape(len(ts), -1)
    bad += int((V[J] != np.maximum(V[:, None, :], V[None, :, :])).any(axis=2).sum())
    bad += int((V[M] != np.minimum(V[:, None, :], V[None, :, :])).any(axis=2).sum())
    return bad


def _sampled_laws(V: np.ndarray, member: Callable[[np.ndarray], np.ndarray], seed: int) -> int:
    """Seven lattice laws and closure on random triples of rows of ``V``."""
    rng = np.random.default_rng(seed)
    x, y, z = (V[rng.integers(0, len(V), SAMPLE_TRIPLES)] for _ in range(3))
    j, m = np.maximum, np.minimum
    bad = 0
    for lhs, rhs in (
        (j(x, y), j(y, x)), (m(x, y), m(y, x)),
        (j(x, m(x, y)), x), (m(x, j(x, y)), x),
        (j(j(x, y), z), j(x, j(y, z))), (m(m(x, y), z), m(x, m(y, z))),
        (j(x, m(y, z)), m(j(x, y), j(x, z))), (m(x, j(y, z)), j(m(x, y), m(x, z))),
    ):
        bad += int((lhs != rhs).any(axis=1).sum())
    for w in (j(x, y), m(x, y), j(x, m(y, z)), m(x, j(y, z))):
        bad += int((~member(w)).sum())
    return bad


def _random_Mn(n: int, count: int, seed: int) -> np.ndarray:
    """Random elements of M(n): each cell drawn uniformly from its admissible interval."""
    rng = np.random.default_rng(seed)
    m = n - 1
    cells = Shape.staircase(m).cells()
    pos = {c: t for t, c in enumerate(cells)}
    out = np.zeros((count, len(cells)), dtype=np.int64)
    for t, (a, b) in enumerate(cells):
        lo = out[:, pos[(a, b - 1)]] if b > 1 else np.full(count, a)
        if a > 1:
            lo = np.maximum(lo, out[:, pos[(a - 1, b)]] + 1)
        else:
            lo = np.maximum(lo, 1)
        hi = m - (m - b - a)
        out[:, t] = rng.integers(lo, hi + 1)
    return out


def _mn_member(n: int):
    m = n - 1
    cells = Shape.staircase(m).cells()
    pos = {c: t for t, c in enumerate(cells)}

    def member(W):
        ok = np.ones(len(W), dtype=bool)
        for t, (a, b) in enumerate(cells):
            ok &= W[:, t] >= 1
            if b > 1:
                ok &= W[:, t] >= W[:, pos[(a, b - 1)]]
            if a > 1:
                ok &= W[:, t] > W[:, pos[(a - 1, b)]]
            if a == m - b:
                ok &= W[:, t] <= m
        return ok

    return member


def laws_Mn(n):
    if n <= 6:
        shape = Shape.staircase(n - 1)
        return 0, _exhaustive_laws([Tableau.from_flat(shape, f) for f in _mn_flats(n)])
    return 0, _sampled_laws(_random_Mn(n, 50_000, seed=n), _mn_member(n), seed=n)


def laws_Kn(n):
    ks = list(_kn(n))
    if n <= 6:
        return 0, _exhaustive_laws(ks)
    keys = {t.flat() for t in ks}
    member = lambda W: np.fromiter((tuple(r) in keys for r in W.tolist()), bool, len(W))  # noqa: E731
    return 0, _sampled_laws(np.array([t.flat() for t in ks], dtype=np.int64), member, seed=100 + n)


def Kn_sublattice(n):
    """K(n) is closed under entrywise max and min, over all pairs."""
    ks = list(_kn(n))
    keys = {t.flat() for t in ks}
    V = np.array([t.flat() for t in ks], dtype=np.int64).reshape(len(ks), -1)
    bad = 0
    for i in range(len(V)):
        for op in (np.maximum, np.minimum):
            W = op(V[i], V[i:])
            bad += sum(1 for r in map(tuple, W.tolist()) if r not in keys)
    return 0, bad


# registry ------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable
    n_min: int
    n_max: int
    parity: str | None = None  # "even" / "odd" restricts n

    def applies(self, n: int) -> bool:
        if n < self.n_min:
            return False
        if self.parity == "even" and n % 2:
            return False
        if self.parity == "odd" and n % 2 == 0:
            return False
        return True


CHECKS: list[Check] = [
    Check("f_ideals", f_ideals, 2, 8),
    Check("f_valid", f_valid, 2, 7),
    Check("antichains_valid", antichains_valid, 2, 7),
    Check("consistency", consistency, 4, 8),
    Check("sigma_ideals", sigma_ideals, 2, 8),
    Check("sigma_Mn", sigma_Mn, 2, 9),
    Check("g_ideals", g_ideals, 2, 8),
    Check("g_Mn", g_Mn, 2, 9),
    Check("g_Kn", g_Kn, 2, 10),
    Check("Kn_filter_vs_product", Kn_filter_vs_product, 2, 7),
    Check("F_Mn", F_Mn, 2, 9),
    Check("F_Pn_ideals", F_Pn_ideals, 2, 8),
    Check("F_Kn", F_Kn, 3, 10),
    Check("F_Kn_ideals", F_Kn_ideals, 3, 10),
    Check("F_Kn_parts", F_Kn_parts, 4, 10, "even"),
    Check("Qn_count", Qn_count, 2, 9),
    Check("phi_iso", phi_iso, 2, 10),
    Check("psi_iso", psi_iso, 2, 8),
    Check("covers_vs_reducible", covers_vs_reducible, 2, 6),
    Check("JPn_Mn", JPn_Mn, 2, 7),
    Check("theta_iso", theta_iso, 4, 10),
    Check("right_iso_even", right_iso_even, 2, 8, "even"),
    Check("right_iso_odd", right_iso_odd, 3, 9, "odd"),
    Check("split_glue", split_glue, 2, 9),
    Check("classify_direct", classify_direct, 2, 9),
    Check("Un_sizes", Un_sizes, 2, 10),
    Check("Un_a", Un_a, 4, 10, "even"),
    Check("Un_b", Un_b, 4, 10, "even"),
    Check("Un_c", Un_c, 4, 10, "even"),
    Check("Un_d", Un_d, 4, 10, "even"),
    Check("Un_e", Un_e, 4, 10, "even"),
    Check("Un_odd_incomparable", Un_odd_incomparable, 3, 9, "odd"),
    Check("Kn_product_iso", Kn_product_iso, 3, 9, "odd"),
    Check("laws_Mn", laws_Mn, 2, 9),
    Check("laws_Kn", laws_Kn, 2, 9),
    Check("Kn_sublattice", Kn_sublattice, 2, 9),
]

_BY_NAME = {c.name: c for c in CHECKS}


def _run_one(task: tuple[str, int]) -> VerificationReport:
    name, n = task
    closed, enumerated = _BY_NAME[name].fn(n)
    return VerificationReport(name, n, closed, enumerated, "pass" if closed == enumerated else "fail")


def plan(n_max: int, only: list[str] | None = None) -> tuple[list[tuple[str, int]], list[tuple[str, int]]]:
    """``(runnable, out_of_scope)`` task lists for ``2 <= n <= n_max``.

    A check's ``n_max`` is the largest size it is run at exhaustively;
    larger sizes are out of scope and are not reported at all.
    """
    run, beyond = [], []
    for c in CHECKS:
        if only and c.name not in only:
            continue
        for n in range(2, n_max + 1):
            if c.applies(n):
                (run if n <= c.n_max else beyond).append((c.name, n))
    return run, beyond


def budget_from_env() -> float:
    return float(os.environ.get("AP3_BUDGET_SECS", DEFAULT_BUDGET_SECS))


def verify_all(n_max: int, budget: float | None = None, jobs: int = 1,
               only: list[str] | None = None) -> list[VerificationReport]:
    """Run every applicable check for ``n <= n_max`` within ``budget`` seconds.

    Checks not finished before the deadline are reported as ``skipped``;
    sizes beyond a check's exhaustive scope are left out (see :func:`plan`). Output order is canonical
    (registry order, then ``n``) regardless of ``jobs``.
    """
    budget = budget_from_env() if budget is None else budget
    deadline = time.monotonic() + budget
    run, _ = plan(n_max, only)
    done: dict[tuple[str, int], VerificationReport] = {}
    # largest n first so the long tasks start early
    ordered = sorted(run, key=lambda t: -t[1])
    if jobs <= 1:
        for task in ordered:
            if time.monotonic() >= deadline:
                break
            done[task] = _run_one(task)
    else:
        ctx = multiprocessing.get_context("fork" if "fork" in multiprocessing.get_all_start_methods() else None)
        pool = ctx.Pool(jobs)
        try:
            pending = {task: pool.apply_async(_run_one, (task,)) for task in ordered}
            for task, res in pending.items():
                remaining = deadline - time.monotonic()
                if remaining <= 0:
                    break
                try:
                    done[task] = res.get(timeout=remaining)
                except multiprocessing.TimeoutError:
                    break
            for task, res in pending.items():
                if task not in done and res.ready():
                    done[task] = res.get()
        finally:
            pool.terminate()
            pool.join()
    reports = []
    for task in run:
        if task in done:
            reports.append(done[task])
        else:
            reports.append(VerificationReport(task[0], task[1], None, None, "skipped"))
    order = {c.name: i for i, c in enumerate(CHECKS)}
    reports.sort(key=lambda r: (order[r.quantity], r.n))
    return reports


def exit_status(reports: list[VerificationReport]) -> int:
    if any(r.status == "fail" for r in reports):
        return 1
    if any(r.status == "skipped" for r in reports):
        return 3
    return 0


TABLE_CELL_WIDTH = 48


def _show(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return " | ".join(_show(x) for x in v)
    text = str(v)
    if isinstance(v, RankPolynomial) and len(text) > TABLE_CELL_WIDTH:
        text = f"<degree {v.degree}, value at 1: {v(1)}>"
    return text


def format_table(reports: list[VerificationReport]) -> str:
    """Aligned text table; long polynomials are abbreviated (JSON output is exact)."""
    rows = [("quantity", "n", "status", "closed", "enumerated")]
    rows += [(r.quantity, str(r.n), r.status, _show(r.closed), _show(r.enumerated)) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row[:4], widths)) + "  " + row[4] for row in rows]
    counts = {s: sum(1 for r in reports if r.status == s) for s in ("pass", "fail", "skipped")}
    lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
    return "\n".join(lines)


def format_jsonl(reports: list[VerificationReport]) -> str:
    return "\n".join(json.dumps(r.to_json()) for r in reports)
