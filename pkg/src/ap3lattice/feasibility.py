"""Exact rational feasibility for small linear systems.

Gaussian elimination removes the equalities, then Fourier-Motzkin
elimination decides the remaining inequalities and a witness is recovered
by back-substitution. Everything is done over :class:`fractions.Fraction`,
so answers are exact. Intended for a handful of variables only; the number
of Fourier-Motzkin constraints can grow quadratically per eliminated
variable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple[tuple[Fraction, ...], Fraction]


def _normalize(coeffs: Sequence[Fraction], rhs: Fraction) -> Row:
    # scale so the first nonzero coefficient has absolute value 1
    for c in coeffs:
        if c != 0:
            s = abs(c)
            return tuple(x / s for x in coeffs), rhs / s
    return tuple(coeffs), rhs


def _rref(eqs: list[list[Fraction]], nvars: int):
    """Row-reduce augmented rows in place; return pivot columns or None if inconsistent."""
    pivots = []
    r = 0
    for col in range(nvars):
        sel = next((i for i in range(r, len(eqs)) if eqs[i][col] != 0), None)
        if sel is None:
            continue
        eqs[r], eqs[sel] = eqs[sel], eqs[r]
        piv = eqs[r][col]
        eqs[r] = [x / piv for x in eqs[r]]
        for i in range(len(eqs)):
            if i != r and eqs[i][col] != 0:
                f = eqs[i][col]
                eqs[i] = [a - f * b for a, b in zip(eqs[i], eqs[r])]
        pivots.append(col)
        r += 1
    for row in eqs[r:]:
        if row[nvars] != 0:
            return None
    return pivots


def find_point(
    nvars: int,
    equalities: Sequence[tuple[Sequence[int], int]] = (),
    inequalities: Sequence[tuple[Sequence[int], int]] = (),
) -> list[Fraction] | None:
    """Return a rational point with ``a.x == b`` for every equality and
    ``a.x >= b`` for every inequality, or ``None`` if none exists.

    Free directions are set to their smallest admissible value when a lower
    bound exists.
    """
    eqs = [[Fraction(c) for c in a] + [Fraction(b)] for a, b in equalities]
    pivots = _rref(eqs, nvars)
    if pivots is None:
        return None
    free = [v for v in range(nvars) if v not in pivots]
    # pivot var p = rhs_p - sum_f coef_{p,f} x_f
    subst = {}
    for row, p in zip(eqs, pivots):
        subst[p] = (row[nvars], {f: row[f] for f in free if row[f] != 0})

    fpos = {f: t for t, f in enumerate(free)}
    system: list[Row] = []
    for a, b in inequalities:
        coeffs = [Fraction(0)] * len(free)
        rhs = Fraction(b)
        for v, c in enumerate(a):
            if c == 0:
                continue
            if v in subst:
                const, lin = subst[v]
                rhs -= c * const
                for f, cf in lin.items():
                    coeffs[fpos[f]] -= c * cf
            else:
                coeffs[fpos[v]] += c
        system.append(_normalize(coeffs, rhs))

    # eliminate free variables in order, keeping every stage
    stages = []
    current = list(dict.fromkeys(system))
    for t in range(len(free)):
        stages.append(current)
        pos = [r for r in current if r[0][t] > 0]
        neg = [r for r in current if r[0][t] < 0]
        nxt = [r for r in current if r[0][t] == 0]
        for pc, pb in pos:
            for nc, nb in neg:
                wp, wn = -nc[t], pc[t]
                coeffs = tuple(wp * x + wn * y for x, y in zip(pc, nc))
                nxt.append(_normalize(coeffs, wp * pb + wn * nb))
        current = list(dict.fromkeys(nxt))
    if any(b > 0 for _, b in current):
        return None

    values = [Fraction(0)] * len(free)
    for t in range(len(free) - 1, -1, -1):
        lo = hi = None
        for coeffs, rhs in stages[t]:
            c = coeffs[t]
            if c == 0:
                continue
            rest = rhs - sum(coeffs[u] * values[u] for u in range(t + 1, len(free)))
            bound = rest / c
            if c > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        values[t] = lo if lo is not None else (hi if hi is not None else Fraction(0))

    point = [Fraction(0)] * nvars
    for f, t in fpos.items():
        point[f] = values[t]
    for p, (const, lin) in subst.items():
        point[p] = const - sum(cf * point[f] for f, cf in lin.items())
    return point
