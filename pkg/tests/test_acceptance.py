"""The ten acceptance criteria, one test each.

Every test records a one-line PASS/FAIL verdict (printed in the terminal
summary by conftest.py) and then asserts on the same data, so a red
criterion is both visible in the summary and a failing test. All
comparisons are exact.
"""

import math
import subprocess
import sys
import time
from itertools import combinations

import numpy as np

from conftest import ACCEPTANCE

from ap3lattice import formulas, kernels, verify
from ap3lattice.polynomial import RankPolynomial
from ap3lattice.poset import order_ideals
from ap3lattice.tableaux import enumerate_Kn, kn_rank
from ap3lattice.triple_posets import build_Pn
from ap3lattice.triples import TripleSystem, all_triples, count_valid, is_consistent, realize


def record(k: int, desc: str, failures: list) -> None:
    ok = not failures
    ACCEPTANCE[k] = (desc, ok)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {desc}")
    assert ok, failures


def test_criterion_01_f():
    failures = []
    t0 = time.monotonic()
    for n in range(2, 9):
        got = len(order_ideals(build_Pn(n)))
        if got != formulas.f_closed(n):
            failures.append(("ideals", n, got))
    elapsed = time.monotonic() - t0
    if elapsed >= 60:
        failures.append(("ideal time", elapsed))
    for n in range(2, 7):
        got = count_valid(n)
        if got != formulas.f_closed(n):
            failures.append(("valid", n, got))
    record(1, f"f(n): ideals of P_n n=2..8 ({elapsed:.2f}s), brute force n=2..6", failures)


def test_criterion_02_consistency():
    failures = []
    t0 = time.monotonic()
    pairs = 0
    for n in range(4, 9):
        for t1, t2 in combinations(all_triples(n), 2):
            pairs += 1
            if is_consistent(t1, t2) != (realize(TripleSystem(n, (t1, t2))) is not None):
                failures.append((t1, t2))
    elapsed = time.monotonic() - t0
    if elapsed >= 5:
        failures.append(("time", elapsed))
    assert math.comb(math.comb(8, 3), 2) == 1540
    record(2, f"pair criterion vs oracle, n=4..8 ({pairs} pairs, {elapsed:.1f}s)", failures)


def test_criterion_03_sigma():
    failures = []
    expected = {4: 2, 5: 4, 6: 6, 7: 9, 8: 12, 9: 16}
    for n in range(2, 10):
        closed = formulas.sigma_closed(n)
        if n in expected and closed != expected[n]:
            failures.append(("closed", n, closed))
        red = np.asarray(kernels.staircase_histogram(n)).sum(axis=0)
        if max(np.nonzero(red)[0]) != closed:
            failures.append(("Mn", n))
        if n <= 8:
            widths = order_ideals(build_Pn(n)).width_histogram()
            if max(k for k, c in enumerate(widths) if c) != closed:
                failures.append(("ideals", n))
    record(3, "sigma(n): covered counts of ideals n<=8, reducible entries of M_n n<=9", failures)


def test_criterion_04_g():
    failures = []
    for n in range(2, 11):
        closed = formulas.g_closed(n)
        members = len(enumerate_Kn(n))
        if members != closed:
            failures.append(("Kn", n, members))
        if n <= 8:
            widths = order_ideals(build_Pn(n)).width_histogram()
            top = max(k for k, c in enumerate(widths) if c)
            if widths[top] != closed:
                failures.append(("ideals", n, widths[top]))
    if formulas.g_closed(10) != 2**12 * 31:
        failures.append(("g(10)", formulas.g_closed(10)))
    record(4, "g(n): maximum ideals n<=8 and members of K_n n=2..10 (|K_10| = 126976)", failures)


def test_criterion_05_F_Mn():
    failures = []
    for n in range(2, 9):
        enumerated = RankPolynomial(int(v) for v in np.asarray(kernels.staircase_histogram(n)).sum(axis=1))
        if enumerated != formulas.F_Mn(n):
            failures.append(n)
    record(5, "F(M_n,q): product formula = enumerated rank polynomial, n=2..8", failures)


def test_criterion_06_F_Kn():
    failures = []
    for n in range(3, 11):
        enumerated = RankPolynomial.from_ranks(kn_rank(t, n) for t in enumerate_Kn(n))
        if enumerated != formulas.F_Kn(n):
            failures.append(n)
    if formulas.F_Kn(4) != RankPolynomial([1, 1, 1]):
        failures.append("F(K_4)")
    record(6, "F(K_n,q): closed forms = enumerated rank polynomial, n=3..10", failures)


def _structural(names_and_sizes):
    failures = []
    for name, sizes in names_and_sizes:
        fn = {c.name: c.fn for c in verify.CHECKS}[name]
        for n in sizes:
            closed, bad = fn(n)
            if bad != closed:
                failures.append((name, n, bad))
    return failures


def test_criterion_07_isomorphisms():
    failures = _structural([
        ("phi_iso", range(2, 9)),
        ("psi_iso", range(2, 9)),
        ("JPn_Mn", range(2, 8)),
        ("theta_iso", range(4, 11)),
        ("right_iso_even", [2, 4, 6, 8]),
        ("right_iso_odd", [3, 5, 7, 9]),
    ])
    record(7, "phi, psi (n<=8), J(P_n)=M_n (n<=7), theta (n=4..10), right_iso (m=1..4): all pairs", failures)


def test_criterion_08_Un_structure():
    failures = _structural(
        [(name, [4, 6, 8, 10]) for name in ("Un_a", "Un_b", "Un_c", "Un_d", "Un_e")]
        + [("Kn_product_iso", [5, 7, 9])]
    )
    record(8, "U_n properties (a)-(e) for n=4,6,8,10; K_n = M_{m+1} x M_{m+1} for n=5,7,9", failures)


def test_criterion_09_lattice_laws():
    assert verify.SAMPLE_TRIPLES == 10**5
    failures = _structural([("laws_Mn", range(2, 10)), ("laws_Kn", range(2, 10))])
    record(9, "distributive lattice laws on M_n and K_n: exhaustive n<=6, 1e5 random triples n=7..9", failures)


def test_criterion_10_end_to_end():
    t0 = time.monotonic()
    proc = subprocess.run([sys.executable, "-m", "ap3lattice", "verify", "--n-max", "8"],
                          capture_output=True, text=True, timeout=600)
    elapsed = time.monotonic() - t0
    failures = []
    if proc.returncode != 0:
        failures.append(("exit", proc.returncode, proc.stdout[-2000:], proc.stderr[-2000:]))
    if elapsed >= 300:
        failures.append(("time", elapsed))
    record(10, f"`ap3 verify --n-max 8` exit {proc.returncode} in {elapsed:.0f}s", failures)
