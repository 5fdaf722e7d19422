"""Both kernel backends must give identical answers."""

import os
import subprocess
import sys

import numpy as np
import pytest

from ap3lattice import _pykernels, kernels
from ap3lattice.poset import FinitePoset, order_ideals
from ap3lattice.tableaux import enumerate_Kn, tableau_poset
from ap3lattice.triple_posets import build_Pn


def _relabelled_lower(p):
    order = p.linear_extension()
    return p.subposet(order).lower_cover_masks()


def test_compiled_backend_is_active():
    # the editable install builds the extension; losing it silently would only show up as slowness
    assert kernels.BACKEND == "compiled"


def test_pure_python_switch():
    env = dict(os.environ, AP3_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import ap3lattice.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("n", range(2, 8))
def test_ideal_histogram(n, kernel_impl):
    lower = _relabelled_lower(build_Pn(n))
    h = np.asarray(kernel_impl.ideal_histogram(lower))
    assert h.sum() == 2 ** ((n - 1) * (n - 2) // 2)
    assert np.array_equal(h, np.asarray(_pykernels.ideal_histogram(lower)))


def test_ideal_histogram_on_chain_and_antichain(kernel_impl):
    chain = _relabelled_lower(FinitePoset.chain(5))
    assert [sum(r) for r in kernel_impl.ideal_histogram(chain)] == [1] * 6
    anti = _relabelled_lower(FinitePoset.antichain(4))
    h = np.asarray(kernel_impl.ideal_histogram(anti))
    assert h.sum(axis=1).tolist()[:5] == [1, 4, 6, 4, 1]
    assert h[2, 2] == 6  # two-element ideals of an antichain have two maximal elements


@pytest.mark.parametrize("n", range(2, 8))
def test_staircase_histogram(n, kernel_impl):
    a = np.asarray(kernel_impl.staircase_histogram(n))
    b = np.asarray(_pykernels.staircase_histogram(n))
    assert np.array_equal(a, b)


def test_order_mismatches(kernel_impl):
    ks = enumerate_Kn(7)
    a = np.array([t.flat() for t in ks], dtype=np.int32)
    assert kernel_impl.order_mismatches(a, a) == 0
    flipped = np.ascontiguousarray(-a)  # reverses every comparison between distinct elements
    assert kernel_impl.order_mismatches(a, flipped) == _pykernels.order_mismatches(a, flipped) > 0


def test_lattice_laws(kernel_impl):
    J, M = tableau_poset(enumerate_Kn(6)).join_meet_tables()
    assert sum(kernel_impl.lattice_law_violations(J, M).values()) == 0
    # swapping join and meet is still a lattice; breaking one entry is not
    bad = J.copy()
    bad[1, 2] = bad[2, 1] = 0
    viol = kernel_impl.lattice_law_violations(bad, M)
    assert sum(viol.values()) > 0
    assert viol == _pykernels.lattice_law_violations(bad, M)


def test_ideal_family_above_64_elements():
    # more elements than one machine word: handled by the arbitrary-precision path
    chain = FinitePoset.chain(70)
    fam = order_ideals(chain)
    assert len(fam) == 71
    assert fam.width_histogram()[:2] == [1, 70]
