"""Shared fixtures; also prints the acceptance summary at the end of a run."""

import pytest

from ap3lattice import kernels, _pykernels

#: filled by tests/test_acceptance.py: criterion number -> (description, passed)
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture(params=["active", "python"])
def kernel_impl(request):
    """The kernels module selected at import, and the pure-Python fallback."""
    return kernels if request.param == "active" else _pykernels


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {desc}")
