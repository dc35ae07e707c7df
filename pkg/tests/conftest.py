"""
Pytest configuration and fixtures for the test suite.
"""

import os

# Keep internal parallelism small and deterministic before holonet is imported
os.environ.setdefault("HOLONET_THREADS", "2")

import numpy as np
import pytest

from holonet.cli import main
from holonet.compiler import LatticeSpec, RatePlan, apply_rate_plan, build_lattice
from holonet.group_core import GroupSpec
from holonet.network import CombinedKind, Network
from holonet.utils.parallel import reset_executor


@pytest.fixture(autouse=True)
def _fresh_executor():
    yield
    reset_executor()


@pytest.fixture
def u1():
    """U(1) with quantum 0.1 rad."""
    return GroupSpec.u1(0.1)


@pytest.fixture
def su2():
    """SU(2) with generators 0.1 (i sigma_x, i sigma_y, i sigma_z)."""
    return GroupSpec.su2(0.2)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def forward_triangle():
    """Combined network 0 -> 1 -> 2 -> 0."""
    net = Network(mode="combined", unit_length=1.0, vertex_count=3)
    for u, v in ((0, 1), (1, 2), (2, 0)):
        net.add_edge(u, v, CombinedKind(generator=0))
    return net.freeze()


@pytest.fixture
def make_lattice():
    """Build, direct and freeze a lattice: make_lattice(rows, cols, spacing=1.0, mode="dual", **fractions)."""

    def _make(rows, cols, spacing=1.0, mode="dual", freeze=True, **fractions):
        lattice = build_lattice(LatticeSpec(rows=rows, cols=cols, spacing=spacing, mode=mode))
        apply_rate_plan(lattice, RatePlan(**fractions))
        return lattice.freeze() if freeze else lattice

    return _make


@pytest.fixture
def write_file(tmp_path):
    """Write text into tmp_path and return the path as a string."""

    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def run_cli(capsys):
    """Run the holonet CLI in-process; returns (exit code, stdout, stderr)."""

    def _run(*argv):
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
