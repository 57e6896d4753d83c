"""
Shared pytest fixtures
"""

import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.fields import FieldDescriptor
from src.geometry import PlaneConfig

MERSENNE_31 = 2_147_483_647


@pytest.fixture
def Q():
    return FieldDescriptor.rationals()


@pytest.fixture
def Fp():
    return FieldDescriptor.prime(MERSENNE_31)


@pytest.fixture
def F101():
    return FieldDescriptor.prime(101)


def veronese_config(field, xs=(1, 2, 3, 4, 5)):
    """m_i = [1, x_i, x_i^2] on y^2 = xz and m6 = [0, 1, 0]"""
    rows = [(1, x, x * x) for x in xs] + [(0, 1, 0)]
    return PlaneConfig.of(field, rows)


@pytest.fixture
def veronese(Q):
    return veronese_config(Q)


@pytest.fixture
def veronese_fp(Fp):
    return veronese_config(Fp)


@pytest.fixture
def collinear_cfg(Q):
    """m1, m2 and m6 = [1,3,7] on 2x - 3y + z = 0; no other collinear triple"""
    rows = [(1, x, x * x) for x in (1, 2, 3, 4, 6)] + [(1, 3, 7)]
    return PlaneConfig.of(Q, rows)


@pytest.fixture
def on_conic_cfg(Q):
    """Six points of y^2 = xz with m6 = [1, 0, 0]"""
    rows = [(1, x, x * x) for x in (1, 2, 3, 4, 5)] + [(1, 0, 0)]
    return PlaneConfig.of(Q, rows)


@pytest.fixture
def degenerate_witness(Q):
    """m1 on the edge m3 m4, and m1, m2, m6 collinear"""
    return PlaneConfig.of(Q, [(1, 1, 0), (1, 2, 3), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 3, 3)])
