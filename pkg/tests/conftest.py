import sys
from pathlib import Path

import pytest

from gyrolab.finite import product_gyrogroup, read_gyro, trivial

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))

GROUPS = ["z2", "z3", "z4", "klein4", "z5", "s3"]
GYRO8 = [f"gyro8_{c}" for c in "abcdef"]


def load(name):
    return read_gyro(DATA / f"{name}.gyro")


def group_tables():
    return {name: load(name) for name in GROUPS}


def product_tables(max_order=None):
    groups = group_tables()
    out = {}
    for a, ta in groups.items():
        for b, tb in groups.items():
            if max_order is None or ta.n * tb.n <= max_order:
                out[f"{a}x{b}"] = product_gyrogroup(ta, tb)
    return out


def fixture_tables(max_order):
    """Groups, their products and the order-8 gyrogroups, up to ``max_order``."""
    out = {"trivial": trivial()}
    out.update({k: t for k, t in group_tables().items() if t.n <= max_order})
    out.update(product_tables(max_order))
    out.update({name: load(name) for name in GYRO8 if 8 <= max_order})
    return out


@pytest.fixture
def data_dir():
    return DATA
