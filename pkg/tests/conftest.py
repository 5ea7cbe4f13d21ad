from functools import lru_cache

import pytest

from hqt.catalog import a2n2t, h2n2, k8, k8n_custom, k8n_sigma, k8n_zeta
from hqt.hopf import build_hopf

BUILDERS = {
    "k8": k8,
    "k16": lambda: k8n_zeta(2),
    "k32": lambda: k8n_zeta(4),
    "k24s": lambda: k8n_sigma(3, 12, 1),
    "flat1": lambda: k8n_custom(1),
    "flat2": lambda: k8n_custom(2),
    "h18": lambda: h2n2(3),
    "a18": lambda: a2n2t(3),
}


@lru_cache(maxsize=None)
def algebra(name):
    return build_hopf(BUILDERS[name]())


@pytest.fixture
def K8():
    return algebra("k8")


@pytest.fixture
def K16():
    return algebra("k16")


@pytest.fixture
def FLAT8():
    return algebra("flat1")
