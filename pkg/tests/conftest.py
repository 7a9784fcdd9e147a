"""
Shared fixtures - تجهيزات الاختبارات المشتركة
"""

import os

os.environ['MONOCODE_ENV'] = 'testing'

import numpy as np
import pytest

from algebra.boolean_ring import Monomial
from algebra.monomial_order import decreasing_closure
from app import create_app
from data.sample_codes import load_sample
from models.code_model import from_monomials, reed_muller


@pytest.fixture
def app():
    """Flask application; pytest-flask builds the client fixture from it"""
    return create_app('testing')


@pytest.fixture(scope='session')
def polar_128_64():
    return load_sample('polar_128_64')


@pytest.fixture(scope='session')
def rm_2_5():
    return reed_muller(2, 5)


@pytest.fixture(scope='session')
def example5_code():
    return load_sample('example5_m8')


@pytest.fixture
def rng():
    return np.random.default_rng(2023)


def random_decreasing_code(rng, m: int, max_k: int):
    """Decreasing closure of a few random monomials, redrawn until 1 <= r < m and K <= max_k"""
    while True:
        seeds = []
        for _ in range(int(rng.integers(1, 4))):
            degree = int(rng.integers(1, m))
            seeds.append(Monomial.from_vars(rng.choice(m, size=degree, replace=False).tolist()))
        closed = decreasing_closure(seeds, m)
        spec = from_monomials(closed, m)
        if spec.K <= max_k and 1 <= spec.r < m:
            return spec
