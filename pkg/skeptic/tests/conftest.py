"""Root conftest for skeptic"""
import os
import tempfile
from pathlib import Path

import numpy as np
import pytest

# keep the test run from writing a config file into the user's home
os.environ["SKEPTIC_CONFIG"] = str(
    Path(tempfile.mkdtemp(prefix="skeptic-test-")) / "skeptic.ini"
)
from skeptic.dataset import make_synthetic_dataset
from skeptic.decision import FiniteCredalSet
from skeptic.golden import fixture
from skeptic.tree import ImpreciseBinaryTree, generate_tree

SEED = 20220614


def _random_tree(m: int, epsilon: float, seed: int) -> ImpreciseBinaryTree:
    return generate_tree(m, epsilon, np.random.default_rng([SEED, m, seed]))


def _random_finite_set(
    m: int, count: int, rng: np.random.Generator
) -> FiniteCredalSet:
    return FiniteCredalSet(m, rng.dirichlet(np.ones(1 << m), size=count))


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def random_tree():
    return _random_tree


@pytest.fixture
def random_finite_set():
    return _random_finite_set


@pytest.fixture
def precise_chain_tree():
    return ImpreciseBinaryTree.load(fixture("precise_chain_tree.json"))


@pytest.fixture
def dominance_tree():
    return ImpreciseBinaryTree.load(fixture("dominance_tree.json"))


@pytest.fixture
def partial_loss_tree():
    return ImpreciseBinaryTree.load(fixture("partial_loss_tree.json"))


@pytest.fixture
def finite_credal_set():
    return FiniteCredalSet.load(fixture("finite_credal_set.json"))


@pytest.fixture(scope="session")
def synthetic_dataset():
    return make_synthetic_dataset(n=300, m=4, d=6, seed=11)
