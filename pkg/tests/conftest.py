import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from garside import Factor, load_presentation, simple_closure  # noqa: E402

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA, name)


@pytest.fixture(scope="session")
def chi():
    return load_presentation(data_path("chi.mon"))


@pytest.fixture(scope="session")
def kappa():
    return load_presentation(data_path("kappa.mon"))


@pytest.fixture(scope="session")
def chi_gs(chi):
    return simple_closure(chi)


@pytest.fixture(scope="session")
def kappa_gs(kappa):
    return simple_closure(kappa)


@pytest.fixture(scope="session")
def chi_factor(chi):
    return Factor.of(chi)


@pytest.fixture(scope="session")
def kappa_factor(kappa):
    return Factor.of(kappa)
