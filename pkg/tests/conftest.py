import pytest
from hypothesis import settings

from noloopwb.corpus import get_entry

settings.register_profile("noloopwb", max_examples=40, deadline=None)
settings.load_profile("noloopwb")


def load(name):
    return get_entry(name).algebra()


@pytest.fixture(scope="session")
def example1():
    return load("example1")


@pytest.fixture(scope="session")
def example2():
    return load("example2-ambient")


@pytest.fixture(scope="session")
def loopnil2():
    return load("loopnil2")


@pytest.fixture(scope="session")
def loopnil3():
    return load("loopnil3")


@pytest.fixture(scope="session")
def a2():
    return load("a2")


@pytest.fixture(scope="session")
def kronecker():
    return load("kronecker")


@pytest.fixture(scope="session")
def l34():
    return load("l34-witness")


@pytest.fixture(scope="session")
def pf_case_1():
    return load("pf-case-1")
