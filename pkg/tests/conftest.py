import pytest

from saf import fixtures


@pytest.fixture
def three_class():
    return fixtures.three_class_example()


@pytest.fixture
def cycle_mutual():
    return fixtures.cycle_with_mutual_pair()


@pytest.fixture
def skeptical_gap():
    return fixtures.skeptical_gap_example()
