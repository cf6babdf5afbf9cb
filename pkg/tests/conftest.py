import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def weak_composition_lists(max_len=4, max_part=3):
    return st.lists(st.integers(0, max_part), max_size=max_len)


@pytest.fixture(scope="session")
def small_shapes():
    return [(n, k) for n in range(2, 5) for k in range(1, 4)]
