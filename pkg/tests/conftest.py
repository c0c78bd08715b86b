import hypothesis
import pytest

from greenflowshop.instance import load_table3

hypothesis.settings.register_profile("fast", max_examples=20)
hypothesis.settings.register_profile("thorough", max_examples=500)


@pytest.fixture(scope="session")
def table3():
    return load_table3()
