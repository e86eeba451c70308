import pytest

from symrees.groebner import set_default_work_limit


@pytest.fixture(autouse=True)
def _reset_work_limit():
    yield
    set_default_work_limit(None)
