import pytest

from gdwn.games import validate_spec, wythoff_extension, wythoff_spec
from gdwn.sieve import compute_pi


@pytest.fixture(scope="session", autouse=True)
def warm_kernel():
    # force JIT compilation outside of any timed region
    compute_pi(wythoff_spec(), 16, engine="fast")


@pytest.fixture(scope="session")
def table_onetwo_50k():
    return compute_pi(wythoff_extension(1, 2), 50_000)


@pytest.fixture(scope="session")
def table_twothree_35k():
    return compute_pi(wythoff_extension(2, 3), 35_000)


@pytest.fixture(scope="session")
def table_twofour_20k():
    return compute_pi(wythoff_extension(2, 4), 20_000)


@pytest.fixture(scope="session")
def table_five_ext_51k():
    spec = validate_spec([(0, 1), (1, 1), (1, 2), (2, 3), (3, 5), (5, 8), (8, 13)])
    return compute_pi(spec, 51_000)


@pytest.fixture(scope="session")
def table_wythoff_5k():
    return compute_pi(wythoff_spec(), 5_000)
