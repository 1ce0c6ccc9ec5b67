import numpy as np
import pytest
from hypothesis import settings

from ppcode.gf.field import field_create

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def gf5():
    return field_create(5)


@pytest.fixture(scope="session")
def gf9():
    return field_create(3, 2, [1, 0, 1])


@pytest.fixture(scope="session")
def gf11():
    return field_create(11)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def naive_mul(a, b, p, modulus):
    """Reference product in GF(p)[x]/(modulus) on serialized ints, no numpy."""
    r = len(modulus) - 1
    da = [(a // p**i) % p for i in range(r)]
    db = [(b // p**i) % p for i in range(r)]
    prod = [0] * (2 * r - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, r - 1, -1):
        c = prod[k]
        if c:
            for i in range(r + 1):
                prod[k - r + i] = (prod[k - r + i] - c * modulus[i]) % p
    return sum(prod[i] * p**i for i in range(r))


_criteria: dict[int, str] = {}


@pytest.fixture
def report_criterion():
    """Record the one-line verdict of an acceptance criterion."""
    def record(number: int, passed: bool, detail: str) -> bool:
        _criteria[number] = f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}"
        print(_criteria[number])
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_criteria):
            terminalreporter.write_line(_criteria[k])
