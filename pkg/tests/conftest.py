import pytest

from qmpoly import Flag, field, random_code, random_subcode


@pytest.fixture(scope="session")
def gf2():
    return field(2)


@pytest.fixture(scope="session")
def gf3():
    return field(3)


@pytest.fixture(scope="session")
def gf4():
    return field(2, 2)


def random_flag(f, m, n, length, rng):
    """Strictly decreasing random flag of the given length."""
    dims = sorted(rng.sample(range(m * n + 1), length), reverse=True)
    codes = [random_code(f, m, n, dims[0], rng)]
    for d in dims[1:]:
        codes.append(random_subcode(codes[-1], d, rng))
    return Flag(codes)
