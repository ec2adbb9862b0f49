import pytest

from permlex import double, fibonacci_source, sturmian_characteristic, thue_morse_source


@pytest.fixture(scope="session")
def tm():
    return thue_morse_source()


@pytest.fixture(scope="session")
def fib():
    return fibonacci_source()


@pytest.fixture(scope="session")
def st2():
    return sturmian_characteristic((2,))


@pytest.fixture(scope="session")
def dtm(tm):
    return double(tm)


@pytest.fixture(scope="session")
def dfib(fib):
    return double(fib)
