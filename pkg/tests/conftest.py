import pytest

from gdrazin import Matrix

EX21_A = Matrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
EX21_B = Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
SHIFT = Matrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]])


@pytest.fixture
def ex21():
    return EX21_A, EX21_B


@pytest.fixture
def ex22():
    return SHIFT, SHIFT
