"""Shared golden fixtures: the five worked hypersurfaces with pinned F and S.

Coordinates of the divisor depend on the choice of kernel basis and section,
so every fixture pins both to the published matrices.
"""

from dataclasses import dataclass

import pytest

from trinodiv.exactla import IntMatrix
from trinodiv.trinomial import TrinomialInput, validate


@dataclass(frozen=True)
class Fixture:
    name: str
    t: TrinomialInput
    f: IntMatrix
    s: IntMatrix


def factorial_fixture() -> Fixture:
    return Fixture(
        "factorial",
        validate((3,), (5,), (1, 1)),
        IntMatrix.from_columns([(5, 3, 0, 15), (0, 0, 1, -1)]),
        IntMatrix.from_rows([(2, -3, 0, 0), (0, 0, 1, 0)]),
    )


def type_i_fixture() -> Fixture:
    return Fixture(
        "type_i",
        validate((2,), (3,), (3, 3)),
        IntMatrix.from_columns([(3, 2, 0, 2), (0, 0, 1, -1)]),
        IntMatrix.from_rows([(1, -1, 0, 0), (0, 0, 1, 0)]),
    )


def type_ii_fixture() -> Fixture:
    return Fixture(
        "type_ii",
        validate((2,), (4,), (2, 4)),
        IntMatrix.from_columns([(2, 1, 0, 1), (0, 0, -2, 1)]),
        IntMatrix.from_rows([(1, -1, 0, 0), (0, -1, 0, 1)]),
    )


def pham_brieskorn_fixture() -> Fixture:
    return Fixture(
        "pham_brieskorn_236",
        validate((2,), (3,), (6,)),
        IntMatrix.from_columns([(3, 2, 1)]),
        IntMatrix.from_rows([(1, -1, 0)]),
    )


def non_rational_fixture() -> Fixture:
    return Fixture(
        "non_rational",
        validate((2,), (3,), (6, 6)),
        IntMatrix.from_columns([(3, 2, 0, 1), (0, 0, 1, -1)]),
        IntMatrix.from_rows([(1, -1, 0, 0), (0, 0, 1, 0)]),
    )


ALL_FIXTURES = (
    factorial_fixture,
    type_i_fixture,
    type_ii_fixture,
    pham_brieskorn_fixture,
    non_rational_fixture,
)


@pytest.fixture
def factorial():
    return factorial_fixture()


@pytest.fixture
def type_i():
    return type_i_fixture()


@pytest.fixture
def type_ii():
    return type_ii_fixture()


@pytest.fixture
def pb236():
    return pham_brieskorn_fixture()


@pytest.fixture
def non_rational():
    return non_rational_fixture()


@pytest.fixture(params=ALL_FIXTURES, ids=lambda f: f().name)
def any_fixture(request):
    return request.param()
