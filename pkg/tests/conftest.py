from __future__ import annotations

import pytest

from twep.pauli import parse
from twep.stabilizer import StabilizerSet

FIVE_QUBIT = ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")
FOUR_QUBIT = ("XXXX", "ZZZZ")


@pytest.fixture
def five_qubit_code() -> StabilizerSet:
    return StabilizerSet(2, 5, [parse(g, 2) for g in FIVE_QUBIT])


@pytest.fixture
def four_qubit_code() -> StabilizerSet:
    return StabilizerSet(2, 4, [parse(g, 2) for g in FOUR_QUBIT])


@pytest.fixture
def qutrit_code() -> StabilizerSet:
    return StabilizerSet(3, 3, [parse("X,X,X", 3), parse("Z,Z,Z", 3)])
