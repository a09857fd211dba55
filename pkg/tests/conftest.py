import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from seqbase import base_sequences


@pytest.fixture(scope="session")
def prime_base():
    return base_sequences.prime()


@pytest.fixture(scope="session")
def square_base():
    return base_sequences.square()


@pytest.fixture(scope="session")
def factorial_base():
    return base_sequences.factorial()


@pytest.fixture(scope="session")
def all_builtin_bases():
    """One shared instance per built-in family (caches persist across tests)."""
    return [
        base_sequences.prime(),
        base_sequences.square(),
        base_sequences.m_power(3),
        base_sequences.factorial(),
        base_sequences.power_of(10),
        base_sequences.fibonacci(),
        base_sequences.lucas(),
    ]
