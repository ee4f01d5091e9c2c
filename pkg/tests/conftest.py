import pytest

from quadghw.field import FieldSpec


@pytest.fixture
def f9():
    """F_9 with modulus x^2 + 1."""
    return FieldSpec(3, 2, (1, 0, 1))
