from fractions import Fraction

import pytest

from tlcob.tl import TLBackend


@pytest.fixture
def backend() -> TLBackend:
    return TLBackend(2)


@pytest.fixture(params=[Fraction(2), Fraction(5, 2), Fraction(3)], ids=["d2", "d5over2", "d3"])
def any_backend(request) -> TLBackend:
    return TLBackend(request.param)
