import asyncio

import pytest

from PyTidyKoszul import get_engine
from PyTidyKoszul.methods import gallery
from PyTidyKoszul.types.ring import IdealPresentation, PolynomialRing


@pytest.fixture
def run_engine():
    """Run ``fn(engine)`` on a fresh engine and close it afterwards."""

    def run(fn, **options):
        async def body():
            engine = await get_engine(**options)
            try:
                return await fn(engine)
            finally:
                await engine.close()

        return asyncio.run(body())

    return run


@pytest.fixture
def xyz():
    return PolynomialRing(("x", "y", "z"))


@pytest.fixture
def remark():
    return gallery.remark_ideal()


@pytest.fixture
def clebsch():
    return gallery.clebsch_ideal()


@pytest.fixture
def principal():
    def build(ring: PolynomialRing, *generators):
        return IdealPresentation(ring, generators)

    return build
