import asyncio

import pytest

from PyTidyKoszul import Engine, get_engine
from PyTidyKoszul.exceptions import FieldError
from PyTidyKoszul.executor import Executor


def test_engine_defaults_and_setters():
    engine = Engine()
    assert engine.get_field() == "QQ"
    assert engine.get_universal_cap() == 9
    assert engine.get_koszul_cap() == 12
    assert engine.get_sample_size() == 200
    assert engine.get_jobs() == 1

    engine.set_field(7)
    engine.set_seed("5")
    engine.set_chain_criterion(1)
    assert engine.get_field() == "GF(7)"
    assert engine.get_seed() == 5
    assert engine.get_chain_criterion() is True
    with pytest.raises(FieldError):
        engine.set_field("GF(8)")


def test_engine_field_applies_to_gallery_names():
    async def body():
        engine = await get_engine(field="GF(101)")
        try:
            return await engine.gallery.gallery_ideal("clebsch")
        finally:
            await engine.close()

    assert asyncio.run(body()).field == "GF(101)"


def test_executor_split_keeps_order():
    assert Executor().split(range(5)) == [[0, 1, 2, 3, 4]]
    pieces = Executor(jobs=2).split(range(10))
    assert [i for piece in pieces for i in piece] == list(range(10))
    assert len(pieces) == 5
    assert Executor(jobs=3).split([]) == []
