from typing import Union

from . import methods
from .executor import Executor
from .methods.koszul import DEFAULT_KOSZUL_CAP
from .methods.tidyuniversal import DEFAULT_CAP, DEFAULT_SAMPLES
from .types.ring import normalize_field


class BaseEngine:
    def __init__(self, **kwargs):
        self.__field: str = normalize_field(kwargs.get("field", "QQ"))
        self.__universal_cap: int = int(kwargs.get("universal_cap", DEFAULT_CAP))
        self.__koszul_cap: int = int(kwargs.get("koszul_cap", DEFAULT_KOSZUL_CAP))
        self.__sample_size: int = int(kwargs.get("sample_size", DEFAULT_SAMPLES))
        self.__seed: int = int(kwargs.get("seed", 0))
        self.__chain_criterion: bool = bool(kwargs.get("chain_criterion", False))

    def set_field(self, field: Union[str, int]):
        self.__field = normalize_field(field)

    def set_universal_cap(self, cap: int):
        self.__universal_cap = int(cap)

    def set_koszul_cap(self, cap: int):
        self.__koszul_cap = int(cap)

    def set_sample_size(self, sample_size: int):
        self.__sample_size = int(sample_size)

    def set_seed(self, seed: int):
        self.__seed = int(seed)

    def set_chain_criterion(self, enabled: bool):
        self.__chain_criterion = bool(enabled)

    def get_field(self) -> str:
        return self.__field

    def get_universal_cap(self) -> int:
        return self.__universal_cap

    def get_koszul_cap(self) -> int:
        return self.__koszul_cap

    def get_sample_size(self) -> int:
        return self.__sample_size

    def get_seed(self) -> int:
        return self.__seed

    def get_chain_criterion(self) -> bool:
        return self.__chain_criterion


class AsyncEngine(BaseEngine):
    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self.__executor = Executor(**kwargs)

        self.grobner = methods.GrobnerMethods(self)
        self.universal = methods.UniversalMethods(self, self.__executor)
        self.koszul = methods.KoszulMethods(self, self.__executor)
        self.apolarity = methods.ApolarityMethods(self)
        self.gallery = methods.GalleryMethods(self, self.__executor)

    def _get_executor(self) -> Executor:
        return self.__executor

    def get_jobs(self) -> int:
        return self.__executor.jobs

    async def start(self) -> None:
        await self.__executor.pool_init()

    async def close(self) -> None:
        await self.__executor.pool_close()


async def get_engine(**kwargs) -> AsyncEngine:
    engine = AsyncEngine(**kwargs)
    await engine.start()
    return engine
