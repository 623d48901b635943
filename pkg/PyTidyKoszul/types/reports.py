from typing import Dict, List, Union

from .base import BaseReport

TOOL_VERSION = "0.1.0"


class UniversalGBReport(BaseReport):
    def __init__(self, options: Dict):
        super().__init__(options)

        self.variables: List[str] = options.get("variables", [])
        self.candidates: List[str] = options.get("candidates", [])
        self.mode: str = options.get("mode", "exhaustive")
        self.sample_count: Union[int, None] = options.get("sample_count", None)
        self.seed: Union[int, None] = options.get("seed", None)
        self.orders_checked: int = options.get("orders_checked", 0)
        self.universal: bool = options.get("universal", False)
        self.witness: Union[Dict, None] = options.get("witness", None)
        self.is_tidy_set: bool = options.get("is_tidy_set", False)
        self.is_quadratic: bool = options.get("is_quadratic", False)
        self.symmetry_group_size: Union[int, None] = options.get("symmetry_group_size", None)

    @property
    def verdict(self) -> str:
        if self.universal:
            return "universal" if self.mode == "exhaustive" else "no-counterexample-found"
        return "not-universal"


class StrongKoszulCertificate(BaseReport):
    """Strong Koszulness with respect to the variables.

    ``verdict`` is one of ``certified``, ``counterexample``, ``inconclusive``
    and ``no-counterexample-found`` (sampled runs never certify).
    """

    def __init__(self, options: Dict):
        super().__init__(options)

        self.ideal_hash: str = options.get("ideal_hash", "")
        self.variables: List[str] = options.get("variables", [])
        self.field: str = options.get("field", "QQ")
        self.mode: str = options.get("mode", "exhaustive")
        self.sample_count: Union[int, None] = options.get("sample_count", None)
        self.seed: Union[int, None] = options.get("seed", None)
        self.verdict: str = options.get("verdict", "inconclusive")
        self.pairs_checked: int = options.get("pairs_checked", 0)
        self.pairs: List[Dict] = options.get("pairs", [])
        self.witness: Union[Dict, None] = options.get("witness", None)
        self.universal: Union[Dict, None] = options.get("universal", None)
        self.reason: Union[str, None] = options.get("reason", None)

        # colon generators per stored pair, kept for the soundness recheck only
        self._colons: List[List] = options.get("colons", [])

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"


class ObstructionReport(BaseReport):
    def __init__(self, options: Dict):
        super().__init__(options)

        self.ideal_hash: str = options.get("ideal_hash", "")
        self.variables: List[str] = options.get("variables", [])
        self.field: str = options.get("field", "QQ")
        self.quadratically_generated: bool = options.get("quadratically_generated", False)
        self.ideal_artinian: bool = options.get("ideal_artinian", False)
        self.quadric_dimension: int = options.get("quadric_dimension", 0)
        self.perp_dimension: int = options.get("perp_dimension", 0)
        self.perp_basis: List[str] = options.get("perp_basis", [])
        self.perp_artinian: bool = options.get("perp_artinian", False)
        self.conclusion: str = options.get("conclusion", "inconclusive")
        self.excluded_characteristics: List[int] = options.get("excluded_characteristics", [2])
        self.caveat_modulus: Union[int, None] = options.get("caveat_modulus", None)
        self.caveat: str = options.get("caveat", "")

    @property
    def obstructed(self) -> bool:
        return self.conclusion == "no-quadratic-GB-after-any-linear-change"


class CayleyReport(BaseReport):
    def __init__(self, options: Dict):
        super().__init__(options)

        self.order: List[str] = options.get("order", [])
        self.quadratic_monomials: int = options.get("quadratic_monomials", 0)
        self.base_monomials: int = options.get("base_monomials", 0)
        self.claim_a: bool = options.get("claim_a", False)
        self.claim_b: bool = options.get("claim_b", False)
        self.claim_c: bool = options.get("claim_c", False)
        self.standard_cubics: List[str] = options.get("standard_cubics", [])
        self.lowest_plane: List[str] = options.get("lowest_plane", [])
        self.hilbert_function: List[int] = options.get("hilbert_function", [])

    @property
    def holds(self) -> bool:
        return self.claim_a and self.claim_b and self.claim_c and self.hilbert_function == [1, 27, 27, 1, 0]


class RunReport(BaseReport):
    def __init__(self, options: Dict):
        super().__init__(options)

        self.command: str = options.get("command", "")
        self.inputs: Dict[str, str] = options.get("inputs", {})
        self.mode: Union[str, None] = options.get("mode", None)
        self.seed: Union[int, None] = options.get("seed", None)
        self.wall_time: float = options.get("wall_time", 0.0)
        self.verdicts: Dict = options.get("verdicts", {})
        self.witnesses: Dict = options.get("witnesses", {})
        self.result: Union[Dict, None] = options.get("result", None)
        self.version: str = options.get("version", TOOL_VERSION)
