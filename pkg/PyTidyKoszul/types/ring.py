import re
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple, Union

from sympy import isprime
from sympy.polys.domains import QQ, GF
from sympy.polys.rings import PolyElement, PolyRing

from .orders import MonomialOrder, grevlex
from ..exceptions import FieldError, InvalidArgumentError

DEFAULT_PRIME = 32003

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_FIELD = re.compile(r"^\s*(?:QQ|GF\(\s*(\d+)\s*\))\s*$")


def normalize_field(field: Union[str, int, None]) -> str:
    """Canonical field tag: ``QQ`` or ``GF(p)`` with p prime. An int means GF(int)."""
    if field is None:
        return "QQ"
    if isinstance(field, int):
        field = f"GF({field})"
    match = _FIELD.match(str(field))
    if match is None:
        raise FieldError(f"unsupported field '{field}', expected QQ or GF(p)")
    if match.group(1) is None:
        return "QQ"
    p = int(match.group(1))
    if not isprime(p):
        raise FieldError(f"GF({p}): {p} is not prime")
    return f"GF({p})"


@lru_cache(maxsize=None)
def _domain(field: str):
    if field == "QQ":
        return QQ
    return GF(int(field[3:-1]), symmetric=False)


@lru_cache(maxsize=4096)
def _sympy_ring(variables: Tuple[str, ...], field: str, order: MonomialOrder) -> PolyRing:
    return PolyRing(variables, _domain(field), order)


class PolynomialRing:
    """Variable names plus a field tag; sympy rings are built lazily per monomial order."""

    def __init__(self, variables: Iterable[str], field: Union[str, int, None] = "QQ"):
        self.variables: Tuple[str, ...] = tuple(str(v).strip() for v in variables)
        self.field: str = normalize_field(field)

        seen = set()
        for name in self.variables:
            if not _IDENTIFIER.match(name):
                raise InvalidArgumentError(f"invalid variable name '{name}'")
            if name in seen:
                raise InvalidArgumentError(f"duplicate variable name '{name}'")
            seen.add(name)

    @classmethod
    def of(cls, ring: PolyRing) -> "PolynomialRing":
        domain = ring.domain
        field = "QQ" if domain == QQ else f"GF({domain.characteristic()})"
        return cls(tuple(str(s) for s in ring.symbols), field)

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def characteristic(self) -> int:
        return 0 if self.field == "QQ" else int(self.field[3:-1])

    @property
    def domain(self):
        return _domain(self.field)

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.arity:
                raise InvalidArgumentError(f"variable index {name} out of range")
            return name
        try:
            return self.variables.index(name)
        except ValueError:
            raise InvalidArgumentError(f"unknown variable '{name}'")

    def indices(self, names: Iterable[Union[str, int]]) -> Tuple[int, ...]:
        return tuple(sorted(set(self.index(name) for name in names)))

    def sympy_ring(self, order: Optional[MonomialOrder] = None) -> PolyRing:
        if not self.variables:
            raise InvalidArgumentError("the ring has no variables")
        order = order or grevlex(self.arity)
        if order.arity != self.arity:
            raise InvalidArgumentError(f"order arity {order.arity} does not match ring arity {self.arity}")
        return _sympy_ring(self.variables, self.field, order)

    @property
    def base(self) -> PolyRing:
        return self.sympy_ring()

    def gens(self, order: Optional[MonomialOrder] = None) -> Tuple[PolyElement, ...]:
        return self.sympy_ring(order).gens

    def gen(self, name: Union[str, int], order: Optional[MonomialOrder] = None) -> PolyElement:
        return self.gens(order)[self.index(name)]

    def monomial(self, exponents: Sequence[int], order: Optional[MonomialOrder] = None) -> PolyElement:
        R = self.sympy_ring(order)
        return R.from_dict({tuple(exponents): R.domain.one})

    def convert(self, f: PolyElement, order: Optional[MonomialOrder] = None) -> PolyElement:
        """Move ``f`` into this ring under ``order``; the variable names must agree."""
        R = self.sympy_ring(order)
        if f.ring == R:
            return f
        if tuple(str(s) for s in f.ring.symbols) != self.variables:
            raise InvalidArgumentError(
                f"polynomial over {tuple(str(s) for s in f.ring.symbols)} is not in ring {self.variables}")
        if f.ring.domain != R.domain:
            raise FieldError(f"polynomial over {f.ring.domain} cannot be moved to {self.field}")
        return R.from_dict(dict(f))

    def with_variables(self, variables: Iterable[str]) -> "PolynomialRing":
        return PolynomialRing(variables, self.field)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolynomialRing) and (self.variables, self.field) == (other.variables, other.field)

    def __hash__(self) -> int:
        return hash((self.variables, self.field))

    def __repr__(self) -> str:
        return f"PolynomialRing({', '.join(self.variables)}; {self.field})"


class IdealPresentation:
    """Generators of an ideal I of S; zero generators are dropped on construction.

    ``label`` and ``excluded_characteristics`` are provenance only and do not
    take part in equality.
    """

    def __init__(self, ring: PolynomialRing, generators: Iterable[PolyElement] = (),
                 label: Optional[str] = None, excluded_characteristics: Iterable[int] = (),
                 caveat_modulus: Optional[int] = None):
        self.ring: PolynomialRing = ring
        self.generators: Tuple[PolyElement, ...] = tuple(
            ring.convert(g) for g in generators if g)
        self.label: Optional[str] = label
        self.excluded_characteristics: Tuple[int, ...] = tuple(sorted(set(excluded_characteristics)))
        self.caveat_modulus: Optional[int] = caveat_modulus

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.ring.variables

    @property
    def field(self) -> str:
        return self.ring.field

    @property
    def is_homogeneous(self) -> bool:
        return all(len({sum(m) for m in g.itermonoms()}) == 1 for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def with_generators(self, generators: Iterable[PolyElement]) -> "IdealPresentation":
        return IdealPresentation(self.ring, generators, self.label,
                                 self.excluded_characteristics, self.caveat_modulus)

    def plus(self, extra: Iterable[PolyElement]) -> "IdealPresentation":
        return self.with_generators(self.generators + tuple(extra))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return (isinstance(other, IdealPresentation) and self.ring == other.ring
                and self.generators == other.generators)

    def __hash__(self) -> int:
        return hash((self.ring, self.generators))

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return f"<IdealPresentation{name}: {len(self.generators)} generators in {self.ring}>"


class ProductPresentation:
    """Tensor or fiber product of two presentations over one field.

    ``factor_of[i]`` tells which factor (1 or 2) variable i came from.
    """

    def __init__(self, ideal: IdealPresentation, kind: str, factor_of: Iterable[int]):
        if kind not in ("tensor", "fiber"):
            raise InvalidArgumentError(f"unknown product kind '{kind}'")
        self.ideal: IdealPresentation = ideal
        self.kind: str = kind
        self.factor_of: Tuple[int, ...] = tuple(factor_of)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.ideal.variables

    @property
    def generators(self) -> Tuple[PolyElement, ...]:
        return self.ideal.generators

    def __repr__(self) -> str:
        return f"<ProductPresentation {self.kind}: {len(self.variables)} variables, {len(self.generators)} generators>"
