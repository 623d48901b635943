"""Monomial orders.

Every order is a frozen, hashable callable mapping an exponent tuple to a
sort key, so it can be handed to ``sympy.polys.rings.PolyRing`` directly
as the ring order. Rankings list variable indices from highest to lowest.
"""
from dataclasses import dataclass, field
from typing import Sequence, Tuple

from ..exceptions import InvalidArgumentError

LT, EQ, GT = -1, 0, 1

Monomial = Tuple[int, ...]


def _check_ranking(ranking: Sequence[int], arity: int = None) -> Tuple[int, ...]:
    ranking = tuple(int(i) for i in ranking)
    n = len(ranking) if arity is None else arity
    if sorted(ranking) != list(range(n)):
        raise InvalidArgumentError(f"ranking {ranking} is not a permutation of {n} variables")
    return ranking


class MonomialOrder:
    kind: str = ""

    @property
    def arity(self) -> int:
        raise NotImplementedError

    def __call__(self, monom: Monomial) -> tuple:
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != self.arity or len(b) != self.arity:
            raise InvalidArgumentError(
                f"monomial arity {len(a)}/{len(b)} does not match order arity {self.arity}")
        ka, kb = self(a), self(b)
        if ka == kb:
            return EQ
        return GT if ka > kb else LT

    def describe(self, variables: Sequence[str]) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class RevlexOrder(MonomialOrder):
    ranking: Tuple[int, ...]
    _reversed: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    kind = "revlex"

    def __post_init__(self):
        object.__setattr__(self, "ranking", _check_ranking(self.ranking))
        object.__setattr__(self, "_reversed", tuple(reversed(self.ranking)))

    @property
    def arity(self) -> int:
        return len(self.ranking)

    def __call__(self, monom: Monomial) -> tuple:
        # the lowest ranked variable where exponents differ decides; smaller exponent wins
        return sum(monom), tuple(-monom[i] for i in self._reversed)

    def describe(self, variables: Sequence[str]) -> str:
        return "revlex:" + ",".join(variables[i] for i in self.ranking)


@dataclass(frozen=True)
class LexOrder(MonomialOrder):
    ranking: Tuple[int, ...]
    kind = "lex"

    def __post_init__(self):
        object.__setattr__(self, "ranking", _check_ranking(self.ranking))

    @property
    def arity(self) -> int:
        return len(self.ranking)

    def __call__(self, monom: Monomial) -> tuple:
        return tuple(monom[i] for i in self.ranking)

    def describe(self, variables: Sequence[str]) -> str:
        return "lex:" + ",".join(variables[i] for i in self.ranking)


@dataclass(frozen=True)
class BlockOrder(MonomialOrder):
    """Compare the degree in the front block first, then fall back to ``inner``."""
    front: Tuple[int, ...]
    inner: MonomialOrder
    kind = "block"

    def __post_init__(self):
        front = tuple(sorted(set(int(i) for i in self.front)))
        if any(i < 0 or i >= self.inner.arity for i in front):
            raise InvalidArgumentError(f"block front {front} out of range")
        object.__setattr__(self, "front", front)

    @property
    def arity(self) -> int:
        return self.inner.arity

    def __call__(self, monom: Monomial) -> tuple:
        return sum(monom[i] for i in self.front), self.inner(monom)

    def describe(self, variables: Sequence[str]) -> str:
        return "block:" + ",".join(variables[i] for i in self.front) + "|" + self.inner.describe(variables)


def grevlex(n: int) -> RevlexOrder:
    """Revlex with the declaration order x1 > x2 > ... > xn."""
    return RevlexOrder(tuple(range(n)))


def revlex_lowest(n: int, lowest: Sequence[int]) -> RevlexOrder:
    """Revlex in declaration order except that ``lowest`` is moved to the bottom, in the given order."""
    lowest = [int(i) for i in lowest]
    return RevlexOrder(tuple(i for i in range(n) if i not in lowest) + tuple(lowest))


def _indices(names: str, variables: Sequence[str]) -> Tuple[int, ...]:
    index = {name: i for i, name in enumerate(variables)}
    out = []
    for name in (part.strip() for part in names.split(",")):
        if not name:
            continue
        if name not in index:
            raise InvalidArgumentError(f"unknown variable '{name}' in order spec")
        out.append(index[name])
    return tuple(out)


def parse_order(spec: str, variables: Sequence[str]) -> MonomialOrder:
    """Parse ``revlex:x3,x1,x2`` (x3 > x1 > x2), ``lex:...`` or ``block:t|revlex:...``."""
    spec = (spec or "revlex").strip()
    n = len(variables)
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()

    if kind == "block":
        front_names, sep, inner_spec = rest.partition("|")
        if not sep:
            raise InvalidArgumentError(f"block order '{spec}' needs an inner order after '|'")
        return BlockOrder(_indices(front_names, variables), parse_order(inner_spec, variables))

    if kind not in ("revlex", "grevlex", "lex"):
        raise InvalidArgumentError(f"unknown order kind '{kind}'")

    ranking = _indices(rest, variables) if rest.strip() else tuple(range(n))
    if sorted(ranking) != list(range(n)):
        raise InvalidArgumentError(f"order '{spec}' must rank every variable exactly once")
    return LexOrder(ranking) if kind == "lex" else RevlexOrder(ranking)
