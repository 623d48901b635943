from typing import Iterable, List, Sequence, Tuple

from sympy.polys.rings import PolyElement

from .orders import MonomialOrder, grevlex
from .ring import PolynomialRing

Monomial = Tuple[int, ...]


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


class MonomialIdeal:
    """Monomial ideal kept as its minimal generators, sorted by degree then grevlex."""

    def __init__(self, ring: PolynomialRing, generators: Iterable[Sequence[int]]):
        self.ring: PolynomialRing = ring
        key = grevlex(ring.arity)
        candidates = sorted(set(tuple(g) for g in generators), key=lambda m: key(m))
        minimal: List[Monomial] = []
        for m in candidates:
            if not any(divides(g, m) for g in minimal):
                minimal.append(m)
        self.generators: Tuple[Monomial, ...] = tuple(minimal)

    def contains(self, monom: Sequence[int]) -> bool:
        return any(divides(g, monom) for g in self.generators)

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    def plus(self, monomials: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, list(self.generators) + [tuple(m) for m in monomials])

    def colon_variable(self, i: int) -> "MonomialIdeal":
        out = []
        for g in self.generators:
            g = list(g)
            g[i] = max(g[i] - 1, 0)
            out.append(tuple(g))
        return MonomialIdeal(self.ring, out)

    def has_pure_powers(self) -> bool:
        """True iff every variable has a pure power among the generators (S/I Artinian)."""
        found = set()
        for g in self.generators:
            support = [i for i, e in enumerate(g) if e]
            if len(support) == 1:
                found.add(support[0])
            elif not support:
                return True
        return len(found) == self.ring.arity

    def standard_monomials(self, degree: int) -> List[Monomial]:
        """Monomials of the given degree outside the ideal, descending under grevlex.

        Standard monomials form an order ideal, so each degree is grown from the
        previous one.
        """
        return self._standard_layers(degree)[degree]

    def _standard_layers(self, top: int) -> List[List[Monomial]]:
        n = self.ring.arity
        zero = (0,) * n
        layers = [[zero] if not self.contains(zero) else []]
        for _ in range(top):
            seen = set()
            for m in layers[-1]:
                for i in range(n):
                    c = m[:i] + (m[i] + 1,) + m[i + 1:]
                    if c not in seen and not self.contains(c):
                        seen.add(c)
            key = grevlex(n)
            layers.append(sorted(seen, key=key, reverse=True))
        return layers

    def hilbert_function(self, degrees: Iterable[int]) -> List[int]:
        degrees = list(degrees)
        if not degrees:
            return []
        layers = self._standard_layers(max(degrees))
        return [len(layers[d]) if d >= 0 else 0 for d in degrees]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.ring == other.ring and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.ring, self.generators))

    def __repr__(self) -> str:
        return f"<MonomialIdeal: {len(self.generators)} minimal generators>"


class GroebnerBasis:
    """A Gröbner basis for ``order``.

    ``polynomials`` live in the declaration-order ring so they compare equal to
    anything else the package produces; ``ordered`` holds the same elements in
    the ring carrying ``order`` and is what reductions run against.
    """

    def __init__(self, ring: PolynomialRing, order: MonomialOrder,
                 polynomials: Iterable[PolyElement], reduced: bool = True):
        self.ring: PolynomialRing = ring
        self.order: MonomialOrder = order
        self.ordered: Tuple[PolyElement, ...] = tuple(ring.convert(g, order) for g in polynomials if g)
        self.polynomials: Tuple[PolyElement, ...] = tuple(ring.convert(g) for g in self.ordered)
        self.reduced: bool = reduced

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.LM for g in self.ordered)

    def initial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, self.leading_monomials)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(max(sum(m) for m in g.itermonoms()) for g in self.ordered)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def is_quadratic(self) -> bool:
        return all(d == 2 for d in self.degrees)

    @property
    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    def reduce(self, f: PolyElement) -> PolyElement:
        """Normal form of ``f``, returned in the declaration-order ring."""
        if not self.ordered:
            return self.ring.convert(f)
        return self.ring.convert(self.ring.convert(f, self.order).rem(list(self.ordered)))

    def contains(self, f: PolyElement) -> bool:
        return not self.reduce(f)

    def __len__(self) -> int:
        return len(self.ordered)

    def __iter__(self):
        return iter(self.polynomials)

    def __repr__(self) -> str:
        return f"<GroebnerBasis: {len(self.ordered)} elements, degrees {sorted(set(self.degrees))}>"
