"""Structural operations on sparse polynomials.

Polynomials are ``sympy.polys.rings.PolyElement`` values; a
:class:`~PyTidyKoszul.types.ring.PolynomialRing` recovers names and field
from any of them.
"""
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.rings import PolyElement

from . import linalg
from ..exceptions import InvalidArgumentError, ZeroPolynomialError
from ..types.orders import MonomialOrder, grevlex
from ..types.ring import PolynomialRing

Variable = Union[str, int]


def compare(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> int:
    return order.compare(tuple(a), tuple(b))


def ambient(f: PolyElement) -> PolynomialRing:
    return PolynomialRing.of(f.ring)


def degree(f: PolyElement) -> int:
    if not f:
        raise ZeroPolynomialError("the zero polynomial has no degree")
    return max(sum(m) for m in f.itermonoms())


def is_homogeneous(f: PolyElement) -> bool:
    return len({sum(m) for m in f.itermonoms()}) <= 1


def support(f: PolyElement) -> Tuple[Tuple[int, ...], ...]:
    return tuple(f.itermonoms())


def is_tidy(f: PolyElement) -> bool:
    """Each variable divides at most one monomial in the support of ``f``."""
    monoms = list(f.itermonoms())
    for i in range(f.ring.ngens):
        if sum(1 for m in monoms if m[i]) > 1:
            return False
    return True


def leading_monomial(f: PolyElement, order: MonomialOrder) -> Tuple[int, ...]:
    if not f:
        raise ZeroPolynomialError("the zero polynomial has no leading monomial")
    return max(f.itermonoms(), key=order)


def reorder(f: PolyElement, order: Optional[MonomialOrder] = None) -> PolyElement:
    return ambient(f).convert(f, order)


def substitute_linear(f: PolyElement, mapping: Mapping[Variable, PolyElement]) -> PolyElement:
    """Simultaneously replace variables by polynomials of degree at most one."""
    ring = ambient(f)
    R = f.ring
    replacements = {}
    for name, image in mapping.items():
        i = ring.index(name)
        if tuple(str(s) for s in image.ring.symbols) != ring.variables:
            raise InvalidArgumentError(f"image of {ring.variables[i]} lives over a different set of variables")
        if image and degree(image) > 1:
            raise InvalidArgumentError(f"image of {ring.variables[i]} is not of degree <= 1")
        replacements[R.gens[i]] = R.from_dict(dict(image))
    if not replacements:
        return f
    return f.compose(replacements)


def set_variables_to_zero(f: PolyElement, Y: Iterable[Variable]) -> PolyElement:
    """Image of ``f`` under the projection killing ``Y``, kept in the same ring."""
    dead = ambient(f).indices(Y)
    if not dead:
        return f
    return f.ring.from_dict({m: c for m, c in f.iterterms() if not any(m[i] for i in dead)})


def drop_variables(f: PolyElement, target: PolynomialRing, kept: Sequence[int]) -> PolyElement:
    """Rewrite ``f`` (already free of the removed variables) over ``target`` using columns ``kept``."""
    R = target.base
    return R.from_dict({tuple(m[i] for i in kept): c for m, c in f.iterterms()})


def linear_map_matrix(ring: PolynomialRing, mapping: Mapping[Variable, PolyElement]):
    """Coefficient matrix of a homogeneous linear change (row i: image of variable i)."""
    n = ring.arity
    K = ring.domain
    rows = []
    for i in range(n):
        image = mapping.get(ring.variables[i], mapping.get(i))
        row = [K.zero] * n
        if image is None:
            row[i] = K.one
        else:
            for m, c in image.iterterms():
                if sum(m) != 1:
                    raise InvalidArgumentError(f"image of {ring.variables[i]} is not a linear form")
                row[m.index(1)] = c
        rows.append(row)
    return rows


def require_invertible(ring: PolynomialRing, mapping: Mapping[Variable, PolyElement]) -> None:
    if not linalg.determinant(linear_map_matrix(ring, mapping), ring.domain):
        raise InvalidArgumentError("the linear change is not invertible")


def inverse_map(ring: PolynomialRing, mapping: Mapping[Variable, PolyElement]) -> Dict[str, PolyElement]:
    """The change undoing ``mapping``: substituting one after the other gives back the input."""
    require_invertible(ring, mapping)
    inverse = linalg.inverse(linear_map_matrix(ring, mapping), ring.domain)
    R = ring.base
    n = ring.arity
    return {name: R.from_dict({tuple(int(t == j) for t in range(n)): c for j, c in enumerate(inverse[i]) if c})
            for i, name in enumerate(ring.variables)}


def monomials_of_degree(n: int, d: int):
    """Exponent tuples of degree ``d`` in ``n`` variables, descending under grevlex."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        m = [0] * n
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    out.sort(key=grevlex(n), reverse=True)
    return out
