"""Buchberger's algorithm and the ideal operations built on reduced Gröbner bases."""
import heapq
import logging
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from . import linalg
from .polyring import ambient, drop_variables, is_homogeneous, monomials_of_degree
from ..exceptions import ComputationError, InvalidArgumentError, NonHomogeneousError
from ..types.groebner import GroebnerBasis, MonomialIdeal
from ..types.orders import BlockOrder, MonomialOrder, grevlex, revlex_lowest
from ..types.ring import IdealPresentation, PolynomialRing

logger = logging.getLogger(__name__)


def s_polynomial(f: PolyElement, g: PolyElement) -> PolyElement:
    R = f.ring
    K = R.domain
    lcm = R.monomial_lcm(f.LM, g.LM)
    return (f.mul_term((R.monomial_div(lcm, f.LM), K.quo(K.one, f.LC)))
            - g.mul_term((R.monomial_div(lcm, g.LM), K.quo(K.one, g.LC))))


def _coprime(R, a, b) -> bool:
    return R.monomial_lcm(a, b) == R.monomial_mul(a, b)


def normal_form(f: PolyElement, G: Sequence[PolyElement], order: Optional[MonomialOrder] = None) -> PolyElement:
    """Remainder of ``f`` modulo ``G``: the highest reducible term goes first, the first divisor in ``G`` wins."""
    ring = ambient(f)
    order = order or grevlex(ring.arity)
    divisors = [ring.convert(g, order) for g in G if g]
    f = ring.convert(f, order)
    if divisors:
        f = f.rem(divisors)
    return ring.convert(f)


def _minimal_reduced(G: List[PolyElement], order_key) -> List[PolyElement]:
    R = G[0].ring
    minimal: List[PolyElement] = []
    for g in sorted(G, key=lambda h: order_key(h.LM)):
        if not any(R.monomial_div(g.LM, h.LM) is not None for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append((g.rem(others) if others else g).monic())
    return sorted(reduced, key=lambda h: order_key(h.LM))


def buchberger(I: IdealPresentation, order: Optional[MonomialOrder] = None,
               chain_criterion: bool = False) -> GroebnerBasis:
    """Reduced monic Gröbner basis of ``I``.

    Pairs are handled lowest lcm degree first, ties in insertion order, and
    pairs with coprime leading monomials are dropped. ``chain_criterion``
    additionally drops pairs (i, j) when some k has LM(k) | lcm(i, j) and
    neither (i, k) nor (j, k) is still pending.
    """
    ring = I.ring
    order = order or grevlex(ring.arity)
    if I.is_zero:
        return GroebnerBasis(ring, order, ())
    R = ring.sympy_ring(order)
    one = R.one

    G: List[PolyElement] = []
    queue: List[Tuple[int, int, int, int]] = []
    pending = set()
    counter = 0

    def add(h: PolyElement):
        nonlocal counter
        k = len(G)
        G.append(h)
        for i in range(k):
            if _coprime(R, G[i].LM, h.LM):
                continue
            lcm = R.monomial_lcm(G[i].LM, h.LM)
            heapq.heappush(queue, (sum(lcm), counter, i, k))
            pending.add((i, k))
            counter += 1

    for g in I.generators:
        g = ring.convert(g, order).monic()
        if g.LM == R.zero_monom:
            return GroebnerBasis(ring, order, (one,))
        add(g)

    processed = 0
    while queue:
        _, _, i, j = heapq.heappop(queue)
        pending.discard((i, j))
        if chain_criterion:
            lcm = R.monomial_lcm(G[i].LM, G[j].LM)
            if any(k != i and k != j
                   and R.monomial_div(lcm, G[k].LM) is not None
                   and (min(i, k), max(i, k)) not in pending
                   and (min(j, k), max(j, k)) not in pending
                   for k in range(len(G))):
                continue
        processed += 1
        r = s_polynomial(G[i], G[j]).rem(G)
        if not r:
            continue
        r = r.monic()
        if r.LM == R.zero_monom:
            return GroebnerBasis(ring, order, (one,))
        add(r)

    logger.debug("buchberger: %d pairs reduced, %d elements before interreduction", processed, len(G))
    return GroebnerBasis(ring, order, _minimal_reduced(G, order))


@lru_cache(maxsize=4096)
def _memo(I: IdealPresentation, order: MonomialOrder, chain_criterion: bool) -> GroebnerBasis:
    return buchberger(I, order, chain_criterion)


def reduced_basis(I: IdealPresentation, order: Optional[MonomialOrder] = None,
                  chain_criterion: bool = False) -> GroebnerBasis:
    """Memoised :func:`buchberger`; the result is unique, so sharing it is safe."""
    hits = _memo.cache_info().hits
    basis = _memo(I, order or grevlex(I.ring.arity), chain_criterion)
    if _memo.cache_info().hits > hits:
        logger.debug("reduced basis cache hit (%s)", I.label or "unlabelled ideal")
    return basis


def first_failing_pair(G: Sequence[PolyElement], order: MonomialOrder) -> Optional[Tuple[int, int, PolyElement]]:
    """Least pair (i, j), i < j, whose S-polynomial has a nonzero remainder modulo ``G``."""
    G = [g for g in G if g]
    if not G:
        return None
    ring = ambient(G[0])
    ordered = [ring.convert(g, order) for g in G]
    R = ordered[0].ring
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            a, b = ordered[i], ordered[j]
            if _coprime(R, a.LM, b.LM):
                continue
            if len(a) == 1 and len(b) == 1:
                continue
            r = s_polynomial(a, b).rem(ordered)
            if r:
                return i, j, ring.convert(r)
    return None


def is_groebner_basis(G: Sequence[PolyElement], order: MonomialOrder) -> bool:
    return first_failing_pair(G, order) is None


def initial_ideal(I: IdealPresentation, order: Optional[MonomialOrder] = None) -> MonomialIdeal:
    return reduced_basis(I, order).initial_ideal()


def hilbert_function(I: IdealPresentation, degrees: Iterable[int]) -> List[int]:
    """dim (S/I)_d for each requested d, by counting standard monomials."""
    if not I.is_homogeneous:
        raise NonHomogeneousError("the Hilbert function needs a homogeneous ideal")
    return initial_ideal(I).hilbert_function(degrees)


def socle_bound(I: IdealPresentation, cap: int = 16) -> int:
    """Top degree with a nonzero Hilbert value for Artinian ``I``, else ``cap``."""
    J = initial_ideal(I)
    if not J.has_pure_powers():
        return cap
    d = 0
    while d < cap and J.hilbert_function([d + 1])[0]:
        d += 1
    return d


def membership(f: PolyElement, I: IdealPresentation) -> bool:
    return reduced_basis(I).contains(f)


def is_artinian(I: IdealPresentation) -> bool:
    return initial_ideal(I).has_pure_powers()


def _fresh_name(ring: PolynomialRing, stem: str = "t") -> str:
    name = f"_{stem}"
    while name in ring.variables:
        name = "_" + name
    return name


def eliminate(I: IdealPresentation, front: Iterable) -> IdealPresentation:
    """Generators of I ∩ k[remaining variables], over the remaining variables."""
    ring = I.ring
    dead = ring.indices(front)
    if not dead:
        return I
    if len(dead) == ring.arity:
        raise InvalidArgumentError("cannot eliminate every variable")

    gb = reduced_basis(I, BlockOrder(dead, grevlex(ring.arity)))
    kept = [i for i in range(ring.arity) if i not in dead]
    target = ring.with_variables(ring.variables[i] for i in kept)
    survivors = [g for g in gb.polynomials if not any(m[i] for m in g.itermonoms() for i in dead)]
    return IdealPresentation(target, [drop_variables(g, target, kept) for g in survivors])


def _variable_index(f: PolyElement) -> Optional[int]:
    if len(f) != 1:
        return None
    (monom,) = f.itermonoms()
    if sum(monom) != 1:
        return None
    return monom.index(1)


def _colon_revlex(I: IdealPresentation, i: int) -> IdealPresentation:
    # for a homogeneous basis with x_i ranked last, x_i | in(g) iff x_i | g
    order = revlex_lowest(I.ring.arity, [i])
    gb = reduced_basis(I, order)
    R = gb.ordered[0].ring
    out = []
    for g in gb.ordered:
        if g.LM[i]:
            if not all(m[i] for m in g.itermonoms()):
                raise ComputationError("revlex colon: basis element is not divisible by the last variable")
            out.append(R.from_dict({m[:i] + (m[i] - 1,) + m[i + 1:]: c for m, c in g.iterterms()}))
        else:
            out.append(g)
    colon = reduced_basis(I.with_generators(out), order)
    return I.with_generators(colon.polynomials)


def _colon_elimination(I: IdealPresentation, f: PolyElement) -> IdealPresentation:
    ring = I.ring
    t = _fresh_name(ring)
    big = PolynomialRing((t,) + ring.variables, ring.field)
    B = big.base
    T = B.gens[0]

    def lift(p: PolyElement) -> PolyElement:
        return B.from_dict({(0,) + m: c for m, c in p.iterterms()})

    gens = [T * lift(g) for g in I.generators] + [(B.one - T) * lift(f)]
    intersection = eliminate(IdealPresentation(big, gens), [t])

    f = ring.convert(f)
    quotients = []
    for h in intersection.generators:
        (q,), r = ring.convert(h).div([f])
        if r:
            raise ComputationError("colon by elimination: I ∩ (f) element not divisible by f")
        quotients.append(q)
    return I.with_generators(reduced_basis(I.with_generators(quotients)).polynomials)


def colon_by_polynomial(I: IdealPresentation, f: PolyElement, method: str = "auto") -> IdealPresentation:
    """Generators of I : f.

    ``method="elimination"`` always intersects with (f) through an auxiliary
    variable; ``"auto"`` takes the revlex shortcut when I is homogeneous and f
    is a variable.
    """
    if not f:
        raise InvalidArgumentError("cannot take the colon by the zero polynomial")
    if method not in ("auto", "elimination"):
        raise InvalidArgumentError(f"unknown colon method '{method}'")
    ring = I.ring
    if I.is_zero:
        return I
    if membership(f, I):
        return I.with_generators([ring.base.one])

    i = _variable_index(ring.convert(f))
    if method == "auto" and i is not None and I.is_homogeneous:
        return _colon_revlex(I, i)
    return _colon_elimination(I, f)


def graded_piece(I: IdealPresentation, d: int) -> List[PolyElement]:
    """Spanning set of I_d for homogeneous ``I``: monomial multiples of generators."""
    if not I.is_homogeneous:
        raise NonHomogeneousError("graded pieces need a homogeneous ideal")
    ring = I.ring
    out = []
    for g in I.generators:
        e = d - max(sum(m) for m in g.itermonoms())
        if e < 0:
            continue
        for m in monomials_of_degree(ring.arity, e):
            out.append(g.mul_monom(m))
    return out


def colon_degree_oracle(I: IdealPresentation, f: PolyElement, d: int) -> int:
    """dim_k (I : f)_d by plain linear algebra on I_{d+e}, independent of any Gröbner basis."""
    if not I.is_homogeneous or not is_homogeneous(f):
        raise NonHomogeneousError("the colon oracle needs homogeneous input")
    ring = I.ring
    K = ring.domain
    f = ring.convert(f)
    e = max(sum(m) for m in f.itermonoms())
    source = monomials_of_degree(ring.arity, d)
    target = {m: j for j, m in enumerate(monomials_of_degree(ring.arity, d + e))}
    piece = graded_piece(I, d + e)

    # unknowns: coefficients on source monomials, then on the spanning set of I_{d+e}
    columns = [f.mul_monom(m) for m in source] + [-p for p in piece]
    rows = [dict() for _ in target]
    for col, p in enumerate(columns):
        for m, c in p.iterterms():
            rows[target[m]][col] = c
    kernel = linalg.nullspace(rows, len(columns), K)
    projected = [{j: v for j, v in vec.items() if j < len(source)} for vec in kernel]
    return linalg.rank(projected, len(source), K)


class GrobnerMethods:
    def __init__(self, engine):
        self.__engine = engine

    async def reduced_basis(self, I: IdealPresentation, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        return reduced_basis(I, order, self.__engine.get_chain_criterion())

    async def hilbert_function(self, I: IdealPresentation, degrees: Iterable[int]) -> List[int]:
        return hilbert_function(I, degrees)

    async def colon(self, I: IdealPresentation, f: PolyElement, method: str = "auto") -> IdealPresentation:
        return colon_by_polynomial(I, f, method)
