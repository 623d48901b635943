"""Revlex-universal Gröbner basis checks.

Orders are enumerated as permutation words read from the lowest variable up:
the word ``(1, 0, 2)`` is the revlex order with x2 < x1 < x3. Words are
visited in lexicographic order and the least failing word is the witness.
"""
import logging
import random
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from .grobner import first_failing_pair
from .polyring import ambient, is_homogeneous, is_tidy, set_variables_to_zero
from ..exceptions import CapExceededError, InvalidArgumentError
from ..executor import Executor
from ..parser import format_ideal, format_polynomial, parse_ideal
from ..types.orders import RevlexOrder
from ..types.reports import UniversalGBReport
from ..types.ring import IdealPresentation

logger = logging.getLogger(__name__)

DEFAULT_CAP = 9
DEFAULT_SAMPLES = 200

Word = Tuple[int, ...]


def parse_mode(mode: Optional[str], default_count: int = DEFAULT_SAMPLES) -> Tuple[str, Optional[int]]:
    """``exhaustive`` | ``theorem`` | ``sample:N`` | ``sampled`` into (kind, count)."""
    mode = (mode or "exhaustive").strip().lower()
    if mode in ("exhaustive", "theorem", "theorem-shortcut"):
        return ("theorem" if mode.startswith("theorem") else "exhaustive"), None
    if mode in ("sample", "sampled"):
        return "sampled", default_count
    if mode.startswith("sample:"):
        try:
            count = int(mode.split(":", 1)[1])
        except ValueError:
            raise InvalidArgumentError(f"bad sample count in mode '{mode}'")
        if count <= 0:
            raise InvalidArgumentError("sample count must be positive")
        return "sampled", count
    raise InvalidArgumentError(f"unknown mode '{mode}'")


def order_of_word(word: Sequence[int]) -> RevlexOrder:
    return RevlexOrder(tuple(reversed(word)))


def describe_word(word: Sequence[int], variables: Sequence[str]) -> str:
    return " < ".join(variables[i] for i in word)


def is_tidy_set(G: Iterable[PolyElement]) -> bool:
    return all(is_tidy(g) for g in G)


def is_quadratic_set(G: Iterable[PolyElement]) -> bool:
    G = list(G)
    return bool(G) and all(g and is_homogeneous(g) and sum(next(g.itermonoms())) == 2 for g in G)


def project_universal_gb(G: Iterable[PolyElement], Y: Iterable) -> List[PolyElement]:
    """Images of ``G`` under the projection killing ``Y``, zeros dropped."""
    Y = list(Y)
    out = []
    for g in G:
        h = set_variables_to_zero(g, Y)
        if h:
            out.append(h)
    return out


def symmetry_group(generators: Iterable[Sequence[int]], n: int) -> Tuple[Word, ...]:
    """Closure of the given variable permutations (images of 0..n-1) under composition."""
    identity = tuple(range(n))
    generators = [tuple(g) for g in generators]
    for g in generators:
        if sorted(g) != list(identity):
            raise InvalidArgumentError(f"{g} is not a permutation of {n} variables")
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in generators:
                composed = tuple(g[h[i]] for i in range(n))
                if composed not in group:
                    group.add(composed)
                    nxt.append(composed)
        frontier = nxt
    return tuple(sorted(group))


def permute_variables(f: PolyElement, permutation: Sequence[int]) -> PolyElement:
    """Image of ``f`` under x_i -> x_permutation[i]."""
    terms = {}
    for m, c in f.iterterms():
        e = [0] * len(m)
        for i, k in enumerate(m):
            e[permutation[i]] = k
        terms[tuple(e)] = c
    return f.ring.from_dict(terms)


def require_invariant(G: Sequence[PolyElement], generators: Iterable[Sequence[int]]) -> None:
    """Raise unless every permutation sends each member of ``G`` to a scalar multiple of a member."""
    monic = [g.monic() for g in G]
    for p in generators:
        for g in G:
            image = permute_variables(g, p).monic()
            if not any(image == h for h in monic):
                raise InvalidArgumentError(
                    f"permutation {tuple(p)} does not preserve the candidate set: {format_polynomial(g)} "
                    f"maps to {format_polynomial(image)}")


def parse_permutation(text: str, variables: Sequence[str]) -> Word:
    """``x2,x3,x1`` lists the images of the variables in declaration order."""
    names = [t.strip() for t in text.split(",") if t.strip()]
    if len(names) != len(variables):
        raise InvalidArgumentError(f"permutation '{text}' must list {len(variables)} variables")
    try:
        word = tuple(variables.index(name) for name in names)
    except ValueError:
        raise InvalidArgumentError(f"permutation '{text}' names an unknown variable")
    if sorted(word) != list(range(len(variables))):
        raise InvalidArgumentError(f"permutation '{text}' repeats a variable")
    return word


def _is_representative(word: Word, group: Sequence[Word]) -> bool:
    return all(tuple(g[i] for i in word) >= word for g in group)


def _scan(G: List[PolyElement], words: Iterable[Word], group: Sequence[Word]):
    homogeneous = all(is_homogeneous(g) for g in G)
    # for homogeneous G, being a Gröbner basis depends only on the chosen leading monomials
    cache: Dict[tuple, Optional[tuple]] = {}
    checked = failures = hits = 0
    first = None
    for word in words:
        if group and not _is_representative(word, group):
            continue
        order = order_of_word(word)
        if homogeneous:
            key = tuple(max(g.itermonoms(), key=order) for g in G)
            if key in cache:
                hits += 1
            else:
                cache[key] = first_failing_pair(G, order)
            result = cache[key]
        else:
            result = first_failing_pair(G, order)
        checked += 1
        if checked % 1000 == 0:
            logger.debug("%d orders checked, %d failing, %d cache hits", checked, failures, hits)
        if result is not None:
            failures += 1
            if first is None:
                first = (word, result)
    return checked, failures, first


def check_orders_worker(text: str, prefix: Optional[int], words: Optional[List[Word]],
                        group: Sequence[Word]):
    """Process-pool entry point: scan one chunk of orders for the ideal given as text."""
    G = list(parse_ideal(text).generators)
    n = len(G[0].ring.symbols)
    if words is None:
        rest = [i for i in range(n) if i != prefix]
        words = ((prefix,) + p for p in permutations(rest))
    checked, failures, first = _scan(G, words, group)
    if first is not None:
        word, (i, j, r) = first
        first = (tuple(word), i, j, format_polynomial(r))
    return checked, failures, first


class UniversalPlan:
    def __init__(self, G: Sequence[PolyElement], mode: Optional[str], sample_count: int,
                 seed: int, cap: int, symmetry: Optional[Iterable[Sequence[int]]], chunks: int):
        self.G = [g for g in G if g]
        if not self.G:
            raise InvalidArgumentError("the candidate set is empty")
        self.ring = ambient(self.G[0])
        n = self.ring.arity
        self.kind, self.count = parse_mode(mode, sample_count)
        if self.kind == "theorem":
            raise InvalidArgumentError("universal checks run exhaustive or sampled")
        self.seed = seed
        self.group = ()
        if symmetry:
            symmetry = [tuple(p) for p in symmetry]
            self.group = symmetry_group(symmetry, n)
            require_invariant(self.G, symmetry)
        self.text = format_ideal(IdealPresentation(self.ring, self.G))
        self.candidates = [format_polynomial(g) for g in self.G]

        if self.kind == "exhaustive":
            if n > cap:
                raise CapExceededError(f"exhaustive check over {n}! orders exceeds the cap n <= {cap}; use sampling")
            self.payloads = [(self.text, prefix, None, self.group) for prefix in range(n)]
        else:
            rng = random.Random(seed)
            words = []
            for _ in range(self.count):
                word = list(range(n))
                rng.shuffle(word)
                words.append(tuple(word))
            words.sort()
            size = -(-len(words) // max(1, chunks))
            self.payloads = [(self.text, None, words[i:i + size], self.group)
                             for i in range(0, len(words), size)]

    def aggregate(self, results) -> UniversalGBReport:
        checked = sum(r[0] for r in results)
        failures = sum(r[1] for r in results)
        firsts = [r[2] for r in results if r[2] is not None]
        witness = None
        if firsts:
            word, i, j, remainder = min(firsts)
            variables = self.ring.variables
            witness = {
                "word": list(word),
                "reading": describe_word(word, variables),
                "order": order_of_word(word).describe(variables),
                "pair": [i, j],
                "pair_polynomials": [self.candidates[i], self.candidates[j]],
                "remainder": remainder,
                "failures": failures,
            }
        report = UniversalGBReport({
            "variables": list(self.ring.variables),
            "candidates": self.candidates,
            "mode": self.kind,
            "sample_count": self.count,
            "seed": self.seed if self.kind == "sampled" else None,
            "orders_checked": checked,
            "universal": witness is None,
            "witness": witness,
            "is_tidy_set": is_tidy_set(self.G),
            "is_quadratic": is_quadratic_set(self.G),
            "symmetry_group_size": len(self.group) or None,
        })
        logger.info("revlex-universal check: %s after %d orders", report.verdict, checked)
        return report


def check_revlex_universal(G: Sequence[PolyElement], mode: Optional[str] = "exhaustive",
                           sample_count: int = DEFAULT_SAMPLES, seed: int = 0, cap: int = DEFAULT_CAP,
                           symmetry: Optional[Iterable[Sequence[int]]] = None) -> UniversalGBReport:
    plan = UniversalPlan(G, mode, sample_count, seed, cap, symmetry, chunks=1)
    return plan.aggregate([check_orders_worker(*p) for p in plan.payloads])


def recheck_witness(G: Sequence[PolyElement], witness: Dict) -> bool:
    """True iff the recorded pair still fails under the recorded order."""
    result = first_failing_pair(list(G), order_of_word(witness["word"]))
    return result is not None and [result[0], result[1]] == list(witness["pair"])


class UniversalMethods:
    def __init__(self, engine, executor: Executor):
        self.__engine = engine
        self.__executor = executor

    async def check_revlex_universal(self, G: Sequence[PolyElement], mode: Optional[str] = None,
                                     **kwargs) -> UniversalGBReport:
        plan = UniversalPlan(
            G, mode or "exhaustive",
            kwargs.get("sample_count", self.__engine.get_sample_size()),
            kwargs.get("seed", self.__engine.get_seed()),
            kwargs.get("cap", self.__engine.get_universal_cap()),
            kwargs.get("symmetry", None),
            chunks=self.__executor.jobs * 4,
        )
        return plan.aggregate(await self.__executor.map_chunks(check_orders_worker, plan.payloads))
