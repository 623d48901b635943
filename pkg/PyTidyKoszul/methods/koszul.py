"""Strong Koszulness with respect to the variables.

For every pair (Y, x) with x outside Y the colon (I + Y) : x must equal
I + (V) for some set of variables V. Pairs are swept with Y by increasing
size, then lexicographically, and x in declaration order.
"""
import logging
import random
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from .apolarity import diagonalize_quadric
from .grobner import colon_by_polynomial, normal_form, reduced_basis
from .polyring import drop_variables, set_variables_to_zero, substitute_linear
from .tidyuniversal import DEFAULT_CAP, DEFAULT_SAMPLES, check_revlex_universal, parse_mode
from ..exceptions import CapExceededError, FieldError, InvalidArgumentError, NonHomogeneousError
from ..executor import Executor
from ..parser import format_ideal, format_polynomial, ideal_hash, parse_ideal, parse_polynomial
from ..types.reports import StrongKoszulCertificate
from ..types.ring import IdealPresentation, PolynomialRing, ProductPresentation

logger = logging.getLogger(__name__)

DEFAULT_KOSZUL_CAP = 12

Pair = Tuple[Tuple[int, ...], int]


def plus_variables(I: IdealPresentation, Y: Iterable) -> IdealPresentation:
    """I + (Y), presented by the projected generators of I and the variables of Y."""
    dead = I.ring.indices(Y)
    if not dead:
        return I
    gens = [set_variables_to_zero(g, dead) for g in I.generators]
    return I.with_generators(gens + [I.ring.gen(i) for i in dead])


def colon_variables(I: IdealPresentation, Y: Iterable, x) -> IdealPresentation:
    """Interreduced generators of (I + Y) : x."""
    ring = I.ring
    dead = ring.indices(Y)
    xi = ring.index(x)
    if xi in dead:
        raise InvalidArgumentError(f"{ring.variables[xi]} lies in Y")
    return colon_by_polynomial(plus_variables(I, dead), ring.gen(xi))


def _is_unit(colon: IdealPresentation) -> bool:
    return reduced_basis(colon).is_unit


def _variable_generated(I: IdealPresentation, colon: IdealPresentation) -> Tuple[Tuple[int, ...], Optional[PolyElement]]:
    ring = I.ring
    if _is_unit(colon):
        return tuple(range(ring.arity)), None
    basis = reduced_basis(colon)
    V = tuple(i for i in range(ring.arity) if basis.contains(ring.gen(i)))
    target = reduced_basis(plus_variables(I, V))
    for h in colon.generators:
        if not target.contains(h):
            return V, h
    return V, None


def variable_generated_test(I: IdealPresentation, colon: IdealPresentation) -> Optional[Tuple[str, ...]]:
    """Names V of the variables in ``colon`` if colon = I + (V); otherwise None.

    A unit colon counts as generated by every variable.
    """
    V, offending = _variable_generated(I, colon)
    if offending is not None:
        return None
    return tuple(I.variables[i] for i in V)


def sweep_pairs(n: int) -> List[Pair]:
    pairs = []
    for size in range(n):
        for Y in combinations(range(n), size):
            for x in range(n):
                if x not in Y:
                    pairs.append((Y, x))
    return pairs


def sample_pairs(n: int, count: int, seed: int) -> List[Pair]:
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        x = rng.randrange(n)
        Y = tuple(i for i in range(n) if i != x and rng.random() < 0.5)
        pairs.append((Y, x))
    return sorted(pairs, key=lambda p: (len(p[0]), p[0], p[1]))


def _check_pairs(I: IdealPresentation, pairs: Sequence[Pair], stop_at_failure: bool = True) -> List[tuple]:
    out = []
    for Y, x in pairs:
        colon = colon_variables(I, Y, x)
        V, offending = _variable_generated(I, colon)
        out.append((tuple(Y), x, V, tuple(colon.generators), offending))
        if len(out) % 1000 == 0:
            logger.debug("%d pairs checked", len(out))
        if offending is not None and stop_at_failure:
            break
    return out


def check_pairs_worker(text: str, pairs: Sequence[Pair], stop_at_failure: bool = True) -> List[tuple]:
    """Process-pool entry point; polynomials travel back as text."""
    I = parse_ideal(text)
    results = _check_pairs(I, pairs, stop_at_failure)
    return [(Y, x, V, [format_polynomial(h) for h in colon],
             None if offending is None else format_polynomial(offending))
            for Y, x, V, colon, offending in results]


class KoszulPlan:
    def __init__(self, I: IdealPresentation, mode: Optional[str], sample_count: int, seed: int, cap: int):
        if not I.is_homogeneous:
            raise NonHomogeneousError("strong Koszulness is checked for homogeneous ideals")
        self.I = I
        self.kind, self.count = parse_mode(mode, sample_count)
        self.seed = seed
        self.text = format_ideal(I)
        n = I.ring.arity
        if self.kind == "exhaustive":
            if n > cap:
                raise CapExceededError(f"exhaustive sweep over {n}*2^{n - 1} pairs exceeds the cap n <= {cap}")
            self.pairs = sweep_pairs(n)
        elif self.kind == "sampled":
            self.pairs = sample_pairs(n, self.count, seed)
        else:
            self.pairs = []

    def chunks(self, count: int) -> List[tuple]:
        size = max(1, -(-len(self.pairs) // max(1, count)))
        return [(self.text, self.pairs[i:i + size], True) for i in range(0, len(self.pairs), size)]

    def aggregate(self, chunk_results: Sequence[List[tuple]]) -> StrongKoszulCertificate:
        ring = self.I.ring
        names = ring.variables
        records, colons, witness = [], [], None
        for results in chunk_results:
            for Y, x, V, colon, offending in results:
                if offending is not None:
                    witness = {
                        "Y": [names[i] for i in Y],
                        "x": names[x],
                        "V": [names[i] for i in V],
                        "colon_generators": [c if isinstance(c, str) else format_polynomial(c) for c in colon],
                        "offending": offending if isinstance(offending, str) else format_polynomial(offending),
                    }
                    break
                records.append({"Y": [names[i] for i in Y], "x": names[x], "V": [names[i] for i in V]})
                colons.append([c if isinstance(c, str) else format_polynomial(c) for c in colon])
            if witness is not None:
                break

        if witness is not None:
            verdict = "counterexample"
        elif self.kind == "exhaustive":
            verdict = "certified"
        else:
            verdict = "no-counterexample-found"

        certificate = StrongKoszulCertificate({
            "ideal_hash": ideal_hash(self.I),
            "variables": list(names),
            "field": self.I.field,
            "mode": self.kind,
            "sample_count": self.count,
            "seed": self.seed if self.kind == "sampled" else None,
            "verdict": verdict,
            "pairs_checked": len(records) + (1 if witness else 0),
            "pairs": records if witness is None else [],
            "witness": witness,
            "colons": colons if witness is None else [],
        })
        logger.info("strong Koszul sweep (%s): %s after %d pairs", self.kind, verdict, certificate.pairs_checked)
        return certificate


def theorem_shortcut(I: IdealPresentation, sample_count: int = DEFAULT_SAMPLES, seed: int = 0,
                     cap: int = DEFAULT_CAP, universal=None) -> StrongKoszulCertificate:
    """Certify through a tidy quadratic revlex-universal generating set, or report inconclusive."""
    if not I.is_homogeneous:
        raise NonHomogeneousError("strong Koszulness is checked for homogeneous ideals")
    if universal is None:
        mode = "exhaustive" if I.ring.arity <= cap else f"sample:{sample_count}"
        universal = check_revlex_universal(list(I.generators), mode, sample_count, seed, cap)

    reasons = []
    if not universal.is_tidy_set:
        reasons.append("generators are not tidy")
    if not universal.is_quadratic:
        reasons.append("generators are not all quadrics")
    if not universal.universal:
        reasons.append(f"not a Gröbner basis for {universal.witness['reading']}")
    return StrongKoszulCertificate({
        "ideal_hash": ideal_hash(I),
        "variables": list(I.variables),
        "field": I.field,
        "mode": "theorem-shortcut",
        "sample_count": universal.sample_count,
        "seed": universal.seed,
        "verdict": "inconclusive" if reasons else "certified",
        "universal": universal.get_dict(),
        "reason": "; ".join(reasons) or None,
    })


def strong_koszul_certify(I: IdealPresentation, mode: Optional[str] = "exhaustive",
                          sample_count: int = DEFAULT_SAMPLES, seed: int = 0,
                          cap: int = DEFAULT_KOSZUL_CAP, universal_cap: int = DEFAULT_CAP) -> StrongKoszulCertificate:
    plan = KoszulPlan(I, mode, sample_count, seed, cap)
    if plan.kind == "theorem":
        return theorem_shortcut(I, sample_count, seed, universal_cap)
    return plan.aggregate([_check_pairs(I, plan.pairs)])


def verify_certificate(I: IdealPresentation, certificate: StrongKoszulCertificate) -> bool:
    """Recheck every stored (Y, x, V) independently of the sweep.

    Each v in V must satisfy v*x in I + Y, each stored colon generator h must
    satisfy h*x in I + Y, and the colon recomputed by elimination must reduce
    to zero modulo I + (V).
    """
    ring = I.ring
    for k, record in enumerate(certificate.pairs):
        Y, x, V = record["Y"], ring.gen(record["x"]), record["V"]
        shifted = plus_variables(I, Y)
        base = reduced_basis(shifted).polynomials
        stored = [parse_polynomial(text, ring) for text in certificate._colons[k]] if certificate._colons else []
        for h in [ring.gen(v) for v in V] + stored:
            if normal_form(h * x, base):
                return False
        colon = list(colon_by_polynomial(shifted, x, method="elimination").generators)
        if any(c == ring.base.one for c in colon) and set(V) == set(ring.variables):
            continue
        target = reduced_basis(plus_variables(I, V)).polynomials
        for h in colon:
            if normal_form(h, target):
                return False
    return True


def quotient_by_variables(I: IdealPresentation, A: Iterable) -> IdealPresentation:
    """R/(A) presented over the remaining variables."""
    ring = I.ring
    dead = ring.indices(A)
    if not dead:
        return I
    kept = [i for i in range(ring.arity) if i not in dead]
    target = ring.with_variables(ring.variables[i] for i in kept)
    if not kept:
        return IdealPresentation(target, ())
    gens = [drop_variables(set_variables_to_zero(g, dead), target, kept) for g in I.generators]
    return IdealPresentation(target, gens)


def _disjoint_names(I1: IdealPresentation, I2: IdealPresentation) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    if set(I1.variables).isdisjoint(I2.variables):
        return I1.variables, I2.variables
    return (tuple(f"{v}_1" for v in I1.variables), tuple(f"{v}_2" for v in I2.variables))


def _product(I1: IdealPresentation, I2: IdealPresentation, kind: str) -> ProductPresentation:
    if I1.field != I2.field:
        raise FieldError(f"cannot combine presentations over {I1.field} and {I2.field}")
    names1, names2 = _disjoint_names(I1, I2)
    n1, n2 = len(names1), len(names2)
    ring = PolynomialRing(names1 + names2, I1.field)
    R = ring.base
    gens = [R.from_dict({m + (0,) * n2: c for m, c in g.iterterms()}) for g in I1.generators]
    gens += [R.from_dict({(0,) * n1 + m: c for m, c in g.iterterms()}) for g in I2.generators]
    if kind == "fiber":
        gens += [R.gens[i] * R.gens[n1 + j] for i in range(n1) for j in range(n2)]
    return ProductPresentation(IdealPresentation(ring, gens), kind, [1] * n1 + [2] * n2)


def tensor_presentation(I1: IdealPresentation, I2: IdealPresentation) -> ProductPresentation:
    return _product(I1, I2, "tensor")


def fiber_presentation(I1: IdealPresentation, I2: IdealPresentation) -> ProductPresentation:
    return _product(I1, I2, "fiber")


def quadric_hypersurface_check(f: PolyElement, seed: int = 0) -> dict:
    """Diagonalise a quadric; certify the diagonal form by theorem shortcut and the changed form exhaustively."""
    mapping, diagonal = diagonalize_quadric(f)
    changed = substitute_linear(f, mapping)
    ring = PolynomialRing.of(f.ring)
    shortcut = theorem_shortcut(IdealPresentation(ring, [diagonal]), seed=seed)
    exhaustive = strong_koszul_certify(IdealPresentation(ring, [changed]), "exhaustive")
    return {
        "diagonal": format_polynomial(diagonal),
        "change": {name: format_polynomial(image) for name, image in mapping.items()},
        "substitution_verified": changed == diagonal,
        "theorem_shortcut": shortcut.verdict,
        "exhaustive": exhaustive.verdict,
    }


class KoszulMethods:
    def __init__(self, engine, executor: Executor):
        self.__engine = engine
        self.__executor = executor

    async def strong_koszul_certify(self, I: IdealPresentation, mode: Optional[str] = None,
                                    **kwargs) -> StrongKoszulCertificate:
        sample_count = kwargs.get("sample_count", self.__engine.get_sample_size())
        seed = kwargs.get("seed", self.__engine.get_seed())
        plan = KoszulPlan(I, mode or "exhaustive", sample_count, seed,
                          kwargs.get("cap", self.__engine.get_koszul_cap()))
        if plan.kind == "theorem":
            n = I.ring.arity
            cap = self.__engine.get_universal_cap()
            universal = kwargs.get("universal")
            if universal is None:
                universal = await self.__engine.universal.check_revlex_universal(
                    list(I.generators), "exhaustive" if n <= cap else f"sample:{sample_count}",
                    sample_count=sample_count, seed=seed, cap=cap)
            return theorem_shortcut(I, sample_count, seed, cap, universal=universal)

        results = await self.__executor.map_chunks(check_pairs_worker, plan.chunks(self.__executor.jobs * 4))
        return plan.aggregate(results)
