"""Example families: determinantal and Pfaffian ideals, their inverse systems,
the quadratic counterexamples, and the 27 lines with their tritangent planes."""
import logging
import random
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import primefactors
from sympy.polys.rings import PolyElement

from .apolarity import apolar_ideal
from .polyring import substitute_linear
from ..exceptions import InvalidArgumentError
from ..executor import Executor
from ..types.apolar import DualForm, InverseSystemModule
from ..types.gallery import LINES, LinesIncidence, MatrixShape, canonical_line, entry_name
from ..types.groebner import MonomialIdeal
from ..types.orders import RevlexOrder
from ..types.reports import CayleyReport
from ..types.ring import IdealPresentation, PolynomialRing

logger = logging.getLogger(__name__)

CLEBSCH_EXCLUDED = (2, 3, 5)
CYCLIC_EXCLUDED = {4: (2, 3, 5), 5: (2, 3, 11)}


def _determinant(matrix: Sequence[Sequence[PolyElement]], R, sign: int = -1) -> PolyElement:
    """Laplace expansion along the first row; ``sign=+1`` gives the permanent."""
    size = len(matrix)
    memo: Dict[Tuple[int, Tuple[int, ...]], PolyElement] = {}

    def expand(row: int, cols: Tuple[int, ...]) -> PolyElement:
        if row == size:
            return R.one
        if (row, cols) in memo:
            return memo[(row, cols)]
        total = R.zero
        for pos, c in enumerate(cols):
            if matrix[row][c]:
                term = matrix[row][c] * expand(row + 1, cols[:pos] + cols[pos + 1:])
                total += term if pos % 2 == 0 or sign > 0 else -term
        memo[(row, cols)] = total
        return total

    return expand(0, tuple(range(size)))


def _matrix(shape: MatrixShape, ring: PolynomialRing) -> List[List[PolyElement]]:
    R = ring.base
    rows = []
    for i in range(1, shape.m + 1):
        row = []
        for j in range(1, shape.n + 1):
            sign, name = shape.entry(i, j)
            row.append(R.zero if name is None else sign * ring.gen(name))
        rows.append(row)
    return rows


def _dedupe(polys: Iterable[PolyElement]) -> List[PolyElement]:
    """Drop zeros and repeats up to a scalar, keeping first occurrences."""
    seen = set()
    out = []
    for p in polys:
        if not p:
            continue
        key = p.monic()
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def minors2(shape: MatrixShape, field: str = "QQ") -> IdealPresentation:
    """2-minors of a generic, symmetric or Hankel matrix with its zero pattern applied."""
    if shape.kind == "skew":
        raise InvalidArgumentError("2-minors are defined here for generic, symmetric and Hankel matrices")
    ring = PolynomialRing(shape.variables(), field)
    X = _matrix(shape, ring)
    minors = []
    for i, k in combinations(range(shape.m), 2):
        for j, l in combinations(range(shape.n), 2):
            minors.append(X[i][j] * X[k][l] - X[i][l] * X[k][j])
    return IdealPresentation(ring, _dedupe(minors), label=shape.describe())


def hankel(m: int, n: int, field: str = "QQ") -> IdealPresentation:
    return minors2(MatrixShape("hankel", m, n), field)


def skew_ring(N: int, field: str = "QQ") -> PolynomialRing:
    return PolynomialRing(MatrixShape("skew", N).variables(), field)


def pfaffians(N: int, size: int, field: str = "QQ") -> List[PolyElement]:
    """All size-Pfaffians of the generic N x N skew matrix, expanded along the first index."""
    if size % 2 or size < 2:
        raise InvalidArgumentError(f"Pfaffians need an even size, got {size}")
    if size > N:
        raise InvalidArgumentError(f"size {size} exceeds the matrix size {N}")
    ring = skew_ring(N, field)
    R = ring.base
    memo: Dict[Tuple[int, ...], PolyElement] = {}

    def pf(idx: Tuple[int, ...]) -> PolyElement:
        if not idx:
            return R.one
        if idx not in memo:
            first, rest = idx[0], idx[1:]
            total = R.zero
            for pos, j in enumerate(rest):
                term = ring.gen(entry_name(first, j)) * pf(rest[:pos] + rest[pos + 1:])
                total += term if pos % 2 == 0 else -term
            memo[idx] = total
        return memo[idx]

    return [pf(idx) for idx in combinations(range(1, N + 1), size)]


def maximal_minors(m: int, n: int, field: str = "QQ", permanent: bool = False) -> List[PolyElement]:
    """The m-minors (or m-permanents) of a generic m x n matrix, m <= n."""
    if m > n:
        raise InvalidArgumentError(f"maximal minors need m <= n, got {m}x{n}")
    shape = MatrixShape("generic", m, n)
    ring = PolynomialRing(shape.variables(), field)
    X = _matrix(shape, ring)
    sign = 1 if permanent else -1
    return [_determinant([[row[c] for c in cols] for row in X], ring.base, sign)
            for cols in combinations(range(n), m)]


def _module(polys: Iterable[PolyElement]) -> InverseSystemModule:
    return InverseSystemModule([DualForm.from_acting(p) for p in polys])


def maximal_minors_module(m: int, n: int, field: str = "QQ") -> InverseSystemModule:
    return _module(maximal_minors(m, n, field))


def maximal_permanents_module(m: int, n: int, field: str = "QQ") -> InverseSystemModule:
    return _module(maximal_minors(m, n, field, permanent=True))


def maximal_pfaffians_module(N: int, field: str = "QQ") -> InverseSystemModule:
    """Module of the maximal even Pfaffians; for odd N these are the Pfaffians of the (N-1)-submatrices."""
    if N < 2:
        raise InvalidArgumentError("a skew matrix needs N >= 2")
    return _module(pfaffians(N, 2 * (N // 2), field))


def _generic_ring(m: int, n: int, field: str) -> PolynomialRing:
    return PolynomialRing(MatrixShape("generic", m, n).variables(), field)


def _apolar_quadrics(m: int, n: int, field: str, sign: int) -> List[PolyElement]:
    ring = _generic_ring(m, n, field)

    def x(i, k):
        return ring.gen(entry_name(i, k))

    rows, cols = range(1, m + 1), range(1, n + 1)
    out = [x(i, k) ** 2 for i in rows for k in cols]
    out += [x(i, k) * x(j, k) for k in cols for i, j in combinations(rows, 2)]
    out += [x(i, k) * x(i, l) for i in rows for k, l in combinations(cols, 2)]
    out += [x(i, k) * x(j, l) + sign * x(i, l) * x(j, k)
            for i, j in combinations(rows, 2) for k, l in combinations(cols, 2)]
    return out


def minors_apolar_gens(m: int, n: int, field: str = "QQ") -> List[PolyElement]:
    """Quadrics annihilating the maximal minors of a generic m x n matrix."""
    return _apolar_quadrics(m, n, field, 1)


def permanent_apolar_gens(m: int, n: int, field: str = "QQ") -> List[PolyElement]:
    return _apolar_quadrics(m, n, field, -1)


def generalized_permanents(m: int, n: int, field: str = "QQ") -> List[PolyElement]:
    """2 x 2 permanents with repeated row or column indices allowed."""
    ring = _generic_ring(m, n, field)

    def x(i, k):
        return ring.gen(entry_name(i, k))

    out = []
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            for k in range(1, n + 1):
                for l in range(k, n + 1):
                    out.append(x(i, k) * x(j, l) + x(i, l) * x(j, k))
    return out


def pfaffian_apolar_gens(N: int, field: str = "QQ") -> List[PolyElement]:
    """Quadrics annihilating the maximal Pfaffians; each 4-set contributes three dependent binomials."""
    ring = skew_ring(N, field)

    def x(i, j):
        return ring.gen(entry_name(i, j))

    idx = range(1, N + 1)
    out = [x(i, j) ** 2 for i, j in combinations(idx, 2)]
    for i, j, k in combinations(idx, 3):
        out += [x(i, j) * x(i, k), x(i, j) * x(j, k), x(i, k) * x(j, k)]
    for i, j, k, l in combinations(idx, 4):
        out += [x(i, j) * x(k, l) + x(i, k) * x(j, l),
                x(i, l) * x(j, k) + x(i, k) * x(j, l),
                x(i, j) * x(k, l) - x(i, l) * x(j, k)]
    return out


def grassmannian(N: int, field: str = "QQ") -> IdealPresentation:
    return IdealPresentation(skew_ring(N, field), pfaffians(N, 4, field), label=f"grassmannian:{N}")


def remark_ideal(field: str = "QQ") -> IdealPresentation:
    """(x1x3 - x2^2, x2x3, x3^2): the 2-row Hankel ideal with x4 set to zero."""
    ring = PolynomialRing(("x1", "x2", "x3"), field)
    x1, x2, x3 = ring.gens()
    return IdealPresentation(ring, [x1 * x3 - x2 ** 2, x2 * x3, x3 ** 2], label="remark")


def _clebsch_ring(field: str) -> PolynomialRing:
    return PolynomialRing(("x", "y", "z", "t"), field)


def clebsch_ideal(field: str = "QQ") -> IdealPresentation:
    ring = _clebsch_ring(field)
    x, y, z, t = ring.gens()
    return IdealPresentation(
        ring, [x ** 2 - y * z, y ** 2 - z * t, z ** 2 - t * x, t ** 2 - x * y, x * z, y * t],
        label="clebsch", excluded_characteristics=CLEBSCH_EXCLUDED)


def clebsch_gb(field: str = "QQ") -> List[PolyElement]:
    ring = _clebsch_ring(field)
    x, y, z, t = ring.gens()
    return list(clebsch_ideal(field).generators) + [
        x ** 3, y ** 3, z ** 3, t ** 3,
        x * y ** 2, y * z ** 2, z * t ** 2, t * x ** 2,
        x ** 2 * y - z ** 2 * t, y ** 2 * z - t ** 2 * x,
    ]


def clebsch_form(field: str = "QQ") -> DualForm:
    """X^2Y + Y^2Z + Z^2T + T^2X."""
    x, y, z, t = _clebsch_ring(field).gens()
    return DualForm.from_acting(x ** 2 * y + y ** 2 * z + z ** 2 * t + t ** 2 * x)


def _cycle_ring(n: int, field: str) -> PolynomialRing:
    if n < 5:
        raise InvalidArgumentError(f"the cycle family starts at n = 5, got {n}")
    return PolynomialRing(tuple(f"x{i}" for i in range(1, n + 1)), field)


def cycle_modulus(n: int) -> int:
    return 2 ** n + (-1) ** (n + 1)


def _cycle_edge(n: int, i: int) -> Tuple[int, int]:
    """0-based positions of x_{i+k-1} and x_{i+k} for the 0-based index i."""
    k = (n + 1) // 2
    return (i + k - 1) % n, (i + k) % n


def cycle_family(n: int, field: str = "QQ") -> IdealPresentation:
    """Binomials x_i^2 - x_{i+k-1}x_{i+k} plus the monomials x_ix_j of non-consecutive pairs."""
    ring = _cycle_ring(n, field)
    x = ring.gens()
    gens = []
    for i in range(n):
        a, b = _cycle_edge(n, i)
        gens.append(x[i] ** 2 - x[a] * x[b])
    for i, j in combinations(range(n), 2):
        if j - i not in (1, n - 1):
            gens.append(x[i] * x[j])
    modulus = cycle_modulus(n)
    return IdealPresentation(ring, gens, label=f"cycle:{n}",
                             excluded_characteristics=[2] + list(primefactors(modulus)),
                             caveat_modulus=modulus)


def cycle_family_gb(n: int, field: str = "QQ") -> List[PolyElement]:
    x = _cycle_ring(n, field).gens()
    cubics = []
    for i in range(n):
        cubics += [x[i] ** 3, x[i] ** 2 * x[(i + 1) % n], x[i] ** 2 * x[(i - 1) % n]]
    return list(cycle_family(n, field).generators) + cubics


def cycle_family_module(n: int, field: str = "QQ") -> InverseSystemModule:
    """Dual quadrics X_i^2 + X_{i+k-1}X_{i+k}."""
    x = _cycle_ring(n, field).gens()
    forms = []
    for i in range(n):
        a, b = _cycle_edge(n, i)
        forms.append(x[i] ** 2 + x[a] * x[b])
    return _module(forms)


def cyclic_cubic(n: int, field: str = "QQ") -> DualForm:
    """X1^2X2 + X2^2X3 + ... + Xn^2X1."""
    if n < 2:
        raise InvalidArgumentError("a cyclic cubic needs at least two variables")
    ring = PolynomialRing(tuple(f"x{i}" for i in range(1, n + 1)), field)
    x = ring.gens()
    return DualForm.from_acting(sum((x[i] ** 2 * x[(i + 1) % n] for i in range(n)), ring.base.zero))


def simplicial_form(facets: Iterable[Iterable[int]], coefficients: Optional[Sequence] = None,
                    n: Optional[int] = None, field: str = "QQ") -> DualForm:
    """Sum of coefficient times the product of X_i over each facet; vertices are 1-based."""
    facets = [tuple(sorted(set(G))) for G in facets]
    if not facets or not facets[0]:
        raise InvalidArgumentError("a simplicial form needs nonempty facets")
    if len({len(G) for G in facets}) != 1:
        raise InvalidArgumentError("the simplicial complex is not pure")
    n = n or max(max(G) for G in facets)
    if min(min(G) for G in facets) < 1 or max(max(G) for G in facets) > n:
        raise InvalidArgumentError(f"vertices must lie in 1..{n}")
    coefficients = list(coefficients) if coefficients is not None else [1] * len(facets)
    if len(coefficients) != len(facets):
        raise InvalidArgumentError("one coefficient per facet is required")

    ring = PolynomialRing(tuple(f"x{i}" for i in range(1, n + 1)), field)
    R = ring.base
    F = R.zero
    for G, c in zip(facets, coefficients):
        F += c * R.from_dict({tuple(int(i + 1 in G) for i in range(n)): R.domain.one})
    return DualForm.from_acting(F)


def _symmetric_determinant_polynomial(n: int, field: str) -> PolyElement:
    shape = MatrixShape("symmetric", n)
    ring = PolynomialRing(shape.variables(), field)
    return _determinant(_matrix(shape, ring), ring.base)


def symmetric_determinant(n: int = 3, field: str = "QQ") -> DualForm:
    return DualForm.from_acting(_symmetric_determinant_polynomial(n, field))


def veronese_change(field: str = "QQ") -> Dict[str, PolyElement]:
    """Linear change on the 3 x 3 symmetric variables; unlisted variables stay fixed."""
    ring = PolynomialRing(MatrixShape("symmetric", 3).variables(), field)
    x11, x12, x13, x22, x23, x33 = ring.gens()
    return {
        "x11": x11 - x12 - x13, "x12": x12, "x13": x13,
        "x22": -x12 + x22 - x23, "x23": x23,
        "x33": -x13 - x23 + x33,
    }


def veronese_changed_form(field: str = "QQ") -> DualForm:
    """The symmetric determinant after the change: a signed sum of 16 squarefree cubics."""
    det = _symmetric_determinant_polynomial(3, field)
    return DualForm.from_acting(substitute_linear(det, veronese_change(field)))


def product_pool(field: str = "QQ") -> List[IdealPresentation]:
    """Small factors for product checks, both strongly Koszul and not."""
    one = PolynomialRing(("x",), field)
    two = PolynomialRing(("x", "y"), field)
    (u,) = one.gens()
    x, y = two.gens()
    return [
        IdealPresentation(one, [u ** 2], label="square"),
        IdealPresentation(two, [x ** 2, x * y], label="monomials"),
        IdealPresentation(two, [x ** 2 - x * y], label="non-tidy"),
        IdealPresentation(two, [x ** 2 + y ** 2, x * y], label="sum-of-squares"),
        remark_ideal(field),
    ]


def lines27() -> LinesIncidence:
    planes = []
    for i, j in combinations(range(1, 7), 2):
        planes.append((f"a{i}", f"b{j}", f"c{i}{j}"))
        planes.append((f"a{j}", f"b{i}", f"c{i}{j}"))
    for matching in _perfect_matchings(tuple(range(1, 7))):
        planes.append(tuple(f"c{i}{j}" for i, j in matching))
    return LinesIncidence(planes)


def _perfect_matchings(points: Tuple[int, ...]):
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for pos, partner in enumerate(rest):
        for tail in _perfect_matchings(rest[:pos] + rest[pos + 1:]):
            yield ((first, partner),) + tail


def drop_plane(L: LinesIncidence, index: int) -> LinesIncidence:
    if not 0 <= index < len(L):
        raise InvalidArgumentError(f"no plane with index {index}")
    return LinesIncidence([[L.lines[k] for k in p] for q, p in enumerate(L.planes) if q != index], L.lines)


def check_lines_structure(L: LinesIncidence) -> bool:
    """27 lines, 45 planes, five planes through every line, no two planes sharing two lines."""
    if len(L.lines) != 27 or len(L.planes) != 45:
        return False
    if any(len(p) != 5 for p in L.planes_of):
        return False
    pairs = [pair for plane in L.planes for pair in combinations(plane, 2)]
    return len(pairs) == len(set(pairs))


def noncoplanar_pair(L: LinesIncidence, labels: Iterable[str]) -> Optional[Tuple[str, str]]:
    """First pair of the given lines lying in no common plane."""
    ids = sorted(L.index[canonical_line(label)] for label in labels)
    for a, b in combinations(ids, 2):
        if not L.coplanar(a, b):
            return L.lines[a], L.lines[b]
    return None


def _quadruple_violation(L: LinesIncidence) -> Optional[List[str]]:
    for quad in combinations(range(len(L.lines)), 4):
        if all(L.coplanar(a, b) for a, b in combinations(quad, 2)):
            return [L.lines[k] for k in quad]
    return None


def _triple_violation(L: LinesIncidence) -> Optional[List[str]]:
    planes = set(L.planes)
    for triple in combinations(range(len(L.lines)), 3):
        if all(L.coplanar(a, b) for a, b in combinations(triple, 2)) and triple not in planes:
            return [L.lines[k] for k in triple]
    return None


def _meeting_violation(L: LinesIncidence) -> Optional[Tuple[str, str]]:
    for line in range(len(L.lines)):
        through = [set(L.planes[p]) for p in L.planes_of[line]]
        for q, rho in enumerate(L.planes):
            if line in rho:
                continue
            if not any(sigma & set(rho) for sigma in through):
                return L.lines[line], L.label(q)
    return None


def lemma_27lines_report(L: LinesIncidence) -> Dict:
    """Parts (i) to (iii) of the incidence lemma, each with its first violation or None."""
    violations = {
        "four_lines": _quadruple_violation(L),
        "coplanar_triples": _triple_violation(L),
        "meeting_planes": _meeting_violation(L),
    }
    return {
        "holds": all(v is None for v in violations.values()),
        "violations": violations,
        "planes": len(L.planes),
    }


def verify_lemma_27lines(L: LinesIncidence) -> bool:
    report = lemma_27lines_report(L)
    if not report["holds"]:
        logger.info("27 lines lemma fails: %s", {k: v for k, v in report["violations"].items() if v})
    return report["holds"]


def _monomial_label(L: LinesIncidence, monom: Sequence[int]) -> str:
    return "*".join(L.lines[k] if e == 1 else f"{L.lines[k]}^{e}" for k, e in enumerate(monom) if e)


def cayley_base_monomials(L: LinesIncidence) -> List[Tuple[int, ...]]:
    """Squares and the products of two distinct lines lying in no common plane."""
    n = len(L.lines)
    out = []
    for a in range(n):
        square = [0] * n
        square[a] = 2
        out.append(tuple(square))
    for a, b in combinations(range(n), 2):
        if not L.coplanar(a, b):
            m = [0] * n
            m[a] = m[b] = 1
            out.append(tuple(m))
    return out


def line_ring(field: str = "QQ") -> PolynomialRing:
    return PolynomialRing(LINES, field)


def _ranking(L: LinesIncidence, order: Sequence[str]) -> Tuple[int, ...]:
    labels = [canonical_line(label) for label in order]
    if sorted(labels) != sorted(L.lines):
        raise InvalidArgumentError("the order must list each of the 27 lines exactly once")
    return tuple(L.index[label] for label in labels)


def cayley_monomial_ideal(order: Optional[Sequence[str]] = None,
                          L: Optional[LinesIncidence] = None) -> Tuple[MonomialIdeal, CayleyReport]:
    """Leading-term ideal of the quadratic basis for the revlex order ranking ``order`` highest first."""
    L = L or lines27()
    order = list(order) if order is not None else list(L.lines)
    revlex = RevlexOrder(_ranking(L, order))
    n = len(L.lines)

    def plane_monomial(p: int) -> Tuple[int, ...]:
        return tuple(int(k in L.planes[p]) for k in range(n))

    base = cayley_base_monomials(L)
    leading = list(base)
    for line in range(n):
        through = sorted(L.planes_of[line], key=lambda p: revlex(plane_monomial(p)))
        for p in through[1:]:
            quotient = list(plane_monomial(p))
            quotient[line] -= 1
            leading.append(tuple(quotient))

    J = MonomialIdeal(line_ring(), leading)
    hf = J.hilbert_function(range(5))
    lowest = min(range(len(L.planes)), key=lambda p: revlex(plane_monomial(p)))
    standard_cubics = J.standard_monomials(3)
    quadratic = comb(n + 1, 2) - hf[2]

    report = CayleyReport({
        "order": [canonical_line(label) for label in order],
        "quadratic_monomials": quadratic,
        "base_monomials": len(base),
        "claim_a": hf[4] == 0,
        "claim_b": quadratic >= comb(n + 1, 2) - n,
        "claim_c": standard_cubics == [plane_monomial(lowest)],
        "standard_cubics": [_monomial_label(L, m) for m in standard_cubics],
        "lowest_plane": [L.lines[k] for k in L.planes[lowest]],
        "hilbert_function": hf,
    })
    return J, report


def structured_line_orders() -> List[List[str]]:
    a, b, c = list(LINES[:6]), list(LINES[6:12]), list(LINES[12:])
    interleaved = [label for pair in zip(a, b) for label in pair] + c
    return [a + b + c, list(reversed(LINES)), b + a + c, c + a + b, interleaved]


def random_line_orders(count: int, seed: int = 0) -> List[List[str]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        order = list(LINES)
        rng.shuffle(order)
        out.append(order)
    return out


def cayley_worker(orders: Sequence[Sequence[str]]) -> List[Dict]:
    return [cayley_monomial_ideal(order)[1].get_dict() for order in orders]


def _size(text: str) -> Tuple[int, int]:
    try:
        m, n = text.lower().split("x")
        return int(m), int(n)
    except ValueError:
        raise InvalidArgumentError(f"expected a size like 2x3, got '{text}'")


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidArgumentError(f"expected an integer, got '{text}'")


def _zeros(text: str) -> List[Tuple[int, int]]:
    if not text.startswith("zeros="):
        raise InvalidArgumentError(f"expected zeros=..., got '{text}'")
    out = []
    for token in filter(None, text[len("zeros="):].split(",")):
        if "_" in token:
            i, j = token.split("_", 1)
        elif len(token) == 2:
            i, j = token
        else:
            raise InvalidArgumentError(f"bad zero entry '{token}'")
        out.append((_integer(i), _integer(j)))
    return out


def _relabel(I: IdealPresentation, label: str, excluded: Iterable[int] = ()) -> IdealPresentation:
    return IdealPresentation(I.ring, I.generators, label=label, excluded_characteristics=excluded,
                             caveat_modulus=I.caveat_modulus)


def gallery_names() -> List[str]:
    return [
        "minors:gen:MxN[:zeros=11,23]", "minors:sym:N[:zeros=...]", "minors:hankel:MxN",
        "pfaffians:N:size", "apolar:minors:MxN", "apolar:perm:MxN", "apolar:pf:N",
        "apolar:symdet:N", "apolar:veronese", "apolar:clebsch", "apolar:cyclic:N", "apolar:cycle:N",
        "clebsch", "cycle:N", "cyclic:N", "remark",
        "grassmannian:N", "cayley",
    ]


def gallery_module(name: str, field: str = "QQ") -> InverseSystemModule:
    """Inverse systems by name: ``minors:MxN``, ``perm:MxN``, ``pf:N``, ``symdet:N``,
    ``veronese``, ``clebsch``, ``cyclic:N``, ``cycle:N``."""
    head, _, arg = name.strip().partition(":")
    if head == "minors" and arg:
        return maximal_minors_module(*_size(arg), field)
    if head == "perm" and arg:
        return maximal_permanents_module(*_size(arg), field)
    if head == "pf" and arg:
        return maximal_pfaffians_module(_integer(arg), field)
    if head == "symdet" and arg:
        return InverseSystemModule([symmetric_determinant(_integer(arg), field)])
    if head == "veronese" and not arg:
        return InverseSystemModule([veronese_changed_form(field)])
    if head == "clebsch" and not arg:
        return InverseSystemModule([clebsch_form(field)])
    if head == "cyclic" and arg:
        return InverseSystemModule([cyclic_cubic(_integer(arg), field)])
    if head == "cycle" and arg:
        return cycle_family_module(_integer(arg), field)
    raise InvalidArgumentError(f"unknown inverse system '{name}'")


def gallery_ideal(name: str, field: str = "QQ") -> IdealPresentation:
    """Resolve a gallery name such as ``minors:sym:3`` or ``cycle:5`` into a presentation."""
    name = name.strip()
    if name.startswith("gallery:"):
        name = name[len("gallery:"):]
    parts = name.split(":")
    head, args = parts[0], parts[1:]

    if head == "minors" and args:
        kind, rest = args[0], args[1:]
        zeros = _zeros(rest[1]) if len(rest) > 1 else []
        if kind == "gen" and rest:
            m, n = _size(rest[0])
            return minors2(MatrixShape("generic", m, n, zeros), field)
        if kind == "sym" and rest:
            return minors2(MatrixShape("symmetric", _integer(rest[0]), zeros=zeros), field)
        if kind == "hankel" and rest:
            m, n = _size(rest[0])
            return minors2(MatrixShape("hankel", m, n, zeros), field)
    elif head == "pfaffians" and len(args) == 2:
        N, size = _integer(args[0]), _integer(args[1])
        return IdealPresentation(skew_ring(N, field), pfaffians(N, size, field), label=name)
    elif head == "apolar" and args:
        return _relabel(apolar_ideal(gallery_module(":".join(args), field)), name)
    elif head == "clebsch" and not args:
        return clebsch_ideal(field)
    elif head == "cycle" and len(args) == 1:
        return cycle_family(_integer(args[0]), field)
    elif head == "cyclic" and len(args) == 1:
        n = _integer(args[0])
        return _relabel(apolar_ideal(cyclic_cubic(n, field)), name, CYCLIC_EXCLUDED.get(n, (2, 3)))
    elif head == "remark" and not args:
        return remark_ideal(field)
    elif head == "grassmannian" and len(args) == 1:
        return grassmannian(_integer(args[0]), field)
    elif head == "cayley" and not args:
        J, _ = cayley_monomial_ideal()
        ring = line_ring(field)
        return IdealPresentation(ring, [ring.monomial(m) for m in J], label="cayley")
    elif head == "lines27":
        raise InvalidArgumentError("lines27 is an incidence structure, not an ideal; use the lines command")

    raise InvalidArgumentError(f"unknown gallery entry '{name}'; known: {', '.join(gallery_names())}")


class GalleryMethods:
    def __init__(self, engine, executor: Executor):
        self.__engine = engine
        self.__executor = executor

    async def gallery_ideal(self, name: str) -> IdealPresentation:
        return gallery_ideal(name, self.__engine.get_field())

    async def verify_lemma_27lines(self, L: Optional[LinesIncidence] = None) -> Dict:
        return lemma_27lines_report(L or lines27())

    async def cayley_sweep(self, orders: Optional[List[List[str]]] = None, count: int = 50,
                           seed: Optional[int] = None) -> List[CayleyReport]:
        """Claims for the structured orders plus ``count`` random ones, unless orders are given."""
        if orders is None:
            seed = self.__engine.get_seed() if seed is None else seed
            orders = structured_line_orders() + random_line_orders(count, seed)
        chunks = [(chunk,) for chunk in self.__executor.split(orders)]
        results = await self.__executor.map_chunks(cayley_worker, chunks)
        reports = [CayleyReport(options) for chunk in results for options in chunk]
        logger.info("cayley sweep: %d of %d orders satisfy all claims",
                    sum(r.holds for r in reports), len(reports))
        return reports
