"""Inverse systems: contraction, apolar ideals, perps of quadric spaces and the ERT obstruction."""
import logging
from math import comb, factorial
from typing import Dict, List, Optional, Tuple, Union

from sympy.polys.rings import PolyElement

from . import linalg
from .grobner import graded_piece, hilbert_function, is_artinian, reduced_basis
from .polyring import ambient, monomials_of_degree, require_invertible, substitute_linear
from ..exceptions import CharacteristicError, InvalidArgumentError, NonHomogeneousError
from ..parser import format_polynomial, ideal_hash
from ..types.apolar import DualForm, InverseSystemModule
from ..types.reports import ObstructionReport
from ..types.ring import IdealPresentation, PolynomialRing

logger = logging.getLogger(__name__)

Form = Union[DualForm, PolyElement]


def _form(F: Form) -> PolyElement:
    return F.form if isinstance(F, DualForm) else F


def _act(f: PolyElement, F: Form, weight) -> PolyElement:
    F = _form(F)
    if f.ring.ngens != F.ring.ngens:
        raise InvalidArgumentError(f"acting ring has {f.ring.ngens} variables, dual ring {F.ring.ngens}")
    D = F.ring
    K = D.domain
    out = {}
    for a, c in f.iterterms():
        for b, e in F.iterterms():
            if all(x <= y for x, y in zip(a, b)):
                m = tuple(y - x for x, y in zip(a, b))
                out[m] = out.get(m, K.zero) + K.convert(c) * e * weight(a, b)
    return D.from_dict({m: c for m, c in out.items() if c})


def contract(f: PolyElement, F: Form) -> PolyElement:
    """x^a acting on X^b gives X^(b-a), or 0 unless b >= a componentwise; result in the dual ring."""
    K = _form(F).ring.domain
    return _act(f, F, lambda a, b: K.one)


def differentiate(f: PolyElement, F: Form) -> PolyElement:
    """x^a acting on X^b gives b!/(b-a)! X^(b-a)."""
    K = _form(F).ring.domain

    def weight(a, b):
        w = 1
        for x, y in zip(a, b):
            w *= factorial(y) // factorial(y - x)
        return K(w)

    return _act(f, F, weight)


def _column_index(polys: List[PolyElement]) -> Tuple[Dict, List[Dict]]:
    columns: Dict = {}
    rows = []
    for p in polys:
        rows.append({columns.setdefault(m, len(columns)): c for m, c in p.iterterms()})
    return columns, rows


def module_graded_dimension(M: InverseSystemModule, d: int) -> int:
    """dim M_d, the span of all contractions of the generators by monomials of degree s - d."""
    s = M.socle_degree
    if not 0 <= d <= s:
        raise InvalidArgumentError(f"degree {d} outside 0..{s}")
    ring = M.acting
    images = []
    for m in monomials_of_degree(ring.arity, s - d):
        mono = ring.monomial(m)
        for F in M.generators:
            h = contract(mono, F)
            if h:
                images.append(h)
    columns, rows = _column_index(images)
    return linalg.rank(rows, len(columns), ring.domain)


def _contraction_kernel(M: InverseSystemModule, d: int) -> List[PolyElement]:
    """Basis of ann(M)_d in reduced echelon form, leading monomials first under grevlex."""
    ring = M.acting
    K = ring.domain
    source = monomials_of_degree(ring.arity, d)
    targets: Dict = {}
    rows: List[Dict] = []
    for j, m in enumerate(source):
        mono = ring.monomial(m)
        for i, F in enumerate(M.generators):
            for b, c in contract(mono, F).iterterms():
                key = targets.setdefault((i, b), len(targets))
                while len(rows) <= key:
                    rows.append({})
                rows[key][j] = c
    kernel = linalg.nullspace(rows, len(source), K)
    echelon, _ = linalg.row_echelon(kernel, len(source), K)
    R = ring.base
    return [R.from_dict({source[j]: c for j, c in row.items()}) for row in echelon]


def _new_generators(J: IdealPresentation, candidates: List[PolyElement]) -> List[PolyElement]:
    """Candidates reduced modulo J, keeping only those independent modulo J."""
    if J.is_zero:
        return candidates
    basis = reduced_basis(J)
    remainders = [basis.reduce(c) for c in candidates]
    remainders = [r for r in remainders if r]
    if not remainders:
        return []
    columns, rows = _column_index(remainders)
    keep = linalg.independent_rows(rows, len(columns), J.ring.domain)
    return [remainders[i].monic() for i in keep]


def apolar_ideal(M: Union[InverseSystemModule, DualForm]) -> IdealPresentation:
    """Minimal generators of ann(M), degree by degree up to s + 1."""
    if isinstance(M, DualForm):
        M = InverseSystemModule([M])
    ring = M.acting
    s = M.socle_degree
    J = IdealPresentation(ring, ())
    for d in range(1, s + 2):
        expected = module_graded_dimension(M, d) if d <= s else 0
        current = hilbert_function(J, [d])[0] if not J.is_zero else comb(ring.arity + d - 1, d)
        if current == expected:
            continue
        if d <= s:
            candidates = _contraction_kernel(M, d)
        else:
            standard = reduced_basis(J).initial_ideal().standard_monomials(d) if not J.is_zero \
                else monomials_of_degree(ring.arity, d)
            candidates = [ring.monomial(m) for m in standard]
        fresh = _new_generators(J, candidates)
        logger.debug("apolar ideal: %d new generators in degree %d", len(fresh), d)
        J = J.plus(fresh)
    return J


def _require_odd_characteristic(ring: PolynomialRing, what: str) -> None:
    if ring.characteristic == 2:
        raise CharacteristicError(f"{what} needs characteristic different from 2")


def quadric_part(I: IdealPresentation) -> List[PolyElement]:
    """Echelon basis of I_2."""
    ring = I.ring
    K = ring.domain
    source = monomials_of_degree(ring.arity, 2)
    index = {m: j for j, m in enumerate(source)}
    rows = [{index[m]: c for m, c in p.iterterms()} for p in graded_piece(I, 2)]
    echelon, _ = linalg.row_echelon(rows, len(source), K)
    return [ring.base.from_dict({source[j]: c for j, c in row.items()}) for row in echelon]


def perp_quadrics(I: IdealPresentation) -> List[PolyElement]:
    """Echelon basis of (I_2)^perp under the differentiation pairing, as quadrics of S."""
    ring = I.ring
    _require_odd_characteristic(ring, "the differentiation pairing on quadrics")
    if not I.is_homogeneous:
        raise NonHomogeneousError("perp of quadrics needs a homogeneous ideal")
    K = ring.domain
    source = monomials_of_degree(ring.arity, 2)
    index = {m: j for j, m in enumerate(source)}
    weights = [K(2) if max(m) == 2 else K.one for m in source]
    rows = [{index[m]: c * weights[index[m]] for m, c in q.iterterms()} for q in quadric_part(I)]
    kernel = linalg.nullspace(rows, len(source), K)
    echelon, _ = linalg.row_echelon(kernel, len(source), K)
    return [ring.base.from_dict({source[j]: c for j, c in row.items()}) for row in echelon]


def _caveat(excluded: List[int], modulus: Optional[int]) -> str:
    text = f"over an algebraically closed field of characteristic not in {{{', '.join(map(str, excluded))}}}"
    if modulus is not None:
        text += f" and not dividing {modulus}"
    return text


def ert_obstruction(I: IdealPresentation) -> ObstructionReport:
    """Artinian quadratic I with no square of a linear form: no quadratic GB in any coordinates."""
    ring = I.ring
    _require_odd_characteristic(ring, "the obstruction")
    if not I.is_homogeneous:
        raise NonHomogeneousError("the obstruction needs a homogeneous ideal")

    quadrics = quadric_part(I)
    Q = I.with_generators(quadrics)
    quadratic = bool(quadrics) and all(reduced_basis(Q).contains(g) for g in I.generators)
    artinian = is_artinian(I)
    perp = perp_quadrics(I)
    perp_artinian = bool(perp) and is_artinian(IdealPresentation(ring, perp))

    excluded = sorted(set(I.excluded_characteristics) | {2})
    obstructed = quadratic and artinian and perp_artinian
    report = ObstructionReport({
        "ideal_hash": ideal_hash(I),
        "variables": list(ring.variables),
        "field": ring.field,
        "quadratically_generated": quadratic,
        "ideal_artinian": artinian,
        "quadric_dimension": len(quadrics),
        "perp_dimension": len(perp),
        "perp_basis": [format_polynomial(p) for p in perp],
        "perp_artinian": perp_artinian,
        "conclusion": "no-quadratic-GB-after-any-linear-change" if obstructed else "inconclusive",
        "excluded_characteristics": excluded,
        "caveat_modulus": I.caveat_modulus,
        "caveat": _caveat(excluded, I.caveat_modulus),
    })
    logger.info("obstruction: %s (quadrics %d, perp %d)", report.conclusion, len(quadrics), len(perp))
    return report


def gram_matrix(f: PolyElement) -> List[list]:
    ring = ambient(f)
    K = ring.domain
    n = ring.arity
    A = [[K.zero] * n for _ in range(n)]
    half = K.quo(K.one, K(2))
    for m, c in f.iterterms():
        if sum(m) != 2:
            raise InvalidArgumentError("not a quadratic form")
        support = [i for i in range(n) for _ in range(m[i])]
        i, j = support
        if i == j:
            A[i][i] = c
        else:
            A[i][j] = A[j][i] = c * half
    return A


def _add_column(M: List[list], P: List[list], target: int, source: int, factor) -> None:
    # col[target] += factor * col[source] on P, and the matching congruence E^T M E on M
    n = len(M)
    for r in range(n):
        P[r][target] += factor * P[r][source]
        M[r][target] += factor * M[r][source]
    for c in range(n):
        M[target][c] += factor * M[source][c]


def diagonalize_quadric(f: PolyElement) -> Tuple[Dict[str, PolyElement], PolyElement]:
    """Invertible substitution ``x_i -> sum_j P_ij x_j`` taking f to sum lambda_i x_i^2.

    Symmetric Gaussian elimination on the Gram matrix; a zero pivot is fixed by
    adding a later variable with a nonzero cross term.
    """
    ring = ambient(f)
    _require_odd_characteristic(ring, "diagonalizing a quadric")
    if not f:
        raise InvalidArgumentError("cannot diagonalize the zero form")
    K = ring.domain
    n = ring.arity
    M = gram_matrix(f)
    P = [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]

    for k in range(n):
        if not M[k][k]:
            swap = next((j for j in range(k + 1, n) if M[j][j]), None)
            if swap is not None:
                for row in P:
                    row[k], row[swap] = row[swap], row[k]
                for row in M:
                    row[k], row[swap] = row[swap], row[k]
                M[k], M[swap] = M[swap], M[k]
            else:
                partner = next((j for j in range(k + 1, n) if M[k][j]), None)
                if partner is None:
                    continue
                _add_column(M, P, k, partner, K.one)
        pivot = M[k][k]
        for j in range(k + 1, n):
            if M[k][j]:
                _add_column(M, P, j, k, -K.quo(M[k][j], pivot))

    R = ring.base
    mapping = {}
    for i, name in enumerate(ring.variables):
        mapping[name] = R.from_dict({tuple(int(t == j) for t in range(n)): P[i][j]
                                     for j in range(n) if P[i][j]})
    require_invertible(ring, mapping)
    diagonal = R.from_dict({tuple(2 * int(t == i) for t in range(n)): M[i][i] for i in range(n) if M[i][i]})
    if substitute_linear(f, mapping) != diagonal:
        raise InvalidArgumentError("diagonalization failed to verify by substitution")
    return mapping, diagonal


class ApolarityMethods:
    def __init__(self, engine):
        self.__engine = engine

    async def apolar_ideal(self, M: Union[InverseSystemModule, DualForm]) -> IdealPresentation:
        return apolar_ideal(M)

    async def ert_obstruction(self, I: IdealPresentation) -> ObstructionReport:
        return ert_obstruction(I)

    async def diagonalize_quadric(self, f: PolyElement) -> Tuple[Dict[str, PolyElement], PolyElement]:
        return diagonalize_quadric(f)

    async def perp_quadrics(self, I: IdealPresentation) -> List[PolyElement]:
        return perp_quadrics(I)
