"""Exact linear algebra over QQ and GF(p) on sparse rows, backed by DomainMatrix."""
from typing import Dict, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

SparseRow = Dict[int, object]


def _matrix(rows: Sequence[SparseRow], ncols: int, K) -> DomainMatrix:
    data = {i: {j: v for j, v in row.items() if v} for i, row in enumerate(rows)}
    data = {i: row for i, row in data.items() if row}
    return DomainMatrix(data, (len(rows), ncols), K)


def _to_lists(dm: DomainMatrix) -> List[list]:
    if hasattr(dm, "to_list"):
        return dm.to_list()
    K = dm.domain
    M = dm.to_Matrix()
    return [[K.from_sympy(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def _sparse(values: Sequence) -> SparseRow:
    return {j: v for j, v in enumerate(values) if v}


def rank(rows: Sequence[SparseRow], ncols: int, K) -> int:
    if not rows or not ncols:
        return 0
    return _matrix(rows, ncols, K).rank()


def nullspace(rows: Sequence[SparseRow], ncols: int, K) -> List[SparseRow]:
    """Basis of {v : A v = 0} where A has the given rows."""
    if not ncols:
        return []
    if not any(rows):
        return [{j: K.one} for j in range(ncols)]
    basis = _matrix(rows, ncols, K).nullspace()
    if basis.shape[0] == 0:
        return []
    return [_sparse(row) for row in _to_lists(basis)]


def independent_rows(rows: Sequence[SparseRow], ncols: int, K) -> List[int]:
    """Indices of rows not in the span of the rows before them."""
    if not rows or not ncols:
        return []
    _, pivots = _matrix(rows, ncols, K).transpose().rref()
    return list(pivots)


def row_echelon(rows: Sequence[SparseRow], ncols: int, K) -> Tuple[List[SparseRow], Tuple[int, ...]]:
    """Nonzero rows of the reduced row echelon form together with the pivot columns."""
    if not rows or not ncols:
        return [], ()
    reduced, pivots = _matrix(rows, ncols, K).rref()
    lists = _to_lists(reduced)
    return [_sparse(lists[i]) for i in range(len(pivots))], tuple(pivots)


def determinant(rows: Sequence[Sequence], K):
    n = len(rows)
    if n == 0:
        return K.one
    return DomainMatrix([list(r) for r in rows], (n, n), K).det()


def inverse(rows: Sequence[Sequence], K) -> List[list]:
    n = len(rows)
    return _to_lists(DomainMatrix([list(r) for r in rows], (n, n), K).inv())

