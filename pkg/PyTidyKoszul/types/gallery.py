from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import InvalidArgumentError

Entry = Tuple[int, int]

SHAPE_KINDS = ("generic", "symmetric", "skew", "hankel")


def entry_name(i: int, j: int) -> str:
    """x12 for small indices, x10_2 once an index needs two digits."""
    if i < 10 and j < 10:
        return f"x{i}{j}"
    return f"x{i}_{j}"


class MatrixShape:
    """A generic, symmetric, skew or Hankel matrix of variables with some entries set to zero.

    Indices are 1-based. For the symmetric kind a zero at (i, j) also zeroes
    (j, i); the skew diagonal is always zero.
    """

    def __init__(self, kind: str, m: int, n: Optional[int] = None, zeros: Iterable[Entry] = ()):
        if kind not in SHAPE_KINDS:
            raise InvalidArgumentError(f"unknown matrix kind '{kind}'")
        n = m if n is None else n
        if m < 1 or n < 1:
            raise InvalidArgumentError(f"bad matrix size {m}x{n}")
        if kind in ("symmetric", "skew") and m != n:
            raise InvalidArgumentError(f"a {kind} matrix must be square")

        normalized = set()
        for i, j in zeros:
            if not (1 <= i <= m and 1 <= j <= n):
                raise InvalidArgumentError(f"zero entry ({i},{j}) outside a {m}x{n} matrix")
            if kind in ("skew", "hankel"):
                raise InvalidArgumentError(f"zero patterns are not supported for {kind} matrices")
            normalized.add((min(i, j), max(i, j)) if kind == "symmetric" else (i, j))

        self.kind: str = kind
        self.m: int = m
        self.n: int = n
        self.zeros: FrozenSet[Entry] = frozenset(normalized)

    def entry(self, i: int, j: int) -> Tuple[int, Optional[str]]:
        """(sign, variable name) of entry (i, j); the name is None for a zero entry."""
        if self.kind == "hankel":
            return 1, f"x{i + j - 1}"
        if self.kind == "skew":
            if i == j:
                return 1, None
            return (1, entry_name(i, j)) if i < j else (-1, entry_name(j, i))
        if self.kind == "symmetric":
            i, j = min(i, j), max(i, j)
        if (i, j) in self.zeros:
            return 1, None
        return 1, entry_name(i, j)

    def all_variables(self) -> Tuple[str, ...]:
        """Variables of the matrix before any entry is set to zero."""
        if self.kind == "hankel":
            return tuple(f"x{k}" for k in range(1, self.m + self.n))
        if self.kind == "generic":
            return tuple(entry_name(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1))
        if self.kind == "symmetric":
            return tuple(entry_name(i, j) for i in range(1, self.n + 1) for j in range(i, self.n + 1))
        return tuple(entry_name(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1))

    def variables(self) -> Tuple[str, ...]:
        zeroed = self.zeroed_variables()
        return tuple(v for v in self.all_variables() if v not in zeroed)

    def zeroed_variables(self) -> Tuple[str, ...]:
        return tuple(entry_name(i, j) for i, j in sorted(self.zeros))

    def describe(self) -> str:
        tag = {"generic": "gen", "symmetric": "sym", "skew": "skew", "hankel": "hankel"}[self.kind]
        size = str(self.n) if self.kind in ("symmetric", "skew") else f"{self.m}x{self.n}"
        text = f"minors:{tag}:{size}"
        if self.zeros:
            text += ":zeros=" + ",".join(f"{i}{j}" if i < 10 and j < 10 else f"{i}_{j}" for i, j in sorted(self.zeros))
        return text

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatrixShape)
                and (self.kind, self.m, self.n, self.zeros) == (other.kind, other.m, other.n, other.zeros))

    def __hash__(self) -> int:
        return hash((self.kind, self.m, self.n, self.zeros))

    def __repr__(self) -> str:
        return f"<MatrixShape {self.describe()}>"


A_LINES = tuple(f"a{i}" for i in range(1, 7))
B_LINES = tuple(f"b{i}" for i in range(1, 7))
C_LINES = tuple(f"c{i}{j}" for i, j in combinations(range(1, 7), 2))
LINES = A_LINES + B_LINES + C_LINES


def canonical_line(label: str) -> str:
    """``c21`` aliases ``c12``."""
    label = label.strip()
    if len(label) == 3 and label[0] == "c" and label[1:].isdigit():
        i, j = int(label[1]), int(label[2])
        label = f"c{min(i, j)}{max(i, j)}"
    if label not in LINES:
        raise InvalidArgumentError(f"unknown line '{label}'")
    return label


class LinesIncidence:
    """Lines and tritangent planes; planes are triples of line indices into ``lines``."""

    def __init__(self, planes: Iterable[Sequence[str]], lines: Sequence[str] = LINES):
        self.lines: Tuple[str, ...] = tuple(lines)
        self.index: Dict[str, int] = {label: k for k, label in enumerate(self.lines)}
        planes_out = []
        for plane in planes:
            ids = tuple(sorted(self.index[canonical_line(label)] for label in plane))
            if len(set(ids)) != 3:
                raise InvalidArgumentError(f"plane {tuple(plane)} does not hold three distinct lines")
            planes_out.append(ids)
        self.planes: Tuple[Tuple[int, int, int], ...] = tuple(planes_out)

        self.planes_of: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(p for p, plane in enumerate(self.planes) if k in plane) for k in range(len(self.lines)))
        self._pair: Dict[Tuple[int, int], int] = {}
        for p, plane in enumerate(self.planes):
            for a, b in combinations(plane, 2):
                self._pair.setdefault((a, b), p)

    def plane_through(self, a: int, b: int) -> Optional[int]:
        """Index of a plane containing both lines, or None."""
        return self._pair.get((min(a, b), max(a, b)))

    def coplanar(self, a: int, b: int) -> bool:
        return self.plane_through(a, b) is not None

    def label(self, plane: int) -> str:
        return "".join(self.lines[k] for k in self.planes[plane])

    def __len__(self) -> int:
        return len(self.planes)

    def __repr__(self) -> str:
        return f"<LinesIncidence: {len(self.lines)} lines, {len(self.planes)} planes>"
