from typing import Iterable, Optional, Tuple

from sympy.polys.rings import PolyElement

from .ring import PolynomialRing
from ..exceptions import DependentGeneratorsError, InvalidArgumentError, NonHomogeneousError


def dual_name(name: str) -> str:
    """Acting variable ``x`` pairs with dual variable ``X`` and back."""
    return name[0].swapcase() + name[1:]


def dual_ring(ring: PolynomialRing) -> PolynomialRing:
    return PolynomialRing(tuple(dual_name(v) for v in ring.variables), ring.field)


class DualForm:
    """A nonzero homogeneous form in the dual variables."""

    def __init__(self, form: PolyElement, acting: Optional[PolynomialRing] = None):
        if not form:
            raise InvalidArgumentError("a dual form must be nonzero")
        degrees = {sum(m) for m in form.itermonoms()}
        if len(degrees) != 1:
            raise NonHomogeneousError("a dual form must be homogeneous")

        self.dual: PolynomialRing = PolynomialRing.of(form.ring)
        self.acting: PolynomialRing = acting or PolynomialRing(
            tuple(dual_name(v) for v in self.dual.variables), self.dual.field)
        if self.acting.arity != self.dual.arity:
            raise InvalidArgumentError("acting ring and dual ring differ in arity")

        self.form: PolyElement = self.dual.convert(form)
        self.degree: int = degrees.pop()

    @classmethod
    def from_acting(cls, f: PolyElement) -> "DualForm":
        """Rename a polynomial in the acting variables into its dual form."""
        acting = PolynomialRing.of(f.ring)
        return cls(dual_ring(acting).base.from_dict(dict(f)), acting)

    def terms(self):
        return self.form.iterterms()

    def __eq__(self, other) -> bool:
        return isinstance(other, DualForm) and self.form == other.form

    def __hash__(self) -> int:
        return hash(self.form)

    def __repr__(self) -> str:
        return f"<DualForm degree {self.degree} over {', '.join(self.dual.variables)}>"


class InverseSystemModule:
    """Level inverse system: independent dual forms of one common degree."""

    def __init__(self, generators: Iterable[DualForm], acting: Optional[PolynomialRing] = None):
        self.generators: Tuple[DualForm, ...] = tuple(generators)
        if not self.generators:
            raise DependentGeneratorsError("an inverse system needs at least one generator")

        self.acting: PolynomialRing = acting or self.generators[0].acting
        if any(F.acting != self.acting for F in self.generators):
            raise InvalidArgumentError("dual forms act through different rings")

        degrees = {F.degree for F in self.generators}
        if len(degrees) != 1:
            raise DependentGeneratorsError(f"generators have different degrees {sorted(degrees)}")
        self.socle_degree: int = degrees.pop()

        from ..methods import linalg

        columns = {}
        rows = []
        for F in self.generators:
            rows.append({columns.setdefault(m, len(columns)): c for m, c in F.terms()})
        if linalg.rank(rows, len(columns), self.acting.domain) != len(rows):
            raise DependentGeneratorsError("generators are linearly dependent")

    @property
    def type(self) -> int:
        return len(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)
