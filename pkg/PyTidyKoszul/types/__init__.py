from .apolar import DualForm, InverseSystemModule
from .gallery import LinesIncidence, MatrixShape
from .groebner import GroebnerBasis, MonomialIdeal
from .orders import BlockOrder, LexOrder, MonomialOrder, RevlexOrder, grevlex, parse_order
from .reports import CayleyReport, ObstructionReport, RunReport, StrongKoszulCertificate, UniversalGBReport
from .ring import IdealPresentation, PolynomialRing, ProductPresentation
