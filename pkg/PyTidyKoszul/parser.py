"""Text formats for ideals, dual forms and linear changes of coordinates.

Ideal files::

    vars: x1, x2, x3
    field: QQ
    x1*x3 - x2^2      # one generator per line
    x2*x3

Dual files use a ``dualvars:`` header instead of ``vars:``; change files
hold lines ``x -> linear form``.
"""
import hashlib
import logging
import re
from typing import Dict, List, Optional, Tuple

from sympy import Symbol
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from .exceptions import FieldError, ParseError, TidyKoszulError
from .types.apolar import DualForm, InverseSystemModule, dual_name
from .types.orders import grevlex
from .types.ring import IdealPresentation, PolynomialRing, normalize_field

logger = logging.getLogger(__name__)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_ALLOWED = re.compile(r"^[\sA-Za-z0-9_+\-*^/()]*$")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_JUXTAPOSED = re.compile(
    r"[A-Za-z0-9_)]\s*\(|\)\s*[A-Za-z0-9_]|[A-Za-z0-9_]\s+[A-Za-z0-9_]|(?<![A-Za-z0-9_])[0-9]+[A-Za-z_]")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _coerce(c, K, line: int):
    if K == QQ:
        return c
    p = K.characteristic()
    num, den = int(QQ.numer(c)), int(QQ.denom(c))
    if den % p == 0:
        raise ParseError(line, f"denominator {den} is not invertible in GF({p})")
    return K.quo(K(num), K(den))


def parse_polynomial(text: str, ring: PolynomialRing, line: int = 1) -> PolyElement:
    """Parse one polynomial over ``ring`` (integers, fractions, ``+ - * ^``, parentheses)."""
    text = _strip_comment(text)
    if not text:
        raise ParseError(line, "empty polynomial")
    if not _ALLOWED.match(text):
        raise ParseError(line, f"unexpected character in '{text}'")
    for name in _NAME.findall(text):
        if name not in ring.variables:
            raise ParseError(line, f"unknown variable '{name}'")
    if _JUXTAPOSED.search(text):
        raise ParseError(line, "juxtaposition is not allowed, write '*' explicitly")

    local = {name: Symbol(name) for name in ring.variables}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
        rational = PolyRing(ring.variables, QQ, grevlex(ring.arity)).from_expr(expr)
    except TidyKoszulError:
        raise
    except Exception as e:
        raise ParseError(line, f"cannot read '{text}' as a polynomial: {e}")

    K = ring.domain
    return ring.base.from_dict({m: _coerce(c, K, line) for m, c in rational.iterterms()})


def format_coefficient(c, K) -> str:
    if K == QQ:
        return str(K.to_sympy(c))
    return str(int(c) % K.characteristic())


def format_monomial(monom, names) -> str:
    parts = []
    for name, e in zip(names, monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: PolyElement) -> str:
    """Terms descending under grevlex in declaration order; coefficients as reduced fractions."""
    if not f:
        return "0"
    K = f.ring.domain
    names = [str(s) for s in f.ring.symbols]
    key = grevlex(f.ring.ngens)
    out = []
    for monom, c in sorted(f.iterterms(), key=lambda t: key(t[0]), reverse=True):
        negative = K == QQ and c < 0
        magnitude = -c if negative else c
        mono = format_monomial(monom, names)
        if not mono:
            body = format_coefficient(magnitude, K)
        elif magnitude == K.one:
            body = mono
        else:
            body = f"{format_coefficient(magnitude, K)}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(out)


def _headers(lines: List[str], first_key: str) -> Tuple[List[str], str, List[Tuple[int, str]]]:
    content = [(i + 1, _strip_comment(l)) for i, l in enumerate(lines)]
    content = [(n, l) for n, l in content if l]
    if len(content) < 2:
        raise ParseError(content[0][0] if content else 1, f"expected '{first_key}:' and 'field:' headers")

    (n1, l1), (n2, l2) = content[0], content[1]
    key, sep, value = l1.partition(":")
    if not sep or key.strip().lower() != first_key:
        raise ParseError(n1, f"expected '{first_key}:' header")
    names = [v.strip() for v in value.split(",") if v.strip()]

    key, sep, value = l2.partition(":")
    if not sep or key.strip().lower() != "field":
        raise ParseError(n2, "expected 'field:' header")
    try:
        field = normalize_field(value.strip())
    except FieldError as e:
        raise ParseError(n2, str(e))
    return names, field, content[2:]


def _ring(names: List[str], field: str, line: int) -> PolynomialRing:
    try:
        return PolynomialRing(names, field)
    except TidyKoszulError as e:
        raise ParseError(line, str(e))


def parse_ideal(text: str, label: Optional[str] = None) -> IdealPresentation:
    names, field, body = _headers(text.splitlines(), "vars")
    ring = _ring(names, field, 1)
    generators = [parse_polynomial(l, ring, n) for n, l in body]
    logger.debug("parsed %d generators over %s", len(generators), ring)
    return IdealPresentation(ring, generators, label=label)


def format_ideal(I: IdealPresentation) -> str:
    lines = [f"vars: {', '.join(I.variables)}", f"field: {I.field}"]
    lines.extend(format_polynomial(g) for g in I.generators)
    return "\n".join(lines) + "\n"


def ideal_hash(I: IdealPresentation) -> str:
    return hashlib.sha256(format_ideal(I).encode("utf-8")).hexdigest()


def parse_dual(text: str) -> InverseSystemModule:
    names, field, body = _headers(text.splitlines(), "dualvars")
    dual = _ring(names, field, 1)
    acting = _ring([dual_name(v) for v in names], field, 1)
    forms = []
    for n, l in body:
        try:
            forms.append(DualForm(parse_polynomial(l, dual, n), acting))
        except ParseError:
            raise
        except TidyKoszulError as e:
            raise ParseError(n, str(e))
    return InverseSystemModule(forms, acting)


def format_dual(M: InverseSystemModule) -> str:
    dual = M.generators[0].dual
    lines = [f"dualvars: {', '.join(dual.variables)}", f"field: {dual.field}"]
    lines.extend(format_polynomial(F.form) for F in M.generators)
    return "\n".join(lines) + "\n"


def parse_linear_change(text: str, ring: PolynomialRing) -> Dict[str, PolyElement]:
    """Read lines ``x -> expr`` (or ``x = expr``); unmentioned variables stay fixed."""
    mapping = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        target, sep, image = line.partition("->")
        if not sep:
            target, sep, image = line.partition("=")
        if not sep:
            raise ParseError(n, "expected 'variable -> linear form'")
        target = target.strip()
        if target not in ring.variables:
            raise ParseError(n, f"unknown variable '{target}'")
        if target in mapping:
            raise ParseError(n, f"variable '{target}' mapped twice")
        f = parse_polynomial(image, ring, n)
        if any(sum(m) > 1 for m in f.itermonoms()):
            raise ParseError(n, f"image of '{target}' is not of degree <= 1")
        mapping[target] = f
    return mapping


def format_linear_change(mapping: Dict[str, PolyElement]) -> str:
    return "".join(f"{name} -> {format_polynomial(f)}\n" for name, f in mapping.items())
