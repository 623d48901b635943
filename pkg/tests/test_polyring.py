import random

import pytest
from sympy import QQ

from PyTidyKoszul.exceptions import FieldError, InvalidArgumentError, ParseError, ZeroPolynomialError
from PyTidyKoszul.methods.polyring import (degree, inverse_map, is_tidy, leading_monomial, linear_map_matrix,
                                           monomials_of_degree, require_invertible, set_variables_to_zero,
                                           substitute_linear)
from PyTidyKoszul.parser import (format_ideal, format_polynomial, parse_dual, parse_ideal,
                                 parse_linear_change, parse_polynomial)
from PyTidyKoszul.types.orders import EQ, GT, LT, BlockOrder, LexOrder, grevlex, parse_order, revlex_lowest
from PyTidyKoszul.types.ring import PolynomialRing, normalize_field

VARS = ("x1", "x2", "x3")


def test_grevlex_prefers_the_square_of_the_middle_variable():
    assert grevlex(3).compare((0, 2, 0), (1, 0, 1)) == GT
    assert grevlex(3).compare((1, 0, 1), (1, 0, 1)) == EQ
    assert grevlex(3).compare((0, 0, 1), (1, 1, 0)) == LT


def test_revlex_ranking_is_highest_first():
    order = parse_order("revlex:x3,x1,x2", VARS)
    assert order.ranking == (2, 0, 1)
    assert order.compare((1, 0, 1), (0, 2, 0)) == GT
    assert order.describe(VARS) == "revlex:x3,x1,x2"


def test_plain_revlex_is_declaration_order():
    assert parse_order("revlex", VARS) == grevlex(3)
    assert revlex_lowest(3, [0]).ranking == (1, 2, 0)


def test_lex_and_block_orders():
    lex = parse_order("lex:x2,x1,x3", VARS)
    assert isinstance(lex, LexOrder)
    assert lex.compare((0, 1, 0), (5, 0, 0)) == GT

    block = parse_order("block:x1|revlex", VARS)
    assert isinstance(block, BlockOrder)
    assert block.compare((1, 0, 0), (0, 3, 0)) == GT
    assert block.describe(VARS) == "block:x1|revlex:x1,x2,x3"


@pytest.mark.parametrize("spec", ["revlex:x1,x2", "revlex:x1,x2,x4", "wlex:x1,x2,x3", "block:x1"])
def test_bad_order_specs(spec):
    with pytest.raises(InvalidArgumentError):
        parse_order(spec, VARS)


def test_compare_checks_arity():
    with pytest.raises(InvalidArgumentError):
        grevlex(3).compare((1, 0), (0, 1))


def test_fields():
    assert normalize_field(None) == "QQ"
    assert normalize_field(5) == "GF(5)"
    assert normalize_field(" GF( 7 ) ") == "GF(7)"
    with pytest.raises(FieldError):
        normalize_field("GF(4)")
    with pytest.raises(FieldError):
        normalize_field("RR")


def test_ring_rejects_duplicate_names():
    with pytest.raises(InvalidArgumentError):
        PolynomialRing(("x", "x"))
    with pytest.raises(InvalidArgumentError):
        PolynomialRing(("x", "2y"))


def test_parse_and_format_polynomial(xyz):
    x, y, z = xyz.gens()
    f = parse_polynomial("x^2 - 1/2*y*z", xyz)
    assert f == x ** 2 - y * z * QQ(1, 2)
    assert format_polynomial(f) == "x^2 - 1/2*y*z"
    assert format_polynomial(xyz.base.zero) == "0"


def test_parse_over_a_prime_field():
    ring = PolynomialRing(("x", "y"), "GF(7)")
    f = parse_polynomial("x/2 + 8*y", ring)
    assert format_polynomial(f) == "4*x + y"
    with pytest.raises(ParseError):
        parse_polynomial("x/7", ring)


@pytest.mark.parametrize("text", ["2x", "x y", "x*(y", "x % y", "x*w"])
def test_parse_rejects(text, xyz):
    with pytest.raises(ParseError):
        parse_polynomial(text, xyz)


def test_parse_error_reports_the_line():
    text = "vars: x, y\nfield: QQ\n\nx*y\nx*w\n"
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert info.value.line == 5


def test_ideal_file_comments_and_canonical_form():
    text = "# header comment\nvars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2   # quadric\nx3*x2\n"
    I = parse_ideal(text, label="demo")
    assert I.label == "demo"
    assert len(I.generators) == 2
    assert format_ideal(I) == "vars: x1, x2, x3\nfield: QQ\n-x2^2 + x1*x3\nx2*x3\n"
    assert format_ideal(parse_ideal(format_ideal(I))) == format_ideal(I)


def test_missing_headers():
    with pytest.raises(ParseError):
        parse_ideal("field: QQ\nvars: x\nx\n")
    with pytest.raises(ParseError):
        parse_ideal("vars: x\n")


def test_dual_file():
    M = parse_dual("dualvars: X, Y\nfield: QQ\nX^2*Y\nY^3\n")
    assert M.socle_degree == 3
    assert M.type == 2
    assert M.acting.variables == ("x", "y")


def test_linear_change_file(xyz):
    x, y, z = xyz.gens()
    mapping = parse_linear_change("x -> x + y\nz = 2*z  # scale\n", xyz)
    assert mapping == {"x": x + y, "z": 2 * z}
    assert linear_map_matrix(xyz, mapping)[1] == [0, 1, 0]
    with pytest.raises(ParseError):
        parse_linear_change("x -> x*y\n", xyz)
    with pytest.raises(ParseError):
        parse_linear_change("x -> y\nx -> z\n", xyz)


def test_tidy(xyz):
    x, y, z = xyz.gens()
    assert is_tidy(x * y - z ** 2)
    assert is_tidy(x ** 2)
    assert not is_tidy(x ** 2 - x * y)


def test_structural_helpers(xyz):
    x, y, z = xyz.gens()
    assert substitute_linear(x * y, {"x": x + y}) == x * y + y ** 2
    assert set_variables_to_zero(x * y + z ** 2, ["x"]) == z ** 2
    assert degree(x * y + z) == 2
    assert leading_monomial(x * z + y ** 2, grevlex(3)) == (0, 2, 0)
    with pytest.raises(ZeroPolynomialError):
        degree(xyz.base.zero)
    with pytest.raises(InvalidArgumentError):
        substitute_linear(x, {"x": y * z})


def test_monomials_of_degree():
    monomials = monomials_of_degree(3, 2)
    assert len(monomials) == 6
    assert monomials[0] == (2, 0, 0)
    assert monomials[-1] == (0, 0, 2)


def test_inverse_map_undoes_random_changes(xyz):
    rng = random.Random(11)
    x, y, z = xyz.gens()
    f = x ** 2 * y - 3 * y * z + z ** 3
    done = 0
    while done < 5:
        mapping = {name: sum((rng.randint(-2, 2) * g for g in xyz.gens()), xyz.base.zero)
                   for name in xyz.variables}
        try:
            back = inverse_map(xyz, mapping)
        except InvalidArgumentError:
            continue
        assert substitute_linear(substitute_linear(f, mapping), back) == f
        assert substitute_linear(substitute_linear(f, back), mapping) == f
        done += 1


def test_singular_change_is_rejected(xyz):
    x, y, z = xyz.gens()
    with pytest.raises(InvalidArgumentError):
        require_invertible(xyz, {"x": y, "y": y})
    require_invertible(xyz, {"x": x + y})
