import logging
from math import comb

import pytest

from PyTidyKoszul.exceptions import InvalidArgumentError, NonHomogeneousError
from PyTidyKoszul.methods.grobner import (colon_by_polynomial, colon_degree_oracle, eliminate, first_failing_pair,
                                          hilbert_function, initial_ideal, is_artinian, is_groebner_basis,
                                          membership, normal_form, reduced_basis, socle_bound)
from PyTidyKoszul.types.orders import grevlex, parse_order
from PyTidyKoszul.types.ring import IdealPresentation, PolynomialRing


def test_remark_basis_is_quadratic_for_declaration_order(remark):
    x1, x2, x3 = remark.ring.gens()
    G = reduced_basis(remark, grevlex(3))
    assert set(G.polynomials) == {x2 ** 2 - x1 * x3, x2 * x3, x3 ** 2}
    assert G.is_quadratic
    assert is_groebner_basis(G.polynomials, grevlex(3))


def test_remark_basis_gains_a_cubic_when_x2_is_lowest(remark):
    x1, x2, x3 = remark.ring.gens()
    order = parse_order("revlex:x3,x1,x2", remark.variables)
    G = reduced_basis(remark, order)
    assert x2 ** 3 in G.polynomials
    assert G.max_degree == 3
    assert first_failing_pair(list(remark.generators), order) is not None


def test_chain_criterion_gives_the_same_basis(clebsch):
    plain = reduced_basis(clebsch, grevlex(4))
    chained = reduced_basis(clebsch, grevlex(4), chain_criterion=True)
    assert set(plain.polynomials) == set(chained.polynomials)


def test_unit_ideal(xyz, principal):
    x, y, z = xyz.gens()
    G = reduced_basis(principal(xyz, x - 1, x))
    assert G.is_unit
    assert G.polynomials == (xyz.base.one,)


def test_membership_and_normal_form(remark):
    x1, x2, x3 = remark.ring.gens()
    assert membership(x1 * x3 ** 2, remark)
    assert membership(x2 ** 3 * x3 - x1 * x2 * x3 ** 2, remark)
    assert not membership(x1 ** 2, remark)
    G = reduced_basis(remark).polynomials
    assert normal_form(x2 ** 2, G) == x1 * x3


def test_hilbert_functions(remark, clebsch):
    assert hilbert_function(remark, range(4)) == [1, 3, 3, 3]
    assert hilbert_function(clebsch, range(5)) == [1, 4, 4, 1, 0]
    assert is_artinian(clebsch)
    assert not is_artinian(remark)
    assert socle_bound(clebsch) == 3


def test_hilbert_function_needs_homogeneous_input(xyz, principal):
    x, y, z = xyz.gens()
    with pytest.raises(NonHomogeneousError):
        hilbert_function(principal(xyz, x ** 2 - y), [0, 1])


def test_initial_ideal_is_minimal(remark):
    J = initial_ideal(remark)
    assert set(J.generators) == {(0, 2, 0), (0, 1, 1), (0, 0, 2)}
    assert J.contains((1, 2, 0))
    assert J.standard_monomials(3) == [(3, 0, 0), (2, 1, 0), (2, 0, 1)]


@pytest.mark.parametrize("method", ["auto", "elimination"])
def test_colon_by_a_variable(remark, method):
    x1, x2, x3 = remark.ring.gens()
    colon = colon_by_polynomial(remark, x3, method)
    assert set(reduced_basis(colon).polynomials) == {x2, x3}


def test_colon_by_a_member_is_the_unit_ideal(remark):
    x1, x2, x3 = remark.ring.gens()
    assert colon_by_polynomial(remark, x3 ** 2).generators == (remark.ring.base.one,)


def test_colon_errors(remark):
    with pytest.raises(InvalidArgumentError):
        colon_by_polynomial(remark, remark.ring.base.zero)
    with pytest.raises(InvalidArgumentError):
        colon_by_polynomial(remark, remark.ring.gen("x1"), "saturate")


def test_colon_by_a_quadric_matches_the_oracle(clebsch):
    x, y, z, t = clebsch.ring.gens()
    f = x * y
    colon = colon_by_polynomial(clebsch, f)
    hf = hilbert_function(colon, range(4))
    for d in range(4):
        assert comb(d + 3, 3) - hf[d] == colon_degree_oracle(clebsch, f, d)


def test_colon_oracle_agrees_with_the_variable_colon(remark):
    x3 = remark.ring.gen("x3")
    assert [colon_degree_oracle(remark, x3, d) for d in range(4)] == [0, 2, 5, 9]


def test_eliminate_twisted_cubic_parameter(principal):
    ring = PolynomialRing(("t", "a", "b"))
    t, a, b = ring.gens()
    I = principal(ring, a - t ** 2, b - t ** 3)
    J = eliminate(I, ["t"])
    assert J.variables == ("a", "b")
    A, B = J.ring.gens()
    assert set(reduced_basis(J).polynomials) == {A ** 3 - B ** 2}


def test_eliminate_everything_is_rejected(remark):
    with pytest.raises(InvalidArgumentError):
        eliminate(remark, remark.variables)


def test_zero_ideal(xyz):
    Z = IdealPresentation(xyz, [xyz.base.zero])
    assert Z.is_zero
    assert len(reduced_basis(Z)) == 0
    assert hilbert_function(Z, [2]) == [6]


def test_repeated_bases_come_from_the_cache(remark, caplog):
    caplog.set_level(logging.DEBUG, logger="PyTidyKoszul.methods.grobner")
    first = reduced_basis(remark)
    assert reduced_basis(remark) is first
    assert any("cache hit" in r.getMessage() for r in caplog.records)
