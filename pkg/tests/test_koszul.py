from itertools import combinations

import pytest

from PyTidyKoszul.acceptance import same_ideal
from PyTidyKoszul.exceptions import CapExceededError, FieldError, NonHomogeneousError
from PyTidyKoszul.methods import gallery
from PyTidyKoszul.methods.grobner import membership
from PyTidyKoszul.methods.koszul import (colon_variables, fiber_presentation, plus_variables,
                                         quadric_hypersurface_check, quotient_by_variables, sample_pairs,
                                         strong_koszul_certify, sweep_pairs, tensor_presentation,
                                         variable_generated_test, verify_certificate)
from PyTidyKoszul.types.reports import StrongKoszulCertificate
from PyTidyKoszul.types.ring import IdealPresentation, PolynomialRing

CERTIFIED = ["remark", "clebsch", "minors:gen:2x2", "cycle:5"]


def test_pair_sweep_order():
    pairs = sweep_pairs(3)
    assert len(pairs) == 12
    assert pairs[:3] == [((), 0), ((), 1), ((), 2)]
    assert pairs[-1] == ((1, 2), 0)
    assert sample_pairs(3, 8, 5) == sample_pairs(3, 8, 5)


def test_plus_and_colon(remark):
    x1, x2, x3 = remark.ring.gens()
    J = plus_variables(remark, ["x3"])
    assert membership(x2 ** 2, J)
    colon = colon_variables(remark, [], "x3")
    assert variable_generated_test(remark, colon) == ("x2", "x3")


def test_remark_ideal_is_certified(remark):
    cert = strong_koszul_certify(remark, "exhaustive")
    assert cert.certified
    assert cert.pairs_checked == 12
    assert len(cert.pairs) == 12
    assert cert.pairs[0] == {"Y": [], "x": "x1", "V": []}
    assert verify_certificate(remark, cert)


def test_tampered_certificate_is_rejected(remark):
    cert = strong_koszul_certify(remark, "exhaustive")
    cert.pairs[0]["V"] = ["x1"]
    assert not verify_certificate(remark, cert)


def test_certificate_with_a_missing_colon_generator_is_rejected():
    ring = PolynomialRing(("x", "y"))
    x, y = ring.gens()
    I = IdealPresentation(ring, [x ** 2 - x * y])
    # the true colon I : x is (x - y); the stored colon leaves it out
    forged = StrongKoszulCertificate({
        "verdict": "certified",
        "pairs": [{"Y": [], "x": "x", "V": []}],
        "colons": [["x^2 - x*y"]],
    })
    assert not verify_certificate(I, forged)


def test_stored_colon_generators_must_lie_in_the_colon(remark):
    cert = strong_koszul_certify(remark, "exhaustive")
    cert._colons[0] = cert._colons[0] + ["x1"]
    assert not verify_certificate(remark, cert)


def test_non_tidy_principal_quadric_has_a_witness():
    ring = PolynomialRing(("x", "y"))
    x, y = ring.gens()
    I = IdealPresentation(ring, [x ** 2 - x * y])
    cert = strong_koszul_certify(I, "exhaustive")
    assert cert.verdict == "counterexample"
    assert cert.pairs_checked == 1
    assert cert.witness == {"Y": [], "x": "x", "V": [], "colon_generators": ["-x + y"], "offending": "-x + y"}
    assert cert.pairs == []


def test_clebsch_ideal_is_certified(clebsch):
    cert = strong_koszul_certify(clebsch, "exhaustive")
    assert cert.certified
    assert cert.pairs_checked == 32
    assert verify_certificate(clebsch, cert)


def test_sampled_sweeps_never_certify(remark):
    cert = strong_koszul_certify(remark, "sample:5", seed=3)
    assert cert.verdict == "no-counterexample-found"
    assert cert.mode == "sampled"
    assert cert.seed == 3
    assert not cert.certified


def test_theorem_shortcut():
    single = gallery.gallery_ideal("minors:gen:2x2")
    assert strong_koszul_certify(single, "theorem").certified

    cert = strong_koszul_certify(gallery.clebsch_ideal(), "theorem")
    assert cert.verdict == "inconclusive"
    assert "not a Gröbner basis" in cert.reason


def test_input_errors(xyz, principal, remark):
    x, y, z = xyz.gens()
    with pytest.raises(NonHomogeneousError):
        strong_koszul_certify(principal(xyz, x ** 2 - y), "exhaustive")
    with pytest.raises(CapExceededError):
        strong_koszul_certify(remark, "exhaustive", cap=2)


def test_quotient_by_variables(remark):
    Q = quotient_by_variables(remark, ["x3"])
    assert Q.variables == ("x1", "x2")
    (u, v) = Q.ring.gens()
    assert Q.generators == (-v ** 2,)
    assert quotient_by_variables(remark, []) is remark


def test_products(remark):
    square = gallery.product_pool()[0]
    tensor = tensor_presentation(square, remark)
    assert tensor.variables == ("x", "x1", "x2", "x3")
    assert tensor.factor_of == (1, 2, 2, 2)
    assert len(tensor.generators) == 4

    fiber = fiber_presentation(remark, remark)
    assert fiber.variables == ("x1_1", "x2_1", "x3_1", "x1_2", "x2_2", "x3_2")
    assert len(fiber.generators) == 6 + 9
    assert strong_koszul_certify(fiber.ideal, "exhaustive").certified


def test_products_need_one_field(remark):
    with pytest.raises(FieldError):
        tensor_presentation(remark, gallery.remark_ideal("GF(5)"))


def test_quadric_hypersurface(xyz):
    x, y, z = xyz.gens()
    result = quadric_hypersurface_check(x * y + y * z)
    assert result["substitution_verified"]
    assert result["theorem_shortcut"] == "certified"
    assert result["exhaustive"] == "certified"


def test_engine_sweep_is_deterministic(run_engine, clebsch):
    async def certify(engine):
        return await engine.koszul.strong_koszul_certify(clebsch)

    single = run_engine(certify, jobs=1)
    pooled = run_engine(certify, jobs=3)
    assert single.certified
    assert single.get_dict() == pooled.get_dict()


@pytest.mark.parametrize("name", CERTIFIED)
def test_theorem_shortcut_never_outruns_the_sweep(name):
    I = gallery.gallery_ideal(name)
    shortcut = strong_koszul_certify(I, "theorem")
    if shortcut.certified:
        assert strong_koszul_certify(I, "exhaustive").certified


def test_theorem_shortcut_certifies_a_single_minor():
    assert strong_koszul_certify(gallery.gallery_ideal("minors:gen:2x2"), "theorem").certified


@pytest.mark.parametrize("name", CERTIFIED)
def test_quotients_by_variables_stay_certified(name):
    I = gallery.gallery_ideal(name)
    assert strong_koszul_certify(I, "exhaustive").certified
    for size in range(1, I.ring.arity):
        for A in combinations(I.variables, size):
            Q = quotient_by_variables(I, A)
            assert strong_koszul_certify(Q, "exhaustive").certified, A


@pytest.mark.parametrize("name", CERTIFIED)
def test_colons_are_generated_by_variables_modulo_the_ideal(name):
    I = gallery.gallery_ideal(name)
    for Y, x in sweep_pairs(I.ring.arity):
        Y = [I.variables[i] for i in Y]
        colon = colon_variables(I, Y, I.variables[x])
        V = variable_generated_test(I, colon)
        assert V is not None, (Y, x)
        if len(V) < I.ring.arity:
            assert same_ideal(colon, plus_variables(I, V))
