import pytest

from PyTidyKoszul.exceptions import InvalidArgumentError
from PyTidyKoszul.methods import gallery
from PyTidyKoszul.methods.grobner import hilbert_function
from PyTidyKoszul.types.gallery import LINES, MatrixShape, canonical_line, entry_name


def test_entry_names():
    assert entry_name(1, 2) == "x12"
    assert entry_name(10, 2) == "x10_2"


def test_matrix_shapes():
    shape = MatrixShape("generic", 3, 3, [(1, 1), (2, 2)])
    assert shape.describe() == "minors:gen:3x3:zeros=11,22"
    assert len(shape.variables()) == 7
    assert shape.zeroed_variables() == ("x11", "x22")

    sym = MatrixShape("symmetric", 3, zeros=[(3, 1)])
    assert sym.zeros == frozenset({(1, 3)})
    assert sym.entry(3, 1) == (1, None)
    assert sym.entry(2, 1) == (1, "x12")

    assert MatrixShape("skew", 4).entry(3, 1) == (-1, "x13")
    assert MatrixShape("hankel", 2, 3).entry(2, 3) == (1, "x4")
    assert MatrixShape("hankel", 2, 3).variables() == ("x1", "x2", "x3", "x4")


@pytest.mark.parametrize("args", [
    ("banded", 3), ("symmetric", 2, 3), ("skew", 3, 3, [(1, 2)]), ("generic", 2, 2, [(3, 1)]), ("generic", 0),
])
def test_bad_shapes(args):
    with pytest.raises(InvalidArgumentError):
        MatrixShape(*args)


def test_two_minors():
    I = gallery.minors2(MatrixShape("generic", 2, 2))
    x11, x12, x21, x22 = I.ring.gens()
    assert I.generators == (x11 * x22 - x12 * x21,)
    assert len(gallery.gallery_ideal("minors:sym:3")) == 6
    assert len(gallery.hankel(2, 3)) == 3
    with pytest.raises(InvalidArgumentError):
        gallery.minors2(MatrixShape("skew", 4))


def test_sparse_minors_drop_vanishing_minors():
    I = gallery.gallery_ideal("minors:gen:2x2:zeros=11,22")
    x12, x21 = I.ring.gens()
    assert I.generators == (-x12 * x21,)
    assert I.label == "minors:gen:2x2:zeros=11,22"


def test_pfaffians():
    (pf,) = gallery.pfaffians(4, 4)
    R = gallery.skew_ring(4)
    g = {name: R.gen(name) for name in R.variables}
    assert pf == g["x12"] * g["x34"] - g["x13"] * g["x24"] + g["x14"] * g["x23"]
    assert len(gallery.pfaffians(5, 4)) == 5
    assert gallery.pfaffians(4, 2) == list(R.gens())
    for size in (3, 6, 0):
        with pytest.raises(InvalidArgumentError):
            gallery.pfaffians(4, size)


def test_maximal_minors_and_permanents():
    (det,) = gallery.maximal_minors(2, 2)
    (perm,) = gallery.maximal_minors(2, 2, permanent=True)
    assert det + perm == 2 * det.ring.gens[0] * det.ring.gens[3]
    assert len(gallery.maximal_minors(2, 4)) == 6
    with pytest.raises(InvalidArgumentError):
        gallery.maximal_minors(3, 2)


def test_apolar_generator_counts():
    assert len(gallery.minors_apolar_gens(2, 2)) == 9
    assert len(gallery.minors_apolar_gens(2, 3)) == 18
    assert len(gallery.pfaffian_apolar_gens(4)) == 21
    assert len(gallery.generalized_permanents(2, 2)) == 9


def test_clebsch_data(clebsch):
    assert clebsch.excluded_characteristics == (2, 3, 5)
    assert len(gallery.clebsch_gb()) == 16
    assert hilbert_function(clebsch, range(5)) == [1, 4, 4, 1, 0]


@pytest.mark.parametrize("n, modulus", [(5, 33), (6, 63), (7, 129)])
def test_cycle_family(n, modulus):
    I = gallery.cycle_family(n)
    assert gallery.cycle_modulus(n) == modulus
    assert I.caveat_modulus == modulus
    assert len(gallery.cycle_family_gb(n)) == n * (n - 1) // 2 + 3 * n
    assert hilbert_function(I, range(4)) == [1, n, n, 0]


def test_cycle_family_starts_at_five():
    with pytest.raises(InvalidArgumentError):
        gallery.cycle_family(4)


def test_veronese_change_cancels_the_middle_term():
    F = gallery.veronese_changed_form()
    assert F.degree == 3
    assert len(F.form) == 16
    assert all(max(m) == 1 for m in F.form.itermonoms())


def test_simplicial_forms():
    F = gallery.simplicial_form([(1, 2), (2, 3)], coefficients=[1, -1])
    assert len(F.form) == 2
    assert F.acting.variables == ("x1", "x2", "x3")
    with pytest.raises(InvalidArgumentError):
        gallery.simplicial_form([(1, 2), (3,)])
    with pytest.raises(InvalidArgumentError):
        gallery.simplicial_form([(1, 2)], coefficients=[1, 2])


def test_product_pool():
    labels = [I.label for I in gallery.product_pool()]
    assert labels == ["square", "monomials", "non-tidy", "sum-of-squares", "remark"]


def test_gallery_names_resolve():
    assert gallery.gallery_ideal("gallery:remark") == gallery.remark_ideal()
    assert gallery.gallery_ideal("cycle:5").label == "cycle:5"
    assert gallery.gallery_ideal("grassmannian:5").label == "grassmannian:5"
    assert len(gallery.gallery_ideal("pfaffians:5:4")) == 5
    cyclic = gallery.gallery_ideal("cyclic:4")
    assert cyclic.excluded_characteristics == (2, 3, 5)
    assert gallery.gallery_ideal("clebsch", "GF(7)").field == "GF(7)"


@pytest.mark.parametrize("name", ["lines27", "nonsense", "minors:gen:2by3", "cycle:x", "minors:gen:2x2:zero=11"])
def test_gallery_name_errors(name):
    with pytest.raises(InvalidArgumentError):
        gallery.gallery_ideal(name)


def test_gallery_modules():
    assert gallery.gallery_module("minors:2x3").type == 3
    assert gallery.gallery_module("symdet:3").socle_degree == 3
    assert gallery.gallery_module("cycle:5").type == 5
    with pytest.raises(InvalidArgumentError):
        gallery.gallery_module("hexagon")


def test_lines_structure():
    L = gallery.lines27()
    assert len(L.lines) == 27
    assert len(L) == 45
    assert gallery.check_lines_structure(L)
    assert canonical_line("c21") == "c12"
    with pytest.raises(InvalidArgumentError):
        canonical_line("d1")


def test_lines_lemma_and_a_broken_incidence():
    L = gallery.lines27()
    report = gallery.lemma_27lines_report(L)
    assert report["holds"]
    assert gallery.verify_lemma_27lines(L)

    broken = gallery.drop_plane(L, 0)
    assert L.label(0) == "a1b2c12"
    assert not gallery.check_lines_structure(broken)
    report = gallery.lemma_27lines_report(broken)
    assert not report["holds"]
    assert report["violations"]["meeting_planes"] is not None
    with pytest.raises(InvalidArgumentError):
        gallery.drop_plane(L, 45)


def test_noncoplanar_pairs():
    L = gallery.lines27()
    assert gallery.noncoplanar_pair(L, ["a1", "a2", "c34", "b5"]) == ("a1", "a2")
    assert gallery.noncoplanar_pair(L, ["a1", "b2", "c21"]) is None


def test_cayley_monomials():
    L = gallery.lines27()
    assert len(gallery.cayley_base_monomials(L)) == 243
    J, report = gallery.cayley_monomial_ideal()
    assert report.base_monomials == 243
    assert report.hilbert_function == [1, 27, 27, 1, 0]
    assert report.quadratic_monomials >= 351
    assert report.standard_cubics == ["*".join(report.lowest_plane)]
    assert report.holds


def test_cayley_order_must_list_every_line():
    with pytest.raises(InvalidArgumentError):
        gallery.cayley_monomial_ideal(list(LINES[:-1]))


def test_line_orders():
    assert len(gallery.structured_line_orders()) == 5
    assert all(sorted(order) == sorted(LINES) for order in gallery.structured_line_orders())
    assert gallery.random_line_orders(3, seed=1) == gallery.random_line_orders(3, seed=1)


def test_engine_cayley_sweep(run_engine):
    async def sweep(engine):
        lemma = await engine.gallery.verify_lemma_27lines()
        reports = await engine.gallery.cayley_sweep(count=2, seed=4)
        return lemma, reports

    lemma, reports = run_engine(sweep)
    assert lemma["holds"]
    assert len(reports) == 7
    assert all(r.holds for r in reports)
