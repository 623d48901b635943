import pytest

from PyTidyKoszul.exceptions import CapExceededError, InvalidArgumentError
from PyTidyKoszul.methods import gallery
from PyTidyKoszul.methods.tidyuniversal import (check_revlex_universal, describe_word, is_quadratic_set, is_tidy_set,
                                                order_of_word, parse_mode, parse_permutation, permute_variables,
                                                project_universal_gb, recheck_witness, require_invariant,
                                                symmetry_group)


def test_parse_mode():
    assert parse_mode(None) == ("exhaustive", None)
    assert parse_mode("sample:5") == ("sampled", 5)
    assert parse_mode("sampled", 17) == ("sampled", 17)
    assert parse_mode("theorem") == ("theorem", None)
    for bad in ("sample:0", "sample:x", "random"):
        with pytest.raises(InvalidArgumentError):
            parse_mode(bad)


def test_words_read_lowest_first():
    order = order_of_word((1, 0, 2))
    assert order.ranking == (2, 0, 1)
    assert describe_word((1, 0, 2), ("x1", "x2", "x3")) == "x2 < x1 < x3"


def test_symmetric_two_minors_are_universal():
    I = gallery.gallery_ideal("minors:sym:3")
    report = check_revlex_universal(list(I.generators), "exhaustive")
    assert report.verdict == "universal"
    assert report.orders_checked == 720
    assert report.is_tidy_set
    assert report.is_quadratic


def test_remark_generators_fail_exactly_when_x2_is_lowest(remark):
    G = list(remark.generators)
    report = check_revlex_universal(G, "exhaustive")
    assert report.verdict == "not-universal"
    assert report.witness["word"] == [1, 0, 2]
    assert report.witness["reading"] == "x2 < x1 < x3"
    assert report.witness["failures"] == 2
    assert recheck_witness(G, report.witness)
    assert report.is_tidy_set


def test_sampled_runs_never_claim_universality():
    I = gallery.gallery_ideal("minors:gen:2x3")
    report = check_revlex_universal(list(I.generators), "sample:30", seed=7)
    assert report.universal
    assert report.verdict == "no-counterexample-found"
    assert report.orders_checked == 30
    assert report.seed == 7
    again = check_revlex_universal(list(I.generators), "sample:30", seed=7)
    assert again.get_dict() == report.get_dict()


def test_symmetry_reduces_the_orders(xyz):
    x, y, z = xyz.gens()
    G = [x * y, y * z, x * z]
    report = check_revlex_universal(G, "exhaustive", symmetry=[(1, 2, 0), (1, 0, 2)])
    assert report.universal
    assert report.orders_checked == 1
    assert report.symmetry_group_size == 6


def test_symmetry_must_preserve_the_candidates(remark):
    G = list(remark.generators)
    with pytest.raises(InvalidArgumentError):
        check_revlex_universal(G, "exhaustive", symmetry=[(1, 2, 0)])
    assert check_revlex_universal(G, "exhaustive").verdict == "not-universal"


def test_invariance_allows_scalar_multiples(xyz):
    x, y, z = xyz.gens()
    G = [x ** 2 - y ** 2, z ** 2]
    assert permute_variables(G[0], (1, 0, 2)) == -G[0]
    require_invariant(G, [(1, 0, 2)])
    with pytest.raises(InvalidArgumentError):
        require_invariant(G, [(0, 2, 1)])


def test_parse_permutation():
    assert parse_permutation("x2, x3, x1", ("x1", "x2", "x3")) == (1, 2, 0)
    for bad in ("x2,x3", "x2,x3,x4", "x2,x2,x1"):
        with pytest.raises(InvalidArgumentError):
            parse_permutation(bad, ("x1", "x2", "x3"))


def test_symmetry_group_closure():
    assert len(symmetry_group([(1, 2, 3, 4, 0)], 5)) == 5
    with pytest.raises(InvalidArgumentError):
        symmetry_group([(0, 0, 1)], 3)


def test_cap_and_empty_input(remark):
    with pytest.raises(CapExceededError):
        check_revlex_universal(list(remark.generators), "exhaustive", cap=2)
    with pytest.raises(InvalidArgumentError):
        check_revlex_universal([], "exhaustive")
    with pytest.raises(InvalidArgumentError):
        check_revlex_universal(list(remark.generators), "theorem")


def test_projection_of_dense_minors_matches_sparse_minors():
    dense = gallery.gallery_ideal("minors:gen:2x2")
    projected = project_universal_gb(dense.generators, ["x11"])
    x12, x21 = dense.ring.gen("x12"), dense.ring.gen("x21")
    assert projected == [-x12 * x21]
    assert project_universal_gb(dense.generators, ["x11", "x12"]) == []


def test_tidy_and_quadratic_sets(xyz):
    x, y, z = xyz.gens()
    assert is_tidy_set([x * y - z ** 2, x * z])
    assert not is_tidy_set([x ** 2 - x * y])
    assert is_quadratic_set([x * y, z ** 2])
    assert not is_quadratic_set([x * y, z ** 3])
    assert not is_quadratic_set([])


def test_engine_results_do_not_depend_on_jobs(run_engine):
    G = gallery.clebsch_gb()

    async def check(engine):
        return await engine.universal.check_revlex_universal(G, "exhaustive")

    single = run_engine(check, jobs=1)
    pooled = run_engine(check, jobs=2)
    assert single.verdict == "universal"
    assert single.get_dict() == pooled.get_dict()


@pytest.mark.parametrize("n, orders", [(5, 120), (6, 720)])
def test_cycle_family_bases_are_universal_without_pruning(n, orders):
    report = check_revlex_universal(gallery.cycle_family_gb(n), "exhaustive")
    assert report.verdict == "universal"
    assert report.orders_checked == orders
    assert report.symmetry_group_size is None
