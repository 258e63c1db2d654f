from math import comb

import pytest

from isodom import families as F
from isodom import graph, oracle
from isodom.families import DEFAULT_CONVENTION, ZERO_CONVENTION, Variant
from isodom.graph import FamilySpec, build


def iso(g):
    return oracle.count_isolate_dominating(g)


def dom(g):
    return oracle.count_dominating(g)


def test_d0_complete():
    assert F.d0_complete(5, 1) == 5
    assert F.d0_complete(5, 2) == 0
    assert F.d0_complete(1, 1) == 1


def test_d0_star():
    assert F.d0_star(4, 1) == 1 and F.d0_star(4, 4) == 1
    assert F.d0_star(4, 3) == 0
    assert F.d0_star(4, 5) == 0
    assert F.d0_star(1, 1) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_observations_against_oracle(n):
    assert list(iso(graph.complete(n))) == [F.d0_complete(n, i) for i in range(n + 1)]
    if n >= 2:
        assert list(iso(graph.star(n))) == [F.d0_star(n, i) for i in range(n + 2)]


def test_d0_star_single_leaf_undercounts():
    # K_{1,1} = P_2: hub and leaf each dominate alone
    assert F.d0_star(1, 1) == 1
    assert iso(graph.star(1))[1] == 2


def test_d0_join_examples():
    p3 = iso(graph.path(3))
    assert F.d0_join(p3, p3)[2] == 2
    assert iso(graph.join(graph.path(3), graph.path(3)))[2] == 2
    k3 = iso(graph.complete(3))
    out = F.d0_join(k3, k3)
    assert out.counts == (0, 6, 0, 0, 0, 0, 0)
    assert out[1] == F.d0_complete(6, 1)
    assert F.d0_join(iso(graph.path(2)), k3).n == 5
    with pytest.raises(ValueError, match="order at least two"):
        F.d0_join(iso(graph.complete(1)), k3)


def test_d_path_recurrence_examples():
    assert F.d_path_recurrence(4, 2, Variant.CORRECTED) == 4
    assert F.d_path_recurrence(4, 2, Variant.LITERAL) == 1
    assert F.d_path_recurrence(1, 1, Variant.CORRECTED) == 1
    with pytest.raises(ValueError):
        F.d_path_recurrence(4, 2, Variant.RECONCILED)


def test_d_path_explicit_examples():
    assert F.d_path_explicit(4, 2) == 4
    assert F.d_path_explicit(1, 1) == 1
    # brute force over 2**12 subsets (frozen)
    assert F.d_path_explicit(12, 4) == 1


@pytest.mark.parametrize("n", range(1, 15))
def test_d_path_explicit_equals_oracle(n):
    assert [F.d_path_explicit(n, k) for k in range(1, n + 1)] == list(dom(graph.path(n)))[1:]


def test_corrected_recurrence_equals_explicit_up_to_20():
    for n in range(1, 21):
        for i in range(1, n + 1):
            assert F.d_path_recurrence(n, i, Variant.CORRECTED) == F.d_path_explicit(n, i)


def test_d0_path_examples():
    assert F.d0_path(5, 3) == 7
    assert F.d0_path(6, 2) == 1
    assert F.d0_path(12, 6) == 191


@pytest.mark.parametrize("n", range(1, 13))
def test_d0_path_equals_oracle(n):
    assert F.d0_path_table(n) == iso(graph.path(n))


def test_zero_convention_diverges_from_oracle():
    # all-zero boundary terms lose the d(P_0, 0) contributions and the P_1, P_2 initial values
    assert F.d0_path(2, 1, ZERO_CONVENTION) == 0
    assert F.d0_path(5, 3, ZERO_CONVENTION) == 4
    assert iso(graph.path(5))[3] == 7


def test_d0_cycle_examples():
    assert F.d0_cycle(4, 2) == 2 == iso(graph.cycle(4))[2]
    assert F.d0_cycle(5, 2) == 4
    assert iso(graph.cycle(5))[2] == 5
    assert F.d0_cycle(5, 2, ZERO_CONVENTION) == 4


def test_d0_cycle_at_triangle_is_not_the_oracle_value():
    # C_3 = K_3 has three isolate dominating singletons; the recurrence yields 2 d(P_0, 0)
    assert iso(graph.cycle(3))[1] == 3 == F.d0_complete(3, 1)
    assert F.d0_cycle(3, 1) == 2
    assert F.d0_cycle(3, 1, ZERO_CONVENTION) == 0


def test_gamma0_path_cycle():
    assert F.gamma0_path_cycle(7) == 3
    assert F.gamma0_path_cycle(3) == 1
    assert F.gamma0_path_cycle(12) == 4
    assert oracle.gamma0(graph.path(12)) == 4


@pytest.mark.parametrize("n", range(3, 13))
def test_gamma0_matches_oracle(n):
    assert oracle.gamma0(graph.path(n)) == F.gamma0_path_cycle(n)
    assert oracle.gamma0(graph.cycle(n)) == F.gamma0_path_cycle(n)


def test_d0_corona_k1_examples():
    assert F.d0_corona_k1(3, 3) == 7 == 2**3 - 1
    assert F.d0_corona_k1(3, 5) == 3
    assert F.d0_corona_k1(3, 4) == comb(3, 2) * comb(2, 1) + comb(3, 3) * comb(3, 1) == 9
    assert iso(graph.corona(graph.complete(3), graph.complete(1)))[4] == 9
    assert F.d0_corona_k1(3, 6) == 0 and F.d0_corona_k1(3, 2) == 0


@pytest.mark.parametrize("n", range(2, 6))
def test_d0_corona_k1_depends_only_on_order(n):
    expected = F.d0_corona_k1_table(n)
    for base in ("path", "cycle", "complete", "star"):
        if base == "cycle" and n < 3:
            continue
        spec = FamilySpec(base, n - 1 if base == "star" else n)
        assert iso(graph.corona(build(spec), graph.complete(1))) == expected


def test_d0_corona_k1_at_order_one_undercounts():
    # P_1 o K_1 = P_2 has two isolate dominating singletons; the closed forms give 1
    assert F.d0_corona_k1(1, 1) == 1
    assert iso(graph.path(2))[1] == 2


def test_d0_k1_corona_examples():
    out = F.d0_k1_corona(iso(graph.complete(3)))
    assert out[1] == 4 == iso(graph.complete(4))[1]
    assert F.d0_k1_corona(iso(graph.path(4)))[2] == 3
    assert F.d0_k1_corona(iso(graph.path(2)))[1] == 3 == iso(graph.complete(3))[1]
    assert len(F.d0_k1_corona(iso(graph.path(1)))) == 3


@pytest.mark.parametrize("spec", ["path:4", "cycle:5", "star:3", "complete:2", "explicit:4:0-1;2-3"])
def test_d0_k1_corona_against_oracle(spec):
    g = build(FamilySpec.parse(spec))
    assert F.d0_k1_corona(iso(g)) == iso(graph.join(graph.complete(1), g))


def test_corona_upper_bound_arithmetic():
    assert F.corona_upper_bound(2, 1, 2, 2, 3) == 4
    assert F.corona_upper_bound(3, 3, 1, 1, 1) == 3
    assert F.bound_cardinality(5, 2, 2) == 7
    with pytest.raises(ValueError):
        F.corona_upper_bound(2, 3, 1, 1, 1)


def test_corona_upper_bound_is_exceeded_on_p2_corona_p4():
    # spine vertices can be the isolated vertex too, which the bound does not count
    h = graph.path(4)
    bound = F.corona_upper_bound(2, 1, 2, iso(h)[2], dom(h)[2])
    assert bound == 6
    assert iso(graph.corona(graph.path(2), h))[3] == 8


@pytest.mark.parametrize("n", range(2, 13))
def test_path_support_is_contiguous(n):
    t = iso(graph.path(n))
    support = [i for i, c in enumerate(t) if c]
    assert support == list(range(F.gamma0_path_cycle(n), support[-1] + 1))
    assert support[-1] < n


def test_convention_names():
    assert DEFAULT_CONVENTION.name == "default"
    assert ZERO_CONVENTION.name == "zero"
    assert "custom" in F.BaseCaseConvention(True, False).name
