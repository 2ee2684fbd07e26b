import numpy as np
import pytest

from derangements import (Budgets, BudgetExceeded, DEFAULT_BUDGETS,
                          PermGroup, Permutation, WreathSpec,
                          action_prime_order_class_reps,
                          count_order_r_elements, is_2prime_elusive,
                          is_elusive, is_r_elusive, natural_action,
                          prime_order_class_reps, semiregular_search,
                          structural_wreath_elusivity, wreath,
                          wreath_fixed_point_check,
                          wreath_prime_order_class_reps)
from derangements.elusive import ClassInfo

from tests.conftest import alternating, cyclic, symmetric


def naive_order_r_count(G, r):
    return sum(1 for x in G.enumerate_elements() if x.order() == r)


@pytest.mark.parametrize("factory,r", [
    (lambda: symmetric(4), 2),
    (lambda: symmetric(4), 3),
    (lambda: alternating(5), 5),
    (lambda: cyclic(6), 2),
    (lambda: cyclic(6), 3),
])
def test_count_order_r_elements_oracle(factory, r):
    G = factory()
    assert count_order_r_elements(G, r) == naive_order_r_count(G, r)


def naive_class_partition(G, r):
    """Order-r classes by brute conjugation; returns sorted class sizes."""
    elems = [x for x in G.enumerate_elements() if x.order() == r]
    all_elems = list(G.enumerate_elements())
    seen = set()
    sizes = []
    for x in elems:
        if x.key() in seen:
            continue
        cls = {(g.inverse() * x * g).key() for g in all_elems}
        seen |= cls
        sizes.append(len(cls))
    return sorted(sizes)


@pytest.mark.parametrize("factory,r", [
    (lambda: symmetric(4), 2),
    (lambda: symmetric(5), 2),
    (lambda: alternating(5), 3),
    (lambda: alternating(6), 3),
])
def test_class_reps_match_naive_partition(factory, r):
    G = factory()
    infos = prime_order_class_reps(G, r)
    assert sorted(ci.class_size for ci in infos) == naive_class_partition(G, r)
    for ci in infos:
        assert ci.representative.order() == r
        assert ci.exact
        fixed = [x.num_fixed() for x in G.enumerate_elements()
                 if x.order() == r]
        assert ci.min_fixed_points >= min(fixed)


def test_a6_order3_fusion(line9):
    """A6 has two order-3 classes of 40.  The overgroups containing a
    diagonal-type element (PGL(2,9), M10, the full automorphism group) fuse
    them into one class of 80; S6 preserves cycle types and keeps both."""
    a6 = line9.subgroups["PSL"]
    infos = prime_order_class_reps(a6, 3)
    assert sorted(ci.class_size for ci in infos) == [40, 40]
    for name in ("PGL", "M10"):
        over = line9.subgroups[name]
        fused = prime_order_class_reps(over, 3)
        assert [ci.class_size for ci in fused] == [80]
    s6 = prime_order_class_reps(line9.subgroups["S6"], 3)
    assert sorted(ci.class_size for ci in s6) == [40, 40]
    full = prime_order_class_reps(line9.group, 3)
    assert [ci.class_size for ci in full] == [80]


def test_m11_order3_class(env):
    infos = prime_order_class_reps(env.m11_action().group, 3)
    assert [ci.class_size for ci in infos] == [440]
    infos11 = prime_order_class_reps(env.m11_action().group, 11)
    assert sorted(ci.class_size for ci in infos11) == [720, 720]


def test_sampled_class_reps_anchor(env):
    G = env.m11_action().group
    exact = prime_order_class_reps(G, 3)
    sampled = prime_order_class_reps(G, 3, mode="sampled",
                                     expected_count=len(exact))
    assert len(sampled) == len(exact)
    assert sampled[0].min_fixed_points == exact[0].min_fixed_points


def naive_wreath_order_r_classes(spec, r):
    """Class sizes of order-r elements in the materialized wreath product."""
    W = wreath(spec)
    G = W.group
    return naive_class_partition(G, r)


@pytest.mark.parametrize("base_factory,k,top_factory,flavor,r", [
    (lambda: cyclic(2), 2, lambda: cyclic(2), "product", 2),
    (lambda: cyclic(2), 2, lambda: cyclic(2), "imprimitive", 2),
    (lambda: symmetric(3), 2, lambda: cyclic(2), "product", 2),
    (lambda: symmetric(3), 2, lambda: cyclic(2), "imprimitive", 2),
    (lambda: symmetric(3), 2, lambda: cyclic(2), "imprimitive", 3),
    (lambda: cyclic(3), 3, lambda: cyclic(3), "imprimitive", 3),
])
def test_wreath_class_reps_match_materialized(base_factory, k, top_factory,
                                              flavor, r):
    base = natural_action(base_factory(), "base")
    spec = WreathSpec(base, k, top_factory(), flavor)
    infos = wreath_prime_order_class_reps(spec, r)
    assert sorted(ci.class_size for ci in infos) == \
        naive_wreath_order_r_classes(spec, r)
    # representatives come back materialized at these degrees; they really
    # have order r and the declared minimum is attained by the class
    W = wreath(spec)
    for ci in infos:
        perm = ci.representative
        assert perm.order() == r
        assert W.group.contains(perm)
        # min fixed points over the whole class, by brute conjugation
        cls_min = min(
            (g.inverse() * perm * g).num_fixed()
            for g in W.group.enumerate_elements()
        )
        assert ci.min_fixed_points == cls_min


def test_wreath_fixed_point_check_vs_materialized():
    base = natural_action(symmetric(3), "S3")
    c2 = cyclic(2)
    rng = np.random.default_rng(0)
    for flavor in ("product", "imprimitive"):
        spec = WreathSpec(base, 2, c2, flavor)
        for _ in range(200):
            w = spec.element(
                [base.group.random_element(rng) for _ in range(2)],
                c2.generators[0] if rng.integers(2)
                else Permutation.identity(2))
            assert wreath_fixed_point_check(spec, w) == \
                (w.to_permutation().num_fixed() > 0)


def test_is_r_elusive_small_groups():
    # C3 regular: the full group is fixed-point-free
    v = is_r_elusive(natural_action(cyclic(3), "C3"), 3)
    assert v.status == "NotElusive"
    assert v.witness.order() == 3 and v.witness.num_fixed() == 0
    # S3 natural: every order-2 element is a transposition with a fixed point
    v2 = is_r_elusive(natural_action(symmetric(3), "S3"), 2)
    assert v2.status == "Elusive"
    # r does not divide the order
    v3 = is_r_elusive(natural_action(symmetric(3), "S3"), 7)
    assert v3.status == "NotApplicable"
    with pytest.raises(ValueError):
        is_r_elusive(natural_action(symmetric(3), "S3"), 4)


def test_is_r_elusive_requires_transitive():
    g = Permutation.from_cycles(4, [(0, 1)])
    with pytest.raises(ValueError):
        is_r_elusive(natural_action(PermGroup([g]), "C2 on 4"), 2)


def test_m11_12_is_elusive(m11_12):
    rep = is_elusive(m11_12)
    assert bool(rep)
    assert rep.exact
    assert {v.method for v in rep.verdicts} == {"exhaustive-enumeration"}
    assert [v.prime for v in rep.verdicts] == [2, 3]


def test_2prime_elusive_power_of_two_degree():
    # degree 8 admits no odd prime divisor
    from derangements import GroupAction, borel_subgroup, coset_action, \
        mersenne_scenario, projective_line_action
    line = projective_line_action(7)
    H = borel_subgroup(mersenne_scenario(7), "psl", 3)
    A = coset_action(GroupAction(line.subgroups["PSL"], line.point_labels,
                                 "PSL(2,7)"), H)
    rep = is_2prime_elusive(A)
    assert rep.aggregate is None
    assert "odd prime" in rep.reason
    assert not bool(rep)


def test_not_elusive_witness_is_reverified():
    from derangements.elusive import ElusivityVerdict
    w = Permutation.from_cycles(3, [(0, 1)])  # order 2, fixes point 2
    with pytest.raises(ValueError):
        ElusivityVerdict(2, "NotElusive", witness=w)
    with pytest.raises(ValueError):
        ElusivityVerdict(3, "NotElusive",
                         witness=Permutation.from_cycles(4, [(0, 1), (2, 3)]))


def test_class_coverage_route(env):
    A = env.a384()
    v = is_r_elusive(A, 3)
    assert v.status == "Elusive"
    assert v.method == "class-coverage"
    assert v.exact


def test_class_coverage_matches_backtrack(env):
    # same verdict from the independent search on the degree-384 action
    from derangements import derangement_backtrack
    A = env.a384()
    assert derangement_backtrack(A.group, 3) is None
    v = is_r_elusive(A, 3)
    assert v.status == "Elusive"


def test_structural_wreath_positive_and_negative():
    s3 = natural_action(symmetric(3), "S3")
    c2 = cyclic(2)
    # S3 is 3-elusive on 3 points?  No: (0 1 2) is fixed-point-free.
    neg = structural_wreath_elusivity(WreathSpec(s3, 2, c2, "product"), 3)
    assert neg.status == "NotElusive"
    assert neg.witness is not None
    # materialized witness really is an order-3 derangement on 9 points
    assert neg.witness.order() == 3 and neg.witness.num_fixed() == 0
    # A4 on 4 points is 3-elusive (every order-3 element fixes a point),
    # so A4 wr C2 in the product action is too
    a4 = natural_action(alternating(4), "A4")
    pos = structural_wreath_elusivity(WreathSpec(a4, 2, c2, "product"), 3)
    assert pos.status == "Elusive"
    assert pos.method == "wreath-structural"
    # imprimitive flavor with an order-3 top derangement flips the verdict
    c3 = cyclic(3)
    neg2 = structural_wreath_elusivity(
        WreathSpec(a4, 3, c3, "imprimitive"), 3)
    assert neg2.status == "NotElusive"


def test_structural_checker_rejects_r2():
    s3 = natural_action(symmetric(3), "S3")
    with pytest.raises(ValueError):
        structural_wreath_elusivity(WreathSpec(s3, 2, cyclic(2), "product"),
                                    2)


def test_structural_verdicts_match_exhaustive():
    """Structural wreath verdicts agree with direct enumeration of the
    materialized group, for every odd prime dividing the small degrees."""
    cases = [
        (natural_action(symmetric(3), "S3"), 2, cyclic(2), "imprimitive", 3),
        (natural_action(alternating(4), "A4"), 2, cyclic(2), "product", 3),
        (natural_action(cyclic(3), "C3"), 3, cyclic(3), "imprimitive", 3),
        (natural_action(alternating(5), "A5"), 2, cyclic(2), "imprimitive",
         5),
        (natural_action(alternating(5), "A5"), 2, cyclic(2), "imprimitive",
         3),
    ]
    for base, k, top, flavor, r in cases:
        spec = WreathSpec(base, k, top, flavor)
        structural = structural_wreath_elusivity(spec, r)
        W = wreath(spec)
        direct = [x for x in W.group.enumerate_elements()
                  if x.order() == r and x.num_fixed() == 0]
        assert (structural.status == "Elusive") == (len(direct) == 0)


def test_action_class_reps_pushed_through_coset_table(m11_12, env):
    # parent route: classes computed in M11 at degree 11, pushed to 12
    infos = action_prime_order_class_reps(m11_12, 3)
    direct = prime_order_class_reps(m11_12.group, 3)
    assert sorted(ci.class_size for ci in infos) == \
        sorted(ci.class_size for ci in direct)
    assert all(isinstance(ci, ClassInfo) for ci in infos)


def test_budget_exceeded_is_loud():
    tiny = Budgets(exhaustive=10, degree=10**5, chain_degree=2 * 10**4,
                   scan=10, sampled_misses=200, materialize=10**6)
    G = symmetric(5)
    with pytest.raises(BudgetExceeded):
        prime_order_class_reps(G, 2, budgets=tiny)


def test_semiregular_search():
    res = semiregular_search(natural_action(cyclic(4), "C4"))
    assert res.witness is not None
    assert res.prime == 2
    a4 = semiregular_search(natural_action(alternating(4), "A4"))
    assert a4.witness is not None  # (0 1)(2 3)
    assert a4.witness.num_fixed() == 0


def test_semiregular_none_on_m11_12(m11_12):
    res = semiregular_search(m11_12)
    assert res.witness is None
    assert res.exact
