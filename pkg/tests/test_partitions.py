from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qident.errors import MissingParam, NotSelfConjugate, UnknownDomain
from qident.partitions import (
    DistinctPartition,
    Partition,
    PartitionPair,
    SignedDistinctSet,
    conjugate,
    distinct_odd_to_selfconj,
    domain_validator,
    durfee_size,
    enumerate_domain,
    enumerate_partitions,
    partitions_of,
    selfconj_to_distinct_odd,
    staircase,
    weight_gf,
)
from qident.series import QSeries, poch_finite, qbinom


# ---------------------------------------------------------------------------
# basic types
# ---------------------------------------------------------------------------


def test_partition_validation():
    assert Partition((3, 2, 2)).weight == 7
    assert Partition(()).weight == 0
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((1, 0))
    with pytest.raises(ValueError):
        DistinctPartition((3, 3))


def test_signed_set_validation():
    s = SignedDistinctSet((-2, 0, 1), n=3)
    assert s.weight == -1
    with pytest.raises(ValueError):
        SignedDistinctSet((1, 1), n=2)
    with pytest.raises(ValueError):
        SignedDistinctSet((-4,), n=3)
    with pytest.raises(ValueError):
        SignedDistinctSet((2, 1), n=3)


def test_pair_weight_additivity():
    p = PartitionPair(Partition((3, 1)), Partition((2,)))
    assert p.weight == p.first.weight + p.second.weight == 6


# ---------------------------------------------------------------------------
# conjugate / Durfee / hooks
# ---------------------------------------------------------------------------


def test_conjugate_frozen():
    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert conjugate(Partition(())) == Partition(())


def test_conjugate_involution_sweep():
    for n in range(21):
        for parts in partitions_of(n):
            p = Partition(parts)
            assert conjugate(conjugate(p)) == p


def test_durfee_frozen():
    assert durfee_size(Partition((3, 2, 1))) == 2
    assert durfee_size(Partition(())) == 0
    assert durfee_size(Partition((1, 1, 1, 1))) == 1


def test_hooks_frozen():
    assert selfconj_to_distinct_odd(Partition((3, 2, 1))) == DistinctPartition((5, 1))
    assert selfconj_to_distinct_odd(Partition(())) == DistinctPartition(())
    assert selfconj_to_distinct_odd(Partition((1,))) == DistinctPartition((1,))


def test_hooks_rejects_non_selfconjugate():
    with pytest.raises(NotSelfConjugate):
        selfconj_to_distinct_odd(Partition((3, 1)))


def test_hooks_roundtrip_sweep():
    seen = 0
    for n in range(26):
        for parts in partitions_of(n):
            p = Partition(parts)
            if not p.is_self_conjugate():
                continue
            seen += 1
            dp = selfconj_to_distinct_odd(p)
            assert all(a % 2 == 1 for a in dp.parts)
            assert len(dp) == p.durfee_size()
            assert dp.weight == p.weight
            assert distinct_odd_to_selfconj(dp) == p
    assert seen > 30


def test_hooks_inverse_covers_all_distinct_odd():
    # every distinct odd partition folds to a self-conjugate partition
    for n in range(1, 22):
        for parts in partitions_of(n):
            if any(v % 2 == 0 for v in parts) or len(set(parts)) != len(parts):
                continue
            dp = DistinctPartition(parts)
            sc = distinct_odd_to_selfconj(dp)
            assert sc.is_self_conjugate()
            assert selfconj_to_distinct_odd(sc) == dp


# ---------------------------------------------------------------------------
# box enumeration
# ---------------------------------------------------------------------------


def test_box_frozen_small():
    assert [p.parts for p in enumerate_partitions(1, 1)] == [(), (1,)]
    two_one = list(enumerate_partitions(2, 1))
    assert sorted(p.parts for p in two_one) == [(), (1,), (1, 1)]
    assert weight_gf(p.weight for p in two_one) == qbinom(3, 1)
    two_two = list(enumerate_partitions(2, 2))
    assert len(two_two) == 6
    assert weight_gf(p.weight for p in two_two) == qbinom(4, 2)


@pytest.mark.parametrize("a,b", [(0, 0), (0, 3), (3, 0), (1, 4), (3, 3), (4, 2), (5, 5)])
def test_box_count_and_gf(a, b):
    elems = list(enumerate_partitions(a, b))
    assert len(elems) == comb(a + b, b)
    assert len(set(e.parts for e in elems)) == len(elems)
    assert weight_gf(e.weight for e in elems) == qbinom(a + b, b)
    for e in elems:
        assert len(e) <= a and (not e or e.parts[0] <= b)


# ---------------------------------------------------------------------------
# named domains
# ---------------------------------------------------------------------------


def test_p_domain_sizes():
    assert len(list(enumerate_domain("P", n=1))) == 8
    assert len(list(enumerate_domain("P_gt", n=1))) == 4
    for n in range(5):
        assert len(list(enumerate_domain("P", n=n))) == 2 ** (2 * n + 1)


def test_p_gt_counts_are_powers_of_four():
    for n in range(6):
        assert len(list(enumerate_domain("P_gt", n=n))) == 4**n


def test_b1_frozen_n1():
    elems = list(enumerate_domain("B1", n=1))
    assert len(elems) == 4
    assert weight_gf(e.weight for e in elems).coeffs == {0: 1, 1: 2, 2: 1}


def test_b2_gf_matches_staircase_times_qbinom():
    for n in range(5):
        gf = QSeries.zero()
        for t, nu in enumerate_domain("B2", n=n):
            gf = gf + QSeries.term(1, t * (t + 1) // 2 + nu.weight)
        closed = QSeries.zero()
        for t in range(n + 1):
            closed = closed + qbinom(2 * n + 1, n + 1 + t).shift(t * (t + 1) // 2)
        assert gf == closed


def test_signed_gf_full_family():
    # sum over all subsets of [-n, n] of q^weight, Laurent-exact
    for n in range(9):
        gf = weight_gf(s.weight for s in enumerate_domain("P", n=n))
        closed = (
            poch_finite(QSeries.term(-1, 1), 1, n)
            .power(2)
            .scale(2)
            .shift(-n * (n + 1) // 2)
        )
        assert gf == closed


def test_signed_gf_half_family():
    for n in range(9):
        gf_gt = weight_gf(s.weight for s in enumerate_domain("P_gt", n=n))
        closed = (
            poch_finite(QSeries.term(-1, 1), 1, n)
            .power(2)
            .shift(-n * (n + 1) // 2)
        )
        assert gf_gt == closed
        full = weight_gf(s.weight for s in enumerate_domain("P", n=n))
        assert gf_gt.scale(2) == full


def test_validators_accept_enumerated_elements():
    cases = [
        ("B1", dict(n=3), None),
        ("B2", dict(n=3), None),
        ("B3", dict(n=2), None),
        ("P", dict(n=2), None),
        ("P_gt", dict(n=2), None),
        ("DS", dict(k=2), 15),
        ("OE", dict(k=2), 15),
        ("O", dict(n=2, k=2), 20),
        ("DO", dict(n=2, k=2), 20),
    ]
    for name, params, cap in cases:
        val = domain_validator(name)
        seen = 0
        for elt in enumerate_domain(name, weight_cap=cap, **params):
            seen += 1
            assert val(elt, **params), (name, elt)
        assert seen > 0, name


def test_validators_reject_mutants():
    assert not domain_validator("B1")(
        PartitionPair(DistinctPartition((4,)), Partition(())), 3
    )  # largest part exceeds n
    assert not domain_validator("B1")(
        PartitionPair(DistinctPartition((2,)), Partition((2,))), 3
    )  # second component not below smallest part of first
    assert not domain_validator("B2")((3, Partition((1,))), 2)  # t > n
    assert not domain_validator("B2")((1, Partition((3,))), 2)  # part > n - t
    assert not domain_validator("P_gt")(SignedDistinctSet((1,), n=2), 2)
    assert not domain_validator("DS")(Partition((4, 1, 1)), 1)  # even largest part
    assert not domain_validator("DS")(Partition((3, 1)), 1)  # odd multiplicity below
    assert not domain_validator("OE")(
        PartitionPair(Partition((3,)), Partition((1,))), 1
    )  # odd multiplicity
    assert not domain_validator("O")(
        PartitionPair(Partition((2, 2)), Partition((1,))), 2, 1
    )  # wrong rectangle
    assert not domain_validator("DO")(
        PartitionPair(Partition((3,)), DistinctPartition((2,))), 1, 2
    )  # even part in second component


def test_ds_membership_frozen():
    val = domain_validator("DS")
    assert val(Partition((3,)), 1)
    assert val(Partition((3, 1, 1)), 1)
    assert val(Partition((3, 3, 3)), 1)
    assert not val(Partition((3, 3)), 1)  # Durfee side 2 is even
    assert val(Partition((1,)), 0)
    assert not val(Partition(()), 0)


def test_ds_oe_counts_by_weight():
    # hand-enumerated counts at odd weights 1,3,5,7,9 (all k pooled)
    expected = {1: 1, 3: 2, 5: 3, 7: 4, 9: 6}
    ds_counts = {}
    oe_counts = {}
    for k in range(5):
        for lam in enumerate_domain("DS", k=k, weight_cap=9):
            ds_counts[lam.weight] = ds_counts.get(lam.weight, 0) + 1
        for pair in enumerate_domain("OE", k=k, weight_cap=9):
            oe_counts[pair.weight] = oe_counts.get(pair.weight, 0) + 1
    assert ds_counts == expected
    assert oe_counts == expected


def test_o_do_counts_match():
    for n in range(4):
        for k in range(4):
            o = list(enumerate_domain("O", n=n, k=k, weight_cap=60))
            do = list(enumerate_domain("DO", n=n, k=k, weight_cap=60))
            assert len(o) == len(do)
            assert sorted(e.weight for e in o) == sorted(e.weight for e in do)


def test_unknown_domain_and_missing_param():
    with pytest.raises(UnknownDomain):
        enumerate_domain("nope", n=1)
    with pytest.raises(MissingParam):
        list(enumerate_domain("B1"))
    with pytest.raises(MissingParam):
        list(enumerate_domain("DS", k=1))  # cap required
    with pytest.raises(UnknownDomain):
        domain_validator("nope")


def test_staircase():
    assert staircase(0) == DistinctPartition(())
    assert staircase(3) == DistinctPartition((3, 2, 1))


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

partition_st = st.integers(min_value=0, max_value=18).flatmap(
    lambda n: st.sampled_from([Partition(t) for t in partitions_of(n)])
)


@given(p=partition_st)
@settings(max_examples=80)
def test_conjugate_preserves_weight_and_durfee(p):
    c = conjugate(p)
    assert c.weight == p.weight
    assert c.durfee_size() == p.durfee_size()
    assert len(c) == (p.parts[0] if p else 0)
