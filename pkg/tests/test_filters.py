import random

import pytest
from hypothesis import given, settings, strategies as st

from starsemi import (
    PO_SEMIGROUP,
    filter_generated, filter_oracle, n_class_partition, thm26_set,
)
from starsemi.filters import ORACLE_MAX_ORDER, is_filter
from starsemi.sampling import random_model

from support import chain2, mk, one_point


def test_chain2_filters():
    S, _ = chain2()
    assert filter_generated(S, 0).members == {0, 1}  # upward closure forces e
    assert filter_generated(S, 1).members == {1}


def test_oracle_on_toys():
    S, _ = chain2()
    assert filter_oracle(S, 0) == {0, 1}
    P, _ = one_point()
    assert filter_oracle(P, 0) == {0}


def test_oracle_size_guard():
    mult = tuple(tuple(0 for _ in range(13)) for _ in range(13))
    S, _ = mk(mult)
    with pytest.raises(ValueError):
        filter_oracle(S, 0)
    assert ORACLE_MAX_ORDER == 12


def test_filter_closure_rules_and_minimality(catalog_upto_3):
    for S in catalog_upto_3:
        for x in S.elements():
            F = filter_generated(S, x).members
            assert x in F
            assert is_filter(S, F)                      # the three closure rules
            assert F == filter_oracle(S, x)              # least among all filters


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 10 ** 9))
def test_saturation_matches_oracle_on_random_structures(seed):
    S = random_model(random.Random(seed), 9, (PO_SEMIGROUP,))
    for x in S.elements():
        assert filter_generated(S, x).members == filter_oracle(S, x)


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10 ** 9))
def test_saturation_round_bound(seed):
    S = random_model(random.Random(seed), 10, (PO_SEMIGROUP,))
    for x in S.elements():
        assert filter_generated(S, x).rounds <= max(S.n, 1)


def test_thm26_sets_on_chain2():
    S, _ = chain2()
    assert thm26_set(S, 1) == {1}   # e*0*e = 0 stays below e
    assert thm26_set(S, 0) == {0, 1}


def test_thm26_set_requires_involution_and_top():
    S, _ = mk(((0, 0), (0, 1)), pairs=((0, 1),))  # no star
    with pytest.raises(ValueError):
        thm26_set(S, 0)


def test_partition_chain2():
    S, _ = chain2()
    part = n_class_partition(S)
    assert part.blocks == (frozenset({0}), frozenset({1}))
    assert part.block_greatest == (0, 1)
    assert part.block_of(1) == 1


def test_partition_one_point():
    S, _ = one_point()
    part = n_class_partition(S)
    assert part.blocks == (frozenset({0}),)
    assert part.block_greatest == (0,)


def test_partition_blocks_share_filters(catalog_upto_3):
    for S in catalog_upto_3:
        part = n_class_partition(S)
        filters = [filter_generated(S, x).members for x in S.elements()]
        for blk in part.blocks:
            rep = min(blk)
            assert all(filters[y] == filters[rep] for y in blk)
        # block greatest, when present, really bounds its block
        for blk, g in zip(part.blocks, part.block_greatest):
            if g is not None:
                assert all(S.le(y, g) for y in blk)


def test_block_without_greatest_is_reported():
    # two incomparable maximal elements generating the same filter:
    # left-zero multiplication makes every filter the whole structure
    S, report = mk(((0, 0), (1, 1)))  # left zero, equality order
    part = n_class_partition(S)
    assert part.blocks == (frozenset({0, 1}),)
    assert part.block_greatest == (None,)


def test_thm26_equivalence_on_star_intra_catalog(catalog_upto_3):
    from starsemi import regularity_profile
    for S in catalog_upto_3:
        profile = regularity_profile(S)
        matches = all(filter_generated(S, x).members == thm26_set(S, x)
                      for x in S.elements())
        assert matches == bool(profile.star_intra_regular)
