from math import comb

import pytest
from hypothesis import assume, given, strategies as st

from polyvenn.core import letters_to_mask, popcount
from polyvenn.scd import (
    ChainDecomposition,
    format_chain,
    lex_compare,
    scd_aigner,
    scd_christmas_tree,
    validate_scd,
)


def chains(*specs):
    return tuple(tuple(letters_to_mask(s) for s in spec.split(",")) for spec in specs)


def test_lex_compare_examples():
    assert lex_compare(letters_to_mask("AB"), letters_to_mask("AC")) == -1
    assert lex_compare(letters_to_mask("AC"), letters_to_mask("AB")) == 1
    assert lex_compare(letters_to_mask("A"), letters_to_mask("AB")) == -1
    assert lex_compare(letters_to_mask("B"), letters_to_mask("C")) == -1
    with pytest.raises(ValueError):
        lex_compare(3, 3)


masks = st.integers(0, (1 << 8) - 1)


@given(masks, masks)
def test_lex_compare_antisymmetric(x, y):
    assume(x != y)
    assert lex_compare(x, y) == -lex_compare(y, x)


same_rank_triples = st.integers(1, 7).flatmap(
    lambda k: st.lists(
        st.sets(st.integers(0, 7), min_size=k, max_size=k).map(lambda s: sum(1 << i for i in s)),
        min_size=3,
        max_size=3,
        unique=True,
    )
)


@given(same_rank_triples)
def test_lex_compare_transitive_within_rank(triple):
    x, y, z = triple
    if lex_compare(x, y) < 0 and lex_compare(y, z) < 0:
        assert lex_compare(x, z) < 0


def test_lex_compare_not_transitive_across_ranks():
    # the subset sentinel breaks transitivity once sizes differ; the greedy
    # decomposition only ever compares sets of one size
    d, ad, ae = (letters_to_mask(s) for s in ("D", "AD", "AE"))
    assert lex_compare(d, ad) < 0
    assert lex_compare(ad, ae) < 0
    assert lex_compare(ae, d) < 0


def test_christmas_small():
    assert scd_christmas_tree(1).chains == ((0, 1),)
    assert scd_christmas_tree(2).chains == chains("A", "{},B,AB")
    assert scd_christmas_tree(3).chains == chains("A,AC", "B,AB", "{},C,BC,ABC")
    assert scd_christmas_tree(4).lengths() == [5, 3, 3, 3, 1, 1]


def test_aigner_small():
    assert scd_aigner(2).chains == chains("{},A,AB", "B")
    assert scd_aigner(3).chains == chains("{},A,AB,ABC", "B,BC", "C,AC")
    dec = scd_aigner(4)
    assert len(dec) == 6
    singles = [c for c in dec.chains if len(c) == 1]
    assert singles == [(letters_to_mask("BD"),), (letters_to_mask("CD"),)]


def test_generators_reject_bad_n():
    for gen in (scd_aigner, scd_christmas_tree):
        with pytest.raises(ValueError):
            gen(0)


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("gen", [scd_aigner, scd_christmas_tree])
def test_generators_are_scds(gen, n):
    dec = gen(n)
    assert validate_scd(dec).ok
    assert len(dec) == comb(n, n // 2)
    for c in dec.chains:
        for a, b in zip(c, c[1:]):
            assert popcount(b) == popcount(a) + 1


@pytest.mark.parametrize("gen", [scd_aigner, scd_christmas_tree])
def test_generators_deterministic(gen):
    assert gen(7) == gen(7)


def test_validate_scd_flags():
    report = validate_scd(scd_aigner(6))
    assert report.ok and len(scd_aigner(6)) == 20

    dec = scd_aigner(3)
    broken = ChainDecomposition(3, (dec.chains[0][:-1],) + dec.chains[1:])
    r = validate_scd(broken)
    assert not r.partition_ok and r.count_ok and r.eq1_ok

    bad_eq2 = ChainDecomposition(3, chains("{},A"))
    r = validate_scd(bad_eq2)
    assert not r.eq2_ok and r.eq1_ok

    not_chain = ChainDecomposition(2, chains("A,B", "{}", "AB"))
    r = validate_scd(not_chain)
    assert not r.eq1_ok and not r.count_ok


def test_format_chain():
    assert format_chain(chains("{},A,AB")[0]) == "{},A,AB"
