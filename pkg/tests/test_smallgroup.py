"""Indexed group arithmetic: tables, subgroup lattices, quotients."""

import pytest
from hypothesis import given, strategies as st

from bfl.catalog import construct
from bfl.elements import Permutation
from bfl.smallgroup import (SmallGroup, is_p_group, subgroups,
                            normal_subgroups, quotient)


def small(name):
    return SmallGroup.from_group(construct(name), name=name)


@pytest.fixture(scope="module")
def s4():
    return small("sym:4")


def test_identity_is_index_zero(s4):
    assert s4.elements[0] == Permutation.identity(4)
    assert s4.order == 24
    assert s4.table is not None


def test_mul_matches_underlying_elements(s4):
    for i in (0, 1, 5, 17, 23):
        for j in (0, 2, 7, 23):
            prod = s4.elements[i] * s4.elements[j]
            assert s4.elements[s4.mul(i, j)] == prod


@given(st.integers(0, 23), st.integers(0, 23), st.integers(0, 23))
def test_associativity_and_inverse(i, j, k):
    G = test_associativity_and_inverse.group
    assert G.mul(G.mul(i, j), k) == G.mul(i, G.mul(j, k))
    assert G.mul(i, G.inv(i)) == 0


test_associativity_and_inverse.group = small("sym:4")


def test_element_orders(s4):
    hist = s4.order_histogram()
    assert hist == {1: 1, 2: 9, 3: 8, 4: 6}
    assert s4.exponent() == 12


def test_class_partition_sizes(s4):
    sizes = sorted(len(c) for c in s4.class_partition())
    assert sizes == [1, 3, 6, 6, 8]


def test_center_and_derived(s4):
    assert s4.center_indices() == frozenset([0])
    assert len(s4.derived_indices()) == 12  # the even permutations
    d8 = small("dihedral:8")
    assert len(d8.center_indices()) == 2
    assert len(d8.derived_indices()) == 2


def test_subgroup_counts():
    assert len(subgroups(small("dihedral:8"))) == 10
    assert len(subgroups(small("q8"))) == 6
    assert len(subgroups(small("cyclic:4"))) == 3


def test_normal_subgroups_agree_with_filtered_lattice():
    for name in ("dihedral:8", "q8", "alt:4", "sym:3", "cyclic:9"):
        S = small(name)
        noted = set(normal_subgroups(S))
        filtered = set()
        for H in subgroups(S):
            if all(S.conj(x, g) in H for x in H for g in S.gens):
                filtered.add(H)
        assert noted == filtered, name


def test_normal_subgroups_q8_all_normal():
    q8 = small("q8")
    assert len(normal_subgroups(q8)) == 6


def test_quotient_d8_by_center_is_klein():
    d8 = small("dihedral:8")
    Q = quotient(d8, d8.center_indices())
    assert Q.order == 4
    assert Q.order_histogram() == {1: 1, 2: 3}


def test_quotient_rejects_bad_inputs():
    s3 = small("sym:3")
    twist = next(i for i in range(6) if s3.element_order(i) == 2)
    with pytest.raises(ValueError):
        quotient(s3, s3.closure([twist]))  # not normal
    with pytest.raises(ValueError):
        quotient(s3, frozenset([1]))  # no identity


def test_quotient_of_a4_by_klein():
    a4 = small("alt:4")
    klein = next(N for N in normal_subgroups(a4) if len(N) == 4)
    Q = quotient(a4, klein)
    assert Q.order == 3
    assert Q.element_order(1) == 3


def test_induced_subgroup(s4):
    three = next(i for i in range(24) if s4.element_order(i) == 3)
    H = s4.induced(s4.closure([three]))
    assert H.order == 3
    assert H.element_order(1) == 3
    assert H._parent_indices[0] == 0
    # the induced elements are the parent's, in parent order
    assert all(H.elements[k] == s4.elements[q]
               for k, q in enumerate(H._parent_indices))


def test_is_p_group_both_input_kinds():
    assert is_p_group(small("dihedral:8"), 2)
    assert not is_p_group(small("dihedral:8"), 3)
    assert is_p_group(construct("cyclic:9"), 3)
    assert not is_p_group(construct("sym:3"), 3)


def test_large_group_has_no_table_but_works():
    Z = SmallGroup.from_group(construct("cyclic:300"))
    assert Z.order == 300
    assert Z.table is None
    assert Z.element_order(1) == 300
    i2 = Z.mul(1, 1)
    assert Z.elements[i2] == Z.elements[1] * Z.elements[1]
    assert Z.mul(i2, Z.inv(i2)) == 0


def test_closure_and_normal_closure(s4):
    # a transposition's closure is order 2; its normal closure is everything
    t = next(i for i in range(24) if s4.element_order(i) == 2
             and len([p for p in range(4) if s4.elements[i].images[p] != p]) == 2)
    assert len(s4.closure([t])) == 2
    assert len(s4.normal_closure([t])) == 24


def test_subgroups_overflow_cap():
    from bfl.elements import Overflow
    with pytest.raises(Overflow):
        subgroups(small("sym:4"), cap=10)
