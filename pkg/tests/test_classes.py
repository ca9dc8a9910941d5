"""Class enumeration, labels, normal-set algebra."""

import pytest

from bfl.elements import Permutation, element_order, inverse, identity_like
from bfl.groups import Group
from bfl.catalog import construct
from bfl.classes import (
    ConjClass, NormalSet, SelectorError, enumerate_classes, class_of,
    involution_classes_sym, is_p_element, inverse_set, product_set,
    commutator_pairs_set, largest_element_order, select_class,
)


def test_alt5_class_sizes():
    cls = enumerate_classes(construct("alt:5"))
    assert [c.size for c in cls] == [1, 15, 20, 12, 12]
    assert [c.label for c in cls] == ["1a", "2a", "3a", "5a", "5b"]


def test_cyclic_all_singletons():
    cls = enumerate_classes(construct("cyclic:5"))
    assert len(cls) == 5
    assert all(c.size == 1 for c in cls)


def test_sym6_class_count_is_partition_count():
    # partitions of 6
    def partitions(n, maxpart):
        if n == 0:
            return 1
        return sum(partitions(n - k, k) for k in range(min(n, maxpart), 0, -1))
    cls = enumerate_classes(construct("sym:6"))
    assert len(cls) == partitions(6, 6) == 11


def test_sizes_divide_and_sum():
    for bp in ("sym:4", "alt:4", "dihedral:8", "q8", "wreath:3"):
        G = construct(bp)
        cls = enumerate_classes(G)
        n = G.order()
        assert sum(c.size for c in cls) == n
        assert all(n % c.size == 0 for c in cls)


def test_classes_closed_under_generators():
    G = construct("alt:5")
    for c in enumerate_classes(G):
        for g in G.gens:
            assert {inverse(g) * x * g for x in c.elements} == c.elements


def test_class_order_constant():
    for c in enumerate_classes(construct("sym:5")):
        assert all(element_order(x) == c.order for x in c.elements)


def test_labels_deterministic_across_rebuilds():
    a = [c.label for c in enumerate_classes(construct("sym:6"))]
    b = [c.label for c in enumerate_classes(construct("sym:6"))]
    assert a == b


def test_sym6_involution_labels():
    """Two classes of size 15 (transpositions, fpf): rep order breaks the tie."""
    cls = enumerate_classes(construct("sym:6"))
    by_label = {c.label: c for c in cls}
    assert by_label["2a"].size == 15
    assert by_label["2a"].representative.cycle_type() == (1, 1, 1, 1, 2)
    assert by_label["2b"].size == 15
    assert by_label["2b"].representative.cycle_type() == (2, 2, 2)
    assert by_label["2c"].size == 45


def test_involution_classes_sym_matches_enumeration():
    for n in (4, 5, 6, 7):
        G = construct("sym:%d" % n)
        fast = involution_classes_sym(G, n)
        full = {c.label: c for c in enumerate_classes(G) if c.order == 2}
        assert {c.label for c in fast} == set(full)
        for c in fast:
            assert c.size == full[c.label].size
            assert c.representative in full[c.label].elements


def test_involution_classes_sym10():
    G = construct("sym:10")
    fast = involution_classes_sym(G, 10)
    assert [c.size for c in fast] == [45, 630, 945, 3150, 4725]
    fpf = [c for c in fast if all(c.representative(i) != i for i in range(10))]
    assert len(fpf) == 1 and fpf[0].label == "2c"


def test_is_p_element():
    G = construct("sym:6")
    e = identity_like(G.gens[0])
    assert is_p_element(e, 7)
    assert is_p_element(Permutation.from_cycles(6, [(0, 1), (2, 3)]), 2)
    assert is_p_element(Permutation.from_cycles(6, [(0, 1, 2, 3)]), 2)
    assert not is_p_element(Permutation.from_cycles(6, [(0, 1, 2), (3, 4)]), 2)
    assert not is_p_element(Permutation.from_cycles(6, [(0, 1, 2)]), 2)


def test_inverse_set_three_cycles_alt4():
    G = construct("alt:4")
    cls = enumerate_classes(G)
    threes = [c for c in cls if c.order == 3]
    assert len(threes) == 2
    a, b = threes
    assert inverse_set(a).classes[0] is b
    assert inverse_set(b).classes[0] is a
    # double inverse comes back to the same labeled class
    assert inverse_set(inverse_set(a)).classes[0] is a


def test_inverse_set_involutions_self():
    G = construct("sym:4")
    c = select_class(enumerate_classes(G), "order:2,size:6")
    assert inverse_set(c).classes[0] is c


def test_product_set_with_identity():
    G = construct("alt:5")
    cls = enumerate_classes(G)
    c = select_class(cls, "5a")
    one = select_class(cls, "1a")
    prod = product_set(c, one)
    assert set(prod) == c.elements
    assert all(v == 1 for v in prod.values())
    assert sum(prod.values()) == c.size * 1


def test_commutator_pairs_inside_inverse_product_support():
    G = construct("sym:4")
    cls = enumerate_classes(G)
    c = select_class(cls, "order:4,size:6")
    d = select_class(cls, "order:2,size:6")
    comm = commutator_pairs_set(c, d)
    support = set(product_set(inverse_set(c), c))
    # [c, d] = c^-1 * c^d lands in C^-1 C
    assert comm <= {x for x in support}


def test_alt5_five_class_commutators():
    G = construct("alt:5")
    c = select_class(enumerate_classes(G), "5a")
    comm = commutator_pairs_set(c, c)
    assert comm == c.elements | {identity_like(c.representative)}


def test_largest_element_order():
    G = construct("sym:6")
    cls = enumerate_classes(G)
    one = select_class(cls, "1a")
    assert largest_element_order(one) == 1
    assert largest_element_order(NormalSet(cls)) == 6
    A = construct("alt:5")
    assert largest_element_order(select_class(enumerate_classes(A), "5a")) == 5


def test_normal_set_union():
    G = construct("sym:4")
    cls = enumerate_classes(G)
    S = NormalSet([c for c in cls if c.order == 2])
    assert S.size == 6 + 3
    assert len(S.elements) == 9
    assert S.largest_element_order() == 2


def test_class_of_uses_cache():
    G = construct("alt:5")
    cls = enumerate_classes(G)
    x = Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])
    c = class_of(G, x)
    assert c in cls and c.label in ("5a", "5b")


def test_class_of_without_cache():
    G = construct("alt:4")
    x = Permutation.from_cycles(4, [(0, 1, 2)])
    c = class_of(G, x)
    assert c.size == 4 and c.order == 3


def test_selectors():
    G = construct("sym:6")
    cls = enumerate_classes(G)
    assert select_class(cls, "2c").size == 45
    assert select_class(cls, "order:5,size:144").order == 5
    assert select_class(cls, "size:45").size == 45
    fpf = select_class(cls, "fpf2")
    assert fpf.label == "2b"
    with pytest.raises(SelectorError):
        select_class(cls, "order:2")  # three involution classes
    with pytest.raises(SelectorError):
        select_class(cls, "order:6,size:120")  # six-cycles vs (abc)(de)
    with pytest.raises(SelectorError):
        select_class(cls, "9z")
    with pytest.raises(SelectorError):
        select_class(cls, "order:nope")
    with pytest.raises(SelectorError):
        select_class(enumerate_classes(construct("q8")), "fpf2")
