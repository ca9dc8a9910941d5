"""Character tables: validation, structure constants, class-level pair test."""

import json
import os

import pytest

from bfl.catalog import construct
from bfl.charcompute import SHIPPED_TABLES, build_table, table_json
from bfl.chartab import (CharacterTable, TableError, parse_table, load_table,
                         class_mult_count, product_support, inverse_class,
                         bf_pair_table)
from bfl.classes import enumerate_classes, serial_key

TABLE_DIR = os.path.join(os.path.dirname(__file__), os.pardir,
                         "src", "bfl", "tables")

KNOWN_DEGREES = {
    "a5": (1, 3, 3, 4, 5),
    "s5": (1, 1, 4, 4, 5, 5, 6),
    "a6": (1, 5, 5, 8, 8, 9, 10),
    "s6": (1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16),
    "pgl2_9": (1, 1, 8, 8, 8, 8, 9, 9, 10, 10, 10),
    "m10": (1, 1, 9, 9, 10, 10, 10, 16),
    "l2_7": (1, 3, 3, 6, 7, 8),
    "l2_8": (1, 7, 7, 7, 7, 8, 9, 9, 9),
    "l2_11": (1, 5, 5, 10, 10, 11, 12, 12),
}

TRIVIAL = {"name": "triv", "order": 1,
           "classes": [{"size": 1, "element_order": 1, "powermap": {}}],
           "irreducibles": [[1]]}


def shipped(name):
    return parse_table(os.path.join(TABLE_DIR, name + ".json"))


# -- parsing and validation -------------------------------------------------

def test_shipped_a5_table():
    T = shipped("a5")
    assert T.n_classes == 5
    assert T.degrees == (1, 3, 3, 4, 5)
    assert sum(d * d for d in T.degrees) == 60


@pytest.mark.parametrize("name", [n for n, _ in SHIPPED_TABLES])
def test_all_shipped_tables_validate(name):
    T = shipped(name)
    assert T.degrees == KNOWN_DEGREES[name]
    assert sum(T.size(k) for k in range(T.n_classes)) == T.order


def test_trivial_table():
    T = CharacterTable.from_json(TRIVIAL)
    assert T.n_classes == 1 and T.degrees == (1,)


def test_corrupted_value_is_rejected():
    obj = json.loads(json.dumps(shipped("a5").to_json()))
    obj["irreducibles"][2][1] = 9
    with pytest.raises(TableError, match="orthogonality"):
        CharacterTable.from_json(obj)


def test_wrong_shape_rejected():
    obj = dict(TRIVIAL)
    obj["irreducibles"] = [[1], [1]]
    with pytest.raises(TableError, match="size mismatch"):
        CharacterTable.from_json(obj)


def test_degree_sum_enforced():
    obj = json.loads(json.dumps(shipped("a5").to_json()))
    obj["irreducibles"][1][0] = 2
    with pytest.raises(TableError):
        CharacterTable.from_json(obj)


def test_parse_errors():
    with pytest.raises(TableError, match="cannot read"):
        parse_table("/nonexistent/nowhere.json")


def test_load_table_by_name_and_env(tmp_path, monkeypatch):
    assert load_table("a5").name == "a5"
    with pytest.raises(TableError, match="no table named"):
        load_table("zz9")
    alt = dict(TRIVIAL, name="a5")
    (tmp_path / "a5.json").write_text(json.dumps(alt))
    monkeypatch.setenv("BFL_TABLE_DIR", str(tmp_path))
    assert load_table("a5").order == 1  # env dir shadows the packaged file


# -- structure constants ----------------------------------------------------

def brute_count(G, cls, i, j, e):
    """#{(c,d) in C_i x C_j : c*d = e} by direct enumeration of c."""
    n = 0
    for c in cls[i].elements:
        if ~c * e in cls[j].elements:
            n += 1
    return n


@pytest.mark.parametrize("bp", ["sym:3", "sym:4", "dihedral:4", "q8"])
def test_counts_match_brute_force_everywhere(bp):
    G = construct(bp)
    cls = enumerate_classes(G)
    T = build_table(G, bp, check=False)
    for i in range(T.n_classes):
        for j in range(T.n_classes):
            for k in range(T.n_classes):
                want = brute_count(G, cls, i, j, cls[k].representative)
                assert class_mult_count(T, i, j, k) == want


def test_s4_transposition_pair_count():
    G = construct("sym:4")
    cls = enumerate_classes(G)
    T = build_table(G, "s4", check=False)
    i = next(k for k, C in enumerate(cls) if C.order == 2 and C.size == 6)
    e = next(k for k, C in enumerate(cls) if C.order == 3)
    want = brute_count(G, cls, i, i, cls[e].representative)
    assert want > 0
    assert class_mult_count(T, i, i, e) == want


def test_identity_column_normalization():
    T = shipped("a5")
    for i in range(T.n_classes):
        for e in range(T.n_classes):
            assert class_mult_count(T, i, 0, e) == (1 if e == i else 0)


def test_a5_five_class_self_product_positive():
    T = shipped("a5")
    five = [k for k in range(T.n_classes) if T.element_order(k) == 5]
    for k in five:
        assert class_mult_count(T, k, k, k) > 0


def test_row_sum_identity():
    """Sum over e of count * |C_e| recovers |C_i| * |C_j|."""
    for name in ("a5", "s6", "l2_8"):
        T = shipped(name)
        for i in range(T.n_classes):
            for j in range(T.n_classes):
                total = sum(class_mult_count(T, i, j, e) * T.size(e)
                            for e in range(T.n_classes))
                assert total == T.size(i) * T.size(j)


def test_support_of_identity_product():
    T = shipped("s5")
    for i in range(T.n_classes):
        assert set(product_support(T, i, 0)) == {i}


def test_inverse_class_is_involution():
    for name in ("a5", "s6", "l2_11", "pgl2_9"):
        T = shipped(name)
        for k in range(T.n_classes):
            kk = inverse_class(T, k)
            assert inverse_class(T, kk) == k
            assert T.size(kk) == T.size(k)
            assert T.element_order(kk) == T.element_order(k)


def test_support_symmetry_under_inverses():
    for name in ("a5", "m10", "l2_7"):
        T = shipped(name)
        for i in range(T.n_classes):
            for j in range(T.n_classes):
                lhs = product_support(T, i, j)
                rhs = product_support(T, inverse_class(T, j),
                                      inverse_class(T, i))
                assert {inverse_class(T, k) for k in lhs} == set(rhs)


# -- class-level pair test --------------------------------------------------

def test_s6_involution_pair_holds():
    T = shipped("s6")
    # classes sorted by (order, size, representative): transpositions come
    # before the fixed-point-free class, both size 15
    assert (T.element_order(1), T.size(1)) == (2, 15)
    assert (T.element_order(2), T.size(2)) == (2, 15)
    v = bf_pair_table(T, 2, 1, 2)
    assert v.ok
    assert all(T.element_order(k) in (1, 2, 4)
               for k in product_support(T, 2, 1))


def test_a5_five_class_fails():
    T = shipped("a5")
    five = [k for k in range(T.n_classes) if T.element_order(k) == 5]
    v = bf_pair_table(T, five[0], five[0], 5)
    assert v.status == "fails"
    assert v.witnesses  # offending classes listed


def test_identity_pair_iff_p_elements():
    T = shipped("s6")
    for k in range(T.n_classes):
        v = bf_pair_table(T, k, 0, 2)
        o = T.element_order(k)
        while o % 2 == 0:
            o //= 2
        assert v.ok == (o == 1)


def test_m10_has_exactly_six_holding_pairs():
    T = shipped("m10")
    two = [k for k in range(1, T.n_classes)
           if T.element_order(k) in (2, 4, 8)]
    profiles = []
    for a in range(len(two)):
        for b in range(a, len(two)):
            if bf_pair_table(T, two[a], two[b], 2).ok:
                profiles.append(tuple(sorted((T.element_order(two[a]),
                                              T.element_order(two[b])))))
    assert sorted(profiles) == [(2, 4), (2, 8), (2, 8),
                                (4, 4), (4, 8), (4, 8)]


# -- provenance -------------------------------------------------------------

@pytest.mark.parametrize("name,bp", [("a5", "alt:5"), ("l2_7", "psl2:7")])
def test_shipped_files_match_regeneration(name, bp):
    obj = table_json(construct(bp), name)
    text = json.dumps(obj, indent=1, sort_keys=True) + "\n"
    with open(os.path.join(TABLE_DIR, name + ".json"), encoding="utf-8") as fh:
        assert fh.read() == text


def test_generator_rejects_wrong_constants():
    T = build_table(construct("sym:3"), "s3")
    assert T.degrees == (1, 1, 2)
