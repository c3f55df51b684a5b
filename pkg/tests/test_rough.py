import random
from itertools import chain, combinations

import pytest
from hypothesis import given, settings, strategies as st

from heartrules.errors import DataError
from heartrules.rough import (DiscernibilityMatrix, Reduct, boundary_region,
                              decision_classes, discernibility_matrix,
                              lower_approximation, object_relative_reducts,
                              partition, positive_region, reduct_greedy,
                              reducts_exhaustive, upper_approximation)

from conftest import make_t0, random_discrete_table


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


# --- definition-by-enumeration oracles -------------------------------------

def oracle_classes(table, attrs):
    idx = [table.col_index(a) for a in attrs]
    out = {}
    for pos, rid in enumerate(table.row_ids):
        out.setdefault(tuple(table.rows[pos][i] for i in idx), set()).add(rid)
    return {rid: frozenset(block)
            for block in out.values() for rid in block}


def oracle_lower(table, attrs, X):
    cls = oracle_classes(table, attrs)
    return frozenset(x for x in table.row_ids if cls[x] <= set(X))


def oracle_upper(table, attrs, X):
    cls = oracle_classes(table, attrs)
    return frozenset(x for x in table.row_ids if cls[x] & set(X))


def oracle_pos(table, attrs):
    dec = {rid: table.decision_value(rid) for rid in table.row_ids}
    cls = oracle_classes(table, attrs)
    return frozenset(x for x in table.row_ids
                     if len({dec[y] for y in cls[x]}) == 1)


def brute_force_reducts(table):
    """All minimal condition subsets preserving the positive region."""
    conds = [a.name for a in table.conditions]
    target = oracle_pos(table, conds)
    preserving = [frozenset(s) for s in subsets(conds)
                  if oracle_pos(table, s) == target]
    return {s for s in preserving if not any(t < s for t in preserving)}


# --- worked example ---------------------------------------------------------

def test_partition_t0(t0):
    assert partition(t0, ["a"]) == [frozenset({0, 1}), frozenset({2, 3})]
    assert partition(t0, ["a", "b"]) == [frozenset({0}), frozenset({1}),
                                         frozenset({2}), frozenset({3})]
    assert partition(t0, []) == [frozenset({0, 1, 2, 3})]


def test_approximations_t0(t0):
    X = {1, 2, 3}
    assert lower_approximation(t0, ["a"], X) == frozenset({2, 3})
    assert upper_approximation(t0, ["a"], X) == frozenset({0, 1, 2, 3})
    assert boundary_region(t0, ["a"], X) == frozenset({0, 1})
    assert lower_approximation(t0, ["a"], set(t0.row_ids)) == frozenset(t0.row_ids)
    assert upper_approximation(t0, ["a"], set()) == frozenset()
    assert boundary_region(t0, ["a"], set(t0.row_ids)) == frozenset()


def test_definable_set_has_empty_boundary(t0):
    assert boundary_region(t0, ["a"], {0, 1}) == frozenset()


def test_approximations_reject_foreign_ids(t0):
    with pytest.raises(DataError):
        lower_approximation(t0, ["a"], {99})


def test_positive_region_t0(t0):
    assert positive_region(t0, ["a"]) == frozenset({2, 3})
    assert positive_region(t0, ["a", "b"]) == frozenset({0, 1, 2, 3})
    assert positive_region(t0, []) == frozenset()


def test_decision_matrix_t0(t0):
    m = discernibility_matrix(t0, "decision")
    entries = {pair: attrs for pair, attrs in m.entries}
    assert entries == {(0, 1): frozenset({"b"}), (0, 2): frozenset({"a"}),
                       (0, 3): frozenset({"a", "b"})}


def test_matrix_single_object():
    t = make_t0().subset({0})
    assert discernibility_matrix(t, "decision").entries == ()


def test_object_matrix_t0(t0):
    m = discernibility_matrix(t0, "object", origin=2)
    assert dict(m.entries) == {(0, 2): frozenset({"a"})}


def test_reducts_exhaustive_t0(t0):
    m = discernibility_matrix(t0, "decision")
    assert {r.attrs for r in reducts_exhaustive(m)} == {frozenset({"a", "b"})}


def test_reducts_empty_matrix_gives_empty_reduct():
    m = DiscernibilityMatrix(mode="decision", attributes=("a", "b"),
                             entries=(), universe=(0,))
    assert {r.attrs for r in reducts_exhaustive(m)} == {frozenset()}


def test_reducts_exhaustive_bound():
    attrs = tuple(f"c{i}" for i in range(17))
    m = DiscernibilityMatrix(mode="decision", attributes=attrs, entries=(),
                             universe=(0,))
    with pytest.raises(ValueError, match="greedy"):
        reducts_exhaustive(m)


def test_object_relative_reducts_t0(t0):
    assert {r.attrs for r in object_relative_reducts(t0, 2)} == {frozenset({"a"})}
    assert {r.attrs for r in object_relative_reducts(t0, 3)} == {
        frozenset({"a"}), frozenset({"b"})}


def test_object_relative_reducts_unopposed_object():
    t = make_t0().subset({1, 2, 3})  # all decisions equal
    assert {r.attrs for r in object_relative_reducts(t, 1)} == {frozenset()}


def test_object_relative_rejects_unknown_id(t0):
    with pytest.raises(DataError):
        object_relative_reducts(t0, 17)


def test_greedy_t0(t0):
    m = discernibility_matrix(t0, "decision")
    assert reduct_greedy(m).attrs == frozenset({"a", "b"})


def test_greedy_empty_matrix():
    m = DiscernibilityMatrix(mode="decision", attributes=("a",), entries=(),
                             universe=(0,))
    assert reduct_greedy(m).attrs == frozenset()


def test_greedy_prefers_common_attribute():
    m = DiscernibilityMatrix(
        mode="decision", attributes=("a", "b"),
        entries=(((0, 1), frozenset({"a"})), ((0, 2), frozenset({"a", "b"}))),
        universe=(0, 1, 2))
    assert reduct_greedy(m).attrs == frozenset({"a"})


# --- oracle equivalence on random tables ------------------------------------

def test_reducts_match_brute_force_pos_preservation():
    rng = random.Random(11)
    checked = 0
    for _ in range(60):
        table = random_discrete_table(rng)
        m = discernibility_matrix(table, "decision")
        got = {r.attrs for r in reducts_exhaustive(m)}
        expected = brute_force_reducts(table)
        assert got == expected, f"table rows={table.rows}"
        checked += 1
    assert checked == 60


def test_approximations_match_enumeration():
    rng = random.Random(5)
    for _ in range(50):
        table = random_discrete_table(rng)
        conds = [a.name for a in table.conditions]
        attrs = rng.sample(conds, rng.randint(1, len(conds)))
        X = {rid for rid in table.row_ids if rng.random() < 0.5}
        assert lower_approximation(table, attrs, X) == oracle_lower(table, attrs, X)
        assert upper_approximation(table, attrs, X) == oracle_upper(table, attrs, X)
        assert boundary_region(table, attrs, X) == \
            oracle_upper(table, attrs, X) - oracle_lower(table, attrs, X)
        assert positive_region(table, attrs) == oracle_pos(table, attrs)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 100_000))
def test_lower_subset_x_subset_upper(seed):
    rng = random.Random(seed)
    table = random_discrete_table(rng)
    conds = [a.name for a in table.conditions]
    attrs = rng.sample(conds, rng.randint(0, len(conds)))
    X = frozenset(rid for rid in table.row_ids if rng.random() < 0.5)
    lo = lower_approximation(table, attrs, X)
    hi = upper_approximation(table, attrs, X)
    assert lo <= X <= hi


def test_lower_monotone_in_attrs():
    rng = random.Random(99)
    for _ in range(40):
        table = random_discrete_table(rng)
        conds = [a.name for a in table.conditions]
        small = rng.sample(conds, rng.randint(0, len(conds)))
        big = small + [c for c in conds if c not in small]
        X = {rid for rid in table.row_ids if rng.random() < 0.5}
        assert lower_approximation(table, small, X) <= \
            lower_approximation(table, big, X)


def test_every_reduct_hits_and_is_minimal():
    rng = random.Random(17)
    for _ in range(40):
        table = random_discrete_table(rng)
        m = discernibility_matrix(table, "decision")
        entries = m.nonempty_entries
        for red in reducts_exhaustive(m):
            assert all(entry & red.attrs for entry in entries)
            for a in red.attrs:
                smaller = red.attrs - {a}
                assert not all(entry & smaller for entry in entries)
        greedy = reduct_greedy(m)
        assert all(entry & greedy.attrs for entry in entries)
        for a in greedy.attrs:
            smaller = greedy.attrs - {a}
            assert not all(entry & smaller for entry in entries)
