import math
from itertools import combinations

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from groupcover import (
    ElementSet,
    abelian_invariants_finite,
    abelianisation,
    alternating_group,
    build_from_cayley_table,
    build_from_matrix_generators,
    build_from_permutations,
    conjugacy_classes,
    cyclic_group,
    derived_subgroup,
    direct_product,
    maximal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    quotient,
    subgroup_closure,
    validate_group,
    weight_bruteforce,
    weight_witness,
)
from groupcover.errors import (
    ClosureExceedsCap,
    InvalidPermutation,
    NotAbelian,
    NotAGroup,
    NotNormal,
    NotPrime,
    OrderCapExceeded,
    SingularGenerator,
    TrivialGroup,
)
from groupcover.fingroup import FiniteGroup, _check_associativity

XOR_TABLE = [[i ^ j for j in range(4)] for i in range(4)]


# ---------------------------------------------------------------------------
# constructions

def test_permutation_closure_c2():
    g = build_from_permutations(2, [(1, 0)])
    assert g.order == 2
    assert g.mul(1, 1) == 0


def test_permutation_closure_s5(s5):
    # closure count must equal 5! (independent count)
    assert s5.order == math.factorial(5)


def test_permutation_closure_empty_gens():
    g = build_from_permutations(3, [])
    assert g.order == 1


def test_permutation_invalid():
    with pytest.raises(InvalidPermutation):
        build_from_permutations(3, [(0, 0, 1)])
    with pytest.raises(InvalidPermutation):
        build_from_permutations(3, [(0, 1)])


def test_permutation_cap():
    with pytest.raises(ClosureExceedsCap):
        build_from_permutations(5, [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], cap=100)


def test_cayley_trivial():
    g = build_from_cayley_table([[0]])
    assert g.order == 1


def test_cayley_klein():
    g = build_from_cayley_table(XOR_TABLE, name="V4")
    assert g.order == 4
    assert all(g.mul(x, x) == 0 for x in range(4))


def test_cayley_not_latin():
    with pytest.raises(NotAGroup):
        build_from_cayley_table([[0, 1], [1, 1]])


def test_cayley_no_identity():
    with pytest.raises(NotAGroup):
        build_from_cayley_table([[1, 0], [0, 1]])


def nonassociative_loop():
    """Smallest Latin square with identity that fails associativity, found
    by deterministic DFS (order 5; the only order-5 group is C5)."""
    n = 5
    rows = [list(range(n))]

    def extend():
        if len(rows) == n:
            table = [row[:] for row in rows]
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if table[table[a][b]][c] != table[a][table[b][c]]:
                            return table
            return None
        i = len(rows)
        used_cols = [set(r[j] for r in rows) for j in range(n)]

        def fill(row, j):
            if j == n:
                rows.append(row[:])
                found = extend()
                if found is not None:
                    return found
                rows.pop()
                return None
            if j == 0:
                row[0] = i
                return fill(row, 1) if i not in used_cols[0] else None
            for v in range(n):
                if v not in row[:j] and v not in used_cols[j]:
                    row[j] = v
                    found = fill(row, j + 1)
                    if found is not None:
                        return found
            return None

        return fill([None] * n, 0)

    table = extend()
    assert table is not None
    return table


def test_cayley_rejects_nonassociative():
    loop = nonassociative_loop()
    with pytest.raises(NotAGroup, match="associativity"):
        build_from_cayley_table(loop)


def test_generator_associativity_test_agrees_with_naive():
    # force the generator-based path with naive_limit=0
    loop = nonassociative_loop()
    with pytest.raises(NotAGroup):
        _check_associativity(loop, 0)
    for table in (XOR_TABLE, [[(i + j) % 6 for j in range(6)] for i in range(6)]):
        _check_associativity(table, 0)
        _check_associativity(table, 256)


def test_matrix_sl25(sl25):
    # |SL(2, p)| = p(p^2 - 1)
    assert sl25.order == 5 * 24


def test_matrix_sl23():
    g = build_from_matrix_generators(
        3, 2, [((1, 1), (0, 1)), ((0, -1), (1, 0))]
    )
    assert g.order == 24


def test_matrix_trivial():
    g = build_from_matrix_generators(2, 1, [((1,),)])
    assert g.order == 1


def test_matrix_errors():
    with pytest.raises(SingularGenerator):
        build_from_matrix_generators(5, 2, [((1, 1), (2, 2))])
    with pytest.raises(NotPrime):
        build_from_matrix_generators(4, 2, [((1, 0), (0, 1))])


def test_direct_product_klein(klein):
    assert klein.order == 4
    assert abelian_invariants_finite(klein).factors == (2, 2)


def test_direct_product_coprime_is_cyclic():
    g = direct_product(cyclic_group(3), cyclic_group(5))
    assert g.order == 15
    assert abelian_invariants_finite(g).factors == (15,)
    assert max(g.element_orders()) == 15


def test_direct_product_with_trivial():
    g = cyclic_group(6)
    prod = direct_product(g, cyclic_group(1))
    assert prod.order == 6
    assert prod.table == g.table


def test_direct_product_cap():
    with pytest.raises(ClosureExceedsCap):
        direct_product(cyclic_group(8), cyclic_group(8), cap=32)


def test_products_pass_validator(klein, s3):
    validate_group(direct_product(klein, s3))
    validate_group(quotient(s3, derived_subgroup(s3)))


# ---------------------------------------------------------------------------
# closures and classes

def test_subgroup_closure_empty_seeds(s3):
    assert subgroup_closure(s3, set()).members == frozenset({0})


def test_subgroup_closure_three_cycle(s3):
    cycle = next(x for x in range(6) if s3.element_order(x) == 3)
    sub = subgroup_closure(s3, {cycle})
    # orbit of powers
    assert sub.members == {0, cycle, s3.mul(cycle, cycle)}
    assert sub.is_subgroup()


def test_subgroup_closure_everything(s3):
    assert len(subgroup_closure(s3, set(range(6)))) == 6


def test_normal_closure_transposition_generates_s3(s3):
    transposition = next(x for x in range(6) if s3.element_order(x) == 2)
    assert len(normal_closure(s3, {transposition})) == 6


def test_normal_closure_abelian_equals_span(klein):
    c12 = cyclic_group(12)
    for group in (klein, c12, direct_product(cyclic_group(2), cyclic_group(4))):
        for seeds in ({1}, {1, 2}, set(range(group.order))):
            assert (
                normal_closure(group, seeds).members
                == subgroup_closure(group, seeds).members
            )


def test_normal_closure_simple_group(a5):
    for g in (1, 7, 30):
        assert len(normal_closure(a5, {g})) == 60


def test_normal_closure_contains_subgroup_closure(s3, q8, d4):
    for group in (s3, q8, d4):
        for seed in range(group.order):
            sub = subgroup_closure(group, {seed}).members
            norm = normal_closure(group, {seed}).members
            assert sub <= norm


def test_conjugacy_classes_abelian_singletons():
    g = cyclic_group(8)
    assert all(len(c) == 1 for c in conjugacy_classes(g))


def test_conjugacy_classes_s3(s3):
    sizes = sorted(len(c) for c in conjugacy_classes(s3))
    assert sizes == [1, 2, 3]


def test_conjugacy_classes_q8(q8):
    sizes = sorted(len(c) for c in conjugacy_classes(q8))
    assert sizes == [1, 1, 2, 2, 2]


def test_classes_partition(catalog):
    for group in catalog[:40]:
        seen = [x for c in conjugacy_classes(group) for x in c]
        assert sorted(seen) == list(range(group.order))


# ---------------------------------------------------------------------------
# normal subgroup lattice

def brute_normal_subgroups(group):
    out = set()
    for size in range(1, group.order + 1):
        if group.order % size:
            continue
        for sub in combinations(range(1, group.order), size - 1):
            members = frozenset((0,) + sub)
            if ElementSet(group, members).is_normal():
                out.add(members)
    return out


def test_normal_subgroups_prime_cyclic():
    g = cyclic_group(7)
    assert [len(s) for s in normal_subgroups(g)] == [1, 7]


def test_normal_subgroups_klein(klein):
    subs = normal_subgroups(klein)
    assert [len(s) for s in subs] == [1, 2, 2, 2, 4]


def test_normal_subgroups_s5(s5):
    subs = normal_subgroups(s5, cap=128)
    assert [len(s) for s in subs] == [1, 60, 120]


@pytest.mark.parametrize(
    "maker",
    [
        lambda: cyclic_group(12),
        lambda: direct_product(cyclic_group(2), cyclic_group(2)),
        lambda: direct_product(cyclic_group(2), cyclic_group(4)),
        lambda: build_from_permutations(3, [(1, 0, 2), (1, 2, 0)], name="S3"),
        lambda: alternating_group(4),
    ],
)
def test_normal_subgroups_match_exhaustive_scan(maker):
    group = maker()
    fast = {s.members for s in normal_subgroups(group)}
    assert fast == brute_normal_subgroups(group)


def test_normal_subgroups_match_exhaustive_scan_q8_d4_e8(q8, d4, e8):
    for group in (q8, d4, e8):
        fast = {s.members for s in normal_subgroups(group)}
        assert fast == brute_normal_subgroups(group)


def test_normal_subgroups_are_class_unions(catalog):
    for group in catalog[:40]:
        classes = conjugacy_classes(group)
        for sub in normal_subgroups(group):
            for cls in classes:
                inside = set(cls) & sub.members
                assert not inside or set(cls) <= sub.members


def test_normal_subgroups_cap():
    with pytest.raises(OrderCapExceeded):
        normal_subgroups(cyclic_group(20), cap=10)


def test_maximal_normal_subgroups_c6(c6):
    subs = maximal_normal_subgroups(c6)
    assert sorted(len(s) for s in subs) == [2, 3]


def test_maximal_normal_subgroups_klein(klein):
    subs = maximal_normal_subgroups(klein)
    assert [len(s) for s in subs] == [2, 2, 2]


def test_maximal_normal_subgroups_simple(a5):
    subs = maximal_normal_subgroups(a5, cap=128)
    assert len(subs) == 1 and len(subs[0]) == 1


def test_maximal_normal_trivial_group_raises():
    with pytest.raises(TrivialGroup):
        maximal_normal_subgroups(cyclic_group(1))


def test_maximal_equals_maximal_filter_and_simple_quotient(catalog):
    # cross-check the two characterisations: inclusion-maximal among proper
    # normals, and simple quotient
    for group in catalog[:30]:
        if group.order == 1:
            continue
        normals = normal_subgroups(group)
        proper = [s for s in normals if len(s) < group.order]
        byhand = [
            s
            for s in proper
            if not any(
                s.members < t.members for t in proper if t.members != s.members
            )
        ]
        fast = maximal_normal_subgroups(group)
        assert {s.members for s in fast} == {s.members for s in byhand}
        for s in fast:
            q = quotient(group, s)
            assert len(normal_subgroups(q)) == 2  # simple


# ---------------------------------------------------------------------------
# quotients

def test_quotient_by_trivial_is_same_table(s3):
    q = quotient(s3, subgroup_closure(s3, set()))
    assert q.table == s3.table


def test_quotient_by_whole_group(s3):
    q = quotient(s3, subgroup_closure(s3, set(range(6))))
    assert q.order == 1


def test_quotient_s5_a5(s5):
    a5sub = next(s for s in normal_subgroups(s5, cap=128) if len(s) == 60)
    q = quotient(s5, a5sub)
    assert q.order == 2


def test_quotient_not_normal(s3):
    transposition = next(x for x in range(6) if s3.element_order(x) == 2)
    sub = subgroup_closure(s3, {transposition})
    with pytest.raises(NotNormal):
        quotient(s3, sub)


# ---------------------------------------------------------------------------
# derived subgroup and abelian invariants

def test_derived_subgroup_abelian():
    assert len(derived_subgroup(cyclic_group(9))) == 1


def test_derived_subgroup_s3(s3):
    derived = derived_subgroup(s3)
    assert len(derived) == 3
    assert derived.is_normal()


def test_derived_subgroup_sl25_perfect(sl25):
    assert len(derived_subgroup(sl25)) == 120


def test_abelian_invariants_c15():
    inv = abelian_invariants_finite(cyclic_group(15))
    assert (inv.free_rank, inv.factors) == (0, (15,))


def test_abelian_invariants_klein(klein):
    assert abelian_invariants_finite(klein).factors == (2, 2)


def test_abelian_invariants_c2xc4():
    g = direct_product(cyclic_group(2), cyclic_group(4))
    inv = abelian_invariants_finite(g)
    assert inv.factors == (2, 4)
    # exhaustive cross-check: order profile matches C2 x C4 exactly
    from collections import Counter

    assert Counter(g.element_orders()) == Counter({1: 1, 2: 3, 4: 4})


def test_abelian_invariants_rejects_nonabelian(s3):
    with pytest.raises(NotAbelian):
        abelian_invariants_finite(s3)


def test_abelianisation_product_of_factors(catalog):
    # product of invariant factors of G/G' equals |G| / |G'|
    for group in catalog[:40]:
        gab = abelianisation(group)
        inv = abelian_invariants_finite(gab)
        assert inv.order == group.order // len(derived_subgroup(group))


# ---------------------------------------------------------------------------
# weight

def naive_weight(group):
    """Reference weight by scanning all element tuples (tiny groups only)."""
    if group.order == 1:
        return 0
    for k in range(1, group.order):
        for combo in combinations(range(1, group.order), k):
            if len(normal_closure(group, combo)) == group.order:
                return k
    raise AssertionError("unreachable")


def test_weight_trivial():
    assert weight_bruteforce(cyclic_group(1)) == 0


def test_weight_simple(a5):
    assert weight_bruteforce(a5) == 1


def test_weight_klein(klein):
    assert weight_bruteforce(klein) == 2
    assert weight_witness(klein) == (2, (1, 2))


def test_weight_matches_naive_scan(klein, s3, q8, d4, c6, e8):
    for group in (klein, s3, q8, d4, c6, e8, cyclic_group(1), alternating_group(4)):
        assert weight_bruteforce(group) == naive_weight(group)


def test_weight_cap():
    with pytest.raises(OrderCapExceeded):
        weight_bruteforce(cyclic_group(16), cap=8)


def test_weight_at_least_abelianisation_weight(catalog):
    for group in catalog:
        if group.order > 32:
            continue
        w = weight_bruteforce(group)
        ab = abelian_invariants_finite(abelianisation(group))
        assert w >= len(ab.factors)


# ---------------------------------------------------------------------------
# randomised structure properties

@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6))
def test_cyclic_product_invariants(m, n):
    g = direct_product(cyclic_group(m), cyclic_group(n))
    inv = abelian_invariants_finite(g)
    assert inv.order == m * n
    assert weight_bruteforce(g) == len(inv.factors)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 5), st.integers(2, 5))
def test_product_validator_and_identity(m, n):
    g = direct_product(cyclic_group(m), cyclic_group(n))
    validate_group(g)
    assert all(g.mul(0, x) == x and g.mul(x, 0) == x for x in range(g.order))
