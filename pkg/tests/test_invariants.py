"""Theorem-level invariants checked by exhaustive enumeration at desk scale."""

import pytest

from preassoc.checks import (
    check_associative,
    check_epsilon_standard,
    check_standard,
)
from preassoc.core import EPSILON, TableFn
from preassoc.enumeration import (
    all_associative_extensions,
    all_epsilon_standard,
    all_operations,
    default_chain,
)
from preassoc.factorize import extend_unary_binary, factorize
from preassoc.quasi_inverse import FiniteMap
from preassoc.serialization import dumps_function

CHAIN2 = default_chain(2)


@pytest.fixture(scope="module")
def associative_ops_n3():
    """All associative default-ε standard operations on the 2-chain at arity 3."""
    return list(all_associative_extensions(CHAIN2, 3))


def test_associative_standard_implies_epsilon_standard():
    # over every operation-shaped table at arity 2: 3^6 entry maps x 3 defaults
    scanned = 0
    for fn in all_operations(CHAIN2, 2):
        scanned += 1
        if check_associative(fn, "A1").holds and check_standard(fn).holds:
            assert check_epsilon_standard(fn).holds, dumps_function(fn)
    assert scanned == 3 ** 6 * 3


def test_determination_by_unary_and_binary_parts(associative_ops_n3):
    """Brute-filtering the full universe agrees with pairwise construction."""
    filtered = {
        dumps_function(fn)
        for fn in all_epsilon_standard(CHAIN2, 3)
        if check_associative(fn, "A1").holds
    }
    constructed = {dumps_function(fn) for fn in associative_ops_n3}
    assert filtered == constructed
    assert len(constructed) == 10  # matches the sweep's associative count


def test_fold_recomputes_stored_arities(associative_ops_n3):
    for fn in associative_ops_n3:
        f1 = FiniteMap(
            CHAIN2.elements, CHAIN2.elements, {u: fn.entries[(u,)] for u in CHAIN2.elements}
        )
        f2 = {
            (u, v): fn.entries[(u, v)]
            for u in CHAIN2.elements
            for v in CHAIN2.elements
        }
        rebuilt = extend_unary_binary(f1, f2, 3)
        assert rebuilt.entries == fn.entries


def test_injective_unary_part_is_identity(associative_ops_n3):
    for fn in associative_ops_n3:
        unary = {u: fn.entries[(u,)] for u in CHAIN2.elements}
        if len(set(unary.values())) == len(unary):
            assert unary == {u: u for u in CHAIN2.elements}


def test_seed_extension_uniqueness(associative_ops_n3):
    """One identity-unary extension per binary table in the enumeration."""
    by_binary = {}
    for fn in associative_ops_n3:
        if any(fn.entries[(u,)] != u for u in CHAIN2.elements):
            continue
        key = tuple(
            fn.entries[(u, v)] for u in CHAIN2.elements for v in CHAIN2.elements
        )
        by_binary.setdefault(key, []).append(dumps_function(fn))
    for blobs in by_binary.values():
        assert len(blobs) == 1


def test_factorization_round_trip_over_enumerated_ops(associative_ops_n3):
    """Exact recovery whenever the relabeled unary part stays one-to-one.

    Uniqueness of the factor needs an injective unary part; an operation with
    a constant unary part admits several valid factors, so there the test
    only demands validity, not identity.
    """
    codomain = ("p", "q")
    bijections = ({"0": "p", "1": "q"}, {"0": "q", "1": "p"})
    exact = 0
    for H in associative_ops_n3:
        h1 = {u: H.entries[(u,)] for u in CHAIN2.elements}
        h1_injective = len(set(h1.values())) == len(h1)
        for graph in bijections:
            entries = {t: graph[v] for t, v in H.entries.items()}
            F = TableFn(CHAIN2, codomain, 3, EPSILON, entries)
            fac = factorize(F)
            if h1_injective:
                assert fac.H.entries == H.entries
                assert fac.f.graph == {u: graph[u] for u in fac.f.domain}
                exact += 1
            else:
                # a valid alternative factor: identity holds, H' associative
                for t, v in F.entries.items():
                    assert fac.f.graph[fac.H.entries[t]] == v
                assert check_associative(fac.H, "A1").holds
    assert exact >= 2 * 8  # at least the identity-unary extensions recover exactly


def test_one_to_one_triad_agreement(associative_ops_n3):
    """F1 injective iff H1 injective iff H1 = id, in every factorization."""
    codomain = ("p", "q")
    relabel = {"0": "p", "1": "q"}
    for H in associative_ops_n3:
        entries = {t: relabel[v] for t, v in H.entries.items()}
        F = TableFn(CHAIN2, codomain, 3, EPSILON, entries)
        fac = factorize(F)
        f1_graph = {u: F.entries[(u,)] for u in CHAIN2.elements}
        f1_injective = len(set(f1_graph.values())) == len(f1_graph)
        h1_graph = {u: fac.H.entries[(u,)] for u in CHAIN2.elements}
        h1_injective = len(set(h1_graph.values())) == len(h1_graph)
        h1_is_id = h1_graph == {u: u for u in CHAIN2.elements}
        assert f1_injective == h1_injective == h1_is_id


def test_pinned_g_changes_factor_but_keeps_theorems(chain4):
    from preassoc.families import MedianParams, make_median_family

    fn = make_median_family(MedianParams("1", "2", "1", "2"), chain4, 3)
    plain = factorize(fn)
    pinned = factorize(fn, pins=[("1", "1"), ("2", "2")])
    assert pinned.g.graph == {"1": "1", "2": "2"}
    assert plain.g.graph != pinned.g.graph  # canonical picks smallest preimages
    for fac in (plain, pinned):
        assert check_associative(fac.H, "A1").holds
        for t, v in fn.entries.items():
            assert fac.f.graph[fac.H.entries[t]] == v
