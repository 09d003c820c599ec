"""Exhaustive universes of small table functions and theorem-level sweeps.

Candidate spaces are indexable (a function is the base-k digit expansion of
its index), so enumeration is deterministic, restartable, and splits cleanly
across worker processes with bit-identical merged reports.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .checks import (
    check_associative,
    check_preassociative,
    check_range_idempotent,
    check_replication_invariant,
    check_replication_preinvariant,
    check_unarily_quasi_range_idempotent,
    check_unarily_range_idempotent,
)
from .core import EPSILON, Chain, TableFn
from .errors import ConditionError
from .factorize import extend_unary_binary
from .quasi_inverse import FiniteMap


def default_chain(size: int) -> Chain:
    """The chain 0 < 1 < ... < size-1 over string symbols."""
    if size < 1:
        raise ValueError("chain size must be at least 1")
    return Chain(tuple(str(i) for i in range(size)))


def _nonempty_tuples(chain: Chain, max_arity: int) -> tuple:
    return tuple(
        t for n in range(1, max_arity + 1) for t in product(chain.elements, repeat=n)
    )


def epsilon_standard_count(chain_size: int, max_arity: int) -> int:
    slots = sum(chain_size ** n for n in range(1, max_arity + 1))
    return chain_size ** slots


def epsilon_standard_at(chain: Chain, max_arity: int, index: int) -> TableFn:
    """The index-th default-ε standard candidate (base-k digits over the slots)."""
    slots = _nonempty_tuples(chain, max_arity)
    k = len(chain.elements)
    values = []
    i = index
    for _ in range(len(slots)):
        values.append(chain.elements[i % k])
        i //= k
    if i:
        raise IndexError(f"index {index} out of range")
    entries = dict(zip(slots, values))
    return TableFn(chain, chain.elements, max_arity, EPSILON, entries)


def all_epsilon_standard(chain: Chain, max_arity: int) -> Iterator[TableFn]:
    """Every operation with default ε and entries inside the chain."""
    slots = _nonempty_tuples(chain, max_arity)
    for values in product(chain.elements, repeat=len(slots)):
        entries = dict(zip(slots, values))
        yield TableFn(chain, chain.elements, max_arity, EPSILON, entries)


def all_operations(chain: Chain, max_arity: int) -> Iterator[TableFn]:
    """Every operation-shaped table: entries and default over the chain plus ε."""
    slots = _nonempty_tuples(chain, max_arity)
    value_space = chain.elements + (EPSILON,)
    codomain = chain.elements + (EPSILON,)
    for default in value_space:
        for values in product(value_space, repeat=len(slots)):
            entries = dict(zip(slots, values))
            yield TableFn(chain, codomain, max_arity, default, entries)


def all_binary_tables(chain: Chain) -> Iterator[dict]:
    """Every binary operation table on the chain, lexicographically."""
    pairs = tuple(product(chain.elements, repeat=2))
    for values in product(chain.elements, repeat=len(pairs)):
        yield dict(zip(pairs, values))


def binary_associative(table: dict, elements) -> bool:
    """Plain triple-loop associativity test for a binary table."""
    for u, v, w in product(elements, repeat=3):
        if table[(table[(u, v)], w)] != table[(u, table[(v, w)])]:
            return False
    return True


def all_associative_extensions(chain: Chain, max_arity: int) -> Iterator[TableFn]:
    """Every associative default-ε standard operation on the chain at this arity.

    Such operations are determined by their unary and binary parts, so the
    search runs over (unary, binary) pairs and keeps those whose extension
    conditions hold.
    """
    elements = chain.elements
    assoc_tables = [t for t in all_binary_tables(chain) if binary_associative(t, elements)]
    unary_maps = [
        dict(zip(elements, values))
        for values in product(elements, repeat=len(elements))
    ]
    for table in assoc_tables:
        for unary in unary_maps:
            f1 = FiniteMap(elements, elements, unary)
            try:
                yield extend_unary_binary(f1, table, max_arity)
            except ConditionError:
                continue


# ---------------------------------------------------------------------------
# The theorem-equivalence sweep
# ---------------------------------------------------------------------------

SWEEP_PROPERTIES = (
    "A1",
    "A2",
    "A3",
    "P1",
    "P2",
    "URI",
    "UQRI",
    "F1F1",
    "RI",
    "FF2",
    "REPL",
    "PREPL",
)

#: name -> (label, predicate over the per-function property dict)
SWEEP_EQUIVALENCES = {
    "A1_iff_P1_and_URI": lambda p: p["A1"] == (p["P1"] and p["URI"]),
    "A1_iff_A2": lambda p: p["A1"] == p["A2"],
    "A1_iff_A3": lambda p: p["A1"] == p["A3"],
    "P1_iff_P2": lambda p: p["P1"] == p["P2"],
    "URI_iff_UQRI_and_F1F1": lambda p: p["URI"] == (p["UQRI"] and p["F1F1"]),
    "RI_lemma_i_iff_ii": lambda p: (p["A1"] and p["RI"]) == (p["A1"] and p["FF2"]),
    "RI_lemma_i_iff_iii": lambda p: (p["A1"] and p["RI"])
    == (p["P1"] and p["UQRI"] and p["RI"]),
    "RI_lemma_i_iff_iv": lambda p: (p["A1"] and p["RI"])
    == (p["P1"] and p["UQRI"] and p["F1F1"] and p["FF2"]),
    "A1_implies_P1": lambda p: (not p["A1"]) or p["P1"],
    "REPL_implies_PREPL": lambda p: (not p["REPL"]) or p["PREPL"],
    "P1_implies_PREPL": lambda p: (not p["P1"]) or p["PREPL"],
    "A1_and_REPL_iff_A1_and_RI": lambda p: (p["A1"] and p["REPL"])
    == (p["A1"] and p["RI"]),
}


def _function_bits(fn: TableFn) -> dict:
    entries = fn.entries
    elements = fn.domain.elements
    bits = {
        "A1": check_associative(fn, "A1").holds,
        "A2": check_associative(fn, "A2").holds,
        "A3": check_associative(fn, "A3").holds,
        "P1": check_preassociative(fn, "P1").holds,
        "P2": check_preassociative(fn, "P2").holds,
        "URI": check_unarily_range_idempotent(fn).holds,
        "UQRI": check_unarily_quasi_range_idempotent(fn).holds,
        "RI": check_range_idempotent(fn).holds,
        "REPL": check_replication_invariant(fn).holds,
        "PREPL": check_replication_preinvariant(fn).holds,
        "F1F1": all(
            entries[(entries[(u,)],)] == entries[(u,)] for u in elements
        ),
        "FF2": all(
            entries[(entries[(u,)], entries[(u,)])] == entries[(u,)] for u in elements
        )
        if fn.max_arity >= 2
        else True,
    }
    return bits


@dataclass
class SweepReport:
    """Aggregated result of sweeping every default-ε standard candidate."""

    chain_size: int
    max_arity: int
    total: int
    property_counts: dict
    equivalence_failures: dict  # equivalence name -> sorted candidate indices
    bits_digest: str

    def all_equivalences_hold(self) -> bool:
        return all(not v for v in self.equivalence_failures.values())

    def to_json(self) -> str:
        payload = {
            "chain_size": self.chain_size,
            "max_arity": self.max_arity,
            "total": self.total,
            "property_counts": self.property_counts,
            "equivalence_failures": self.equivalence_failures,
            "bits_digest": self.bits_digest,
        }
        return json.dumps(payload, sort_keys=True)


def _sweep_range(args) -> tuple:
    chain_size, max_arity, lo, hi = args
    chain = default_chain(chain_size)
    counts = {name: 0 for name in SWEEP_PROPERTIES}
    failures = {name: [] for name in SWEEP_EQUIVALENCES}
    blob = bytearray()
    for index in range(lo, hi):
        fn = epsilon_standard_at(chain, max_arity, index)
        bits = _function_bits(fn)
        packed = 0
        for i, name in enumerate(SWEEP_PROPERTIES):
            if bits[name]:
                counts[name] += 1
                packed |= 1 << i
        blob += packed.to_bytes(2, "big")
        for name, pred in SWEEP_EQUIVALENCES.items():
            if not pred(bits):
                failures[name].append(index)
    return counts, failures, bytes(blob)


def equivalence_sweep(chain_size: int, max_arity: int, workers: int = 1) -> SweepReport:
    """Check the associativity/preassociativity equivalences over a whole universe.

    With ``workers`` > 1 the index space is partitioned across processes; the
    merged report is bit-identical to a single-threaded run.
    """
    total = epsilon_standard_count(chain_size, max_arity)
    if workers <= 1:
        parts = [_sweep_range((chain_size, max_arity, 0, total))]
    else:
        bounds = [total * i // workers for i in range(workers + 1)]
        jobs = [
            (chain_size, max_arity, bounds[i], bounds[i + 1]) for i in range(workers)
        ]
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            parts = pool.map(_sweep_range, jobs)

    counts = {name: 0 for name in SWEEP_PROPERTIES}
    failures = {name: [] for name in SWEEP_EQUIVALENCES}
    blob = bytearray()
    for part_counts, part_failures, part_blob in parts:
        for name in SWEEP_PROPERTIES:
            counts[name] += part_counts[name]
        for name in SWEEP_EQUIVALENCES:
            failures[name].extend(part_failures[name])
        blob += part_blob
    digest = hashlib.sha256(bytes(blob)).hexdigest()
    return SweepReport(
        chain_size=chain_size,
        max_arity=max_arity,
        total=total,
        property_counts=counts,
        equivalence_failures={k: sorted(v) for k, v in failures.items()},
        bits_digest=digest,
    )
