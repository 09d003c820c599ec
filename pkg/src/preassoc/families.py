"""Constructors for the axiomatized operation families.

Quasi-sums (generator pairs phi/psi), Ling-type bounded sums, variadic
extensions of t-norms, t-conorms and uninorms, and median-style operations
on bounded chains.  Real families are validated on finite sampling grids;
strict monotonicity and the defining axioms are certified at grid points
only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .core import (
    EPSILON,
    Chain,
    GeneratedFn,
    Interval,
    TableFn,
    _as_grid,
    _require_strictly_monotone,
    canonical_symbol,
    close,
    tabulate,
)
from .errors import AxiomError, GeneratorError, GridClosureError

_SAMPLES = 33
#: Window used to sample unbounded intervals during construction-time checks.
_INF_WINDOW = 8.0


def _sample_grid(interval: Interval, n: int = _SAMPLES) -> list:
    lo = interval.lo if math.isfinite(interval.lo) else -_INF_WINDOW
    hi = interval.hi if math.isfinite(interval.hi) else _INF_WINDOW
    if lo > hi:
        lo, hi = hi, lo
    span = hi - lo
    if span == 0:
        return [lo]
    nudge = span * 1e-6
    if interval.lo_open or not math.isfinite(interval.lo):
        lo += nudge
    if interval.hi_open or not math.isfinite(interval.hi):
        hi -= nudge
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def _validate_j_form(j: Interval):
    """J must be a half-line (or the whole line) with the admissible endpoint sign."""
    lo_inf = not math.isfinite(j.lo)
    hi_inf = not math.isfinite(j.hi)
    if lo_inf and hi_inf:
        return
    if lo_inf and j.hi <= 0:
        return
    if hi_inf and j.lo >= 0:
        return
    raise GeneratorError(
        f"inadmissible generator value interval {j}: needs a half-line with "
        "upper endpoint <= 0, lower endpoint >= 0, or the whole line"
    )


def make_quasi_sum(
    phi: Callable,
    psi: Callable,
    interval: Interval,
    j: Interval,
) -> GeneratedFn:
    """The family psi(phi(x1) + ... + phi(xn)) on the given interval.

    ``phi`` must be strictly monotone on the construction sampling grid and
    map into ``j``; ``psi`` must be strictly monotone on the sampled phi
    values.  ``j`` must be an admissible half-line (or the whole line): sums
    of phi values then stay inside it.
    """
    _validate_j_form(j)
    grid = _sample_grid(interval)
    increasing = _require_strictly_monotone(phi, grid, "phi")
    phis = sorted(float(phi(x)) for x in grid)
    for x, p in zip(grid, phis):
        if not j.contains(p) and not (close(p, j.lo) or close(p, j.hi)):
            raise GeneratorError(f"phi({x}) = {p} falls outside {j}")
    _require_strictly_monotone(psi, phis, "psi")
    return GeneratedFn(
        family="quasi_sum",
        interval=interval,
        phi=phi,
        psi=psi,
        phi_increasing=increasing,
    )


def make_ling(phi: Callable, psi: Callable, a: float, b: float) -> GeneratedFn:
    """The bounded family psi(min(phi(x1) + ... + phi(xn), phi(a))) on [a, b].

    ``phi`` must be continuous strictly decreasing with phi(b) = 0 (checked at
    tolerance); ``psi`` strictly monotone on [0, phi(a)].  With psi equal to
    the inverse of phi the binary part is the classical bounded generator
    form.
    """
    a, b = float(a), float(b)
    if not a < b:
        raise GeneratorError(f"need a < b, got a={a}, b={b}")
    if not close(float(phi(b)), 0.0):
        raise GeneratorError(f"phi(b) = {phi(b)} but the construction needs phi(b) = 0")
    interval = Interval(a, b)
    grid = _sample_grid(interval)
    increasing = _require_strictly_monotone(phi, grid, "phi")
    if increasing:
        raise GeneratorError("phi must be strictly decreasing")
    top = float(phi(a))
    psi_grid = [top * i / (_SAMPLES - 1) for i in range(_SAMPLES)]
    _require_strictly_monotone(psi, psi_grid, "psi")
    return GeneratedFn(
        family="ling",
        interval=interval,
        phi=phi,
        psi=psi,
        a=a,
        b=b,
        phi_increasing=False,
    )


# ---------------------------------------------------------------------------
# Binary seed catalog
# ---------------------------------------------------------------------------


def _drastic(x, y):
    if x == 1.0:
        return y
    if y == 1.0:
        return x
    return 0.0


TNORMS = {
    "min": min,
    "product": lambda x, y: x * y,
    "lukasiewicz": lambda x, y: max(0.0, x + y - 1.0),
    "drastic": _drastic,
}

TCONORMS = {
    "max": max,
    "probabilistic-sum": lambda x, y: x + y - x * y,
    "bounded-sum": lambda x, y: min(1.0, x + y),
}


def _uninorm_min(e):
    # the weakest uninorm with neutral element e: max on [e, 1]^2, min elsewhere
    def op(x, y):
        return max(x, y) if x >= e and y >= e else min(x, y)

    return op


def _uninorm_max(e):
    # the strongest uninorm with neutral element e: min on [0, e]^2, max elsewhere
    def op(x, y):
        return min(x, y) if x <= e and y <= e else max(x, y)

    return op


UNINORMS = {
    "idempotent-min": _uninorm_min,
    "idempotent-max": _uninorm_max,
}


def _resolve_seed_op(kind: str, op, e, chain=None):
    if callable(op):
        return op
    name = str(op)
    if chain is not None:
        # symbolic carriers order by the chain, not by string comparison
        if kind == "tnorm" and name == "min":
            return chain.meet
        if kind == "tconorm" and name == "max":
            return chain.join
        raise ValueError(
            f"catalog entry {name!r} needs a numeric grid carrier; "
            "pass a binary callable for symbolic chains"
        )
    if kind == "tnorm":
        catalog = TNORMS
    elif kind == "tconorm":
        catalog = TCONORMS
    elif kind == "uninorm":
        if name not in UNINORMS:
            raise ValueError(f"unknown uninorm {name!r}; known: {sorted(UNINORMS)}")
        if e is None:
            raise ValueError("a uninorm needs its neutral element e")
        return UNINORMS[name](e)
    else:
        raise ValueError(f"unknown seed kind {kind!r}")
    if name not in catalog:
        raise ValueError(f"unknown {kind} {name!r}; known: {sorted(catalog)}")
    return catalog[name]


def _snap(grid: list, value: float):
    for g in grid:
        if close(g, value):
            return g
    return None


def make_variadic_seed(kind: str, op, carrier, max_arity: int, *, e=None) -> TableFn:
    """The unique default-ε associative extension of a (discretized) t-norm,
    t-conorm, or uninorm, with identity unary part.

    ``op`` is a catalog name or a binary callable.  The defining axioms are
    checked exhaustively on the carrier: closure, symmetry, monotonicity,
    associativity, and the neutral element (carrier top for t-norms, carrier
    bottom for t-conorms, the supplied interior ``e`` for uninorms).
    """
    if kind not in ("tnorm", "tconorm", "uninorm"):
        raise ValueError(f"unknown seed kind {kind!r}")
    binary = _resolve_seed_op(
        kind, op, e, chain=carrier if isinstance(carrier, Chain) else None
    )

    if isinstance(carrier, Chain):
        values = list(carrier.elements)
        index = carrier.index
        snapped = {}
        for u, v in product(values, repeat=2):
            w = binary(u, v)
            if w not in carrier:
                raise GridClosureError(f"operation leaves the chain: ({u!r},{v!r}) -> {w!r}")
            snapped[(u, v)] = w
        neutral = _seed_neutral(kind, values, e, index=index)
    else:
        grid = _as_grid(carrier)
        values = grid
        index = grid.index
        snapped = {}
        for u, v in product(grid, repeat=2):
            w = float(binary(u, v))
            s = _snap(grid, w)
            if s is None:
                raise GridClosureError(
                    f"grid not closed under the operation: ({u}, {v}) -> {w}"
                )
            snapped[(u, v)] = s
        neutral = _seed_neutral(kind, values, e)

    _check_seed_axioms(kind, snapped, values, neutral, index)
    table_op = lambda u, v: snapped[(u, v)]  # noqa: E731
    if isinstance(carrier, Chain):
        return tabulate(table_op, carrier, max_arity, default=EPSILON)
    return tabulate(table_op, values, max_arity, default=EPSILON)


def _seed_neutral(kind, values, e, index=None):
    if kind == "tnorm":
        return values[-1]
    if kind == "tconorm":
        return values[0]
    if e is None:
        raise ValueError("a uninorm needs its neutral element e")
    if index is None:
        ne = _snap(values, float(e))
        if ne is None:
            raise ValueError(f"neutral element {e} is not a grid point")
    else:
        ne = e
    if ne == values[0] or ne == values[-1]:
        raise ValueError("a uninorm neutral element must be interior to the carrier")
    return ne


def _check_seed_axioms(kind, table, values, neutral, index):
    for x in values:  # neutral element law
        if table[(neutral, x)] != x or table[(x, neutral)] != x:
            raise AxiomError(
                "neutral",
                f"{neutral!r} is not neutral at {x!r}",
                witness=(neutral, x),
            )
    for u, v in product(values, repeat=2):  # symmetry
        if table[(u, v)] != table[(v, u)]:
            raise AxiomError("symmetric", f"not symmetric at ({u!r},{v!r})", witness=(u, v))
    pos = {x: i for i, x in enumerate(values)}
    for u, v in product(values, repeat=2):  # monotone: adjacent steps suffice
        i = pos[u]
        if i + 1 < len(values):
            u2 = values[i + 1]
            if pos[table[(u2, v)]] < pos[table[(u, v)]]:
                raise AxiomError(
                    "nondecreasing", f"decreasing step at ({u!r},{v!r})", witness=(u, v)
                )
    for u, v, w in product(values, repeat=3):  # associativity
        if table[(table[(u, v)], w)] != table[(u, table[(v, w)])]:
            raise AxiomError(
                "associative", f"not associative at ({u!r},{v!r},{w!r})", witness=(u, v, w)
            )


def lift_tnorm(f: Callable, seed: TableFn) -> TableFn:
    """Relabel a variadic seed by a strictly monotone unary map on its carrier.

    The seed must come from a numeric grid; ``f`` is applied to the decoded
    grid values, checked strictly monotone on them, and the relabeled table
    keeps the seed's default ε.  The unary part of the result is exactly f.
    """
    try:
        carrier = [float(s) for s in seed.domain.elements]
    except ValueError:
        raise TypeError("lift needs a seed tabulated on a numeric grid") from None
    _require_strictly_monotone(f, carrier, "f")
    decode = dict(zip(seed.domain.elements, carrier))
    relabel = {}
    for s, x in decode.items():
        relabel[s] = canonical_symbol(float(f(x)))
    if len(set(relabel.values())) != len(relabel):
        raise GeneratorError("f collapses grid values at the rendering tolerance")
    entries = {t: relabel[v] for t, v in seed.entries.items()}
    observed = sorted({float(v) for v in relabel.values()})
    codomain = tuple(canonical_symbol(v) for v in observed)
    return TableFn(seed.domain, codomain, seed.max_arity, EPSILON, entries)


# ---------------------------------------------------------------------------
# Median-style operations on bounded chains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MedianParams:
    """Clamp window [a, b] and the pair c, d steering first/last arguments."""

    a: object
    b: object
    c: object
    d: object

    def validate(self, chain: Chain):
        for p in (self.a, self.b, self.c, self.d):
            if p not in chain:
                raise ValueError(f"parameter {p!r} is not a chain element")
        cd_meet = chain.meet(self.c, self.d)
        cd_join = chain.join(self.c, self.d)
        if not chain.leq(self.a, cd_meet):
            raise ValueError(f"need a <= c∧d, got a={self.a!r}, c∧d={cd_meet!r}")
        if not chain.leq(cd_join, self.b):
            raise ValueError(f"need c∨d <= b, got c∨d={cd_join!r}, b={self.b!r}")


def median_formula(chain: Chain, params: MedianParams, xs: Sequence) -> object:
    """med(a, (c∧x1) ∨ med(⋀x, c∧d, ⋁x) ∨ (d∧xn), b) under the chain order."""
    a, b, c, d = params.a, params.b, params.c, params.d
    lo = chain.min_of(xs)
    hi = chain.max_of(xs)
    inner = chain.med(lo, chain.meet(c, d), hi)
    inner = chain.join(chain.join(chain.meet(c, xs[0]), inner), chain.meet(d, xs[-1]))
    return chain.med(a, inner, b)


def make_median_family(
    params: MedianParams,
    chain: Chain,
    max_arity: int,
    f=None,
) -> TableFn:
    """Tabulate the median-style operation, optionally relabeled through f.

    Without ``f`` the result is an associative, range-idempotent operation
    whose sections are all monotone and convex.  ``f`` (a FiniteMap from the
    window [a, b] into an ordered codomain) must be strictly increasing with a
    gap-free range; it relabels every entry.
    """
    params.validate(chain)
    if max_arity < 1:
        raise ValueError("max_arity must be at least 1")
    entries = {}
    for n in range(1, max_arity + 1):
        for t in chain.tuples(n):
            entries[t] = median_formula(chain, params, t)
    if f is None:
        return TableFn(chain, chain.elements, max_arity, EPSILON, entries)

    window = [
        u
        for u in chain.elements
        if chain.leq(params.a, u) and chain.leq(u, params.b)
    ]
    if tuple(f.domain) != tuple(window):
        raise ValueError(
            f"f must be defined exactly on the window [{params.a!r}, {params.b!r}]"
        )
    cod_pos = {v: i for i, v in enumerate(f.codomain)}
    images = [cod_pos[f.graph[u]] for u in window]
    if any(p >= q for p, q in zip(images, images[1:])):
        raise GeneratorError("f must be strictly increasing on the window")
    attained = set(images)
    if any(
        j not in attained for j in range(min(images), max(images) + 1)
    ):
        raise GeneratorError("range of f has a gap in the codomain order")
    relabeled = {t: f.graph[v] for t, v in entries.items()}
    return TableFn(chain, f.codomain, max_arity, EPSILON, relabeled)
