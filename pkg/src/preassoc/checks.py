"""Exhaustive axiom checkers over truncated tuple universes.

Every checker scans its whole (truncated) quantifier space, so a holding
verdict is a proof at the recorded max arity.  When a property fails, the
reported witness is the minimal counterexample under (total tuple length,
then chain order on the concatenated symbols), which keeps CI failures
reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .core import EPSILON, Chain, TableFn, Verdict, Witness, ranges
from .errors import NotAnOperationError

#: The closed list of checkable property names.
PROPERTY_NAMES = (
    "standard",
    "epsilon_standard",
    "associative_A1",
    "associative_A2",
    "associative_A3",
    "preassociative_P1",
    "preassociative_P2",
    "unarily_idempotent",
    "unarily_range_idempotent",
    "unarily_quasi_range_idempotent",
    "range_idempotent",
    "idempotent",
    "replication_invariant",
    "replication_preinvariant",
    "nondecreasing",
    "nonincreasing",
    "symmetric",
    "convex_sections",
)

_SUITE_IDEMPOTENCE = (
    "unarily_idempotent",
    "unarily_range_idempotent",
    "unarily_quasi_range_idempotent",
    "range_idempotent",
    "idempotent",
    "replication_invariant",
    "replication_preinvariant",
)

#: Properties that compare or feed values back into the domain.
OPERATION_ONLY = frozenset(
    (
        "epsilon_standard",
        "associative_A1",
        "associative_A2",
        "associative_A3",
        "unarily_idempotent",
        "unarily_range_idempotent",
        "range_idempotent",
        "idempotent",
    )
)


# ---------------------------------------------------------------------------
# Cached candidate universes (keyed by chain elements and max arity)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=128)
def _tuples_by_len(elements: tuple, max_len: int) -> tuple:
    """index n -> tuple of all n-tuples in lexicographic element order."""
    return tuple(tuple(product(elements, repeat=n)) for n in range(max_len + 1))


@lru_cache(maxsize=128)
def _all_tuples(elements: tuple, max_len: int) -> tuple:
    """All tuples of length 0..max_len, shortest first, lexicographic."""
    by_len = _tuples_by_len(elements, max_len)
    return tuple(t for group in by_len for t in group)


@lru_cache(maxsize=128)
def _context_pairs(elements: tuple, budget: int) -> tuple:
    """All (x, z) with |x| + |z| <= budget, ordered by total length then lex."""
    by_len = _tuples_by_len(elements, budget)
    out = []
    for total in range(budget + 1):
        for i in range(total + 1):
            for x in by_len[i]:
                for z in by_len[total - i]:
                    out.append((x, z))
    return tuple(out)


@lru_cache(maxsize=128)
def _assoc_candidates(elements: tuple, n: int) -> tuple:
    """Candidate triples for the substitution form of associativity.

    Returns (inner, outer) where inner holds (x, y, z) with y nonempty,
    |x|+|y|+|z| <= n, and outer holds (x, z) pairs for the y = ε cases with
    |x|+1+|z| <= n.  Both respect the substituted-length bound |x|+1+|z| <= n.
    """
    by_len = _tuples_by_len(elements, n)
    inner = []
    for total in range(1, n + 1):
        for i in range(total + 1):
            for j in range(1, total - i + 1):
                k = total - i - j
                if i + 1 + k > n:
                    continue
                for x in by_len[i]:
                    for y in by_len[j]:
                        for z in by_len[k]:
                            inner.append((x, y, z))
    outer = []
    for total in range(n):  # |x| + |z| <= n - 1 so that |x| + 1 + |z| <= n
        for i in range(total + 1):
            for x in by_len[i]:
                for z in by_len[total - i]:
                    outer.append((x, z))
    return tuple(inner), tuple(outer)


def _index_key(chain: Chain, *tuples_):
    idx = chain.index
    total = sum(len(t) for t in tuples_)
    flat = tuple(idx(s) for t in tuples_ for s in t)
    lens = tuple(len(t) for t in tuples_)
    return (total, flat, lens)


def _verdict(prop, fn, cases, best):
    witness = best[1] if best is not None else None
    return Verdict(prop, witness is None, cases, witness, fn.max_arity)


def _take(best, key, witness_thunk):
    """Keep the smaller of the current best and a new candidate."""
    if best is None or key < best[0]:
        return (key, witness_thunk())
    return best


def _require_operation(fn: TableFn, prop: str):
    if not fn.is_operation:
        raise NotAnOperationError(
            f"{prop} needs an operation (codomain within the domain plus ε); "
            f"codomain {fn.codomain!r} leaves the domain"
        )


def _wrap(value):
    """A value as a tuple fragment: ε contributes nothing, symbols one slot."""
    return () if value is EPSILON else (value,)


# ---------------------------------------------------------------------------
# Standardness
# ---------------------------------------------------------------------------


def check_standard(fn: TableFn) -> Verdict:
    """The default value is attained only at the empty tuple.

    The verdict's ``extra`` carries the stronger epsilon_standard flag.
    """
    default = fn.default
    best = None
    cases = 0
    for t in _all_tuples(fn.domain.elements, fn.max_arity):
        if not t:
            continue
        cases += 1
        if fn.entries[t] == default or (fn.entries[t] is EPSILON and default is EPSILON):
            key = _index_key(fn.domain, t)
            best = _take(
                best,
                key,
                lambda t=t: Witness(
                    parts=(("x", t),),
                    values=(("F(x)", fn.entries[t]), ("F(ε)", default)),
                    note="nonempty tuple attains the default value",
                ),
            )
            break  # canonical order: the first hit is minimal
    witness = best[1] if best is not None else None
    eps_std = fn.is_epsilon_standard
    return Verdict(
        "standard", witness is None, cases, witness, fn.max_arity,
        extra=(("epsilon_standard", eps_std),),
    )


def check_epsilon_standard(fn: TableFn) -> Verdict:
    """Standard operation into domain ∪ {ε} whose default is ε itself."""
    cases = 0
    if not fn.is_operation:
        w = Witness(
            parts=(), values=(("codomain", tuple(map(repr, fn.codomain))),),
            note="not an operation: codomain leaves the domain",
        )
        return Verdict("epsilon_standard", False, cases, w, fn.max_arity)
    if fn.default is not EPSILON:
        w = Witness(
            parts=(), values=(("F(ε)", fn.default),),
            note="default value is not ε",
        )
        return Verdict("epsilon_standard", False, cases, w, fn.max_arity)
    for t in _all_tuples(fn.domain.elements, fn.max_arity):
        if not t:
            continue
        cases += 1
        if fn.entries[t] is EPSILON:
            w = Witness(
                parts=(("x", t),), values=(("F(x)", EPSILON),),
                note="nonempty tuple maps to ε",
            )
            return Verdict("epsilon_standard", False, cases, w, fn.max_arity)
    return Verdict("epsilon_standard", True, cases, None, fn.max_arity)


# ---------------------------------------------------------------------------
# Associativity (three equivalent forms)
# ---------------------------------------------------------------------------


def check_associative(fn: TableFn, form: str = "A1") -> Verdict:
    """Associativity in substitution (A1), decomposition (A2), or pairwise (A3) form.

    Requires an operation; forms A2 and A3 additionally require default = ε.
    A substituted value of ε for a nonempty inner block is reported as a
    violation (of ε-standardness) rather than skipped.
    """
    prop = f"associative_{form}"
    if form not in ("A1", "A2", "A3"):
        raise ValueError(f"unknown associativity form {form!r}")
    _require_operation(fn, prop)
    if form in ("A2", "A3") and fn.default is not EPSILON:
        raise ValueError(f"{prop} is defined only for operations with default ε")
    if form == "A1":
        return _check_a1(fn)
    if form == "A2":
        return _check_a2(fn)
    return _check_a3(fn)


def _subst_eps_witness(x, y, z, prefix="F"):
    return Witness(
        parts=(("x", x), ("y", y), ("z", z)),
        values=((f"{prefix}(y)", EPSILON),),
        note="substituted-epsilon: nonempty inner block evaluates to ε",
    )


def _check_a1(fn: TableFn) -> Verdict:
    entries = fn.entries
    default = fn.default
    chain = fn.domain
    inner, outer = _assoc_candidates(chain.elements, fn.max_arity)
    cases = 0
    best = None
    for x, y, z in inner:
        cases += 1
        vy = entries[y]
        lhs = entries[x + y + z]
        if vy is EPSILON:
            key = _index_key(chain, x, y, z)
            best = _take(best, key, lambda x=x, y=y, z=z: _subst_eps_witness(x, y, z))
            continue
        rhs = entries[x + (vy,) + z]
        if lhs != rhs:
            key = _index_key(chain, x, y, z)
            best = _take(
                best,
                key,
                lambda x=x, y=y, z=z, lhs=lhs, rhs=rhs: Witness(
                    parts=(("x", x), ("y", y), ("z", z)),
                    values=(("F(x,y,z)", lhs), ("F(x,F(y),z)", rhs)),
                ),
            )
    for x, z in outer:  # y = ε, so the substituted block is the default value
        cases += 1
        if default is EPSILON:
            continue  # F(x, F(ε), z) = F(x, z): trivially equal
        lhs = entries[x + z] if x + z else default
        rhs = entries[x + (default,) + z]
        if lhs != rhs:
            key = _index_key(chain, x, (), z)
            best = _take(
                best,
                key,
                lambda x=x, z=z, lhs=lhs, rhs=rhs: Witness(
                    parts=(("x", x), ("y", ()), ("z", z)),
                    values=(("F(x,y,z)", lhs), ("F(x,F(y),z)", rhs)),
                ),
            )
    return _verdict("associative_A1", fn, cases, best)


def _check_a2(fn: TableFn) -> Verdict:
    """All decompositions w = (x, y, z) give the same substituted value."""
    entries = fn.entries
    default = fn.default
    chain = fn.domain
    cases = 0
    best = None
    for w in _all_tuples(chain.elements, fn.max_arity):
        results = []  # ((x, y, z), value-or-None for substituted ε)
        n = len(w)
        for i in range(n + 1):
            for j in range(n - i + 1):
                x, y, z = w[:i], w[i : i + j], w[i + j :]
                vy = entries[y] if y else default
                if vy is EPSILON and y:
                    key = _index_key(chain, x, y, z)
                    best = _take(best, key, lambda x=x, y=y, z=z: _subst_eps_witness(x, y, z))
                    results.append(((x, y, z), None))
                    continue
                sub = x + _wrap(vy) + z
                results.append(((x, y, z), entries[sub] if sub else default))
        m = len(results)
        cases += m * (m - 1) // 2
        vals = [r for r in results if r[1] is not None]
        for (dec1, v1), (dec2, v2) in combinations(vals, 2):
            if v1 != v2:
                key = _index_key(chain, *dec1, *dec2)
                best = _take(
                    best,
                    key,
                    lambda dec1=dec1, dec2=dec2, v1=v1, v2=v2: Witness(
                        parts=(
                            ("x", dec1[0]), ("y", dec1[1]), ("z", dec1[2]),
                            ("x'", dec2[0]), ("y'", dec2[1]), ("z'", dec2[2]),
                        ),
                        values=(("F(x,F(y),z)", v1), ("F(x',F(y'),z')", v2)),
                    ),
                )
    return _verdict("associative_A2", fn, cases, best)


def _check_a3(fn: TableFn) -> Verdict:
    """F(x, y) = F(F(x), F(y)) over all pairs within the arity bound."""
    entries = fn.entries
    default = fn.default
    chain = fn.domain
    by_len = _tuples_by_len(chain.elements, fn.max_arity)
    cases = 0
    best = None
    for total in range(fn.max_arity + 1):
        for i in range(total + 1):
            for x in by_len[i]:
                vx = entries[x] if x else default
                for y in by_len[total - i]:
                    cases += 1
                    vy = entries[y] if y else default
                    if (vx is EPSILON and x) or (vy is EPSILON and y):
                        key = _index_key(chain, x, y)
                        best = _take(
                            best,
                            key,
                            lambda x=x, y=y, vx=vx, vy=vy: Witness(
                                parts=(("x", x), ("y", y)),
                                values=(("F(x)", vx), ("F(y)", vy)),
                                note="substituted-epsilon: nonempty block evaluates to ε",
                            ),
                        )
                        continue
                    lhs = entries[x + y] if x + y else default
                    sub = _wrap(vx) + _wrap(vy)
                    rhs = entries[sub] if sub else default
                    if lhs != rhs:
                        key = _index_key(chain, x, y)
                        best = _take(
                            best,
                            key,
                            lambda x=x, y=y, lhs=lhs, rhs=rhs: Witness(
                                parts=(("x", x), ("y", y)),
                                values=(("F(x,y)", lhs), ("F(F(x),F(y))", rhs)),
                            ),
                        )
    return _verdict("associative_A3", fn, cases, best)


# ---------------------------------------------------------------------------
# Preassociativity (two equivalent forms)
# ---------------------------------------------------------------------------


def check_preassociative(fn: TableFn, form: str = "P1") -> Verdict:
    """Preassociativity via contexts (P1) or via the two-equality form (P2).

    Works for arbitrary codomains.  Tuples are grouped into F-equivalence
    classes first, so the cost is quadratic in class sizes instead of the
    naive quadruple loop.
    """
    if form == "P1":
        return _check_p1(fn)
    if form == "P2":
        return _check_p2(fn)
    raise ValueError(f"unknown preassociativity form {form!r}")


def _value_classes(fn: TableFn):
    """Tuples of length 0..N grouped by value, in canonical tuple order."""
    groups = {}
    for t in _all_tuples(fn.domain.elements, fn.max_arity):
        v = fn.entries[t] if t else fn.default
        groups.setdefault(v, []).append(t)
    return groups


def _check_p1(fn: TableFn) -> Verdict:
    entries = fn.entries
    default = fn.default
    chain = fn.domain
    n = fn.max_arity
    elements = chain.elements
    cases = 0
    best = None
    for group in _value_classes(fn).values():
        if len(group) < 2:
            continue
        for a in range(len(group) - 1):
            y = group[a]
            for b in range(a + 1, len(group)):
                yp = group[b]  # canonical order: len(y) <= len(yp)
                budget = n - len(yp)
                if budget < 0:
                    continue
                for x, z in _context_pairs(elements, budget):
                    cases += 1
                    t1 = x + y + z
                    t2 = x + yp + z
                    lhs = entries[t1] if t1 else default
                    rhs = entries[t2] if t2 else default
                    if lhs != rhs:
                        key = _index_key(chain, x, y, yp, z)
                        best = _take(
                            best,
                            key,
                            lambda x=x, y=y, yp=yp, z=z, lhs=lhs, rhs=rhs: Witness(
                                parts=(("x", x), ("y", y), ("y'", yp), ("z", z)),
                                values=(("F(x,y,z)", lhs), ("F(x,y',z)", rhs)),
                            ),
                        )
    return _verdict("preassociative_P1", fn, cases, best)


def _check_p2(fn: TableFn) -> Verdict:
    """The pair of values (F(x), F(y)) must determine F(x, y)."""
    entries = fn.entries
    default = fn.default
    chain = fn.domain
    by_len = _tuples_by_len(chain.elements, fn.max_arity)
    buckets = {}  # (F(x), F(y)) -> {F(x,y): minimal (x, y)}
    cases = 0
    for total in range(fn.max_arity + 1):
        for i in range(total + 1):
            for x in by_len[i]:
                vx = entries[x] if x else default
                for y in by_len[total - i]:
                    cases += 1
                    vy = entries[y] if y else default
                    t = x + y
                    v = entries[t] if t else default
                    bucket = buckets.setdefault((vx, vy), {})
                    if v not in bucket:
                        bucket[v] = (x, y)
    best = None
    for bucket in buckets.values():
        if len(bucket) < 2:
            continue
        for (v1, p1), (v2, p2) in combinations(bucket.items(), 2):
            first, second = sorted((p1, p2), key=lambda p: _index_key(chain, *p))
            key = _index_key(chain, *first, *second)
            vf = entries[first[0] + first[1]] if first[0] + first[1] else default
            vs = entries[second[0] + second[1]] if second[0] + second[1] else default
            best = _take(
                best,
                key,
                lambda first=first, second=second, vf=vf, vs=vs: Witness(
                    parts=(
                        ("x", first[0]), ("y", first[1]),
                        ("x'", second[0]), ("y'", second[1]),
                    ),
                    values=(("F(x,y)", vf), ("F(x',y')", vs)),
                ),
            )
    return _verdict("preassociative_P2", fn, cases, best)


# ---------------------------------------------------------------------------
# Idempotence family
# ---------------------------------------------------------------------------


def check_unarily_idempotent(fn: TableFn) -> Verdict:
    """The unary part is the identity."""
    _require_operation(fn, "unarily_idempotent")
    best = None
    cases = 0
    for u in fn.domain.elements:
        cases += 1
        v = fn.entries[(u,)]
        if v != u:
            key = _index_key(fn.domain, (u,))
            best = _take(
                best,
                key,
                lambda u=u, v=v: Witness(parts=(("x", (u,)),), values=(("F(x)", v),)),
            )
            break
    return _verdict("unarily_idempotent", fn, cases, best)


def check_unarily_range_idempotent(fn: TableFn) -> Verdict:
    """The unary part fixes every attained value: F1 ∘ Fb = Fb."""
    _require_operation(fn, "unarily_range_idempotent")
    entries = fn.entries
    default = fn.default
    best = None
    cases = 0
    for t in _all_tuples(fn.domain.elements, fn.max_arity):
        if not t:
            continue
        cases += 1
        v = entries[t]
        fv = default if v is EPSILON else entries[(v,)]
        if fv != v:
            key = _index_key(fn.domain, t)
            best = _take(
                best,
                key,
                lambda t=t, v=v, fv=fv: Witness(
                    parts=(("x", t),),
                    values=(("F(x)", v), ("F(F(x))", fv)),
                ),
            )
            break
    return _verdict("unarily_range_idempotent", fn, cases, best)


def check_unarily_quasi_range_idempotent(fn: TableFn) -> Verdict:
    """The unary part attains every value the whole function attains."""
    ran1, ranflat = ranges(fn)
    best = None
    cases = 0
    for t in _all_tuples(fn.domain.elements, fn.max_arity):
        if not t:
            continue
        cases += 1
        v = fn.entries[t]
        if v not in ran1:
            key = _index_key(fn.domain, t)
            best = _take(
                best,
                key,
                lambda t=t, v=v: Witness(
                    parts=(("x", t),),
                    values=(("F(x)", v),),
                    note="value outside ran(F1)",
                ),
            )
            break
    return _verdict("unarily_quasi_range_idempotent", fn, cases, best)


def check_range_idempotent(fn: TableFn) -> Verdict:
    """F(k · F(x)) = F(x) for every tuple x and every repetition count k <= N."""
    _require_operation(fn, "range_idempotent")
    entries = fn.entries
    default = fn.default
    best = None
    cases = 0
    seen = set()
    for t in _all_tuples(fn.domain.elements, fn.max_arity):
        v = entries[t] if t else default
        if v in seen:
            continue
        seen.add(v)
        if v is EPSILON:
            cases += 1
            if default is not EPSILON:
                key = _index_key(fn.domain, t) + (1,)
                best = _take(
                    best,
                    key,
                    lambda t=t: Witness(
                        parts=(("x", t),),
                        values=(("F(x)", EPSILON), ("F(k·F(x))", default)),
                        scalars=(("k", 1),),
                    ),
                )
            continue
        for k in range(1, fn.max_arity + 1):
            cases += 1
            rep = entries[(v,) * k]
            if rep != v:
                key = _index_key(fn.domain, t)
                best = _take(
                    best,
                    key + (k,),
                    lambda t=t, v=v, k=k, rep=rep: Witness(
                        parts=(("x", t),),
                        values=(("F(x)", v), ("F(k·F(x))", rep)),
                        scalars=(("k", k),),
                    ),
                )
                break
    return _verdict("range_idempotent", fn, cases, best)


def check_idempotent(fn: TableFn) -> Verdict:
    """F_n(x, ..., x) = x at every arity."""
    _require_operation(fn, "idempotent")
    best = None
    cases = 0
    for n in range(1, fn.max_arity + 1):
        for u in fn.domain.elements:
            cases += 1
            v = fn.entries[(u,) * n]
            if v != u:
                key = (n, fn.domain.index(u))
                best = _take(
                    best,
                    key,
                    lambda u=u, n=n, v=v: Witness(
                        parts=(("x", (u,) * n),),
                        values=(("F(x)", v),),
                        scalars=(("arity", n),),
                    ),
                )
    return _verdict("idempotent", fn, cases, best)


def check_replication_invariant(fn: TableFn) -> Verdict:
    """F(k · x) = F(x) whenever the replicated tuple still fits the arity."""
    entries = fn.entries
    best = None
    cases = 0
    for t in _all_tuples(fn.domain.elements, fn.max_arity):
        if not t:
            continue
        v = entries[t]
        for k in range(2, fn.max_arity // len(t) + 1):
            cases += 1
            rep = entries[t * k]
            if rep != v:
                key = _index_key(fn.domain, t) + (k,)
                best = _take(
                    best,
                    key,
                    lambda t=t, k=k, v=v, rep=rep: Witness(
                        parts=(("x", t),),
                        values=(("F(x)", v), ("F(k·x)", rep)),
                        scalars=(("k", k),),
                    ),
                )
                break
    return _verdict("replication_invariant", fn, cases, best)


def check_replication_preinvariant(fn: TableFn) -> Verdict:
    """Equal values replicate equally: F(x) = F(y) implies F(k·x) = F(k·y)."""
    entries = fn.entries
    default = fn.default
    chain = fn.domain
    n = fn.max_arity
    best = None
    cases = 0
    for group in _value_classes(fn).values():
        if len(group) < 2:
            continue
        for x, y in combinations(group, 2):
            kmax = n
            if x:
                kmax = min(kmax, n // len(x))
            if y:
                kmax = min(kmax, n // len(y))
            for k in range(2, kmax + 1):
                cases += 1
                tx = x * k
                ty = y * k
                vx = entries[tx] if tx else default
                vy = entries[ty] if ty else default
                if vx != vy:
                    key = _index_key(chain, x, y) + (k,)
                    best = _take(
                        best,
                        key,
                        lambda x=x, y=y, k=k, vx=vx, vy=vy: Witness(
                            parts=(("x", x), ("y", y)),
                            values=(("F(k·x)", vx), ("F(k·y)", vy)),
                            scalars=(("k", k),),
                        ),
                    )
                    break
    return _verdict("replication_preinvariant", fn, cases, best)


def check_idempotence_suite(fn: TableFn) -> dict:
    """All idempotence-family verdicts applicable to this function.

    Checks that compare values with domain elements need an operation and
    are omitted for functions into foreign codomains.
    """
    out = {}
    for prop in _SUITE_IDEMPOTENCE:
        if prop in OPERATION_ONLY and not fn.is_operation:
            continue
        out[prop] = CHECKERS[prop](fn)
    return out


# ---------------------------------------------------------------------------
# Order-theoretic properties
# ---------------------------------------------------------------------------


def _codomain_index(fn: TableFn):
    return {v: i for i, v in enumerate(fn.codomain)}


def check_nondecreasing(fn: TableFn) -> Verdict:
    return _check_monotone(fn, "nondecreasing")


def check_nonincreasing(fn: TableFn) -> Verdict:
    return _check_monotone(fn, "nonincreasing")


def _check_monotone(fn: TableFn, prop: str) -> Verdict:
    """Monotone in each argument; only adjacent chain elements are compared."""
    entries = fn.entries
    chain = fn.domain
    cod = _codomain_index(fn)
    best = None
    cases = 0
    want_leq = prop == "nondecreasing"
    for n in range(1, fn.max_arity + 1):
        for t in chain.tuples(n):
            for i in range(n):
                s = chain.successor(t[i])
                if s is None:
                    continue
                cases += 1
                t2 = t[:i] + (s,) + t[i + 1 :]
                a, b = cod[entries[t]], cod[entries[t2]]
                bad = a > b if want_leq else a < b
                if bad:
                    key = _index_key(chain, t, t2) + (i,)
                    best = _take(
                        best,
                        key,
                        lambda t=t, t2=t2, i=i: Witness(
                            parts=(("x", t), ("x'", t2)),
                            values=(("F(x)", entries[t]), ("F(x')", entries[t2])),
                            scalars=(("position", i),),
                        ),
                    )
    return _verdict(prop, fn, cases, best)


def check_symmetric(fn: TableFn) -> Verdict:
    """Invariant under argument permutations, via sorted-tuple canonicalization."""
    entries = fn.entries
    chain = fn.domain
    idx = chain.index
    best = None
    cases = 0
    for n in range(2, fn.max_arity + 1):
        for t in chain.tuples(n):
            cases += 1
            canon = tuple(sorted(t, key=idx))
            if entries[t] != entries[canon]:
                key = _index_key(chain, t)
                best = _take(
                    best,
                    key,
                    lambda t=t, canon=canon: Witness(
                        parts=(("x", t), ("sorted(x)", canon)),
                        values=(("F(x)", entries[t]), ("F(sorted(x))", entries[canon])),
                    ),
                )
    return _verdict("symmetric", fn, cases, best)


def check_convex_sections(fn: TableFn) -> Verdict:
    """Every one-argument section has a gap-free image in the codomain order."""
    entries = fn.entries
    chain = fn.domain
    cod = _codomain_index(fn)
    codomain = fn.codomain
    best = None
    cases = 0
    by_len = _tuples_by_len(chain.elements, fn.max_arity)
    for n in range(1, fn.max_arity + 1):
        for i in range(n):
            for pre in by_len[i]:
                for post in by_len[n - 1 - i]:
                    cases += 1
                    image = {cod[entries[pre + (u,) + post]] for u in chain.elements}
                    lo, hi = min(image), max(image)
                    missing = [j for j in range(lo, hi + 1) if j not in image]
                    if missing:
                        key = (n, _index_key(chain, pre, post), i, missing[0])
                        best = _take(
                            best,
                            key,
                            lambda pre=pre, post=post, i=i, n=n, missing=missing: Witness(
                                parts=(("y", pre), ("z", post)),
                                values=(("missing", codomain[missing[0]]),),
                                scalars=(("arity", n), ("position", i)),
                                note="section image has a gap",
                            ),
                        )
    return _verdict("convex_sections", fn, cases, best)


def check_order_properties(fn: TableFn) -> dict:
    """Monotonicity, symmetry, and section convexity verdicts."""
    return {
        "nondecreasing": check_nondecreasing(fn),
        "nonincreasing": check_nonincreasing(fn),
        "symmetric": check_symmetric(fn),
        "convex_sections": check_convex_sections(fn),
    }


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

CHECKERS = {
    "standard": check_standard,
    "epsilon_standard": check_epsilon_standard,
    "associative_A1": lambda fn: check_associative(fn, "A1"),
    "associative_A2": lambda fn: check_associative(fn, "A2"),
    "associative_A3": lambda fn: check_associative(fn, "A3"),
    "preassociative_P1": lambda fn: check_preassociative(fn, "P1"),
    "preassociative_P2": lambda fn: check_preassociative(fn, "P2"),
    "unarily_idempotent": check_unarily_idempotent,
    "unarily_range_idempotent": check_unarily_range_idempotent,
    "unarily_quasi_range_idempotent": check_unarily_quasi_range_idempotent,
    "range_idempotent": check_range_idempotent,
    "idempotent": check_idempotent,
    "replication_invariant": check_replication_invariant,
    "replication_preinvariant": check_replication_preinvariant,
    "nondecreasing": check_nondecreasing,
    "nonincreasing": check_nonincreasing,
    "symmetric": check_symmetric,
    "convex_sections": check_convex_sections,
}


def run_checks(fn: TableFn, names) -> dict:
    """Run the named checkers in the canonical property order."""
    unknown = [n for n in names if n not in CHECKERS]
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(unknown)}")
    selected = set(names)
    return {n: CHECKERS[n](fn) for n in PROPERTY_NAMES if n in selected}
