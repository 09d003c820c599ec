"""Generated families: quasi-sums, Ling-type operations, seeds, medians."""

import math
from itertools import product

import pytest

from preassoc.checks import (
    check_associative,
    check_convex_sections,
    check_nondecreasing,
    check_nonincreasing,
    check_preassociative,
    check_range_idempotent,
    check_symmetric,
    check_unarily_quasi_range_idempotent,
)
from preassoc.core import Chain, Interval, eval_generated, tabulate
from preassoc.errors import AxiomError, GeneratorError, GridClosureError
from preassoc.factorize import factorize
from preassoc.families import (
    MedianParams,
    lift_tnorm,
    make_ling,
    make_median_family,
    make_quasi_sum,
    make_variadic_seed,
    median_formula,
)
from preassoc.quasi_inverse import FiniteMap


class TestQuasiSum:
    def test_log_exp_is_product(self):
        gen = make_quasi_sum(
            math.log, math.exp, Interval(0, 1, lo_open=True), Interval(hi=0.0)
        )
        assert eval_generated(gen, (0.5, 0.5)) == pytest.approx(0.25, abs=1e-12)

    def test_identity_pair_is_summation(self):
        gen = make_quasi_sum(lambda x: x, lambda t: t, Interval(), Interval())
        assert eval_generated(gen, (1.0, 2.0, 3.5)) == pytest.approx(6.5, abs=1e-12)

    def test_cubed_psi_breaks_sampled_associativity(self):
        gen = make_quasi_sum(lambda x: x, lambda t: t ** 3, Interval(), Interval())
        assert eval_generated(gen, (1.0, 2.0)) == pytest.approx(27.0, abs=1e-12)
        # preassociativity survives tabulation, plain associativity does not
        fn = tabulate(gen, [0.0, 1.0, 2.0], 2)
        assert check_preassociative(fn, "P2").holds
        lhs = eval_generated(gen, (1.0, 2.0))
        rhs = eval_generated(gen, (eval_generated(gen, (1.0, 2.0)),))
        assert abs(lhs - rhs) > 1.0  # psi is not the identity on its range

    def test_rejects_nonmonotone_phi(self):
        with pytest.raises(GeneratorError):
            make_quasi_sum(lambda x: x * x, lambda t: t, Interval(-1, 1), Interval())

    def test_rejects_bad_j_form(self):
        with pytest.raises(GeneratorError):
            make_quasi_sum(
                lambda x: x, lambda t: t, Interval(0, 1), Interval(-2.0, 3.0)
            )
        with pytest.raises(GeneratorError):
            # half-line on the wrong side: upper endpoint must be <= 0
            make_quasi_sum(lambda x: x, lambda t: t, Interval(0, 1), Interval(hi=2.0))


class TestLing:
    def test_lukasiewicz_shape(self):
        gen = make_ling(lambda x: 1 - x, lambda t: 1 - t, 0, 1)
        # direct arithmetic: 1 - min((1-0.7) + (1-0.7), 1) = 0.4
        assert eval_generated(gen, (0.7, 0.7)) == pytest.approx(0.4, abs=1e-12)

    def test_neutral_at_b_on_grid(self):
        gen = make_ling(lambda x: 1 - x, lambda t: 1 - t, 0, 1)
        for i in range(11):
            x = i / 10
            assert eval_generated(gen, (1.0, x)) == pytest.approx(
                eval_generated(gen, (x,)), abs=1e-12
            )

    def test_interior_diagonal_drops(self):
        gen = make_ling(lambda x: 1 - x, lambda t: 1 - t, 0, 1)
        for i in range(1, 10):
            x = i / 10  # interior points only
            assert eval_generated(gen, (x, x)) < eval_generated(gen, (x,))

    def test_phi_endpoint_enforced(self):
        with pytest.raises(GeneratorError):
            make_ling(lambda x: 2 - x, lambda t: t, 0, 1)  # phi(1) = 1 != 0

    def test_phi_must_decrease(self):
        with pytest.raises(GeneratorError):
            make_ling(lambda x: x - 1, lambda t: t, 0, 1)


QUARTER_GRID = [0, 0.25, 0.5, 0.75, 1]


class TestVariadicSeeds:
    def test_lukasiewicz_triple(self):
        fn = make_variadic_seed("tnorm", "lukasiewicz", QUARTER_GRID, 3)
        # max(0, max(0, .75 + .75 - 1) + .75 - 1) = 0.25
        assert fn.eval(("0.75", "0.75", "0.75")) == "0.25"

    def test_neutral_law_on_grid(self):
        fn = make_variadic_seed("tnorm", "lukasiewicz", QUARTER_GRID, 2)
        for s in fn.domain.elements:
            assert fn.eval(("1", s)) == s

    def test_drastic_associative_at_three(self):
        fn = make_variadic_seed("tnorm", "drastic", [0, 0.5, 1], 3)
        assert check_associative(fn, "A1").holds

    def test_unary_part_is_identity(self):
        fn = make_variadic_seed("tnorm", "min", QUARTER_GRID, 3)
        assert all(fn.entries[(s,)] == s for s in fn.domain.elements)

    def test_tconorms(self):
        for name in ("max", "bounded-sum"):
            fn = make_variadic_seed("tconorm", name, QUARTER_GRID, 3)
            assert check_associative(fn, "A1").holds
            assert all(fn.eval(("0", s)) == s for s in fn.domain.elements)

    def test_uninorm_needs_interior_neutral(self):
        fn = make_variadic_seed("uninorm", "idempotent-min", QUARTER_GRID, 3, e=0.5)
        assert check_associative(fn, "A1").holds
        assert all(fn.eval(("0.5", s)) == s for s in fn.domain.elements)
        with pytest.raises(ValueError):
            make_variadic_seed("uninorm", "idempotent-min", QUARTER_GRID, 2, e=1.0)
        with pytest.raises(ValueError):
            make_variadic_seed("uninorm", "idempotent-min", QUARTER_GRID, 2)

    def test_grid_closure_enforced(self):
        with pytest.raises(GridClosureError):
            make_variadic_seed("tnorm", "product", [0, 0.5, 1], 2)

    def test_axiom_failure_is_named(self):
        # a non-symmetric binary operation dressed as a t-norm
        def projection(x, y):
            return x

        with pytest.raises(AxiomError) as err:
            make_variadic_seed("tnorm", projection, [0, 0.5, 1], 2)
        assert err.value.axiom in ("neutral", "symmetric")

    def test_chain_carrier(self, chain3):
        fn = make_variadic_seed("tnorm", lambda u, v: chain3.meet(u, v), chain3, 3)
        assert check_associative(fn, "A1").holds
        assert fn.eval(("2", "0")) == "0"

    def test_catalog_min_respects_chain_order(self):
        # listing order b < a disagrees with string comparison
        weird = Chain(("b", "a"))
        fn = make_variadic_seed("tnorm", "min", weird, 2)
        assert fn.eval(("a", "b")) == "b"
        with pytest.raises(ValueError):
            make_variadic_seed("tnorm", "product", weird, 2)


class TestLift:
    def test_negation_flips_direction(self):
        seed = make_variadic_seed("tnorm", "min", QUARTER_GRID, 3)
        lifted = lift_tnorm(lambda x: -x, seed)
        assert check_nonincreasing(lifted).holds
        assert check_symmetric(lifted).holds
        # F2(1, x) = F1(x) = -x
        for s in seed.domain.elements:
            assert lifted.eval(("1", s)) == lifted.eval((s,))

    def test_identity_lift_is_seed(self):
        seed = make_variadic_seed("tnorm", "min", QUARTER_GRID, 2)
        assert lift_tnorm(lambda x: x, seed).entries == seed.entries

    def test_square_lift_factorizes_back(self):
        seed = make_variadic_seed("tnorm", "lukasiewicz", QUARTER_GRID, 3)
        lifted = lift_tnorm(lambda x: x * x, seed)
        fac = factorize(lifted)
        assert fac.H.entries == seed.entries
        assert check_preassociative(lifted, "P1").holds
        assert check_unarily_quasi_range_idempotent(lifted).holds

    def test_rejects_nonmonotone(self):
        seed = make_variadic_seed("tnorm", "min", QUARTER_GRID, 2)
        with pytest.raises(GeneratorError):
            lift_tnorm(lambda x: (x - 0.5) ** 2, seed)


class TestMedianFamily:
    def test_c_median_behavior(self, chain4):
        fn = make_median_family(MedianParams("0", "3", "1", "1"), chain4, 3)
        # H2(2, 3) = med(0, (1^2) v med(2, 1, 3) v (1^3), 3) = med(0, 2, 3) = 2
        assert fn.eval(("2", "3")) == "2"
        # c-median shape: med(min, 1, max) on the full window
        for t in product(chain4.elements, repeat=3):
            lo, hi = chain4.min_of(t), chain4.max_of(t)
            assert fn.eval(t) == chain4.med(lo, "1", hi)

    def test_degenerate_window_is_constant(self, chain4):
        fn = make_median_family(MedianParams("1", "1", "1", "1"), chain4, 2)
        assert set(fn.entries.values()) == {"1"}

    def test_symmetry_iff_c_equals_d(self, chain4):
        sym = make_median_family(MedianParams("0", "3", "2", "2"), chain4, 3)
        asym = make_median_family(MedianParams("0", "3", "2", "1"), chain4, 3)
        assert check_symmetric(sym).holds
        assert not check_symmetric(asym).holds

    def test_defining_property_suite(self, chain4):
        fn = make_median_family(MedianParams("0", "3", "1", "2"), chain4, 3)
        assert check_associative(fn, "A1").holds
        assert check_range_idempotent(fn).holds
        assert check_nondecreasing(fn).holds
        assert check_convex_sections(fn).holds

    def test_params_validation(self, chain4):
        with pytest.raises(ValueError):
            MedianParams("2", "1", "1", "1").validate(chain4)
        with pytest.raises(ValueError):
            MedianParams("1", "2", "0", "2").validate(chain4)  # a > c^d
        with pytest.raises(ValueError):
            make_median_family(MedianParams("2", "1", "1", "1"), chain4, 2)

    def test_f_lift_keeps_conclusions(self, chain4):
        f = FiniteMap(
            ("0", "1", "2", "3"),
            ("p", "q", "r", "s"),
            {"0": "p", "1": "q", "2": "r", "3": "s"},
        )
        fn = make_median_family(MedianParams("0", "3", "1", "2"), chain4, 3, f=f)
        assert check_preassociative(fn, "P1").holds
        assert check_unarily_quasi_range_idempotent(fn).holds
        assert check_nondecreasing(fn).holds
        assert check_convex_sections(fn).holds

    def test_f_must_be_increasing_with_convex_range(self, chain4):
        window = ("0", "1", "2", "3")
        decreasing = FiniteMap(window, ("p", "q", "r", "s"),
                               {"0": "s", "1": "r", "2": "q", "3": "p"})
        with pytest.raises(GeneratorError):
            make_median_family(MedianParams("0", "3", "1", "1"), chain4, 2, f=decreasing)
        gappy = FiniteMap(window, ("p", "q", "r", "s", "t"),
                          {"0": "p", "1": "q", "2": "r", "3": "t"})
        with pytest.raises(GeneratorError):
            make_median_family(MedianParams("0", "3", "1", "1"), chain4, 2, f=gappy)

    def test_formula_matches_unary_median(self, chain4):
        params = MedianParams("1", "2", "1", "2")
        for u in chain4.elements:
            assert median_formula(chain4, params, (u,)) == chain4.med("1", u, "2")
