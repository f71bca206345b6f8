"""
Acceptance suite: ten end-to-end checks, one per shipped guarantee, each
printing a `PASS`/`FAIL` line (run with `pytest -s` to see them).

Check 2 is known-red and kept that way on purpose: it pins a published
reference weight table for one strongly non-uniform partition whose values
are internally inconsistent -- no rule with those weights can integrate x^2
exactly (they miss it by ~0.1), while quadratic exactness on every
partition is the defining property of this construction (and is what
checks 3, 4 and 8 verify).  The table is reproducible only by replacing
the exact basis-spline integrals (h_{i-1}+h_i+h_{i+1})/3 with the pattern
(h_{i-1}+4h_i+h_{i+1})/6, which agrees on uniform grids but is wrong off
them.  We keep the assertion as documentation of that divergence; the
correct weights for the same partition are pinned in test_quadrature.py.
"""
import contextlib
import math
from fractions import Fraction

import numpy as np

from splinequad import (PeanoKernel, apply_rule, build_qi, build_qi_rule,
                        builtin, extrapolated_qs, kernel_eval,
                        kernel_piece_integrals, make_from_knots,
                        make_symmetric_chebyshev, make_uniform, mesh_ratio,
                        operator_norm_estimate, oracle_integral,
                        sign_change_points, simpson, verify_sign_structure,
                        weight_bound_report)
from splinequad.quadrature import signed_error

X7 = [-1, -0.9, -0.3, -0.2, 0.5, 0.6, 0.95, 1.0]

PRINTED_TABLES = {
    1: [(64, -.86e-7, 1.23e-7, 1.13e-9),
        (128, -.54e-8, .76e-8, .16e-10),
        (256, -.34e-9, .47e-9, -.40e-12),
        (512, -.21e-10, .29e-10, -.52e-13),
        (1024, -.13e-11, .18e-11, -.33e-14)],
    2: [(64, -.19e-5, .23e-5, -.14e-6),
        (128, -.11e-6, .14e-6, -.37e-8),
        (256, -.67e-8, .90e-8, -.11e-9),
        (512, -.41e-9, .56e-9, -.35e-11),
        (1024, -.25e-10, .35e-10, -.11e-12)],
    3: [(256, -.33e-10, .46e-10, -.44e-12),
        (512, -.21e-11, .28e-11, -.13e-13),
        (1024, -.13e-12, .18e-12, -.42e-15),
        (2048, -.80e-14, .11e-13, -.13e-16),
        (4096, -.50e-15, .69e-15, -.41e-18)],
}


@contextlib.contextmanager
def reported(label):
    ok = False
    try:
        yield
        ok = True
    finally:
        print('acceptance %-44s %s' % (label, 'PASS' if ok else 'FAIL'))


def random_partition(rng, n_lo, n_hi, decades):
    n = int(rng.integers(n_lo, n_hi + 1))
    h = 10.0 ** rng.uniform(0.0, decades, n)
    knots = np.concatenate([[0.0], np.cumsum(h)])
    return make_from_knots(knots / knots[-1])


def split_exact(fr):
    hi = float(fr)
    return hi, float(fr - Fraction(hi))


#==============================================================================
def test_criterion_01_uniform_weights():
    with reported('1 uniform closed-form weights (n=10)'):
        rule = build_qi_rule(make_uniform(0, 1, 10))
        edge = [1.0 / 9.0, 7.0 / 8.0, 73.0 / 72.0]
        ref = 0.1 * np.array(edge + [1.0] * 6 + edge[::-1])
        assert np.max(np.abs(rule.weights - ref) / ref) <= 1e-15


def test_criterion_02_strongly_nonuniform_reference_weights():
    # known-red: see module docstring
    with reported('2 non-uniform reference weight table'):
        p = make_from_knots(X7)
        rule = build_qi_rule(p)
        rep = weight_bound_report(rule, p)
        printed = np.array([0.0146, 0.0122, 0.7463, -0.0622, 0.8780,
                            -0.0257, 0.4287, 0.0007, 0.0074])
        assert np.max(np.abs(rule.weights - printed)) <= 5e-4, \
            'reference table weights are not integrals of the fundamental ' \
            'functions (they fail quadratic exactness by ~0.1)'
        assert rep.negative_indices == (3, 5)
        assert 2.16 <= rep.sum_abs <= 2.18
        assert abs(mesh_ratio(p) - 7.0) <= 1e-12
        assert abs(rep.bound_r - 81.0 / 16.0) <= 1e-12


def test_criterion_03_polynomial_exactness():
    with reported('3 polynomial exactness degrees'):
        rng = np.random.default_rng(101)
        for _ in range(100):
            p = random_partition(rng, 5, 50, 1.0)   # mesh ratio <= 10
            rule = build_qi_rule(p)
            for k in range(3):
                e = 1.0 / (k + 1) - apply_rule(rule, lambda x: x ** k)
                assert abs(e) <= 1e-12
        for n in range(1, 13):
            rule = build_qi_rule(make_uniform(0, 1, n))
            assert abs(0.25 - apply_rule(rule, lambda x: x ** 3)) <= 1e-12
        for n in range(2, 13):
            rule = build_qi_rule(make_symmetric_chebyshev(0, 1, n))
            assert abs(0.25 - apply_rule(rule, lambda x: x ** 3)) <= 1e-12


def test_criterion_04_error_tables():
    with reported('4 published error tables (3 examples)'):
        for ex, rows in PRINTED_TABLES.items():
            f = builtin('f%d' % ex)
            exact = f.exact_integral
            for n, *printed in rows:
                p = make_uniform(f.a, f.b, n)
                computed = (exact - apply_rule(build_qi_rule(p), f),
                            exact - simpson(p, f),
                            exact - extrapolated_qs(p, f))
                for want, got in zip(printed, computed):
                    if abs(want) >= 1e-12:
                        unit = 10.0 ** (math.floor(math.log10(abs(want))) - 1)
                        assert want - 2 * unit <= got <= want + 2 * unit, \
                            (ex, n, want, got)
                    else:
                        assert abs(got) <= 5e-12, (ex, n, want, got)


def test_criterion_05_kernel_pointwise():
    with reported('5 kernel values, symmetry, sign structure'):
        k = PeanoKernel(16)
        h = k.h
        for t, want in ((h / 3, -h**4 / 972), (h / 2, h**4 / 576),
                        (1.5 * h, h**4 / 64), (2 * h, h**4 / 32)):
            assert abs(kernel_eval(k, t) - want) <= 1e-10 * abs(want)
        r1, r2 = sign_change_points(k)
        assert abs(kernel_eval(k, r1)) <= 1e-12 * h**4
        assert abs(kernel_eval(k, r2)) <= 1e-12 * h**4
        for t in np.linspace(0.0, 1.0, 10000):
            t = float(t)
            assert abs(kernel_eval(k, t) - kernel_eval(k, 1.0 - t)) <= 1e-13
        assert verify_sign_structure(k, 10000).ok


def test_criterion_06_kernel_piece_integrals():
    with reported('6 kernel piece integrals (n=8,16)'):
        for n in (8, 16):
            k = PeanoKernel(n)
            h5 = k.h ** 5
            got = kernel_piece_integrals(k)
            for g, want in ((got.neg_lobe, -64.0 * h5 / 295245.0),
                            (got.first_partial, 1631.0 * h5 / 37791360.0),
                            (got.first_full, 59.0 * h5 / 2880.0),
                            (got.interior, 23.0 * h5 / 960.0)):
                assert abs(g - want) <= 1e-12 * abs(want)


def test_criterion_07_quartic_error_constants():
    with reported('7 error constants on a pure quartic'):
        f = lambda x: x ** 4
        exact = split_exact(Fraction(1, 5))
        for n in (8, 16, 32):
            h = 1.0 / n
            p = make_uniform(0, 1, n)
            e_q = signed_error(build_qi_rule(p), f, exact)
            want_q = 24 * (23.0 / 5760.0) * h**4 - 24 * (1.0 / 192.0) * h**5
            assert abs(e_q - want_q) <= 1e-10 * abs(want_q)
            from splinequad import build_simpson_rule
            e_s = signed_error(build_simpson_rule(p), f, exact)
            want_s = -24.0 * h**4 / 180.0
            assert abs(e_s - want_s) <= 1e-10 * abs(want_s)
            e_qs = 0.2 - extrapolated_qs(p, f)
            assert abs(e_qs) <= 24.0 * h**5


def test_criterion_08_convergence_orders():
    with reported('8 convergence orders for exp'):
        exact = math.e - 1.0
        ns = (8, 16, 32, 64, 128)
        errors = {'q': [], 's': [], 'qs': []}
        for n in ns:
            p = make_uniform(0, 1, n)
            e_q = exact - apply_rule(build_qi_rule(p), math.exp)
            e_s = exact - simpson(p, math.exp)
            errors['q'].append(e_q)
            errors['s'].append(e_s)
            errors['qs'].append(exact - extrapolated_qs(p, math.exp))
            assert math.copysign(1, e_q) == -math.copysign(1, e_s)

        def order(vals):
            pts = [(n, abs(e)) for n, e in zip(ns, vals) if abs(e) > 1e-12]
            x = np.log([1.0 / n for n, _ in pts])
            return float(np.polyfit(x, np.log([e for _, e in pts]), 1)[0])

        assert 3.9 <= order(errors['q']) <= 4.1
        assert 3.9 <= order(errors['s']) <= 4.1
        assert order(errors['qs']) >= 4.7


def test_criterion_09_operator_norms():
    with reported('9 operator norm estimates'):
        q = build_qi(make_uniform(0, 1, 20))
        assert abs(operator_norm_estimate(q, 40) - 305.0 / 207.0) <= 1e-3
        rng = np.random.default_rng(202)
        for _ in range(50):
            p = random_partition(rng, 2, 40, 1.7)
            assert operator_norm_estimate(build_qi(p), 8) <= 3.0 + 1e-12


def test_criterion_10_oracle_self_test():
    with reported('10 reference integrator self-test'):
        for name in ('f1', 'f2', 'f3'):
            f = builtin(name)
            assert abs(oracle_integral(f, 1e-13) - f.exact_integral) <= 1e-12
