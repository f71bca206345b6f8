"""
Test integrands and a high-accuracy reference integrator.

The three builtins are classic quadrature stress tests: a function with an
endpoint derivative singularity, a sum of two sharp Lorentzian-like peaks,
and a Runge-type rational on [-1, 1].  Each carries its exact integral to
20 significant digits (closed form where one exists), so quadrature errors
can be measured directly.

`oracle_integral` produces reference values for everything else by adaptive
bisection with an embedded Gauss-Legendre pair (12 and 24 points, so the
local rule is exact through degree 23).  It is deterministic: the result
does not depend on the order in which subintervals are processed.
"""
import math

import numpy as np

__all__ = (
    'Integrand',
    'EvaluationError',
    'ConvergenceError',
    'builtin',
    'builtin_names',
    'oracle_integral',
)


class EvaluationError(RuntimeError):
    """An integrand could not be evaluated at some abscissa."""

    def __init__(self, abscissa, cause):
        super().__init__("integrand evaluation failed at x=%.17g: %s"
                         % (abscissa, cause))
        self.abscissa = abscissa


class ConvergenceError(RuntimeError):
    """The adaptive reference integrator hit its depth limit."""

    def __init__(self, interval, estimate):
        super().__init__(
            "reference integration did not converge; worst subinterval "
            "[%.17g, %.17g] with error estimate %.3g" % (*interval, estimate))
        self.interval = interval
        self.estimate = estimate


class Integrand(object):
    """
    Evaluable real function on [a, b], with optional exact-integral metadata.

    Attributes
    ----------
    fn : callable
        Scalar real function.
    a, b : float
        Natural domain.
    exact_integral : float or None
        Reference value of the integral over [a, b], when known.
    label : str
    d4_bounded : bool
        False when the fourth derivative blows up somewhere on [a, b]
        (so fourth-order error constants do not apply cleanly).
    """

    def __init__(self, fn, a, b, exact_integral=None, label='', d4_bounded=True):
        self.fn = fn
        self.a = float(a)
        self.b = float(b)
        self.exact_integral = exact_integral
        self.label = label
        self.d4_bounded = d4_bounded

    def __call__(self, x):
        return self.fn(x)

    def __repr__(self):
        return "Integrand(%s on [%g, %g])" % (self.label or self.fn, self.a, self.b)


def _f1(x):
    return (16.0 * x ** 1.5) * math.sin(x ** 2.0)


def _f2(x):
    return 1.0 / ((x - 0.3) ** 2 + 0.01) + 0.8 / ((x - 0.7) ** 2 + 0.04)


def _f3(x):
    return 1.0 / (1.0 + 16.0 * x * x)


_BUILTINS = {
    'f1': lambda: Integrand(_f1, 0.0, 1.0,
                            exact_integral=3.2523064663781227544,
                            label='16*x^(3/2)*sin(x^2)',
                            d4_bounded=False),
    'f2': lambda: Integrand(_f2, 0.0, 1.0,
                            exact_integral=35.880612010038328566,
                            label='1/((x-0.3)^2+0.01) + 0.8/((x-0.7)^2+0.04)'),
    # closed form: (1/4) atan(4x), so the integral is atan(4)/2
    'f3': lambda: Integrand(_f3, -1.0, 1.0,
                            exact_integral=0.6629088318340162325296195,
                            label='1/(1+16*x^2)'),
}


def builtin(name):
    """
    One of the shipped test integrands: 'f1', 'f2' or 'f3'.

    f1(x) = 16 x^(3/2) sin(x^2)                            on [0, 1]
    f2(x) = 1/((x-0.3)^2+0.01) + 0.8/((x-0.7)^2+0.04)      on [0, 1]
    f3(x) = 1/(1+16 x^2)                                   on [-1, 1]
    """
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise ValueError("unknown builtin integrand %r (have: %s)"
                         % (name, ', '.join(sorted(_BUILTINS)))) from None
    return factory()


def builtin_names():
    return tuple(sorted(_BUILTINS))


#==============================================================================
_X12, _W12 = np.polynomial.legendre.leggauss(12)
_X24, _W24 = np.polynomial.legendre.leggauss(24)

_MAX_DEPTH = 52


def _panel(f, lo, hi):
    """(fine value, |fine - coarse|) on one panel, by the GL 12/24 pair."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    coarse = half * math.fsum(w * _eval(f, mid + half * x)
                              for x, w in zip(_X12, _W12))
    fine = half * math.fsum(w * _eval(f, mid + half * x)
                            for x, w in zip(_X24, _W24))
    return fine, abs(fine - coarse)


def oracle_integral(f, abs_tol=1e-13):
    """
    Reference value of the integral of f over its domain.

    Panels are bisected, deepest-first in a fixed order, until every local
    error estimate fits inside a share of `abs_tol` proportional to the
    panel width; the accepted panel values are then combined with
    compensated summation.

    Parameters
    ----------
    f : Integrand or callable
        When a plain callable is given it must carry `a`/`b` attributes or
        be passed as an Integrand.
    abs_tol : float
        Absolute error target, at least 1e-14.

    Returns
    -------
    float

    Raises
    ------
    ConvergenceError
        If some subinterval still fails its share of the budget after 52
        bisection levels.
    """
    if abs_tol < 1e-14:
        raise ValueError("abs_tol must be >= 1e-14, got %g" % abs_tol)
    a, b = f.a, f.b
    width = b - a
    pieces = []
    stack = [(a, b, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        value, err = _panel(f, lo, hi)
        if err <= abs_tol * (hi - lo) / width or err == 0.0:
            pieces.append((lo, value))
            continue
        if depth >= _MAX_DEPTH:
            raise ConvergenceError((lo, hi), err)
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    pieces.sort()  # fixed combination order, independent of traversal
    return math.fsum(v for _, v in pieces)


def _eval(f, t):
    try:
        return f(t)
    except EvaluationError:
        raise
    except Exception as exc:
        raise EvaluationError(t, exc) from exc
