"""
Fourth-order Peano kernel of the uniform spline rule on [0, 1].

Because the uniform rule integrates cubics exactly, its error admits the
representation

    E(f) = (1/6) * integral_0^1 K(t) f''''(t) dt,

with the kernel

    K(t) = (1/4)(1 - t)^4 - sum_i w_i (theta_i - t)_+^3.

K vanishes at both endpoints, is symmetric (K(t) = K(1 - t)), is negative
exactly on the two short end lobes (0, 4h/9) and (1 - 4h/9, 1), and is
positive in between.  Integrating it piece by piece yields the sharp error
constants: for f with bounded fourth derivative

    E(f) = (23/5760) h^4 f''''(c) - (1/192) h^5 f''''(c'),

to be compared with composite Simpson's -(1/180) h^4 f''''(d).  The h^4
constants have ratio 32:23 with opposite signs, which is what makes the
(32, 23)/55 extrapolation cancel them.
"""
import math
from dataclasses import dataclass

import numpy as np

from .partition import make_uniform
from .quadrature import build_qi_rule

__all__ = (
    'PeanoKernel',
    'SignStructureReport',
    'PieceIntegrals',
    'kernel_eval',
    'verify_sign_structure',
    'kernel_piece_integrals',
    'kernel_integral',
    'sign_change_points',
    'error_bound',
    'simpson_error_reference',
    'QI_H4_COEF',
    'QI_H5_COEF',
    'SIMPSON_H4_COEF',
)

# error-representation constants: |E_Q| <= (23/5760 h^4 + 1/192 h^5) * max|f''''|
QI_H4_COEF = 23.0 / 5760.0
QI_H5_COEF = 1.0 / 192.0
SIMPSON_H4_COEF = 1.0 / 180.0

_G3_NODES = (-math.sqrt(0.6), 0.0, math.sqrt(0.6))
_G3_WEIGHTS = (5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0)


class PeanoKernel(object):
    """
    Kernel of the uniform-partition rule on [0, 1] with n >= 5 subintervals.

    The n >= 5 floor keeps the three boundary weights h/9, 7h/8, 73h/72
    from overlapping; the closed-form lobe values and piece integrals
    assume that layout.

    Attributes
    ----------
    n : int
    h : float
        Steplength 1/n.
    rule : QuadratureRule
        The spline rule whose error the kernel represents.
    """

    def __init__(self, n):
        if n < 5:
            raise ValueError("kernel analysis needs n >= 5 (the uniform "
                             "closed-form weights start there), got n=%d" % n)
        self.n = int(n)
        self.h = 1.0 / self.n
        self.rule = build_qi_rule(make_uniform(0.0, 1.0, self.n))


#==============================================================================
def kernel_eval(k, t):
    """
    Kernel value K(t), for t in [0, 1].

    The defining sum subtracts O(1) quantities to produce an O(h^4)
    result, so it is evaluated from the nearer endpoint: the rule is exact
    on cubics, hence sum_i w_i (theta_i - t)^3 = ((1-t)^4 - t^4)/4, and
    folding this identity into the left half gives

        K(t) = t^4/4 + sum_{theta_i <= t} w_i (theta_i - t)^3,

    whose terms are all O(t^4)-sized.  Both halves use compensated
    summation.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("t=%.17g outside [0, 1]" % t)
    th = k.rule.nodes
    w = k.rule.weights
    j = int(np.searchsorted(th, t, side='right'))
    if t <= 0.5:
        return 0.25 * t ** 4 + math.fsum(
            w[i] * (th[i] - t) ** 3 for i in range(j))
    return 0.25 * (1.0 - t) ** 4 - math.fsum(
        w[i] * (th[i] - t) ** 3 for i in range(j, len(th)))


def sign_change_points(k):
    """The two interior roots of K: 4h/9 and 1 - 4h/9."""
    r = 4.0 * k.h / 9.0
    return r, 1.0 - r


@dataclass(frozen=True)
class SignStructureReport:
    ok: bool
    violations: tuple


def verify_sign_structure(k, samples):
    """
    Sample K on a uniform interior grid and check its sign pattern:
    negative on (0, 4h/9), positive on (4h/9, 1 - 4h/9), negative on
    (1 - 4h/9, 1).  Points farther than h/100 from a root must also clear
    the margin |K| > 1e-14 h^4.

    Parameters
    ----------
    k : PeanoKernel
    samples : int
        Number of interior sample points, at least 100.

    Returns
    -------
    SignStructureReport
        ok flag plus the offending abscissae, if any.
    """
    if samples < 100:
        raise ValueError("need samples >= 100, got %d" % samples)
    r1, r2 = sign_change_points(k)
    margin = 1e-14 * k.h ** 4
    clearance = k.h / 100.0
    violations = []
    for j in range(1, samples + 1):
        t = j / (samples + 1.0)
        if t == r1 or t == r2:
            continue
        v = kernel_eval(k, t)
        expect_negative = t < r1 or t > r2
        ok = (v < 0.0) if expect_negative else (v > 0.0)
        if ok and min(t, 1.0 - t, abs(t - r1), abs(t - r2)) > clearance:
            ok = abs(v) > margin
        if not ok:
            violations.append(t)
    return SignStructureReport(not violations, tuple(violations))


#==============================================================================
@dataclass(frozen=True)
class PieceIntegrals:
    """Exact integrals of K over its leading polynomial pieces.

    neg_lobe      : [0, 4h/9]        = -64 h^5 / 295245
    first_partial : [4h/9, h/2]      = 1631 h^5 / 37791360
    first_full    : [h/2, 3h/2]      = 59 h^5 / 2880
    interior      : [3h/2, 5h/2]     = 23 h^5 / 960   (one interior period)
    """
    neg_lobe: float
    first_partial: float
    first_full: float
    interior: float


def kernel_piece_integrals(k):
    """
    Integrate K exactly over the four leading pieces with 3-point
    Gauss-Legendre (degree-5 exact, and K is a quartic between data sites).

    Returns
    -------
    PieceIntegrals
    """
    h = k.h
    f = lambda t: kernel_eval(k, t)
    return PieceIntegrals(
        neg_lobe=_gauss3(f, 0.0, 4.0 * h / 9.0),
        first_partial=_gauss3(f, 4.0 * h / 9.0, 0.5 * h),
        first_full=_gauss3(f, 0.5 * h, 1.5 * h),
        interior=_gauss3(f, 1.5 * h, 2.5 * h),
    )


def kernel_integral(k, lo=0.0, hi=1.0, weight=None):
    """
    Integral of K (optionally times a weight function) over [lo, hi],
    splitting at the data sites so each Gauss-3 panel sees a single
    polynomial piece.  Exact when `weight` is a polynomial of degree <= 1.
    """
    if not 0.0 <= lo <= hi <= 1.0:
        raise ValueError("need 0 <= lo <= hi <= 1")
    cuts = [lo] + [float(t) for t in k.rule.nodes if lo < t < hi] + [hi]
    if weight is None:
        f = lambda t: kernel_eval(k, t)
    else:
        f = lambda t: kernel_eval(k, t) * weight(t)
    return math.fsum(_gauss3(f, u, v) for u, v in zip(cuts[:-1], cuts[1:]))


#==============================================================================
def error_bound(k, m4):
    """
    Rigorous bound on |E_Q(f)| over [0, 1] given m4 >= max|f''''|:
    (23/5760) h^4 m4 + (1/192) h^5 m4.
    """
    if m4 < 0:
        raise ValueError("m4 must be >= 0, got %g" % m4)
    return (QI_H4_COEF * k.h ** 4 + QI_H5_COEF * k.h ** 5) * m4


def simpson_error_reference(m4, h):
    """
    Companion bound for composite Simpson on [0, 1]: (1/180) h^4 m4.
    """
    if m4 < 0:
        raise ValueError("m4 must be >= 0, got %g" % m4)
    if h <= 0:
        raise ValueError("h must be > 0, got %g" % h)
    return SIMPSON_H4_COEF * h ** 4 * m4


def _gauss3(f, lo, hi):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    return half * math.fsum(w * f(mid + half * x)
                            for x, w in zip(_G3_NODES, _G3_WEIGHTS))
