"""
Quadrature rules built from the quadratic spline quasi-interpolant.

Integrating Qf term by term gives a rule on the n+2 data sites,

    integral(Qf) = sum_i wbar_i f(theta_i),

whose weights combine the basis-spline integrals ("moments")
w_i = integral(B_i) through the quasi-interpolant stencil:

    wbar_0     = w_0 + l_1 w_1,
    wbar_i     = r_{i-1} w_{i-1} + m_i w_i + l_{i+1} w_{i+1}   (1 <= i <= n),
    wbar_{n+1} = r_n w_n + w_{n+1}.

The rule inherits the operator's polynomial reproduction: it is exact on
quadratics for every partition, and on cubics when nodes and weights are
symmetric about the midpoint (uniform or midpoint-symmetric partitions).
On a uniform partition with n >= 5 the weight vector has the closed form

    h * [1/9, 7/8, 73/72, 1, ..., 1, 73/72, 7/8, 1/9].

Composite Simpson's rule on the same uniform grid serves as the companion
rule: for integrands whose fourth derivative does not change sign, the two
errors have opposite signs, and the combination (32 I_Q + 23 I_S) / 55
cancels both h^4 error terms.
"""
import math
from dataclasses import dataclass

import numpy as np

from .integrands import EvaluationError
from .partition import mesh_ratio
from .quasi_interpolant import build_qi, extended_knots

__all__ = (
    'QuadratureRule',
    'WeightBoundReport',
    'bspline_moments',
    'build_qi_rule',
    'build_simpson_rule',
    'apply_rule',
    'simpson',
    'extrapolated_qs',
    'extrapolation_coefficients',
    'weight_bound_report',
)

KIND_QI = 'qi'
KIND_SIMPSON = 'simpson'

# closed-form uniform boundary weights (in units of h)
_UNIFORM_EDGE = (1.0 / 9.0, 7.0 / 8.0, 73.0 / 72.0)


class QuadratureRule(object):
    """
    Node/weight pairs ready for compensated-summation application.

    Attributes
    ----------
    nodes, weights : numpy.ndarray (read-only, same length)
    kind : str
        'qi' or 'simpson'.
    a, b : float
        Integration interval (first and last node).
    """

    def __init__(self, nodes, weights, kind):
        nodes = np.ascontiguousarray(nodes, dtype=float)
        weights = np.ascontiguousarray(weights, dtype=float)
        if nodes.shape != weights.shape:
            raise ValueError("nodes and weights must have equal length")
        self.nodes = nodes
        self.weights = weights
        self.kind = kind
        self.a = float(nodes[0])
        self.b = float(nodes[-1])
        for arr in (self.nodes, self.weights):
            arr.flags.writeable = False

    def __repr__(self):
        return "QuadratureRule(kind=%r, %d nodes on [%g, %g])" % (
            self.kind, len(self.nodes), self.a, self.b)


#==============================================================================
def bspline_moments(p):
    """
    Integrals w_i of the basis splines B_0..B_{n+1} over [a, b].

    For a degree-2 B-spline the integral is one third of its knot span, so
    with the triple-end-knot vector T this is (T[i+3] - T[i]) / 3:

        w_0 = h_1/3,
        w_1 = (h_1 + h_2)/3,
        w_i = (h_{i-1} + h_i + h_{i+1})/3     (2 <= i <= n-1),
        w_n = (h_{n-1} + h_n)/3,
        w_{n+1} = h_n/3,

    which sum to b - a because the splines sum to one.  The degenerate
    n = 1 case falls out of the same knot differences (all three moments
    equal h/3).

    Parameters
    ----------
    p : Partition

    Returns
    -------
    numpy.ndarray, length n + 2
    """
    T = extended_knots(p)
    return (T[3:] - T[:-3]) / 3.0


def build_qi_rule(p):
    """
    Quadrature rule obtained by integrating the quasi-interpolant.

    Nodes are the data sites; weights come from scattering the moments
    through the stencil.  On a uniform partition with n >= 5 the closed
    form h*[1/9, 7/8, 73/72, 1, ..., 1, 73/72, 7/8, 1/9] is used instead
    (it agrees with the general path to roundoff).

    Parameters
    ----------
    p : Partition

    Returns
    -------
    QuadratureRule
    """
    n = p.n
    if n >= 5 and p.is_uniform:
        h = (p.b - p.a) / n
        w = np.ones(n + 2)
        w[:3] = _UNIFORM_EDGE
        w[-3:] = _UNIFORM_EDGE[::-1]
        weights = h * w
    else:
        weights = _general_weights(p)
    return QuadratureRule(p.greville, weights, KIND_QI)


def _general_weights(p):
    # The boundary combinations (e.g. w_0 + l_1 w_1 = h/9 on a uniform
    # grid) cancel to a third of their operands, so carry the pipeline in
    # extended precision and round once at the end.
    n = p.n
    h = p.steplengths.astype(np.longdouble)
    hpad = np.zeros(n + 2, dtype=np.longdouble)
    hpad[1:n + 1] = h
    hi = hpad[1:n + 1]
    s = hi / (hpad[0:n] + hi)
    sp = hi / (hi + hpad[2:n + 2])
    st = np.zeros((n + 2, 3), dtype=np.longdouble)
    st[1:n + 1, 0] = -s * s * sp / (s + sp)
    st[1:n + 1, 1] = 1.0 + s * sp
    st[1:n + 1, 2] = -s * sp * sp / (s + sp)
    st[0, 1] = 1.0
    st[n + 1, 1] = 1.0
    zero3 = np.zeros(3, dtype=np.longdouble)
    cum = h.cumsum()
    T = np.concatenate((zero3, cum[:-1], cum[-1] + zero3))  # knots minus a
    w = (T[3:] - T[:-3]) / 3.0
    weights = st[:, 1] * w
    weights[:-1] += st[1:, 0] * w[1:]   # l_j w_j feeds node j-1
    weights[1:] += st[:-1, 2] * w[:-1]  # r_j w_j feeds node j+1
    return weights.astype(float)


def build_simpson_rule(p):
    """
    Composite Simpson rule on the n+1 knots of a uniform partition with
    even n: weights (h/3) * [1, 4, 2, 4, ..., 2, 4, 1].
    """
    _require_uniform_even(p)
    h = (p.b - p.a) / p.n
    w = np.full(p.n + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    return QuadratureRule(p.knots, (h / 3.0) * w, KIND_SIMPSON)


#==============================================================================
_SPLIT = 134217729.0  # 2^27 + 1, Veltkamp splitter


def _product_terms(rule, f, out):
    """Append each w_i * f(x_i) to `out` as an exact head/tail pair
    (Dekker two-product), so a later fsum rounds only once overall."""
    for x, w in zip(rule.nodes, rule.weights):
        v = _eval(f, float(x))
        w = float(w)
        p = w * v
        ww = _SPLIT * w
        wh = ww - (ww - w)
        wl = w - wh
        vv = _SPLIT * v
        vh = vv - (vv - v)
        vl = v - vh
        out.append(p)
        out.append(((wh * vh - p) + wh * vl + wl * vh) + wl * vl)


def apply_rule(rule, f):
    """
    Apply a rule to an integrand: error-free-transform summation of
    w_i * f(x_i).

    Each product is split into an exact head/tail pair and the pair list
    is summed with compensated summation, so the returned double is the
    correctly rounded value of the exact weighted sum.  The result is
    deterministic however the node evaluations are scheduled.
    """
    terms = []
    _product_terms(rule, f, terms)
    return math.fsum(terms)


def signed_error(rule, f, exact):
    """
    Signed quadrature error  E = I(f) - I_rule(f)  against a reference
    integral, without materializing the intermediate rule value (whose
    final rounding would otherwise dominate once E is a few ulps of I).

    Parameters
    ----------
    rule : QuadratureRule
    f : callable
    exact : float or (head, tail) pair of floats
        Reference integral; a pair allows references beyond double
        precision (head + tail evaluated exactly inside the summation).

    Returns
    -------
    float
    """
    terms = list(exact) if isinstance(exact, tuple) else [exact]
    head = len(terms)
    _product_terms(rule, f, terms)
    for i in range(head, len(terms)):
        terms[i] = -terms[i]
    return math.fsum(terms)


def simpson(p, f):
    """
    Composite Simpson value of f on a uniform partition with even n.
    """
    return apply_rule(build_simpson_rule(p), f)


def extrapolated_qs(p, f):
    """
    Extrapolated combination (32 I_Q + 23 I_S) / 55 on a uniform partition
    with even n.  The two fourth-order error terms cancel
    (32 * 23/5760 = 23/180), leaving an O(h^5) error.
    """
    _require_uniform_even(p)
    i_q = apply_rule(build_qi_rule(p), f)
    i_s = simpson(p, f)
    return (32.0 * i_q + 23.0 * i_s) / 55.0


def extrapolation_coefficients():
    """Weights of the extrapolated combination, (32/55, 23/55)."""
    return 32.0 / 55.0, 23.0 / 55.0


#==============================================================================
@dataclass(frozen=True)
class WeightBoundReport:
    """Diagnostics for the absolute weight sum of a rule."""
    sum_abs: float
    bound3: float
    bound_r: float
    negative_indices: tuple


def weight_bound_report(rule, p):
    """
    Check the weight bounds of the quasi-interpolant rule.

    sum|wbar_i| never exceeds 3(b - a); with mesh ratio r the sharper
    bound is (b - a) * (1 + 2 (r/(r+1))^2).  Both are verified here and a
    violation (which would indicate a construction bug) raises.

    Parameters
    ----------
    rule : QuadratureRule
        A rule of kind 'qi'.
    p : Partition
        The partition the rule was built on.

    Returns
    -------
    WeightBoundReport
    """
    if rule.kind != KIND_QI:
        raise ValueError("weight bounds apply to the 'qi' rule, got %r" % rule.kind)
    sum_abs = math.fsum(abs(w) for w in rule.weights)
    width = p.b - p.a
    bound3 = 3.0 * width
    r = mesh_ratio(p)
    bound_r = width * (1.0 + 2.0 * (r / (r + 1.0)) ** 2)
    negative = tuple(int(i) for i in np.nonzero(rule.weights < 0.0)[0])
    slack = 1e-12 * width
    if sum_abs > bound3 + slack or sum_abs > bound_r + slack:
        raise RuntimeError(
            "weight bound violated: sum|w|=%.17g, bounds %.17g / %.17g"
            % (sum_abs, bound3, bound_r))
    return WeightBoundReport(sum_abs, bound3, bound_r, negative)


def _require_uniform_even(p):
    if not p.is_uniform:
        raise ValueError("rule requires a uniform partition")
    if p.n % 2:
        raise ValueError("rule requires an even number of subintervals, "
                         "got n=%d" % p.n)


def _eval(f, t):
    try:
        return f(t)
    except EvaluationError:
        raise
    except Exception as exc:
        raise EvaluationError(t, exc) from exc
