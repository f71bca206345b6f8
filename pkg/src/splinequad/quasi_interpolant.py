"""
Quadratic C^1 spline basis and the associated discrete quasi-interpolant.

The basis consists of the n+2 quadratic B-splines B_0..B_{n+1} on the knot
vector with triple end knots

    (a, a, a, x_1, ..., x_{n-1}, b, b, b),

so B_0(a) = B_{n+1}(b) = 1 and the basis is interpolatory at the endpoints.
The quasi-interpolant is

    Qf = sum_i mu_i(f) B_i,

where mu_0(f) = f(a), mu_{n+1}(f) = f(b), and for 1 <= i <= n the
coefficient functional is a 3-point stencil on the data sites,

    mu_i(f) = l_i f(theta_{i-1}) + m_i f(theta_i) + r_i f(theta_{i+1}).

The stencil weights are chosen so that Q reproduces every quadratic
polynomial exactly.  With the local length ratios

    s  = h_i / (h_{i-1} + h_i),    s' = h_i / (h_i + h_{i+1}),

(boundary convention h_0 = h_{n+1} = 0, which encodes the triple end knots
and gives s = 1 at i = 1 and s' = 1 at i = n) they are

    l_i = -s^2 s' / (s + s'),   m_i = 1 + s s',   r_i = -s (s')^2 / (s + s').

On a uniform partition the interior stencil is (-1/8, 5/4, -1/8) and the
boundary stencils are (-1/3, 3/2, -1/6) and its mirror image.

Rewriting Qf = sum_i f(theta_i) F_i defines the fundamental functions

    F_0 = B_0 + l_1 B_1,
    F_i = r_{i-1} B_{i-1} + m_i B_i + l_{i+1} B_{i+1}   (1 <= i <= n,
          with the edge conventions r_0 = l_{n+1} = 0),
    F_{n+1} = r_n B_n + B_{n+1},

whose absolute sum is the Lebesgue function of Q.  Its maximum (the operator
norm) is 305/207 ~ 1.4734 in the uniform case and never exceeds 3.
"""
import math

import numpy as np

from .integrands import EvaluationError

__all__ = (
    'QuasiInterpolant',
    'build_qi',
    'extended_knots',
    'bspline_eval',
    'functional',
    'qi_eval',
    'lebesgue_function',
    'operator_norm_estimate',
)


#==============================================================================
def extended_knots(p):
    """Knot vector (a, a, a, x_1, ..., x_{n-1}, b, b, b) of the basis."""
    k = p.knots
    return np.concatenate(([k[0]] * 3, k[1:-1], [k[-1]] * 3))


class QuasiInterpolant(object):
    """
    Quadratic-spline quasi-interpolant on a partition.

    Attributes
    ----------
    partition : Partition
    extended_knots : numpy.ndarray (read-only)
        Basis knot vector, length n + 5.
    stencil : numpy.ndarray, shape (n+2, 3), read-only
        Row i holds the coefficient functional stencil
        (l_i, m_i, r_i) applied to (f(theta_{i-1}), f(theta_i),
        f(theta_{i+1})).  Rows 0 and n+1 are (0, 1, 0): the endpoint
        functionals just sample f there.
    coeffs : numpy.ndarray, shape (n, 3)
        The interior stencils, rows i = 1..n.  For every row
        l_i <= 0, r_i <= 0, m_i = 1 - l_i - r_i >= 1.

    Instances are immutable and all evaluations are pure, so they are safe
    to share and to evaluate concurrently.
    """

    def __init__(self, partition):
        p = partition
        n = p.n
        hpad = np.zeros(n + 2)
        hpad[1:n + 1] = p.steplengths
        hi = hpad[1:n + 1]
        s = hi / (hpad[0:n] + hi)       # s_i,  i = 1..n  (s_1 = 1)
        sp = hi / (hi + hpad[2:n + 2])  # s'_{i+1}         (s'_{n+1} = 1)
        stencil = np.zeros((n + 2, 3))
        stencil[1:n + 1, 0] = -s * s * sp / (s + sp)
        stencil[1:n + 1, 1] = 1.0 + s * sp
        stencil[1:n + 1, 2] = -s * sp * sp / (s + sp)
        stencil[0, 1] = 1.0
        stencil[n + 1, 1] = 1.0
        stencil.flags.writeable = False

        self.partition = p
        self.extended_knots = extended_knots(p)
        self.extended_knots.flags.writeable = False
        self.stencil = stencil

    @property
    def coeffs(self):
        return self.stencil[1:-1]

    #--------------------------------------------------------------------------
    def _span(self, x):
        """Index k of the subinterval [x_k, x_{k+1}] containing x (b maps
        to the last one, giving left-limit values there)."""
        p = self.partition
        if not p.a <= x <= p.b:
            raise ValueError("x=%.17g outside [%g, %g]" % (x, p.a, p.b))
        k = int(np.searchsorted(p.knots, x, side='right')) - 1
        return min(max(k, 0), p.n - 1)

    def _basis_triple(self, k, x):
        """Values of the three B-splines B_k, B_{k+1}, B_{k+2} that are
        nonzero on [x_k, x_{k+1}], by the degree-2 knot recursion."""
        T = self.extended_knots
        span = k + 2
        N = [1.0, 0.0, 0.0]
        left = [0.0, 0.0]
        right = [0.0, 0.0]
        for j in (1, 2):
            left[j - 1] = x - T[span + 1 - j]
            right[j - 1] = T[span + j] - x
            saved = 0.0
            for r in range(j):
                temp = N[r] / (right[r] + left[j - 1 - r])
                N[r] = saved + right[r] * temp
                saved = left[j - 1 - r] * temp
            N[j] = saved
        return N

    def _fundamental_values(self, x):
        """Nonzero fundamental-function values at x, as (first_index, values).

        At most five fundamental functions are nonzero at any x: the three
        active B-splines scatter into the rows of the stencil one index to
        either side.
        """
        k = self._span(x)
        vals = self._basis_triple(k, x)
        out = np.zeros(5)  # fundamental indices k-1 .. k+3
        st = self.stencil
        for r in range(3):
            j = k + r
            bj = vals[r]
            out[r] += st[j, 0] * bj       # into F_{j-1}
            out[r + 1] += st[j, 1] * bj   # into F_j
            out[r + 2] += st[j, 2] * bj   # into F_{j+1}
        return k - 1, out


#==============================================================================
def build_qi(p):
    """
    Build the quasi-interpolant operator for a partition.

    Parameters
    ----------
    p : Partition

    Returns
    -------
    QuasiInterpolant
    """
    return QuasiInterpolant(p)


def bspline_eval(q, i, x):
    """
    Value of the basis spline B_i at x.

    B_i is nonnegative, vanishes outside [x_{i-2}, x_{i+1}] (indices
    clamped to [a, b]), and at x = b the left-limit value is returned, so
    B_{n+1}(b) = 1.

    Parameters
    ----------
    q : QuasiInterpolant
    i : int
        Basis index in 0..n+1.
    x : float
        Point in [a, b].

    Returns
    -------
    float
    """
    n = q.partition.n
    if not 0 <= i <= n + 1:
        raise IndexError("basis index %d out of range 0..%d" % (i, n + 1))
    k = q._span(x)
    if not k <= i <= k + 2:
        return 0.0
    return q._basis_triple(k, x)[i - k]


def functional(q, i, f):
    """
    Coefficient functional mu_i applied to f.

    mu_0(f) = f(a), mu_{n+1}(f) = f(b), and otherwise the 3-point stencil
    on the data sites theta_{i-1}, theta_i, theta_{i+1}.
    """
    p = q.partition
    n = p.n
    if not 0 <= i <= n + 1:
        raise IndexError("functional index %d out of range 0..%d" % (i, n + 1))
    if i == 0:
        return _eval(f, p.a)
    if i == n + 1:
        return _eval(f, p.b)
    th = p.greville
    l, m, r = q.stencil[i]
    return l * _eval(f, th[i - 1]) + m * _eval(f, th[i]) + r * _eval(f, th[i + 1])


def qi_eval(q, f, x):
    """
    Value of Qf at x, summing only the basis splines whose support
    contains x.  Exact (up to roundoff) whenever f is a quadratic
    polynomial.
    """
    k = q._span(x)
    vals = q._basis_triple(k, x)
    return math.fsum(functional(q, k + r, f) * vals[r] for r in range(3))


def lebesgue_function(q, x):
    """
    Lebesgue function of Q at x: the absolute sum of the fundamental
    functions.  Always >= 1, since the fundamental functions sum to one.
    """
    _, vals = q._fundamental_values(x)
    return math.fsum(abs(v) for v in vals)


def operator_norm_estimate(q, samples_per_interval):
    """
    Sampled maximum of the Lebesgue function: a lower bound for the
    operator norm of Q.

    The scan grid places `samples_per_interval` equispaced points on every
    subinterval and always includes the knots and the data sites.

    Parameters
    ----------
    q : QuasiInterpolant
    samples_per_interval : int
        Grid density, at least 2.

    Returns
    -------
    float
    """
    if samples_per_interval < 2:
        raise ValueError("need samples_per_interval >= 2, got %d"
                         % samples_per_interval)
    p = q.partition
    grids = [np.linspace(p.knots[k], p.knots[k + 1], samples_per_interval + 1)
             for k in range(p.n)]
    grids.append(p.greville)
    xs = np.unique(np.concatenate(grids))
    return max(lebesgue_function(q, x) for x in xs)


def _eval(f, t):
    try:
        return f(t)
    except EvaluationError:
        raise
    except Exception as exc:
        raise EvaluationError(t, exc) from exc
