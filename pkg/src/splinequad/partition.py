"""
Partitions of a bounded interval [a, b].

A partition is a strictly increasing sequence of knots x_0 < x_1 < ... < x_n
with x_0 = a and x_n = b.  Everything downstream (the spline basis, the
quadrature weights, the error analysis) consumes the derived quantities
computed here: the steplengths h_i = x_i - x_{i-1}, the data sites
theta_0 = a, theta_i = (x_{i-1} + x_i)/2, theta_{n+1} = b (midpoints plus the
two endpoints, i.e. the Greville abscissae of the quadratic basis with triple
end knots), and the mesh ratio bounding adjacent steplength quotients.
"""
import numpy as np

__all__ = (
    'Partition',
    'make_uniform',
    'make_from_knots',
    'make_symmetric_chebyshev',
    'greville_points',
    'mesh_ratio',
    'read_knots_file',
)

# Relative steplength spread below which a partition is treated as uniform.
_UNIFORM_RTOL = 1e-12


class Partition(object):
    """
    Strictly increasing knots of a bounded interval, with derived data.

    Instances are immutable: the arrays are created once and marked
    read-only, so a Partition can be shared freely (e.g. across threads).

    Attributes
    ----------
    knots : numpy.ndarray (1D, read-only)
        Abscissae x_0 < x_1 < ... < x_n.
    a, b : float
        Interval endpoints, a = x_0 and b = x_n.
    n : int
        Number of subintervals (= len(knots) - 1, at least 1).
    steplengths : numpy.ndarray (1D, read-only)
        h_i = x_i - x_{i-1} for 1 <= i <= n (length n, all positive).
    greville : numpy.ndarray (1D, read-only)
        Data sites theta_0 = a, theta_i = (x_{i-1} + x_i)/2,
        theta_{n+1} = b (length n + 2, strictly increasing).
    """

    def __init__(self, knots, steplengths=None):
        knots = np.ascontiguousarray(knots, dtype=float)
        if knots.ndim != 1 or knots.size < 2:
            raise ValueError("need at least 2 knots, got %d" % knots.size)
        diffs = np.diff(knots)
        bad = np.nonzero(diffs <= 0)[0]
        if bad.size:
            i = int(bad[0]) + 1
            raise ValueError(
                "knots must be strictly increasing; violation at index %d "
                "(x[%d]=%.17g, x[%d]=%.17g)" % (i, i - 1, knots[i - 1], i, knots[i]))

        self.knots = knots
        self.a = float(knots[0])
        self.b = float(knots[-1])
        self.n = knots.size - 1
        # A constructor may state the intended steplengths (e.g. the exact
        # constant (b-a)/n of a uniform grid); they must match the knot
        # differences to within their quantization.
        if steplengths is None:
            self.steplengths = diffs
        else:
            steplengths = np.ascontiguousarray(steplengths, dtype=float)
            if steplengths.shape != diffs.shape or \
                    np.max(np.abs(steplengths - diffs)) > 4e-16 * abs(self.b - self.a):
                raise ValueError("steplengths inconsistent with knots")
            self.steplengths = steplengths
        self.greville = np.concatenate(
            ([self.a], 0.5 * (knots[:-1] + knots[1:]), [self.b]))
        for arr in (self.knots, self.steplengths, self.greville):
            arr.flags.writeable = False

    @property
    def is_uniform(self):
        """True if all steplengths agree to relative 1e-12."""
        h = self.steplengths
        hbar = (self.b - self.a) / self.n
        return bool(np.max(np.abs(h - hbar)) <= _UNIFORM_RTOL * hbar)

    def __repr__(self):
        return "Partition(a=%g, b=%g, n=%d)" % (self.a, self.b, self.n)


#==============================================================================
def make_uniform(a, b, n):
    """
    Uniform partition of [a, b] into n subintervals.

    Knots are computed per index as a + i*(b - a)/n (no cumulative
    addition, so there is no drift), and the last knot is pinned to b.

    Parameters
    ----------
    a, b : float
        Interval endpoints, a < b.
    n : int
        Number of subintervals, n >= 1.

    Returns
    -------
    Partition
    """
    a, b = float(a), float(b)
    if not a < b:
        raise ValueError("invalid interval: need a < b, got a=%g, b=%g" % (a, b))
    n = _check_size(n)
    h = (b - a) / n
    knots = a + np.arange(n + 1) * h
    knots[-1] = b
    return Partition(knots, steplengths=np.full(n, h))


def make_from_knots(knots):
    """
    Partition wrapping an explicit knot list.

    Parameters
    ----------
    knots : array_like
        At least two strictly increasing abscissae.

    Returns
    -------
    Partition
    """
    return Partition(knots)


def make_symmetric_chebyshev(a, b, n):
    """
    Chebyshev-Gauss-Lobatto knots mapped to [a, b].

    x_i = (a+b)/2 - (b-a)/2 * cos(i*pi/n), so the knots cluster near the
    endpoints and satisfy the midpoint symmetry x_i + x_{n-i} = a + b.
    On such symmetric partitions the associated quadrature rule picks up
    an extra degree of precision (cubics), like on uniform ones.

    Parameters
    ----------
    a, b : float
        Interval endpoints, a < b.
    n : int
        Number of subintervals, n >= 1.

    Returns
    -------
    Partition
    """
    a, b = float(a), float(b)
    if not a < b:
        raise ValueError("invalid interval: need a < b, got a=%g, b=%g" % (a, b))
    n = _check_size(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    i = np.arange(n + 1)
    x = mid - half * np.cos(i * np.pi / n)
    # re-symmetrize: cos roundoff would otherwise break x_i + x_{n-i} = a+b
    x = 0.5 * (x - x[::-1]) + mid
    x[0], x[-1] = a, b
    if n % 2 == 0:
        x[n // 2] = mid
    return Partition(x)


def greville_points(p):
    """Data sites of the partition: a, the subinterval midpoints, b."""
    return p.greville


def mesh_ratio(p):
    """
    Smallest r >= 1 with 1/r <= h_{i+1}/h_i <= r for all adjacent pairs.

    Returns 1.0 for a single-interval partition (the constraint is vacuous).
    """
    h = p.steplengths
    if p.n < 2:
        return 1.0
    q = h[1:] / h[:-1]
    return float(max(q.max(), (1.0 / q).max()))


def read_knots_file(path):
    """
    Read a partition from a text file: one ASCII decimal knot per line,
    ascending; blank lines and lines starting with '#' are ignored.
    """
    knots = []
    with open(path, 'r', encoding='ascii') as fh:
        for lineno, line in enumerate(fh, start=1):
            s = line.strip()
            if not s or s.startswith('#'):
                continue
            try:
                knots.append(float(s))
            except ValueError:
                raise ValueError("%s:%d: not a decimal number: %r"
                                 % (path, lineno, s)) from None
    if len(knots) < 2:
        raise ValueError("%s: need at least 2 knots, got %d" % (path, len(knots)))
    return Partition(knots)


def _check_size(n):
    if int(n) != n or n < 1:
        raise ValueError("invalid size: need an integer n >= 1, got %r" % (n,))
    return int(n)
