"""
Command-line front end.

Subcommands
-----------
integrate   compute an integral with the spline rule, Simpson, or the
            extrapolated combination
table       error table (spline rule vs Simpson vs extrapolation) for one
            of the builtin examples over a doubling n-sequence
kernel      sample the Peano kernel as CSV, with the sign-change points
            and verified piece integrals in a footer
lebesgue    sampled operator-norm estimate for a partition
weights     dump a rule's nodes and weights as CSV

All output goes to stdout, errors to stderr.  Exit codes: 0 success,
2 usage or validation error, 3 numeric failure.  Floats in CSV are printed
with the shortest round-trip representation, so output is byte-stable.
"""
import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .integrands import (ConvergenceError, EvaluationError, Integrand,
                         builtin, builtin_names)
from .expressions import parse_expression
from .partition import (make_from_knots, make_symmetric_chebyshev,
                        make_uniform, read_knots_file)
from .peano import (PeanoKernel, kernel_eval, kernel_piece_integrals,
                    sign_change_points)
from .quadrature import (apply_rule, build_qi_rule, build_simpson_rule,
                         extrapolated_qs, simpson, weight_bound_report)
from .quasi_interpolant import build_qi, operator_norm_estimate

__all__ = ('main', 'ConvergenceReport', 'FittedOrders', 'convergence_report')

FP_FLOOR = 1e-12

_TABLE_SEQUENCES = {1: (64, 128, 256, 512, 1024),
                    2: (64, 128, 256, 512, 1024),
                    3: (256, 512, 1024, 2048, 4096)}


#==============================================================================
@dataclass(frozen=True)
class FittedOrders:
    q: float
    s: float
    qs: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Per-n errors of the three rules plus fitted convergence orders."""
    rows: tuple            # of (n, e_q, e_s, e_qs)
    fitted_orders: FittedOrders
    integrand_label: str

    def to_csv(self):
        lines = ['n,e_q,e_s,e_qs,order_q,order_s,order_qs']
        o = self.fitted_orders
        for n, e_q, e_s, e_qs in self.rows:
            lines.append('%d,%r,%r,%r,%r,%r,%r'
                         % (n, e_q, e_s, e_qs, o.q, o.s, o.qs))
        lines.extend(self._floor_notes())
        return '\n'.join(lines)

    def to_markdown(self):
        lines = ['| n | e_q | e_s | e_qs |', '|---|-----|-----|------|']
        for n, e_q, e_s, e_qs in self.rows:
            lines.append('| %d | %r | %r | %r |' % (n, e_q, e_s, e_qs))
        o = self.fitted_orders
        lines.append('')
        lines.append('fitted orders: q=%.3f s=%.3f qs=%.3f' % (o.q, o.s, o.qs))
        lines.extend(self._floor_notes())
        return '\n'.join(lines)

    def _floor_notes(self):
        notes = []
        for n, e_q, e_s, e_qs in self.rows:
            for name, e in (('e_q', e_q), ('e_s', e_s), ('e_qs', e_qs)):
                if abs(e) < FP_FLOOR:
                    notes.append('# n=%d: %s ~0 (fp floor, below double-'
                                 'precision resolution)' % (n, name))
        return notes


def _fit_order(ns, errors):
    """Least-squares slope of log|E| against log(1/n), ignoring values at
    the double-precision floor."""
    pts = [(n, abs(e)) for n, e in zip(ns, errors) if abs(e) > FP_FLOOR]
    if len(pts) < 2:
        return float('nan')
    x = np.log([1.0 / n for n, _ in pts])
    y = np.log([e for _, e in pts])
    return float(np.polyfit(x, y, 1)[0])


def convergence_report(f, ns):
    """
    Run the three rules on uniform partitions of the integrand's domain
    for every n in `ns` and collect signed errors (exact minus computed).
    """
    if f.exact_integral is None:
        raise ValueError("convergence report needs an integrand with a "
                         "known exact integral")
    exact = f.exact_integral
    rows = []
    for n in ns:
        p = make_uniform(f.a, f.b, n)
        e_q = exact - apply_rule(build_qi_rule(p), f)
        e_s = exact - simpson(p, f)
        e_qs = exact - extrapolated_qs(p, f)
        rows.append((n, e_q, e_s, e_qs))
    orders = FittedOrders(q=_fit_order(ns, [r[1] for r in rows]),
                          s=_fit_order(ns, [r[2] for r in rows]),
                          qs=_fit_order(ns, [r[3] for r in rows]))
    return ConvergenceReport(tuple(rows), orders, f.label)


#==============================================================================
def _add_partition_args(sub, need_n=True):
    sub.add_argument('--partition', default='uniform',
                     help="'uniform', 'chebyshev', or 'file:<path>' "
                          "(one knot per line, '#' comments)")
    sub.add_argument('--a', type=float, default=None, help='left endpoint')
    sub.add_argument('--b', type=float, default=None, help='right endpoint')
    if need_n:
        sub.add_argument('--n', type=int, default=None,
                         help='number of subintervals')


def _build_partition(args, default_a=None, default_b=None):
    spec = args.partition
    if spec.startswith('file:'):
        return read_knots_file(spec[5:])
    a = args.a if args.a is not None else default_a
    b = args.b if args.b is not None else default_b
    if a is None or b is None:
        raise ValueError("--a and --b are required for partition %r" % spec)
    n = getattr(args, 'n', None)
    if n is None:
        raise ValueError("--n is required for partition %r" % spec)
    if spec == 'uniform':
        return make_uniform(a, b, n)
    if spec == 'chebyshev':
        return make_symmetric_chebyshev(a, b, n)
    raise ValueError("unknown partition spec %r" % spec)


def _resolve_integrand(spec, a=None, b=None):
    if spec.startswith('expr:'):
        expr = parse_expression(spec[5:])
        if a is None or b is None:
            raise ValueError("--a and --b are required with expr: integrands")
        return Integrand(expr, a, b, label=spec[5:])
    f = builtin(spec)
    if a is not None or b is not None:
        f = Integrand(f.fn, a if a is not None else f.a,
                      b if b is not None else f.b,
                      exact_integral=None, label=f.label)
    return f


#==============================================================================
def _cmd_integrate(args):
    f = _resolve_integrand(args.fn, args.a, args.b)
    args.a, args.b = f.a, f.b
    p = _build_partition(args, f.a, f.b)
    if args.rule == 'qi':
        value = apply_rule(build_qi_rule(p), f)
    elif args.rule == 'simpson':
        value = simpson(p, f)
    else:
        value = extrapolated_qs(p, f)
    print('value %.17g' % value)
    if f.exact_integral is not None:
        print('error %.17g' % (f.exact_integral - value))
    return 0


def _cmd_table(args):
    report = convergence_report(builtin('f%d' % args.example),
                                _TABLE_SEQUENCES[args.example])
    print(report.to_csv() if args.format == 'csv' else report.to_markdown())
    return 0


def _cmd_kernel(args):
    if args.n < 5:
        raise ValueError("kernel analysis needs n >= 5 (validity threshold "
                         "of the uniform closed-form weights), got n=%d" % args.n)
    k = PeanoKernel(args.n)
    print('t,k')
    for t in np.linspace(0.0, 1.0, args.samples):
        print('%r,%r' % (float(t), kernel_eval(k, float(t))))
    r1, r2 = sign_change_points(k)
    print('# sign_changes %r %r' % (r1, r2))
    pieces = kernel_piece_integrals(k)
    h5 = k.h ** 5
    for name, value, ref in (
            ('neg_lobe', pieces.neg_lobe, -64.0 * h5 / 295245.0),
            ('first_partial', pieces.first_partial, 1631.0 * h5 / 37791360.0),
            ('first_full', pieces.first_full, 59.0 * h5 / 2880.0),
            ('interior', pieces.interior, 23.0 * h5 / 960.0)):
        ok = abs(value - ref) <= 1e-12 * abs(ref)
        print('# %s %r ref %r ok %s' % (name, value, ref, str(ok).lower()))
    return 0


def _cmd_lebesgue(args):
    p = _build_partition(args)
    q = build_qi(p)
    norm = operator_norm_estimate(q, args.samples_per_interval)
    print('norm_estimate %.17g' % norm)
    print('bound3_ok %s' % str(norm <= 3.0 + 1e-12).lower())
    return 0


def _cmd_weights(args):
    p = _build_partition(args)
    rule = build_qi_rule(p) if args.rule == 'qi' else build_simpson_rule(p)
    print('theta,w')
    for x, w in zip(rule.nodes, rule.weights):
        print('%r,%r' % (float(x), float(w)))
    if args.rule == 'qi':
        rep = weight_bound_report(rule, p)
        print('# sum_abs %r bound3 %r bound_r %r negative %s'
              % (rep.sum_abs, rep.bound3, rep.bound_r,
                 ','.join(map(str, rep.negative_indices)) or '-'))
    return 0


#==============================================================================
def _build_parser():
    parser = argparse.ArgumentParser(
        prog='splinequad',
        description='Quadrature via quadratic spline quasi-interpolation.')
    subs = parser.add_subparsers(dest='command', required=True)

    sub = subs.add_parser('integrate', help='integrate one function')
    sub.add_argument('--fn', required=True,
                     help="builtin name (%s) or expr:<expression>"
                          % ', '.join(builtin_names()))
    sub.add_argument('--rule', choices=('qi', 'simpson', 'qs'), default='qi')
    _add_partition_args(sub)
    sub.set_defaults(handler=_cmd_integrate)

    sub = subs.add_parser('table', help='error table for a builtin example')
    sub.add_argument('--example', type=int, choices=(1, 2, 3), required=True)
    sub.add_argument('--format', choices=('csv', 'markdown'), default='csv')
    sub.set_defaults(handler=_cmd_table)

    sub = subs.add_parser('kernel', help='sample the Peano kernel as CSV')
    sub.add_argument('--n', type=int, required=True,
                     help='subinterval count, at least 5')
    sub.add_argument('--samples', type=int, default=201)
    sub.set_defaults(handler=_cmd_kernel)

    sub = subs.add_parser('lebesgue', help='sampled operator-norm estimate')
    _add_partition_args(sub)
    sub.add_argument('--samples-per-interval', type=int, default=40)
    sub.set_defaults(handler=_cmd_lebesgue)

    sub = subs.add_parser('weights', help='dump rule nodes/weights as CSV')
    sub.add_argument('--rule', choices=('qi', 'simpson'), default='qi')
    _add_partition_args(sub)
    sub.set_defaults(handler=_cmd_weights)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ConvergenceError, EvaluationError) as exc:
        print('numeric failure: %s' % exc, file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print('error: %s' % exc, file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
