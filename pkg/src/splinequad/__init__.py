"""
splinequad: numerical integration via quadratic spline quasi-interpolation.

Integrating the C^1 quadratic-spline quasi-interpolant of f over [a, b]
yields a quadrature rule on the subinterval midpoints plus the endpoints.
The package provides the rule's weights on arbitrary partitions (closed
form on uniform ones), composite Simpson as the companion rule, the O(h^5)
extrapolated combination of the two, the fourth-order Peano kernel with
its sharp error constants, Lebesgue-function diagnostics for the
underlying operator, the builtin test integrands, and a small expression
parser plus reference integrator.
"""
from .partition import (Partition, make_uniform, make_from_knots,
                        make_symmetric_chebyshev, greville_points,
                        mesh_ratio, read_knots_file)
from .quasi_interpolant import (QuasiInterpolant, build_qi, extended_knots,
                                bspline_eval, functional, qi_eval,
                                lebesgue_function, operator_norm_estimate)
from .quadrature import (QuadratureRule, WeightBoundReport, bspline_moments,
                         build_qi_rule, build_simpson_rule, apply_rule,
                         simpson, extrapolated_qs, extrapolation_coefficients,
                         weight_bound_report)
from .peano import (PeanoKernel, SignStructureReport, PieceIntegrals,
                    kernel_eval, verify_sign_structure, kernel_piece_integrals,
                    kernel_integral, sign_change_points, error_bound,
                    simpson_error_reference, QI_H4_COEF, QI_H5_COEF,
                    SIMPSON_H4_COEF)
from .integrands import (Integrand, EvaluationError, ConvergenceError,
                         builtin, builtin_names, oracle_integral)
from .expressions import (Expression, ExpressionError, ExpressionSyntaxError,
                          UnknownFunctionError, parse_expression)
from .cli import ConvergenceReport, FittedOrders, convergence_report

__version__ = '0.1.0'
