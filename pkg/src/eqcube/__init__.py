"""Exact symbolic calculus for a two-loop equivariant knot invariant.

Laurent-polynomial arithmetic, Alexander data from Seifert matrices,
equivariant linking numbers, the surgery formulas for the invariant, and
the quotient space carrying the derived 3-manifold invariant.
"""

from .alexander import (AlexanderData, SeifertData, alexander_from_polys,
                        alexander_poly, i_delta, invariant_factors,
                        presentation_matrices, smith_normal_form)
from .blanchfield import (CurveClass, EqLinkingTable, eq_link_meridional,
                          log_derivative_residuals, surface_pushoff_table,
                          symplectic_basis)
from .laurent import (LaurentPoly, PolyError, RationalFunction, parse_fraction,
                      parse_poly, poly_gcd, print_fraction, print_poly,
                      symmetric_normalize)
from .quotient import (QuotientContext, augmentation, detects_constant,
                       dumbbell_eval, ihx_residual, reduce, span_membership,
                       theta_eval, variation_element)
from .surgery import (ClasperMove, CobordismMove, ConnectSumMove, DehnMove,
                      FramingTwistMove, LPMove, TripleForm, TwoLoopState,
                      clasper_S, cobordism_variation, dedekind_sum,
                      dehn_surgery_delta, framing_variation, lambda_e_prime,
                      lens_lambda, lp_surgery_S, script_evaluate)
from .symthree import SymThreePoly, parse_sym, print_sym
from .verify import random_seifert, verify_suite

__version__ = "0.1.0"
