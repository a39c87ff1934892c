"""Exact-arithmetic workbench for extended affine Hecke algebras.

Computes in the T-basis over integer Laurent polynomials in v (q = v**2):
the Bernstein center and its theta/z bases, the averaging map onto the
spherical algebra with its triangular Satake matrix and central lift,
Kazhdan-Lusztig polynomials and basis, and Bott-Samelson point-count
products with their parity checks. Everything is exact; there are no
floating-point numbers anywhere.
"""

from .center import (CentralElement, central_element, central_lift,
                     is_central, lift_is_multiplicative, theta)
from .config import WorkbenchConfig
from .errors import (CacheWarning, CentralityError, ConventionViolationError,
                     CutoffExceededError, DatumMismatchError, GrammarError,
                     HeckeError, InexactDivisionError, LatticeClassError,
                     NonDominantError, NotBiInvariantError,
                     UnsupportedDatumError)
from .gl2 import Gl2Report, verify_gl2
from .hecke import (HeckeElement, bar_element, basis, commutator_is_zero,
                    format_hecke, invert_basis, mul, one_K, parse_hecke,
                    unit)
from .kl import (KLTable, bott_samelson, bs_decompose, cp_decompose,
                 get_table, kl_basis, kl_polynomial, spherical_parity_check)
from .ring import (BACKEND, LaurentPoly, bar, exact_div, format_laurent,
                   parse_laurent, specialize_q)
from .rootdata import (Coweight, RootDatum, SUPPORTED_LABELS, build_datum,
                       dominance_leq, translation_length, weyl_orbit)
from .spherical import (SatakeMatrix, SphericalElement, dominant_coweights,
                        embed, format_spherical, m, parse_spherical,
                        pi_map, poincare_polynomial, satake_matrix, sph_conv)
from .weyl import (AffineWeylElement, bruhat_leq, coset_elements,
                   double_coset, format_weyl, is_descent, length, multiply,
                   omega_power, parse_weyl, reduced_word, simple_reflection,
                   translation_element)

__version__ = "0.1.0"
