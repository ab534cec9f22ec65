"""Riesz sums of number-field divisor functions.

Library layout:

  fields   -- field shape constants, a(n) tables, sigma_{K,alpha}(n)
  special  -- log-gamma, the gamma-ratio factor G(s), Bessel J/Y/K,
              and the constants of the kernel's Bessel asymptotics
  zetas    -- Hurwitz/Riemann zeta, quadratic Dirichlet L, Dedekind zeta,
              residues and the functional-equation residual
  kernel   -- the Mellin-Barnes kernel by direct quadrature, Bessel-main-term
              decomposition, and rational-field closed forms
  riesz    -- the weighted summatory identity: LHS, residue block, kernel
              series with tail control, contour oracle, error-exponent scans
  cli      -- command-line front end (coeffs / kernel / verify / scan /
              selfcheck) emitting JSON-lines or CSV
"""

from .fields import (
    FieldDescriptor,
    CoefficientSeries,
    SigmaSeries,
    rational_field,
    quadratic_field,
    field_from_file,
    kronecker_symbol,
    ideal_count_series,
    gaussian_norm_count_oracle,
    divisor_sigma,
    sigma_symmetry_residual,
)
from .errors import PreconditionError, NearPoleError, NonconvergenceError

__version__ = "0.1.0"
