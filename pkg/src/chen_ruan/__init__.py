"""Exact Chen-Ruan cohomology of the moduli of stable PSL(2,C)-bundles with nontrivial w2."""
from .exact_arith import IntPolynomial, bernoulli, poly_div_exact
from .expr import ParseError, format_class, parse_class
from .exterior import ExteriorClass, integrate_orb, kappa_pullback_power, theta_bar, wedge
from .gamma import TwoTorsionLabel, enumerate_labels, fixed_locus_relation, weil_pairing
from .ring import (
    CRClass,
    canonical_basis,
    constants,
    cr_poincare,
    poincare_pair,
    product,
    three_point,
    untwisted_poincare,
)
from .sectors import degree_shift, eigen_data_for, obstruction_rank, sector_betti, sector_descriptor
from .verify import VerifyConfig, verify

__version__ = "0.1.0"
