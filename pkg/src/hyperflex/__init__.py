"""Exact degrees and dimensions of k-flex loci of general projective hypersurfaces."""

from .catalan import binomial, catalan_closed, catalan_recursive
from .chow_phi import PhiElement, chern_total, degree_vk_chern, phi_mul
from .contact import INFINITE, ProjPoint, contact_order, is_kflex_line, taylor_coeffs
from .formulas import (
    FlexReport,
    Locus,
    LocusKind,
    N_k_lambda,
    N_k_mu,
    build_report,
    classify_locus,
    lines_on_general_hypersurface,
)
from .parser import parse_poly
from .poly import MultiPoly
from .schubert import ChowElement, sigma

__version__ = "0.1.0"
