"""Overpartitions with r colours on even parts and s colours on odd parts.

Three independent routes to the counts (eta-quotient expansion, theta-series
product, combinatorial dynamic program) plus machinery for checking
congruences on arithmetic progressions.
"""

from .series import (
    ZZ,
    CoefficientRing,
    TruncatedSeries,
    extract_ap,
    invert,
    mul,
    power,
    reduce_mod,
    residue_ring,
    scale_variable,
)
from .qseries import (
    ColorParams,
    EtaQuotientSpec,
    eta_quotient,
    euler_f,
    gf_colored,
    gf_even_over,
    gf_odd_over,
    gf_overcolored,
    phi,
    phi_neg,
    theta_product,
)
from .oracle import count_colored, count_overcolored, enumerate_small
from .report import VerificationReport

__version__ = "0.1.0"
