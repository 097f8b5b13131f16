"""Exact trace formulas for discrete series and characteristic numbers of CP^n."""

from .dseries import (
    TraceReport,
    check_factorization,
    formal_degree,
    is_regular,
    l2_index_ratio,
    pi_k,
    tau_G_of_dirac_induction,
    trace_factor,
    weyl_dim,
)
from .genera import (
    AHAT,
    L_GENUS,
    TODD,
    GenusSpec,
    NilpotentPoly,
    TruncatedSeries,
    exp_twist,
    l_class_cpn,
    pontryagin_class_cpn,
    product_genus,
    series_ahat_half,
    series_l,
    series_todd,
    signature_cpn,
    twisted_ahat_cpn,
)
from .pairs import CompactPair, dim_gk, make_pair, rho_c, rho_n, standard_pair
from .rootkit import (
    CartanMatrix,
    Root,
    RootSystem,
    Weight,
    build_root_system,
    inner_product,
    positive_roots,
    reflect,
    rho,
    weyl_order,
)

__version__ = "0.1.0"
