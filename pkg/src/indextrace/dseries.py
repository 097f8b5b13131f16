"""Trace pipeline for discrete series of an equal-rank pair.

For a K-highest weight ``mu`` with Harish-Chandra parameter ``lam = mu + rho_c``:

* ``weyl_dim``  -- ``prod_{Phi_c+} (lam, a) / (rho_c, a)``, the K-trace of ``V_mu``
* ``formal_degree`` -- ``prod_{Phi+} (lam, a) / (rho, a)``
* ``tau_G_of_dirac_induction`` -- ``(-1)^{d/2}`` times the formal degree, or 0 if ``lam`` is singular
* ``trace_factor`` -- the scalar with ``tau_G = trace_factor * weyl_dim``

Haar measure is taken in the normalization ``vol K = vol M_1/K_1 = 1``.  No
volumes are computed: every quantity here is a ratio of root pairings of
equal degree, hence independent of how the invariant form is scaled.

The formal degree is returned as the signed product.  It is the (positive)
Plancherel mass when ``lam`` is dominant for ``Phi+``; for compact-dominant
``mu`` whose parameter lies in another chamber the product may be negative,
and the sign is kept so that the factorization holds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import FactorizationViolation, NonIntegerDimension, NotDominant, NotIntegral
from .pairs import CompactPair, compact_simple_roots, dim_gk, rho_c
from .rootkit import Weight, coroot_pairing, inner_product, rho

__all__ = [
    "TraceReport",
    "hc_parameter",
    "weyl_dim",
    "is_regular",
    "formal_degree",
    "trace_factor",
    "tau_G_of_dirac_induction",
    "pi_k",
    "check_factorization",
    "l2_index_ratio",
]


@dataclass(frozen=True)
class TraceReport:
    mu: Weight
    dim_V: int
    regular: bool
    formal_degree: Fraction
    tau_G: Fraction
    factor: Fraction
    sign: int


def _sign(p: CompactPair) -> int:
    return -1 if (dim_gk(p) // 2) % 2 else 1


def hc_parameter(p: CompactPair, mu: Weight) -> Weight:
    return mu + rho_c(p)


def _require_dominant(p: CompactPair, mu: Weight) -> None:
    for a in p.compact_positive:
        if inner_product(p.rs, mu, a) < 0:
            raise NotDominant(f"mu={mu} pairs negatively with compact root {a}")


def weyl_dim(p: CompactPair, mu: Weight) -> int:
    _require_dominant(p, mu)
    for b in compact_simple_roots(p):
        if coroot_pairing(p.rs, mu, b).denominator != 1:
            raise NotIntegral(f"<mu, {b}^vee> is not an integer for mu={mu}")
    lam = hc_parameter(p, mu)
    rc = rho_c(p)
    d = prod((inner_product(p.rs, lam, a) / inner_product(p.rs, rc, a) for a in p.compact_positive),
             start=Fraction(1))
    if d.denominator != 1 or d <= 0:
        raise NonIntegerDimension(f"Weyl dimension {d} for mu={mu} on {p!r}")
    return int(d)


def is_regular(p: CompactPair, mu: Weight) -> bool:
    lam = hc_parameter(p, mu)
    return all(inner_product(p.rs, lam, a) != 0 for a in p.rs.positive)


def formal_degree(p: CompactPair, mu: Weight) -> Fraction:
    _require_dominant(p, mu)
    lam = hc_parameter(p, mu)
    r = rho(p.rs)
    return prod((inner_product(p.rs, lam, a) / inner_product(p.rs, r, a) for a in p.rs.positive),
                start=Fraction(1))


def trace_factor(p: CompactPair, mu: Weight) -> Fraction:
    _require_dominant(p, mu)
    rs = p.rs
    lam = hc_parameter(p, mu)
    rc = rho_c(p)
    r = rho(rs)
    num = prod((inner_product(rs, lam, a) for a in p.noncompact_positive), start=Fraction(1))
    num *= prod((inner_product(rs, rc, a) for a in p.compact_positive), start=Fraction(1))
    den = prod((inner_product(rs, r, a) for a in rs.positive), start=Fraction(1))
    return _sign(p) * num / den


def tau_G_of_dirac_induction(p: CompactPair, mu: Weight) -> Fraction:
    d_h = formal_degree(p, mu)
    if not is_regular(p, mu):
        return Fraction(0)
    return _sign(p) * d_h


def pi_k(p: CompactPair, mu: Weight) -> Fraction:
    """The signed functional on R(K) closing the trace diagram.

    Follows the signed form ``(-1)^{d/2} prod (mu+rho_c, a)/(rho, a)``; the
    unsigned variant differs by ``(-1)^{d/2}``.
    """
    return _sign(p) * formal_degree(p, mu)


def check_factorization(p: CompactPair, mu: Weight) -> TraceReport:
    """Evaluate both sides of ``tau_G(DInd V_mu) = factor * tau_K(V_mu)`` and compare exactly."""
    dim_v = weyl_dim(p, mu)
    d_h = formal_degree(p, mu)
    regular = is_regular(p, mu)
    tau = tau_G_of_dirac_induction(p, mu)
    factor = trace_factor(p, mu)
    if tau != factor * dim_v:
        raise FactorizationViolation(f"tau_G={tau} but factor*dim_V={factor * dim_v} at mu={mu}, {p!r}")
    if tau != pi_k(p, mu):
        raise FactorizationViolation(f"tau_G={tau} but Pi_K={pi_k(p, mu)} at mu={mu}, {p!r}")
    return TraceReport(mu=mu, dim_V=dim_v, regular=regular, formal_degree=d_h,
                       tau_G=tau, factor=factor, sign=_sign(p))


def l2_index_ratio(p: CompactPair, mu: Weight, slice_index: Fraction | int) -> Fraction:
    """L2-index of ``D_M`` from the index of ``D_N`` on a compact K-slice.

    ``slice_index`` is the integral of ``e^{c_1(L_N)/2} A-hat(N)`` (see
    :mod:`indextrace.genera`).
    """
    return trace_factor(p, mu) * Fraction(slice_index)
