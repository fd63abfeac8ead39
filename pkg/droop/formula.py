#
# formula.py
#
# Copyright (c) 2026 droop-snr developers
#
# This file is part of droop-snr.
#
# droop-snr is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# droop-snr is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with droop-snr. If not, see <http://www.gnu.org/licenses/>.
#
"""Closed-form SNR of a chain of power-mode amplified spans.

A power-mode amplifier holds its total output power at :math:`P`. The power
it has to spend on locally generated ASE, and the power the fiber moves from
the desired signal into NLI and GAWBS, make the desired signal droop by

.. math::

   \\chi = \\chi_a \\chi_n
   = \\left(1 + \\frac{\\beta}{P}\\right)^{-1}
     \\left(1 - \\alpha_{NL} P^2 - \\gamma \\ell\\right)

in every span. After :math:`N` spans the received signal is
:math:`P \\chi^N` and everything else is noise, which gives the generalized
droop formula (GDF)

.. math::

   {\\rm SNR}_{GDF} = \\frac{1}{\\chi^{-N} - 1}.

The classical GN-model SNR neglects the droop:

.. math::

   {\\rm SNR}_{GN} = \\frac{1}{N}
     \\frac{1}{\\beta / P + \\alpha_{NL} P^2 + \\gamma \\ell}.

This module provides both SNRs, the upper bound of the GDF-SNR in terms of
the GN-SNR, the GN-to-GDF gaps, the optimal launch powers and the spectral
efficiencies. Every function is pure.
"""
from collections import namedtuple
from logging import getLogger
import math

from scipy.optimize import brentq

from droop.exceptions import ConvergenceError, DomainError, \
    DroopDomainError, NoFiniteOptimumError
from droop.units import linear_to_db


LOGGER = getLogger(__name__)

DB_PER_NEPER_HALF = 5. * math.log10(math.e)
"""dB change of a ratio :math:`1 + \\epsilon` per unit :math:`2 \\epsilon`."""


DroopFactors = namedtuple("DroopFactors", ("chi_a", "chi_n", "chi"))
"""Per-span droop factors at a given power.

Attributes:
  chi_a: ASE droop :math:`\\chi_a`.
  chi_n: redistribution droop :math:`\\chi_n`.
  chi: total droop :math:`\\chi_a \\chi_n`.
"""

Asymptotes = namedtuple(
    "Asymptotes", ("gn_linear", "gn_nonlinear", "gdf_linear", "gdf_nonlinear"))
"""Linear and nonlinear asymptotes of the GN and GDF SNRs.

Each asymptote is the exact model with the other impairment set to zero.
"""

SnrReport = namedtuple("SnrReport", (
    "power_mw", "snr_gdf", "snr_gn", "snr_gdf_ub", "gap_db_exact",
    "gap_db_approx", "snr1a", "snr1n", "snr_gdf_first_order", "gap_db_bound"))
"""Every SNR quantity of a link at one launch power.

Attributes:
  power_mw: launch power per channel, mW.
  snr_gdf: GDF-SNR.
  snr_gn: GN-SNR.
  snr_gdf_ub: upper bound of the GDF-SNR.
  gap_db_exact: GN-SNR minus GDF-SNR, dB.
  gap_db_approx: first-order approximation of the gap, dB.
  snr1a: single-span linear SNR :math:`P / \\beta`.
  snr1n: single-span nonlinear SNR :math:`1 / (\\alpha_{NL} P^2)`.
  snr_gdf_first_order: GDF-SNR with the first-order inverse droop.
  gap_db_bound: gap implied by the upper bound, dB.
"""


def _check_power(p_mw):
    p = float(p_mw)
    if not math.isfinite(p) or p <= 0:
        raise DomainError("power must be positive and finite: {0!r} mW".format(p_mw))
    return p


def _check_snr(snr):
    s = float(snr)
    if math.isnan(s) or s <= 0:
        raise DomainError("SNR must be positive: {0!r}".format(snr))
    return s


def _check_spans(n_spans):
    try:
        n = float(n_spans)
    except (TypeError, ValueError):
        n = math.nan
    if not math.isfinite(n) or int(n) != n or n < 1:
        raise DomainError(
            "n_spans must be a positive integer: {0!r}".format(n_spans))
    return int(n)


def _redistribution(p, params):
    """Fraction of the power redistributed per span, checked for validity.
    """
    u = params.alpha_nl_per_mw2 * p * p + params.gawbs_loss
    if u >= 1:
        raise DroopDomainError(p, u)
    return u


def _gdf(beta, p, u, n):
    """GDF-SNR of n spans with ASE beta and redistributed fraction u.

    The one-span case is evaluated as :math:`(1 - u) P / (\\beta + u P)`,
    which is exact when there is no redistribution.
    """
    if n == 1:
        noise = beta + u * p
        if noise == 0:
            return math.inf
        return (1. - u) * p / noise
    return gdf_snr_from_droop(math.log1p(beta / p) - math.log1p(-u), n)


def gdf_snr_from_droop(neg_log_chi, n_spans):
    """GDF-SNR of a given per-span droop.

    The SNR is evaluated as :math:`1 / {\\rm expm1}(-N \\ln \\chi)`, so that it
    keeps full relative accuracy when :math:`N (1 - \\chi) \\ll 1`.

    Args:
      neg_log_chi: :math:`-\\ln \\chi \\geq 0`.
      n_spans: number of spans.

    Returns:
      the linear SNR, infinite when there is no droop.

    Raises:
      DomainError: if neg_log_chi is negative or NaN.
    """
    n = _check_spans(n_spans)
    if math.isnan(neg_log_chi) or neg_log_chi < 0:
        raise DomainError(
            "droop exponent must not be negative: {0!r}".format(neg_log_chi))
    if neg_log_chi == 0:
        return math.inf
    return 1. / math.expm1(n * neg_log_chi)


def chi_ase(p_mw, beta_mw):
    """ASE droop of a power-mode amplifier.

    .. math::

       \\chi_a = \\left(1 + \\frac{\\beta}{P}\\right)^{-1}

    Args:
      p_mw: launch power, mW.
      beta_mw: per-span output ASE, mW.

    Returns:
      :math:`\\chi_a \\in (0, 1]`.

    Raises:
      DomainError: if p_mw is not positive or beta_mw is negative.
    """
    p = _check_power(p_mw)
    if beta_mw < 0:
        raise DomainError("beta must not be negative: {0!r}".format(beta_mw))
    return 1. / (1. + beta_mw / p)


def chi_redistribution(p_mw, params):
    """Redistribution droop due to NLI and GAWBS.

    .. math::

       \\chi_n = 1 - \\alpha_{NL} P^2 - \\gamma \\ell

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      :math:`\\chi_n \\in (0, 1]`.

    Raises:
      DroopDomainError: if the power is outside the perturbative model.
    """
    p = _check_power(p_mw)
    return 1. - _redistribution(p, params)


def total_droop(p_mw, params):
    """All droop factors at a given power.

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      a :class:`DroopFactors`.
    """
    chi_a = chi_ase(p_mw, params.beta_mw)
    chi_n = chi_redistribution(p_mw, params)
    return DroopFactors(chi_a, chi_n, chi_a * chi_n)


def snr_gdf(p_mw, params):
    """GDF-SNR, :math:`1 / (\\chi^{-N} - 1)`.

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      the linear SNR.

    Raises:
      DroopDomainError: if the power is outside the perturbative model.
    """
    p = _check_power(p_mw)
    return _gdf(params.beta_mw, p, _redistribution(p, params), params.n_spans)


def snr_gdf_first_order(p_mw, params):
    """GDF-SNR with the first-order inverse droop.

    The inverse droop is approximated by :math:`1 + x` with
    :math:`x = \\beta / P + \\alpha_{NL} P^2 + \\gamma \\ell`, which gives
    :math:`1 / ((1 + x)^N - 1)`. It always lies between :func:`snr_gdf`
    and :func:`snr_gdf_upper_bound`.

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      the linear SNR.
    """
    p = _check_power(p_mw)
    x = params.beta_mw / p + _redistribution(p, params)
    if x == 0:
        return math.inf
    return 1. / math.expm1(params.n_spans * math.log1p(x))


def snr_gn(p_mw, params):
    """GN-SNR with incoherent NLI accumulation.

    GAWBS enters the denominator as the same per-span noise-to-signal ratio
    :math:`\\gamma \\ell` it contributes to the redistribution droop.

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      the linear SNR, infinite for a noiseless chain.
    """
    p = _check_power(p_mw)
    u = params.alpha_nl_per_mw2 * p * p + params.gawbs_loss
    noise = params.beta_mw + u * p
    if noise == 0:
        return math.inf
    return p / (params.n_spans * noise)


def snr_gdf_upper_bound(snr_gn, n_spans):
    """Upper bound of the GDF-SNR given the GN-SNR.

    .. math::

       {\\rm SNR}_{GDF} \\leq \\frac{{\\rm SNR}_{GN}}
         {1 + \\frac{1 - 1/N}{2 {\\rm SNR}_{GN}}}

    It holds at any power and barely depends on :math:`N`.

    Args:
      snr_gn: GN-SNR.
      n_spans: number of spans.

    Returns:
      the bound.
    """
    s = _check_snr(snr_gn)
    n = _check_spans(n_spans)
    if math.isinf(s):
        return s
    return s / (1. + (1. - 1. / n) / (2. * s))


def gap_db_approx(snr_gn, n_spans):
    """Approximate GN-to-GDF SNR gap.

    .. math::

       {\\rm SNR}_{GN}({\\rm dB}) - {\\rm SNR}_{GDF}({\\rm dB}) \\cong
       \\frac{5 \\log_{10}(e) (1 - 1/N)}{{\\rm SNR}_{GN}}

    Args:
      snr_gn: GN-SNR.
      n_spans: number of spans.

    Returns:
      the gap in dB.
    """
    s = _check_snr(snr_gn)
    n = _check_spans(n_spans)
    return DB_PER_NEPER_HALF * (1. - 1. / n) / s


def gap_db_bound(snr_gn, n_spans):
    """GN-to-GDF SNR gap implied by :func:`snr_gdf_upper_bound`.

    Args:
      snr_gn: GN-SNR.
      n_spans: number of spans.

    Returns:
      :math:`10 \\log_{10}(1 + (1 - 1/N) / (2 {\\rm SNR}_{GN}))` in dB.
    """
    s = _check_snr(snr_gn)
    n = _check_spans(n_spans)
    return 10. * math.log10(1. + (1. - 1. / n) / (2. * s))


def optimal_power_gn(params):
    """Launch power maximizing the GN-SNR.

    At the optimum the ASE is twice the NLI, :math:`\\beta = 2 \\alpha_{NL} P^3`.

    Args:
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      :math:`(\\beta / (2 \\alpha_{NL}))^{1/3}` in mW.

    Raises:
      NoFiniteOptimumError: if there is no NLI or no ASE.
    """
    if params.alpha_nl_per_mw2 <= 0:
        raise NoFiniteOptimumError("no NLI: the SNR increases with the power")
    if params.beta_mw <= 0:
        raise NoFiniteOptimumError("no ASE: the SNR decreases with the power")
    return (params.beta_mw / (2. * params.alpha_nl_per_mw2)) ** (1. / 3.)


def max_snr_gn(params):
    """Maximum GN-SNR, :math:`1 / (3 N \\alpha_{NL} P_{oGN}^2)`.

    Args:
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      the linear SNR.
    """
    p = optimal_power_gn(params)
    return (1. / params.n_spans) / (3. * params.alpha_nl_per_mw2 * p * p)


def _stationarity(p, params):
    """Residual :math:`\\beta \\chi(P) - 2 \\alpha_{NL} P^3` of the GDF optimum.
    """
    chi = total_droop(p, params).chi
    return params.beta_mw * chi - 2. * params.alpha_nl_per_mw2 * p ** 3


def optimal_power_gdf(params, tol=1e-12, max_iter=100, damping=1.):
    """Launch power maximizing the GDF-SNR.

    The GDF-SNR is maximum where the total droop is, i.e. where
    :math:`\\beta \\chi(P) = 2 \\alpha_{NL} P^3`. The optimum is the fixed
    point of

    .. math::

       P \\leftarrow P_{oGN} \\chi(P)^{1/3},

    which is iterated from :math:`P_{oGN}`. If the iteration does not settle,
    the stationarity condition is bracketed in
    :math:`[P_{oGN} / 2, P_{oGN}]` and solved with Brent's method.

    Args:
      params: a :class:`droop.units.DerivedParams`.
      tol: relative tolerance on the iterates. (default: 1e-12)
      max_iter: maximum number of iterations. (default: 100)
      damping: relaxation factor in (0, 1]. (default: 1)

    Returns:
      the optimal power in mW, not larger than :func:`optimal_power_gn`.

    Raises:
      NoFiniteOptimumError: if there is no NLI or no ASE.
      ConvergenceError: if neither the iteration nor the fallback converge.
    """
    if not 0 < damping <= 1:
        raise DomainError("damping must be in (0, 1]: {0!r}".format(damping))
    p_gn = optimal_power_gn(params)

    p = p_gn
    try:
        for i in range(max_iter):
            target = p_gn * total_droop(p, params).chi ** (1. / 3.)
            nxt = p + damping * (target - p)
            if abs(nxt - p) <= tol * nxt:
                LOGGER.debug("GDF optimum converged in %d iterations", i + 1)
                return min(nxt, p_gn)
            p = nxt
    except DroopDomainError:
        LOGGER.debug("fixed point left the model domain at P = %r mW", p)

    LOGGER.warning(
        "fixed point did not converge in %d iterations; bracketing", max_iter)
    lo, hi = p_gn / 2., p_gn
    try:
        f_lo, f_hi = _stationarity(lo, params), _stationarity(hi, params)
    except DroopDomainError:
        raise ConvergenceError(
            "GDF optimum is outside the model domain", p, math.nan)
    if f_lo * f_hi > 0:
        raise ConvergenceError(
            "GDF optimum is not bracketed", p, _stationarity(p, params))
    if f_hi == 0:
        return hi
    try:
        return brentq(
            _stationarity, lo, hi, args=(params,), xtol=tol * lo,
            maxiter=max_iter)
    except RuntimeError as e:
        raise ConvergenceError(str(e), p, _stationarity(p, params))


def spectral_efficiency(snr):
    """Spectral efficiency per mode, :math:`2 \\log_2(1 + {\\rm SNR})`.

    This is the AWGN capacity of a dual-polarization channel, a lower bound
    of the capacity of the nonlinear channel.

    Args:
      snr: non-negative linear SNR.

    Returns:
      the spectral efficiency in b/s/Hz.
    """
    s = float(snr)
    if math.isnan(s) or s < 0:
        raise DomainError("SNR must not be negative: {0!r}".format(snr))
    return 2. * math.log1p(s) / math.log(2.)


def se_gap_approx(snr_ogn):
    """Approximate gap between the top GN and GDF spectral efficiencies.

    .. math::

       {\\rm SE}_{oGN} - {\\rm SE}_{oGDF} \\cong \\frac{2}{\\ln 2}
       \\frac{{\\rm SNR}_{oGN}}{1 + 2 {\\rm SNR}_{oGN} + 2 {\\rm SNR}_{oGN}^2}

    Args:
      snr_ogn: maximum GN-SNR.

    Returns:
      the gap in b/s/Hz.
    """
    s = _check_snr(snr_ogn)
    if math.isinf(s):
        return 0.
    return 2. / math.log(2.) * s / (1. + 2. * s + 2. * s * s)


def single_span_snrs(p_mw, params):
    """Single-span linear and nonlinear SNRs.

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      a tuple of :math:`P / \\beta` and :math:`1 / (\\alpha_{NL} P^2)`.
    """
    p = _check_power(p_mw)
    snr1a = p / params.beta_mw if params.beta_mw else math.inf
    nl = params.alpha_nl_per_mw2 * p * p
    snr1n = 1. / nl if nl else math.inf
    return snr1a, snr1n


def asymptotes(p_mw, params):
    """Linear and nonlinear asymptotes of the GN and GDF SNRs.

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      an :class:`Asymptotes`.

    Raises:
      DroopDomainError: if :math:`\\alpha_{NL} P^2 \\geq 1`.
    """
    p = _check_power(p_mw)
    n = params.n_spans
    beta = params.beta_mw
    nl = params.alpha_nl_per_mw2 * p * p
    if nl >= 1:
        raise DroopDomainError(p, nl)

    gn_linear = p / (n * beta) if beta else math.inf
    gn_nonlinear = 1. / (n * nl) if nl else math.inf
    return Asymptotes(
        gn_linear=gn_linear,
        gn_nonlinear=gn_nonlinear,
        gdf_linear=_gdf(beta, p, 0., n),
        gdf_nonlinear=_gdf(0., p, nl, n))


def gap_db(snr_gn, snr_gdf):
    """Difference in dB between two SNRs; zero when both are infinite.
    """
    if math.isinf(snr_gn) and math.isinf(snr_gdf):
        return 0.
    return linear_to_db(snr_gn) - linear_to_db(snr_gdf)


def snr_report(p_mw, params):
    """Compute every SNR quantity at one launch power.

    Args:
      p_mw: launch power, mW.
      params: a :class:`droop.units.DerivedParams`.

    Returns:
      a :class:`SnrReport`.

    Raises:
      DroopDomainError: if the power is outside the perturbative model.
    """
    p = _check_power(p_mw)
    gdf = snr_gdf(p, params)
    gn = snr_gn(p, params)
    n = params.n_spans
    snr1a, snr1n = single_span_snrs(p, params)
    return SnrReport(
        power_mw=p,
        snr_gdf=gdf,
        snr_gn=gn,
        snr_gdf_ub=snr_gdf_upper_bound(gn, n),
        gap_db_exact=gap_db(gn, gdf),
        gap_db_approx=gap_db_approx(gn, n),
        snr1a=snr1a,
        snr1n=snr1n,
        snr_gdf_first_order=snr_gdf_first_order(p, params),
        gap_db_bound=gap_db_bound(gn, n))
