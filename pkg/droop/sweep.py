#
# sweep.py
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
"""Power sweeps, span-count sweeps and optimum summaries of a link.

:func:`sweep_power`
    SNRs, gaps and asymptotes on a uniform grid of launch powers in dBm.
    Powers where the perturbative model does not hold give rows whose
    ``valid`` flag is False and whose model fields are None.
:func:`sweep_spans`
    Top spectral efficiencies of the GN and GDF models versus the number of
    spans.
:func:`top_markers`
    Optimal powers and top SNRs of one link, together with the top GDF-SNR
    predicted from the top GN-SNR.

Every row is a pure function of the configuration and its grid point, and
rows are returned in grid order.
"""
from collections import namedtuple
from logging import getLogger
import math

import numpy as np

from droop import formula
from droop.exceptions import ConfigError, DroopDomainError
from droop.units import MAX_SPANS, dbm_to_mw, derive_params, linear_to_db


LOGGER = getLogger(__name__)

DEFAULT_SPAN_RANGE = (10, 500, 10)
"""Default (n_min, n_max, n_step) of :func:`sweep_spans`."""

SweepRow = namedtuple("SweepRow", (
    "p_dbm", "valid", "snr_gn_db", "snr_gdf_db", "snr_gdf_ub_db",
    "gap_db_exact", "gap_db_approx", "ub_gap_db", "gn_lin_asym_db",
    "gn_nl_asym_db", "gdf_lin_asym_db", "gdf_nl_asym_db"))
"""One launch power of a power sweep. SNRs and gaps are in dB."""

SpanSweepRow = namedtuple("SpanSweepRow", (
    "n_spans", "snr_o_gn_db", "snr_o_gdf_db", "se_o_gn", "se_o_gdf",
    "se_gap_exact", "se_gap_approx"))
"""One span count of a span sweep. Spectral efficiencies are in b/s/Hz."""

OptimumSummary = namedtuple("OptimumSummary", (
    "p_o_gn_mw", "snr_o_gn", "p_o_gdf_mw", "snr_o_gdf", "snr_o_gdf_predicted",
    "prediction_error_db", "power_ratio", "se_o_gn", "se_o_gdf"))
"""Optimal powers and top SNRs of a link.

Attributes:
  p_o_gn_mw: power maximizing the GN-SNR, mW.
  snr_o_gn: maximum GN-SNR.
  p_o_gdf_mw: power maximizing the GDF-SNR, mW.
  snr_o_gdf: maximum GDF-SNR.
  snr_o_gdf_predicted: upper bound of the GDF-SNR evaluated at snr_o_gn.
  prediction_error_db: predicted minus exact top GDF-SNR, dB.
  power_ratio: p_o_gdf_mw / p_o_gn_mw.
  se_o_gn: top GN spectral efficiency, b/s/Hz.
  se_o_gdf: top GDF spectral efficiency, b/s/Hz.
"""


def power_grid(p_min_dbm, p_max_dbm, step_db):
    """Uniform grid of powers in dBm, both ends included when on the grid.

    Args:
      p_min_dbm: first power.
      p_max_dbm: last power.
      step_db: spacing.

    Returns:
      a numpy array of powers in dBm.

    Raises:
      ConfigError: if the grid is empty or not finite.
    """
    for key, v in (("p_min_dbm", p_min_dbm), ("p_max_dbm", p_max_dbm),
                   ("step_db", step_db)):
        if not math.isfinite(v):
            raise ConfigError("{0} must be finite: {1!r}".format(key, v), key)
    if p_min_dbm >= p_max_dbm:
        raise ConfigError(
            "p_min_dbm must be smaller than p_max_dbm: {0!r} >= {1!r}".format(
                p_min_dbm, p_max_dbm), "p_min_dbm")
    if step_db <= 0:
        raise ConfigError(
            "step_db must be positive: {0!r}".format(step_db), "step_db")

    n = int(math.floor((p_max_dbm - p_min_dbm) / step_db + 1e-9)) + 1
    # rounding keeps grid points such as -0.5 from becoming -0.49999999999
    return np.round(p_min_dbm + step_db * np.arange(n), 9) + 0.


def _power_row(p_dbm, params):
    p_dbm = float(p_dbm)
    p = dbm_to_mw(p_dbm)
    try:
        rep = formula.snr_report(p, params)
        asym = formula.asymptotes(p, params)
    except DroopDomainError as e:
        LOGGER.debug("invalid row at %r dBm: %s", p_dbm, e)
        return SweepRow(p_dbm, False, *([None] * (len(SweepRow._fields) - 2)))

    return SweepRow(
        p_dbm=p_dbm,
        valid=True,
        snr_gn_db=linear_to_db(rep.snr_gn),
        snr_gdf_db=linear_to_db(rep.snr_gdf),
        snr_gdf_ub_db=linear_to_db(rep.snr_gdf_ub),
        gap_db_exact=rep.gap_db_exact,
        gap_db_approx=rep.gap_db_approx,
        ub_gap_db=formula.gap_db(rep.snr_gdf_ub, rep.snr_gdf),
        gn_lin_asym_db=linear_to_db(asym.gn_linear),
        gn_nl_asym_db=linear_to_db(asym.gn_nonlinear),
        gdf_lin_asym_db=linear_to_db(asym.gdf_linear),
        gdf_nl_asym_db=linear_to_db(asym.gdf_nonlinear))


def sweep_power(cfg, p_min_dbm, p_max_dbm, step_db):
    """Sweep the launch power of a link.

    Args:
      cfg: a :class:`droop.units.LinkConfig`.
      p_min_dbm: first power, dBm.
      p_max_dbm: last power, dBm.
      step_db: power spacing, dB.

    Returns:
      a list of :class:`SweepRow`, one per grid point.

    Raises:
      ConfigError: if the configuration or the grid is invalid.
    """
    params = derive_params(cfg)
    grid = power_grid(p_min_dbm, p_max_dbm, step_db)
    LOGGER.debug("sweeping %d powers", len(grid))
    return [_power_row(p, params) for p in grid]


def peak_row(rows):
    """Valid row with the largest GDF-SNR.

    Args:
      rows: rows returned by :func:`sweep_power`.

    Returns:
      the :class:`SweepRow` at the top of the GDF-SNR curve, or None if no
      row is valid.
    """
    valid = [r for r in rows if r.valid]
    if not valid:
        return None
    return valid[int(np.argmax([r.snr_gdf_db for r in valid]))]


def _optimal_powers(params):
    return formula.optimal_power_gn(params), formula.optimal_power_gdf(params)


def sweep_spans(cfg, n_min=DEFAULT_SPAN_RANGE[0], n_max=DEFAULT_SPAN_RANGE[1],
                n_step=DEFAULT_SPAN_RANGE[2]):
    """Sweep the number of spans of a link at optimal power.

    The optimal powers do not depend on the number of spans; they are
    computed once and every span count is evaluated at them.

    Args:
      cfg: a :class:`droop.units.LinkConfig`; its n_spans is ignored.
      n_min: first span count. (default: 10)
      n_max: last span count. (default: 500)
      n_step: span count spacing. (default: 10)

    Returns:
      a list of :class:`SpanSweepRow`.

    Raises:
      ConfigError: if the span range is invalid.
      NoFiniteOptimumError: if the link has no NLI.
    """
    for key, v in (("n_min", n_min), ("n_max", n_max), ("n_step", n_step)):
        if int(v) != v or v < 1:
            raise ConfigError(
                "{0} must be a positive integer: {1!r}".format(key, v), key)
    if n_max > MAX_SPANS:
        raise ConfigError(
            "n_max must not exceed {0}: {1!r}".format(MAX_SPANS, n_max), "n_max")
    if n_min > n_max:
        raise ConfigError(
            "n_min must not exceed n_max: {0!r} > {1!r}".format(n_min, n_max),
            "n_min")

    params = derive_params(cfg)
    p_gn, p_gdf = _optimal_powers(params)

    rows = []
    for n in range(int(n_min), int(n_max) + 1, int(n_step)):
        p = params.with_spans(n)
        snr_o_gn = formula.snr_gn(p_gn, p)
        snr_o_gdf = formula.snr_gdf(p_gdf, p)
        se_o_gn = formula.spectral_efficiency(snr_o_gn)
        se_o_gdf = formula.spectral_efficiency(snr_o_gdf)
        rows.append(SpanSweepRow(
            n_spans=n,
            snr_o_gn_db=linear_to_db(snr_o_gn),
            snr_o_gdf_db=linear_to_db(snr_o_gdf),
            se_o_gn=se_o_gn,
            se_o_gdf=se_o_gdf,
            se_gap_exact=se_o_gn - se_o_gdf,
            se_gap_approx=formula.se_gap_approx(snr_o_gn)))
    return rows


def top_markers(cfg):
    """Optimal powers and top SNRs of a link.

    The predicted top GDF-SNR is the upper bound of the GDF-SNR evaluated at
    the top GN-SNR.

    Args:
      cfg: a :class:`droop.units.LinkConfig`.

    Returns:
      an :class:`OptimumSummary`.

    Raises:
      NoFiniteOptimumError: if the link has no NLI.
    """
    params = derive_params(cfg)
    p_gn, p_gdf = _optimal_powers(params)
    snr_o_gn = formula.snr_gn(p_gn, params)
    snr_o_gdf = formula.snr_gdf(p_gdf, params)
    predicted = formula.snr_gdf_upper_bound(snr_o_gn, params.n_spans)
    return OptimumSummary(
        p_o_gn_mw=p_gn,
        snr_o_gn=snr_o_gn,
        p_o_gdf_mw=p_gdf,
        snr_o_gdf=snr_o_gdf,
        snr_o_gdf_predicted=predicted,
        prediction_error_db=formula.gap_db(predicted, snr_o_gdf),
        power_ratio=p_gdf / p_gn,
        se_o_gn=formula.spectral_efficiency(snr_o_gn),
        se_o_gdf=formula.spectral_efficiency(snr_o_gdf))
