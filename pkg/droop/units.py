#
# units.py
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
"""Unit conversions and the link parameters of a power-mode amplified chain.

A link is described by a :class:`LinkConfig` in engineering units
(km, dB, GHz, nm). Every model quantity, however, is computed from the
linear-unit working set :class:`DerivedParams` returned by
:func:`derive_params`. Powers are always expressed in mW; dBm only appears
at the input and output boundaries.

The equivalent input power of the ASE generated in each amplifier is

.. math::

   \\mu_a = h \\nu F_N B,

and the per-span output ASE without droop is :math:`\\beta = \\mu_a / L`,
where :math:`L < 1` is the linear span loss.
"""
from collections import namedtuple
import math
import numbers

from scipy.constants import c, h

from droop.exceptions import ConfigError, DomainError


SPEED_OF_LIGHT = c
"""Speed of light in vacuum, m/s."""

PLANCK = h
"""Planck constant, J s."""

DEFAULT_WAVELENGTH_NM = 1550.
"""Default carrier wavelength."""

MAX_SPANS = 10 ** 5
"""Largest number of spans a chain may have."""


def _finite(x, what):
    """Return x as a float or raise DomainError if it is not finite.
    """
    try:
        v = float(x)
    except (TypeError, ValueError):
        raise DomainError("{0} must be a number: {1!r}".format(what, x))
    if not math.isfinite(v):
        raise DomainError("{0} must be finite: {1!r}".format(what, x))
    return v


def db_to_linear(x_db):
    """Convert a value in dB to a linear ratio.

    Args:
      x_db: a finite value in dB.

    Returns:
      :math:`10^{x/10}`.

    Raises:
      DomainError: if x_db is not finite.
    """
    return 10. ** (_finite(x_db, "dB value") / 10.)


def linear_to_db(x):
    """Convert a linear ratio to dB.

    Infinity maps to infinity so that the SNR of a noiseless chain stays
    representable, and zero maps to minus infinity for an SNR which
    underflows.

    Args:
      x: a non-negative ratio.

    Returns:
      :math:`10 \\log_{10} x`.

    Raises:
      DomainError: if x is negative or NaN.
    """
    v = float(x)
    if math.isnan(v) or v < 0:
        raise DomainError("ratio must not be negative: {0!r}".format(x))
    if math.isinf(v):
        return v
    if v == 0:
        return -math.inf
    return 10. * math.log10(v)


def dbm_to_mw(p_dbm):
    """Convert a power in dBm to mW.

    Args:
      p_dbm: a finite power in dBm.

    Returns:
      the power in mW.

    Raises:
      DomainError: if p_dbm is not finite.
    """
    return 10. ** (_finite(p_dbm, "power in dBm") / 10.)


def mw_to_dbm(p_mw):
    """Convert a power in mW to dBm.

    Args:
      p_mw: a positive finite power in mW.

    Returns:
      the power in dBm.

    Raises:
      DomainError: if p_mw is not a positive finite number.
    """
    v = _finite(p_mw, "power in mW")
    if v <= 0:
        raise DomainError("power must be positive: {0!r} mW".format(p_mw))
    return 10. * math.log10(v)


class LinkConfig(namedtuple("LinkConfig", (
        "span_length_km", "loss_db_per_km", "noise_figure_db",
        "bandwidth_ghz", "center_wavelength_nm", "n_spans",
        "alpha_nl_per_mw2", "gamma_gawbs_per_km"))):
    """A link of identical spans in engineering units.

    Args:
      span_length_km: span length in km.
      loss_db_per_km: fiber attenuation in dB/km.
      noise_figure_db: amplifier noise figure in dB.
      bandwidth_ghz: per-channel ASE and receiver bandwidth in GHz.
      center_wavelength_nm: carrier wavelength in nm. (default: 1550)
      n_spans: number of spans, a positive integer.
      alpha_nl_per_mw2: per-span NLI coefficient in 1/mW^2.
      gamma_gawbs_per_km: GAWBS coefficient in 1/km. (default: 0)

    Raises:
      ConfigError: if a field violates its invariant. The error names the key.
    """
    __slots__ = ()

    def __new__(
            cls, span_length_km, loss_db_per_km, noise_figure_db,
            bandwidth_ghz, center_wavelength_nm=DEFAULT_WAVELENGTH_NM,
            n_spans=1, alpha_nl_per_mw2=0., gamma_gawbs_per_km=0.):
        values = {}
        for key, v in (
                ("span_length_km", span_length_km),
                ("loss_db_per_km", loss_db_per_km),
                ("noise_figure_db", noise_figure_db),
                ("bandwidth_ghz", bandwidth_ghz),
                ("center_wavelength_nm", center_wavelength_nm),
                ("alpha_nl_per_mw2", alpha_nl_per_mw2),
                ("gamma_gawbs_per_km", gamma_gawbs_per_km)):
            if isinstance(v, bool) or not isinstance(v, numbers.Real):
                raise ConfigError(
                    "{0} must be a number: {1!r}".format(key, v), key)
            if not math.isfinite(v):
                raise ConfigError(
                    "{0} must be finite: {1!r}".format(key, v), key)
            values[key] = float(v)

        for key in ("span_length_km", "loss_db_per_km", "bandwidth_ghz",
                    "center_wavelength_nm"):
            if values[key] <= 0:
                raise ConfigError(
                    "{0} must be positive: {1!r}".format(key, values[key]), key)
        for key in ("alpha_nl_per_mw2", "gamma_gawbs_per_km"):
            if values[key] < 0:
                raise ConfigError(
                    "{0} must not be negative: {1!r}".format(
                        key, values[key]), key)

        if isinstance(n_spans, bool) or not isinstance(n_spans, numbers.Real) \
                or not math.isfinite(n_spans) or n_spans != int(n_spans):
            raise ConfigError(
                "n_spans must be an integer: {0!r}".format(n_spans), "n_spans")
        if not 1 <= n_spans <= MAX_SPANS:
            raise ConfigError(
                "n_spans must be in [1, {0}]: {1!r}".format(MAX_SPANS, n_spans),
                "n_spans")

        return super(LinkConfig, cls).__new__(
            cls, n_spans=int(n_spans), **values)

    def replace(self, **kwargs):
        """Return a validated copy with some fields replaced.
        """
        fields = self._asdict()
        fields.update(kwargs)
        return LinkConfig(**fields)


class DerivedParams(namedtuple("DerivedParams", (
        "span_loss_linear", "mu_a_mw", "beta_mw", "alpha_nl_per_mw2",
        "gawbs_loss", "n_spans"))):
    """Linear-unit working set of a link.

    Instances returned by :func:`derive_params` always have a positive ASE.
    Instances built directly, or through :meth:`without_ase`, may have zero
    ASE so that the ideal limits of the model can be evaluated.

    Args:
      span_loss_linear: span loss :math:`L \\in (0, 1]`.
      mu_a_mw: equivalent input ASE power per span, mW.
      beta_mw: per-span output ASE without droop, mW.
      alpha_nl_per_mw2: per-span NLI coefficient, 1/mW^2.
      gawbs_loss: :math:`\\gamma \\ell`, fraction of power scattered per span.
      n_spans: number of spans.

    Raises:
      DomainError: if gawbs_loss is not in [0, 1) or another field is
        negative or not finite.
    """
    __slots__ = ()

    def __new__(
            cls, span_loss_linear, mu_a_mw, beta_mw, alpha_nl_per_mw2,
            gawbs_loss, n_spans):
        loss = _finite(span_loss_linear, "span_loss_linear")
        if not 0 < loss <= 1:
            raise DomainError(
                "span_loss_linear must be in (0, 1]: {0!r}".format(loss))
        for name, v in (("mu_a_mw", mu_a_mw), ("beta_mw", beta_mw),
                        ("alpha_nl_per_mw2", alpha_nl_per_mw2)):
            if _finite(v, name) < 0:
                raise DomainError("{0} must not be negative: {1!r}".format(name, v))
        gawbs = _finite(gawbs_loss, "gawbs_loss")
        if gawbs >= 1:
            raise DomainError("GAWBS removes all power per span")
        if gawbs < 0:
            raise DomainError("gawbs_loss must not be negative: {0!r}".format(gawbs))
        n = _finite(n_spans, "n_spans")
        if int(n) != n or not 1 <= n <= MAX_SPANS:
            raise DomainError(
                "n_spans must be an integer in [1, {0}]: {1!r}".format(
                    MAX_SPANS, n_spans))
        return super(DerivedParams, cls).__new__(
            cls, loss, float(mu_a_mw), float(beta_mw), float(alpha_nl_per_mw2),
            gawbs, int(n_spans))

    @property
    def span_loss_db(self):
        """Span loss in dB, a positive number.
        """
        return -10. * math.log10(self.span_loss_linear)

    def with_spans(self, n_spans):
        """Return a copy describing a chain of n_spans spans.
        """
        return self._replace_checked(n_spans=n_spans)

    def without_ase(self):
        """Return a copy whose amplifiers add no ASE.
        """
        return self._replace_checked(mu_a_mw=0., beta_mw=0.)

    def without_nli(self):
        """Return a copy whose fibers generate no NLI.
        """
        return self._replace_checked(alpha_nl_per_mw2=0.)

    def _replace_checked(self, **kwargs):
        fields = self._asdict()
        fields.update(kwargs)
        return DerivedParams(**fields)


def carrier_frequency_hz(center_wavelength_nm):
    """Carrier frequency of a given wavelength.

    Args:
      center_wavelength_nm: wavelength in nm.

    Returns:
      :math:`\\nu = c / \\lambda` in Hz.
    """
    return SPEED_OF_LIGHT / (center_wavelength_nm * 1e-9)


def derive_params(cfg):
    """Derive the linear-unit working set of a link.

    Args:
      cfg: a :class:`LinkConfig`.

    Returns:
      a :class:`DerivedParams`.

    Raises:
      TypeError: if cfg is not a LinkConfig.
      ConfigError: if the span loss is not in (0, 1).
      DomainError: if GAWBS removes all power per span.
    """
    if not isinstance(cfg, LinkConfig):
        raise TypeError("Type of given config isn't acceptable:", cfg)

    loss = 10. ** (-cfg.loss_db_per_km * cfg.span_length_km / 10.)
    if not 0 < loss < 1:
        raise ConfigError(
            "span loss must be in (0, 1), got {0!r}".format(loss),
            "loss_db_per_km")

    nu = carrier_frequency_hz(cfg.center_wavelength_nm)
    # W -> mW
    mu_a = PLANCK * nu * db_to_linear(cfg.noise_figure_db) \
        * cfg.bandwidth_ghz * 1e9 * 1e3

    return DerivedParams(
        span_loss_linear=loss,
        mu_a_mw=mu_a,
        beta_mw=mu_a / loss,
        alpha_nl_per_mw2=cfg.alpha_nl_per_mw2,
        gawbs_loss=cfg.gamma_gawbs_per_km * cfg.span_length_km,
        n_spans=cfg.n_spans)
