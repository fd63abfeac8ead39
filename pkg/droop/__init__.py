#
# __init__.py
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
"""Compute the SNR of power-mode amplified optical links.

In a chain of amplifiers working at constant output power, every amplifier
and every fiber span steals a fraction of the desired signal and gives it to
noise. The generalized droop formula (GDF) accounts for this signal droop
and predicts an SNR lower than the one of the Gaussian-noise (GN) model,
which treats ASE and nonlinear interference as purely additive.

This package provides

- :mod:`droop.formula`: closed-form GDF and GN SNRs, bounds, gaps, optimal
  powers and spectral efficiencies,
- :mod:`droop.chain`: a span-by-span power bookkeeping of the chain, which
  checks the closed forms without using them,
- :mod:`droop.sweep`: power and span-count sweeps,
- :mod:`droop.config` and :mod:`droop.report`: JSON configurations and CSV
  outputs of the ``droop-snr`` command.

The top level module provides three constructor functions, which create the
derived parameters of a link.
"""
__version__ = "0.1.0"

from droop.config import reference_config
from droop.units import LinkConfig, derive_params


def reference_params():
    """Derived parameters of the bundled reference link.

    Returns:
      a :class:`droop.units.DerivedParams`.
    """
    return derive_params(reference_config())


def link_params(span_length_km, loss_db_per_km, noise_figure_db,
                bandwidth_ghz, n_spans, alpha_nl_per_mw2, **kwargs):
    """Derived parameters of a link given by its physical description.

    Args:
      span_length_km: span length, km.
      loss_db_per_km: fiber loss, dB/km.
      noise_figure_db: amplifier noise figure, dB.
      bandwidth_ghz: signal bandwidth, GHz.
      n_spans: number of spans.
      alpha_nl_per_mw2: NLI coefficient per span, 1/mW^2.
      kwargs: center_wavelength_nm and gamma_gawbs_per_km.

    Returns:
      a :class:`droop.units.DerivedParams`.
    """
    return derive_params(LinkConfig(
        span_length_km=span_length_km, loss_db_per_km=loss_db_per_km,
        noise_figure_db=noise_figure_db, bandwidth_ghz=bandwidth_ghz,
        n_spans=n_spans, alpha_nl_per_mw2=alpha_nl_per_mw2, **kwargs))


__all__ = ("__version__", "reference_config", "reference_params",
           "link_params")
