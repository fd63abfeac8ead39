#
# config.py
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
"""Load link configurations from JSON files.

A configuration file is a flat JSON object, for example the bundled
reference link::

  {
    "span_length_km": 78.0,
    "loss_db_per_km": 0.171,
    "noise_figure_db": 8.0,
    "bandwidth_ghz": 33.0,
    "center_wavelength_nm": 1550.0,
    "n_spans": 228,
    "alpha_nl_per_mw2": 4.1e-4,
    "gamma_gawbs_per_km": 0.0
  }

``center_wavelength_nm`` and ``gamma_gawbs_per_km`` are optional and default
to 1550 and 0, respectively. Any other key is rejected.
"""
import json
from logging import getLogger
from os import path

from droop.exceptions import ConfigError
from droop.units import DEFAULT_WAVELENGTH_NM, LinkConfig


LOGGER = getLogger(__name__)

REFERENCE = "reference"
"""Name which resolves to the bundled reference configuration."""

REFERENCE_PATH = path.join(path.dirname(__file__), "data", "reference.json")
"""Path of the bundled reference configuration."""

REQUIRED_KEYS = (
    "span_length_km", "loss_db_per_km", "noise_figure_db", "bandwidth_ghz",
    "n_spans", "alpha_nl_per_mw2")
"""Keys every configuration must have."""

DEFAULTS = {
    "center_wavelength_nm": DEFAULT_WAVELENGTH_NM,
    "gamma_gawbs_per_km": 0.,
}
"""Optional keys and their default values."""


def parse_config(obj):
    """Build a link configuration from a decoded JSON object.

    Args:
      obj: a dict mapping configuration keys to numbers.

    Returns:
      a :class:`droop.units.LinkConfig`.

    Raises:
      ConfigError: if a key is unknown or missing, or a value is invalid.
    """
    if not isinstance(obj, dict):
        raise ConfigError("configuration must be a JSON object")

    for key in sorted(obj):
        if key not in REQUIRED_KEYS and key not in DEFAULTS:
            raise ConfigError("unknown configuration key: {0}".format(key), key)
    for key in REQUIRED_KEYS:
        if key not in obj:
            raise ConfigError("missing configuration key: {0}".format(key), key)

    values = dict(DEFAULTS)
    values.update(obj)
    return LinkConfig(**values)


def load_config(filepath):
    """Load a link configuration from a file.

    Args:
      filepath: path of a JSON file, or :data:`REFERENCE` for the bundled
        reference link.

    Returns:
      a :class:`droop.units.LinkConfig`.

    Raises:
      ConfigError: if the file cannot be read or parsed, or the
        configuration is invalid.
    """
    if filepath == REFERENCE:
        filepath = REFERENCE_PATH

    try:
        with open(filepath) as fp:
            obj = json.load(fp)
    except (IOError, OSError) as e:
        raise ConfigError("cannot read {0}: {1}".format(filepath, e))
    except ValueError as e:
        raise ConfigError("cannot parse {0}: {1}".format(filepath, e))

    cfg = parse_config(obj)
    LOGGER.info("loaded configuration from %s", filepath)
    return cfg


def reference_config():
    """Return the bundled reference link configuration.
    """
    return load_config(REFERENCE)
