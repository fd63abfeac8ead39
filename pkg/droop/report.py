#
# report.py
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
"""Serialize results as CSV tables and plain-text reports.

Every CSV file starts with ``#`` comment lines carrying its
:class:`RunManifest`, followed by a header row and the data rows. Stripping
the comment lines leaves a plain comma-separated table.

Numbers are formatted independently of the locale:

- floats with 9 significant digits (``'.9g'``),
- dB values rounded to 6 decimals first, then with 9 significant digits,
- integers as integers, flags as ``1`` or ``0``,
- infinities as ``inf`` and ``-inf``, model-invalid cells as ``NA``.

Negative zero is written as ``0``.
"""
import csv
from collections import namedtuple
import math

from droop import __version__
from droop.units import linear_to_db, mw_to_dbm

TOOL_NAME = "droop-snr"

NA = "NA"
"""Token of a model-invalid cell."""

DB_DECIMALS = 6
"""Decimals dB values are rounded to before formatting."""


RunManifest = namedtuple("RunManifest", (
    "config_echo", "derived_echo", "tool_version", "subcommand", "grid",
    "results"))
"""Everything needed to reproduce an output file.

Attributes:
  config_echo: list of (key, value) pairs of the resolved configuration.
  derived_echo: list of (key, value) pairs of the derived parameters in
    linear and dB units.
  tool_version: version of this package.
  subcommand: name of the CLI subcommand.
  grid: list of (key, value) pairs describing the grid or the power.
  results: list of (key, value) pairs of scalar results.
"""


def format_float(x):
    """Format a float with 9 significant digits.
    """
    if x is None:
        return NA
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0:
        x = 0.
    return format(x, ".9g")


def format_db(x):
    """Format a dB value, rounded to :data:`DB_DECIMALS` decimals.
    """
    if x is None:
        return NA
    x = float(x)
    if math.isinf(x):
        return format_float(x)
    return format_float(round(x, DB_DECIMALS))


def format_int(x):
    """Format an integer.
    """
    return NA if x is None else str(int(x))


def format_flag(x):
    """Format a boolean flag as 1 or 0.
    """
    return "1" if x else "0"


def _dbm(p_mw):
    return -math.inf if p_mw == 0 else mw_to_dbm(p_mw)


def config_echo(cfg):
    """Resolved configuration as (key, value) pairs.

    Values are written with :func:`repr`, which round-trips exactly.
    """
    return [(k, repr(v)) for k, v in zip(cfg._fields, cfg)]


def derived_echo(params):
    """Derived parameters as (key, value) pairs, in linear and dB units.
    """
    return [
        ("span_loss_linear", format_float(params.span_loss_linear)),
        ("span_loss_db", format_db(params.span_loss_db)),
        ("mu_a_mw", format_float(params.mu_a_mw)),
        ("mu_a_dbm", format_db(_dbm(params.mu_a_mw))),
        ("beta_mw", format_float(params.beta_mw)),
        ("beta_dbm", format_db(_dbm(params.beta_mw))),
        ("alpha_nl_per_mw2", format_float(params.alpha_nl_per_mw2)),
        ("gawbs_loss", format_float(params.gawbs_loss)),
        ("n_spans", format_int(params.n_spans)),
    ]


def build_manifest(cfg, params, subcommand, grid=(), results=()):
    """Build the manifest of an output.

    Args:
      cfg: the :class:`droop.units.LinkConfig` used.
      params: the :class:`droop.units.DerivedParams` used.
      subcommand: name of the subcommand.
      grid: (key, value) pairs describing the grid. (default: empty)
      results: (key, value) pairs of scalar results. (default: empty)

    Returns:
      a :class:`RunManifest`.
    """
    return RunManifest(
        config_echo=config_echo(cfg),
        derived_echo=derived_echo(params),
        tool_version=__version__,
        subcommand=subcommand,
        grid=list(grid),
        results=list(results))


def manifest_lines(manifest):
    """Render a manifest as ``#`` comment lines.
    """
    lines = [
        "# tool: {0} {1}".format(TOOL_NAME, manifest.tool_version),
        "# subcommand: {0}".format(manifest.subcommand),
    ]
    for prefix, pairs in (("config", manifest.config_echo),
                          ("derived", manifest.derived_echo),
                          ("grid", manifest.grid),
                          ("result", manifest.results)):
        lines.extend(
            "# {0}.{1}: {2}".format(prefix, k, v) for k, v in pairs)
    return lines


SWEEP_COLUMNS = (
    "p_dbm", "valid", "snr_gn_db", "snr_gdf_db", "snr_gdf_ub_db",
    "gap_db_exact", "gap_db_approx", "ub_gap_db", "gn_lin_asym_db",
    "gn_nl_asym_db", "gdf_lin_asym_db", "gdf_nl_asym_db")

SPAN_COLUMNS = (
    "n_spans", "snr_o_gn_db", "snr_o_gdf_db", "se_o_gn", "se_o_gdf",
    "se_gap_exact", "se_gap_approx")

TRACE_COLUMNS = (
    "k", "p_s_mw", "p_a_mw", "p_n_mw", "total_mw", "chi_a", "chi_n")


def sweep_table(rows):
    """Cells of a power sweep.

    Args:
      rows: a list of :class:`droop.sweep.SweepRow`.

    Returns:
      a list of lists of strings, one per row, in :data:`SWEEP_COLUMNS` order.
    """
    return [
        [format_db(r.p_dbm), format_flag(r.valid)]
        + [format_db(v) for v in r[2:]]
        for r in rows
    ]


def span_table(rows):
    """Cells of a span sweep, in :data:`SPAN_COLUMNS` order.
    """
    return [
        [format_int(r.n_spans), format_db(r.snr_o_gn_db),
         format_db(r.snr_o_gdf_db)] + [format_float(v) for v in r[3:]]
        for r in rows
    ]


def trace_table(result):
    """Cells of a chain trace, in :data:`TRACE_COLUMNS` order.

    Args:
      result: a :class:`droop.chain.ChainResult`.
    """
    chi_a = format_float(result.factors.chi_a)
    chi_n = format_float(result.factors.chi_n)
    return [
        [format_int(s.span_index), format_float(s.p_s_mw),
         format_float(s.p_a_mw), format_float(s.p_n_mw),
         format_float(s.total_mw), chi_a, chi_n]
        for s in result.trace
    ]


def write_csv(output, manifest, columns, cells):
    """Write a table with its manifest.

    Args:
      output: a writable text object.
      manifest: a :class:`RunManifest`.
      columns: header names.
      cells: rows of formatted cells.
    """
    for line in manifest_lines(manifest):
        output.write(line)
        output.write("\n")
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(cells)


def format_pairs(pairs):
    """Render (key, value) pairs as an aligned two-column text table.
    """
    width = max(len(k) for k, _ in pairs)
    return "\n".join(
        "{0:<{w}}  {1}".format(k, v, w=width) for k, v in pairs) + "\n"


def summary_pairs(summary, n_spans):
    """(key, value) pairs of a :class:`droop.sweep.OptimumSummary`.
    """
    return [
        ("n_spans", format_int(n_spans)),
        ("p_o_gn_mw", format_float(summary.p_o_gn_mw)),
        ("p_o_gn_dbm", format_db(mw_to_dbm(summary.p_o_gn_mw))),
        ("snr_o_gn_db", format_db(linear_to_db(summary.snr_o_gn))),
        ("p_o_gdf_mw", format_float(summary.p_o_gdf_mw)),
        ("p_o_gdf_dbm", format_db(mw_to_dbm(summary.p_o_gdf_mw))),
        ("snr_o_gdf_db", format_db(linear_to_db(summary.snr_o_gdf))),
        ("snr_o_gdf_predicted_db",
         format_db(linear_to_db(summary.snr_o_gdf_predicted))),
        ("prediction_error_db", format_db(summary.prediction_error_db)),
        ("power_ratio", format_float(summary.power_ratio)),
        ("se_o_gn", format_float(summary.se_o_gn)),
        ("se_o_gdf", format_float(summary.se_o_gdf)),
    ]


def snr_pairs(report, n_spans):
    """(key, value) pairs of a :class:`droop.formula.SnrReport`.
    """
    return [
        ("n_spans", format_int(n_spans)),
        ("power_mw", format_float(report.power_mw)),
        ("power_dbm", format_db(mw_to_dbm(report.power_mw))),
        ("snr_gn", format_float(report.snr_gn)),
        ("snr_gn_db", format_db(linear_to_db(report.snr_gn))),
        ("snr_gdf", format_float(report.snr_gdf)),
        ("snr_gdf_db", format_db(linear_to_db(report.snr_gdf))),
        ("snr_gdf_ub", format_float(report.snr_gdf_ub)),
        ("snr_gdf_ub_db", format_db(linear_to_db(report.snr_gdf_ub))),
        ("snr_gdf_first_order", format_float(report.snr_gdf_first_order)),
        ("gap_db_exact", format_db(report.gap_db_exact)),
        ("gap_db_approx", format_db(report.gap_db_approx)),
        ("gap_db_bound", format_db(report.gap_db_bound)),
        ("snr1a", format_float(report.snr1a)),
        ("snr1n", format_float(report.snr1n)),
    ]


def chain_result_pairs(result):
    """(key, value) pairs of the received SNR of a chain.
    """
    return [
        ("snr", format_float(result.snr)),
        ("snr_db", format_db(linear_to_db(result.snr))),
    ]
