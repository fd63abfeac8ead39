#
# cli.py
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
"""Command-line interface.

Subcommands:

``derive``
    print the derived link parameters.
``sweep-power``
    write a power sweep as CSV.
``sweep-spans``
    write a span-count sweep as CSV.
``optimum``
    print the optimal powers and top SNRs.
``simulate``
    write the span-by-span power trace of a chain as CSV.
``gap``
    print the GN and GDF SNRs and their gaps at one power.

Exit status is 0 on success, 1 on configuration or usage errors and 2 when
the requested quantity is outside the model domain.
"""
import argparse
import io
import json
import logging
from logging import getLogger
import sys

from droop import __version__, chain, formula, sweep
from droop.config import REFERENCE, load_config
from droop.exceptions import ConfigError, ConvergenceError, DomainError
from droop import report
from droop.units import dbm_to_mw, derive_params, mw_to_dbm


LOGGER = getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DOMAIN = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors with :data:`EXIT_CONFIG`.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, "{0}: error: {1}\n".format(self.prog, message))


def _write_output(filepath, text):
    """Write a rendered output to a file, or to stdout when filepath is None.
    """
    if filepath is None:
        sys.stdout.write(text)
        return
    with open(filepath, "w", newline="", encoding="utf-8") as fp:
        fp.write(text)
    LOGGER.info("wrote %s", filepath)


def _params(cfg, args):
    params = derive_params(cfg)
    if getattr(args, "no_ase", False):
        params = params.without_ase()
    if getattr(args, "no_nli", False):
        params = params.without_nli()
    return params


def cmd_derive(cfg, args, output):
    """Print the derived parameters.
    """
    params = derive_params(cfg)
    if args.json:
        json.dump({
            "span_loss_linear": params.span_loss_linear,
            "span_loss_db": params.span_loss_db,
            "mu_a_mw": params.mu_a_mw,
            "mu_a_dbm": mw_to_dbm(params.mu_a_mw),
            "beta_mw": params.beta_mw,
            "beta_dbm": mw_to_dbm(params.beta_mw),
            "alpha_nl_per_mw2": params.alpha_nl_per_mw2,
            "gawbs_loss": params.gawbs_loss,
            "n_spans": params.n_spans,
        }, output, indent=2)
        output.write("\n")
    else:
        output.write(report.format_pairs(report.derived_echo(params)))


def cmd_sweep_power(cfg, args, output):
    """Write a power sweep.
    """
    rows = sweep.sweep_power(cfg, args.pmin, args.pmax, args.step)
    manifest = report.build_manifest(
        cfg, derive_params(cfg), "sweep-power", grid=[
            ("p_min_dbm", repr(args.pmin)),
            ("p_max_dbm", repr(args.pmax)),
            ("step_db", repr(args.step))])
    report.write_csv(
        output, manifest, report.SWEEP_COLUMNS, report.sweep_table(rows))


def cmd_sweep_spans(cfg, args, output):
    """Write a span-count sweep.
    """
    rows = sweep.sweep_spans(cfg, args.nmin, args.nmax, args.nstep)
    manifest = report.build_manifest(
        cfg, derive_params(cfg), "sweep-spans", grid=[
            ("n_min", str(args.nmin)),
            ("n_max", str(args.nmax)),
            ("n_step", str(args.nstep))])
    report.write_csv(
        output, manifest, report.SPAN_COLUMNS, report.span_table(rows))


def cmd_optimum(cfg, args, output):
    """Print the optimal powers and top SNRs.
    """
    summary = sweep.top_markers(cfg)
    output.write(report.format_pairs(
        report.summary_pairs(summary, cfg.n_spans)))


def cmd_simulate(cfg, args, output):
    """Write the per-span trace of a chain.
    """
    params = _params(cfg, args)
    result = chain.run_chain(dbm_to_mw(args.power_dbm), params)
    manifest = report.build_manifest(
        cfg, params, "simulate",
        grid=[("power_dbm", repr(args.power_dbm))],
        results=report.chain_result_pairs(result))
    report.write_csv(
        output, manifest, report.TRACE_COLUMNS, report.trace_table(result))
    if args.out is not None:
        sys.stdout.write(report.format_pairs(report.chain_result_pairs(result)))


def cmd_gap(cfg, args, output):
    """Print the SNRs and gaps at one power.
    """
    params = _params(cfg, args)
    rep = formula.snr_report(dbm_to_mw(args.power_dbm), params)
    output.write(report.format_pairs(report.snr_pairs(rep, params.n_spans)))


def build_parser():
    """Build the argument parser.

    Returns:
      an argparse.ArgumentParser.
    """
    parser = _ArgumentParser(
        prog=report.TOOL_NAME,
        description="SNR and spectral efficiency of power-mode amplified "
                    "links: generalized droop formula and GN model.")
    parser.add_argument(
        "--version", action="version",
        version="%(prog)s {0}".format(__version__))
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="log progress to stderr (repeat for debug output)")

    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--config", default=REFERENCE, metavar="FILE",
        help="JSON link configuration (default: the bundled reference link)")

    out = _ArgumentParser(add_help=False)
    out.add_argument(
        "--out", default=None, metavar="CSV",
        help="output CSV file (default: stdout)")

    overrides = _ArgumentParser(add_help=False)
    overrides.add_argument(
        "--no-ase", action="store_true", help="amplifiers add no ASE")
    overrides.add_argument(
        "--no-nli", action="store_true", help="fibers generate no NLI")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser(
        "derive", parents=[common], help="print the derived link parameters")
    p.add_argument("--json", action="store_true", help="print JSON")
    p.set_defaults(func=cmd_derive, out=None)

    p = sub.add_parser(
        "sweep-power", parents=[common, out], help="sweep the launch power")
    p.add_argument("--pmin", type=float, default=-10., help="first power, dBm")
    p.add_argument("--pmax", type=float, default=8., help="last power, dBm")
    p.add_argument("--step", type=float, default=0.1, help="power step, dB")
    p.set_defaults(func=cmd_sweep_power)

    p = sub.add_parser(
        "sweep-spans", parents=[common, out],
        help="sweep the number of spans at optimal power")
    p.add_argument("--nmin", type=int, default=sweep.DEFAULT_SPAN_RANGE[0])
    p.add_argument("--nmax", type=int, default=sweep.DEFAULT_SPAN_RANGE[1])
    p.add_argument("--nstep", type=int, default=sweep.DEFAULT_SPAN_RANGE[2])
    p.set_defaults(func=cmd_sweep_spans)

    p = sub.add_parser(
        "optimum", parents=[common], help="print optimal powers and top SNRs")
    p.set_defaults(func=cmd_optimum, out=None)

    p = sub.add_parser(
        "simulate", parents=[common, out, overrides],
        help="span-by-span power trace of the chain")
    p.add_argument("--power-dbm", type=float, required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser(
        "gap", parents=[common, overrides],
        help="GN and GDF SNRs and their gaps at one power")
    p.add_argument("--power-dbm", type=float, required=True)
    p.set_defaults(func=cmd_gap, out=None)

    return parser


def main(argv=None):
    """The main function.

    Args:
      argv: command-line arguments. (default: sys.argv[1:])

    Returns:
      Status code.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr)

    # --out is only touched once the subcommand has succeeded.
    output = io.StringIO()
    try:
        cfg = load_config(args.config)
        args.func(cfg, args, output)
        _write_output(args.out, output.getvalue())
    except (ConfigError, OSError) as e:
        sys.stderr.write("{0}: error: {1}\n".format(report.TOOL_NAME, e))
        return EXIT_CONFIG
    except (DomainError, ConvergenceError) as e:
        sys.stderr.write("{0}: error: {1}\n".format(report.TOOL_NAME, e))
        return EXIT_DOMAIN
    return EXIT_OK
