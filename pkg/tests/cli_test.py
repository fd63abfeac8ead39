#
# cli_test.py
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
"""Unit test for droop.cli module.
"""
from contextlib import redirect_stderr, redirect_stdout
import io
import json
from os import path
import shutil
import tempfile
import unittest

import droop
from droop import cli, report
from tests.make_goldens import DATA_DIR, GOLDENS, render


def run(argv):
    """Run the command-line interface.

    Returns:
      a tuple of the status code, stdout and stderr.
    """
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = cli.main(argv)
    return status, out.getvalue(), err.getvalue()


class TestParser(unittest.TestCase):
    """Test case for argument parsing.
    """

    def test_version(self):
        """--version prints the version and exits.
        """
        out = io.StringIO()
        with redirect_stdout(out), self.assertRaises(SystemExit) as cm:
            cli.main(["--version"])
        self.assertEqual(cm.exception.code, 0)
        self.assertIn(droop.__version__, out.getvalue())

    def test_usage_errors(self):
        """Usage errors exit with status 1.
        """
        for argv in ([], ["unknown"], ["gap"], ["sweep-power", "--pmin", "x"],
                     ["derive", "--bogus"]):
            with redirect_stderr(io.StringIO()), \
                    self.assertRaises(SystemExit) as cm:
                cli.main(argv)
            self.assertEqual(cm.exception.code, cli.EXIT_CONFIG, argv)


class TestSubcommands(unittest.TestCase):
    """Test case for the subcommands.
    """

    def setUp(self):
        """Create a temporary directory.
        """
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        """Remove the temporary directory.
        """
        shutil.rmtree(self.tmp)

    def test_derive(self):
        """derive prints a table or JSON.
        """
        status, out, _ = run(["derive"])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertIn("span_loss_db", out)
        self.assertIn("beta_dbm", out)

        status, out, _ = run(["derive", "--json"])
        self.assertEqual(status, cli.EXIT_OK)
        obj = json.loads(out)
        self.assertAlmostEqual(obj["span_loss_db"], 13.338, places=9)
        self.assertAlmostEqual(obj["beta_mw"] / 5.76e-4, 1., delta=5e-3)
        self.assertEqual(obj["n_spans"], 228)

    def test_optimum(self):
        """optimum prints the top SNRs of the reference link.
        """
        status, out, _ = run(["optimum"])
        self.assertEqual(status, cli.EXIT_OK)
        pairs = dict(line.split() for line in out.splitlines())
        self.assertAlmostEqual(float(pairs["p_o_gn_dbm"]), -0.5, delta=0.05)
        self.assertAlmostEqual(float(pairs["snr_o_gn_db"]), 6.5, delta=0.1)
        self.assertAlmostEqual(float(pairs["snr_o_gdf_db"]), 6.0, delta=0.1)

    def test_gap(self):
        """gap prints the SNRs and the gaps at one power.
        """
        status, out, _ = run(["gap", "--power-dbm", "-0.51"])
        self.assertEqual(status, cli.EXIT_OK)
        pairs = dict(line.split() for line in out.splitlines())
        self.assertAlmostEqual(float(pairs["gap_db_exact"]), 0.49, delta=0.02)
        self.assertAlmostEqual(float(pairs["gap_db_approx"]), 0.48, delta=0.02)

    def test_sweep_power(self):
        """sweep-power writes a CSV file with its manifest.
        """
        out = path.join(self.tmp, "sweep.csv")
        status, stdout, _ = run([
            "sweep-power", "--pmin", "-1", "--pmax", "1", "--step", "0.5",
            "--out", out])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(stdout, "")
        with open(out, newline="") as fp:
            lines = fp.read().split("\n")
        self.assertEqual(lines[0], "# tool: droop-snr " + droop.__version__)
        self.assertIn("# grid.step_db: 0.5", lines)
        body = [l for l in lines if l and not l.startswith("#")]
        self.assertEqual(body[0], ",".join(report.SWEEP_COLUMNS))
        self.assertEqual(
            [l.split(",")[0] for l in body[1:]], ["-1", "-0.5", "0", "0.5", "1"])

    def test_sweep_power_stdout(self):
        """sweep-power writes to stdout without --out.
        """
        status, out, _ = run(
            ["sweep-power", "--pmin", "0", "--pmax", "1", "--step", "1"])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertTrue(out.startswith("# tool: droop-snr"))

    def test_sweep_spans(self):
        """sweep-spans writes one row per span count.
        """
        status, out, _ = run(
            ["sweep-spans", "--nmin", "100", "--nmax", "300", "--nstep", "100"])
        self.assertEqual(status, cli.EXIT_OK)
        body = [l for l in out.split("\n") if l and not l.startswith("#")]
        self.assertEqual([l.split(",")[0] for l in body[1:]],
                         ["100", "200", "300"])

    def test_simulate(self):
        """simulate writes the trace and prints the received SNR.
        """
        out = path.join(self.tmp, "trace.csv")
        status, stdout, _ = run(
            ["simulate", "--power-dbm", "-0.51", "--out", out])
        self.assertEqual(status, cli.EXIT_OK)
        pairs = dict(line.split() for line in stdout.splitlines())
        self.assertAlmostEqual(float(pairs["snr_db"]), 6.06, delta=0.02)
        with open(out, newline="") as fp:
            lines = fp.read().split("\n")
        self.assertIn("# result.snr_db: " + pairs["snr_db"], lines)
        body = [l for l in lines if l and not l.startswith("#")]
        self.assertEqual(len(body), 1 + 228 + 1)

    def test_simulate_transparent(self):
        """A chain without ASE and NLI keeps the signal and reports inf.
        """
        status, out, _ = run(
            ["simulate", "--power-dbm", "0", "--no-ase", "--no-nli"])
        self.assertEqual(status, cli.EXIT_OK)
        lines = out.split("\n")
        self.assertIn("# result.snr: inf", lines)
        body = [l.split(",") for l in lines if l and not l.startswith("#")]
        for row in body[1:]:
            self.assertEqual(row[1], "1")

    def test_config_errors(self):
        """Configuration errors exit with status 1.
        """
        status, _, err = run(
            ["derive", "--config", path.join(self.tmp, "missing.json")])
        self.assertEqual(status, cli.EXIT_CONFIG)
        self.assertTrue(err.startswith("droop-snr: error:"))

        filepath = path.join(self.tmp, "link.json")
        with open(filepath, "w") as fp:
            json.dump({"span_length_km": 78.}, fp)
        status, _, err = run(["derive", "--config", filepath])
        self.assertEqual(status, cli.EXIT_CONFIG)
        self.assertIn("loss_db_per_km", err)

        status, _, _ = run(
            ["sweep-spans", "--nmin", "10", "--nmax", "5", "--nstep", "1"])
        self.assertEqual(status, cli.EXIT_CONFIG)

    def test_domain_errors(self):
        """Model domain errors exit with status 2.
        """
        status, _, err = run(["gap", "--power-dbm", "20"])
        self.assertEqual(status, cli.EXIT_DOMAIN)
        self.assertIn("perturbative", err)

        filepath = path.join(self.tmp, "linear.json")
        with open(filepath, "w") as fp:
            json.dump(dict(
                span_length_km=78., loss_db_per_km=0.171, noise_figure_db=8.,
                bandwidth_ghz=33., n_spans=228, alpha_nl_per_mw2=0.), fp)
        status, _, _ = run(["optimum", "--config", filepath])
        self.assertEqual(status, cli.EXIT_DOMAIN)

    def test_failed_run_keeps_output(self):
        """A failing subcommand leaves an existing output file untouched.
        """
        out = path.join(self.tmp, "trace.csv")
        status, _, _ = run(["simulate", "--power-dbm", "0", "--out", out])
        self.assertEqual(status, cli.EXIT_OK)
        with open(out, "rb") as fp:
            before = fp.read()
        self.assertTrue(before)

        status, _, err = run(["simulate", "--power-dbm", "20", "--out", out])
        self.assertEqual(status, cli.EXIT_DOMAIN)
        self.assertIn("perturbative", err)
        with open(out, "rb") as fp:
            self.assertEqual(fp.read(), before)

        status, _, _ = run([
            "sweep-spans", "--nmin", "10", "--nmax", "5", "--out", out])
        self.assertEqual(status, cli.EXIT_CONFIG)
        with open(out, "rb") as fp:
            self.assertEqual(fp.read(), before)

    def test_unwritable_output(self):
        """An output path which cannot be opened exits with status 1.
        """
        out = path.join(self.tmp, "missing", "trace.csv")
        status, _, err = run(["simulate", "--power-dbm", "0", "--out", out])
        self.assertEqual(status, cli.EXIT_CONFIG)
        self.assertTrue(err.startswith("droop-snr: error:"))


class TestGoldens(unittest.TestCase):
    """Test case for byte-identical CSV outputs.
    """

    def test_repeatable(self):
        """Repeated runs give byte-identical files.
        """
        for _, argv in GOLDENS:
            self.assertEqual(render(argv), render(argv))

    def test_goldens(self):
        """Outputs match the frozen golden files.
        """
        for name, argv in GOLDENS:
            filepath = path.join(DATA_DIR, name)
            self.assertTrue(
                path.exists(filepath),
                "{0} is missing, run python -m tests.make_goldens".format(name))
            with open(filepath, "rb") as fp:
                self.assertEqual(render(argv), fp.read(), name)


if __name__ == "__main__":
    unittest.main()
