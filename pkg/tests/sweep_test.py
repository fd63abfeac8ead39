#
# sweep_test.py
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
"""Unit test for droop.sweep module.
"""
# pylint: disable=protected-access
import math
import unittest

import numpy as np

import droop
from droop import formula, sweep
from droop.exceptions import ConfigError, NoFiniteOptimumError
from droop.units import MAX_SPANS, derive_params


class TestPowerGrid(unittest.TestCase):
    """Test case for power_grid function.
    """

    def test_grid(self):
        """Both ends are on the grid and points are rounded.
        """
        grid = sweep.power_grid(-10., 8., 0.1)
        self.assertEqual(len(grid), 181)
        self.assertEqual(grid[0], -10.)
        self.assertEqual(grid[-1], 8.)
        self.assertIn(-0.5, list(grid))
        self.assertIn(0., list(grid))
        self.assertFalse(any(math.copysign(1., p) < 0 for p in grid if p == 0))

    def test_partial_step(self):
        """The last point does not exceed p_max.
        """
        np.testing.assert_array_almost_equal(
            sweep.power_grid(0., 1., 0.3), [0., 0.3, 0.6, 0.9])

    def test_invalid(self):
        """Empty or non-finite grids are rejected.
        """
        for args in ((1., 1., 0.1), (2., 1., 0.1), (0., 1., 0.),
                     (0., 1., -0.1), (math.nan, 1., 0.1), (0., math.inf, 0.1)):
            with self.assertRaises(ConfigError):
                sweep.power_grid(*args)


class TestSweepPower(unittest.TestCase):
    """Test case for sweep_power function.
    """

    def setUp(self):
        """Set up for tests.
        """
        self.cfg = droop.reference_config()
        self.rows = sweep.sweep_power(self.cfg, -20., 8., 0.05)

    def test_peak(self):
        """The GDF peak of the reference link is near -0.5 dBm.
        """
        rows = sweep.sweep_power(self.cfg, -10., 8., 0.1)
        self.assertEqual(len(rows), 181)
        self.assertAlmostEqual(sweep.peak_row(rows).p_dbm, -0.5, delta=0.1)

    def test_refinement(self):
        """Halving the step barely changes the peak SNR.
        """
        coarse = sweep.peak_row(sweep.sweep_power(self.cfg, -10., 8., 0.1))
        fine = sweep.peak_row(sweep.sweep_power(self.cfg, -10., 8., 0.05))
        self.assertLess(abs(coarse.snr_gdf_db - fine.snr_gdf_db), 0.01)

        p = formula.optimal_power_gdf(derive_params(self.cfg))
        top = 10 * math.log10(formula.snr_gdf(p, derive_params(self.cfg)))
        self.assertLessEqual(fine.snr_gdf_db, top + 1e-12)
        self.assertLess(top - fine.snr_gdf_db, 0.01)

    def test_ordering(self):
        """snr_gdf <= upper bound <= snr_gn in every row.
        """
        self.assertEqual(len(self.rows), 561)
        for r in self.rows:
            self.assertTrue(r.valid)
            self.assertLessEqual(r.snr_gdf_db, r.snr_gdf_ub_db + 1e-12, r)
            self.assertLessEqual(r.snr_gdf_ub_db, r.snr_gn_db + 1e-12, r)
            self.assertGreaterEqual(r.gap_db_exact, 0., r)
            self.assertGreaterEqual(r.ub_gap_db, -1e-12, r)

    def test_gap_branches(self):
        """The gap grows as the GN-SNR falls on each side of the peak.
        """
        top = int(np.argmax([r.snr_gn_db for r in self.rows]))
        low = self.rows[:top + 1]
        high = self.rows[top:]
        for a, b in zip(low, low[1:]):
            self.assertGreater(b.snr_gn_db, a.snr_gn_db)
            self.assertLessEqual(b.gap_db_exact, a.gap_db_exact + 1e-4)
        for a, b in zip(high, high[1:]):
            self.assertLess(b.snr_gn_db, a.snr_gn_db)
            self.assertGreaterEqual(b.gap_db_exact, a.gap_db_exact - 1e-4)

    def test_gap_at_optimum(self):
        """The gap at the GDF optimum is about half a dB.
        """
        params = derive_params(self.cfg)
        rep = formula.snr_report(formula.optimal_power_gdf(params), params)
        self.assertGreaterEqual(rep.gap_db_exact, 0.4)
        self.assertLessEqual(rep.gap_db_exact, 0.6)

    def test_gap_approximation(self):
        """The approximate gap is accurate down to 0 dB of GN-SNR.
        """
        checked = 0
        for r in self.rows:
            if r.snr_gn_db >= 0:
                self.assertLessEqual(abs(r.gap_db_exact - r.gap_db_approx), 0.5)
                checked += 1
        self.assertGreater(checked, 0)

        checked = 0
        for r in sweep.sweep_power(self.cfg.replace(n_spans=20), -20., 8., 0.05):
            if r.snr_gn_db >= 7:
                self.assertLessEqual(abs(r.gap_db_exact - r.gap_db_approx), 0.1)
                checked += 1
        self.assertGreater(checked, 0)

    def test_linear_link(self):
        """Without NLI the GDF-SNR is its linear asymptote.
        """
        rows = sweep.sweep_power(
            self.cfg.replace(alpha_nl_per_mw2=0.), -10., 8., 0.1)
        for r in rows:
            self.assertEqual(r.snr_gdf_db, r.gdf_lin_asym_db)
            self.assertEqual(r.gn_nl_asym_db, math.inf)

    def test_invalid_rows(self):
        """Powers beyond the model domain give flagged rows.
        """
        rows = sweep.sweep_power(self.cfg, 10., 20., 1.)
        self.assertEqual(len(rows), 11)
        valid = [r.p_dbm for r in rows if r.valid]
        invalid = [r for r in rows if not r.valid]
        self.assertEqual(valid, [10., 11., 12., 13., 14., 15., 16.])
        self.assertEqual(len(invalid), 4)
        for r in invalid:
            self.assertTrue(all(v is None for v in r[2:]))
        self.assertIsNone(sweep.peak_row(invalid))

    def test_row_independence(self):
        """Rows do not depend on the order they are evaluated in.
        """
        params = derive_params(self.cfg)
        grid = sweep.power_grid(-20., 8., 0.05)
        rows = [sweep._power_row(p, params) for p in reversed(grid)]
        self.assertEqual(list(reversed(rows)), self.rows)


class TestSweepSpans(unittest.TestCase):
    """Test case for sweep_spans function.
    """

    def setUp(self):
        """Set up for tests.
        """
        self.cfg = droop.reference_config()

    def test_default_range(self):
        """The default range covers 10 to 500 spans.
        """
        rows = sweep.sweep_spans(self.cfg)
        self.assertEqual([r.n_spans for r in rows], list(range(10, 501, 10)))
        for a, b in zip(rows, rows[1:]):
            self.assertLess(b.se_o_gn, a.se_o_gn)
            self.assertGreater(b.se_gap_exact, a.se_gap_exact)
            self.assertGreater(b.se_gap_approx, a.se_gap_approx)
        for r in rows:
            self.assertLessEqual(r.se_o_gdf, r.se_o_gn)
            self.assertLessEqual(r.snr_o_gdf_db, r.snr_o_gn_db)

    def test_reference_length(self):
        """GN over-estimates the top SE by less than 0.3 b/s/Hz.
        """
        r, = sweep.sweep_spans(self.cfg, 228, 228, 1)
        self.assertLess(r.se_gap_exact, 0.3)
        self.assertAlmostEqual(r.se_gap_exact, 0.26, delta=0.01)
        self.assertLess(abs(r.se_gap_exact - r.se_gap_approx), 0.05)
        self.assertAlmostEqual(r.snr_o_gn_db, 6.55, delta=0.02)

    def test_single_span(self):
        """A single span has a tiny SE gap.
        """
        r, = sweep.sweep_spans(self.cfg, 1, 1, 1)
        self.assertLess(r.se_gap_exact, 0.1)
        self.assertLess(abs(r.se_gap_exact - r.se_gap_approx), 0.05)

    def test_invalid(self):
        """Invalid span ranges are rejected.
        """
        for args in ((0, 10, 1), (10, 5, 1), (1, 10, 0), (1, MAX_SPANS + 1, 1),
                     (1.5, 10, 1)):
            with self.assertRaises(ConfigError):
                sweep.sweep_spans(self.cfg, *args)

    def test_no_nli(self):
        """A link without NLI has no optimum.
        """
        with self.assertRaises(NoFiniteOptimumError):
            sweep.sweep_spans(self.cfg.replace(alpha_nl_per_mw2=0.), 1, 10, 1)


class TestTopMarkers(unittest.TestCase):
    """Test case for top_markers function.
    """

    def setUp(self):
        """Set up for tests.
        """
        self.cfg = droop.reference_config()

    def test_reference(self):
        """The predicted top GDF-SNR falls on the exact one.
        """
        s = sweep.top_markers(self.cfg)
        self.assertAlmostEqual(10 * math.log10(s.p_o_gn_mw), -0.5, delta=0.05)
        self.assertAlmostEqual(10 * math.log10(s.snr_o_gn), 6.55, delta=0.05)
        self.assertAlmostEqual(10 * math.log10(s.snr_o_gdf), 6.06, delta=0.05)
        self.assertLess(abs(s.prediction_error_db), 0.1)
        self.assertGreaterEqual(s.prediction_error_db, 0.)
        self.assertLessEqual(s.power_ratio, 1.)
        self.assertLess(1. - s.power_ratio, 1e-3)
        self.assertEqual(s.power_ratio, s.p_o_gdf_mw / s.p_o_gn_mw)
        self.assertLessEqual(s.se_o_gdf, s.se_o_gn)

    def test_max_snr(self):
        """The top GN-SNR is the maximum GN-SNR.
        """
        s = sweep.top_markers(self.cfg)
        self.assertAlmostEqual(
            s.snr_o_gn / formula.max_snr_gn(derive_params(self.cfg)), 1.,
            delta=1e-12)

    def test_homogeneity(self):
        """Eight times the ASE doubles the GN optimum.
        """
        a = sweep.top_markers(self.cfg)
        b = sweep.top_markers(self.cfg.replace(bandwidth_ghz=8 * 33.))
        self.assertAlmostEqual(b.p_o_gn_mw / a.p_o_gn_mw, 2., places=12)

    def test_no_nli(self):
        """A link without NLI has no finite optimum.
        """
        with self.assertRaises(NoFiniteOptimumError):
            sweep.top_markers(self.cfg.replace(alpha_nl_per_mw2=0.))


if __name__ == "__main__":
    unittest.main()
