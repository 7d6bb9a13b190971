# tests.analyze_tests
# Testing the sweep harness
#
# Created:  Sat Oct 17 23:12:05 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: analyze_tests.py [] $

"""
Testing the sweep harness
"""

##########################################################################
## Imports
##########################################################################

import unittest

from unittest import mock

from aoistat import analyze
from aoistat.analyze import *
from aoistat.closed import theorem1_aoi, theorem2_aoi
from aoistat.metric import jain_index
from aoistat.policies import PolicyId, Method
from aoistat.exceptions import ImproperlyConfigured, SingularSystem

##########################################################################
## Grid tests
##########################################################################

class GridTests(unittest.TestCase):

    def test_linear_grid(self):
        """
        Assert the grid keeps a margin from both ends of the range
        """
        grid = linear_grid(1.0, 5, margin=0.1)
        self.assertEqual(len(grid), 5)
        self.assertAlmostEqual(grid[0], 0.1)
        self.assertAlmostEqual(grid[-1], 0.9)
        self.assertAlmostEqual(grid[2], 0.5)

    def test_default_margin(self):
        grid = linear_grid(6.0, 3)
        self.assertAlmostEqual(grid[0], 0.06)
        self.assertAlmostEqual(grid[-1], 5.94)

    def test_single_point(self):
        self.assertEqual(linear_grid(2.0, 1), (1.0,))

    def test_invalid_grid(self):
        for args in ((0.0, 5), (1.0, 0), (1.0, 5, 0.5), (1.0, 5, 0.0)):
            with self.assertRaises(ImproperlyConfigured):
                linear_grid(*args)

##########################################################################
## Spec tests
##########################################################################

class SweepSpecTests(unittest.TestCase):

    def test_create(self):
        spec = SweepSpec.create(["pp-nw", "p2"], rho=1.0, points=3, margin=0.25)
        self.assertEqual(spec.grid, (0.25, 0.5, 0.75))
        self.assertEqual(spec.method_for(PolicyId.POLICY2), Method.CLOSED)
        self.assertEqual(spec.method_for(PolicyId.PP_NW), Method.SIM)
        self.assertAlmostEqual(spec.rho2_for(0.25), 0.75)

    def test_method_applies_to_source_aware(self):
        spec = SweepSpec.create(["p1", "lcfs-w"], rho=1.0, points=2, method=Method.SHS)
        self.assertEqual(spec.method_for(PolicyId.POLICY1), Method.SHS)
        self.assertEqual(spec.method_for(PolicyId.LCFS_W), Method.SIM)

    def test_fixed_rho2(self):
        spec = SweepSpec.create(["p3"], rho2=0.5, span=2.0, points=4, margin=0.5)
        for value, expected in zip(spec.grid, (0.5, 5 / 6.0, 7 / 6.0, 1.5)):
            self.assertAlmostEqual(value, expected)
        self.assertEqual(spec.rho2_for(1.5), 0.5)

        with self.assertRaises(ImproperlyConfigured):
            SweepSpec.create(["p3"], rho2=0.5)

    def test_invalid_specs(self):
        """
        Assert the sweep checks its grid and loads
        """
        with self.assertRaises(ImproperlyConfigured):
            SweepSpec(("p1",), (0.5, 0.25), rho=1.0)
        with self.assertRaises(ImproperlyConfigured):
            SweepSpec(("p1",), (0.0, 0.5), rho=1.0)
        with self.assertRaises(ImproperlyConfigured):
            SweepSpec(("p1",), (0.5, 1.0), rho=1.0)
        with self.assertRaises(ImproperlyConfigured):
            SweepSpec(("p1",), (0.5,), rho=1.0, rho2=0.5)
        with self.assertRaises(ImproperlyConfigured):
            SweepSpec((), (0.5,), rho=1.0)

    def test_points_in_policy_order(self):
        spec = SweepSpec.create(["pp-ww", "p3", "p1"], rho=1.0, points=2, margin=0.25)
        policies = [policy for policy, _, _ in spec.points()]
        self.assertEqual(policies, [PolicyId.POLICY1] * 2 + [PolicyId.POLICY3] * 2 + [PolicyId.PP_WW] * 2)

##########################################################################
## Evaluation tests
##########################################################################

class EvaluationTests(unittest.TestCase):

    def test_closed_rows(self):
        """
        Assert closed-form rows carry both ages, their sum and fairness
        """
        spec = SweepSpec.create(["p1", "p2"], rho=1.0, points=3, margin=0.25)
        rows = run_sweep(spec)
        self.assertEqual(len(rows), 6)

        row = rows[3]
        self.assertIs(row.policy, PolicyId.POLICY2)
        self.assertEqual((row.rho1, row.rho2), (0.25, 0.75))
        self.assertAlmostEqual(row.delta1, theorem2_aoi(0.25, 0.75))
        self.assertAlmostEqual(row.delta2, theorem2_aoi(0.75, 0.25))
        self.assertAlmostEqual(row.sum_aoi, row.delta1 + row.delta2)
        self.assertAlmostEqual(row.jain, jain_index(row.delta1, row.delta2))
        self.assertIsNone(row.seed)
        self.assertTrue(row.ok)

    def test_shs_rows_match_closed(self):
        closed = run_sweep(SweepSpec.create(["p1"], rho=2.0, points=3))
        engine = run_sweep(SweepSpec.create(["p1"], rho=2.0, points=3, method=Method.SHS))
        for a, b in zip(closed, engine):
            self.assertAlmostEqual(a.sum_aoi, b.sum_aoi, delta=1e-9 * a.sum_aoi)
            self.assertIs(b.method, Method.SHS)

    def test_simulated_rows(self):
        """
        Assert simulated rows carry a seed and a confidence interval
        """
        sim  = SimSettings(events=10 ** 4, replications=3, seed=91)
        spec = SweepSpec.create(["lcfs-s"], rho=1.0, points=2, margin=0.25, sim=sim)
        rows = run_sweep(spec)

        self.assertEqual([row.seed for row in rows], [point_seed(91, PolicyId.LCFS_S, i) for i in (0, 1)])
        self.assertNotEqual(rows[0].seed, rows[1].seed)
        for row in rows:
            self.assertLess(row.ci_low, row.sum_aoi)
            self.assertGreater(row.ci_high, row.sum_aoi)

    def test_point_seed(self):
        self.assertEqual(point_seed(1, PolicyId.PP_NW, 3), point_seed(1, PolicyId.PP_NW, 3))
        self.assertNotEqual(point_seed(1, PolicyId.PP_NW, 3), point_seed(1, PolicyId.PP_WW, 3))

    def test_failed_point(self):
        """
        Assert a failing point becomes an error row instead of aborting
        """
        spec = SweepSpec.create(["p1"], rho=1.0, points=2, margin=0.25)
        with mock.patch.object(analyze, "source_ages", side_effect=SingularSystem("singular")):
            rows = run_sweep(spec)
        self.assertEqual(len(rows), 2)
        self.assertFalse(rows[0].ok)
        self.assertEqual(rows[0].error, "singular")
        self.assertIsNone(rows[0].sum_aoi)

    def test_tradeoff_curve(self):
        curve = tradeoff_curve("p1", 1.0, num_points=5)
        self.assertEqual(len(curve), 5)
        delta1, delta2 = curve[0]
        self.assertAlmostEqual(delta1, theorem1_aoi(0.01, 0.99))
        # Age of source 1 falls as its share of the load grows
        self.assertGreater(curve[0][0], curve[-1][0])
        self.assertLess(curve[0][1], curve[-1][1])

##########################################################################
## Summary tests
##########################################################################

class SummaryTests(unittest.TestCase):

    def test_empty_sweep(self):
        value = summarize([])
        self.assertEqual(value, {"fairness": {}, "lowest_sum_aoi": {}})

    def test_summarize(self):
        """
        Assert metrics see every row of the sweep
        """
        rows  = run_sweep(SweepSpec.create(["p1", "p2", "p3"], rho=1.0, points=3, margin=0.25))
        value = summarize(rows)

        self.assertEqual(len(rows), 9)
        self.assertEqual(sorted(value), ["fairness", "lowest_sum_aoi"])
        self.assertEqual(sorted(value["fairness"]), ["p1", "p2", "p3"])
        self.assertEqual(value["lowest_sum_aoi"][0.5], "p2")

    def test_selected_metrics(self):
        rows = run_sweep(SweepSpec.create(["p2"], rho=1.0, points=3, margin=0.25))
        self.assertEqual(list(summarize(rows, metrics=[LowestSumAoI])), ["lowest_sum_aoi"])


if __name__ == '__main__':
    unittest.main()
