# tests.reporting_tests.base_tests
# Testing the templated reports and plots
#
# Created:  Sun Oct 18 00:05:47 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: base_tests.py [] $

"""
Testing the templated reports and plots
"""

##########################################################################
## Imports
##########################################################################

import os
import shutil
import tempfile
import unittest

from aoistat.reporting import *
from aoistat.analyze import SweepRow
from aoistat.policies import Method
from aoistat.validation import validate
from aoistat.exceptions import ImproperlyConfigured, WriterException

##########################################################################
## Report tests
##########################################################################

class ReportTests(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_template_required(self):
        with self.assertRaises(ImproperlyConfigured):
            Report().render_string()

    def test_instance_overrides(self):
        report = AnalyticReport(template_name="validate.txt")
        self.assertEqual(report.template_name, "validate.txt")
        self.assertEqual(AnalyticReport.template_name, "analytic.txt")

    def test_analytic_report(self):
        """
        Assert the analytic report lists both ages with twelve decimals
        """
        row    = SweepRow.from_ages("p2", 1.0, 1.0, 1.0, 73 / 30.0, 73 / 30.0, Method.CLOSED)
        output = AnalyticReport(row=row).render_string()
        lines  = output.splitlines()

        self.assertEqual(lines[0], "policy   p2")
        self.assertEqual(lines[1], "method   closed")
        self.assertIn("delta1   2.433333333333", lines)
        self.assertIn("sum_aoi  4.866666666667", lines)
        self.assertIn("jain     1.000000000000", lines)
        self.assertTrue(output.endswith("\n"))

    def test_render_to_path(self):
        row  = SweepRow.from_ages("p3", 0.5, 0.5, 1.0, 3.7, 3.7, Method.SHS)
        path = os.path.join(self.tmpdir, "analytic.txt")
        AnalyticReport(row=row).render(path)
        with open(path, 'r') as f:
            self.assertEqual(f.read(), AnalyticReport(row=row).render_string())

    def test_render_failure(self):
        row = SweepRow.from_ages("p3", 0.5, 0.5, 1.0, 3.7, 3.7, Method.SHS)
        with self.assertRaises(WriterException):
            AnalyticReport(row=row).render(os.path.join(self.tmpdir, "no", "such", "dir.txt"))

    def test_validation_report(self):
        suite  = validate(loads=(0.5, 2.0), mus=(1.0,))
        output = ValidationReport(suite=suite).render_string()
        lines  = output.splitlines()

        self.assertTrue(lines[0].startswith("check"))
        self.assertEqual(lines[-1], "result: PASS")
        for label in ("policy1", "policy2", "policy3"):
            self.assertTrue(any(line.startswith(label + " max rel err") for line in lines), label)

##########################################################################
## Plot tests
##########################################################################

class PolylinePlotTests(unittest.TestCase):

    def test_polyline(self):
        """
        Assert the points are scaled into the plot area
        """
        plot   = PolylinePlot(points=[(0.0, 1.0), (1.0, 3.0)], xlabel="rho1", ylabel="sum_aoi")
        output = plot.render_string()

        self.assertIn('points="64.00,416.00 576.00,64.00"', output)
        self.assertIn(">rho1</text>", output)
        self.assertIn(">sum_aoi</text>", output)
        self.assertTrue(output.startswith("<svg"))

    def test_escapes_labels(self):
        output = PolylinePlot(points=[(0, 0), (1, 1)], title="a < b").render_string()
        self.assertIn("a &lt; b", output)

    def test_needs_two_points(self):
        with self.assertRaises(ImproperlyConfigured):
            PolylinePlot(points=[(0.0, 1.0)]).render_string()
        with self.assertRaises(ImproperlyConfigured):
            PolylinePlot(points=[(0.0, 1.0), (1.0, float("nan"))]).render_string()

    def test_flat_series(self):
        output = PolylinePlot(points=[(0, 2), (1, 2), (2, 2)]).render_string()
        self.assertIn("<polyline", output)


if __name__ == '__main__':
    unittest.main()
