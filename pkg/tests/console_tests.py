# tests.console_tests
# Testing the command line interface
#
# Created:  Sun Oct 18 00:37:52 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: console_tests.py [] $

"""
Testing the command line interface
"""

##########################################################################
## Imports
##########################################################################

import io
import os
import json
import shutil
import tempfile
import unittest

from unittest import mock
from contextlib import redirect_stdout, redirect_stderr

from aoistat import closed
from aoistat.console import main
from aoistat.closed import CoefficientSet
from aoistat.reader import SweepReader, FIELDS, quantize
from aoistat.analyze import SweepSpec, run_sweep
from aoistat.policies import PolicyId, Method

##########################################################################
## Helpers
##########################################################################

SIM_FLAGS = ["--events", "10000", "--replications", "2"]


def run(*argv):
    """
    Runs the console and returns (exit code, stdout, stderr).
    """
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main([str(arg) for arg in argv])
    return code, stdout.getvalue(), stderr.getvalue()

##########################################################################
## TestCase
##########################################################################

class ConsoleTests(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def path(self, name):
        return os.path.join(self.tmpdir, name)

    def test_usage_errors(self):
        """
        Assert argument errors exit with 2
        """
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("analytic", "--policy", "fifo", "--rho1", 1, "--rho2", 1)[0], 2)
        self.assertEqual(run("analytic", "--policy", "p1", "--rho1", 1)[0], 2)
        self.assertEqual(run("analytic", "--policy", "p1", "--rho1", 1, "--rho2", 1, "--method", "sim")[0], 2)

    def test_analytic(self):
        code, stdout, _ = run("analytic", "--policy", "p2", "--rho1", 1, "--rho2", 1)
        self.assertEqual(code, 0)
        self.assertIn("sum_aoi  4.866666666667", stdout)

    def test_analytic_shs(self):
        code, stdout, _ = run("analytic", "--policy", "p3", "--rho1", 1, "--rho2", 1, "--method", "shs")
        self.assertEqual(code, 0)
        self.assertIn("delta1   3.083333333333", stdout)
        self.assertIn("method   shs", stdout)

    def test_analytic_baseline(self):
        """
        Assert baselines are refused with a pointer to simulate
        """
        code, stdout, stderr = run("analytic", "--policy", "lcfs-s", "--rho1", 1, "--rho2", 1)
        self.assertEqual(code, 2)
        self.assertEqual(stdout, "")
        self.assertIn("no closed form in scope for lcfs-s; use simulate", stderr)

    def test_analytic_domain(self):
        code, _, stderr = run("analytic", "--policy", "p1", "--rho1", 0, "--rho2", 1)
        self.assertEqual(code, 3)
        self.assertIn("lambda1", stderr)

    def test_simulate(self):
        """
        Assert simulate prints one CSV row with a confidence interval
        """
        code, stdout, _ = run("simulate", "--policy", "pp-ww", "--rho1", 0.5, "--rho2", 0.5,
                              "--seed", 101, *SIM_FLAGS)
        lines = stdout.splitlines()
        self.assertEqual(code, 0)
        self.assertEqual(lines[0], ",".join(FIELDS))
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[1].startswith("pp-ww,0.500000000000,"))
        self.assertTrue(lines[1].endswith(",101"))

    def test_simulate_output_and_trace(self):
        output, trace = self.path("sim.csv"), self.path("trace.csv")
        code, stdout, _ = run("simulate", "--policy", "p1", "--rho1", 0.3, "--rho2", 0.9,
                              "--seed", 102, "--output", output, "--trace", trace, *SIM_FLAGS)
        self.assertEqual(code, 0)
        self.assertEqual(stdout, "")

        rows = list(SweepReader(output))
        self.assertEqual(len(rows), 1)
        self.assertIs(rows[0].method, Method.SIM)

        with open(trace, 'r') as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], "policy,replication,source,generated,delivered")
        self.assertGreater(len(lines), 100)

    def test_simulate_bad_config(self):
        code, _, stderr = run("simulate", "--policy", "p1", "--rho1", 1, "--rho2", 1, "--events", 10)
        self.assertEqual(code, 2)
        self.assertIn("at least", stderr)

    def test_sweep(self):
        """
        Assert a sweep writes its rows, summary and plot
        """
        output, summary, plot = self.path("sweep.csv"), self.path("summary.json"), self.path("sum.svg")
        code, _, _ = run("sweep", "--policies", "p1,p2", "--rho", 1, "--points", 3, "--margin", 0.25,
                         "--output", output, "--summary", summary, "--plot", plot)
        self.assertEqual(code, 0)

        rows = list(SweepReader(output))
        self.assertEqual([row.policy for row in rows], [PolicyId.POLICY1] * 3 + [PolicyId.POLICY2] * 3)

        with open(summary, 'r') as f:
            data = json.load(f)
        self.assertEqual(data["lowest_sum_aoi"]["0.5"], "p2")
        self.assertEqual(sorted(data["fairness"]), ["p1", "p2"])

        with open(plot, 'r') as f:
            self.assertIn("<polyline", f.read())

    def test_sweep_matches_library(self):
        """
        Assert the sweep CSV holds exactly what the library computes
        """
        output = self.path("sweep.csv")
        code, _, _ = run("sweep", "--policies", "p1,p3", "--rho", 2, "--points", 4, "--method", "shs",
                         "--output", output)
        self.assertEqual(code, 0)

        spec = SweepSpec.create(["p1", "p3"], rho=2.0, points=4, method=Method.SHS)
        self.assertEqual(list(SweepReader(output)), [quantize(row) for row in run_sweep(spec)])

    def test_sweep_config_and_flags(self):
        """
        Assert flags take precedence over the config file
        """
        config = self.path("sweep.cfg")
        with open(config, 'w') as f:
            f.write("policies = p3\nrho = 2\npoints = 4\n")

        code, stdout, _ = run("sweep", "--config", config, "--points", 2)
        self.assertEqual(code, 0)
        lines = stdout.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith("p3,0.020000000000,1.980000000000,"))

    def test_sweep_bad_config(self):
        config = self.path("bad.cfg")
        with open(config, 'w') as f:
            f.write("rho = lots\n")
        code, _, stderr = run("sweep", "--config", config)
        self.assertEqual(code, 2)
        self.assertIn("bad.cfg:1:", stderr)

    def test_sweep_simulated(self):
        code, stdout, _ = run("sweep", "--policies", "lcfs-w", "--rho", 1, "--points", 2, "--seed", 103, *SIM_FLAGS)
        self.assertEqual(code, 0)
        self.assertTrue(all(",sim," in line for line in stdout.splitlines()[1:]))

    def test_unwritable_output(self):
        code, _, stderr = run("sweep", "--policies", "p2", "--points", 2,
                              "--output", self.path("missing/sweep.csv"))
        self.assertEqual(code, 3)
        self.assertIn("missing", stderr)

    def test_tradeoff(self):
        plot = self.path("tradeoff.svg")
        code, stdout, _ = run("tradeoff", "--policy", "p2", "--rho", 1, "--points", 5, "--plot", plot)
        self.assertEqual(code, 0)
        self.assertEqual(len(stdout.splitlines()), 6)
        self.assertTrue(os.path.exists(plot))

    def test_tradeoff_needs_load(self):
        code, _, stderr = run("tradeoff", "--policy", "p2")
        self.assertEqual(code, 2)
        self.assertIn("--rho", stderr)

    def test_validate(self):
        code, stdout, _ = run("validate")
        self.assertEqual(code, 0)
        self.assertTrue(stdout.rstrip().endswith("result: PASS"))

    def test_validate_detects_corruption(self):
        """
        Assert a corrupted coefficient makes validate exit with 3
        """
        eta = list(closed.THEOREM2["eta"])
        eta[2] = (10, 24, 14)
        corrupted = CoefficientSet("theorem2", {"eta": tuple(eta)})

        with mock.patch.object(closed, "THEOREM2", corrupted):
            code, stdout, stderr = run("validate")
        self.assertEqual(code, 3)
        self.assertIn("result: FAIL", stdout)
        self.assertIn("p2/engine", stderr)


if __name__ == '__main__':
    unittest.main()
