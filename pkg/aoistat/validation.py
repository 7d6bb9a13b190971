# aoistat.validation
# Cross-method checks between the engine and the closed forms
#
# Created:  Sat Oct 17 17:05:49 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: validation.py [] $

"""
Cross-method checks between the engine and the closed forms.

Three checks run over a grid of loads and service rates for each of the
source-aware policies:

    engine    SHS engine against the theorem, relative error <= 1e-9
    states    sum of the per-state values against the theorem, <= 1e-12
    limit     theorems at ρ2 = 0 against their reduced forms, <= 1e-12
"""

##########################################################################
## Imports
##########################################################################

import logging

from itertools import product
from collections import namedtuple

import numpy as np

from aoistat import closed
from aoistat.shs.base import LoadPoint
from aoistat.shs.solver import average_aoi
from aoistat.metric import evaluate
from aoistat.metric.errors import Comparison, MaxRelativeError
from aoistat.policies import PolicyId, SOURCE_AWARE, build_model
from aoistat.exceptions import AoIStatException, ValidationFailure

##########################################################################
## Module Constants
##########################################################################

logger = logging.getLogger(__name__)

LOAD_GRID = (0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0)
MU_GRID   = (0.5, 1.0, 2.0)

TOLERANCES = {
    "engine": 1e-9,
    "states": 1e-12,
    "limit":  1e-12,
}

CHECKS = ("engine", "states", "limit")

##########################################################################
## Checks
##########################################################################

def _theorem(policy):
    return {
        PolicyId.POLICY1: closed.theorem1_aoi,
        PolicyId.POLICY2: closed.theorem2_aoi,
        PolicyId.POLICY3: closed.theorem3_aoi,
    }[policy]


def _states(policy):
    return {
        PolicyId.POLICY1: closed.policy1_vq0,
        PolicyId.POLICY2: closed.policy2_vq0,
        PolicyId.POLICY3: closed.policy3_vq0,
    }[policy]


def grid_comparisons(policy, loads=LOAD_GRID, mus=MU_GRID):
    """
    Yields the engine and per-state comparisons of one policy.
    """
    model   = build_model(policy)
    theorem = _theorem(policy)
    states  = _states(policy)

    for rho1, rho2, mu in product(loads, loads, mus):
        point     = (rho1, rho2, mu)
        reference = theorem(rho1, rho2, mu)
        yield Comparison("engine", policy, point,
                         average_aoi(model, LoadPoint.from_loads(rho1, rho2, mu)), reference)
        yield Comparison("states", policy, point,
                         float(np.sum(states(rho1, rho2, mu))), reference)


def limit_comparisons():
    """
    The theorems at ρ2 = 0 against their reductions.
    """
    for rho1 in (0.5, 1.0, 2.0, 5.0):
        yield Comparison("limit", PolicyId.POLICY2, (rho1, 0.0, 1.0),
                         closed.theorem2_aoi(rho1, 0.0, 1.0), (1.0 + rho1) / rho1)
    yield Comparison("limit", PolicyId.POLICY3, (1.0, 0.0, 1.0),
                     closed.theorem3_aoi(1.0, 0.0, 1.0), 2.5)
    yield Comparison("limit", PolicyId.POLICY1, (1.0, 0.0, 1.0),
                     closed.theorem1_aoi(1.0, 0.0, 1.0), 116.0 / 48.0)

##########################################################################
## Suite
##########################################################################

CheckResult = namedtuple("CheckResult", "check policy error point tolerance passed")


class ValidationSuite(object):
    """
    Runs every comparison through a MaxRelativeError metric and reports
    the worst error of each check and policy against its tolerance.
    """

    def __init__(self, loads=LOAD_GRID, mus=MU_GRID, policies=SOURCE_AWARE):
        self.loads    = loads
        self.mus      = mus
        self.policies = tuple(PolicyId.parse(p) for p in policies)
        self.failures = []

    def comparisons(self):
        for policy in self.policies:
            try:
                for comparison in grid_comparisons(policy, self.loads, self.mus):
                    yield comparison
            except AoIStatException as e:
                logger.error("%s: validation aborted: %s", policy, e)
                self.failures.append((policy, str(e)))
        for comparison in limit_comparisons():
            if comparison.policy in self.policies:
                yield comparison

    def run(self):
        self.failures = []
        worst = evaluate(MaxRelativeError(), self.comparisons())

        self.results = []
        for (check, policy), (error, point) in worst.items():
            tolerance = TOLERANCES[check]
            self.results.append(CheckResult(check, policy, error, point, tolerance, error <= tolerance))

        self.results.sort(key=lambda r: (r.policy, CHECKS.index(r.check)))
        return self.results

    @property
    def passed(self):
        if not hasattr(self, 'results'):
            self.run()
        return not self.failures and all(result.passed for result in self.results)

    def worst(self, policy):
        """
        The largest relative error over every check of a policy.
        """
        errors = [r.error for r in self.results if r.policy == str(policy)]
        return max(errors) if errors else float("nan")

    def check(self):
        """
        Raises ValidationFailure naming every failed check.
        """
        if self.passed:
            return self

        failed = ["%s/%s" % (r.policy, r.check) for r in self.results if not r.passed]
        failed.extend("%s/aborted" % policy for policy, _ in self.failures)
        raise ValidationFailure("validation failed: %s" % ", ".join(failed))


def validate(**kwargs):
    suite = ValidationSuite(**kwargs)
    suite.run()
    return suite
