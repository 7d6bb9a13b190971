# aoistat.metric.fairness
# Jain's fairness index between the ages of the two sources
#
# Created:  Sat Oct 17 15:34:02 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: fairness.py [] $

"""
Jain's fairness index between the ages of the two sources
"""

##########################################################################
## Imports
##########################################################################

import math

from collections import defaultdict

from aoistat.metric.base import Metric
from aoistat.exceptions import DomainError

##########################################################################
## Fairness index
##########################################################################

def jain_index(d1, d2):
    """
    (d1 + d2)^2 / (2 (d1^2 + d2^2)), which lies in [0.5, 1] and equals 1
    exactly when both ages are equal.
    """
    try:
        d1, d2 = float(d1), float(d2)
    except (TypeError, ValueError):
        raise DomainError("fairness is defined for positive ages, got %r and %r" % (d1, d2))

    for value in (d1, d2):
        if not (math.isfinite(value) and value > 0):
            raise DomainError("fairness is defined for positive ages, got %r" % (value,))

    # Scale out the larger age so large values cannot overflow
    scale  = max(d1, d2)
    d1, d2 = d1 / scale, d2 / scale
    return min((d1 + d2) ** 2 / (2.0 * (d1 * d1 + d2 * d2)), 1.0)

##########################################################################
## Metrics
##########################################################################

class FairnessSummary(Metric):
    """
    Range and mean of the Jain index of every policy over a sweep.
    """

    name = "fairness"

    def preprocess(self):
        self.values = defaultdict(list)

    def process(self, row):
        if row.jain is not None:
            self.values[str(row.policy)].append(row.jain)

    def get_value(self):
        return dict(
            (policy, {
                "min": min(values),
                "max": max(values),
                "mean": sum(values) / len(values),
            })
            for policy, values in self.values.items()
        )


class LowestSumAoI(Metric):
    """
    The policy with the lowest sum of average ages at each value of ρ1.
    """

    name = "lowest_sum_aoi"

    def preprocess(self):
        self.best = {}

    def process(self, row):
        if row.sum_aoi is None:
            return
        key = round(row.rho1, 12)
        if key not in self.best or row.sum_aoi < self.best[key][1]:
            self.best[key] = (str(row.policy), row.sum_aoi)

    def get_value(self):
        return dict((rho1, policy) for rho1, (policy, _) in sorted(self.best.items()))
