# aoistat.metric.errors
# Worst relative error between paired evaluations
#
# Created:  Sat Oct 17 15:51:40 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: errors.py [] $

"""
Worst relative error between paired evaluations
"""

##########################################################################
## Imports
##########################################################################

import math

from collections import namedtuple

from aoistat.metric.base import Metric

##########################################################################
## Comparisons
##########################################################################

Comparison = namedtuple("Comparison", "check policy point value reference")


def relative_error(value, reference):
    if reference == 0:
        return abs(value)
    return abs(value - reference) / abs(reference)


class MaxRelativeError(Metric):
    """
    Worst relative error, and where it occurred, for every (check, policy).
    """

    name = "max_relative_error"

    def preprocess(self):
        self.worst = {}

    def process(self, row):
        error = relative_error(row.value, row.reference)
        if math.isnan(error):
            error = math.inf

        key = (row.check, str(row.policy))
        if key not in self.worst or error > self.worst[key][0]:
            self.worst[key] = (error, row.point)

    def get_value(self):
        return dict(self.worst)
