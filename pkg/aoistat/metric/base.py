# aoistat.metric.base
# The base metric class for all metrics
#
# Created:  Sat Oct 17 15:20:26 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: base.py [] $

"""
The base metric class for all metrics
"""

##########################################################################
## Imports
##########################################################################

import abc

from aoistat.exceptions import ImproperlyConfigured

##########################################################################
## Base Metric
##########################################################################

class Metric(metaclass=abc.ABCMeta):
    """
    A Metric is a single unit of computation over a stream of rows, for
    instance the worst error of a check or the fairness range of a policy.
    The metric keeps its state on the instance and reports it through
    get_value once the stream is exhausted.
    """

    name = None

    def preprocess(self):
        """
        This hook will be called before the rows are processed.
        """
        return False

    @abc.abstractmethod
    def process(self, row):
        """
        Every metric sees a copy of every row and updates its state.
        """
        raise NotImplementedError("Metrics must process rows.")

    def postprocess(self):
        """
        This hook will be called after every row has been processed.
        """
        return False

    @abc.abstractmethod
    def get_value(self):
        raise NotImplementedError("Metrics must report a value.")

    def get_name(self):
        if not self.name:
            raise ImproperlyConfigured("Metrics must provide a name or implementation of get_name()")
        return self.name


##########################################################################
## Helpers
##########################################################################

def evaluate(metric, rows):
    """
    Feeds every row to the metric between its hooks and returns its value.
    """
    metric.preprocess()
    for row in rows:
        metric.process(row)
    metric.postprocess()
    return metric.get_value()
