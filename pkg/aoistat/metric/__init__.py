# aoistat.metric
# Metrics computed over streams of evaluated rows
#
# Created:  Sat Oct 17 15:18:03 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: __init__.py [] $

"""
Metrics computed over streams of evaluated rows
"""

##########################################################################
## Imports
##########################################################################

from .base import Metric, evaluate
from .fairness import jain_index, FairnessSummary, LowestSumAoI
from .errors import Comparison, MaxRelativeError, relative_error
