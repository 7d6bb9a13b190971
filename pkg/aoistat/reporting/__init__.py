# aoistat.reporting
# Text reports and plots rendered from templates
#
# Created:  Sat Oct 17 18:18:30 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: __init__.py [] $

"""
Text reports and plots rendered from templates
"""

##########################################################################
## Imports
##########################################################################

from .base import Report, AnalyticReport, ValidationReport
from .plots import PolylinePlot
