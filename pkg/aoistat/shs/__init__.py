# aoistat.shs
# Stochastic hybrid systems of age and their numeric solution
#
# Created:  Sat Oct 17 09:38:51 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: __init__.py [] $

"""
Stochastic hybrid systems of age and their numeric solution
"""

##########################################################################
## Imports
##########################################################################

from .base import RateSymbol, LoadPoint, Transition, SHSModel, Diagnostic
from .base import reset_map, validate_model, check_model
from .solver import StationaryDistribution, CorrelationMatrix
from .solver import balance_matrices, stationary_distribution
from .solver import correlation_vectors, average_aoi, solve_model
