# aoistat.utils
# Utility functions for the aoistat package
#
# Created:  Sat Oct 17 19:28:10 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: __init__.py [] $

"""
Utility functions for the aoistat package
"""

##########################################################################
## Imports
##########################################################################

from .config import load_config, merge_settings, lines_from_file
