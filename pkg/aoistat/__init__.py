# aoistat
# Average age of information under source-aware packet management
#
# Created:  Sat Oct 17 09:05:16 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: __init__.py [] $

"""
Average age of information under source-aware packet management
"""

##########################################################################
## Imports
##########################################################################

__version__ = "0.1.0"
