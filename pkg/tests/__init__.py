# tests
# Tests for the aoistat package
#
# Created:  Sat Oct 17 21:02:11 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: __init__.py [] $

"""
Tests for the aoistat package
"""

##########################################################################
## Imports
##########################################################################

from unittest import TestCase

##########################################################################
## TestCase
##########################################################################

class InitialTests(TestCase):
    """
    Initial tests cases for aoistat package
    """

    def test_sanity(self):
        """
        Assert a world fact, 2+3=5
        """
        self.assertEqual(2+3, 5)

    def test_import(self):
        """
        Assert that we're able to import aoistat
        """
        try:
            import aoistat
        except ImportError:
            self.fail("Unable to import aoistat package")
