# tests.metric_tests
# Tests for the aoistat.metric package
#
# Created:  Sat Oct 17 21:04:37 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: __init__.py [] $

"""
Tests for the aoistat.metric package
"""
