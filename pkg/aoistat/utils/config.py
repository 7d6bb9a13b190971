# aoistat.utils.config
# Flat key-value configuration files for sweeps
#
# Created:  Sat Oct 17 19:30:21 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: config.py [] $

"""
Flat key-value configuration files for sweeps.

A config file holds one `key = value` (or `key: value`) per line; blank
lines and lines starting with '#' are skipped. Values given as flags on
the command line take precedence over the file.

    # sum of the average ages at total load 1
    policies = p1, p2, p3, lcfs-s, lcfs-w, pp-nw, pp-ww
    rho      = 1
    points   = 9
    margin   = 0.1
"""

##########################################################################
## Imports
##########################################################################

import os
import re
import logging

from aoistat.policies import PolicyId, Method
from aoistat.exceptions import ImproperlyConfigured, AoIStatException

##########################################################################
## Module Constants
##########################################################################

logger = logging.getLogger(__name__)

LINE = re.compile(r'^(?P<key>[A-Za-z_][\w-]*)\s*[=:]\s*(?P<value>.*)$')


def _policies(value):
    return tuple(PolicyId.parse(item) for item in value.split(",") if item.strip())


CONVERTERS = {
    'policies':     _policies,
    'method':       Method.parse,
    'rho':          float,
    'rho2':         float,
    'mu':           float,
    'span':         float,
    'points':       int,
    'margin':       float,
    'events':       int,
    'replications': int,
    'seed':         int,
    'warmup':       float,
    'workers':      int,
    'priority':     int,
}

##########################################################################
## Helper Functions
##########################################################################

def lines_from_file(path):
    """
    Reads a newline delimited file and yields (line number, stripped line)
    for every line that is not blank or a comment.
    """
    with open(path, 'r', encoding='utf-8') as data:
        for lineno, line in enumerate(data, 1):
            line = line.strip()
            if line and not line.startswith('#'):
                yield lineno, line


def load_config(path):
    """
    Parses a config file into a dict of typed settings.
    """
    path = os.path.abspath(os.path.expanduser(os.fspath(path)))
    if not os.path.isfile(path):
        raise ImproperlyConfigured("No config file found at '%s'" % path)

    settings = {}
    for lineno, line in lines_from_file(path):
        match = LINE.match(line)
        if match is None:
            raise ImproperlyConfigured("%s:%i: expected 'key = value', got %r" % (path, lineno, line))

        key   = match.group('key').replace('-', '_').lower()
        value = match.group('value').strip()
        if key not in CONVERTERS:
            raise ImproperlyConfigured("%s:%i: unknown key %r" % (path, lineno, key))

        try:
            settings[key] = CONVERTERS[key](value)
        except (ValueError, AoIStatException) as e:
            raise ImproperlyConfigured("%s:%i: bad value %r for %s (%s)" % (path, lineno, value, key, e))

    return settings


def merge_settings(file_settings, flag_settings):
    """
    Flags that were given (not None) override the values of the file.
    """
    merged = dict(file_settings)
    for key, value in flag_settings.items():
        if value is None:
            continue
        if key in merged and merged[key] != value:
            logger.debug("flag overrides config %s: %r -> %r", key, merged[key], value)
        merged[key] = value
    return merged
