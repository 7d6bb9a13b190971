# aoistat.exceptions
# Exceptions hierarchy for aoistat package
#
# Created:  Sat Oct 17 09:12:46 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: exceptions.py [] $

"""
Exceptions hierarchy for aoistat package
"""

##########################################################################
## Exit codes
##########################################################################

EXIT_SUCCESS = 0
EXIT_USAGE   = 2
EXIT_FAILURE = 3

##########################################################################
## Exceptions
##########################################################################

class AoIStatException(Exception):
    """
    Base exception for aoistat
    """

    exit_code = EXIT_FAILURE

##########################################################################
## Numeric failures
##########################################################################

class ModelError(AoIStatException):
    """
    An SHS model could not be solved
    """
    pass

class InvalidModel(ModelError):
    """
    An SHS model violates its structural invariants
    """
    pass

class SingularSystem(ModelError):
    """
    A linear system is rank deficient beyond its expected redundancy
    """
    pass

class NegativeSolution(ModelError):
    """
    The correlation vectors failed the nonnegativity check
    """
    pass

class DomainError(AoIStatException):
    """
    An argument lies outside the domain of an expression
    """
    pass

class NonPositiveRate(DomainError):
    """
    Arrival and service rates must be strictly positive
    """
    pass

class NegativeElapsed(AoIStatException):
    """
    Time cannot run backwards in the simulator
    """
    pass

class IllegalEvent(AoIStatException):
    """
    An event is inconsistent with the current system state
    """
    pass

class ValidationFailure(AoIStatException):
    """
    A cross-method validation check did not hold
    """
    pass

##########################################################################
## Input and output
##########################################################################

class ReaderException(AoIStatException):
    """
    Problems with the sweep reader
    """
    pass

class WriterException(AoIStatException):
    """
    Problems writing an artifact to disk
    """
    pass

##########################################################################
## Usage errors
##########################################################################

class ImproperlyConfigured(AoIStatException):
    """
    Some configuration detail is missing or malformed
    """

    exit_code = EXIT_USAGE

class InvalidConfig(ImproperlyConfigured):
    """
    A simulation configuration is out of range
    """
    pass

class UnsupportedPolicy(AoIStatException):
    """
    The requested method is not available for a policy
    """

    exit_code = EXIT_USAGE

class ConsoleError(AoIStatException):
    """
    Something went wrong during the execution from the command line
    """

    exit_code = EXIT_USAGE
