# aoistat.closed
# Closed-form average age of the source-aware policies
#
# Created:  Sat Oct 17 11:02:15 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: closed.py [] $

"""
Closed-form average age of information of source 1 under the three
source-aware packet management policies, along with the stationary vectors
and the per-state values v_q0 whose sum is the average age.

Every coefficient family is a tuple of polynomials in ρ2 listed by
ascending power of ρ2, one polynomial per power k of ρ1, so that a family
evaluates to sum_k ρ1^k p_k(ρ2). Both levels are evaluated in Horner form.
"""

##########################################################################
## Imports
##########################################################################

import math

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from aoistat.exceptions import DomainError
from aoistat.shs.solver import StationaryDistribution

##########################################################################
## Coefficients
##########################################################################

@dataclass(frozen=True)
class CoefficientSet(object):
    """
    Named families of polynomial coefficients in ρ2.
    """

    name: str
    families: dict

    def __getitem__(self, family):
        return self.families[family]

    def terms(self, family, rho2):
        """
        The value of every ρ1^k coefficient of a family at ρ2.
        """
        return np.array([P.polyval(rho2, poly) for poly in self.families[family]])

    def evaluate(self, family, rho1, rho2, offset=0):
        """
        Evaluates sum_k ρ1^(k + offset) p_k(ρ2) for a family.
        """
        value = P.polyval(rho1, self.terms(family, rho2))
        return value * rho1 ** offset

    def is_nonnegative(self):
        return all(c >= 0 for family in self.families.values() for poly in family for c in poly)


THEOREM1 = CoefficientSet("theorem1", {
    "eta": (
        (1, 2, 3, 2, 1),
        (6, 14, 21, 15, 7),
        (16, 42, 64, 46, 17),
        (26, 78, 118, 73, 15),
        (30, 102, 124, 52, 5),
        (24, 79, 66, 15),
        (11, 31, 15),
        (2, 5),
    ),
    "xi": (
        (1, 2, 3, 2, 1),
        (3, 7, 9, 6, 2),
        (4, 10, 12, 6),
        (3, 8, 6),
        (1, 2),
    ),
})

# The k = 0 term is (ρ2 + 1)^2
THEOREM2 = CoefficientSet("theorem2", {
    "eta": (
        (1, 2, 1),
        (5, 11, 6),
        (10, 24, 13),
        (10, 27, 10),
        (5, 14, 3),
        (1, 3),
    ),
})

# The k = 0 term is (ρ2 + 1)^3
THEOREM3 = CoefficientSet("theorem3", {
    "eta": (
        (1, 3, 3, 1),
        (4, 13, 14, 5),
        (7, 25, 28, 10),
        (6, 23, 22, 5),
        (2, 8, 5),
    ),
})

# Numerators of v_10..v_50 under Policy 1: the constant term in ρ1 (c0)
# followed by the gamma polynomials for ρ1^1..ρ1^7.
POLICY1_STATES = CoefficientSet("policy1-states", {
    "c0": (
        (0, 1, 3, 4, 3, 1),
        (0, 1, 4, 7, 7, 4, 1),
        (0, 0, 1, 3, 4, 3, 1),
        (0, 0, 1, 4, 7, 7, 4, 1),
        (0, 0, 1, 3, 4, 3, 1),
    ),
    "gamma1": (
        (1, 9, 22, 26, 16, 4),
        (6, 35, 70, 64, 25, 2),
        (16, 72, 107, 62, 11),
        (23, 77, 75, 23, 1),
        (18, 41, 23, 3),
        (7, 10, 3),
        (1, 1),
    ),
    "gamma2": (
        (1, 10, 32, 51, 46, 23, 5),
        (7, 46, 119, 156, 108, 36, 4),
        (21, 111, 222, 213, 100, 20, 1),
        (33, 138, 202, 134, 40, 4),
        (28, 87, 89, 39, 6),
        (12, 26, 18, 4),
        (2, 3, 1),
    ),
    "gamma3": (
        (0, 1, 10, 25, 30, 19, 5),
        (0, 6, 41, 87, 84, 37, 5),
        (0, 18, 91, 149, 101, 27, 2),
        (0, 30, 110, 126, 55, 8),
        (0, 27, 69, 51, 12),
        (0, 12, 20, 8),
        (0, 2, 2),
    ),
    "gamma4": (
        (0, 1, 11, 36, 58, 53, 27, 6),
        (0, 8, 55, 145, 193, 137, 48, 6),
        (0, 26, 140, 287, 286, 143, 32, 2),
        (0, 43, 183, 281, 201, 67, 8),
        (0, 38, 123, 137, 67, 12),
        (0, 17, 40, 31, 8),
        (0, 3, 5, 2),
    ),
    "gamma5": (
        (0, 1, 11, 28, 34, 22, 6),
        (0, 7, 49, 105, 103, 47, 7),
        (0, 23, 115, 190, 133, 38, 3),
        (0, 40, 145, 170, 78, 12),
        (0, 37, 95, 73, 18),
        (0, 17, 29, 12),
        (0, 3, 3),
    ),
})

##########################################################################
## Domain checks
##########################################################################

def _finite(name, value):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError("%s must be a real number, got %r" % (name, value))
    if not math.isfinite(value):
        raise DomainError("%s must be finite, got %r" % (name, value))
    return value


def _check_loads(rho1, rho2, mu):
    rho1 = _finite("rho1", rho1)
    rho2 = _finite("rho2", rho2)
    mu   = _finite("mu", mu)

    if rho1 <= 0:
        raise DomainError("rho1 must be positive, got %r" % rho1)
    if rho2 < 0:
        raise DomainError("rho2 must be nonnegative, got %r" % rho2)
    if mu <= 0:
        raise DomainError("mu must be positive, got %r" % mu)
    return rho1, rho2, mu


def _check_stationary(rho1, rho2):
    rho1 = _finite("rho1", rho1)
    rho2 = _finite("rho2", rho2)

    if rho1 < 0 or rho2 < 0:
        raise DomainError("loads must be nonnegative, got (%r, %r)" % (rho1, rho2))
    if rho1 == 0 and rho2 == 0:
        raise DomainError("at least one load must be positive")
    return rho1, rho2


def _common(rho1, rho2):
    """
    The denominator factor ρ1^2 (2ρ2 + 1) + (ρ2 + 1)^2 (2ρ1 + 1) shared by
    Theorems 2 and 3.
    """
    return rho1 ** 2 * (2 * rho2 + 1) + (rho2 + 1) ** 2 * (2 * rho1 + 1)

##########################################################################
## Theorems
##########################################################################

def theorem1_aoi(rho1, rho2, mu=1.0):
    """
    Average age of source 1 under Policy 1, where the waiting packet of the
    same source is replaced by a fresh arrival.
    """
    rho1, rho2, mu = _check_loads(rho1, rho2, mu)
    numerator   = THEOREM1.evaluate("eta", rho1, rho2)
    denominator = mu * rho1 * (1 + rho1) ** 2 * THEOREM1.evaluate("xi", rho1, rho2)
    return float(numerator / denominator)


def theorem2_aoi(rho1, rho2, mu=1.0):
    """
    Average age of source 1 under Policy 2, where a fresh arrival replaces
    the packet of the same source whether waiting or in service.
    """
    rho1, rho2, mu = _check_loads(rho1, rho2, mu)
    numerator   = THEOREM2.evaluate("eta", rho1, rho2)
    denominator = mu * rho1 * (1 + rho1) ** 2 * _common(rho1, rho2)
    return float(numerator / denominator)


def theorem3_aoi(rho1, rho2, mu=1.0):
    """
    Average age of source 1 under Policy 3, where an arrival that finds a
    packet of its own source in service is blocked and cleared.
    """
    rho1, rho2, mu = _check_loads(rho1, rho2, mu)
    numerator   = THEOREM3.evaluate("eta", rho1, rho2)
    denominator = mu * rho1 * (1 + rho1) * (1 + rho2) * _common(rho1, rho2)
    return float(numerator / denominator)

##########################################################################
## Stationary vectors
##########################################################################

def policy1_stationary(rho1, rho2):
    rho1, rho2 = _check_stationary(rho1, rho2)
    rho    = rho1 + rho2
    values = np.array([
        1.0, rho, rho1 * rho, rho2 * rho, rho1 * rho2 * rho, rho1 * rho2 * rho,
    ])
    return StationaryDistribution(values / (rho ** 2 + rho * (2 * rho1 * rho2 + 1) + 1))


def policy23_stationary(rho1, rho2):
    """
    Shared by Policies 2 and 3, whose chains have the same topology.
    """
    rho1, rho2 = _check_stationary(rho1, rho2)
    values = np.array([1.0, rho1, rho2, rho1 * rho2, rho1 * rho2])
    return StationaryDistribution(values / (2 * rho1 * rho2 + rho1 + rho2 + 1))

##########################################################################
## Per-state values
##########################################################################

def policy1_vq0(rho1, rho2, mu=1.0):
    """
    Returns [v_00, ..., v_50] for Policy 1; their sum is theorem1_aoi.
    """
    rho1, rho2, mu = _check_loads(rho1, rho2, mu)
    r  = rho1 + rho2
    E  = ((r + 1) ** 2 - rho2) * (r ** 2 + r * (2 * rho1 * rho2 + 1) + 1)
    base = mu * (1 + r) * (1 + rho1) ** 2 * E

    v00 = (
        3 * rho1 ** 4 + rho1 ** 3 * (5 * rho2 + 9)
        + rho1 ** 2 * (2 * rho2 ** 2 + 11 * rho2 + 10)
        + rho1 * (4 * rho2 ** 2 + 6 * rho2 + 5)
        + rho2 ** 2 + rho2 + 1
    ) / (mu * rho1 * (1 + rho1) ** 2 * E)

    denominators = (
        base * rho1 * (1 + rho2),
        base * (1 + rho2) ** 2,
        base * rho1 * (1 + rho2),
        base * (1 + rho2) ** 2,
        base * (1 + rho2),
    )

    c0 = POLICY1_STATES["c0"]
    values = [v00]
    for i, denominator in enumerate(denominators, 1):
        numerator = (
            P.polyval(rho2, c0[i - 1])
            + POLICY1_STATES.evaluate("gamma%i" % i, rho1, rho2, offset=1)
        )
        values.append(numerator / denominator)

    return np.array(values)


def policy2_vq0(rho1, rho2, mu=1.0):
    rho1, rho2, mu = _check_loads(rho1, rho2, mu)
    r = rho1 + rho2
    c = 1 + r + 2 * rho1 * rho2

    return np.array([
        (rho1 ** 2 * (2 * r + 5) + (4 * rho1 + 1) * (rho2 + 1))
            / (mu * rho1 * (1 + rho1) ** 2 * (1 + r) * c),
        ((1 + rho2) * (rho1 ** 3 + 4 * rho1 ** 2 + 1) + rho1 * (5 * rho2 + 4))
            / (mu * (1 + rho2) * (1 + rho1) ** 2 * c),
        rho2 * (rho1 ** 2 * (2 * r + 6) + (4 * rho1 + 1) * (rho2 + 1))
            / (mu * rho1 * (1 + rho1) ** 2 * (1 + r) * c),
        rho2 * ((1 + rho2) * (2 * rho1 ** 3 + 6 * rho1 ** 2 + 1) + rho1 * (6 * rho2 + 5))
            / (mu * (1 + rho2) * (1 + rho1) ** 2 * c),
        rho2 * (rho1 ** 2 * (rho1 ** 2 + 5 * rho1 + rho1 * rho2 + 4 * rho2 + 9)
                + (5 * rho1 + 1) * (1 + rho2))
            / (mu * (1 + rho1) ** 2 * (1 + r) * c),
    ])


def policy3_vq0(rho1, rho2, mu=1.0):
    rho1, rho2, mu = _check_loads(rho1, rho2, mu)
    r = rho1 + rho2
    c = 1 + r + 2 * rho1 * rho2

    return np.array([
        (rho1 ** 3 + rho1 ** 2 * ((rho2 + 2) ** 2 - 1) + (rho2 + 1) ** 2 * (3 * rho1 + 1))
            / (mu * rho1 * (1 + rho1) * (1 + rho2) * (1 + r) * c),
        ((1 + rho2) * (2 * rho1 ** 2 + 1) + rho1 * (4 * rho2 + 3))
            / (mu * (1 + rho2) * (1 + rho1) * c),
        rho2 * (rho1 ** 3 * (rho2 + 2) + rho1 ** 2 * (rho2 ** 2 + 5 * rho2 + 4)
                + (3 * rho1 + 1) * (rho2 + 1) ** 2)
            / (mu * rho1 * (1 + rho1) * (1 + rho2) * (1 + r) * c),
        rho2 * ((rho2 + 1) * (3 * rho1 ** 2 + 1) + rho1 * (5 * rho2 + 4))
            / (mu * (1 + rho1) * (1 + rho2) * c),
        rho2 * (rho1 ** 3 * (2 * rho2 + 3) + 2 * rho1 ** 2 * ((rho2 + 2) ** 2 - 1)
                + (4 * rho1 + 1) * (rho2 + 1) ** 2)
            / (mu * (1 + rho1) * (1 + rho2) * (1 + r) * c),
    ])
