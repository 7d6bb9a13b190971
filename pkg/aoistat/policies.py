# aoistat.policies
# SHS models of the source-aware packet management policies
#
# Created:  Sat Oct 17 11:48:20 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: policies.py [] $

"""
SHS models of the source-aware packet management policies.

Two sources share one server of rate μ. The age vector tracks source 1:
x0 is its age at the monitor and the remaining components are the ages its
age would drop to if the packets in the system were delivered. The ages
of source 2 are obtained from the same models by exchanging λ1 and λ2.
"""

##########################################################################
## Imports
##########################################################################

from enum import Enum
from functools import lru_cache

from aoistat import closed
from aoistat.shs.solver import average_aoi
from aoistat.exceptions import UnsupportedPolicy
from aoistat.shs.base import RateSymbol, Transition, SHSModel, reset_map

##########################################################################
## Module Constants
##########################################################################

L1 = RateSymbol.LAMBDA1
L2 = RateSymbol.LAMBDA2
MU = RateSymbol.MU

##########################################################################
## Enumerations
##########################################################################

class PolicyId(Enum):
    """
    The three source-aware policies and the four comparison baselines.
    """

    POLICY1 = "p1"
    POLICY2 = "p2"
    POLICY3 = "p3"
    LCFS_S  = "lcfs-s"
    LCFS_W  = "lcfs-w"
    PP_NW   = "pp-nw"
    PP_WW   = "pp-ww"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise UnsupportedPolicy(
                "unknown policy %r, choose one of %s" % (value, ", ".join(p.value for p in cls))
            )

    @property
    def has_model(self):
        return self in SOURCE_AWARE

    @property
    def label(self):
        """
        Long name used in reports, e.g. "policy2" or "lcfs-s".
        """
        if self.has_model:
            return "policy" + self.value[1:]
        return self.value

    def __str__(self):
        return self.value


class SourceView(Enum):

    SOURCE1 = 1
    SOURCE2 = 2


class Method(Enum):
    """
    How an average age is obtained: closed form, the SHS engine, or the
    discrete-event simulator.
    """

    CLOSED = "closed"
    SHS    = "shs"
    SIM    = "sim"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise UnsupportedPolicy("unknown method %r" % (value,))

    def __str__(self):
        return self.value


SOURCE_AWARE = (PolicyId.POLICY1, PolicyId.POLICY2, PolicyId.POLICY3)
BASELINES    = (PolicyId.LCFS_S, PolicyId.LCFS_W, PolicyId.PP_NW, PolicyId.PP_WW)
POLICY_ORDER = SOURCE_AWARE + BASELINES

##########################################################################
## Transition tables
##########################################################################

# (l, from, to, rate, x') where x' names the copied component or None for 0

POLICY1_TABLE = (
    (1,  0, 1, L1, (0, None, 2, 3)),
    (2,  0, 1, L2, (0, 0, 2, 3)),
    (3,  1, 0, MU, (1, 1, 2, 3)),
    (4,  1, 2, L1, (0, 1, None, 3)),
    (5,  1, 3, L2, (0, 1, 1, 3)),
    (6,  2, 1, MU, (1, 2, 2, 3)),
    (7,  3, 1, MU, (1, 1, 2, 3)),
    (8,  2, 2, L1, (0, 1, None, 3)),
    (9,  2, 4, L2, (0, 1, 2, 2)),
    (10, 3, 5, L1, (0, 1, 1, None)),
    (11, 4, 4, L1, (0, 1, None, None)),
    (12, 5, 5, L1, (0, 1, 1, None)),
    (13, 4, 3, MU, (1, 2, 2, 3)),
    (14, 5, 2, MU, (1, 1, 3, 3)),
)

POLICY2_TABLE = (
    (1,  0, 1, L1, (0, None, 2)),
    (2,  0, 2, L2, (0, 0, 2)),
    (3,  1, 1, L1, (0, None, 2)),
    (4,  1, 3, L2, (0, 1, 1)),
    (5,  2, 4, L1, (0, 0, None)),
    (6,  3, 3, L1, (0, None, None)),
    (7,  4, 4, L1, (0, 0, None)),
    (8,  1, 0, MU, (1, 1, 2)),
    (9,  2, 0, MU, (0, 1, 2)),
    (10, 3, 2, MU, (1, 1, 2)),
    (11, 4, 1, MU, (0, 2, 2)),
)

# Blocking instead of self-preemption changes only l=3 and l=6
POLICY3_CHANGES = {
    3: (1, 1, L1, (0, 1, 2)),
    6: (3, 3, L1, (0, 1, 1)),
}

POLICY3_TABLE = tuple(
    (row[0],) + POLICY3_CHANGES[row[0]] if row[0] in POLICY3_CHANGES else row
    for row in POLICY2_TABLE
)

##########################################################################
## Model builders
##########################################################################

def model_from_table(name, num_states, age_dim, table):
    transitions = [
        Transition(l, source, target, rate, reset_map(sources, age_dim))
        for l, source, target, rate, sources in table
    ]
    return SHSModel.create(name, num_states, age_dim, transitions)


@lru_cache(maxsize=None)
def build_policy1_model():
    """
    Six states: 0 idle, 1 serving with empty queue, 2 queue holds a source 1
    packet, 3 queue holds a source 2 packet, 4 queue holds source 1 then
    source 2, and 5 queue holds source 2 then source 1.
    """
    return model_from_table("policy1", 6, 4, POLICY1_TABLE)


@lru_cache(maxsize=None)
def build_policy2_model():
    """
    Five states: 0 idle, 1 serving source 1, 2 serving source 2, 3 serving
    source 1 with source 2 waiting, 4 serving source 2 with source 1 waiting.
    """
    return model_from_table("policy2", 5, 3, POLICY2_TABLE)


@lru_cache(maxsize=None)
def build_policy3_model():
    return model_from_table("policy3", 5, 3, POLICY3_TABLE)


BUILDERS = {
    PolicyId.POLICY1: build_policy1_model,
    PolicyId.POLICY2: build_policy2_model,
    PolicyId.POLICY3: build_policy3_model,
}

THEOREMS = {
    PolicyId.POLICY1: closed.theorem1_aoi,
    PolicyId.POLICY2: closed.theorem2_aoi,
    PolicyId.POLICY3: closed.theorem3_aoi,
}


def build_model(policy):
    policy = PolicyId.parse(policy)
    if policy not in BUILDERS:
        raise UnsupportedPolicy(
            "no SHS model in scope for %s; use simulate" % policy
        )
    return BUILDERS[policy]()

##########################################################################
## Dispatch
##########################################################################

def average_aoi_for(policy, view, loads, method=Method.CLOSED):
    """
    Average age of one source under a source-aware policy. Source 2 is
    evaluated on the source 1 model with the arrival rates exchanged.
    """
    policy = PolicyId.parse(policy)
    method = Method.parse(method)
    view   = SourceView(view)

    if not policy.has_model:
        raise UnsupportedPolicy(
            "no closed form in scope for %s; use simulate" % policy
        )
    if method is Method.SIM:
        raise UnsupportedPolicy(
            "%s estimates by simulation come from aoistat.sim.simulate" % policy
        )

    if view is SourceView.SOURCE2:
        loads = loads.swapped()

    if method is Method.CLOSED:
        return THEOREMS[policy](loads.rho1, loads.rho2, loads.mu)
    return average_aoi(build_model(policy), loads)


def source_ages(policy, loads, method=Method.CLOSED):
    """
    Returns the pair (Δ1, Δ2) for a source-aware policy.
    """
    return (
        average_aoi_for(policy, SourceView.SOURCE1, loads, method),
        average_aoi_for(policy, SourceView.SOURCE2, loads, method),
    )
