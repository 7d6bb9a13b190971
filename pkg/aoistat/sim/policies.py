# aoistat.sim.policies
# Packet management rules of the seven simulated policies
#
# Created:  Sat Oct 17 13:52:09 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: policies.py [] $

"""
Packet management rules of the seven simulated policies.

The three source-aware policies only ever let a packet displace a packet
of its own source. The baselines ignore the source (LCFS-S, LCFS-W) or
rank the sources by priority (PP-NW, PP-WW).
"""

##########################################################################
## Imports
##########################################################################

from dataclasses import replace

from aoistat.sim.base import PacketPolicy
from aoistat.policies import PolicyId
from aoistat.exceptions import InvalidConfig, IllegalEvent

##########################################################################
## Source-aware policies
##########################################################################

class SourceAwarePolicy(PacketPolicy):
    """
    Base for policies that allow at most one packet per source in a place.
    """

    def replace_or_enqueue(self, state, packet):
        idx = state.waiting(packet.source)
        if idx is not None:
            return state.replace_waiting(idx, packet)
        return state.enqueue(packet)

    def check(self, state):
        super(SourceAwarePolicy, self).check(state)
        sources = [packet.source for packet in self.exclusive(state)]
        if len(sources) != len(set(sources)):
            raise IllegalEvent("%s: two packets of the same source in %r" % (self.name, state))

    def exclusive(self, state):
        return state.queue


class Policy1(SourceAwarePolicy):
    """
    Replaces the waiting packet of the same source; the queue holds one
    packet of each source.
    """

    name = "p1"
    capacity = 2

    def admit(self, state, packet):
        return self.replace_or_enqueue(state, packet)


class Policy2(SourceAwarePolicy):
    """
    Replaces the packet of the same source whether waiting or in service.
    """

    name = "p2"
    capacity = 1

    def admit(self, state, packet):
        if state.serving_source(packet.source):
            return replace(state, serving=packet)
        return self.replace_or_enqueue(state, packet)

    def exclusive(self, state):
        return state.packets


class Policy3(SourceAwarePolicy):
    """
    Blocks and clears arrivals of the source in service.
    """

    name = "p3"
    capacity = 1

    def admit(self, state, packet):
        if state.serving_source(packet.source):
            return state
        return self.replace_or_enqueue(state, packet)

    def exclusive(self, state):
        return state.packets

##########################################################################
## Baselines
##########################################################################

class LcfsS(PacketPolicy):
    """
    No waiting room, every arrival preempts the packet in service.
    """

    name = "lcfs-s"
    capacity = 0

    def admit(self, state, packet):
        return replace(state, serving=packet)


class LcfsW(PacketPolicy):
    """
    One waiting slot, every arrival replaces the waiting packet.
    """

    name = "lcfs-w"
    capacity = 1

    def admit(self, state, packet):
        return replace(state, queue=(packet,))


class PriorityPolicy(PacketPolicy):

    def __init__(self, priority=2):
        if priority not in (1, 2):
            raise InvalidConfig("priority source must be 1 or 2, got %r" % (priority,))
        self.priority = priority

    def rank(self, packet):
        return 1 if packet.source == self.priority else 0


class PpNw(PriorityPolicy):
    """
    No waiting room; an arrival preempts service on equal or higher
    priority and is discarded otherwise.
    """

    name = "pp-nw"
    capacity = 0

    def admit(self, state, packet):
        if self.rank(packet) >= self.rank(state.serving):
            return replace(state, serving=packet)
        return state


class PpWw(PriorityPolicy):
    """
    One waiting slot with preemption in waiting but not in service.
    """

    name = "pp-ww"
    capacity = 1

    def admit(self, state, packet):
        if not state.queue:
            return state.enqueue(packet)
        if self.rank(packet) >= self.rank(state.queue[0]):
            return replace(state, queue=(packet,))
        return state

##########################################################################
## Registry
##########################################################################

POLICIES = {
    PolicyId.POLICY1: Policy1,
    PolicyId.POLICY2: Policy2,
    PolicyId.POLICY3: Policy3,
    PolicyId.LCFS_S:  LcfsS,
    PolicyId.LCFS_W:  LcfsW,
    PolicyId.PP_NW:   PpNw,
    PolicyId.PP_WW:   PpWw,
}


def get_policy(policy, priority=2):
    """
    Instantiates the packet policy for a policy id.
    """
    klass = POLICIES[PolicyId.parse(policy)]
    if issubclass(klass, PriorityPolicy):
        return klass(priority)
    return klass()


def step_policy(policy, state, event, priority=2):
    """
    Applies one event to the state under the named policy and returns the
    pair (new state, delivery or None).
    """
    if not isinstance(policy, PacketPolicy):
        policy = get_policy(policy, priority)
    return policy.step(state, event)
