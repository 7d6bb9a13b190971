# tests.sim_tests.base_tests
# Testing the packet management policies event by event
#
# Created:  Sat Oct 17 22:09:26 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: base_tests.py [] $

"""
Testing the packet management policies event by event
"""

##########################################################################
## Imports
##########################################################################

import unittest

from hypothesis import given, strategies as st

from aoistat.sim import *
from aoistat.sim.policies import PpNw, PpWw
from aoistat.policies import POLICY_ORDER
from aoistat.exceptions import IllegalEvent, InvalidConfig, ImproperlyConfigured

##########################################################################
## Helpers
##########################################################################

def run(policy, events, priority=2):
    """
    Applies (kind, source) events at times 1, 2, ... and returns the final
    state with the deliveries made on the way.
    """
    state, deliveries = SystemState(), []
    for time, (kind, source) in enumerate(events, 1):
        event = Arrival(source, float(time)) if kind == "a" else ServiceCompletion(float(time))
        state, delivery = step_policy(policy, state, event, priority)
        if delivery is not None:
            deliveries.append(delivery)
    return state, deliveries


def generated(packets):
    return [(p.source, p.generated) for p in packets]

##########################################################################
## Base policy tests
##########################################################################

class PacketPolicyTests(unittest.TestCase):

    def test_arrival_to_empty_system(self):
        """
        Assert every policy serves an arrival to an empty system at once
        """
        for policy in POLICY_ORDER:
            state, delivery = step_policy(policy, SystemState(), Arrival(2, 1.5))
            self.assertEqual(state.serving, Packet(2, 1.5))
            self.assertIsNone(delivery)

    def test_completion_delivers(self):
        state, deliveries = run("lcfs-w", [("a", 1), ("a", 2), ("c", None)])
        self.assertEqual(deliveries, [Delivery(1, 1.0, 3.0)])
        self.assertEqual(deliveries[0].age, 2.0)
        self.assertEqual(state.serving, Packet(2, 2.0))
        self.assertEqual(state.last_delivered, (1.0, 0.0))

    def test_completion_when_idle(self):
        with self.assertRaises(IllegalEvent):
            step_policy("p1", SystemState(), ServiceCompletion(1.0))

    def test_unknown_source(self):
        with self.assertRaises(IllegalEvent):
            step_policy("p2", SystemState(), Arrival(3, 1.0))

    def test_idle_with_queue(self):
        state = SystemState(queue=(Packet(1, 0.5),))
        with self.assertRaises(IllegalEvent):
            step_policy("p1", state, Arrival(2, 1.0))

    def test_unknown_event(self):
        with self.assertRaises(IllegalEvent):
            step_policy("lcfs-s", SystemState(), "arrival")

    def test_states_are_immutable(self):
        """
        Assert stepping returns a new state and leaves the old one alone
        """
        before = SystemState(serving=Packet(1, 0.0))
        after, _ = step_policy("lcfs-s", before, Arrival(2, 1.0))
        self.assertEqual(before.serving, Packet(1, 0.0))
        self.assertEqual(after.serving, Packet(2, 1.0))

    def test_policy_requires_name(self):
        class Unnamed(PacketPolicy):
            def admit(self, state, packet):
                return state

        with self.assertRaises(ImproperlyConfigured):
            Unnamed().get_name()

    def test_stale_delivery_keeps_newer_age(self):
        """
        Assert a delivery of an older packet never raises the monitor's age
        """
        state = SystemState(serving=Packet(1, 1.0), last_delivered=(2.0, 0.0))
        state, delivery = step_policy("p1", state, ServiceCompletion(3.0))
        self.assertEqual(state.last_delivered, (2.0, 0.0))
        self.assertEqual(delivery.generated, 1.0)

##########################################################################
## Source-aware policy tests
##########################################################################

class SourceAwareTests(unittest.TestCase):

    def test_policy1_replaces_same_source(self):
        """
        Assert Policy 1 keeps one waiting packet per source in arrival order
        """
        state, _ = run("p1", [("a", 1), ("a", 2), ("a", 1)])
        self.assertEqual(generated(state.queue), [(2, 2.0), (1, 3.0)])

        state, _ = run("p1", [("a", 1), ("a", 2), ("a", 1), ("a", 2), ("a", 2)])
        self.assertEqual(generated(state.queue), [(2, 5.0), (1, 3.0)])
        self.assertEqual(state.serving, Packet(1, 1.0))

    def test_policy2_preempts_same_source(self):
        state, _ = run("p2", [("a", 1), ("a", 1)])
        self.assertEqual(state.serving, Packet(1, 2.0))
        self.assertEqual(state.queue, ())

        state, _ = run("p2", [("a", 1), ("a", 2), ("a", 2)])
        self.assertEqual(state.serving, Packet(1, 1.0))
        self.assertEqual(generated(state.queue), [(2, 3.0)])

    def test_policy3_blocks_same_source(self):
        state, _ = run("p3", [("a", 1), ("a", 1), ("a", 2), ("a", 2)])
        self.assertEqual(state.serving, Packet(1, 1.0))
        self.assertEqual(generated(state.queue), [(2, 4.0)])

##########################################################################
## Baseline tests
##########################################################################

class BaselineTests(unittest.TestCase):

    def test_lcfs_s_preempts(self):
        state, _ = run("lcfs-s", [("a", 1), ("a", 2), ("a", 1)])
        self.assertEqual(state.serving, Packet(1, 3.0))
        self.assertEqual(state.queue, ())

    def test_lcfs_w_replaces_waiting(self):
        state, _ = run("lcfs-w", [("a", 1), ("a", 2), ("a", 1)])
        self.assertEqual(state.serving, Packet(1, 1.0))
        self.assertEqual(generated(state.queue), [(1, 3.0)])

    def test_pp_nw(self):
        """
        Assert low priority arrivals are dropped while high priority is served
        """
        state, _ = run("pp-nw", [("a", 2), ("a", 1)])
        self.assertEqual(state.serving, Packet(2, 1.0))

        state, _ = run("pp-nw", [("a", 1), ("a", 2), ("a", 2)])
        self.assertEqual(state.serving, Packet(2, 3.0))

        state, _ = run("pp-nw", [("a", 1), ("a", 1)])
        self.assertEqual(state.serving, Packet(1, 2.0))

    def test_pp_ww(self):
        state, _ = run("pp-ww", [("a", 1), ("a", 2), ("a", 1)])
        self.assertEqual(state.serving, Packet(1, 1.0))
        self.assertEqual(generated(state.queue), [(2, 2.0)])

        state, _ = run("pp-ww", [("a", 1), ("a", 1), ("a", 2)])
        self.assertEqual(generated(state.queue), [(2, 3.0)])

    def test_priority_source(self):
        state, _ = run("pp-nw", [("a", 2), ("a", 1)], priority=1)
        self.assertEqual(state.serving, Packet(1, 2.0))

        self.assertIsInstance(get_policy("pp-ww", priority=1), PpWw)
        with self.assertRaises(InvalidConfig):
            PpNw(priority=3)

##########################################################################
## Occupancy invariants
##########################################################################

events = st.lists(
    st.one_of(st.tuples(st.just("a"), st.sampled_from((1, 2))), st.just(("c", None))),
    max_size=60,
)


class OccupancyTests(unittest.TestCase):

    @given(st.sampled_from(POLICY_ORDER), events)
    def test_occupancy_rules(self, policy_id, sequence):
        """
        Assert no event sequence breaks a policy's occupancy rules
        """
        policy = get_policy(policy_id)
        state  = SystemState()
        for time, (kind, source) in enumerate(sequence, 1):
            if kind == "c" and state.idle:
                continue
            event = Arrival(source, float(time)) if kind == "a" else ServiceCompletion(float(time))
            state, delivery = policy.step(state, event)
            policy.check(state)
            if delivery is not None:
                self.assertGreaterEqual(delivery.age, 0.0)


if __name__ == '__main__':
    unittest.main()
