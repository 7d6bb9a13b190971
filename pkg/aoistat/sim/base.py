# aoistat.sim.base
# Events, system state and the base packet management policy
#
# Created:  Sat Oct 17 13:10:44 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: base.py [] $

"""
Events, system state and the base packet management policy
"""

##########################################################################
## Imports
##########################################################################

import abc

from typing import Optional
from dataclasses import dataclass, replace

from aoistat.exceptions import IllegalEvent, ImproperlyConfigured

##########################################################################
## Module Constants
##########################################################################

SOURCES = (1, 2)

##########################################################################
## Packets and events
##########################################################################

@dataclass(frozen=True)
class Packet(object):
    """
    A status update of a source, stamped with its generation time.
    """

    source: int
    generated: float


@dataclass(frozen=True)
class Delivery(object):

    source: int
    generated: float
    delivered: float

    @property
    def age(self):
        """
        The age of the source at the monitor right after this delivery.
        """
        return self.delivered - self.generated


@dataclass(frozen=True)
class Arrival(object):

    source: int
    time: float


@dataclass(frozen=True)
class ServiceCompletion(object):

    time: float

##########################################################################
## System state
##########################################################################

@dataclass(frozen=True)
class SystemState(object):
    """
    The packet in service, the waiting packets in service order, and the
    generation time of the last delivered packet of each source.
    """

    serving: Optional[Packet] = None
    queue: tuple = ()
    last_delivered: tuple = (0.0, 0.0)

    @property
    def idle(self):
        return self.serving is None

    @property
    def packets(self):
        if self.serving is None:
            return self.queue
        return (self.serving,) + self.queue

    def waiting(self, source):
        """
        Index of the waiting packet of a source, or None.
        """
        for idx, packet in enumerate(self.queue):
            if packet.source == source:
                return idx
        return None

    def serving_source(self, source):
        return self.serving is not None and self.serving.source == source

    def age(self, source, time):
        return time - self.last_delivered[source - 1]

    def replace_waiting(self, idx, packet):
        queue = self.queue[:idx] + (packet,) + self.queue[idx + 1:]
        return replace(self, queue=queue)

    def enqueue(self, packet):
        return replace(self, queue=self.queue + (packet,))

##########################################################################
## Base policy
##########################################################################

class PacketPolicy(metaclass=abc.ABCMeta):
    """
    A packet management policy decides what happens to an arrival that
    finds the server busy. Every policy is work conserving: an arrival to
    an empty system enters service at once, and a completion hands the
    server to the head of the queue.
    """

    name = None
    capacity = 0

    def step(self, state, event):
        """
        Applies one event and returns the new state along with the delivery
        the event caused, if any.
        """
        if isinstance(event, Arrival):
            if event.source not in SOURCES:
                raise IllegalEvent("arrival from unknown source %r" % (event.source,))
            packet = Packet(event.source, event.time)
            if state.idle:
                if state.queue:
                    raise IllegalEvent("idle server with %i waiting packets" % len(state.queue))
                return replace(state, serving=packet), None
            return self.admit(state, packet), None

        if isinstance(event, ServiceCompletion):
            if state.idle:
                raise IllegalEvent("service completion while the server is idle")
            return self.complete(state, event.time)

        raise IllegalEvent("unknown event %r" % (event,))

    @abc.abstractmethod
    def admit(self, state, packet):
        """
        Handles an arrival while the server is busy.
        """
        raise NotImplementedError("Policies must admit arrivals.")

    def complete(self, state, time):
        """
        Delivers the packet in service and starts the head of the queue.
        """
        packet  = state.serving
        updated = list(state.last_delivered)
        updated[packet.source - 1] = max(updated[packet.source - 1], packet.generated)

        serving = state.queue[0] if state.queue else None
        state   = SystemState(serving, state.queue[1:], tuple(updated))
        return state, Delivery(packet.source, packet.generated, time)

    def check(self, state):
        """
        Raises IllegalEvent if the state breaks the occupancy rules.
        """
        if state.idle and state.queue:
            raise IllegalEvent("%s: idle server with waiting packets" % self.get_name())
        if len(state.queue) > self.capacity:
            raise IllegalEvent("%s: %i waiting packets exceed capacity %i" % (
                self.get_name(), len(state.queue), self.capacity))

    def get_name(self):
        if not self.name:
            raise ImproperlyConfigured("Policies must provide a name or implementation of get_name()")
        return self.name

    def __str__(self):
        return self.get_name()
