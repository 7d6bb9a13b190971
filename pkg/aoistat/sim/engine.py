# aoistat.sim.engine
# Event-driven simulation of the time-average age of both sources
#
# Created:  Sat Oct 17 14:31:58 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: engine.py [] $

"""
Event-driven simulation of the time-average age of both sources.

Arrivals of each source are Poisson and service is exponential. Between
events the age of each source grows at unit slope and its area is added
exactly; a delivery drops the age of its source to the age of the
delivered packet. Each replication draws from its own PCG64 stream,
spawned from the configured seed and the replication index, so results
do not depend on how replications are spread over worker processes.
"""

##########################################################################
## Imports
##########################################################################

import math
import numbers
import logging
import multiprocessing

from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from aoistat.shs.base import LoadPoint
from aoistat.policies import PolicyId
from aoistat.sim.base import SystemState, Arrival, ServiceCompletion
from aoistat.sim.policies import get_policy
from aoistat.exceptions import InvalidConfig, NegativeElapsed, UnsupportedPolicy

##########################################################################
## Module Constants
##########################################################################

logger = logging.getLogger(__name__)

MIN_EVENTS       = 10 ** 4
MAX_SEED         = 2 ** 64 - 1
BLOCK_SIZE       = 4096
CHECKPOINT_EVERY = 256

DEFAULT_EVENTS       = 10 ** 6
DEFAULT_REPLICATIONS = 16
DEFAULT_WARMUP       = 0.1

##########################################################################
## Configuration
##########################################################################

def _is_integer(value):
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


@dataclass(frozen=True)
class SimConfig(object):
    """
    Everything a simulation run depends on; equal configs give
    bit-identical results.
    """

    policy: PolicyId
    loads: LoadPoint
    horizon_events: int = DEFAULT_EVENTS
    warmup_fraction: float = DEFAULT_WARMUP
    seed: int = 0
    replications: int = DEFAULT_REPLICATIONS
    workers: int = 1
    priority: int = 2

    def __post_init__(self):
        try:
            object.__setattr__(self, "policy", PolicyId.parse(self.policy))
        except UnsupportedPolicy as e:
            raise InvalidConfig(str(e))

        if not isinstance(self.loads, LoadPoint):
            raise InvalidConfig("loads must be a LoadPoint, got %r" % (self.loads,))
        if not _is_integer(self.horizon_events) or self.horizon_events < MIN_EVENTS:
            raise InvalidConfig("horizon must be at least %i events, got %r" % (
                MIN_EVENTS, self.horizon_events))
        if not _is_integer(self.replications) or self.replications < 1:
            raise InvalidConfig("replications must be a positive integer, got %r" % (self.replications,))
        if not _is_integer(self.seed) or not 0 <= self.seed <= MAX_SEED:
            raise InvalidConfig("seed must be a 64-bit unsigned integer, got %r" % (self.seed,))
        if not _is_integer(self.workers) or self.workers < 1:
            raise InvalidConfig("workers must be a positive integer, got %r" % (self.workers,))
        if self.priority not in (1, 2):
            raise InvalidConfig("priority source must be 1 or 2, got %r" % (self.priority,))

        try:
            warmup = float(self.warmup_fraction)
        except (TypeError, ValueError):
            warmup = float("nan")
        if not 0.0 <= warmup < 1.0:
            raise InvalidConfig("warmup fraction must lie in [0, 1), got %r" % (self.warmup_fraction,))
        object.__setattr__(self, "warmup_fraction", warmup)

##########################################################################
## Results
##########################################################################

Replicate = namedtuple("Replicate", "delta1 delta2 duration")


@dataclass(frozen=True)
class SimResult(object):
    """
    Per-source mean age across replications with standard errors.
    """

    policy: PolicyId
    loads: LoadPoint
    seed: int
    means: tuple
    stderrs: tuple
    sum_stderr: float
    replicates: tuple
    simulated_time: float

    @classmethod
    def from_replicates(cls, config, replicates):
        data  = np.array([[r.delta1, r.delta2] for r in replicates], dtype=float)
        count = len(data)
        sums  = data.sum(axis=1)

        means = data.mean(axis=0)
        if count > 1:
            stderrs    = data.std(axis=0, ddof=1) / math.sqrt(count)
            sum_stderr = float(sums.std(ddof=1) / math.sqrt(count))
        else:
            stderrs    = np.zeros(2)
            sum_stderr = 0.0

        return cls(
            policy=config.policy,
            loads=config.loads,
            seed=config.seed,
            means=tuple(float(m) for m in means),
            stderrs=tuple(float(s) for s in stderrs),
            sum_stderr=sum_stderr,
            replicates=tuple(replicates),
            simulated_time=float(sum(r.duration for r in replicates)),
        )

    @property
    def replications(self):
        return len(self.replicates)

    @property
    def delta1(self):
        return self.means[0]

    @property
    def delta2(self):
        return self.means[1]

    @property
    def sum_aoi(self):
        return self.means[0] + self.means[1]

    def interval(self, source=1, k=3.0):
        mean, stderr = self.means[source - 1], self.stderrs[source - 1]
        return mean - k * stderr, mean + k * stderr

    def sum_interval(self, k=3.0):
        return self.sum_aoi - k * self.sum_stderr, self.sum_aoi + k * self.sum_stderr

    def covers(self, value, source=1, k=3.0):
        low, high = self.interval(source, k)
        return low <= value <= high

##########################################################################
## Random streams
##########################################################################

def replication_generator(seed, index):
    """
    The generator of one replication, spawned from (seed, index).
    """
    sequence = np.random.SeedSequence(seed, spawn_key=(index,))
    return np.random.Generator(np.random.PCG64(sequence))


class UnitExponentials(object):
    """
    Unit-mean exponential variates by inverse transform, drawn in blocks.
    """

    def __init__(self, generator, block=BLOCK_SIZE):
        self.generator = generator
        self.block     = block
        self._buffer   = []
        self._index    = 0

    def draw(self):
        if self._index >= len(self._buffer):
            self._buffer = (-np.log1p(-self.generator.random(self.block))).tolist()
            self._index  = 0
        value = self._buffer[self._index]
        self._index += 1
        return value

##########################################################################
## Simulation
##########################################################################

def aoi_area_increment(prev_aoi, elapsed):
    """
    Area under an age that starts at prev_aoi and grows at unit slope for
    the elapsed time.
    """
    if elapsed < 0:
        raise NegativeElapsed("elapsed time %r is negative" % (elapsed,))
    return prev_aoi * elapsed + elapsed * elapsed / 2.0


def _warmup_start(checkpoints, end, fraction):
    """
    First checkpoint at or after the warm-up boundary that leaves a
    nonempty averaging window.
    """
    boundary   = fraction * end
    candidates = [point for point in checkpoints if point[0] < end]
    for point in candidates:
        if point[0] >= boundary:
            return point
    return candidates[-1]


def run_replication(config, index, on_delivery=None):
    """
    Simulates one replication and returns its time-average ages.
    """
    policy = get_policy(config.policy, config.priority)
    draws  = UnitExponentials(replication_generator(config.seed, index))
    loads  = config.loads
    rates  = (loads.lambda1, loads.lambda2)
    mu     = loads.mu

    now         = 0.0
    arrivals    = [draws.draw() / rates[0], draws.draw() / rates[1]]
    completion  = math.inf
    state       = SystemState()
    area        = [0.0, 0.0]
    checkpoints = [(0.0, 0.0, 0.0)]

    for count in range(1, config.horizon_events + 1):
        # Completions go first on ties, then source 1 before source 2
        if completion <= arrivals[0] and completion <= arrivals[1]:
            when, event = completion, ServiceCompletion(completion)
        elif arrivals[0] <= arrivals[1]:
            when, event = arrivals[0], Arrival(1, arrivals[0])
        else:
            when, event = arrivals[1], Arrival(2, arrivals[1])

        elapsed = when - now
        area[0] += aoi_area_increment(now - state.last_delivered[0], elapsed)
        area[1] += aoi_area_increment(now - state.last_delivered[1], elapsed)
        now = when

        if isinstance(event, Arrival):
            idle = state.idle
            state, _ = policy.step(state, event)
            arrivals[event.source - 1] = now + draws.draw() / rates[event.source - 1]

            # A preempted packet hands its running service clock to the new one
            if idle and not state.idle:
                completion = now + draws.draw() / mu
        else:
            state, delivery = policy.step(state, event)
            if on_delivery is not None:
                on_delivery(delivery)
            completion = now + draws.draw() / mu if not state.idle else math.inf

        if count % CHECKPOINT_EVERY == 0:
            checkpoints.append((now, area[0], area[1]))

    start, area1, area2 = _warmup_start(checkpoints, now, config.warmup_fraction)
    duration = now - start
    return Replicate((area[0] - area1) / duration, (area[1] - area2) / duration, duration)


def _replicate(args):
    config, index = args
    return run_replication(config, index)


def simulate(config, trace=None):
    """
    Runs every replication of a configuration and merges them in index
    order. The optional trace is called with (replication, delivery) for
    every delivery and forces in-process execution.
    """
    workers = min(config.workers, config.replications)
    logger.info(
        "simulating %s at (%.4g, %.4g, %.4g): %i x %i events",
        config.policy, config.loads.lambda1, config.loads.lambda2, config.loads.mu,
        config.replications, config.horizon_events,
    )

    if workers > 1 and trace is None:
        with multiprocessing.Pool(workers) as pool:
            replicates = pool.map(_replicate, [(config, i) for i in range(config.replications)])
    else:
        replicates = []
        for index in range(config.replications):
            callback = None
            if trace is not None:
                callback = lambda delivery, index=index: trace(index, delivery)
            replicates.append(run_replication(config, index, callback))
            logger.debug("replication %i of %i done", index + 1, config.replications)

    return SimResult.from_replicates(config, replicates)
