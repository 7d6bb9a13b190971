# aoistat.analyze
# Parameter sweeps and trade-off curves over the policies
#
# Created:  Sat Oct 17 16:12:33 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: analyze.py [] $

"""
Parameter sweeps and trade-off curves over the policies.

A sweep moves ρ1 over a grid while either the total load ρ or the load of
source 2 stays fixed, evaluates every policy at every grid point, and
hands the rows to a harness of metrics.
"""

##########################################################################
## Imports
##########################################################################

import logging

from typing import Optional
from dataclasses import dataclass, field

import numpy as np

from aoistat.shs.base import LoadPoint
from aoistat.metric import jain_index, evaluate, FairnessSummary, LowestSumAoI
from aoistat.policies import PolicyId, Method, POLICY_ORDER, source_ages
from aoistat.sim.engine import SimConfig, simulate
from aoistat.sim.engine import DEFAULT_EVENTS, DEFAULT_REPLICATIONS, DEFAULT_WARMUP
from aoistat.exceptions import AoIStatException, ImproperlyConfigured

##########################################################################
## Module Constants
##########################################################################

logger = logging.getLogger(__name__)

METRICS = [FairnessSummary, LowestSumAoI]

MARGIN_FRACTION = 0.01
CI_WIDTH        = 3.0

##########################################################################
## Rows and specs
##########################################################################

@dataclass(frozen=True)
class SweepRow(object):
    """
    The ages of both sources under one policy at one load point. A point
    that failed to evaluate keeps its loads and carries the error instead
    of ages.
    """

    policy: PolicyId
    rho1: float
    rho2: float
    mu: float
    delta1: Optional[float]
    delta2: Optional[float]
    sum_aoi: Optional[float]
    jain: Optional[float]
    method: Method
    ci_low: Optional[float] = None
    ci_high: Optional[float] = None
    seed: Optional[int] = None
    error: Optional[str] = field(default=None, compare=False)

    @classmethod
    def from_ages(cls, policy, rho1, rho2, mu, delta1, delta2, method, **kwargs):
        return cls(
            PolicyId.parse(policy), rho1, rho2, mu, delta1, delta2,
            delta1 + delta2, jain_index(delta1, delta2), Method.parse(method), **kwargs
        )

    @classmethod
    def failed(cls, policy, rho1, rho2, mu, method, error, seed=None):
        return cls(
            PolicyId.parse(policy), rho1, rho2, mu, None, None, None, None,
            Method.parse(method), seed=seed, error=error,
        )

    @property
    def ok(self):
        return self.error is None


@dataclass(frozen=True)
class SimSettings(object):

    events: int = DEFAULT_EVENTS
    replications: int = DEFAULT_REPLICATIONS
    seed: int = 0
    warmup: float = DEFAULT_WARMUP
    workers: int = 1
    priority: int = 2


def default_method(policy):
    """
    Closed form for the source-aware policies, simulation for baselines.
    """
    return Method.CLOSED if PolicyId.parse(policy).has_model else Method.SIM


def linear_grid(total_rho, num_points, margin=None):
    """
    Evenly spaced values of ρ1 strictly inside (0, total_rho), keeping a
    margin (default 1% of the total load) away from both ends.
    """
    if not total_rho > 0:
        raise ImproperlyConfigured("total load must be positive, got %r" % (total_rho,))
    if num_points < 1:
        raise ImproperlyConfigured("a grid needs at least one point, got %r" % (num_points,))

    margin = MARGIN_FRACTION * total_rho if margin is None else margin
    if not 0 < margin < total_rho / 2.0:
        raise ImproperlyConfigured("margin %r leaves no room inside (0, %r)" % (margin, total_rho))
    if num_points == 1:
        return (total_rho / 2.0,)
    return tuple(float(x) for x in np.linspace(margin, total_rho - margin, num_points))


@dataclass(frozen=True)
class SweepSpec(object):
    """
    Policies to evaluate, how to evaluate each of them, and the grid of ρ1.
    Exactly one of rho (total load held fixed) and rho2 is given.
    """

    policies: tuple
    grid: tuple
    mu: float = 1.0
    rho: Optional[float] = None
    rho2: Optional[float] = None
    methods: tuple = ()
    sim: SimSettings = SimSettings()

    def __post_init__(self):
        policies = tuple(PolicyId.parse(p) for p in self.policies)
        if not policies:
            raise ImproperlyConfigured("a sweep needs at least one policy")
        object.__setattr__(self, "policies", policies)

        methods = dict((PolicyId.parse(p), Method.parse(m)) for p, m in self.methods)
        object.__setattr__(self, "methods", tuple(sorted(
            methods.items(), key=lambda item: POLICY_ORDER.index(item[0])
        )))

        grid = tuple(float(x) for x in self.grid)
        object.__setattr__(self, "grid", grid)
        if not grid:
            raise ImproperlyConfigured("a sweep needs at least one grid point")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ImproperlyConfigured("sweep grid must be strictly increasing")
        if grid[0] <= 0:
            raise ImproperlyConfigured("sweep grid must lie above 0")

        if (self.rho is None) == (self.rho2 is None):
            raise ImproperlyConfigured("give exactly one of the total load and the load of source 2")
        if self.rho is not None and grid[-1] >= self.rho:
            raise ImproperlyConfigured("rho1 must stay below the total load %r" % self.rho)
        if self.rho2 is not None and self.rho2 <= 0:
            raise ImproperlyConfigured("rho2 must be positive, got %r" % self.rho2)
        if not self.mu > 0:
            raise ImproperlyConfigured("mu must be positive, got %r" % self.mu)

    @classmethod
    def create(cls, policies, rho=None, rho2=None, mu=1.0, points=9, margin=None,
               grid=None, span=None, method=None, sim=None):
        """
        Builds a spec with a linear grid over (0, span), where span is the
        total load unless source 2 has a fixed load. A method, when given,
        applies to every source-aware policy; baselines are always simulated.
        """
        policies = tuple(PolicyId.parse(p) for p in policies)
        if grid is None:
            span = span if span is not None else rho
            if span is None:
                raise ImproperlyConfigured("a fixed rho2 sweep needs a span or an explicit grid")
            grid = linear_grid(span, points, margin)

        methods = []
        if method is not None:
            for policy in policies:
                methods.append((policy, method if policy.has_model else Method.SIM))

        return cls(policies, tuple(grid), mu, rho, rho2, tuple(methods), sim or SimSettings())

    def method_for(self, policy):
        return dict(self.methods).get(policy, default_method(policy))

    def rho2_for(self, rho1):
        if self.rho is not None:
            return self.rho - rho1
        return self.rho2

    def points(self):
        """
        Yields (policy, grid index, ρ1) in output order.
        """
        for policy in sorted(self.policies, key=POLICY_ORDER.index):
            for index, rho1 in enumerate(self.grid):
                yield policy, index, rho1

##########################################################################
## Evaluation
##########################################################################

def point_seed(seed, policy, index):
    """
    The seed of one simulated grid point, spawned from the sweep seed.
    """
    sequence = np.random.SeedSequence([seed, POLICY_ORDER.index(policy), index])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def evaluate_point(spec, policy, rho1, index=0):
    """
    Evaluates one policy at one grid point; failures become error rows.
    """
    rho2   = spec.rho2_for(rho1)
    mu     = spec.mu
    method = spec.method_for(policy)
    seed   = point_seed(spec.sim.seed, policy, index) if method is Method.SIM else None

    try:
        loads = LoadPoint.from_loads(rho1, rho2, mu)
        if method is Method.SIM:
            config = SimConfig(
                policy, loads,
                horizon_events=spec.sim.events,
                warmup_fraction=spec.sim.warmup,
                seed=seed,
                replications=spec.sim.replications,
                workers=spec.sim.workers,
                priority=spec.sim.priority,
            )
            result = simulate(config)
            low, high = result.sum_interval(CI_WIDTH)
            return SweepRow.from_ages(
                policy, rho1, rho2, mu, result.delta1, result.delta2, method,
                ci_low=low, ci_high=high, seed=seed,
            )

        delta1, delta2 = source_ages(policy, loads, method)
        return SweepRow.from_ages(policy, rho1, rho2, mu, delta1, delta2, method)

    except AoIStatException as e:
        logger.warning("%s failed at rho1=%.6g, rho2=%.6g: %s", policy, rho1, rho2, e)
        return SweepRow.failed(policy, rho1, rho2, mu, method, str(e), seed)


def run_sweep(spec):
    """
    One row per (policy, grid point), ordered by policy then ρ1.
    """
    rows = []
    for policy, index, rho1 in spec.points():
        rows.append(evaluate_point(spec, policy, rho1, index))
    return rows


def tradeoff_curve(policy, total_rho, mu=1.0, num_points=49, method=None, margin=None, sim=None):
    """
    The (Δ1, Δ2) pairs achieved as ρ1 moves across (0, total_rho) with the
    total load held fixed. Points that fail to evaluate are left out.
    """
    policy = PolicyId.parse(policy)
    method = method or default_method(policy)
    spec   = SweepSpec.create(
        (policy,), rho=total_rho, mu=mu, points=num_points, margin=margin,
        method=method, sim=sim,
    )
    return [(row.delta1, row.delta2) for row in run_sweep(spec) if row.ok]

##########################################################################
## Summary
##########################################################################

def summarize(rows, metrics=METRICS):
    """
    Runs each metric over the rows of a sweep, keyed by metric name.
    """
    summary = {}
    for cls in metrics:
        metric = cls()
        summary[metric.get_name()] = evaluate(metric, rows)
    return summary
