# aoistat.shs.base
# Model types for stochastic hybrid systems of age
#
# Created:  Sat Oct 17 09:40:02 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: base.py [] $

"""
Model types for stochastic hybrid systems (SHS) of age.

An SHS couples a finite continuous-time Markov chain (the occupancy of the
queue) with a vector of ages that grow at unit rate and are reset by the
binary map attached to each transition, so that x' = x A on a transition.
"""

##########################################################################
## Imports
##########################################################################

import math
import logging

from enum import Enum
from collections import deque, namedtuple
from dataclasses import dataclass

import numpy as np

from aoistat.exceptions import InvalidModel, NonPositiveRate, SingularSystem

##########################################################################
## Module Constants
##########################################################################

logger = logging.getLogger(__name__)

# Diagnostic kinds reported by validate_model
INDEX        = "index"
SHAPE        = "shape"
NON_BINARY   = "non-binary"
GROWTH       = "growth"
UNREACHABLE  = "unreachable"
DISCONNECTED = "disconnected"
UNUSED_RATE  = "unused-rate"

STRUCTURAL   = (INDEX, SHAPE, NON_BINARY, GROWTH)
ERGODICITY   = (UNREACHABLE, DISCONNECTED)

##########################################################################
## Rates and loads
##########################################################################

class RateSymbol(Enum):
    """
    The three rates a transition can fire at, bound at evaluation time.
    """

    LAMBDA1 = "lambda1"
    LAMBDA2 = "lambda2"
    MU      = "mu"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class LoadPoint(object):
    """
    Arrival rates of both sources and the service rate of the server.
    """

    lambda1: float
    lambda2: float
    mu: float

    def __post_init__(self):
        for name in ("lambda1", "lambda2", "mu"):
            value = getattr(self, name)
            try:
                rate = float(value)
            except (TypeError, ValueError):
                rate = float("nan")

            if not (math.isfinite(rate) and rate > 0):
                raise NonPositiveRate(
                    "%s must be a strictly positive finite rate, got %r" % (name, value)
                )
            object.__setattr__(self, name, rate)

    @classmethod
    def from_loads(cls, rho1, rho2, mu=1.0):
        """
        Builds the load point with ρ1 = λ1/μ and ρ2 = λ2/μ.
        """
        return cls(float(rho1) * mu, float(rho2) * mu, float(mu))

    @property
    def rho1(self):
        return self.lambda1 / self.mu

    @property
    def rho2(self):
        return self.lambda2 / self.mu

    @property
    def rho(self):
        return self.rho1 + self.rho2

    def swapped(self):
        """
        The same point with the source labels exchanged.
        """
        return LoadPoint(self.lambda2, self.lambda1, self.mu)

    def rate(self, symbol):
        return {
            RateSymbol.LAMBDA1: self.lambda1,
            RateSymbol.LAMBDA2: self.lambda2,
            RateSymbol.MU: self.mu,
        }[symbol]

##########################################################################
## Transitions
##########################################################################

def reset_map(sources, age_dim=None):
    """
    Builds a binary reset matrix from an x' expression. Each entry of
    sources names the component of x copied into that position of x', or
    None when that position is set to zero; [0, None, 2] is x' = [x0, 0, x2].
    """
    age_dim = age_dim or len(sources)
    matrix  = [[0] * age_dim for _ in range(age_dim)]
    for target, source in enumerate(sources):
        if source is not None:
            matrix[source][target] = 1
    return tuple(tuple(row) for row in matrix)


def describe_reset(reset):
    """
    Renders a reset matrix back as its x' expression, e.g. "[x0, 0, x2]".
    """
    terms = []
    for target in range(len(reset)):
        column = [i for i in range(len(reset)) if reset[i][target]]
        terms.append(" + ".join("x%i" % i for i in column) or "0")
    return "[%s]" % ", ".join(terms)


@dataclass(frozen=True)
class Transition(object):
    """
    A rate-labelled edge of the chain, carrying the row index l of the
    transition table it was transcribed from.
    """

    index: int
    from_state: int
    to_state: int
    rate: RateSymbol
    reset: tuple

    @property
    def matrix(self):
        return np.array(self.reset, dtype=float)

    @property
    def expression(self):
        return describe_reset(self.reset)

    def __str__(self):
        return "l=%i: %i->%i at %s, x' = %s" % (
            self.index, self.from_state, self.to_state, self.rate, self.expression
        )

##########################################################################
## Models
##########################################################################

@dataclass(frozen=True)
class SHSModel(object):
    """
    A finite SHS: states 0..num_states-1, an age vector of length age_dim,
    the transitions between states, and per-state binary growth vectors.
    """

    name: str
    num_states: int
    age_dim: int
    transitions: tuple
    growth: tuple

    @classmethod
    def create(cls, name, num_states, age_dim, transitions, growth=None):
        """
        Canonicalizes transitions by their table index; growth defaults to
        every component growing in every state.
        """
        if growth is None:
            growth = tuple((1,) * age_dim for _ in range(num_states))
        transitions = tuple(sorted(transitions, key=lambda t: t.index))
        return cls(name, num_states, age_dim, transitions, tuple(map(tuple, growth)))

    def transition(self, index):
        for transition in self.transitions:
            if transition.index == index:
                return transition
        raise KeyError("no transition l=%i in %s" % (index, self.name))

    def without(self, *indices):
        """
        A copy of the model with the transitions at the given indices removed.
        """
        kept = tuple(t for t in self.transitions if t.index not in indices)
        return SHSModel(self.name, self.num_states, self.age_dim, kept, self.growth)

    @property
    def rate_symbols(self):
        return frozenset(t.rate for t in self.transitions)

    def __len__(self):
        return len(self.transitions)

    def __str__(self):
        return "<SHSModel %s (%i states, %i ages, %i transitions)>" % (
            self.name, self.num_states, self.age_dim, len(self)
        )

##########################################################################
## Validation
##########################################################################

class Diagnostic(namedtuple("Diagnostic", "kind message")):

    def __str__(self):
        return self.message


def _reachable(num_states, edges, start):
    seen  = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for target in edges.get(state, ()):
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return seen


def validate_model(model):
    """
    Reports every structural and ergodicity problem of a model as a list of
    diagnostics; an empty list means the model can be solved.
    """
    diagnostics = []
    num_states  = model.num_states
    age_dim     = model.age_dim

    if len(model.growth) != num_states:
        diagnostics.append(Diagnostic(SHAPE,
            "expected %i growth vectors, found %i" % (num_states, len(model.growth))))
    for state, growth in enumerate(model.growth):
        if len(growth) != age_dim:
            diagnostics.append(Diagnostic(SHAPE,
                "growth vector of state %i has length %i, expected %i" % (state, len(growth), age_dim)))
        elif any(b not in (0, 1) for b in growth):
            diagnostics.append(Diagnostic(GROWTH,
                "non-binary growth vector in state %i" % state))

    edges = {}
    for transition in model.transitions:
        l = transition.index
        if not (0 <= transition.from_state < num_states and 0 <= transition.to_state < num_states):
            diagnostics.append(Diagnostic(INDEX,
                "transition l=%i connects %i->%i outside states 0..%i" % (
                    l, transition.from_state, transition.to_state, num_states - 1)))
            continue

        reset = transition.reset
        if len(reset) != age_dim or any(len(row) != age_dim for row in reset):
            diagnostics.append(Diagnostic(SHAPE,
                "reset map of transition l=%i is not %ix%i" % (l, age_dim, age_dim)))
        elif any(entry not in (0, 1) for row in reset for entry in row):
            diagnostics.append(Diagnostic(NON_BINARY,
                "non-binary reset map in transition l=%i" % l))

        edges.setdefault(transition.from_state, set()).add(transition.to_state)

    connected = True
    for source in range(num_states):
        seen = _reachable(num_states, edges, source)
        for target in range(num_states):
            if target not in seen:
                connected = False
                diagnostics.append(Diagnostic(UNREACHABLE,
                    "state %i unreachable from state %i" % (target, source)))
    if not connected:
        diagnostics.append(Diagnostic(DISCONNECTED, "transition graph is not strongly connected"))

    for symbol in RateSymbol:
        if symbol not in model.rate_symbols:
            diagnostics.append(Diagnostic(UNUSED_RATE, "rate symbol %s never used" % symbol))

    return diagnostics


def check_model(model):
    """
    Raises if the model cannot be solved: InvalidModel for structural
    problems and SingularSystem for a chain that is not ergodic.
    """
    diagnostics = validate_model(model)
    for diagnostic in diagnostics:
        logger.debug("%s: %s", model.name, diagnostic)

    structural = [d for d in diagnostics if d.kind in STRUCTURAL]
    if structural:
        raise InvalidModel("%s: %s" % (model.name, "; ".join(map(str, structural))))

    ergodicity = [d for d in diagnostics if d.kind in ERGODICITY]
    if ergodicity:
        raise SingularSystem("%s: %s" % (model.name, ergodicity[-1]))

    return diagnostics
