# aoistat.shs.solver
# Numeric solution of SHS models for the average age
#
# Created:  Sat Oct 17 10:21:37 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: solver.py [] $

"""
Numeric solution of SHS models for the average age.

The stationary distribution solves the balance equations with the equation
for state 0 replaced by normalization. The correlation vectors v_q solve

    v_q (sum of rates leaving q) = b_q pi_q + sum over l into q of rate(l) v_{q_l} A_l

flattened row-major by (state, age component) into a single dense system.
The average age of source 1 is the sum over states of v_q0.
"""

##########################################################################
## Imports
##########################################################################

import logging

import numpy as np

from aoistat.shs.base import check_model
from aoistat.exceptions import SingularSystem, NegativeSolution

##########################################################################
## Module Constants
##########################################################################

logger = logging.getLogger(__name__)

BALANCE_TOLERANCE     = 1e-12
CORRELATION_TOLERANCE = 1e-10
NEGATIVE_SLACK        = 1e-9

# Systems worse conditioned than this are treated as singular
SINGULAR_CONDITION    = 1.0 / np.finfo(float).eps

##########################################################################
## Solutions
##########################################################################

class _ReadOnlyArray(object):
    """
    Wraps a solution array so that it cannot be modified after solving.
    """

    def __init__(self, values, model=None):
        values = np.array(values, dtype=float)
        values.setflags(write=False)
        self.model  = model
        self.values = values

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.values
        return self.values.astype(dtype)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, key):
        return self.values[key]

    def __iter__(self):
        return iter(self.values)

    def tolist(self):
        return self.values.tolist()


class StationaryDistribution(_ReadOnlyArray):
    """
    Probability vector over the discrete states of a model.
    """

    @property
    def probabilities(self):
        return self.values

    def __repr__(self):
        return "<StationaryDistribution %s %s>" % (self.model, np.array2string(self.values))


class CorrelationMatrix(_ReadOnlyArray):
    """
    The correlation vectors v_q as rows of a num_states x age_dim matrix.
    """

    @property
    def v(self):
        return self.values

    @property
    def first_column(self):
        """
        The v_q0 values whose sum is the average age of source 1.
        """
        return self.values[:, 0]

    @property
    def average_aoi(self):
        return float(self.first_column.sum())

    def __repr__(self):
        return "<CorrelationMatrix %s %s>" % (self.model, np.array2string(self.values))

##########################################################################
## Balance equations
##########################################################################

def balance_matrices(model, loads):
    """
    Returns (D, Q) such that the stationary vector solves pi D = pi Q, with D
    the diagonal of total exit rates and Q[i, j] the total rate from i to j.
    Self-transitions appear on both sides and cancel.
    """
    size = model.num_states
    D = np.zeros((size, size))
    Q = np.zeros((size, size))
    for transition in model.transitions:
        rate = loads.rate(transition.rate)
        D[transition.from_state, transition.from_state] += rate
        Q[transition.from_state, transition.to_state] += rate
    return D, Q


def stationary_distribution(model, loads):
    """
    Solves the balance equations with normalization for the stationary
    probabilities of the discrete states.
    """
    check_model(model)
    D, Q = balance_matrices(model, loads)
    size = model.num_states

    # Row q of G is the balance equation of state q
    G = (D - Q).T
    rank = np.linalg.matrix_rank(G)
    if rank != size - 1:
        raise SingularSystem(
            "%s: balance system has rank %i, expected %i" % (model.name, rank, size - 1)
        )

    system = G.copy()
    system[0, :] = 1.0
    rhs = np.zeros(size)
    rhs[0] = 1.0

    try:
        pi = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError as e:
        raise SingularSystem("%s: %s" % (model.name, e))

    scale    = max(np.max(np.abs(G) * np.abs(pi)[np.newaxis, :]), np.finfo(float).tiny)
    residual = np.max(np.abs(G.dot(pi)))
    if residual > BALANCE_TOLERANCE * scale or abs(pi.sum() - 1.0) > BALANCE_TOLERANCE:
        raise SingularSystem(
            "%s: balance residual %.3e exceeds tolerance" % (model.name, residual / scale)
        )

    if pi.min() < -BALANCE_TOLERANCE:
        raise NegativeSolution(
            "%s: stationary probability %.3e is negative" % (model.name, pi.min())
        )
    if pi.min() < 0:
        logger.debug("%s: clamping stationary round-off %.3e", model.name, pi.min())
        pi = np.clip(pi, 0.0, None)

    return StationaryDistribution(pi, model)

##########################################################################
## Correlation vectors
##########################################################################

def correlation_system(model, loads, pi):
    """
    Assembles the dense linear system for the correlation vectors, with the
    unknown v_qj at position q * age_dim + j.
    """
    width  = model.age_dim
    size   = model.num_states * width
    matrix = np.zeros((size, size))
    rhs    = np.zeros(size)

    for state in range(model.num_states):
        for j in range(width):
            rhs[state * width + j] = model.growth[state][j] * pi[state]

    for transition in model.transitions:
        rate   = loads.rate(transition.rate)
        source = transition.from_state * width
        target = transition.to_state * width
        reset  = transition.reset
        for j in range(width):
            matrix[source + j, source + j] += rate
            for i in range(width):
                if reset[i][j]:
                    matrix[target + j, source + i] -= rate

    return matrix, rhs


def correlation_vectors(model, loads, pi):
    """
    Solves for the correlation vectors v_q of every state and verifies that
    the solution is nonnegative.
    """
    matrix, rhs = correlation_system(model, loads, pi)

    if np.linalg.cond(matrix) > SINGULAR_CONDITION:
        raise SingularSystem("%s: correlation system is singular" % model.name)
    try:
        v = np.linalg.solve(matrix, rhs)
    except np.linalg.LinAlgError as e:
        raise SingularSystem("%s: %s" % (model.name, e))

    if not np.all(np.isfinite(v)):
        raise SingularSystem("%s: correlation system has no finite solution" % model.name)

    scale    = max(np.max(np.abs(matrix) * np.abs(v)[np.newaxis, :]), np.max(np.abs(rhs)))
    residual = np.max(np.abs(matrix.dot(v) - rhs))
    if residual > CORRELATION_TOLERANCE * scale:
        raise SingularSystem(
            "%s: correlation residual %.3e exceeds tolerance" % (model.name, residual / scale)
        )

    slack = NEGATIVE_SLACK * max(1.0, np.max(np.abs(v)))
    if v.min() < -slack:
        raise NegativeSolution(
            "%s: correlation entry %.3e is negative beyond slack" % (model.name, v.min())
        )
    if v.min() < 0:
        logger.debug("%s: clamping correlation round-off %.3e", model.name, v.min())
        v = np.clip(v, 0.0, None)

    return CorrelationMatrix(v.reshape(model.num_states, model.age_dim), model)


def solve_model(model, loads):
    """
    Returns the stationary distribution and correlation matrix of a model.
    """
    pi = stationary_distribution(model, loads)
    return pi, correlation_vectors(model, loads, pi)


def average_aoi(model, loads):
    """
    The average age of the tracked source, the sum over states of v_q0.
    """
    _, v = solve_model(model, loads)
    return v.average_aoi
