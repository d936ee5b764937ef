# -*- coding: utf-8 -*-
from __future__ import absolute_import

from collections import namedtuple
import logging

from django.core.exceptions import ValidationError

import numpy as np

from . import strings
from .graphs import canonicalize
from .lap import solve_lap_max


logger = logging.getLogger(__name__)


"""
~ The relaxed seeded objective ~

For a canonical instance with blocks A11..A22 and B11..B22, and P an n x n
doubly stochastic matrix,

    f(P) = tr A11'B11 + tr P'A21B21' + tr P'A12'B12 + tr A22'PB22P'

which is trace A'(I + P)B(I + P') with (+) the direct sum. Frank-Wolfe
maximizes f over doubly stochastic P: each step solves a linear assignment
on the gradient, then searches the segment between the current iterate and
the assignment exactly (f is quadratic along it). The final iterate is
projected to the l1-nearest permutation, which is again an assignment.

Throughout, alpha weights the current iterate: alpha = 1 stays put and
alpha = 0 jumps to the assignment.
"""


# tolerance on row/column sums and negativity of a doubly stochastic iterate
EPS_DS = 1e-8


IterationRecord = namedtuple(
    "IterationRecord", ["iteration", "objective", "alpha", "lap_value", "residual"]
)


class SolverConfig(object):
    """
    Knobs for the Frank-Wolfe solve.

    `tol_grad` is reserved and not used. `rng_seed` switches the start point
    from the barycenter to a random doubly stochastic matrix.
    """

    def __init__(self, max_iters=30, tol_obj=1e-9, tol_grad=0.0, rng_seed=None):
        if isinstance(max_iters, bool) or not isinstance(max_iters, (int, np.integer)):
            raise ValidationError(
                strings.config_invalid,
                code="config",
                params={"reason": "max_iters must be an integer"},
            )
        if max_iters < 1:
            raise ValidationError(
                strings.config_invalid,
                code="config",
                params={"reason": "max_iters must be at least 1"},
            )
        if not tol_obj >= 0:
            raise ValidationError(
                strings.config_invalid,
                code="config",
                params={"reason": "tol_obj must be nonnegative"},
            )
        self.max_iters = int(max_iters)
        self.tol_obj = float(tol_obj)
        self.tol_grad = float(tol_grad)
        self.rng_seed = rng_seed

    def __repr__(self):
        return "SolverConfig(max_iters={}, tol_obj={}, rng_seed={})".format(
            self.max_iters, self.tol_obj, self.rng_seed
        )


class LineSearchCoefficients(object):
    """
    Coefficients of g(alpha) = f(alpha P + (1 - alpha) Q) minus tr A11'B11.

    c, d and e are the quadratic-block traces at (P, P), (P, Q) + (Q, P) and
    (Q, Q); u and v are the seed-term traces at P and Q.
    """

    def __init__(self, c, d, e, u, v):
        self.c, self.d, self.e, self.u, self.v = c, d, e, u, v

    def __repr__(self):
        return "LineSearchCoefficients(c={!r}, d={!r}, e={!r}, u={!r}, v={!r})".format(
            self.c, self.d, self.e, self.u, self.v
        )

    @property
    def quadratic(self):
        return self.c - self.d + self.e

    @property
    def linear(self):
        return self.d - 2 * self.e + self.u - self.v

    @property
    def constant(self):
        return self.e + self.v

    @property
    def critical_point(self):
        """The stationary point of g, or None when g is affine."""
        if self.quadratic == 0:
            return None
        return -self.linear / (2 * self.quadratic)

    def g(self, alpha):
        return (self.quadratic * alpha + self.linear) * alpha + self.constant


class FrankWolfeLog(object):
    """Per-iteration records of a solve plus how it ended."""

    def __init__(self, initial_objective):
        self.initial_objective = initial_objective
        self.records = []
        self.converged = False
        self.reason = None

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def objectives(self):
        return [self.initial_objective] + [r.objective for r in self.records]

    def is_ascending(self, slack=1e-9):
        objectives = self.objectives
        return all(b >= a - slack for a, b in zip(objectives, objectives[1:]))

    def is_feasible(self, tol=EPS_DS):
        return all(r.residual <= tol for r in self.records)


class MatchResult(object):
    """
    A full seeded matching over the original labels.

    `mapping` lists (label in G1, label in G2) pairs with the seeds first, in
    seeding order, and the nonseeds after them. `permutation` is the solved
    assignment on the nonseeds in canonical indices.
    """

    def __init__(
        self,
        mapping,
        m,
        permutation,
        objective_relaxed,
        objective_projected,
        disagreements,
        log,
    ):
        self.mapping = mapping
        self.m = m
        self.n = len(mapping) - m
        self.permutation = permutation
        self.objective_relaxed = objective_relaxed
        self.objective_projected = objective_projected
        self.disagreements = disagreements
        self.log = log

    def __repr__(self):
        return "MatchResult(m={}, n={}, disagreements={}, iterations={})".format(
            self.m, self.n, self.disagreements, self.iterations
        )

    @property
    def iterations(self):
        return len(self.log)

    @property
    def converged(self):
        return self.log.converged

    @property
    def seed_labels(self):
        return frozenset(u for u, _v in self.mapping[: self.m])

    def as_dict(self):
        return dict(self.mapping)


# doubly stochastic helpers


def barycenter(n):
    return np.full((n, n), 1.0 / n)


def feasibility_residual(P):
    """Largest violation of unit row/column sums and nonnegativity."""
    P = np.asarray(P)
    return float(
        max(
            np.abs(P.sum(axis=1) - 1).max(),
            np.abs(P.sum(axis=0) - 1).max(),
            max(-P.min(), 0.0),
        )
    )


def is_doubly_stochastic(P, tol=EPS_DS):
    P = np.asarray(P)
    return P.ndim == 2 and P.shape[0] == P.shape[1] and feasibility_residual(P) <= tol


def sinkhorn(M, tol=1e-12, max_iters=10000):
    """Alternately normalize rows and columns of a positive matrix."""
    P = np.array(M, dtype=float)
    for _ in range(max_iters):
        P /= P.sum(axis=1, keepdims=True)
        P /= P.sum(axis=0, keepdims=True)
        if np.abs(P.sum(axis=1) - 1).max() <= tol:
            break
    return P


def random_doubly_stochastic(n, rng):
    return sinkhorn(rng.random((n, n)) + 1e-3)


# objective, gradient, line search


def _check_iterate(inst, P):
    P = np.asarray(P, dtype=float)
    if P.shape != (inst.n, inst.n):
        raise ValidationError(
            strings.dimension_mismatch,
            code="dimension",
            params={"shape": P.shape, "n": inst.n},
        )
    return P


def _seed_term(inst):
    # A21 B21' + A12' B12; an n x n zero matrix when there are no seeds
    return inst.A21 @ inst.B21.T + inst.A12.T @ inst.B12


def objective(inst, P):
    """The relaxed seeded objective f(P), constant term included."""
    P = _check_iterate(inst, P)
    seeded = np.sum(inst.A11 * inst.B11)
    linear = np.sum(P * _seed_term(inst))
    quadratic = np.sum(inst.A22 * (P @ inst.B22 @ P.T))
    return float(seeded + linear + quadratic)


def gradient(inst, P):
    P = _check_iterate(inst, P)
    A22, B22 = inst.A22, inst.B22
    return _seed_term(inst) + A22 @ P @ B22.T + A22.T @ P @ B22


def line_search(inst, P, Q):
    """
    Maximize g(alpha) = f(alpha P + (1 - alpha) Q) over [0, 1].

    Candidates are 1, the interior critical point when it exists, and 0, in
    that order; a later candidate only wins with a strictly larger g, so ties
    go to the larger alpha.
    """
    P = _check_iterate(inst, P)
    Q = _check_iterate(inst, Q)
    A22, B22 = inst.A22, inst.B22
    seed_term = _seed_term(inst)

    PB = P @ B22
    QB = Q @ B22
    coeffs = LineSearchCoefficients(
        c=float(np.sum(A22 * (PB @ P.T))),
        d=float(np.sum(A22 * (PB @ Q.T)) + np.sum(A22 * (QB @ P.T))),
        e=float(np.sum(A22 * (QB @ Q.T))),
        u=float(np.sum(P * seed_term)),
        v=float(np.sum(Q * seed_term)),
    )

    candidates = [1.0]
    critical = coeffs.critical_point
    if critical is not None and 0.0 <= critical <= 1.0:
        candidates.append(critical)
    candidates.append(0.0)

    best_alpha, best_value = None, -np.inf
    for alpha in candidates:
        value = coeffs.g(alpha)
        if value > best_value:
            best_alpha, best_value = alpha, value
    return best_alpha, coeffs


# solving


def frank_wolfe_solve(inst, cfg=None):
    """
    Run Frank-Wolfe on the relaxed objective.

    Halts when the line search stays put (alpha = 1), when the relative
    objective improvement drops below `cfg.tol_obj`, or after
    `cfg.max_iters` steps. Iterates are never renormalized.
    """
    cfg = cfg or SolverConfig()
    n = inst.n
    if cfg.rng_seed is None:
        P = barycenter(n)
    else:
        P = random_doubly_stochastic(n, np.random.default_rng(cfg.rng_seed))

    current = objective(inst, P)
    log = FrankWolfeLog(current)

    for iteration in range(1, cfg.max_iters + 1):
        perm, lap_value = solve_lap_max(gradient(inst, P))
        Q = perm.as_matrix()
        alpha, _coeffs = line_search(inst, P, Q)
        if alpha < 1.0:
            P_next = alpha * P + (1.0 - alpha) * Q
        else:
            P_next = P
        value = objective(inst, P_next)
        log.records.append(
            IterationRecord(
                iteration=iteration,
                objective=value,
                alpha=alpha,
                lap_value=lap_value,
                residual=feasibility_residual(P_next),
            )
        )
        logger.debug(
            "Frank-Wolfe step %d: objective=%r alpha=%r lap=%r",
            iteration,
            value,
            alpha,
            lap_value,
        )

        if alpha == 1.0:
            log.converged, log.reason = True, "stationary"
            break
        improvement = (value - current) / max(abs(current), 1.0)
        P, current = P_next, value
        if improvement < cfg.tol_obj:
            log.converged, log.reason = True, "tolerance"
            break
    else:
        log.reason = "max_iters"

    logger.debug("Frank-Wolfe halted after %d steps (%s)", len(log), log.reason)
    return P, log


def project_to_permutation(P):
    """The permutation matrix nearest to P in l1, i.e. maximizing trace Q'P."""
    P = np.asarray(P, dtype=float)
    if not is_doubly_stochastic(P):
        raise ValidationError(
            strings.not_doubly_stochastic,
            code="not_doubly_stochastic",
            params={"tol": EPS_DS},
        )
    perm, _value = solve_lap_max(P)
    return perm


def disagreements(A, B, image):
    """
    Adjacency disagreements of the vertex map i -> image[i].

    Counts ordered pairs (u, v), u = v included, where exactly one of
    A[u, v] and B[image[u], image[v]] is an edge.
    """
    image = np.asarray(image)
    permuted = B[np.ix_(image, image)]
    return int(np.count_nonzero((A != 0) != (permuted != 0)))


def count_disagreements(g1, g2, mapping):
    """d(phi) for a label mapping {label in G1: label in G2} covering G1."""
    labels = list(g1.labels)
    idx2 = [g2.index(mapping[label]) for label in labels]
    A = g1.adj
    B = g2.adj[np.ix_(idx2, idx2)]
    return disagreements(A, B, np.arange(len(labels)))


def match(g1, g2, seeds, cfg=None):
    """Seeded graph matching of `g1` to `g2`, extending `seeds`."""
    inst = canonicalize(g1, g2, seeds)
    P, log = frank_wolfe_solve(inst, cfg)
    perm = project_to_permutation(P)

    image = np.concatenate([np.arange(inst.m), inst.m + perm.image])
    mapping = [
        (inst.labels1[i], inst.labels2[image[i]]) for i in range(inst.m + inst.n)
    ]
    return MatchResult(
        mapping=mapping,
        m=inst.m,
        permutation=perm,
        objective_relaxed=log.objectives[-1],
        objective_projected=objective(inst, perm.as_matrix()),
        disagreements=disagreements(inst.A, inst.B, image),
        log=log,
    )
