# -*- coding: utf-8 -*-
from __future__ import absolute_import

import itertools

from django.core.exceptions import ValidationError

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import strings


# exhaustive search is n! permutations
BRUTE_FORCE_LIMIT = 9


class Permutation(object):
    """
    A bijection on {0, ..., n-1}; `image[i]` is where i is sent.

    Interconvertible with its 0/1 matrix, whose row i has its single 1 in
    column image[i].
    """

    def __init__(self, image):
        image = np.array(image, dtype=np.intp).reshape(-1)
        if not np.array_equal(np.sort(image), np.arange(len(image))):
            raise ValidationError(
                strings.not_a_permutation,
                code="permutation",
                params={"image": image.tolist()},
            )
        image.setflags(write=False)
        self.image = image

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n))

    @classmethod
    def from_matrix(cls, matrix):
        matrix = np.asarray(matrix)
        if not np.all((matrix == 0) | (matrix == 1)):
            raise ValidationError(strings.not_a_permutation_matrix, code="permutation")
        return cls(np.argmax(matrix, axis=1))

    def __len__(self):
        return len(self.image)

    def __getitem__(self, i):
        return int(self.image[i])

    def __iter__(self):
        return (int(i) for i in self.image)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self.image, other.image)

    __hash__ = None

    def __repr__(self):
        return "Permutation({})".format(self.image.tolist())

    def as_matrix(self):
        matrix = np.zeros((len(self), len(self)))
        matrix[np.arange(len(self)), self.image] = 1.0
        return matrix

    def inverse(self):
        return Permutation(np.argsort(self.image))

    def value(self, profit):
        """Sum of profit[i, image[i]]."""
        return float(np.asarray(profit)[np.arange(len(self)), self.image].sum())


def _check_profit(profit):
    profit = np.asarray(profit, dtype=float)
    if profit.ndim != 2 or profit.shape[0] != profit.shape[1] or profit.shape[0] == 0:
        raise ValidationError(strings.lap_not_square, code="dimension")
    if not np.all(np.isfinite(profit)):
        raise ValidationError(strings.lap_non_finite, code="non_finite")
    return profit


def solve_lap_max(profit):
    """
    Exact maximum-profit linear assignment in O(n^3).

    Returns the optimal `Permutation` and its value. The underlying solver is
    deterministic, so equal inputs always resolve ties the same way.
    """
    profit = _check_profit(profit)
    _rows, cols = linear_sum_assignment(profit, maximize=True)
    perm = Permutation(cols)
    return perm, perm.value(profit)


def brute_force_lap(profit):
    """
    Maximum-profit assignment by enumerating all n! permutations.

    Ties go to the lexicographically smallest image. Only meant as a
    reference for small n.
    """
    profit = _check_profit(profit)
    n = profit.shape[0]
    if n > BRUTE_FORCE_LIMIT:
        raise ValidationError(
            strings.lap_too_large,
            code="too_large",
            params={"limit": BRUTE_FORCE_LIMIT, "n": n},
        )
    # itertools yields images in lexicographic order and argmax keeps the first
    images = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    values = profit[np.arange(n), images].sum(axis=1)
    best = int(np.argmax(values))
    return Permutation(images[best]), float(values[best])
