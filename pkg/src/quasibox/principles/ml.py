"""Macroscopic locality: coarse-grain N independent copies of a box by majority vote."""

import itertools
from dataclasses import dataclass

import numpy as np

from .._validation import EQUALITY_TOL
from ..boxes import BITS, Box, correlators, make_isotropic
from ..errors import InvalidArgument

MAX_COPIES = 64


@dataclass(frozen=True)
class MlConfig:
    n_copies: int
    family: object = make_isotropic

    def __post_init__(self):
        if isinstance(self.n_copies, bool) or int(self.n_copies) != self.n_copies \
                or not 1 <= self.n_copies <= MAX_COPIES:
            raise InvalidArgument(f"n_copies must be an integer in 1..{MAX_COPIES}")


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or not 1 <= n <= MAX_COPIES:
        raise InvalidArgument(f"number of copies must be an integer in 1..{MAX_COPIES}, got {n!r}")
    return int(n)


def count_difference_distribution(row, n):
    """Distribution of (I0 - I1, J0 - J1) after ``n`` copies for one input pair.

    ``row`` holds p(a, b) in order (0,0), (0,1), (1,0), (1,1). The result is a
    (2n+1) x (2n+1) array whose index ``k`` stands for a difference ``k - n``.
    """
    size = 2 * n + 1
    dist = np.zeros((size, size))
    dist[n, n] = 1.0
    # outcome 0 adds +1 to its detector difference, outcome 1 adds -1
    for _ in range(n):
        nxt = np.zeros_like(dist)
        for (a, b), w in zip(itertools.product(BITS, BITS), row):
            if w == 0.0:
                continue
            da, db = 1 - 2 * a, 1 - 2 * b
            src = dist[max(0, -da):size - max(0, da), max(0, -db):size - max(0, db)]
            nxt[max(0, da):size - max(0, -da), max(0, db):size - max(0, -db)] += w * src
        dist = nxt
    return dist


def _threshold(dist, n):
    # difference >= 0 -> macroscopic outcome 0 (ties included)
    diffs = np.arange(-n, n + 1)
    zero = diffs >= 0
    out = np.empty(4)
    for a, b in itertools.product(BITS, BITS):
        ra = zero if a == 0 else ~zero
        rb = zero if b == 0 else ~zero
        out[2 * a + b] = dist[np.ix_(ra, rb)].sum()
    return out


def ml_macroscopic(box, n):
    """Box seen by observers who only record which detector received the majority."""
    n = _check_n(n)
    correlators(box)  # rejects signaling boxes
    p = np.vstack([_threshold(count_difference_distribution(box.p[r], n), n)
                   for r in range(4)])
    return Box(p / p.sum(axis=1, keepdims=True))


def ml_threshold(n, family=make_isotropic, tol=1e-6, local_tol=EQUALITY_TOL):
    """Largest parameter in [0, 1] whose ``n``-copy macroscopic box has M* = 1.

    Bisection assumes the family is local at 0 and that locality is lost
    monotonically along the parameter.
    """
    # local import: optim depends on boxes/quasiprob only, principles sits above it
    from ..optim import min_l1

    n = _check_n(n)
    if n % 2 == 0:
        raise InvalidArgument("ml_threshold needs an odd number of copies")
    if tol <= 0:
        raise InvalidArgument("tol must be positive")

    def is_local(g):
        return min_l1(ml_macroscopic(family(g), n)).m_star <= 1.0 + local_tol

    lo, hi = 0.0, 1.0
    if is_local(hi):
        return hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if is_local(mid):
            lo = mid
        else:
            hi = mid
    return lo
