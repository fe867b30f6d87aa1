"""Correlator inequalities: CHSH locality, Uffink's quadratic bound and TLM (Q^1)."""

import itertools
import math

import numpy as np

from .._validation import EQUALITY_TOL
from ..boxes import chsh_all, chsh_sign_pattern, correlators
from ._verdict import Verdict

ZERO_VARIANCE_TOL = 1e-12


def check_local(box, tol=EQUALITY_TOL):
    """Local iff all four |S_{m,n}| <= 2; witness is the largest |S|."""
    s = float(np.max(np.abs(chsh_all(box))))
    return Verdict(bool(s <= 2.0 + tol), s, 2.0)


def uffink_lhs(e):
    return (e[0, 0] - e[1, 1]) ** 2 + (e[0, 1] + e[1, 0]) ** 2


def check_uffink(box, tol=EQUALITY_TOL):
    """Quadratic bound, swept over the four placements of the minus sign.

    Moving the minus of S_{0,0} to another correlator corresponds to
    relabelling inputs, which maps ``e`` onto itself with one sign flipped
    and rows/columns exchanged.
    """
    e = correlators(box).e
    lhs = max(uffink_lhs(_relabel(e, m, n)) for m, n in itertools.product((0, 1), (0, 1)))
    return Verdict(bool(lhs <= 4.0 + tol), float(lhs), 4.0)


def _relabel(e, m, n):
    """Permute ``e`` so that the minus position of S_{m,n} lands on (1, 1)."""
    xs = (0, 1) if n == 0 else (1, 0)
    ys = (0, 1) if m == 0 else (1, 0)
    return e[np.ix_(xs, ys)]


def correlation_coefficients(box):
    """Pearson correlations C[x, y] of the +/-1 outcomes.

    Returns ``(C, degenerate)``; when an outcome has zero variance the
    coefficient is set to 0 and ``degenerate`` is True.
    """
    cor = correlators(box)
    var_a = 1.0 - cor.ma ** 2
    var_b = 1.0 - cor.mb ** 2
    C = np.zeros((2, 2))
    degenerate = False
    for x, y in itertools.product((0, 1), (0, 1)):
        if var_a[x] < ZERO_VARIANCE_TOL or var_b[y] < ZERO_VARIANCE_TOL:
            degenerate = True
            continue
        cov = cor.e[x, y] - cor.ma[x] * cor.mb[y]
        C[x, y] = cov / math.sqrt(var_a[x] * var_b[y])
    return np.clip(C, -1.0, 1.0), degenerate


def tlm_lhs(C):
    arcs = np.arcsin(np.clip(C, -1.0, 1.0))
    return max(abs(float(np.sum(chsh_sign_pattern(m, n) * arcs)))
               for m, n in itertools.product((0, 1), (0, 1)))


def check_tlm(box, tol=EQUALITY_TOL):
    """Arcsine inequality on correlation coefficients; satisfied iff the box is in Q^1."""
    C, degenerate = correlation_coefficients(box)
    lhs = tlm_lhs(C)
    notes = ("zero-variance outcome: correlation taken as 0",) if degenerate else ()
    return Verdict(bool(lhs <= math.pi + tol), lhs, math.pi, notes)
