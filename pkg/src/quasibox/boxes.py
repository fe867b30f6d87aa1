"""Bipartite two-input/two-output boxes and their correlators.

A box is stored as a 4x4 table ``p[r, c]`` with row ``r = 2*x + y`` indexing
the input pair and column ``c = 2*a + b`` indexing the outcome pair.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._validation import (EQUALITY_TOL, VALIDATION_TOL, check_bit,
                          check_probability_table, check_unit_interval)
from .errors import InvalidArgument, SignalingMarginals

BITS = (0, 1)
INPUT_PAIRS = tuple(itertools.product(BITS, BITS))
OUTCOME_PAIRS = INPUT_PAIRS

# (-1)^(a xor b) for each outcome column
_PARITY_SIGN = np.array([1.0, -1.0, -1.0, 1.0])
# (-1)^a and (-1)^b per outcome column
_SIGN_A = np.array([1.0, 1.0, -1.0, -1.0])
_SIGN_B = np.array([1.0, -1.0, 1.0, -1.0])


@dataclass(frozen=True, eq=False)
class Box:
    """Conditional behaviour p(a, b | x, y) of a 2222 system."""

    p: np.ndarray

    def __post_init__(self):
        arr = check_probability_table(self.p, VALIDATION_TOL)
        arr = np.clip(arr, 0.0, 1.0)
        arr.setflags(write=False)
        object.__setattr__(self, "p", arr)

    def prob(self, a, b, x, y):
        return float(self.p[2 * x + y, 2 * a + b])

    def allclose(self, other, atol=EQUALITY_TOL):
        return bool(np.allclose(self.p, other.p, rtol=0.0, atol=atol))

    def to_dict(self):
        return {"p": self.p.tolist()}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict) or "p" not in data:
            raise InvalidArgument('box JSON must be an object with key "p"')
        return cls(data["p"])

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"Box(p={self.p.tolist()!r})"


@dataclass(frozen=True)
class Correlators:
    """Second moments ``e[x, y] = <A_x B_y>`` and first moments of the +/-1 outcomes."""

    e: np.ndarray
    ma: np.ndarray
    mb: np.ndarray


@dataclass(frozen=True)
class SliceSpec:
    """Convex mixture ``sum_i c_i * box_i`` with nonnegative weights summing to one."""

    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        terms = tuple((float(c), b) for c, b in self.terms)
        if not terms:
            raise InvalidArgument("slice needs at least one term")
        coeffs = np.array([c for c, _ in terms])
        if np.any(coeffs < 0):
            raise InvalidArgument("slice coefficients must be nonnegative")
        if abs(coeffs.sum() - 1.0) > VALIDATION_TOL:
            raise InvalidArgument(
                f"slice coefficients must sum to 1, got {coeffs.sum()!r}")
        for _, b in terms:
            if not isinstance(b, Box):
                raise InvalidArgument("slice members must be Box instances")
        object.__setattr__(self, "terms", terms)


def _pr_parity(variant, x, y):
    # a xor b = xy xor c_y*y xor c_x*x xor c_0
    return (x & y) ^ ((variant & 1) & y) ^ (((variant >> 1) & 1) & x) ^ (variant >> 2)


def make_pr(variant=0):
    """One of the eight PR boxes.

    Variant 0 has ``a xor b = xy``. For the other variants the bits of
    ``variant`` (low to high) add ``y``, ``x`` and ``1`` to the right-hand side,
    so variant 1 is PR_1 with the (0,1) and (1,1) input rows exchanged.
    """
    if isinstance(variant, bool) or variant not in range(8):
        raise InvalidArgument(f"PR variant must be an integer in 0..7, got {variant!r}")
    p = np.zeros((4, 4))
    for x, y in INPUT_PAIRS:
        parity = _pr_parity(variant, x, y)
        for a, b in OUTCOME_PAIRS:
            if a ^ b == parity:
                p[2 * x + y, 2 * a + b] = 0.5
    return Box(p)


def make_deterministic(a0, a1, b0, b1):
    """Local deterministic box answering ``a = a_x`` and ``b = b_y``."""
    a = (check_bit(a0, "a0"), check_bit(a1, "a1"))
    b = (check_bit(b0, "b0"), check_bit(b1, "b1"))
    p = np.zeros((4, 4))
    for x, y in INPUT_PAIRS:
        p[2 * x + y, 2 * a[x] + b[y]] = 1.0
    return Box(p)


def make_noise():
    return Box(np.full((4, 4), 0.25))


def make_isotropic(gamma):
    """The mixture ``gamma * PR_1 + (1 - gamma) * I``."""
    gamma = check_unit_interval(gamma, "gamma")
    return Box(gamma * make_pr(0).p + (1.0 - gamma) * 0.25)


def make_slice(spec):
    if not isinstance(spec, SliceSpec):
        spec = SliceSpec(tuple(spec))
    p = sum(c * b.p for c, b in spec.terms)
    return Box(p)


def _marginals(p, tol):
    """Alice's <A_x> and Bob's <B_y>, refusing to average inconsistent rows."""
    # rows (x, y) -> a-marginal expectation
    row_a = p @ _SIGN_A
    row_b = p @ _SIGN_B
    ma = np.empty(2)
    mb = np.empty(2)
    for x in BITS:
        r0, r1 = row_a[2 * x], row_a[2 * x + 1]
        if abs(r0 - r1) > 2 * tol:
            raise SignalingMarginals(
                f"Alice's marginal for x={x} depends on y ({r0:.6g} vs {r1:.6g})")
        ma[x] = 0.5 * (r0 + r1)
    for y in BITS:
        r0, r1 = row_b[y], row_b[2 + y]
        if abs(r0 - r1) > 2 * tol:
            raise SignalingMarginals(
                f"Bob's marginal for y={y} depends on x ({r0:.6g} vs {r1:.6g})")
        mb[y] = 0.5 * (r0 + r1)
    return ma, mb


def correlators(box, tol=EQUALITY_TOL):
    """Correlators of ``box``; raises :class:`SignalingMarginals` for signaling boxes."""
    e = (box.p @ _PARITY_SIGN).reshape(2, 2)
    ma, mb = _marginals(box.p, tol)
    return Correlators(e=e, ma=ma, mb=mb)


def chsh_sign_pattern(m, n):
    """Signs multiplying ``e[x, y]`` in S_{m,n}; the minus sits at x = 1-n, y = 1-m."""
    signs = np.ones((2, 2))
    signs[1 - n, 1 - m] = -1.0
    return signs


def chsh_from_correlators(e):
    e = np.asarray(e, dtype=float)
    out = np.empty((2, 2))
    for m, n in itertools.product(BITS, BITS):
        out[m, n] = float(np.sum(chsh_sign_pattern(m, n) * e))
    return out


def chsh_all(box, tol=EQUALITY_TOL):
    """The four signed CHSH values as a 2x2 array ``S[m, n]``.

    ``S[0, 0]`` is <A0B0> + <A0B1> + <A1B0> - <A1B1>. A box is local iff
    every ``|S[m, n]| <= 2``.
    """
    return chsh_from_correlators(correlators(box, tol).e)


def max_abs_chsh(box, tol=EQUALITY_TOL):
    return float(np.max(np.abs(chsh_all(box, tol))))


def signaling_gap(box):
    """Largest violation of marginal invariance over all eight conditions."""
    p = box.p
    a_marg = p @ np.array([[1, 0], [1, 0], [0, 1], [0, 1]], dtype=float)
    b_marg = p @ np.array([[1, 0], [0, 1], [1, 0], [0, 1]], dtype=float)
    gap = 0.0
    for x in BITS:
        gap = max(gap, np.max(np.abs(a_marg[2 * x] - a_marg[2 * x + 1])))
    for y in BITS:
        gap = max(gap, np.max(np.abs(b_marg[y] - b_marg[2 + y])))
    return float(gap)


def is_no_signaling(box, tol=EQUALITY_TOL):
    return signaling_gap(box) <= tol


def vertex_boxes():
    """The 24 vertices of the no-signaling polytope: 16 deterministic then 8 PR boxes."""
    dets = [make_deterministic(*bits) for bits in itertools.product(BITS, repeat=4)]
    return dets + [make_pr(v) for v in range(8)]


def random_ns_box(rng, weights_alpha=None):
    """Random convex combination of the 24 no-signaling vertices."""
    verts = vertex_boxes()
    alpha = np.ones(len(verts)) if weights_alpha is None else weights_alpha
    w = rng.dirichlet(alpha)
    return Box(np.tensordot(w, np.stack([v.p for v in verts]), axes=1))


def as_box(obj) -> Box:
    if isinstance(obj, Box):
        return obj
    return Box(obj)


def stack_boxes(boxes: Iterable[Box]) -> np.ndarray:
    return np.stack([b.p.reshape(16) for b in boxes])


def unstack_boxes(X: Sequence) -> list:
    arr = np.asarray(X, dtype=float)
    return [Box(row) for row in arr.reshape(-1, 4, 4)]
