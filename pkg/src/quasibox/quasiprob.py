"""Signed joint distributions over the four hidden outcome bits (a0, a1, b0, b1).

Atoms are indexed lexicographically, ``index = 8*a0 + 4*a1 + 2*b0 + b1``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from ._validation import check_bit, check_unit_interval
from .boxes import BITS, Box
from .errors import InvalidArgument, ObservableNegativity, SizeLimit

ATOMS = tuple(itertools.product(BITS, repeat=4))
OBSERVABLE_NEG_TOL = 1e-9
MAX_COPIES = 3


def atom_index(a0, a1, b0, b1):
    return 8 * a0 + 4 * a1 + 2 * b0 + b1


def _marginal_matrix():
    # rows: box entries in row-major (x, y, a, b) order; columns: atoms
    M = np.zeros((16, 16))
    for x, y, a, b in itertools.product(BITS, repeat=4):
        row = 4 * (2 * x + y) + 2 * a + b
        for k, (a0, a1, b0, b1) in enumerate(ATOMS):
            if (a0, a1)[x] == a and (b0, b1)[y] == b:
                M[row, k] = 1.0
    M.setflags(write=False)
    return M


MARGINAL_MATRIX = _marginal_matrix()


def f_exponent(m, n, a0, a1, b0, b1):
    """Parity bit ``(a0^a1)(b0^b1) ^ a_n ^ b_m`` fixing the sign of an atom in S_{m,n}."""
    m, n = check_bit(m, "m"), check_bit(n, "n")
    a = (check_bit(a0, "a0"), check_bit(a1, "a1"))
    b = (check_bit(b0, "b0"), check_bit(b1, "b1"))
    return ((a[0] ^ a[1]) & (b[0] ^ b[1])) ^ a[n] ^ b[m]


def f_sign(m=0, n=0):
    """Vector of (-1)^f_{m,n} over the 16 atoms."""
    return np.array([(-1.0) ** f_exponent(m, n, *atom) for atom in ATOMS])


@dataclass(frozen=True, eq=False)
class Jqpd:
    """Sixteen signed atom weights summing to one."""

    q: np.ndarray

    def __post_init__(self):
        q = np.array(self.q, dtype=float).reshape(-1)
        if q.shape != (16,):
            raise InvalidArgument(f"jqpd needs 16 atoms, got {q.size}")
        if not np.all(np.isfinite(q)):
            raise InvalidArgument("jqpd contains non-finite weights")
        if abs(q.sum() - 1.0) > 1e-12:
            raise InvalidArgument(f"jqpd weights must sum to 1, got {q.sum()!r}")
        q.setflags(write=False)
        object.__setattr__(self, "q", q)

    def atom(self, a0, a1, b0, b1):
        return float(self.q[atom_index(a0, a1, b0, b1)])

    def to_dict(self):
        return {"q": self.q.tolist()}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        if not isinstance(data, dict) or "q" not in data:
            raise InvalidArgument('jqpd JSON must be an object with key "q"')
        return cls(data["q"])


@dataclass(frozen=True, eq=False)
class MultiJqpd:
    """Product distribution over ``copies`` independent atom quadruples."""

    copies: int
    q: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.q, dtype=float).reshape(-1)
        if self.copies < 1 or q.size != 16 ** self.copies:
            raise InvalidArgument("atom count does not match the number of copies")
        if abs(q.sum() - 1.0) > 1e-10:
            raise InvalidArgument("multi-copy weights must sum to 1")
        q.setflags(write=False)
        object.__setattr__(self, "q", q)

    def tensor(self):
        """Weights reshaped to one axis of length 16 per copy."""
        return self.q.reshape((16,) * self.copies)


def uniform_jqpd():
    return Jqpd(np.full(16, 1 / 16))


def point_mass(a0, a1, b0, b1):
    q = np.zeros(16)
    q[atom_index(a0, a1, b0, b1)] = 1.0
    return Jqpd(q)


def isotropic_jqpd(gamma):
    gamma = check_unit_interval(gamma, "gamma")
    return Jqpd((1.0 + 2.0 * gamma * f_sign(0, 0)) / 16.0)


def marginals_of(jq, tol=OBSERVABLE_NEG_TOL):
    """Observable box obtained by summing out the two unmeasured bits."""
    p = (MARGINAL_MATRIX @ jq.q).reshape(4, 4)
    if p.min() < -tol:
        raise ObservableNegativity(
            f"observable probability {p.min():.3g} is negative")
    if p.max() > 1 + tol:
        raise ObservableNegativity(f"observable probability {p.max():.3g} exceeds 1")
    return Box(np.clip(p, 0.0, 1.0))


def product_jqpd(parts):
    parts = list(parts)
    if not parts:
        raise InvalidArgument("need at least one factor")
    if len(parts) > MAX_COPIES:
        raise SizeLimit(f"at most {MAX_COPIES} copies are materialised, got {len(parts)}")
    q = parts[0].q
    for jq in parts[1:]:
        q = np.kron(q, jq.q)
    return MultiJqpd(len(parts), q)


def l1_norm(jq):
    return float(np.abs(jq.q).sum())


def chsh_from_jqpd(jq):
    """All four S_{m,n} as ``2 * sum (-1)^f_{m,n} q``, indexed ``[m, n]``."""
    out = np.empty((2, 2))
    for m, n in itertools.product(BITS, BITS):
        out[m, n] = 2.0 * float(f_sign(m, n) @ jq.q)
    return out
