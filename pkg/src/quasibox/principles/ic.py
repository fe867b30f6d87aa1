"""Information causality tested through the van Dam protocol.

Alice holds two uniform bits (alpha0, alpha1), inputs ``x = alpha0 ^ alpha1``
and sends ``alpha0 ^ a``. Bob inputs ``y = beta`` and guesses
``g = alpha0 ^ a ^ b`` for ``alpha_beta``.
"""

import itertools
from dataclasses import asdict, dataclass

import numpy as np

from .._validation import EQUALITY_TOL
from ..boxes import BITS, correlators
from ..quasiprob import ATOMS, f_sign


@dataclass(frozen=True)
class IcReport:
    p_i: float
    p_ii: float
    e_i: float
    e_ii: float
    criterion_lhs: float
    mutual_info_total: float
    violates_ic: bool
    protocol: str = "van Dam, one box, one classical bit"

    def to_dict(self):
        return asdict(self)


def mutual_information(joint):
    """Shannon mutual information in bits of a 2-D joint probability table."""
    joint = np.asarray(joint, dtype=float)
    px = joint.sum(axis=1, keepdims=True)
    py = joint.sum(axis=0, keepdims=True)
    mask = joint > 0
    return float(np.sum(joint[mask] * np.log2(joint[mask] / (px @ py)[mask])))


def binary_entropy(p):
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return float(-p * np.log2(p) - (1 - p) * np.log2(1 - p))


def guess_joint(box, beta):
    """Joint distribution of (alpha_beta, g) when Bob is asked for bit ``beta``."""
    joint = np.zeros((2, 2))
    for alpha0, alpha1, a, b in itertools.product(BITS, repeat=4):
        x = alpha0 ^ alpha1
        g = alpha0 ^ a ^ b
        target = (alpha0, alpha1)[beta]
        joint[target, g] += 0.25 * box.prob(a, b, x, beta)
    return joint


def success_probabilities(box):
    """P_I and P_II: chance that Bob's guess is right for beta = 0 and beta = 1."""
    same = lambda x, y: box.prob(0, 0, x, y) + box.prob(1, 1, x, y)  # noqa: E731
    p_i = 0.5 * (same(0, 0) + same(1, 0))
    p_ii = 0.5 * (same(0, 1) + (1.0 - same(1, 1)))
    return p_i, p_ii


def ic_van_dam(box, tol=EQUALITY_TOL):
    correlators(box)  # rejects signaling boxes
    p_i, p_ii = success_probabilities(box)
    e_i, e_ii = 2 * p_i - 1, 2 * p_ii - 1
    lhs = e_i ** 2 + e_ii ** 2
    info = sum(mutual_information(guess_joint(box, beta)) for beta in BITS)
    return IcReport(p_i=p_i, p_ii=p_ii, e_i=e_i, e_ii=e_ii, criterion_lhs=lhs,
                    mutual_info_total=info, violates_ic=bool(lhs > 1.0 + tol))


_A_EQUAL = np.array([1.0 if a0 == a1 else 0.0 for a0, a1, _, _ in ATOMS])


def ic_negativity_rep(jq):
    """(E_I, E_II) read off a jqpd: signed sums over atoms with a0 == a1 and a0 != a1."""
    signed = f_sign(0, 0) * jq.q
    return float(signed @ _A_EQUAL), float(signed @ (1.0 - _A_EQUAL))
