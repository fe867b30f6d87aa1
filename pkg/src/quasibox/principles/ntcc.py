"""Inner-product parity game and reference thresholds for trivial communication complexity."""

import math
from dataclasses import asdict, dataclass

import numpy as np

from ..errors import InvalidArgument

# Isotropic boxes above these values make communication complexity trivial
# via nonlocality distillation (Brunner & Skrzypczyk, PRL 102, 160403 (2009)).
NTCC_S_THRESHOLD = 3.266
NTCC_S_GAMMA = 0.8165
NTCC_S_CITATION = "isotropic boxes with S > 3.266 (M* > 1.633) collapse communication complexity"
NTCC_MSTAR_THRESHOLD = 1.508
NTCC_MSTAR_GAMMA = 0.754
NTCC_MSTAR_CITATION = "NTCC is violated for boxes with M* > 1.508 (gamma > 0.754) on the PR-D-noise slice"

TRIAL_BLOCK = 8192


@dataclass(frozen=True)
class IpGameResult:
    empirical: float
    analytic: float
    successes: int
    trials: int
    n_bits: int
    seed: int

    @property
    def stderr(self):
        p = self.analytic
        return math.sqrt(max(p * (1 - p), 0.0) / self.trials)

    def to_dict(self):
        out = asdict(self)
        out["stderr"] = self.stderr
        return out


def per_box_bias(box):
    """2q - 1 where q is the chance that a box used with uniform inputs gives a^b = xy."""
    q = 0.0
    for x in (0, 1):
        for y in (0, 1):
            target = x & y
            q += 0.25 * sum(box.prob(a, a ^ target, x, y) for a in (0, 1))
    return 2.0 * q - 1.0


def analytic_success(box, n_bits):
    """Exact protocol success rate: errors are independent across boxes, so (1 + bias^n)/2."""
    return 0.5 * (1.0 + per_box_bias(box) ** n_bits)


def _play_block(rng, cdf, n_bits, trials):
    v = rng.integers(0, 2, size=(trials, n_bits))
    w = rng.integers(0, 2, size=(trials, n_bits))
    u = rng.random((trials, n_bits))
    outcome = (u[..., None] >= cdf[2 * v + w]).sum(axis=-1)
    a, b = outcome >> 1, outcome & 1
    bob_bit = b.sum(axis=1) & 1
    guess = bob_bit ^ (a.sum(axis=1) & 1)
    truth = (v & w).sum(axis=1) & 1
    return int(np.count_nonzero(guess == truth))


def ntcc_ip_game(box, n_bits, trials, seed=0):
    """Simulate the one-bit inner-product parity protocol on ``n_bits`` copies of ``box``.

    Bob inputs ``w_i``, Alice ``v_i`` into the i-th box; Bob sends the parity of
    his outputs and Alice XORs it with hers. Trials are drawn in blocks of
    ``TRIAL_BLOCK``, block ``k`` using the k-th child of ``SeedSequence(seed)``
    with the PCG64 generator, so results depend only on the arguments.
    """
    if n_bits < 0:
        raise InvalidArgument("n_bits must be nonnegative")
    if trials < 1:
        raise InvalidArgument("trials must be at least 1")
    cdf = np.cumsum(box.p, axis=1)[:, :3]
    n_blocks = -(-trials // TRIAL_BLOCK)
    children = np.random.SeedSequence(seed).spawn(n_blocks)
    wins = 0
    for k, child in enumerate(children):
        size = min(TRIAL_BLOCK, trials - k * TRIAL_BLOCK)
        wins += _play_block(np.random.Generator(np.random.PCG64(child)), cdf, n_bits, size)
    return IpGameResult(empirical=wins / trials, analytic=analytic_success(box, n_bits),
                        successes=wins, trials=trials, n_bits=n_bits, seed=seed)
