"""Analysis of bipartite two-input/two-output nonlocal boxes.

CHSH values, minimal-L1 joint quasi-probabilities computed by linear
programming, and tests for the principles proposed to single out quantum
correlations (locality, Uffink, TLM/Q^1, information causality, macroscopic
locality, local orthogonality, communication complexity).
"""

from .boxes import (Box, Correlators, SliceSpec, chsh_all, correlators, is_no_signaling,
                    make_deterministic, make_isotropic, make_noise, make_pr, make_slice)
from .errors import (InvalidArgument, NoJqpdExists, NonOrthogonalEvents,
                     ObservableNegativity, QuasiboxError, SignalingMarginals, SizeLimit)
from .optim import L1Result, LpProblem, LpSolution, LpStatus, min_l1, solve_lp
from .quasiprob import (Jqpd, MultiJqpd, f_exponent, isotropic_jqpd, l1_norm, marginals_of,
                        product_jqpd)

__version__ = "0.1.0"

__all__ = [
    "Box", "Correlators", "SliceSpec", "chsh_all", "correlators", "is_no_signaling",
    "make_deterministic", "make_isotropic", "make_noise", "make_pr", "make_slice",
    "InvalidArgument", "NoJqpdExists", "NonOrthogonalEvents", "ObservableNegativity",
    "QuasiboxError", "SignalingMarginals", "SizeLimit",
    "L1Result", "LpProblem", "LpSolution", "LpStatus", "min_l1", "solve_lp",
    "Jqpd", "MultiJqpd", "f_exponent", "isotropic_jqpd", "l1_norm", "marginals_of",
    "product_jqpd",
]
