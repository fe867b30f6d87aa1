"""Decision procedures for the physical principles constraining nonlocal boxes."""

from ._verdict import Verdict
from .correlation import check_local, check_tlm, check_uffink, correlation_coefficients
from .ic import IcReport, ic_negativity_rep, ic_van_dam
from .lo import LoEvent, check_lo1, lo1_family, lo_evaluate, lo_orthogonal, preset
from .ml import MlConfig, ml_macroscopic, ml_threshold
from .ntcc import (NTCC_MSTAR_CITATION, NTCC_MSTAR_GAMMA, NTCC_MSTAR_THRESHOLD,
                   NTCC_S_CITATION, NTCC_S_GAMMA, NTCC_S_THRESHOLD, IpGameResult,
                   analytic_success, ntcc_ip_game)

__all__ = [
    "Verdict", "check_local", "check_tlm", "check_uffink", "correlation_coefficients",
    "IcReport", "ic_negativity_rep", "ic_van_dam",
    "LoEvent", "check_lo1", "lo1_family", "lo_evaluate", "lo_orthogonal", "preset",
    "MlConfig", "ml_macroscopic", "ml_threshold",
    "IpGameResult", "analytic_success", "ntcc_ip_game",
    "NTCC_S_THRESHOLD", "NTCC_S_GAMMA", "NTCC_S_CITATION",
    "NTCC_MSTAR_THRESHOLD", "NTCC_MSTAR_GAMMA", "NTCC_MSTAR_CITATION",
]
