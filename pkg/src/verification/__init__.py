"""Claim dispatch, sweeps and report rendering"""

from src.verification.claims import ClaimId, claim_menu, parse_claim, run_claim, sweep_claim
from src.verification.render import report_render

__all__ = [
    "ClaimId",
    "claim_menu",
    "parse_claim",
    "run_claim",
    "sweep_claim",
    "report_render",
]
