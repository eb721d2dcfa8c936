"""Modularity package - weight-4 newforms, eta quotients and matching."""

from src.modularity.eta import EtaQuotient, eta_qexp, verify_eta_candidates
from src.modularity.newforms import (
    NEWFORMS, TABLE_PRIMES, NewformRef, check_table, match, match_result, newform_ap
)

__all__ = [
    'EtaQuotient',
    'NEWFORMS',
    'NewformRef',
    'TABLE_PRIMES',
    'check_table',
    'eta_qexp',
    'match',
    'match_result',
    'newform_ap',
    'verify_eta_candidates',
]
