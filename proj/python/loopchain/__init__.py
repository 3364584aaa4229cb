"""Divisor ranks, gonality sequences and Brill-Noether data on chains of cycles."""

import json

from ._loopchain import (
    TorsionProfile,
    chain_graph,
    chain_profile,
    chain_rank,
    clifford_index,
    count_tableaux,
    dhar_reduce,
    enumerate_tableaux,
    exists_rank_exactly,
    gonality,
    gonality_sequence,
    martens_profile,
    oracle_rank,
    rank,
    realize_chain,
    verify_json,
    wrd,
)
from ._loopchain import divisorial_complete_report as _divisorial_complete_report

__all__ = [
    "TorsionProfile",
    "chain_graph",
    "chain_profile",
    "chain_rank",
    "clifford_index",
    "count_tableaux",
    "dhar_reduce",
    "divisorial_complete_report",
    "enumerate_tableaux",
    "exists_rank_exactly",
    "gonality",
    "gonality_sequence",
    "martens_profile",
    "oracle_rank",
    "rank",
    "realize_chain",
    "verify",
    "wrd",
]


def divisorial_complete_report(profile, threads=1):
    """Per-cell (degree, rank) report as a dict."""
    return json.loads(_divisorial_complete_report(profile, threads))


def verify(claim, genus, positions, r_max=0, threads=1):
    """Run one named check on a Martens-special chain and return its report."""
    return json.loads(verify_json(claim, genus, list(positions), r_max, threads))
