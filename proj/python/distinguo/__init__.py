"""Exact engine for the distinguishing game."""

from ._core import (
    Graph,
    InvalidArgument,
    ParseError,
    ResourceError,
    automorphism_group,
    distinguishing_number,
    find_bar,
    game_distinguishing_number,
    infinity_certificate,
    only_bar_preserving,
    probe_prime_cycles,
    reproduce,
    residue_table,
    solve,
    strategy_names,
    verify,
    winner,
)

__all__ = [
    "Graph",
    "InvalidArgument",
    "ParseError",
    "ResourceError",
    "automorphism_group",
    "distinguishing_number",
    "find_bar",
    "game_distinguishing_number",
    "infinity_certificate",
    "only_bar_preserving",
    "probe_prime_cycles",
    "reproduce",
    "residue_table",
    "solve",
    "strategy_names",
    "verify",
    "winner",
]
