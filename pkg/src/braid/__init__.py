"""Antiflips and the braid group action on Wahl resolutions."""

from .antiflip import (
    AntiflipCase,
    AntiflipResult,
    antiflip_step,
    flip_is_monotone,
    left_antiflip,
    left_antiflip_step,
    right_antiflip,
    right_antiflip_step,
)
from .braid_action import (
    BraidCheckResult,
    apply_word,
    check_braid_relations,
    n_resolution_of,
    replay_to_m_resolution,
    trace_word,
)
from .braid_word import BraidGenerator, BraidWord, Direction, mn_schedule

__all__ = [
    "AntiflipCase",
    "AntiflipResult",
    "antiflip_step",
    "flip_is_monotone",
    "left_antiflip",
    "left_antiflip_step",
    "right_antiflip",
    "right_antiflip_step",
    "BraidCheckResult",
    "apply_word",
    "check_braid_relations",
    "n_resolution_of",
    "replay_to_m_resolution",
    "trace_word",
    "BraidGenerator",
    "BraidWord",
    "Direction",
    "mn_schedule",
]
