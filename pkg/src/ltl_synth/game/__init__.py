"""Parity games: the incrementally built arena, strategy iteration and a recursive oracle."""

from .arena import Arena, boundary, dump_arena, expand, init_arena
from .graph import NEUTRAL, Edge, ParityGame, format_game, parse_game, reachable_from
from .solver import (
    GIVE_UP,
    MINUS_INFINITY,
    PLUS_INFINITY,
    Distance,
    Ordering,
    SolveResult,
    Strategy,
    Weight,
    cmp,
    evaluate,
    finite,
    improve,
    initial_strategy,
    solve,
    weight_of,
)
from .zielonka import attractor, solve_zielonka

__all__ = [
    "GIVE_UP",
    "MINUS_INFINITY",
    "NEUTRAL",
    "PLUS_INFINITY",
    "Arena",
    "Distance",
    "Edge",
    "Ordering",
    "ParityGame",
    "SolveResult",
    "Strategy",
    "Weight",
    "attractor",
    "boundary",
    "cmp",
    "dump_arena",
    "evaluate",
    "expand",
    "finite",
    "format_game",
    "improve",
    "init_arena",
    "initial_strategy",
    "parse_game",
    "reachable_from",
    "solve",
    "solve_zielonka",
    "weight_of",
]
