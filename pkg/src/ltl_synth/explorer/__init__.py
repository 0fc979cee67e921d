"""Exploration oracles and their registry."""

from typing import Any

from .base import Explorer
from .bfs import BfsExplorer, BfsPlusExplorer
from .filtering import filter_boundary
from .pq import PqExplorer, PqPlusExplorer, ScoredEdge, format_score_trace
from .scoring import Score, satisfying_fraction, score

# Explorer registry
_EXPLORER_REGISTRY: dict[str, type[Explorer]] = {
    "bfs": BfsExplorer,
    "bfs+": BfsPlusExplorer,
    "pq": PqExplorer,
    "pq+": PqPlusExplorer,
}


def get_explorer(name: str, **kwargs: Any) -> Explorer:
    """Create an exploration oracle by name.

    Args:
        name: Registered name, e.g. ``bfs`` or ``pq+``.
        **kwargs: Passed to the oracle's constructor.

    Raises:
        ValueError: If no oracle is registered under ``name``.
    """
    if name not in _EXPLORER_REGISTRY:
        available = ", ".join(_EXPLORER_REGISTRY.keys())
        raise ValueError(f"Exploration '{name}' not found. Available explorations: {available}")
    return _EXPLORER_REGISTRY[name](**kwargs)


def register_explorer(name: str, explorer: type[Explorer]) -> None:
    """Register an exploration oracle class under ``name``."""
    _EXPLORER_REGISTRY[name] = explorer


__all__ = [
    "BfsExplorer",
    "BfsPlusExplorer",
    "Explorer",
    "PqExplorer",
    "PqPlusExplorer",
    "Score",
    "ScoredEdge",
    "filter_boundary",
    "format_score_trace",
    "get_explorer",
    "register_explorer",
    "satisfying_fraction",
    "score",
]
