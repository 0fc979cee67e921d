"""Automaton states: formula leaves, Buchi breakpoint pairs, product trees and the two sinks."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Union

from ..ltl.formula import Formula, to_debug_text


class Sink(Enum):
    """Global rejecting (bottom) and accepting (top) sink states."""

    BOTTOM = "bot"
    TOP = "top"

    def swap(self) -> Sink:
        return Sink.TOP if self is Sink.BOTTOM else Sink.BOTTOM


@dataclass(frozen=True)
class BuchiState:
    """Obligations being discharged (``current``) and obligations started since (``pending``)."""

    current: Formula
    pending: Formula


@dataclass(frozen=True)
class ProductState:
    """Composite state mirroring the annotated tree.

    ``counter`` is the round-robin position, ``memory`` the minimal-colour memory; both are 0
    for nodes that do not use them.
    """

    children: tuple[State, ...]
    counter: int = 0
    memory: int = 0


State = Union[Sink, Formula, BuchiState, ProductState]


def swap_sink(state: State) -> State:
    """Exchange bottom and top, leave every other state alone."""
    return state.swap() if isinstance(state, Sink) else state


def format_state(state: State, names: Sequence[str] | None = None) -> str:
    """Human-readable rendering used in dumps and logs."""
    names_t = tuple(names) if names is not None else None
    if isinstance(state, Sink):
        return state.value
    if isinstance(state, Formula):
        return to_debug_text(state, names_t)
    if isinstance(state, BuchiState):
        current = to_debug_text(state.current, names_t)
        pending = to_debug_text(state.pending, names_t)
        return f"[{current} | {pending}]"
    inner = ", ".join(format_state(child, names) for child in state.children)
    extras = []
    if state.counter:
        extras.append(f"r={state.counter}")
    if state.memory:
        extras.append(f"c={state.memory}")
    suffix = "; " + ", ".join(extras) if extras else ""
    return f"({inner}{suffix})"
