"""Membership of ultimately periodic words in the language of the parity automaton."""

from pydantic import BaseModel, ConfigDict, Field

from ..automata.handle import DpaHandle


class LassoWord(BaseModel):
    """The infinite word ``prefix · loop · loop · ...`` over full letters."""

    model_config = ConfigDict(frozen=True)

    prefix: tuple[int, ...] = Field(default=(), description="Finite prefix u")
    loop: tuple[int, ...] = Field(..., min_length=1, description="Repeated part v", examples=[[0]])


def run_colours(handle: DpaHandle, word: LassoWord) -> tuple[list[int], int]:
    """Colours of the run until a (state, loop position) pair repeats.

    Returns:
        All colours seen and the index of the first colour of the repeating cycle.
    """
    state = handle.initial()
    colours = []
    for letter in word.prefix:
        state, colour = handle.step(state, letter)
        colours.append(colour)
    seen: dict[tuple[object, int], int] = {}
    position = 0
    while (state, position) not in seen:
        seen[(state, position)] = len(colours)
        state, colour = handle.step(state, word.loop[position])
        colours.append(colour)
        position = (position + 1) % len(word.loop)
    return colours, seen[(state, position)]


def accepts_lasso(handle: DpaHandle, word: LassoWord) -> bool:
    """Whether the least colour on the run's cycle has the automaton's parity."""
    colours, start = run_colours(handle, word)
    return min(colours[start:]) % 2 == handle.parity
