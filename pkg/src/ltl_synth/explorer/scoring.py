"""Quality scores of automaton transitions used to prioritise exploration.

A score ``(w, s)`` estimates how close a transition brings the run to satisfying the formula
(``s`` in [0, 1]) and how much that estimate should count (``w > 0``). Leaves measure the
fraction of assignments to the Boolean atoms of the successor formula that satisfy it;
composites reweight and average their children.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..automata.base import Automaton
from ..automata.leaves import BuchiLeaf, CoBuchiLeaf, WeakLeaf
from ..automata.products import Biconditional, BinaryProduct, Composite, ProductRule, RoundRobin
from ..automata.states import BuchiState, ProductState, Sink, State
from ..core.config import get_settings
from ..ltl.formula import Formula, Op, conj

HALF = 0.5


@dataclass(frozen=True)
class Score:
    weight: float
    value: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"Score value out of range: {self.value}")
        if self.weight <= 0.0:
            raise ValueError(f"Score weight must be positive: {self.weight}")


def _atoms(f: Formula, atoms: dict[object, int]) -> None:
    if f.op is Op.LIT:
        atoms.setdefault(("prop", f.prop), len(atoms))
    elif f.op in (Op.AND, Op.OR, Op.IFF):
        for child in f.children:
            _atoms(child, atoms)
    elif f.op not in (Op.TRUE, Op.FALSE):
        atoms.setdefault(f, len(atoms))


def _table(f: Formula, atoms: dict[object, int], full: int) -> int:
    # truth table over all assignments, one bit per assignment
    if f.op is Op.TRUE:
        return full
    if f.op is Op.FALSE:
        return 0
    if f.op is Op.LIT:
        table = _variable(atoms[("prop", f.prop)], len(atoms))
        return table if f.positive else full & ~table
    if f.op is Op.AND:
        result = full
        for child in f.children:
            result &= _table(child, atoms, full)
        return result
    if f.op is Op.OR:
        result = 0
        for child in f.children:
            result |= _table(child, atoms, full)
        return result
    if f.op is Op.IFF:
        left, right = _table(f.left, atoms, full), _table(f.right, atoms, full)
        return full & ~(left ^ right)
    return _variable(atoms[f], len(atoms))


def _variable(index: int, count: int) -> int:
    # bit a of the table is set iff bit ``index`` of assignment a is set
    block = 1 << index
    table = ((1 << block) - 1) << block
    width = 2 * block
    while width < 1 << count:
        table |= table << width
        width *= 2
    return table


def satisfying_fraction(f: Formula) -> float:
    """Fraction of assignments to the Boolean atoms of ``f`` that satisfy it.

    Atoms are the propositions and the maximal temporal sub-formulas. Above
    ``SCORE_MAX_ATOMS`` atoms the fraction is not computed and 1/2 is returned.
    """
    atoms: dict[object, int] = {}
    _atoms(f, atoms)
    if len(atoms) > get_settings().SCORE_MAX_ATOMS:
        return HALF
    full = (1 << (1 << len(atoms))) - 1
    return _table(f, atoms, full).bit_count() / (1 << len(atoms))


def _leaf_value(node: Automaton, successor: State) -> float:
    if isinstance(node, WeakLeaf):
        assert isinstance(successor, Formula)
        return satisfying_fraction(successor)
    assert isinstance(successor, BuchiState)
    fraction = satisfying_fraction(conj(successor.current, successor.pending))
    if isinstance(node, CoBuchiLeaf):
        return 1.0 - fraction
    return fraction


def _log_half(x: float) -> float:
    return -math.log2(x)


def _reweight(weight: float, value: float, node: Composite) -> float:
    if not 0.0 < value < 1.0:
        return weight
    if isinstance(node, Biconditional):
        return weight * max(_log_half(value), _log_half(1.0 - value))
    if node.dual:
        return weight * _log_half(1.0 - value)
    return weight * _log_half(value)


def _bonus(weight: float, value: float, good: bool) -> tuple[float, float]:
    return 2 * weight, (3 + value) / 4 if good else value / 4


def score(node: Automaton, state: State, letter: int, successor: State) -> Score:
    """Score of the transition ``state --letter--> successor`` of ``node``.

    Sinks score 0 (rejecting) and 1 (accepting). Buchi leaves score the conjunction of their
    breakpoint pair and co-Buchi leaves the complement of that. Composites scale child weights
    by the information content of their values, then double the weight of children that
    advanced the round-robin counter or lowered the colour memory and pull their values towards
    1 (good colour for the product's parity) or 0, and average.
    """
    if isinstance(successor, Sink):
        return Score(1.0, 1.0 if successor is Sink.TOP else 0.0)
    if isinstance(node, (WeakLeaf, BuchiLeaf, CoBuchiLeaf)):
        return Score(1.0, _leaf_value(node, successor))
    assert isinstance(node, Composite)
    assert isinstance(state, ProductState) and isinstance(successor, ProductState)
    colours = [child.step(sub, letter)[1] for child, sub in zip(node.nodes, state.children)]
    weights: list[float] = []
    values: list[float] = []
    for child, before, after in zip(node.nodes, state.children, successor.children):
        child_score = score(child, before, letter, after)
        weights.append(child_score.weight)
        values.append(child_score.value)
    weights = [_reweight(w, s, node) for w, s in zip(weights, values)]
    if isinstance(node, RoundRobin):
        passed = node.advance(state.counter, colours)
        for i in range(state.counter, passed):
            weights[i], values[i] = _bonus(weights[i], values[i], not node.dual)
    elif isinstance(node, BinaryProduct) and node.rule is ProductRule.MEMORY:
        other = node.other_index
        least = min(state.memory, colours[other] + node.shift)
        if least < state.memory:
            good = least % 2 == node.parity
            weights[other], values[other] = _bonus(weights[other], values[other], good)
    elif isinstance(node, Biconditional) and node.uses_memory:
        other = node.other_index
        least = min(state.memory, colours[other])
        if least < state.memory:
            good = least % 2 == node.parity
            weights[other], values[other] = _bonus(weights[other], values[other], good)
    value = float(np.average(values, weights=weights))
    return Score(float(sum(weights)), min(1.0, max(0.0, value)))
