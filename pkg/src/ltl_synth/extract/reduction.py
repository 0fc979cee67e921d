"""Greedy merging of compatible Mealy states."""

import logging

from ..automata.cubes import Cube
from .mealy import MealyMachine

logger = logging.getLogger(__name__)


class _Classes:
    """Union-find over Mealy states with the merged row of every class."""

    def __init__(self, machine: MealyMachine) -> None:
        self.parent = list(range(machine.n_states))
        self.outputs = [[cube for _, cube in row] for row in machine.transitions]
        self.successors = [[succ for succ, _ in row] for row in machine.transitions]

    def find(self, q: int) -> int:
        while self.parent[q] != q:
            self.parent[q] = self.parent[self.parent[q]]
            q = self.parent[q]
        return q

    def snapshot(self) -> tuple[list[int], list[list[Cube]]]:
        return list(self.parent), [list(row) for row in self.outputs]

    def restore(self, saved: tuple[list[int], list[list[Cube]]]) -> None:
        self.parent, self.outputs = saved[0], saved[1]

    def merge(self, first: int, second: int) -> bool:
        """Merge two classes and everything their successors force together."""
        pending = [(first, second)]
        while pending:
            a, b = pending.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            row_a, row_b = self.outputs[a], self.outputs[b]
            for inputs, cube in enumerate(row_b):
                if not row_a[inputs].intersects(cube):
                    return False
                row_a[inputs] = row_a[inputs].meet(cube)
                pending.append((self.successors[a][inputs], self.successors[b][inputs]))
            self.parent[b] = a
        return True


def reduce_mealy(machine: MealyMachine) -> MealyMachine:
    """Merge states whose rows agree wherever both are specified.

    Pairs are tried in index order. A merge also merges the successors it forces; if that leads
    to contradicting outputs the whole attempt is rolled back. The merged output is the
    conjunction of the members' cubes, so every completion of the result is a completion of the
    original machine.

    Returns:
        ``machine`` itself when nothing merges, otherwise a new machine without product shape.
    """
    classes = _Classes(machine)
    merged = 0
    for q in range(machine.n_states):
        for r in range(q + 1, machine.n_states):
            if classes.find(q) == classes.find(r):
                continue
            saved = classes.snapshot()
            if classes.merge(q, r):
                merged += 1
            else:
                classes.restore(saved)
    if not merged:
        return machine

    number: dict[int, int] = {}
    for q in range(machine.n_states):
        number.setdefault(classes.find(q), len(number))
    result = MealyMachine(machine.alphabet, [], shaped=False)
    for root in number:
        if machine.states:
            result.states.append(machine.states[root])
        result.transitions.append(
            [
                (number[classes.find(succ)], cube)
                for succ, cube in zip(classes.successors[root], classes.outputs[root], strict=True)
            ]
        )
    logger.debug("Reduced Mealy machine from %d to %d state(s)", machine.n_states, len(number))
    return result
