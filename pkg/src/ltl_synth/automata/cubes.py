"""Cubes (product terms) over letter bits and minimal-ish sum-of-products covers."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Cube:
    """Product term: bits in ``care`` must equal the corresponding bits of ``value``."""

    care: int
    value: int

    def contains(self, letter: int) -> bool:
        return letter & self.care == self.value

    @property
    def literals(self) -> int:
        return self.care.bit_count()

    def intersects(self, other: "Cube") -> bool:
        shared = self.care & other.care
        return self.value & shared == other.value & shared

    def meet(self, other: "Cube") -> "Cube":
        """Conjunction of two intersecting cubes."""
        return Cube(self.care | other.care, self.value | other.value)

    def minterms(self, variables: int) -> Iterable[int]:
        """All assignments of ``variables`` bits contained in the cube."""
        free = variables & ~self.care
        sub = free
        while True:
            yield self.value | sub
            if sub == 0:
                break
            sub = (sub - 1) & free

    def format(self, names: Sequence[str]) -> str:
        if self.care == 0:
            return "1"
        parts = []
        for k, name in enumerate(names):
            if self.care >> k & 1:
                parts.append(name if self.value >> k & 1 else "!" + name)
        return " ".join(parts)


TRUE_CUBE = Cube(0, 0)


def submasks(mask: int) -> list[int]:
    """All sub-masks of ``mask`` in increasing order."""
    result = []
    sub = mask
    while True:
        result.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    result.reverse()
    return result


def _primes(minterms: set[int], variables: int) -> list[Cube]:
    current = {Cube(variables, m) for m in minterms}
    primes: set[Cube] = set()
    while current:
        merged: set[Cube] = set()
        used: set[Cube] = set()
        for cube in current:
            care = cube.care
            bit_mask = care
            while bit_mask:
                bit = bit_mask & -bit_mask
                bit_mask ^= bit
                partner = Cube(care, cube.value ^ bit)
                if partner in current:
                    merged.add(Cube(care & ~bit, cube.value & ~bit))
                    used.add(cube)
                    used.add(partner)
        primes |= current - used
        current = merged
    return sorted(primes, key=lambda c: (c.literals, c.care, c.value))


def _gain(cube: Cube, remaining: set[int], variables: int) -> int:
    return sum(1 for m in cube.minterms(variables) if m in remaining)


def cover(minterms: Iterable[int], variables: int) -> tuple[Cube, ...]:
    """Sum-of-products cover of a set of assignments over the bits of ``variables``.

    Prime implicants are generated Quine-McCluskey style and picked greedily (largest number of
    newly covered minterms first, then fewest literals). The result is sorted.

    Args:
        minterms: Assignments, each a sub-mask of ``variables``.
        variables: Mask of the bits the function depends on.

    Returns:
        Cubes whose union is exactly the given set.
    """
    remaining = set(minterms)
    if not remaining:
        return ()
    if len(remaining) == 1 << variables.bit_count():
        return (TRUE_CUBE,)
    primes = _primes(remaining, variables)
    chosen: list[Cube] = []
    while remaining:
        best = max(primes, key=lambda c: (_gain(c, remaining, variables), -c.literals))
        chosen.append(best)
        remaining.difference_update(best.minterms(variables))
    return tuple(sorted(chosen))
