"""Brute-force LTL semantics on ultimately periodic words.

Used as an independent oracle for the automaton constructions.
"""

from collections.abc import Sequence

from .formula import Formula, Op


def holds(f: Formula, prefix: Sequence[int], loop: Sequence[int]) -> bool:
    """Whether ``prefix · loop^ω`` satisfies ``f`` at position 0.

    Args:
        f: Any formula, bi-implications included.
        prefix: Finite prefix of letters (bit masks).
        loop: Non-empty repeated part.

    Raises:
        ValueError: If ``loop`` is empty.
    """
    if not loop:
        raise ValueError("The loop of a lasso word must be non-empty")
    letters = list(prefix) + list(loop)
    n = len(letters)
    succ = [i + 1 if i + 1 < n else len(prefix) for i in range(n)]
    memo: dict[Formula, list[bool]] = {}

    def fixpoint(a: list[bool], b: list[bool], least: bool) -> list[bool]:
        values = [not least] * n
        changed = True
        while changed:
            changed = False
            for i in reversed(range(n)):
                if least:
                    new = b[i] or (a[i] and values[succ[i]])
                else:
                    new = b[i] and (a[i] or values[succ[i]])
                if new != values[i]:
                    values[i] = new
                    changed = True
        return values

    def evaluate(g: Formula) -> list[bool]:
        cached = memo.get(g)
        if cached is not None:
            return cached
        if g.op is Op.TRUE or g.op is Op.FALSE:
            values = [g.op is Op.TRUE] * n
        elif g.op is Op.LIT:
            values = [bool(letter >> g.prop & 1) == g.positive for letter in letters]
        elif g.op is Op.AND:
            parts = [evaluate(c) for c in g.children]
            values = [all(p[i] for p in parts) for i in range(n)]
        elif g.op is Op.OR:
            parts = [evaluate(c) for c in g.children]
            values = [any(p[i] for p in parts) for i in range(n)]
        elif g.op is Op.IFF:
            left, right = evaluate(g.left), evaluate(g.right)
            values = [left[i] == right[i] for i in range(n)]
        elif g.op is Op.NEXT:
            child = evaluate(g.left)
            values = [child[succ[i]] for i in range(n)]
        else:
            values = fixpoint(evaluate(g.left), evaluate(g.right), least=g.op is Op.UNTIL)
        memo[g] = values
        return values

    return evaluate(f)[0]
