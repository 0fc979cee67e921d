"""Immutable, hash-consed LTL formulas in negation normal form.

Nodes are interned: two structurally equal formulas are the same object, so equality is
identity and hashing is constant time. Boolean connectives are n-ary; the parser produces
binary nodes and :func:`simplify` flattens and sorts them.
"""

from __future__ import annotations

from enum import IntEnum
from functools import cache, lru_cache
from threading import Lock
from weakref import WeakValueDictionary


class Op(IntEnum):
    """Node kinds. The numeric value fixes the canonical child order."""

    FALSE = 0
    TRUE = 1
    LIT = 2
    AND = 3
    OR = 4
    IFF = 5
    NEXT = 6
    UNTIL = 7
    RELEASE = 8


SortKey = tuple[object, ...]


class Formula:
    """A formula node. Build instances with the module-level constructors only."""

    __slots__ = ("op", "children", "prop", "positive", "sort_key", "__weakref__")

    op: Op
    children: tuple[Formula, ...]
    prop: int
    positive: bool
    sort_key: SortKey

    def __init__(
        self, op: Op, children: tuple[Formula, ...], prop: int, positive: bool
    ) -> None:
        self.op = op
        self.children = children
        self.prop = prop
        self.positive = positive
        self.sort_key = (int(op), prop, positive, tuple(c.sort_key for c in children))

    def __lt__(self, other: Formula) -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        return f"Formula({to_debug_text(self)})"

    @property
    def is_constant(self) -> bool:
        return self.op is Op.TRUE or self.op is Op.FALSE

    @property
    def is_temporal(self) -> bool:
        return self.op in (Op.NEXT, Op.UNTIL, Op.RELEASE)

    @property
    def left(self) -> Formula:
        return self.children[0]

    @property
    def right(self) -> Formula:
        return self.children[-1]


# entries die with the last reference to their formula
_TABLE: WeakValueDictionary[tuple[Op, int, bool, tuple[Formula, ...]], Formula] = (
    WeakValueDictionary()
)
_TABLE_LOCK = Lock()


def _make(
    op: Op, children: tuple[Formula, ...] = (), prop: int = -1, positive: bool = True
) -> Formula:
    key = (op, prop, positive, children)
    node = _TABLE.get(key)
    if node is None:
        with _TABLE_LOCK:
            node = _TABLE.setdefault(key, Formula(op, children, prop, positive))
    return node


TRUE = _make(Op.TRUE)
FALSE = _make(Op.FALSE)


def lit(prop: int, positive: bool = True) -> Formula:
    """Literal ``a`` (or ``!a`` when ``positive`` is false) over proposition index ``prop``."""
    if prop < 0:
        raise ValueError(f"Invalid proposition index: {prop}")
    return _make(Op.LIT, (), prop, positive)


def conj(*children: Formula) -> Formula:
    """Raw conjunction (no simplification)."""
    if not children:
        return TRUE
    if len(children) == 1:
        return children[0]
    return _make(Op.AND, tuple(children))


def disj(*children: Formula) -> Formula:
    """Raw disjunction (no simplification)."""
    if not children:
        return FALSE
    if len(children) == 1:
        return children[0]
    return _make(Op.OR, tuple(children))


def iff(left: Formula, right: Formula) -> Formula:
    return _make(Op.IFF, (left, right))


def nxt(child: Formula) -> Formula:
    return _make(Op.NEXT, (child,))


def until(left: Formula, right: Formula) -> Formula:
    return _make(Op.UNTIL, (left, right))


def release(left: Formula, right: Formula) -> Formula:
    return _make(Op.RELEASE, (left, right))


def eventually(child: Formula) -> Formula:
    """``F φ``, stored as ``tt U φ``."""
    return until(TRUE, child)


def always(child: Formula) -> Formula:
    """``G φ``, stored as ``ff R φ``."""
    return release(FALSE, child)


def is_eventually(f: Formula) -> bool:
    return f.op is Op.UNTIL and f.left is TRUE


def is_always(f: Formula) -> bool:
    return f.op is Op.RELEASE and f.left is FALSE


@cache
def negate(f: Formula) -> Formula:
    """Negation pushed to the literals (NNF dual).

    A bi-implication ``a <-> b`` is negated as ``a <-> !b``.
    """
    if f.op is Op.TRUE:
        return FALSE
    if f.op is Op.FALSE:
        return TRUE
    if f.op is Op.LIT:
        return lit(f.prop, not f.positive)
    if f.op is Op.AND:
        return _make(Op.OR, tuple(negate(c) for c in f.children))
    if f.op is Op.OR:
        return _make(Op.AND, tuple(negate(c) for c in f.children))
    if f.op is Op.IFF:
        return iff(f.left, negate(f.right))
    if f.op is Op.NEXT:
        return nxt(negate(f.left))
    if f.op is Op.UNTIL:
        return release(negate(f.left), negate(f.right))
    return until(negate(f.left), negate(f.right))


@cache
def prop_mask(f: Formula) -> int:
    """Bit mask of the propositions occurring in ``f``."""
    if f.op is Op.LIT:
        return 1 << f.prop
    mask = 0
    for child in f.children:
        mask |= prop_mask(child)
    return mask


@cache
def is_mu(f: Formula) -> bool:
    """Membership in the co-safety fragment (no release, no bi-implication)."""
    if f.op is Op.RELEASE or f.op is Op.IFF:
        return False
    return all(is_mu(c) for c in f.children)


@cache
def is_nu(f: Formula) -> bool:
    """Membership in the safety fragment (no until, no bi-implication)."""
    if f.op is Op.UNTIL or f.op is Op.IFF:
        return False
    return all(is_nu(c) for c in f.children)


def size(f: Formula) -> int:
    """Number of nodes of the syntax tree."""
    return 1 + sum(size(c) for c in f.children)


def depth(f: Formula) -> int:
    """Nesting depth; literals and constants have depth 0."""
    if not f.children:
        return 0
    return 1 + max(depth(c) for c in f.children)


def _absorbed(candidate: Formula, members: set[Formula], siblings: list[Formula]) -> bool:
    # candidate is a disjunction inside a conjunction (or dually)
    inner = set(candidate.children)
    if inner & members:
        return True
    for other in siblings:
        if other is not candidate and other.op is candidate.op:
            other_inner = set(other.children)
            if other_inner < inner:
                return True
    return False


def _simplify_nary(op: Op, children: tuple[Formula, ...]) -> Formula:
    unit, zero = (TRUE, FALSE) if op is Op.AND else (FALSE, TRUE)
    dual = Op.OR if op is Op.AND else Op.AND
    flat: list[Formula] = []
    for child in children:
        child = simplify(child)
        if child is zero:
            return zero
        if child is unit:
            continue
        if child.op is op:
            flat.extend(child.children)
        else:
            flat.append(child)
    unique = sorted(set(flat))
    literals = {(c.prop, c.positive) for c in unique if c.op is Op.LIT}
    if any((prop, not positive) in literals for prop, positive in literals):
        return zero
    members = set(unique)
    kept = [c for c in unique if not (c.op is dual and _absorbed(c, members, unique))]
    if not kept:
        return unit
    if len(kept) == 1:
        return kept[0]
    return _make(op, tuple(kept))


@cache
def simplify(f: Formula) -> Formula:
    """Propositional normal form used to identify automaton states.

    Folds constants (including temporal ones such as ``X tt`` and ``a U ff``), flattens nested
    conjunctions and disjunctions, removes duplicates and complementary literal pairs, applies
    absorption and sorts children canonically. The function is idempotent and deterministic.
    """
    op = f.op
    if op in (Op.TRUE, Op.FALSE, Op.LIT):
        return f
    if op is Op.AND or op is Op.OR:
        return _simplify_nary(op, f.children)
    if op is Op.IFF:
        left, right = simplify(f.left), simplify(f.right)
        if left is TRUE:
            return right
        if right is TRUE:
            return left
        if left is FALSE:
            return simplify(negate(right))
        if right is FALSE:
            return simplify(negate(left))
        if left is right:
            return TRUE
        if left is simplify(negate(right)):
            return FALSE
        return iff(*sorted((left, right)))
    if op is Op.NEXT:
        child = simplify(f.left)
        return child if child.is_constant else nxt(child)
    left, right = simplify(f.left), simplify(f.right)
    if right.is_constant or left is right:
        return right
    if op is Op.UNTIL:
        return right if left is FALSE else until(left, right)
    return right if left is TRUE else release(left, right)


def _after(f: Formula, letter: int) -> Formula:
    op = f.op
    if op is Op.TRUE or op is Op.FALSE:
        return f
    if op is Op.LIT:
        return TRUE if bool(letter >> f.prop & 1) == f.positive else FALSE
    if op is Op.AND:
        return conj(*(_after(c, letter) for c in f.children))
    if op is Op.OR:
        return disj(*(_after(c, letter) for c in f.children))
    if op is Op.NEXT:
        return f.left
    if op is Op.UNTIL:
        return disj(_after(f.right, letter), conj(_after(f.left, letter), f))
    if op is Op.RELEASE:
        return conj(_after(f.right, letter), disj(_after(f.left, letter), f))
    raise ValueError("Bi-implication cannot occur below a temporal operator")


@lru_cache(maxsize=1 << 18)
def af(f: Formula, letter: int) -> Formula:
    """Formula derivative: what remains to hold after reading ``letter``.

    Args:
        f: A formula without bi-implications.
        letter: Full letter as a proposition bit mask.

    Returns:
        The simplified "after" formula.

    Raises:
        ValueError: If ``f`` contains a bi-implication.
    """
    return simplify(_after(f, letter))


_INFIX = {Op.AND: " & ", Op.OR: " | ", Op.IFF: " <-> ", Op.UNTIL: " U ", Op.RELEASE: " R "}


def to_debug_text(f: Formula, names: tuple[str, ...] | None = None) -> str:
    """Render ``f`` in the input grammar, naming propositions ``p<k>`` unless names are given."""

    def name(prop: int) -> str:
        return names[prop] if names is not None else f"p{prop}"

    if f.op is Op.TRUE:
        return "tt"
    if f.op is Op.FALSE:
        return "ff"
    if f.op is Op.LIT:
        return name(f.prop) if f.positive else "!" + name(f.prop)
    if f.op is Op.NEXT:
        return "X " + to_debug_text(f.left, names)
    if is_eventually(f):
        return "F " + to_debug_text(f.right, names)
    if is_always(f):
        return "G " + to_debug_text(f.right, names)
    inner = _INFIX[f.op].join(to_debug_text(c, names) for c in f.children)
    return f"({inner})"
