"""Acceptance-type classification and the annotated syntax tree."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .formula import Formula, Op, conj, disj, iff, is_always, is_eventually, is_mu, is_nu


class AcceptanceType(str, Enum):
    """Acceptance condition needed for a sub-formula: weak, Buchi, co-Buchi or parity."""

    WEAK = "W"
    BUCHI = "B"
    COBUCHI = "C"
    PARITY = "P"

    def join(self, other: AcceptanceType) -> AcceptanceType:
        """Least upper bound in the order W < B, W < C, B < P, C < P."""
        if self is other or other is AcceptanceType.WEAK:
            return self
        if self is AcceptanceType.WEAK:
            return other
        return AcceptanceType.PARITY

    def dual(self) -> AcceptanceType:
        """Type of the complement (B and C swap)."""
        if self is AcceptanceType.BUCHI:
            return AcceptanceType.COBUCHI
        if self is AcceptanceType.COBUCHI:
            return AcceptanceType.BUCHI
        return self


class Connective(str, Enum):
    AND = "and"
    OR = "or"
    IFF = "iff"
    LEAF = "leaf"


@dataclass(frozen=True)
class AnnotatedFormula:
    """Syntax tree tagged with acceptance types.

    Composite nodes keep their connective and children; leaves keep the formula they stand for.
    ``formula`` is set on every node (for composites it is the formula the subtree denotes).
    """

    kind: AcceptanceType
    connective: Connective
    formula: Formula
    children: tuple[AnnotatedFormula, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.connective is Connective.LEAF

    def leaves(self) -> list[AnnotatedFormula]:
        """Leaves in left-to-right order."""
        if self.is_leaf:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def describe(self) -> str:
        """Compact rendering such as ``B_and(W, B_and(B, B))``."""
        if self.is_leaf:
            return self.kind.value
        inner = ", ".join(child.describe() for child in self.children)
        return f"{self.kind.value}_{self.connective.value}({inner})"


def _binary(f: Formula) -> tuple[Formula, Formula]:
    # n-ary Boolean nodes are read as right-nested binary ones
    first, rest = f.children[0], f.children[1:]
    if len(rest) == 1:
        return first, rest[0]
    return first, (conj(*rest) if f.op is Op.AND else disj(*rest))


def classify(f: Formula) -> AcceptanceType:
    """Acceptance type of ``f`` by the syntactic case split.

    Co-safety and safety formulas are weak; ``G`` of a co-safety formula is Buchi; ``F`` of a
    safety formula is co-Buchi; conjunctions and disjunctions join the types of their operands;
    a bi-implication of two weak formulas is weak; anything else needs a parity condition.
    """
    if f.op is Op.IFF:
        left, right = classify(f.left), classify(f.right)
        if left is AcceptanceType.WEAK and right is AcceptanceType.WEAK:
            return AcceptanceType.WEAK
        return AcceptanceType.PARITY
    if is_mu(f) or is_nu(f):
        return AcceptanceType.WEAK
    if is_always(f) and is_mu(f.right):
        return AcceptanceType.BUCHI
    if is_eventually(f) and is_nu(f.right):
        return AcceptanceType.COBUCHI
    if f.op is Op.AND or f.op is Op.OR:
        left, right = _binary(f)
        return classify(left).join(classify(right))
    return AcceptanceType.PARITY


def _flatten(
    kind: AcceptanceType, connective: Connective, parts: list[AnnotatedFormula]
) -> list[AnnotatedFormula]:
    expanded: list[AnnotatedFormula] = []
    for part in parts:
        if part.kind is kind and part.connective is connective:
            expanded.extend(part.children)
        else:
            expanded.append(part)
    if all(child.kind is kind for child in expanded):
        return expanded
    return parts


def annotate(f: Formula) -> AnnotatedFormula:
    """Build the annotated tree of ``f``.

    Boolean connectives become composite nodes unless both operands need a parity condition, in
    which case the whole sub-formula is one parity leaf. Nested Buchi conjunctions (co-Buchi
    disjunctions) whose operands all have the same type are merged into one n-ary node.
    """
    kind = classify(f)
    if f.op not in (Op.AND, Op.OR, Op.IFF):
        return AnnotatedFormula(kind, Connective.LEAF, f)
    left_f, right_f = (f.left, f.right) if f.op is Op.IFF else _binary(f)
    left, right = annotate(left_f), annotate(right_f)
    if left.kind is AcceptanceType.PARITY and right.kind is AcceptanceType.PARITY:
        return AnnotatedFormula(AcceptanceType.PARITY, Connective.LEAF, f)
    if f.op is Op.IFF:
        return AnnotatedFormula(kind, Connective.IFF, f, (left, right))
    connective = Connective.AND if f.op is Op.AND else Connective.OR
    children = [left, right]
    if (kind, connective) in (
        (AcceptanceType.BUCHI, Connective.AND),
        (AcceptanceType.COBUCHI, Connective.OR),
    ):
        children = _flatten(kind, connective, children)
    return AnnotatedFormula(kind, connective, f, tuple(children))


def erase(alpha: AnnotatedFormula) -> Formula:
    """Drop the annotation and return the denoted formula."""
    if alpha.is_leaf:
        return alpha.formula
    parts = [erase(child) for child in alpha.children]
    if alpha.connective is Connective.IFF:
        return iff(parts[0], parts[1])
    return conj(*parts) if alpha.connective is Connective.AND else disj(*parts)
