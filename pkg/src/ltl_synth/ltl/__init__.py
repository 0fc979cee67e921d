"""LTL formulas: parsing, normalisation, derivatives, classification and annotation."""

from .alphabet import Alphabet
from .annotation import AcceptanceType, AnnotatedFormula, Connective, annotate, classify, erase
from .formula import (
    FALSE,
    TRUE,
    Formula,
    Op,
    af,
    always,
    conj,
    disj,
    eventually,
    iff,
    is_mu,
    is_nu,
    lit,
    negate,
    nxt,
    prop_mask,
    release,
    simplify,
    until,
)
from .parser import parse, to_text
from .semantics import holds

__all__ = [
    "FALSE",
    "TRUE",
    "AcceptanceType",
    "Alphabet",
    "AnnotatedFormula",
    "Connective",
    "Formula",
    "Op",
    "af",
    "always",
    "annotate",
    "classify",
    "conj",
    "disj",
    "erase",
    "eventually",
    "holds",
    "iff",
    "is_mu",
    "is_nu",
    "lit",
    "negate",
    "nxt",
    "parse",
    "prop_mask",
    "release",
    "simplify",
    "to_text",
    "until",
]
