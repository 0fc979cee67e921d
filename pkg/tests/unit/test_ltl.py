"""Tests for formulas, the parser, derivatives, classification and lasso semantics."""

import gc
import weakref

import numpy as np
import pytest

from ltl_synth.core.exceptions import FormulaSyntaxError, UnknownProposition
from ltl_synth.core.models import SpecFile
from ltl_synth.ltl import (
    FALSE,
    TRUE,
    AcceptanceType,
    Alphabet,
    Formula,
    af,
    always,
    annotate,
    classify,
    conj,
    disj,
    erase,
    eventually,
    holds,
    iff,
    is_mu,
    is_nu,
    lit,
    negate,
    nxt,
    parse,
    release,
    simplify,
    to_text,
    until,
)

ALPHABET = Alphabet(inputs=("r",), outputs=("g", "h"))
R, G, H = lit(0), lit(1), lit(2)


def test_formulas_are_interned():
    """Structurally equal formulas are the same object."""
    assert conj(R, eventually(G)) is conj(lit(0), until(TRUE, lit(1)))
    assert negate(negate(always(G))) is always(G)


def test_interned_formulas_are_released():
    """Dropping the last reference frees a formula; rebuilding it interns a fresh node."""
    f = nxt(nxt(lit(20)))
    same = nxt(nxt(lit(20))) is f
    ref = weakref.ref(f)
    del f
    assert same
    gc.collect()
    assert ref() is None
    assert nxt(nxt(lit(20))).children[0] is nxt(lit(20))


def test_parse_desugars_implication_and_eventually():
    """``->`` becomes a disjunction and ``F`` an until with ``tt``."""
    assert parse("G (r -> F g)", ALPHABET) is always(disj(lit(0, False), eventually(G)))


def test_parse_is_right_associative():
    """Chains of conjunctions nest to the right."""
    assert parse("r & g & h", ALPHABET) is conj(R, conj(G, H))
    assert parse("r U g U h", ALPHABET) is until(R, until(G, H))


def test_parse_pushes_negations_to_literals():
    """Negated temporal operators are dualised."""
    assert parse("!(r U g)", ALPHABET) is release(lit(0, False), lit(1, False))
    assert parse("!G g", ALPHABET) is eventually(lit(1, False))
    assert parse("!X !r", ALPHABET) is nxt(R)


def test_parse_keeps_top_level_iff_and_expands_nested_iff():
    """Only bi-implications outside temporal operators stay bi-implications."""
    assert parse("G g <-> G h", ALPHABET) is iff(always(G), always(H))
    expanded = parse("G (r <-> g)", ALPHABET)
    assert expanded is always(disj(conj(R, G), conj(lit(0, False), lit(1, False))))


def test_parse_constants():
    """``true``/``tt`` and ``false``/``ff`` are constants."""
    assert parse("tt", ALPHABET) is TRUE
    assert parse("!true", ALPHABET) is FALSE


@pytest.mark.parametrize(
    "text",
    ["", "r &", "(r | g", "r g", "G", "r $ g", "U r"],
)
def test_parse_rejects_malformed_text(text):
    """Malformed formulas raise a syntax error."""
    with pytest.raises(FormulaSyntaxError):
        parse(text, ALPHABET)


def test_parse_reports_unknown_proposition_position():
    """The error names the proposition and where it starts."""
    with pytest.raises(UnknownProposition) as excinfo:
        parse("G (r -> F grant)", ALPHABET)
    assert excinfo.value.name == "grant"
    assert excinfo.value.position == 10


def test_to_text_round_trips(arbiter_formula, arbiter_alphabet):
    """Printing and re-parsing gives back the same formula."""
    assert parse(to_text(arbiter_formula, arbiter_alphabet), arbiter_alphabet) is arbiter_formula


def test_simplify_folds_constants_and_literals():
    """Constants, complementary literals and absorption are simplified."""
    assert simplify(conj(R, TRUE)) is R
    assert simplify(conj(R, lit(0, False))) is FALSE
    assert simplify(disj(R, conj(R, G))) is R
    assert simplify(nxt(TRUE)) is TRUE
    assert simplify(until(R, FALSE)) is FALSE
    assert simplify(release(TRUE, G)) is G


def test_simplify_is_idempotent_and_order_insensitive():
    """Children are sorted, so permutations simplify to the same formula."""
    f = simplify(conj(eventually(G), R, always(H)))
    assert simplify(f) is f
    assert simplify(conj(always(H), eventually(G), R)) is f


def test_af_of_eventually_and_always():
    """Derivatives discharge or keep temporal obligations."""
    assert af(eventually(G), 0b010) is TRUE
    assert af(eventually(G), 0) is eventually(G)
    assert af(always(G), 0) is FALSE
    assert af(always(G), 0b010) is always(G)
    assert af(nxt(R), 0) is R


def test_af_rejects_bi_implication():
    """Bi-implications have no derivative."""
    with pytest.raises(ValueError):
        af(iff(R, G), 0)


def test_fragments():
    """Co-safety formulas use only until, safety formulas only release."""
    assert is_mu(eventually(G)) and not is_nu(eventually(G))
    assert is_nu(always(G)) and not is_mu(always(G))
    assert is_mu(R) and is_nu(R)


@pytest.mark.parametrize(
    ("text", "kind"),
    [
        ("G (r -> X g)", AcceptanceType.WEAK),
        ("F (r & g)", AcceptanceType.WEAK),
        ("G F g", AcceptanceType.BUCHI),
        ("F G g", AcceptanceType.COBUCHI),
        ("G F g & G (r -> F h)", AcceptanceType.BUCHI),
        ("G F g & F G h", AcceptanceType.PARITY),
        ("G g <-> F h", AcceptanceType.WEAK),
        ("G F g <-> G h", AcceptanceType.PARITY),
    ],
)
def test_classify(text, kind):
    """The case split assigns the expected acceptance type."""
    assert classify(parse(text, ALPHABET)) is kind


def random_fragment(rng: np.random.Generator, depth: int, cosafety: bool) -> Formula:
    """Random co-safety (or safety) formula over r, g and h."""
    if depth == 0 or rng.random() < 0.2:
        return lit(int(rng.integers(0, 3)), bool(rng.random() < 0.5))
    op = int(rng.integers(0, 5))
    child = random_fragment(rng, depth - 1, cosafety)
    if op == 0:
        return nxt(child)
    if op == 1:
        return eventually(child) if cosafety else always(child)
    other = random_fragment(rng, depth - 1, cosafety)
    if op == 2:
        return conj(child, other)
    if op == 3:
        return disj(child, other)
    return until(child, other) if cosafety else release(child, other)


@pytest.mark.parametrize("cosafety", [True, False])
def test_classify_marks_every_fragment_formula_weak(cosafety):
    """Any co-safety or safety formula is weak, and so is the root of its annotation."""
    rng = np.random.default_rng(11)
    for _ in range(500):
        f = random_fragment(rng, int(rng.integers(1, 6)), cosafety)
        assert is_mu(f) if cosafety else is_nu(f)
        assert classify(f) is AcceptanceType.WEAK
        assert annotate(f).kind is AcceptanceType.WEAK


def test_annotate_arbiter_structure(arbiter_formula):
    """The arbiter splits into the weak mutex and a Buchi conjunction of the two responses."""
    alpha = annotate(arbiter_formula)
    assert alpha.describe() == "B_and(W, B_and(B, B))"
    assert len(alpha.leaves()) == 3
    assert erase(alpha) is arbiter_formula


def test_annotate_merges_nested_buchi_conjunctions():
    """Nested conjunctions of Buchi operands become one node."""
    alpha = annotate(parse("G F r & G F g & G F h", ALPHABET))
    assert alpha.describe() == "B_and(B, B, B)"


def test_annotate_keeps_two_parity_operands_together():
    """A Boolean node over two parity operands is a single parity leaf."""
    alpha = annotate(parse("(G F g & F G h) | (G F r & F G g)", ALPHABET))
    assert alpha.is_leaf
    assert alpha.kind is AcceptanceType.PARITY


def test_holds_on_lasso_words():
    """The brute-force semantics evaluates at position 0 of prefix · loop^ω."""
    g = 0b010
    assert holds(eventually(G), [], [g])
    assert not holds(always(G), [g], [0])
    assert holds(always(eventually(G)), [], [0, g])
    assert not holds(eventually(always(G)), [], [0, g])
    assert holds(until(R, G), [0b001, 0b001], [g])
    assert holds(iff(always(G), eventually(H)), [], [0])


def test_holds_requires_a_loop():
    """An empty loop is not a lasso word."""
    with pytest.raises(ValueError):
        holds(TRUE, [0], [])


def test_alphabet_letters():
    """Inputs occupy the low bits of a letter, outputs the bits above."""
    assert ALPHABET.letter(1, 0b10) == 0b101
    assert ALPHABET.split(0b101) == (1, 0b10)
    assert ALPHABET.format_letter(0b101) == "{r,h}"
    assert ALPHABET.input_mask == 0b001
    assert ALPHABET.output_mask == 0b110


def test_alphabet_rejects_shared_names():
    """A proposition cannot be input and output at once."""
    with pytest.raises(ValueError):
        Alphabet(inputs=("a",), outputs=("a",))


def test_spec_file_sections_and_comments():
    """Sections may span lines and ``#`` starts a comment."""
    problem = SpecFile.from_text(
        "# arbiter\nINPUTS: r1, r2\nOUTPUTS: g1,g2  # grants\n"
        "LTL: G (r1 -> F g1)\n  & G (r2 -> F g2)\n"
    )
    assert problem.inputs == ["r1", "r2"]
    assert problem.outputs == ["g1", "g2"]
    assert problem.formula == "G (r1 -> F g1) & G (r2 -> F g2)"


def test_spec_file_errors():
    """Missing formulas and overlapping partitions are rejected."""
    with pytest.raises(ValueError):
        SpecFile.from_text("INPUTS: a\nOUTPUTS: b\n")
    with pytest.raises(ValueError):
        SpecFile.from_text("INPUTS: a\nOUTPUTS: a\nLTL: G a\n")
    with pytest.raises(ValueError):
        SpecFile.from_text("G a\nLTL: G a\n")
