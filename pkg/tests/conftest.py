"""Shared fixtures: the two-client arbiter and its synthesis outcome."""

from collections.abc import Callable
from pathlib import Path

import pytest

from ltl_synth.core.models import SpecFile, SynthesisOptions
from ltl_synth.engine import SynthesisOutcome, synthesize
from ltl_synth.extract import MealyMachine, extract_mealy
from ltl_synth.ltl import Alphabet, Formula, parse

SPECS = Path(__file__).resolve().parents[1] / "specs"

ARBITER = "G (!g1 | !g2) & G (r1 -> F g1) & G (r2 -> F g2)"


@pytest.fixture
def specs_dir() -> Path:
    return SPECS


@pytest.fixture
def arbiter_alphabet() -> Alphabet:
    return Alphabet(inputs=("r1", "r2"), outputs=("g1", "g2"))


@pytest.fixture
def arbiter_formula(arbiter_alphabet: Alphabet) -> Formula:
    return parse(ARBITER, arbiter_alphabet)


@pytest.fixture
def arbiter_outcome(arbiter_formula: Formula, arbiter_alphabet: Alphabet) -> SynthesisOutcome:
    return synthesize(arbiter_formula, arbiter_alphabet, SynthesisOptions())


@pytest.fixture
def arbiter_machine(arbiter_outcome: SynthesisOutcome) -> MealyMachine:
    return extract_mealy(
        arbiter_outcome.arena, arbiter_outcome.strategy, arbiter_outcome.handle.alphabet
    )


@pytest.fixture
def load_spec() -> Callable[[str], tuple[Alphabet, Formula]]:
    """Loader for the sample specifications under ``specs/``."""

    def load(name: str) -> tuple[Alphabet, Formula]:
        problem = SpecFile.from_text((SPECS / name).read_text(encoding="utf-8"))
        alphabet = Alphabet(inputs=tuple(problem.inputs), outputs=tuple(problem.outputs))
        return alphabet, parse(problem.formula, alphabet)

    return load
