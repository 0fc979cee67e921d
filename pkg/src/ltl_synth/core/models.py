"""Data models shared by the engine, the extraction stage and the CLI."""

import re
from enum import Enum

from pydantic import BaseModel, Field, field_validator, model_validator

_SECTION = re.compile(r"^\s*(INPUTS|OUTPUTS|LTL)\s*:(.*)$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class Player(str, Enum):
    """The two players of the synthesis game."""

    CONTROLLER = "controller"
    ENVIRONMENT = "environment"

    @property
    def opponent(self) -> "Player":
        """The other player."""
        return Player.ENVIRONMENT if self is Player.CONTROLLER else Player.CONTROLLER


class ExplorationStrategy(str, Enum):
    """Supported exploration oracles."""

    BFS = "bfs"
    BFS_PLUS = "bfs+"
    PQ = "pq"
    PQ_PLUS = "pq+"


class SynthesisMode(str, Enum):
    """Whether to stop at the verdict or also emit a controller."""

    REALIZABILITY = "realizability"
    SYNTHESIS = "synthesis"


class OutputFormat(str, Enum):
    """Controller artefact formats."""

    MEALY = "mealy"
    AAG = "aag"
    NONE = "none"


class EncodingMode(str, Enum):
    """State encodings used when lowering a Mealy machine to a circuit."""

    UNSTRUCTURED = "unstructured"
    STRUCTURED = "structured"
    PORTFOLIO = "portfolio"


class CompletionMode(str, Enum):
    """Which completions of unspecified outputs a controller check covers."""

    DEFAULT = "default"
    ALL = "all"


class SynthesisOptions(BaseModel):
    """Options of a single engine run."""

    exploration: ExplorationStrategy = Field(
        ExplorationStrategy.BFS, description="Exploration oracle", examples=["pq"]
    )
    max_states: int = Field(
        1_000_000, ge=1, description="Limit on explored environment nodes", examples=[10_000]
    )
    bfs_layer_mode: bool = Field(
        False, description="Let bfs return a whole depth layer instead of one node"
    )
    check_progress: bool = Field(
        False, description="Assert strict distance progress after every improvement"
    )


class SynthesisStats(BaseModel):
    """Counters collected while running the engine."""

    env_nodes: int = Field(0, description="Explored environment nodes (|V_env|)")
    intermediate_nodes: int = Field(0, description="Intermediate controller nodes")
    edges: int = Field(0, description="Arena edges")
    iterations: int = Field(0, description="Main loop iterations")
    solver_calls: int = Field(0, description="Calls to the strategy-iteration solver")
    improvements: int = Field(0, description="Strategy improvement steps over all calls")
    wall_time: float = Field(0.0, description="Wall-clock seconds spent in synthesize")

    def lines(self) -> list[str]:
        """Render the counters as ``key: value`` lines."""
        return [
            f"env_nodes: {self.env_nodes}",
            f"intermediate_nodes: {self.intermediate_nodes}",
            f"edges: {self.edges}",
            f"iterations: {self.iterations}",
            f"solver_calls: {self.solver_calls}",
            f"improvements: {self.improvements}",
            f"wall_time: {self.wall_time:.3f}",
        ]


class QualityScore(BaseModel):
    """Competition quality points for a solution of size n against a reference of size r."""

    points: float = Field(..., ge=0.0, description="max(0, 2 - log10((n+1)/(r+1)))")
    size: int = Field(..., ge=0, description="Solution size n")
    reference: int = Field(..., ge=0, description="Reference size r")


def _split_names(raw: str) -> list[str]:
    return [name.strip() for name in raw.split(",") if name.strip()]


class SpecFile(BaseModel):
    """A synthesis problem: input/output partition plus one formula."""

    inputs: list[str] = Field(default_factory=list, description="Input propositions")
    outputs: list[str] = Field(default_factory=list, description="Output propositions")
    formula: str = Field(..., min_length=1, description="Formula text", examples=["G (r -> F g)"])

    @field_validator("inputs", "outputs")
    @classmethod
    def validate_names(cls, v: list[str]) -> list[str]:
        """Validate proposition names."""
        for name in v:
            if not _NAME.match(name):
                raise ValueError(f"Invalid proposition name: {name!r}")
        if len(set(v)) != len(v):
            raise ValueError("Duplicate proposition name")
        return v

    @model_validator(mode="after")
    def validate_partition(self) -> "SpecFile":
        """Inputs and outputs must be disjoint."""
        shared = set(self.inputs) & set(self.outputs)
        if shared:
            raise ValueError(f"Propositions declared as input and output: {sorted(shared)}")
        return self

    @classmethod
    def from_text(cls, text: str) -> "SpecFile":
        """Parse the ``INPUTS:`` / ``OUTPUTS:`` / ``LTL:`` format.

        Args:
            text: File contents. ``#`` starts a comment running to the end of the line.

        Returns:
            The parsed specification.

        Raises:
            ValueError: If a section is missing, repeated or content precedes all sections.
        """
        sections: dict[str, list[str]] = {}
        current: str | None = None
        for lineno, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split("#", 1)[0]
            match = _SECTION.match(line)
            if match:
                current = match.group(1)
                if current in sections:
                    raise ValueError(f"Section {current} repeated on line {lineno}")
                sections[current] = [match.group(2)]
            elif line.strip():
                if current is None:
                    raise ValueError(f"Content outside of a section on line {lineno}")
                sections[current].append(line)
        if "LTL" not in sections:
            raise ValueError("Missing LTL: section")
        return cls(
            inputs=_split_names(" ".join(sections.get("INPUTS", []))),
            outputs=_split_names(" ".join(sections.get("OUTPUTS", []))),
            formula=" ".join(part.strip() for part in sections["LTL"]).strip(),
        )
