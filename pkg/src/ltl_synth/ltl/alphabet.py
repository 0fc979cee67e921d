"""Input/output partition of the atomic propositions."""

from collections.abc import Iterator

from pydantic import BaseModel, ConfigDict, Field, model_validator

MAX_PROPOSITIONS = 24


class Alphabet(BaseModel):
    """Ordered input and output propositions.

    Letters are integers: bit ``k`` for ``k < n_inputs`` is input ``k``, bit ``n_inputs + j`` is
    output ``j``. Input letters and output letters are the corresponding sub-masks shifted to
    bit 0.
    """

    model_config = ConfigDict(frozen=True)

    inputs: tuple[str, ...] = Field(default=(), description="Input propositions (Ap_in)")
    outputs: tuple[str, ...] = Field(default=(), description="Output propositions (Ap_out)")

    @model_validator(mode="after")
    def validate_partition(self) -> "Alphabet":
        """Names are unique, the partition is disjoint and small enough for explicit letters."""
        names = self.inputs + self.outputs
        if len(set(names)) != len(names):
            raise ValueError("Input and output propositions must be distinct")
        if len(names) > MAX_PROPOSITIONS:
            raise ValueError(f"At most {MAX_PROPOSITIONS} propositions are supported")
        return self

    @property
    def names(self) -> tuple[str, ...]:
        return self.inputs + self.outputs

    @property
    def n_inputs(self) -> int:
        return len(self.inputs)

    @property
    def n_outputs(self) -> int:
        return len(self.outputs)

    @property
    def size(self) -> int:
        return len(self.inputs) + len(self.outputs)

    @property
    def input_mask(self) -> int:
        return (1 << self.n_inputs) - 1

    @property
    def output_mask(self) -> int:
        return ((1 << self.n_outputs) - 1) << self.n_inputs

    def index(self, name: str) -> int:
        """Proposition index of ``name``.

        Raises:
            KeyError: If the name is not part of the alphabet.
        """
        try:
            return self.names.index(name)
        except ValueError as exc:
            raise KeyError(name) from exc

    def is_input(self, prop: int) -> bool:
        return prop < self.n_inputs

    def letter(self, inputs: int, outputs: int) -> int:
        """Join an input letter and an output letter into a full letter."""
        return inputs | (outputs << self.n_inputs)

    def split(self, letter: int) -> tuple[int, int]:
        """Split a full letter into its input and output letters."""
        return letter & self.input_mask, letter >> self.n_inputs

    def input_letters(self) -> Iterator[int]:
        return iter(range(1 << self.n_inputs))

    def output_letters(self) -> Iterator[int]:
        return iter(range(1 << self.n_outputs))

    def format_letter(self, letter: int) -> str:
        """Render a full letter as the set of true propositions, e.g. ``{r1,g2}``."""
        true = [name for k, name in enumerate(self.names) if letter >> k & 1]
        return "{" + ",".join(true) + "}"
