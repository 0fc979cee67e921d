"""Controller extraction: Mealy machines, state encodings and circuits."""

from .aiger import read_aiger, simulate, step, to_mealy, write_aiger
from .circuit import AigBuilder, Circuit, to_circuit
from .encoding import StateEncoding, bits_for, encode, encode_structured, encode_unstructured
from .mealy import MealyMachine, dump_mealy, extract_mealy, minimum_implicant, run
from .portfolio import Controller, build_controller, portfolio
from .reduction import reduce_mealy

__all__ = [
    "AigBuilder",
    "Circuit",
    "Controller",
    "MealyMachine",
    "StateEncoding",
    "bits_for",
    "build_controller",
    "dump_mealy",
    "encode",
    "encode_structured",
    "encode_unstructured",
    "extract_mealy",
    "minimum_implicant",
    "read_aiger",
    "reduce_mealy",
    "run",
    "simulate",
    "step",
    "to_circuit",
    "to_mealy",
    "write_aiger",
]
