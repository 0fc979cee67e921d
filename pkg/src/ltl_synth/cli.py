"""Command-line interface for LTL Synth."""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from .core.config import get_settings
from .core.exceptions import SynthesisError
from .core.models import (
    CompletionMode,
    EncodingMode,
    ExplorationStrategy,
    OutputFormat,
    SpecFile,
    SynthesisMode,
    SynthesisOptions,
)
from .engine import synthesize
from .extract import (
    build_controller,
    dump_mealy,
    extract_mealy,
    read_aiger,
    reduce_mealy,
    to_mealy,
    write_aiger,
)
from .ltl.alphabet import Alphabet
from .ltl.parser import parse
from .verify import quality, verify_controller

EXIT_REALIZABLE = 10
EXIT_UNREALIZABLE = 20
EXIT_ERROR = 1
EXIT_VERIFY_FAILED = 2


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    settings = get_settings()
    parser = argparse.ArgumentParser(
        description="Reactive synthesis from LTL specifications.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )

    # Problem (spec file or formula)
    problem_group = parser.add_mutually_exclusive_group(required=True)
    problem_group.add_argument(
        "--formula",
        type=str,
        help="Formula text",
    )
    problem_group.add_argument(
        "--file",
        "-f",
        type=Path,
        help="Specification file with INPUTS:, OUTPUTS: and LTL: sections",
    )
    parser.add_argument(
        "--ins",
        type=str,
        help="Comma-separated input propositions (overrides the file)",
    )
    parser.add_argument(
        "--outs",
        type=str,
        help="Comma-separated output propositions (overrides the file)",
    )

    # Engine options
    parser.add_argument(
        "--mode",
        type=str,
        choices=[mode.value for mode in SynthesisMode],
        default=SynthesisMode.REALIZABILITY.value,
        help="Stop at the verdict or also construct a controller",
    )
    parser.add_argument(
        "--exploration",
        type=str,
        choices=[strategy.value for strategy in ExplorationStrategy],
        default=settings.EXPLORATION,
        help="Exploration strategy",
    )
    parser.add_argument(
        "--max-states",
        type=int,
        default=settings.MAX_STATES,
        help="Limit on explored environment nodes",
    )

    # Controller options
    parser.add_argument(
        "--output",
        type=str,
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.AAG.value,
        help="Controller format in synthesis mode",
    )
    parser.add_argument(
        "--encoding",
        type=str,
        choices=[mode.value for mode in EncodingMode],
        default=EncodingMode.PORTFOLIO.value,
        help="State encoding of the circuit",
    )
    parser.add_argument(
        "--reduce",
        action="store_true",
        help="Merge compatible Mealy states before encoding",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        help="Model check the controller against the specification",
    )
    parser.add_argument(
        "--output-file",
        "-o",
        type=Path,
        help="Write the controller here instead of stdout",
    )
    parser.add_argument(
        "--reference-size",
        type=int,
        help="Print quality points of the circuit against this reference size",
    )

    # Reporting
    parser.add_argument(
        "--stats",
        action="store_true",
        help="Print exploration and solver statistics",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Enable verbose output",
    )

    return parser.parse_args(argv)


def _names(raw: str) -> list[str]:
    return [name.strip() for name in raw.split(",") if name.strip()]


def load_problem(args: argparse.Namespace) -> SpecFile:
    """Specification from ``--file`` or ``--formula``, with ``--ins``/``--outs`` applied."""
    if args.file is not None:
        problem = SpecFile.from_text(args.file.read_text(encoding="utf-8"))
    else:
        problem = SpecFile(formula=args.formula)
    updates = {}
    if args.ins is not None:
        updates["inputs"] = _names(args.ins)
    if args.outs is not None:
        updates["outputs"] = _names(args.outs)
    if updates:
        problem = SpecFile.model_validate({**problem.model_dump(), **updates})
    return problem


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the exit code.

    Returns:
        10 if realizable, 20 if unrealizable, 2 if ``--verify`` rejects the controller and 1 on
        errors.
    """
    args = parse_args(argv)
    settings = get_settings()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.LOG_LEVEL,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    try:
        problem = load_problem(args)
        alphabet = Alphabet(inputs=tuple(problem.inputs), outputs=tuple(problem.outputs))
        formula = parse(problem.formula, alphabet)
        options = SynthesisOptions(
            exploration=ExplorationStrategy(args.exploration),
            max_states=args.max_states,
            bfs_layer_mode=settings.BFS_LAYER_MODE,
            check_progress=settings.SOLVER_CHECK_PROGRESS,
        )
        if args.verbose:
            print(f"{settings.APP_NAME} {settings.APP_VERSION}", file=sys.stderr)
            print(
                f"Inputs: {list(alphabet.inputs)}, outputs: {list(alphabet.outputs)}",
                file=sys.stderr,
            )

        outcome = synthesize(formula, alphabet, options)
        print("REALIZABLE" if outcome.realizable else "UNREALIZABLE")
        if args.stats:
            for line in outcome.stats.lines():
                print(line)
        code = EXIT_REALIZABLE if outcome.realizable else EXIT_UNREALIZABLE

        output = OutputFormat(args.output)
        if (
            SynthesisMode(args.mode) is not SynthesisMode.SYNTHESIS
            or not outcome.realizable
            or output is OutputFormat.NONE
        ):
            return code

        machine = extract_mealy(outcome.arena, outcome.strategy, alphabet)
        if output is OutputFormat.MEALY:
            if args.reduce:
                machine = reduce_mealy(machine)
            artifact = dump_mealy(machine)
            checked, mode = machine, CompletionMode.ALL
        else:
            controller = build_controller(
                machine, EncodingMode(args.encoding), outcome.handle, reduce=args.reduce
            )
            artifact = write_aiger(controller.circuit)
            checked = to_mealy(read_aiger(artifact), alphabet)
            mode = CompletionMode.DEFAULT
            if args.verbose:
                print(
                    f"Controller {controller.label}: {controller.machine.n_states} state(s), "
                    f"size {controller.size}",
                    file=sys.stderr,
                )
            if args.reference_size is not None:
                score = quality(controller.size, args.reference_size)
                print(f"quality: {score.points:.3f}")
        _emit(artifact, args.output_file)

        if args.verify and not verify_controller(checked, outcome.handle, mode):
            print("Error: controller verification failed", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        return code

    except (SynthesisError, ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback

            traceback.print_exc()
        return EXIT_ERROR


def main() -> None:
    """Run the synthesis CLI."""
    sys.exit(run())


if __name__ == "__main__":
    main()
