"""Argument parsing: angles, generator specs and the subcommand parser."""

import argparse
import math
import re
from typing import List, Optional

from app.errors import SpecParseError

_PI_LITERAL = re.compile(r"^([+-]?)(\d+(?:\.\d*)?)?\*?pi(?:/(\d+(?:\.\d*)?))?$")

GENERATORS = {
    "ginibre": ("d", "rank", "seed"),
    "ghz": ("N",),
    "plus": ("d",),
    "statevector": ("file",),
    "gaussian-grid": ("G", "xmin", "xmax", "center", "width"),
}


def parse_angle(text: str) -> float:
    """Accept 0, pi, -pi, pi/2, -pi/2, k*pi/j or raw radians."""
    token = text.strip().lower()
    match = _PI_LITERAL.match(token)
    if match:
        sign, numerator, denominator = match.groups()
        value = math.pi * float(numerator or 1) / float(denominator or 1)
        return -value if sign == "-" else value
    try:
        return float(token)
    except ValueError:
        raise SpecParseError(f"cannot read angle {text!r}")


def parse_generator_spec(tokens: List[str]) -> tuple:
    """Split a generator spec into its name and typed arguments.

    Positions in error messages count the generator name as 1.
    """
    if not tokens:
        raise SpecParseError("empty generator spec", position=1)
    name, args = tokens[0], tokens[1:]
    if name not in GENERATORS:
        raise SpecParseError(
            f"unknown generator {name!r}, expected one of {', '.join(GENERATORS)}", position=1
        )
    expected = GENERATORS[name]
    if len(args) != len(expected):
        raise SpecParseError(
            f"{name} takes {len(expected)} arguments ({' '.join(expected)}), got {len(args)}",
            position=min(len(args), len(expected)) + 2,
        )
    values = []
    for offset, (label, raw) in enumerate(zip(expected, args), start=2):
        if label == "file":
            values.append(raw)
            continue
        integer = label in ("d", "rank", "seed", "N", "G")
        try:
            values.append(int(raw) if integer else float(raw))
        except ValueError:
            kind = "an integer" if integer else "a number"
            raise SpecParseError(f"{label} must be {kind}, got {raw!r}", position=offset)
    return name, values


def parse_shot_grid(text: str) -> List[int]:
    try:
        return [int(float(v)) for v in text.split(",") if v.strip()]
    except ValueError:
        raise SpecParseError(f"cannot read shot grid {text!r}")


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors map onto the parse exit code."""

    def error(self, message):
        raise SpecParseError(message)


def _add_common(sub: argparse.ArgumentParser, *, indices: bool = True) -> None:
    sub.add_argument("--state", dest="state_path", help="state file (JSON)")
    if indices:
        sub.add_argument("--n", type=int)
        sub.add_argument("--m", type=int)
    sub.add_argument("--shots", type=int)
    sub.add_argument("--seed", type=int)
    sub.add_argument("--out", help="also write primary output to this file")
    sub.add_argument("--format", dest="output_format", choices=["json", "csv"])


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="phaseshift",
        description="Direct measurement of density-matrix elements by phase shifting.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    state = commands.add_parser("state", help="generate a state file")
    state.add_argument("spec", nargs="+", help="ginibre d rank seed | ghz N | plus d | "
                       "statevector FILE | gaussian-grid G xmin xmax center width")
    state.add_argument("--out")

    measure = commands.add_parser("measure", help="reconstruct one element")
    _add_common(measure)
    measure.add_argument("--plan", choices=["canonical"], default="canonical")

    circuit = commands.add_parser("circuit", help="compile and optionally verify a circuit")
    _add_common(circuit)
    circuit.add_argument("--qubits", type=int, required=True)
    circuit.add_argument("--theta", type=parse_angle, default=0.0, help="use --theta=-pi/2 for negatives")
    circuit.add_argument("--phi", type=parse_angle, default=0.0)

    full = commands.add_parser("full", help="reconstruct the whole matrix")
    _add_common(full, indices=False)

    sweep = commands.add_parser("sweep", help="shot-noise convergence table")
    _add_common(sweep)
    sweep.add_argument("--shot-grid", type=parse_shot_grid, default=[10_000, 1_000_000])
    sweep.add_argument("--repeats", type=int, default=8)

    fidelity = commands.add_parser("fidelity", help="GHZ fidelity, Bell witness or l1 coherence")
    fidelity.add_argument("kind", choices=["ghz", "bell", "l1"])
    _add_common(fidelity, indices=False)
    fidelity.add_argument("--circuit", action="store_true", help="use the circuit backend")

    cv = commands.add_parser("cv", help="reconstruct a grid-state element")
    _add_common(cv)

    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
