"""Text form of circuits, one gate per line.

    X q1 q3
    CPHASE(1.5707963267948966) all
    H all
    POSTSELECT 00
"""

import re

from pydantic import ValidationError

from app.errors import SpecParseError
from app.models import ControlledPhase, GateCircuit, HadamardAll, PostSelectAllZero, XLayer

_X_LINE = re.compile(r"^X((?:\s+q\d+)+)$")
_CPHASE_LINE = re.compile(r"^CPHASE\(([^)]+)\)\s+all$")
_POSTSELECT_LINE = re.compile(r"^POSTSELECT\s+(0+)$")


def dump_circuit(circuit: GateCircuit) -> str:
    lines = []
    for gate in circuit.gates:
        if isinstance(gate, XLayer):
            lines.append("X " + " ".join(f"q{q}" for q in gate.targets))
        elif isinstance(gate, ControlledPhase):
            lines.append(f"CPHASE({float(gate.angle)!r}) all")
        elif isinstance(gate, HadamardAll):
            lines.append("H all")
        elif isinstance(gate, PostSelectAllZero):
            lines.append("POSTSELECT " + "0" * circuit.num_qubits)
    return "\n".join(lines) + "\n"


def parse_circuit(text: str, num_qubits: int) -> GateCircuit:
    """Inverse of :func:`dump_circuit`; blank lines and '#' comments are skipped."""
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if match := _X_LINE.match(line):
            gates.append(XLayer(targets=tuple(int(t[1:]) for t in match.group(1).split())))
        elif match := _CPHASE_LINE.match(line):
            try:
                gates.append(ControlledPhase(angle=float(match.group(1))))
            except ValueError:
                raise SpecParseError(f"bad angle {match.group(1)!r}", position=lineno)
        elif line == "H all":
            gates.append(HadamardAll())
        elif match := _POSTSELECT_LINE.match(line):
            if len(match.group(1)) != num_qubits:
                raise SpecParseError(
                    f"post-selection pattern has {len(match.group(1))} bits, expected {num_qubits}",
                    position=lineno,
                )
            gates.append(PostSelectAllZero())
        else:
            raise SpecParseError(f"unrecognised gate line {line!r}", position=lineno)
    try:
        return GateCircuit(num_qubits=num_qubits, gates=gates)
    except ValidationError as e:
        raise SpecParseError(f"invalid circuit: {e.errors()[0]['msg']}")
