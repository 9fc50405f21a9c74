"""Gate-level circuit models."""

import math
from typing import Annotated, List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class XLayer(BaseModel):
    """Parallel X gates on the listed qubits (1-based, qubit 1 is the most significant bit)."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["x_layer"] = "x_layer"
    targets: Tuple[int, ...]

    @field_validator("targets")
    @classmethod
    def sort_targets(cls, v) -> Tuple[int, ...]:
        return tuple(sorted(set(v)))


class ControlledPhase(BaseModel):
    """Phase e^{i angle} on |1...1>, identity elsewhere; acts on every qubit."""
    model_config = ConfigDict(frozen=True)

    kind: Literal["cphase"] = "cphase"
    angle: float

    @field_validator("angle")
    @classmethod
    def reduce_angle(cls, v) -> float:
        return float(v) % (2 * math.pi)


class HadamardAll(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["hadamard_all"] = "hadamard_all"


class PostSelectAllZero(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["postselect"] = "postselect"


Gate = Annotated[
    Union[XLayer, ControlledPhase, HadamardAll, PostSelectAllZero],
    Field(discriminator="kind"),
]


class GateCircuit(BaseModel):
    """Ordered gate list on num_qubits qubits."""
    model_config = ConfigDict(frozen=True)

    num_qubits: int = Field(ge=1)
    gates: List[Gate] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_gates(self):
        for position, gate in enumerate(self.gates):
            if isinstance(gate, XLayer) and any(
                not 1 <= q <= self.num_qubits for q in gate.targets
            ):
                raise ValueError(
                    f"X layer targets {gate.targets} outside qubits 1..{self.num_qubits}"
                )
            if isinstance(gate, PostSelectAllZero) and position != len(self.gates) - 1:
                raise ValueError("post-selection may only be the final gate")
        return self

    def __add__(self, other: "GateCircuit") -> "GateCircuit":
        if other.num_qubits != self.num_qubits:
            raise ValueError("cannot join circuits on different qubit counts")
        return GateCircuit(num_qubits=self.num_qubits, gates=[*self.gates, *other.gates])
