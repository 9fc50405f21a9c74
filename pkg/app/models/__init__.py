"""Data models shared across the toolkit."""

from .protocol import (
    PhaseSetting,
    ReconstructionPlan,
    ElementEstimate,
    ElementDiagnostics,
    ExpectationAudit,
    ContrastCheck,
    CANONICAL_THETAS,
    CANONICAL_PHIS,
)

from .circuit import (
    Gate,
    GateCircuit,
    XLayer,
    ControlledPhase,
    HadamardAll,
    PostSelectAllZero,
)

from .sampling import ShotRecord, NoisyElementEstimate
from .reports import ElementReading, FidelityReport
from .files import DensityFile, StateVectorFile, GridFile
from .run import RunConfig

__all__ = [
    "PhaseSetting",
    "ReconstructionPlan",
    "ElementEstimate",
    "ElementDiagnostics",
    "ExpectationAudit",
    "ContrastCheck",
    "CANONICAL_THETAS",
    "CANONICAL_PHIS",
    "Gate",
    "GateCircuit",
    "XLayer",
    "ControlledPhase",
    "HadamardAll",
    "PostSelectAllZero",
    "ShotRecord",
    "NoisyElementEstimate",
    "ElementReading",
    "FidelityReport",
    "DensityFile",
    "StateVectorFile",
    "GridFile",
    "RunConfig",
]
