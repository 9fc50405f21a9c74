"""JSON state files for density matrices, state vectors and grid states."""

import json
import logging
from pathlib import Path
from typing import Union

import numpy as np
from pydantic import BaseModel, ValidationError

from app.errors import SpecParseError
from app.linalg import DensityMatrix, StateVector, from_statevector, validate_density
from app.cvgrid import GridState
from app.models import DensityFile, GridFile, StateVectorFile

logger = logging.getLogger(__name__)

StoredState = Union[DensityMatrix, StateVector, GridState]


def _pairs(values) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(values).reshape(-1)]


def _complex(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)


def to_payload(state: StoredState) -> BaseModel:
    """File payload model for a state."""
    if isinstance(state, GridState):
        return GridFile(
            G=state.grid_points, x_min=state.x_min, x_max=state.x_max,
            entries=_pairs(state.rho.matrix),
        )
    if isinstance(state, StateVector):
        return StateVectorFile(dim=state.dim, amps=_pairs(state.amplitudes))
    return DensityFile(dim=state.dim, entries=_pairs(state.matrix))


class StateFileManager:
    """Reads and writes one state file."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def _read_json(self) -> dict:
        try:
            with open(self.path, 'r') as f:
                data = json.load(f)
        except FileNotFoundError:
            raise SpecParseError(f"state file {self.path} not found")
        except json.JSONDecodeError as e:
            raise SpecParseError(f"state file {self.path} is not JSON: {e.msg}", position=e.pos)
        if not isinstance(data, dict):
            raise SpecParseError(
                f"state file {self.path} must hold a JSON object, got {type(data).__name__}"
            )
        return data

    def load(self) -> StoredState:
        """Load whichever state the file holds, validating it."""
        data = self._read_json()
        try:
            if "G" in data:
                payload = GridFile(**data)
                rho = validate_density(_complex(payload.entries).reshape(payload.G, payload.G))
                state = GridState(grid_points=payload.G, x_min=payload.x_min, x_max=payload.x_max, rho=rho)
            elif "amps" in data:
                payload = StateVectorFile(**data)
                state = StateVector.from_amplitudes(_complex(payload.amps))
            else:
                payload = DensityFile(**data)
                state = validate_density(_complex(payload.entries).reshape(payload.dim, payload.dim))
        except ValidationError as e:
            raise SpecParseError(f"state file {self.path}: {e.errors()[0]['msg']}")
        logger.debug("loaded %s from %s", type(state).__name__, self.path)
        return state

    def load_density(self) -> DensityMatrix:
        """Load a density matrix; state vectors become |psi><psi|, grid states their matrix."""
        state = self.load()
        if isinstance(state, StateVector):
            return from_statevector(state)
        if isinstance(state, GridState):
            return state.rho
        return state

    def load_grid(self) -> GridState:
        state = self.load()
        if not isinstance(state, GridState):
            raise SpecParseError(f"state file {self.path} does not hold a grid state")
        return state

    def save(self, state: StoredState) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, 'w') as f:
            f.write(to_payload(state).model_dump_json())
        logger.debug("saved %s to %s", type(state).__name__, self.path)
