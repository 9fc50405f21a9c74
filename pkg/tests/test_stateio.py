"""State files and primary output rendering."""

import json

import numpy as np
import pandas as pd
import pytest

from app.cvgrid import GridState, gaussian_grid_state
from app.errors import NotPSD, SpecParseError
from app.linalg import StateVector, from_statevector, ghz_state, random_density
from app.models import ElementReading
from app.utils import StateFileManager, emit, render, to_payload


def test_density_file_round_trip(tmp_path):
    rho = random_density(3, 2, 4)
    manager = StateFileManager(tmp_path / "rho.json")
    manager.save(rho)
    loaded = manager.load()
    np.testing.assert_allclose(loaded.matrix, rho.matrix, atol=1e-15)


def test_density_file_layout(tmp_path):
    path = tmp_path / "ghz.json"
    StateFileManager(path).save(from_statevector(ghz_state(2)))
    data = json.loads(path.read_text())
    assert data["dim"] == 4
    assert len(data["entries"]) == 16
    assert data["entries"][3] == pytest.approx([0.5, 0.0])


def test_statevector_file_loads_as_density(tmp_path):
    path = tmp_path / "psi.json"
    StateFileManager(path).save(ghz_state(3))
    manager = StateFileManager(path)
    assert isinstance(manager.load(), StateVector)
    assert manager.load_density().dim == 8


def test_grid_file_round_trip(tmp_path):
    state = gaussian_grid_state(32, -8.0, 8.0, 0.0, 1.0)
    path = tmp_path / "grid.json"
    StateFileManager(path).save(state)
    loaded = StateFileManager(path).load_grid()
    assert isinstance(loaded, GridState)
    assert (loaded.grid_points, loaded.x_min, loaded.x_max) == (32, -8.0, 8.0)
    np.testing.assert_allclose(loaded.rho.matrix, state.rho.matrix, atol=1e-15)


def test_load_grid_rejects_density(tmp_path):
    path = tmp_path / "rho.json"
    StateFileManager(path).save(random_density(4, 1, 0))
    with pytest.raises(SpecParseError):
        StateFileManager(path).load_grid()


def test_missing_file(tmp_path):
    with pytest.raises(SpecParseError):
        StateFileManager(tmp_path / "absent.json").load()


def test_malformed_json_reports_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2, ')
    with pytest.raises(SpecParseError) as excinfo:
        StateFileManager(path).load()
    assert excinfo.value.position is not None


def test_wrong_entry_count(tmp_path):
    path = tmp_path / "short.json"
    path.write_text(json.dumps({"dim": 2, "entries": [[1, 0], [0, 0], [0, 0]]}))
    with pytest.raises(SpecParseError):
        StateFileManager(path).load()


def test_unphysical_matrix_fails_validation(tmp_path):
    path = tmp_path / "neg.json"
    path.write_text(json.dumps({"dim": 2, "entries": [[0.5, 0], [0.6, 0], [0.6, 0], [0.5, 0]]}))
    with pytest.raises(NotPSD):
        StateFileManager(path).load()


def test_payload_kinds():
    assert "amps" in to_payload(ghz_state(2)).model_dump()
    assert "G" in to_payload(gaussian_grid_state(16, -8.0, 8.0, 0.0, 1.0)).model_dump()


def test_render_json_ends_with_newline():
    reading = ElementReading(n=0, m=1, real_part=0.25)
    text = render(reading)
    assert text.endswith("\n")
    assert json.loads(text)["real_part"] == 0.25


def test_render_csv_from_frame():
    frame = pd.DataFrame([{"M": 10, "rmse_real": 0.5}])
    assert render(frame, "csv").splitlines() == ["M,rmse_real", "10,0.5"]


def test_emit_writes_file(tmp_path):
    out = tmp_path / "nested" / "result.json"
    text = emit({"witness": -0.5}, "json", str(out))
    assert out.read_text() == text


@pytest.mark.parametrize("text", ["[[1, 0], [0, 0]]", "null", "3.5", '"rho"'])
def test_non_object_json_rejected(tmp_path, text):
    path = tmp_path / "rho.json"
    path.write_text(text)
    with pytest.raises(SpecParseError, match="JSON object"):
        StateFileManager(path).load()
