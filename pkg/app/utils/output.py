"""Primary output: JSON or CSV to stdout or a file."""

import json
from pathlib import Path
from typing import Any, List, Optional, Union

import pandas as pd
from pydantic import BaseModel

Payload = Union[BaseModel, dict, List[dict], pd.DataFrame]


def _as_jsonable(payload: Payload) -> Any:
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json", by_alias=True, exclude_none=True)
    if isinstance(payload, pd.DataFrame):
        return payload.to_dict(orient="records")
    return payload


def render(payload: Payload, output_format: str = "json") -> str:
    """Serialise ``payload``; identical payloads give identical text."""
    if output_format == "csv":
        frame = payload if isinstance(payload, pd.DataFrame) else pd.json_normalize(_as_jsonable(payload))
        return frame.to_csv(index=False)
    return json.dumps(_as_jsonable(payload), indent=2) + "\n"


def emit(payload: Payload, output_format: str = "json", out: Optional[str] = None) -> str:
    """Write rendered output to ``out`` if given, otherwise return it for stdout."""
    text = render(payload, output_format)
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    return text
