"""Command-line run configuration."""

from typing import List, Literal, Optional

from pydantic import BaseModel, NonNegativeInt, model_validator

from app.errors import SeedRequired, ZeroShots


class RunConfig(BaseModel):
    """Arguments of one command invocation."""
    command: str
    state_path: Optional[str] = None
    generator: Optional[List[str]] = None
    n: Optional[int] = None
    m: Optional[int] = None
    theta: Optional[float] = None
    phi: Optional[float] = None
    shots: Optional[int] = None
    seed: Optional[NonNegativeInt] = None
    out: Optional[str] = None
    output_format: Literal["json", "csv"] = "json"

    @model_validator(mode="after")
    def check_sampling(self):
        # toolkit errors are not ValueErrors, so pydantic lets them through
        if self.shots is not None and self.shots < 1:
            raise ZeroShots(f"--shots must be at least 1, got {self.shots}")
        if self.shots is not None and self.seed is None:
            raise SeedRequired("--seed is required whenever --shots is given")
        return self
