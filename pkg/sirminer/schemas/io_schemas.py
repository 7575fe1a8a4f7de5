from pydantic import BaseModel, Field, ConfigDict, model_validator
from typing import Optional, List, Dict, Any

from sirminer.schemas.core_schemas import Interval, SirSolution

class PlantedWindow(BaseModel):
    model_config = ConfigDict(frozen=True)

    interval: Interval
    polarity: int = Field(1, description="+1 plants positive products, -1 negative ones")

    @model_validator(mode="after")
    def _unit_polarity(self) -> "PlantedWindow":
        if self.polarity not in (1, -1):
            raise ValueError(f"polarity must be +1 or -1, got {self.polarity}")
        return self

class SynthSpec(BaseModel):
    """Synthetic pair with planted strong windows"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    planted: List[PlantedWindow] = Field(default_factory=list)
    background_amplitude: float = Field(0.2, ge=0.0)
    planted_margin: float = 0.5
    seed: int = 0

class BenchRow(BaseModel):
    length: int
    pairs: int
    dp_total_ms: float
    pdp_total_ms: float
    max_partition_k: int

class BenchReport(BaseModel):
    rows: List[BenchRow] = Field(default_factory=list)
    dp_slope: float
    pdp_slope: float
    dp_monotone: bool = True
    machine: Dict[str, Any] = Field(default_factory=dict)

class BatchRecord(BaseModel):
    """One line of a batch result file"""
    id: str
    solution: Optional[SirSolution] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        if self.error is not None:
            return {"id": self.id, "error": self.error}
        return {"id": self.id, "solution": self.solution.to_dict()}

class ActivityProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    window_len: int = Field(..., ge=1)
    scores: List[float]

    @property
    def n_windows(self) -> int:
        return len(self.scores)

class SweepCell(BaseModel):
    tau: float
    l_min: int
    sum_length: int
    intervals: int
