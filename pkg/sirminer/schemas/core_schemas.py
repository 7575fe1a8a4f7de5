from pydantic import BaseModel, Field, ConfigDict, field_validator
from typing import Optional, List, Dict, Any
from enum import Enum
import math

class MeasureKind(str, Enum):
    """Relationship measures, all in "higher is stronger" orientation"""
    AP = "ap"
    NAP = "nap"
    MSE = "mse"
    PEARSON = "pearson"  # full-length filtering only, never a mining measure

    @property
    def is_qualifying(self) -> bool:
        return self in QUALIFYING_MEASURES

QUALIFYING_MEASURES = frozenset({MeasureKind.AP, MeasureKind.NAP, MeasureKind.MSE})

class Interval(BaseModel):
    """Inclusive 0-based timestamp range [s, e]"""
    model_config = ConfigDict(frozen=True)

    s: int = Field(..., ge=0)
    e: int = Field(..., ge=0)

    @field_validator("e")
    @classmethod
    def _end_not_before_start(cls, e: int, info) -> int:
        s = info.data.get("s")
        if s is not None and e < s:
            raise ValueError(f"interval end {e} precedes start {s}")
        return e

    @property
    def length(self) -> int:
        return self.e - self.s + 1

    def overlaps(self, other: "Interval") -> bool:
        return self.s <= other.e and other.s <= self.e

    def covers(self, s: int, e: int) -> bool:
        return self.s <= s and e <= self.e

    def __str__(self) -> str:
        return f"[{self.s},{self.e}]"

class MiningParams(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    measure: MeasureKind = MeasureKind.NAP
    tau: float = 1.0
    l_min: int = Field(6, ge=1, alias="lmin")

    @field_validator("tau")
    @classmethod
    def _finite_tau(cls, tau: float) -> float:
        if not math.isfinite(tau):
            raise ValueError(f"tau must be finite, got {tau}")
        return tau

    def to_dict(self) -> Dict[str, Any]:
        return {"measure": self.measure.value, "tau": self.tau, "lmin": self.l_min}

class SirSolution(BaseModel):
    """Selected intervals of one pair with their strengths"""
    model_config = ConfigDict(frozen=True)

    params: MiningParams
    intervals: List[Interval] = Field(default_factory=list)
    strengths: List[float] = Field(default_factory=list)
    sum_length: int = 0
    n: Optional[int] = None

    @classmethod
    def from_selection(cls, params: MiningParams, selected: List[tuple], n: Optional[int] = None) -> "SirSolution":
        """Build from (s, e, strength) triples in any order"""
        ordered = sorted(selected)
        return cls(
            params=params,
            intervals=[Interval(s=s, e=e) for s, e, _ in ordered],
            strengths=[strength for _, _, strength in ordered],
            sum_length=sum(e - s + 1 for s, e, _ in ordered),
            n=n,
        )

    @property
    def coverage(self) -> Optional[float]:
        """Fraction of the series covered by the selected intervals"""
        if not self.n:
            return None
        return self.sum_length / self.n

    def spans(self) -> List[tuple]:
        return [(iv.s, iv.e) for iv in self.intervals]

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "params": self.params.to_dict(),
            "intervals": [
                {"s": iv.s, "e": iv.e, "strength": strength}
                for iv, strength in zip(self.intervals, self.strengths)
            ],
            "sum_length": self.sum_length,
        }
        if self.n is not None:
            payload["n"] = self.n
            payload["coverage"] = self.coverage
        return payload

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "SirSolution":
        params = MiningParams(**payload["params"])
        rows = payload.get("intervals", [])
        return cls(
            params=params,
            intervals=[Interval(s=row["s"], e=row["e"]) for row in rows],
            strengths=[float(row["strength"]) for row in rows],
            sum_length=int(payload["sum_length"]),
            n=payload.get("n"),
        )

class WeaknessProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    left_weak: List[bool]
    right_weak: List[bool]
    partition_points: List[int]
    visits: int = 0  # timestamps touched by both scans

    @property
    def n(self) -> int:
        return len(self.left_weak)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "left_weak": [t for t, flag in enumerate(self.left_weak) if flag],
            "right_weak": [t for t, flag in enumerate(self.right_weak) if flag],
            "cuts": list(self.partition_points),
        }

class PartitionStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    segments: List[Interval] = Field(default_factory=list)
    solved_segments: int = 0
    skipped_segments: int = 0
    max_partition_k: int = 0
