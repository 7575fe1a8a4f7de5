import numpy as np
import pandas as pd
from typing import Dict, Iterator, List, Sequence, Tuple
import logging

from sirminer.exceptions import FormatError, ParamError

logger = logging.getLogger(__name__)

class TimeSeriesPair:
    """
    Two aligned real-valued series of equal length n.
    Immutable: the arrays are read-only and per-measure strength tables are
    cached on the instance by the measures service.
    """

    __slots__ = ("x", "y", "cache")

    def __init__(self, x: Sequence[float], y: Sequence[float]):
        x_arr = np.array(x, dtype=np.float64)
        y_arr = np.array(y, dtype=np.float64)

        if x_arr.ndim != 1 or y_arr.ndim != 1:
            raise FormatError("series must be one-dimensional")
        if len(x_arr) != len(y_arr):
            raise FormatError(f"series lengths differ: {len(x_arr)} vs {len(y_arr)}")
        if len(x_arr) == 0:
            raise FormatError("series must contain at least one timestamp")
        if not (np.isfinite(x_arr).all() and np.isfinite(y_arr).all()):
            raise FormatError("series contain NaN or infinite values")

        x_arr.setflags(write=False)
        y_arr.setflags(write=False)
        self.x = x_arr
        self.y = y_arr
        self.cache: Dict = {}

    @property
    def n(self) -> int:
        return len(self.x)

    def reversed(self) -> "TimeSeriesPair":
        return TimeSeriesPair(self.x[::-1], self.y[::-1])

    def __repr__(self) -> str:
        return f"TimeSeriesPair(n={self.n})"

class PairSet:
    """Candidate pairs sharing a common length, in input order"""

    def __init__(self, pairs: List[Tuple[str, TimeSeriesPair]]):
        ids = [pair_id for pair_id, _ in pairs]
        if len(set(ids)) != len(ids):
            raise ParamError("pair ids must be unique")

        lengths = {pair.n for _, pair in pairs}
        if len(lengths) > 1:
            raise ParamError(f"pairs have differing lengths: {sorted(lengths)}")

        self.pairs = list(pairs)
        self.n = lengths.pop() if lengths else 0

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[str, TimeSeriesPair]]:
        return iter(self.pairs)

    def ids(self) -> List[str]:
        return [pair_id for pair_id, _ in self.pairs]

class Dataset:
    """Named equal-length series loaded from a table with a leading `t` column"""

    def __init__(self, frame: pd.DataFrame):
        if frame.columns.duplicated().any():
            raise FormatError("duplicate series names")
        self.frame = frame.astype(np.float64)

    @property
    def names(self) -> List[str]:
        return list(self.frame.columns)

    @property
    def n(self) -> int:
        return len(self.frame)

    def column(self, name: str) -> np.ndarray:
        if name not in self.frame.columns:
            raise FormatError(f"unknown series '{name}'")
        return self.frame[name].to_numpy()
