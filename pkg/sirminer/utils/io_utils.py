import numpy as np
import pandas as pd
from pandas.errors import EmptyDataError, ParserError
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union
import json
import logging
import math

from sirminer.exceptions import DegenerateError, FormatError, ParamError
from sirminer.services.series import Dataset, TimeSeriesPair

logger = logging.getLogger(__name__)

STANDARDIZE_MODES = ("none", "zscore", "monthly", "monthly_anomaly")

def load_csv(source) -> Dataset:
    """
    Read a table whose first column is `t` and whose other columns are numeric
    series. Cells are parsed with float() so values round-trip exactly.
    """
    try:
        raw = pd.read_csv(source, header=None, dtype=str, keep_default_na=False, skipinitialspace=True)
    except EmptyDataError:
        raise FormatError("empty input")
    except ParserError as e:
        raise FormatError(f"ragged rows: {str(e)}")
    except UnicodeDecodeError as e:
        raise FormatError(f"input is not UTF-8 text: {str(e)}")

    header = [str(name).strip() for name in raw.iloc[0].tolist()]
    if not header or header[0] != "t":
        raise FormatError("first column must be named 't'")
    names = header[1:]
    if not names:
        raise FormatError("no series columns after 't'")
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates or "t" in names:
        raise FormatError(f"duplicate series names: {duplicates or ['t']}")

    body = raw.iloc[1:]
    if len(body) == 0:
        raise FormatError("no data rows")

    columns: Dict[str, List[float]] = {name: [] for name in names}
    labels = []
    for row_number, row in enumerate(body.itertuples(index=False), start=2):
        cells = list(row)
        labels.append(cells[0])
        for name, cell in zip(names, cells[1:]):
            if cell is None or (isinstance(cell, float) and math.isnan(cell)) or str(cell).strip() == "":
                raise FormatError(f"missing value at row {row_number}, column '{name}'")
            try:
                value = float(cell)
            except ValueError:
                raise FormatError(f"non-numeric value '{cell}' at row {row_number}, column '{name}'")
            if not math.isfinite(value):
                raise FormatError(f"non-finite value at row {row_number}, column '{name}'")
            columns[name].append(value)

    frame = pd.DataFrame(columns, index=pd.Index(labels, name="t"))
    logger.info(f"📥 Loaded {len(names)} series x {len(frame)} timestamps")
    return Dataset(frame)

def dump_csv(dataset: Dataset, target):
    """Inverse of load_csv; floats are written in shortest round-trip form"""
    frame = dataset.frame.reset_index()
    lines = [",".join(["t"] + dataset.names)]
    for row in frame.itertuples(index=False):
        label, *values = row
        lines.append(",".join([str(label)] + [repr(float(value)) for value in values]))
    text = "\n".join(lines) + "\n"

    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8") as handle:
            handle.write(text)

def write_pair_csv(pair: TimeSeriesPair, target, x_name: str = "x", y_name: str = "y"):
    frame = pd.DataFrame({x_name: pair.x, y_name: pair.y}, index=pd.Index([str(t) for t in range(pair.n)], name="t"))
    dump_csv(Dataset(frame), target)

def standardize(series: Sequence[float], mode: str = "zscore") -> np.ndarray:
    """
    zscore: subtract the mean, divide by the population standard deviation.
    monthly / monthly_anomaly: remove each month-of-year mean (phase t mod 12)
    first, then zscore.
    """
    values = np.asarray(series, dtype=np.float64)
    if mode == "none":
        return values
    if mode in ("monthly", "monthly_anomaly"):
        values = values.copy()
        for phase in range(12):
            chunk = values[phase::12]
            if len(chunk):
                values[phase::12] = chunk - chunk.mean()
    elif mode != "zscore":
        raise ParamError(f"unknown standardization '{mode}', expected one of {STANDARDIZE_MODES}")

    centered = values - values.mean()
    std = float(np.sqrt(np.mean(centered ** 2)))
    scale = max(1.0, float(np.max(np.abs(values))) if len(values) else 1.0)
    if std <= 1e-12 * scale:
        raise DegenerateError("series has zero variance")
    return centered / std

def load_pairs_csv(source) -> List[Tuple[str, str]]:
    """Candidate pairs file with header `a,b`"""
    try:
        frame = pd.read_csv(source, dtype=str, keep_default_na=False, skipinitialspace=True)
    except (EmptyDataError, ParserError) as e:
        raise FormatError(f"unreadable pairs file: {str(e)}")
    if list(frame.columns[:2]) != ["a", "b"]:
        raise FormatError("pairs file header must be 'a,b'")
    return [(row.a.strip(), row.b.strip()) for row in frame.itertuples(index=False)]

def write_json(payload: Dict[str, Any], target):
    with open(target, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2)
        handle.write("\n")

def write_jsonl(rows: Iterable[Dict[str, Any]], target):
    with open(target, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(json.dumps(row) + "\n")

def read_jsonl(source) -> List[Dict[str, Any]]:
    rows = []
    with open(source, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                rows.append(json.loads(line))
            except json.JSONDecodeError as e:
                raise FormatError(f"invalid JSON on line {line_number}: {str(e)}")
    return rows

def write_frame(frame: pd.DataFrame, target):
    frame.to_csv(target, index=False)
