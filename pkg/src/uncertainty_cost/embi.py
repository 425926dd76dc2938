"""Sovereign-spread series: CSV ingestion, ratio alignment and period averages."""

from __future__ import annotations

import csv
import datetime as dt
import io
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, TextIO

from .errors import AlignmentError, InputError, InsufficientDataError, ParseError

# Period boundaries of the Colombia/Chile comparison. The split day closes period 1.
DEFAULT_START = dt.date(2007, 10, 29)
DEFAULT_SPLIT = dt.date(2018, 6, 29)
DEFAULT_END = dt.date(2024, 9, 10)


@dataclass(frozen=True)
class SpreadSeries:
    """Dated observations, strictly increasing in date.

    ``dropped`` counts dates discarded while building the series (zero
    denominators in :func:`ratio_series`); it is 0 for parsed input.
    """

    observations: tuple[tuple[dt.date, float], ...]
    label: str = ""
    dropped: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        prev = None
        for day, value in self.observations:
            if prev is not None and day <= prev:
                raise InputError(f"{self.label or 'series'}: dates must be strictly increasing ({prev} then {day})")
            if not (math.isfinite(value) and value >= 0.0):
                raise InputError(f"{self.label or 'series'}: value on {day} must be finite and non-negative")
            prev = day

    def __len__(self) -> int:
        return len(self.observations)

    @property
    def dates(self) -> list[dt.date]:
        return [d for d, _ in self.observations]

    @property
    def values(self) -> list[float]:
        return [v for _, v in self.observations]

    def as_dict(self) -> dict[dt.date, float]:
        return dict(self.observations)


@dataclass(frozen=True)
class PeriodStats:
    period_1: tuple[dt.date, dt.date]
    period_2: tuple[dt.date, dt.date]
    mean_ratio_1: float
    mean_ratio_2: float
    uplift: float
    n_1: int
    n_2: int
    method: str = "mean_of_ratios"

    def to_dict(self) -> dict[str, Any]:
        return {
            "period_1": [d.isoformat() for d in self.period_1],
            "period_2": [d.isoformat() for d in self.period_2],
            "mean_ratio_1": self.mean_ratio_1,
            "mean_ratio_2": self.mean_ratio_2,
            "uplift": self.uplift,
            "n_1": self.n_1,
            "n_2": self.n_2,
            "method": self.method,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> PeriodStats:
        def span(v: list[str]) -> tuple[dt.date, dt.date]:
            return dt.date.fromisoformat(v[0]), dt.date.fromisoformat(v[1])

        return cls(
            period_1=span(data["period_1"]),
            period_2=span(data["period_2"]),
            mean_ratio_1=float(data["mean_ratio_1"]),
            mean_ratio_2=float(data["mean_ratio_2"]),
            uplift=float(data["uplift"]),
            n_1=int(data["n_1"]),
            n_2=int(data["n_2"]),
            method=str(data.get("method", "mean_of_ratios")),
        )

    def summary(self) -> str:
        return (
            f"{self.period_1[0]}..{self.period_1[1]}: mean {self.mean_ratio_1:.2f} (n={self.n_1}); "
            f"{self.period_2[0]}..{self.period_2[1]}: mean {self.mean_ratio_2:.2f} (n={self.n_2}); "
            f"uplift {self.uplift:.0%}"
        )


def parse_spread_csv(
    stream: TextIO | str,
    label: str = "",
    date_column: str = "date",
    value_column: str = "value",
) -> SpreadSeries:
    """Read a header-led CSV of ISO dates and spreads (basis points).

    Rows may come in any order; the series is returned sorted by date.
    Blank lines are skipped. Errors carry the 1-based line number.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input: a header row is required", line=1) from None
    header = [h.strip() for h in header]
    for col in (date_column, value_column):
        if col not in header:
            raise ParseError(f"missing column {col!r} (header has {header})", line=1)
    i_date = header.index(date_column)
    i_value = header.index(value_column)

    rows: dict[dt.date, float] = {}
    first_seen: dict[dt.date, int] = {}
    for row in reader:
        line = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) <= max(i_date, i_value):
            raise ParseError(f"expected at least {max(i_date, i_value) + 1} fields, got {len(row)}", line=line)
        raw_date, raw_value = row[i_date].strip(), row[i_value].strip()
        try:
            day = dt.date.fromisoformat(raw_date)
        except ValueError:
            raise ParseError(f"malformed date {raw_date!r}", line=line) from None
        try:
            value = float(raw_value)
        except ValueError:
            raise ParseError(f"non-numeric value {raw_value!r}", line=line) from None
        if not (math.isfinite(value) and value >= 0.0):
            raise ParseError(f"value must be finite and non-negative, got {raw_value!r}", line=line)
        if day in rows:
            raise ParseError(f"duplicate date {day} (first seen on line {first_seen[day]})", line=line)
        rows[day] = value
        first_seen[day] = line
    return SpreadSeries(tuple(sorted(rows.items())), label=label)


def read_spread_csv(path: str, label: str | None = None, **kwargs: Any) -> SpreadSeries:
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_spread_csv(fh, label=path if label is None else label, **kwargs)


def to_csv(series: SpreadSeries, date_column: str = "date", value_column: str = "value") -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([date_column, value_column])
    for day, value in series.observations:
        writer.writerow([day.isoformat(), repr(value)])
    return buf.getvalue()


def ratio_series(numerator: SpreadSeries, denominator: SpreadSeries) -> SpreadSeries:
    """Date-aligned ratio ``numerator / denominator`` on the shared dates only.

    No interpolation or filling. Dates where the denominator is zero are
    dropped and counted in ``dropped``.
    """
    den = denominator.as_dict()
    shared = [(d, v) for d, v in numerator.observations if d in den]
    if not shared:
        raise AlignmentError(f"{numerator.label or 'numerator'} and {denominator.label or 'denominator'} share no dates")
    obs = []
    dropped = 0
    for day, value in shared:
        if den[day] == 0.0:
            dropped += 1
            continue
        q = value / den[day]
        if not math.isfinite(q):
            raise InputError(f"ratio on {day} overflows ({value!r} / {den[day]!r})")
        obs.append((day, q))
    label = f"{numerator.label}/{denominator.label}" if numerator.label or denominator.label else "ratio"
    return SpreadSeries(tuple(obs), label=label, dropped=dropped)


def _split_periods(start: dt.date, split: dt.date, end: dt.date) -> tuple[tuple[dt.date, dt.date], tuple[dt.date, dt.date]]:
    if not start <= split < end:
        raise InputError(f"periods require start <= split < end, got {start}, {split}, {end}")
    return (start, split), (split + dt.timedelta(days=1), end)


def _bucket(series: SpreadSeries, span: tuple[dt.date, dt.date]) -> list[float]:
    return [v for d, v in series.observations if span[0] <= d <= span[1]]


def _mean(values: list[float], name: str, span: tuple[dt.date, dt.date]) -> float:
    if not values:
        raise InsufficientDataError(f"{name} ({span[0]}..{span[1]}) has no observations")
    return math.fsum(values) / len(values)


def period_uplift(
    ratio: SpreadSeries,
    split: dt.date = DEFAULT_SPLIT,
    start: dt.date = DEFAULT_START,
    end: dt.date = DEFAULT_END,
) -> PeriodStats:
    """Mean ratio over ``[start, split]`` and ``(split, end]`` and the relative change between them."""
    p1, p2 = _split_periods(start, split, end)
    v1, v2 = _bucket(ratio, p1), _bucket(ratio, p2)
    m1 = _mean(v1, "period 1", p1)
    m2 = _mean(v2, "period 2", p2)
    return PeriodStats(p1, p2, m1, m2, m2 / m1 - 1.0, len(v1), len(v2))


def period_uplift_ratio_of_means(
    numerator: SpreadSeries,
    denominator: SpreadSeries,
    split: dt.date = DEFAULT_SPLIT,
    start: dt.date = DEFAULT_START,
    end: dt.date = DEFAULT_END,
) -> PeriodStats:
    """Alternative reading: ratio of period means of the two series (on shared dates)."""
    den = denominator.as_dict()
    shared = [(d, v, den[d]) for d, v in numerator.observations if d in den]
    if not shared:
        raise AlignmentError("numerator and denominator share no dates")
    p1, p2 = _split_periods(start, split, end)

    def ratio_of_means(span: tuple[dt.date, dt.date], name: str) -> tuple[float, int]:
        rows = [(n, d) for day, n, d in shared if span[0] <= day <= span[1]]
        mean_num = _mean([n for n, _ in rows], name, span)
        mean_den = _mean([d for _, d in rows], name, span)
        if mean_den == 0.0:
            raise InsufficientDataError(f"{name}: denominator mean is zero")
        return mean_num / mean_den, len(rows)

    m1, n1 = ratio_of_means(p1, "period 1")
    m2, n2 = ratio_of_means(p2, "period 2")
    return PeriodStats(p1, p2, m1, m2, m2 / m1 - 1.0, n1, n2, method="ratio_of_means")


def synthetic_ratio_fixture(
    low: float = 1.32,
    high: float = 1.88,
    start: dt.date = DEFAULT_START,
    split: dt.date = DEFAULT_SPLIT,
    end: dt.date = DEFAULT_END,
    weekdays_only: bool = True,
) -> SpreadSeries:
    """Daily ratio series equal to ``low`` through ``split`` and ``high`` after it."""
    obs = []
    day = start
    one = dt.timedelta(days=1)
    while day <= end:
        if not weekdays_only or day.weekday() < 5:
            obs.append((day, low if day <= split else high))
        day += one
    return SpreadSeries(tuple(obs), label="synthetic")


def series_from_pairs(pairs: Iterable[tuple[dt.date, float]], label: str = "") -> SpreadSeries:
    return SpreadSeries(tuple(sorted(pairs)), label=label)
