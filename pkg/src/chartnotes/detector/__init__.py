"""Peak/valley detection ranked by topological persistence.

Prominence is measured with a watershed sweep over the series: drain the
relief from the top and record how long each peak stays an independent
island before merging into a higher one. The sweep itself lives in a
compiled kernel when available (``_kernel_cy``), with a pure-Python
fallback selected at import time; ``KERNEL`` names the one in use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..errors import NonFiniteValue, TooShort
from ..model import GLOBAL, Feature, FeatureKind, PointLocus, TimeSeries, _Global

try:
    from . import _kernel_cy as _kernel

    KERNEL = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    from . import _kernel_py as _kernel

    KERNEL = "python"

from . import _kernel_py

__all__ = [
    "KERNEL",
    "PersistencePair",
    "persistence_pairs",
    "detect_features",
]


@dataclass(frozen=True)
class PersistencePair:
    """One local maximum and how long it stayed an independent component.

    The single surviving component (the global maximum) carries the GLOBAL
    sentinel in both ``death_value`` and ``persistence``.
    """

    extremum_index: int
    birth_value: float
    death_value: Union[float, _Global]
    persistence: Union[float, _Global]

    @property
    def is_global(self) -> bool:
        return isinstance(self.persistence, _Global)


def _sort_key(pair: PersistencePair) -> tuple:
    if pair.is_global:
        return (0, 0.0, pair.extremum_index)
    return (1, -pair.persistence, pair.extremum_index)


def persistence_pairs(
    values: Sequence[float], *, _kernel_module=None
) -> list[PersistencePair]:
    """Pair every local maximum of `values` with its persistence.

    Pairs come back ordered GLOBAL first, then persistence descending
    (ties: lower extremum index first). Plateaus resolve to their leftmost
    index; endpoints count as local maxima when their single neighbor is
    lower.
    """
    if len(values) < 2:
        raise TooShort(f"need at least 2 values, got {len(values)}")
    values = [float(v) for v in values]
    for v in values:
        if not math.isfinite(v):
            raise NonFiniteValue(f"non-finite value {v!r}")
    sweep = (_kernel_module or _kernel).persistence_sweep
    pairs = []
    for index, birth, death, is_global in sweep(values):
        if is_global:
            pairs.append(PersistencePair(index, birth, GLOBAL, GLOBAL))
        else:
            pairs.append(PersistencePair(index, birth, death, birth - death))
    pairs.sort(key=_sort_key)
    return pairs


def pure_python_pairs(values: Sequence[float]) -> list[PersistencePair]:
    """persistence_pairs forced onto the pure-Python kernel (benchmarks,
    cross-kernel tests)."""
    return persistence_pairs(values, _kernel_module=_kernel_py)


def detect_features(
    series: TimeSeries,
    kind: FeatureKind = FeatureKind.PEAK,
    max_count: Optional[int] = None,
    min_prominence: float = 0.0,
) -> list[Feature]:
    """Rank the peaks (or valleys) of a series by prominence.

    Valleys are peaks of the negated series with loci mapped back. The
    global extremum always passes ``min_prominence``; ``max_count`` keeps
    the top of the ranking. Output is deterministic.
    """
    if kind not in (FeatureKind.PEAK, FeatureKind.VALLEY):
        raise ValueError(f"detector only emits peaks or valleys, not {kind.value}")
    if max_count is not None and max_count < 1:
        raise ValueError(f"max_count must be positive, got {max_count}")
    if min_prominence < 0:
        raise ValueError(f"min_prominence must be non-negative, got {min_prominence}")
    values = series.values
    if kind is FeatureKind.VALLEY:
        values = tuple(-v for v in values)
    pairs = persistence_pairs(values)
    kept = [
        pair
        for pair in pairs
        if pair.is_global or pair.persistence >= min_prominence
    ]
    if max_count is not None:
        kept = kept[:max_count]
    timestamps = series.timestamps
    return [
        Feature(
            kind=kind,
            locus=PointLocus(timestamps[pair.extremum_index]),
            prominence=GLOBAL if pair.is_global else pair.persistence,
            rank=rank,
        )
        for rank, pair in enumerate(kept, start=1)
    ]
