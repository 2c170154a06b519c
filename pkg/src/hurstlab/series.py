"""The Series container shared by samplers and estimators."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError

INCREMENTS = "increments"
LEVELS = "levels"
_KINDS = (INCREMENTS, LEVELS)


@dataclass(frozen=True, eq=False)
class Series:
    """An ordered sequence of finite real observations.

    ``kind`` records whether the values are increments (returns) or levels
    (an integrated path); estimators check it so that cumulation is never
    applied twice.
    """

    values: np.ndarray = field(repr=False)
    kind: str = INCREMENTS

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise ParameterError(f"series must be one-dimensional, got shape {values.shape}")
        if values.size < 1:
            raise ParameterError("series must contain at least one observation")
        if not np.isfinite(values).all():
            raise ParameterError("series contains non-finite values")
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown series kind {self.kind!r}; expected one of {_KINDS}")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)
