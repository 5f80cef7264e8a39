"""Log-space representation of strictly positive quantities."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class LogValue:
    """A strictly positive number stored as its natural logarithm.

    Quantities like F_n(lambda) and L(lambda)^n span thousands of orders
    of magnitude in n, so everything downstream works with ln values and
    exponentiates only at output boundaries.
    """

    ln_value: float

    def __post_init__(self):
        if not math.isfinite(self.ln_value):
            raise ValueError(f"ln_value must be finite, got {self.ln_value!r}")

    @property
    def value(self) -> float:
        """The represented positive number; may overflow to inf for large logs."""
        return math.exp(self.ln_value)
