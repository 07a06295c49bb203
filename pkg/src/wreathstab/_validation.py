"""Input checks shared by the estimators and the CLI."""
from __future__ import annotations

import numbers
from typing import Iterable


def check_nonneg_int(value, name: str = "value") -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return int(value)


def check_int_sequence(values: Iterable, name: str = "values") -> list[int]:
    """Exact integers only; floats (even integral ones) are rejected."""
    out = []
    try:
        items = list(values)
    except TypeError:
        raise TypeError(f"{name} must be a sequence of integers") from None
    for v in items:
        if hasattr(v, "item") and not isinstance(v, numbers.Integral):
            v = v.item()
        if isinstance(v, bool) or not isinstance(v, numbers.Integral):
            raise TypeError(f"{name} must contain integers only, got {v!r}")
        out.append(int(v))
    return out
