"""Global transitivity ratio from triangle and wedge counts."""
from __future__ import annotations

from .graph import DegreeOrder

_U64_MAX = 2**64 - 1


class CountOverflowError(ArithmeticError):
    """Wedge total exceeds 64 bits; reported instead of wrapping."""


class InconsistentCountsError(ValueError):
    """3 * triangles > wedges: the counts cannot come from the same graph."""


def wedge_count(d: DegreeOrder) -> int:
    """Number of two-edge paths: sum over vertices of C(deg, 2)."""
    total = 0
    for deg in d.degrees.tolist():
        total += deg * (deg - 1) // 2
    if total > _U64_MAX:
        raise CountOverflowError(f"wedge count {total} exceeds 64 bits")
    return total


def transitivity(triangles: int, wedges: int) -> float:
    """Fraction of wedges closed into triangles: 3t / w, 0 when w = 0."""
    if 3 * triangles > wedges:
        raise InconsistentCountsError(f"3 * {triangles} > {wedges}")
    if wedges == 0:
        return 0.0
    return 3 * triangles / wedges
