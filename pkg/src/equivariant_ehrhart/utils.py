"""Utility functions for equivariant-ehrhart."""

from fractions import Fraction
from typing import Callable, Hashable, Iterable, TypeVar

T = TypeVar("T")
K = TypeVar("K", bound=Hashable)


def group_by(items: Iterable[T], key_fn: Callable[[T], K]) -> dict[K, list[T]]:
    """Group items by a key function, keeping first-seen key order.

    Example:
        >>> group_by(["ab", "c", "de"], len)
        {2: ['ab', 'de'], 1: ['c']}
    """
    result: dict[K, list[T]] = {}
    for item in items:
        result.setdefault(key_fn(item), []).append(item)
    return result


def rational_string(value) -> str:
    """Canonical "p/q" or "p" form of a rational number."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

