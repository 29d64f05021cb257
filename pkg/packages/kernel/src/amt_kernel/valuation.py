"""Partial valuations shared by the theory and HT_c layers.

A valuation maps variable names to values; a missing entry stands for the
undefined value **u**. Internally it is kept as the set of defined pairs, so
``v <= w`` is literal set inclusion.
"""

from collections.abc import Iterable, Iterator, Mapping
from enum import Enum
from fractions import Fraction


class Truth(Enum):
    """The distinguished truth value assigned to true propositional variables."""

    T = "t"

    def __repr__(self) -> str:
        return "t"

    def __str__(self) -> str:
        return "t"


TRUE = Truth.T

Value = int | Fraction | Truth


def is_integral(value: object) -> bool:
    """Whether a value is an integer (``bool`` excluded)."""
    if isinstance(value, bool):
        return False
    if isinstance(value, int):
        return True
    return isinstance(value, Fraction) and value.denominator == 1


def is_numeric(value: object) -> bool:
    """Whether a value is an integer or a rational."""
    return is_integral(value) or isinstance(value, Fraction)


def format_value(value: Value) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Fraction):
        return str(value.numerator)
    return str(value)


class Valuation(Mapping[str, Value]):
    """Immutable partial map from variable names to values."""

    __slots__ = ("_data", "_pairs")

    def __init__(self, data: Mapping[str, Value] | Iterable[tuple[str, Value]] = ()) -> None:
        items = dict(data)
        for name, value in items.items():
            if isinstance(value, Fraction) and value.denominator == 1:
                items[name] = value.numerator
        self._data: dict[str, Value] = items
        self._pairs: frozenset[tuple[str, Value]] = frozenset(items.items())

    def __getitem__(self, name: str) -> Value:
        return self._data[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Valuation):
            return self._pairs == other._pairs
        return NotImplemented

    def __le__(self, other: "Valuation") -> bool:
        return self._pairs <= other._pairs

    def __lt__(self, other: "Valuation") -> bool:
        return self._pairs < other._pairs

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{k}={format_value(v)}" for k, v in self.sorted_items()) + "}"

    @property
    def pairs(self) -> frozenset[tuple[str, Value]]:
        return self._pairs

    def defined(self) -> frozenset[str]:
        """Names of the variables with a defined value."""
        return frozenset(self._data)

    def sorted_items(self) -> list[tuple[str, Value]]:
        return sorted(self._data.items())

    def restrict(self, names: Iterable[str]) -> "Valuation":
        keep = set(names)
        return Valuation({k: v for k, v in self._data.items() if k in keep})

    def without(self, names: Iterable[str]) -> "Valuation":
        drop = set(names)
        return Valuation({k: v for k, v in self._data.items() if k not in drop})

    def extend(self, other: Mapping[str, Value]) -> "Valuation":
        """Union with ``other``; ``other`` wins on shared names."""
        merged = dict(self._data)
        merged.update(other)
        return Valuation(merged)
