"""Step sequences, height profiles and path families.

A path is stored as its text form, one character per step from ``U``, ``D``
and ``F``. Points are indexed by step count: point ``i`` sits after ``i``
steps, and its height is ``#U - #D`` among the first ``i`` steps. Dyck,
Motzkin and Schroeder paths therefore share one geometry.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator

__all__ = [
    "Step",
    "Path",
    "FamilyKind",
    "Family",
    "PathError",
    "InvalidCharacter",
    "IndexOutOfRange",
    "parse_path",
    "format_path",
    "heights",
    "is_member",
    "mirror",
    "split_at",
]


class PathError(ValueError):
    """Base class for domain errors raised by this package."""


class InvalidCharacter(PathError):
    def __init__(self, position: int, char: str = "") -> None:
        self.position = position
        super().__init__(f"invalid step character {char!r} at position {position}")


class IndexOutOfRange(PathError):
    pass


class Step(str, enum.Enum):
    UP = "U"
    DOWN = "D"
    FLAT = "F"

    @property
    def delta(self) -> int:
        return _DELTA[self.value]


_DELTA = {"U": 1, "D": -1, "F": 0}
_ALPHABET = frozenset(_DELTA)
_MIRROR = str.maketrans("UD", "DU")


@dataclass(frozen=True, order=True)
class Path:
    """Immutable step sequence; ``text`` holds one of ``UDF`` per step."""

    text: str = ""

    def __post_init__(self) -> None:
        if not _ALPHABET.issuperset(self.text):
            for i, c in enumerate(self.text):
                if c not in _ALPHABET:
                    raise InvalidCharacter(i, c)

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[Step]:
        return (Step(c) for c in self.text)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Path(self.text[index])
        return Step(self.text[index])

    def __add__(self, other: Path) -> Path:
        return Path(self.text + other.text)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Path({self.text!r})"

    @property
    def steps(self) -> list[Step]:
        return list(self)

    def count(self, step: Step | str) -> int:
        return self.text.count(Step(step).value)

    @classmethod
    def from_steps(cls, steps) -> Path:
        return cls("".join(Step(s).value for s in steps))


class FamilyKind(enum.Enum):
    DYCK = "dyck"
    MOTZKIN = "motzkin"
    SCHROEDER = "schroeder"
    SUPER_DYCK = "super-dyck"
    SUPER_MOTZKIN = "super-motzkin"
    SUPER_SCHROEDER = "super-schroeder"

    @property
    def is_super(self) -> bool:
        return self.value.startswith("super-")

    @property
    def base(self) -> FamilyKind:
        """The nonnegative family this kind belongs to."""
        return FamilyKind(self.value.removeprefix("super-"))

    @property
    def super_variant(self) -> FamilyKind:
        return FamilyKind("super-" + self.base.value)


@dataclass(frozen=True)
class Family:
    kind: FamilyKind
    order: int

    def __post_init__(self) -> None:
        if not isinstance(self.kind, FamilyKind):
            object.__setattr__(self, "kind", FamilyKind(self.kind))
        if self.order < 0:
            raise PathError(f"family order must be nonnegative, got {self.order}")

    def __str__(self) -> str:
        return f"{self.kind.value}({self.order})"


def parse_path(text: str) -> Path:
    """Parse ``U``/``D``/``F`` text; raises :class:`InvalidCharacter`."""
    return Path(text)


def format_path(p: Path) -> str:
    return p.text


def heights(p: Path) -> list[int]:
    """Height of every point ``0..len(p)``.

    >>> heights(Path("UUDUDD"))
    [0, 1, 2, 1, 2, 1, 0]
    """
    return list(accumulate((_DELTA[c] for c in p.text), initial=0))


def is_member(p: Path, f: Family) -> bool:
    text = p.text
    n = f.order
    ups, downs, flats = text.count("U"), text.count("D"), text.count("F")
    if ups != downs:
        return False
    base = f.kind.base
    if base is FamilyKind.DYCK:
        ok = flats == 0 and len(text) == 2 * n
    elif base is FamilyKind.MOTZKIN:
        ok = len(text) == n
    else:
        ok = ups + flats == n
    if not ok:
        return False
    return f.kind.is_super or min(heights(p)) >= 0


def mirror(p: Path) -> Path:
    """Swap ``U`` and ``D`` position by position; flats are kept."""
    return Path(p.text.translate(_MIRROR))


def split_at(p: Path, i: int, j: int) -> Path:
    """Steps between points ``i`` and ``j``."""
    if not 0 <= i <= j <= len(p):
        raise IndexOutOfRange(f"segment [{i}, {j}] outside 0..{len(p)}")
    return Path(p.text[i:j])
