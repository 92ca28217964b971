"""Exhaustive generation of every path family at a fixed order.

Streams are produced by backtracking over prefixes in the global order
``U < F < D`` and are pruned so every emitted prefix can still be completed.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .paths import Family, FamilyKind, Path, PathError
from .statistics import ClassKind, classify, humps

__all__ = [
    "Caps",
    "OrderTooLarge",
    "NotAMarkedPath",
    "MarkedPath",
    "PathStream",
    "ClassPattern",
    "U_STAR",
    "CAPS_ENV",
    "enumerate_paths",
    "enumerate_marked",
    "count_by_enumeration",
    "filter_class",
    "order_key",
]

CAPS_ENV = "LATTICE_HUMPS_CAPS"

# Ordering U < F < D used for every stream.
STEP_ORDER = "UFD"
_RANK = str.maketrans(STEP_ORDER, "012")


def order_key(p: Path) -> str:
    """Sort key reproducing the stream order."""
    return p.text.translate(_RANK)


class OrderTooLarge(PathError):
    def __init__(self, family: Family, cap: int) -> None:
        self.family = family
        self.cap = cap
        super().__init__(f"{family} exceeds the enumeration cap {cap}")


class NotAMarkedPath(PathError):
    pass


@dataclass(frozen=True)
class Caps:
    """Largest order each family group may be enumerated at."""

    motzkin: int = 14
    dyck: int = 10
    schroeder: int = 8

    def cap_for(self, kind: FamilyKind) -> int:
        return getattr(self, kind.base.value)

    @classmethod
    def from_env(cls, environ=None) -> Caps:
        """Read ``motzkin=14,dyck=10,schroeder=8`` style overrides."""
        raw = (os.environ if environ is None else environ).get(CAPS_ENV, "").strip()
        if not raw:
            return cls()
        values = {}
        for item in raw.split(","):
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in ("motzkin", "dyck", "schroeder"):
                raise ValueError(f"unknown cap {key!r} in {CAPS_ENV}")
            values[key] = int(value)
        return cls(**values)


@dataclass(frozen=True, order=True)
class MarkedPath:
    path: Path
    hump_index: int

    def __post_init__(self) -> None:
        if not isinstance(self.path, Path):
            object.__setattr__(self, "path", Path(self.path))
        count = len(humps(self.path))
        if not 0 <= self.hump_index < count:
            raise NotAMarkedPath(
                f"hump index {self.hump_index} out of range for {self.path.text!r} ({count} humps)"
            )

    @property
    def hump_point(self) -> int:
        return humps(self.path)[self.hump_index].hump_point

    def __str__(self) -> str:
        return f"({self.path.text}, {self.hump_index})"


def _walk(kind: FamilyKind, n: int) -> Iterator[str]:
    base = kind.base
    nonneg = not kind.is_super
    buf: list[str] = []

    if base is FamilyKind.SCHROEDER:
        # Budget counts U and F steps (#U + #F = n); D steps are free.
        def extend(h: int, budget: int) -> Iterator[str]:
            if budget == 0 and h == 0:
                yield "".join(buf)
                return
            for step in STEP_ORDER:
                if step == "D":
                    nh, nb = h - 1, budget
                elif budget:
                    nh, nb = h + (step == "U"), budget - 1
                else:
                    continue
                if nh < -nb or (nonneg and nh < 0):
                    continue
                buf.append(step)
                yield from extend(nh, nb)
                buf.pop()

        yield from extend(0, n)
        return

    length = 2 * n if base is FamilyKind.DYCK else n
    alphabet = "UD" if base is FamilyKind.DYCK else STEP_ORDER

    def extend_fixed(h: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(buf)
            return
        left = remaining - 1
        for step in alphabet:
            nh = h + (1 if step == "U" else -1 if step == "D" else 0)
            if abs(nh) > left or (nonneg and nh < 0):
                continue
            buf.append(step)
            yield from extend_fixed(nh, left)
            buf.pop()

    yield from extend_fixed(0, length)


class PathStream:
    """Single-consumer iterator over all members of a family."""

    def __init__(self, family: Family, caps: Caps | None = None) -> None:
        caps = caps if caps is not None else Caps.from_env()
        cap = caps.cap_for(family.kind)
        if family.order > cap:
            raise OrderTooLarge(family, cap)
        self.family = family
        self._cursor = _walk(family.kind, family.order)

    def __iter__(self) -> PathStream:
        return self

    def __next__(self) -> Path:
        return Path(next(self._cursor))


def enumerate_paths(family: Family, caps: Caps | None = None) -> PathStream:
    return PathStream(family, caps)


def enumerate_marked(family: Family, caps: Caps | None = None) -> Iterator[MarkedPath]:
    for p in enumerate_paths(family, caps):
        for i in range(len(humps(p))):
            yield MarkedPath(p, i)


def count_by_enumeration(family: Family, caps: Caps | None = None) -> int:
    return sum(1 for _ in enumerate_paths(family, caps))


@dataclass(frozen=True)
class ClassPattern:
    """Filter on class kind and/or hump count; ``None`` matches anything."""

    kinds: frozenset[ClassKind] | None = None
    humps: int | None = None

    def matches(self, p: Path) -> bool:
        cls = classify(p)
        if self.kinds is not None and cls.kind not in self.kinds:
            return False
        return self.humps is None or cls.k == self.humps

    @classmethod
    def of(cls, *kinds: ClassKind, humps: int | None = None) -> ClassPattern:
        return cls(frozenset(kinds) if kinds else None, humps)


U_STAR = ClassPattern.of(ClassKind.USTAR_UU, ClassKind.USTAR_UD)


def filter_class(stream: Iterable[Path], pattern: ClassPattern) -> Iterator[Path]:
    return (p for p in stream if pattern.matches(p))
