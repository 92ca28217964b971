"""Super Schroeder paths with m-colored flat steps.

Turning any subset of the peaks of a super Dyck path into colored flat steps
gives every colored super Schroeder path exactly once, which yields two
independent counts of the same set.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .enumeration import Caps, enumerate_paths
from .formulas import schid_sides
from .paths import Family, FamilyKind, Path, PathError, Step
from .statistics import humps

__all__ = [
    "ColoredStep",
    "ColoredPath",
    "NotSuperDyck",
    "SchidReport",
    "parse_colored",
    "expand_peaks",
    "restore_peaks",
    "count_colored",
    "verify_schid",
]

_TOKEN = re.compile(r"U|D|F(\d+)")


class NotSuperDyck(PathError):
    pass


@dataclass(frozen=True)
class ColoredStep:
    step: Step
    color: int | None = None

    def __post_init__(self) -> None:
        if (self.step is Step.FLAT) != (self.color is not None):
            raise PathError(f"flat steps carry exactly one color, got {self.step.value}/{self.color}")

    def __str__(self) -> str:
        return self.step.value if self.color is None else f"F{self.color}"


@dataclass(frozen=True)
class ColoredPath:
    steps: tuple[ColoredStep, ...]
    palette: int

    def __post_init__(self) -> None:
        for s in self.steps:
            if s.color is not None and not 1 <= s.color <= self.palette:
                raise PathError(f"color {s.color} outside 1..{self.palette}")

    def underlying(self) -> Path:
        return Path("".join(s.step.value for s in self.steps))

    def __str__(self) -> str:
        return "".join(map(str, self.steps))


def parse_colored(text: str, palette: int) -> ColoredPath:
    """Parse ``"UF2D"``-style text; colors follow only ``F``."""
    steps = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PathError(f"bad colored step at position {pos} in {text!r}")
        color = int(m.group(1)) if m.group(1) is not None else None
        steps.append(ColoredStep(Step(m.group()[0]), color))
        pos = m.end()
    return ColoredPath(tuple(steps), palette)


def expand_peaks(p: Path, m: int) -> Iterator[ColoredPath]:
    """Every way of keeping each peak or replacing it by a flat of color 1..m."""
    if "F" in p.text or p.text.count("U") != p.text.count("D"):
        raise NotSuperDyck(f"{p.text!r} is not a super Dyck path")
    if m < 0:
        raise PathError(f"palette size must be nonnegative, got {m}")
    peaks = [h.u_index for h in humps(p)]
    base = [ColoredStep(s) for s in p]
    for choice in product(range(m + 1), repeat=len(peaks)):
        out: list[ColoredStep] = []
        start = 0
        for u, color in zip(peaks, choice):
            if color:
                out.extend(base[start:u])
                out.append(ColoredStep(Step.FLAT, color))
                start = u + 2
        out.extend(base[start:])
        yield ColoredPath(tuple(out), m)


def restore_peaks(p: Path) -> Path:
    """Undo a color-erased expansion: every flat step becomes a peak again."""
    return Path(p.text.replace("F", "UD"))


def count_colored(n: int, m: int, caps: Caps | None = None) -> int:
    """Sum of m^(#flats) over super Schroeder paths of order n (0^0 = 1)."""
    family = Family(FamilyKind.SUPER_SCHROEDER, n)
    return sum(m ** p.text.count("F") for p in enumerate_paths(family, caps))


@dataclass(frozen=True)
class SchidReport:
    n: int
    m: int
    peak_expansion: int
    colored: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.peak_expansion == self.colored == self.lhs == self.rhs

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "peak_expansion": str(self.peak_expansion),
            "colored": str(self.colored),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "pass": self.passed,
        }


def verify_schid(n: int, m: int, caps: Caps | None = None) -> SchidReport:
    family = Family(FamilyKind.SUPER_DYCK, n)
    expansion = sum(
        sum(1 for _ in expand_peaks(p, m)) for p in enumerate_paths(family, caps)
    )
    lhs, rhs = schid_sides(n, m)
    return SchidReport(n, m, expansion, count_colored(n, m, caps), lhs, rhs)
