"""Humps, valleys, first/last-step classes and run factorization."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .paths import Path, PathError

__all__ = [
    "Hump",
    "Valley",
    "ClassKind",
    "PathClass",
    "RunWord",
    "FlatStepPresent",
    "humps",
    "hump_points",
    "valleys",
    "classify",
    "run_word",
]

_HUMP = re.compile(r"UF*D")
_VALLEY = re.compile(r"D(F*)U")
_RUN = re.compile(r"U+|D+")


class FlatStepPresent(PathError):
    pass


@dataclass(frozen=True)
class Hump:
    u_index: int
    flat_run: int
    d_index: int

    @property
    def hump_point(self) -> int:
        return self.u_index + 1

    @property
    def is_peak(self) -> bool:
        return self.flat_run == 0


@dataclass(frozen=True)
class Valley:
    """An interior valley ``D F* U`` or, with ``d_index`` None, the endpoint."""

    d_index: int | None
    valley_point: int


class ClassKind(enum.Enum):
    ALL_FLAT = "AllFlat"
    USTAR_UU = "UU"
    USTAR_UD = "UD"
    D_STAR = "D*"

    @property
    def is_ustar(self) -> bool:
        return self in (ClassKind.USTAR_UU, ClassKind.USTAR_UD)


@dataclass(frozen=True)
class PathClass:
    kind: ClassKind
    k: int

    def __str__(self) -> str:
        return f"{self.kind.value}(k={self.k})"


@dataclass(frozen=True)
class RunWord:
    """``U^x1 D^y1 U^x2 ...``; ``leading_down`` marks a word opening with D."""

    ups: tuple[int, ...]
    downs: tuple[int, ...]
    leading_down: bool = False

    def to_path(self) -> Path:
        first, second = ("D", "U") if self.leading_down else ("U", "D")
        firsts, seconds = (self.downs, self.ups) if self.leading_down else (self.ups, self.downs)
        parts = []
        for i, a in enumerate(firsts):
            parts.append(first * a)
            if i < len(seconds):
                parts.append(second * seconds[i])
        return Path("".join(parts))


def humps(p: Path) -> list[Hump]:
    """All humps ``U F* D`` left to right; they never overlap."""
    return [
        Hump(u_index=m.start(), flat_run=m.end() - m.start() - 2, d_index=m.end() - 1)
        for m in _HUMP.finditer(p.text)
    ]


def hump_points(p: Path) -> list[int]:
    return [m.start() + 1 for m in _HUMP.finditer(p.text)]


def valleys(p: Path, include_endpoint: bool) -> list[Valley]:
    found = [Valley(d_index=m.start(), valley_point=m.end() - 1) for m in _VALLEY.finditer(p.text)]
    if include_endpoint:
        found.append(Valley(d_index=None, valley_point=len(p)))
    return found


def classify(p: Path) -> PathClass:
    k = len(_HUMP.findall(p.text))
    text = p.text.replace("F", "")
    if not text:
        return PathClass(ClassKind.ALL_FLAT, k)
    if text[0] == "D":
        return PathClass(ClassKind.D_STAR, k)
    if text[-1] == "U":
        return PathClass(ClassKind.USTAR_UU, k)
    return PathClass(ClassKind.USTAR_UD, k)


def run_word(p: Path) -> RunWord:
    """Maximal-run factorization of a flat-free path.

    >>> run_word(Path("UDDU"))
    RunWord(ups=(1, 1), downs=(2,), leading_down=False)
    """
    if "F" in p.text:
        raise FlatStepPresent(f"path {p.text!r} contains a flat step")
    ups: list[int] = []
    downs: list[int] = []
    for m in _RUN.finditer(p.text):
        (ups if m.group()[0] == "U" else downs).append(len(m.group()))
    return RunWord(tuple(ups), tuple(downs), leading_down=p.text.startswith("D"))
