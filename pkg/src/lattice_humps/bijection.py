"""The hump bijection between marked paths and super paths starting with U.

``phi`` cuts a nonnegative path ``M`` with a marked hump into four segments
``L0 L1 L2 L3`` at points ``A <= B <= C`` and returns
``L0 . L2 . mirror(L3) . mirror(L1)``. ``psi`` finds the matching cut points
on a super path and reassembles ``L0 . mirror(L3) . L1 . mirror(L2)``.
The same code serves Motzkin, Dyck and Schroeder paths.
"""
from __future__ import annotations

from dataclasses import dataclass

from .enumeration import MarkedPath, NotAMarkedPath
from .paths import Path, PathError, heights, mirror, split_at
from .statistics import PathClass, classify, hump_points

__all__ = [
    "SplitPoints",
    "PhiResult",
    "NotUStar",
    "NoHumpLeftOfB",
    "NotInImage",
    "PointNotLeftOfB",
    "find_split_forward",
    "phi",
    "find_split_backward",
    "psi",
    "relocate_hump_point",
    "segments",
]


class NotUStar(PathError):
    pass


class NoHumpLeftOfB(PathError):
    pass


class NotInImage(PathError):
    pass


class PointNotLeftOfB(PathError):
    pass


@dataclass(frozen=True)
class SplitPoints:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not 0 <= self.a <= self.b <= self.c:
            raise PathError(f"split points out of order: {self}")


@dataclass(frozen=True)
class PhiResult:
    image: Path
    split: SplitPoints
    image_class: PathClass


def segments(p: Path, split: SplitPoints) -> tuple[Path, Path, Path, Path]:
    """``(L0, L1, L2, L3)`` = the pieces before A, A..B, B..C and after C."""
    return (
        split_at(p, 0, split.a),
        split_at(p, split.a, split.b),
        split_at(p, split.b, split.c),
        split_at(p, split.c, len(p)),
    )


def find_split_forward(m: MarkedPath) -> SplitPoints:
    h = heights(m.path)
    if h[-1] != 0 or min(h) < 0:
        raise NotAMarkedPath(f"{m.path.text!r} is not a nonnegative path returning to height 0")
    p = m.hump_point
    # Leftmost valley point right of P, the endpoint counting as a valley.
    text = m.path.text
    c = len(text)
    for i in range(p, len(text) - 1):
        if text[i] == "D":
            j = i + 1
            while j < len(text) and text[j] == "F":
                j += 1
            if j < len(text) and text[j] == "U":
                c = j
                break
    b = max(i for i in range(p) if h[i] == h[c])
    a = max(i for i in range(b + 1) if h[i] == 0)
    return SplitPoints(a, b, c)


def phi(m: MarkedPath) -> PhiResult:
    split = find_split_forward(m)
    l0, l1, l2, l3 = segments(m.path, split)
    image = l0 + l2 + mirror(l3) + mirror(l1)
    return PhiResult(image, split, classify(image))


def find_split_backward(l: Path) -> tuple[SplitPoints, int]:
    """Cut points of a super path plus the hump point ``P`` left of ``B``.

    ``B`` is the first height-0 point whose next step drops to height -1, or
    the endpoint if the path never goes below the axis. ``A`` is the last
    height-0 point before ``B`` that is followed by an up step.
    """
    text = l.text.replace("F", "")
    h = heights(l)
    if not text or text[0] != "U" or h[-1] != 0:
        raise NotUStar(f"{l.text!r} is not a super path whose first non-flat step is U")
    n = len(l)
    b = next((i for i in range(n) if h[i] == 0 and h[i + 1] == -1), n)
    # A starts the primitive block ending at B; trailing flats at height 0
    # belong to that block, so A must be followed by an up step.
    a = max((i for i in range(b) if h[i] == 0 and l.text[i] == "U"), default=0)
    top = max(h[b:])
    c = max(i for i in range(b, n + 1) if h[i] == top)
    left = [q for q in hump_points(l) if q < b]
    if not left:
        raise NoHumpLeftOfB(f"{l.text!r} has no hump point left of B={b}")
    return SplitPoints(a, b, c), left[-1]


def relocate_hump_point(split: SplitPoints, hump_point_in_l: int, length: int) -> int:
    """Position in ``M`` of a hump point ``P < B`` of ``L`` (``length = len(L)``).

    Points in ``L0`` keep their index. Points inside ``L1`` shift right by
    ``len(L3)`` because ``mirror(L3)`` is inserted in front of ``L1``.
    """
    if hump_point_in_l <= split.a:
        return hump_point_in_l
    if hump_point_in_l >= split.b:
        raise PointNotLeftOfB(f"point {hump_point_in_l} is not left of B={split.b}")
    return hump_point_in_l + (length - split.c)


def psi(l: Path) -> MarkedPath:
    split, point = find_split_backward(l)
    l0, l1, l2, l3 = segments(l, split)
    m = l0 + mirror(l3) + l1 + mirror(l2)
    if min(heights(m)) < 0:
        raise NotInImage(f"reassembled path {m.text!r} goes below the axis")
    target = relocate_hump_point(split, point, len(l))
    points = hump_points(m)
    if target not in points:
        raise NotInImage(f"point {target} is not a hump point of {m.text!r}")
    return MarkedPath(m, points.index(target))
