"""ASCII and SVG drawings of paths with labeled points and segment spans.

Both renderers are pure functions of ``(path, annotation)``, so repeated
calls give byte-identical output.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .bijection import find_split_backward, find_split_forward, phi
from .enumeration import MarkedPath
from .paths import Path, PathError, heights

__all__ = [
    "Annotation",
    "BadAnnotation",
    "SCALE",
    "render_ascii",
    "render_svg",
    "bijection_figures",
]

SCALE = 10
MARGIN = 20
_GLYPH = {"U": "/", "D": "\\", "F": "_"}


class BadAnnotation(PathError):
    pass


@dataclass(frozen=True)
class Annotation:
    labels: tuple[tuple[str, int], ...] = ()
    circled: tuple[int, ...] = ()
    spans: tuple[tuple[str, int, int], ...] = ()

    def validate(self, length: int) -> None:
        points = [i for _, i in self.labels] + list(self.circled)
        for _, s, e in self.spans:
            if s > e:
                raise BadAnnotation(f"span start {s} after end {e}")
            points += [s, e]
        bad = [i for i in points if not 0 <= i <= length]
        if bad:
            raise BadAnnotation(f"point indices {bad} outside 0..{length}")


def _place(rows: list[list[str]], start: int, text: str, fill: range | None = None, gap: bool = False) -> None:
    """Write ``text`` at ``start`` on the first row where the cells are free.

    With ``gap`` the cell just before ``start`` must be free too, so span
    names never run into the previous one.
    """
    cells = set(range(start, start + len(text)))
    if fill is not None:
        cells |= set(fill)
    probe = cells | {start - 1} if gap and start > 0 else cells
    for row in rows:
        if all(c >= len(row) or row[c] == " " for c in probe):
            break
    else:
        row = []
        rows.append(row)
    need = max(cells, default=start) + 1
    row.extend(" " * (need - len(row)))
    for c in fill or ():
        row[c] = "-"
    for k, ch in enumerate(text):
        row[start + k] = ch


def render_ascii(p: Path, a: Annotation = Annotation()) -> str:
    """One column per step; ``/``, ``\\`` and ``_`` for U, D and F.

    Circled points get an ``o`` above the grid and labels go below it, both
    in the column that starts at the point.
    """
    a.validate(len(p))
    h = heights(p)
    cells = []
    for i, c in enumerate(p.text):
        row = h[i + 1] if c == "D" else h[i]
        cells.append((row, i, _GLYPH[c]))
    top = max((r for r, _, _ in cells), default=0)
    bottom = min((r for r, _, _ in cells), default=0)
    grid = [[" "] * len(p) for _ in range(top - bottom + 1)]
    for r, col, glyph in cells:
        grid[top - r][col] = glyph

    lines: list[str] = []
    if a.circled:
        marks: list[list[str]] = []
        for point in sorted(set(a.circled)):
            _place(marks, point, "o")
        lines += ["".join(r) for r in marks]
    lines += ["".join(r) for r in grid]
    label_rows: list[list[str]] = []
    for text, point in a.labels:
        _place(label_rows, point, text)
    span_rows: list[list[str]] = []
    for text, s, e in a.spans:
        _place(span_rows, s, text, range(s, e), gap=True)
    lines += ["".join(r) for r in label_rows + span_rows]
    return "\n".join(line.rstrip() for line in lines)


def _fmt(points) -> str:
    return " ".join(f"{x},{y}" for x, y in points)


def render_svg(p: Path, a: Annotation = Annotation()) -> str:
    """SVG with one polyline for the path at 10 units per step.

    Path geometry lives in a group flipped with ``scale(1,-1)`` so heights
    grow upward; text is placed in unflipped screen coordinates.
    """
    a.validate(len(p))
    h = heights(p)
    top, bottom = max(h), min(h)
    span_band = 2 * MARGIN if a.spans else 0
    # Labels sharing a point are stacked downward.
    stack = Counter(point for _, point in a.labels)
    label_band = MARGIN + SCALE * (max(stack.values()) - 1) if a.labels else 0
    width = SCALE * len(p) + 2 * MARGIN
    height = SCALE * (top - bottom) + 2 * MARGIN + span_band + label_band
    base_y = MARGIN + span_band + SCALE * top

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<g transform="translate({MARGIN},{base_y}) scale(1,-1)">',
        f'<polyline points="{_fmt((SCALE * i, SCALE * y) for i, y in enumerate(h))}" '
        'fill="none" stroke="black" stroke-width="2"/>',
    ]
    for point in a.circled:
        out.append(
            f'<circle cx="{SCALE * point}" cy="{SCALE * h[point]}" r="4" '
            'fill="none" stroke="black"/>'
        )
    out.append("</g>")
    out.append(f'<g transform="translate({MARGIN},0)" font-family="monospace" font-size="10">')
    label_y = base_y - SCALE * bottom + MARGIN
    seen: Counter = Counter()
    for text, point in a.labels:
        y = label_y + SCALE * seen[point]
        seen[point] += 1
        out.append(f'<text x="{SCALE * point}" y="{y}" text-anchor="middle">{escape(text)}</text>')
    for k, (text, s, e) in enumerate(a.spans):
        # Alternate two rows so adjacent span labels do not collide.
        y = MARGIN + (k % 2) * MARGIN // 2 + 4
        out.append(
            f'<polyline points="{_fmt([(SCALE * s, y), (SCALE * e, y)])}" '
            'fill="none" stroke="gray"/>'
        )
        out.append(
            f'<text x="{SCALE * (s + e) // 2}" y="{y - 3}" text-anchor="middle">'
            f"{escape(text)}</text>"
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def bijection_figures(m: MarkedPath) -> tuple[tuple[Path, Annotation], tuple[Path, Annotation]]:
    """Annotated source and image of ``phi`` as a labeled pair of drawings.

    The source carries O, A, B, P, C, N with P circled and spans L0..L3; the
    image carries the cut points found on it by the inverse map and spans
    L0, L2, bar L3, bar L1.
    """
    split = find_split_forward(m)
    n = len(m.path)
    source = Annotation(
        labels=(("O", 0), ("A", split.a), ("B", split.b), ("P", m.hump_point), ("C", split.c), ("N", n)),
        circled=(m.hump_point,),
        spans=(("L0", 0, split.a), ("L1", split.a, split.b), ("L2", split.b, split.c), ("L3", split.c, n)),
    )
    image = phi(m).image
    back, point = find_split_backward(image)
    target = Annotation(
        labels=(("O", 0), ("A", back.a), ("B", back.b), ("P", point), ("C", back.c), ("N", n)),
        circled=(point,),
        spans=(("L0", 0, back.a), ("L2", back.a, back.b), ("bar L3", back.b, back.c), ("bar L1", back.c, n)),
    )
    return (m.path, source), (image, target)
