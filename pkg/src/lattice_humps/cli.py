"""Command-line interface.

Every command writes one JSON object per line (or CSV with ``--csv``); big
integers are written as decimal strings.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 enumeration cap exceeded, 4 domain error (bad path, bad hump, ...).
"""
from __future__ import annotations

import csv
import functools
import io
import json
import sys
from pathlib import Path as FsPath

import click

from . import formulas as fm
from .bijection import find_split_backward, phi, psi
from .enumeration import (
    CAPS_ENV,
    Caps,
    ClassPattern,
    MarkedPath,
    OrderTooLarge,
    count_by_enumeration,
    enumerate_marked,
    enumerate_paths,
    filter_class,
)
from .paths import Family, FamilyKind, Path, PathError, heights, is_member, parse_path
from .render import Annotation, bijection_figures, render_ascii, render_svg
from .statistics import ClassKind, classify, humps, run_word, valleys
from .verify import ALIASES, SUITES, Limits, run_suite

EXIT_FAILED = 1
EXIT_CAP = 3
EXIT_DOMAIN = 4

FORMULAS = {
    FamilyKind.DYCK: fm.catalan,
    FamilyKind.MOTZKIN: fm.motzkin,
    FamilyKind.SCHROEDER: fm.schroeder,
    FamilyKind.SUPER_DYCK: fm.sd,
    FamilyKind.SUPER_MOTZKIN: fm.sm,
    FamilyKind.SUPER_SCHROEDER: fm.ss,
}

CLASS_CHOICES = {
    "ustar": (ClassKind.USTAR_UU, ClassKind.USTAR_UD),
    "UU": (ClassKind.USTAR_UU,),
    "UD": (ClassKind.USTAR_UD,),
    "dstar": (ClassKind.D_STAR,),
    "flat": (ClassKind.ALL_FLAT,),
}


class Writer:
    """Serializes records to stdout as JSON lines or CSV."""

    def __init__(self, as_csv: bool = False) -> None:
        self.as_csv = as_csv
        self._fields: list[str] | None = None

    def write(self, record: dict) -> None:
        if not self.as_csv:
            click.echo(json.dumps(record, separators=(",", ":")))
            return
        if self._fields is None:
            self._fields = list(record)
            click.echo(self._row(self._fields), nl=False)
        click.echo(self._row([self._cell(record.get(k)) for k in self._fields]), nl=False)

    @staticmethod
    def _cell(value) -> str:
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, (list, dict)):
            return json.dumps(value, separators=(",", ":"))
        return "" if value is None else str(value)

    @staticmethod
    def _row(values) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerow(values)
        return buf.getvalue()


def _fail(writer: Writer, code: int, exc: Exception) -> None:
    writer.write({"error": type(exc).__name__, "message": str(exc)})
    sys.exit(code)


def handle_errors(func):
    """Map library errors onto exit codes, with a diagnostic record."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        writer = Writer(kwargs.get("as_csv", False))
        try:
            return func(*args, **kwargs)
        except OrderTooLarge as exc:
            _fail(writer, EXIT_CAP, exc)
        except PathError as exc:
            _fail(writer, EXIT_DOMAIN, exc)

    return wrapper


def _family_kind(value: str) -> FamilyKind:
    try:
        return FamilyKind(value)
    except ValueError:
        names = ", ".join(k.value for k in FamilyKind)
        raise click.BadParameter(f"unknown family {value!r}; choose from {names}") from None


def _order_range(value: str) -> range:
    """``"5"`` or ``"0..5"`` (inclusive)."""
    try:
        if ".." in value:
            lo, hi = (int(x) for x in value.split("..", 1))
        else:
            lo = hi = int(value)
    except ValueError:
        raise click.BadParameter(f"expected N or LO..HI, got {value!r}") from None
    if lo < 0 or hi < lo:
        raise click.BadParameter(f"bad order range {value!r}")
    return range(lo, hi + 1)


def _parse(text: str) -> Path:
    return parse_path(text.strip())


csv_option = click.option("--csv", "as_csv", is_flag=True, help="Write CSV instead of JSON lines.")


@click.group(
    epilog=f"Paths are written one character per step: U (up), D (down), F (flat). "
    f"Enumeration caps default to motzkin=14,dyck=10,schroeder=8 and can be "
    f"overridden with {CAPS_ENV}=motzkin=..,dyck=..,schroeder=.."
)
def main() -> None:
    """Humps, peaks and the hump bijection on Motzkin, Dyck and Schroeder paths."""


@main.command()
@click.argument("family")
@click.argument("orders")
@click.option("--formula", "mode", flag_value="formula", default=True, help="Closed form only (default).")
@click.option("--enumerate", "mode", flag_value="enumerate", help="Exhaustive enumeration only.")
@click.option("--both", "mode", flag_value="both", help="Both, with an agreement flag.")
@csv_option
@handle_errors
def count(family: str, orders: str, mode: str, as_csv: bool) -> None:
    """Count FAMILY paths for each order in ORDERS (N or LO..HI)."""
    kind = _family_kind(family)
    writer = Writer(as_csv)
    caps = Caps.from_env()
    all_agree = True
    for n in _order_range(orders):
        record: dict = {"family": kind.value, "n": n}
        if mode in ("formula", "both"):
            record["formula"] = str(FORMULAS[kind](n))
        if mode in ("enumerate", "both"):
            record["enumerated"] = str(count_by_enumeration(Family(kind, n), caps))
        if mode == "both":
            record["agree"] = record["formula"] == record["enumerated"]
            all_agree &= record["agree"]
        writer.write(record)
    if not all_agree:
        sys.exit(EXIT_FAILED)


@main.command("enumerate")
@click.argument("family")
@click.argument("order", type=click.IntRange(min=0))
@click.option("--marked", is_flag=True, help="One record per (path, hump).")
@click.option("--class", "cls", type=click.Choice(sorted(CLASS_CHOICES)), help="Keep one first/last-step class.")
@click.option("--humps", "k", type=click.IntRange(min=0), help="Keep paths with exactly K humps.")
@csv_option
@handle_errors
def enumerate_cmd(family: str, order: int, marked: bool, cls: str | None, k: int | None, as_csv: bool) -> None:
    """List every FAMILY path of ORDER in U < F < D order."""
    fam = Family(_family_kind(family), order)
    writer = Writer(as_csv)
    caps = Caps.from_env()
    if marked:
        for m in enumerate_marked(fam, caps):
            writer.write({"path": m.path.text, "hump": m.hump_index, "hump_point": m.hump_point})
        return
    stream = enumerate_paths(fam, caps)
    if cls is not None or k is not None:
        stream = filter_class(stream, ClassPattern.of(*CLASS_CHOICES.get(cls, ()), humps=k))
    for p in stream:
        writer.write({"path": p.text})


def _memberships(p: Path) -> list[str]:
    ups, flats = p.text.count("U"), p.text.count("F")
    candidates = [
        Family(FamilyKind.DYCK, len(p) // 2),
        Family(FamilyKind.MOTZKIN, len(p)),
        Family(FamilyKind.SCHROEDER, ups + flats),
    ]
    found = []
    for fam in candidates:
        for kind in (fam.kind, fam.kind.super_variant):
            if is_member(p, Family(kind, fam.order)):
                found.append(str(Family(kind, fam.order)))
    return found


@main.command()
@click.argument("path")
@csv_option
@handle_errors
def stats(path: str, as_csv: bool) -> None:
    """Heights, humps, valleys, class and run word of PATH."""
    p = _parse(path)
    cls = classify(p)
    word = None
    if "F" not in p.text:
        rw = run_word(p)
        word = {"ups": list(rw.ups), "downs": list(rw.downs), "leading_down": rw.leading_down}
    Writer(as_csv).write(
        {
            "path": p.text,
            "length": len(p),
            "heights": heights(p),
            "humps": [
                {"u_index": h.u_index, "flat_run": h.flat_run, "d_index": h.d_index, "hump_point": h.hump_point}
                for h in humps(p)
            ],
            "valley_points": [v.valley_point for v in valleys(p, include_endpoint=False)],
            "class": cls.kind.value,
            "k": cls.k,
            "run_word": word,
            "families": _memberships(p),
        }
    )


def _write_figures(directory: str, m: MarkedPath) -> list[str]:
    out = FsPath(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (p, ann) in zip(("source.svg", "image.svg"), bijection_figures(m)):
        target = out / name
        target.write_text(render_svg(p, ann), encoding="utf-8")
        written.append(str(target))
    return written


svg_option = click.option(
    "--svg", "svg_dir", type=click.Path(file_okay=False), help="Also write annotated source.svg and image.svg here."
)


@main.command("phi")
@click.argument("path")
@click.argument("hump", type=int)
@svg_option
@csv_option
@handle_errors
def phi_cmd(path: str, hump: int, svg_dir: str | None, as_csv: bool) -> None:
    """Map PATH with its HUMP-th hump (0-based) to a super path."""
    m = MarkedPath(_parse(path), hump)
    result = phi(m)
    record = {
        "input": m.path.text,
        "hump": hump,
        "hump_point": m.hump_point,
        "image": result.image.text,
        "a": result.split.a,
        "b": result.split.b,
        "c": result.split.c,
        "class": result.image_class.kind.value,
        "k": result.image_class.k,
        "source_humps": len(humps(m.path)),
    }
    if svg_dir:
        record["svg"] = _write_figures(svg_dir, m)
    Writer(as_csv).write(record)


@main.command("psi")
@click.argument("path")
@svg_option
@csv_option
@handle_errors
def psi_cmd(path: str, svg_dir: str | None, as_csv: bool) -> None:
    """Map a super PATH whose first non-flat step is U back to a marked path."""
    l = _parse(path)
    split, point = find_split_backward(l)
    m = psi(l)
    cls = classify(l)
    record = {
        "input": l.text,
        "preimage": m.path.text,
        "hump": m.hump_index,
        "hump_point": m.hump_point,
        "a": split.a,
        "b": split.b,
        "c": split.c,
        "hump_point_in_input": point,
        "class": cls.kind.value,
        "k": cls.k,
        "preimage_humps": len(humps(m.path)),
    }
    if svg_dir:
        record["svg"] = _write_figures(svg_dir, m)
    Writer(as_csv).write(record)


@main.command()
@click.argument("suite", type=click.Choice(sorted(SUITES) + sorted(ALIASES)))
@click.option("--motzkin-max", type=click.IntRange(min=0))
@click.option("--dyck-max", type=click.IntRange(min=0))
@click.option("--schroeder-max", type=click.IntRange(min=0))
@click.option("--n-max", type=click.IntRange(min=0))
@click.option("--m-max", type=click.IntRange(min=0))
@csv_option
@handle_errors
def verify(suite: str, as_csv: bool, **limits) -> None:
    """Run a verification SUITE and print a summary record."""
    report = run_suite(suite, Limits(**limits))
    Writer(as_csv).write(report.as_record())
    if not report.ok:
        sys.exit(EXIT_FAILED)


def _point_spec(value: str) -> tuple[str, int]:
    name, sep, point = value.partition("=")
    if not sep or not point.isdigit():
        raise click.BadParameter(f"expected NAME=POINT, got {value!r}")
    return name, int(point)


def _span_spec(value: str) -> tuple[str, int, int]:
    name, sep, rest = value.partition("=")
    start, colon, end = rest.partition(":")
    if not sep or not colon or not (start.isdigit() and end.isdigit()):
        raise click.BadParameter(f"expected NAME=START:END, got {value!r}")
    return name, int(start), int(end)


@main.command()
@click.argument("path")
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg"]), default="ascii", show_default=True)
@click.option("--circle", type=int, multiple=True, help="Point index to circle (repeatable).")
@click.option("--label", multiple=True, help="NAME=POINT label below the path (repeatable).")
@click.option("--span", multiple=True, help="NAME=START:END segment span (repeatable).")
@click.option("--phi-hump", type=int, help="Draw the figure pair for phi applied to this hump.")
@click.option("--raw", is_flag=True, help="Print the drawing itself instead of a JSON record.")
@csv_option
@handle_errors
def render(
    path: str,
    fmt: str,
    circle: tuple[int, ...],
    label: tuple[str, ...],
    span: tuple[str, ...],
    phi_hump: int | None,
    raw: bool,
    as_csv: bool,
) -> None:
    """Draw PATH with optional circled points, labels and spans."""
    p = _parse(path)
    draw = render_svg if fmt == "svg" else render_ascii
    if phi_hump is not None:
        pieces = bijection_figures(MarkedPath(p, phi_hump))
    else:
        ann = Annotation(
            labels=tuple(_point_spec(v) for v in label),
            circled=circle,
            spans=tuple(_span_spec(v) for v in span),
        )
        pieces = ((p, ann),)
    writer = Writer(as_csv)
    for q, ann in pieces:
        document = draw(q, ann)
        if raw:
            click.echo(document.rstrip("\n"))
        else:
            writer.write({"path": q.text, "format": fmt, "document": document})


if __name__ == "__main__":
    main()
