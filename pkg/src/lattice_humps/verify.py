"""Named verification suites: each identity checked against enumeration."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from . import formulas as fm
from .bijection import phi, psi
from .colored import verify_schid
from .enumeration import (
    U_STAR,
    Caps,
    count_by_enumeration,
    enumerate_marked,
    enumerate_paths,
    filter_class,
)
from .paths import Family, FamilyKind, PathError
from .statistics import ClassKind, classify, humps

__all__ = ["Limits", "SuiteReport", "SUITES", "ALIASES", "run_suite", "bijection_failures"]

MAX_FAILURES_KEPT = 20


@dataclass(frozen=True)
class Limits:
    motzkin_max: int | None = None
    dyck_max: int | None = None
    schroeder_max: int | None = None
    n_max: int | None = None
    m_max: int | None = None

    def get(self, name: str, default: int) -> int:
        value = getattr(self, name)
        return default if value is None else value


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def as_record(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "ok": self.ok,
        }


def _total_humps(family: Family, caps: Caps) -> int:
    return sum(len(humps(p)) for p in enumerate_paths(family, caps))


def suite_counts(limits: Limits, caps: Caps) -> SuiteReport:
    r = SuiteReport("counts")
    mmax = limits.get("motzkin_max", 12)
    dmax = limits.get("dyck_max", 10)
    smax = limits.get("schroeder_max", 8)
    table = [
        (FamilyKind.MOTZKIN, mmax, fm.motzkin),
        (FamilyKind.SUPER_MOTZKIN, mmax, fm.sm),
        (FamilyKind.DYCK, dmax, fm.catalan),
        (FamilyKind.SUPER_DYCK, dmax, fm.sd),
        (FamilyKind.SCHROEDER, smax, fm.schroeder),
        (FamilyKind.SUPER_SCHROEDER, smax, fm.ss),
    ]
    for kind, top, formula in table:
        for n in range(top + 1):
            got = count_by_enumeration(Family(kind, n), caps)
            r.check(got == formula(n), f"{kind.value}({n}): enumerated {got} != formula {formula(n)}")
    return r


def suite_dyck_peaks(limits: Limits, caps: Caps) -> SuiteReport:
    r = SuiteReport("dyck-peaks")
    for n in range(1, limits.get("dyck_max", 10) + 1):
        peaks = _total_humps(Family(FamilyKind.DYCK, n), caps)
        r.check(peaks == fm.pd(n) == fm.binomial(2 * n - 1, n), f"pd({n}): {peaks} != {fm.pd(n)}")
        r.check(fm.sd(n) == 2 * fm.pd(n), f"sd({n}) != 2 pd({n})")
        sd = count_by_enumeration(Family(FamilyKind.SUPER_DYCK, n), caps)
        r.check(sd == 2 * peaks, f"#SD_{n} = {sd} != 2 * {peaks}")
    return r


def suite_motzkin_humps(limits: Limits, caps: Caps) -> SuiteReport:
    r = SuiteReport("motzkin-humps")
    for n in range(limits.get("motzkin_max", 12) + 1):
        total = _total_humps(Family(FamilyKind.MOTZKIN, n), caps)
        r.check(total == fm.hm(n), f"hm({n}): {total} != {fm.hm(n)}")
        r.check(fm.sm(n) == 2 * fm.hm(n) + 1, f"sm({n}) != 2 hm({n}) + 1")
        sm = count_by_enumeration(Family(FamilyKind.SUPER_MOTZKIN, n), caps)
        r.check(sm == 2 * total + 1, f"#SM_{n} = {sm} != 2 * {total} + 1")
    return r


def suite_superdyck_classes(limits: Limits, caps: Caps) -> SuiteReport:
    r = SuiteReport("superdyck-classes")
    for n in range(1, limits.get("dyck_max", 8) + 1):
        by_class: Counter = Counter()
        by_k: Counter = Counter()
        for p in enumerate_paths(Family(FamilyKind.SUPER_DYCK, n), caps):
            cls = classify(p)
            by_class[cls.kind, cls.k] += 1
            by_k[cls.k] += 1
        for k in range(n + 1):
            for kind, name in ((ClassKind.USTAR_UD, "UD"), (ClassKind.USTAR_UU, "UU")):
                want = fm.sd_class_count(n, k, name)
                r.check(by_class[kind, k] == want, f"SD_{n}^{name}({k}) = {by_class[kind, k]} != {want}")
            want = fm.sd_class_count(n, k, "any")
            r.check(by_k[k] == want, f"SD_{n}({k}) = {by_k[k]} != {want}")
    for n in range(1, limits.get("n_max", 30) + 1):
        for k in range(1, n + 1):
            r.check(fm.narayana_via_lemma(n, k) == fm.narayana(n, k), f"N({n},{k}) via lemma")
            squares = (
                fm.binomial(n - 1, k - 1) ** 2
                + fm.binomial(n - 1, k) ** 2
                + 2 * fm.binomial(n - 1, k - 1) * fm.binomial(n - 1, k)
            )
            r.check(squares == fm.binomial(n, k) ** 2, f"class sum for n={n}, k={k}")
    return r


def suite_narayana(limits: Limits, caps: Caps) -> SuiteReport:
    r = SuiteReport("narayana")
    for n in range(1, limits.get("dyck_max", 10) + 1):
        peaks = Counter(len(humps(p)) for p in enumerate_paths(Family(FamilyKind.DYCK, n), caps))
        for k in range(1, n + 1):
            r.check(peaks[k] == fm.narayana(n, k), f"Dyck({n}) with {k} peaks: {peaks[k]}")
    for n in range(1, 13):
        row = [fm.narayana(n, k) for k in range(1, n + 1)]
        r.check(sum(row) == fm.catalan(n), f"sum N({n},k) != C_{n}")
        r.check(sum(k * v for k, v in enumerate(row, 1)) == fm.pd(n), f"sum k N({n},k) != pd({n})")
    return r


def suite_schroeder_humps(limits: Limits, caps: Caps) -> SuiteReport:
    r = SuiteReport("schroeder-humps")
    for n in range(limits.get("schroeder_max", 8) + 1):
        total = _total_humps(Family(FamilyKind.SCHROEDER, n), caps)
        r.check(total == fm.hs(n), f"hs({n}): {total} != {fm.hs(n)}")
        r.check(fm.ss(n) == 2 * fm.hs(n) + 1, f"ss({n}) != 2 hs({n}) + 1")
        ss = count_by_enumeration(Family(FamilyKind.SUPER_SCHROEDER, n), caps)
        r.check(ss == fm.ss(n), f"#SS_{n} = {ss} != {fm.ss(n)}")
    return r


def suite_schid(limits: Limits, caps: Caps) -> SuiteReport:
    r = SuiteReport("schid")
    for n in range(21):
        for m in range(6):
            lhs, rhs = fm.schid_sides(n, m)
            r.check(lhs == rhs, f"formula sides n={n}, m={m}: {lhs} != {rhs}")
    for n in range(limits.get("n_max", 6) + 1):
        for m in range(limits.get("m_max", 3) + 1):
            report = verify_schid(n, m, caps)
            r.check(report.passed, f"four-way n={n}, m={m}: {report.as_record()}")
    return r


def bijection_failures(kind: FamilyKind, n: int, caps: Caps | None = None) -> tuple[int, list[str]]:
    """Check the bijection at one order; returns (cases checked, failures)."""
    failures = []
    checked = 0
    images = {}
    for m in enumerate_marked(Family(kind, n), caps):
        checked += 1
        try:
            result = phi(m)
            back = psi(result.image)
        except PathError as exc:
            failures.append(f"{m}: {type(exc).__name__}: {exc}")
            continue
        if back != m:
            failures.append(f"psi(phi{m}) = {back}")
        k = len(humps(m.path))
        cls = result.image_class
        if (cls.kind, cls.k) not in ((ClassKind.USTAR_UD, k), (ClassKind.USTAR_UU, k - 1)):
            failures.append(f"phi{m} has class {cls}, source has {k} humps")
        if result.image in images:
            failures.append(f"phi{m} = phi{images[result.image]}")
        images[result.image] = m
    targets = set()
    for l in filter_class(enumerate_paths(Family(kind.super_variant, n), caps), U_STAR):
        checked += 1
        targets.add(l)
        try:
            again = phi(psi(l)).image
        except PathError as exc:
            failures.append(f"{l}: {type(exc).__name__}: {exc}")
            continue
        if again != l:
            failures.append(f"phi(psi({l})) = {again}")
    if set(images) != targets:
        failures.append(f"{kind.value}({n}): image set differs from the U* class")
    return checked, failures


def suite_bijection(limits: Limits, caps: Caps) -> SuiteReport:
    r = SuiteReport("bijection")
    for kind, top in (
        (FamilyKind.MOTZKIN, limits.get("motzkin_max", 10)),
        (FamilyKind.DYCK, limits.get("dyck_max", 8)),
        (FamilyKind.SCHROEDER, limits.get("schroeder_max", 7)),
    ):
        for n in range(top + 1):
            checked, failures = bijection_failures(kind, n, caps)
            r.checked += checked
            r.failure_count += len(failures)
            r.failures.extend(failures[: MAX_FAILURES_KEPT - len(r.failures)])
    return r


SUITES: dict[str, Callable[[Limits, Caps], SuiteReport]] = {
    "counts": suite_counts,
    "dyck-peaks": suite_dyck_peaks,
    "motzkin-humps": suite_motzkin_humps,
    "superdyck-classes": suite_superdyck_classes,
    "narayana": suite_narayana,
    "schroeder-humps": suite_schroeder_humps,
    "schid": suite_schid,
    "bijection": suite_bijection,
}

# Short names for the identities, kept for familiarity.
ALIASES = {
    "eq1": "dyck-peaks",
    "eq2": "motzkin-humps",
    "eq3": "motzkin-humps",
    "eq4": "motzkin-humps",
    "lemma": "superdyck-classes",
    "eq6": "schroeder-humps",
    "eq7": "schroeder-humps",
    "eq8": "schid",
    "theorem1": "bijection",
}


def run_suite(name: str, limits: Limits = Limits(), caps: Caps | None = None) -> SuiteReport:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](limits, caps if caps is not None else Caps.from_env())
