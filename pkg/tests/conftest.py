from __future__ import annotations

from itertools import product

import pytest
from hypothesis import strategies as st

from lattice_humps.paths import FamilyKind, Path


def brute_force(kind: FamilyKind, n: int) -> set[str]:
    """Every member of a family, by filtering all words of the right length.

    Deliberately independent of the library: only itertools and prefix sums.
    """
    base = kind.base
    if base is FamilyKind.DYCK:
        lengths, alphabet = [2 * n], "UD"
    elif base is FamilyKind.MOTZKIN:
        lengths, alphabet = [n], "UDF"
    else:
        lengths, alphabet = [n + k for k in range(n + 1)], "UDF"
    found = set()
    for length in lengths:
        for word in product(alphabet, repeat=length):
            h, low = 0, 0
            for c in word:
                h += {"U": 1, "D": -1, "F": 0}[c]
                low = min(low, h)
            if h != 0 or (low < 0 and not kind.is_super):
                continue
            if base is FamilyKind.SCHROEDER and word.count("U") + word.count("F") != n:
                continue
            found.add("".join(word))
    return found


@pytest.fixture
def oracle():
    return brute_force


@st.composite
def motzkin_paths(draw, min_size=0, max_size=40, flats=True):
    """Random nonnegative paths returning to 0, built step by step."""
    n = draw(st.integers(min_size, max_size))
    if not flats:
        n -= n % 2
    steps, h = [], 0
    for i in range(n):
        left = n - i - 1
        options = [s for s, d in (("U", 1), ("F", 0), ("D", -1)) if 0 <= h + d <= left and (flats or s != "F")]
        if not flats:
            options = [s for s in options if (h + (1 if s == "U" else -1)) % 2 == left % 2]
        s = draw(st.sampled_from(options))
        steps.append(s)
        h += {"U": 1, "D": -1, "F": 0}[s]
    return Path("".join(steps))


@st.composite
def super_ustar_paths(draw, max_size=40):
    """Random super Motzkin paths whose first non-flat step is U."""
    n = draw(st.integers(2, max_size))
    lead = draw(st.integers(0, n - 2))
    rest_len = n - lead - 1
    steps, h = ["F"] * lead + ["U"], 1
    for i in range(rest_len):
        left = rest_len - i - 1
        options = [s for s, d in (("U", 1), ("F", 0), ("D", -1)) if abs(h + d) <= left]
        s = draw(st.sampled_from(options))
        steps.append(s)
        h += {"U": 1, "D": -1, "F": 0}[s]
    return Path("".join(steps))
