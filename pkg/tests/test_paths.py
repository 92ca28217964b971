import pytest
from hypothesis import given
from hypothesis import strategies as st

from lattice_humps.paths import (
    Family,
    FamilyKind,
    IndexOutOfRange,
    InvalidCharacter,
    Path,
    Step,
    format_path,
    heights,
    is_member,
    mirror,
    parse_path,
    split_at,
)

words = st.text(alphabet="UDF", max_size=30)


def test_parse_path():
    assert parse_path("UUDUDD").steps == [Step.UP, Step.UP, Step.DOWN, Step.UP, Step.DOWN, Step.DOWN]
    assert len(parse_path("")) == 0


def test_parse_path_rejects_bad_character():
    with pytest.raises(InvalidCharacter) as info:
        parse_path("UXD")
    assert info.value.position == 1


def test_parse_is_case_sensitive():
    with pytest.raises(InvalidCharacter):
        parse_path("UuD")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("UUDUDD", [0, 1, 2, 1, 2, 1, 0]),
        ("FFF", [0, 0, 0, 0]),
        ("UDDDUU", [0, 1, 0, -1, -2, -1, 0]),
        ("", [0]),
    ],
)
def test_heights(text, expected):
    assert heights(Path(text)) == expected


@pytest.mark.parametrize(
    "text, kind, order, expected",
    [
        ("UDDU", FamilyKind.SUPER_DYCK, 2, True),
        ("UDDU", FamilyKind.DYCK, 2, False),
        ("FUD", FamilyKind.MOTZKIN, 3, True),
        ("FUD", FamilyKind.MOTZKIN, 2, False),
        ("UFD", FamilyKind.DYCK, 1, False),
        ("UFD", FamilyKind.SCHROEDER, 2, True),
        ("UDUD", FamilyKind.SCHROEDER, 2, True),
        ("DFU", FamilyKind.SCHROEDER, 2, False),
        ("DFU", FamilyKind.SUPER_SCHROEDER, 2, True),
        ("UU", FamilyKind.SUPER_MOTZKIN, 2, False),
        ("", FamilyKind.DYCK, 0, True),
        ("", FamilyKind.SUPER_SCHROEDER, 0, True),
    ],
)
def test_is_member(text, kind, order, expected):
    assert is_member(Path(text), Family(kind, order)) is expected


def test_mirror_examples():
    assert mirror(Path("UUDD")) == Path("DDUU")
    assert mirror(Path("FFF")) == Path("FFF")


def test_split_at():
    assert split_at(Path("UUDUDD"), 1, 3) == Path("UD")
    assert split_at(Path("UUDUDD"), 0, 6) == Path("UUDUDD")
    assert split_at(Path("UD"), 1, 1) == Path("")
    with pytest.raises(IndexOutOfRange):
        split_at(Path("UD"), 1, 3)
    with pytest.raises(IndexOutOfRange):
        split_at(Path("UD"), 2, 1)


def test_family_kind_relations():
    assert FamilyKind.SUPER_MOTZKIN.base is FamilyKind.MOTZKIN
    assert FamilyKind.DYCK.super_variant is FamilyKind.SUPER_DYCK
    assert not FamilyKind.SCHROEDER.is_super


@given(words)
def test_heights_shape(text):
    h = heights(Path(text))
    assert len(h) == len(text) + 1 and h[0] == 0
    assert all(b - a in (-1, 0, 1) for a, b in zip(h, h[1:]))


@given(words)
def test_mirror_is_involution_negating_heights(text):
    p = Path(text)
    assert mirror(mirror(p)) == p
    assert heights(mirror(p)) == [-y for y in heights(p)]
    assert [i for i, c in enumerate(text) if c == "F"] == [i for i, c in enumerate(mirror(p).text) if c == "F"]


@given(words)
def test_parse_format_round_trip(text):
    assert format_path(parse_path(text)) == text


@given(words)
def test_super_membership_is_balance_plus_counts(text):
    p = Path(text)
    h = heights(p)
    for kind, order in [
        (FamilyKind.MOTZKIN, len(text)),
        (FamilyKind.SCHROEDER, text.count("U") + text.count("F")),
    ]:
        sup = is_member(p, Family(kind.super_variant, order))
        assert sup == (h[-1] == 0)
        assert is_member(p, Family(kind, order)) == (sup and min(h) >= 0)
