import pytest
from hypothesis import given, settings

from conftest import motzkin_paths, super_ustar_paths
from lattice_humps.bijection import (
    NotUStar,
    PointNotLeftOfB,
    SplitPoints,
    find_split_backward,
    find_split_forward,
    phi,
    psi,
    relocate_hump_point,
)
from lattice_humps.enumeration import MarkedPath, NotAMarkedPath
from lattice_humps.paths import FamilyKind, Path, heights
from lattice_humps.statistics import ClassKind, humps
from lattice_humps.verify import bijection_failures

# A long worked pair (41 steps each) with flats inside L1 and L3.
FIGURE_SOURCE = "FFUFUUDDDFUUUUUDFDDDUFUUFDFDFUFDDDUUUDDDF"
FIGURE_IMAGE = "FFUFUUDDDFUUFDFDFDFUUUDDDUUUFDDDDDUFUUUDF"


def marked(text, i):
    return MarkedPath(Path(text), i)


@pytest.mark.parametrize(
    "text, hump, split",
    [
        ("UUDUDD", 0, (0, 1, 3)),
        ("UD", 0, (0, 0, 2)),
        ("FUD", 0, (1, 1, 3)),
    ],
)
def test_find_split_forward(text, hump, split):
    assert find_split_forward(marked(text, hump)) == SplitPoints(*split)


@pytest.mark.parametrize(
    "text, hump, image, kind, k",
    [
        ("UUDUDD", 0, "UDDUUD", ClassKind.USTAR_UD, 2),
        ("UDUUDD", 0, "UDDDUU", ClassKind.USTAR_UU, 1),
        ("UD", 0, "UD", ClassKind.USTAR_UD, 1),
    ],
)
def test_phi(text, hump, image, kind, k):
    result = phi(marked(text, hump))
    assert result.image == Path(image)
    assert (result.image_class.kind, result.image_class.k) == (kind, k)


@pytest.mark.parametrize(
    "text, split, point",
    [
        ("UDDUUD", (0, 2, 5), 1),
        ("UDDDUU", (0, 2, 6), 1),
        ("UD", (0, 2, 2), 1),
    ],
)
def test_find_split_backward(text, split, point):
    assert find_split_backward(Path(text)) == (SplitPoints(*split), point)


@pytest.mark.parametrize(
    "text, source, hump",
    [("UDDUUD", "UUDUDD", 0), ("UDDDUU", "UDUUDD", 0), ("UD", "UD", 0)],
)
def test_psi(text, source, hump):
    assert psi(Path(text)) == marked(source, hump)


def test_relocate_hump_point():
    assert relocate_hump_point(SplitPoints(0, 2, 5), 1, 6) == 2
    assert relocate_hump_point(SplitPoints(1, 1, 3), 1, 3) == 1
    assert relocate_hump_point(SplitPoints(0, 2, 6), 1, 6) == 1
    with pytest.raises(PointNotLeftOfB):
        relocate_hump_point(SplitPoints(0, 2, 6), 2, 6)


def test_trailing_flats_before_b():
    # L2 = UDF ends in a flat at height 0; A must not land on that flat.
    m = marked("UUDFUDD", 0)
    image = phi(m).image
    assert image == Path("UDFDUUD")
    assert find_split_backward(image)[0] == SplitPoints(0, 3, 6)
    assert psi(image) == m


def test_long_worked_pair():
    source = Path(FIGURE_SOURCE)
    assert heights(source)[24] == 4
    m = MarkedPath(source, [h.hump_point for h in humps(source)].index(24))
    assert find_split_forward(m) == SplitPoints(10, 22, 29)
    assert phi(m).image == Path(FIGURE_IMAGE)
    assert find_split_backward(Path(FIGURE_IMAGE)) == (SplitPoints(10, 17, 29), 12)
    assert psi(Path(FIGURE_IMAGE)) == m


@pytest.mark.parametrize("text", ["DUD", "FDU", "FF", "", "UUD", "DDUU"])
def test_psi_rejects_non_ustar(text):
    with pytest.raises(NotUStar):
        psi(Path(text))


@given(super_ustar_paths(max_size=40))
def test_every_ustar_path_has_a_hump_left_of_b(l):
    split, point = find_split_backward(l)
    assert point < split.b


def test_phi_rejects_negative_paths():
    with pytest.raises(NotAMarkedPath):
        phi(marked("DUUD", 0))


@pytest.mark.parametrize(
    "kind, top", [(FamilyKind.MOTZKIN, 7), (FamilyKind.DYCK, 5), (FamilyKind.SCHROEDER, 4)]
)
def test_exhaustive_small_orders(kind, top):
    for n in range(top + 1):
        checked, failures = bijection_failures(kind, n)
        assert failures == []


@settings(max_examples=300)
@given(motzkin_paths(min_size=1, max_size=60))
def test_round_trip_random_motzkin(p):
    hs = humps(p)
    images = set()
    for i in range(len(hs)):
        m = MarkedPath(p, i)
        result = phi(m)
        assert psi(result.image) == m
        images.add(result.image)
        assert result.image.text.count("F") == p.text.count("F")
        assert result.image.text.count("U") == result.image.text.count("D")
        k = len(hs)
        assert (result.image_class.kind, result.image_class.k) in (
            (ClassKind.USTAR_UD, k),
            (ClassKind.USTAR_UU, k - 1),
        )
    assert len(images) == len(hs)


@settings(max_examples=200)
@given(motzkin_paths(min_size=2, max_size=60, flats=False))
def test_dyck_closure(p):
    for i in range(len(humps(p))):
        assert "F" not in phi(MarkedPath(p, i)).image.text


@settings(max_examples=300)
@given(super_ustar_paths(max_size=60))
def test_round_trip_random_super(l):
    assert phi(psi(l)).image == l
