import pytest
from hypothesis import given
from hypothesis import strategies as st

from lzwpat.colormaps import (
    EmptyInput,
    OutOfRange,
    UnknownColormap,
    get_colormap,
    list_colormaps,
    normalize,
    sample,
    to_hex,
)


def test_list_colormaps():
    assert list_colormaps() == ["sequential_blue", "coolwarm", "jet"]


def test_every_listed_name_resolves():
    for name in list_colormaps():
        assert get_colormap(name).name == name


def test_unknown_name():
    with pytest.raises(UnknownColormap):
        get_colormap("viridis")


def test_jet_endpoints_and_midpoint():
    jet = get_colormap("jet")
    assert sample(jet, 0.0) == (0, 0, 128)
    assert sample(jet, 1.0) == (128, 0, 0)
    assert sample(jet, 0.5) == (128, 255, 128)


def test_coolwarm_midpoint():
    assert sample(get_colormap("coolwarm"), 0.5) == (241, 241, 241)


def test_control_points_sampled_exactly():
    for name in list_colormaps():
        cmap = get_colormap(name)
        for t, rgb in cmap.control_points:
            assert sample(cmap, t) == rgb


def test_sample_out_of_range():
    jet = get_colormap("jet")
    for t in (-0.01, 1.01, 2.0):
        with pytest.raises(OutOfRange):
            sample(jet, t)


@given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_sample_channels_in_byte_range(t):
    for name in list_colormaps():
        rgb = sample(get_colormap(name), t)
        assert all(0 <= c <= 255 for c in rgb)


def test_sampling_monotone_between_control_points():
    for name in list_colormaps():
        cmap = get_colormap(name)
        for (t0, c0), (t1, c1) in zip(cmap.control_points, cmap.control_points[1:]):
            steps = [t0 + (t1 - t0) * i / 16 for i in range(17)]
            samples = [sample(cmap, t) for t in steps]
            for channel in range(3):
                values = [s[channel] for s in samples]
                if c0[channel] <= c1[channel]:
                    assert values == sorted(values)
                else:
                    assert values == sorted(values, reverse=True)


def test_normalize_examples():
    assert normalize([1, 3]) == [0.0, 1.0]
    assert normalize([7, 7, 7]) == [0.5, 0.5, 0.5]
    assert normalize([0, 5, 10]) == [0.0, 0.5, 1.0]


def test_normalize_empty():
    with pytest.raises(EmptyInput):
        normalize([])


@given(st.lists(st.integers(min_value=0, max_value=10**9), min_size=1, max_size=50))
def test_normalize_order_preserving_and_bounded(values):
    result = normalize(values)
    assert all(0.0 <= r <= 1.0 for r in result)
    for (v1, r1) in zip(values, result):
        for (v2, r2) in zip(values, result):
            if v1 <= v2:
                assert r1 <= r2


def test_hex_serialization():
    assert to_hex((0, 0, 128)) == "#000080"
    assert to_hex((128, 255, 128)) == "#80ff80"
    assert to_hex((255, 255, 255)) == "#ffffff"
