import numpy as np
import pytest

from betaineq.catalog import eval_bound
from betaineq.errors import ConfigurationError, DomainError
from betaineq.oracle import RatioParams
from betaineq.regionmap import (
    INVALID,
    PAPER_Y_VALUES,
    Axis,
    RegionGrid,
    compute_grid,
    format_number,
    read_csv,
    region_F,
    write_csv,
    write_pgm,
)


def test_region_f_examples():
    assert region_F(RatioParams(1, 2, 1)) == -1
    assert region_F(RatioParams(1, 2, 0.5)) == -1
    assert region_F(RatioParams(1, 2, 2)) == 1


def test_region_f_domain():
    with pytest.raises(DomainError):
        region_F(RatioParams(2, 1, 1))


def test_two_point_grid():
    g = compute_grid(Axis(1.0, 2.0, 2), 1.0)
    assert g.signs.shape == (2, 2)
    assert int((g.signs != INVALID).sum()) == 1
    # row i is b, column j is a: the valid corner is b = 2, a = 1
    assert g.signs[1, 0] == -1


def test_desk_grid_small_y():
    g = compute_grid(Axis(0.1, 10.0, 201), 0.5)
    valid = g.signs[g.valid_mask()]
    assert valid.size == 201 * 200 // 2
    assert np.all(valid == -1)


def test_cells_match_region_f():
    g = compute_grid(Axis(0.1, 10.0, 41), 2.0)
    rng = np.random.default_rng(0)
    cells = list(g.cells())
    for k in rng.choice(len(cells), 60, replace=False):
        a, b, f = cells[k]
        assert f == region_F(RatioParams(a, b, 2.0))
        diff = eval_bound("M6_U", RatioParams(a, b, 2.0)) - eval_bound("FROM317_U", RatioParams(a, b, 2.0))
        assert f == (0 if abs(diff) <= 1e-12 else int(np.sign(diff)))


def test_axis_validation():
    with pytest.raises(ConfigurationError):
        Axis(0.1, 10.0, 1)
    with pytest.raises(ConfigurationError):
        Axis(0.0, 10.0, 5)
    with pytest.raises(ConfigurationError):
        compute_grid(Axis(0.1, 1.0, 3), 0.0)


def test_paper_axis():
    ax = Axis.paper()
    v = ax.values()
    assert v.size == 2001 and v[0] == 1e-16 and v[1] == 0.25 and v[-1] == 500.0
    assert len(PAPER_Y_VALUES) == 14 and PAPER_Y_VALUES[0] == 1e-16 and PAPER_Y_VALUES[-1] == 1.2


def _one_cell(sign):
    return RegionGrid(Axis(1.0, 2.0, 2), 1.0, np.array([[sign]], dtype=np.int8))


@pytest.mark.parametrize("sign, byte", [(-1, 0x00), (1, 0xFF), (0, 0x40), (INVALID, 0x80)])
def test_pgm_single_pixel(tmp_path, sign, byte):
    path = tmp_path / "g.pgm"
    write_pgm(_one_cell(sign), path)
    assert path.read_bytes() == b"P5\n1 1\n255\n" + bytes([byte])


def test_pgm_orientation(tmp_path):
    g = compute_grid(Axis(1.0, 2.0, 2), 1.0)
    path = tmp_path / "g.pgm"
    write_pgm(g, path)
    data = path.read_bytes()
    header = b"P5\n2 2\n255\n"
    assert data.startswith(header)
    pixels = data[len(header):]
    # top row is the largest b, whose left cell (a = 1) is the only valid one
    assert pixels == bytes([0x00, 0x80, 0x80, 0x80])
    assert sum(p != 128 for p in pixels) == 1


def test_csv_single_row(tmp_path):
    g = compute_grid(Axis(1.0, 2.0, 2), 1.0)
    path = tmp_path / "g.csv"
    write_csv(g, path)
    assert path.read_text() == "a,b,y,F\n1,2,1,-1\n"


def test_csv_empty(tmp_path):
    path = tmp_path / "g.csv"
    write_csv(_one_cell(INVALID), path)
    assert path.read_text() == "a,b,y,F\n"


def test_csv_round_trip(tmp_path):
    g = compute_grid(Axis(0.1, 10.0, 31), 1.2)
    path = tmp_path / "g.csv"
    write_csv(g, path)
    back = read_csv(path)
    assert back == [(a, b, 1.2, f) for a, b, f in g.cells()]


def test_format_number():
    assert format_number(1.0) == "1"
    assert format_number(0.1) == "0.1"
    assert float(format_number(1 / 3)) == 1 / 3
    assert format_number(1e-16) == "1e-16"
