import pytest

from src.verification.convergence_grid import GRID_VALUES, ConvergenceGrid

SCALES = (25, 50, 100, 200, 400)


@pytest.fixture(scope="module")
def table():
    return ConvergenceGrid().run(SCALES)


def test_row_count(table):
    cells = table[table["row"] == "cell"]
    assert len(cells) == len(GRID_VALUES) ** 3 * len(SCALES)
    assert len(table) == len(cells) + len(SCALES)


def test_n_times_error_bounded(table):
    cells = table[table["row"] == "cell"]
    assert cells["n_error"].max() <= 3.0


def test_max_error_at_largest_scale(table):
    assert ConvergenceGrid.max_error_by_scale(table)[400.0] <= 0.05


def test_max_error_shrinks(table):
    by_scale = ConvergenceGrid.max_error_by_scale(table)
    errors = [by_scale[float(n)] for n in SCALES]
    assert errors == sorted(errors, reverse=True)


def test_degenerate_cells_vanish(table):
    cells = table[(table["row"] == "cell") & (table["r1"] == table["r2"]) & (table["cap_phi"] > table["r1"])]
    assert len(cells) > 0
    assert cells["error"].max() < 1e-6


def test_limit_column(table):
    cell = table[(table["r1"] == 3.0) & (table["r2"] == 1.0) & (table["cap_phi"] == 0.5)].iloc[0]
    assert cell["limit"] == pytest.approx(3.0)
