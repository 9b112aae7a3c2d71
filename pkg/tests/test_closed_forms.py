import pytest
from hypothesis import given
from hypothesis import strategies as st

from cartdet.closed_forms import (
    Case,
    closed_det,
    cycle_det,
    cylinder_det,
    grid_det,
    mobius_det,
    path_det,
    torus_det,
)
from cartdet.exact import bareiss_det, nullity_of
from cartdet.graphs import Cycle, Cylinder, Grid, MobiusLadder, Path, Torus, adjacency_matrix, realize


@pytest.mark.parametrize(
    "fn, args, value, case",
    [
        (grid_det, (2, 1), -1, Case.COPRIME),
        (grid_det, (2, 2), 0, Case.SINGULAR),
        (grid_det, (3, 2), -1, Case.COPRIME),
        (torus_det, (3, 3), 64, Case.BOTH_ODD),
        (torus_det, (3, 5), 4, Case.BOTH_ODD),
        (torus_det, (4, 5), 0, Case.SINGULAR),
        (cylinder_det, (1, 3), 2, Case.N_ODD_COPRIME),
        (cylinder_det, (2, 4), 9, Case.N_EVEN_COPRIME_HALF),
        (cylinder_det, (2, 3), 0, Case.SINGULAR),
        (mobius_det, (2,), -3, Case.RESIDUE_PM2),
        (mobius_det, (3,), 0, Case.SINGULAR),
        (mobius_det, (7,), -9, Case.RESIDUE_PM1),
        (path_det, (2,), -1, Case.ODD),
        (path_det, (3,), 0, Case.SINGULAR),
        (path_det, (4,), 1, Case.ODD),
        (cycle_det, (3,), 2, Case.ODD),
        (cycle_det, (6,), -4, Case.TWO_MOD_FOUR),
        (cycle_det, (8,), 0, Case.SINGULAR),
    ],
)
def test_examples(fn, args, value, case):
    r = fn(*args)
    assert (r.value, r.case_label) == (value, case)


def test_dispatch():
    assert closed_det(Torus(5, 5)).value == 1024
    assert closed_det(Grid(1, 1)).value == 0
    assert closed_det(MobiusLadder(8)).value == -3
    assert closed_det(Path(2)) == path_det(2)
    assert closed_det(Cycle(6)) == cycle_det(6)
    assert closed_det(Cylinder(2, 4)) == cylinder_det(2, 4)
    with pytest.raises(TypeError):
        closed_det("grid")


@pytest.mark.parametrize(
    "fn, args",
    [(grid_det, (0, 1)), (grid_det, (1, 0)), (torus_det, (2, 3)), (cylinder_det, (1, 2)),
     (cylinder_det, (0, 3)), (mobius_det, (1,)), (path_det, (0,)), (cycle_det, (2,))],
)
def test_domain(fn, args):
    with pytest.raises(ValueError):
        fn(*args)


def test_torus_big_gcd_is_exact():
    assert torus_det(99, 99).value == 4**99


@given(st.integers(1, 200), st.integers(1, 200))
def test_grid_symmetric(p, q):
    assert grid_det(p, q).value == grid_det(q, p).value


@given(st.integers(3, 200), st.integers(3, 200))
def test_torus_symmetric(m, n):
    assert torus_det(m, n) == torus_det(n, m)


@given(st.integers(2, 500))
def test_mobius_period_six(n):
    assert mobius_det(n) == mobius_det(n + 6)


@pytest.mark.parametrize("p", range(1, 40))
def test_grid_width_one_is_path(p):
    assert grid_det(p, 1).value == path_det(p).value


@pytest.mark.parametrize("n", range(3, 40))
def test_cylinder_one_row_is_cycle(n):
    assert cylinder_det(1, n).value == cycle_det(n).value


@pytest.mark.parametrize("f", [Grid(4, 6), Torus(5, 7), Cylinder(3, 6), Cylinder(4, 5), MobiusLadder(11)], ids=str)
def test_against_oracle_spot(f):
    cf = closed_det(f)
    assert cf.value == bareiss_det(adjacency_matrix(realize(f)))
    assert (cf.value == 0) == (nullity_of(realize(f)).nullity > 0)
