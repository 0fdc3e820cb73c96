"""Auction tests: worked examples, replay certificate, balance bounds."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scopp.auction import (
    AUCTIONED,
    DOMINATED,
    Assignment,
    BiasTable,
    RobotState,
    auction_conflicts,
    compute_bias,
)
from scopp.discretize import FREE, Cell, Grid
from scopp.errors import InconsistentStateError, InvalidInputError
from scopp.geo import CartPoint


def zero_bias(n: int) -> BiasTable:
    return BiasTable(d0_m=(0.0,) * n, bias_cells=(0.0,) * n, bias_factor=0.5)


def bias_of(cells: tuple[float, ...]) -> BiasTable:
    return BiasTable(d0_m=tuple(c * 25.0 for c in cells), bias_cells=cells, bias_factor=0.5)


def dominated_counts(counts: list[int]) -> dict[int, int]:
    """Synthesize a dominated map giving each robot the requested cell count."""
    out: dict[int, int] = {}
    next_id = 0
    for robot, c in enumerate(counts):
        for _ in range(c):
            out[next_id] = robot
            next_id += 1
    return out


def toy_grid(centers: list[CartPoint], width: float = 25.0) -> Grid:
    cells = tuple(
        Cell(id=i, center=c, perimeter_points=(), status=FREE) for i, c in enumerate(centers)
    )
    return Grid(cells=cells, cell_width_m=width, origin=CartPoint(0, 0), rows=1, cols=len(cells))


class TestWorkedExamples:
    def test_tie_goes_to_robot_zero(self):
        dom = dominated_counts([5, 5])
        out = auction_conflicts([20], dom, zero_bias(2), n_robots=2)
        assert len(out.cells_by_robot[0]) == 6
        assert len(out.cells_by_robot[1]) == 5
        assert 20 in out.cells_by_robot[0]

    def test_bias_shifts_both_cells(self):
        # robot 0 is handicapped by 2 cell-equivalents: 5+2 > 5 and 5+2 > 6
        dom = dominated_counts([5, 5])
        out = auction_conflicts([20, 21], dom, bias_of((2.0, 0.0)), n_robots=2)
        assert len(out.cells_by_robot[0]) == 5
        assert len(out.cells_by_robot[1]) == 7
        assert {20, 21} <= set(out.cells_by_robot[1])

    def test_unbalanced_counts_fill_the_light_robot(self):
        dom = dominated_counts([3, 7])
        out = auction_conflicts([100, 101, 102, 103], dom, zero_bias(2), n_robots=2)
        assert len(out.cells_by_robot[0]) == 7
        assert len(out.cells_by_robot[1]) == 7

    def test_sources_recorded(self):
        dom = dominated_counts([2, 1])
        out = auction_conflicts([50], dom, zero_bias(2), n_robots=2)
        assert out.source[50] == AUCTIONED
        assert all(out.source[c] == DOMINATED for c in dom)

    def test_cells_sorted_per_robot(self):
        dom = {9: 0, 1: 0, 4: 1}
        out = auction_conflicts([7, 2], dom, zero_bias(2), n_robots=2)
        for cells in out.cells_by_robot:
            assert list(cells) == sorted(cells)


class TestAuctionInvariants:
    @settings(max_examples=120, deadline=None)
    @given(
        st.integers(min_value=1, max_value=6),
        st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=6),
        st.integers(min_value=0, max_value=25),
        st.lists(st.floats(min_value=0.0, max_value=50.0), min_size=6, max_size=6),
    )
    def test_replay_certificate(self, n_robots, dom_counts, n_conflicts, biases):
        dom_counts = (dom_counts * n_robots)[:n_robots]
        dom = dominated_counts(dom_counts)
        conflicted = list(range(1000, 1000 + n_conflicts))
        table = bias_of(tuple(biases[:n_robots]))
        out = auction_conflicts(conflicted, dom, table, n_robots=n_robots)

        owner = {c: r for r, cells in enumerate(out.cells_by_robot) for c in cells}
        counts = [float(c) for c in dom_counts]
        for cell in sorted(conflicted):
            winner = owner[cell]
            bids = [counts[r] + table.bias_cells[r] for r in range(n_robots)]
            assert counts[winner] + table.bias_cells[winner] == min(bids)
            # tie-break: no robot with the same bid has a lower index
            assert all(bids[r] > bids[winner] for r in range(winner))
            counts[winner] += 1.0

    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(min_value=2, max_value=6),
        st.lists(st.integers(min_value=0, max_value=12), min_size=2, max_size=6),
        st.integers(min_value=1, max_value=30),
    )
    def test_zero_bias_balance_bound(self, n_robots, dom_counts, n_conflicts):
        dom_counts = (dom_counts * n_robots)[:n_robots]
        dom = dominated_counts(dom_counts)
        initial_spread = max(dom_counts) - min(dom_counts)
        out = auction_conflicts(
            list(range(500, 500 + n_conflicts)), dom, zero_bias(n_robots), n_robots
        )
        final = [len(c) for c in out.cells_by_robot]
        assert max(final) - min(final) <= max(1, initial_spread)

    def test_totality_and_disjointness(self):
        dom = dominated_counts([4, 2, 6])
        conflicted = [200, 201, 202, 203, 204]
        out = auction_conflicts(conflicted, dom, zero_bias(3), n_robots=3)
        seen = [c for cells in out.cells_by_robot for c in cells]
        assert sorted(seen) == sorted(list(dom) + conflicted)
        assert len(seen) == len(set(seen))

    def test_monotone_bias_effect(self):
        dom = dominated_counts([3, 3, 3])
        conflicted = list(range(100, 112))
        base = auction_conflicts(conflicted, dom, bias_of((1.0, 0.0, 0.0)), 3)
        worse = auction_conflicts(conflicted, dom, bias_of((4.0, 0.0, 0.0)), 3)
        won_base = sum(1 for c in base.cells_by_robot[0] if base.source[c] == AUCTIONED)
        won_worse = sum(1 for c in worse.cells_by_robot[0] if worse.source[c] == AUCTIONED)
        assert won_worse <= won_base

    def test_deterministic(self):
        dom = dominated_counts([1, 5, 2])
        conflicted = list(range(300, 320))
        a = auction_conflicts(conflicted, dom, bias_of((0.5, 1.5, 0.0)), 3)
        b = auction_conflicts(conflicted, dom, bias_of((0.5, 1.5, 0.0)), 3)
        assert a == Assignment(cells_by_robot=b.cells_by_robot, source=b.source)


class TestAuctionErrors:
    def test_zero_robots(self):
        with pytest.raises(InvalidInputError):
            auction_conflicts([], {}, zero_bias(1), n_robots=0)

    def test_bias_length_mismatch(self):
        with pytest.raises(InvalidInputError, match="bias table"):
            auction_conflicts([1], {}, zero_bias(2), n_robots=3)

    def test_cell_both_dominated_and_conflicted(self):
        with pytest.raises(InconsistentStateError, match="both"):
            auction_conflicts([5], {5: 0}, zero_bias(2), n_robots=2)

    def test_dominated_robot_out_of_range(self):
        with pytest.raises(InvalidInputError, match="unknown robot"):
            auction_conflicts([], {0: 7}, zero_bias(2), n_robots=2)


class TestComputeBias:
    def test_exact_cell_conversion(self):
        # d0 = 100 m with factor 0.5 on a 25 m grid is exactly 2 cells
        grid = toy_grid([CartPoint(0.0, 0.0)])
        robots = [RobotState(index=0, start=CartPoint(100.0, 0.0))]
        table = compute_bias(robots, {0: 0}, grid, bias_factor=0.5)
        assert table.d0_m == (100.0,)
        assert table.bias_cells == (2.0,)

    def test_robot_on_its_cell_has_zero_bias(self):
        grid = toy_grid([CartPoint(10.0, 10.0)])
        robots = [RobotState(index=0, start=CartPoint(10.0, 10.0))]
        table = compute_bias(robots, {0: 0}, grid)
        assert table.d0_m == (0.0,)
        assert table.bias_cells == (0.0,)

    def test_zero_factor_kills_bias(self):
        grid = toy_grid([CartPoint(0.0, 0.0), CartPoint(25.0, 0.0)])
        robots = [
            RobotState(index=0, start=CartPoint(-40.0, 0.0)),
            RobotState(index=1, start=CartPoint(500.0, 0.0)),
        ]
        table = compute_bias(robots, {0: 0, 1: 1}, grid, bias_factor=0.0)
        assert table.bias_cells == (0.0, 0.0)

    def test_nearest_owned_center_wins(self):
        grid = toy_grid([CartPoint(0.0, 0.0), CartPoint(100.0, 0.0)])
        robots = [RobotState(index=0, start=CartPoint(90.0, 0.0))]
        table = compute_bias(robots, {0: 0, 1: 0}, grid)
        assert table.d0_m == (10.0,)

    def test_fallback_to_free_cells_when_unowned(self):
        grid = toy_grid([CartPoint(0.0, 0.0), CartPoint(100.0, 0.0)])
        robots = [
            RobotState(index=0, start=CartPoint(-30.0, 0.0)),
            RobotState(index=1, start=CartPoint(130.0, 0.0)),
        ]
        # robot 1 dominates nothing; it measures against the nearest free cell
        table = compute_bias(robots, {0: 0, 1: 0}, grid)
        assert table.d0_m == (30.0, 30.0)

    def test_robot_indexes_must_cover_range(self):
        grid = toy_grid([CartPoint(0.0, 0.0)])
        robots = [RobotState(index=1, start=CartPoint(0.0, 0.0))]
        with pytest.raises(InvalidInputError, match="0..n-1"):
            compute_bias(robots, {}, grid)

    def test_negative_factor_rejected(self):
        grid = toy_grid([CartPoint(0.0, 0.0)])
        robots = [RobotState(index=0, start=CartPoint(0.0, 0.0))]
        with pytest.raises(InvalidInputError, match="bias_factor"):
            compute_bias(robots, {}, grid, bias_factor=-0.1)

    def test_negative_robot_index(self):
        with pytest.raises(InvalidInputError):
            RobotState(index=-1, start=CartPoint(0, 0))
