"""Test S-suspensions, edge-S-suspensions and their predicted series."""
import importlib

import pytest

import graphreg.edge_ideal
import graphreg.exceptions
import graphreg.suspension
from graphreg.algebra import HilbertSeries
from graphreg.graph import Graph

# The package re-exports the `edge_ideal` function, which shadows the submodule attribute
graphreg_edge_ideal = importlib.import_module("graphreg.edge_ideal")


@pytest.fixture
def c5():
	return Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


@pytest.fixture
def c8():
	return Graph(8, [(i, i % 8 + 1) for i in range(1, 9)])


def test_s_suspension(c5):
	result = graphreg.suspension.s_suspension(c5, [3, 1])
	assert result.n == 6
	assert result.neighbors(6) == (2, 4, 5)
	assert set(c5.edges) < set(result.edges)
	assert graphreg_edge_ideal.hilbert_series(result) == HilbertSeries([1, 3, -2, -1], 3)


def test_s_suspension_of_empty_set(c5):
	result = graphreg.suspension.s_suspension(c5, [])
	assert result.neighbors(6) == (1, 2, 3, 4, 5)
	assert graphreg_edge_ideal.hilbert_series(result) == HilbertSeries([1, 4], 2)


def test_s_suspension_preconditions(c5):
	with pytest.raises(graphreg.exceptions.NotIndependent):
		graphreg.suspension.s_suspension(c5, [1, 2])
	with pytest.raises(graphreg.exceptions.InvalidVertex):
		graphreg.suspension.s_suspension(c5, [6])
	with pytest.raises(graphreg.exceptions.IsolatedVertex):
		graphreg.suspension.s_suspension(Graph(3, [(1, 2)]), [1])


def test_edge_s_suspension(c5):
	result = graphreg.suspension.edge_s_suspension(c5, (1, 2), [])
	assert result.neighbors(6) == (3, 4, 5)
	assert graphreg_edge_ideal.hilbert_series(result) == HilbertSeries([1, 4, 2], 2)

	result = graphreg.suspension.edge_s_suspension(c5, (2, 1), [4])
	assert result.neighbors(6) == (3, 5)
	assert graphreg_edge_ideal.hilbert_series(result) == HilbertSeries([1, 3, -1, -1], 3)


def test_edge_s_suspension_preconditions(c5):
	with pytest.raises(graphreg.exceptions.NotAnEdge):
		graphreg.suspension.edge_s_suspension(c5, (1, 3), [])
	with pytest.raises(graphreg.exceptions.NotAnEdge):
		graphreg.suspension.edge_s_suspension(c5, (1, 2, 3), [])
	with pytest.raises(graphreg.exceptions.NotIndependent):
		graphreg.suspension.edge_s_suspension(c5, (1, 2), [3, 4])
	with pytest.raises(graphreg.exceptions.AdjacencyViolation) as info:
		graphreg.suspension.edge_s_suspension(c5, (1, 2), [3])
	assert (info.value.vertex, info.value.endpoint) == (3, 2)
	with pytest.raises(graphreg.exceptions.AdjacencyViolation):
		graphreg.suspension.edge_s_suspension(c5, (1, 2), [1])


def test_domination_hypothesis(c5):
	assert not graphreg.suspension.check_domination_hypothesis(c5, (1, 2), [])
	assert graphreg.suspension.check_domination_hypothesis(c5, (1, 2), [4])


@pytest.mark.parametrize("size,expected", [
	(0, HilbertSeries([1, 4], 2)),
	(1, HilbertSeries([1, 4, 1], 2)),
	(2, HilbertSeries([1, 3, -2, -1], 3)),
])
def test_predict_s_suspension(size, expected):
	assert graphreg.suspension.predict_s_suspension(HilbertSeries([1, 3, 1], 2), size) == expected


@pytest.mark.parametrize("size,expected", [
	(0, HilbertSeries([1, 4, 2], 2)),
	(1, HilbertSeries([1, 3, -1, -1], 3)),
	(2, HilbertSeries([1, 2, -3, 1, 1], 4)),
])
def test_predict_edge_s_suspension(size, expected):
	assert graphreg.suspension.predict_edge_s_suspension(HilbertSeries([1, 3, 1], 2), size) == expected


def test_predictions_move_top_coefficient(c8):
	"""With |S| = d − s the dimension stays and h_s moves by one."""
	series = graphreg_edge_ideal.hilbert_series(c8)
	assert series == HilbertSeries([1, 4, 2, -4, -1], 4)
	raised = graphreg.suspension.predict_s_suspension(series, 0)
	assert (raised.dpow, raised[4]) == (4, -2)
	lowered = graphreg.suspension.predict_edge_s_suspension(series, 0)
	assert lowered == HilbertSeries([1, 5, 1, -5], 4)


@pytest.mark.parametrize("size", [-1, 3, "1"])
def test_predict_size_out_of_range(size):
	with pytest.raises(graphreg.exceptions.SizeOutOfRange):
		graphreg.suspension.predict_s_suspension(HilbertSeries([1, 3, 1], 2), size)
	with pytest.raises(graphreg.exceptions.SizeOutOfRange):
		graphreg.suspension.predict_edge_s_suspension(HilbertSeries([1, 3, 1], 2), size)


def test_apply_step(c5):
	step = graphreg.suspension.SuspensionStep("edgeS", (4,), (1, 2), 6)
	assert graphreg.suspension.apply_step(c5, step) == \
		graphreg.suspension.edge_s_suspension(c5, (1, 2), [4])
	assert step.to_dict() == {"kind": "edgeS", "S": [4], "edge": [1, 2], "new_vertex": 6}

	with pytest.raises(graphreg.exceptions.SuspensionError):
		graphreg.suspension.apply_step(c5, graphreg.suspension.SuspensionStep("S", (1,), None, 7))
	with pytest.raises(graphreg.exceptions.SuspensionError):
		graphreg.suspension.apply_step(c5, graphreg.suspension.SuspensionStep("X", (), None, 6))
