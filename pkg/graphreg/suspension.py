"""Graph suspensions and the Hilbert series they are predicted to yield.

Both constructions add one vertex ``n + 1``:

 * the S-suspension joins it to every vertex outside the independent set S;
 * the edge-S-suspension for an edge ``{i, j}`` not adjacent to S joins it to
   every vertex outside ``S ∪ {i, j}``.

On the series side the first adds ``λ/(1 − λ)^(|S| + 1)`` and the second
``λ(1 + λ)/(1 − λ)^(|S| + 2)`` to ``H_{R/I(G)}``.
"""

import logging
import typing

from . import exceptions
from .algebra import LAMBDA_POLY, ONE_MINUS_LAMBDA, HilbertSeries, IntegerPolynomial
from .graph import Graph, isolated_vertices, mask_is_independent, vertex_set_mask
from .utils import bit, iter_vertices


logger = logging.getLogger(__name__)

KIND_S      = "S"
KIND_EDGE_S = "edgeS"

ONE_PLUS_LAMBDA = IntegerPolynomial((1, 1))


class SuspensionStep(typing.NamedTuple):
	kind: str
	S: tuple
	edge: typing.Optional[tuple]
	new_vertex: int

	def to_dict(self):
		data = {"kind": self.kind, "S": list(self.S), "new_vertex": self.new_vertex}
		if self.edge is not None:
			data["edge"] = list(self.edge)
		return data


def _independent_mask(graph, vertices):
	vertices = sorted(set(vertices))
	mask = vertex_set_mask(graph, vertices)
	if not mask_is_independent(graph, mask):
		raise exceptions.NotIndependent(vertices)
	return mask


def _edge_and_mask(graph, edge, vertices):
	try:
		i, j = edge
	except (TypeError, ValueError):
		raise exceptions.NotAnEdge(tuple(edge) if isinstance(edge, (list, tuple)) else (edge,)) from None
	if not graph.has_edge(i, j):
		raise exceptions.NotAnEdge((i, j))
	mask = _independent_mask(graph, vertices)
	for v in iter_vertices(mask):
		for endpoint in (i, j):
			if graph.has_edge(v, endpoint):
				raise exceptions.AdjacencyViolation(v, endpoint)
	return (min(i, j), max(i, j)), mask


def _attach(graph, skip):
	apex = graph.n + 1
	edges = list(graph.edges)
	edges.extend((v, apex) for v in range(1, graph.n + 1) if not skip & bit(v))
	return Graph(apex, edges)


def s_suspension(graph, vertices):
	"""Returns ``G^S``.

	Raises
	------
	~graphreg.exceptions.NotIndependent
	~graphreg.exceptions.IsolatedVertex
	~graphreg.exceptions.CapacityExceeded

	Parameters
	----------
	graph : ~graphreg.graph.Graph
		A graph without isolated vertices
	vertices : Iterable[int]
		The independent set S
	"""
	mask = _independent_mask(graph, vertices)
	isolated = isolated_vertices(graph)
	if isolated:
		raise exceptions.IsolatedVertex(isolated[0])
	return _attach(graph, mask)


def edge_s_suspension(graph, edge, vertices):
	"""Returns ``G^{e,S}``.

	The result may have the new vertex isolated (when ``S ∪ e`` covers every
	vertex); that is allowed here and rejected by the invariant report.

	Raises
	------
	~graphreg.exceptions.NotAnEdge
	~graphreg.exceptions.NotIndependent
	~graphreg.exceptions.AdjacencyViolation
	~graphreg.exceptions.CapacityExceeded
	"""
	(i, j), mask = _edge_and_mask(graph, edge, vertices)
	return _attach(graph, mask | bit(i) | bit(j))


def check_domination_hypothesis(graph, edge, vertices):
	"""Returns whether every vertex outside ``S ∪ e`` has a neighbor in it.

	Raises
	------
	~graphreg.exceptions.NotAnEdge
	~graphreg.exceptions.NotIndependent
	~graphreg.exceptions.AdjacencyViolation
	"""
	(i, j), mask = _edge_and_mask(graph, edge, vertices)
	closed = mask | bit(i) | bit(j)
	return all(
		graph.neighbor_mask(v) & closed
		for v in iter_vertices(graph.vertex_mask & ~closed)
	)


def apply_step(graph, step):
	"""Applies a recorded :class:`SuspensionStep` to ``graph``."""
	if step.kind == KIND_S:
		result = s_suspension(graph, step.S)
	elif step.kind == KIND_EDGE_S:
		result = edge_s_suspension(graph, step.edge, step.S)
	else:
		raise exceptions.SuspensionError("Unknown suspension kind: {!r}".format(step.kind))
	if result.n != step.new_vertex:
		raise exceptions.SuspensionError(
			"Step expects new vertex {}, graph produced {}".format(step.new_vertex, result.n)
		)
	return result


###############
# Predictions #
###############

def _check_size(size, dpow):
	if not (isinstance(size, int) and 0 <= size <= dpow):
		raise exceptions.SizeOutOfRange(size, dpow)


def predict_s_suspension(series, size):
	"""Returns ``H + λ/(1 − λ)^(size + 1)`` in lowest terms.

	.. code-block:: python

		>>> str(predict_s_suspension(HilbertSeries([1, 3, 1], 2), 0))
		'(1 + 4λ)/(1 - λ)^2'

	When ``size = d − s`` for ``s = deg h ≥ 1`` the dimension is unchanged and
	``h_s`` moves by ``(−1)^(s − 1)``.

	Raises
	------
	~graphreg.exceptions.SizeOutOfRange
	~graphreg.exceptions.PredictionMismatch

	Parameters
	----------
	series : ~graphreg.algebra.HilbertSeries
		Series of the graph being suspended
	size : int
		``|S|``, between 0 and ``series.dpow``
	"""
	d = series.dpow
	_check_size(size, d)
	predicted = series + HilbertSeries(LAMBDA_POLY, size + 1)

	if size <= d - 1:
		printed = HilbertSeries(series.numerator + LAMBDA_POLY * ONE_MINUS_LAMBDA ** (d - size - 1), d)
	else:
		printed = HilbertSeries(ONE_MINUS_LAMBDA * series.numerator + LAMBDA_POLY, d + 1)
	if predicted != printed:
		raise exceptions.PredictionMismatch(printed, predicted)

	s = series.degree
	if s >= 1 and size == d - s:
		expected = series[s] + (-1) ** (s - 1)
		if predicted.dpow != d or predicted[s] != expected:
			raise exceptions.PredictionMismatch(
				"h_{} = {} over (1 - λ)^{}".format(s, expected, d), predicted
			)
	return predicted


def predict_edge_s_suspension(series, size):
	"""Returns ``H + λ(1 + λ)/(1 − λ)^(size + 2)`` in lowest terms.

	When ``size = d − s`` with ``s = deg h ≥ 2`` the dimension is unchanged
	and ``h_s`` moves by ``(−1)^(s − 2)``. Nothing is asserted for ``s = 1``.

	Raises
	------
	~graphreg.exceptions.SizeOutOfRange
	~graphreg.exceptions.PredictionMismatch
	"""
	d = series.dpow
	_check_size(size, d)
	bump = LAMBDA_POLY * ONE_PLUS_LAMBDA
	predicted = series + HilbertSeries(bump, size + 2)

	if size <= d - 2:
		printed = HilbertSeries(series.numerator + bump * ONE_MINUS_LAMBDA ** (d - size - 2), d)
	else:
		printed = HilbertSeries(ONE_MINUS_LAMBDA ** (size + 2 - d) * series.numerator + bump, size + 2)
	if predicted != printed:
		raise exceptions.PredictionMismatch(printed, predicted)

	s = series.degree
	if s >= 2 and size == d - s:
		expected = series[s] + (-1) ** (s - 2)
		if predicted.dpow != d or predicted[s] != expected:
			raise exceptions.PredictionMismatch(
				"h_{} = {} over (1 - λ)^{}".format(s, expected, d), predicted
			)
	return predicted
