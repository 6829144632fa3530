"""Finite simple graphs on the vertices ``1..n``.

Each graph keeps one neighbor bitmask per vertex (bit ``i - 1`` stands for
vertex ``i``) so that independent-set and component searches run on plain
integers. :class:`Graph` instances are never modified after construction.

Vertex sets handed back to callers are sorted tuples of labels and every
enumeration happens in lexicographic order of those tuples.
"""

import logging
import math

from . import exceptions
from .utils import bit, full_mask, iter_vertices, mask_from_vertices, popcount, vertices_from_mask


logger = logging.getLogger(__name__)

#: Largest supported vertex count, so that a vertex set fits a machine word
MAX_VERTICES = 62


def _is_label(value, n):
	return isinstance(value, int) and not isinstance(value, bool) and 1 <= value <= n


class Graph:
	"""A finite simple graph on the vertices ``1..n``.

	Raises
	------
	~graphreg.exceptions.CapacityExceeded
	~graphreg.exceptions.InvalidEdge

	Parameters
	----------
	n : int
		Number of vertices
	edges : Iterable[Tuple[int, int]]
		Unordered vertex pairs; duplicates (in either orientation) are merged
	"""
	__slots__ = ("n", "edges", "_nbr")

	def __init__(self, n, edges=()):
		if not isinstance(n, int) or isinstance(n, bool) or n < 0:
			raise exceptions.GraphError("Vertex count must be a nonnegative integer: {!r}".format(n))
		if n > MAX_VERTICES:
			raise exceptions.CapacityExceeded(MAX_VERTICES, n)

		nbr = [0] * n
		pairs = set()
		for edge in edges:
			try:
				i, j = edge
			except (TypeError, ValueError):
				raise exceptions.InvalidEdge(edge, "Malformed edge") from None
			if not (_is_label(i, n) and _is_label(j, n)):
				raise exceptions.InvalidEdge(edge, "Endpoint outside 1..{}".format(n))
			if i == j:
				raise exceptions.InvalidEdge(edge, "Loop")
			pairs.add((min(i, j), max(i, j)))
			nbr[i - 1] |= bit(j)
			nbr[j - 1] |= bit(i)

		self.n = n
		self.edges = tuple(sorted(pairs))
		self._nbr = tuple(nbr)

	@classmethod
	def _from_neighbors(cls, n, nbr):
		edges = []
		for i in range(1, n + 1):
			for j in iter_vertices(nbr[i - 1] >> i):
				edges.append((i, i + j))
		return cls(n, edges)

	@property
	def vertex_mask(self):
		return full_mask(self.n)

	@property
	def edge_count(self):
		return len(self.edges)

	def neighbor_mask(self, vertex):
		"""Returns the neighborhood of ``vertex`` as a bitmask."""
		return self._nbr[vertex - 1]

	def neighbors(self, vertex):
		"""Returns the sorted tuple of neighbors of ``vertex``."""
		return vertices_from_mask(self._nbr[vertex - 1])

	def degree(self, vertex):
		return popcount(self._nbr[vertex - 1])

	def has_edge(self, i, j):
		return _is_label(i, self.n) and _is_label(j, self.n) and bool(self._nbr[i - 1] & bit(j))

	def __eq__(self, other):
		if not isinstance(other, Graph):
			return NotImplemented
		return self.n == other.n and self.edges == other.edges

	def __hash__(self):
		return hash((self.n, self.edges))

	def __repr__(self):
		return "Graph(n={}, edges={})".format(self.n, [list(e) for e in self.edges])


def graph_from_edges(n, edges):
	"""Builds a graph on ``1..n`` from a list of vertex pairs.

	.. code-block:: python

		>>> graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).edge_count
		5

	Raises
	------
	~graphreg.exceptions.CapacityExceeded
	~graphreg.exceptions.InvalidEdge

	Parameters
	----------
	n : int
		Number of vertices, between 1 and :data:`MAX_VERTICES`
	edges : Iterable[Tuple[int, int]]
		Vertex pairs of the graph

	Returns
	-------
		:class:`Graph`
	"""
	if isinstance(n, int) and not isinstance(n, bool) and n < 1:
		raise exceptions.GraphError("A graph needs at least one vertex, got n={}".format(n))
	return Graph(n, edges)


def vertex_set_mask(graph, vertices):
	"""Validates ``vertices`` against ``graph`` and returns their bitmask.

	Raises
	------
	~graphreg.exceptions.InvalidVertex
	"""
	for v in vertices:
		if not _is_label(v, graph.n):
			raise exceptions.InvalidVertex(v, graph.n)
	return mask_from_vertices(vertices)


def _induced_on_mask(graph, mask):
	label_map = vertices_from_mask(mask)
	position = {old: new for new, old in enumerate(label_map, 1)}
	edges = [
		(position[i], position[j]) for i, j in graph.edges
		if i in position and j in position
	]
	return Graph(len(label_map), edges), label_map


def induced_subgraph(graph, vertices):
	"""Returns the subgraph induced on ``vertices``, relabeled compactly.

	The new vertex ``k`` stands for the ``k``-th smallest member of
	``vertices``; the returned label map holds the original labels in that
	order.

	Raises
	------
	~graphreg.exceptions.InvalidVertex

	Parameters
	----------
	graph : Graph
		The ambient graph
	vertices : Iterable[int]
		The vertex set W

	Returns
	-------
		Tuple[Graph, Tuple[int, ...]]
	"""
	return _induced_on_mask(graph, vertex_set_mask(graph, vertices))


def is_independent(graph, vertices):
	"""Returns whether no edge of ``graph`` lies inside ``vertices``.

	Raises
	------
	~graphreg.exceptions.InvalidVertex
	"""
	mask = vertex_set_mask(graph, vertices)
	return mask_is_independent(graph, mask)


def mask_is_independent(graph, mask):
	for v in iter_vertices(mask):
		if graph._nbr[v - 1] & mask:
			return False
	return True


##################################
# Maximum independent set search #
##################################

def max_independent_size(adjacency, mask, memo=None):
	"""Returns the size of a largest independent subset of ``mask``.

	``adjacency[k - 1]`` is the neighbor mask of item ``k``; the items need
	not be graph vertices (the induced matching search runs this on a
	conflict graph of edges).

	Parameters
	----------
	adjacency : Sequence[int]
		Neighbor masks, indexed from zero
	mask : int
		The items to search
	memo : dict
		Optional cache shared between calls on the same ``adjacency``
	"""
	return _alpha(adjacency, mask, {} if memo is None else memo)


def _alpha(adj, mask, memo):
	if not mask:
		return 0
	cached = memo.get(mask)
	if cached is not None:
		return cached

	# A vertex of degree at most one always lies in some maximum independent
	# set; otherwise branch on a vertex of maximum degree.
	pick = 0
	branch, branch_degree = 0, -1
	rest = mask
	while rest:
		low = rest & -rest
		v = low.bit_length()
		rest ^= low
		degree = popcount(adj[v - 1] & mask)
		if degree <= 1:
			pick = v
			break
		if degree > branch_degree:
			branch, branch_degree = v, degree

	if pick:
		result = 1 + _alpha(adj, mask & ~(bit(pick) | adj[pick - 1]), memo)
	else:
		result = _alpha(adj, mask & ~bit(branch), memo)
		if result < popcount(mask & ~adj[branch - 1]):
			result = max(result, 1 + _alpha(adj, mask & ~(bit(branch) | adj[branch - 1]), memo))
	memo[mask] = result
	return result


def independence_number(graph):
	"""Returns the largest size of an independent set of ``graph``.

	For a graph with at least one vertex this is the Krull dimension of
	the quotient by its edge ideal.
	"""
	return max_independent_size(graph._nbr, graph.vertex_mask)


def enumerate_independent_sets(graph, k):
	"""Yields every independent set of size ``k``, lexicographically.

	.. code-block:: python

		>>> c5 = graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
		>>> list(enumerate_independent_sets(c5, 2))
		[(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]

	Branches that cannot be completed are cut using the exact independence
	number of the remaining candidates, so fetching only the first result
	stays cheap.

	Parameters
	----------
	graph : Graph
		The graph to search
	k : int
		Size of the yielded sets

	Returns
	-------
		generator of Tuple[int, ...]
	"""
	if k < 0 or k > graph.n:
		return
	nbr = graph._nbr
	memo = {}

	def extend(chosen, candidates, need):
		if need == 0:
			yield vertices_from_mask(chosen)
			return
		if popcount(candidates) < need or _alpha(nbr, candidates, memo) < need:
			return
		rest = candidates
		while rest and popcount(rest) >= need:
			low = rest & -rest
			rest ^= low
			yield from extend(chosen | low, rest & ~nbr[low.bit_length() - 1], need - 1)

	yield from extend(0, graph.vertex_mask, k)


def first_independent_set(graph, k):
	"""Returns the lexicographically least independent set of size ``k``,
	or ``None`` if there is none."""
	return next(enumerate_independent_sets(graph, k), None)


def count_independent_sets(graph):
	"""Returns the counts of independent sets of ``graph`` by size.

	Entry ``i`` of the result is the number of independent sets with ``i``
	members (entry 0 counts the empty set). This is the f-vector of the
	independence complex, computed without listing faces.
	"""
	return list(_independence_counts(graph._nbr, graph.vertex_mask, {}))


def _convolve(left, right):
	out = [0] * (len(left) + len(right) - 1)
	for i, a in enumerate(left):
		if a:
			for j, b in enumerate(right):
				out[i + j] += a * b
	return tuple(out)


def _independence_counts(nbr, mask, memo):
	if not mask:
		return (1,)
	cached = memo.get(mask)
	if cached is not None:
		return cached

	free = 0
	for v in iter_vertices(mask):
		if not nbr[v - 1] & mask:
			free |= bit(v)
	if free:
		k = popcount(free)
		row = tuple(math.comb(k, i) for i in range(k + 1))
		result = _convolve(_independence_counts(nbr, mask & ~free, memo), row)
	else:
		parts = component_masks(nbr, mask)
		if len(parts) > 1:
			result = (1,)
			for part in parts:
				result = _convolve(result, _independence_counts(nbr, part, memo))
		else:
			v = max(iter_vertices(mask), key=lambda u: popcount(nbr[u - 1] & mask))
			without = _independence_counts(nbr, mask & ~bit(v), memo)
			inside = _independence_counts(nbr, mask & ~(bit(v) | nbr[v - 1]), memo)
			width = max(len(without), len(inside) + 1)
			result = tuple(
				(without[i] if i < len(without) else 0)
				+ (inside[i - 1] if 0 < i <= len(inside) else 0)
				for i in range(width)
			)
	memo[mask] = result
	return result


###########################
# Unions and connectivity #
###########################

def disjoint_union(parts):
	"""Returns the disjoint union of ``parts``.

	The vertices of part ``i`` are shifted by the total vertex count of
	the parts before it.

	Raises
	------
	~graphreg.exceptions.CapacityExceeded

	Parameters
	----------
	parts : Sequence[Graph]
		At least one graph
	"""
	parts = list(parts)
	if not parts:
		raise exceptions.GraphError("A disjoint union needs at least one part")
	total = sum(part.n for part in parts)
	if total > MAX_VERTICES:
		raise exceptions.CapacityExceeded(MAX_VERTICES, total)

	edges = []
	offset = 0
	for part in parts:
		edges.extend((i + offset, j + offset) for i, j in part.edges)
		offset += part.n
	return Graph(total, edges)


def component_masks(nbr, mask):
	"""Splits ``mask`` into the vertex masks of its connected components,
	ordered by smallest member."""
	components = []
	remaining = mask
	while remaining:
		seen = remaining & -remaining
		frontier = seen
		while frontier:
			low = frontier & -frontier
			frontier ^= low
			fresh = nbr[low.bit_length() - 1] & mask & ~seen
			seen |= fresh
			frontier |= fresh
		components.append(seen)
		remaining &= ~seen
	return components


def connected_components(graph):
	"""Returns the vertex sets of the connected components of ``graph``."""
	return [vertices_from_mask(c) for c in component_masks(graph._nbr, graph.vertex_mask)]


def is_connected(graph):
	"""Returns whether ``graph`` is connected; the empty graph is not."""
	return graph.n >= 1 and len(component_masks(graph._nbr, graph.vertex_mask)) == 1


def isolated_vertices(graph):
	"""Returns the sorted tuple of vertices without neighbors."""
	return tuple(v for v in range(1, graph.n + 1) if not graph._nbr[v - 1])


def has_isolated_vertex(graph):
	return not all(graph._nbr)
