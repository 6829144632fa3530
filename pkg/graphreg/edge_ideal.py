"""Edge ideals and the invariants of their quotient rings.

Everything here takes a :class:`~graphreg.graph.Graph` and answers in terms
of ``R/I(G)``: the induced matching number ``im``, the matching number
``m``, the regularity, the Krull dimension and the h-polynomial.
"""

import logging
import typing

from . import exceptions
from .algebra import HilbertSeries, IntegerPolynomial, SquarefreeMonomialIdeal, hilbert_series_from_f_vector
from .graph import (
	component_masks, count_independent_sets, disjoint_union, independence_number,
	induced_subgraph, is_connected, isolated_vertices, max_independent_size,
)
from .homology import FieldSpec, independence_homology_rank
from .utils import bit, iter_vertices, popcount, vertices_from_mask


logger = logging.getLogger(__name__)


def edge_ideal(graph):
	"""Returns ``I(G)``, generated by ``x_i x_j`` for the edges ``{i, j}``.

	Raises
	------
	~graphreg.exceptions.NoEdges
	"""
	if not graph.edges:
		raise exceptions.NoEdges()
	return SquarefreeMonomialIdeal(graph.n, graph.edges)


def hilbert_series(graph):
	"""Returns the Hilbert series of ``R/I(G)``, counting independent sets
	by size instead of listing them."""
	return hilbert_series_from_f_vector(count_independent_sets(graph))


#############
# Matchings #
#############

def _live(nbr, mask):
	live = 0
	for v in iter_vertices(mask):
		if nbr[v - 1] & mask:
			live |= bit(v)
	return live


def _matching(nbr, mask, memo):
	live = _live(nbr, mask)
	if not live:
		return 0
	cached = memo.get(live)
	if cached is not None:
		return cached

	bound = popcount(live) // 2
	v = min(iter_vertices(live), key=lambda u: (popcount(nbr[u - 1] & live), u))
	best = 0
	for u in iter_vertices(nbr[v - 1] & live):
		best = max(best, 1 + _matching(nbr, live & ~(bit(v) | bit(u)), memo))
		if best == bound or popcount(nbr[v - 1] & live) == 1:
			break
	if best < bound and popcount(nbr[v - 1] & live) > 1:
		best = max(best, _matching(nbr, live & ~bit(v), memo))
	memo[live] = best
	return best


def matching_number(graph):
	"""Returns the largest number of pairwise disjoint edges of ``graph``."""
	return _matching(graph._nbr, graph.vertex_mask, {})


def _induced_matching(nbr, mask, memo):
	live = _live(nbr, mask)
	if not live:
		return 0
	cached = memo.get(live)
	if cached is not None:
		return cached

	# Either v is not covered, or v is matched to some neighbor u, and then
	# nothing in N[u] ∪ N[v] can be covered by another matching edge.
	v = min(iter_vertices(live), key=lambda u: (popcount(nbr[u - 1] & live), u))
	near_v = bit(v) | nbr[v - 1]
	best = 0
	for u in iter_vertices(nbr[v - 1] & live):
		best = max(best, 1 + _induced_matching(nbr, live & ~(near_v | bit(u) | nbr[u - 1]), memo))
	if best < popcount(live & ~bit(v)) // 2:
		best = max(best, _induced_matching(nbr, live & ~bit(v), memo))
	memo[live] = best
	return best


def induced_matching_number(graph):
	"""Returns the largest size of a matching no two edges of which are
	joined by an edge of ``graph``."""
	return _induced_matching(graph._nbr, graph.vertex_mask, {})


def is_gap_free(graph):
	"""Returns whether ``im(G) = 1``.

	Raises
	------
	~graphreg.exceptions.NoEdges
	"""
	if not graph.edges:
		raise exceptions.NoEdges()
	return induced_matching_number(graph) == 1


##############
# Regularity #
##############

class RegularityEngine:
	"""Computes ``reg(R/I(G))`` exactly, memoizing on induced subgraphs.

	The value agrees with the Hochster scan of
	:func:`~graphreg.algebra.regularity_quotient` and is computed from these
	facts about graphs:

	 * isolated vertices do not matter and edgeless graphs have regularity 0
	 * regularity adds up over connected components
	 * removing one of two vertices with equal neighborhoods keeps it
	 * with ``A = reg(G − x)`` and ``B = reg(G − N[x]) + 1`` the regularity is
	   ``A`` when ``B ≤ A`` and otherwise ``A`` or ``A + 1``; it is ``A + 1``
	   exactly when ``H̃_A(Ind(G)) ≠ 0`` or some ``reg(G − y)`` is ``A + 1``
	 * it never exceeds the independence number

	Results are cached by the labelled induced subgraph, so one engine can
	be reused across a sequence of graphs that extend one another.

	Parameters
	----------
	field : Union[~graphreg.homology.FieldSpec, str, None]
		Coefficient field (default: ``settings.DEFAULT_FIELD``)
	"""

	def __init__(self, field=None):
		self.field = FieldSpec.coerce(field)
		self._memo = {}
		self.homology_checks = 0

	def regularity(self, graph):
		return self._reg(graph._nbr, graph, graph.vertex_mask)

	def _reg(self, nbr, graph, mask):
		live = _live(nbr, mask)
		if not live:
			return 0
		parts = component_masks(nbr, live)
		if len(parts) > 1:
			return sum(self._reg(nbr, graph, part) for part in parts)

		key = (live, tuple(nbr[v - 1] & live for v in iter_vertices(live)))
		cached = self._memo.get(key)
		if cached is None:
			cached = self._memo[key] = self._connected(nbr, graph, live)
		return cached

	def _connected(self, nbr, graph, mask):
		bound = max_independent_size(nbr, mask)
		if bound == 1:
			return 1

		hoods = {}
		for v in iter_vertices(mask):
			hood = nbr[v - 1] & mask
			if hood in hoods:
				return self._reg(nbr, graph, mask & ~bit(v))
			hoods[hood] = v

		x = max(iter_vertices(mask), key=lambda u: (popcount(nbr[u - 1] & mask), u))
		without = self._reg(nbr, graph, mask & ~bit(x))
		if without >= bound:
			return without
		link = self._reg(nbr, graph, mask & ~(bit(x) | nbr[x - 1])) + 1
		if link <= without:
			return without

		self.homology_checks += 1
		if independence_homology_rank(graph, mask, without, self.field):
			return without + 1
		for y in iter_vertices(mask & ~bit(x)):
			rest = mask & ~bit(y)
			if max_independent_size(nbr, rest) > without and self._reg(nbr, graph, rest) > without:
				return without + 1
		logger.debug("reg stays %d on %s", without, vertices_from_mask(mask))
		return without


def graph_regularity(graph, field=None):
	"""Returns ``reg(R/I(G))`` over ``field``."""
	return RegularityEngine(field).regularity(graph)


#####################
# Invariant reports #
#####################

class InvariantReport(typing.NamedTuple):
	n: int
	connected: bool
	im: int
	m: int
	reg: int
	dim: int
	hcoeffs: IntegerPolynomial
	s: int
	field: FieldSpec

	@property
	def series(self):
		return HilbertSeries(self.hcoeffs, self.dim)

	def summary(self):
		return "im={} m={} reg={} dim={} h={} s={}".format(
			self.im, self.m, self.reg, self.dim,
			"[{}]".format(",".join(map(str, self.hcoeffs.coeffs))), self.s
		)

	def to_dict(self):
		return {
			"n": self.n,
			"connected": self.connected,
			"im": self.im,
			"m": self.m,
			"reg": self.reg,
			"dim": self.dim,
			"h": list(self.hcoeffs.coeffs),
			"s": self.s,
			"field": str(self.field),
		}


def invariant_report(graph, field=None, engine=None):
	"""Computes every invariant of ``R/I(G)`` and checks ``im ≤ reg ≤ m``.

	Raises
	------
	~graphreg.exceptions.NoEdges
	~graphreg.exceptions.IsolatedVertex
	~graphreg.exceptions.SandwichViolation

	Parameters
	----------
	graph : ~graphreg.graph.Graph
		A graph with at least one edge and no isolated vertex
	field : Union[~graphreg.homology.FieldSpec, str, None]
		Coefficient field (default: the engine's, else the configured one)
	engine : RegularityEngine
		Engine to reuse; must be for the same field

	Returns
	-------
		:class:`InvariantReport`
	"""
	if not graph.edges:
		raise exceptions.NoEdges()
	isolated = isolated_vertices(graph)
	if isolated:
		raise exceptions.IsolatedVertex(isolated[0])
	if engine is None:
		engine = RegularityEngine(field)
	elif field is not None and FieldSpec.coerce(field) != engine.field:
		raise exceptions.InvalidParameter("Engine field {} differs from {}".format(engine.field, field))

	im = induced_matching_number(graph)
	m = matching_number(graph)
	reg = engine.regularity(graph)
	series = hilbert_series(graph)
	if not im <= reg <= m:
		raise exceptions.SandwichViolation(im, reg, m)

	return InvariantReport(
		n=graph.n,
		connected=is_connected(graph),
		im=im,
		m=m,
		reg=reg,
		dim=independence_number(graph),
		hcoeffs=series.numerator,
		s=series.degree,
		field=engine.field,
	)


class AdditivityReport(typing.NamedTuple):
	parts: list
	union: InvariantReport
	mismatches: list

	@property
	def holds(self):
		return not self.mismatches


def check_disjoint_additivity(parts, field=None):
	"""Checks that im, reg, dim and deg h of a disjoint union are the sums
	over its parts.

	Every part needs at least two vertices and no isolated vertex.

	Returns
	-------
		:class:`AdditivityReport`; ``mismatches`` lists ``(name, expected, got)``
	"""
	engine = RegularityEngine(field)
	reports = [invariant_report(part, engine=engine) for part in parts]
	union = invariant_report(disjoint_union(parts), engine=engine)
	mismatches = []
	for name in ("im", "reg", "dim", "s"):
		expected = sum(getattr(report, name) for report in reports)
		if getattr(union, name) != expected:
			mismatches.append((name, expected, getattr(union, name)))
	return AdditivityReport(reports, union, mismatches)


class MonotonicityReport(typing.NamedTuple):
	vertices: tuple
	im: int
	im_induced: int
	reg: int
	reg_induced: int

	@property
	def holds(self):
		return self.im_induced <= self.im and self.reg_induced <= self.reg


def check_induced_monotonicity(graph, vertices, field=None):
	"""Compares im and reg of ``graph`` with those of an induced subgraph."""
	engine = RegularityEngine(field)
	sub, _ = induced_subgraph(graph, vertices)
	return MonotonicityReport(
		tuple(sorted(vertices)),
		induced_matching_number(graph), induced_matching_number(sub),
		engine.regularity(graph), engine.regularity(sub),
	)
