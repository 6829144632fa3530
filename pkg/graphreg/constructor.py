"""Constructs connected graphs with prescribed ``im``, ``reg`` and ``deg h``.

For a triple ``(a, r, s)`` with ``1 ≤ a ≤ r`` and ``s ≥ 1`` the builder
starts from a base graph and moves the degree of the h-polynomial with two
operations, each a short sequence of suspensions:

 * *increase* (:func:`increase_deg_step`) adds one S-suspension on a maximum
   independent set; ``deg h`` and the dimension both go up by one;
 * *decrease* (:func:`decrease_deg_step`) pushes the top coefficient of
   ``h`` to zero by repeating S-suspensions, or rounds of one S-suspension
   followed by two edge-S-suspensions, depending on its sign and parity.

Neither changes ``im`` or ``reg``. Every step's Hilbert series is predicted
symbolically and compared against the one computed from the new graph;
the whole run is recorded in a :class:`Certificate` that
:func:`replay_certificate` can rebuild from its base graphs alone.
"""

import logging
import os
import random
import typing

from . import exceptions, settings
from .algebra import HilbertSeries
from .edge_ideal import (
	RegularityEngine, hilbert_series, induced_matching_number, invariant_report, is_gap_free,
)
from .encoding import graph_from_dict, graph_to_dict, read_graph
from .graph import (
	MAX_VERTICES, Graph, disjoint_union, first_independent_set, is_connected,
	isolated_vertices, max_independent_size,
)
from .homology import FieldSpec
from .suspension import (
	KIND_EDGE_S, KIND_S, SuspensionStep, apply_step, edge_s_suspension,
	predict_edge_s_suspension, predict_s_suspension, s_suspension,
)
from .version import __version__


logger = logging.getLogger(__name__)

KIND_UNION = "union"

K2 = Graph(2, [(1, 2)])


def star_graph(s):
	"""Returns ``K_{1,s}``, centre 1 and leaves ``2..s+1``.

	Raises
	------
	~graphreg.exceptions.InvalidParameter
	"""
	if not isinstance(s, int) or s < 1:
		raise exceptions.InvalidParameter("A star needs at least one leaf, got {!r}".format(s))
	return Graph(s + 1, [(1, leaf) for leaf in range(2, s + 2)])


###############
# Base graphs #
###############

_BUILTIN_BASES = {
	1: (K2, "builtin: K2"),
	2: (Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]), "builtin: C5"),
}


class BaseGraphProvider:
	"""Supplies connected gap-free graphs ``L_r`` with ``reg = dim = r``.

	Sources are tried in order: the built-in registry (``r = 1, 2``), the file
	``L_<r>.json`` in ``base_dir``, then a seeded random search of at most
	``search_budget`` candidates. Whatever comes out of a file or the search
	is verified before use; rejected files are logged and skipped.

	Parameters
	----------
	base_dir : str
		Directory of candidate files (default: ``settings.BASE_DIR``)
	search_budget : int
		Number of random candidates to try (default: ``settings.SEARCH_BUDGET``)
	seed : int
		Seed of the random search (default: ``settings.SEARCH_SEED``)
	field : Union[~graphreg.homology.FieldSpec, str, None]
		Field over which ``reg`` is verified
	"""

	def __init__(self, base_dir=None, search_budget=None, seed=None, field=None):
		self.base_dir = settings.BASE_DIR if base_dir is None else base_dir
		self.search_budget = settings.SEARCH_BUDGET if search_budget is None else search_budget
		self.seed = settings.SEARCH_SEED if seed is None else seed
		self.engine = RegularityEngine(field)
		self._cache = {}

	@property
	def field(self):
		return self.engine.field

	def get(self, r):
		"""Returns the base graph ``L_r``.

		Raises
		------
		~graphreg.exceptions.BaseUnavailable
		"""
		return self.lookup(r)[0]

	def provenance(self, r):
		return self.lookup(r)[1]

	def lookup(self, r):
		"""Returns ``(graph, provenance)`` for ``L_r``.

		Raises
		------
		~graphreg.exceptions.BaseUnavailable
		"""
		if not isinstance(r, int) or r < 1:
			raise exceptions.InvalidParameter("Base regularity must be a positive integer, got {!r}".format(r))
		if r not in self._cache:
			self._cache[r] = self._find(r)
		return self._cache[r]

	def verify(self, graph, r):
		"""Returns whether ``graph`` is connected with ``im = 1`` and
		``reg = dim = r``."""
		if graph.n < 2 or isolated_vertices(graph) or not is_connected(graph):
			return False
		if max_independent_size(graph._nbr, graph.vertex_mask) != r:
			return False
		if induced_matching_number(graph) != 1:
			return False
		return self.engine.regularity(graph) == r

	def _find(self, r):
		if r in _BUILTIN_BASES:
			return _BUILTIN_BASES[r]

		if self.base_dir:
			path = os.path.join(self.base_dir, "L_{}.json".format(r))
			if os.path.exists(path):
				try:
					graph = read_graph(path)
				except exceptions.Error as error:
					logger.warning("Ignoring unreadable base candidate %s: %s", path, error)
				else:
					if self.verify(graph, r):
						logger.info("Loaded base graph L_%d from %s", r, path)
						return graph, "file: L_{}.json".format(r)
					logger.warning("Ignoring base candidate %s: it is not a gap-free graph of regularity %d", path, r)

		found = self._search(r)
		if found is not None:
			return found
		raise exceptions.BaseUnavailable(r)

	def _search(self, r):
		low = 2 * r + 1
		high = min(3 * r + 3, MAX_VERTICES)
		if low > high:
			return None
		for index in range(self.search_budget):
			rng = random.Random("{}:{}:{}".format(self.seed, r, index))
			n = rng.randint(low, high)
			p = rng.choice((0.5, 0.6, 0.7, 0.8))
			edges = [
				(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
				if rng.random() < p
			]
			candidate = Graph(n, edges)
			if self.verify(candidate, r):
				logger.info("Search found L_%d after %d candidates", r, index + 1)
				return candidate, "search: seed={} candidate={}".format(self.seed, index)
		logger.info("Search for L_%d gave up after %d candidates", r, self.search_budget)
		return None


def base_gap_free(r, provider=None):
	"""Returns a connected graph with ``im = 1`` and ``reg = dim = r``.

	Raises
	------
	~graphreg.exceptions.BaseUnavailable
	"""
	if provider is None:
		provider = BaseGraphProvider()
	return provider.get(r)


################
# Degree steps #
################

def _repeat_branch(top, s):
	return (top > 0 and s % 2 == 0) or (top < 0 and s % 2 == 1)


class StepRecord(typing.NamedTuple):
	kind: str
	S: tuple
	edge: typing.Optional[tuple]
	parts: typing.Optional[tuple]
	n: int
	predicted: HilbertSeries
	computed: HilbertSeries

	def to_dict(self):
		data = {
			"kind": self.kind,
			"n": self.n,
			"predicted_h": list(self.predicted.numerator.coeffs),
			"computed_h": list(self.computed.numerator.coeffs),
			"d": self.computed.dpow,
		}
		if self.kind == KIND_UNION:
			data["parts"] = list(self.parts)
		else:
			data["S"] = list(self.S)
			data["new_vertex"] = self.n
		if self.edge is not None:
			data["edge"] = list(self.edge)
		return data


class _Construction:
	"""A graph under construction together with the log of its steps."""

	def __init__(self, graph, engine, check_steps=None):
		self.graph = graph
		self.series = hilbert_series(graph)
		self.engine = engine
		self.check_steps = settings.CHECK_STEP_REGULARITY if check_steps is None else check_steps
		self.steps = []
		self._baseline = None

	def _commit(self, kind, graph, predicted, S=(), edge=None, parts=None):
		computed = hilbert_series(graph)
		if computed != predicted:
			raise exceptions.PredictionMismatch(predicted, computed)
		self.steps.append(StepRecord(kind, tuple(S), edge, parts, graph.n, predicted, computed))
		self.graph = graph
		self.series = computed
		logger.debug("%s step -> n=%d h=%s", kind, graph.n, computed.numerator)
		return graph.n

	def suspend(self, S):
		predicted = predict_s_suspension(self.series, len(S))
		return self._commit(KIND_S, s_suspension(self.graph, S), predicted, S=S)

	def suspend_edge(self, edge, S):
		predicted = predict_edge_s_suspension(self.series, len(S))
		return self._commit(KIND_EDGE_S, edge_s_suspension(self.graph, edge, S), predicted, S=S, edge=tuple(edge))

	def union(self, parts, indices):
		predicted = self.series
		for part in parts:
			predicted = predicted * hilbert_series(part)
		self._baseline = None
		return self._commit(
			KIND_UNION, disjoint_union([self.graph] + list(parts)), predicted, parts=tuple(indices)
		)

	def _invariants(self):
		return induced_matching_number(self.graph), self.engine.regularity(self.graph)

	def _check_preserved(self, what):
		if not self.check_steps:
			return
		after = self._invariants()
		if after != self._baseline:
			raise exceptions.VerificationFailed(
				"(im, reg) after {}".format(what), self._baseline, after
			)

	def _remember(self):
		if self.check_steps and self._baseline is None:
			self._baseline = self._invariants()

	def increase(self):
		s, d = self.series.degree, self.series.dpow
		isolated = isolated_vertices(self.graph)
		if isolated:
			raise exceptions.IsolatedVertex(isolated[0])
		self._remember()
		self.suspend(first_independent_set(self.graph, d))
		if (self.series.degree, self.series.dpow) != (s + 1, d + 1):
			raise exceptions.VerificationFailed("(deg h, dim)", (s + 1, d + 1), (self.series.degree, self.series.dpow))
		self._check_preserved("increasing the degree")
		logger.info("Raised deg h to %d on %d vertices", self.series.degree, self.graph.n)

	def decrease(self):
		s, d = self.series.degree, self.series.dpow
		isolated = isolated_vertices(self.graph)
		if isolated:
			raise exceptions.IsolatedVertex(isolated[0])
		if s < 2:
			raise exceptions.DegreeTooSmall(s)
		reg = self.engine.regularity(self.graph)
		if reg < 2:
			raise exceptions.RegularityTooSmall(reg)
		self._remember()

		previous = abs(self.series[s])
		repeat = _repeat_branch(self.series[s], s)
		while self.series.degree == s:
			if repeat:
				self.suspend(first_independent_set(self.graph, d - s))
			else:
				chosen = first_independent_set(self.graph, d - s + 2)
				S, (x_a, x_b) = chosen[:-2], chosen[-2:]
				w = self.suspend(S)
				self.suspend_edge((x_a, w), S)
				self.suspend_edge((x_b, w), S)
			current = abs(self.series[s]) if self.series.degree == s else 0
			if current >= previous:
				raise exceptions.VerificationFailed("|h_{}|".format(s), previous - 1, current)
			previous = current

		if self.series.dpow != d:
			raise exceptions.VerificationFailed("dim", d, self.series.dpow)
		self._check_preserved("decreasing the degree")
		logger.info("Lowered deg h from %d to %d on %d vertices", s, self.series.degree, self.graph.n)

	def adjust(self, target):
		while self.series.degree != target:
			if self.series.degree < target:
				self.increase()
			else:
				self.decrease()


def increase_deg_step(graph, field=None):
	"""Returns ``G^S`` for the lexicographically least maximum independent
	set S.

	Raises
	------
	~graphreg.exceptions.IsolatedVertex
	~graphreg.exceptions.VerificationFailed
	"""
	construction = _Construction(graph, RegularityEngine(field), check_steps=True)
	construction.increase()
	return construction.graph


def decrease_deg_step(graph, field=None):
	"""Returns a graph with the same ``im``, ``reg`` and dimension whose
	h-polynomial has smaller degree.

	Raises
	------
	~graphreg.exceptions.RegularityTooSmall
	~graphreg.exceptions.DegreeTooSmall
	~graphreg.exceptions.IsolatedVertex
	~graphreg.exceptions.VerificationFailed
	"""
	construction = _Construction(graph, RegularityEngine(field), check_steps=True)
	construction.decrease()
	return construction.graph


############
# Planning #
############

def _simulate_increase(series):
	return predict_s_suspension(series, series.dpow), 1


def _simulate_decrease(series):
	s, d = series.degree, series.dpow
	added = 0
	if _repeat_branch(series[s], s):
		while series.degree == s:
			series = predict_s_suspension(series, d - s)
			added += 1
	else:
		while series.degree == s:
			series = predict_s_suspension(series, d - s)
			series = predict_edge_s_suspension(series, d - s)
			series = predict_edge_s_suspension(series, d - s)
			added += 3
	return series, added


def simulate_adjust(series, target):
	"""Predicts the series and number of new vertices of adjusting a graph
	with ``series`` to ``deg h = target`` (assuming ``reg ≥ 2`` whenever a
	decrease is needed)."""
	added = 0
	while series.degree != target:
		if series.degree < target:
			series, more = _simulate_increase(series)
		else:
			series, more = _simulate_decrease(series)
		added += more
	return series, added


class BuildPlan(typing.NamedTuple):
	a: int
	r: int
	s: int
	route: str
	base_degree: typing.Optional[int]
	vertices: int

	def to_dict(self):
		return {
			"route": self.route,
			"base_degree": self.base_degree,
			"vertices": self.vertices,
		}


def _check_triple(a, r, s):
	for value in (a, r, s):
		if not isinstance(value, int) or isinstance(value, bool):
			raise exceptions.InvalidParameter("Parameters must be integers, got {!r}".format(value))
	if not (1 <= a <= r and s >= 1):
		raise exceptions.InvalidTriple(a, r, s)


def _union_route(base, a, s, base_degree):
	series = hilbert_series(base)
	series, added = simulate_adjust(series, base_degree)
	for _ in range(a - 1):
		series = series * hilbert_series(K2)
	vertices = base.n + added + 2 * (a - 1)
	if series.degree == s:
		series, more = _simulate_increase(series)
		vertices += more
		series, more = _simulate_decrease(series)
		vertices += more
	series, more = simulate_adjust(series, s)
	return vertices + more


def plan(a, r, s, provider=None):
	"""Chooses how :func:`build` reaches ``(a, r, s)`` without running it.

	The plain route adjusts the degree after forming the base (and, for
	``a ≥ 2``, its union with ``a − 1`` copies of ``K2``). When that would
	exceed the vertex capacity, routes that first lower the degree of the
	base graph alone are simulated too and the smallest one is taken.

	Raises
	------
	~graphreg.exceptions.InvalidTriple
	~graphreg.exceptions.BaseUnavailable
	~graphreg.exceptions.CapacityExceeded

	Returns
	-------
		:class:`BuildPlan`
	"""
	_check_triple(a, r, s)
	if a == 1 and r == 1:
		chosen = BuildPlan(a, r, s, "star", None, s + 1)
	else:
		provider = provider if provider is not None else BaseGraphProvider()
		base = base_gap_free(r - a + 1, provider)
		base_series = hilbert_series(base)
		top = base_series.degree

		if a == 1:
			_, added = simulate_adjust(base_series, s)
			chosen = BuildPlan(a, r, s, "adjust", None, base.n + added)
		else:
			chosen = BuildPlan(a, r, s, "union", top, _union_route(base, a, s, top))
			if chosen.vertices > MAX_VERTICES and r - a + 1 >= 2:
				for degree in range(top - 1, 0, -1):
					candidate = BuildPlan(
						a, r, s, "adjust-then-union", degree, _union_route(base, a, s, degree)
					)
					if candidate.vertices < chosen.vertices:
						chosen = candidate

	if chosen.vertices > MAX_VERTICES:
		raise exceptions.CapacityExceeded(MAX_VERTICES, chosen.vertices)
	logger.info("Plan for (%d, %d, %d): %s with %d vertices", a, r, s, chosen.route, chosen.vertices)
	return chosen


################
# Certificates #
################

class Certificate:
	"""Record of one run of :func:`build`.

	Attributes
	----------
	target : Tuple[int, int, int]
		The requested ``(a, r, s)``
	graph : ~graphreg.graph.Graph
		The constructed graph
	bases : List[Tuple[~graphreg.graph.Graph, str]]
		Starting graph and union parts, each with its provenance
	steps : List[StepRecord]
	plan : BuildPlan
	report : ~graphreg.edge_ideal.InvariantReport
	seed : int
		Seed of the base search
	"""

	def __init__(self, target, graph, bases, steps, plan, report, seed):
		self.target = target
		self.graph = graph
		self.bases = bases
		self.steps = steps
		self.plan = plan
		self.report = report
		self.seed = seed

	@property
	def field(self):
		return self.report.field

	def to_dict(self):
		a, r, s = self.target
		return {
			"version": __version__,
			"target": {"a": a, "r": r, "s": s},
			"base": [
				{"graph": graph_to_dict(graph), "provenance": provenance}
				for graph, provenance in self.bases
			],
			"plan": self.plan.to_dict(),
			"steps": [step.to_dict() for step in self.steps],
			"report": self.report.to_dict(),
			"field": str(self.field),
			"seed": self.seed,
			"result": graph_to_dict(self.graph),
		}


def build(a, r, s, provider=None, field=None, check_steps=None):
	"""Constructs a connected graph ``G(a, r, s)`` with ``im = a``,
	``reg = r`` and ``deg h = s``.

	.. code-block:: python

		>>> build(1, 2, 1).report.summary()
		'im=1 m=3 reg=2 dim=2 h=[1,4] s=1'

	Raises
	------
	~graphreg.exceptions.InvalidTriple
	~graphreg.exceptions.BaseUnavailable
	~graphreg.exceptions.CapacityExceeded
	~graphreg.exceptions.VerificationFailed

	Parameters
	----------
	a : int
		Induced matching number, ``1 ≤ a ≤ r``
	r : int
		Regularity of ``R/I(G)``
	s : int
		Degree of the h-polynomial, ``s ≥ 1``
	provider : BaseGraphProvider
		Source of base graphs (default: one built from the settings)
	field : Union[~graphreg.homology.FieldSpec, str, None]
		Field for every regularity computation
	check_steps : bool
		Recompute ``im`` and ``reg`` after every degree step
		(default: ``settings.CHECK_STEP_REGULARITY``)

	Returns
	-------
		:class:`Certificate`
	"""
	_check_triple(a, r, s)
	if provider is None:
		provider = BaseGraphProvider(field=field)
	field = provider.field if field is None else FieldSpec.coerce(field)
	engine = provider.engine if provider.field == field else RegularityEngine(field)
	chosen = plan(a, r, s, provider)

	if chosen.route == "star":
		start = star_graph(s)
		bases = [(start, "star: K_1,{}".format(s))]
		construction = _Construction(start, engine, check_steps)
	else:
		start, provenance = provider.lookup(r - a + 1)
		bases = [(start, provenance)]
		construction = _Construction(start, engine, check_steps)
		if a >= 2:
			construction.adjust(chosen.base_degree)
			parts = [K2] * (a - 1)
			bases.extend((K2, "builtin: K2") for _ in parts)
			construction.union(parts, range(1, a))
			if construction.series.degree == s:
				# the union is disconnected; one increase and one decrease join it up
				construction.increase()
				construction.decrease()
		construction.adjust(s)

	graph = construction.graph
	report = invariant_report(graph, engine=engine)
	got = (report.im, report.reg, report.s, report.connected)
	if got != (a, r, s, True):
		raise exceptions.VerificationFailed("(im, reg, s, connected)", (a, r, s, True), got)
	if graph.n != chosen.vertices:
		logger.warning("Planned %d vertices, built %d", chosen.vertices, graph.n)
	logger.info("Built G(%d, %d, %d) on %d vertices in %d steps", a, r, s, graph.n, len(construction.steps))
	return Certificate((a, r, s), graph, bases, construction.steps, chosen, report, provider.seed)


def build_gap_free(r, s, provider=None, field=None, check_steps=None):
	"""Constructs a connected gap-free graph with ``reg = r`` and
	``deg h = s``.

	Raises
	------
	~graphreg.exceptions.VerificationFailed
	"""
	certificate = build(1, r, s, provider, field, check_steps)
	if not is_gap_free(certificate.graph):
		raise exceptions.VerificationFailed("im", 1, certificate.report.im)
	return certificate


def replay_certificate(data):
	"""Re-applies the recorded steps of a certificate to its base graphs.

	Raises
	------
	~graphreg.exceptions.DecodingError
	~graphreg.exceptions.SuspensionError
	~graphreg.exceptions.VerificationFailed

	Parameters
	----------
	data : dict
		The JSON object form of a :class:`Certificate`

	Returns
	-------
		~graphreg.graph.Graph
	"""
	try:
		bases = [graph_from_dict(entry["graph"]) for entry in data["base"]]
		steps = data["steps"]
	except (KeyError, TypeError) as error:
		raise exceptions.DecodingError('json', error) from error
	if not bases:
		raise exceptions.DecodingError('json', ValueError("Certificate lists no base graph"))

	graph = bases[0]
	for index, step in enumerate(steps):
		try:
			kind = step["kind"]
			if kind in (KIND_S, KIND_EDGE_S):
				edge = tuple(step["edge"]) if kind == KIND_EDGE_S else None
				graph = apply_step(graph, SuspensionStep(kind, tuple(step["S"]), edge, step["new_vertex"]))
			elif kind == KIND_UNION:
				graph = disjoint_union([graph] + [bases[i] for i in step["parts"]])
			else:
				raise exceptions.DecodingError('json', ValueError("Unknown step kind {!r}".format(kind)))
		except (KeyError, TypeError, IndexError) as error:
			raise exceptions.DecodingError('json', error) from error

		computed = hilbert_series(graph)
		recorded = step.get("computed_h")
		if recorded is not None and computed != HilbertSeries(recorded, step.get("d", computed.dpow)):
			raise exceptions.VerificationFailed("h after step {}".format(index), recorded, list(computed.numerator.coeffs))

	if "result" in data and graph_from_dict(data["result"]) != graph:
		raise exceptions.VerificationFailed("replayed graph", data["result"], graph_to_dict(graph))
	return graph
