"""Brute-force cross-checks for small graphs.

The counting functions here look only at ``graph.edges`` and enumerate
directly from the definitions; they share no search code with
:mod:`graphreg.edge_ideal`. :func:`verify_lemma_suite` runs every
algebraic statement the package relies on against random graphs.
"""

import itertools
import logging
import random
import typing

from . import exceptions
from .algebra import check_colon_sum_additivity, regularity_quotient, series_expansion
from .constructor import decrease_deg_step, increase_deg_step, simulate_adjust
from .edge_ideal import (
	RegularityEngine, check_disjoint_additivity, check_induced_monotonicity, edge_ideal,
	hilbert_series, induced_matching_number, invariant_report,
)
from .encoding import graph_to_dict
from .graph import (
	Graph, disjoint_union, enumerate_independent_sets, independence_number, isolated_vertices,
)
from .homology import FieldSpec, independence_complex, reduced_homology_ranks
from .suspension import (
	check_domination_hypothesis, edge_s_suspension, predict_edge_s_suspension,
	predict_s_suspension, s_suspension,
)


logger = logging.getLogger(__name__)

MAX_ORACLE_EDGES  = 24
MAX_ORACLE_VERTEX = 10
MAX_ORACLE_DEGREE = 8

# Largest n for which the suite runs checks that scan every vertex subset
MAX_SUBSET_SCAN = 8


def _is_matching(combo):
	ends = [v for edge in combo for v in edge]
	return len(ends) == len(set(ends))


def _is_induced(graph, combo):
	for edge in graph.edges:
		if sum(1 for member in combo if set(edge) & set(member)) > 1:
			return False
	return True


def _largest(graph, accept):
	edges = list(graph.edges)
	if len(edges) > MAX_ORACLE_EDGES:
		raise exceptions.TooLarge("edges", MAX_ORACLE_EDGES, len(edges))
	best = 0
	# both properties pass to subsets, so the first size without a witness ends the search
	for size in range(1, len(edges) + 1):
		if not any(accept(combo) for combo in itertools.combinations(edges, size)):
			break
		best = size
	return best


def im_bruteforce(graph):
	"""Returns ``im(G)`` by trying edge subsets in order of size.

	Raises
	------
	~graphreg.exceptions.TooLarge
	"""
	return _largest(graph, lambda combo: _is_matching(combo) and _is_induced(graph, combo))


def m_bruteforce(graph):
	"""Returns ``m(G)`` by trying edge subsets in order of size.

	Raises
	------
	~graphreg.exceptions.TooLarge
	"""
	return _largest(graph, _is_matching)


def hilbert_by_monomial_count(graph, degree):
	"""Counts the standard monomials of ``R/I(G)`` of each degree ``0..degree``.

	A monomial survives when its support contains no edge.

	Raises
	------
	~graphreg.exceptions.TooLarge
	"""
	if graph.n > MAX_ORACLE_VERTEX:
		raise exceptions.TooLarge("vertices", MAX_ORACLE_VERTEX, graph.n)
	if degree > MAX_ORACLE_DEGREE:
		raise exceptions.TooLarge("degree", MAX_ORACLE_DEGREE, degree)
	counts = []
	for t in range(degree + 1):
		count = 0
		for monomial in itertools.combinations_with_replacement(range(1, graph.n + 1), t):
			support = set(monomial)
			if not any(i in support and j in support for i, j in graph.edges):
				count += 1
		counts.append(count)
	return counts


##################
# Property suite #
##################

class VerifyReport(typing.NamedTuple):
	seed: int
	trials: int
	max_n: int
	field: FieldSpec
	checks: int
	failures: list
	notes: list

	@property
	def ok(self):
		return not self.failures

	def to_dict(self):
		return {
			"seed": self.seed,
			"trials": self.trials,
			"max_n": self.max_n,
			"field": str(self.field),
			"checks": self.checks,
			"failures": self.failures,
			"notes": self.notes,
		}


def _random_graph(rng, low, high):
	n = rng.randint(low, high)
	p = rng.choice((0.2, 0.4, 0.6))
	edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
	graph = Graph(n, edges)
	for v in isolated_vertices(graph):
		if graph.degree(v) == 0:
			partner = rng.choice([u for u in range(1, n + 1) if u != v])
			edges.append((v, partner))
			graph = Graph(n, edges)
	return graph


def _random_independent_set(rng, graph, accept=lambda S: True):
	sizes = list(range(independence_number(graph) + 1))
	rng.shuffle(sizes)
	for size in sizes:
		choices = [S for S in enumerate_independent_sets(graph, size) if accept(S)]
		if choices:
			return rng.choice(choices)
	return None


class _Trial:
	"""Runs the checks on one random graph and collects failures."""

	def __init__(self, index, graph, field, other_field):
		self.index = index
		self.graph = graph
		self.field = field
		self.engine = RegularityEngine(field)
		self.other_engine = RegularityEngine(other_field)
		self.checks = 0
		self.failures = []
		self.notes = []

	def fail(self, check, expected, got, graph=None):
		self.failures.append({
			"trial": self.index,
			"check": check,
			"graph": graph_to_dict(self.graph if graph is None else graph),
			"expected": expected,
			"got": got,
		})
		logger.warning("Trial %d: %s failed (expected %s, got %s)", self.index, check, expected, got)

	def expect(self, check, expected, got, graph=None):
		self.checks += 1
		if expected != got:
			self.fail(check, expected, got, graph)

	def run(self, check, func, *args):
		try:
			func(*args)
		except exceptions.TooLarge:
			pass
		except exceptions.Error as error:
			self.checks += 1
			self.fail(check, "no error", "{}: {}".format(type(error).__name__, error))


def _check_invariants(trial):
	graph = trial.graph
	report = invariant_report(graph, engine=trial.engine)
	trial.expect("sandwich", True, report.im <= report.reg <= report.m)
	if len(graph.edges) <= MAX_ORACLE_EDGES:
		trial.expect("im-oracle", im_bruteforce(graph), report.im)
		trial.expect("m-oracle", m_bruteforce(graph), report.m)
	if graph.n <= MAX_ORACLE_VERTEX:
		trial.expect("hilbert-oracle", hilbert_by_monomial_count(graph, 6), series_expansion(report.series, 6))

	other = trial.other_engine.regularity(graph)
	if other != report.reg:
		logger.warning(
			"Trial %d: reg is %d over %s but %d over %s",
			trial.index, report.reg, trial.field, other, trial.other_engine.field
		)
		trial.notes.append({
			"trial": trial.index,
			"graph": graph_to_dict(graph),
			"reg": {str(trial.field): report.reg, str(trial.other_engine.field): other},
		})


def _check_hochster(trial):
	graph = trial.graph
	if graph.n > MAX_SUBSET_SCAN:
		return
	trial.expect("hochster", trial.engine.regularity(graph), regularity_quotient(edge_ideal(graph), trial.field))

	whole = independence_complex(graph)
	for mask in range(1, 1 << graph.n):
		sub = whole.restrict(mask)
		if sub.cone_apex() is not None:
			ranks = reduced_homology_ranks(sub, trial.field)
			trial.expect("cone-acyclic", [0] * len(ranks), ranks)
			continue
		trial.expect(
			"homology-backends",
			reduced_homology_ranks(sub, trial.field, "smith"),
			reduced_homology_ranks(sub, trial.field, "elimination"),
		)


def _check_s_suspension(trial, rng):
	graph = trial.graph
	S = _random_independent_set(rng, graph)
	suspended = s_suspension(graph, S)
	expected = predict_s_suspension(hilbert_series(graph), len(S))
	trial.expect("s-suspension-hilbert", expected.to_dict(), hilbert_series(suspended).to_dict(), suspended)
	trial.expect("s-suspension-im", induced_matching_number(graph), induced_matching_number(suspended), suspended)
	trial.expect("s-suspension-reg", trial.engine.regularity(graph), trial.engine.regularity(suspended), suspended)


def _check_edge_s_suspension(trial, rng):
	graph = trial.graph
	i, j = rng.choice(graph.edges)
	S = _random_independent_set(
		rng, graph,
		lambda S: not any(graph.has_edge(v, i) or graph.has_edge(v, j) for v in S)
	)
	suspended = edge_s_suspension(graph, (i, j), S)
	expected = predict_edge_s_suspension(hilbert_series(graph), len(S))
	trial.expect("edge-s-suspension-hilbert", expected.to_dict(), hilbert_series(suspended).to_dict(), suspended)
	if not check_domination_hypothesis(graph, (i, j), S):
		return
	trial.expect(
		"edge-s-suspension-im", induced_matching_number(graph), induced_matching_number(suspended), suspended
	)
	reg = trial.engine.regularity(graph)
	if reg >= 2:
		trial.expect("edge-s-suspension-reg", reg, trial.engine.regularity(suspended), suspended)


def _check_degree_steps(trial):
	graph = trial.graph
	series = hilbert_series(graph)
	raised = increase_deg_step(graph, trial.field)
	trial.expect(
		"increase-degree", (series.degree + 1, series.dpow + 1),
		(hilbert_series(raised).degree, hilbert_series(raised).dpow), raised
	)
	if series.degree < 2 or trial.engine.regularity(graph) < 2:
		return
	_, added = simulate_adjust(series, series.degree - 1)
	if graph.n + added > 2 * MAX_SUBSET_SCAN + 4:
		return
	lowered = decrease_deg_step(graph, trial.field)
	after = hilbert_series(lowered)
	trial.expect("decrease-degree", (True, series.dpow), (after.degree < series.degree, after.dpow), lowered)


def _check_unions(trial, rng):
	parts = [_random_graph(rng, 2, 5), _random_graph(rng, 2, 5)]
	report = check_disjoint_additivity(parts, trial.field)
	trial.expect("disjoint-union", [], [list(entry) for entry in report.mismatches], disjoint_union(parts))


def _check_colon_sum(trial, rng):
	graph = trial.graph
	if graph.n > MAX_SUBSET_SCAN:
		return
	trial.checks += 1
	check_colon_sum_additivity(edge_ideal(graph), rng.randint(1, graph.n), trial.field)


def _check_monotonicity(trial, rng):
	graph = trial.graph
	vertices = [v for v in range(1, graph.n + 1) if rng.random() < 0.6]
	report = check_induced_monotonicity(graph, vertices, trial.field)
	trial.expect("induced-monotonicity", True, report.holds)


def verify_lemma_suite(seed=0, trials=100, max_n=8, field=None):
	"""Checks the package's algebraic statements on random graphs.

	Trial ``i`` draws its graph from a generator seeded with ``(seed, i)``,
	so a failing trial can be rerun alone. Every graph has between 2 and
	``max_n`` vertices and no isolated vertex.

	Checks that scan every vertex subset (Hochster's formula, the homology
	backends and the colon/sum sequence) only run on graphs with at most
	eight vertices. A regularity that differs between ``field`` and the other
	of ``Q``/``F2`` is reported as a note, not a failure.

	Raises
	------
	~graphreg.exceptions.InvalidParameter

	Parameters
	----------
	seed : int
		Base seed
	trials : int
		Number of random graphs
	max_n : int
		Largest vertex count, at most 10
	field : Union[~graphreg.homology.FieldSpec, str, None]
		Coefficient field

	Returns
	-------
		:class:`VerifyReport`
	"""
	if not isinstance(trials, int) or trials < 0:
		raise exceptions.InvalidParameter("Trial count must be a nonnegative integer, got {!r}".format(trials))
	if not isinstance(max_n, int) or not 2 <= max_n <= MAX_ORACLE_VERTEX:
		raise exceptions.InvalidParameter(
			"Vertex bound must lie between 2 and {}, got {!r}".format(MAX_ORACLE_VERTEX, max_n)
		)
	field = FieldSpec.coerce(field)
	other_field = FieldSpec(2) if field.is_rational else FieldSpec(0)

	checks = 0
	failures = []
	notes = []
	for index in range(trials):
		rng = random.Random("{}:{}".format(seed, index))
		trial = _Trial(index, _random_graph(rng, 2, max_n), field, other_field)
		trial.run("invariants", _check_invariants, trial)
		trial.run("hochster", _check_hochster, trial)
		trial.run("s-suspension", _check_s_suspension, trial, rng)
		trial.run("edge-s-suspension", _check_edge_s_suspension, trial, rng)
		trial.run("degree-steps", _check_degree_steps, trial)
		trial.run("disjoint-union", _check_unions, trial, rng)
		trial.run("colon-sum", _check_colon_sum, trial, rng)
		trial.run("induced-monotonicity", _check_monotonicity, trial, rng)
		checks += trial.checks
		failures.extend(trial.failures)
		notes.extend(trial.notes)
		logger.debug("Trial %d done: n=%d, %d failures so far", index, trial.graph.n, len(failures))

	logger.info("Ran %d checks over %d trials: %d failures", checks, trials, len(failures))
	return VerifyReport(seed, trials, max_n, field, checks, failures, notes)
