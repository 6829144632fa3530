"""Test the brute-force oracles and the randomized property suite."""
import importlib
import logging

import pytest

import graphreg.edge_ideal
import graphreg.exceptions
import graphreg.oracle
from graphreg.graph import Graph

# The package re-exports the `edge_ideal` function, which shadows the submodule attribute
graphreg_edge_ideal = importlib.import_module("graphreg.edge_ideal")


def cycle(n):
	return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n):
	return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


@pytest.mark.parametrize("graph,im,m", [
	(cycle(5), 1, 2),
	(cycle(8), 2, 4),
	(Graph(6, [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)]), 1, 3),
	(Graph(6, [(1, 2), (3, 4), (5, 6)]), 3, 3),
	(complete(4), 1, 2),
])
def test_matching_oracles(graph, im, m):
	assert graphreg.oracle.im_bruteforce(graph) == im
	assert graphreg.oracle.m_bruteforce(graph) == m


def test_matching_oracles_refuse_large_inputs():
	with pytest.raises(graphreg.exceptions.TooLarge) as info:
		graphreg.oracle.im_bruteforce(complete(8))
	assert (info.value.limit, info.value.got) == (24, 28)
	with pytest.raises(graphreg.exceptions.TooLarge):
		graphreg.oracle.m_bruteforce(complete(8))


def test_monomial_count():
	assert graphreg.oracle.hilbert_by_monomial_count(cycle(5), 3) == [1, 5, 10, 15]
	assert graphreg.oracle.hilbert_by_monomial_count(Graph(2, [(1, 2)]), 4) == [1, 2, 2, 2, 2]
	with pytest.raises(graphreg.exceptions.TooLarge):
		graphreg.oracle.hilbert_by_monomial_count(cycle(11), 2)
	with pytest.raises(graphreg.exceptions.TooLarge):
		graphreg.oracle.hilbert_by_monomial_count(cycle(5), 9)


def test_suite_passes_and_is_deterministic():
	first = graphreg.oracle.verify_lemma_suite(seed=1, trials=4, max_n=6, field="q")
	assert first.ok
	assert first.checks > 0
	second = graphreg.oracle.verify_lemma_suite(seed=1, trials=4, max_n=6, field="q")
	assert first.to_dict() == second.to_dict()
	assert set(first.to_dict()) == {"seed", "trials", "max_n", "field", "checks", "failures", "notes"}


def test_suite_reports_failures(mocker):
	mocker.patch("graphreg.oracle.im_bruteforce", return_value=99)
	report = graphreg.oracle.verify_lemma_suite(seed=2, trials=2, max_n=5)
	assert not report.ok
	assert {failure["check"] for failure in report.failures} == {"im-oracle"}
	failure = report.failures[0]
	assert failure["expected"] == 99
	assert set(failure["graph"]) == {"n", "edges"}


def test_suite_records_errors(mocker):
	mocker.patch("graphreg.oracle.check_colon_sum_additivity",
	             side_effect=graphreg.exceptions.AdditivityViolation("broken"))
	report = graphreg.oracle.verify_lemma_suite(seed=0, trials=1, max_n=4)
	assert [failure["check"] for failure in report.failures] == ["colon-sum"]
	assert report.failures[0]["got"].startswith("AdditivityViolation")


@pytest.mark.parametrize("kwargs", [{"max_n": 11}, {"max_n": 1}, {"trials": -1}])
def test_suite_parameters(kwargs):
	with pytest.raises(graphreg.exceptions.InvalidParameter):
		graphreg.oracle.verify_lemma_suite(**kwargs)


def test_suite_logs_field_disagreements(mocker, caplog):
	regularity = graphreg_edge_ideal.RegularityEngine.regularity

	def skewed(engine, graph):
		value = regularity(engine, graph)
		return value + 1 if engine.field.characteristic == 2 else value

	mocker.patch.object(graphreg_edge_ideal.RegularityEngine, "regularity", autospec=True, side_effect=skewed)
	with caplog.at_level(logging.WARNING, logger="graphreg.oracle"):
		report = graphreg.oracle.verify_lemma_suite(seed=0, trials=2, max_n=5, field="q")
	assert report.ok
	assert len(report.notes) == 2
	warnings = [record for record in caplog.records if record.name == "graphreg.oracle"]
	assert len(warnings) == 2
	assert "over f2" in warnings[0].getMessage()


def test_suite_checks_cones(mocker):
	mocker.patch("graphreg.oracle.reduced_homology_ranks", return_value=[0, 1])
	report = graphreg.oracle.verify_lemma_suite(seed=0, trials=1, max_n=4)
	assert "cone-acyclic" in {failure["check"] for failure in report.failures}
