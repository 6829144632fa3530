# Note that this file is special in that py.test will automatically import this file and gather
# its list of fixtures even if it is not directly imported into the corresponding test case.
import pathlib

import pytest

import graphreg
import graphreg.encoding


TEST_DIR = pathlib.Path(__file__).parent
BASES_DIR = TEST_DIR.parent.parent / "bases"


def cycle(n):
	return graphreg.graph_from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


@pytest.fixture(scope="module")
def provider():
	"""A base graph provider limited to the built-in bases.

	Module lifetime lets its regularity cache carry over between the builds
	of one test module."""
	return graphreg.BaseGraphProvider(base_dir="", search_budget=0, seed=0, field="q")


@pytest.fixture(scope="module")
def file_provider():
	"""A provider that also reads the shipped ``bases/`` directory."""
	return graphreg.BaseGraphProvider(base_dir=str(BASES_DIR), search_budget=0, seed=0, field="q")


@pytest.fixture
def c5():
	return cycle(5)


@pytest.fixture
def c8():
	return cycle(8)


@pytest.fixture
def graph_file(tmp_path):
	"""Returns a function writing a graph file below the test's temporary directory."""
	def write(graph, name="graph.json"):
		path = str(tmp_path / name)
		graphreg.encoding.write_graph(graph, path)
		return path
	return write
