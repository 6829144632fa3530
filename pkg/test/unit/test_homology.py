"""Test simplicial complexes, face counts and reduced homology."""
import itertools
import random

import pytest

import graphreg.exceptions
import graphreg.graph
import graphreg.homology
import graphreg.settings
from graphreg.homology import FieldSpec, SimplicialComplex


# Six-vertex real projective plane: no rational homology, one class in
# degrees 1 and 2 over F2
RP2_FACETS = [
	(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
	(2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


@pytest.fixture
def c8():
	return graphreg.graph.Graph(8, [(i, i % 8 + 1) for i in range(1, 9)])


@pytest.mark.parametrize("text,characteristic", [
	("q", 0), ("Q", 0), ("f2", 2), ("fp:3", 3), ("fp:101", 101), ("7", 7),
])
def test_field_parse(text, characteristic):
	assert FieldSpec.parse(text).characteristic == characteristic


@pytest.mark.parametrize("text", ["fp:4", "fp:1", "r", "fp:", "f"])
def test_field_parse_rejects(text):
	with pytest.raises(graphreg.exceptions.InvalidParameter):
		FieldSpec.parse(text)


def test_field_str_and_coerce():
	assert str(FieldSpec(0)) == "q"
	assert str(FieldSpec(2)) == "f2"
	assert str(FieldSpec(5)) == "fp:5"
	assert FieldSpec.coerce("f2") == FieldSpec(2)
	field = FieldSpec(3)
	assert FieldSpec.coerce(field) is field


def test_default_field(monkeypatch):
	monkeypatch.setattr(graphreg.settings, "DEFAULT_FIELD", "f2")
	assert FieldSpec.coerce(None) == FieldSpec(2)


def test_complex_must_be_closed():
	with pytest.raises(graphreg.exceptions.ComplexError):
		SimplicialComplex(3, [(), (1,), (1, 2)])
	with pytest.raises(graphreg.exceptions.InvalidVertex):
		SimplicialComplex(2, [(), (3,)])


def test_from_facets():
	triangle = SimplicialComplex.from_facets(3, [(1, 2), (2, 3), (1, 3)])
	assert len(triangle) == 7
	assert triangle.dimension == 1
	assert triangle.facets() == [(1, 2), (1, 3), (2, 3)]
	assert triangle.cone_apex() is None

	with pytest.raises(graphreg.exceptions.CapacityExceeded):
		SimplicialComplex.from_facets(4, [(1, 2, 3, 4)], max_faces=10)


def test_cone_apex():
	cone = SimplicialComplex.from_facets(4, [(1, 2), (1, 3), (1, 4)])
	assert cone.cone_apex() == 1
	assert cone.restrict(0b1110).cone_apex() is None


def test_reduced_homology_small_cases():
	hollow = SimplicialComplex.from_facets(3, [(1, 2), (2, 3), (1, 3)])
	assert graphreg.homology.reduced_homology_ranks(hollow) == [0, 0, 1]

	two_points = SimplicialComplex(2, [(), (1,), (2,)])
	assert graphreg.homology.reduced_homology_ranks(two_points) == [0, 1]

	empty_face = SimplicialComplex(2, [()])
	assert graphreg.homology.reduced_homology_ranks(empty_face) == [1]

	with pytest.raises(graphreg.exceptions.VoidComplex):
		graphreg.homology.reduced_homology_ranks(SimplicialComplex(2, []))


def test_independence_complex_of_cycles(c8):
	"""Ind(C5) is a circle and Ind(C8) a 2-sphere up to homotopy."""
	c5 = graphreg.graph.Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
	ind_c5 = graphreg.homology.independence_complex(c5)
	assert tuple(graphreg.homology.f_vector(ind_c5)) == (1, 5, 5)
	assert graphreg.homology.f_vector(ind_c5).reduced_euler_characteristic() == -1
	assert graphreg.homology.reduced_homology_ranks(ind_c5) == [0, 0, 1]

	ind_c8 = graphreg.homology.independence_complex(c8)
	assert tuple(graphreg.homology.f_vector(ind_c8)) == (1, 8, 20, 16, 2)
	assert graphreg.homology.reduced_homology_ranks(ind_c8) == [0, 0, 0, 1, 0]
	assert graphreg.homology.independence_homology_rank(c8, c8.vertex_mask, 2) == 1
	assert graphreg.homology.independence_homology_rank(c8, c8.vertex_mask, 1) == 0


def test_field_dependence():
	rp2 = SimplicialComplex.from_facets(6, RP2_FACETS)
	assert graphreg.homology.reduced_homology_ranks(rp2, "q") == [0, 0, 0, 0]
	assert graphreg.homology.reduced_homology_ranks(rp2, "f2") == [0, 0, 1, 1]
	assert graphreg.homology.reduced_homology_ranks(rp2, "fp:3") == [0, 0, 0, 0]


@pytest.mark.parametrize("field", ["q", "f2", "fp:3"])
def test_backends_agree(field, c8):
	"""Elimination and the Smith normal form give the same ranks."""
	complexes = [
		SimplicialComplex.from_facets(6, RP2_FACETS),
		graphreg.homology.independence_complex(c8),
		SimplicialComplex.from_facets(4, [(1, 2, 3), (2, 4), (3, 4)]),
	]
	for complex_ in complexes:
		assert graphreg.homology.reduced_homology_ranks(complex_, field, "smith") == \
			graphreg.homology.reduced_homology_ranks(complex_, field, "elimination")


def test_unknown_backend():
	hollow = SimplicialComplex.from_facets(3, [(1, 2), (2, 3), (1, 3)])
	with pytest.raises(graphreg.exceptions.InvalidParameter):
		graphreg.homology.reduced_homology_ranks(hollow, "q", "lu")


def test_boundary_squares_to_zero():
	simplex = SimplicialComplex.from_facets(4, [(1, 2, 3, 4)])
	d2 = graphreg.homology.boundary_matrix(simplex.faces_of_size(2), simplex.faces_of_size(3))
	d1 = graphreg.homology.boundary_matrix(simplex.faces_of_size(1), simplex.faces_of_size(2))
	assert (d1 * d2).to_Matrix().is_zero_matrix


def random_graph(rng, n, p):
	return graphreg.graph.Graph(n, [
		(i, j) for i, j in itertools.combinations(range(1, n + 1), 2) if rng.random() < p
	])


def random_facets(rng, ground):
	return [
		tuple(rng.sample(range(1, ground + 1), rng.randint(1, min(4, ground))))
		for _ in range(rng.randint(1, 5))
	]


@pytest.mark.parametrize("seed", range(8))
def test_f_vector_counts_vertices_and_non_edges(seed):
	rng = random.Random(seed)
	n = rng.randint(2, 9)
	graph = random_graph(rng, n, rng.choice((0.2, 0.4, 0.6, 0.8)))
	f = list(graphreg.homology.f_vector(graphreg.homology.independence_complex(graph))) + [0, 0]
	assert f[0] == 1
	assert f[1] == n
	assert f[2] == n * (n - 1) // 2 - len(graph.edges)


@pytest.mark.parametrize("field", ["q", "f2"])
@pytest.mark.parametrize("seed", range(8))
def test_euler_poincare(seed, field):
	"""The alternating sum of the ranks is the reduced Euler characteristic."""
	rng = random.Random(seed)
	complex_ = SimplicialComplex.from_facets(6, random_facets(rng, 6))
	ranks = graphreg.homology.reduced_homology_ranks(complex_, field)
	assert sum((-1) ** (i - 1) * rank for i, rank in enumerate(ranks)) == \
		graphreg.homology.f_vector(complex_).reduced_euler_characteristic()


@pytest.mark.parametrize("backend", graphreg.homology.BACKENDS)
@pytest.mark.parametrize("seed", range(8))
def test_cones_are_acyclic(seed, backend):
	rng = random.Random(seed)
	cone = SimplicialComplex.from_facets(6, [facet + (6,) for facet in random_facets(rng, 5)])
	assert cone.cone_apex() is not None
	for field in ("q", "f2"):
		ranks = graphreg.homology.reduced_homology_ranks(cone, field, backend)
		assert ranks == [0] * len(ranks)
