"""Simplicial complexes, f-vectors and reduced homology ranks.

Faces are stored as vertex bitmasks and kept in lexicographic order of
their sorted member lists, grouped by cardinality. Boundary matrices use
that order and the usual sign convention: deleting the ``j``-th smallest
vertex (counting from zero) carries the sign ``(-1)**j``.

Two rank backends exist: elimination over the chosen field (``QQ`` or
``GF(p)``) and the integer Smith normal form. Each is the test oracle for
the other.
"""

import logging

from sympy import GF, QQ, ZZ, isprime
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from . import exceptions, settings
from .utils import bit, iter_vertices, lowest_vertex, mask_from_vertices, popcount, vertices_from_mask


logger = logging.getLogger(__name__)

BACKENDS = ("elimination", "smith")


class FieldSpec:
	"""The coefficient field: the rationals or a prime field.

	Parameters
	----------
	characteristic : int
		``0`` for the rationals, otherwise a prime ``p``
	"""
	__slots__ = ("characteristic",)

	def __init__(self, characteristic=0):
		if characteristic != 0 and not (characteristic > 1 and isprime(characteristic)):
			raise exceptions.InvalidParameter(
				"Field characteristic must be 0 or a prime, got {}".format(characteristic)
			)
		self.characteristic = characteristic

	@classmethod
	def parse(cls, text):
		"""Parses ``q``, ``f2`` or ``fp:<p>``.

		Raises
		------
		~graphreg.exceptions.InvalidParameter
		"""
		value = str(text).strip().lower()
		if value in ("q", "qq", "0"):
			return cls(0)
		if value.startswith("fp:"):
			value = value[3:]
		elif value.startswith("f") and value[1:].isdigit():
			value = value[1:]
		if value.isdigit():
			return cls(int(value))
		raise exceptions.InvalidParameter("Unknown field: {!r} (use q, f2 or fp:<p>)".format(text))

	@classmethod
	def coerce(cls, field):
		"""Accepts ``None`` (the configured default), a string or a
		:class:`FieldSpec`."""
		if field is None:
			return cls.parse(settings.DEFAULT_FIELD)
		if isinstance(field, cls):
			return field
		return cls.parse(field)

	@property
	def is_rational(self):
		return self.characteristic == 0

	def domain(self):
		return QQ if self.characteristic == 0 else GF(self.characteristic)

	def __eq__(self, other):
		if not isinstance(other, FieldSpec):
			return NotImplemented
		return self.characteristic == other.characteristic

	def __hash__(self):
		return hash(("FieldSpec", self.characteristic))

	def __str__(self):
		if self.characteristic == 0:
			return "q"
		if self.characteristic == 2:
			return "f2"
		return "fp:{}".format(self.characteristic)

	def __repr__(self):
		return "FieldSpec({!r})".format(str(self))


RATIONALS = FieldSpec(0)


def _face_key(face):
	return (popcount(face), vertices_from_mask(face))


class SimplicialComplex:
	"""A downward closed family of subsets of ``1..ground``.

	Raises
	------
	~graphreg.exceptions.InvalidVertex
	~graphreg.exceptions.ComplexError

	Parameters
	----------
	ground : int
		Number of ground vertices
	faces : Iterable[Iterable[int]]
		Every face (not only the facets)
	"""
	__slots__ = ("ground", "faces", "_by_size")

	def __init__(self, ground, faces=()):
		masks = set()
		for face in faces:
			face = list(face)
			for v in face:
				if not (isinstance(v, int) and 1 <= v <= ground):
					raise exceptions.InvalidVertex(v, ground)
			masks.add(mask_from_vertices(face))
		for face in masks:
			for v in iter_vertices(face):
				if face & ~bit(v) not in masks:
					raise exceptions.ComplexError(
						"Not downward closed: {} is missing".format(
							list(vertices_from_mask(face & ~bit(v)))
						)
					)
		self._init(ground, masks)

	def _init(self, ground, masks):
		self.ground = ground
		self.faces = tuple(sorted(masks, key=_face_key))
		by_size = []
		for face in self.faces:
			size = popcount(face)
			while len(by_size) <= size:
				by_size.append([])
			by_size[size].append(face)
		self._by_size = by_size

	@classmethod
	def _from_masks(cls, ground, masks):
		complex_ = cls.__new__(cls)
		complex_._init(ground, set(masks))
		return complex_

	@classmethod
	def from_facets(cls, ground, facets, max_faces=None):
		"""Builds the complex generated by ``facets``.

		Raises
		------
		~graphreg.exceptions.CapacityExceeded
		"""
		limit = settings.MAX_FACES if max_faces is None else max_faces
		masks = set()
		for facet in facets:
			top = mask_from_vertices(facet)
			for v in iter_vertices(top):
				if v > ground:
					raise exceptions.InvalidVertex(v, ground)
			sub = top
			while True:
				masks.add(sub)
				if len(masks) > limit:
					raise exceptions.CapacityExceeded(limit, len(masks), "faces")
				if not sub:
					break
				sub = (sub - 1) & top
		return cls._from_masks(ground, masks)

	@property
	def is_void(self):
		return not self.faces

	@property
	def dimension(self):
		"""Largest face cardinality minus one (``-1`` for ``{∅}``)."""
		return len(self._by_size) - 2

	@property
	def vertex_mask(self):
		mask = 0
		for face in self.faces_of_size(1):
			mask |= face
		return mask

	def faces_of_size(self, size):
		if 0 <= size < len(self._by_size):
			return self._by_size[size]
		return []

	def facets(self):
		"""Returns the inclusion-maximal faces as sorted vertex tuples."""
		faces = set(self.faces)
		result = []
		for face in self.faces:
			free = self.vertex_mask & ~face
			if not any(face | bit(v) in faces for v in iter_vertices(free)):
				result.append(vertices_from_mask(face))
		return result

	def restrict(self, mask):
		"""Returns the subcomplex of faces contained in ``mask``."""
		return SimplicialComplex._from_masks(self.ground, (f for f in self.faces if not f & ~mask))

	def cone_apex(self):
		"""Returns a vertex lying in every facet, or ``None``."""
		if self.is_void:
			return None
		common = self.vertex_mask
		for facet in self.facets():
			common &= mask_from_vertices(facet)
			if not common:
				return None
		return lowest_vertex(common) if common else None

	def __len__(self):
		return len(self.faces)

	def __eq__(self, other):
		if not isinstance(other, SimplicialComplex):
			return NotImplemented
		return self.ground == other.ground and self.faces == other.faces

	def __hash__(self):
		return hash((self.ground, self.faces))

	def __repr__(self):
		return "SimplicialComplex(ground={}, facets={})".format(
			self.ground, [list(f) for f in self.facets()]
		)


class FVector(tuple):
	"""Face counts by cardinality: entry ``i`` counts faces with ``i``
	vertices, so entry 0 is 1 for every nonvoid complex."""

	def reduced_euler_characteristic(self):
		return sum((-1) ** (i - 1) * count for i, count in enumerate(self))


def independence_faces(graph, mask=None, max_size=None, max_faces=None):
	"""Returns the independent sets of ``graph`` inside ``mask`` as bitmasks.

	Raises
	------
	~graphreg.exceptions.CapacityExceeded

	Parameters
	----------
	graph : ~graphreg.graph.Graph
		The graph
	mask : int
		Restrict to independent subsets of these vertices (default: all)
	max_size : int
		Skip sets with more members
	max_faces : int
		Face bound (default: ``settings.MAX_FACES``)
	"""
	limit = settings.MAX_FACES if max_faces is None else max_faces
	nbr = graph._nbr
	faces = []
	stack = [(0, graph.vertex_mask if mask is None else mask, 0)]
	while stack:
		face, candidates, size = stack.pop()
		faces.append(face)
		if len(faces) > limit:
			raise exceptions.CapacityExceeded(limit, len(faces), "faces")
		if max_size is not None and size >= max_size:
			continue
		rest = candidates
		while rest:
			low = rest & -rest
			rest ^= low
			stack.append((face | low, rest & ~nbr[low.bit_length() - 1], size + 1))
	return faces


def independence_complex(graph, max_faces=None):
	"""Returns the complex of all independent sets of ``graph`` (with ∅).

	Raises
	------
	~graphreg.exceptions.CapacityExceeded
	"""
	return SimplicialComplex._from_masks(graph.n, independence_faces(graph, max_faces=max_faces))


def f_vector(complex_):
	"""Returns the :class:`FVector` of ``complex_``."""
	return FVector(len(complex_.faces_of_size(i)) for i in range(len(complex_._by_size)))


#####################
# Boundary and rank #
#####################

def boundary_matrix(lower, upper):
	"""Returns the integer boundary matrix from faces ``upper`` (columns)
	to faces ``lower`` (rows), both lists of bitmasks in chain order."""
	index = {face: row for row, face in enumerate(lower)}
	entries = {}
	for col, face in enumerate(upper):
		sign = 1
		for v in iter_vertices(face):
			entries.setdefault(index[face & ~bit(v)], {})[col] = ZZ(sign)
			sign = -sign
	return DomainMatrix(entries, (len(lower), len(upper)), ZZ)


def matrix_rank(matrix, field, backend="elimination"):
	"""Rank of an integer :class:`DomainMatrix` over ``field``."""
	if 0 in matrix.shape:
		return 0
	if backend == "elimination":
		return matrix.convert_to(field.domain()).rank()
	if backend == "smith":
		p = field.characteristic
		factors = invariant_factors(matrix.to_dense())
		return sum(1 for f in factors if f != 0 and (p == 0 or int(f) % p != 0))
	raise exceptions.InvalidParameter("Unknown homology backend: {!r}".format(backend))


def _homology_from_layers(layers, field, backend, dimensions):
	# ``layers[c]`` lists the faces with ``c`` members
	ranks = {}

	def boundary_rank(c):
		if c not in ranks:
			if c <= 0 or c >= len(layers):
				ranks[c] = 0
			else:
				ranks[c] = matrix_rank(boundary_matrix(layers[c - 1], layers[c]), field, backend)
		return ranks[c]

	result = []
	for k in dimensions:
		c = k + 1
		size = len(layers[c]) if 0 <= c < len(layers) else 0
		result.append(size - boundary_rank(c) - boundary_rank(c + 1))
	return result


def reduced_homology_ranks(complex_, field=None, backend="elimination"):
	"""Returns the reduced homology ranks of ``complex_`` over ``field``.

	Entry ``i`` of the result is the rank in dimension ``i - 1``, covering
	dimensions ``-1`` up to the dimension of the complex.

	Raises
	------
	~graphreg.exceptions.VoidComplex

	Parameters
	----------
	complex_ : SimplicialComplex
		A nonvoid complex
	field : Union[FieldSpec, str, None]
		Coefficient field (default: ``settings.DEFAULT_FIELD``)
	backend : str
		``"elimination"`` or ``"smith"``
	"""
	if complex_.is_void:
		raise exceptions.VoidComplex()
	field = FieldSpec.coerce(field)
	layers = complex_._by_size
	return _homology_from_layers(layers, field, backend, range(-1, len(layers) - 1))


def independence_homology_rank(graph, mask, k, field=None, backend="elimination"):
	"""Rank of the ``k``-th reduced homology of the independence complex of
	the subgraph induced on ``mask``.

	Only faces with at most ``k + 2`` members are generated.
	"""
	if k < -1:
		return 0
	layers = [[] for _ in range(k + 3)]
	for face in independence_faces(graph, mask, max_size=k + 2):
		layers[popcount(face)].append(face)
	for layer in layers:
		layer.sort(key=_face_key)
	while len(layers) > 1 and not layers[-1]:
		layers.pop()
	rank = _homology_from_layers(layers, FieldSpec.coerce(field), backend, [k])[0]
	logger.debug("H~_%d of Ind on %s has rank %d", k, vertices_from_mask(mask), rank)
	return rank
