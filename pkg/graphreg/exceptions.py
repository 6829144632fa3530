"""
The class hierachy for exceptions is::

	Error
	 +-- GraphError
	 |    +-- CapacityExceeded
	 |    +-- InvalidEdge
	 |    +-- InvalidVertex
	 +-- ComplexError
	 |    +-- VoidComplex
	 +-- AlgebraError
	 |    +-- VariableAbsent
	 |    +-- IdealZero
	 |    +-- IdealImproper
	 |    +-- AdditivityViolation
	 +-- InvariantError
	 |    +-- NoEdges
	 |    +-- IsolatedVertex
	 |    +-- SandwichViolation
	 +-- SuspensionError
	 |    +-- NotIndependent
	 |    +-- NotAnEdge
	 |    +-- AdjacencyViolation
	 |    +-- SizeOutOfRange
	 |    +-- PredictionMismatch
	 +-- ConstructionError
	 |    +-- InvalidParameter
	 |    +-- InvalidTriple
	 |    +-- BaseUnavailable
	 |    +-- RegularityTooSmall
	 |    +-- DegreeTooSmall
	 |    +-- VerificationFailed
	 +-- OracleError
	 |    +-- TooLarge
	 +-- EncoderError
	      +-- EncoderMissingError
	      +-- EncodingError
	      +-- DecodingError

"""


class Error(Exception):
	"""Base class for all exceptions in this module."""
	pass


############
# graph.py #
############
class GraphError(Error):
	"""Base class for errors raised while building or querying graphs."""


class CapacityExceeded(GraphError):
	"""Raised when a vertex count or face count exceeds its configured
	bound."""

	def __init__(self, limit, requested, what="vertices"):
		self.limit = limit
		self.requested = requested
		self.what = what

		msg = "Too many {}: {} requested, at most {} supported".format(what, requested, limit)
		Error.__init__(self, msg)


class InvalidEdge(GraphError):
	"""Raised for loops, malformed pairs and out-of-range endpoints."""

	def __init__(self, edge, reason="invalid edge"):
		self.edge = edge

		Error.__init__(self, "{}: {!r}".format(reason, edge))


class InvalidVertex(GraphError):
	"""Raised when a vertex label is outside of ``1..n``."""

	def __init__(self, vertex, n):
		self.vertex = vertex
		self.n = n

		Error.__init__(self, "Vertex {!r} is not in 1..{}".format(vertex, n))


###############
# homology.py #
###############
class ComplexError(Error):
	"""Base class for simplicial complex related errors."""


class VoidComplex(ComplexError):
	"""Raised when an operation needs at least the empty face."""

	def __init__(self):
		Error.__init__(self, "The void complex (no faces at all) is not supported")


##############
# algebra.py #
##############
class AlgebraError(Error):
	"""Base class for errors concerning monomial ideals and series."""


class VariableAbsent(AlgebraError):
	"""Raised when colon by a variable is requested for a variable that does
	not occur in any minimal generator."""

	def __init__(self, variable):
		self.variable = variable

		Error.__init__(self, "Variable x{} occurs in no minimal generator".format(variable))


class IdealZero(AlgebraError):
	"""Raised when the zero ideal is passed where a nonzero one is needed."""

	def __init__(self):
		Error.__init__(self, "The ideal is zero")


class IdealImproper(AlgebraError):
	"""Raised when an operation produces or receives the unit ideal."""

	def __init__(self):
		Error.__init__(self, "The ideal is the whole ring")


class AdditivityViolation(AlgebraError):
	"""Raised when the colon/sum exact sequence checks fail.

	The full check result is available as ``report``."""

	def __init__(self, report):
		self.report = report

		Error.__init__(self, "Colon/sum check failed: {}".format(report))


#################
# edge_ideal.py #
#################
class InvariantError(Error):
	"""Base class for errors raised by the graph invariant façade."""


class NoEdges(InvariantError):
	"""Raised when a graph without edges (zero edge ideal) is given."""

	def __init__(self):
		Error.__init__(self, "The graph has no edges, so its edge ideal is zero")


class IsolatedVertex(InvariantError):
	"""Raised when a graph with an isolated vertex is given."""

	def __init__(self, vertex):
		self.vertex = vertex

		Error.__init__(self, "Vertex {} is isolated".format(vertex))


class SandwichViolation(InvariantError):
	"""Raised when ``im ≤ reg ≤ m`` fails, which can only be a bug."""

	def __init__(self, im, reg, m):
		self.im = im
		self.reg = reg
		self.m = m

		Error.__init__(self, "Expected im ≤ reg ≤ m, got im={} reg={} m={}".format(im, reg, m))


#################
# suspension.py #
#################
class SuspensionError(Error):
	"""Base class for violated suspension preconditions."""


class NotIndependent(SuspensionError):
	"""Raised when the given vertex set contains an edge."""

	def __init__(self, vertices):
		self.vertices = tuple(vertices)

		Error.__init__(self, "Vertex set {} is not independent".format(list(self.vertices)))


class NotAnEdge(SuspensionError):
	"""Raised when the given vertex pair is not an edge of the graph."""

	def __init__(self, edge):
		self.edge = tuple(edge)

		Error.__init__(self, "{} is not an edge".format(list(self.edge)))


class AdjacencyViolation(SuspensionError):
	"""Raised when a member of S is adjacent to an endpoint of the edge."""

	def __init__(self, vertex, endpoint):
		self.vertex = vertex
		self.endpoint = endpoint

		msg = "Vertex {} of S is adjacent to edge endpoint {}".format(vertex, endpoint)
		Error.__init__(self, msg)


class SizeOutOfRange(SuspensionError):
	"""Raised when ``|S|`` is negative or larger than the series dimension."""

	def __init__(self, size, dpow):
		self.size = size
		self.dpow = dpow

		Error.__init__(self, "|S| = {} is not in 0..{}".format(size, dpow))


class PredictionMismatch(SuspensionError):
	"""Raised when a computed Hilbert series differs from its prediction."""

	def __init__(self, predicted, computed):
		self.predicted = predicted
		self.computed = computed

		msg = "Predicted Hilbert series {} but computed {}".format(predicted, computed)
		Error.__init__(self, msg)


##################
# constructor.py #
##################
class ConstructionError(Error):
	"""Base class for errors raised by the graph constructor."""


class InvalidParameter(ConstructionError):
	"""Raised for out-of-range numeric arguments."""


class InvalidTriple(ConstructionError):
	"""Raised when ``1 ≤ a ≤ r`` and ``s ≥ 1`` do not hold."""

	def __init__(self, a, r, s):
		self.a = a
		self.r = r
		self.s = s

		msg = "No graph for (a, r, s) = ({}, {}, {}): need 1 ≤ a ≤ r and s ≥ 1".format(a, r, s)
		Error.__init__(self, msg)


class BaseUnavailable(ConstructionError):
	"""Raised when no verified gap-free base graph of the requested
	regularity could be found.

	This is a recoverable condition: supply a candidate file or a larger
	search budget."""

	def __init__(self, r):
		self.r = r

		msg = "No verified base graph with im = 1 and reg = dim = {}".format(r)
		Error.__init__(self, msg)


class RegularityTooSmall(ConstructionError):
	"""Raised when degree reduction is requested for a graph with reg < 2."""

	def __init__(self, reg):
		self.reg = reg

		Error.__init__(self, "Degree reduction needs reg ≥ 2, got {}".format(reg))


class DegreeTooSmall(ConstructionError):
	"""Raised when degree reduction is requested for deg h < 2."""

	def __init__(self, degree):
		self.degree = degree

		Error.__init__(self, "Degree reduction needs deg h ≥ 2, got {}".format(degree))


class VerificationFailed(ConstructionError):
	"""Raised when recomputed invariants disagree with their target."""

	def __init__(self, what, expected, got):
		self.what = what
		self.expected = expected
		self.got = got

		msg = "Verification of {} failed: expected {}, got {}".format(what, expected, got)
		Error.__init__(self, msg)


#############
# oracle.py #
#############
class OracleError(Error):
	"""Base class for brute-force oracle errors."""


class TooLarge(OracleError):
	"""Raised when an input exceeds a hard oracle size cap."""

	def __init__(self, what, limit, got):
		self.what = what
		self.limit = limit
		self.got = got

		Error.__init__(self, "Oracle limit exceeded: {} = {} > {}".format(what, got, limit))


###############
# encoding.py #
###############
class EncoderError(Error):
	"""Base class for all encoding and decoding related errors."""

	def __init__(self, message, encoder_name):
		self.encoder_name = encoder_name

		Error.__init__(self, message)


class EncoderMissingError(EncoderError):
	"""Raised when a requested encoder class does not actually exist."""

	def __init__(self, encoder_name):
		msg = "Unknown encoder: '{}'".format(encoder_name)
		EncoderError.__init__(self, msg, encoder_name)


class EncodingError(EncoderError):
	"""Raised when encoding a Python object into a byte string has failed
	due to some problem with the input data."""

	def __init__(self, encoder_name, original):
		self.original = original

		msg = "Object encoding error: {}".format(original)
		EncoderError.__init__(self, msg, encoder_name)


class DecodingError(EncoderError):
	"""Raised when decoding a byte string to a Python object has failed due to
	some problem with the input data."""

	def __init__(self, encoder_name, original):
		self.original = original

		msg = "Object decoding error: {}".format(original)
		EncoderError.__init__(self, msg, encoder_name)
