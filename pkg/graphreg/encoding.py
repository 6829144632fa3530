"""Defines the on-disk formats for graphs, certificates and reports.

Graphs are stored as JSON objects ``{"n": <int>, "edges": [[i, j], ...]}``
with ``1 ≤ i < j ≤ n``. Everything this package writes goes through
:class:`Json`, whose output is byte-identical for equal inputs.

.. note::

	The DOT encoder only writes; it cannot read graphs back.
"""


import abc
import json

from . import exceptions
from .graph import Graph, graph_from_edges
from .utils import clean_file


class Encoding:
	"""Abstract base for a data parser/encoder interface.
	"""
	__metaclass__ = abc.ABCMeta

	@abc.abstractmethod
	def parse(self, raw):
		"""Returns a Python object decoded from the bytes of this encoding.

		Raises
		------
		~graphreg.exceptions.DecodingError

		Parameters
		----------
		raw : bytes
			Data to be parsed

		Returns
		-------
			object
		"""

	@abc.abstractmethod
	def encode(self, obj):
		"""Serialize a raw object into corresponding encoding.

		Raises
		------
		~graphreg.exceptions.EncodingError

		Parameters
		----------
		obj : object
			Object to be encoded
		"""


class Json(Encoding):
	"""Canonical JSON parser/encoder.

	Keys are sorted and the output ends with a newline.

	Parameters
	----------
	pretty : bool
		Indent nested values by two spaces instead of writing one line
	"""
	name = 'json'

	def __init__(self, pretty=False):
		self.pretty = pretty

	def parse(self, raw):
		"""Decodes one JSON document.

		Raises
		------
		~graphreg.exceptions.DecodingError

		Returns
		-------
			object
		"""
		try:
			return json.loads(raw.decode("utf-8") if isinstance(raw, bytes) else raw)
		except (UnicodeDecodeError, ValueError) as error:
			raise exceptions.DecodingError('json', error) from error

	def encode(self, obj):
		"""Returns ``obj`` serialized as JSON formatted bytes.

		Raises
		------
		~graphreg.exceptions.EncodingError

		Parameters
		----------
		obj : Union[str, list, dict, int]
			JSON serializable Python object

		Returns
		-------
			bytes
		"""
		try:
			if self.pretty:
				result = json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
			else:
				result = json.dumps(obj, sort_keys=True, indent=None,
				                    separators=(',', ':'), ensure_ascii=False)
			return (result + "\n").encode("utf-8")
		except (UnicodeEncodeError, TypeError, ValueError) as error:
			raise exceptions.EncodingError('json', error) from error


class Dot(Encoding):
	"""Graphviz DOT writer for :class:`~graphreg.graph.Graph` objects.

	Vertex ``i`` is written as the node ``x<i>``.
	"""
	name = 'dot'

	def parse(self, raw):
		raise exceptions.DecodingError('dot', NotImplementedError("DOT input is not supported"))

	def encode(self, obj):
		"""Returns the DOT description of a graph.

		Raises
		------
		~graphreg.exceptions.EncodingError
		"""
		if not isinstance(obj, Graph):
			raise exceptions.EncodingError('dot', TypeError("Expected a Graph, got {}".format(type(obj).__name__)))
		lines = ["graph G {"]
		lines.extend("  x{};".format(v) for v in range(1, obj.n + 1))
		lines.extend("  x{} -- x{};".format(i, j) for i, j in obj.edges)
		lines.append("}")
		return ("\n".join(lines) + "\n").encode("utf-8")


__encodings = {
	Json.name: Json,
	Dot.name: Dot,
}


def get_encoding(name):
	"""
	Returns an Encoder object for the named encoding

	Raises
	------
	~graphreg.exceptions.EncoderMissingError

	Parameters
	----------
	name : str
		Encoding name. Supported options:

		 * ``"json"``
		 * ``"dot"``
	"""
	try:
		return __encodings[name.lower()]()
	except KeyError:
		raise exceptions.EncoderMissingError(name) from None


##########
# Graphs #
##########

def graph_to_dict(graph):
	return {"n": graph.n, "edges": [list(edge) for edge in graph.edges]}


def graph_from_dict(data):
	"""Builds a :class:`~graphreg.graph.Graph` from its JSON object form.

	Raises
	------
	~graphreg.exceptions.DecodingError
	~graphreg.exceptions.InvalidEdge
	~graphreg.exceptions.GraphError : fewer than one vertex
	~graphreg.exceptions.CapacityExceeded
	"""
	try:
		n = data["n"]
		raw_edges = data["edges"]
	except (KeyError, TypeError) as error:
		raise exceptions.DecodingError('json', error) from error
	if not isinstance(n, int) or isinstance(n, bool) or not isinstance(raw_edges, list):
		raise exceptions.DecodingError('json', TypeError("'n' must be an integer and 'edges' a list"))

	seen = set()
	edges = []
	for edge in raw_edges:
		if not isinstance(edge, list) or len(edge) != 2:
			raise exceptions.InvalidEdge(edge, "Malformed edge")
		key = (min(edge), max(edge)) if all(isinstance(v, int) for v in edge) else tuple(edge)
		if key in seen:
			raise exceptions.InvalidEdge(edge, "Duplicate edge")
		seen.add(key)
		edges.append(tuple(edge))
	return graph_from_edges(n, edges)


def read_graph(file):
	"""Reads a graph file.

	Parameters
	----------
	file : Union[str, bytes, os.PathLike, io.IOBase]
		Path or binary file object
	"""
	fileobj, opened = clean_file(file, "rb")
	try:
		raw = fileobj.read()
	finally:
		if opened:
			fileobj.close()
	return graph_from_dict(Json().parse(raw))


def write_graph(graph, file):
	"""Writes ``graph`` in canonical JSON form."""
	write_document(graph_to_dict(graph), file)


def write_document(obj, file, pretty=False):
	"""Writes any JSON document through the canonical encoder."""
	data = Json(pretty).encode(obj)
	fileobj, opened = clean_file(file, "wb")
	try:
		fileobj.write(data)
	finally:
		if opened:
			fileobj.close()


def read_document(file):
	fileobj, opened = clean_file(file, "rb")
	try:
		return Json().parse(fileobj.read())
	finally:
		if opened:
			fileobj.close()
