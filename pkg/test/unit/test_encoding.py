"""Test the graph file, certificate and DOT encodings."""
import io
import json

import pytest

import graphreg.encoding
import graphreg.exceptions
from graphreg.graph import Graph


@pytest.fixture
def json_encoder():
	return graphreg.encoding.Json()


@pytest.fixture
def c5():
	return Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


def test_json_parse(json_encoder):
	"""Asserts parsed key/value json matches expected output."""
	data = {'key': 'value'}
	raw = json.dumps(data).encode("utf-8")
	assert json_encoder.parse(raw) == data


def test_json_parse_errors(json_encoder):
	with pytest.raises(graphreg.exceptions.DecodingError):
		json_encoder.parse(b'{"bla":')
	with pytest.raises(graphreg.exceptions.DecodingError):
		json_encoder.parse(b'{"hello": "\xc3ber world!"}')


def test_json_encode_is_canonical(json_encoder):
	"""Key order of the input does not change the output bytes."""
	first = json_encoder.encode({"b": 1, "a": [1, 2], "λ": "x"})
	second = json_encoder.encode({"λ": "x", "a": [1, 2], "b": 1})
	assert first == second == '{"a":[1,2],"b":1,"λ":"x"}\n'.encode("utf-8")


def test_json_encode_pretty():
	assert graphreg.encoding.Json(pretty=True).encode({"b": 1, "a": 2}) == b'{\n  "a": 2,\n  "b": 1\n}\n'


def test_json_encode_error(json_encoder):
	with pytest.raises(graphreg.exceptions.EncodingError):
		json_encoder.encode({"graph": object()})


def test_dot(c5):
	dot = graphreg.encoding.Dot().encode(c5).decode("utf-8")
	assert dot.startswith("graph G {\n  x1;\n")
	assert "  x1 -- x5;\n" in dot
	assert dot.endswith("  x4 -- x5;\n}\n")
	assert dot.count("--") == 5

	with pytest.raises(graphreg.exceptions.EncodingError):
		graphreg.encoding.Dot().encode({"n": 1})
	with pytest.raises(graphreg.exceptions.DecodingError):
		graphreg.encoding.Dot().parse(b"graph G {}")


def test_get_encoding():
	assert isinstance(graphreg.encoding.get_encoding("JSON"), graphreg.encoding.Json)
	assert isinstance(graphreg.encoding.get_encoding("dot"), graphreg.encoding.Dot)
	with pytest.raises(graphreg.exceptions.EncoderMissingError):
		graphreg.encoding.get_encoding("graph6")


def test_graph_dict_form(c5):
	data = graphreg.encoding.graph_to_dict(c5)
	assert data == {"n": 5, "edges": [[1, 2], [1, 5], [2, 3], [3, 4], [4, 5]]}
	assert graphreg.encoding.graph_from_dict(data) == c5


@pytest.mark.parametrize("data,error", [
	({"n": 3}, graphreg.exceptions.DecodingError),
	([1, 2], graphreg.exceptions.DecodingError),
	({"n": "3", "edges": []}, graphreg.exceptions.DecodingError),
	({"n": 3, "edges": [[1, 1]]}, graphreg.exceptions.InvalidEdge),
	({"n": 3, "edges": [[1, 4]]}, graphreg.exceptions.InvalidEdge),
	({"n": 3, "edges": [[1, 2, 3]]}, graphreg.exceptions.InvalidEdge),
	({"n": 3, "edges": [[1, 2], [2, 1]]}, graphreg.exceptions.InvalidEdge),
	({"n": 63, "edges": []}, graphreg.exceptions.CapacityExceeded),
	({"n": 0, "edges": []}, graphreg.exceptions.GraphError),
	({"n": -2, "edges": []}, graphreg.exceptions.GraphError),
])
def test_graph_from_dict_rejects(data, error):
	with pytest.raises(error):
		graphreg.encoding.graph_from_dict(data)


def test_read_write_graph(c5, tmp_path):
	path = str(tmp_path / "c5.json")
	graphreg.encoding.write_graph(c5, path)
	assert graphreg.encoding.read_graph(path) == c5

	buffer = io.BytesIO()
	graphreg.encoding.write_graph(c5, buffer)
	assert buffer.getvalue() == b'{"edges":[[1,2],[1,5],[2,3],[3,4],[4,5]],"n":5}\n'
	assert graphreg.encoding.read_graph(io.BytesIO(buffer.getvalue())) == c5


def test_documents(tmp_path):
	path = str(tmp_path / "doc.json")
	graphreg.encoding.write_document({"x": [1]}, path, pretty=True)
	assert graphreg.encoding.read_document(path) == {"x": [1]}
