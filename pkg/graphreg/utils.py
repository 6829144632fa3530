"""A module to handle generic operations.

Vertex sets are passed around internally as integer bitmasks where bit
``i - 1`` stands for vertex ``i``.
"""


import os



path_types = (str, bytes, os.PathLike)


def popcount(mask):
	"""Returns the number of set bits of ``mask``.

	.. code-block:: python

		>>> popcount(0b10110)
		3
	"""
	return bin(mask).count("1")


def bit(vertex):
	"""Returns the mask holding only ``vertex``."""
	return 1 << (vertex - 1)


def mask_from_vertices(vertices):
	"""Builds a bitmask from an iterable of 1-based vertex labels."""
	mask = 0
	for v in vertices:
		mask |= 1 << (v - 1)
	return mask


def iter_vertices(mask):
	"""Yields the vertex labels of ``mask`` in increasing order."""
	while mask:
		low = mask & -mask
		yield low.bit_length()
		mask ^= low


def vertices_from_mask(mask):
	"""Returns the sorted tuple of vertex labels contained in ``mask``."""
	return tuple(iter_vertices(mask))


def lowest_vertex(mask):
	"""Returns the smallest label contained in the non-empty ``mask``."""
	return (mask & -mask).bit_length()


def full_mask(n):
	"""Returns the mask of all vertices ``1..n``."""
	return (1 << n) - 1


def parse_vertex_list(text):
	"""Parses comma separated vertex labels such as ``"1, 3,5"``.

	An empty or blank string is the empty list.

	Raises
	------
	ValueError : A member is not an integer

	Parameters
	----------
	text : str
		The text to be parsed
	"""
	return [int(part) for part in text.split(",") if part.strip()]


def clean_file(file, mode="rb"):
	"""Returns a tuple containing a ``file``-like object and a close indicator.

	This ensures the given file is opened and keeps track of files that should
	be closed after use (files that were not open prior to this function call).

	Raises
	------
	OSError : Accessing the given file path failed

	Parameters
	----------
	file : Union[str, bytes, os.PathLike, io.IOBase]
		A filepath or ``file``-like object that may or may not need to be
		opened
	mode : str
		Mode used when the file has to be opened by this function
	"""
	if isinstance(file, path_types):
		return open(file, mode), True
	return file, False
