"""Process-wide defaults, each overridable through a ``GRAPHREG_*``
environment variable.

Every function that accepts one of these values takes it as a keyword
argument defaulting to ``None``, meaning "use the current setting".
"""

import os


def _flag(name, default):
	value = os.environ.get(name)
	if value is None:
		return default
	return value.strip().lower() not in ("", "0", "false", "no", "off")


DEFAULT_FIELD = str(os.environ.get("GRAPHREG_DEFAULT_FIELD", "q"))

# Upper bound on materialized simplicial complex faces
MAX_FACES = int(os.environ.get("GRAPHREG_MAX_FACES", 2 ** 24))

# Directory holding verified candidates ``L_<r>.json`` for base graphs
BASE_DIR = os.environ.get("GRAPHREG_BASE_DIR") or None

SEARCH_BUDGET = int(os.environ.get("GRAPHREG_SEARCH_BUDGET", 0))
SEARCH_SEED   = int(os.environ.get("GRAPHREG_SEARCH_SEED", 0))

# Recompute im and reg after every degree adjustment step of a build
CHECK_STEP_REGULARITY = _flag("GRAPHREG_CHECK_STEP_REGULARITY", True)

LOG_LEVEL = str(os.environ.get("GRAPHREG_LOG_LEVEL", "WARNING")).upper()
