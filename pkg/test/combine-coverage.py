#!/usr/bin/python3
"""Merges the coverage data left by ``run-tests.py`` under each
``build/test-py*`` directory into one report below ``coverage/``."""
import glob
import os
import pathlib
import sys

import coverage

# Switch working directory to project directory
BASE_PATH = pathlib.Path(__file__).parent.parent
DATA_PATH = BASE_PATH / "coverage"
os.chdir(str(BASE_PATH))

raw_files = glob.glob("build/test-py*/cov_raw")
if not raw_files:
	print("No coverage data below build/; run `tox` first", file=sys.stderr)
	sys.exit(1)

cov = coverage.Coverage(data_file=str(DATA_PATH / ".coverage"))
cov.combine(raw_files, strict=True, keep=True)

cov.report(show_missing=True)
cov.html_report(directory=str(DATA_PATH / "cov_html"))
cov.xml_report(outfile=str(DATA_PATH / "cov.xml"))
