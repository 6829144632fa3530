"""Command line interface: ``graphreg <command> ...``.

Exit codes: 0 on success, 1 when a verification fails, 2 for invalid input
or a violated precondition, 3 when no base graph is available.
"""

import argparse
import logging
import sys

from . import exceptions, settings
from .algebra import graded_betti, series_expansion
from .constructor import BaseGraphProvider, build, replay_certificate
from .edge_ideal import edge_ideal, hilbert_series, invariant_report
from .encoding import get_encoding, graph_to_dict, read_document, read_graph, write_document
from .oracle import verify_lemma_suite
from .suspension import (
	edge_s_suspension, predict_edge_s_suspension, predict_s_suspension, s_suspension,
)
from .utils import parse_vertex_list
from .version import __version__


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_NO_BASE = 3

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _exit_code(error):
	if isinstance(error, exceptions.BaseUnavailable):
		return EXIT_NO_BASE
	if isinstance(error, exceptions.VerificationFailed):
		return EXIT_VERIFICATION
	return EXIT_INPUT


def _emit(data, out):
	"""Writes bytes to ``out`` or standard output."""
	if out:
		with open(out, "wb") as file:
			file.write(data)
	else:
		sys.stdout.buffer.write(data)
		sys.stdout.flush()


def _vertices(text):
	try:
		return parse_vertex_list(text)
	except ValueError:
		raise argparse.ArgumentTypeError("expected comma separated vertices, got {!r}".format(text)) from None


def cmd_invariants(args):
	graph = read_graph(args.graph)
	report = invariant_report(graph, field=args.field)
	if args.json:
		_emit(get_encoding("json").encode(report.to_dict()), None)
	else:
		print("{} n={} connected={}".format(report.summary(), report.n, str(report.connected).lower()))
	return EXIT_OK


def cmd_construct(args):
	provider = BaseGraphProvider(
		base_dir=args.base_dir, search_budget=args.budget, seed=args.seed, field=args.field
	)
	certificate = build(args.a, args.r, args.s, provider=provider)
	out = args.out or "G_{}_{}_{}.json".format(args.a, args.r, args.s)
	cert = args.certificate or (out[:-5] if out.endswith(".json") else out) + ".cert.json"
	write_document(graph_to_dict(certificate.graph), out)
	write_document(certificate.to_dict(), cert, pretty=True)
	print("{} n={} steps={}".format(certificate.report.summary(), certificate.graph.n, len(certificate.steps)))
	print("graph: {}".format(out))
	print("certificate: {}".format(cert))
	return EXIT_OK


def cmd_suspend(args):
	graph = read_graph(args.graph)
	before = hilbert_series(graph)
	# S is validated by the suspension before the prediction checks its size
	if args.edge is None:
		result = s_suspension(graph, args.S)
		predicted = predict_s_suspension(before, len(set(args.S)))
	else:
		if len(args.edge) != 2:
			raise exceptions.NotAnEdge(tuple(args.edge))
		result = edge_s_suspension(graph, tuple(args.edge), args.S)
		predicted = predict_edge_s_suspension(before, len(set(args.S)))
	after = hilbert_series(result)
	if args.out:
		write_document(graph_to_dict(result), args.out)
	print("before:    {}".format(before))
	print("predicted: {}".format(predicted))
	print("after:     {}".format(after))
	if after != predicted:
		raise exceptions.VerificationFailed("Hilbert series", str(predicted), str(after))
	return EXIT_OK


def cmd_verify(args):
	report = verify_lemma_suite(seed=args.seed, trials=args.trials, max_n=args.max_n, field=args.field)
	if args.json:
		_emit(get_encoding("json").encode(report.to_dict()), None)
	else:
		print("trials={} checks={} failures={} notes={}".format(
			report.trials, report.checks, len(report.failures), len(report.notes)
		))
		for failure in report.failures:
			print("trial {trial}: {check}: expected {expected}, got {got}".format(**failure))
	return EXIT_OK if report.ok else EXIT_VERIFICATION


def cmd_expand(args):
	graph = read_graph(args.graph)
	if args.degree < 0:
		raise exceptions.InvalidParameter("Degree must be nonnegative, got {}".format(args.degree))
	print(" ".join(str(value) for value in series_expansion(hilbert_series(graph), args.degree)))
	return EXIT_OK


def cmd_export_dot(args):
	_emit(get_encoding("dot").encode(read_graph(args.graph)), args.out)
	return EXIT_OK


def cmd_betti(args):
	table = graded_betti(edge_ideal(read_graph(args.graph)), args.field)
	if args.json:
		_emit(get_encoding("json").encode(table.to_dict()), None)
		return EXIT_OK
	rows = table.rows()
	width = max(len(str(value)) for row in rows for value in row)
	for shift, values in enumerate(rows):
		print("{:>3}: {}".format(shift, " ".join(str(value).rjust(width) for value in values)))
	print("reg={} pd={}".format(table.regularity(), table.projective_dimension()))
	return EXIT_OK


def cmd_replay(args):
	data = read_document(args.certificate)
	graph = replay_certificate(data)
	if args.out:
		write_document(graph_to_dict(graph), args.out)
	print("replayed n={} edges={}: matches the recorded result".format(graph.n, len(graph.edges)))
	return EXIT_OK


def make_parser():
	parser = argparse.ArgumentParser(
		prog="graphreg",
		description="Edge ideal invariants and graphs with prescribed regularity and h-polynomial degree.",
	)
	parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
	parser.add_argument("--log-level", default=settings.LOG_LEVEL, type=str.upper, choices=LOG_LEVELS,
	                    help="logging level written to stderr (default: %(default)s)")
	commands = parser.add_subparsers(dest="command", metavar="COMMAND")
	commands.required = True

	def field_option(sub):
		sub.add_argument("--field", default=None,
		                 help="coefficient field: q, f2 or fp:<p> (default: {})".format(settings.DEFAULT_FIELD))

	sub = commands.add_parser("invariants", help="print im, m, reg, dim and the h-polynomial")
	sub.add_argument("graph")
	sub.add_argument("--json", action="store_true")
	field_option(sub)
	sub.set_defaults(func=cmd_invariants)

	sub = commands.add_parser("construct", help="build a graph with prescribed im, reg and deg h")
	sub.add_argument("a", type=int)
	sub.add_argument("r", type=int)
	sub.add_argument("s", type=int)
	sub.add_argument("--base-dir", default=None)
	sub.add_argument("--budget", type=int, default=None, help="random base search candidates")
	sub.add_argument("--seed", type=int, default=None)
	sub.add_argument("--out", default=None)
	sub.add_argument("--certificate", default=None)
	field_option(sub)
	sub.set_defaults(func=cmd_construct)

	sub = commands.add_parser("suspend", help="apply one S- or edge-S-suspension")
	sub.add_argument("graph")
	sub.add_argument("--s", "--S", dest="S", type=_vertices, default=[], help="independent set, e.g. 1,3")
	sub.add_argument("--edge", type=_vertices, default=None, help="edge, e.g. 1,2")
	sub.add_argument("--out", default=None)
	sub.set_defaults(func=cmd_suspend)

	sub = commands.add_parser("verify", help="run the randomized property suite")
	sub.add_argument("--trials", type=int, default=100)
	sub.add_argument("--seed", type=int, default=0)
	sub.add_argument("--max-n", type=int, default=8)
	sub.add_argument("--json", action="store_true")
	field_option(sub)
	sub.set_defaults(func=cmd_verify)

	sub = commands.add_parser("expand", help="print the Hilbert function up to a degree")
	sub.add_argument("graph")
	sub.add_argument("--degree", type=int, required=True)
	sub.set_defaults(func=cmd_expand)

	sub = commands.add_parser("export-dot", help="write a graph in Graphviz DOT format")
	sub.add_argument("graph")
	sub.add_argument("--out", default=None)
	sub.set_defaults(func=cmd_export_dot)

	sub = commands.add_parser("betti", help="print the graded Betti table of R/I(G)")
	sub.add_argument("graph")
	sub.add_argument("--json", action="store_true")
	field_option(sub)
	sub.set_defaults(func=cmd_betti)

	sub = commands.add_parser("replay", help="rebuild a graph from a certificate")
	sub.add_argument("certificate")
	sub.add_argument("--out", default=None)
	sub.set_defaults(func=cmd_replay)

	return parser


def main(argv=None):
	parser = make_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as error:
		return EXIT_INPUT if error.code else EXIT_OK

	logging.basicConfig(
		level=args.log_level,
		format="%(levelname)s %(name)s: %(message)s",
		stream=sys.stderr,
	)

	try:
		return args.func(args)
	except exceptions.Error as error:
		logger.debug("Command failed", exc_info=True)
		print("error: {}: {}".format(type(error).__name__, error), file=sys.stderr)
		return _exit_code(error)
	except OSError as error:
		print("error: {}".format(error), file=sys.stderr)
		return EXIT_INPUT
