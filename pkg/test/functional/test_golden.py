"""Exact values on the pentagon, the octagon and their suspensions."""
import graphreg
from graphreg.algebra import HilbertSeries


def test_pentagon(c5):
	report = graphreg.invariant_report(c5)
	assert report.summary() == "im=1 m=2 reg=2 dim=2 h=[1,3,1] s=2"
	assert report.series == HilbertSeries([1, 3, 1], 2)
	assert str(report.series) == "(1 + 3λ + λ^2)/(1 - λ)^2"


def test_pentagon_suspensions(c5):
	cone = graphreg.s_suspension(c5, [])
	report = graphreg.invariant_report(cone)
	assert report.series == HilbertSeries([1, 4], 2)
	assert (report.im, report.reg, report.m) == (1, 2, 3)

	edged = graphreg.edge_s_suspension(c5, (1, 2), [])
	report = graphreg.invariant_report(edged)
	assert report.m == 3
	assert report.series == graphreg.predict_edge_s_suspension(graphreg.hilbert_series(c5), 0)


def test_octagon_chain(c8):
	"""The cone and two edge suspensions bring deg h from 4 down to 3."""
	engine = graphreg.RegularityEngine("q")
	chain = [c8]
	chain.append(graphreg.s_suspension(chain[-1], []))
	chain.append(graphreg.edge_s_suspension(chain[-1], (1, 9), []))
	chain.append(graphreg.edge_s_suspension(chain[-1], (3, 9), []))

	numerators = []
	for graph in chain:
		report = graphreg.invariant_report(graph, engine=engine)
		assert (report.im, report.reg) == (2, 3)
		assert report.dim == 4
		numerators.append(list(report.hcoeffs.coeffs))
	assert numerators == [
		[1, 4, 2, -4, -1],
		[1, 5, -1, -1, -2],
		[1, 6, -2, -2, -1],
		[1, 7, -3, -3],
	]
	assert graphreg.decrease_deg_step(c8) == chain[-1]


def test_octagon_betti_numbers(c8):
	table = graphreg.graded_betti(graphreg.edge_ideal(c8), "q")
	assert table.regularity() == 3
	assert table.totals()[1] == 8
	assert graphreg.regularity_quotient(graphreg.edge_ideal(c8), "f2") == 3


def test_icosahedron_complement(file_provider):
	"""The shipped base for regularity 3 has a symmetric h-polynomial."""
	graph = file_provider.get(3)
	report = graphreg.invariant_report(graph)
	assert (report.im, report.reg, report.s) == (1, 3, 3)
	assert report.hcoeffs == [1, 9, 9, 1]
	assert graphreg.is_gap_free(graph)
