"""Edge ideal regularity toolkit"""


from .version import __version__

###########################
# Import stable API parts #
###########################
from . import exceptions

from .graph import Graph, graph_from_edges, induced_subgraph, disjoint_union
from .homology import FieldSpec, SimplicialComplex, independence_complex, reduced_homology_ranks
from .algebra import HilbertSeries, IntegerPolynomial, SquarefreeMonomialIdeal
from .algebra import graded_betti, regularity_quotient, regularity_ideal, series_expansion
from .edge_ideal import RegularityEngine, InvariantReport, edge_ideal, hilbert_series
from .edge_ideal import induced_matching_number, matching_number, invariant_report, is_gap_free
from .suspension import s_suspension, edge_s_suspension, predict_s_suspension, predict_edge_s_suspension
from .constructor import BaseGraphProvider, Certificate, build, build_gap_free, plan, replay_certificate
from .constructor import base_gap_free, increase_deg_step, decrease_deg_step, star_graph
from .oracle import verify_lemma_suite
