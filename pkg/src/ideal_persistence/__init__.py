"""Associated primes, depth and persistence properties of powers of monomial ideals."""

from .errors import CapabilityError, IdealError, InputError
from .graphs import SimpleGraph, common_neighbor_edges, edge_ideal
from .homology import (GF2, QQ, BettiTable, Field, SimplicialComplex, betti_table, depth,
                       depth_function, dstab, has_linear_resolution, lcm_lattice,
                       reduced_homology_ranks, upper_koszul)
from .kernels import BACKEND
from .localization import MonomialPrime, candidate_primes, monomial_localization
from .monomial import (MonomialIdeal, PowerTable, colon_ideal, colon_monomial, contains,
                       equals, intersect, is_equigenerated, minimalize, multiply, power)
from .parsing import format_ideal, parse_ideal, parse_ideal_text
from .persistence import (persistence_check, persistence_report, ratliff_check,
                          socle_dimension_profile, strong_persistence_check, verify_witness)
from .polymatroid import (BaseSet, analytic_spread, analytic_spread_via_gamma, exchange_check,
                          graphic_matroid_ideal, graphic_spread, is_polymatroidal,
                          localization_spread_check, transversal_ideal, veronese_type_ideal)
from .primes import ass, ass_profile, is_associated, socle_basis, stable_primes_polymatroidal
from .relation_graph import (components, depth_upper_bounds, dot_export, linear_relation_graph,
                             socle_witness)
from .report import AnalysisConfig, run_analysis, to_json

__version__ = "0.1.0"
