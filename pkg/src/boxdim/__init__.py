"""Box representations of comparability graphs, poset realizers, and exact oracles.

The package couples two certificate worlds: interval-graph intersections
(box representations) and linear-extension intersections (realizers), with
constructive transformations between them, extended-double-cover transfers,
generators for the standard tight families, and exhaustive desk-scale
oracles that verify every construction and every inequality exactly.
"""

from .boxes import (BoxicityResult, BoxRepresentation, box_representation_violation,
                    brute_boxicity, enumerate_interval_supergraphs,
                    verify_box_representation)
from .constructions import (CoverVertexMap, associated_cobipartite, base_box_from_cover,
                            bip_box_from_cobip, box_from_realizer, cobip_box_from_bip,
                            cover_box_from_base, extended_double_cover,
                            natural_height2_poset, realizer_from_box)
from .docio import DocumentError, parse, serialize, to_document
from .generators import (Seed, SplitMix64, complete_multipartite, crown, hypercube,
                         kn_minus_matching, random_graph, random_height2)
from .graphs import (Bipartition, ChromaticResult, Coloring, Graph, bipartition_of,
                     brute_chromatic, chain_length_coloring, complement,
                     is_proper_coloring, sides_are_cliques, transitive_orientation,
                     underlying_comparability_graph)
from .intervals import (Interval, IntervalRepresentation, canonical_cobipartite_rep,
                        distinguish_inner_endpoints, induced_graph,
                        interval_orders_from_rep, intervals_intersect,
                        make_distinguishing, maximal_cliques,
                        normalize_integer_endpoints, recognize_interval_graph)
from .limits import DEFAULT_LIMITS, OracleLimitError, OracleLimits
from .posets import (Digraph, DimensionResult, LinearExtension, Poset, Realizer,
                     brute_dimension, chain_order, enumerate_linear_extensions,
                     find_directed_cycle, has_two_plus_two, intersection_of_extensions,
                     is_linear_extension, realizer_violation, topological_sort,
                     verify_realizer)

__all__ = [name for name in dir() if not name.startswith("_")]
