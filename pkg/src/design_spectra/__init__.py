"""Distance spectra of design graphs: construction, exact and numeric eigenvalues,
distance-equitable partitions, and checks against closed forms."""

from .design import DesignParams, NotDesignGraph, check_design, param_identity
from .field import Field, dot_product, field_make, projective_points
from .formulas import (gamma_pair, gaussian_binomial, quotient_P, s_is_integral, s_parameters,
                       s_spectrum)
from .generators import bipartite_kneser, double_cover, rook_graph, subspace_graph
from .graph import (Bipartition, Graph, bipartition, diameter, distance_matrix, from_edge_list,
                    girth)
from .partitions import (Partition, QuotientMatrix, cell_sum_check,
                         coarsest_equitable_refinement, is_distance_equitable, pi2_partition,
                         quotient_matrix)
from .spectra import (IntPoly, Quadratic, Spectrum, char_poly_exact, distinct_values,
                      integer_roots, is_distance_integral, numeric_spectrum, quadratic_roots,
                      spectrum_subset)

__version__ = "0.1.0"
