"""Exact verification of g-extra connectivity of strong graph products."""

from .graph import (Graph, GraphError, closed_neighborhood, components, cycle, complete,
                    is_k_regular, min_degree, neighbors, open_boundary, path, read_edge_list,
                    write_edge_list)
from .families import build, generate
from .products import (ProductGraph, cartesian_product, layer_G1, layer_G2, project,
                       strong_product)
from .invariants import (INF, girth, hypothesis_report, max_internally_disjoint_paths,
                         vertex_connectivity, vertex_count_lower_bound)
from .extra import (CutCertificate, ExtraConnResult, build_block_cut, build_layer_path_cut,
                    check_layer_slice_property, is_g_extra_cut, kappa_g_oracle, kappa_g_search)

__version__ = "0.1.0"
