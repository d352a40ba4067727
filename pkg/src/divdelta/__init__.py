"""Divisor-difference arithmetic and split-graph realization.

A natural number is a member when some difference of complementary divisors
equals the sum of two nonzero such differences; membership is equivalently
witnessed by a divisor triple, classified by factorization-shape rules, and
realized combinatorially as a split graph whose factor multigraph is an
n-simple transitive triangle.
"""

from divdelta import arith, classify, delta, graphs, polyfam, realize, verify  # noqa: F401
from divdelta.arith import CEILING, Factorization, divisors, factorize, is_perfect_square, squarefree_part, tau, valuation
from divdelta.classify import ClassVerdict, Decision, pkq_member, pqr_member, tau_filter
from divdelta.delta import (
    DeltaTriple,
    DescentWitness,
    DivisorDiffSets,
    PrimitiveDecomposition,
    delta_set,
    delta_triples,
    descent_witness,
    divisor_diff_sets,
    double_representation,
    extremal_bound,
    has_delta,
    is_delta_primitive,
    is_delta_triple,
    primitive_decompositions,
    primitives_with_squarefree_part,
    triple_number,
    triples_with_component,
    xyz_identity_holds,
)
from divdelta.graphs import (
    FactorGraph,
    SplitGraph,
    TriangleType,
    factor_graph,
    flow_orientation,
    graph_stats,
    is_n_simple_type0_triangle,
    n_simple_induced_cycles,
    sigma,
    sigma_oracle,
    split_graph,
    triangle_type,
)
from divdelta.kernels import BACKEND
from divdelta.polyfam import PolyFamily, family_members, make_family, square_scan
from divdelta.realize import RealizationParams, active_realizations, realization_params, realize_graph, realize_triple

__version__ = "0.1.0"
