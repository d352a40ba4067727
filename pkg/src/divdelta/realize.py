"""Construct split graphs whose factor graph is an n-simple transitive
triangle, starting from a witness triple.

Given a triple (x, y, z) for n and a free choice d_a >= z of the degree of
the lowest vertex, the remaining degrees and pairwise intersections are
forced by writing each factor-graph multiplicity n as a product of
complementary divisors:

    d_a - eta_ab = z,   d_b - eta_ab = n/z,
    d_b - eta_bc = y,   d_c - eta_bc = n/y,
    d_a - eta_ac = x,   d_c - eta_ac = n/x.

The triple intersection is pinned to its feasibility floor
max(0, d_a - x - z), which maximises activity and makes the output
canonical.  The clique is laid out as seven consecutive intervals (the Venn
cells of the three neighborhoods) in a fixed order, so equal parameters
give byte-identical graphs.
"""

from dataclasses import dataclass

from divdelta import delta, graphs
from divdelta.arith import check_natural
from divdelta.delta import DeltaTriple
from divdelta.graphs import SplitGraph, TriangleType

CELL_ORDER = ("aOnly", "ab", "ac", "abc", "bOnly", "bc", "cOnly")


@dataclass(frozen=True)
class RealizationParams:
    n: int
    x: int
    y: int
    z: int
    d_a: int
    d_b: int
    d_c: int
    eta_ab: int
    eta_bc: int
    eta_ac: int
    eta_abc: int
    k_size: int
    cells: tuple[int, int, int, int, int, int, int]


def _as_triple(triple) -> DeltaTriple:
    if isinstance(triple, DeltaTriple):
        return triple
    n, x, y, z = triple
    return DeltaTriple(n, x, y, z)


def realization_params(triple, d_a: int) -> RealizationParams:
    """Solve the forced parameters for the given triple and d_a >= z.

    Raises ValueError for an invalid triple, d_a below z, or any negative
    Venn cell (with the floor choice of the triple intersection the cells
    are in fact always feasible; the check guards the construction).
    """
    t = _as_triple(triple)
    n, x, y, z = t.n, t.x, t.y, t.z
    if not delta.is_delta_triple(n, x, y, z):
        raise ValueError(f"({x}, {y}, {z}) is not a witness triple for {n}")
    check_natural(d_a, "d_a")
    if d_a < z:
        raise ValueError(f"d_a must be at least z = {z}, got {d_a}")
    d_b = d_a + n // z - z
    d_c = d_a + n // x - x
    eta_ab = d_a - z
    eta_bc = d_b - y
    eta_ac = d_a - x
    eta_abc = max(0, d_a - x - z)
    if eta_bc <= 0 or eta_ac <= 0:
        raise RuntimeError(f"forced intersections not positive for n={n}, d_a={d_a}")
    if d_c - eta_bc != n // y:
        raise RuntimeError(f"complementary pairing broken for n={n}: d_c - eta_bc != n/y")
    cells = (
        d_a - eta_ab - eta_ac + eta_abc,  # aOnly
        eta_ab - eta_abc,                 # ab
        eta_ac - eta_abc,                 # ac
        eta_abc,                          # abc
        d_b - eta_ab - eta_bc + eta_abc,  # bOnly
        eta_bc - eta_abc,                 # bc
        d_c - eta_ac - eta_bc + eta_abc,  # cOnly
    )
    if any(c < 0 for c in cells):
        raise ValueError(f"infeasible layout for n={n}, d_a={d_a}: cells {cells}")
    k_size = n // x + z + y + eta_abc
    if sum(cells) != k_size:
        raise RuntimeError(f"cell sizes {cells} do not tile the clique of size {k_size}")
    return RealizationParams(
        n, x, y, z, d_a, d_b, d_c, eta_ab, eta_bc, eta_ac, eta_abc, k_size, cells
    )


def realize_graph(params: RealizationParams) -> SplitGraph:
    """Materialise the split graph and verify it end to end: degrees, all
    three multiplicities equal n, transitive triangle, balanced."""
    starts = []
    pos = 1
    for size in params.cells:
        starts.append(pos)
        pos += size
    ivals = {
        name: range(start, start + size)
        for name, start, size in zip(CELL_ORDER, starts, params.cells)
    }
    n_a = [*ivals["aOnly"], *ivals["ab"], *ivals["ac"], *ivals["abc"]]
    n_b = [*ivals["ab"], *ivals["abc"], *ivals["bOnly"], *ivals["bc"]]
    n_c = [*ivals["ac"], *ivals["abc"], *ivals["bc"], *ivals["cOnly"]]
    s = graphs.split_graph(params.k_size, {"a": n_a, "b": n_b, "c": n_c})

    expected = {"a": params.d_a, "b": params.d_b, "c": params.d_c}
    for lab, want in expected.items():
        if s.degree(lab) != want:
            raise RuntimeError(f"degree of {lab} is {s.degree(lab)}, expected {want}")
    for u, v in (("a", "b"), ("b", "c"), ("a", "c")):
        if graphs.sigma(s, u, v) != params.n:
            raise RuntimeError(f"sigma({u}, {v}) != {params.n} in realized graph")
    if graphs.triangle_type(s, s.i_labels) is not TriangleType.TYPE_0:
        raise RuntimeError("realized triangle is not transitive")
    if not graphs.shape_stats(s)[2]:
        raise RuntimeError("realized graph is not balanced")
    return s


def realize_triple(x: int, y: int, z: int, d_a: int | None = None) -> tuple[RealizationParams, SplitGraph]:
    """Convenience path from a bare triple: recover n, default d_a to z."""
    n = delta.triple_number(x, y, z)
    params = realization_params(DeltaTriple(n, x, y, z), z if d_a is None else d_a)
    return params, realize_graph(params)


def active_realizations(triple) -> list[SplitGraph]:
    """Every realization with all vertices active, over the full feasible
    window d_a in [z, x + z]; each one is also indecomposable.

    Nonempty for every valid triple (d_a = z always qualifies).
    """
    t = _as_triple(triple)
    out = []
    for d_a in range(t.z, t.x + t.z + 1):
        s = realize_graph(realization_params(t, d_a))
        stats = graphs.graph_stats(s)
        if stats.active:
            if not stats.indecomposable_active:
                raise RuntimeError(f"active realization at d_a={d_a} is decomposable")
            out.append(s)
    if not out:
        raise RuntimeError(f"no active realization for {t}; d_a = z should always work")
    return out
