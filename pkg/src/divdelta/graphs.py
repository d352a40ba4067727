"""Split graphs, 2-switches, and the factor multigraph.

A split graph here is a clique K = {1, ..., kSize} plus an ordered
independent set I of labelled vertices, each with a neighborhood inside K.
Clique edges are implicit; I-neighborhoods are stored as bitsets so the
intersection size eta(u, v) is a popcount.

The factor multigraph lives on I with edge multiplicity

    sigma(u, v) = (d_u - eta_uv) * (d_v - eta_uv),

which counts the 2-switches acting on u and v together.  A 2-switch removes
two disjoint edges and adds the cross pairs when both are non-edges; its
identity is the unordered removed pair plus the unordered added pair, and
``sigma_oracle`` recounts sigma by enumerating exactly those configurations.
The census used for activity checks enumerates switches over the whole
graph the same dumb way (via the kernel, since it is quadratic in the edge
count).
"""

import random
from array import array
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping

from divdelta import kernels

CORPUS_SEED = 1729


class TriangleType(Enum):
    """Orientation type of a factor-graph triangle under the degree flow.

    The value names the arc pattern: "0" all degrees distinct (transitive),
    "1+" two equal with the third strictly above, "1-" two equal with the
    third strictly below, "3" all equal.
    """

    TYPE_0 = "0"
    TYPE_1_PLUS = "1+"
    TYPE_1_MINUS = "1-"
    TYPE_3 = "3"


@dataclass(frozen=True)
class SplitGraph:
    k_size: int
    i_labels: tuple[str, ...]
    masks: tuple[int, ...]

    def neighborhood(self, label: str) -> frozenset[int]:
        m = self.masks[self._index(label)]
        return frozenset(k + 1 for k in range(self.k_size) if m >> k & 1)

    def degree(self, label: str) -> int:
        return self.masks[self._index(label)].bit_count()

    def clique_degree(self, k: int) -> int:
        if not 1 <= k <= self.k_size:
            raise ValueError(f"clique vertex {k} out of range")
        bit = 1 << (k - 1)
        return self.k_size - 1 + sum(1 for m in self.masks if m & bit)

    def _index(self, label: str) -> int:
        try:
            return self.i_labels.index(label)
        except ValueError:
            raise ValueError(f"unknown independent vertex {label!r}") from None


def split_graph(k_size: int, neighborhoods) -> SplitGraph:
    """Validated construction from {label: iterable of clique vertices}."""
    if not isinstance(k_size, int) or isinstance(k_size, bool) or k_size < 0:
        raise ValueError(f"k_size must be a nonnegative integer, got {k_size!r}")
    if isinstance(neighborhoods, Mapping):
        items = list(neighborhoods.items())
    else:
        items = list(neighborhoods)
    labels = []
    masks = []
    for label, nbrs in items:
        if label in labels:
            raise ValueError(f"duplicate independent vertex {label!r}")
        labels.append(label)
        m = 0
        for k in nbrs:
            if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= k_size:
                raise ValueError(f"neighborhood of {label!r} contains {k!r}, outside 1..{k_size}")
            m |= 1 << (k - 1)
        masks.append(m)
    return SplitGraph(k_size, tuple(labels), tuple(masks))


def eta(s: SplitGraph, u: str, v: str) -> int:
    return (s.masks[s._index(u)] & s.masks[s._index(v)]).bit_count()


def sigma(s: SplitGraph, u: str, v: str) -> int:
    """Multiplicity of the factor-graph edge uv: (d_u - eta)(d_v - eta)."""
    if u == v:
        raise ValueError("sigma needs two distinct independent vertices")
    e = eta(s, u, v)
    return (s.degree(u) - e) * (s.degree(v) - e)


def sigma_oracle(s: SplitGraph, u: str, v: str) -> int:
    """Recount sigma(u, v) by enumerating 2-switches through u and v.

    u and v are never adjacent, so the four vertices of such a switch are
    covered by one removed edge at u and one at v; both endpoint matchings
    of each disjoint pair are tried against plain adjacency.
    """
    iu, iv = s._index(u), s._index(v)
    if iu == iv:
        raise ValueError("sigma needs two distinct independent vertices")
    mu, mv = s.masks[iu], s.masks[iv]
    count = 0
    for k in range(1, s.k_size + 1):
        if not mu >> (k - 1) & 1:
            continue
        for k2 in range(1, s.k_size + 1):
            if k2 == k or not mv >> (k2 - 1) & 1:
                continue
            # matching u<->v: adds uv and kk2; kk2 is a clique edge, uv never is
            if not _adjacent(s, ("i", iu), ("i", iv)) and not _adjacent(s, ("k", k), ("k", k2)):
                count += 1
            # matching u<->k2: adds uk2 and vk
            if not _adjacent(s, ("i", iu), ("k", k2)) and not _adjacent(s, ("i", iv), ("k", k)):
                count += 1
    return count


def _adjacent(s: SplitGraph, a, b) -> bool:
    ta, xa = a
    tb, xb = b
    if ta == "k" and tb == "k":
        return xa != xb
    if ta == "i" and tb == "i":
        return False
    if ta == "k":
        ta, xa, tb, xb = tb, xb, ta, xa
    return bool(s.masks[xa] >> (xb - 1) & 1)


@dataclass(frozen=True)
class FactorGraph:
    vertices: tuple[str, ...]
    multiplicities: tuple[tuple[tuple[str, str], int], ...]

    def multiplicity(self, u: str, v: str) -> int:
        for (a, b), m in self.multiplicities:
            if (a, b) in ((u, v), (v, u)):
                return m
        raise ValueError(f"no pair ({u}, {v}) in the factor graph")

    def simple_edges(self) -> list[tuple[str, str]]:
        return [pair for pair, m in self.multiplicities if m > 0]

    def weighted_edge_count(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def is_connected(self) -> bool:
        if len(self.vertices) <= 1:
            return True
        adj = {v: set() for v in self.vertices}
        for (a, b) in self.simple_edges():
            adj[a].add(b)
            adj[b].add(a)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def induced_cycles(self) -> list[tuple[str, ...]]:
        """Induced cycles of the underlying simple graph, each given as a
        canonical vertex order (lexicographically least rotation/direction)."""
        adj = {v: set() for v in self.vertices}
        for (a, b) in self.simple_edges():
            adj[a].add(b)
            adj[b].add(a)
        cycles = []
        for size in range(3, len(self.vertices) + 1):
            for comb in combinations(self.vertices, size):
                inside = set(comb)
                local = {v: adj[v] & inside for v in comb}
                if any(len(nb) != 2 for nb in local.values()):
                    continue
                # 2-regular induced subgraph: a single cycle iff connected
                start = comb[0]
                order = [start]
                prev = None
                while True:
                    nxt = [w for w in local[order[-1]] if w != prev]
                    prev = order[-1]
                    order.append(nxt[0])
                    if order[-1] == start:
                        break
                if len(order) - 1 != size:
                    continue
                cycles.append(_canonical_cycle(order[:-1]))
        return cycles


def _canonical_cycle(order):
    k = len(order)
    best = None
    for rot in range(k):
        for seq in (order[rot:] + order[:rot], order[rot::-1] + order[:rot:-1]):
            t = tuple(seq)
            if best is None or t < best:
                best = t
    return best


def factor_graph(s: SplitGraph) -> FactorGraph:
    """Multiplicities for every unordered I-pair, in label order."""
    mults = []
    for i, u in enumerate(s.i_labels):
        for v in s.i_labels[i + 1 :]:
            mults.append(((u, v), sigma(s, u, v)))
    return FactorGraph(s.i_labels, tuple(mults))


def flow_orientation(s: SplitGraph) -> set[tuple[str, str]]:
    """Arc (u, v) whenever sigma(u, v) > 0 and d_u <= d_v; equal degrees give
    both arcs."""
    arcs = set()
    for i, u in enumerate(s.i_labels):
        for v in s.i_labels[i + 1 :]:
            if sigma(s, u, v) > 0:
                du, dv = s.degree(u), s.degree(v)
                if du <= dv:
                    arcs.add((u, v))
                if dv <= du:
                    arcs.add((v, u))
    return arcs


def triangle_type(s: SplitGraph, triple: Iterable[str]) -> TriangleType:
    labels = tuple(triple)
    if len(labels) != 3:
        raise ValueError("triangle_type needs exactly three vertices")
    for a, b in combinations(labels, 2):
        if sigma(s, a, b) == 0:
            raise ValueError(f"pair ({a}, {b}) has multiplicity 0: not a triangle")
    degs = sorted(s.degree(v) for v in labels)
    lo, mid, hi = degs
    if lo < mid < hi:
        return TriangleType.TYPE_0
    if lo == mid == hi:
        return TriangleType.TYPE_3
    if lo == mid:
        return TriangleType.TYPE_1_PLUS
    return TriangleType.TYPE_1_MINUS


def is_n_simple_type0_triangle(s: SplitGraph, n: int) -> bool:
    """Whole factor graph is a triangle with all multiplicities n, fully
    transitive under the degree flow."""
    if len(s.i_labels) != 3:
        return False
    for a, b in combinations(s.i_labels, 2):
        if sigma(s, a, b) != n:
            return False
    return triangle_type(s, s.i_labels) is TriangleType.TYPE_0


def n_simple_induced_cycles(s: SplitGraph, n: int) -> list[tuple[str, ...]]:
    """Induced cycles of the factor graph all of whose edges carry
    multiplicity n.

    Raises RuntimeError if any induced cycle is longer than 4: factor graphs
    of split graphs cannot contain one, so finding it means the construction
    is broken.
    """
    phi = factor_graph(s)
    out = []
    for cyc in phi.induced_cycles():
        if len(cyc) > 4:
            raise RuntimeError(f"induced cycle {cyc} of length {len(cyc)}; limit is 4")
        edges = list(zip(cyc, cyc[1:] + cyc[:1]))
        if all(phi.multiplicity(a, b) == n for a, b in edges):
            out.append(cyc)
    return out


# ---------------------------------------------------------------------------
# whole-graph census and stats


def _vertex_layout(s: SplitGraph):
    """Vertex indexing for the census: clique vertices first, then I."""
    nv = s.k_size + len(s.i_labels)
    adj = bytearray(nv * nv)
    ea = array("i")
    eb = array("i")
    for i in range(s.k_size):
        row = i * nv
        for j in range(s.k_size):
            if i != j:
                adj[row + j] = 1
        for j in range(i + 1, s.k_size):
            ea.append(i)
            eb.append(j)
    for idx, m in enumerate(s.masks):
        vi = s.k_size + idx
        for k in range(s.k_size):
            if m >> k & 1:
                adj[vi * nv + k] = 1
                adj[k * nv + vi] = 1
                ea.append(k)
                eb.append(vi)
    return nv, ea, eb, bytes(adj)


def two_switch_count(s: SplitGraph) -> int:
    """Total number of distinct 2-switches on s, by brute enumeration."""
    nv, ea, eb, adj = _vertex_layout(s)
    count, _ = kernels.two_switch_census(nv, ea, eb, adj)
    return count


@dataclass(frozen=True)
class GraphStats:
    omega: int
    alpha: int
    balanced: bool
    active_clique: frozenset[int]
    active_independent: frozenset[str]
    active: bool
    indecomposable_active: bool
    two_switches: int


def shape_stats(s: SplitGraph) -> tuple[int, int, bool]:
    """(clique number, independence number, balanced) from the bipartition.

    The clique grows by one when some I-vertex sees all of K; the independent
    set grows by one when some clique vertex has no I-neighbor.
    """
    full = (1 << s.k_size) - 1
    omega = s.k_size
    if s.i_labels and any(m == full for m in s.masks):
        omega += 1
    union = 0
    for m in s.masks:
        union |= m
    alpha = len(s.i_labels)
    if s.k_size and union != full:
        alpha += 1
    return omega, alpha, (omega == s.k_size and alpha == len(s.i_labels))


def graph_stats(s: SplitGraph) -> GraphStats:
    """Shape numbers plus exhaustive activity: a vertex is active when some
    2-switch moves one of its edges."""
    omega, alpha, balanced = shape_stats(s)
    nv, ea, eb, adj = _vertex_layout(s)
    count, part = kernels.two_switch_census(nv, ea, eb, adj)
    active_k = frozenset(k + 1 for k in range(s.k_size) if part[k])
    active_i = frozenset(
        lab for idx, lab in enumerate(s.i_labels) if part[s.k_size + idx]
    )
    all_active = len(active_k) == s.k_size and len(active_i) == len(s.i_labels)
    indecomposable = all_active and factor_graph(s).is_connected()
    return GraphStats(omega, alpha, balanced, active_k, active_i, all_active, indecomposable, count)


# ---------------------------------------------------------------------------
# corpus, serialization


def random_split_graph(rng: random.Random, max_k: int = 12, max_i: int = 4) -> SplitGraph:
    k = rng.randint(1, max_k)
    icount = rng.randint(1, max_i)
    labels = ("a", "b", "c", "d", "e", "f")[:icount]
    masks = [rng.getrandbits(k) for _ in labels]
    if rng.random() < 0.5 and icount:
        # force K to be covered by the neighborhoods
        union = 0
        for m in masks:
            union |= m
        for bit in range(k):
            if not union >> bit & 1:
                masks[rng.randrange(icount)] |= 1 << bit
    nbrs = {
        lab: [j + 1 for j in range(k) if masks[i] >> j & 1] for i, lab in enumerate(labels)
    }
    return split_graph(k, nbrs)


def random_corpus(count: int = 500, seed: int = CORPUS_SEED, max_k: int = 12, max_i: int = 4):
    rng = random.Random(seed)
    return [random_split_graph(rng, max_k, max_i) for _ in range(count)]


def split_graph_to_json(s: SplitGraph) -> dict:
    return {
        "kSize": s.k_size,
        "iVertices": list(s.i_labels),
        "neighborhoods": {lab: sorted(s.neighborhood(lab)) for lab in s.i_labels},
    }


def split_graph_from_json(data: Mapping) -> SplitGraph:
    order = data["iVertices"]
    nbrs = data["neighborhoods"]
    return split_graph(data["kSize"], {lab: nbrs[lab] for lab in order})


def split_graph_dot(s: SplitGraph, expand_clique: bool = False) -> str:
    """DOT for the split graph.  I-vertices are circles labelled with their
    degree; the clique is one box node unless expanded (clique edges are
    omitted in expanded form, they are implicit)."""
    lines = ["graph split {"]
    for lab in s.i_labels:
        lines.append(f'  "{lab}" [shape=circle, label="{lab} (d={s.degree(lab)})"];')
    if expand_clique:
        for k in range(1, s.k_size + 1):
            lines.append(f'  "k{k}" [shape=point];')
        for lab in s.i_labels:
            for k in sorted(s.neighborhood(lab)):
                lines.append(f'  "{lab}" -- "k{k}";')
        lines.append("  // clique edges among k1..k%d omitted" % s.k_size)
    else:
        lines.append(f'  "K" [shape=box, label="K ({s.k_size})"];')
        for lab in s.i_labels:
            lines.append(f'  "{lab}" -- "K" [label="{s.degree(lab)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def factor_graph_dot(s: SplitGraph) -> str:
    """DOT for the factor graph with the degree flow: edge labels carry the
    multiplicities, ``dir`` carries the arc direction(s)."""
    lines = ["digraph factor {"]
    for lab in s.i_labels:
        lines.append(f'  "{lab}" [shape=circle, label="{lab} (d={s.degree(lab)})"];')
    for i, u in enumerate(s.i_labels):
        for v in s.i_labels[i + 1 :]:
            m = sigma(s, u, v)
            if m == 0:
                continue
            du, dv = s.degree(u), s.degree(v)
            if du == dv:
                lines.append(f'  "{u}" -> "{v}" [label="{m}", dir=both];')
            elif du < dv:
                lines.append(f'  "{u}" -> "{v}" [label="{m}", dir=forward];')
            else:
                lines.append(f'  "{v}" -> "{u}" [label="{m}", dir=forward];')
    lines.append("}")
    return "\n".join(lines) + "\n"
