"""Certificate-producing colorings: trees, bridgeless cores, gluing,
vertex extensions, and the staged 2-color pipeline.

Every operation re-verifies its output with the exact checker before
returning it; a certificate is never trusted on the strength of the
construction alone. Searches are deterministic: fixed candidate orders,
and any sampled candidates come from a seeded generator.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import product

from .coloring import (
    EdgeColoring,
    _Machine,
    coloring_from_json,
    has_strong_property,
    is_proper_connected,
    make_coloring,
)
from .errors import (
    BadPartition,
    DegreeTooLow,
    Disconnected,
    HasBridge,
    IsolatedNewVertex,
    NotABridge,
    NotATree,
    OverlappingSets,
    RequiresStrongProperty,
    TooLarge,
    VerificationExhausted,
    VerificationFailed,
    VertexOutOfRange,
)
from .graph import (
    Graph,
    bipartition,
    bridge_block_tree,
    degree_stats,
    find_bridges,
    from_edge_list,
    induced_subgraph,
    is_connected,
    is_tree,
    max_bipartite_spanning_subgraph,
    to_graph6,
)
from .hamilton import hamilton_cycle, hamilton_path, hamilton_path_from

STRONG_SEARCH_MAX_N = 10
PIPELINE_MAX_N = 16
_PHASE_CAP = 4096
_SAMPLE_CAP = 20000

STRATEGIES = (
    "complete",
    "hamilton_path",
    "tree",
    "bipartite_bridgeless",
    "bridgeless_3",
    "glue",
    "extend",
    "hub_branches",
    "pipeline",
    "exhaustive",
)


@dataclass(frozen=True)
class PcCertificate:
    """A coloring whose claims (k colors, proper connected, optionally
    strong) have been machine-checked; strategy records how it was built."""

    graph: Graph
    coloring: EdgeColoring
    k: int
    strategy: str
    strong: bool
    verified: bool


def _colors_ok(g: Graph, k: int, colors, strong: bool) -> bool:
    return _Machine(g.n, k, g.edges, colors).first_bad_pair(strong) is None


def _certify(g: Graph, k: int, colors, strategy: str, strong: bool = False):
    """Wrap a coloring as a certificate, or raise if the checker refuses."""
    coloring = EdgeColoring(g, k, tuple(colors))
    if not is_proper_connected(coloring):
        raise VerificationFailed(
            f"{strategy} construction produced a non proper-connected coloring"
        )
    if strong and not has_strong_property(coloring):
        raise VerificationFailed(
            f"{strategy} construction failed the strong-property check"
        )
    return PcCertificate(g, coloring, k, strategy, strong, True)


def _assignment_to_colors(g: Graph, assignment: dict) -> tuple[int, ...]:
    # g.edges is sorted pairs, so normalized keys suffice
    return tuple(assignment[e] for e in g.edges)


# ---------------------------------------------------------------------------
# trees and Hamilton paths


def color_tree(t: Graph) -> PcCertificate:
    """Proper edge coloring of a tree with max-degree many colors.

    For trees this is optimal: the unique path between two vertices is
    proper exactly when the edge coloring is proper at every inner vertex.
    """
    if not is_tree(t):
        raise NotATree(f"graph with n={t.n}, m={t.m} is not a tree")
    _, _, delta = degree_stats(t)
    k = max(delta, 1)
    assignment: dict[tuple[int, int], int] = {}
    seen = {0}
    stack = [(0, 0)]  # (vertex, color of its parent edge; 0 at the root)
    while stack:
        v, parent_color = stack.pop()
        color = 1
        for w in t.neighbors(v):
            if w in seen:
                continue
            if color == parent_color:
                color += 1
            assignment[min(v, w), max(v, w)] = color
            seen.add(w)
            stack.append((w, color))
            color += 1
    colors = _assignment_to_colors(t, assignment) if t.m else ()
    return _certify(t, k, colors, "tree")


def color_hamilton_path(g: Graph):
    """k=2 certificate from an alternately colored spanning path, or None."""
    path = hamilton_path(g)
    if path is None:
        return None
    assignment = {e: 1 for e in g.edges}
    for i, (a, b) in enumerate(zip(path, path[1:])):
        assignment[min(a, b), max(a, b)] = 1 + i % 2
    return _certify(g, 2, _assignment_to_colors(g, assignment), "hamilton_path")


# ---------------------------------------------------------------------------
# strong colorings of bridgeless graphs


def _shortest_cycle(g: Graph):
    """Vertex list of a shortest cycle, or None in a forest."""
    best = None
    for u, v in g.edges:
        # BFS u -> v avoiding the edge uv itself
        prev = {u: -1}
        queue = [u]
        while queue:
            nxt = []
            for x in queue:
                for y in g.neighbors(x):
                    if (x, y) in ((u, v), (v, u)) or y in prev:
                        continue
                    prev[y] = x
                    nxt.append(y)
            queue = nxt
            if v in prev:
                break
        if v not in prev:
            continue
        path = [v]
        while path[-1] != u:
            path.append(prev[path[-1]])
        if best is None or len(path) < len(best):
            best = path
    return best


def _ear_decomposition(g: Graph):
    """Cycle-plus-ears cover of a connected bridgeless graph.

    Returns a list of vertex sequences: the first is a closed cycle, each
    later one a path whose endpoints already lie in the covered part and
    whose interior is new. Chords appear as two-vertex ears.
    """
    cycle = _shortest_cycle(g)
    ears = [cycle]
    covered_v = set(cycle)
    covered_e = {
        (min(a, b), max(a, b))
        for a, b in zip(cycle, cycle[1:] + [cycle[0]])
    }
    while True:
        remaining = [e for e in g.edges if e not in covered_e]
        if not remaining:
            return ears
        ear = None
        for x, y in remaining:
            if y in covered_v and x not in covered_v:
                x, y = y, x
            if x not in covered_v:
                continue
            if y in covered_v:
                ear = [x, y]
                break
            # walk from y through fresh vertices until re-hitting the cover
            prev = {y: x}
            queue = [y]
            hit = None
            while queue and hit is None:
                nxt = []
                for a in queue:
                    for b in g.neighbors(a):
                        if b in prev or (a == y and b == x):
                            continue
                        prev[b] = a
                        if b in covered_v:
                            hit = b
                            break
                        nxt.append(b)
                    if hit is not None:
                        break
                queue = nxt
            if hit is None:
                raise HasBridge(f"edge ({x}, {y}) is a bridge; no ear returns")
            # hit == x means a closed ear: walk back through the fresh
            # interior, not straight into the hit vertex
            tail = [hit]
            cur = prev[hit]
            while cur != x:
                tail.append(cur)
                cur = prev[cur]
            tail.append(x)
            ear = tail[::-1]
            break
        if ear is None:
            raise Disconnected("uncovered edges unreachable from the cover")
        ears.append(ear)
        covered_v.update(ear)
        for a, b in zip(ear, ear[1:]):
            covered_e.add((min(a, b), max(a, b)))


def _ear_edge_runs(ears):
    runs = []
    for idx, ear in enumerate(ears):
        seq = ear + [ear[0]] if idx == 0 else ear
        runs.append([(min(a, b), max(a, b)) for a, b in zip(seq, seq[1:])])
    return runs


_SWEEP_VOLUME = 1 << 22


def _strong_candidates(g: Graph, k: int, thorough: bool):
    """Deterministic stream of raw color tuples worth testing at palette k.

    Ear-phase patterns come first, then Hamilton-cycle patterns; with
    thorough=True, seeded samples and (volume permitting) a complete
    lexicographic sweep follow.
    """
    edge_index = {e: i for i, e in enumerate(g.edges)}
    runs = _ear_edge_runs(_ear_decomposition(g))

    def from_phases(phases):
        colors = [1] * g.m
        for run, phase in zip(runs, phases):
            for i, e in enumerate(run):
                colors[edge_index[e]] = 1 + (i + phase) % 2
        return tuple(colors)

    n_runs = len(runs)
    if (1 << n_runs) <= _PHASE_CAP:
        for phases in product((0, 1), repeat=n_runs):
            yield from_phases(phases)
    else:
        rng = random.Random(0x0EA5 ^ (g.n << 16) ^ g.m)
        for _ in range(_PHASE_CAP):
            yield from_phases([rng.randrange(2) for _ in range(n_runs)])

    cyc = hamilton_cycle(g)
    if cyc is not None:
        for off_color in range(1, k + 1):
            colors = [off_color] * g.m
            for i, (a, b) in enumerate(zip(cyc, cyc[1:] + [cyc[0]])):
                c = 1 + i % 2
                if i == g.n - 1 and g.n % 2 and k >= 3:
                    c = 3
                colors[edge_index[min(a, b), max(a, b)]] = c
            yield tuple(colors)

    if not thorough:
        return
    rng = random.Random(0x5EED ^ (g.n << 16) ^ g.m ^ k)
    for _ in range(_SAMPLE_CAP):
        yield tuple(rng.randrange(1, k + 1) for _ in range(g.m))
    if k ** max(g.m - 1, 0) <= _SWEEP_VOLUME:
        # complete sweep, first edge pinned by palette symmetry
        for rest in product(range(1, k + 1), repeat=g.m - 1):
            yield (1,) + rest


def _strong_bridgeless(g: Graph, strategy: str):
    """Search for a strong coloring; k=2 on bipartite input, else up to 3.

    Returns None only when no candidate worked and a complete sweep was
    infeasible; an actually exhausted sweep raises, because the bridgeless
    guarantees make that a bug, not a result.
    """
    if g.n == 1:
        return _certify(g, 2, (), strategy, strong=True)
    palettes = [2] if bipartition(g) is not None else [2, 3]
    for k in palettes:
        thorough = k == palettes[-1]
        for colors in _strong_candidates(g, k, thorough):
            if _colors_ok(g, k, colors, strong=True):
                return _certify(g, k, colors, strategy, strong=True)
        if thorough and k ** max(g.m - 1, 0) <= _SWEEP_VOLUME:
            raise VerificationExhausted(
                f"no strong {k}-coloring exists for n={g.n}, m={g.m}; "
                "this contradicts the guarantee for bridgeless graphs"
            )
    return None


def strong_coloring_bridgeless(g: Graph) -> PcCertificate:
    """Verified strong certificate for a connected bridgeless graph:
    2 colors when bipartite, at most 3 otherwise.

    Ear-decomposition phase candidates are tried first, then seeded
    sampling, then a lexicographic sweep; each candidate is checked
    exactly, so the heuristics never affect soundness.
    """
    if g.n > STRONG_SEARCH_MAX_N:
        raise TooLarge(f"strong search limited to n <= {STRONG_SEARCH_MAX_N}")
    if not is_connected(g):
        raise Disconnected("strong coloring needs a connected graph")
    bridges = find_bridges(g)
    if bridges:
        raise HasBridge(f"graph has bridge {bridges[0]}")
    if g.n < 3:
        raise ValueError("bridgeless coloring needs n >= 3")
    bip = bipartition(g)
    tag = "bipartite_bridgeless" if bip is not None else "bridgeless_3"
    got = _strong_bridgeless(g, tag)
    if got is None:
        raise VerificationExhausted(
            f"heuristics found no strong coloring for n={g.n}, m={g.m} "
            "and the space is too large to sweep"
        )
    return got


# ---------------------------------------------------------------------------
# gluing across a bridge


def glue_across_bridge(
    cert_a: PcCertificate,
    cert_b: PcCertificate,
    bridge: tuple[int, int],
    embedding,
) -> PcCertificate:
    """Combine certificates of two bridge halves into one for the whole.

    Each half must contain the bridge as a pendant edge standing in for
    the contracted other side. embedding is a pair of sequences mapping
    each half's vertices to composite labels; the two images may overlap
    only in the bridge's endpoints. The second palette is renamed so both
    halves agree on the bridge color, and the union is re-verified.
    """
    map_a, map_b = embedding
    if not (cert_a.verified and cert_b.verified):
        raise VerificationFailed("glue requires verified input certificates")
    ga, gb = cert_a.graph, cert_b.graph
    if len(map_a) != ga.n or len(map_b) != gb.n:
        raise VertexOutOfRange("embedding size does not match a half")
    image_a, image_b = set(map_a), set(map_b)
    if len(image_a) != ga.n or len(image_b) != gb.n:
        raise VertexOutOfRange("embedding maps must be injective")
    u, v = bridge
    if image_a & image_b != {u, v}:
        raise OverlappingSets(
            f"halves may overlap only in the bridge ends, got {sorted(image_a & image_b)}"
        )
    labels = image_a | image_b
    n = len(labels)
    if labels != set(range(n)):
        raise VertexOutOfRange("composite labels must be 0..n-1")

    key = (min(u, v), max(u, v))
    assignment: dict[tuple[int, int], int] = {}
    for (x, y), c in zip(ga.edges, cert_a.coloring.colors):
        p, q = map_a[x], map_a[y]
        assignment[min(p, q), max(p, q)] = c
    bridge_color_a = assignment.get(key)
    if bridge_color_a is None:
        raise NotABridge("first half does not contain the bridge edge")
    b_pairs = {}
    for (x, y), c in zip(gb.edges, cert_b.coloring.colors):
        p, q = map_b[x], map_b[y]
        b_pairs[min(p, q), max(p, q)] = c
    if key not in b_pairs:
        raise NotABridge("second half does not contain the bridge edge")
    swap_a, swap_b = bridge_color_a, b_pairs[key]

    def rename(c):
        if c == swap_b:
            return swap_a
        if c == swap_a:
            return swap_b
        return c

    for e, c in b_pairs.items():
        assignment[e] = rename(c)
    composite = from_edge_list(n, assignment)
    if key not in find_bridges(composite):
        raise NotABridge(f"{key} is not a bridge of the composite")
    k = max(cert_a.k, cert_b.k)
    return _certify(composite, k, _assignment_to_colors(composite, assignment), "glue")


# ---------------------------------------------------------------------------
# vertex extensions


def _extension_edges(base: Graph, new_edges, new_ids):
    """Validate and normalize attachment edges for extension operations."""
    n = base.n
    grouped: dict[int, list[tuple[int, int]]] = {w: [] for w in new_ids}
    for u, v in new_edges:
        if v in grouped and u not in grouped:
            u, v = v, u
        if u not in grouped:
            raise VertexOutOfRange(f"edge ({u},{v}) does not touch a new vertex")
        if not (0 <= v < n) and v not in grouped:
            raise VertexOutOfRange(f"edge endpoint {v} unknown")
        grouped[u].append((min(u, v), max(u, v)))
    return grouped


def extend_vertex(cert: PcCertificate, new_edges) -> PcCertificate:
    """Absorb one new vertex with >= 2 attachment edges into a 2-color
    certificate, by trying every color assignment on the new edges."""
    if not cert.verified or cert.k != 2:
        raise ValueError("extension needs a verified 2-color base certificate")
    base = cert.graph
    w = base.n
    grouped = _extension_edges(base, new_edges, (w,))
    attach = sorted(set(grouped[w]))
    if len(attach) < 2:
        raise DegreeTooLow(f"new vertex needs degree >= 2, got {len(attach)}")
    bigger = from_edge_list(base.n + 1, list(base.edges) + attach)
    base_assignment = {
        e: c for e, c in zip(base.edges, cert.coloring.colors)
    }
    for combo in product((1, 2), repeat=len(attach)):
        assignment = dict(base_assignment)
        for e, c in zip(attach, combo):
            assignment[e] = c
        colors = _assignment_to_colors(bigger, assignment)
        if _colors_ok(bigger, 2, colors, strong=False):
            return _certify(bigger, 2, colors, "extend")
    raise VerificationExhausted(
        "no 2-color assignment on the new edges works; "
        "for a degree >= 2 attachment this should be impossible"
    )


def extend_two_vertices(cert: PcCertificate, new_edges) -> PcCertificate:
    """Absorb two new vertices (each with >= 1 edge, at least one edge into
    the base) into a strong certificate, keeping the palette size."""
    if not cert.verified:
        raise ValueError("extension needs a verified base certificate")
    if not cert.strong:
        raise RequiresStrongProperty("two-vertex extension needs a strong base")
    base = cert.graph
    w1, w2 = base.n, base.n + 1
    grouped = _extension_edges(base, new_edges, (w1, w2))
    pair_edge = (w1, w2) in grouped[w1] or (w1, w2) in grouped[w2]
    all_new = sorted(set(grouped[w1]) | set(grouped[w2]))
    deg1 = sum(1 for e in all_new if w1 in e)
    deg2 = sum(1 for e in all_new if w2 in e)
    if deg1 == 0 or deg2 == 0:
        raise IsolatedNewVertex("both new vertices need at least one edge")
    if all(set(e) == {w1, w2} for e in all_new):
        raise Disconnected("the new pair must have an edge into the base")
    bigger = from_edge_list(base.n + 2, list(base.edges) + all_new)
    base_assignment = {e: c for e, c in zip(base.edges, cert.coloring.colors)}
    k = cert.k
    for combo in product(range(1, k + 1), repeat=len(all_new)):
        assignment = dict(base_assignment)
        for e, c in zip(all_new, combo):
            assignment[e] = c
        colors = _assignment_to_colors(bigger, assignment)
        if _colors_ok(bigger, k, colors, strong=False):
            return _certify(bigger, k, colors, "extend")
    raise VerificationExhausted(
        "no assignment on the new edges connects the extended graph"
    )


# ---------------------------------------------------------------------------
# hub with three branches: one cycle branch plus two path branches


def color_hub_branches(g: Graph, hub: int, parts):
    """2-color certificate from a spanning cycle-and-two-paths skeleton.

    parts must partition the vertices other than hub into three nonempty
    sets: the first together with hub must carry a spanning cycle, the
    other two a spanning path starting at hub. Pattern candidates alternate
    along each piece; an exhaustive 2-coloring of the skeleton edges is the
    fallback. None when the skeleton does not exist or nothing verifies.
    """
    if g.n > PIPELINE_MAX_N:
        raise TooLarge(f"limited to n <= {PIPELINE_MAX_N}")
    if not 0 <= hub < g.n:
        raise VertexOutOfRange(f"hub {hub} outside 0..{g.n - 1}")
    sets = [set(p) for p in parts]
    if len(sets) != 3 or any(not s for s in sets):
        raise BadPartition("need three nonempty parts")
    if sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]:
        raise BadPartition("parts overlap")
    union = sets[0] | sets[1] | sets[2]
    if hub in union or union != set(range(g.n)) - {hub}:
        raise BadPartition("parts must cover exactly the non-hub vertices")

    pieces = []  # edge runs in g labels, each starting at the hub
    sub, back = induced_subgraph(g, sets[0] | {hub})
    cyc = hamilton_cycle(sub)
    if cyc is None:
        return None
    at = cyc.index(back.index(hub))
    cyc = cyc[at:] + cyc[:at]
    run = [
        (min(back[a], back[b]), max(back[a], back[b]))
        for a, b in zip(cyc, cyc[1:] + [cyc[0]])
    ]
    pieces.append(run)
    for part in sets[1:]:
        sub, back = induced_subgraph(g, part | {hub})
        path = hamilton_path_from(sub, back.index(hub))
        if path is None:
            return None
        pieces.append(
            [
                (min(back[a], back[b]), max(back[a], back[b]))
                for a, b in zip(path, path[1:])
            ]
        )

    skeleton = [e for run in pieces for e in run]
    base = {e: 1 for e in g.edges}
    for phases in product((0, 1), repeat=3):
        assignment = dict(base)
        for run, phase in zip(pieces, phases):
            for i, e in enumerate(run):
                assignment[e] = 1 + (i + phase) % 2
        colors = _assignment_to_colors(g, assignment)
        if _colors_ok(g, 2, colors, strong=False):
            return _certify(g, 2, colors, "hub_branches")
    # exhaustive over the skeleton, first skeleton edge pinned by symmetry
    for combo in product((1, 2), repeat=len(skeleton) - 1):
        assignment = dict(base)
        assignment[skeleton[0]] = 1
        for e, c in zip(skeleton[1:], combo):
            assignment[e] = c
        colors = _assignment_to_colors(g, assignment)
        if _colors_ok(g, 2, colors, strong=False):
            return _certify(g, 2, colors, "hub_branches")
    return None


# ---------------------------------------------------------------------------
# the staged 2-color pipeline


def _relabel_to(g: Graph, cert: PcCertificate, mapping, strategy: str):
    """Transfer a certificate along vertex mapping into g; edges of g not
    covered by the certificate get color 1. Verified again on g."""
    assignment = {e: 1 for e in g.edges}
    for (x, y), c in zip(cert.graph.edges, cert.coloring.colors):
        p, q = mapping[x], mapping[y]
        assignment[min(p, q), max(p, q)] = c
    colors = _assignment_to_colors(g, assignment)
    if not _colors_ok(g, 2, colors, strong=False):
        return None
    strong = _colors_ok(g, 2, colors, strong=True)
    return _certify(g, 2, colors, strategy, strong=strong)


def _piece_certificate(h: Graph, comp, pendants):
    """Certificate for one bridge-block piece plus its pendant bridge ends.

    comp is the 2-edge-connected vertex set inside h; pendants maps each
    outside bridge endpoint to its attachment inside comp. Labels of the
    result are compact; returns (cert, mapping to h labels) or None.
    """
    members = sorted(comp)
    outside = sorted(pendants)
    mapping = members + outside
    index = {x: i for i, x in enumerate(mapping)}
    inner = [
        (index[a], index[b])
        for a, b in h.edges
        if a in comp and b in comp
    ]
    pend = [
        (index[pendants[p]], index[p]) for p in outside
    ]
    piece = from_edge_list(len(mapping), inner + pend)
    if len(members) == 1:
        inner_colors: dict[tuple[int, int], int] = {}
    else:
        sub = from_edge_list(len(members), inner)
        core = _strong_bridgeless(sub, "bipartite_bridgeless")
        if core is None or core.k != 2:
            return None
        inner_colors = {
            e: c for e, c in zip(sub.edges, core.coloring.colors)
        }
    for combo in product((1, 2), repeat=len(pend)):
        assignment = dict(inner_colors)
        for e, c in zip(pend, combo):
            assignment[min(e), max(e)] = c
        colors = _assignment_to_colors(piece, assignment)
        if _colors_ok(piece, 2, colors, strong=False):
            return _certify(piece, 2, colors, "glue"), mapping
    return None


def _chain_glue(g: Graph, h: Graph, tree) -> PcCertificate | None:
    """Stage 3: bridge-block chain of the bipartite subgraph, glued."""
    comps = tree.components
    order = [tree.leaves()[0]]
    while len(order) < len(comps):
        nxt = [
            c for c in tree.tree_adj[order[-1]]
            if len(order) < 2 or c != order[-2]
        ]
        if not nxt:
            break
        order.append(nxt[0])
    if len(order) != len(comps):
        return None
    bridge_of = {}
    for x, y in tree.bridges:
        cx, cy = tree.component_of(x), tree.component_of(y)
        bridge_of[min(cx, cy), max(cx, cy)] = (x, y)

    def pendants_for(pos):
        result = {}
        for nb_pos in (pos - 1, pos + 1):
            if 0 <= nb_pos < len(order):
                ci, cj = order[pos], order[nb_pos]
                x, y = bridge_of[min(ci, cj), max(ci, cj)]
                if x in comps[order[pos]]:
                    result[y] = x
                else:
                    result[x] = y
        return result

    built = _piece_certificate(h, comps[order[0]], pendants_for(0))
    if built is None:
        return None
    acc_cert, acc_map = built
    for pos in range(1, len(order)):
        built = _piece_certificate(h, comps[order[pos]], pendants_for(pos))
        if built is None:
            return None
        piece_cert, piece_map = built
        real = sorted(set(acc_map) | set(piece_map))
        compact = {x: i for i, x in enumerate(real)}
        ci, cj = order[pos - 1], order[pos]
        bx, by = bridge_of[min(ci, cj), max(ci, cj)]
        bridge = (compact[bx], compact[by])
        acc_cert = glue_across_bridge(
            acc_cert,
            piece_cert,
            bridge,
            ([compact[x] for x in acc_map], [compact[x] for x in piece_map]),
        )
        acc_map = real
    return _relabel_to(g, acc_cert, acc_map, "glue")


def _seed_and_extend(g: Graph, h: Graph) -> PcCertificate | None:
    """Stage 5: strong bipartite seed, then absorb the rest vertex by
    vertex (or in pairs while the running certificate stays strong)."""
    try:
        tree = bridge_block_tree(h)
    except Disconnected:
        return None
    seeds = sorted(
        (c for c in tree.components if len(c) >= 3),
        key=lambda c: (-len(c), min(c)),
    )
    if not seeds:
        return None
    seed = seeds[0]
    sub_h, mapping = induced_subgraph(h, seed)
    core = _strong_bridgeless(sub_h, "bipartite_bridgeless")
    if core is None:
        return None
    # lift the seed onto g's induced subgraph: extra chords only add paths
    sub_g, mapping = induced_subgraph(g, seed)
    lifted = {e: 1 for e in sub_g.edges}
    for e, c in zip(sub_h.edges, core.coloring.colors):
        lifted[e] = c
    colors = _assignment_to_colors(sub_g, lifted)
    if not _colors_ok(sub_g, 2, colors, strong=True):
        return None
    cert = _certify(sub_g, 2, colors, "extend", strong=True)

    inside = list(mapping)
    index = {x: i for i, x in enumerate(inside)}
    remaining = sorted(set(range(g.n)) - set(inside))

    def attach_edges(x, extra=()):
        known = dict(index)
        for i, y in enumerate(extra):
            known[y] = len(inside) + i
        return [
            (min(known[y], known[x]), max(known[y], known[x]))
            for y in g.neighbors(x)
            if y in known
        ]

    while remaining:
        single = None
        for x in remaining:
            if sum(1 for y in g.neighbors(x) if y in index) >= 2:
                single = x
                break
        if single is not None:
            cert = extend_vertex(cert, attach_edges(single, extra=(single,)))
            inside.append(single)
            index[single] = len(inside) - 1
            remaining.remove(single)
        elif cert.strong and len(remaining) >= 2:
            pair = None
            for i, x in enumerate(remaining):
                for y in remaining[i + 1:]:
                    ex = attach_edges(x, extra=(x, y))
                    ey = attach_edges(y, extra=(x, y))
                    joint = sorted(set(ex) | set(ey))
                    degx = sum(1 for e in joint if len(inside) in e)
                    degy = sum(1 for e in joint if len(inside) + 1 in e)
                    to_base = any(
                        min(e) < len(inside) for e in joint
                    )
                    if degx >= 1 and degy >= 1 and to_base:
                        pair = (x, y, joint)
                        break
                if pair:
                    break
            if pair is None:
                return None
            x, y, joint = pair
            cert = extend_two_vertices(cert, joint)
            inside.extend([x, y])
            index[x] = len(inside) - 2
            index[y] = len(inside) - 1
            remaining.remove(x)
            remaining.remove(y)
        else:
            return None
        # keep the strong flag honest so pair absorption stays available
        if not cert.strong and _colors_ok(
            cert.graph, 2, cert.coloring.colors, strong=True
        ):
            cert = _certify(
                cert.graph, 2, cert.coloring.colors, "extend", strong=True
            )
    return _relabel_to(g, cert, inside, "extend")


def pc2_pipeline(g: Graph):
    """Try the cheap 2-color strategies in a fixed order; None if all fail.

    Order: spanning path; bridgeless bipartite spanning subgraph; chain of
    bipartite blocks glued across bridges; degree-3 hub skeleton; strong
    seed plus vertex absorption. A None return means the caller should
    fall back to exact search, not that pc > 2.
    """
    if g.n > PIPELINE_MAX_N:
        raise TooLarge(f"pipeline limited to n <= {PIPELINE_MAX_N}")
    if not is_connected(g):
        raise Disconnected("only connected graphs have a connection number")
    if g.n < 2:
        return None

    cert = color_hamilton_path(g)
    if cert is not None:
        return cert

    h, _ = max_bipartite_spanning_subgraph(g)
    if not is_connected(h):
        return None
    tree = bridge_block_tree(h)
    if len(tree.components) == 1 and h.n >= 3:
        core = _strong_bridgeless(h, "bipartite_bridgeless")
        if core is not None:
            got = _relabel_to(g, core, list(range(g.n)), "bipartite_bridgeless")
            if got is not None:
                return got
    elif tree.max_degree() <= 2:
        got = _chain_glue(g, h, tree)
        if got is not None:
            return got
    else:
        hubs = [
            i for i, nb in enumerate(tree.tree_adj) if len(nb) == 3
        ]
        if (
            tree.max_degree() == 3
            and len(hubs) == 1
            and len(tree.components[hubs[0]]) == 1
        ):
            hub = min(tree.components[hubs[0]])
            branches = []
            for first in tree.tree_adj[hubs[0]]:
                verts: set[int] = set()
                stack = [(first, hubs[0])]
                while stack:
                    node, parent = stack.pop()
                    verts |= set(tree.components[node])
                    stack.extend(
                        (nxt, node)
                        for nxt in tree.tree_adj[node]
                        if nxt != parent
                    )
                branches.append(verts)
            for cycle_part in range(3):
                rest = [branches[i] for i in range(3) if i != cycle_part]
                try:
                    got = color_hub_branches(
                        g, hub, (branches[cycle_part], rest[0], rest[1])
                    )
                except BadPartition:
                    got = None
                if got is not None:
                    return got
    return _seed_and_extend(g, h)


# ---------------------------------------------------------------------------
# serialization


def certificate_to_json(cert: PcCertificate) -> str:
    payload = {
        "n": cert.graph.n,
        "k": cert.k,
        "edges": [[u, v] for u, v in cert.graph.edges],
        "colors": list(cert.coloring.colors),
        "meta": {
            "strategy": cert.strategy,
            "strong": cert.strong,
            "verified": cert.verified,
        },
    }
    return json.dumps(payload)


def certificate_from_json(text: str) -> PcCertificate:
    payload = json.loads(text)
    coloring = coloring_from_json(
        json.dumps({key: payload[key] for key in ("n", "k", "edges", "colors")})
    )
    meta = payload.get("meta", {})
    return PcCertificate(
        graph=coloring.graph,
        coloring=coloring,
        k=payload["k"],
        strategy=meta.get("strategy", "exhaustive"),
        strong=bool(meta.get("strong", False)),
        verified=bool(meta.get("verified", False)),
    )
