"""Immutable simple graphs with desk-scale structural algorithms.

Vertices are 0..n-1. Adjacency is kept as one bitmask row per vertex, so
edge tests are O(1) and graphs are cheap to copy and hash. All functions
here are pure; Graph values are safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    Disconnected,
    LoopEdge,
    MalformedGraph6,
    OverlappingSets,
    TooLarge,
    VertexOutOfRange,
)

CANONICAL_MAX_N = 12
EXACT_BIPARTITE_MAX_N = 20


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count, sorted edge list, bit rows."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return (self.adj[v]).bit_count()

    def neighbors(self, v: int):
        row = self.adj[v]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def vertices(self) -> range:
        return range(self.n)


def from_edge_list(n: int, pairs) -> Graph:
    """Build a normalized Graph: dedup, sort, symmetrize; loops rejected."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    rows = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    edges = tuple(
        (u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1
    )
    return Graph(n, edges, tuple(rows))


def from_adj_rows(n: int, rows) -> Graph:
    """Internal-friendly constructor from trusted bitmask rows."""
    edges = tuple(
        (u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1
    )
    return Graph(n, edges, tuple(rows))


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertices.

    Returns the subgraph (relabeled 0..k-1 in ascending order of the
    original labels) together with the tuple mapping new label -> old.
    """
    keep = sorted(set(vertices))
    index = {old: new for new, old in enumerate(keep)}
    pairs = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return from_edge_list(len(keep), pairs), tuple(keep)


# ---------------------------------------------------------------------------
# graph6 and edge-list text formats


def to_graph6(g: Graph) -> str:
    """Encode in short-form graph6 (n <= 62), no header, no newline."""
    n = g.n
    if n > 62:
        raise TooLarge(f"short-form graph6 requires n <= 62, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for pos in range(0, len(bits), 6):
        group = 0
        for b in bits[pos : pos + 6]:
            group = group << 1 | b
        chars.append(chr(group + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line; strict about length and padding."""
    line = text.strip()
    if not line:
        raise MalformedGraph6("empty graph6 line")
    first = ord(line[0])
    if first == 126:
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    if not 63 <= first <= 125:
        raise MalformedGraph6(f"bad size byte {line[0]!r}")
    n = first - 63
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = line[1:]
    if len(body) != nchars:
        raise MalformedGraph6(
            f"expected {nchars} data characters for n={n}, got {len(body)}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise MalformedGraph6(f"bad data byte {ch!r}")
        bits.extend(val >> shift & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return from_adj_rows(n, rows)


def format_edge_list_text(g: Graph) -> str:
    """Plain text format: one "n <count>" header then "u v" per edge."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n "):
        raise VertexOutOfRange('edge-list text must start with "n <count>"')
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise VertexOutOfRange(f"bad vertex count line {lines[0]!r}") from exc
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise VertexOutOfRange(f"bad edge line {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, pairs)


# ---------------------------------------------------------------------------
# basic structure


def degree_stats(g: Graph) -> tuple[tuple[int, ...], int, int]:
    """Per-vertex degrees plus (min, max); (degrees, 0, 0) on empty graphs."""
    degrees = tuple(row.bit_count() for row in g.adj)
    if not degrees:
        return degrees, 0, 0
    return degrees, min(degrees), max(degrees)


def _reach_mask(adj, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start inside the allowed mask."""
    seen = 1 << start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        row = frontier
        while row:
            low = row & -row
            nxt |= adj[low.bit_length() - 1]
            row ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _reach_mask(g.adj, 0, full) == full


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def connectivity(g: Graph) -> int:
    """Vertex connectivity by brute-force minimum cut; kappa(K_n) = n-1.

    Exponential in n; fine at desk scale only.
    """
    n = g.n
    if n == 0:
        return 0
    if is_complete(g):
        return n - 1
    if not is_connected(g):
        return 0
    full = (1 << n) - 1
    for size in range(1, n - 1):
        for cut in combinations(range(n), size):
            allowed = full
            for v in cut:
                allowed &= ~(1 << v)
            start = (allowed & -allowed).bit_length() - 1
            if _reach_mask(g.adj, start, allowed) != allowed:
                return size
    return n - 1


def edges_between(g: Graph, xs, ys) -> list[tuple[int, int]]:
    """Edges with one end in xs and the other in ys (disjoint sets)."""
    xset, yset = set(xs), set(ys)
    if xset & yset:
        raise OverlappingSets(f"sets share vertices {sorted(xset & yset)}")
    for v in xset | yset:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return [
        (u, v)
        for u, v in g.edges
        if (u in xset and v in yset) or (u in yset and v in xset)
    ]


def boundary_size(g: Graph, xs) -> int:
    """Number of edges leaving the vertex set xs."""
    rest = [v for v in range(g.n) if v not in set(xs)]
    return len(edges_between(g, xs, rest))


# ---------------------------------------------------------------------------
# bridges and the bridge-block tree


def find_bridges(g: Graph) -> list[tuple[int, int]]:
    """All cut-edges, via one DFS with low-links. Sorted pairs, sorted list."""
    n = g.n
    order = [-1] * n
    low = [0] * n
    bridges = []
    counter = 0

    def dfs(root):
        nonlocal counter
        stack = [(root, -1, iter_neighbors(root))]
        order[root] = low[root] = counter
        counter += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter_neighbors(w)))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], order[w])
                else:
                    parent = -2  # ignore exactly one parent edge
                    stack[-1] = (v, -2, it)
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > order[p]:
                        bridges.append((min(p, v), max(p, v)))

    def iter_neighbors(v):
        # each DFS frame owns a resumable iterator, never a restarting list
        return iter(list(Graph.neighbors(g, v)))

    for v in range(n):
        if order[v] == -1:
            dfs(v)
    return sorted(bridges)


@dataclass(frozen=True)
class BridgeBlockTree:
    """2-edge-connected components, the bridge set, and the contracted tree."""

    components: tuple[frozenset[int], ...]
    bridges: tuple[tuple[int, int], ...]
    tree_adj: tuple[tuple[int, ...], ...]

    def component_of(self, v: int) -> int:
        for idx, comp in enumerate(self.components):
            if v in comp:
                return idx
        raise VertexOutOfRange(f"vertex {v} not in any component")

    def leaves(self) -> list[int]:
        return [i for i, nbr in enumerate(self.tree_adj) if len(nbr) == 1]

    def max_degree(self) -> int:
        return max((len(nbr) for nbr in self.tree_adj), default=0)


def bridge_block_tree(g: Graph) -> BridgeBlockTree:
    """Contract the 2-edge-connected components; tree edges are the bridges."""
    if not is_connected(g):
        raise Disconnected("bridge-block tree requires a connected graph")
    bridges = find_bridges(g)
    bridge_set = set(bridges)
    parent = list(range(g.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in g.edges:
        if (u, v) not in bridge_set:
            parent[find(u)] = find(v)
    roots = sorted({find(v) for v in range(g.n)})
    comp_index = {root: idx for idx, root in enumerate(roots)}
    members: list[set[int]] = [set() for _ in roots]
    for v in range(g.n):
        members[comp_index[find(v)]].add(v)
    adjacency: list[set[int]] = [set() for _ in roots]
    for u, v in bridges:
        cu, cv = comp_index[find(u)], comp_index[find(v)]
        adjacency[cu].add(cv)
        adjacency[cv].add(cu)
    return BridgeBlockTree(
        components=tuple(frozenset(c) for c in members),
        bridges=tuple(bridges),
        tree_adj=tuple(tuple(sorted(a)) for a in adjacency),
    )


# ---------------------------------------------------------------------------
# bipartite structure


@dataclass(frozen=True)
class Bipartition:
    sideU: frozenset[int]
    sideV: frozenset[int]

    def side_of(self, v: int) -> int:
        return 0 if v in self.sideU else 1


def bipartition(g: Graph):
    """The 2-coloring of a bipartite graph, or None if an odd cycle exists.

    Each component's lowest vertex lands in sideU, so the result is
    deterministic even on disconnected input.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side_u = frozenset(v for v in range(g.n) if color[v] == 0)
    side_v = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(side_u, side_v)


def max_bipartite_spanning_subgraph(
    g: Graph, exact: bool = False
) -> tuple[Graph, Bipartition]:
    """Spanning bipartite subgraph keeping at least half of every degree.

    Default: greedy side assignment followed by single-vertex local search
    (scan ascending, move the first improving vertex, repeat to fixpoint),
    which already guarantees 2*d_H(v) >= d_G(v) for every vertex. With
    exact=True (n <= 20) the globally maximum cut is found by exhaustion,
    smallest side-assignment mask winning ties.
    """
    n = g.n
    if exact:
        if n > EXACT_BIPARTITE_MAX_N:
            raise TooLarge(f"exact mode limited to n <= {EXACT_BIPARTITE_MAX_N}")
        best_mask, best_cut = 0, -1
        for mask in range(1 << max(n - 1, 0)):
            cut = 0
            for u, v in g.edges:
                cut += (mask >> u & 1) != (mask >> v & 1)
            if cut > best_cut:
                best_mask, best_cut = mask, cut
        side = [best_mask >> v & 1 for v in range(n)]
    else:
        side = [0] * n
        for v in range(n):
            to_u = to_v = 0
            for w in g.neighbors(v):
                if w < v:
                    if side[w] == 0:
                        to_u += 1
                    else:
                        to_v += 1
            side[v] = 0 if to_v >= to_u else 1
        improved = True
        while improved:
            improved = False
            for v in range(n):
                same = cross = 0
                for w in g.neighbors(v):
                    if side[w] == side[v]:
                        same += 1
                    else:
                        cross += 1
                if same > cross:
                    side[v] = 1 - side[v]
                    improved = True
                    break
    crossing = [(u, v) for u, v in g.edges if side[u] != side[v]]
    part = Bipartition(
        frozenset(v for v in range(n) if side[v] == 0),
        frozenset(v for v in range(n) if side[v] == 1),
    )
    return from_edge_list(n, crossing), part


# ---------------------------------------------------------------------------
# canonical labeling


def _canonical_perm(n: int, rows) -> list[int]:
    """Permutation minimizing the column-major upper-triangle bit vector.

    Branch and bound: vertices are placed one position at a time; placing a
    vertex at position j contributes the j adjacency bits to the already
    placed vertices. Candidates are tried in ascending chunk order so the
    prefix comparison against the best complete code can cut whole
    subtrees, and candidates that are interchangeable by a transposition
    automorphism are explored only once.
    """
    if n <= 1:
        return list(range(n))
    total_bits = n * (n - 1) // 2
    best_code = None
    best_perm: list[int] = []
    deg_order = sorted(range(n), key=lambda v: (rows[v].bit_count(), v))

    def extend(perm, used, code, bits, chunks):
        nonlocal best_code, best_perm
        j = len(perm)
        if j == n:
            if best_code is None or code < best_code:
                best_code = code
                best_perm = perm[:]
            return
        last = perm[-1] if perm else -1
        cands = []
        for v in deg_order:
            if used >> v & 1:
                continue
            chunk = chunks[v] << 1 | (rows[v] >> last & 1) if j else 0
            cands.append((chunk, v))
        cands.sort()
        new_chunks = chunks[:]
        for chunk, v in cands:
            new_chunks[v] = chunk
        seen_rows: list[tuple[int, int]] = []
        for chunk, v in cands:
            ncode = code << j | chunk
            nbits = bits + j
            if best_code is not None:
                if ncode > best_code >> (total_bits - nbits):
                    break
            rest = ~used & ((1 << n) - 1) & ~(1 << v)
            sig = rows[v] & rest
            dup = False
            for c_prev, v_prev, s_prev in seen_rows:
                if c_prev == chunk and s_prev & ~(1 << v) == sig & ~(1 << v_prev):
                    dup = True
                    break
            if dup:
                continue
            seen_rows.append((chunk, v, sig))
            perm.append(v)
            extend(perm, used | 1 << v, ncode, nbits, new_chunks)
            perm.pop()

    extend([], 0, 0, 0, [0] * n)
    return best_perm


def canonical_form(g: Graph) -> Graph:
    """Relabel to the canonical representative of the isomorphism class."""
    if g.n > CANONICAL_MAX_N:
        raise TooLarge(f"canonical labeling limited to n <= {CANONICAL_MAX_N}")
    perm = _canonical_perm(g.n, g.adj)
    rows = [0] * g.n
    for j in range(g.n):
        for i in range(j):
            if g.adj[perm[i]] >> perm[j] & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return from_adj_rows(g.n, rows)


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: graph6 of the canonical form."""
    return to_graph6(canonical_form(g)).encode("ascii")
