"""Edge colorings and exact tests for proper connectivity.

A path is proper when consecutive edges always get different colors;
adjacent edges of the graph itself may share a color freely. The
predicates here answer two questions about a colored graph: is every
vertex pair joined by a proper simple path, and does every pair have two
proper paths whose first colors differ and whose last colors differ.

Everything is decided by exhaustive simple-path enumeration. A relaxed
walk reachability (breadth-first search over (vertex, last color)
states) is used internally as a fast necessary filter and for pruning,
never as the final answer: walks may revisit vertices, so walk
reachability can overcount.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    ColoringGraphMismatch,
    Disconnected,
    NotAPath,
    SameVertex,
    TooLarge,
    VertexOutOfRange,
)
from .graph import Graph, from_edge_list, is_connected

PROFILE_MAX_N = 16


@dataclass(frozen=True)
class EdgeColoring:
    """A total edge coloring: colors[i] in 1..k colors graph.edges[i]."""

    graph: Graph
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ColoringGraphMismatch(f"palette size must be >= 1, got {self.k}")
        if len(self.colors) != self.graph.m:
            raise ColoringGraphMismatch(
                f"{len(self.colors)} colors for {self.graph.m} edges"
            )
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ColoringGraphMismatch(f"colors {bad} outside 1..{self.k}")
        lookup = {}
        for (u, v), c in zip(self.graph.edges, self.colors):
            lookup[u, v] = c
            lookup[v, u] = c
        object.__setattr__(self, "_lookup", lookup)

    def color(self, u: int, v: int) -> int:
        try:
            return self._lookup[u, v]
        except KeyError:
            raise ColoringGraphMismatch(f"({u},{v}) is not an edge") from None


def make_coloring(g: Graph, k: int, assignment) -> EdgeColoring:
    """Build an EdgeColoring from a dict {edge: color} or a parallel sequence."""
    if isinstance(assignment, dict):
        normalized = {}
        for (u, v), c in assignment.items():
            key = (min(u, v), max(u, v))
            if normalized.get(key, c) != c:
                raise ColoringGraphMismatch(f"conflicting colors for edge {key}")
            normalized[key] = c
        if set(normalized) != set(g.edges):
            raise ColoringGraphMismatch("assignment does not cover the edge set")
        colors = tuple(normalized[e] for e in g.edges)
    else:
        colors = tuple(assignment)
    return EdgeColoring(g, k, colors)


@dataclass(frozen=True)
class PathProfile:
    """All (first color, last color) pairs over proper simple u-v paths."""

    pairs: frozenset[tuple[int, int]]

    def reverse(self) -> "PathProfile":
        return PathProfile(frozenset((e, s) for s, e in self.pairs))

    def connects(self) -> bool:
        return bool(self.pairs)

    def has_strong_pair(self) -> bool:
        for s1, e1 in self.pairs:
            for s2, e2 in self.pairs:
                if s1 != s2 and e1 != e2:
                    return True
        return False


# ---------------------------------------------------------------------------
# internal machinery on primitive data (shared with the solver hot loops)


def _spread_states(trans, init: int) -> int:
    seen = init
    frontier = init
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= trans[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


class _Machine:
    """Per-coloring search state: color lookups, walk transitions, caches.

    States are (vertex, last edge color) packed as v*k + color-1. Built
    once per coloring and reused across all vertex pairs; the solver's
    enumeration loops rely on that reuse.
    """

    def __init__(self, n: int, k: int, edges, colors):
        self.n = n
        self.k = k
        rows: list[dict[int, int]] = [{} for _ in range(n)]
        for (u, v), c in zip(edges, colors):
            rows[u][v] = c
            rows[v][u] = c
        self.rows = rows
        trans = [0] * (n * k)
        for v in range(n):
            out = sorted(rows[v].items())
            for c in range(1, k + 1):
                mask = 0
                for w, cw in out:
                    if cw != c:
                        mask |= 1 << (w * k + cw - 1)
                trans[v * k + c - 1] = mask
        self.trans = trans
        self._rtrans = None
        self._walk: dict[int, int] = {}
        self._good: dict[int, int] = {}

    def walk_mask(self, u: int) -> int:
        """Vertices reachable from u by a proper walk of >= 1 edge."""
        cached = self._walk.get(u)
        if cached is not None:
            return cached
        k = self.k
        init = 0
        for w, c in self.rows[u].items():
            init |= 1 << (w * k + c - 1)
        states = _spread_states(self.trans, init)
        vmask = 0
        while states:
            low = states & -states
            vmask |= 1 << ((low.bit_length() - 1) // k)
            states &= states - 1
        self._walk[u] = vmask
        return vmask

    def walk_all_pairs(self) -> bool:
        """Necessary filter: every pair joined by a proper walk."""
        want = (1 << self.n) - 1
        for u in range(self.n - 1):
            # walk reachability is symmetric, so checking v > u suffices
            remaining = want & ~((1 << (u + 1)) - 1)
            if self.walk_mask(u) & remaining != remaining:
                return False
        return True

    def good_states(self, v: int) -> int:
        """States (w, last color) from which some proper walk ends at v."""
        cached = self._good.get(v)
        if cached is not None:
            return cached
        if self._rtrans is None:
            size = self.n * self.k
            rtrans = [0] * size
            for s in range(size):
                m = self.trans[s]
                while m:
                    low = m & -m
                    rtrans[low.bit_length() - 1] |= 1 << s
                    m ^= low
            self._rtrans = rtrans
        k = self.k
        init = 0
        for w, cw in self.rows[v].items():
            for c in range(1, k + 1):
                if c != cw:
                    init |= 1 << (w * k + c - 1)
        mask = _spread_states(self._rtrans, init)
        self._good[v] = mask
        return mask

    def profile_pairs(self, u: int, v: int, mode: str) -> set[tuple[int, int]]:
        """DFS over proper simple u-v paths collecting (start, end) colors.

        mode "any" stops at the first pair, "strong" once two pairs differ
        in both coordinates, "full" collects the complete set. Branches
        whose (vertex, color) state cannot reach v even by a walk are cut.
        """
        k = self.k
        rows = self.rows
        good = self.good_states(v)
        pairs: set[tuple[int, int]] = set()
        done = False
        cap = k * k

        def satisfied() -> bool:
            if mode == "any":
                return bool(pairs)
            if mode == "strong":
                return PathProfile(frozenset(pairs)).has_strong_pair()
            return len(pairs) == cap

        def rec(w: int, visited: int, last: int, start: int):
            nonlocal done
            for x, cx in rows[w].items():
                if done:
                    return
                if cx == last or visited >> x & 1:
                    continue
                if x == v:
                    if (start, cx) not in pairs:
                        pairs.add((start, cx))
                        if satisfied():
                            done = True
                            return
                    continue
                if not good >> (x * k + cx - 1) & 1:
                    continue
                rec(x, visited | 1 << x, cx, start)

        for w, c in sorted(rows[u].items()):
            if done:
                break
            if w == v:
                pairs.add((c, c))
                if satisfied():
                    break
                continue
            if good >> (w * k + c - 1) & 1:
                rec(w, 1 << u | 1 << w, c, c)
        return pairs

    def pair_ok(self, u: int, v: int, strong: bool) -> bool:
        if not self.walk_mask(u) >> v & 1:
            return False
        mode = "strong" if strong else "any"
        found = PathProfile(frozenset(self.profile_pairs(u, v, mode)))
        return found.has_strong_pair() if strong else found.connects()

    def first_bad_pair(self, strong: bool):
        for u in range(self.n - 1):
            for v in range(u + 1, self.n):
                if not self.pair_ok(u, v, strong):
                    return (u, v)
        return None


def _machine_for(c: EdgeColoring) -> _Machine:
    return _Machine(c.graph.n, c.k, c.graph.edges, c.colors)


# ---------------------------------------------------------------------------
# public operations


def is_proper_path(c: EdgeColoring, path) -> bool:
    """True iff the vertex sequence is a simple path whose consecutive
    edges never repeat a color; single-edge (and single-vertex) paths pass."""
    seq = list(path)
    if not seq:
        raise NotAPath("empty vertex sequence")
    if len(set(seq)) != len(seq):
        raise NotAPath(f"repeated vertex in {seq}")
    g = c.graph
    for w in seq:
        if not 0 <= w < g.n:
            raise NotAPath(f"vertex {w} outside 0..{g.n - 1}")
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            raise NotAPath(f"({a},{b}) is not an edge")
    cols = [c.color(a, b) for a, b in zip(seq, seq[1:])]
    return all(c1 != c2 for c1, c2 in zip(cols, cols[1:]))


def path_profile(c: EdgeColoring, u: int, v: int) -> PathProfile:
    """Exact profile of proper simple u-v paths; empty when none exist."""
    g = c.graph
    if g.n > PROFILE_MAX_N:
        raise TooLarge(f"profile search limited to n <= {PROFILE_MAX_N}")
    for w in (u, v):
        if not 0 <= w < g.n:
            raise VertexOutOfRange(f"vertex {w} outside 0..{g.n - 1}")
    if u == v:
        raise SameVertex(f"profile endpoints must differ, both are {u}")
    return PathProfile(frozenset(_machine_for(c).profile_pairs(u, v, "full")))


def _scan_pairs(c: EdgeColoring, strong: bool):
    g = c.graph
    if g.n > PROFILE_MAX_N:
        raise TooLarge(f"search limited to n <= {PROFILE_MAX_N}")
    if not is_connected(g):
        raise Disconnected("proper connectivity is defined on connected graphs")
    return _machine_for(c).first_bad_pair(strong)


def first_improper_pair(c: EdgeColoring):
    """Lexicographically first vertex pair with no proper path, or None."""
    return _scan_pairs(c, strong=False)


def first_weak_pair(c: EdgeColoring):
    """First pair lacking two proper paths that differ in both the first
    and the last edge color, or None."""
    return _scan_pairs(c, strong=True)


def is_proper_connected(c: EdgeColoring) -> bool:
    return first_improper_pair(c) is None


def has_strong_property(c: EdgeColoring) -> bool:
    return first_weak_pair(c) is None


# ---------------------------------------------------------------------------
# structured text format


def coloring_to_json(c: EdgeColoring) -> str:
    payload = {
        "n": c.graph.n,
        "k": c.k,
        "edges": [[u, v] for u, v in c.graph.edges],
        "colors": list(c.colors),
    }
    return json.dumps(payload)


def coloring_from_json(text: str) -> EdgeColoring:
    try:
        payload = json.loads(text)
        n = payload["n"]
        k = payload["k"]
        raw_edges = [tuple(e) for e in payload["edges"]]
        raw_colors = list(payload["colors"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ColoringGraphMismatch(f"bad coloring document: {exc}") from exc
    if len(raw_edges) != len(raw_colors):
        raise ColoringGraphMismatch(
            f"{len(raw_colors)} colors for {len(raw_edges)} edges"
        )
    g = from_edge_list(n, raw_edges)
    assignment = {}
    for (u, v), c in zip(raw_edges, raw_colors):
        key = (min(u, v), max(u, v))
        if assignment.get(key, c) != c:
            raise ColoringGraphMismatch(f"conflicting colors for edge {key}")
        assignment[key] = c
    return make_coloring(g, k, assignment)
