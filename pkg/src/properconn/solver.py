"""Exact computation of the minimum palette for proper connectivity.

Upper bounds come from constructions (complete, spanning path, spanning
tree); lower bounds come only from exhausted search at smaller palettes,
plus the definitional fact that only complete graphs work with one color.
The search budget is wall-clock capped (PC_BUDGET_MS); running out is
reported as a bracketing interval, never as a silent wrong answer.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import product

from .coloring import (
    EdgeColoring,
    _Machine,
    has_strong_property,
    is_proper_connected,
)
from .constructive import PcCertificate, _certify, color_hamilton_path, color_tree
from .errors import Disconnected, PcError, SearchBudgetExceeded, TooLarge
from .graph import Graph, degree_stats, from_edge_list, is_complete, is_connected

EXHAUSTIVE_VOLUME = 1 << 22
SMALL_N, SMALL_M = 10, 24


def _budget_deadline(budget_ms=None):
    if budget_ms is None:
        raw = os.environ.get("PC_BUDGET_MS", "")
        budget_ms = int(raw) if raw.isdigit() else None
    if budget_ms is None:
        return None
    return time.monotonic() + budget_ms / 1000.0


class _OutOfTime(Exception):
    pass


def _bfs_tree(g: Graph, root: int):
    seen = {root}
    queue = [root]
    edges = []
    while queue:
        nxt = []
        for v in queue:
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    edges.append((min(v, w), max(v, w)))
                    nxt.append(w)
        queue = nxt
    return edges


def pc_upper(g: Graph) -> PcCertificate:
    """A verified certificate bounding the palette from above.

    Complete graphs get one color; otherwise a spanning path gives two;
    the fallback colors the breadth-first spanning tree with the fewest
    colors over all roots, filling non-tree edges with color 1.
    """
    if not is_connected(g):
        raise Disconnected("upper bounds are defined for connected graphs")
    if is_complete(g):
        return _certify(g, 1, (1,) * g.m, "complete")
    try:
        cert = color_hamilton_path(g)
    except TooLarge:
        cert = None
    if cert is not None:
        return cert
    best_edges, best_delta = None, g.n
    for root in range(g.n):
        edges = _bfs_tree(g, root)
        tree = from_edge_list(g.n, edges)
        delta = degree_stats(tree)[2]
        if delta < best_delta:
            best_edges, best_delta = edges, delta
    tree = from_edge_list(g.n, best_edges)
    inner = color_tree(tree)
    assignment = {e: 1 for e in g.edges}
    for e, c in zip(tree.edges, inner.coloring.colors):
        assignment[e] = c
    colors = tuple(assignment[e] for e in g.edges)
    return _certify(g, inner.k, colors, "tree")


def _search_k(g: Graph, k: int, deadline):
    """Lexicographically first proper-connecting k-coloring, or None after
    exhausting the space. First edge pinned to color 1 by palette symmetry."""
    n, edges = g.n, g.edges
    m = len(edges)
    for count, rest in enumerate(product(range(1, k + 1), repeat=m - 1)):
        if deadline is not None and count % 2048 == 0:
            if time.monotonic() > deadline:
                raise _OutOfTime
        colors = (1,) + rest
        machine = _Machine(n, k, edges, colors)
        if machine.first_bad_pair(strong=False) is None:
            return colors
    return None


def pc_exact(g: Graph, kmax=None) -> tuple[int, PcCertificate]:
    """The exact minimum palette size with a verified witness.

    Palettes are tried in increasing order; each candidate coloring is
    checked exactly, so a passed palette is a witness and an exhausted one
    is a lower bound. With kmax set this becomes a bounded decision: if
    every palette up to kmax is exhausted the bracketing interval is
    raised rather than guessed.
    """
    if not is_connected(g):
        raise Disconnected("the invariant is defined for connected graphs")
    if is_complete(g):
        return 1, _certify(g, 1, (1,) * g.m, "complete")
    upper = pc_upper(g)
    hi = upper.k if kmax is None else min(kmax, upper.k)
    deadline = _budget_deadline()
    for k in range(2, hi + 1):
        if k == upper.k:
            return upper.k, upper
        feasible = (g.n <= SMALL_N and g.m <= SMALL_M) or k ** (
            g.m - 1
        ) <= EXHAUSTIVE_VOLUME
        if not feasible:
            # smaller palettes all exhausted, so the bracket below is proven
            raise SearchBudgetExceeded(
                k, upper.k, f"palette {k} over {g.m - 1} free edges exceeds the guard"
            )
        try:
            colors = _search_k(g, k, deadline)
        except _OutOfTime:
            raise SearchBudgetExceeded(
                k, upper.k, f"budget hit while searching palette {k}"
            ) from None
        if colors is not None:
            return k, _certify(g, k, colors, "exhaustive")
    raise SearchBudgetExceeded(
        hi + 1, upper.k, f"all palettes up to kmax={hi} exhausted"
    )


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(cert: PcCertificate) -> VerificationReport:
    """Recompute every claim a certificate makes; never raises."""
    try:
        coloring = cert.coloring
        if coloring.graph != cert.graph:
            return VerificationReport(False, "coloring belongs to another graph")
        if coloring.k > cert.k or any(c > cert.k for c in coloring.colors):
            return VerificationReport(False, f"coloring exceeds {cert.k} colors")
        if not is_proper_connected(coloring):
            from .coloring import first_improper_pair

            pair = first_improper_pair(coloring)
            return VerificationReport(False, f"no proper path for pair {pair}")
        if cert.strong and not has_strong_property(coloring):
            from .coloring import first_weak_pair

            pair = first_weak_pair(coloring)
            return VerificationReport(False, f"strong property fails at {pair}")
    except PcError as exc:
        return VerificationReport(False, f"verification impossible: {exc}")
    return VerificationReport(True)
