"""Build colorings structurally instead of searching for them.

Exhaustive search is the court of last resort. Most graphs give in to
one of the constructions shown here: trees get one color per branch
direction, bridgeless graphs get a strong coloring (one that also varies
the first and last edge colors between alternative routes), halves can
be glued across a bridge, and a finished certificate can absorb an
extra vertex without growing its palette.
"""

from properconn import (
    color_tree,
    extend_vertex,
    from_edge_list,
    glue_across_bridge,
    pc_exact,
    strong_coloring_bridgeless,
    verify_certificate,
)


def show(label, cert):
    edges = " ".join(
        f"{u}{v}:{cert.coloring.color(u, v)}" for u, v in cert.graph.edges
    )
    print(f"{label:<24} k={cert.k} strong={cert.strong} [{edges}]")


def main():
    spider = from_edge_list(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    show("tree, max degree 3", color_tree(spider))

    c6 = from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])
    even = strong_coloring_bridgeless(c6)
    show("even cycle", even)

    c5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    show("odd cycle", strong_coloring_bridgeless(c5))

    # two triangles, each ending in a stub edge that stands for the other
    half_a = pc_exact(from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)]))[1]
    half_b = pc_exact(from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)]))[1]
    glued = glue_across_bridge(half_a, half_b, (2, 3), ([0, 1, 2, 3], [3, 4, 5, 2]))
    show("two glued triangles", glued)

    grown = extend_vertex(even, [(6, 0), (6, 3)])
    show("cycle plus a chord hub", grown)

    print()
    all_ok = all(
        verify_certificate(c).ok for c in [even, glued, grown]
    )
    print(f"independent re-verification of the composites: {all_ok}")


if __name__ == "__main__":
    main()
