"""Exhaustive isomorphism-free generation of small simple graphs.

Graphs on n vertices are identified with their upper-triangle adjacency
bit-strings in column-major order (the graph6 bit order).  The canonical
form of a class is the lexicographically least bit-string over all vertex
relabelings.  Generation unions the orbits of all 2^(n(n-1)/2) bit-strings
under adjacent transpositions (which generate the full symmetric group) and
keeps the minimum of each orbit, so the output is exactly one canonical
representative per isomorphism class, in sorted order.

Affordable up to the cap of n = 6 (32768 bit-strings); larger corpora must
be supplied externally as graph6 files.
"""

from __future__ import annotations

from .graphs import Graph, triangle_pairs

GENERATION_CAP = 6


def _transposition_bit_table(n: int, t: int) -> list[int]:
    """Bit-position remap of the pair order under swapping vertices t, t+1.

    Bit k of the mask holds the pair with column-major index m-1-k, so the
    lexicographic order on bit-strings is the numeric order on masks.
    """
    pairs = triangle_pairs(n)
    m = len(pairs)
    position = {pair: m - 1 - k for k, pair in enumerate(pairs)}

    def swap(v: int) -> int:
        if v == t:
            return t + 1
        if v == t + 1:
            return t
        return v

    table = [0] * m
    for k, (i, j) in enumerate(pairs):
        a, b = swap(i), swap(j)
        if a > b:
            a, b = b, a
        table[position[(i, j)]] = position[(a, b)]
    return table


def _apply_bit_table(mask: int, table: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << table[low.bit_length() - 1]
        mask ^= low
    return out


def _mask_to_graph(n: int, mask: int) -> Graph:
    pairs = triangle_pairs(n)
    m = len(pairs)
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        if (mask >> (m - 1 - k)) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def graph_to_mask(graph: Graph) -> int:
    """Adjacency bit-string of a graph as an integer (first pair bit most
    significant)."""
    mask = 0
    for i, j in triangle_pairs(graph.n):
        mask = (mask << 1) | ((graph.adj[i] >> j) & 1)
    return mask


def generate_all_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of simple graphs
    on n vertices, sorted by canonical adjacency bit-string."""
    if not 1 <= n <= GENERATION_CAP:
        raise ValueError(f"generation order must be between 1 and {GENERATION_CAP}")
    m = n * (n - 1) // 2
    size = 1 << m
    parent = list(range(size))

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    for t in range(n - 1):
        table = _transposition_bit_table(n, t)
        for mask in range(size):
            other = _apply_bit_table(mask, table)
            ra, rb = find(mask), find(other)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    # With unions always hanging the larger root under the smaller, each
    # orbit's final root is its minimum, i.e. the canonical form.
    canonical = sorted({find(mask) for mask in range(size)})
    return [_mask_to_graph(n, mask) for mask in canonical]
