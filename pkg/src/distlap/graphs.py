"""Graph representation, graph6 codec, BFS distances, and exhaustive enumeration.

A graph is stored as a tuple of adjacency bitrows: bit ``j`` of ``adj[i]`` is
set iff ``{i, j}`` is an edge. Rows fit in a Python int for the supported
orders (n <= 64). Edge bit positions throughout the module follow the colex
order (0,1), (0,2), (1,2), (0,3), ... which is also the graph6 bit order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DisconnectedGraph, MalformedGraph6, UnsupportedOrder

MAX_ORDER = 64
CANONICAL_LIMIT = 10
ENUM_LIMIT = 7

# census of connected graphs up to isomorphism, orders 1..7
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on labeled vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise UnsupportedOrder(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count differs from n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond vertex range")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.adj[i] >> j) & 1) != ((self.adj[j] >> i) & 1):
                    raise ValueError(f"asymmetric adjacency at ({i},{j})")

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edge list in colex order."""
        return [(i, j) for j in range(self.n) for i in range(j)
                if (self.adj[i] >> j) & 1]


def from_edges(n: int, edges) -> Graph:
    """Build a Graph from an iterable of vertex pairs."""
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i},{j}) outside vertex range")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((~row & full & ~(1 << i)) for i, row in enumerate(g.adj)))


@dataclass(frozen=True)
class DistanceData:
    """All-pairs hop distances with derived transmissions, Wiener index, diameter."""

    dist: tuple[tuple[int, ...], ...]
    trans: tuple[int, ...]
    wiener: int
    diam: int


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (true for n = 1)."""
    reach = 1
    while True:
        nxt = reach
        r = reach
        while r:
            v = (r & -r).bit_length() - 1
            nxt |= g.adj[v]
            r &= r - 1
        if nxt == reach:
            break
        reach = nxt
    return reach == (1 << g.n) - 1


def distance_data(g: Graph) -> DistanceData:
    """BFS from every vertex; raises DisconnectedGraph when some pair is unreachable."""
    n = g.n
    full = (1 << n) - 1
    dist = []
    for src in range(n):
        row = [0] * n
        visited = 1 << src
        frontier = 1 << src
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                nxt |= g.adj[v]
                f &= f - 1
            nxt &= ~visited
            w = nxt
            while w:
                v = (w & -w).bit_length() - 1
                row[v] = d
                w &= w - 1
            visited |= nxt
            frontier = nxt
        if visited != full:
            raise DisconnectedGraph("distance_data requires a connected graph")
        dist.append(tuple(row))
    trans = tuple(sum(row) for row in dist)
    wiener = sum(trans) // 2
    diam = max(max(row) for row in dist)
    return DistanceData(tuple(dist), trans, wiener, diam)


# ---------------------------------------------------------------------------
# graph6 codec


def _edge_bits(g: Graph):
    for j in range(g.n):
        for i in range(j):
            yield (g.adj[i] >> j) & 1


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        # long form: 126 then 18-bit big-endian order
        head = chr(126) + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    bits = list(_edge_bits(g))
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def from_graph6(text) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise MalformedGraph6("empty graph6 record")
    data = [ord(c) - 63 for c in text]
    if any(v < 0 or v > 63 for v in data):
        raise MalformedGraph6(f"byte out of range in {text!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise MalformedGraph6("truncated long-form order")
        if data[1] == 63:
            raise UnsupportedOrder("36-bit graph6 order exceeds the 64-vertex cap")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        off = 4
    else:
        n = data[0]
        off = 1
    if n == 0 or n > MAX_ORDER:
        raise UnsupportedOrder(f"order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - off != nbytes:
        raise MalformedGraph6(f"expected {nbytes} body bytes, got {len(data) - off}")
    rows = [0] * n
    k = 0
    for j in range(n):
        for i in range(j):
            byte = data[off + k // 6]
            bit = (byte >> (5 - k % 6)) & 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# canonical labeling


def canonical_form(g: Graph, limit: int = CANONICAL_LIMIT) -> str:
    """graph6 string of the lexicographically minimal relabeling of g.

    Branch and bound over vertex positions: the colex bitstring is a
    concatenation of columns, column p depending only on positions <= p, so at
    each position only candidates realizing the minimal next column can start
    a minimal completion. Twins (vertices whose swap is an automorphism) are
    collapsed to one candidate. Two graphs get equal keys iff isomorphic.
    """
    n = g.n
    if n > limit:
        raise UnsupportedOrder(f"canonical_form limited to n <= {limit}")
    if n == 1:
        return to_graph6(g)
    adj = g.adj
    best: list[int] | None = None

    def search(perm: list[int], used: int, flat: list[int]):
        nonlocal best
        p = len(perm)
        if best is not None and flat > best[:len(flat)]:
            return
        if p == n:
            if best is None or flat < best:
                best = list(flat)
            return
        cands = []
        skip = 0
        for v in range(n):
            if (used >> v) & 1 or (skip >> v) & 1:
                continue
            for w in range(v + 1, n):
                if (used >> w) & 1:
                    continue
                # swapping a twin pair is an automorphism
                if (adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)):
                    skip |= 1 << w
            col = tuple((adj[v] >> perm[i]) & 1 for i in range(p))
            cands.append((col, v))
        mincol = min(col for col, _ in cands)
        for col, v in cands:
            if col == mincol:
                search(perm + [v], used | (1 << v), flat + list(col))

    search([], 0, [])
    assert best is not None
    rows = [0] * n
    k = 0
    for j in range(n):
        for i in range(j):
            if best[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return to_graph6(Graph(n, tuple(rows)))


def is_isomorphic(a: Graph, b: Graph, limit: int = CANONICAL_LIMIT) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_form(a, limit) == canonical_form(b, limit)


# ---------------------------------------------------------------------------
# exhaustive enumeration of connected graphs up to isomorphism


def _edge_index_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(j)]


def _connected_mask_array(n: int) -> np.ndarray:
    """Edge bitmasks (colex bit order) of all connected labeled graphs on n vertices."""
    pairs = _edge_index_pairs(n)
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    rows = np.zeros((masks.size, n), dtype=np.uint8 if n <= 8 else np.uint16)
    one = rows.dtype.type(1)
    for k, (i, j) in enumerate(pairs):
        bit = ((masks >> np.uint32(k)) & np.uint32(1)).astype(rows.dtype)
        rows[:, i] |= bit << rows.dtype.type(j)
        rows[:, j] |= bit << rows.dtype.type(i)
    reach = np.full(masks.size, one)  # start at vertex 0
    for _ in range(n - 1):
        nxt = reach.copy()
        for i in range(n):
            hit = ((reach >> rows.dtype.type(i)) & one).astype(bool)
            nxt[hit] |= rows[hit, i]
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    return masks[reach == rows.dtype.type((1 << n) - 1)]


def _perm_chunk_tables(n: int) -> list[np.ndarray]:
    """Per-permutation lookup tables mapping 7-bit chunks of an edge mask to
    the permuted mask contribution; OR of chunk lookups = fully permuted mask."""
    pairs = _edge_index_pairs(n)
    nedges = len(pairs)
    index_of = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    target = np.empty((len(perms), nedges), dtype=np.int8)
    for pi, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            target[pi, k] = index_of[(a, b) if a < b else (b, a)]
    tables = []
    for lo in range(0, nedges, 7):
        width = min(7, nedges - lo)
        tab = np.zeros((len(perms), 1 << width), dtype=np.uint32)
        vals = np.arange(1 << width, dtype=np.uint32)
        for b in range(width):
            bit = (vals >> b) & 1
            tab |= bit[None, :].astype(np.uint32) << target[:, lo + b].astype(np.uint32)[:, None]
        tables.append(tab)
    return tables


def _mask_to_graph(n: int, mask: int) -> Graph:
    rows = [0] * n
    for k, (i, j) in enumerate(_edge_index_pairs(n)):
        if (mask >> k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def _connected_reps(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    conn = _connected_mask_array(n)
    tables = _perm_chunk_tables(n)
    nedges = n * (n - 1) // 2
    seen = np.zeros(1 << nedges, dtype=bool)
    reps = []
    # ascending mask order: the first unseen mask is its orbit's minimum, so
    # marking whole orbits seen yields exactly one representative per class
    for m in conn.tolist():
        if seen[m]:
            continue
        reps.append(m)
        orbit = tables[0][:, m & 127]
        for c in range(1, len(tables)):
            orbit = orbit | tables[c][:, (m >> (7 * c)) & 127]
        seen[orbit] = True
    return tuple(_mask_to_graph(n, m) for m in reps)


def enumerate_connected(n: int):
    """Yield one representative per isomorphism class of connected graphs on n
    vertices, in ascending order of the colex edge bitmask. Supported natively
    for 1 <= n <= 7; larger corpora must come from a graph6 stream."""
    if not 1 <= n <= ENUM_LIMIT:
        raise UnsupportedOrder(f"native enumeration limited to 1..{ENUM_LIMIT}")
    yield from _connected_reps(n)
