"""Graft transformations (pendant path pairs) and edge deletion.

Arm lengths k and l count the vertices appended per arm; the anchors stay in
the base. Moving one vertex from the short arm to the long arm never lowers
the distance Laplacian radius and strictly raises the distance signless
Laplacian radius; the checkers eigensolve both sides of each comparison.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidGraft, NoSuchEdge
from .graphs import MAX_ORDER, Graph
from .linalg import eigenvalues
from .spectra import dist_laplacian, dist_signless_laplacian
from .verdict import EQUALITY_TOL, SLACK, BoundVerdict, not_applicable

KIND_VERTEX = "TwoPathsAtVertex"
KIND_TWINS = "TwoPathsAtTwins"


@dataclass(frozen=True)
class GraftSpec:
    base: Graph
    kind: str
    anchors: tuple[int, ...]
    k: int
    l: int


def _validate(spec: GraftSpec):
    base = spec.base
    if spec.kind not in (KIND_VERTEX, KIND_TWINS):
        raise InvalidGraft(f"unknown graft kind {spec.kind!r}")
    want = 1 if spec.kind == KIND_VERTEX else 2
    if len(spec.anchors) != want:
        raise InvalidGraft(f"{spec.kind} takes {want} anchor(s)")
    for a in spec.anchors:
        if not 0 <= a < base.n:
            raise InvalidGraft(f"anchor {a} outside the base vertex range")
    if spec.k < spec.l or spec.l < 0:
        raise InvalidGraft(f"need k >= l >= 0, got k={spec.k} l={spec.l}")
    if base.n + spec.k + spec.l > MAX_ORDER:
        raise InvalidGraft("grafted order exceeds the 64-vertex cap")
    if spec.kind == KIND_TWINS:
        u, v = spec.anchors
        if u == v or not base.has_edge(u, v):
            raise InvalidGraft("twin anchors must be adjacent and distinct")
        if (base.adj[u] & ~(1 << v)) != (base.adj[v] & ~(1 << u)):
            raise InvalidGraft("anchors are not twins (neighborhoods differ)")


def apply_graft(spec: GraftSpec) -> Graph:
    """Attach a pendant path of k vertices at the first anchor and of l
    vertices at the second (same vertex for the one-anchor kind). New
    vertices are numbered after the base, k-arm first."""
    _validate(spec)
    base = spec.base
    n = base.n + spec.k + spec.l
    rows = list(base.adj) + [0] * (spec.k + spec.l)
    u = spec.anchors[0]
    v = spec.anchors[-1]

    def attach(anchor: int, first: int, count: int):
        prev = anchor
        for w in range(first, first + count):
            rows[prev] |= 1 << w
            rows[w] |= 1 << prev
            prev = w

    attach(u, base.n, spec.k)
    attach(v, base.n + spec.k, spec.l)
    return Graph(n, tuple(rows))


def _compare_radii(spec: GraftSpec, matrix_fn) -> tuple[float, float]:
    if spec.l < 2:
        raise InvalidGraft("monotonicity comparison needs k >= l >= 2")
    g_short = apply_graft(spec)
    g_long = apply_graft(GraftSpec(spec.base, spec.kind, spec.anchors,
                                   spec.k + 1, spec.l - 1))
    a = eigenvalues(matrix_fn(g_short)).radius
    b = eigenvalues(matrix_fn(g_long)).radius
    return a, b


def _is_degenerate(spec: GraftSpec) -> bool:
    # A twins graft needs a base vertex besides the twin pair and a vertex
    # graft needs a base vertex besides the anchor; otherwise both grafts of
    # a comparison are the same bare path and no strict claim can survive.
    floor = 2 if spec.kind == KIND_VERTEX else 3
    return spec.base.n < floor


def _witness(spec: GraftSpec, a: float, b: float) -> dict:
    return {"kind": spec.kind, "k": spec.k, "l": spec.l,
            "base_n": spec.base.n, "radius_k_l": a, "radius_k1_l1": b}


def check_graft_monotone_L(spec: GraftSpec, tol: float = EQUALITY_TOL) -> BoundVerdict:
    """dl radius of the (k+1, l-1) graft >= that of the (k, l) graft; strict
    when l = 2 and the base is not a bare path seed."""
    a, b = _compare_radii(spec, dist_laplacian)
    theorem_id = "T5.4" if spec.kind == KIND_VERTEX else "T5.3"
    if spec.kind == KIND_TWINS and _is_degenerate(spec):
        return not_applicable(theorem_id, bound_value=a, observed=b,
                              witness=_witness(spec, a, b))
    holds = b >= a - SLACK
    strict = spec.l == 2 and not _is_degenerate(spec) and b - a > SLACK
    if spec.l == 2 and not _is_degenerate(spec):
        holds = holds and strict
    return BoundVerdict(theorem_id, a, b, holds=holds, strict=strict,
                        equality=abs(b - a) <= tol,
                        witness=_witness(spec, a, b))


def check_graft_monotone_Q(spec: GraftSpec, tol: float = EQUALITY_TOL) -> BoundVerdict:
    """dq radius of the (k+1, l-1) graft strictly exceeds that of the (k, l)
    graft."""
    a, b = _compare_radii(spec, dist_signless_laplacian)
    theorem_id = "L7.1" if spec.kind == KIND_VERTEX else "L7.2"
    if _is_degenerate(spec):
        return not_applicable(theorem_id, bound_value=a, observed=b,
                              witness=_witness(spec, a, b))
    strict = b - a > SLACK
    return BoundVerdict(theorem_id, a, b, holds=strict, strict=strict,
                        equality=abs(b - a) <= tol,
                        witness=_witness(spec, a, b))


def delete_edge(g: Graph, e) -> Graph:
    """Remove one edge; the result may be disconnected, callers must check."""
    i, j = e
    if not (0 <= i < g.n and 0 <= j < g.n) or i == j or not g.has_edge(i, j):
        raise NoSuchEdge(f"({i},{j}) is not an edge")
    rows = list(g.adj)
    rows[i] &= ~(1 << j)
    rows[j] &= ~(1 << i)
    return Graph(g.n, tuple(rows))
