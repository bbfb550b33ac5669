"""Trees, vertex degrees, and Hamilton criteria for monomial graphs.

The tree test combines connectedness with the edge count: a connected
graph on n+2 vertices is a tree exactly when it has n+1 edges, and the
edge count of a monomial graph is the total number of 1s across the
binary expansions of its exponents.

Two sufficient conditions for a Hamilton cycle are exposed side by
side.  `paper_hamilton_condition` bounds every vertex degree below by
n/2; `dirac_condition` uses (n+2)/2, i.e. half the number of vertices,
which is the classical bound.  They differ, and the exhaustive
verifier reports which one is actually sound on these graphs; the
brute-force searchers here are the arbiters.  Both comparisons are
done in integers (2*degree against n, resp. n+2).

The directed-path question is far more rigid: because every edge
points toward its larger endpoint, a spanning directed path must visit
the vertices in increasing order, so it exists exactly when all the
consecutive edges {p, p+1} are present, i.e. when the exponent of xi_1
is 2^(n+1) - 1.
"""

from typing import NamedTuple, Optional, Sequence, Tuple

from .algebra import Monomial
from .connectivity import is_connected, oracle_is_connected
from .graphs import WoodGraph


class DegreeProfile(NamedTuple):
    """In/out/total degree of one vertex in the directed view of a monomial graph."""

    vertex: int
    out_degree: int
    in_degree: int
    degree: int


def degrees(x: Monomial, p: int) -> DegreeProfile:
    """Degree data of vertex p: arrows out go to larger vertices, arrows in come from smaller."""
    level = x.level
    level._require_truncated()
    if not 0 <= p <= level.n + 1:
        raise ValueError(f"vertex index {p} out of range 0..{level.n + 1}")
    out = sum(x.edge_bit(p, p + k) for k in range(1, level.n + 2 - p))
    inn = sum(x.edge_bit(p - k, p) for k in range(1, p + 1))
    return DegreeProfile(p, out, inn, out + inn)


def degree_table(x: Monomial) -> list:
    """Degree profiles of all n+2 vertices in index order."""
    return [degrees(x, p) for p in range(x.level.n + 2)]


def is_tree(x: Monomial) -> bool:
    """True iff the graph of x is a tree: connected with exactly n+1 edges."""
    if x.edge_count != x.level.n + 2 - 1:
        return False
    return is_connected(x)


def oracle_is_acyclic(g: WoodGraph) -> bool:
    """Depth-first search finds no back edge (parent edges excluded)."""
    m = g.vertex_count
    adj = [[] for _ in range(m)]
    for p, q in g.edges:
        adj[p].append(q)
        adj[q].append(p)
    seen = [False] * m
    for root in range(m):
        if seen[root]:
            continue
        seen[root] = True
        stack = [(root, -1)]
        while stack:
            v, parent = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, v))
                elif w != parent:
                    return False
    return True


def oracle_is_tree(g: WoodGraph) -> bool:
    """Tree test by search alone: connected (breadth-first) and acyclic (depth-first).

    Deliberately does not use the edge count, so the classical
    edge-count characterization stays independently testable.
    """
    return oracle_is_connected(g) and oracle_is_acyclic(g)


def paper_hamilton_condition(x: Monomial) -> bool:
    """Every vertex degree at least n/2 (and n > 0), compared exactly as 2*degree >= n."""
    level = x.level
    level._require_truncated()
    if level.n == 0:
        return False
    return all(2 * degrees(x, p).degree >= level.n for p in range(level.n + 2))


def dirac_condition(x: Monomial) -> bool:
    """Every vertex degree at least half the vertex count (n+2)/2, as 2*degree >= n+2."""
    level = x.level
    level._require_truncated()
    if level.n == 0:
        return False
    return all(2 * degrees(x, p).degree >= level.n + 2 for p in range(level.n + 2))


def is_hamilton_cycle(g: WoodGraph, seq: Sequence[int]) -> bool:
    """Validate a witness: seq visits every vertex exactly once and closes up along edges."""
    m = g.vertex_count
    if len(seq) != m or set(seq) != set(range(m)) or m < 3:
        return False
    return all(g.has_edge(seq[k], seq[(k + 1) % m]) for k in range(m))


def oracle_hamilton_cycle(g: WoodGraph) -> Optional[Tuple[int, ...]]:
    """Backtracking search for a Hamilton cycle; None when there is none.

    The witness starts at vertex 0 and is the lexicographically
    smallest such sequence, with the reflection duplicate removed by
    requiring the second vertex to be smaller than the last.
    """
    m = g.vertex_count
    if m < 3:
        return None
    adj = [set() for _ in range(m)]
    for p, q in g.edges:
        adj[p].add(q)
        adj[q].add(p)
    if any(len(a) < 2 for a in adj):
        return None
    order = [sorted(a) for a in adj]
    seq = [0]
    used = [True] + [False] * (m - 1)

    def extend() -> bool:
        if len(seq) == m:
            return seq[1] < seq[-1] and 0 in adj[seq[-1]]
        for w in order[seq[-1]]:
            if not used[w]:
                seq.append(w)
                used[w] = True
                if extend():
                    return True
                seq.pop()
                used[w] = False
        return False

    return tuple(seq) if extend() else None


def has_hamilton_directed_path(x: Monomial) -> bool:
    """True iff the digraph of x has a spanning directed path.

    Equivalent to the exponent of xi_1 being 2^(n+1) - 1: the
    orientation is increasing, so the only candidate is 0,1,...,n+1 and
    it needs every consecutive edge, i.e. every bit of r_1.
    """
    level = x.level
    level._require_truncated()
    return x.exponent(1) == (1 << (level.n + 1)) - 1


def oracle_hamilton_directed_path(g: WoodGraph) -> Optional[Tuple[int, ...]]:
    """Spanning directed path by direct check of the consecutive edges {p, p+1}."""
    m = g.vertex_count
    if all(g.has_edge(p, p + 1) for p in range(m - 1)):
        return tuple(range(m))
    return None


def format_cycle(seq: Sequence[int]) -> str:
    """Render a cycle by dyadic vertex labels, repeating the start: 2-4-16-1-8-2."""
    labels = [str(1 << p) for p in seq]
    labels.append(str(1 << seq[0]))
    return "-".join(labels)


def format_directed_path(seq: Sequence[int]) -> str:
    """Render a directed path by dyadic vertex labels: 1->2->4->8->16."""
    return "->".join(str(1 << p) for p in seq)
