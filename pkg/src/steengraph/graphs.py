"""Monomials as graphs on the vertex set {2^0, 2^1, ..., 2^(n+1)}.

Each dyadic factor xi_i^(2^j) of a monomial contributes the edge
{2^j, 2^(i+j)}, and distinct factors give distinct edges, so monomials
of A*(n) correspond bijectively to simple graphs on n+2 fixed vertices.
Vertices are stored as indices p (the value shown to humans is 2^p);
all n+2 vertices belong to every graph, including isolated ones, since
connectedness questions depend on them.

The directed view orients every edge toward its larger endpoint, which
makes the directed adjacency matrix strictly upper triangular.
"""

from typing import Iterable, Iterator, Optional, Tuple

from .algebra import Level, Monomial

Edge = Tuple[int, int]


class WoodGraph:
    """A simple graph on vertices {0, ..., n+1}; vertex p stands for 2^p.

    Edges are unordered pairs stored as (p, q) with p < q.  Loops are
    rejected and duplicate edges collapse.
    """

    __slots__ = ("level", "edges")

    def __init__(self, level: Level, edges: Iterable[Edge] = ()):
        level._require_truncated()
        top = level.n + 1
        canon = set()
        for p, q in edges:
            if p > q:
                p, q = q, p
            if p == q:
                raise ValueError(f"loop at vertex {p} not allowed")
            if p < 0 or q > top:
                raise ValueError(f"edge ({p},{q}) outside vertex range 0..{top}")
            canon.add((p, q))
        self.level = level
        self.edges = frozenset(canon)

    @property
    def vertex_count(self) -> int:
        return self.level.n + 2

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.level.n + 2)

    def vertex_label(self, p: int) -> int:
        """The dyadic value 2^p shown in rendered output."""
        return 1 << p

    def has_edge(self, p: int, q: int) -> bool:
        if p > q:
            p, q = q, p
        return (p, q) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def neighbors(self, p: int) -> tuple:
        out = [q for q in self.vertices() if q != p and self.has_edge(p, q)]
        return tuple(out)

    def degree(self, p: int) -> int:
        return sum(1 for a, b in self.edges if p in (a, b))

    def out_degree(self, p: int) -> int:
        """Arrows leaving p in the directed view (edges to larger vertices)."""
        return sum(1 for a, b in self.edges if a == p)

    def in_degree(self, p: int) -> int:
        """Arrows entering p in the directed view (edges from smaller vertices)."""
        return sum(1 for a, b in self.edges if b == p)

    @property
    def is_complete(self) -> bool:
        m = self.vertex_count
        return len(self.edges) == m * (m - 1) // 2

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WoodGraph)
            and self.level == other.level
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.level, self.edges))

    def __str__(self) -> str:
        if not self.edges:
            return f"graph on {self.vertex_count} vertices with no edges"
        body = ", ".join(f"{{{1 << p},{1 << q}}}" for p, q in self.sorted_edges())
        return f"graph on {self.vertex_count} vertices with edges {body}"

    def __repr__(self) -> str:
        return f"WoodGraph({self.level!r}, {self.sorted_edges()!r})"


def to_graph(x: Monomial) -> WoodGraph:
    """The graph of a monomial: dyadic factor xi_i^(2^j) becomes edge {j, i+j}."""
    x.level._require_truncated()
    return WoodGraph(x.level, ((b.power, b.generator + b.power) for b in x.dyadic_bits()))


def from_graph(g: WoodGraph) -> Monomial:
    """The monomial of a graph: edge (p, q) contributes 2^p to the exponent of xi_(q-p)."""
    exps = [0] * (g.level.n + 1)
    for p, q in g.edges:
        exps[q - p - 1] += 1 << p
    return Monomial(g.level, exps)


def adjacency_matrix(x: Monomial, directed: bool = False) -> tuple:
    """0/1 adjacency matrix of the graph of x, as a tuple of row tuples.

    Undirected: symmetric with zero diagonal.  Directed: entry (p, q) is
    the edge indicator only for p < q, so the matrix is strictly upper
    triangular.
    """
    x.level._require_truncated()
    m = x.level.n + 2
    rows = [[0] * m for _ in range(m)]
    for p in range(m):
        for q in range(p + 1, m):
            bit = x.edge_bit(p, q)
            rows[p][q] = bit
            if not directed:
                rows[q][p] = bit
    return tuple(tuple(r) for r in rows)


def top_class(level: Level) -> Monomial:
    """The monomial with every exponent at its bound; its graph is complete."""
    level._require_truncated()
    return Monomial(level, [level.exponent_bound(i) for i in range(1, level.n + 2)])


def export_dot(g: WoodGraph, directed: bool = False, name: Optional[str] = None) -> str:
    """Graphviz text for a graph, with vertices labeled by their dyadic values.

    Every vertex is declared, isolated ones included, and edges appear
    one per line in lexicographic (p, q) order, so output is
    deterministic.  The two-row layout used in hand drawings (even
    vertex indices above, odd below) is recorded as comments only.
    """
    kind = "digraph" if directed else "graph"
    arrow = "->" if directed else "--"
    header = f"{kind} {name} {{" if name else f"{kind} {{"
    lines = [header]
    even = [str(1 << p) for p in g.vertices() if p % 2 == 0]
    odd = [str(1 << p) for p in g.vertices() if p % 2 == 1]
    lines.append("  // vertex labels are dyadic values 2^p")
    lines.append(f"  // layout hint, top row: {' '.join(even)}")
    lines.append(f"  // layout hint, bottom row: {' '.join(odd)}")
    for p in g.vertices():
        lines.append(f'  "{1 << p}";')
    for p, q in g.sorted_edges():
        lines.append(f'  "{1 << p}" {arrow} "{1 << q}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
