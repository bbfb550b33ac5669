"""Connectedness and unilaterality via walk counts.

For a monomial x of A*(n) with undirected adjacency matrix A, the
connection number C(p,q) is the (p,q) entry of A + A^2 + ... + A^(n+1),
i.e. the number of walks from p to q of length at most n+1.  Since any
two vertices joined by a walk are joined by one of length <= n+1
(there are only n+2 vertices), the graph is connected exactly when
every C(p,q) with p < q is positive.

The unilateral numbers U(p,q) are the same power sum built from the
directed adjacency matrix (edges oriented toward the larger vertex).
That digraph is acyclic with a topological order given by the vertex
indices, so every directed walk is a path, and U(p,q) counts directed
paths from p to q.  The digraph is unilateral (some directed path
joins each pair, in one direction or the other) exactly when every
U(p,q) with p < q is positive: q can never reach p < q.

The oracle_* functions decide the same questions by direct graph
search, sharing no code with the matrix route.
"""

from collections import deque
from operator import mul
from typing import Dict, Tuple

from .algebra import Monomial
from .graphs import WoodGraph, adjacency_matrix


class WalkCountTable:
    """Walk counts indexed by vertex pairs (p, q) with 0 <= p < q <= n+1."""

    __slots__ = ("level", "values")

    def __init__(self, level, values: Dict[Tuple[int, int], int]):
        expected = {
            (p, q)
            for p in range(level.n + 2)
            for q in range(p + 1, level.n + 2)
        }
        if set(values) != expected:
            raise ValueError(
                f"walk count table needs exactly the pairs p<q in 0..{level.n + 1}"
            )
        self.level = level
        self.values = dict(values)

    def __getitem__(self, pair: Tuple[int, int]) -> int:
        return self.values[pair]

    def items(self):
        return sorted(self.values.items())

    @property
    def all_positive(self) -> bool:
        return all(v > 0 for v in self.values.values())

    def as_records(self) -> list:
        """JSON-friendly rows [{'p': p, 'q': q, 'value': v}, ...] in (p, q) order."""
        return [{"p": p, "q": q, "value": v} for (p, q), v in self.items()]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WalkCountTable)
            and self.level == other.level
            and self.values == other.values
        )

    def __repr__(self) -> str:
        return f"WalkCountTable({self.level!r}, {dict(self.items())!r})"


def _matmul(a: list, b: list) -> list:
    cols = list(zip(*b))
    return [[sum(map(mul, row, col)) for col in cols] for row in a]


def _walk_power_sum(a: tuple, top: int) -> list:
    # a + a^2 + ... + a^top with exact integer entries
    m = len(a)
    total = [list(row) for row in a]
    power = [list(row) for row in a]
    for _ in range(top - 1):
        power = _matmul(power, a)
        for i in range(m):
            ti = total[i]
            pi = power[i]
            for j in range(m):
                ti[j] += pi[j]
    return total


def _table_from_matrix(x: Monomial, directed: bool) -> WalkCountTable:
    level = x.level
    level._require_truncated()
    a = adjacency_matrix(x, directed=directed)
    s = _walk_power_sum(a, level.n + 1)
    m = level.n + 2
    values = {(p, q): s[p][q] for p in range(m) for q in range(p + 1, m)}
    return WalkCountTable(level, values)


def connection_numbers(x: Monomial) -> WalkCountTable:
    """Numbers of walks of length <= n+1 between vertex pairs of the graph of x."""
    return _table_from_matrix(x, directed=False)


def unilateral_numbers(x: Monomial) -> WalkCountTable:
    """Numbers of directed paths between vertex pairs of the digraph of x."""
    return _table_from_matrix(x, directed=True)


def is_connected(x: Monomial) -> bool:
    """True iff every connection number is positive."""
    return connection_numbers(x).all_positive


def is_unilateral(x: Monomial) -> bool:
    """True iff every unilateral number is positive."""
    return unilateral_numbers(x).all_positive


def oracle_is_connected(g: WoodGraph) -> bool:
    """Breadth-first search from vertex 0 must reach all n+2 vertices."""
    m = g.vertex_count
    adj = [[] for _ in range(m)]
    for p, q in g.edges:
        adj[p].append(q)
        adj[q].append(p)
    seen = [False] * m
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == m


def oracle_is_unilateral(g: WoodGraph) -> bool:
    """Transitive closure of the increasing orientation; each pair must be joined one way.

    Reachability sets are bitsets built in reverse topological order
    (vertex indices are already a topological order since every edge
    points upward).
    """
    m = g.vertex_count
    succ = [[] for _ in range(m)]
    for p, q in g.edges:
        succ[p].append(q)
    reach = [0] * m
    for p in range(m - 1, -1, -1):
        r = 1 << p
        for q in succ[p]:
            r |= reach[q]
        reach[p] = r
    for p in range(m):
        for q in range(p + 1, m):
            if not ((reach[p] >> q) & 1 or (reach[q] >> p) & 1):
                return False
    return True
