"""Girth, Menger path counts, vertex connectivity and hypothesis checks."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, is_complete, is_connected, is_k_regular, min_degree

INF = math.inf


def girth(G: Graph) -> int | float:
    """Length of a shortest cycle, ``INF`` for forests.

    BFS from every root; a non-tree edge ``(u, w)`` met from ``u`` closes a
    closed walk of length ``d[u] + d[w] + 1`` through the root, and the
    minimum over all roots of these lengths is the girth.
    """
    best = INF
    n = G.n
    adj = G.adj
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


class _UnitFlow:
    """Vertex-split digraph: ``v_in = 2v``, ``v_out = 2v + 1``, all capacities 1."""

    def __init__(self, G: Graph, x: int, y: int):
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(2 * G.n)]
        for v in range(G.n):
            if v not in (x, y):
                self._arc(2 * v, 2 * v + 1)
        for u, v in G.edges():
            self._arc(2 * u + 1, 2 * v)
            self._arc(2 * v + 1, 2 * u)
        self.source = 2 * x + 1
        self.sink = 2 * y

    def _arc(self, a: int, b: int) -> None:
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(1)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)

    def augment(self) -> bool:
        prev_arc = {self.source: -1}
        queue = deque([self.source])
        head, cap, out, sink = self.head, self.cap, self.out, self.sink
        while queue:
            a = queue.popleft()
            for e in out[a]:
                b = head[e]
                if cap[e] and b not in prev_arc:
                    prev_arc[b] = e
                    if b == sink:
                        while b != self.source:
                            e = prev_arc[b]
                            cap[e] -= 1
                            cap[e ^ 1] += 1
                            b = head[e ^ 1]
                        return True
                    queue.append(b)
        return False


def max_internally_disjoint_paths(G: Graph, x: int, y: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint x-y paths for non-adjacent x, y.

    With ``limit`` the augmentation stops once ``limit`` paths are found;
    the return value is then ``min(true value, limit)``.
    """
    if x == y:
        raise GraphError("endpoints must differ")
    if G.has_edge(x, y):
        raise GraphError(f"endpoints {x} and {y} are adjacent")
    flow = _UnitFlow(G, x, y)
    count = 0
    while (limit is None or count < limit) and flow.augment():
        count += 1
    return count


def vertex_connectivity(G: Graph) -> int:
    """kappa(G): minimum vertex-cut size, ``n - 1`` for complete graphs, 0 if disconnected.

    Fix a minimum-degree vertex u.  If some minimum cut S misses u, a vertex
    on the far side of S is non-adjacent to u.  Otherwise u is in S and, as
    ``deg(u) > |S| - 1``, some neighbour w of u survives; any vertex of
    another component of G - S is non-adjacent to w.  Hence flows from u and
    from each neighbour of u to their non-neighbours suffice.
    """
    n = G.n
    if n <= 1:
        return 0
    if not is_connected(G):
        return 0
    if is_complete(G):
        return n - 1
    u = min(range(n), key=lambda v: (len(G.adj[v]), v))
    best = len(G.adj[u])
    for s in (u, *G.adj[u]):
        closed = G.masks[s] | (1 << s)
        for t in range(n):
            if not (closed >> t) & 1:
                best = min(best, max_internally_disjoint_paths(G, s, t, limit=best))
                if best == 0:
                    return 0
    return best


@dataclass(frozen=True)
class HypothesisReport:
    n: int
    k: int | None
    delta: int
    kappa: int
    girth: int | float
    maximally_connected: bool
    qualifies_for_g: int | None

    def as_row(self) -> dict:
        return {
            "n": self.n,
            "k": "-" if self.k is None else self.k,
            "delta": self.delta,
            "kappa": self.kappa,
            "girth": "inf" if self.girth == INF else self.girth,
            "maximally_connected": self.maximally_connected,
            "qualifies_for_g": "-" if self.qualifies_for_g is None else self.qualifies_for_g,
        }


def qualifying_g(k: int | None, maximally_connected: bool, girth_value) -> int | None:
    """Largest g in 0..3 with k >= 2, kappa = delta and girth >= g + 4."""
    if k is None or k < 2 or not maximally_connected:
        return None
    for g in (3, 2, 1, 0):
        if girth_value >= g + 4:
            return g
    return None


def hypothesis_report(G: Graph) -> HypothesisReport:
    k = is_k_regular(G)
    delta = min_degree(G)
    kappa = vertex_connectivity(G)
    gv = girth(G)
    maxcon = kappa == delta
    return HypothesisReport(G.n, k, delta, kappa, gv, maxcon, qualifying_g(k, maxcon, gv))


def vertex_count_lower_bound(k: int, girth_value: int) -> int:
    """Order bound ``(girth - 2)(k - 1) + 2`` for k-regular graphs of girth >= 5."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if girth_value == INF or girth_value < 5:
        raise ValueError(f"need finite girth >= 5, got {girth_value}")
    return (girth_value - 2) * (k - 1) + 2
