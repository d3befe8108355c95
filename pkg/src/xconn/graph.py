"""Simple undirected graphs over dense integer ids.

Vertex sets are plain ``frozenset`` objects; the search routines work on
integer bitmasks (bit ``v`` set iff vertex ``v`` is a member) and convert at
the boundary with :func:`to_mask` / :func:`from_mask`.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph input: bad ids, loops, duplicate edges."""


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``; ``masks[v]`` is the
    same neighbourhood as a bitmask.
    """

    __slots__ = ("n", "adj", "masks", "name", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], name: str = ""):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(tuple(sorted(s)) for s in nbrs))
        object.__setattr__(self, "masks", tuple(to_mask(s) for s in nbrs))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_m", m)

    def __setattr__(self, key, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, tuple(self.edges()), self.name))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self._m}>"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self.adj):
            for v in nb:
                if u < v:
                    yield u, v

    def degree(self, u: int) -> int:
        return len(self.adj[self._check(u)])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[self._check(u)] >> self._check(v)) & 1 == 1

    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def _check(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise GraphError(f"vertex {u} out of range for n={self.n}")
        return u

    def check_set(self, vertices: Iterable[int]) -> frozenset[int]:
        s = frozenset(vertices)
        for v in s:
            self._check(v)
        return s

    def induced_edges(self, vertices: Iterable[int]) -> set[tuple[int, int]]:
        s = self.check_set(vertices)
        return {(u, v) for u in s for v in self.adj[u] if u < v and v in s}

    def validate(self) -> None:
        """Re-check loop-freeness and symmetry of the stored adjacency."""
        for u, nb in enumerate(self.adj):
            if u in nb:
                raise GraphError(f"self-loop at vertex {u}")
            if len(set(nb)) != len(nb):
                raise GraphError(f"duplicate neighbour at vertex {u}")
            for v in nb:
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric adjacency {u}->{v}")


def neighbors(G: Graph, u: int) -> frozenset[int]:
    return frozenset(G.adj[G._check(u)])


def open_boundary(G: Graph, A: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``A`` that have a neighbour in ``A``."""
    a = to_mask(G.check_set(A))
    return frozenset(from_mask(boundary_mask(G, a)))


def closed_neighborhood(G: Graph, A: Iterable[int]) -> frozenset[int]:
    a = G.check_set(A)
    return open_boundary(G, a) | a


def boundary_mask(G: Graph, a: int) -> int:
    masks = G.masks
    nb = 0
    for v in from_mask(a):
        nb |= masks[v]
    return nb & ~a


def component_masks(G: Graph, removed: int = 0) -> list[int]:
    """Connected components of ``G - removed`` as bitmasks, ordered by least member."""
    masks = G.masks
    remaining = G.all_mask() & ~removed
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in from_mask(frontier):
                grow |= masks[v]
            frontier = grow & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def components(G: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    r = to_mask(G.check_set(removed))
    return [frozenset(from_mask(c)) for c in component_masks(G, r)]


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = [False] * G.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in G.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == G.n


def is_complete(G: Graph) -> bool:
    return all(len(nb) == G.n - 1 for nb in G.adj)


def is_k_regular(G: Graph) -> int | None:
    degs = {len(nb) for nb in G.adj}
    return degs.pop() if len(degs) == 1 else None


def min_degree(G: Graph) -> int:
    return min((len(nb) for nb in G.adj), default=0)


# -- generators -------------------------------------------------------------

def cycle(m: int) -> Graph:
    """Cycle ``C_m`` with edges ``i ~ i+1 (mod m)``."""
    if m < 3:
        raise GraphError(f"cycle needs m >= 3, got {m}")
    return Graph(m, ((i, (i + 1) % m) for i in range(m)), name=f"cycle:{m}")


def path(m: int) -> Graph:
    """Path ``P_m`` on ``m`` vertices, edges ``i ~ i+1``."""
    if m < 1:
        raise GraphError(f"path needs m >= 1, got {m}")
    return Graph(m, ((i, i + 1) for i in range(m - 1)), name=f"path:{m}")


def complete(m: int) -> Graph:
    if m < 1:
        raise GraphError(f"complete needs m >= 1, got {m}")
    return Graph(m, ((i, j) for i in range(m) for j in range(i + 1, m)), name=f"complete:{m}")


# -- edge-list text format --------------------------------------------------

def read_edge_list(text: str, name: str = "") -> Graph:
    """Parse ``p <n> <m>`` followed by ``m`` lines ``e <u> <v>`` (u < v)."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None or len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {raw!r}") from None
        elif parts[0] == "e":
            if header is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed edge {raw!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed edge {raw!r}") from None
            if u == v:
                raise GraphError(f"line {lineno}: self-loop at vertex {u}")
            if not 0 <= u < v < header[0]:
                raise GraphError(f"line {lineno}: need 0 <= u < v < n, got {u} {v}")
            edges.append((u, v))
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if header is None:
        raise GraphError("missing 'p <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges, name=name)


def write_edge_list(G: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {G.n} {G.m}")
    lines.extend(f"e {u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"
