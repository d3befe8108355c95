"""Named cubic graphs stored as literal edge data.

Numbering:

* petersen -- outer 5-cycle 0..4, spokes ``i ~ i+5``, inner pentagram
  ``5+i ~ 5+(i+2) % 5``.
* heawood -- Hamiltonian cycle 0..13 plus chords from LCF notation [5, -5]^7.
* mcgee -- Hamiltonian cycle 0..23 plus chords from LCF notation [12, 7, -7]^8.

Every constructor re-checks regularity and girth before returning, so a typo
in the tables cannot leak into a verification run.
"""

from .graph import Graph, GraphError, is_k_regular

PETERSEN_EDGES = (
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8),
    (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
)

HEAWOOD_EDGES = (
    (0, 1), (0, 5), (0, 13), (1, 2), (1, 10), (2, 3), (2, 7), (3, 4),
    (3, 12), (4, 5), (4, 9), (5, 6), (6, 7), (6, 11), (7, 8), (8, 9),
    (8, 13), (9, 10), (10, 11), (11, 12), (12, 13),
)

MCGEE_EDGES = (
    (0, 1), (0, 12), (0, 23), (1, 2), (1, 8), (2, 3), (2, 19), (3, 4),
    (3, 15), (4, 5), (4, 11), (5, 6), (5, 22), (6, 7), (6, 18), (7, 8),
    (7, 14), (8, 9), (9, 10), (9, 21), (10, 11), (10, 17), (11, 12),
    (12, 13), (13, 14), (13, 20), (14, 15), (15, 16), (16, 17), (16, 23),
    (17, 18), (18, 19), (19, 20), (20, 21), (21, 22), (22, 23),
)

# name -> (edges, n, degree, girth)
_TABLE = {
    "petersen": (PETERSEN_EDGES, 10, 3, 5),
    "heawood": (HEAWOOD_EDGES, 14, 3, 6),
    "mcgee": (MCGEE_EDGES, 24, 3, 7),
}

NAMES = tuple(_TABLE)


def named_graph(name: str) -> Graph:
    from .invariants import girth

    try:
        edges, n, k, g = _TABLE[name]
    except KeyError:
        raise GraphError(f"unknown named graph {name!r}") from None
    G = Graph(n, edges, name=name)
    if is_k_regular(G) != k or girth(G) != g:
        raise GraphError(f"embedded data for {name} failed its self-check")
    return G


def petersen() -> Graph:
    return named_graph("petersen")


def heawood() -> Graph:
    return named_graph("heawood")


def mcgee() -> Graph:
    return named_graph("mcgee")
