"""Set-level PMC diagnosis checks.

Fault sets R1 != R2 are distinguishable iff some edge joins a vertex outside
``R1 | R2`` to a vertex of ``R1 ^ R2``.  A fault set F is *admissible* for
g-extra conditional diagnosis when ``G - F`` is nonempty and each of its
components has more than g vertices; ``strict=True`` additionally demands
that ``G - F`` be disconnected, i.e. that F itself be a g-extra cut.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, GraphError, boundary_mask, component_masks, from_mask, is_k_regular, to_mask
from .extra import WorkLimitExceeded, is_g_extra_cut

SAMPLE_CHUNK = 50_000


@dataclass(frozen=True)
class FaultSetPair:
    R1: frozenset[int]
    R2: frozenset[int]
    distinguishable: bool
    boundary_witness: tuple[int, int] | None = None


@dataclass(frozen=True)
class DiagnosabilityVerdict:
    t: int
    g: int
    holds: bool
    mode: str  # "exhaustive" or "sampled"
    pairs_checked: int
    counterexample: FaultSetPair | None = None
    seed: int | None = None

    @property
    def conclusive(self) -> bool:
        """Sampled runs can refute but never confirm."""
        return self.mode == "exhaustive" or not self.holds


def _distinguish_masks(G: Graph, r1: int, r2: int) -> tuple[int, int] | None:
    delta = r1 ^ r2
    outside = boundary_mask(G, delta) & ~(r1 | r2)
    if not outside:
        return None
    u = (outside & -outside).bit_length() - 1
    v = (G.masks[u] & delta & -(G.masks[u] & delta)).bit_length() - 1
    return u, v


def is_distinguishable(G: Graph, R1, R2) -> FaultSetPair:
    a, b = G.check_set(R1), G.check_set(R2)
    if a == b:
        raise ValueError("fault sets must differ")
    w = _distinguish_masks(G, to_mask(a), to_mask(b))
    return FaultSetPair(a, b, w is not None, w)


def _admissible_mask(G: Graph, f: int, g: int, strict: bool) -> bool:
    comps = component_masks(G, f)
    if not comps or (strict and len(comps) < 2):
        return False
    return all(c.bit_count() > g for c in comps)


def is_admissible_fault_set(G: Graph, F, g: int, strict: bool = False) -> bool:
    return _admissible_mask(G, to_mask(G.check_set(F)), g, strict)


@dataclass(frozen=True)
class WitnessPair:
    pair: FaultSetPair
    A: frozenset[int]
    F1_admissible: bool
    F2_admissible: bool

    @property
    def certified_upper_bound(self) -> int:
        """No t >= max(|F1|, |F2|) is diagnosable, so the diagnosability is at most this."""
        return max(len(self.pair.R1), len(self.pair.R2)) - 1


def _check_connected_set(G: Graph, A: frozenset[int]) -> None:
    if not A:
        raise GraphError("A must be nonempty")
    a = to_mask(A)
    inside = [c for c in component_masks(G, G.all_mask() & ~a)]
    if len(inside) != 1:
        raise GraphError("G[A] is not connected")


def witness_pair(G: Graph, A, g: int) -> WitnessPair:
    """The indistinguishable pair ``F1 = N(A)``, ``F2 = N[A]`` for a (g+1)-set A."""
    A = G.check_set(A)
    _check_connected_set(G, A)
    if len(A) != g + 1:
        raise GraphError(f"|A| must be g + 1 = {g + 1}, got {len(A)}")
    a = to_mask(A)
    f1 = boundary_mask(G, a)
    if not is_g_extra_cut(G, from_mask(f1), g).valid:
        raise GraphError("N(A) is not a g-extra cut")
    f2 = f1 | a
    w = _distinguish_masks(G, f1, f2)
    pair = FaultSetPair(frozenset(from_mask(f1)), frozenset(from_mask(f2)), w is not None, w)
    return WitnessPair(pair, A, _admissible_mask(G, f1, g, False), _admissible_mask(G, f2, g, False))


def admissible_sets(G: Graph, g: int, t: int, strict: bool = False,
                    max_sets: int = 200_000) -> list[int]:
    total = sum(comb(G.n, s) for s in range(min(t, G.n) + 1))
    if total > max_sets:
        raise WorkLimitExceeded(f"{total} candidate fault sets exceed the guard {max_sets}")
    bits = [1 << v for v in range(G.n)]
    out = []
    for s in range(min(t, G.n) + 1):
        for combo in combinations(bits, s):
            f = sum(combo)
            if _admissible_mask(G, f, g, strict):
                out.append(f)
    return out


def is_t_diagnosable_exhaustive(G: Graph, g: int, t: int, strict: bool = False,
                                max_sets: int = 200_000) -> DiagnosabilityVerdict:
    """Check every pair of distinct admissible fault sets of size at most t."""
    sets = admissible_sets(G, g, t, strict, max_sets)
    checked = 0
    for r1, r2 in combinations(sets, 2):
        checked += 1
        if _distinguish_masks(G, r1, r2) is None:
            ce = FaultSetPair(frozenset(from_mask(r1)), frozenset(from_mask(r2)), False)
            return DiagnosabilityVerdict(t, g, False, "exhaustive", checked, ce)
    return DiagnosabilityVerdict(t, g, True, "exhaustive", checked)


def diagnosability_exhaustive(G: Graph, g: int, strict: bool = False, t_max: int | None = None,
                              max_sets: int = 200_000) -> int:
    """Largest t that passes :func:`is_t_diagnosable_exhaustive` (tiny graphs only)."""
    t_max = G.n if t_max is None else t_max
    best = -1
    for t in range(t_max + 1):
        if not is_t_diagnosable_exhaustive(G, g, t, strict, max_sets).holds:
            break
        best = t
    return best


def _random_connected(G: Graph, rng: random.Random, size: int) -> int:
    v = rng.randrange(G.n)
    a = 1 << v
    for _ in range(size - 1):
        options = list(from_mask(boundary_mask(G, a)))
        if not options:
            break
        a |= 1 << rng.choice(options)
    return a


def _sample_pair(G: Graph, rng: random.Random, t: int, g: int):
    """Half plain random pairs, half pairs built around a connected difference
    whose outer boundary is partly shared, which is where indistinguishable
    pairs live."""
    n = G.n
    if rng.random() < 0.5:
        r1 = to_mask(rng.sample(range(n), rng.randint(0, min(t, n))))
        r2 = to_mask(rng.sample(range(n), rng.randint(0, min(t, n))))
        return r1, r2
    d = _random_connected(G, rng, rng.randint(1, g + 2))
    nb = list(from_mask(boundary_mask(G, d)))
    keep = rng.randint(max(0, len(nb) - 2), len(nb))
    common = to_mask(rng.sample(nb, keep))
    dv = list(from_mask(d))
    cut = rng.randint(0, len(dv))
    rng.shuffle(dv)
    r1 = common | to_mask(dv[:cut])
    r2 = common | to_mask(dv[cut:])
    return r1, r2


def _sample_chunk(args):
    G, g, t, seed, chunk, count, strict = args
    rng = random.Random(f"{seed}:{chunk}")
    checked = 0
    for i in range(count):
        r1, r2 = _sample_pair(G, rng, t, g)
        if r1 == r2 or r1.bit_count() > t or r2.bit_count() > t:
            continue
        if not (_admissible_mask(G, r1, g, strict) and _admissible_mask(G, r2, g, strict)):
            continue
        checked += 1
        if _distinguish_masks(G, r1, r2) is None:
            return checked, (chunk, i, r1, r2)
    return checked, None


def is_t_diagnosable_sampled(G: Graph, g: int, t: int, samples: int, seed: int = 0,
                             strict: bool = False, workers: int = 1) -> DiagnosabilityVerdict:
    """Monte-Carlo refutation attempt.

    The sample stream is cut into fixed chunks, each with its own seeded
    generator, so the verdict does not depend on ``workers``.
    """
    chunks = []
    left = samples
    i = 0
    while left > 0:
        c = min(SAMPLE_CHUNK, left)
        chunks.append((G, g, t, seed, i, c, strict))
        left -= c
        i += 1
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sample_chunk, chunks))
    else:
        results = [_sample_chunk(c) for c in chunks]
    checked = 0
    for count, hit in results:
        checked += count
        if hit is not None:
            _, _, r1, r2 = hit
            ce = FaultSetPair(frozenset(from_mask(r1)), frozenset(from_mask(r2)), False)
            return DiagnosabilityVerdict(t, g, False, "sampled", checked, ce, seed)
    return DiagnosabilityVerdict(t, g, True, "sampled", checked, None, seed)


def theorem41_preconditions(G: Graph, g: int, kappa_g: int, witness_A) -> bool:
    """Hypotheses under which diagnosability equals kappa_g + g for k-regular G.

    G is k-regular with ``0 <= g <= k``, ``n >= 2(kappa_g + g) + 1``, and A is
    a connected (g+1)-set whose boundary is a minimum g-extra cut.
    """
    k = is_k_regular(G)
    if k is None or not 0 <= g <= k:
        return False
    if G.n < 2 * (kappa_g + g) + 1:
        return False
    A = G.check_set(witness_A)
    if len(A) != g + 1:
        return False
    try:
        _check_connected_set(G, A)
    except GraphError:
        return False
    S = boundary_mask(G, to_mask(A))
    return S.bit_count() == kappa_g and is_g_extra_cut(G, from_mask(S), g).valid
