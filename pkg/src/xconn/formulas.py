"""Closed-form values for strong products of regular, maximally connected factors.

All evaluators are exact integer arithmetic.  Hypothesis checks (k >= 2,
girth bounds, range of g) emit :class:`HypothesisWarning` by default; pass
``strict=True`` to turn them into :class:`HypothesisError`.
"""

from __future__ import annotations

import warnings
from math import isqrt


class HypothesisWarning(UserWarning):
    pass


class HypothesisError(ValueError):
    pass


def ceil_sqrt(x: int) -> int:
    if x < 0:
        raise ValueError("negative argument")
    return 0 if x == 0 else isqrt(x - 1) + 1


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _guard(ok: bool, message: str, strict: bool) -> None:
    if ok:
        return
    if strict:
        raise HypothesisError(message)
    warnings.warn(message, HypothesisWarning, stacklevel=3)


def _check_degrees(k1, k2, strict):
    _guard(k1 >= 2 and k2 >= 2, f"need k1, k2 >= 2, got ({k1}, {k2})", strict)


def _check_girths(min_girth, girth1, girth2, strict):
    for gi in (girth1, girth2):
        if gi is not None:
            _guard(gi >= min_girth, f"need factor girth >= {min_girth}, got {gi}", strict)


def kappa0_strong(k1: int, k2: int, girth1=None, girth2=None, strict=False) -> int:
    _check_degrees(k1, k2, strict)
    _check_girths(4, girth1, girth2, strict)
    return k1 * k2 + k1 + k2


def kappa1_strong(k1: int, k2: int, girth1=None, girth2=None, strict=False) -> int:
    _check_degrees(k1, k2, strict)
    _check_girths(5, girth1, girth2, strict)
    return min(2 * k1 * k2 + 2 * k1 - 2, 2 * k1 * k2 + 2 * k2 - 2)


def kappa2_strong(k1: int, k2: int, girth1=None, girth2=None, strict=False) -> int:
    _check_degrees(k1, k2, strict)
    _check_girths(6, girth1, girth2, strict)
    return min(3 * k1 * k2 + 3 * k1 - k2 - 4, 3 * k1 * k2 - k1 + 3 * k2 - 4)


def kappa3_strong(k1: int, k2: int, girth1=None, girth2=None, strict=False) -> int:
    _check_degrees(k1, k2, strict)
    _check_girths(7, girth1, girth2, strict)
    return min(4 * k1 * k2 + 4 * k1 - 2 * k2 - 6,
               4 * k1 * k2 - 2 * k1 + 4 * k2 - 6,
               4 * k1 * k2 - 4)


_KAPPA_BY_G = {0: kappa0_strong, 1: kappa1_strong, 2: kappa2_strong, 3: kappa3_strong}


def kappa_strong(g: int, k1: int, k2: int, girth1=None, girth2=None, strict=False) -> int:
    """Closed-form kappa_g of the strong product for g in 0..3."""
    try:
        f = _KAPPA_BY_G[g]
    except KeyError:
        raise HypothesisError(f"no closed form for g={g}") from None
    return f(k1, k2, girth1, girth2, strict)


def layer_path_terms(g: int, k1: int, k2: int) -> tuple[int, int]:
    """Boundary sizes of a (g+1)-vertex path inside a G1-layer and a G2-layer.

    For girth >= g + 4 the closed neighbourhood of a (g+1)-path in a
    k-regular factor has ``(g+1)(k-2) + 2 + (g+1)`` vertices, and the
    closed neighbourhood of the layer path is its product with a closed
    vertex neighbourhood of the other factor.
    """
    def closed_path(k):
        return (g + 1) * (k - 1) + 2

    return (closed_path(k1) * (k2 + 1) - (g + 1),
            closed_path(k2) * (k1 + 1) - (g + 1))


def block_term(k1: int, k2: int) -> int:
    """Boundary size of a 2x2 block over an edge of each factor."""
    return (2 * k1) * (2 * k2) - 4


def _shared(g, k1, k2):
    return (g + 1) * (k1 * k2 - k1 - k2)


def M1(g: int, k1: int, k2: int) -> int:
    lo, hi = min(k1, k2), max(k1, k2)
    return _shared(g, k1, k2) + 2 * (g + 1) * (lo - 1) + 2 * (hi - 1) + 4


def M2(g: int, k1: int, k2: int) -> int:
    lo, hi = min(k1, k2), max(k1, k2)
    r = ceil_sqrt(g + 1)
    return _shared(g, k1, k2) + 2 * r * (lo - 1) + 2 * _ceil_div(g + 1, r) * (hi - 1) + 4


def M(g: int, k1: int, k2: int, strict=False) -> int:
    _guard(g >= 0, f"need g >= 0, got {g}", True)
    _guard(1 <= g <= 3, f"M(g, k1, k2) is only proven for 1 <= g <= 3, got g={g}", strict)
    _check_degrees(k1, k2, strict)
    return min(M1(g, k1, k2), M2(g, k1, k2))


def cycle_product_bound(m: int, n: int) -> int:
    """Largest g for which the cycle-product formula is claimed."""
    return max(n * ((m - 2) // 2) - 1, m * ((n - 1) // 2) - 1)


def cycle_product_formula(g: int, m: int, n: int, strict=False) -> int:
    """kappa_g(C_m strong C_n) = min{2m, 2n, 2*ceil(2*sqrt(g+1)) + 4}."""
    _guard(m >= 3 and n >= 3, f"cycles need length >= 3, got ({m}, {n})", True)
    _guard(g <= cycle_product_bound(m, n),
           f"g={g} exceeds the proven range {cycle_product_bound(m, n)} for ({m}, {n})", strict)
    # 2*sqrt(g+1) = sqrt(4(g+1))
    return min(2 * m, 2 * n, 2 * ceil_sqrt(4 * (g + 1)) + 4)


def cartesian_kappa1(k1: int, k2: int, girth1=None, girth2=None, strict=False) -> int:
    _check_degrees(k1, k2, strict)
    _check_girths(4, girth1, girth2, strict)
    return 2 * k1 + 2 * k2 - 2


def cartesian_kappa2(k1: int, k2: int, girth1=None, girth2=None, strict=False) -> int:
    _check_degrees(k1, k2, strict)
    _check_girths(5, girth1, girth2, strict)
    return 3 * k1 + 3 * k2 - 5


def diagnosability_formula(g: int, k1: int, k2: int, girth1=None, girth2=None, strict=False) -> int:
    """Extra conditional diagnosability under PMC: M(g, k1, k2) + g."""
    _check_girths(g + 4, girth1, girth2, strict)
    return M(g, k1, k2, strict=strict) + g


FORMULA_NAMES = ("kappa", "M", "M1", "M2", "diag", "cycle")


def formula_table(g: int, k1: int, k2: int, which=None) -> list[tuple[str, int]]:
    """Labelled values for the CLI; ``cycle`` reads k1, k2 as cycle lengths."""
    rows = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisWarning)
        for name in which or FORMULA_NAMES:
            if name == "kappa":
                rows.append((f"kappa_{g}(strong)", kappa_strong(g, k1, k2)))
            elif name == "M":
                rows.append(("M", M(g, k1, k2)))
            elif name == "M1":
                rows.append(("M1", M1(g, k1, k2)))
            elif name == "M2":
                rows.append(("M2", M2(g, k1, k2)))
            elif name == "diag":
                rows.append(("diagnosability", diagnosability_formula(g, k1, k2)))
            elif name == "cycle":
                if k1 >= 3 and k2 >= 3:
                    rows.append((f"cycle(C{k1},C{k2})", cycle_product_formula(g, k1, k2)))
            else:
                raise ValueError(f"unknown formula {name!r}")
    return rows
