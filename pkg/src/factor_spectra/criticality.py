"""Deficiency characterizations of factor criticality, with certificates.

A graph G is (a, b, k)-critical when G - K has an [a, b]-factor for every
K of exactly k vertices; fractionally so when G - K always has a
fractional [a, b]-factor; (r, k)-critical when r-factors are required.
Each notion has an exact finite test:

* integral (needs b > a): for every S with |S| >= k, writing
  T = {x not in S : d_{G-S}(x) <= a-1},
      a|T| - sum_{x in T} d_{G-S}(x) <= b|S| - bk.
* fractional (b >= a allowed): with threshold a instead of a-1,
      b|S| - a|T| + sum_{x in T} d_{G-S}(x) >= bk.
* parity (r >= 2, covers a = b = r): for all disjoint X, Y with |X| >= k,
      r|X| - r|Y| + sum_{v in Y} d_{G-X}(v) - h(X, Y) >= rk,
  where h counts components C of G - (X u Y) with r|V(C)| + e(Y, C) odd.
  X = Y = emptyset is a legal pair when k = 0 and contributes the plain
  parity test on G itself.

Deciders sweep candidate sets in increasing size, then lexicographic
order, and return the first violating set as a DeficiencyCertificate
(deficiency = the amount by which the inequality fails; violating iff
> 0), so certificates are deterministic and minimal in that order.  A
returned None means critical.  `critical_by_definition` is the
independent brute-force route used to cross-validate the deciders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .factors import find_ab_factor, find_fractional_factor
from .graphs import Graph

SUBSET_SWEEP_CAP = 20
PAIR_SWEEP_CAP = 12


@dataclass(frozen=True)
class FactorParams:
    """Window [a, b] and deletion count k for criticality questions."""

    a: int
    b: int
    k: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"need a >= 1, got a={self.a}")
        if self.b < self.a:
            raise ValueError(f"need b >= a, got a={self.a}, b={self.b}")
        if self.k < 0:
            raise ValueError(f"need k >= 0, got k={self.k}")


@dataclass(frozen=True)
class DeficiencyCertificate:
    """A violating set (or pair) together with the deficiency it attains.

    kind "integral"/"fractional": s_set is the deleted set S, t_set the
    induced low-degree set T.  kind "parity": s_set is X, t_set is Y.
    Re-evaluating the matching deficiency function on (graph, sets) must
    reproduce `deficiency` exactly; `violating` iff deficiency > 0.
    """

    kind: str
    s_set: tuple[int, ...]
    t_set: tuple[int, ...]
    deficiency: int

    @property
    def violating(self) -> bool:
        return self.deficiency > 0

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "s_set": list(self.s_set),
            "t_set": list(self.t_set),
            "deficiency": self.deficiency,
        }

    @staticmethod
    def from_json(d: dict) -> "DeficiencyCertificate":
        if d["kind"] not in ("integral", "fractional", "parity"):
            raise ValueError(f"unknown certificate kind {d['kind']!r}")
        return DeficiencyCertificate(
            kind=d["kind"],
            s_set=tuple(d["s_set"]),
            t_set=tuple(d["t_set"]),
            deficiency=int(d["deficiency"]),
        )


def _mask_of(g: Graph, vertices) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        if m >> v & 1:
            raise ValueError(f"vertex {v} listed twice")
        m |= 1 << v
    return m


def low_degree_set(g: Graph, s_set, max_degree: int) -> tuple[int, ...]:
    """Vertices outside S whose degree into G - S is <= max_degree."""
    s_mask = _mask_of(g, s_set)
    keep = ~s_mask
    return tuple(
        v
        for v in range(g.n)
        if not s_mask >> v & 1 and (g.adj[v] & keep).bit_count() <= max_degree
    )


# -- deficiencies --------------------------------------------------------------


def integral_deficiency(g: Graph, s_set, params: FactorParams) -> int:
    """a|T| - sum_T d_{G-S} - b|S| + bk with T at threshold a-1.
    Positive iff S witnesses that G is not (a, b, k)-critical."""
    a, b, k = params.a, params.b, params.k
    if b <= a:
        raise ValueError("integral deficiency needs b > a; for a == b use the parity route")
    s_mask = _mask_of(g, s_set)
    s_size = s_mask.bit_count()
    if s_size < k:
        raise ValueError(f"|S| = {s_size} below k = {k}")
    return _integral_deficiency_mask(g.adj, g.n, s_mask, s_size, a, b, k)


def _integral_deficiency_mask(adj, n, s_mask, s_size, a, b, k) -> int:
    keep = ~s_mask
    t_cnt = 0
    t_sum = 0
    rest = ((1 << n) - 1) & keep
    while rest:
        bit = rest & -rest
        v = bit.bit_length() - 1
        rest ^= bit
        d = (adj[v] & keep).bit_count()
        if d <= a - 1:
            t_cnt += 1
            t_sum += d
    return a * t_cnt - t_sum - b * (s_size - k)


def integral_deficiency_histogram(g: Graph, s_set, params: FactorParams) -> int:
    """The same deficiency computed from the degree histogram of G - S:
    sum_{j=0}^{a-1} (a - j) p_j - b|S| + bk where p_j counts vertices of
    degree exactly j in G - S."""
    a, b, k = params.a, params.b, params.k
    if b <= a:
        raise ValueError("integral deficiency needs b > a; for a == b use the parity route")
    s_mask = _mask_of(g, s_set)
    s_size = s_mask.bit_count()
    if s_size < k:
        raise ValueError(f"|S| = {s_size} below k = {k}")
    keep = ~s_mask
    hist = [0] * a
    for v in range(g.n):
        if s_mask >> v & 1:
            continue
        d = (g.adj[v] & keep).bit_count()
        if d < a:
            hist[d] += 1
    return sum((a - j) * hist[j] for j in range(a)) - b * (s_size - k)


def fractional_deficiency(g: Graph, s_set, params: FactorParams) -> int:
    """bk - (b|S| - a|T| + sum_T d_{G-S}) with T at threshold a.
    Positive iff S witnesses that G is not fractionally (a, b, k)-critical."""
    a, b, k = params.a, params.b, params.k
    s_mask = _mask_of(g, s_set)
    s_size = s_mask.bit_count()
    if s_size < k:
        raise ValueError(f"|S| = {s_size} below k = {k}")
    return _fractional_deficiency_mask(g.adj, g.n, s_mask, s_size, a, b, k)


def _fractional_deficiency_mask(adj, n, s_mask, s_size, a, b, k) -> int:
    keep = ~s_mask
    t_cnt = 0
    t_sum = 0
    rest = ((1 << n) - 1) & keep
    while rest:
        bit = rest & -rest
        v = bit.bit_length() - 1
        rest ^= bit
        d = (adj[v] & keep).bit_count()
        if d <= a:
            t_cnt += 1
            t_sum += d
    return b * k - (b * s_size - a * t_cnt + t_sum)


def count_odd_components(g: Graph, x_set, y_set, r: int) -> int:
    """Components C of G - (X u Y) with r|V(C)| + e_G(Y, V(C)) odd."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    x_mask = _mask_of(g, x_set)
    y_mask = _mask_of(g, y_set)
    if x_mask & y_mask:
        raise ValueError("X and Y must be disjoint")
    return _count_odd_components_mask(g.adj, g.n, x_mask, y_mask, r)


def _count_odd_components_mask(adj, n, x_mask, y_mask, r) -> int:
    rest = ((1 << n) - 1) & ~(x_mask | y_mask)
    odd = 0
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            acc = 0
            m = frontier
            while m:
                bit = m & -m
                acc |= adj[bit.bit_length() - 1]
                m ^= bit
            frontier = acc & rest & ~comp
            comp |= frontier
        rest &= ~comp
        edges_to_y = 0
        m = comp
        while m:
            bit = m & -m
            edges_to_y += (adj[bit.bit_length() - 1] & y_mask).bit_count()
            m ^= bit
        if (r * comp.bit_count() + edges_to_y) & 1:
            odd += 1
    return odd


def parity_deficiency(g: Graph, x_set, y_set, r: int, k: int) -> int:
    """rk - (r|X| - r|Y| + sum_{v in Y} d_{G-X}(v) - h(X, Y)).
    Positive iff (X, Y) witnesses that G is not (r, k)-critical."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    x_mask = _mask_of(g, x_set)
    y_mask = _mask_of(g, y_set)
    if x_mask & y_mask:
        raise ValueError("X and Y must be disjoint")
    if x_mask.bit_count() < k:
        raise ValueError(f"|X| = {x_mask.bit_count()} below k = {k}")
    h = _count_odd_components_mask(g.adj, g.n, x_mask, y_mask, r)
    deg_sum = 0
    m = y_mask
    while m:
        bit = m & -m
        deg_sum += (g.adj[bit.bit_length() - 1] & ~x_mask).bit_count()
        m ^= bit
    return r * k - (
        r * x_mask.bit_count() - r * y_mask.bit_count() + deg_sum - h
    )


# -- subset sweep order --------------------------------------------------------

_subset_order_cache: dict[tuple[int, int], list[tuple[int, tuple[int, ...]]]] = {}


def _subsets_by_size(n: int, min_size: int) -> list[tuple[int, tuple[int, ...]]]:
    """(mask, tuple) for every subset of range(n) with size >= min_size,
    increasing size then lexicographic within a size."""
    key = (n, min_size)
    cached = _subset_order_cache.get(key)
    if cached is None:
        cached = []
        for size in range(min_size, n + 1):
            for combo in itertools.combinations(range(n), size):
                m = 0
                for v in combo:
                    m |= 1 << v
                cached.append((m, combo))
        _subset_order_cache[key] = cached
    return cached


# -- deciders -------------------------------------------------------------------


def is_abk_critical(
    g: Graph, params: FactorParams, cap: int = SUBSET_SWEEP_CAP
) -> DeficiencyCertificate | None:
    """None iff G is (a, b, k)-critical; else the first violating S (by
    size, then lex) as an integral certificate.  Needs b > a and
    n >= a + k + 1; every S with |S| >= k is enumerated, so n is capped."""
    a, b, k = params.a, params.b, params.k
    if a == b:
        raise ValueError(
            "integral characterization needs b > a; for a == b == r use is_rk_critical"
        )
    if g.n < a + k + 1:
        raise ValueError(f"need n >= a + k + 1 = {a + k + 1}, got n={g.n}")
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds the sweep cap {cap}")
    adj = g.adj
    n = g.n
    for s_mask, combo in _subsets_by_size(n, k):
        d = _integral_deficiency_mask(adj, n, s_mask, len(combo), a, b, k)
        if d > 0:
            return DeficiencyCertificate(
                kind="integral",
                s_set=combo,
                t_set=low_degree_set(g, combo, a - 1),
                deficiency=d,
            )
    return None


def is_fractional_abk_critical(
    g: Graph, params: FactorParams, cap: int = SUBSET_SWEEP_CAP
) -> DeficiencyCertificate | None:
    """None iff G is fractionally (a, b, k)-critical; else the first
    violating S as a fractional certificate.  Allows a == b."""
    a, b, k = params.a, params.b, params.k
    if g.n < a + k + 1:
        raise ValueError(f"need n >= a + k + 1 = {a + k + 1}, got n={g.n}")
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds the sweep cap {cap}")
    adj = g.adj
    n = g.n
    for s_mask, combo in _subsets_by_size(n, k):
        d = _fractional_deficiency_mask(adj, n, s_mask, len(combo), a, b, k)
        if d > 0:
            return DeficiencyCertificate(
                kind="fractional",
                s_set=combo,
                t_set=low_degree_set(g, combo, a),
                deficiency=d,
            )
    return None


def is_rk_critical(
    g: Graph, r: int, k: int, cap: int = PAIR_SWEEP_CAP
) -> DeficiencyCertificate | None:
    """None iff G is (r, k)-critical (r-factor after every k-deletion);
    else the first violating disjoint pair (X, Y), X by size/lex, then Y
    by size/lex, as a parity certificate.

    A whole |Y| = l slice is skipped when a sound bound already proves it
    clean: sum over Y of (d_{G-X}(v) - r) is at least the sum of the l
    smallest such values, and h(X, Y) is at most max(0, n - |X| - l), so
    a nonnegative lower bound on the surplus rules out every Y of that
    size.  Exactness and first-violation order are unaffected.
    """
    if r < 2:
        raise ValueError(f"parity characterization needs r >= 2, got r={r}")
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    if g.n < r + k + 1:
        raise ValueError(f"need n >= r + k + 1 = {r + k + 1}, got n={g.n}")
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds the pair sweep cap {cap}")
    adj = g.adj
    n = g.n
    rk = r * k
    for x_mask, x_combo in _subsets_by_size(n, k):
        x_size = len(x_combo)
        keep = ~x_mask
        rest = [v for v in range(n) if not x_mask >> v & 1]
        margins = sorted((adj[v] & keep).bit_count() - r for v in rest)
        prefix = [0]
        for mv in margins:
            prefix.append(prefix[-1] + mv)
        base = r * (x_size - k)
        for l in range(len(rest) + 1):
            hcap = max(0, n - x_size - l)
            if base + prefix[l] - hcap >= 0:
                continue
            for y_combo in itertools.combinations(rest, l):
                y_mask = 0
                deg_sum = 0
                for v in y_combo:
                    y_mask |= 1 << v
                    deg_sum += (adj[v] & keep).bit_count()
                h = _count_odd_components_mask(adj, n, x_mask, y_mask, r)
                surplus = base + deg_sum - r * l - h
                if surplus < 0:
                    return DeficiencyCertificate(
                        kind="parity",
                        s_set=x_combo,
                        t_set=y_combo,
                        deficiency=-surplus,
                    )
    return None


# -- definitional route ---------------------------------------------------------


def critical_by_definition(g: Graph, params: FactorParams, mode: str) -> bool:
    """Brute force straight from the definition: try every deletion set K
    of size exactly k and ask the witness oracle for an [a, b]-factor
    (mode "integral") or fractional one (mode "fractional") of G - K.
    Independent of the deficiency machinery."""
    if mode not in ("integral", "fractional"):
        raise ValueError(f"mode must be integral or fractional, got {mode!r}")
    oracle = find_ab_factor if mode == "integral" else find_fractional_factor
    for kill in itertools.combinations(range(g.n), params.k):
        if oracle(g.delete_vertices(kill), params.a, params.b) is None:
            return False
    return True


def recheck_certificate(
    g: Graph,
    cert: DeficiencyCertificate,
    *,
    params: FactorParams | None = None,
    r: int | None = None,
    k: int | None = None,
) -> bool:
    """True iff re-evaluating the certificate's deficiency from scratch
    reproduces the stored value and it is violating.  Integral/fractional
    certificates need params; parity ones need r and k."""
    if cert.kind == "integral":
        if params is None:
            raise ValueError("integral certificate needs params")
        value = integral_deficiency(g, cert.s_set, params)
        t_ok = cert.t_set == low_degree_set(g, cert.s_set, params.a - 1)
    elif cert.kind == "fractional":
        if params is None:
            raise ValueError("fractional certificate needs params")
        value = fractional_deficiency(g, cert.s_set, params)
        t_ok = cert.t_set == low_degree_set(g, cert.s_set, params.a)
    elif cert.kind == "parity":
        if r is None or k is None:
            raise ValueError("parity certificate needs r and k")
        value = parity_deficiency(g, cert.s_set, cert.t_set, r, k)
        t_ok = True
    else:
        raise ValueError(f"unknown certificate kind {cert.kind!r}")
    return t_ok and value == cert.deficiency and cert.violating
