"""Verification battery: every desk-checkable claim behind the toolkit, run live.

Each check re-derives one mathematical fact about the extremal family
F_n^{a,b,k}, the deciders, or the spectral machinery, and returns a
CheckResult that passes, fails with a serialized counterexample, or
reports that the claim's own hypothesis is not met by the requested
parameters.  The hypothesis gate means a vacuous run can never pose as
a pass: asking for the radius bracket below its displayed order bound
yields "hypothesis_not_met", not "pass".

Facts covered:

* radius bracket: once n >= (4a + 2b + ab + (b+2)k)/2 + 1, every member
  of the family has spectral radius strictly between n-b-2 and n-b-1.
* family maximality: once n >= (4a + 2b + ab + (b+2)k)/2 + 2, the
  distinguished member (all a-1 bridge edges on one independent vertex)
  strictly maximizes the radius over the family's degree classes.
* edge-count sharpness: the distinguished member has exactly
  C(n-b-1, 2) + ab + 2a + (b+1)k - 1 edges, one short of the size
  threshold, and is not (a, b, k)-critical; the deleted-clique block
  S = {0, ..., a+k-1} is a violating set of deficiency exactly 1.
* Perron system: on the distinguished member the Perron vector is
  constant on five structural classes and satisfies four explicit linear
  identities, plus a cubic-rational ratio identity between the entry of
  the attached independent vertex and the entry of an untouched one.
* decider cross-validation: the deficiency-sweep deciders agree with
  brute-force factor search after every k-deletion, exhaustively over
  small connected graphs; the two equivalent forms of the integral
  deficiency agree on every (graph, deletion set) pair.
* degree-based radius bound: lambda <= (delta-1)/2 +
  sqrt(2e - n*delta + (delta+1)^2/4) with equality exactly on regular
  and {delta, n-1}-bidegreed graphs, plus monotonicity of the bound
  curve in the minimum-degree argument.
* sharpness targets: at the minimal order each spectral or edge-count
  guarantee allows, the extremal graph meets every hypothesis with
  equality and still fails to be critical, so the excluded-graph clause
  is non-vacuous.
* spectral perturbation suites: deleting edges strictly lowers the
  radius; rotating edges toward a vertex with the larger Perron entry
  strictly raises it.
* conjecture explorer: a budgeted, seeded search at desk scale for a
  connected graph with min degree >= r+k whose radius matches the
  family's yet is neither the extremal graph nor (r, k)-critical.

Fail results carry a self-contained counterexample dict that
revalidate_counterexample() can confirm from serialization alone.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from .criticality import (
    DeficiencyCertificate,
    FactorParams,
    critical_by_definition,
    fractional_deficiency,
    integral_deficiency,
    integral_deficiency_histogram,
    is_abk_critical,
    is_fractional_abk_critical,
    is_rk_critical,
    low_degree_set,
    recheck_certificate,
)
from .families import (
    ExtremalParams,
    enumerate_family,
    extremal_edge_count,
    extremal_graph,
    family_degree_classes,
)
from .graphs import (
    GRAPH6_MAX_N,
    Graph,
    enumerate_graphs,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .spectral import hong_bound, hong_bound_formula, spectral_radius

EIG_TOL = 1e-8
RESIDUAL_TOL = 1e-7
RATIO_TOL = 1e-6
STRICT_MARGIN = 1e-9
PROPERTY_MARGIN = 1e-10
BRACKET_MARGIN = 1e-8
FAMILY_CLASS_CAP = 64
DECIDER_N_CAP = 18
HISTOGRAM_IDENTITY_N_CAP = 5
EXPLORER_N_CAP = 12

SHARPNESS_TARGETS = (
    "spectral-integral",
    "size-integral",
    "spectral-fractional",
    "spectral-fractional-rr",
    "spectral-fractional-general",
)


@dataclass
class CheckResult:
    """Outcome of one verification check.

    status is "pass", "fail", or "hypothesis_not_met".  A fail always
    carries a counterexample dict that is independently re-checkable via
    revalidate_counterexample().  metrics holds named reals/integers
    (radii, residuals, counts) for reporting.
    """

    check_id: str
    params: dict
    status: str
    metrics: dict = field(default_factory=dict)
    counterexample: dict | None = None
    notes: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "status": self.status,
            "metrics": self.metrics,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }


# -- hypothesis-minimal orders ------------------------------------------------


def bracket_min_n(a: int, b: int, k: int) -> int:
    """Smallest n with n >= (4a + 2b + ab + (b+2)k)/2 + 1."""
    num = 4 * a + 2 * b + a * b + (b + 2) * k
    return (num + 1) // 2 + 1


def maximality_min_n(a: int, b: int, k: int) -> int:
    """Smallest n with n >= (4a + 2b + ab + (b+2)k)/2 + 2."""
    num = 4 * a + 2 * b + a * b + (b + 2) * k
    return (num + 1) // 2 + 2


def size_min_n(a: int, b: int, k: int) -> int:
    """Smallest n with n >= 4a + 5b/2 + 4k + 7."""
    return 4 * a + 4 * k + 7 + (5 * b + 1) // 2


def spectral_min_n(a: int, b: int, k: int) -> int:
    """The order bound 2(b + a + k + 2)(b + k + 2) of the spectral
    criticality conditions."""
    return 2 * (b + a + k + 2) * (b + k + 2)


def parity_spectral_min_n(r: int, k: int) -> int:
    """The order bound 2(2r + k + 2)(r + k + 2) of the spectral
    condition for fractional (r, k)-criticality."""
    return 2 * (2 * r + k + 2) * (r + k + 2)


def _require_shape(a: int, b: int, k: int) -> None:
    if a < 1:
        raise ValueError(f"need a >= 1, got a={a}")
    if b < a:
        raise ValueError(f"need b >= a, got a={a}, b={b}")
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")


# -- graph (de)serialization for counterexamples ------------------------------


def serialize_graph(g: Graph) -> dict:
    """Self-contained text form: graph6 when it fits, edge list otherwise."""
    if g.n <= GRAPH6_MAX_N:
        return {"format": "graph6", "data": to_graph6(g)}
    return {"format": "edge-list", "data": to_edge_list(g)}


def deserialize_graph(d: dict) -> Graph:
    if d["format"] == "graph6":
        return parse_graph6(d["data"])
    if d["format"] == "edge-list":
        return parse_edge_list(d["data"])
    raise ValueError(f"unknown graph serialization format {d['format']!r}")


# -- isomorphism (desk scale) --------------------------------------------------


def _joint_refine(g: Graph, h: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Color-refine both graphs against a shared palette.  Returns the
    stable colorings, or None when the color histograms separate the
    graphs (hence not isomorphic)."""
    cg = list(g.degrees())
    ch = list(h.degrees())
    for _ in range(max(g.n, 1)):
        sig_g = [
            (cg[v], tuple(sorted(cg[u] for u in g.neighbors(v)))) for v in range(g.n)
        ]
        sig_h = [
            (ch[v], tuple(sorted(ch[u] for u in h.neighbors(v)))) for v in range(h.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig_g) | set(sig_h)))}
        new_g = [palette[s] for s in sig_g]
        new_h = [palette[s] for s in sig_h]
        if sorted(new_g) != sorted(new_h):
            return None
        stable = len(set(new_g)) == len(set(cg)) and len(set(new_h)) == len(set(ch))
        cg, ch = new_g, new_h
        if stable:
            break
    return tuple(cg), tuple(ch)


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test: color refinement, then class-constrained
    backtracking.  Meant for n <= 12 or so; the family graphs' large
    symmetry classes keep the search shallow."""
    if g.n != h.n:
        return False
    if g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    refined = _joint_refine(g, h)
    if refined is None:
        return False
    cg, ch = refined
    pool: dict[int, list[int]] = {}
    for v, c in enumerate(ch):
        pool.setdefault(c, []).append(v)
    order = sorted(range(g.n), key=lambda v: (len(pool[cg[v]]), cg[v], v))
    image = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in pool[cg[v]]:
            if used[w]:
                continue
            if all(
                g.has_edge(order[j], v) == h.has_edge(image[order[j]], w)
                for j in range(i)
            ):
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return extend(0)


# -- random instances ----------------------------------------------------------


def random_connected_graph(
    rng: random.Random,
    n: int,
    p: float,
    min_degree: int = 1,
    tries: int = 20000,
) -> Graph:
    """Reject-sample an Erdos-Renyi graph until connected with the given
    minimum degree."""
    if n < 1:
        raise ValueError("need n >= 1")
    for _ in range(tries):
        rows = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if g.is_connected() and (n == 1 or g.min_degree() >= min_degree):
            return g
    raise RuntimeError(
        f"no connected graph with min degree {min_degree} found in {tries} tries "
        f"(n={n}, p={p})"
    )


# -- individual checks ----------------------------------------------------------


def check_family_radius_bracket(
    a: int, b: int, k: int, n: int, class_cap: int = FAMILY_CLASS_CAP
) -> CheckResult:
    """Every family member's radius lies strictly inside
    (n-b-2, n-b-1), with 1e-8 margins, once n meets the bracket's own
    order bound.  Falls back to the distinguished member alone when the
    family has more degree classes than class_cap."""
    _require_shape(a, b, k)
    params = {"a": a, "b": b, "k": k, "n": n}
    need = bracket_min_n(a, b, k)
    if n < need:
        return CheckResult(
            "family-radius-bracket",
            params,
            "hypothesis_not_met",
            {"min_n": need},
            notes=f"bracket claim needs n >= {need}, got n={n}",
        )
    fp = ExtremalParams(a, b, k, n)
    classes = family_degree_classes(fp)
    if len(classes) > class_cap:
        members: Iterable[Graph] = [extremal_graph(fp)]
        scope = f"distinguished member only ({len(classes)} classes exceed cap {class_cap})"
    else:
        members = enumerate_family(fp)
        scope = f"all {len(classes)} degree-class representatives"
    lo = float(n - b - 2)
    hi = float(n - b - 1)
    lam_min = math.inf
    lam_max = -math.inf
    count = 0
    for g in members:
        lam = spectral_radius(g).lam
        lam_min = min(lam_min, lam)
        lam_max = max(lam_max, lam)
        count += 1
        if not (lo + BRACKET_MARGIN < lam < hi - BRACKET_MARGIN):
            return CheckResult(
                "family-radius-bracket",
                params,
                "fail",
                {"members_checked": count, "lambda": lam, "lower": lo, "upper": hi},
                counterexample={
                    "kind": "spectral-out-of-interval",
                    "graph": serialize_graph(g),
                    "lower": lo,
                    "upper": hi,
                    "margin": BRACKET_MARGIN,
                    "lambda": lam,
                },
                notes=scope,
            )
    return CheckResult(
        "family-radius-bracket",
        params,
        "pass",
        {
            "members_checked": count,
            "lambda_min": lam_min,
            "lambda_max": lam_max,
            "lower": lo,
            "upper": hi,
        },
        notes=scope,
    )


def check_family_maximality(a: int, b: int, k: int, n: int) -> CheckResult:
    """The distinguished member strictly maximizes the radius over the
    family's degree-class representatives (margin 1e-9) once n meets the
    maximality claim's order bound.  Needs a <= 5 so the class list stays
    small."""
    _require_shape(a, b, k)
    if a > 5:
        raise ValueError(f"family enumeration is capped at a <= 5, got a={a}")
    params = {"a": a, "b": b, "k": k, "n": n}
    need = maximality_min_n(a, b, k)
    if n < need:
        return CheckResult(
            "family-maximality",
            params,
            "hypothesis_not_met",
            {"min_n": need},
            notes=f"maximality claim needs n >= {need}, got n={n}",
        )
    fp = ExtremalParams(a, b, k, n)
    reps = list(enumerate_family(fp))
    distinguished = reps[0]
    lam_f = spectral_radius(distinguished).lam
    if len(reps) == 1:
        return CheckResult(
            "family-maximality",
            params,
            "pass",
            {"classes": 1, "lambda_distinguished": lam_f},
            notes="single-class family, trivially maximal",
        )
    best_rival = -math.inf
    for g in reps[1:]:
        lam = spectral_radius(g).lam
        best_rival = max(best_rival, lam)
        if lam >= lam_f - STRICT_MARGIN:
            return CheckResult(
                "family-maximality",
                params,
                "fail",
                {
                    "classes": len(reps),
                    "lambda_distinguished": lam_f,
                    "lambda_rival": lam,
                },
                counterexample={
                    "kind": "spectral-not-dominated",
                    "graph": serialize_graph(distinguished),
                    "rival": serialize_graph(g),
                    "margin": STRICT_MARGIN,
                },
            )
    return CheckResult(
        "family-maximality",
        params,
        "pass",
        {
            "classes": len(reps),
            "lambda_distinguished": lam_f,
            "lambda_best_rival": best_rival,
            "margin": lam_f - best_rival,
        },
    )


def check_edge_count_sharpness(a: int, b: int, k: int, n: int) -> CheckResult:
    """The distinguished member sits one edge below the size threshold
    C(n-b-1,2) + ab + 2a + (b+1)k and is not (a, b, k)-critical: the
    block S = {0..a+k-1} violates with deficiency exactly 1.  Uses the
    full subset-sweep decider when n is small enough, the fixed
    certificate route otherwise."""
    _require_shape(a, b, k)
    if b <= a:
        raise ValueError(f"integral criticality needs b > a, got a={a}, b={b}")
    params = {"a": a, "b": b, "k": k, "n": n}
    need = size_min_n(a, b, k)
    if n < need:
        return CheckResult(
            "edge-count-sharpness",
            params,
            "hypothesis_not_met",
            {"min_n": need},
            notes=f"size threshold claim needs n >= {need}, got n={n}",
        )
    fp = ExtremalParams(a, b, k, n)
    g = extremal_graph(fp)
    bound = comb(n - b - 1, 2) + a * b + 2 * a + (b + 1) * k
    actual = g.edge_count
    formula = extremal_edge_count(fp)
    if not (actual == formula == bound - 1):
        return CheckResult(
            "edge-count-sharpness",
            params,
            "fail",
            {"edge_count": actual, "formula": formula, "threshold": bound},
            counterexample={
                "kind": "edge-count-mismatch",
                "graph": serialize_graph(g),
                "expected": bound - 1,
            },
        )
    s_block = tuple(range(a + k))
    factor_params = FactorParams(a, b, k)
    if n <= DECIDER_N_CAP:
        cert = is_abk_critical(g, factor_params)
        route = "subset-sweep decider"
    else:
        d = integral_deficiency(g, s_block, factor_params)
        cert = DeficiencyCertificate(
            kind="integral",
            s_set=s_block,
            t_set=low_degree_set(g, s_block, a - 1),
            deficiency=d,
        )
        if not cert.violating:
            cert = None
        route = "fixed-certificate route"
    if cert is None or cert.s_set != s_block or cert.deficiency != 1:
        return CheckResult(
            "edge-count-sharpness",
            params,
            "fail",
            {"edge_count": actual, "threshold": bound},
            counterexample={
                "kind": "certificate-mismatch",
                "graph": serialize_graph(g),
                "a": a,
                "b": b,
                "k": k,
                "expected_s_set": list(s_block),
                "expected_deficiency": 1,
                "got": None if cert is None else cert.to_json(),
            },
            notes=route,
        )
    return CheckResult(
        "edge-count-sharpness",
        params,
        "pass",
        {
            "edge_count": actual,
            "threshold": bound,
            "deficiency": cert.deficiency,
            "t_size": len(cert.t_set),
        },
        notes=f"{route}; violating set is the joined clique block",
    )


def perron_ratio_cubic(a: int, b: int, k: int, n: int, lam0: float) -> float:
    """The cubic appearing in the ratio identity between the attached and
    untouched independent-vertex Perron entries."""
    return (
        lam0**3
        - (n - a - b - k - 3) * lam0**2
        - (n - b - k - 3) * lam0
        + (a - 1) * (n - 2 * a - b - k - 1)
    )


def check_perron_system(a: int, b: int, k: int, n: int) -> CheckResult:
    """On the distinguished member, with y the Perron vector and lam0 the
    radius, the five structural classes (clique block u, attached
    targets w1, rest of the big clique wa, attached independent vertex
    t1, untouched independent vertices t2) satisfy

        lam0 y(t1) = (a+k) y(u) + (a-1) y(w1)
        lam0 y(t2) = (a+k) y(u)
        lam0 y(w1) = (a+k) y(u) + (a-2) y(w1) + (n-2a-b-k) y(wa) + y(t1)
        lam0 y(wa) = (a+k) y(u) + (a-1) y(w1) + (n-2a-b-k-1) y(wa)

    with residuals below 1e-7, and the ratio identity

        y(t1)/y(t2) = lam0 (lam0+1) (lam0 - (n-2a-b-k-1)) / g(lam0)

    within 1e-6 relative, where g is perron_ratio_cubic; g(lam0) > 0.
    Needs a >= 2 so every class is populated."""
    _require_shape(a, b, k)
    if a < 2:
        raise ValueError(f"the Perron system coordinates need a >= 2, got a={a}")
    params = {"a": a, "b": b, "k": k, "n": n}
    need = bracket_min_n(a, b, k)
    if n < need:
        return CheckResult(
            "perron-system",
            params,
            "hypothesis_not_met",
            {"min_n": need},
            notes=f"radius location needs n >= {need}, got n={n}",
        )
    fp = ExtremalParams(a, b, k, n)
    if n - 2 * a - b - k < 1:
        raise ValueError("the untouched clique class is empty at this order")
    g = extremal_graph(fp)
    report = spectral_radius(g)
    lam0 = report.lam
    y = report.perron
    u1 = 0
    w1 = fp.w_start
    wa = fp.w_start + (a - 1)
    t1 = fp.t1
    t2 = fp.t1 + 1

    res = {
        "residual_t1": abs(lam0 * y[t1] - ((a + k) * y[u1] + (a - 1) * y[w1])),
        "residual_t2": abs(lam0 * y[t2] - (a + k) * y[u1]),
        "residual_w1": abs(
            lam0 * y[w1]
            - (
                (a + k) * y[u1]
                + (a - 2) * y[w1]
                + (n - 2 * a - b - k) * y[wa]
                + y[t1]
            )
        ),
        "residual_wa": abs(
            lam0 * y[wa]
            - ((a + k) * y[u1] + (a - 1) * y[w1] + (n - 2 * a - b - k - 1) * y[wa])
        ),
    }
    g_val = perron_ratio_cubic(a, b, k, n, lam0)
    ratio_lhs = y[t1] / y[t2]
    ratio_rhs = lam0 * (lam0 + 1.0) * (lam0 - (n - 2 * a - b - k - 1)) / g_val
    rel_err = abs(ratio_lhs - ratio_rhs) / abs(ratio_rhs)
    metrics = {
        "lambda0": lam0,
        **res,
        "ratio_lhs": ratio_lhs,
        "ratio_rhs": ratio_rhs,
        "ratio_relative_error": rel_err,
        "cubic_value": g_val,
    }
    bad = (
        any(v >= RESIDUAL_TOL for v in res.values())
        or rel_err >= RATIO_TOL
        or not g_val > 0.0
    )
    if bad:
        return CheckResult(
            "perron-system",
            params,
            "fail",
            metrics,
            counterexample={
                "kind": "perron-system-residual",
                "graph": serialize_graph(g),
                "a": a,
                "b": b,
                "k": k,
                "n": n,
                "residual_tol": RESIDUAL_TOL,
                "ratio_tol": RATIO_TOL,
            },
        )
    return CheckResult("perron-system", params, "pass", metrics)


def _normalize_grid_item(item) -> tuple:
    """Grid items: ("integral", a, b, k), ("fractional", a, b, k), or
    ("parity", r, k)."""
    mode = item[0]
    if mode == "integral":
        _, a, b, k = item
        if b <= a:
            raise ValueError("integral grid items need b > a")
        _require_shape(a, b, k)
        return ("integral", a, b, k)
    if mode == "fractional":
        _, a, b, k = item
        _require_shape(a, b, k)
        return ("fractional", a, b, k)
    if mode == "parity":
        _, r, k = item
        if r < 2:
            raise ValueError("parity grid items need r >= 2")
        if k < 0:
            raise ValueError("parity grid items need k >= 0")
        return ("parity", r, k)
    raise ValueError(f"unknown grid mode {mode!r}")


def _decider_verdict(g: Graph, item: tuple) -> tuple[bool, DeficiencyCertificate | None]:
    if item[0] == "integral":
        cert = is_abk_critical(g, FactorParams(item[1], item[2], item[3]))
    elif item[0] == "fractional":
        cert = is_fractional_abk_critical(g, FactorParams(item[1], item[2], item[3]))
    else:
        cert = is_rk_critical(g, item[1], item[2])
    return cert is None, cert


def _definition_verdict(g: Graph, item: tuple) -> bool:
    if item[0] == "integral":
        return critical_by_definition(g, FactorParams(item[1], item[2], item[3]), "integral")
    if item[0] == "fractional":
        return critical_by_definition(
            g, FactorParams(item[1], item[2], item[3]), "fractional"
        )
    return critical_by_definition(g, FactorParams(item[1], item[1], item[2]), "integral")


def _item_min_n(item: tuple) -> int:
    if item[0] == "parity":
        return item[1] + item[2] + 1
    return item[1] + item[3] + 1


def cross_validate_deciders(n_max: int, param_grid: Iterable) -> CheckResult:
    """Deficiency-sweep deciders versus brute-force factor search after
    every k-deletion, exhaustively over connected graphs with n <= n_max
    (n_max <= 7).  Also checks the histogram form of the integral
    deficiency against the direct form on every (graph, deletion set)
    pair for the integral grid items, on the n <= 5 sub-corpus."""
    if not 1 <= n_max <= 7:
        raise ValueError(f"exhaustive cross-validation needs 1 <= n_max <= 7, got {n_max}")
    grid = [_normalize_grid_item(item) for item in param_grid]
    if not grid:
        raise ValueError("empty parameter grid")
    params = {"n_max": n_max, "grid": [list(item) for item in grid]}
    compared = {"integral": 0, "fractional": 0, "parity": 0}
    skipped = 0
    histogram_pairs = 0
    graphs = 0
    for n in range(1, n_max + 1):
        for g in enumerate_graphs(n, connected_only=True):
            graphs += 1
            for item in grid:
                if g.n < _item_min_n(item):
                    skipped += 1
                    continue
                verdict, cert = _decider_verdict(g, item)
                definition = _definition_verdict(g, item)
                if verdict != definition:
                    return CheckResult(
                        "decider-cross-validation",
                        params,
                        "fail",
                        {"graphs": graphs, **compared},
                        counterexample={
                            "kind": "decider-disagreement",
                            "graph": serialize_graph(g),
                            "item": list(item),
                            "decider_critical": verdict,
                            "definition_critical": definition,
                            "certificate": None if cert is None else cert.to_json(),
                        },
                    )
                compared[item[0]] += 1
            if g.n > HISTOGRAM_IDENTITY_N_CAP:
                continue
            for item in grid:
                if item[0] != "integral":
                    continue
                fparams = FactorParams(item[1], item[2], item[3])
                for size in range(fparams.k, n + 1):
                    for combo in itertools.combinations(range(n), size):
                        d1 = integral_deficiency(g, combo, fparams)
                        d2 = integral_deficiency_histogram(g, combo, fparams)
                        histogram_pairs += 1
                        if d1 != d2:
                            return CheckResult(
                                "decider-cross-validation",
                                params,
                                "fail",
                                {"graphs": graphs, **compared},
                                counterexample={
                                    "kind": "histogram-identity-mismatch",
                                    "graph": serialize_graph(g),
                                    "s_set": list(combo),
                                    "item": list(item),
                                    "direct": d1,
                                    "histogram": d2,
                                },
                            )
    return CheckResult(
        "decider-cross-validation",
        params,
        "pass",
        {
            "graphs": graphs,
            "compared_integral": compared["integral"],
            "compared_fractional": compared["fractional"],
            "compared_parity": compared["parity"],
            "skipped_too_small": skipped,
            "histogram_identity_pairs": histogram_pairs,
        },
    )


HONG_CURVE_SAMPLES = ((6, 12), (8, 24), (9, 30), (10, 45), (12, 50))


def check_hong_bound(n_max: int, curve_points: int = 100) -> CheckResult:
    """The degree-based bound dominates the radius on every connected
    graph with n <= n_max and minimum degree >= 1, with equality (within
    1e-7) exactly on regular graphs and graphs whose degrees all lie in
    {delta, n-1}.  Also checks the bound curve decreases in the
    minimum-degree argument on a fixed grid of (order, size) samples
    chosen inside the curve's real domain."""
    if not 2 <= n_max <= 7:
        raise ValueError(f"exhaustive bound check needs 2 <= n_max <= 7, got {n_max}")
    params = {"n_max": n_max, "curve_points": curve_points}
    graphs = 0
    equality_cases = 0
    worst_overrun = -math.inf
    min_strict_slack = math.inf
    for n in range(2, n_max + 1):
        for g in enumerate_graphs(n, connected_only=True):
            graphs += 1
            lam = spectral_radius(g).lam
            bound = hong_bound(g)
            worst_overrun = max(worst_overrun, lam - bound)
            degs = set(g.degrees())
            delta = min(degs)
            expected_equal = degs <= {delta, n - 1}
            actual_equal = bound - lam < RESIDUAL_TOL
            if lam > bound + EIG_TOL or expected_equal != actual_equal:
                return CheckResult(
                    "hong-bound",
                    params,
                    "fail",
                    {"graphs": graphs},
                    counterexample={
                        "kind": "hong-equality-mismatch",
                        "graph": serialize_graph(g),
                        "lambda": lam,
                        "bound": bound,
                        "expected_equality": expected_equal,
                    },
                )
            if expected_equal:
                equality_cases += 1
            else:
                min_strict_slack = min(min_strict_slack, bound - lam)
    curve_checks = 0
    for p, q in HONG_CURVE_SAMPLES:
        xs = [i * (p - 1) / (curve_points - 1) for i in range(curve_points)]
        values = [hong_bound_formula(x, p, q) for x in xs]
        for i in range(len(values) - 1):
            curve_checks += 1
            if values[i + 1] > values[i] + 1e-12:
                return CheckResult(
                    "hong-bound",
                    params,
                    "fail",
                    {"graphs": graphs},
                    counterexample={
                        "kind": "curve-monotonicity-violation",
                        "p": p,
                        "q": q,
                        "x_low": xs[i],
                        "x_high": xs[i + 1],
                    },
                )
    return CheckResult(
        "hong-bound",
        params,
        "pass",
        {
            "graphs": graphs,
            "equality_cases": equality_cases,
            "worst_overrun": worst_overrun,
            "min_strict_slack": min_strict_slack,
            "curve_comparisons": curve_checks,
        },
    )


def check_sharpness(a: int, b: int, k: int, n: int, target: str) -> CheckResult:
    """At the stated order bound of each criticality condition, the
    distinguished member meets every hypothesis (connected, minimum
    degree exactly a+k, radius trivially at the threshold) and still is
    not critical, so the excluded-graph clause is non-vacuous.  Targets:

      spectral-integral           radius condition, [a,b]-factor route, b > a
      size-integral               edge-count condition, b > a
      spectral-fractional         radius condition, fractional route, b > a
      spectral-fractional-rr      radius condition, fractional, a = b = r
      spectral-fractional-general radius condition, fractional, b >= a

    The non-criticality witness is the joined clique block with
    deficiency exactly 1, re-checked from the deficiency definition."""
    _require_shape(a, b, k)
    if target not in SHARPNESS_TARGETS:
        raise ValueError(f"unknown sharpness target {target!r}")
    if target in ("spectral-integral", "size-integral", "spectral-fractional"):
        if b <= a:
            raise ValueError(f"target {target} needs b > a, got a={a}, b={b}")
    if target == "spectral-fractional-rr" and a != b:
        raise ValueError(f"target {target} needs a == b, got a={a}, b={b}")
    if target == "spectral-fractional-rr":
        need = parity_spectral_min_n(a, k)
    elif target == "size-integral":
        need = size_min_n(a, b, k)
    else:
        need = spectral_min_n(a, b, k)
    params = {"a": a, "b": b, "k": k, "n": n, "target": target}
    if n < need:
        return CheckResult(
            "sharpness",
            params,
            "hypothesis_not_met",
            {"min_n": need},
            notes=f"target {target} needs n >= {need}, got n={n}",
        )
    fp = ExtremalParams(a, b, k, n)
    g = extremal_graph(fp)
    metrics: dict = {"min_n": need, "delta": g.min_degree()}
    if not g.is_connected() or g.min_degree() != a + k:
        return CheckResult(
            "sharpness",
            params,
            "fail",
            metrics,
            counterexample={
                "kind": "hypothesis-shape-mismatch",
                "graph": serialize_graph(g),
                "expected_min_degree": a + k,
            },
        )
    if target == "size-integral":
        bound = comb(n - b - 1, 2) + a * b + 2 * a + (b + 1) * k
        metrics["edge_count"] = g.edge_count
        metrics["threshold"] = bound
        if g.edge_count != bound - 1:
            return CheckResult(
                "sharpness",
                params,
                "fail",
                metrics,
                counterexample={
                    "kind": "edge-count-mismatch",
                    "graph": serialize_graph(g),
                    "expected": bound - 1,
                },
            )
    integral_route = target in ("spectral-integral", "size-integral")
    s_block = tuple(range(a + k))
    fparams = FactorParams(a, b, k)
    if integral_route:
        d = integral_deficiency(g, s_block, fparams)
        kind = "integral"
        t_set = low_degree_set(g, s_block, a - 1)
    else:
        d = fractional_deficiency(g, s_block, fparams)
        kind = "fractional"
        t_set = low_degree_set(g, s_block, a)
    metrics["block_deficiency"] = d
    if d != 1:
        return CheckResult(
            "sharpness",
            params,
            "fail",
            metrics,
            counterexample={
                "kind": "certificate-mismatch",
                "graph": serialize_graph(g),
                "a": a,
                "b": b,
                "k": k,
                "route": kind,
                "expected_s_set": list(s_block),
                "expected_deficiency": 1,
                "got": {
                    "kind": kind,
                    "s_set": list(s_block),
                    "t_set": list(t_set),
                    "deficiency": d,
                },
            },
        )
    route = "fixed certificate"
    if n <= DECIDER_N_CAP:
        if integral_route:
            cert = is_abk_critical(g, fparams)
        else:
            cert = is_fractional_abk_critical(g, fparams)
        route = "subset-sweep decider"
        if cert is None or not cert.violating:
            return CheckResult(
                "sharpness",
                params,
                "fail",
                metrics,
                counterexample={
                    "kind": "certificate-mismatch",
                    "graph": serialize_graph(g),
                    "a": a,
                    "b": b,
                    "k": k,
                    "route": kind,
                    "expected_s_set": list(s_block),
                    "expected_deficiency": 1,
                    "got": None if cert is None else cert.to_json(),
                },
            )
    if n <= 200:
        metrics["lambda"] = spectral_radius(g).lam
    return CheckResult(
        "sharpness",
        params,
        "pass",
        metrics,
        notes=(
            f"{route}; the graph meets the radius hypothesis trivially and the "
            "minimum-degree hypothesis with equality, yet is not critical"
        ),
    )


def check_subgraph_monotonicity(count: int = 200, seed: int = 0) -> CheckResult:
    """Deleting edges from a connected graph, while keeping it connected,
    strictly lowers the spectral radius (margin 1e-10).  Randomized
    instances, deterministic per seed."""
    if count < 1:
        raise ValueError("need count >= 1")
    rng = random.Random(seed)
    params = {"count": count, "seed": seed}
    min_drop = math.inf
    built = 0
    while built < count:
        n = rng.randint(4, 9)
        g = random_connected_graph(rng, n, rng.uniform(0.4, 0.8))
        edges = g.edges()
        rng.shuffle(edges)
        goal = rng.randint(1, max(1, len(edges) // 3))
        sub = g
        removed = []
        for u, v in edges:
            if len(removed) == goal:
                break
            trial = sub.without_edge(u, v)
            if trial.is_connected():
                sub = trial
                removed.append((u, v))
        if not removed:
            continue
        built += 1
        lam = spectral_radius(g).lam
        lam_sub = spectral_radius(sub).lam
        min_drop = min(min_drop, lam - lam_sub)
        if lam_sub >= lam - PROPERTY_MARGIN:
            return CheckResult(
                "subgraph-monotonicity",
                params,
                "fail",
                {"min_drop": min_drop},
                counterexample={
                    "kind": "monotonicity-violation",
                    "graph": serialize_graph(g),
                    "removed": [list(e) for e in removed],
                    "margin": PROPERTY_MARGIN,
                },
            )
    return CheckResult(
        "subgraph-monotonicity",
        params,
        "pass",
        {"instances": built, "min_drop": min_drop},
    )


def check_edge_rotation(count: int = 200, seed: int = 0) -> CheckResult:
    """Rotating edges from v to a vertex u with Perron entry >= that of v
    strictly raises the spectral radius (margin 1e-10).  Instances are
    built per the statement: the moved endpoints are neighbors of v that
    are not u and not adjacent to u.  Deterministic per seed."""
    if count < 1:
        raise ValueError("need count >= 1")
    rng = random.Random(seed)
    params = {"count": count, "seed": seed}
    min_gain = math.inf
    built = 0
    while built < count:
        n = rng.randint(4, 9)
        g = random_connected_graph(rng, n, rng.uniform(0.35, 0.75))
        x = spectral_radius(g).perron
        u, v = rng.sample(range(n), 2)
        if x[v] > x[u]:
            u, v = v, u
        movable = [w for w in g.neighbors(v) if w != u and not g.has_edge(u, w)]
        if not movable:
            continue
        chosen = rng.sample(movable, rng.randint(1, len(movable)))
        rotated = g
        for w in chosen:
            rotated = rotated.without_edge(v, w).with_edge(u, w)
        built += 1
        lam = spectral_radius(g).lam
        lam_rot = spectral_radius(rotated).lam
        min_gain = min(min_gain, lam_rot - lam)
        if lam_rot <= lam + PROPERTY_MARGIN:
            return CheckResult(
                "edge-rotation",
                params,
                "fail",
                {"instances": built, "min_gain": min_gain},
                counterexample={
                    "kind": "rotation-violation",
                    "graph": serialize_graph(g),
                    "u": u,
                    "v": v,
                    "moved": chosen,
                    "margin": PROPERTY_MARGIN,
                },
            )
    return CheckResult(
        "edge-rotation",
        params,
        "pass",
        {"instances": built, "min_gain": min_gain},
    )


class _BudgetExhausted(Exception):
    pass


def explore_conjecture(r: int, k: int, n: int, budget: int, seed: int = 0) -> CheckResult:
    """Budgeted search for a connected graph with minimum degree >= r+k
    whose spectral radius is at least the family's, that is not the
    distinguished member, and that is not (r, k)-critical.

    Three phases, all deterministic per seed: single-edge additions to
    the distinguished member, single edge swaps on it, then random
    connected starts hill-climbed by adding the non-edge with the
    largest Perron entry product.  The budget counts spectral radius
    evaluations.  Any candidate is reported with its full certificate and
    re-validated from serialization before the result is returned; a
    candidate that fails re-validation fails the check.

    The search order n is far below the order bound 2(2r+k+2)(r+k+2) of
    the criticality condition this search probes, so candidates found
    here do not contradict it, and finding none is evidence, not proof."""
    if r < 2:
        raise ValueError(f"the parity decider needs r >= 2, got r={r}")
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    if n > EXPLORER_N_CAP:
        raise ValueError(f"exact criticality checks cap the order at {EXPLORER_N_CAP}")
    if budget < 1:
        raise ValueError("need budget >= 1")
    fp = ExtremalParams(r, r, k, n)
    distinguished = extremal_graph(fp)
    lam_f = spectral_radius(distinguished).lam
    threshold = parity_spectral_min_n(r, k)
    params = {"r": r, "k": k, "n": n, "budget": budget, "seed": seed}
    rng = random.Random(seed)

    state = {"evals": 0}
    seen: set[tuple[int, ...]] = {distinguished.adj}
    stats = {
        "qualifying": 0,
        "critical_qualifying": 0,
        "isomorphic_excluded": 0,
        "phase_a": 0,
        "phase_b": 0,
        "phase_c_restarts": 0,
        "phase_c_climbs": 0,
    }
    candidates: list[dict] = []

    def evaluate(g: Graph):
        if state["evals"] >= budget:
            raise _BudgetExhausted
        state["evals"] += 1
        return spectral_radius(g)

    def screen(g: Graph, lam: float) -> None:
        """Record g if it qualifies and is a candidate."""
        if lam < lam_f - STRICT_MARGIN:
            return
        stats["qualifying"] += 1
        if g.edge_count == distinguished.edge_count and isomorphic(g, distinguished):
            stats["isomorphic_excluded"] += 1
            return
        cert = is_rk_critical(g, r, k)
        if cert is None:
            stats["critical_qualifying"] += 1
            return
        candidates.append(
            {
                "graph": serialize_graph(g),
                "lambda": lam,
                "lambda_family": lam_f,
                "certificate": cert.to_json(),
            }
        )

    def consider(g: Graph) -> None:
        if g.adj in seen:
            return
        seen.add(g.adj)
        if not g.is_connected() or g.min_degree() < r + k:
            return
        screen(g, evaluate(g).lam)

    try:
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not distinguished.has_edge(u, v)
        ]
        for u, v in non_edges:
            stats["phase_a"] += 1
            consider(distinguished.with_edge(u, v))
        for eu, ev in distinguished.edges():
            base = distinguished.without_edge(eu, ev)
            for fu, fv in non_edges:
                stats["phase_b"] += 1
                consider(base.with_edge(fu, fv))
        while True:
            stats["phase_c_restarts"] += 1
            g = random_connected_graph(rng, n, 0.4, min_degree=r + k)
            while True:
                seen.add(g.adj)
                report = evaluate(g)
                if report.lam >= lam_f - STRICT_MARGIN:
                    screen(g, report.lam)
                    break
                x = report.perron
                best = None
                best_val = -math.inf
                for u in range(n):
                    for v in range(u + 1, n):
                        if not g.has_edge(u, v) and x[u] * x[v] > best_val:
                            best_val = x[u] * x[v]
                            best = (u, v)
                if best is None:
                    break
                g = g.with_edge(*best)
                stats["phase_c_climbs"] += 1
    except _BudgetExhausted:
        pass

    for cand in candidates:
        g2 = deserialize_graph(cand["graph"])
        cert = DeficiencyCertificate.from_json(cand["certificate"])
        lam2 = spectral_radius(g2).lam
        revalidates = (
            recheck_certificate(g2, cert, r=r, k=k)
            and is_rk_critical(g2, r, k) is not None
            and abs(lam2 - cand["lambda"]) < STRICT_MARGIN
            and lam2 >= lam_f - 2 * STRICT_MARGIN
        )
        if not revalidates:
            return CheckResult(
                "conjecture-explorer",
                params,
                "fail",
                {**stats, "evaluations": state["evals"], "candidates": len(candidates)},
                counterexample={
                    "kind": "candidate-revalidation-failure",
                    "r": r,
                    "k": k,
                    **cand,
                },
                notes="a reported candidate did not re-validate from serialization",
            )

    return CheckResult(
        "conjecture-explorer",
        params,
        "pass",
        {
            **stats,
            "evaluations": state["evals"],
            "candidates": len(candidates),
            "lambda_family": lam_f,
        },
        counterexample={"kind": "explorer-candidates", "r": r, "k": k, "candidates": candidates}
        if candidates
        else None,
        notes=(
            f"searched order n={n} is far below the order bound "
            f"2(2r+k+2)(r+k+2) = {threshold} of the criticality condition; "
            "candidates here do not contradict it and an empty report is "
            "evidence, not proof"
        ),
    )


# -- counterexample revalidation ------------------------------------------------


def revalidate_counterexample(ce: dict) -> bool:
    """Confirm a counterexample from its serialization alone: re-derive
    the claimed discrepancy and return True iff it reproduces."""
    kind = ce["kind"]
    if kind == "spectral-out-of-interval":
        g = deserialize_graph(ce["graph"])
        lam = spectral_radius(g).lam
        return not (ce["lower"] + ce["margin"] < lam < ce["upper"] - ce["margin"])
    if kind == "spectral-not-dominated":
        g = deserialize_graph(ce["graph"])
        rival = deserialize_graph(ce["rival"])
        return spectral_radius(rival).lam >= spectral_radius(g).lam - ce["margin"]
    if kind == "edge-count-mismatch":
        g = deserialize_graph(ce["graph"])
        return g.edge_count != ce["expected"]
    if kind == "certificate-mismatch":
        g = deserialize_graph(ce["graph"])
        fparams = FactorParams(ce["a"], ce["b"], ce["k"])
        s = tuple(ce["expected_s_set"])
        route = ce.get("route", "integral")
        if route == "integral":
            d = integral_deficiency(g, s, fparams)
        else:
            d = fractional_deficiency(g, s, fparams)
        return d != ce["expected_deficiency"]
    if kind == "decider-disagreement":
        g = deserialize_graph(ce["graph"])
        item = tuple(ce["item"])
        verdict, _ = _decider_verdict(g, item)
        return verdict != _definition_verdict(g, item)
    if kind == "histogram-identity-mismatch":
        g = deserialize_graph(ce["graph"])
        item = tuple(ce["item"])
        fparams = FactorParams(item[1], item[2], item[3])
        s = tuple(ce["s_set"])
        return integral_deficiency(g, s, fparams) != integral_deficiency_histogram(
            g, s, fparams
        )
    if kind == "hong-equality-mismatch":
        g = deserialize_graph(ce["graph"])
        lam = spectral_radius(g).lam
        bound = hong_bound(g)
        degs = set(g.degrees())
        expected = degs <= {min(degs), g.n - 1}
        return lam > bound + EIG_TOL or expected != (bound - lam < RESIDUAL_TOL)
    if kind == "curve-monotonicity-violation":
        lo = hong_bound_formula(ce["x_low"], ce["p"], ce["q"])
        hi = hong_bound_formula(ce["x_high"], ce["p"], ce["q"])
        return hi > lo + 1e-12
    if kind == "hypothesis-shape-mismatch":
        g = deserialize_graph(ce["graph"])
        return not g.is_connected() or g.min_degree() != ce["expected_min_degree"]
    if kind == "perron-system-residual":
        g = deserialize_graph(ce["graph"])
        a, b, k, n = ce["a"], ce["b"], ce["k"], ce["n"]
        fp = ExtremalParams(a, b, k, n)
        report = spectral_radius(g)
        lam0, y = report.lam, report.perron
        u1, w1 = 0, fp.w_start
        wa, t1, t2 = fp.w_start + (a - 1), fp.t1, fp.t1 + 1
        res = [
            abs(lam0 * y[t1] - ((a + k) * y[u1] + (a - 1) * y[w1])),
            abs(lam0 * y[t2] - (a + k) * y[u1]),
            abs(
                lam0 * y[w1]
                - ((a + k) * y[u1] + (a - 2) * y[w1] + (n - 2 * a - b - k) * y[wa] + y[t1])
            ),
            abs(
                lam0 * y[wa]
                - ((a + k) * y[u1] + (a - 1) * y[w1] + (n - 2 * a - b - k - 1) * y[wa])
            ),
        ]
        g_val = perron_ratio_cubic(a, b, k, n, lam0)
        if any(v >= ce["residual_tol"] for v in res) or not g_val > 0.0:
            return True
        rhs = lam0 * (lam0 + 1.0) * (lam0 - (n - 2 * a - b - k - 1)) / g_val
        return abs(y[t1] / y[t2] - rhs) / abs(rhs) >= ce["ratio_tol"]
    if kind == "monotonicity-violation":
        g = deserialize_graph(ce["graph"])
        sub = g
        for u, v in ce["removed"]:
            sub = sub.without_edge(u, v)
        return spectral_radius(sub).lam >= spectral_radius(g).lam - ce["margin"]
    if kind == "rotation-violation":
        g = deserialize_graph(ce["graph"])
        x = spectral_radius(g).perron
        u, v = ce["u"], ce["v"]
        if x[u] < x[v]:
            return False
        rotated = g
        for w in ce["moved"]:
            if w == u or not g.has_edge(v, w) or g.has_edge(u, w):
                return False
            rotated = rotated.without_edge(v, w).with_edge(u, w)
        return spectral_radius(rotated).lam <= spectral_radius(g).lam + ce["margin"]
    if kind == "candidate-revalidation-failure":
        g = deserialize_graph(ce["graph"])
        cert = DeficiencyCertificate.from_json(ce["certificate"])
        valid = (
            recheck_certificate(g, cert, r=ce["r"], k=ce["k"])
            and is_rk_critical(g, ce["r"], ce["k"]) is not None
            and abs(spectral_radius(g).lam - ce["lambda"]) < STRICT_MARGIN
        )
        return not valid
    if kind == "explorer-candidates":
        # Attached to passing explorer runs: True iff every reported
        # candidate's certificate and radius re-validate.
        for cand in ce["candidates"]:
            g = deserialize_graph(cand["graph"])
            cert = DeficiencyCertificate.from_json(cand["certificate"])
            if not recheck_certificate(g, cert, r=ce["r"], k=ce["k"]):
                return False
            if is_rk_critical(g, ce["r"], ce["k"]) is None:
                return False
            if abs(spectral_radius(g).lam - cand["lambda"]) >= STRICT_MARGIN:
                return False
        return True
    raise ValueError(f"unknown counterexample kind {kind!r}")


# -- battery --------------------------------------------------------------------


def battery_plan(level: str = "quick", seed: int = 0) -> list[tuple[str, dict]]:
    """The named checks and their arguments for one battery run.  Each
    entry is (check name, kwargs) and is independently runnable, so a
    parallel scheduler may execute them in any order."""
    if level not in ("quick", "full"):
        raise ValueError(f"level must be quick or full, got {level!r}")
    plan: list[tuple[str, dict]] = []
    if level == "quick":
        bracket_grid = [(1, 2, 0), (2, 3, 1)]
        maximality_grid = [(3, 3, 0), (4, 5, 1)]
        sharp_edge_grid = [(1, 2, 0)]
        perron_grid = [(2, 3, 0)]
        cross_items = [["integral", 1, 2, 0], ["fractional", 1, 1, 0], ["parity", 2, 0]]
        cross_n = 5
        hong_n = 5
        prop_count = 50
        explorer = {"r": 2, "k": 0, "n": 10, "budget": 300, "seed": seed}
    else:
        bracket_grid = [
            (a, b, kk)
            for a in (1, 2, 3)
            for b in range(a, 5)
            for kk in (0, 1, 2)
        ]
        maximality_grid = [
            (a, b, kk) for a in (3, 4) for b in (a, a + 1) for kk in (0, 1)
        ]
        sharp_edge_grid = [
            (a, b, kk) for a in (1, 2, 3) for b in range(a + 1, 5) for kk in (0, 1, 2)
        ]
        perron_grid = [(a, b, kk) for a in (2, 3) for b in (3, 4) for kk in (0, 1)]
        cross_items = [
            ["integral", 1, 2, 0],
            ["integral", 2, 3, 0],
            ["fractional", 1, 2, 0],
            ["fractional", 2, 2, 1],
            ["parity", 2, 0],
            ["parity", 2, 1],
        ]
        cross_n = 6
        hong_n = 6
        prop_count = 200
        explorer = {"r": 2, "k": 0, "n": 12, "budget": 10000, "seed": seed}
    for a, b, kk in bracket_grid:
        n0 = bracket_min_n(a, b, kk)
        plan.append(("family-radius-bracket", {"a": a, "b": b, "k": kk, "n": n0}))
        plan.append(("family-radius-bracket", {"a": a, "b": b, "k": kk, "n": n0 + 5}))
    for a, b, kk in maximality_grid:
        plan.append(
            ("family-maximality", {"a": a, "b": b, "k": kk, "n": maximality_min_n(a, b, kk)})
        )
    for a, b, kk in sharp_edge_grid:
        n0 = size_min_n(a, b, kk)
        plan.append(("edge-count-sharpness", {"a": a, "b": b, "k": kk, "n": n0}))
        plan.append(("edge-count-sharpness", {"a": a, "b": b, "k": kk, "n": n0 + 5}))
    for a, b, kk in perron_grid:
        n0 = bracket_min_n(a, b, kk)
        plan.append(("perron-system", {"a": a, "b": b, "k": kk, "n": n0}))
        plan.append(("perron-system", {"a": a, "b": b, "k": kk, "n": n0 + 3}))
    plan.append(
        ("decider-cross-validation", {"n_max": cross_n, "param_grid": cross_items})
    )
    plan.append(("hong-bound", {"n_max": hong_n}))
    plan.append(
        ("sharpness", {"a": 1, "b": 2, "k": 0, "n": spectral_min_n(1, 2, 0), "target": "spectral-integral"})
    )
    plan.append(
        ("sharpness", {"a": 1, "b": 2, "k": 0, "n": size_min_n(1, 2, 0), "target": "size-integral"})
    )
    plan.append(
        ("sharpness", {"a": 1, "b": 2, "k": 0, "n": spectral_min_n(1, 2, 0), "target": "spectral-fractional"})
    )
    plan.append(
        ("sharpness", {"a": 2, "b": 2, "k": 0, "n": parity_spectral_min_n(2, 0), "target": "spectral-fractional-rr"})
    )
    plan.append(
        ("sharpness", {"a": 2, "b": 2, "k": 0, "n": spectral_min_n(2, 2, 0), "target": "spectral-fractional-general"})
    )
    plan.append(("subgraph-monotonicity", {"count": prop_count, "seed": seed}))
    plan.append(("edge-rotation", {"count": prop_count, "seed": seed + 1}))
    plan.append(("conjecture-explorer", explorer))
    return plan


_CHECK_FUNCTIONS: dict[str, Callable[..., CheckResult]] = {
    "family-radius-bracket": check_family_radius_bracket,
    "family-maximality": check_family_maximality,
    "edge-count-sharpness": check_edge_count_sharpness,
    "perron-system": check_perron_system,
    "decider-cross-validation": cross_validate_deciders,
    "hong-bound": check_hong_bound,
    "sharpness": check_sharpness,
    "subgraph-monotonicity": check_subgraph_monotonicity,
    "edge-rotation": check_edge_rotation,
    "conjecture-explorer": explore_conjecture,
}


def run_check(name: str, kwargs: dict) -> CheckResult:
    """Dispatch one named check.  (name, kwargs) pairs are picklable, so
    a process pool can map over a battery plan directly."""
    try:
        fn = _CHECK_FUNCTIONS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}") from None
    return fn(**kwargs)


def run_battery(level: str = "quick", seed: int = 0) -> list[CheckResult]:
    """Run the whole battery sequentially, in plan order."""
    return [run_check(name, kwargs) for name, kwargs in battery_plan(level, seed)]
