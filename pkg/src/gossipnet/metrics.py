"""Network-level gossip statistics: global and per-degree spread, clustering,
critical degrees, and the full coefficient summary.

Aggregation convention: gossip needs a pair of the victim's friends to pass
between, so victims of degree < 2 are recorded with spread 0 in every
network-level aggregate (global means and per-degree curves), while
isolated nodes are excluded from the averages outright and reported as a
count. Per-victim results from :mod:`gossipnet.cascade` are unaffected by
this convention. All means are computed with exact summation
(``math.fsum``) so results do not depend on node ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from .cascade import _check_model, _forwarding_flags, _unweighted_counts, _weighted_counts
from .graph import WeightedGraph, _local_index


@dataclass(frozen=True)
class CurvePoint:
    value: float
    count: int


@dataclass(frozen=True)
class DegreeCurve:
    """Per-degree means with sample counts, keyed by victim degree."""

    points: Mapping[int, CurvePoint]

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.points))

    def value(self, k: int) -> float:
        return self.points[k].value

    def count(self, k: int) -> int:
        return self.points[k].count

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, k: int) -> bool:
        return k in self.points

    def weighted_mean(self) -> float:
        """Sample-count-weighted mean over all degrees."""
        total = sum(p.count for p in self.points.values())
        return math.fsum(p.value * p.count for p in self.points.values()) / total


@dataclass(frozen=True)
class NetworkSummary:
    """One row of network coefficients.

    Ratio fields are None where a denominator is absent or zero, and the
    ``*_interior`` flags say whether the corresponding critical degree is a
    strict interior minimum of its curve (None when the degree is absent).
    """

    n_nodes: int
    n_edges: int
    n_isolated: int
    n_leaf_victims: int
    cc: float
    sigma: float | None
    beta: float | None
    k0: int | None
    k0_interior: bool | None
    k0_w: int | None
    k0w_interior: bool | None
    k0w_over_k0: float | None
    sigma_over_cc: float | None
    beta_over_cc: float | None
    beta_over_sigma: float | None
    beta_over_sigma_cc: float | None


@dataclass(frozen=True)
class NetworkAnalysis:
    """Summary plus every per-degree curve, from a single pass over victims."""

    summary: NetworkSummary
    sigma_curve: DegreeCurve | None
    beta_curve: DegreeCurve | None
    cc_curve: DegreeCurve
    beta_over_sigma_curve: DegreeCurve | None
    beta_over_sigma_cc_curve: DegreeCurve | None


def _victim_rows(
    g: WeightedGraph, run_u: bool, run_w: bool
) -> Iterator[tuple[int, int | None, int | None, int]]:
    """Per victim: (degree, sum of n_vr, sum of m_vr, local edge count)."""
    for v_idx in range(g.node_count):
        nbrs, ladj, edge_count = _local_index(g, v_idx)
        k = len(nbrs)
        n_sum = None
        m_sum = None
        if k > 0:
            if run_u:
                n_sum = sum(_unweighted_counts(k, ladj))
            if run_w:
                fwd = _forwarding_flags(g, v_idx, nbrs)
                m_sum = sum(_weighted_counts(k, ladj, fwd))
        yield k, n_sum, m_sum, edge_count


def _spread_value(k: int, count_sum: int) -> float:
    # degree-1 victims carry no gossip-capable pair: aggregate as 0
    return count_sum / (k * k) if k >= 2 else 0.0


def _degree_mean(values_by_degree: dict[int, list[float]]) -> DegreeCurve:
    return DegreeCurve(
        {
            k: CurvePoint(value=math.fsum(vals) / len(vals), count=len(vals))
            for k, vals in sorted(values_by_degree.items())
        }
    )


def find_k0(
    curve: DegreeCurve, min_samples: int = 1
) -> tuple[int | None, bool]:
    """Degree minimizing a per-degree curve, with an interior flag.

    Only degrees with at least ``min_samples`` samples are eligible; ties
    break toward the smallest degree. Returns (None, False) when fewer than
    three degrees are eligible. The flag is True when strictly smaller and
    strictly larger eligible degrees with strictly higher values both exist.
    """
    eligible = [k for k in curve.degrees() if curve.count(k) >= min_samples]
    if len(eligible) < 3:
        return None, False
    k0 = min(eligible, key=lambda k: (curve.value(k), k))
    v0 = curve.value(k0)
    below = any(k < k0 and curve.value(k) > v0 for k in eligible)
    above = any(k > k0 and curve.value(k) > v0 for k in eligible)
    return k0, below and above


def _ratio(num: float | None, den: float | None) -> float | None:
    if num is None or den is None or den == 0.0:
        return None
    return num / den


def analyze_network(
    g: WeightedGraph, model: str = "both", min_samples: int = 1
) -> NetworkAnalysis:
    """Run the selected model(s) over every victim and aggregate everything.

    One pass computes the global spread factors, the per-degree spread and
    clustering curves, the critical degrees of both models (subject to
    ``min_samples``), and the coefficient ratios.
    """
    _check_model(model)
    run_u = model in ("unweighted", "both")
    run_w = model in ("weighted", "both")

    sigma_by_k: dict[int, list[float]] = {}
    beta_by_k: dict[int, list[float]] = {}
    cc_by_k: dict[int, list[float]] = {}
    sigma_values: list[float] = []
    beta_values: list[float] = []
    cc_values: list[float] = []
    n_isolated = 0
    n_leaf = 0

    for k, n_sum, m_sum, edge_count in _victim_rows(g, run_u, run_w):
        cc_v = 2.0 * edge_count / (k * (k - 1)) if k >= 2 else 0.0
        cc_values.append(cc_v)
        cc_by_k.setdefault(k, []).append(cc_v)
        if k == 0:
            n_isolated += 1
            continue
        if k == 1:
            n_leaf += 1
        if run_u:
            s = _spread_value(k, n_sum)
            sigma_values.append(s)
            sigma_by_k.setdefault(k, []).append(s)
        if run_w:
            b = _spread_value(k, m_sum)
            beta_values.append(b)
            beta_by_k.setdefault(k, []).append(b)

    n_victims = g.node_count - n_isolated
    sigma = math.fsum(sigma_values) / n_victims if run_u and n_victims else None
    beta = math.fsum(beta_values) / n_victims if run_w and n_victims else None
    cc = math.fsum(cc_values) / g.node_count if g.node_count else 0.0

    sigma_curve = _degree_mean(sigma_by_k) if run_u else None
    beta_curve = _degree_mean(beta_by_k) if run_w else None
    cc_curve = _degree_mean(cc_by_k)

    k0 = k0_interior = None
    if sigma_curve is not None:
        k0, k0_interior = find_k0(sigma_curve, min_samples)
        if k0 is None:
            k0_interior = None
    k0_w = k0w_interior = None
    if beta_curve is not None:
        k0_w, k0w_interior = find_k0(beta_curve, min_samples)
        if k0_w is None:
            k0w_interior = None

    sigma_cc = _ratio(sigma, cc)
    summary = NetworkSummary(
        n_nodes=g.node_count,
        n_edges=g.edge_count,
        n_isolated=n_isolated,
        n_leaf_victims=n_leaf,
        cc=cc,
        sigma=sigma,
        beta=beta,
        k0=k0,
        k0_interior=k0_interior,
        k0_w=k0_w,
        k0w_interior=k0w_interior,
        k0w_over_k0=_ratio(float(k0_w) if k0_w is not None else None,
                           float(k0) if k0 is not None else None),
        sigma_over_cc=sigma_cc,
        beta_over_cc=_ratio(beta, cc),
        beta_over_sigma=_ratio(beta, sigma),
        beta_over_sigma_cc=_ratio(beta, sigma * cc if sigma is not None else None),
    )

    ratio_curve = None
    ratio_cc_curve = None
    if run_u and run_w:
        ratio_points = {}
        ratio_cc_points = {}
        for k in beta_curve.degrees():
            if k not in sigma_curve:
                continue
            s_k = sigma_curve.value(k)
            b_k = beta_curve.value(k)
            n_k = beta_curve.count(k)
            if s_k > 0.0:
                ratio_points[k] = CurvePoint(value=b_k / s_k, count=n_k)
                cc_k = cc_curve.value(k) if k in cc_curve else 0.0
                if cc_k > 0.0:
                    ratio_cc_points[k] = CurvePoint(value=b_k / (s_k * cc_k), count=n_k)
        ratio_curve = DegreeCurve(ratio_points)
        ratio_cc_curve = DegreeCurve(ratio_cc_points)

    return NetworkAnalysis(
        summary=summary,
        sigma_curve=sigma_curve,
        beta_curve=beta_curve,
        cc_curve=cc_curve,
        beta_over_sigma_curve=ratio_curve,
        beta_over_sigma_cc_curve=ratio_cc_curve,
    )


def global_spread(
    g: WeightedGraph, model: str = "both"
) -> tuple[float | None, float | None]:
    """Network-mean spread factors (sigma, beta); None for a model not run.

    Averages per-victim spread over all non-isolated victims, with the
    degree-1-counts-as-zero convention described in the module docstring.
    Raises ValueError when the graph has no node of degree >= 1.
    """
    analysis = analyze_network(g, model)
    if g.node_count - analysis.summary.n_isolated == 0:
        raise ValueError("all nodes are isolated; spread factors undefined")
    return analysis.summary.sigma, analysis.summary.beta


def spread_by_degree(g: WeightedGraph, model: str = "unweighted") -> DegreeCurve:
    """Per-degree mean spread for a single model (degrees with no victims omitted)."""
    if model not in ("unweighted", "weighted"):
        raise ValueError(f"model must be 'unweighted' or 'weighted', got {model!r}")
    analysis = analyze_network(g, model)
    curve = analysis.sigma_curve if model == "unweighted" else analysis.beta_curve
    assert curve is not None
    return curve


def clustering_coefficient(g: WeightedGraph) -> tuple[float, DegreeCurve]:
    """Mean local clustering coefficient and its per-degree curve.

    Local value: 2 * (edges among neighbors) / (k * (k - 1)) for degree >= 2,
    0 for smaller degrees; the global value averages over all nodes.
    """
    analysis = analyze_network(g, "unweighted")
    return analysis.summary.cc, analysis.cc_curve


def summarize(g: WeightedGraph, model: str = "both", min_samples: int = 1) -> NetworkSummary:
    """All network coefficients in one row (see :class:`NetworkSummary`)."""
    return analyze_network(g, model, min_samples).summary


def ratio_curves(g: WeightedGraph) -> tuple[DegreeCurve, DegreeCurve]:
    """Pointwise beta/sigma and beta/(sigma * cc) over degrees where defined."""
    analysis = analyze_network(g, "both")
    assert analysis.beta_over_sigma_curve is not None
    assert analysis.beta_over_sigma_cc_curve is not None
    return analysis.beta_over_sigma_curve, analysis.beta_over_sigma_cc_curve
