"""Random network generation (ER / BA / WS) with node-based edge weights,
plus seeded ensemble runs.

Every realization is reproducible in isolation: realization ``i`` of a
config with seed ``s`` draws its structure from the RNG stream
``SeedSequence([s, i, 0])`` and its weights from ``SeedSequence([s, i, 1])``,
so ensembles can run on any number of workers without changing the output.

Weights follow a per-node scheme: each node draws w_i from a Gaussian with
the configured mean and standard deviation (redrawn, or optionally clamped,
until above a small positive floor), and each edge gets the average of its
endpoint values.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields, replace
from os import PathLike

import numpy as np

from .graph import WeightedGraph, build_graph
from .metrics import (
    CurvePoint,
    DegreeCurve,
    NetworkAnalysis,
    NetworkSummary,
    analyze_network,
    find_k0,
)

MODELS = ("ER", "BA", "WS")
TRUNCATIONS = ("resample", "clamp")
WEIGHT_FLOOR = 1e-6

_STRUCTURE_STREAM = 0
_WEIGHT_STREAM = 1

# NetworkSummary fields aggregated over ensemble realizations
SUMMARY_FIELDS = (
    "n_nodes",
    "n_edges",
    "n_isolated",
    "cc",
    "sigma",
    "beta",
    "k0",
    "k0_w",
    "k0w_over_k0",
    "sigma_over_cc",
    "beta_over_cc",
    "beta_over_sigma",
    "beta_over_sigma_cc",
)


@dataclass(frozen=True)
class GeneratorConfig:
    """Structural and weight parameters for one generator family.

    ``p`` is the connection probability for ER and the rewiring probability
    for WS; ``m0``/``m`` are the BA seed-clique size and edges per new node;
    ``k`` is the (even) WS ring degree.
    """

    model: str
    N: int
    p: float | None = None
    m0: int | None = None
    m: int | None = None
    k: int | None = None
    weight_mean: float = 1.0
    weight_stddev: float = 1.0
    weight_truncation: str = "resample"
    seed: int = 0
    realizations: int = 50

    def validate(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.N < 2:
            raise ValueError(f"N must be at least 2, got {self.N}")
        if self.realizations < 1:
            raise ValueError(f"realizations must be positive, got {self.realizations}")
        if self.weight_stddev < 0:
            raise ValueError(f"weight_stddev must be non-negative, got {self.weight_stddev}")
        if self.weight_stddev == 0 and self.weight_mean <= WEIGHT_FLOOR:
            raise ValueError("weight_mean must exceed the positive floor when weight_stddev is 0")
        if self.weight_truncation not in TRUNCATIONS:
            raise ValueError(
                f"weight_truncation must be one of {TRUNCATIONS}, got {self.weight_truncation!r}"
            )
        if self.model == "ER":
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError(f"ER needs connection probability p in [0, 1], got {self.p!r}")
        elif self.model == "BA":
            if self.m0 is None or self.m is None:
                raise ValueError("BA needs m0 (seed clique size) and m (edges per new node)")
            if not 1 <= self.m <= self.m0:
                raise ValueError(f"BA needs 1 <= m <= m0, got m={self.m}, m0={self.m0}")
            if not self.m0 < self.N:
                raise ValueError(f"BA needs m0 < N, got m0={self.m0}, N={self.N}")
        elif self.model == "WS":
            if self.k is None or self.k < 2 or self.k % 2 != 0:
                raise ValueError(f"WS needs an even ring degree k >= 2, got {self.k!r}")
            if self.k >= self.N:
                raise ValueError(f"WS needs k < N, got k={self.k}, N={self.N}")
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError(f"WS needs rewiring probability p in [0, 1], got {self.p!r}")


def _stream(cfg: GeneratorConfig, realization_index: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([cfg.seed, realization_index, stream]))


def _er_edges(n: int, p: float, rng: np.random.Generator) -> list[tuple[int, int]]:
    iu, ju = np.triu_indices(n, 1)
    mask = rng.random(iu.shape[0]) < p
    return list(zip(iu[mask].tolist(), ju[mask].tolist()))


def _ba_edges(n: int, m0: int, m: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    # seed clique, then degree-proportional attachment via an endpoint multiset;
    # duplicate targets for one new node are redrawn (simple graph)
    edges = [(i, j) for i in range(m0) for j in range(i + 1, m0)]
    endpoints: list[int] = []
    for i, j in edges:
        endpoints.append(i)
        endpoints.append(j)
    for new in range(m0, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(endpoints[int(rng.integers(len(endpoints)))])
        for t in sorted(targets):
            edges.append((t, new))
            endpoints.append(t)
            endpoints.append(new)
    return edges


def _ws_edges(n: int, k: int, p: float, rng: np.random.Generator) -> list[tuple[int, int]]:
    # ring lattice, then one rewiring pass per lattice edge; rewired ends are
    # redrawn to avoid self-loops and duplicates, skipping saturated nodes
    edge_set: set[tuple[int, int]] = set()
    for j in range(1, k // 2 + 1):
        for i in range(n):
            a, b = i, (i + j) % n
            edge_set.add((a, b) if a < b else (b, a))
    for j in range(1, k // 2 + 1):
        for i in range(n):
            a, b = i, (i + j) % n
            key = (a, b) if a < b else (b, a)
            if rng.random() >= p:
                continue
            if len(edge_set) >= n - 1 and _degree_of(edge_set, a) >= n - 1:
                continue
            while True:
                t = int(rng.integers(n))
                new_key = (a, t) if a < t else (t, a)
                if t != a and new_key not in edge_set:
                    edge_set.discard(key)
                    edge_set.add(new_key)
                    break
    return sorted(edge_set)


def _degree_of(edge_set: set[tuple[int, int]], node: int) -> int:
    return sum(1 for a, b in edge_set if a == node or b == node)


def generate_structure(cfg: GeneratorConfig, realization_index: int = 0) -> WeightedGraph:
    """Generate the topology of one realization, all edge weights set to 1.

    Deterministic in (cfg.seed, realization_index); nodes are labeled
    0 .. N-1 and kept even when isolated.
    """
    cfg.validate()
    rng = _stream(cfg, realization_index, _STRUCTURE_STREAM)
    if cfg.model == "ER":
        edges = _er_edges(cfg.N, cfg.p, rng)
    elif cfg.model == "BA":
        edges = _ba_edges(cfg.N, cfg.m0, cfg.m, rng)
    else:
        edges = _ws_edges(cfg.N, cfg.k, cfg.p, rng)
    return build_graph(
        [(i, j, 1.0) for i, j in sorted(edges)], nodes=range(cfg.N)
    )


def _node_weights(cfg: GeneratorConfig, n: int, rng: np.random.Generator) -> list[float]:
    weights = []
    for _ in range(n):
        w = float(rng.normal(cfg.weight_mean, cfg.weight_stddev))
        if cfg.weight_truncation == "clamp":
            w = max(w, WEIGHT_FLOOR)
        else:
            tries = 0
            while w <= WEIGHT_FLOOR:
                w = float(rng.normal(cfg.weight_mean, cfg.weight_stddev))
                tries += 1
                if tries > 10_000:
                    raise ValueError(
                        "weight distribution has almost no mass above the positive floor"
                    )
        weights.append(w)
    return weights


def assign_weights(
    g: WeightedGraph, cfg: GeneratorConfig, rng: np.random.Generator
) -> WeightedGraph:
    """Re-weight a generated topology with the per-node Gaussian scheme.

    One draw per node (in label order), each edge set to the mean of its
    endpoint values; returns a new graph on the same topology.
    """
    node_w = {label: w for label, w in zip(g.labels, _node_weights(cfg, g.node_count, rng))}
    records = [(a, b, 0.5 * (node_w[a] + node_w[b])) for a, b, _ in g.edges()]
    return build_graph(records, nodes=g.labels)


def realization(cfg: GeneratorConfig, realization_index: int = 0) -> WeightedGraph:
    """Structure plus weights for one realization, fully seeded."""
    structure = generate_structure(cfg, realization_index)
    rng = _stream(cfg, realization_index, _WEIGHT_STREAM)
    return assign_weights(structure, cfg, rng)


@dataclass(frozen=True)
class EnsembleSummary:
    """Aggregate of per-realization summaries.

    ``mean``/``std`` hold per-field arithmetic means and population standard
    deviations over the realizations where the field is defined (``defined``
    gives that count; fields undefined everywhere aggregate to None). Mean
    degree curves average each degree over the realizations that contain it
    (missing degrees contribute nothing), with ``count`` carrying the total
    number of sampled victims and ``curve_realizations`` how many
    realizations contributed. Critical degrees are aggregated both ways:
    as means of per-realization values (in ``mean``) and as the minimum of
    the mean curve.
    """

    config: GeneratorConfig
    summaries: tuple[NetworkSummary, ...]
    mean: dict[str, float | None]
    std: dict[str, float | None]
    defined: dict[str, int]
    sigma_curve: DegreeCurve
    beta_curve: DegreeCurve
    cc_curve: DegreeCurve
    curve_realizations: dict[int, int]
    k0_of_mean_curve: int | None
    k0w_of_mean_curve: int | None


def _summarize_realization(args: tuple[GeneratorConfig, int, int]) -> NetworkAnalysis:
    cfg, index, min_samples = args
    return analyze_network(realization(cfg, index), "both", min_samples)


def _mean_curve(
    curves: list[DegreeCurve],
) -> tuple[DegreeCurve, dict[int, int]]:
    values: dict[int, list[float]] = {}
    counts: dict[int, int] = {}
    for curve in curves:
        for k in curve.degrees():
            values.setdefault(k, []).append(curve.value(k))
            counts[k] = counts.get(k, 0) + curve.count(k)
    points = {
        k: CurvePoint(value=math.fsum(vals) / len(vals), count=counts[k])
        for k, vals in sorted(values.items())
    }
    return DegreeCurve(points), {k: len(vals) for k, vals in sorted(values.items())}


def run_ensemble(
    cfg: GeneratorConfig, min_samples: int = 1, workers: int = 1
) -> EnsembleSummary:
    """Generate, weight and summarize ``cfg.realizations`` independent
    networks and aggregate the results.

    ``workers`` > 1 distributes realizations over processes; the output is
    identical for any worker count because every realization owns its RNG
    streams and aggregation runs in realization order.
    """
    cfg.validate()
    jobs = [(cfg, i, min_samples) for i in range(cfg.realizations)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            analyses = list(pool.map(_summarize_realization, jobs))
    else:
        analyses = [_summarize_realization(job) for job in jobs]

    summaries = tuple(a.summary for a in analyses)
    mean: dict[str, float | None] = {}
    std: dict[str, float | None] = {}
    defined: dict[str, int] = {}
    for name in SUMMARY_FIELDS:
        values = [float(getattr(s, name)) for s in summaries if getattr(s, name) is not None]
        defined[name] = len(values)
        if values:
            m = math.fsum(values) / len(values)
            mean[name] = m
            std[name] = math.sqrt(math.fsum((x - m) ** 2 for x in values) / len(values))
        else:
            mean[name] = None
            std[name] = None

    sigma_curve, curve_reals = _mean_curve([a.sigma_curve for a in analyses])
    beta_curve, _ = _mean_curve([a.beta_curve for a in analyses])
    cc_curve, _ = _mean_curve([a.cc_curve for a in analyses])
    k0_mean_curve, _ = find_k0(sigma_curve, min_samples)
    k0w_mean_curve, _ = find_k0(beta_curve, min_samples)

    return EnsembleSummary(
        config=cfg,
        summaries=summaries,
        mean=mean,
        std=std,
        defined=defined,
        sigma_curve=sigma_curve,
        beta_curve=beta_curve,
        cc_curve=cc_curve,
        curve_realizations=curve_reals,
        k0_of_mean_curve=k0_mean_curve,
        k0w_of_mean_curve=k0w_mean_curve,
    )


# -- plain key-value config files --------------------------------------------

_INT_FIELDS = {"N", "m0", "m", "k", "seed", "realizations"}
_FLOAT_FIELDS = {"p", "weight_mean", "weight_stddev"}
_STR_FIELDS = {"model", "weight_truncation"}
_ALL_FIELDS = _INT_FIELDS | _FLOAT_FIELDS | _STR_FIELDS


def save_config(cfg: GeneratorConfig, path: str | PathLike[str]) -> None:
    """Write ``key = value`` lines, one per set field, in declaration order."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for f in fields(cfg):
            value = getattr(cfg, f.name)
            if value is None:
                continue
            fh.write(f"{f.name} = {value}\n")


def load_config(path: str | PathLike[str], **overrides) -> GeneratorConfig:
    """Read a ``key = value`` config file ('#' comments allowed) and validate.

    Keyword overrides replace file values (e.g. ``seed=...`` for a new run).
    """
    raw: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, eq, value = line.partition("=")
            key = key.strip()
            if not eq or key not in _ALL_FIELDS:
                raise ValueError(f"{path}:{lineno}: unknown config line {line!r}")
            raw[key] = value.strip()
    kwargs: dict[str, object] = {}
    for key, text in raw.items():
        if key in _INT_FIELDS:
            kwargs[key] = int(text)
        elif key in _FLOAT_FIELDS:
            kwargs[key] = float(text)
        else:
            kwargs[key] = text
    if "model" not in kwargs or "N" not in kwargs:
        raise ValueError(f"{path}: config must set at least 'model' and 'N'")
    cfg = replace(GeneratorConfig(**kwargs), **overrides)
    cfg.validate()
    return cfg
