"""Gossip cascades about a single victim, in both model variants.

Gossip about a victim ``v`` travels only between neighbors of ``v``: each
transmission needs a triangle (victim, spreader, target), so a cascade is a
walk through the subgraph induced by the victim's 1-neighborhood. In the
base (unweighted) model every knower forwards to all of its local
neighbors. In the weighted model a node ``s`` keeps quiet when the victim
is a close friend, i.e. when the edge weight w(s, v) strictly exceeds s's
mean incident weight; such nodes still receive and count as knowers, they
just never send. The originator is subject to the same rule before its
first send.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Label, WeightedGraph, _local_index

MODELS = ("unweighted", "weighted", "both")


@dataclass(frozen=True)
class CascadeResult:
    """Outcome of one (victim, originator) cascade.

    ``knowers`` always contains the originator; ``spreading_time`` is the
    largest number of propagation hops from the originator over the knower
    set (0 when nobody else hears the gossip). ``fraction`` is
    count / victim degree.
    """

    victim: Label
    originator: Label
    knowers: frozenset[Label]
    spreading_time: int
    fraction: float

    @property
    def count(self) -> int:
        return len(self.knowers)


@dataclass(frozen=True)
class OriginatorOutcome:
    """Per-originator spread fractions and hop counts for one victim.

    ``sigma``/``tau_unweighted`` belong to the base model and
    ``beta``/``tau_weighted`` to the weighted model; fields are None for a
    model that was not run (and hop counts are None on the component-based
    fast path, which reproduces counts only).
    """

    originator: Label
    sigma: float | None = None
    beta: float | None = None
    tau_unweighted: int | None = None
    tau_weighted: int | None = None


@dataclass(frozen=True)
class VictimSpread:
    """Spread factors of one victim, averaged over all originators.

    ``sigma`` and ``beta`` are the means of the per-originator fractions
    (None for a model not run, and both None for an isolated victim).
    """

    victim: Label
    degree: int
    sigma: float | None
    beta: float | None
    per_originator: tuple[OriginatorOutcome, ...]


def is_close_friend(g: WeightedGraph, s: Label, v: Label) -> bool:
    """True when ``v`` is a close friend of ``s`` (so ``s`` will not gossip).

    The test is w(s, v) * degree(s) > strength(s), the multiplied-through
    form of "edge weight strictly above s's mean incident weight"; it is
    exact in floating point when all of s's weights are equal, where the
    strict inequality must fail. The relation is intentionally asymmetric.
    """
    si = g.index_of(s)
    vi = g.index_of(v)
    try:
        w = g._adj[si][vi]
    except KeyError:
        raise ValueError(f"no edge between {s!r} and {v!r}") from None
    return w * g._degrees[si] > g._strengths[si]


def _forwarding_flags(g: WeightedGraph, v_idx: int, nbrs: list[int]) -> list[bool]:
    """Whether each neighbor of the victim forwards gossip about it."""
    adj, deg, strength = g._adj, g._degrees, g._strengths
    return [not (adj[u][v_idx] * deg[u] > strength[u]) for u in nbrs]


def _bfs(
    ladj: list[list[int]], start: int, fwd: list[bool] | None
) -> tuple[dict[int, int], int]:
    """Hop distances from ``start`` along permitted paths.

    Expansion happens only from forwarding nodes (all nodes when ``fwd`` is
    None); non-forwarding nodes are reached and recorded but never expanded.
    Returns (local index -> hop distance, max distance).
    """
    dist = {start: 0}
    if fwd is not None and not fwd[start]:
        return dist, 0
    tau = 0
    queue = deque([start])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in ladj[x]:
            if y not in dist:
                dist[y] = d
                tau = d
                if fwd is None or fwd[y]:
                    queue.append(y)
    return dist, tau


def _unweighted_counts(n_local: int, ladj: list[list[int]]) -> list[int]:
    """n_vr for every originator: the size of its local connected component."""
    comp = [-1] * n_local
    sizes: list[int] = []
    for i in range(n_local):
        if comp[i] >= 0:
            continue
        c = len(sizes)
        comp[i] = c
        stack = [i]
        size = 0
        while stack:
            x = stack.pop()
            size += 1
            for y in ladj[x]:
                if comp[y] < 0:
                    comp[y] = c
                    stack.append(y)
        sizes.append(size)
    return [sizes[comp[i]] for i in range(n_local)]


def _weighted_counts(n_local: int, ladj: list[list[int]], fwd: list[bool]) -> list[int]:
    """m_vr for every originator.

    Forwarding nodes sharing a component of the forwarding-only subgraph
    reach that whole component plus its non-forwarding boundary; a
    non-forwarding originator reaches nobody (m = 1).
    """
    m_per = [1] * n_local
    seen = [False] * n_local
    for i in range(n_local):
        if not fwd[i] or seen[i]:
            continue
        seen[i] = True
        stack = [i]
        members: list[int] = []
        boundary: set[int] = set()
        while stack:
            x = stack.pop()
            members.append(x)
            for y in ladj[x]:
                if fwd[y]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                else:
                    boundary.add(y)
        reach = len(members) + len(boundary)
        for x in members:
            m_per[x] = reach
    return m_per


def _require_neighbor(g: WeightedGraph, v: Label, r: Label) -> tuple[int, int]:
    v_idx = g.index_of(v)
    r_idx = g.index_of(r)
    if r_idx not in g._adj[v_idx]:
        raise ValueError(f"originator {r!r} is not a neighbor of victim {v!r}")
    return v_idx, r_idx


def _cascade(g: WeightedGraph, v: Label, r: Label, weighted: bool) -> CascadeResult:
    v_idx, r_idx = _require_neighbor(g, v, r)
    nbrs, ladj, _ = _local_index(g, v_idx)
    start = nbrs.index(r_idx)
    fwd = _forwarding_flags(g, v_idx, nbrs) if weighted else None
    dist, tau = _bfs(ladj, start, fwd)
    knowers = frozenset(g.label_of(nbrs[i]) for i in dist)
    return CascadeResult(
        victim=v,
        originator=r,
        knowers=knowers,
        spreading_time=tau,
        fraction=len(knowers) / len(nbrs),
    )


def cascade_unweighted(g: WeightedGraph, v: Label, r: Label) -> CascadeResult:
    """Base-model cascade: every knower forwards to every local neighbor."""
    return _cascade(g, v, r, weighted=False)


def cascade_weighted(g: WeightedGraph, v: Label, r: Label) -> CascadeResult:
    """Close-friend-rule cascade: nodes for whom the victim is a close friend
    receive the gossip but never forward it."""
    return _cascade(g, v, r, weighted=True)


def _check_model(model: str) -> None:
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")


def victim_spread(g: WeightedGraph, v: Label, model: str = "both") -> VictimSpread:
    """Run the cascade from every originator and average, by per-originator BFS.

    This is the reference path: one breadth-first search per originator,
    recording hop counts. For an isolated victim all spread fields are None.
    """
    _check_model(model)
    v_idx = g.index_of(v)
    nbrs, ladj, _ = _local_index(g, v_idx)
    k = len(nbrs)
    if k == 0:
        return VictimSpread(victim=v, degree=0, sigma=None, beta=None, per_originator=())

    run_u = model in ("unweighted", "both")
    run_w = model in ("weighted", "both")
    fwd = _forwarding_flags(g, v_idx, nbrs) if run_w else None

    outcomes = []
    n_total = 0
    m_total = 0
    for i in range(k):
        sigma = beta = None
        tau_u = tau_w = None
        if run_u:
            dist, tau_u = _bfs(ladj, i, None)
            n_total += len(dist)
            sigma = len(dist) / k
        if run_w:
            dist, tau_w = _bfs(ladj, i, fwd)
            m_total += len(dist)
            beta = len(dist) / k
        outcomes.append(
            OriginatorOutcome(
                originator=g.label_of(nbrs[i]),
                sigma=sigma,
                beta=beta,
                tau_unweighted=tau_u,
                tau_weighted=tau_w,
            )
        )
    return VictimSpread(
        victim=v,
        degree=k,
        sigma=n_total / (k * k) if run_u else None,
        beta=m_total / (k * k) if run_w else None,
        per_originator=tuple(outcomes),
    )


def fast_victim_spread(g: WeightedGraph, v: Label, model: str = "both") -> VictimSpread:
    """Same counts as :func:`victim_spread` without per-originator searches.

    Knower counts come from connected components of the local subgraph (base
    model) and of its forwarding-node restriction with boundary absorption
    (weighted model); they are bit-identical to the BFS path. Hop counts are
    not computed here (None).
    """
    _check_model(model)
    v_idx = g.index_of(v)
    nbrs, ladj, _ = _local_index(g, v_idx)
    k = len(nbrs)
    if k == 0:
        return VictimSpread(victim=v, degree=0, sigma=None, beta=None, per_originator=())

    run_u = model in ("unweighted", "both")
    run_w = model in ("weighted", "both")
    n_per = _unweighted_counts(k, ladj) if run_u else None
    m_per = None
    if run_w:
        fwd = _forwarding_flags(g, v_idx, nbrs)
        m_per = _weighted_counts(k, ladj, fwd)

    outcomes = tuple(
        OriginatorOutcome(
            originator=g.label_of(nbrs[i]),
            sigma=n_per[i] / k if n_per is not None else None,
            beta=m_per[i] / k if m_per is not None else None,
        )
        for i in range(k)
    )
    return VictimSpread(
        victim=v,
        degree=k,
        sigma=sum(n_per) / (k * k) if n_per is not None else None,
        beta=sum(m_per) / (k * k) if m_per is not None else None,
        per_originator=outcomes,
    )
