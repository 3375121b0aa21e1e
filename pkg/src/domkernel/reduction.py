"""Data reduction for Dominating Set: single-vertex rule, pair rule, white rules.

Two modes are supported:

* gadget mode keeps the instance a plain graph; a vertex that must be in
  some optimal solution gets a fresh pendant neighbor (or, for the
  undecided pair case, the ``z, z'`` square) and gamma is preserved exactly;
* annotated mode works on black/white graphs: forced vertices are recorded,
  deleted, and their neighbors whitened, so
  ``gamma(G) == len(forced) + gamma_bw(kernel)``.

Every application must strictly shrink ``|V| + |E|`` (the progress guard),
which keeps gadgets from being re-created forever and bounds the number of
events by the size of the input.
"""

from __future__ import annotations

import enum
import heapq
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph import Color, Graph, GraphError, Origin
from .partition import pair_sets, single_sets


class ModeKind(enum.Enum):
    GADGET = "gadget"
    ANNOTATED = "annotated"


@dataclass(frozen=True)
class Mode:
    kind: ModeKind = ModeKind.GADGET
    extra_rules: bool = False

    def __post_init__(self) -> None:
        if self.extra_rules and self.kind is not ModeKind.ANNOTATED:
            raise ValueError("extra rules need annotated mode")

    @property
    def annotated(self) -> bool:
        return self.kind is ModeKind.ANNOTATED

    @classmethod
    def gadget(cls) -> Mode:
        return cls(ModeKind.GADGET)

    @classmethod
    def annotated_mode(cls, extra_rules: bool = False) -> Mode:
        return cls(ModeKind.ANNOTATED, extra_rules)

    @property
    def label(self) -> str:
        return self.kind.value + ("+extra" if self.extra_rules else "")


class Rule(enum.Enum):
    R1 = "R1"
    R2_1_1 = "R2_1_1"
    R2_1_2 = "R2_1_2"
    R2_1_3 = "R2_1_3"
    R2_2 = "R2_2"
    W1 = "W1"
    W2 = "W2"
    W3 = "W3"


@dataclass(frozen=True)
class RuleEvent:
    """One rule application.

    ``removed`` includes forced vertices (they leave the graph too).
    ``added_edges`` lists every gadget edge as ``(gadget, anchor)``.
    """

    rule: Rule
    centers: tuple[int, ...]
    removed: frozenset[int]
    added_gadgets: tuple[int, ...]
    added_edges: tuple[tuple[int, int], ...]
    forced: frozenset[int]
    whitened: frozenset[int]
    delta_potential: int

    def to_dict(self) -> dict:
        return {
            "rule": self.rule.value,
            "centers": list(self.centers),
            "removed": sorted(self.removed),
            "added_gadgets": list(self.added_gadgets),
            "forced": sorted(self.forced),
            "delta_potential": self.delta_potential,
        }


@dataclass
class ReductionStats:
    n_before: int
    m_before: int
    n_after: int = 0
    m_after: int = 0
    n_after_original: int = 0
    m_after_original: int = 0
    rule_counts: dict[str, int] = field(default_factory=dict)
    rounds: int = 0
    elapsed_ms: float = 0.0


@dataclass
class ReductionResult:
    graph: Graph
    forced: frozenset[int]
    events: list[RuleEvent]
    stats: ReductionStats

    def lift(self, kernel_solution: Iterable[int]) -> set[int]:
        """Map a dominating set of the kernel back onto the input graph."""
        return lift_solution(self.events, kernel_solution)


@dataclass
class _Plan:
    rule: Rule
    centers: tuple[int, ...]
    remove: set[int]
    gadget_anchors: list[tuple[int, ...]]
    forced: set[int]
    whiten: set[int]
    delta: int


def _potential_drop(adj: dict[int, set[int]], remove: set[int]) -> int:
    """Vertices plus edges that disappear when ``remove`` is deleted."""
    incident = 0
    inner = 0
    for x in remove:
        nbrs = adj[x]
        incident += len(nbrs)
        if len(nbrs) < len(remove):
            inner += sum(1 for y in nbrs if y in remove)
        else:
            inner += sum(1 for y in remove if y in nbrs)
    return len(remove) + incident - inner // 2


def _finish(plan: _Plan, adj: dict[int, set[int]]) -> _Plan | None:
    added = sum(1 + len(a) for a in plan.gadget_anchors)
    plan.delta = added - _potential_drop(adj, plan.remove)
    return plan if plan.delta < 0 else None


def _plan_rule1(g: Graph, v: int, mode: Mode) -> _Plan | None:
    adj = g.adj
    _, n2, n3 = single_sets(g, v)
    if not n3:
        return None
    remove = n2 | n3
    if mode.annotated:
        color = g.color
        if not any(color[u] is Color.BLACK for u in n3):
            return None
        whiten = {u for u in adj[v] if u not in remove and color[u] is Color.BLACK}
        remove.add(v)
        return _finish(_Plan(Rule.R1, (v,), remove, [], {v}, whiten, 0), adj)
    return _finish(_Plan(Rule.R1, (v,), remove, [(v,)], set(), set(), 0), adj)


def _plan_rule2(g: Graph, v: int, w: int, mode: Mode) -> _Plan | None:
    adj = g.adj
    _, n2, n3 = pair_sets(g, v, w)
    if len(n3) < 2:
        # a lone prisoner dominates itself
        return None
    if mode.annotated:
        color = g.color
        target = {u for u in n3 if color[u] is Color.BLACK}
        if len(target) < 2:
            return None
    else:
        target = n3
    for x in n2 | n3:
        nx = adj[x]
        if all(u == x or u in nx for u in target):
            return None

    nv, nw = adj[v], adj[w]
    in_v = target <= nv
    in_w = target <= nw
    if in_v and in_w:
        remove = n3 | (n2 & nv & nw)
        plan = _Plan(Rule.R2_1_1, (v, w), remove, [(v, w), (v, w)], set(), set(), 0)
        return _finish(plan, adj)

    if in_v:
        rule, remove, force = Rule.R2_1_2, n3 | (n2 & nv), (v,)
    elif in_w:
        rule, remove, force = Rule.R2_1_3, n3 | (n2 & nw), (w,)
    else:
        rule, remove, force = Rule.R2_2, n3 | n2, (v, w)

    if mode.annotated:
        color = g.color
        remove |= set(force)
        whiten = set()
        for c in force:
            whiten |= {u for u in adj[c] if u not in remove and color[u] is Color.BLACK}
        return _finish(_Plan(rule, (v, w), remove, [], set(force), whiten, 0), adj)
    return _finish(_Plan(rule, (v, w), remove, [(c,) for c in force], set(), set(), 0), adj)


def _plan_white(g: Graph, u: int) -> _Plan | None:
    if g.color[u] is not Color.WHITE:
        return None
    adj = g.adj
    nbrs = adj[u]
    deg = len(nbrs)
    rule = None
    if deg <= 1:
        rule = Rule.W1
    elif deg == 2:
        a, b = nbrs
        # distance measured with u itself taken out
        if b in adj[a] or any(x != u and x in adj[b] for x in adj[a]):
            rule = Rule.W2
    elif deg == 3:
        a, b, c = nbrs
        links = (b in adj[a]) + (c in adj[a]) + (c in adj[b])
        if links >= 2:
            rule = Rule.W3
    if rule is None:
        return None
    return _Plan(rule, (u,), {u}, [], set(), set(), -(1 + deg))


def _apply(g: Graph, plan: _Plan) -> RuleEvent:
    for x in plan.remove:
        g.remove_vertex(x)
    for x in plan.whiten:
        g.set_color(x, Color.WHITE)
    gadgets = []
    edges = []
    for anchors in plan.gadget_anchors:
        z = g.add_vertex(Color.BLACK, Origin.GADGET)
        gadgets.append(z)
        for a in anchors:
            g.add_edge(z, a)
            edges.append((z, a))
    return RuleEvent(
        rule=plan.rule,
        centers=plan.centers,
        removed=frozenset(plan.remove),
        added_gadgets=tuple(gadgets),
        added_edges=tuple(edges),
        forced=frozenset(plan.forced),
        whitened=frozenset(plan.whiten),
        delta_potential=plan.delta,
    )


def _require(g: Graph, *vs: int) -> None:
    for v in vs:
        if v not in g.adj:
            raise GraphError(f"vertex {v} is not live")


def try_rule1(g: Graph, v: int, mode: Mode) -> RuleEvent | None:
    """Apply the single-vertex rule at ``v`` if it makes progress."""
    _require(g, v)
    plan = _plan_rule1(g, v, mode)
    return _apply(g, plan) if plan else None


def try_rule2(g: Graph, v: int, w: int, mode: Mode) -> RuleEvent | None:
    """Apply the pair rule at ``(v, w)`` if it makes progress."""
    if v == w:
        raise GraphError("pair rule needs two distinct vertices")
    _require(g, v, w)
    plan = _plan_rule2(g, v, w, mode)
    return _apply(g, plan) if plan else None


def try_white_rules(g: Graph, u: int) -> RuleEvent | None:
    """Delete a white vertex that is never needed as a dominator.

    Degree 0/1; degree 2 with neighbors at distance <= 2 in ``G - u``;
    degree 3 with a connected neighbor subgraph. Black vertices are left
    alone.
    """
    _require(g, u)
    plan = _plan_white(g, u)
    return _apply(g, plan) if plan else None


# -- scheduler -----------------------------------------------------------


class _Order:
    """Visit order: by id, or by a seeded random key per vertex."""

    def __init__(self, seed: int | None) -> None:
        self._rng = random.Random(seed) if seed is not None else None
        self._keys: dict[int, float] = {}

    def key(self, v: int) -> float:
        if self._rng is None:
            return v
        k = self._keys.get(v)
        if k is None:
            k = self._keys[v] = self._rng.random()
        return k


class _Reducer:
    def __init__(self, g: Graph, mode: Mode, all_pairs: bool, order_seed: int | None) -> None:
        self.g = g
        self.mode = mode
        self.all_pairs = all_pairs
        self.order = _Order(order_seed)
        self.events: list[RuleEvent] = []
        self.forced: set[int] = set()

    def _record(self, event: RuleEvent) -> None:
        self.events.append(event)
        self.forced |= event.forced

    def _exhaust_rule1(self, work: Iterable[int]) -> int:
        g, key = self.g, self.order.key
        heap = [(key(v), v) for v in work if v in g.adj]
        heapq.heapify(heap)
        queued = {v for _, v in heap}
        count = 0
        while heap:
            _, v = heapq.heappop(heap)
            queued.discard(v)
            if v not in g.adj:
                continue
            plan = _plan_rule1(g, v, self.mode)
            if plan is None:
                continue
            touched = g.ball((v,), 3)
            event = _apply(g, plan)
            self._record(event)
            count += 1
            for x in touched.union(event.added_gadgets):
                if x in g.adj and x not in queued:
                    queued.add(x)
                    heapq.heappush(heap, (key(x), x))
        return count

    def _pair_candidates(self, v: int) -> list[int]:
        """Partners for ``v``, widest pairs first, then by visit key.

        Pairs farther apart than 3 never fire while the single-vertex rule
        is exhausted, so the all-pairs ordering only differs by leading
        no-op candidates.
        """
        g, key = self.g, self.order.key
        kv = key(v)
        if self.all_pairs:
            dist = g.distances(v)
            pool = [w for w in g.adj if key(w) > kv]
            far = len(g.adj)
            return sorted(pool, key=lambda w: (-dist.get(w, far), key(w)))
        dist = g.distances(v, 3)
        pool = [w for w in dist if key(w) > kv]
        return sorted(pool, key=lambda w: (-dist[w], key(w)))

    def _sweep_rule2(self) -> int:
        # Candidate lists are snapshots: rule steps never shorten distances,
        # so a partner out of range stays out of range for the whole pass.
        g = self.g
        count = 0
        for v in sorted(g.adj, key=self.order.key):
            if v not in g.adj:
                continue
            for w in self._pair_candidates(v):
                if v not in g.adj:
                    break
                if w not in g.adj:
                    continue
                plan = _plan_rule2(g, v, w, self.mode)
                if plan is None:
                    continue
                touched = g.ball((v, w), 3)
                event = _apply(g, plan)
                self._record(event)
                count += 1
                # keep the single-vertex rule exhausted between pair steps
                count += self._exhaust_rule1(touched.union(event.added_gadgets))
        return count

    def _exhaust_white(self) -> int:
        g, key = self.g, self.order.key
        heap = [(key(v), v) for v in g.adj if g.color[v] is Color.WHITE]
        heapq.heapify(heap)
        queued = {v for _, v in heap}
        count = 0
        while heap:
            _, u = heapq.heappop(heap)
            queued.discard(u)
            if u not in g.adj:
                continue
            plan = _plan_white(g, u)
            if plan is None:
                continue
            touched = g.ball((u,), 2)
            self._record(_apply(g, plan))
            count += 1
            for x in touched:
                if x in g.adj and x not in queued and g.color[x] is Color.WHITE:
                    queued.add(x)
                    heapq.heappush(heap, (key(x), x))
        return count

    def run(self) -> int:
        rounds = 0
        while True:
            rounds += 1
            applied = self._exhaust_rule1(list(self.g.adj))
            applied += self._sweep_rule2()
            if self.mode.extra_rules:
                applied += self._exhaust_white()
            if applied == 0:
                return rounds


def reduce(
    g: Graph,
    mode: Mode = Mode(),
    *,
    all_pairs: bool = False,
    order_seed: int | None = None,
) -> ReductionResult:
    """Reduce a copy of ``g`` until no rule applies.

    ``all_pairs`` tries the pair rule on every vertex pair instead of only
    pairs within distance 3; ``order_seed`` shuffles the visit order.
    """
    if not mode.annotated and any(c is Color.WHITE for c in g.color.values()):
        raise ValueError("gadget mode needs an all-black graph; use annotated mode")
    start = time.perf_counter()
    work = g.copy()
    reducer = _Reducer(work, mode, all_pairs, order_seed)
    rounds = reducer.run()
    stats = ReductionStats(n_before=g.num_vertices, m_before=g.num_edges)
    _fill_after(stats, work)
    stats.rule_counts = dict(Counter(e.rule.value for e in reducer.events))
    stats.rounds = rounds
    stats.elapsed_ms = 1000.0 * (time.perf_counter() - start)
    return ReductionResult(work, frozenset(reducer.forced), reducer.events, stats)


def _fill_after(stats: ReductionStats, g: Graph) -> None:
    orig = {v for v, o in g.origin.items() if o is Origin.ORIGINAL}
    stats.n_after = g.num_vertices
    stats.m_after = g.num_edges
    stats.n_after_original = len(orig)
    stats.m_after_original = sum(
        1 for u in orig for x in g.adj[u] if x in orig and u < x
    )


def is_reduced(g: Graph, mode: Mode = Mode()) -> bool:
    """True iff no rule would fire anywhere; does not mutate ``g``.

    Pairs farther apart than 3 are skipped: once the single-vertex rule is
    exhausted such pairs can never satisfy the pair rule.
    """
    for v in g.adj:
        if _plan_rule1(g, v, mode) is not None:
            return False
    for v in g.adj:
        for w in g.ball((v,), 3):
            if w > v and _plan_rule2(g, v, w, mode) is not None:
                return False
    if mode.extra_rules:
        for u in g.adj:
            if _plan_white(g, u) is not None:
                return False
    return True


def lift_solution(events: list[RuleEvent], kernel_solution: Iterable[int]) -> set[int]:
    """Replay ``events`` backwards to turn a kernel solution into one for the input.

    Gadgets in the solution are traded for their anchors (never growing the
    set) and forced vertices are added back.
    """
    sol = set(kernel_solution)
    for event in reversed(events):
        if event.added_gadgets:
            gadgets = set(event.added_gadgets)
            hit = sol & gadgets
            if hit:
                sol -= gadgets
                sol |= {a for z, a in event.added_edges if z in hit}
        sol |= event.forced
    return sol


def count_original_removed(events: list[RuleEvent], origin_of: Callable[[int], Origin]) -> int:
    """Number of original-origin vertices deleted according to the event log."""
    return sum(1 for e in events for x in e.removed if origin_of(x) is Origin.ORIGINAL)
