"""Per-instance reduction records and the planar benchmark harness."""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .graph import Graph, Origin
from .plangen import GenSpec, random_planar
from .reduction import Mode, ReductionResult, Rule, count_original_removed, reduce
from .solver import BRUTE_FORCE_CAP, brute_force_gamma


@dataclass
class BenchRecord:
    instance_id: str
    n_before: int
    m_before: int
    n_after: int
    m_after: int
    n_after_original: int
    m_after_original: int
    forced_count: int
    rule_counts: dict[str, int]
    elapsed_ms: float | None
    gamma: int | None
    pct_vertices_removed: float
    pct_edges_removed: float
    pct_ds_fixed: float | None

    def to_dict(self) -> dict:
        return asdict(self)


def _pct(part: int, whole: int) -> float:
    return 100.0 * part / whole if whole else 0.0


def make_record(
    instance_id: str,
    original: Graph,
    result: ReductionResult,
    mode: Mode,
    with_gamma: bool = True,
    timing: bool = True,
) -> BenchRecord:
    """Summarize one reduction.

    Removal percentages count original vertices/edges only, so gadgets can
    never push them outside [0, 100]. The vertex figure comes from the
    event log; ``n_after_original`` gives the same number independently.
    """
    st = result.stats
    removed = count_original_removed(
        result.events, lambda x: original.origin.get(x, Origin.GADGET)
    )
    gamma = None
    pct_ds = None
    if with_gamma and result.graph.num_vertices <= BRUTE_FORCE_CAP:
        gamma = len(result.forced) + brute_force_gamma(result.graph).gamma
        if mode.annotated and gamma:
            pct_ds = _pct(len(result.forced), gamma)
    counts = {r.value: 0 for r in Rule}
    counts.update(st.rule_counts)
    return BenchRecord(
        instance_id=instance_id,
        n_before=st.n_before,
        m_before=st.m_before,
        n_after=st.n_after,
        m_after=st.m_after,
        n_after_original=st.n_after_original,
        m_after_original=st.m_after_original,
        forced_count=len(result.forced),
        rule_counts=counts,
        elapsed_ms=round(st.elapsed_ms, 3) if timing else None,
        gamma=gamma,
        pct_vertices_removed=_pct(removed, st.n_before),
        pct_edges_removed=_pct(st.m_before - st.m_after_original, st.m_before),
        pct_ds_fixed=pct_ds,
    )


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...]
    count: int
    seed: int
    mode: Mode = field(default_factory=lambda: Mode.annotated_mode(extra_rules=True))
    jobs: int = 1
    timing: bool = True


@dataclass
class SizeRow:
    n: int
    instances: int
    mean_pct_vertices_removed: float
    mean_pct_edges_removed: float
    mean_elapsed_ms: float | None
    mean_pct_ds_fixed: float | None
    ds_fixed_instances: int
    sparse_mean_pct_vertices_removed: float | None


def _run_one(args: tuple[str, GenSpec, Mode, bool]) -> BenchRecord:
    instance_id, spec, mode, timing = args
    g = random_planar(spec)
    return make_record(instance_id, g, reduce(g, mode), mode, timing=timing)


def run_bench(config: BenchConfig, specs: list[GenSpec]) -> list[BenchRecord]:
    jobs = [
        (f"n{s.n}-{i:03d}", s, config.mode, config.timing)
        for i, s in enumerate(specs)
    ]
    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            return list(pool.map(_run_one, jobs, chunksize=4))
    return [_run_one(j) for j in jobs]


def _mean(xs):
    return statistics.fmean(xs) if xs else None


def aggregate(records: list[BenchRecord], specs: list[GenSpec]) -> list[SizeRow]:
    by_size: dict[int, list[tuple[BenchRecord, GenSpec]]] = {}
    for rec, spec in zip(records, specs):
        by_size.setdefault(spec.n, []).append((rec, spec))
    rows = []
    for n, items in by_size.items():
        recs = [r for r, _ in items]
        ds = [r.pct_ds_fixed for r in recs if r.pct_ds_fixed is not None]
        times = [r.elapsed_ms for r in recs if r.elapsed_ms is not None]
        sparse = [r.pct_vertices_removed for r, s in items if s.m <= 2 * s.n]
        rows.append(
            SizeRow(
                n=n,
                instances=len(recs),
                mean_pct_vertices_removed=_mean([r.pct_vertices_removed for r in recs]),
                mean_pct_edges_removed=_mean([r.pct_edges_removed for r in recs]),
                mean_elapsed_ms=_mean(times),
                mean_pct_ds_fixed=_mean(ds),
                ds_fixed_instances=len(ds),
                sparse_mean_pct_vertices_removed=_mean(sparse),
            )
        )
    return rows


def format_table(rows: list[SizeRow]) -> str:
    def f(x, spec=".2f"):
        return "-" if x is None else format(x, spec)

    header = f"{'n':>6} {'inst':>5} {'%V rem':>8} {'%E rem':>8} {'ms':>10} {'%DS fixed':>10}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r.n:>6} {r.instances:>5} {f(r.mean_pct_vertices_removed):>8} "
            f"{f(r.mean_pct_edges_removed):>8} {f(r.mean_elapsed_ms, '.1f'):>10} "
            f"{f(r.mean_pct_ds_fixed):>10}"
        )
    return "\n".join(lines)
