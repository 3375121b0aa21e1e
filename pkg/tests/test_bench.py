import random

from domkernel.bench import BenchConfig, aggregate, format_table, make_record, run_bench
from domkernel.plangen import sample_specs
from domkernel.reduction import Mode, reduce

from _support import general_small, path, planar_small, star


def test_record_for_star_gadget():
    g = star(3)
    rec = make_record("star", g, reduce(g), Mode.gadget())
    assert (rec.n_before, rec.m_before, rec.n_after, rec.m_after) == (4, 3, 2, 1)
    assert rec.n_after_original == 1 and rec.m_after_original == 0
    assert rec.pct_vertices_removed == 75.0
    assert rec.pct_edges_removed == 100.0
    assert rec.gamma == 1
    assert rec.pct_ds_fixed is None
    assert rec.rule_counts["R1"] == 1 and rec.rule_counts["R2_2"] == 0


def test_record_for_path6_annotated():
    g = path(6)
    mode = Mode.annotated_mode()
    rec = make_record("p6", g, reduce(g, mode), mode)
    assert rec.forced_count == 2 and rec.gamma == 2
    assert rec.pct_ds_fixed == 100.0
    # the two whitened middle vertices survive without the white rules
    assert rec.n_after == 2 and rec.pct_vertices_removed == 100.0 * 4 / 6
    extra = Mode.annotated_mode(extra_rules=True)
    rec = make_record("p6", g, reduce(g, extra), extra)
    assert rec.n_after == 0 and rec.pct_vertices_removed == 100.0


def test_percentages_agree_with_before_after_counts():
    rng = random.Random(12)
    for i in range(200):
        g = planar_small(rng) if i % 2 else general_small(rng)
        for mode in (Mode.gadget(), Mode.annotated_mode(True)):
            rec = make_record(str(i), g, reduce(g, mode), mode)
            expect = 100.0 * (rec.n_before - rec.n_after_original) / rec.n_before if rec.n_before else 0.0
            assert abs(rec.pct_vertices_removed - expect) < 1e-9
            for pct in (rec.pct_vertices_removed, rec.pct_edges_removed, rec.pct_ds_fixed):
                assert pct is None or 0.0 <= pct <= 100.0


def test_bench_shape_and_determinism():
    specs = sample_specs([100], 10, 5)
    config = BenchConfig((100,), 10, 5, timing=False)
    first = run_bench(config, specs)
    second = run_bench(config, specs)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]
    rows = aggregate(first, specs)
    assert len(rows) == 1 and rows[0].instances == 10
    table = format_table(rows)
    assert "%V rem" in table and table.splitlines()[-1].split()[0] == "100"


def test_parallel_bench_matches_serial():
    specs = sample_specs([60, 80], 3, 9)
    serial = run_bench(BenchConfig((60, 80), 3, 9, timing=False), specs)
    parallel = run_bench(BenchConfig((60, 80), 3, 9, jobs=2, timing=False), specs)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]
