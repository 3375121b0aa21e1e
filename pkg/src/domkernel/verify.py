"""Oracle-equivalence protocol: reduce, then compare exhaustive gamma on both sides."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from . import reduction
from .graph import Graph
from .io import save_graph
from .plangen import GenSpec, random_planar
from .reduction import Mode
from .solver import brute_force_gamma

KERNEL_FACTOR = 335


@dataclass
class VerifyCase:
    instance_id: str
    n: int
    m: int
    planar: bool
    gamma: int
    forced: int
    kernel_gamma: int
    kernel_size: int
    gamma_ok: bool
    bound_ok: bool
    dump_path: str | None = None

    @property
    def ok(self) -> bool:
        return self.gamma_ok and (self.bound_ok or not self.planar)


def check_instance(
    instance_id: str, g: Graph, mode: Mode, planar: bool, dump_dir: str | None = None
) -> VerifyCase:
    # looked up at call time so tests can swap in a broken reducer
    red = reduction.reduce(g, mode)
    gamma = brute_force_gamma(g).gamma
    kernel_gamma = brute_force_gamma(red.graph).gamma
    case = VerifyCase(
        instance_id=instance_id,
        n=g.num_vertices,
        m=g.num_edges,
        planar=planar,
        gamma=gamma,
        forced=len(red.forced),
        kernel_gamma=kernel_gamma,
        kernel_size=red.graph.num_vertices,
        gamma_ok=gamma == len(red.forced) + kernel_gamma,
        bound_ok=red.graph.num_vertices <= KERNEL_FACTOR * gamma,
    )
    if not case.ok and dump_dir is not None:
        os.makedirs(dump_dir, exist_ok=True)
        path = os.path.join(dump_dir, f"verify_fail_{instance_id}.ds")
        save_graph(g, path)
        case.dump_path = path
    return case


def random_trials(trials: int, seed: int, max_n: int = 16) -> list[tuple[str, GenSpec]]:
    rng = random.Random(seed)
    out = []
    for i in range(trials):
        n = rng.randint(3, max_n)
        spec = GenSpec(n, rng.randint(0, 3 * n - 6), rng.getrandbits(64))
        out.append((f"trial{i:04d}-seed{spec.seed}", spec))
    return out


def run_trials(
    trials: int, seed: int, mode: Mode, dump_dir: str | None = None, max_n: int = 16
) -> list[VerifyCase]:
    return [
        check_instance(iid, random_planar(spec), mode, True, dump_dir)
        for iid, spec in random_trials(trials, seed, max_n)
    ]
