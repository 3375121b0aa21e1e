"""Cross-check every reduction mode against brute force on small random graphs.

Planar trials also check the linear kernel bound. Failing inputs are
written to --dump-dir for replay with ``domkernel verify FILE``.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from domkernel.reduction import Mode
from domkernel.verify import run_trials


@dataclass
class SweepConfig:
    trials: int = 1000
    seed: int = 1
    max_n: int = 18
    dump_dir: str | None = None


MODES = (Mode.gadget(), Mode.annotated_mode(), Mode.annotated_mode(extra_rules=True))


def run(cfg: SweepConfig) -> int:
    failures = 0
    for mode in MODES:
        cases = run_trials(cfg.trials, cfg.seed, mode, cfg.dump_dir, cfg.max_n)
        bad = [c for c in cases if not c.ok]
        failures += len(bad)
        worst = max((c.kernel_size / c.gamma for c in cases if c.gamma), default=0.0)
        print(f"{mode.label:>16}: {len(cases) - len(bad)}/{len(cases)} passed, "
              f"max kernel/gamma {worst:.2f}")
    return failures


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-n", type=int, default=18)
    p.add_argument("--dump-dir")
    a = p.parse_args()
    raise SystemExit(1 if run(SweepConfig(a.trials, a.seed, a.max_n, a.dump_dir)) else 0)


if __name__ == "__main__":
    main()
