"""A few-minute comparison of every algorithm on a reduced budget.

Runs the acceptance grid for one seed at 10k environment steps and
prints the final evaluation WatchTime per cell next to the random-weight
floor and the true-engagement ceiling.  Budgets this small only show
coarse trends; the full comparison is

    unexrl suite --grid acceptance --out results/acceptance

    python3 demos/quick_comparison.py [out_dir]
"""

import sys

from unexrl.config import ExperimentConfig
from unexrl.harness import GRIDS, evaluate, run_suite


def main(out_dir="runs/quick-comparison"):
    base = ExperimentConfig().replace(total_steps=10_000, eval_every=2_000, eval_sessions=50)
    code, rows = run_suite(base, GRIDS["acceptance"], out_dir, seeds=[0],
                           log=lambda msg: print(msg, flush=True))
    floor = evaluate(config=base, baseline="random", n_sessions=100)["watch_time_mean"]
    ceiling = evaluate(config=base, baseline="oracle", n_sessions=100)["watch_time_mean"]
    print(f"\n{'cell':<18} final WatchTime")
    for row in rows:
        if row["seed"] == "median":
            print(f"{row['cell']:<18} {row['final_watch_time_mean']:.0f}")
    print(f"{'(random floor)':<18} {floor:.0f}\n{'(oracle ceiling)':<18} {ceiling:.0f}")
    return code


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
