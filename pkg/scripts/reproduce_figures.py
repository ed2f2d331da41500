#!/usr/bin/env python3
"""Regenerate the data behind the truncated-oscillator figures.

Writes three runs under results/: the base oscillator (figure 1), the
fourth-order class-A partner with levels added at -9/2 and -5/2
(figure 2a), and the class-B partner adding 0.6 and 1.0 (figure 2b).
Each run leaves report.json, potential.csv and states.csv behind, ready
for plotting.
"""

import sys
from pathlib import Path

from susyq.cli import main

RESULTS = Path(__file__).resolve().parent.parent / "results"

CONFIGS = {
    "base": """
order = 0
epsilons =
levels_to_report = 6
""",
    "deep_class_a": """
order = 4
epsilons = -11/2, -9/2, -7/2, -5/2
parities = -1, 1, -1, 1
levels_to_report = 6
""",
    "class_b": """
order = 4
epsilons = 0.6, 0.9, 1.0, 1.3
levels_to_report = 6
""",
}


def run_all() -> int:
    worst = 0
    for name, body in CONFIGS.items():
        outdir = RESULTS / name
        outdir.mkdir(parents=True, exist_ok=True)
        config = outdir / "plan.cfg"
        config.write_text(body.lstrip() + f"output_dir = {outdir}\n")
        code = main(["run", str(config)])
        print(f"{name}: exit {code}  ->  {outdir}/report.json")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(run_all())
