"""Replay the full M_{3,2} computation from the shipped scenarios and check every golden.

    python scripts/replay.py [--scenario m32_main] [--golden-dir DIR] [--show NAME ...]
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from vgcalc.cli import resolve_scenario, shipped_dir
from vgcalc.motive import betti, betti_eval, render_poly
from vgcalc.runner import run_file


@dataclass
class ReplayConfig:
    scenario: str = "m32_main"
    golden_dir: Path | None = None
    show: list[str] = field(default_factory=lambda: ["eq4", "eq9", "thm1i", "thm1ii"])


def replay(cfg: ReplayConfig) -> int:
    golden_dir = cfg.golden_dir or shipped_dir("goldens")
    report = run_file(resolve_scenario(cfg.scenario), golden_dir)
    for name in cfg.show:
        print(f"{name} = {render_poly(report.polys[name])}")
    if "thm1ii" in report.polys:
        P = report.polys["thm1ii"]
        print(f"Betti numbers of M_3,2: {dict(sorted(betti(P).items()))}, Euler characteristic {betti_eval(P, -1)}")
    for w in report.warnings:
        print(f"WARNING {w}")
    for g in report.goldens:
        print(f"{'PASS' if g.passed else 'FAIL'} golden {g.name}")
    npass = sum(a.passed for a in report.assertions)
    print(f"{npass}/{len(report.assertions)} assertions passed")
    return 0 if report.passed else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scenario", default=ReplayConfig.scenario)
    ap.add_argument("--golden-dir", type=Path)
    ap.add_argument("--show", nargs="*")
    args = ap.parse_args(argv)
    cfg = ReplayConfig(args.scenario, args.golden_dir)
    if args.show is not None:
        cfg.show = args.show
    return replay(cfg)


if __name__ == "__main__":
    sys.exit(main())
