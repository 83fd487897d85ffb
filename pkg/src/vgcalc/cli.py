"""Command line entry point: ``vgcalc run <scenario> [--golden DIR] [--emit ...] [--quiet]``."""
from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .runner import compare_goldens, run
from .scenario import ScenarioError, parse_file

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def shipped_dir(kind: str) -> Path:
    return Path(str(resources.files("vgcalc") / kind))


def resolve_scenario(name: str) -> Path:
    """A path on disk, or the name of a shipped scenario (with or without ``.vgl``)."""
    path = Path(name)
    if path.exists():
        return path
    shipped = shipped_dir("scenarios") / (name if name.endswith(".vgl") else f"{name}.vgl")
    if shipped.exists():
        return shipped
    raise FileNotFoundError(f"no scenario file or shipped scenario named {name!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vgcalc", description="Run Vassiliev-Gorinov bookkeeping scenarios.")
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="execute a scenario")
    r.add_argument("scenario", help="a .vgl file or the name of a shipped scenario, e.g. m32_main")
    r.add_argument(
        "--golden",
        nargs="?",
        const="",
        metavar="DIR",
        help="compare artifacts against golden files in DIR (shipped goldens if DIR is omitted)",
    )
    r.add_argument("--emit", choices=("poly", "table", "all"), default="all")
    r.add_argument("--quiet", action="store_true", help="print only warnings and outcomes")
    sub.add_parser("list", help="list shipped scenarios")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for path in sorted(shipped_dir("scenarios").glob("*.vgl")):
            print(path.stem)
        return EXIT_OK
    try:
        scenario = parse_file(resolve_scenario(args.scenario))
        report = run(scenario)
        if args.golden is not None:
            golden_dir = Path(args.golden) if args.golden else shipped_dir("goldens")
            if not golden_dir.is_dir():
                raise FileNotFoundError(f"golden directory {golden_dir} does not exist")
            compare_goldens(report, golden_dir)
    except (ScenarioError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(report.render(emit=args.emit, quiet=args.quiet))
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
