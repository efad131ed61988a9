"""Command-line front end.

Exit codes: 0 everything passed, 1 a verification failed, 2 usage, parse or
I/O error, 3 a size cap refused the computation.
"""

from __future__ import annotations

import argparse
import sys

from .acceptance import run_all
from .config import DEFAULT_CAPS, Caps
from .errors import FixtureError, ResourceRefusal
from .fixtures import Fixture, load_fixture
from .report import exit_code, run_center, run_dual, run_jobs, run_search, run_validate, timed, to_json, to_text

EXIT_USAGE = 2


def _caps(args) -> Caps:
    return DEFAULT_CAPS.override(max_ring=args.max_ring, max_module=args.max_module, workers=args.workers)


def _pick(names, wanted: str | None, what: str, flag: str) -> str:
    if wanted is not None:
        if wanted not in names:
            raise FixtureError(f"no {what} named {wanted!r} (have {sorted(names)})")
        return wanted
    if len(names) == 1:
        return next(iter(names))
    raise FixtureError(f"fixture defines {len(names)} {what}s; choose one with {flag}")


def _validate(fx: Fixture, args, caps):
    return [timed(lambda: run_validate(fx))]


def _dual(fx: Fixture, args, caps):
    name = _pick(fx.functors, args.functor, "functor", "--functor")
    return [timed(lambda: run_dual(fx.functored(name), caps))]


def _center(fx: Fixture, args, caps):
    names = [args.presentation] if args.presentation else list(fx.presentations)
    if not names:
        raise FixtureError("fixture defines no presentations")
    for n in names:
        _pick(fx.presentations, n, "presentation", "--presentation")
    return [timed(lambda n=n: run_center(n, fx.presentations[n], caps)) for n in names]


def _search(fx: Fixture, args, caps):
    ring = _pick(fx.rings, args.ring, "ring", "--ring")
    module = _pick(fx.modules, args.module, "module", "--module")
    if fx.modules[module].base is not fx.rings[ring]:
        raise FixtureError(f"module {module!r} is not over ring {ring!r}")
    return [timed(lambda: run_search(fx, ring, module, caps))]


def _run(fx: Fixture, args, caps):
    if not fx.jobs:
        raise FixtureError("jobs: fixture has no jobs to run")
    jobs, times = run_jobs(fx, caps)
    return list(zip(jobs, times))


def _selftest(args, caps) -> tuple[dict, int]:
    results = run_all(caps)
    report = {
        "command": "selftest",
        "criteria": [c.to_dict() for c in results],
        "status": "pass" if all(c.ok for c in results) else "fail",
        "timing": {f"criterion_{c.number}": round(c.seconds, 3) for c in results},
    }
    return report, 0 if report["status"] == "pass" else 1


COMMANDS = {"validate": _validate, "dual": _dual, "center": _center, "search": _search, "run": _run}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write the JSON report to FILE")
    common.add_argument("--max-ring", type=int, help=f"largest ring order (default {DEFAULT_CAPS.max_ring})")
    common.add_argument("--max-module", type=int, help=f"largest module order (default {DEFAULT_CAPS.max_module})")
    common.add_argument("--workers", type=int, help="processes for the (lambda, eta) search (default 1)")
    common.add_argument("--json", action="store_true", help="print the JSON report instead of text")

    p = argparse.ArgumentParser(prog="anncat", description="Certify finite Ann-categories, their duals and centers.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("validate", parents=[common], help="check every presentation and functor in a fixture")
    s.add_argument("fixture")
    s = sub.add_parser("dual", parents=[common], help="build and certify the dual over a functor")
    s.add_argument("fixture")
    s.add_argument("--functor", help="functor name (optional if the fixture has exactly one)")
    s = sub.add_parser("center", parents=[common], help="build and certify centers with their braiding")
    s.add_argument("fixture")
    s.add_argument("--presentation", help="only this presentation (default: all)")
    s = sub.add_parser("search", parents=[common], help="enumerate every valid (lambda, eta) on (R, M)")
    s.add_argument("fixture")
    s.add_argument("--ring")
    s.add_argument("--module")
    s = sub.add_parser("run", parents=[common], help="run the fixture's job list")
    s.add_argument("fixture")
    sub.add_parser("selftest", parents=[common], help="run the built-in certification battery")
    return p


def _emit(report: dict, args) -> int:
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(to_json(report))
        except OSError as exc:
            print(f"anncat: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    sys.stdout.write(to_json(report) if args.json else to_text(report))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("max_ring", "max_module", "workers"):
        v = getattr(args, flag)
        if v is not None and v < 1:
            parser.error(f"--{flag.replace('_', '-')} must be positive")
    caps = _caps(args)
    try:
        if args.command == "selftest":
            report, code = _selftest(args, caps)
        else:
            fx = load_fixture(args.fixture, caps)
            results = COMMANDS[args.command](fx, args, caps)
            jobs = [j for j, _ in results]
            report = {
                "command": args.command,
                "fixture": args.fixture,
                "jobs": jobs,
                "timing": {"jobs": [round(t, 3) for _, t in results]},
            }
            code = exit_code(jobs)
    except FixtureError as exc:
        print(f"anncat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceRefusal as exc:
        print(f"anncat: refused: {exc}", file=sys.stderr)
        return 3
    written = _emit(report, args)
    return written or code


if __name__ == "__main__":
    sys.exit(main())
