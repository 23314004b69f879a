"""Command-line entry point: ``mcolour <subcommand> ...``.

Exit codes: 0 success, 1 a hard check failed, 2 usage or parse error,
3 precondition error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__, bounds, corpus
from .baranyai import factorize, verify_factorization
from .checks import (
    check_conjecture_r2,
    check_interval_I,
    check_lemma,
    check_theorem1,
    check_theorem4,
)
from .constructions import random_template, small_rainbow, small_set, theorem4
from .errors import McolourError, ParseError
from .report import CheckReport
from .search import psi_upper_search, search_missing_m
from .spectrum import nearest, spectrum, spectrum_csv
from .template import parse_template, serialize_template, vertices_of

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=0, help="seed for all randomness (u64)")
    p.add_argument(
        "--threads", type=int, default=os.cpu_count() or 1, help="worker processes"
    )
    p.add_argument("--json", dest="json_path", help="write a JSON artifact here")
    p.add_argument("--csv", dest="csv_path", help="write a CSV artifact here")
    p.add_argument("-o", dest="out_path", help="write the primary output here")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="mcolour", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"mcolour {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a template file")
    p.add_argument("family", choices=["small-rainbow", "small-set", "theorem4", "random"])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--n", type=int, help="theorem4 parameter (A = [n+1])")
    p.add_argument("--k", type=int, help="colour count for random templates")

    p = sub.add_parser("spectrum", parents=[common], help="exact spectrum of a template")
    p.add_argument("template")

    p = sub.add_parser("nearest", parents=[common], help="closest spectrum value to m")
    p.add_argument("template")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("baranyai", parents=[common], help="1-factorization of K_l^(h)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("check", parents=[common], help="theorem and lemma checkers")
    p.add_argument(
        "name", choices=["theorem1", "conjecture-r2", "interval-i", "theorem4", "lemma", "corpus"]
    )
    p.add_argument("--template")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--count", type=int, default=10_000, help="corpus: random templates")
    p.add_argument("--a-max", type=int, default=12, help="corpus: largest template size")
    p.add_argument(
        "--checks",
        default="theorem1,conjecture-r2,lemma",
        help="corpus: comma-separated checks to run",
    )

    p = sub.add_parser("search", parents=[common], help="seeded template searches")
    p.add_argument("name", choices=["missing-m", "psi"])
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument(
        "--budget", type=int, help="candidate budget (default 10^4 for missing-m, 10^7 for psi)"
    )
    p.add_argument("--mode", choices=["exhaustive", "randomized"], default="exhaustive")

    p = sub.add_parser("bounds", parents=[common], help="closed-form bounds and intervals")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--k", type=int)
    return parser


# -- helpers -------------------------------------------------------------------


def _load(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_template(data)


def _write(path: str, data: str | bytes) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    Path(path).write_bytes(data)


def _emit(args, text: str) -> None:
    if args.out_path:
        _write(args.out_path, text)
    else:
        sys.stdout.write(text)


def _outputs(args) -> list[str]:
    return [p for p in (args.out_path, args.json_path, args.csv_path) if p]


def _manifest(args, argv, started: float) -> None:
    """Write <output>.manifest.json next to every file the run produced."""
    params = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("out_path", "json_path", "csv_path", "threads")
    }
    inputs = [getattr(args, "template", None)]
    manifest = {
        "subcommand": " ".join(
            [args.command] + [getattr(args, k) for k in ("family", "name") if hasattr(args, k)]
        ),
        "argv": list(argv),
        "parameters": params,
        "seed": args.seed,
        "threads": args.threads,
        "tool_version": __version__,
        "inputs": [p for p in inputs if p],
        "outputs": _outputs(args),
        "wall_clock_seconds": round(time.perf_counter() - started, 3),
    }
    for out in _outputs(args):
        _write(out + ".manifest.json", json.dumps(manifest, indent=2, default=str) + "\n")


def _report_exit(reports: list[CheckReport]) -> int:
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


# -- subcommands ---------------------------------------------------------------


def _cmd_construct(args) -> int:
    fam = args.family
    if fam in ("small-rainbow", "small-set", "random") and args.a is None:
        raise _Usage(f"construct {fam} needs --a")
    if fam == "small-rainbow":
        t = small_rainbow(args.r, args.a)
    elif fam == "small-set":
        t = small_set(args.r, args.a)
    elif fam == "theorem4":
        if args.n is None:
            raise _Usage("construct theorem4 needs --n")
        t = theorem4(args.r, args.n)
    else:
        if args.k is None:
            raise _Usage("construct random needs --k")
        t = random_template(args.r, args.a, args.k, args.seed)
    _emit(args, serialize_template(t).decode("utf-8"))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    t = _load(args.template)
    sp = spectrum(t)
    _emit(args, ",".join(map(str, sp.values)) + "\n")
    if args.csv_path:
        _write(args.csv_path, spectrum_csv(sp))
    if args.json_path:
        payload = {
            "r": t.r,
            "a": t.a,
            "k": t.k,
            "values": list(sp.values),
            "witnesses": [list(vertices_of(w)) for w in sp.witnesses],
        }
        _write(args.json_path, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_nearest(args) -> int:
    t = _load(args.template)
    mp, d = nearest(spectrum(t), args.m)
    _emit(args, f"m={args.m} nearest={mp} dist={d}\n")
    return EXIT_OK


def _cmd_baranyai(args) -> int:
    f = factorize(args.l, args.h)
    _emit(args, f.to_text())
    if not args.verify:
        return EXIT_OK
    rep = verify_factorization(f)
    print(f"# {rep.verdict}: {rep.narrative}", file=sys.stderr)
    if args.json_path:
        _write(args.json_path, rep.to_json())
    return _report_exit([rep])


def _cmd_check(args) -> int:
    name = args.name
    if name == "corpus":
        names = tuple(n for n in args.checks.split(",") if n)
        entries = corpus.build_corpus(args.count, args.seed, args.r, args.a_max)
        results = corpus.run_corpus(entries, names, threads=args.threads)
        summary = corpus.corpus_summary(results)
        if args.csv_path:
            _write(args.csv_path, corpus.corpus_csv(results))
        if args.json_path:
            _write(args.json_path, corpus.corpus_json(results))
        lines = [f"templates: {summary['templates']}"]
        for check, counts in summary["verdicts"].items():
            lines.append(
                f"{check}: pass={counts['pass']} fail={counts['fail']} report={counts['report']}"
            )
        _emit(args, "\n".join(lines) + "\n")
        return _report_exit([rep for _, _, rep in results])

    if name == "theorem4":
        if args.n is None:
            raise _Usage("check theorem4 needs --r and --n")
        rep = check_theorem4(args.r, args.n)
    else:
        if not args.template:
            raise _Usage(f"check {name} needs --template")
        t = _load(args.template)
        if name == "theorem1":
            rep = check_theorem1(t)
        elif name == "conjecture-r2":
            rep = check_conjecture_r2(t)
        elif name == "interval-i":
            rep = check_interval_I(t, args.n_min)
        else:
            rep = check_lemma(t)
    if args.json_path:
        _write(args.json_path, rep.to_json())
    if args.csv_path:
        _write(args.csv_path, f"check,verdict\n{rep.check},{rep.verdict}\n")
    _emit(args, f"{rep.check}: {rep.verdict}\n{rep.narrative}\n")
    return _report_exit([rep])


def _cmd_search(args) -> int:
    if args.name == "missing-m":
        if args.m is None:
            raise _Usage("search missing-m needs --m")
        args.budget = args.budget or 10_000
        t = search_missing_m(args.r, args.k, args.m, args.budget, args.seed)
        payload = {
            "r": args.r,
            "k": args.k,
            "m": args.m,
            "budget": args.budget,
            "seed": args.seed,
            "found": t is not None,
            "spectrum": list(spectrum(t).values) if t else None,
            "template": serialize_template(t).decode("utf-8") if t else None,
        }
        if t is not None:
            _emit(args, serialize_template(t).decode("utf-8"))
        else:
            print(f"not found within budget {args.budget}", file=sys.stderr)
    else:
        args.budget = args.budget or 10**7
        res = psi_upper_search(args.r, args.k, args.mode, args.budget, args.seed)
        payload = {
            "r": res.r,
            "k": res.k,
            "mode": args.mode,
            "upper": res.best,
            "lower": res.lower,
            "exact": res.exact,
            "truncated": res.truncated,
            "evaluated": res.evaluated,
            "spectrum": list(spectrum(res.template).values),
            "template": serialize_template(res.template).decode("utf-8"),
        }
        status = "exact" if res.exact else "bounds"
        msg = f"psi_{res.r}({res.k}): upper={res.best} lower={res.lower} ({status})\n"
        if args.out_path:
            _write(args.out_path, serialize_template(res.template))
        sys.stdout.write(msg)
    if args.json_path:
        _write(args.json_path, json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    r = args.r
    out = {"r": r, "c_r": bounds.c_r(r)}
    if args.n is not None:
        out["interval_I"] = list(bounds.interval_I(r, args.n))
        out["interval_J"] = list(bounds.interval_J(r, args.n))
    if args.m is not None:
        out["theorem1_bound"] = bounds.theorem1_bound(r, args.m)
        if args.a is not None and args.m >= 2:
            dec = bounds.decompose_m(r, args.a, args.m)
            out["lemma_width"] = bounds.lemma_bounds(r, args.a, args.m)
            out["lemma_window_lo"] = str(bounds.lemma_window_lo(r, args.a, args.m))
            out["decomposition"] = {"t": dec.t, "s": dec.s}
            out["claimC_bound"] = str(bounds.claimC_bound(r, args.a, dec))
    if args.l is not None:
        inst = bounds.tightness_instance(r, args.l)
        out["tightness"] = None if inst is None else {"m": inst[0], "gap": str(inst[1])}
    if args.k is not None:
        out["psi_lower"] = bounds.psi_lower(r, args.k)
    text = "\n".join(
        f"{k}={json.dumps(v) if not isinstance(v, float) else format(v, '.6f')}"
        for k, v in out.items()
    )
    _emit(args, text + "\n")
    if args.json_path:
        _write(args.json_path, json.dumps(out, indent=2) + "\n")
    return EXIT_OK


class _Usage(Exception):
    pass


COMMANDS = {
    "construct": _cmd_construct,
    "spectrum": _cmd_spectrum,
    "nearest": _cmd_nearest,
    "baranyai": _cmd_baranyai,
    "check": _cmd_check,
    "search": _cmd_search,
    "bounds": _cmd_bounds,
}


def cli_dispatch(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    started = time.perf_counter()
    try:
        code = COMMANDS[args.command](args)
    except _Usage as exc:
        print(f"mcolour {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"mcolour: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except McolourError as exc:
        print(f"mcolour: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if _outputs(args):
        _manifest(args, argv, started)
    return code


def main() -> None:
    sys.exit(cli_dispatch())
