"""Command-line interface.

Commands print data to stdout (diagnostics go to stderr) and are
deterministic given their flags, inputs, and seed. Exit codes: 0 success,
2 validation error, 1 unexpected internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__, corpus
from .analysis import (
    AlignmentError,
    Check,
    aggregate_trials,
    corpus_stats,
    verify_pair,
)
from .distance import Metric, distance
from .perturb import (
    ConstraintMode,
    KeyboardLayout,
    LayoutError,
    PerturbSpec,
    TextGenerator,
    perturb_text,
)
from .tokens import StopwordLexicon, detokenize, strip_stopwords, tokenize
from .trials import (
    PRESETS,
    SCHEMA_VERSION,
    SchemaError,
    build_bundle,
    load_results,
)

METRIC_NAMES = {
    "levenshtein": Metric.LEVENSHTEIN,
    "osa": Metric.OSA,
    "dl": Metric.DAMERAU_LEVENSHTEIN,
    "damerau-levenshtein": Metric.DAMERAU_LEVENSHTEIN,
    "hamming": Metric.HAMMING,
}

CHECK_NAMES = {
    "endpoints": Check.ENDPOINTS_FIXED,
    "multiset": Check.MULTISET_EQUAL,
    "distance": Check.WITHIN_DISTANCE,
}


class CliError(Exception):
    """User-facing validation problem; maps to exit code 2."""


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _write_atomic(path: str, data: str) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        _write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _load_lexicon(spec: str) -> StopwordLexicon:
    if spec in corpus.lexicon_names():
        return corpus.lexicon(spec)
    try:
        return StopwordLexicon.from_file(spec)
    except OSError as exc:
        raise CliError(
            f"no such lexicon {spec!r} (bundled: {', '.join(corpus.lexicon_names())})"
        ) from exc


def _load_layout(spec: str | None) -> KeyboardLayout:
    if spec is None:
        return corpus.keyboard("qwerty")
    try:
        return KeyboardLayout.from_file(spec)
    except OSError as exc:
        raise CliError(f"cannot read layout {spec}: {exc}") from exc
    except LayoutError as exc:
        raise CliError(f"bad layout {spec}: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommands


def cmd_distance(args) -> int:
    metric = METRIC_NAMES[args.metric]
    try:
        value = distance(args.a, args.b, metric, case_fold=args.case_fold)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print(value)
    return 0


def _run_perturb(args, generator: TextGenerator) -> int:
    mode = ConstraintMode(args.mode) if generator is TextGenerator.EDIT1 else ConstraintMode.UNCONSTRAINED
    try:
        spec = PerturbSpec(
            mode=mode,
            min_word_len=args.min_word_len,
            seed=args.seed,
            alphabet=args.alphabet,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    layout = None
    if mode is ConstraintMode.QWERTY_NEIGHBOR:
        layout = _load_layout(args.layout)
    text = _read_input(args.input)
    tokens, traces = perturb_text(tokenize(text), spec, layout, generator)
    _emit(detokenize(tokens), args.out)
    if args.trace:
        trace_doc = {
            "schema_version": SCHEMA_VERSION,
            "generator": generator.value,
            "spec": spec.to_dict(),
            "layout": layout.name if layout else None,
            "traces": [t.to_dict() for t in traces],
        }
        _write_atomic(args.trace, json.dumps(trace_doc, indent=2) + "\n")
    return 0


def cmd_perturb(args) -> int:
    return _run_perturb(args, TextGenerator(args.generator))


def cmd_jumble(args) -> int:
    return _run_perturb(args, TextGenerator.JUMBLE)


def cmd_strip(args) -> int:
    lexicon = _load_lexicon(args.lexicon)
    text = _read_input(args.input)
    try:
        tokens = strip_stopwords(tokenize(text), lexicon)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    stripped = detokenize(tokens)
    if text.endswith("\n") and not stripped.endswith("\n"):
        stripped += "\n"
    _emit(stripped, args.out)
    return 0


def _parse_checks(arg: str) -> list[Check]:
    checks = []
    for name in arg.split(","):
        name = name.strip()
        if name not in CHECK_NAMES:
            raise CliError(
                f"unknown check {name!r} (choose from {', '.join(CHECK_NAMES)})"
            )
        checks.append(CHECK_NAMES[name])
    return checks


def cmd_verify(args) -> int:
    checks = _parse_checks(args.checks)
    metric = METRIC_NAMES[args.metric]
    original = tokenize(_read_input(args.original))
    candidate = tokenize(_read_input(args.candidate))
    try:
        verdicts = verify_pair(
            original, candidate, checks, metric, args.max_distance, args.cap
        )
    except AlignmentError as exc:
        raise CliError(str(exc)) from exc
    violations = [v for v in verdicts if not v.ok]
    report = {
        "schema_version": SCHEMA_VERSION,
        "metric": metric.value,
        "checks": sorted(c.value for c in checks),
        "max_distance": args.max_distance,
        "cap": args.cap,
        "word_count": len(verdicts),
        "all_passed": not violations,
        "violation_count": len(violations),
        "violations": [v.to_dict() for v in violations],
    }
    if args.full:
        report["verdicts"] = [v.to_dict() for v in verdicts]
    print(json.dumps(report, indent=2))
    return 0


def cmd_stats(args) -> int:
    metric = METRIC_NAMES[args.metric]
    original = tokenize(_read_input(args.original))
    candidate = tokenize(_read_input(args.candidate))
    try:
        stats = corpus_stats(original, candidate, metric)
    except AlignmentError as exc:
        raise CliError(str(exc)) from exc
    report = {"schema_version": SCHEMA_VERSION, "metric": metric.value}
    report.update(stats.to_dict())
    report["unchanged_in_45_50_band"] = 0.45 <= stats.unchanged_fraction <= 0.50
    print(json.dumps(report, indent=2))
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["distance", "count"])
        for d, count in sorted(stats.distance_histogram.items()):
            writer.writerow([d, count])
        _write_atomic(args.csv, buf.getvalue())
    return 0


def cmd_trial_make(args) -> int:
    if args.preset:
        if args.preset not in PRESETS:
            raise CliError(
                f"unknown preset {args.preset!r} (available: {', '.join(PRESETS)})"
            )
        config = PRESETS[args.preset]
    elif args.config:
        try:
            config = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except OSError as exc:
            raise CliError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise CliError(f"config is not valid JSON: {exc}") from exc
    else:
        raise CliError("trial make needs --preset or --config")
    try:
        bundle = build_bundle(config, args.seed, __version__)
    except (ValueError, KeyError, LayoutError) as exc:
        raise CliError(str(exc)) from exc
    payload = json.dumps(bundle.to_dict(), indent=2) + "\n"
    _emit(payload, args.out)
    if args.out:
        print(f"wrote bundle {bundle.bundle_id} ({len(bundle.conditions)} conditions)", file=sys.stderr)
    return 0


def cmd_trial_ingest(args) -> int:
    records = []
    bundle_ids = set()
    for path in args.results:
        try:
            meta, recs = load_results(path)
        except (OSError, json.JSONDecodeError, SchemaError, ValueError) as exc:
            raise CliError(f"{path}: {exc}") from exc
        bundle_ids.add(meta["bundle_id"])
        records.extend(recs)
    if args.bundle:
        from .trials import load_bundle

        try:
            bundle = load_bundle(args.bundle)
        except (OSError, json.JSONDecodeError, SchemaError) as exc:
            raise CliError(f"{args.bundle}: {exc}") from exc
        known = {c.name for c in bundle.conditions}
        for rec in records:
            if rec.bundle_id != bundle.bundle_id:
                raise CliError(
                    f"record bundle_id {rec.bundle_id!r} does not match "
                    f"bundle {bundle.bundle_id!r}"
                )
            if rec.condition not in known:
                raise CliError(f"record names unknown condition {rec.condition!r}")
    try:
        summaries = aggregate_trials(records)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    report = {
        "schema_version": SCHEMA_VERSION,
        "bundle_ids": sorted(bundle_ids),
        "record_count": len(records),
        "summaries": [s.to_dict() for s in summaries],
    }
    print(json.dumps(report, indent=2))
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["condition", "reader_count", "mean_ms"])
        for s in summaries:
            writer.writerow([s.condition, s.reader_count, f"{s.mean_time:.3f}"])
        _write_atomic(args.csv, buf.getvalue())
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_perturb_flags(sub, with_generator: bool):
    sub.add_argument("input", nargs="?", help="input file (default: stdin)")
    if with_generator:
        sub.add_argument(
            "--generator", choices=["jumble", "edit1"], default="edit1"
        )
        sub.add_argument(
            "--mode",
            choices=[m.value for m in ConstraintMode],
            default="unconstrained",
            help="constraint mode for edit1 (ignored by jumble)",
        )
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--min-word-len", type=int, default=4, dest="min_word_len")
    sub.add_argument("--alphabet", default="abcdefghijklmnopqrstuvwxyz")
    sub.add_argument("--layout", help="keyboard layout file for qwerty mode")
    sub.add_argument("--trace", help="write perturbation traces to this JSON file")
    sub.add_argument("--out", help="write output text here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jumblekit",
        description="Edit distances, word jumbling and perturbation, reading trials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="edit distance between two strings")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--metric", choices=sorted(METRIC_NAMES), default="levenshtein")
    p.add_argument("--case-fold", action="store_true", dest="case_fold")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("perturb", help="perturb the words of a text")
    _add_perturb_flags(p, with_generator=True)
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("jumble", help="shorthand for perturb --generator jumble")
    _add_perturb_flags(p, with_generator=False)
    p.set_defaults(func=cmd_jumble, mode="unconstrained")

    p = sub.add_parser("strip", help="remove function words from a text")
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.add_argument(
        "--lexicon",
        default="default",
        help="bundled lexicon name or a lexicon file path",
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_strip)

    p = sub.add_parser("verify", help="verify a perturbed text against its original")
    p.add_argument("original")
    p.add_argument("candidate")
    p.add_argument(
        "--checks",
        default="endpoints,multiset,distance",
        help="comma list of endpoints, multiset, distance",
    )
    p.add_argument("--metric", choices=sorted(METRIC_NAMES), default="osa")
    p.add_argument("--max-distance", type=int, default=1, dest="max_distance")
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--full", action="store_true", help="include per-word verdicts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="unchanged-word statistics for a text pair")
    p.add_argument("original")
    p.add_argument("candidate")
    p.add_argument("--metric", choices=sorted(METRIC_NAMES), default="osa")
    p.add_argument("--csv", help="also write the distance histogram as CSV here")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("trial", help="reading-trial bundle lifecycle")
    trial_sub = p.add_subparsers(dest="trial_command", required=True)

    t = trial_sub.add_parser("make", help="render a trial bundle")
    t.add_argument("--preset", help=f"bundled preset ({', '.join(PRESETS)})")
    t.add_argument("--config", help="JSON make-config file")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--out", help="bundle file (default: stdout)")
    t.set_defaults(func=cmd_trial_make)

    t = trial_sub.add_parser("ingest", help="aggregate exported trial results")
    t.add_argument("results", nargs="+", help="results JSON files from the runner")
    t.add_argument("--bundle", help="bundle file to validate records against")
    t.add_argument("--csv", help="also write a plot-ready CSV summary here")
    t.set_defaults(func=cmd_trial_ingest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 1
    except Exception as exc:  # pragma: no cover - unexpected bugs
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
