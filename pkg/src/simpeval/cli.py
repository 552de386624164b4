"""Command-line interface: ``simpeval {evaluate,stats,odds-ratio,correlate,split}``.

Exit codes: 0 success, 1 usage error, 2 data error (message carries the line).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .corpusstats import DEFAULT_MIN_COUNT, batch_odds_ratios, corpus_statistics, spearman
from .dataset import (
    DEFAULT_MAX_WORDS,
    filter_by_length,
    iter_aligned,
    iter_lines,
    load_pairs,
    split_dataset,
    write_split,
)
from .errors import SimpEvalError
from .report import METRICS, EvalOptions, build_report, report_to_json, report_to_table
from .textcore import tokenize

logger = logging.getLogger("simpeval")

EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv_list(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _write(text: str, path) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _tsv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _fmt(value, digits=2):
    if value is None:
        return "undefined"
    return f"{value:.{digits}f}"


def cmd_evaluate(args) -> int:
    metrics = tuple(_csv_list(args.metrics))
    try:
        options = EvalOptions(metrics=metrics, lowercase=args.lowercase,
                              bleu_smoothing=args.bleu_smoothing,
                              bleu_aggregate=args.bleu_aggregate)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = build_report(args.input, args.system, args.reference, options,
                          jobs=args.jobs, timestamp=not args.no_timestamp)
    text = report_to_json(report) if args.format == "struct" else report_to_table(report)
    _write(text, args.out)
    return 0


def cmd_stats(args) -> int:
    pairs = (
        (tokenize(orig, args.lowercase), tokenize(simple, args.lowercase))
        for _, (orig, simple) in iter_aligned(args.original, args.simple)
    )
    report = corpus_statistics(pairs)
    if args.format == "struct":
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        text = _tsv(report.rows(), ["", "original", "simple"])
    _write(text, args.out)
    return 0


def _docs(path, lowercase):
    for _, line in iter_lines(path):
        yield tokenize(line, lowercase)


def cmd_odds_ratio(args) -> int:
    if bool(args.tokens) == bool(args.all):
        raise UsageError("give exactly one of --tokens or --all")
    tokens = _csv_list(args.tokens) if args.tokens else None
    results = batch_odds_ratios(
        _docs(args.corpus_a, args.lowercase),
        _docs(args.corpus_b, args.lowercase),
        min_count=args.min_count,
        tokens=tokens,
        yates=not args.no_yates,
    )
    if args.format == "struct":
        rows = [
            {"token": r.token, "count_i": r.counts.count_i, "count_j": r.counts.count_j,
             "ratio": r.ratio, "p_value": r.p_value, "rank_i": r.rank_i, "rank_j": r.rank_j}
            for r in results
        ]
        text = json.dumps({"size_i": results[0].counts.size_i if results else None,
                           "size_j": results[0].counts.size_j if results else None,
                           "results": rows}, indent=2, ensure_ascii=False) + "\n"
    else:
        header = ["token", "count_i", "count_j", "ratio", "p_value"]
        if args.ranks:
            header += ["rank_i", "rank_j"]
        rows = []
        for r in results:
            row = [r.token, r.counts.count_i, r.counts.count_j, _fmt(r.ratio),
                   f"{r.p_value:.3g}"]
            if args.ranks:
                row += [r.rank_i or "", r.rank_j or ""]
            rows.append(row)
        text = _tsv(rows, header)
    _write(text, args.out)
    return 0


def read_columns(path) -> dict[str, list[float]]:
    """Numeric columns of a TSV/CSV file with a header, or of a JSON report.

    JSON evaluation reports are flattened to ``metric.field`` columns.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        report = json.loads(text)
        columns: dict[str, list[float]] = {}
        for record in report["per_pair"]:
            for metric, value in record.items():
                if isinstance(value, dict):
                    for key, v in value.items():
                        if isinstance(v, (int, float)):
                            columns.setdefault(f"{metric}.{key}", []).append(float(v))
        return columns
    delimiter = "," if path.suffix == ".csv" else "\t"
    rows = list(csv.reader(io.StringIO(text), delimiter=delimiter))
    if not rows:
        raise SimpEvalError(f"{path}: empty file")
    header, body = rows[0], [r for r in rows[1:] if r]
    columns = {}
    for k, name in enumerate(header):
        if name == "pair_id":
            continue
        try:
            columns[name] = [float(r[k]) for r in body]
        except (ValueError, IndexError):
            continue
    return columns


def _select(columns, wanted, path):
    if not wanted:
        return columns
    missing = [w for w in wanted if w not in columns]
    if missing:
        raise UsageError(f"{path}: no numeric column(s) {', '.join(missing)}")
    return {w: columns[w] for w in wanted}


def cmd_correlate(args) -> int:
    scores = _select(read_columns(args.scores), _csv_list(args.score_cols or ""), args.scores)
    ratings = _select(read_columns(args.ratings), _csv_list(args.rating_cols or ""), args.ratings)
    results = [(s, r, spearman(xs, ys)) for s, xs in scores.items() for r, ys in ratings.items()]
    if args.format == "struct":
        text = json.dumps([{"score": s, "rating": r, "rho": rho} for s, r, rho in results],
                          indent=2) + "\n"
    else:
        text = _tsv([(s, r, f"{rho:.2f}") for s, r, rho in results], ["score", "rating", "rho"])
    _write(text, args.out)
    return 0


def cmd_split(args) -> int:
    sizes = _csv_list(args.sizes)
    try:
        train_n, valid_n, test_n = (int(s) for s in sizes)
    except ValueError:
        raise UsageError("--sizes takes three comma-separated integers") from None
    pairs = load_pairs(args.src, args.tgt, args.lowercase)
    if not args.no_filter:
        pairs, rejected = filter_by_length(pairs, args.max_words)
        if rejected:
            logger.warning("filtered out %d pairs (longer than %d words or empty)",
                           len(rejected), args.max_words)
    split = split_dataset(pairs, train_n, valid_n, test_n, args.seed)
    if split.leftover:
        logger.warning("%d leftover pairs appended to train", split.leftover)
    for path in write_split(pairs, split, args.out_dir):
        logger.info("wrote %s", path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="simpeval", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, lowercase=True):
        p.add_argument("--format", choices=("struct", "table"), default="struct",
                       help="struct: JSON at full precision; table: tab-separated, rounded")
        p.add_argument("-o", "--out", default=None, help="write here instead of stdout")
        if lowercase:
            p.add_argument("--lowercase", action="store_true", help="lowercase before tokenizing")

    p = sub.add_parser("evaluate", help="score system outputs against inputs and references")
    p.add_argument("input", help="original articles, one per line")
    p.add_argument("system", help="system outputs, line-aligned with input")
    p.add_argument("reference", help="reference simplifications, line-aligned")
    p.add_argument("--metrics", default=",".join(METRICS),
                   help="comma list from: " + ",".join(METRICS))
    p.add_argument("--bleu-smoothing", action="store_true", help="add-one smoothing for n >= 2")
    p.add_argument("--bleu-aggregate", choices=("macro", "corpus"), default="macro")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--no-timestamp", action="store_true")
    common(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("stats", help="corpus statistics of aligned original/simple files")
    p.add_argument("original")
    p.add_argument("simple")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("odds-ratio", help="token odds ratios between two corpora")
    p.add_argument("corpus_a", help="corpus i (numerator), one article per line")
    p.add_argument("corpus_b", help="corpus j (denominator)")
    p.add_argument("--tokens", help="comma-separated tokens to report")
    p.add_argument("--all", action="store_true", help="report every token above --min-count")
    p.add_argument("--min-count", type=int, default=DEFAULT_MIN_COUNT)
    p.add_argument("--no-yates", action="store_true", help="disable continuity correction")
    p.add_argument("--ranks", action="store_true", help="add occurrence-rank columns")
    common(p)
    p.set_defaults(func=cmd_odds_ratio)

    p = sub.add_parser("correlate", help="Spearman correlation of scores against ratings")
    p.add_argument("scores", help="TSV/CSV with header, or a JSON evaluation report")
    p.add_argument("ratings", help="TSV/CSV with header, rows aligned with scores")
    p.add_argument("--score-cols", help="comma list of score columns (default: all numeric)")
    p.add_argument("--rating-cols", help="comma list of rating columns (default: all numeric)")
    common(p, lowercase=False)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("split", help="filter and split aligned pairs into train/valid/test")
    p.add_argument("src")
    p.add_argument("tgt")
    p.add_argument("--sizes", required=True, help="train,valid,test pair counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--max-words", type=int, default=DEFAULT_MAX_WORDS)
    p.add_argument("--no-filter", action="store_true")
    p.add_argument("--lowercase", action="store_true")
    p.set_defaults(func=cmd_split)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"simpeval: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SimpEvalError, OSError) as exc:
        print(f"simpeval: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
