"""Batch evaluation of line-aligned (input, output, reference) files.

Produces an evaluation report: one record per line with the full SARI and
D-SARI breakdown (penalties included), BLEU, FKGL and the length profile,
plus macro-averaged aggregates. Records are emitted in line order whatever
the number of workers.
"""

from __future__ import annotations

import csv
import datetime as _dt
import hashlib
import io
import json
import math
from dataclasses import asdict, dataclass, field
from functools import partial
from multiprocessing import Pool
from typing import Iterable, Iterator

from . import __version__
from .dataset import iter_aligned
from .dsari import LengthProfile, apply_penalties
from .errors import SimpEvalError
from .refmetrics import bleu_from_counts, clipped_counts, compute_bleu, compute_fkgl
from .sari import EvalTriple, compute_sari

METRICS = ("dsari", "sari", "bleu", "fkgl")
SCORE_DIGITS = 2
FACTOR_DIGITS = 4


class PairError(SimpEvalError):
    """A metric failed on a specific input line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class EvalOptions:
    metrics: tuple[str, ...] = METRICS
    lowercase: bool = False
    bleu_smoothing: bool = False
    bleu_aggregate: str = "macro"

    def __post_init__(self):
        unknown = set(self.metrics) - set(METRICS)
        if unknown:
            raise ValueError(f"unknown metrics: {', '.join(sorted(unknown))}")
        if self.bleu_aggregate not in ("macro", "corpus"):
            raise ValueError("bleu_aggregate must be 'macro' or 'corpus'")


def evaluate_triple(triple: EvalTriple, options: EvalOptions, pair_id: int = 0) -> dict:
    record: dict = {"pair_id": pair_id, "length_profile": asdict(LengthProfile.from_triple(triple))}
    if "sari" in options.metrics or "dsari" in options.metrics:
        components = compute_sari(triple)
        if "sari" in options.metrics:
            record["sari"] = asdict(components)
        if "dsari" in options.metrics:
            d = apply_penalties(components, LengthProfile.from_triple(triple))
            record["dsari"] = {
                "d_keep": d.d_keep, "d_del": d.d_del, "d_add": d.d_add, "d_sari": d.d_sari,
                "lp1": d.lp1, "lp2": d.lp2, "slp": d.slp,
                "f_keep": components.f_keep, "p_del": components.p_del, "f_add": components.f_add,
            }
    if "bleu" in options.metrics:
        b = compute_bleu(triple.output, triple.reference, options.bleu_smoothing)
        matches, totals = clipped_counts(triple.output.tokens, triple.reference.tokens)
        record["bleu"] = {
            "score": b.score,
            "precisions": list(b.precisions),
            "brevity_penalty": b.brevity_penalty,
            "matches": matches,
            "totals": totals,
        }
    if "fkgl" in options.metrics:
        try:
            r = compute_fkgl(triple.output)
            record["fkgl"] = asdict(r)
        except SimpEvalError:
            record["fkgl"] = None
    return record


def _evaluate_line(item, options: EvalOptions) -> dict:
    lineno, (source, output, reference) = item
    triple = EvalTriple.from_text(source, output, reference, options.lowercase)
    try:
        return evaluate_triple(triple, options, pair_id=lineno - 1)
    except SimpEvalError as exc:
        raise PairError(lineno, str(exc)) from None


def iter_records(input_path, output_path, reference_path, options: EvalOptions,
                 jobs: int = 1) -> Iterator[dict]:
    lines = iter_aligned(input_path, output_path, reference_path)
    work = partial(_evaluate_line, options=options)
    if jobs <= 1:
        yield from map(work, lines)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(work, lines, chunksize=64)


def _mean(values):
    values = list(values)
    return math.fsum(values) / len(values) if values else None


def aggregate(records: list[dict], options: EvalOptions) -> dict:
    """Macro-averages over records (compensated summation, line order)."""
    agg: dict = {"pairs": len(records)}
    for metric in ("sari", "dsari"):
        if metric in options.metrics and records:
            keys = records[0][metric].keys()
            agg[metric] = {k: _mean(r[metric][k] for r in records) for k in keys}
    if "bleu" in options.metrics and records:
        if options.bleu_aggregate == "corpus":
            matches = [sum(r["bleu"]["matches"][n] for r in records) for n in range(4)]
            totals = [sum(r["bleu"]["totals"][n] for r in records) for n in range(4)]
            out_len = sum(r["length_profile"]["output_words"] for r in records)
            ref_len = sum(r["length_profile"]["reference_words"] for r in records)
            agg["bleu"] = bleu_from_counts(matches, totals, out_len, ref_len,
                                           options.bleu_smoothing).score
        else:
            agg["bleu"] = _mean(r["bleu"]["score"] for r in records)
    if "fkgl" in options.metrics:
        scored = [r["fkgl"]["fkgl"] for r in records if r["fkgl"] is not None]
        agg["fkgl"] = _mean(scored)
        agg["fkgl_pairs"] = len(scored)
    return agg


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def build_report(input_path, output_path, reference_path, options: EvalOptions | None = None,
                 jobs: int = 1, timestamp: bool = True) -> dict:
    options = options or EvalOptions()
    records = list(iter_records(input_path, output_path, reference_path, options, jobs))
    metadata = {
        "tool": "simpeval",
        "version": __version__,
        "flags": {
            "metrics": list(options.metrics),
            "lowercase": options.lowercase,
            "bleu_smoothing": options.bleu_smoothing,
            "bleu_aggregate": options.bleu_aggregate,
        },
        "files": {
            role: {"path": str(path), "sha256": file_digest(path)}
            for role, path in (("input", input_path), ("output", output_path),
                               ("reference", reference_path))
        },
    }
    if timestamp:
        metadata["timestamp"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return {"metadata": metadata, "per_pair": records, "aggregate": aggregate(records, options)}


def _table_columns(metrics: Iterable[str]) -> list[tuple[str, tuple[str, ...], int]]:
    cols = [("pair_id", ("pair_id",), 0)]
    if "sari" in metrics:
        cols += [(k, ("sari", k), SCORE_DIGITS) for k in ("sari", "f_keep", "p_del", "f_add")]
    if "dsari" in metrics:
        cols += [(k, ("dsari", k), SCORE_DIGITS) for k in ("d_sari", "d_keep", "d_del", "d_add")]
        cols += [(k, ("dsari", k), FACTOR_DIGITS) for k in ("lp1", "lp2", "slp")]
    if "bleu" in metrics:
        cols.append(("bleu", ("bleu", "score"), SCORE_DIGITS))
    if "fkgl" in metrics:
        cols.append(("fkgl", ("fkgl", "fkgl"), SCORE_DIGITS))
    names = ("input_words", "output_words", "reference_words",
             "output_sentences", "reference_sentences")
    cols += [(k, ("length_profile", k), 0) for k in names]
    return cols


def _lookup(record, path):
    value = record
    for key in path:
        if value is None:
            return None
        value = value.get(key) if isinstance(value, dict) else None
    return value


def _fmt(value, digits):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{digits}f}"
    return str(value)


def report_to_table(report: dict) -> str:
    """Tab-separated view: one row per pair, then a ``mean`` row."""
    metrics = report["metadata"]["flags"]["metrics"]
    cols = _table_columns(metrics)
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow([name for name, _, _ in cols])
    for record in report["per_pair"]:
        writer.writerow([_fmt(_lookup(record, path), digits) for _, path, digits in cols])
    agg = report["aggregate"]
    row = []
    for name, path, digits in cols:
        if name == "pair_id":
            row.append("mean")
        elif path[0] in ("bleu", "fkgl"):
            row.append(_fmt(agg.get(path[0]), digits))
        elif path[0] == "length_profile":
            row.append("")
        else:
            row.append(_fmt(_lookup(agg, path), digits))
    writer.writerow(row)
    return buf.getvalue()


def report_to_json(report: dict) -> str:
    # repr-precision floats; key order is insertion order, so output is stable
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
