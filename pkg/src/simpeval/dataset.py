"""Aligned article-pair files: loading, length filtering and seeded splits.

Pair files are UTF-8, one article per line, tokens separated by single ASCII
spaces, aligned by line number. A split directory holds ``{split}.src`` and
``{split}.tgt`` for ``train``, ``valid`` and ``test`` plus ``manifest.tsv``::

    # seed=42 sizes=6,2,2 generator=pcg64-fisher-yates-v1
    0	train
    1	test
    ...

The generator identity pins the shuffle so that a split can be rebuilt by any
implementation: numpy's PCG64 bit generator constructed with the integer
seed, consumed one raw 64-bit word at a time, driving a descending
Fisher-Yates pass over the ascending pair ids. Bounded draws use rejection
(``u`` is redrawn while ``u >= 2**64 - 2**64 % m``, then ``j = u % m``).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import zip_longest
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DecodingError, LineCountMismatch, SizesExceedCorpus
from .textcore import Document, tokenize, word_count

logger = logging.getLogger(__name__)

GENERATOR = "pcg64-fisher-yates-v1"
SPLIT_NAMES = ("train", "valid", "test")
MANIFEST_NAME = "manifest.tsv"
DEFAULT_MAX_WORDS = 1000


@dataclass(frozen=True)
class ArticlePair:
    original: Document
    simple: Document
    pair_id: int


def iter_lines(path) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` with 1-based numbers, decoding strictly.

    Only ``\\n`` separates lines (a trailing ``\\r`` is dropped), so Unicode
    line separators inside an article do not shift the alignment.
    """
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            raw = raw.rstrip(b"\n").rstrip(b"\r")
            try:
                yield lineno, raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise DecodingError(str(path), lineno, exc.reason) from None


def iter_aligned(*paths) -> Iterator[tuple[int, tuple[str, ...]]]:
    """Yield ``(line_number, lines)`` across line-aligned files.

    Raises :class:`LineCountMismatch` naming the first file to run out.
    """
    sentinel = object()
    streams = [iter_lines(p) for p in paths]
    for items in zip_longest(*streams, fillvalue=sentinel):
        if any(item is sentinel for item in items):
            short = next(p for p, item in zip(paths, items) if item is sentinel)
            longer = next(item for item in items if item is not sentinel)
            raise LineCountMismatch(
                f"{short} has fewer lines than the other inputs "
                f"(ends before line {longer[0]})",
                shorter_path=str(short),
                line=longer[0],
            )
        yield items[0][0], tuple(text for _, text in items)


def load_pairs(original_path, simple_path, lowercase: bool = False) -> list[ArticlePair]:
    """Line ``k`` (0-based) of each file becomes ``pair_id`` ``k``."""
    return [
        ArticlePair(tokenize(orig, lowercase), tokenize(simple, lowercase), lineno - 1)
        for lineno, (orig, simple) in iter_aligned(original_path, simple_path)
    ]


@dataclass(frozen=True)
class Rejection:
    pair_id: int
    reason: str


def filter_by_length(
    pairs: Iterable[ArticlePair], max_words: int = DEFAULT_MAX_WORDS
) -> tuple[list[ArticlePair], list[Rejection]]:
    """Drop pairs where either side is empty or longer than ``max_words`` tokens.

    "Longer than" is strict: a side of exactly ``max_words`` tokens is kept.
    """
    kept, rejected = [], []
    for pair in pairs:
        n_orig, n_simple = word_count(pair.original), word_count(pair.simple)
        if n_orig == 0 or n_simple == 0:
            rejected.append(Rejection(pair.pair_id, "empty side"))
        elif n_orig > max_words:
            rejected.append(Rejection(pair.pair_id, f"original has {n_orig} words"))
        elif n_simple > max_words:
            rejected.append(Rejection(pair.pair_id, f"simple has {n_simple} words"))
        else:
            kept.append(pair)
    return kept, rejected


class _BoundedDraws:
    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed)

    def below(self, m: int) -> int:
        limit = 2**64 - (2**64 % m)
        while True:
            u = int(self._bits.random_raw())
            if u < limit:
                return u % m


def seeded_permutation(items: Sequence[int], seed: int) -> list[int]:
    out = list(items)
    draws = _BoundedDraws(seed)
    for i in range(len(out) - 1, 0, -1):
        j = draws.below(i + 1)
        out[i], out[j] = out[j], out[i]
    return out


@dataclass(frozen=True)
class DatasetSplit:
    train: frozenset[int]
    valid: frozenset[int]
    test: frozenset[int]
    seed: int
    sizes: tuple[int, int, int]
    leftover: int = 0
    generator: str = field(default=GENERATOR)

    def members(self, name: str) -> frozenset[int]:
        return getattr(self, name)

    def assignment(self) -> dict[int, str]:
        return {pid: name for name in SPLIT_NAMES for pid in self.members(name)}


def _pair_ids(pairs):
    return sorted(p.pair_id if isinstance(p, ArticlePair) else int(p) for p in pairs)


def split_dataset(pairs, train_n: int, valid_n: int, test_n: int, seed: int) -> DatasetSplit:
    """Shuffle pair ids with the pinned generator and cut consecutive blocks.

    Order of blocks is train, valid, test. Ids beyond ``train_n + valid_n +
    test_n`` are appended to train and reported as ``leftover``.
    """
    ids = _pair_ids(pairs)
    if min(train_n, valid_n, test_n) < 0:
        raise ValueError("split sizes must be non-negative")
    if train_n + valid_n + test_n > len(ids):
        raise SizesExceedCorpus(
            f"sizes {train_n}+{valid_n}+{test_n} exceed the {len(ids)} available pairs"
        )
    order = seeded_permutation(ids, seed)
    a, b = train_n, train_n + valid_n
    c = b + test_n
    leftover = len(ids) - c
    if leftover:
        logger.info("%d pairs beyond the requested sizes were added to train", leftover)
    return DatasetSplit(
        train=frozenset(order[:a] + order[c:]),
        valid=frozenset(order[a:b]),
        test=frozenset(order[b:c]),
        seed=seed,
        sizes=(train_n, valid_n, test_n),
        leftover=leftover,
    )


def write_split(pairs: Sequence[ArticlePair], split: DatasetSplit, out_dir) -> list[Path]:
    """Write the six pair files (ascending pair id) and the manifest."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    by_id = {p.pair_id: p for p in pairs}
    written = []
    for name in SPLIT_NAMES:
        members = sorted(split.members(name))
        for suffix, side in (("src", "original"), ("tgt", "simple")):
            path = out_dir / f"{name}.{suffix}"
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                for pid in members:
                    fh.write(getattr(by_id[pid], side).text() + "\n")
            written.append(path)
    manifest = out_dir / MANIFEST_NAME
    with open(manifest, "w", encoding="utf-8", newline="\n") as fh:
        sizes = ",".join(str(s) for s in split.sizes)
        fh.write(f"# seed={split.seed} sizes={sizes} generator={split.generator}\n")
        for pid, name in sorted(split.assignment().items()):
            fh.write(f"{pid}\t{name}\n")
    written.append(manifest)
    return written


def read_manifest(path) -> DatasetSplit:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith("#"):
        raise ValueError(f"{path}: missing manifest header")
    header = dict(item.split("=", 1) for item in lines[0].lstrip("# ").split())
    groups = {name: set() for name in SPLIT_NAMES}
    for lineno, line in enumerate(lines[1:], start=2):
        pid, _, name = line.partition("\t")
        if name not in groups:
            raise ValueError(f"{path}:{lineno}: unknown split {name!r}")
        groups[name].add(int(pid))
    sizes = tuple(int(s) for s in header["sizes"].split(","))
    total = sum(len(g) for g in groups.values())
    return DatasetSplit(
        train=frozenset(groups["train"]),
        valid=frozenset(groups["valid"]),
        test=frozenset(groups["test"]),
        seed=int(header["seed"]),
        sizes=sizes,
        leftover=total - sum(sizes),
        generator=header["generator"],
    )


def load_split(out_dir, name: str) -> list[ArticlePair]:
    """Reload one written split; pair ids come from the manifest."""
    out_dir = Path(out_dir)
    split = read_manifest(out_dir / MANIFEST_NAME)
    ids = sorted(split.members(name))
    pairs = load_pairs(out_dir / f"{name}.src", out_dir / f"{name}.tgt")
    if len(pairs) != len(ids):
        raise LineCountMismatch(f"{name} files hold {len(pairs)} pairs, manifest lists {len(ids)}")
    return [ArticlePair(p.original, p.simple, pid) for p, pid in zip(pairs, ids)]
