"""Exhaustive enumeration of small diagrams and the dual-route validation sweep.

``enumerate_canonical`` generates every Gauss diagram with a given number
of chords exactly once up to rotation, reflection and relabeling: it runs
over all perfect matchings of the 2n circle positions (the second
occurrences placed recursively), canonicalizes each word, and dedupes.
``cross_validate`` then plays the two independent deciders against each
other — the even-condition criterion of ``gaussreal.realizability`` and
the rotation-system search of ``gaussreal.oracle`` — over every canonical
diagram up to a chord bound.  Disagreements are not errors of the
harness; they are its most important output and are recorded with both
witnesses and written out as re-runnable batch lines.

Structured sweep documents never include timing, so two runs with the
same configuration are byte-identical; wall time is kept on the in-memory
report for the human-readable summary only.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from . import _kernels, codec
from .core import CanonicalForm, ChordDiagram, GaussWord, diagram_from_word, interlacement
from .oracle import EmbeddingWitness, oracle_realizable
from .realizability import RealizabilityReport, is_realizable


def _matchings(positions: tuple[int, ...]):
    """All perfect matchings of an ascending position tuple, as pair tuples."""
    if not positions:
        yield ()
        return
    first = positions[0]
    rest = positions[1:]
    for k in range(len(rest)):
        pair = (first, rest[k])
        remaining = rest[:k] + rest[k + 1 :]
        for tail in _matchings(remaining):
            yield (pair,) + tail


def _shard_keys(args) -> set:
    """Canonical keys of every index word whose position 0 pairs with j."""
    n, j = args
    m = 2 * n
    rest = tuple(p for p in range(1, m) if p != j)
    word = [0] * m
    word[j] = 0
    keys = set()
    for tail in _matchings(rest):
        for c, (p, q) in enumerate(tail, start=1):
            word[p] = word[q] = c
        keys.add(_kernels.canonical_key(word))
    return keys


def canonical_keys(n: int, workers: int = 1) -> list[tuple[int, ...]]:
    """Sorted canonical keys of all n-chord diagrams, one per symmetry orbit.

    The matching space is sharded by the partner of position 0; shards are
    independent, so they may run in worker processes, and the merged
    seen-set is identical either way.
    """
    if n < 0:
        raise ValueError("chord count must be non-negative")
    if n == 0:
        return [()]
    shards = [(n, j) for j in range(1, 2 * n)]
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            parts = pool.map(_shard_keys, shards)
    else:
        parts = [_shard_keys(shard) for shard in shards]
    keys = set()
    for part in parts:
        keys |= part
    return sorted(keys)


def enumerate_canonical(n: int, workers: int = 1) -> Iterator[ChordDiagram]:
    """One canonical representative per n-chord diagram, in sorted key order."""
    for key in canonical_keys(n, workers):
        yield CanonicalForm(key=key).diagram()


@dataclass(frozen=True)
class SweepConfig:
    max_chords: int
    require_non_isolated: bool = False  # drop diagrams containing kinks
    workers: int = 1
    output_path: str | None = None  # structured report copy, if set

    def __post_init__(self):
        if self.max_chords < 1:
            raise ValueError("max_chords must be at least 1")


@dataclass(frozen=True)
class Disagreement:
    """One diagram on which the two routes split, with both witnesses."""

    word: GaussWord
    criterion: RealizabilityReport
    oracle: EmbeddingWitness | None

    def document(self) -> dict:
        return {
            "word": self.word.text(),
            "criterion": self.criterion.document(),
            "oracle": None if self.oracle is None else self.oracle.document(),
        }


@dataclass(frozen=True)
class SweepRow:
    n: int
    total: int
    realizable: int
    non_realizable: int
    disagreements: tuple[Disagreement, ...]

    def document(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "realizable": self.realizable,
            "non_realizable": self.non_realizable,
            "disagreements": [d.document() for d in self.disagreements],
        }


@dataclass(frozen=True)
class SweepReport:
    max_chords: int
    require_non_isolated: bool
    rows: tuple[SweepRow, ...]
    wall_time: float  # seconds; deliberately absent from document()

    @property
    def disagreements(self) -> tuple[Disagreement, ...]:
        return tuple(d for row in self.rows for d in row.disagreements)

    def document(self) -> dict:
        doc = codec.new_document("cross-validation")
        doc.update(
            {
                "max_chords": self.max_chords,
                "require_non_isolated": self.require_non_isolated,
                "rows": [row.document() for row in self.rows],
                "total_diagrams": sum(row.total for row in self.rows),
                "total_disagreements": len(self.disagreements),
            }
        )
        return doc

    def summary_lines(self) -> list[str]:
        lines = []
        for row in self.rows:
            lines.append(
                "n=%d: %d diagrams, %d realizable, %d non-realizable, %d disagreements"
                % (
                    row.n,
                    row.total,
                    row.realizable,
                    row.non_realizable,
                    len(row.disagreements),
                )
            )
        lines.append(
            "total: %d diagrams, %d disagreements, %.1fs"
            % (
                sum(row.total for row in self.rows),
                len(self.disagreements),
                self.wall_time,
            )
        )
        return lines


def _verdict_pair(text: str) -> tuple[str, bool, bool]:
    diagram = diagram_from_word(text)
    return (
        text,
        is_realizable(diagram).realizable,
        oracle_realizable(diagram) is not None,
    )


def cross_validate(cfg: SweepConfig) -> SweepReport:
    """Run both deciders over every canonical diagram with n <= max_chords."""
    start = time.perf_counter()
    rows = []
    for n in range(1, cfg.max_chords + 1):
        words = []
        for diagram in enumerate_canonical(n, cfg.workers):
            if cfg.require_non_isolated and interlacement(diagram).isolated():
                continue
            words.append(diagram.word.text())
        if cfg.workers > 1:
            import multiprocessing

            with multiprocessing.Pool(cfg.workers) as pool:
                verdicts = pool.map(_verdict_pair, words)
        else:
            verdicts = [_verdict_pair(text) for text in words]
        realizable = 0
        disagreements = []
        for text, by_criterion, by_oracle in verdicts:
            realizable += by_criterion
            if by_criterion != by_oracle:
                diagram = diagram_from_word(text)
                disagreements.append(
                    Disagreement(
                        word=diagram.word,
                        criterion=is_realizable(diagram),
                        oracle=oracle_realizable(diagram),
                    )
                )
        rows.append(
            SweepRow(
                n=n,
                total=len(words),
                realizable=realizable,
                non_realizable=len(words) - realizable,
                disagreements=tuple(disagreements),
            )
        )
    report = SweepReport(
        max_chords=cfg.max_chords,
        require_non_isolated=cfg.require_non_isolated,
        rows=tuple(rows),
        wall_time=time.perf_counter() - start,
    )
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as handle:
            handle.write(codec.document_to_json(report.document()))
    return report


def write_counterexamples(report: SweepReport, path: str) -> tuple[str, str]:
    """Write disagreement words as a batch file plus a witness document.

    Returns the two paths written: the batch file at ``path`` (re-runnable
    with ``gaussreal check --batch``) and the full witnesses at
    ``path + ".json"``.
    """
    entries = report.disagreements
    lines = ["# diagrams where the even-condition route and the oracle split"]
    lines.extend(d.word.text() for d in entries)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")
    doc = codec.new_document("disagreements")
    doc["entries"] = [d.document() for d in entries]
    json_path = path + ".json"
    with open(json_path, "w", encoding="utf-8") as handle:
        handle.write(codec.document_to_json(doc))
    return path, json_path
