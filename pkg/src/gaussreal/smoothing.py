"""Smoothing a chord of a Gauss diagram, two independent ways.

Smoothing chord c replaces the two passages through crossing c by a
turn that avoids the crossing.  On the word this is a segment reversal:
writing the stored word as W1 c W2 c W3 (W1 starts at position 0), the
smoothed word is W1 (reverse of W2) W3.

The same operation acts on the crossing relation alone: delete c and flip
"crosses"/"does not cross" for every pair of chords that both crossed c;
all other pairs keep their relation.  ``smooth_by_toggle`` implements this
second description directly and deliberately shares no code with
``smooth_by_word`` -- agreement of the two routes on every diagram is one
of the package's standing cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ChordDiagram,
    GaussWord,
    Interlacement,
    diagram_from_word,
    interlacement,
)


@dataclass(frozen=True)
class SmoothingResult:
    """Outcome of smoothing one chord via the word rule."""

    source_word: GaussWord
    chord: str  # label of the smoothed chord
    diagram: ChordDiagram  # the smoothed diagram (labels inherited)

    @property
    def word(self) -> GaussWord:
        return self.diagram.word


def smooth_by_word(diagram: ChordDiagram, chord: str) -> SmoothingResult:
    """Smooth ``chord`` by the W1 c W2 c W3 -> W1 reversed(W2) W3 rule."""
    idx = diagram.index_of(chord)
    p, q = diagram.endpoints[idx]
    syms = diagram.word.symbols
    smoothed = syms[:p] + tuple(reversed(syms[p + 1 : q])) + syms[q + 1 :]
    return SmoothingResult(
        source_word=diagram.word,
        chord=diagram.labels[idx],
        diagram=diagram_from_word(GaussWord(smoothed)),
    )


def smooth_by_toggle(diagram: ChordDiagram, chord: str) -> Interlacement:
    """Smooth ``chord`` on the crossing relation only.

    The result is indexed by the surviving chords in their original index
    order (the smoothed chord's slot removed, later indices shifted down);
    use ``surviving_labels`` for the matching label order.
    """
    idx = diagram.index_of(chord)
    inter = interlacement(diagram)
    affected = inter.crossings[idx]
    keep = [c for c in range(diagram.n) if c != idx]
    renumber = {c: i for i, c in enumerate(keep)}
    sets: list[set[int]] = [set() for _ in keep]
    for a in keep:
        for b in keep:
            if b <= a:
                continue
            crossed = inter.cross(a, b)
            if a in affected and b in affected:
                crossed = not crossed
            if crossed:
                sets[renumber[a]].add(renumber[b])
                sets[renumber[b]].add(renumber[a])
    return Interlacement(tuple(frozenset(s) for s in sets))


def surviving_labels(diagram: ChordDiagram, chord: str) -> tuple[str, ...]:
    """Labels of the chords left by smoothing ``chord``, in toggle order."""
    idx = diagram.index_of(chord)
    return tuple(lab for i, lab in enumerate(diagram.labels) if i != idx)
