"""Core combinatorics: double occurrence words, chord diagrams, interlacement.

Conventions used throughout the package:

- A *Gauss word* is a cyclic sequence of 2n symbols in which every symbol
  occurs exactly twice.  We store one linear representative; all derived
  notions (interlacement, contours, smoothing) only depend on the cyclic
  word, and the canonical form quotients out the choice of representative.

- Symbols ("labels") are opaque strings.  Internally every chord gets an
  index in 0..n-1 ordered by the first occurrence of its label, and the two
  occurrences of chord i sit at circle positions ``endpoints[i] = (p, q)``
  with ``p < q``.  Positions are 0..2n-1 counted along the stored word.

- Chords a and b are *interlaced* (they cross) when exactly one endpoint of
  b lies strictly between the endpoints of a along the circle.  ``a_cross``
  denotes the set of chords crossing a.

- The canonical form of a word is the lexicographically least sequence of
  first-occurrence indices over all 2n rotations and both reading
  directions.  Two words are equivalent (same diagram up to rotation,
  reflection and relabelling) iff their canonical keys are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import _kernels


class MalformedWord(ValueError):
    """The token sequence is not a double occurrence word."""


class UnknownChord(KeyError):
    """A chord label that does not occur in the diagram."""


def _label_key(label: str):
    """Sort key giving numeric labels their numeric order ("2" < "10")."""
    try:
        return (0, int(label), label)
    except ValueError:
        return (1, 0, label)


@dataclass(frozen=True)
class GaussWord:
    """A validated double occurrence word (possibly empty)."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        counts: dict[str, int] = {}
        for sym in self.symbols:
            if not sym:
                raise MalformedWord("empty token")
            counts[sym] = counts.get(sym, 0) + 1
        bad = sorted((s for s, k in counts.items() if k != 2), key=_label_key)
        if bad:
            raise MalformedWord(
                "every label must occur exactly twice; offending labels: %s"
                % " ".join(bad)
            )

    @classmethod
    def from_tokens(cls, tokens) -> "GaussWord":
        return cls(tuple(str(t) for t in tokens))

    @property
    def n(self) -> int:
        return len(self.symbols) // 2

    def text(self) -> str:
        """Single-space separated token text (no trailing newline)."""
        return " ".join(self.symbols)

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class ChordDiagram:
    """A Gauss word with chords resolved to indices and circle positions."""

    word: GaussWord
    labels: tuple[str, ...]  # chord index -> label, by first occurrence
    endpoints: tuple[tuple[int, int], ...]  # chord index -> (p, q), p < q

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def position_chord(self) -> tuple[int, ...]:
        """Circle position -> chord index."""
        out = [0] * (2 * self.n)
        for c, (p, q) in enumerate(self.endpoints):
            out[p] = c
            out[q] = c
        return tuple(out)

    @cached_property
    def index_by_label(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        try:
            return self.index_by_label[str(label)]
        except KeyError:
            raise UnknownChord(
                "no chord labelled %r in word %r" % (label, self.word.text())
            ) from None

    def index_word(self) -> tuple[int, ...]:
        """The word rewritten as chord indices (first occurrences increasing)."""
        return tuple(self.position_chord)


def diagram_from_word(word: GaussWord | str) -> ChordDiagram:
    """Resolve a word into a chord diagram (indices by first occurrence)."""
    if isinstance(word, str):
        word = GaussWord.from_tokens(word.split())
    labels: list[str] = []
    first: dict[str, int] = {}
    pairs: dict[str, list[int]] = {}
    for pos, sym in enumerate(word.symbols):
        if sym not in first:
            first[sym] = len(labels)
            labels.append(sym)
            pairs[sym] = [pos]
        else:
            pairs[sym].append(pos)
    endpoints = tuple((pairs[lab][0], pairs[lab][1]) for lab in labels)
    return ChordDiagram(word=word, labels=tuple(labels), endpoints=endpoints)


def word_from_positions(n: int, position_chord, labels=None) -> GaussWord:
    """Inverse of ``ChordDiagram.index_word`` (labels default to "1".."n")."""
    if labels is None:
        labels = tuple(str(i + 1) for i in range(n))
    return GaussWord.from_tokens(labels[c] for c in position_chord)


@dataclass(frozen=True)
class Interlacement:
    """The crossing relation of a diagram, as one chord-index set per chord."""

    crossings: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    def cross(self, a: int, b: int) -> bool:
        return b in self.crossings[a]

    def isolated(self) -> frozenset[int]:
        return frozenset(c for c, s in enumerate(self.crossings) if not s)


def interlacement(diagram: ChordDiagram) -> Interlacement:
    """Compute which chords cross: exactly one endpoint strictly inside."""
    n = diagram.n
    sets: list[set[int]] = [set() for _ in range(n)]
    for a in range(n):
        p, q = diagram.endpoints[a]
        for b in range(a + 1, n):
            r, s = diagram.endpoints[b]
            if (p < r < q) != (p < s < q):
                sets[a].add(b)
                sets[b].add(a)
    return Interlacement(tuple(frozenset(s) for s in sets))


def crossing_labels(diagram: ChordDiagram, inter: Interlacement) -> dict[str, frozenset[str]]:
    """The crossing relation keyed by labels instead of indices."""
    return {
        diagram.labels[c]: frozenset(diagram.labels[d] for d in inter.crossings[c])
        for c in range(diagram.n)
    }


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Canonical representative of a diagram's symmetry orbit.

    ``key`` is the minimal index word; ``word`` renders it with labels
    "1".."n".  Keys compare lexicographically, so CanonicalForm instances
    order the same way their orbits do.
    """

    key: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.key) // 2

    @cached_property
    def word(self) -> GaussWord:
        return GaussWord.from_tokens(str(c + 1) for c in self.key)

    def diagram(self) -> ChordDiagram:
        return diagram_from_word(self.word)


def canonicalize(diagram: ChordDiagram | GaussWord | str) -> CanonicalForm:
    """Least relabelled word over all rotations and both reading directions."""
    if not isinstance(diagram, ChordDiagram):
        diagram = diagram_from_word(diagram)
    return CanonicalForm(key=_kernels.canonical_key(diagram.index_word()))


def symmetry_variants(word: GaussWord):
    """All 4n rotated/reflected readings of a word (as token tuples).

    Used by tests to check that the canonical form is constant on orbits;
    the canonical key of every variant must coincide.
    """
    syms = word.symbols
    m = len(syms)
    for start in range(m):
        yield tuple(syms[(start + k) % m] for k in range(m))
        yield tuple(syms[(start - k) % m] for k in range(m))
