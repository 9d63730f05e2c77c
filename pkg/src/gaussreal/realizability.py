"""Plane-curve realizability of Gauss diagrams via the even condition.

A realizable diagram satisfies the *even condition*: every chord crosses
an even number of chords, and every two non-crossing chords share an even
number of crossing partners.  The condition is necessary but not
sufficient; the full criterion implemented by ``is_realizable`` is that
the diagram *and every single-chord smoothing of it* satisfy the even
condition.

Isolated chords (crossing nothing) are curls of the curve: they never
affect anyone's crossing sets, so they are stripped first and the
criterion runs on the kink-free rest; the empty diagram is the plain
circle.  Reports name their evidence — a parity-violating chord or pair,
possibly inside a named smoothing — with enough payload (the exact
crossing sets and the smoothed word) for ``verify_witness`` to re-check
by recomputation without repeating the search.

Everything here rides on the word rule for smoothing and on chord labels;
the rotation-system route in ``gaussreal.oracle`` shares none of this
code and is used to cross-validate these verdicts exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ChordDiagram,
    GaussWord,
    Interlacement,
    _label_key,
    diagram_from_word,
    interlacement,
)
from .smoothing import smooth_by_word


class WitnessMismatch(ValueError):
    """A report's claimed evidence does not survive recomputation."""


@dataclass(frozen=True)
class ChordParityViolation:
    """A chord crossing an odd number of chords."""

    chord: str
    crossings: tuple[str, ...]  # labels of the chords it crosses

    def subject(self) -> str:
        return "chord %s" % self.chord

    def describe(self) -> str:
        return "chord %s crosses %d chords (%s)" % (
            self.chord,
            len(self.crossings),
            ", ".join(self.crossings),
        )

    def document(self) -> dict:
        return {
            "kind": "chord",
            "chord": self.chord,
            "crossings": list(self.crossings),
        }


@dataclass(frozen=True)
class PairParityViolation:
    """A non-crossing chord pair sharing an odd number of partners."""

    pair: tuple[str, str]
    shared: tuple[str, ...]  # labels crossing both chords of the pair

    def subject(self) -> str:
        return "pair (%s, %s)" % self.pair

    def describe(self) -> str:
        return "non-crossing pair (%s, %s) shares %d crossings (%s)" % (
            self.pair[0],
            self.pair[1],
            len(self.shared),
            ", ".join(self.shared),
        )

    def document(self) -> dict:
        return {
            "kind": "pair",
            "pair": list(self.pair),
            "shared": list(self.shared),
        }


@dataclass(frozen=True)
class EvenConditionReport:
    """All parity violations of one diagram (chords first, then pairs)."""

    holds: bool
    violations: tuple[ChordParityViolation | PairParityViolation, ...]

    def document(self) -> dict:
        return {
            "holds": self.holds,
            "violations": [v.document() for v in self.violations],
        }


def even_condition(
    diagram: ChordDiagram, inter: Interlacement | None = None
) -> EvenConditionReport:
    """Check both parities on the diagram exactly as given.

    Isolated chords take part like any others: their crossing sets are
    empty, so they can never violate anything themselves, and pairs
    involving them share zero partners.  Violations are listed in label
    order, chord violations before pair violations.
    """
    if inter is None:
        inter = interlacement(diagram)
    labels = diagram.labels
    chord_violations = []
    for c in range(diagram.n):
        if len(inter.crossings[c]) % 2:
            names = sorted((labels[x] for x in inter.crossings[c]), key=_label_key)
            chord_violations.append(
                ChordParityViolation(chord=labels[c], crossings=tuple(names))
            )
    chord_violations.sort(key=lambda v: _label_key(v.chord))
    pair_violations = []
    for a in range(diagram.n):
        for b in range(a + 1, diagram.n):
            if inter.cross(a, b):
                continue
            shared = inter.crossings[a] & inter.crossings[b]
            if len(shared) % 2:
                pair = sorted((labels[a], labels[b]), key=_label_key)
                names = sorted((labels[x] for x in shared), key=_label_key)
                pair_violations.append(
                    PairParityViolation(pair=tuple(pair), shared=tuple(names))
                )
    pair_violations.sort(key=lambda v: tuple(_label_key(x) for x in v.pair))
    violations = tuple(chord_violations) + tuple(pair_violations)
    return EvenConditionReport(holds=not violations, violations=violations)


@dataclass(frozen=True)
class EvenConditionViolation:
    """The diagram itself fails the even condition; no smoothing needed."""

    report: EvenConditionReport

    @property
    def first(self) -> ChordParityViolation | PairParityViolation:
        return self.report.violations[0]

    def document(self) -> dict:
        return {"kind": "even-condition", "report": self.report.document()}


@dataclass(frozen=True)
class SmoothingViolation:
    """Smoothing one chord produces a diagram failing the even condition."""

    chord: str  # the smoothed chord (in the kink-free diagram)
    smoothed_word: GaussWord
    report: EvenConditionReport  # of the smoothed diagram

    def document(self) -> dict:
        return {
            "kind": "smoothing",
            "chord": self.chord,
            "smoothed_word": self.smoothed_word.text(),
            "report": self.report.document(),
        }


@dataclass(frozen=True)
class OracleCrossCheck:
    """Verdict of the independent rotation-system search, for reports."""

    realizable: bool
    agrees: bool
    handedness: tuple[int, ...] | None  # planar rotation system, if any

    def document(self) -> dict:
        return {
            "realizable": self.realizable,
            "agrees": self.agrees,
            "handedness": (
                None if self.handedness is None else list(self.handedness)
            ),
        }


@dataclass(frozen=True)
class RealizabilityReport:
    word: GaussWord
    kink_free_word: GaussWord
    realizable: bool
    witness: EvenConditionViolation | SmoothingViolation | None
    cross_check: OracleCrossCheck | None = None

    def headline(self) -> str:
        if self.realizable:
            return "realizable"
        w = self.witness
        if isinstance(w, EvenConditionViolation):
            return "non-realizable: even condition fails on %s" % w.first.subject()
        return "non-realizable: smoothing chord %s breaks even condition on %s" % (
            w.chord,
            w.report.violations[0].subject(),
        )

    def document(self) -> dict:
        return {
            "word": self.word.text(),
            "kink_free_word": self.kink_free_word.text(),
            "verdict": "realizable" if self.realizable else "non-realizable",
            "witness": None if self.witness is None else self.witness.document(),
            "cross_check": (
                None if self.cross_check is None else self.cross_check.document()
            ),
        }


def remove_isolated(diagram: ChordDiagram) -> ChordDiagram:
    """Drop every chord that crosses nothing.

    One pass suffices: deleting a chord's two word positions never changes
    which of the remaining chords interleave, so no new isolated chords
    can appear.
    """
    inter = interlacement(diagram)
    kinks = inter.isolated()
    if not kinks:
        return diagram
    keep = tuple(
        s
        for p, s in enumerate(diagram.word.symbols)
        if diagram.position_chord[p] not in kinks
    )
    return diagram_from_word(GaussWord(keep))


def is_realizable(diagram: ChordDiagram) -> RealizabilityReport:
    """Decide realizability: even condition for the diagram and all smoothings.

    The verdict is computed on the kink-free diagram.  The witness for a
    non-realizable verdict is the least one in search order: a violation
    of the diagram itself if there is one, otherwise the first chord (in
    word order) whose smoothing violates, with that smoothing's full
    violation list.
    """
    reduced = remove_isolated(diagram)
    base = even_condition(reduced)
    witness: EvenConditionViolation | SmoothingViolation | None = None
    if not base.holds:
        witness = EvenConditionViolation(report=base)
    else:
        for c in range(reduced.n):
            result = smooth_by_word(reduced, reduced.labels[c])
            report = even_condition(result.diagram)
            if not report.holds:
                witness = SmoothingViolation(
                    chord=reduced.labels[c],
                    smoothed_word=result.word,
                    report=report,
                )
                break
    return RealizabilityReport(
        word=diagram.word,
        kink_free_word=reduced.word,
        realizable=witness is None,
        witness=witness,
    )


def _check_violation(diagram, inter, violation) -> None:
    labels = diagram.labels
    if isinstance(violation, ChordParityViolation):
        c = diagram.index_of(violation.chord)
        names = tuple(
            sorted((labels[x] for x in inter.crossings[c]), key=_label_key)
        )
        if names != violation.crossings:
            raise WitnessMismatch(
                "chord %s crosses %s, not %s"
                % (violation.chord, names, violation.crossings)
            )
        if len(names) % 2 == 0:
            raise WitnessMismatch(
                "chord %s crosses an even number of chords" % violation.chord
            )
        return
    a = diagram.index_of(violation.pair[0])
    b = diagram.index_of(violation.pair[1])
    if inter.cross(a, b):
        raise WitnessMismatch("pair (%s, %s) crosses" % violation.pair)
    shared = inter.crossings[a] & inter.crossings[b]
    names = tuple(sorted((labels[x] for x in shared), key=_label_key))
    if names != violation.shared:
        raise WitnessMismatch(
            "pair (%s, %s) shares %s, not %s"
            % (violation.pair + (names, violation.shared))
        )
    if len(names) % 2 == 0:
        raise WitnessMismatch(
            "pair (%s, %s) shares an even number of crossings" % violation.pair
        )


def verify_witness(diagram: ChordDiagram, report: RealizabilityReport) -> bool:
    """Re-check a report's named evidence by direct recomputation.

    Verifies only what the witness claims (the exact crossing sets of the
    named chord or pair, after the named smoothing if any) — not the
    search that found it.  Raises ``WitnessMismatch`` on the first claim
    that fails; returns True when every claim checks out.
    """
    if report.word != diagram.word:
        raise WitnessMismatch("report was produced for a different word")
    reduced = remove_isolated(diagram)
    if report.kink_free_word != reduced.word:
        raise WitnessMismatch("kink removal disagrees with the report")
    witness = report.witness
    if report.realizable:
        if witness is not None:
            raise WitnessMismatch("realizable report carries a witness")
        return True
    if witness is None:
        raise WitnessMismatch("non-realizable report carries no witness")
    if isinstance(witness, EvenConditionViolation):
        target = reduced
    else:
        result = smooth_by_word(reduced, witness.chord)
        if result.word != witness.smoothed_word:
            raise WitnessMismatch(
                "smoothing chord %s yields %r, not %r"
                % (witness.chord, result.word.text(), witness.smoothed_word.text())
            )
        target = result.diagram
    violations = witness.report.violations
    if not violations:
        raise WitnessMismatch("witness names no violation")
    inter = interlacement(target)
    for violation in violations:
        _check_violation(target, inter, violation)
    return True
