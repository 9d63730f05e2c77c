"""Contours, door chords, complement colorings, and colorful chords.

A *C-contour* C(a) is a chord ``a`` together with one of the two circle
arcs bounded by its endpoints; the chords lying entirely inside the chosen
arc are its members, and the chords crossing ``a`` are its doors (each
door has exactly one endpoint inside the chosen arc).  An *X-contour*
X(a, b) of two crossing chords is the analogous region bounded by both
chords and two opposite circle arcs: the four endpoints cut the circle
into four arcs, and the contour takes one opposite pair of them.  A door
of X(a, b) is a chord with exactly one endpoint inside the contour arcs.

Colorings.  The circle segments outside a contour split into complement
components (one arc for a C-contour, two opposite arcs for an X-contour).
Each component is painted with two colors: walking it from start to end,
the color flips exactly when a door-chord endpoint is passed.  Each
component's colors are anchored independently: the single C-contour
component starts with color A, and each X-contour component carries color
A on the segment adjacent to its endpoint of chord ``b``.  (Anchoring at
the b-ends is what makes these colorings survive smoothing b — see
``transfer_witness``; door endpoints inside the contour arcs lie in
unpainted territory and do not flip anything.)

A chord with both endpoints on painted segments of different colors is
*colorful*.  A colorful chord for a non-degenerate X-contour certifies
that the diagram is not realizable by a closed plane curve, and the
certificate can be re-checked after smoothing ``b`` with a plain
C-contour; that is exactly what ``exists_colorful_witness`` and
``transfer_witness`` produce.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ChordDiagram, Interlacement, _label_key, interlacement
from .smoothing import SmoothingResult, smooth_by_word

COLOR_A = "A"
COLOR_B = "B"


class ChordsDoNotCross(ValueError):
    """X-contours require an interleaved chord pair."""


class DegenerateContour(ValueError):
    """Coloring is only defined for contours with doors and an outside."""


def _arc_positions(m: int, start: int, stop: int):
    """Positions strictly between ``start`` and ``stop``, walking forward."""
    p = (start + 1) % m
    while p != stop:
        yield p
        p = (p + 1) % m


def _arc_segments(m: int, start: int, stop: int):
    """Segments of the forward walk start -> stop (segment p joins p, p+1)."""
    p = start
    while p != stop:
        yield p
        p = (p + 1) % m


@dataclass(frozen=True)
class CContour:
    """Chord ``a`` plus a chosen arc; doors are exactly the chords crossing a."""

    diagram: ChordDiagram
    a: int  # chord index
    selector: int  # 0: arc from first endpoint to second; 1: the other arc
    arc: tuple[int, int]  # (start, stop) boundary positions of the chosen arc
    members: frozenset[int]
    doors: frozenset[int]

    @property
    def a_label(self) -> str:
        return self.diagram.labels[self.a]

    @property
    def chord_indices(self) -> frozenset[int]:
        return frozenset((self.a,))

    @property
    def complement_components(self) -> tuple[tuple[int, int], ...]:
        return ((self.arc[1], self.arc[0]),)

    @property
    def contour_arcs(self) -> tuple[tuple[int, int], ...]:
        return (self.arc,)

    def document(self) -> dict:
        labels = self.diagram.labels
        return {
            "kind": "c-contour",
            "chord": self.a_label,
            "selector": self.selector,
            "arc": list(self.arc),
            "members": sorted((labels[c] for c in self.members), key=_label_key),
            "doors": sorted((labels[c] for c in self.doors), key=_label_key),
        }


@dataclass(frozen=True)
class XContour:
    """Crossing chords ``a, b`` plus an opposite pair of the four arcs."""

    diagram: ChordDiagram
    a: int
    b: int
    selector: int  # 0: arcs starting at a's endpoints; 1: arcs starting at b's
    arcs: tuple[tuple[int, int], tuple[int, int]]
    members: frozenset[int]
    doors: frozenset[int]
    non_degenerate: bool

    @property
    def a_label(self) -> str:
        return self.diagram.labels[self.a]

    @property
    def b_label(self) -> str:
        return self.diagram.labels[self.b]

    @property
    def chord_indices(self) -> frozenset[int]:
        return frozenset((self.a, self.b))

    @property
    def complement_components(self) -> tuple[tuple[int, int], ...]:
        (s0, t0), (s1, t1) = self.arcs
        return ((t0, s1), (t1, s0))

    @property
    def contour_arcs(self) -> tuple[tuple[int, int], ...]:
        return self.arcs

    def document(self) -> dict:
        labels = self.diagram.labels
        return {
            "kind": "x-contour",
            "chords": [self.a_label, self.b_label],
            "selector": self.selector,
            "arcs": [list(arc) for arc in self.arcs],
            "members": sorted((labels[c] for c in self.members), key=_label_key),
            "doors": sorted((labels[c] for c in self.doors), key=_label_key),
            "non_degenerate": self.non_degenerate,
        }


@dataclass(frozen=True)
class ArcColoring:
    """Two-coloring of the circle segments outside a contour.

    ``segments[p]`` is the color of the segment joining positions p and
    p+1, or None when that segment lies inside the contour arcs.
    ``anchors`` are the walk start positions of the complement components
    and ``flips`` the door endpoints (all of them outside the contour)
    where the walk changed color.  Within each component the color changes
    exactly at door endpoints; everything downstream is invariant under
    swapping the two colors.
    """

    segments: tuple[str | None, ...]
    anchors: tuple[int, ...]
    flips: tuple[int, ...]

    def color_at(self, position: int) -> str:
        """Color at a position flanked by equal-colored painted segments."""
        m = len(self.segments)
        before = self.segments[(position - 1) % m]
        after = self.segments[position]
        if before is None or after is None or before != after:
            raise ValueError(
                "position %d is not interior to a solid-colored arc" % position
            )
        return after

    def swapped(self) -> "ArcColoring":
        other = {COLOR_A: COLOR_B, COLOR_B: COLOR_A, None: None}
        return ArcColoring(
            segments=tuple(other[c] for c in self.segments),
            anchors=self.anchors,
            flips=self.flips,
        )

    def document(self) -> dict:
        return {
            "segments": list(self.segments),
            "anchors": list(self.anchors),
            "flips": list(self.flips),
        }


def build_c_contour(
    diagram: ChordDiagram,
    a: str,
    arc_selector: int = 0,
    inter: Interlacement | None = None,
) -> CContour:
    """Contour of chord ``a`` and its chosen arc (selector 0 or 1)."""
    if arc_selector not in (0, 1):
        raise ValueError("arc selector must be 0 or 1")
    ai = diagram.index_of(a)
    p, q = diagram.endpoints[ai]
    arc = (p, q) if arc_selector == 0 else (q, p)
    if inter is None:
        inter = interlacement(diagram)
    inside = frozenset(_arc_positions(2 * diagram.n, *arc))
    members = frozenset(
        c
        for c, (r, s) in enumerate(diagram.endpoints)
        if c != ai and r in inside and s in inside
    )
    return CContour(
        diagram=diagram,
        a=ai,
        selector=arc_selector,
        arc=arc,
        members=members,
        doors=inter.crossings[ai],
    )


def build_x_contour(
    diagram: ChordDiagram,
    a: str,
    b: str,
    arc_selector: int = 0,
    inter: Interlacement | None = None,
) -> XContour:
    """Contour of the crossing pair ``a, b`` and an opposite arc pair.

    The four endpoints in circle order alternate between the two chords.
    Selector 0 takes the two arcs that start (in the forward direction) at
    a's endpoints; selector 1 takes the two that start at b's.  Either
    way each contour arc has one a-end and one b-end, and the complement
    components each run from a b-end forward to an a-end (selector 0) or
    vice versa (selector 1).
    """
    if arc_selector not in (0, 1):
        raise ValueError("arc selector must be 0 or 1")
    ai = diagram.index_of(a)
    bi = diagram.index_of(b)
    if inter is None:
        inter = interlacement(diagram)
    if not inter.cross(ai, bi):
        raise ChordsDoNotCross(
            "chords %r and %r do not interleave" % (a, b)
        )
    m = 2 * diagram.n
    corners = sorted(diagram.endpoints[ai] + diagram.endpoints[bi])
    if corners[0] not in diagram.endpoints[ai]:
        # Orient the corner list so it reads a, b, a, b.
        corners = corners[1:] + corners[:1]
    q0, q1, q2, q3 = corners
    if arc_selector == 0:
        arcs = ((q0, q1), (q2, q3))
    else:
        arcs = ((q1, q2), (q3, q0))
    inside = frozenset(_arc_positions(m, *arcs[0])) | frozenset(
        _arc_positions(m, *arcs[1])
    )
    members = set()
    doors = set()
    for c, (r, s) in enumerate(diagram.endpoints):
        if c == ai or c == bi:
            continue
        hits = (r in inside) + (s in inside)
        if hits == 2:
            members.add(c)
        elif hits == 1:
            doors.add(c)
    return XContour(
        diagram=diagram,
        a=ai,
        b=bi,
        selector=arc_selector,
        arcs=arcs,
        members=frozenset(members),
        doors=frozenset(doors),
        non_degenerate=bool(doors) and len(members) + 2 < diagram.n,
    )


def color_complement(contour: CContour | XContour) -> ArcColoring:
    """Paint the segments outside the contour, flipping at door endpoints.

    Each complement component is walked forward from its start position.
    The first segment of a C-contour component is colored A.  An X-contour
    component is anchored at whichever of its two ends belongs to chord
    ``b``: the segment adjacent to that end gets color A, which fixes the
    walk's initial color on either selector.
    """
    if isinstance(contour, XContour) and not contour.non_degenerate:
        raise DegenerateContour(
            "X(%s, %s) selector %d has no doors or no outside chords"
            % (contour.a_label, contour.b_label, contour.selector)
        )
    diagram = contour.diagram
    m = 2 * diagram.n
    door_flips = set()
    for c in contour.doors:
        for p in diagram.endpoints[c]:
            door_flips.add(p)
    inside = set()
    for arc in contour.contour_arcs:
        inside.update(_arc_positions(m, *arc))
    door_flips -= inside  # only the endpoints in painted territory flip

    segments: list[str | None] = [None] * m
    anchors = []
    flips = []
    b_ends = (
        set(diagram.endpoints[contour.b])
        if isinstance(contour, XContour)
        else set()
    )
    for start, stop in contour.complement_components:
        interior_flips = sum(
            1 for p in _arc_positions(m, start, stop) if p in door_flips
        )
        color = COLOR_A
        if stop in b_ends and interior_flips % 2:
            # Anchor color A at the far (b) end of the component.
            color = COLOR_B
        anchors.append(start)
        for seg in _arc_segments(m, start, stop):
            if seg != start and seg in door_flips:
                color = COLOR_B if color == COLOR_A else COLOR_A
                flips.append(seg)
            segments[seg] = color
    return ArcColoring(
        segments=tuple(segments),
        anchors=tuple(anchors),
        flips=tuple(sorted(flips)),
    )


def colorful_chords(
    diagram: ChordDiagram,
    contour: CContour | XContour,
    coloring: ArcColoring,
) -> frozenset[str]:
    """Labels of chords whose two endpoints sit on different colors.

    Only chords entirely outside the contour qualify: not the contour
    chords themselves, not members, not doors.  Such a chord's endpoints
    are interior to painted arcs, so ``color_at`` is well defined.
    """
    excluded = contour.chord_indices | contour.members | contour.doors
    found = []
    for c, (p, q) in enumerate(diagram.endpoints):
        if c in excluded:
            continue
        if coloring.color_at(p) != coloring.color_at(q):
            found.append(diagram.labels[c])
    return frozenset(found)


@dataclass(frozen=True)
class ColorfulWitness:
    """A non-degenerate X-contour plus one of its colorful chords."""

    contour: XContour
    chord: str
    coloring: ArcColoring

    @property
    def word(self) -> str:
        return self.contour.diagram.word.text()

    def document(self) -> dict:
        return {
            "contour": self.contour.document(),
            "chord": self.chord,
            "coloring": self.coloring.document(),
        }


def exists_colorful_witness(diagram: ChordDiagram) -> ColorfulWitness | None:
    """Search every X-contour for a colorful chord; least witness wins.

    Chord pairs are scanned as ordered pairs in index order (the roles of
    a and b are not interchangeable: the coloring is anchored at b, and
    ``transfer_witness`` smooths b), then by arc selector, then by chord
    index among that coloring's colorful chords.
    """
    inter = interlacement(diagram)
    labels = diagram.labels
    for ai in range(diagram.n):
        for bi in range(diagram.n):
            if bi == ai or not inter.cross(ai, bi):
                continue
            for selector in (0, 1):
                contour = build_x_contour(
                    diagram, labels[ai], labels[bi], selector, inter=inter
                )
                if not contour.non_degenerate:
                    continue
                coloring = color_complement(contour)
                hits = colorful_chords(diagram, contour, coloring)
                if hits:
                    least = min(hits, key=diagram.index_of)
                    return ColorfulWitness(
                        contour=contour, chord=least, coloring=coloring
                    )
    return None


def transfer_witness(
    diagram: ChordDiagram, witness: ColorfulWitness
) -> tuple[SmoothingResult, CContour, ArcColoring]:
    """Re-express an X-contour witness as a C-contour one after smoothing.

    Smoothing chord b of the witness contour leaves a diagram in which the
    witness chord no longer crosses a, so both its endpoints lie on one
    side of a; the C-contour of a whose chosen arc is the *other* side has
    the witness chord outside, and anchoring at b is precisely what makes
    it colorful there again.  Callers re-check that with
    ``colorful_chords``; this function only builds the pieces.
    """
    a_label = witness.contour.a_label
    result = smooth_by_word(diagram, witness.contour.b_label)
    smoothed = result.diagram
    ai = smoothed.index_of(a_label)
    ci = smoothed.index_of(witness.chord)
    p, q = smoothed.endpoints[ai]
    inside0 = set(_arc_positions(2 * smoothed.n, p, q))
    c_inside = sum(1 for pos in smoothed.endpoints[ci] if pos in inside0)
    if c_inside == 1:
        raise AssertionError(
            "witness chord %r still crosses %r after smoothing"
            % (witness.chord, witness.contour.b_label)
        )
    selector = 1 if c_inside == 2 else 0
    contour = build_c_contour(smoothed, a_label, selector)
    return result, contour, color_complement(contour)
