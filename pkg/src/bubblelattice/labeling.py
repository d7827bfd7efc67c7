"""Edge labels on the bubble order, the label poset, and the CU checker.

Every cover gets a label: the deleted x, the inserted y, or the inversion
pair a transposition creates.  The label poset puts each letter below the
pairs containing it and orders the pairs so that larger letter indices sit
lower.  ``verify_cu_labeling`` is generic: it takes any lattice, any edge
labeling, and any order on label values, and reports violations of the five
doubling-certificate conditions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from .bubble import CoverStep, LatticeFamily, upper_covers
from .errors import NotACover
from .posets import (
    Edge,
    FinitePoset,
    Polygon,
    join_irreducibles,
    lambda_jsd,
    meet_irreducibles,
    polygonal_intervals,
)
from .words import ShuffleWord


_KIND_RANK = {"x": 0, "y": 1, "xy": 2}


@dataclass(frozen=True)
class BubbleLabel:
    """A label value: x_s, y_t, or the pair (x_s, y_t).

    Sorting (x's, then y's, then pairs, by indices) is presentation-only;
    the label poset order is separate.
    """

    kind: str
    s: int = 0
    t: int = 0

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_RANK[self.kind], self.s, self.t)

    def __lt__(self, other: "BubbleLabel") -> bool:
        return self.sort_key < other.sort_key

    @staticmethod
    def xlab(s: int) -> "BubbleLabel":
        return BubbleLabel("x", s=s)

    @staticmethod
    def ylab(t: int) -> "BubbleLabel":
        return BubbleLabel("y", t=t)

    @staticmethod
    def pairlab(s: int, t: int) -> "BubbleLabel":
        return BubbleLabel("xy", s=s, t=t)

    def __str__(self) -> str:
        if self.kind == "x":
            return f"x{self.s}"
        if self.kind == "y":
            return f"y{self.t}"
        return f"(x{self.s},y{self.t})"


def label_from_step(step: CoverStep) -> BubbleLabel:
    if step.kind == "delete_x":
        return BubbleLabel.xlab(step.s)
    if step.kind == "insert_y":
        return BubbleLabel.ylab(step.t)
    return BubbleLabel.pairlab(step.s, step.t)


def lambda_bubble(u: ShuffleWord, v: ShuffleWord) -> BubbleLabel:
    """Label of the cover from u to v; raises NotACover otherwise."""
    for cover, step in upper_covers(u):
        if cover == v:
            return label_from_step(step)
    raise NotACover(f"{u} is not covered by {v}")


def edge_labels(family: LatticeFamily) -> dict[Edge, BubbleLabel]:
    """Labels for every Hasse edge of a bubble lattice family."""
    out: dict[Edge, BubbleLabel] = {}
    for i, w in enumerate(family.words):
        for cover, step in upper_covers(w):
            out[(i, family.index(cover))] = label_from_step(step)
    return out


@dataclass(frozen=True)
class LabelPoset:
    """The order on labels: letters below pairs, larger indices lower."""

    m: int
    n: int
    labels: tuple[BubbleLabel, ...]
    poset: FinitePoset

    def index(self, lab: BubbleLabel) -> int:
        return self._index[lab]

    @property
    def _index(self) -> dict[BubbleLabel, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {lab: i for i, lab in enumerate(self.labels)}
            self.__dict__["_index_cache"] = cached
        return cached

    def leq(self, a: BubbleLabel, b: BubbleLabel) -> bool:
        return self.poset.leq(self.index(a), self.index(b))


def label_leq(a: BubbleLabel, b: BubbleLabel) -> bool:
    """Closed form of the label-poset order.

    x_s sits below (x_s', y_t') iff s >= s'; y_t below (x_s', y_t') iff
    t >= t'; pairs compare componentwise with both indices reversed.  The
    second pair relation reads "strictly larger second index is lower";
    see the cover-structure test against the 4x3 instance.
    """
    if a == b:
        return True
    if b.kind != "xy":
        return False
    if a.kind == "x":
        return a.s >= b.s
    if a.kind == "y":
        return a.t >= b.t
    return a.s >= b.s and a.t >= b.t


def build_label_poset(m: int, n: int) -> LabelPoset:
    labels = (
        tuple(BubbleLabel.xlab(s) for s in range(1, m + 1))
        + tuple(BubbleLabel.ylab(t) for t in range(1, n + 1))
        + tuple(
            BubbleLabel.pairlab(s, t)
            for s in range(1, m + 1)
            for t in range(1, n + 1)
        )
    )
    poset = FinitePoset.from_leq(
        len(labels), lambda i, j: label_leq(labels[i], labels[j])
    )
    return LabelPoset(m, n, labels, poset)


@dataclass
class CUReport:
    """Violations of the five doubling-certificate conditions, per polygon."""

    cu1: list[dict] = field(default_factory=list)
    cu2: list[dict] = field(default_factory=list)
    cu3: list[dict] = field(default_factory=list)
    cu4: list[dict] = field(default_factory=list)
    cu5: list[dict] = field(default_factory=list)
    polygon_count: int = 0

    @property
    def ok(self) -> bool:
        return not (self.cu1 or self.cu2 or self.cu3 or self.cu4 or self.cu5)

    def as_dict(self) -> dict:
        return {
            "polygons": self.polygon_count,
            "violations": {
                "CU1": self.cu1,
                "CU2": self.cu2,
                "CU3": self.cu3,
                "CU4": self.cu4,
                "CU5": self.cu5,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def verify_cu_labeling(
    P: FinitePoset,
    labels: Mapping[Edge, object],
    leq: Callable[[object, object], bool],
    polygons: Optional[list[Polygon]] = None,
) -> CUReport:
    """Check CU1-CU5 for an edge labeling against an order on label values.

    CU1: in every polygon the two bottom labels reappear swapped at the top.
    CU2: interior chain labels lie strictly above both bottom labels.
    CU3: no chain of a polygon repeats a label.
    CU4/CU5: the edges into join-irreducibles (resp. out of
    meet-irreducibles) carry pairwise distinct labels.
    """
    report = CUReport()
    if polygons is None:
        polygons = polygonal_intervals(P)
    report.polygon_count = len(polygons)

    def strictly_less(a, b) -> bool:
        return a != b and leq(a, b)

    for poly in polygons:
        e1, e2 = poly.chain_edges()
        lab1 = [labels[e] for e in e1]
        lab2 = [labels[e] for e in e2]
        where = {"bottom": poly.bottom, "top": poly.top}
        if lab1[0] != lab2[-1] or lab2[0] != lab1[-1]:
            report.cu1.append({**where, "labels": [str(l) for l in lab1 + lab2]})
        for labs in (lab1, lab2):
            for interior in labs[1:-1]:
                if not (
                    strictly_less(lab1[0], interior)
                    and strictly_less(lab2[0], interior)
                ):
                    report.cu2.append({**where, "interior": str(interior)})
            if len(set(labs)) != len(labs):
                report.cu3.append({**where, "labels": [str(l) for l in labs]})
    seen: dict[object, int] = {}
    for j in join_irreducibles(P):
        lab = labels[(P.down_adj[j][0], j)]
        if lab in seen:
            report.cu4.append({"irreducibles": [seen[lab], j], "label": str(lab)})
        seen[lab] = j
    seen = {}
    for mm in meet_irreducibles(P):
        lab = labels[(mm, P.up_adj[mm][0])]
        if lab in seen:
            report.cu5.append({"irreducibles": [seen[lab], mm], "label": str(lab)})
        seen[lab] = mm
    return report


def check_cu_equals_jsd(P: FinitePoset, labels: Mapping[Edge, object]) -> bool:
    """Do the labeling's edge fibers coincide with those of the join-meet label?"""
    fibers: dict[object, set[Edge]] = {}
    jsd_fibers: dict[int, set[Edge]] = {}
    for edge in P.edges():
        fibers.setdefault(labels[edge], set()).add(edge)
        jsd_fibers.setdefault(lambda_jsd(P, edge), set()).add(edge)
    partition = {frozenset(v) for v in fibers.values()}
    jsd_partition = {frozenset(v) for v in jsd_fibers.values()}
    return partition == jsd_partition
