"""
Balanced labelings of Rothe diagrams and the Schubert polynomial formula
they give, plus the explicit labeling that separates column strict balanced
labelings from single-valued Rothe tableaux when ``w`` contains 1432.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import No1432Occurrence, SquareNotInDiagram
from .oracle import ring_for
from .perm import P1432, Permutation, Square, pattern_occurrences, rothe_diagram
from .poly import Polynomial
from .tableaux import SetValuedTableau, is_srt


@dataclass(frozen=True)
class Labeling:
    labels: tuple[tuple[Square, int], ...]

    @classmethod
    def from_mapping(cls, labels: Mapping[Square, int]) -> "Labeling":
        return cls(tuple((sq, int(labels[sq])) for sq in sorted(labels)))

    def __getitem__(self, square: Square) -> int:
        return dict(self.labels)[square]

    def as_dict(self) -> dict[Square, int]:
        return dict(self.labels)

    def as_tableau(self) -> SetValuedTableau:
        return SetValuedTableau.single(self.as_dict())

    def to_record(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in self.labels]


@dataclass(frozen=True)
class Hook:
    corner: Square
    arm: tuple[Square, ...]  # row squares from the corner rightwards
    leg: tuple[Square, ...]  # column squares from the corner downwards

    def squares(self) -> set[Square]:
        return set(self.arm) | set(self.leg)

    def path(self) -> list[Square]:
        """Rightmost arm square, leftwards to the corner, then down the leg."""
        return list(reversed(self.arm)) + list(self.leg[1:])


def hook(w: Permutation, i: int, j: int) -> Hook:
    d = rothe_diagram(w)
    if (i, j) not in d:
        raise SquareNotInDiagram((i, j))
    arm = tuple((i, c) for c in d.row(i) if c >= j)
    leg = tuple((r, j) for r in d.column(j) if r >= i)
    return Hook((i, j), arm, leg)


def is_balanced(w: Permutation, L: Labeling) -> bool:
    labels = L.as_dict()
    d = rothe_diagram(w)
    if set(labels) != set(d.squares):
        raise ValueError("labeling does not cover D(w)")
    for i, j in d.sorted():
        H = hook(w, i, j)
        ordered = sorted(labels[sq] for sq in H.path())
        if ordered[len(H.arm) - 1] != labels[(i, j)]:
            return False
    return True


def is_column_strict(L: Labeling) -> bool:
    seen = set()
    for (_, j), v in L.labels:
        if (j, v) in seen:
            return False
        seen.add((j, v))
    return True


def is_csbl(w: Permutation, L: Labeling) -> bool:
    """Column strict, balanced, and ``L(i, j) <= i``."""
    if any(v < 1 or v > i for (i, _), v in L.labels):
        return False
    return is_column_strict(L) and is_balanced(w, L)


def _flagged_column_strict(w: Permutation) -> Iterator[Labeling]:
    cells = rothe_diagram(w).sorted()
    labels: dict[Square, int] = {}
    used: dict[int, set[int]] = {}

    def rec(p: int) -> Iterator[Labeling]:
        if p == len(cells):
            yield Labeling(tuple((sq, labels[sq]) for sq in cells))
            return
        i, j = cells[p]
        col = used.setdefault(j, set())
        for v in range(1, i + 1):
            if v in col:
                continue
            labels[(i, j)] = v
            col.add(v)
            yield from rec(p + 1)
            col.discard(v)
        labels.pop((i, j), None)

    return rec(0)


def enumerate_csbl(w: Permutation) -> list[Labeling]:
    return [L for L in _flagged_column_strict(w) if is_balanced(w, L)]


def fgrs_schubert(w: Permutation) -> Polynomial:
    """``sum over CSBL of prod x_{L(i,j)}``; the single Schubert polynomial for every ``w``."""
    R = ring_for(w.n)
    total = R.zero()
    for L in enumerate_csbl(w):
        exps = [0] * w.n
        for _, v in L.labels:
            exps[v - 1] += 1
        total = total + R.monomial(exps)
    return total


def counterexample_labeling(w: Permutation) -> Labeling:
    """A labeling in CSBL(w) that is not a single-valued Rothe tableau.

    Uses the lexicographically first 1432 occurrence ``i1 < i2 < i3 < i4``.
    With ``(i3, j)`` the rightmost square of row ``i3``, the column-``j``
    squares between rows ``i1`` and ``i3`` split into those that end their row
    (S1) and the rest (S2).  ``i0`` is the first row of S1 lying below some
    square of S2; the S1 squares ``r_1 < ... < r_k = i0`` get labels
    ``i1, r_1, ..., r_{k-1}`` and every other square ``(s, t)`` gets ``s``.
    """
    occ = next(pattern_occurrences(w, P1432), None)
    if occ is None:
        raise No1432Occurrence(str(w))
    i1, _, i3, _ = occ
    d = rothe_diagram(w)
    j = d.row(i3)[-1]
    S = [i for i in d.column(j) if i1 <= i <= i3]
    S1 = [i for i in S if d.row(i)[-1] == j]
    S2 = [i for i in S if d.row(i)[-1] != j]
    i0 = min(i for i in S1 if any(r < i for r in S2))
    rows = [i for i in S1 if i <= i0]
    labels = {(s, t): s for (s, t) in d.squares}
    labels[(rows[0], j)] = i1
    for prev, r in zip(rows, rows[1:]):
        labels[(r, j)] = prev
    L = Labeling.from_mapping(labels)
    if not is_csbl(w, L) or is_srt(w, L.as_tableau()):
        raise AssertionError(f"construction failed for {w}")
    return L
