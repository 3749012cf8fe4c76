"""
The Rothe tableau complex of a permutation and its K-polynomial.

Vertices are pairs ``(B -/-> a)``, one for each ``(B -> a)`` in the set ``E``
of square/value pairs used by some single-valued Rothe tableau.  A face is
a set-valued filling ``F`` contained in ``E`` that contains a facet (a
single-valued Rothe tableau); as a vertex set it is the complement
``E \\ F``.  K-polynomials live in a ring whose variables ``t1..tN`` are
the vertices in :attr:`TableauComplex.vertices` order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterator, Optional

import numpy as np

from .errors import GroundSetTooLarge
from .oracle import ring_for
from .perm import Permutation, Square, m_statistics, rothe_diagram
from .poly import Polynomial, Ring, substitute
from .tableaux import DEFAULT_MAX_GROUND_SET, SetValuedTableau, enumerate_srt

Vertex = tuple[Square, int]


@dataclass(frozen=True)
class TableauComplex:
    w: Permutation
    squares: tuple[Square, ...]
    vertices: tuple[Vertex, ...]  # E, ordered by (row, col, value)
    facets: tuple[SetValuedTableau, ...]
    max_ground_set: int = field(default=DEFAULT_MAX_GROUND_SET, compare=False)

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def ring(self) -> Ring:
        return Ring(len(self.vertices), 0, xname="t")

    @cached_property
    def E(self) -> dict[Square, tuple[int, ...]]:
        out: dict[Square, list[int]] = {sq: [] for sq in self.squares}
        for sq, a in self.vertices:
            out[sq].append(a)
        return {sq: tuple(v) for sq, v in out.items()}

    @cached_property
    def facet_tuples(self) -> frozenset[tuple[int, ...]]:
        """Facets as value tuples in ``squares`` order."""
        return frozenset(tuple(T.values()[sq] for sq in self.squares) for T in self.facets)

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(
            sum(1 << self.index[(sq, a)] for sq, a in zip(self.squares, f)) for f in sorted(self.facet_tuples)
        )

    def t(self, vertex: Vertex) -> Polynomial:
        return self.ring.x(self.index[vertex] + 1)

    def guard(self) -> None:
        if len(self.vertices) > self.max_ground_set:
            raise GroundSetTooLarge(len(self.vertices), self.max_ground_set)


def build_rothe_complex(w: Permutation, max_ground_set: int = DEFAULT_MAX_GROUND_SET) -> TableauComplex:
    facets = tuple(enumerate_srt(w))
    squares = tuple(rothe_diagram(w).sorted())
    E = sorted({(sq, a) for T in facets for sq, a in T.values().items()})
    return TableauComplex(w, squares, tuple(E), facets, max_ground_set)


# -- the poset on D(w) --------------------------------------------------------


def square_order(w: Permutation) -> set[tuple[Square, Square]]:
    """Strict order ``B < B'``: transitive closure of ``B -> B'``, where
    ``B -> B'`` means same row with ``B`` to the right, or same column with
    ``B`` above."""
    d = rothe_diagram(w)
    cells = d.sorted()
    succ = {B: set() for B in cells}
    for B in cells:
        for B2 in cells:
            if B == B2:
                continue
            if (B[0] == B2[0] and B[1] > B2[1]) or (B[1] == B2[1] and B[0] < B2[0]):
                succ[B].add(B2)
    less = set()
    for B in cells:
        stack, seen = list(succ[B]), set()
        while stack:
            C = stack.pop()
            if C in seen:
                continue
            seen.add(C)
            stack.extend(succ[C])
        less |= {(B, C) for C in seen}
    return less


def column_pairs(w: Permutation) -> set[tuple[Square, Square]]:
    """``Psi``: comparable pairs lying in one column."""
    return {(B, C) for (B, C) in square_order(w) if B[1] == C[1]}


def kmy_tableaux(w: Permutation) -> list[dict[Square, int]]:
    """Maps ``f`` with ``f(B)`` in ``{1..i}``, weakly order preserving, and
    strictly increasing on column pairs."""
    d = rothe_diagram(w)
    cells = d.sorted()
    less = square_order(w)
    psi = column_pairs(w)
    out = []
    for vals in product(*(range(1, i + 1) for i, _ in cells)):
        f = dict(zip(cells, vals))
        if all(f[B] <= f[C] for B, C in less) and all(f[B] < f[C] for B, C in psi):
            out.append(f)
    return out


# -- faces --------------------------------------------------------------------


def _subsets(values) -> Iterator[frozenset[int]]:
    values = sorted(values)
    for k in range(1, len(values) + 1):
        for combo in combinations(values, k):
            yield frozenset(combo)


def _set_valued(c: TableauComplex) -> Iterator[tuple[frozenset[int], ...]]:
    """Every filling of the squares by nonempty subsets of ``E_B``."""
    return product(*(list(_subsets(c.E[sq])) for sq in c.squares))


def _contains_facet(c: TableauComplex, F: tuple[frozenset[int], ...]) -> bool:
    return any(all(a in Fx for a, Fx in zip(f, F)) for f in c.facet_tuples)


def faces(c: TableauComplex) -> list[SetValuedTableau]:
    """Faces as set-valued tableaux: fillings inside ``E`` containing a facet."""
    c.guard()
    return [SetValuedTableau(tuple(zip(c.squares, F))) for F in _set_valued(c) if _contains_facet(c, F)]


def face_vertex_set(c: TableauComplex, F: SetValuedTableau) -> frozenset[Vertex]:
    """The vertices ``(B -/-> a)`` of a face: pairs of ``E`` missing from ``F``."""
    filling = F.as_dict()
    return frozenset((sq, a) for sq, a in c.vertices if a not in filling[sq])


def _face_masks(c: TableauComplex) -> np.ndarray:
    """Boolean array over all vertex subsets: is the subset a face?"""
    c.guard()
    size = 1 << len(c.vertices)
    masks = np.arange(size, dtype=np.int64)
    is_face = np.zeros(size, dtype=bool)
    for fm in c.facet_masks:
        is_face |= (masks & fm) == 0
    return is_face


def k_poly_definition(c: TableauComplex) -> Polynomial:
    """``sum over faces sigma of prod_{v in sigma} t_v prod_{v not in sigma} (1 - t_v)``.

    Expanding, the coefficient of ``prod_{v in tau} t_v`` is
    ``sum_{sigma face, sigma <= tau} (-1)^{|tau| - |sigma|}``, which is a
    signed subset-sum transform of the face indicator.
    """
    N = len(c.vertices)
    coeff = _face_masks(c).astype(np.int64)
    for k in range(N):
        bit = 1 << k
        # split on vertex k: subsets with bit set pick up minus the subsets without it
        view = coeff.reshape(-1, 2, bit)
        view[:, 1, :] -= view[:, 0, :]
    R = c.ring
    terms = {}
    for tau in np.flatnonzero(coeff):
        exps = [(int(tau) >> k) & 1 for k in range(N)]
        terms[R.pack(exps)] = int(coeff[tau])
    return Polynomial(R, terms)


def reduced_euler_characteristic(c: TableauComplex) -> int:
    """``sum over faces sigma of (-1)^(dim sigma)``, the empty face counting -1."""
    is_face = _face_masks(c)
    sizes = np.array([bin(s).count("1") for s in range(len(is_face))], dtype=np.int64)
    signs = np.where(sizes % 2 == 1, 1, -1)
    return int(signs[is_face].sum())


# -- the three sum formulas ---------------------------------------------------


def _one_minus_t(c: TableauComplex, sq: Square, a: int) -> Polynomial:
    return 1 - c.t((sq, a))


def u1_tableaux(c: TableauComplex) -> list[SetValuedTableau]:
    """Fillings inside ``E`` all of whose single-valued selections are facets."""
    c.guard()
    out = []
    for F in _set_valued(c):
        if all(sel in c.facet_tuples for sel in product(*(sorted(Fx) for Fx in F))):
            out.append(SetValuedTableau(tuple(zip(c.squares, F))))
    return out


def kmy_formula1(c: TableauComplex, U1: Optional[list[SetValuedTableau]] = None) -> Polynomial:
    R = c.ring
    total = R.zero()
    for F in U1 if U1 is not None else u1_tableaux(c):
        term = R.const(-1 if (F.size() - len(c.squares)) % 2 else 1)
        for sq, vals in F.entries:
            for a in sorted(vals):
                term = term * _one_minus_t(c, sq, a)
        total = total + term
    return total


def kmy_formula2(c: TableauComplex) -> Polynomial:
    R = c.ring
    total = R.zero()
    for F in faces(c):
        term = R.one()
        for sq, vals in F.entries:
            for a in c.E[sq]:
                term = term * (_one_minus_t(c, sq, a) if a in vals else c.t((sq, a)))
        total = total + term
    return total


def kmy_upward_moves(c: TableauComplex, f: tuple[int, ...], k: int) -> list[int]:
    """Values above ``f`` at square number ``k`` that keep ``f`` inside ``U``."""
    out = []
    for a in c.E[c.squares[k]]:
        if a > f[k]:
            moved = f[:k] + (a,) + f[k + 1:]
            if moved in c.facet_tuples:
                out.append(a)
    return out


def kmy_formula3(c: TableauComplex) -> Polynomial:
    R = c.ring
    total = R.zero()
    for f in sorted(c.facet_tuples):
        term = R.one()
        for k, sq in enumerate(c.squares):
            term = term * _one_minus_t(c, sq, f[k])
            for a in kmy_upward_moves(c, f, k):
                term = term * c.t((sq, a))
        total = total + term
    return total


def specialize(c: TableauComplex, kpoly: Polynomial) -> Polynomial:
    """Send ``t_(B -/-> a)`` with ``B = (i, j)`` to ``(1 - x_a)(1 - y_{m_ij(w)+i-a})``."""
    R = ring_for(c.w.n)
    m = m_statistics(c.w)
    images = []
    for (i, j), a in c.vertices:
        images.append((1 - R.x(a)) * (1 - R.y(m[(i, j)] + i - a)))
    return substitute(kpoly, images, R)
