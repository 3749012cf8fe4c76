"""
Flagged set-valued, single-valued and limit set-valued Rothe tableaux, and
the tableau sums that produce Grothendieck and Schubert polynomials.

Conventions.  A set-valued Rothe tableau fills every square of ``D(w)`` with a
nonempty set of positive integers so that rows weakly decrease and columns
strictly increase in Buch's order on sets (``A <= B`` iff ``max A <= min B``),
and every entry in row ``i`` is at most ``i``.  Each entry ``t`` in square
``(i, j)`` carries the weight ``x_t (+) y_{m_ij(w) + i - t}``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from .errors import GroundSetTooLarge, NotThreeTwoOneAvoiding, SquareNotInDiagram
from .oracle import ring_for
from .perm import (
    Diagram,
    Permutation,
    Square,
    is_321_avoiding,
    m_statistics,
    rothe_diagram,
    skew_shape_321,
)
from .poly import Polynomial, Ring, oplus, set_y_zero

# limit tableaux and faces enumerate subsets of the ground set E
DEFAULT_MAX_GROUND_SET = 20


@dataclass(frozen=True)
class SetValuedTableau:
    """Immutable filling of a diagram by nonempty sets, stored row-major."""

    entries: tuple[tuple[Square, frozenset[int]], ...]

    @classmethod
    def from_mapping(cls, filling: Mapping[Square, Iterable[int]]) -> "SetValuedTableau":
        return cls(tuple((sq, frozenset(filling[sq])) for sq in sorted(filling)))

    @classmethod
    def single(cls, filling: Mapping[Square, int]) -> "SetValuedTableau":
        return cls(tuple((sq, frozenset((filling[sq],))) for sq in sorted(filling)))

    def __getitem__(self, square: Square) -> frozenset[int]:
        for sq, vals in self.entries:
            if sq == square:
                return vals
        raise SquareNotInDiagram(square)

    def squares(self) -> list[Square]:
        return [sq for sq, _ in self.entries]

    def as_dict(self) -> dict[Square, frozenset[int]]:
        return dict(self.entries)

    def size(self) -> int:
        """``|T|``, the total number of entries."""
        return sum(len(v) for _, v in self.entries)

    def is_single_valued(self) -> bool:
        return all(len(v) == 1 for _, v in self.entries)

    def values(self) -> dict[Square, int]:
        """Entries of a single-valued tableau as plain integers."""
        if not self.is_single_valued():
            raise ValueError("tableau is not single-valued")
        return {sq: next(iter(v)) for sq, v in self.entries}

    def contains(self, other: "SetValuedTableau") -> bool:
        mine = self.as_dict()
        return all(sq in mine and vals <= mine[sq] for sq, vals in other.entries)

    def to_record(self) -> list[list]:
        return [[i, j, sorted(v)] for (i, j), v in self.entries]


# -- validation ---------------------------------------------------------------


def _flag(w: Permutation, flag: Optional[Sequence[int]]) -> tuple[int, ...]:
    return tuple(flag) if flag is not None else tuple(range(1, w.n + 1))


def is_svrt(w: Permutation, T: SetValuedTableau, flag: Optional[Sequence[int]] = None) -> bool:
    """Whether ``T`` is a set-valued Rothe tableau of shape ``D(w)`` flagged by ``flag``."""
    f = _flag(w, flag)
    d = rothe_diagram(w)
    filling = T.as_dict()
    if set(filling) != set(d.squares):
        return False
    for (i, j), vals in filling.items():
        if not vals or min(vals) < 1 or max(vals) > f[i - 1]:
            return False
    for (i, j), vals in filling.items():
        for (i2, j2), vals2 in filling.items():
            if i2 == i and j < j2 and min(vals) < max(vals2):
                return False
            if j2 == j and i < i2 and max(vals) >= min(vals2):
                return False
    return True


def is_srt(w: Permutation, T: SetValuedTableau, flag: Optional[Sequence[int]] = None) -> bool:
    return T.is_single_valued() and is_svrt(w, T, flag)


def selections(T: SetValuedTableau) -> Iterator[SetValuedTableau]:
    """All single-valued tableaux obtained by keeping one entry per square."""
    squares = T.squares()
    for choice in product(*(sorted(T[sq]) for sq in squares)):
        yield SetValuedTableau.single(dict(zip(squares, choice)))


def limit_selection(w: Permutation, T: SetValuedTableau, flag: Optional[Sequence[int]] = None) -> Optional[SetValuedTableau]:
    """A single-valued Rothe tableau inside ``T``, or ``None``."""
    return next((S for S in selections(T) if is_srt(w, S, flag)), None)


def is_lsvrt(
    w: Permutation,
    T: SetValuedTableau,
    flag: Optional[Sequence[int]] = None,
    bounded: bool = True,
) -> bool:
    """Whether ``T`` is a limit set-valued Rothe tableau.

    With ``bounded=False`` this is the bare selection property: the entries
    respect the flag and one integer per square can be picked to form a
    single-valued Rothe tableau.  ``bounded=True`` additionally requires every
    entry set to lie inside the escape set ``E_B``, the class summed over by
    :func:`formula_theorem14_limit`.
    """
    f = _flag(w, flag)
    d = rothe_diagram(w)
    filling = T.as_dict()
    if set(filling) != set(d.squares):
        return False
    if any(not v or min(v) < 1 or max(v) > f[i - 1] for (i, _), v in filling.items()):
        return False
    if bounded:
        E = escape_sets(w)
        if any(not v <= E[sq] for sq, v in filling.items()):
            return False
    return limit_selection(w, T, f) is not None


# -- enumeration --------------------------------------------------------------


def _nonempty_subsets(lo: int, hi: int) -> Iterator[frozenset[int]]:
    values = range(lo, hi + 1)
    for k in range(1, len(values) + 1):
        for combo in combinations(values, k):
            yield frozenset(combo)


def _enumerate(d: Diagram, flag: Sequence[int], single: bool) -> Iterator[SetValuedTableau]:
    cells = d.sorted()
    filling: dict[Square, frozenset[int]] = {}
    column_top: dict[int, int] = {}  # column -> max entry of the lowest filled square

    def rec(p: int) -> Iterator[SetValuedTableau]:
        if p == len(cells):
            yield SetValuedTableau(tuple((sq, filling[sq]) for sq in cells))
            return
        i, j = cells[p]
        hi = flag[i - 1]
        if p > 0 and cells[p - 1][0] == i:
            hi = min(hi, min(filling[cells[p - 1]]))
        lo = column_top.get(j, 0) + 1
        if lo > hi:
            return
        options = (frozenset((t,)) for t in range(lo, hi + 1)) if single else _nonempty_subsets(lo, hi)
        saved = column_top.get(j)
        for vals in options:
            filling[cells[p]] = vals
            column_top[j] = max(vals)
            yield from rec(p + 1)
        del filling[cells[p]]
        if saved is None:
            column_top.pop(j, None)
        else:
            column_top[j] = saved

    return rec(0)


def enumerate_svrt(w: Permutation, flag: Optional[Sequence[int]] = None) -> list[SetValuedTableau]:
    return list(_enumerate(rothe_diagram(w), _flag(w, flag), single=False))


def enumerate_srt(w: Permutation, flag: Optional[Sequence[int]] = None) -> list[SetValuedTableau]:
    return list(_enumerate(rothe_diagram(w), _flag(w, flag), single=True))


@lru_cache(maxsize=4096)
def _srt_cached(w: Permutation) -> tuple[SetValuedTableau, ...]:
    return tuple(enumerate_srt(w))


def escape_sets(w: Permutation) -> dict[Square, frozenset[int]]:
    """``E_B`` for every square ``B``: the values ``B`` takes across all SRT."""
    out: dict[Square, set[int]] = {sq: set() for sq in rothe_diagram(w).squares}
    for T in _srt_cached(w):
        for sq, vals in T.entries:
            out[sq] |= vals
    return {sq: frozenset(v) for sq, v in out.items()}


def escape_set_E(w: Permutation, square: Square) -> frozenset[int]:
    E = escape_sets(w)
    if square not in E:
        raise SquareNotInDiagram(square)
    return E[square]


def ground_set_size(w: Permutation) -> int:
    """``|E|``, the number of square/value pairs used by some SRT."""
    return sum(len(v) for v in escape_sets(w).values())


def enumerate_lsvrt(w: Permutation, max_ground_set: Optional[int] = DEFAULT_MAX_GROUND_SET) -> list[SetValuedTableau]:
    """Set-valued fillings ``F`` with ``F(B) subset E_B`` containing some SRT."""
    E = escape_sets(w)
    size = sum(len(v) for v in E.values())
    if max_ground_set is not None and size > max_ground_set:
        raise GroundSetTooLarge(size, max_ground_set)
    squares = rothe_diagram(w).sorted()
    facets = [T.values() for T in _srt_cached(w)]
    out = []
    for choice in product(*(list(_nonempty_subsets_of(E[sq])) for sq in squares)):
        filling = dict(zip(squares, choice))
        if any(all(f[sq] in filling[sq] for sq in squares) for f in facets):
            out.append(SetValuedTableau(tuple(zip(squares, choice))))
    return out


def _nonempty_subsets_of(values: Iterable[int]) -> Iterator[frozenset[int]]:
    values = sorted(values)
    for k in range(1, len(values) + 1):
        for combo in combinations(values, k):
            yield frozenset(combo)


def upward_moves_Y(w: Permutation, T: SetValuedTableau, square: Square) -> frozenset[int]:
    """Values ``m > T(B)`` such that putting ``m`` in ``B`` keeps ``T`` in SRT."""
    vals = T.values()
    if square not in vals:
        raise SquareNotInDiagram(square)
    i, _ = square
    out = set()
    for m in range(vals[square] + 1, i + 1):
        moved = dict(vals)
        moved[square] = m
        if is_srt(w, SetValuedTableau.single(moved)):
            out.add(m)
    return frozenset(out)


# -- weights ------------------------------------------------------------------


class _Weights:
    """Per-square weight factors for one permutation."""

    def __init__(self, w: Permutation, ring: Optional[Ring] = None):
        self.w = w
        self.ring = ring or ring_for(w.n)
        self.m = m_statistics(w)
        self._cache: dict[tuple[Square, int, str], Polynomial] = {}

    def y_index(self, square: Square, t: int) -> int:
        i, _ = square
        k = self.m[square] + i - t
        if not 1 <= k <= self.ring.ny:
            raise AssertionError(f"y-index {k} for entry {t} at {square} outside 1..{self.ring.ny}")
        return k

    def factor(self, square: Square, t: int, kind: str = "oplus") -> Polynomial:
        key = (square, t, kind)
        if key not in self._cache:
            R = self.ring
            x, y = R.x(t), R.y(self.y_index(square, t))
            if kind == "oplus":
                val = oplus(x, y)
            elif kind == "minus":
                val = x - y
            elif kind == "escape":
                val = (1 - x) * (1 - y)
            else:
                raise ValueError(kind)
            self._cache[key] = val
        return self._cache[key]


def _prod(ring: Ring, factors: Iterable[Polynomial]) -> Polynomial:
    out = ring.one()
    for f in factors:
        out = out * f
    return out


def weight_svrt(w: Permutation, T: SetValuedTableau, weights: Optional[_Weights] = None) -> Polynomial:
    """Signed weight ``(-1)^(|T| - l(w)) prod prod (x_t (+) y_{m+i-t})`` of one tableau."""
    W = weights or _Weights(w)
    sign = -1 if (T.size() - w.length()) % 2 else 1
    return sign * _prod(W.ring, (W.factor(sq, t) for sq, vals in T.entries for t in sorted(vals)))


def formula_theorem11_by_enumeration(w: Permutation) -> Polynomial:
    """The set-valued Rothe tableau sum, term by term over an explicit list."""
    W = _Weights(w)
    total = W.ring.zero()
    for T in enumerate_svrt(w):
        total = total + weight_svrt(w, T, W)
    return total


def _transfer_sum(
    w: Permutation,
    ring: Ring,
    cell_weight: Callable[[Square, int, int], Optional[Polynomial]],
    single: bool,
) -> Polynomial:
    """Sum over flagged Rothe tableaux of products of per-square weights.

    Squares are filled in row-major order.  The only information a filled
    square passes on is its minimum (to the next square in its row) and its
    maximum (to the next square in its column), so fillings are grouped by
    ``(min, max)`` and partial sums are merged on that state.
    ``cell_weight(square, a, b)`` is the total weight of all admissible
    entry sets with minimum ``a`` and maximum ``b``.
    """
    d = rothe_diagram(w)
    cells = d.sorted()
    last_in_column = {}
    for p, (_, j) in enumerate(cells):
        last_in_column[j] = p
    # state: (row bound or 0, frozenset of (column, max) for columns still open)
    states: dict[tuple, Polynomial] = {(0, ()): ring.one()}
    for p, (i, j) in enumerate(cells):
        same_row_next = p + 1 < len(cells) and cells[p + 1][0] == i
        new: dict[tuple, Polynomial] = defaultdict(ring.zero)
        for (row_bound, cols), acc in states.items():
            colmap = dict(cols)
            hi = i if not row_bound else min(i, row_bound)
            lo = colmap.get(j, 0) + 1
            for a in range(lo, hi + 1):
                for b in range(a, hi + 1) if not single else (a,):
                    wt = cell_weight((i, j), a, b)
                    if wt is None or wt.is_zero():
                        continue
                    cm = dict(colmap)
                    if last_in_column[j] == p:
                        cm.pop(j, None)
                    else:
                        cm[j] = b
                    key = (a if same_row_next else 0, tuple(sorted(cm.items())))
                    new[key] = new[key] + acc * wt
        states = new
    total = ring.zero()
    for acc in states.values():
        total = total + acc
    return total


def formula_theorem11(w: Permutation) -> Polynomial:
    """``sum_T (-1)^(|T|-l(w)) prod_(i,j) prod_(t in T(i,j)) (x_t (+) y_{m_ij(w)+i-t})``
    over flagged set-valued Rothe tableaux of shape ``D(w)``."""
    W = _Weights(w)
    R = W.ring

    def cell_weight(sq: Square, a: int, b: int) -> Polynomial:
        # signed sum over entry sets with min a and max b
        if a == b:
            return W.factor(sq, a)
        inner = _prod(R, (1 - W.factor(sq, t) for t in range(a + 1, b)))
        return -(W.factor(sq, a) * W.factor(sq, b) * inner)

    return _transfer_sum(w, R, cell_weight, single=False)


def formula_corollary12(w: Permutation) -> Polynomial:
    """Signed sum over SVRT of ``prod x_t`` (the single Grothendieck version)."""
    W = _Weights(w)
    R = W.ring

    def cell_weight(sq: Square, a: int, b: int) -> Polynomial:
        if a == b:
            return R.x(a)
        inner = _prod(R, (1 - R.x(t) for t in range(a + 1, b)))
        return -(R.x(a) * R.x(b) * inner)

    return _transfer_sum(w, R, cell_weight, single=False)


def formula_corollary13_double(w: Permutation) -> Polynomial:
    W = _Weights(w)
    return _transfer_sum(w, W.ring, lambda sq, a, b: W.factor(sq, a, "minus"), single=True)


def formula_corollary13_single(w: Permutation) -> Polynomial:
    R = ring_for(w.n)
    return _transfer_sum(w, R, lambda sq, a, b: R.x(a), single=True)


def formula_theorem14_limit(w: Permutation, max_ground_set: Optional[int] = DEFAULT_MAX_GROUND_SET) -> Polynomial:
    """Sum over E-bounded limit tableaux, with escape factors for ``E_B \\ T(B)``."""
    W = _Weights(w)
    E = escape_sets(w)
    total = W.ring.zero()
    for T in enumerate_lsvrt(w, max_ground_set):
        term = W.ring.one()
        for sq, vals in T.entries:
            for t in sorted(vals):
                term = term * W.factor(sq, t)
            for t in sorted(E[sq] - vals):
                term = term * W.factor(sq, t, "escape")
        total = total + term
    return total


def formula_theorem14_srt(w: Permutation) -> Polynomial:
    """Sum over SRT with escape factors for the upward moves ``Y_{T,B}``."""
    W = _Weights(w)
    total = W.ring.zero()
    for T in _srt_cached(w):
        term = W.ring.one()
        for sq, t in T.values().items():
            term = term * W.factor(sq, t)
            for m in sorted(upward_moves_Y(w, T, sq)):
                term = term * W.factor(sq, m, "escape")
        total = total + term
    return total


# -- Matsumura's formula for 321-avoiding permutations ------------------------


def enumerate_skew_svt(lam: Sequence[int], mu: Sequence[int], flag: Sequence[int]) -> Iterator[dict[Square, frozenset[int]]]:
    """Flagged set-valued tableaux of skew shape ``lam / mu``: rows weakly
    increasing, columns strictly increasing, row ``r`` entries at most ``flag[r-1]``."""
    cells = [(r, c) for r in range(1, len(lam) + 1) for c in range(mu[r - 1] + 1, lam[r - 1] + 1)]
    filling: dict[Square, frozenset[int]] = {}

    def rec(p: int) -> Iterator[dict[Square, frozenset[int]]]:
        if p == len(cells):
            yield dict(filling)
            return
        r, c = cells[p]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, max(filling[(r, c - 1)]))
        if (r - 1, c) in filling:
            lo = max(lo, max(filling[(r - 1, c)]) + 1)
        for vals in _nonempty_subsets(lo, flag[r - 1]):
            filling[(r, c)] = vals
            yield from rec(p + 1)
        filling.pop((r, c), None)

    return rec(0)


def formula_matsumura_321(w: Permutation) -> Polynomial:
    if not is_321_avoiding(w):
        raise NotThreeTwoOneAvoiding(str(w))
    R = ring_for(w.n)
    if w.is_identity():
        return R.one()
    shape = skew_shape_321(w)
    ell = w.length()
    total = R.zero()
    for filling in enumerate_skew_svt(shape.lam, shape.mu, shape.f):
        size = sum(len(v) for v in filling.values())
        term = R.const(-1 if (size - ell) % 2 else 1)
        for (r, c), vals in filling.items():
            for t in sorted(vals):
                term = term * oplus(R.x(t), R.y(shape.lam[r - 1] + shape.f[r - 1] - c - t + 1))
        total = total + term
    return total


def single_version(f: Polynomial) -> Polynomial:
    return set_y_zero(f)
