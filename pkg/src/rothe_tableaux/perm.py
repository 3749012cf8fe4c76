"""
Permutations in one-line notation, pattern containment, Rothe diagrams and
the skew shape attached to a 321-avoiding permutation.

All indices are 1-based, matching the usual conventions for Rothe diagrams:
square ``(i, j)`` sits in row ``i`` (top to bottom) and column ``j`` (left to
right).

>>> w = Permutation.from_one_line([4, 2, 6, 3, 1, 5])
>>> w.length()
8
>>> sorted(rothe_diagram(w).squares)
[(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (3, 3), (3, 5), (4, 1)]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

from .errors import (
    DuplicateValue,
    InvalidPermutation,
    NotApplicable,
    NotThreeTwoOneAvoiding,
    SquareNotInDiagram,
)

Square = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n == 0:
            raise InvalidPermutation("empty word")
        seen = set()
        for v in word:
            if v < 1 or v > n:
                raise InvalidPermutation(f"value {v} out of range 1..{n}")
            if v in seen:
                raise DuplicateValue(f"value {v} appears twice")
            seen.add(v)

    @classmethod
    def from_one_line(cls, word: Sequence[int]) -> "Permutation":
        return cls(tuple(word))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read ``"426315"`` (n <= 9) or ``"1,4,5,9,6,10,7,8,2,3"``."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(tok) for tok in text.split(",")))
        if not text.isdigit():
            raise InvalidPermutation(f"cannot parse {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __getitem__(self, i: int) -> int:
        """1-based value ``w_i``."""
        return self.word[i - 1]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    @cached_property
    def inverse_word(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return tuple(inv)

    def inverse(self) -> "Permutation":
        return Permutation(self.inverse_word)

    def length(self) -> int:
        """Number of inversions."""
        w = self.word
        return sum(1 for a, b in combinations(range(self.n), 2) if w[a] > w[b])

    def swap(self, i: int) -> "Permutation":
        """The product ``w s_i``: exchange positions ``i`` and ``i + 1``."""
        if not 1 <= i < self.n:
            raise IndexError(i)
        word = list(self.word)
        word[i - 1], word[i] = word[i], word[i - 1]
        return Permutation(tuple(word))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, start=1))

    def is_longest(self) -> bool:
        return all(v == self.n + 1 - i for i, v in enumerate(self.word, start=1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order."""
    for word in permutations(range(1, n + 1)):
        yield Permutation(word)


def length(w: Permutation) -> int:
    return w.length()


def first_ascent(w: Permutation) -> Optional[int]:
    """Smallest ``r`` with ``w_r < w_{r+1}``, or ``None`` for the longest element."""
    for r in range(1, w.n):
        if w[r] < w[r + 1]:
            return r
    return None


def ascents(w: Permutation) -> list[int]:
    return [r for r in range(1, w.n) if w[r] < w[r + 1]]


# -- patterns -----------------------------------------------------------------


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for rank, pos in enumerate(order, start=1):
        out[pos] = rank
    return tuple(out)


def pattern_occurrences(w: Permutation, pattern: Permutation) -> Iterator[tuple[int, ...]]:
    """Yield increasing 1-based index tuples where ``w`` contains ``pattern``,
    in lexicographic order."""
    k = pattern.n
    target = pattern.word
    for idx in combinations(range(1, w.n + 1), k):
        if _standardize([w[i] for i in idx]) == target:
            yield idx


def contains_pattern(w: Permutation, pattern: Permutation) -> bool:
    if pattern.n > w.n:
        return False
    return next(pattern_occurrences(w, pattern), None) is not None


def avoids(w: Permutation, pattern: Permutation | str) -> bool:
    if isinstance(pattern, str):
        pattern = Permutation.parse(pattern)
    return not contains_pattern(w, pattern)


P1432 = Permutation((1, 4, 3, 2))
P2143 = Permutation((2, 1, 4, 3))
P321 = Permutation((3, 2, 1))


def is_1432_avoiding(w: Permutation) -> bool:
    return not contains_pattern(w, P1432)


def is_321_avoiding(w: Permutation) -> bool:
    return not contains_pattern(w, P321)


# -- diagrams -----------------------------------------------------------------


@dataclass(frozen=True)
class Diagram:
    squares: frozenset[Square]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "squares", frozenset(self.squares))
        for i, j in self.squares:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"square {(i, j)} outside the {self.n}x{self.n} grid")

    def __contains__(self, square) -> bool:
        return square in self.squares

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self) -> Iterator[Square]:
        return iter(self.sorted())

    def sorted(self) -> list[Square]:
        """Squares in row-major order."""
        return sorted(self.squares)

    def row(self, i: int) -> list[int]:
        return sorted(j for (r, j) in self.squares if r == i)

    def column(self, j: int) -> list[int]:
        return sorted(i for (i, c) in self.squares if c == j)


def rothe_diagram(w: Permutation) -> Diagram:
    winv = w.inverse_word
    squares = frozenset(
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w.n + 1)
        if w[i] > j and winv[j - 1] > i
    )
    return Diagram(squares, w.n)


def m_statistic(w: Permutation, i: int, j: int, diagram: Optional[Diagram] = None) -> int:
    """Number of squares of ``D(w)`` in row ``i`` weakly left of column ``j``."""
    d = diagram if diagram is not None else rothe_diagram(w)
    if (i, j) not in d:
        raise SquareNotInDiagram((i, j))
    return sum(1 for k in d.row(i) if k <= j)


def m_statistics(w: Permutation) -> dict[Square, int]:
    d = rothe_diagram(w)
    out = {}
    for i in range(1, w.n + 1):
        for pos, j in enumerate(d.row(i), start=1):
            out[(i, j)] = pos
    return out


# -- 321-avoiding permutations and skew shapes --------------------------------


@dataclass(frozen=True)
class SkewShape:
    """The skew shape ``lambda / mu`` with its flag ``f`` and the map from
    squares of ``D(w)`` to squares ``(row, col)`` of the skew shape."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    f: tuple[int, ...]
    correspondence: dict[Square, Square] = field(compare=False, hash=False)

    @property
    def k(self) -> int:
        return len(self.f)

    def squares(self) -> list[Square]:
        return [
            (r, c)
            for r in range(1, self.k + 1)
            for c in range(self.mu[r - 1] + 1, self.lam[r - 1] + 1)
        ]


def skew_shape_321(w: Permutation) -> SkewShape:
    if not is_321_avoiding(w):
        raise NotThreeTwoOneAvoiding(str(w))
    f = tuple(i for i in range(1, w.n + 1) if w[i] > i)
    if not f:
        raise NotApplicable("the identity has no skew shape")
    k = len(f)
    top = w[f[-1]]
    lam = tuple(top - k - (f[i - 1] - i) for i in range(1, k + 1))
    mu = tuple(top - k - (w[f[i - 1]] - i) for i in range(1, k + 1))

    # delete empty rows f^c(w) and empty columns h(w), then reflect
    d = rothe_diagram(w)
    row_rank = {i: r for r, i in enumerate(f, start=1)}
    h = {w[i] for i in f}
    kept_columns = [j for j in range(1, top + 1) if j not in h]
    col_rank = {j: c for c, j in enumerate(kept_columns, start=1)}
    width = len(kept_columns)
    correspondence = {}
    for i, j in d.sorted():
        if i not in row_rank or j not in col_rank:
            raise AssertionError(f"square {(i, j)} lies in a deleted row or column")
        correspondence[(i, j)] = (row_rank[i], width - col_rank[j] + 1)
    return SkewShape(lam, mu, f, correspondence)
