"""
Double and single Grothendieck and Schubert polynomials from their defining
recursions: start from the longest permutation and apply isobaric (resp.
plain) divided differences along ascents.
"""

from __future__ import annotations

import threading
from typing import Callable, Iterator, Optional

from .perm import Permutation, first_ascent
from .poly import (
    Polynomial,
    Ring,
    divided_difference,
    isobaric,
    lowest_degree_component,
    negate_y,
    oplus,
    set_y_zero,
)


def ring_for(n: int) -> Ring:
    """The ring used for permutations of size ``n``: ``x_1..x_n``, ``y_1..y_n``."""
    return Ring(n, n)


def grothendieck_longest(n: int, ring: Optional[Ring] = None) -> Polynomial:
    R = ring or ring_for(n)
    out = R.one()
    for i in range(1, n):
        for j in range(1, n - i + 1):
            out = out * oplus(R.x(i), R.y(j))
    return out


def schubert_longest(n: int, ring: Optional[Ring] = None) -> Polynomial:
    R = ring or ring_for(n)
    out = R.one()
    for i in range(1, n):
        for j in range(1, n - i + 1):
            out = out * (R.x(i) - R.y(j))
    return out


class GrothContext:
    """Memoized recursion for one symmetric group ``S_n``.

    The cache is guarded by a lock, so a context can be shared between
    threads; every key is computed at most once.
    """

    def __init__(self, n: int):
        self.n = n
        self.ring = ring_for(n)
        self._groth: dict[tuple[int, ...], Polynomial] = {}
        self._schub: dict[tuple[int, ...], Polynomial] = {}
        self._lock = threading.RLock()

    def _check(self, w: Permutation) -> None:
        if w.n != self.n:
            raise ValueError(f"{w} is not in S_{self.n}")

    def _recurse(
        self,
        w: Permutation,
        cache: dict,
        top: Callable[[], Polynomial],
        op: Callable[[Polynomial, int], Polynomial],
    ) -> Polynomial:
        self._check(w)
        with self._lock:
            if w.word in cache:
                return cache[w.word]
            # walk up to w_0 (or a cached element) along first ascents, then come back down
            chain = []
            u = w
            while u.word not in cache:
                r = first_ascent(u)
                if r is None:
                    cache[u.word] = top()
                    break
                chain.append((u, r))
                u = u.swap(r)
            value = cache[u.word]
            for v, r in reversed(chain):
                value = op(value, r)
                cache[v.word] = value
            return cache[w.word]

    def double_grothendieck(self, w: Permutation) -> Polynomial:
        return self._recurse(w, self._groth, lambda: grothendieck_longest(self.n, self.ring), isobaric)

    def double_schubert_by_recursion(self, w: Permutation) -> Polynomial:
        return self._recurse(w, self._schub, lambda: schubert_longest(self.n, self.ring), divided_difference)

    def double_schubert(self, w: Permutation) -> Polynomial:
        """Lowest-degree part of the double Grothendieck polynomial, ``y -> -y``."""
        return negate_y(lowest_degree_component(self.double_grothendieck(w)))

    def single_grothendieck(self, w: Permutation) -> Polynomial:
        return set_y_zero(self.double_grothendieck(w))

    def single_schubert(self, w: Permutation) -> Polynomial:
        return set_y_zero(self.double_schubert(w))


_contexts: dict[int, GrothContext] = {}
_contexts_lock = threading.Lock()


def context(n: int) -> GrothContext:
    """Shared per-``n`` context."""
    with _contexts_lock:
        if n not in _contexts:
            _contexts[n] = GrothContext(n)
        return _contexts[n]


def double_grothendieck(w: Permutation) -> Polynomial:
    return context(w.n).double_grothendieck(w)


def double_schubert(w: Permutation) -> Polynomial:
    return context(w.n).double_schubert(w)


def single_grothendieck(w: Permutation) -> Polynomial:
    return context(w.n).single_grothendieck(w)


def single_schubert(w: Permutation) -> Polynomial:
    return context(w.n).single_schubert(w)


def _children(u: Permutation) -> Iterator[tuple[Permutation, int]]:
    """Permutations ``w`` whose first-ascent step ``w s_r`` lands on ``u``."""
    for r in range(1, u.n):
        if u[r] > u[r + 1]:
            w = u.swap(r)
            if first_ascent(w) == r:
                yield w, r


def sweep(n: int, schubert: bool = False) -> Iterator[tuple[Permutation, Polynomial]]:
    """Yield ``(w, G_w)`` for every ``w`` in ``S_n`` (``(w, S_w)`` with
    ``schubert=True``) without keeping the whole table in memory.

    Walks the tree in which each ``w`` hangs below ``w s_r``, ``r`` its first
    ascent, so only the polynomials on the current root path are alive.  The
    order is depth-first, not lexicographic.
    """
    R = ring_for(n)
    if schubert:
        top, op = schubert_longest(n, R), divided_difference
    else:
        top, op = grothendieck_longest(n, R), isobaric
    stack = [(Permutation.longest(n), top)]
    while stack:
        u, g = stack.pop()
        yield u, g
        for w, r in _children(u):
            stack.append((w, op(g, r)))
