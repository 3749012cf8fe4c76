"""
Exact sparse polynomials over the integers in two variable families
``x_1..x_N`` and ``y_1..y_M``, with the divided difference and isobaric
divided difference operators acting on the x-variables.

A polynomial is a map from monomials to nonzero ``int`` coefficients.  A
monomial is packed into one Python ``int``: each exponent gets a fixed-width
bit field (x-block first, most significant), and the total degree sits above
all of them.  Multiplying monomials is then integer addition, and sorting the
packed keys gives graded-lexicographic order.  Every polynomial carries its
:class:`Ring`; combining polynomials from different rings raises
:class:`ContextMismatch`.

>>> R = Ring(2, 2)
>>> x1, x2, y1 = R.x(1), R.x(2), R.y(1)
>>> print(oplus(x1, y1))
x1 + y1 - x1*y1
>>> print(divided_difference(x1 ** 2, 1))
x1 + x2
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import ContextMismatch, EmptySequence, NonExactDivision, ZeroPolynomial

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    """Polynomial ring context: ``nx`` x-variables and ``ny`` y-variables.

    ``width`` is the bit width of one exponent field; a product whose total
    degree would not fit raises ``OverflowError``.
    """

    nx: int
    ny: int = 0
    xname: str = "x"
    yname: str = "y"
    width: int = field(default=8, compare=False)

    @property
    def nvars(self) -> int:
        return self.nx + self.ny

    @property
    def deg_shift(self) -> int:
        return self.nvars * self.width

    @property
    def max_degree(self) -> int:
        return (1 << self.width) - 1

    @property
    def y_mask(self) -> int:
        return (1 << (self.ny * self.width)) - 1

    def shift(self, k: int) -> int:
        """Bit offset of variable ``k`` (0-based, x-block then y-block)."""
        return (self.nvars - 1 - k) * self.width

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ContextMismatch(f"expected {self.nvars} exponents, got {len(exps)}")
        deg = sum(exps)
        if min(exps, default=0) < 0 or deg > self.max_degree:
            raise OverflowError(f"exponents {tuple(exps)} do not fit in {self.width}-bit fields")
        key = deg << self.deg_shift
        for k, a in enumerate(exps):
            key |= a << self.shift(k)
        return key

    def unpack(self, key: int) -> Exponents:
        mask = self.max_degree
        return tuple((key >> self.shift(k)) & mask for k in range(self.nvars))

    # -- constructors ---------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        return Polynomial(self, {0: c} if c else {})

    def x(self, i: int) -> "Polynomial":
        if not 1 <= i <= self.nx:
            raise IndexError(f"{self.xname}{i} outside 1..{self.nx}")
        return self._var(i - 1)

    def y(self, j: int) -> "Polynomial":
        if not 1 <= j <= self.ny:
            raise IndexError(f"{self.yname}{j} outside 1..{self.ny}")
        return self._var(self.nx + j - 1)

    def _var(self, k: int) -> "Polynomial":
        return Polynomial(self, {(1 << self.shift(k)) | (1 << self.deg_shift): 1})

    def monomial(self, xexp: Sequence[int] = (), yexp: Sequence[int] = (), coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {self._key(xexp, yexp): coeff} if coeff else {})

    def _key(self, xexp: Sequence[int], yexp: Sequence[int]) -> int:
        xexp, yexp = list(xexp), list(yexp)
        if len(xexp) > self.nx or len(yexp) > self.ny:
            raise ContextMismatch("exponent list longer than the ring")
        return self.pack(xexp + [0] * (self.nx - len(xexp)) + yexp + [0] * (self.ny - len(yexp)))

    def from_terms(self, terms: Iterable[tuple[int, Sequence[int], Sequence[int]]]) -> "Polynomial":
        """Build from ``(coefficient, x_exponents, y_exponents)`` triples."""
        out: dict[int, int] = defaultdict(int)
        for c, xe, ye in terms:
            out[self._key(xe, ye)] += c
        return Polynomial(self, out)


Scalar = Union[int, "Polynomial"]


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[int, int]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict[int, int]) -> "Polynomial":
        # caller guarantees there are no zero coefficients
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    def _coerce(self, other: Scalar) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------

    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + sign * c
            if v:
                out[e] = v
            else:
                del out[e]
        return Polynomial._raw(self.ring, out)

    def __add__(self, other: Scalar) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return (-self) + other

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ring.zero()
        if self.degree() + other.degree() > self.ring.max_degree:
            raise OverflowError("product degree exceeds the ring's exponent width")
        small, big = sorted((self.terms, other.terms), key=len)
        big_items = list(big.items())
        out: dict[int, int] = defaultdict(int)
        for e1, c1 in small.items():
            for e2, c2 in big_items:
                out[e1 + e2] += c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.terms) >> self.ring.deg_shift

    def min_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no lowest degree")
        return min(self.terms) >> self.ring.deg_shift

    def exponent_items(self) -> Iterator[tuple[Exponents, int]]:
        unpack = self.ring.unpack
        for e, c in self.terms.items():
            yield unpack(e), c

    def as_dict(self) -> dict[Exponents, int]:
        return dict(self.exponent_items())

    def sorted_terms(self) -> list[tuple[int, Exponents, Exponents]]:
        """``(coefficient, x_exponents, y_exponents)`` in graded-lex order:
        ascending total degree, then lexicographically decreasing exponents
        with the x-block first."""
        nx = self.ring.nx
        ds = self.ring.deg_shift
        out = []
        for e in sorted(self.terms, key=lambda e: (e >> ds, -e)):
            exps = self.ring.unpack(e)
            out.append((self.terms[e], exps[:nx], exps[nx:]))
        return out

    def variables_used(self) -> tuple[set[int], set[int]]:
        xs, ys = set(), set()
        nx = self.ring.nx
        for exps, _ in self.exponent_items():
            for k, a in enumerate(exps):
                if a and k < nx:
                    xs.add(k + 1)
                elif a:
                    ys.add(k - nx + 1)
        return xs, ys

    def __repr__(self) -> str:
        return f"Polynomial({self.ring.nx}, {self.ring.ny}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for c, xe, ye in self.sorted_terms():
            names = [f"{self.ring.xname}{k}" + (f"^{a}" if a > 1 else "") for k, a in enumerate(xe, 1) if a]
            names += [f"{self.ring.yname}{k}" + (f"^{a}" if a > 1 else "") for k, a in enumerate(ye, 1) if a]
            mono = "*".join(names)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


# -- substitutions ------------------------------------------------------------


def _check_index(f: Polynomial, i: int) -> None:
    if not 1 <= i < f.ring.nx:
        raise IndexError(f"operator index {i} needs x{i} and x{i + 1}; ring has {f.ring.nx} x-variables")


def swap_x(f: Polynomial, i: int) -> Polynomial:
    """``s_i f``: exchange ``x_i`` and ``x_{i+1}``; y-variables are fixed."""
    _check_index(f, i)
    R = f.ring
    sa, sb, mask = R.shift(i - 1), R.shift(i), R.max_degree
    out = {}
    for e, c in f.terms.items():
        a = (e >> sa) & mask
        b = (e >> sb) & mask
        out[e + ((b - a) << sa) + ((a - b) << sb)] = c
    return Polynomial._raw(R, out)


def negate_y(f: Polynomial) -> Polynomial:
    nx = f.ring.nx
    out = {}
    for e, c in f.terms.items():
        out[e] = -c if sum(f.ring.unpack(e)[nx:]) % 2 else c
    return Polynomial._raw(f.ring, out)


def set_y_zero(f: Polynomial) -> Polynomial:
    ymask = f.ring.y_mask
    return Polynomial._raw(f.ring, {e: c for e, c in f.terms.items() if not e & ymask})


def lowest_degree_component(f: Polynomial) -> Polynomial:
    d = f.min_degree()
    ds = f.ring.deg_shift
    return Polynomial._raw(f.ring, {e: c for e, c in f.terms.items() if e >> ds == d})


def substitute(f: Polynomial, images: Sequence[Polynomial], target: Ring) -> Polynomial:
    """Replace variable ``k`` (0-based, x-block then y-block) by ``images[k]``,
    a polynomial in ``target``."""
    if len(images) != f.ring.nvars:
        raise ContextMismatch("one image per variable required")
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(k: int, a: int) -> Polynomial:
        if (k, a) not in powers:
            powers[(k, a)] = images[k] ** a
        return powers[(k, a)]

    result = target.zero()
    for exps, c in f.exponent_items():
        term = target.const(c)
        for k, a in enumerate(exps):
            if a:
                term = term * power(k, a)
        result = result + term
    return result


# -- operators ----------------------------------------------------------------


def _numerator(terms: Mapping[int, int], R: Ring, i: int) -> dict[int, int]:
    """Term map of ``f - s_i f``."""
    sa, sb, mask = R.shift(i - 1), R.shift(i), R.max_degree
    out: dict[int, int] = defaultdict(int)
    for e, c in terms.items():
        a = (e >> sa) & mask
        b = (e >> sb) & mask
        if a != b:
            out[e] += c
            out[e + ((b - a) << sa) + ((a - b) << sb)] -= c
    return out


def _divide(numerator: dict[int, int], R: Ring, i: int) -> Polynomial:
    """Synthetic division of ``numerator`` by ``x_i - x_{i+1}``.

    The numerator is reduced one ``x_i``-degree at a time: a term
    ``c x_i^d m`` contributes ``c x_i^(d-1) m`` to the quotient and feeds
    ``c x_i^(d-1) x_{i+1} m`` back into the numerator.  Whatever survives at
    ``x_i``-degree zero is a remainder, which raises :class:`NonExactDivision`.
    """
    sa, sb, mask = R.shift(i - 1), R.shift(i), R.max_degree
    step = (1 << sb) - (1 << sa)  # times x_{i+1} / x_i
    down = (1 << R.deg_shift) + (1 << sa)  # divide by x_i

    by_degree: dict[int, dict[int, int]] = defaultdict(dict)
    for e, c in numerator.items():
        if c:
            by_degree[(e >> sa) & mask][e] = c
    quotient: dict[int, int] = defaultdict(int)
    for d in range(max(by_degree, default=0), 0, -1):
        layer = by_degree.pop(d, None)
        if not layer:
            continue
        below = by_degree[d - 1]
        for e, c in layer.items():
            quotient[e - down] += c
            t = e + step
            v = below.get(t, 0) + c
            if v:
                below[t] = v
            else:
                del below[t]
    if by_degree.get(0):
        raise NonExactDivision(f"remainder of {len(by_degree[0])} terms dividing by x{i} - x{i + 1}")
    return Polynomial(R, quotient)


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed by synthetic division."""
    _check_index(f, i)
    return _divide(_numerator(f.terms, f.ring, i), f.ring, i)


def isobaric(f: Polynomial, i: int) -> Polynomial:
    """``pi_i f = d_i((1 - x_{i+1}) f)``."""
    _check_index(f, i)
    R = f.ring
    var = (1 << R.shift(i)) | (1 << R.deg_shift)
    if f.degree() + 1 > R.max_degree:
        raise OverflowError("degree exceeds the ring's exponent width")
    shifted = defaultdict(int, f.terms)
    for e, c in f.terms.items():
        shifted[e + var] -= c
    return _divide(_numerator(shifted, R, i), R, i)


def oplus(a: Scalar, b: Scalar) -> Polynomial:
    """``a + b - a b``."""
    if isinstance(a, int):
        a, b = b, a
    return a + b - a * b


def product(factors: Iterable[Polynomial], ring: Ring) -> Polynomial:
    out = ring.one()
    for p in factors:
        out = out * p
    return out


def lemma41_rhs(ring: Ring, r: int, a: Sequence[int]) -> Polynomial:
    """Closed form of ``pi_r`` applied to ``prod_j (x_r + y_{a_j} - x_r y_{a_j})``:
    an alternating sum of products mixing ``x_r`` and ``x_{r+1}`` factors."""
    if not a:
        raise EmptySequence("need at least one index")
    m = len(a)
    left = [oplus(ring.x(r), ring.y(aj)) for aj in a]
    right = [oplus(ring.x(r + 1), ring.y(aj)) for aj in a]
    total = ring.zero()
    for k in range(1, m + 1):
        total = total + product(left[: k - 1], ring) * product(right[k:], ring)
    for k in range(1, m):
        total = total - product(left[:k], ring) * product(right[k:], ring)
    return total
