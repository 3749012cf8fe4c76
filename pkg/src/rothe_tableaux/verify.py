"""
Exhaustive verification sweeps over ``S_n``.

Each suite yields one :class:`Record` per permutation (or per input case,
for the operator identity suite) and a :class:`Summary`.  Oracle
polynomials come from a depth-first sweep, so no table of all of ``S_n`` is
kept; the per-permutation checks can fan out over worker processes, and
records are always reported in lexicographic order.
"""

from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Optional

from .balanced import counterexample_labeling, fgrs_schubert
from .complex import (
    build_rothe_complex,
    k_poly_definition,
    kmy_formula1,
    kmy_formula2,
    kmy_formula3,
    reduced_euler_characteristic,
    specialize,
    u1_tableaux,
)
from .errors import GroundSetTooLarge, RotheError
from .oracle import ring_for, sweep
from .perm import (
    P1432,
    P2143,
    Permutation,
    all_permutations,
    avoids,
    is_1432_avoiding,
    is_321_avoiding,
    m_statistics,
    skew_shape_321,
)
from .poly import (
    Polynomial,
    isobaric,
    lemma41_rhs,
    lowest_degree_component,
    oplus,
    product as poly_product,
    set_y_zero,
    swap_x,
)
from .tableaux import (
    DEFAULT_MAX_GROUND_SET,
    enumerate_svrt,
    formula_corollary13_single,
    formula_matsumura_321,
    formula_theorem11,
    formula_theorem14_limit,
    formula_theorem14_srt,
    ground_set_size,
)

SUITES = ("theorem11", "theorem14", "matsumura", "fgrs", "theorem41", "kpoly", "lemma41", "wilf-counts")
MAX_VERIFY_N = 7

PASS, FAIL, SKIP = "pass", "fail", "skip"


class ResourceCap(RotheError):
    pass


@dataclass(frozen=True)
class Record:
    suite: str
    case: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"suite": self.suite, "case": self.case, "status": self.status, "detail": self.detail}


@dataclass
class Summary:
    suite: str
    n: int
    counts: dict = field(default_factory=lambda: {PASS: 0, FAIL: 0, SKIP: 0})

    def add(self, record: Record) -> None:
        self.counts[record.status] += 1

    @property
    def ok(self) -> bool:
        return self.counts[FAIL] == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "pass": self.counts[PASS],
            "fail": self.counts[FAIL],
            "skip": self.counts[SKIP],
            "result": "PASS" if self.ok else "FAIL",
        }


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


# -- per-permutation checks ---------------------------------------------------
# Each takes the permutation, its oracle double Grothendieck polynomial (or
# None) and the ground-set cap, and returns (status, detail).


def _single_schubert(G: Polynomial) -> Polynomial:
    # y -> -y is invisible once y = 0
    return set_y_zero(lowest_degree_component(G))


def check_tableau_sum(w: Permutation, G: Polynomial, cap: int) -> tuple[str, str]:
    equal = formula_theorem11(w) == G
    avoider = is_1432_avoiding(w)
    detail = ("equal" if equal else "unequal") + ("" if avoider else ", contains 1432")
    return _status(equal == avoider), detail


def check_limit_sums(w: Permutation, G: Polynomial, cap: int) -> tuple[str, str]:
    if not is_1432_avoiding(w):
        return SKIP, "contains 1432"
    size = ground_set_size(w)
    if size > cap:
        return SKIP, f"|E| = {size} over cap {cap}"
    limit = formula_theorem14_limit(w, cap)
    srt = formula_theorem14_srt(w)
    return _status(limit == srt == G), f"|E| = {size}"


def index_identity_holds(w: Permutation) -> bool:
    """Square by square, ``lambda_r + f_r - c + 1 = m_ij + i`` on the skew shape."""
    if w.is_identity():
        return True
    shape = skew_shape_321(w)
    m = m_statistics(w)
    return all(
        shape.lam[r - 1] + shape.f[r - 1] - c + 1 == m[(i, j)] + i
        for (i, j), (r, c) in shape.correspondence.items()
    )


def check_matsumura(w: Permutation, G: Polynomial, cap: int) -> tuple[str, str]:
    if not is_321_avoiding(w):
        return SKIP, "contains 321"
    ok = formula_matsumura_321(w) == formula_theorem11(w) == G
    idx = index_identity_holds(w)
    return _status(ok and idx), "" if idx else "index identity fails"


def check_fgrs(w: Permutation, G: Polynomial, cap: int) -> tuple[str, str]:
    return _status(fgrs_schubert(w) == _single_schubert(G)), ""


def check_schubert_gap(w: Permutation, G: Polynomial, cap: int) -> tuple[str, str]:
    equal = formula_corollary13_single(w) == _single_schubert(G)
    if is_1432_avoiding(w):
        return _status(equal), "equal" if equal else "unequal"
    try:
        counterexample_labeling(w)
    except AssertionError as exc:
        return FAIL, str(exc)
    return _status(not equal), ("equal" if equal else "unequal") + ", labeling in CSBL but not SRT"


def check_kpoly(w: Permutation, G: Optional[Polynomial], cap: int) -> tuple[str, str]:
    c = build_rothe_complex(w, cap)
    try:
        k0 = k_poly_definition(c)
    except GroundSetTooLarge as exc:
        return SKIP, str(exc)
    U1 = u1_tableaux(c)
    problems = []
    if set(U1) != set(enumerate_svrt(w)):
        problems.append("U1 != SVRT")
    k1, k2, k3 = kmy_formula1(c, U1), kmy_formula2(c), kmy_formula3(c)
    if not (k0 == k1 == k2 == k3):
        problems.append("K-polynomials differ")
    if specialize(c, k1) != formula_theorem11(w):
        problems.append("formula 1 specialization")
    if specialize(c, k2) != formula_theorem14_limit(w, cap):
        problems.append("formula 2 specialization")
    if specialize(c, k3) != formula_theorem14_srt(w):
        problems.append("formula 3 specialization")
    chi = reduced_euler_characteristic(c)
    if chi not in (-1, 0, 1):
        problems.append(f"reduced Euler characteristic {chi}")
    return _status(not problems), "; ".join(problems) or f"|E| = {len(c.vertices)}, chi = {chi}"


CHECKS: dict[str, Callable[[Permutation, Optional[Polynomial], int], tuple[str, str]]] = {
    "theorem11": check_tableau_sum,
    "theorem14": check_limit_sums,
    "matsumura": check_matsumura,
    "fgrs": check_fgrs,
    "theorem41": check_schubert_gap,
    "kpoly": check_kpoly,
}
NEEDS_ORACLE = {"theorem11", "theorem14", "matsumura", "fgrs", "theorem41"}


def _run_check(suite: str, word: tuple[int, ...], G: Optional[Polynomial], cap: int) -> Record:
    w = Permutation(word)
    status, detail = CHECKS[suite](w, G, cap)
    return Record(suite, str(w), status, detail)


def _cases(suite: str, n: int) -> Iterator[tuple[Permutation, Optional[Polynomial]]]:
    if suite in NEEDS_ORACLE:
        yield from sweep(n)
    else:
        for w in all_permutations(n):
            yield w, None


def _permutation_records(suite: str, n: int, jobs: int, cap: int) -> list[Record]:
    if jobs <= 1:
        records = [_run_check(suite, w.word, G, cap) for w, G in _cases(suite, n)]
    else:
        records = []
        # keep a bounded number of oracle polynomials in flight
        window = 4 * jobs
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pending = set()
            for w, G in _cases(suite, n):
                pending.add(pool.submit(_run_check, suite, w.word, G, cap))
                if len(pending) >= window:
                    done, pending = wait(pending, return_when=FIRST_COMPLETED)
                    records.extend(f.result() for f in done)
            records.extend(f.result() for f in pending)
    return sorted(records, key=lambda r: Permutation.parse(r.case).word)


# -- suites that are not indexed by permutations ------------------------------


def lemma41_records(n: int) -> list[Record]:
    """``pi_r`` of ``prod_j (x_r + y_{a_j} - x_r y_{a_j})`` against the closed
    form, for ``r < n``, sequences of length at most ``n`` with entries at most
    ``n``; the result must also be symmetric in ``x_r`` and ``x_{r+1}``."""
    R = ring_for(max(n, 2))
    out = []
    for r in range(1, n):
        for length in range(1, n + 1):
            for a in product(range(1, n + 1), repeat=length):
                lhs = isobaric(poly_product((oplus(R.x(r), R.y(aj)) for aj in a), R), r)
                rhs = lemma41_rhs(R, r, a)
                ok = lhs == rhs and swap_x(rhs, r) == rhs
                out.append(Record("lemma41", f"r={r} a={','.join(map(str, a))}", _status(ok)))
    return out


def avoider_counts(n: int) -> tuple[int, int]:
    perms = list(all_permutations(n))
    return sum(avoids(w, P1432) for w in perms), sum(avoids(w, P2143) for w in perms)


def wilf_records(n: int) -> list[Record]:
    a, b = avoider_counts(n)
    return [Record("wilf-counts", f"n={n}", _status(a == b), f"1432-avoiders {a}, 2143-avoiders {b}")]


# -- entry point ----------------------------------------------------------------


def run_suite(
    suite: str,
    n: int,
    jobs: int = 1,
    max_ground_set: int = DEFAULT_MAX_GROUND_SET,
    max_n: int = MAX_VERIFY_N,
) -> tuple[list[Record], Summary]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ResourceCap(f"n = {n} is over the verification cap {max_n}")
    if suite == "lemma41":
        records = lemma41_records(n)
    elif suite == "wilf-counts":
        records = wilf_records(n)
    else:
        records = _permutation_records(suite, n, jobs, max_ground_set)
    return records, summarize(records, suite, n)


def summarize(records: Iterable[Record], suite: str, n: int) -> Summary:
    summary = Summary(suite, n)
    for rec in records:
        summary.add(rec)
    return summary
