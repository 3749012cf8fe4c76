from itertools import combinations, product

import pytest

from rothe_tableaux.errors import GroundSetTooLarge, NotThreeTwoOneAvoiding, SquareNotInDiagram
from rothe_tableaux.oracle import GrothContext, ring_for
from rothe_tableaux.perm import Permutation, all_permutations, is_1432_avoiding, is_321_avoiding, rothe_diagram
from rothe_tableaux.poly import oplus, set_y_zero
from rothe_tableaux.tableaux import (
    SetValuedTableau,
    enumerate_lsvrt,
    enumerate_skew_svt,
    enumerate_srt,
    enumerate_svrt,
    escape_set_E,
    escape_sets,
    formula_corollary12,
    formula_corollary13_double,
    formula_corollary13_single,
    formula_matsumura_321,
    formula_theorem11,
    formula_theorem11_by_enumeration,
    formula_theorem14_limit,
    formula_theorem14_srt,
    is_lsvrt,
    is_srt,
    is_svrt,
    limit_selection,
    upward_moves_Y,
)

P = Permutation.parse

# the printed set-valued and limit examples for 426315
PRINTED_SVRT = {
    (1, 1): {1}, (1, 2): {1}, (1, 3): {1}, (2, 1): {2},
    (3, 1): {3}, (3, 3): {2, 3}, (3, 5): {1, 2}, (4, 1): {4},
}
PRINTED_LIMIT = {
    (1, 1): {1}, (1, 2): {1}, (1, 3): {1}, (2, 1): {2},
    (3, 1): {3}, (3, 3): {1, 2}, (3, 5): {1, 2}, (4, 1): {4},
}
PRINTED_LIMIT_BOLD = {
    (1, 1): 1, (1, 2): 1, (1, 3): 1, (2, 1): 2,
    (3, 1): 3, (3, 3): 2, (3, 5): 1, (4, 1): 4,
}


def nonempty_subsets(values):
    values = list(values)
    for k in range(1, len(values) + 1):
        yield from (frozenset(c) for c in combinations(values, k))


def brute_fillings(w, single):
    """All fillings with entries in {1..i}, filtered by the order conditions."""
    cells = rothe_diagram(w).sorted()
    choices = [
        [frozenset([v]) for v in range(1, i + 1)] if single else list(nonempty_subsets(range(1, i + 1)))
        for i, _ in cells
    ]
    out = set()
    for combo in product(*choices):
        f = dict(zip(cells, combo))
        ok = True
        for (i, j), a in f.items():
            for (i2, j2), b in f.items():
                if i == i2 and j < j2 and min(a) < max(b):
                    ok = False
                if j == j2 and i < i2 and max(a) >= min(b):
                    ok = False
        if ok:
            out.add(SetValuedTableau(tuple(zip(cells, combo))))
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_brute_force(n):
    for w in all_permutations(n):
        assert set(enumerate_svrt(w)) == brute_fillings(w, single=False)
        assert set(enumerate_srt(w)) == brute_fillings(w, single=True)


def test_counts_for_132():
    w = P("132")
    assert len(enumerate_svrt(w)) == 3
    assert len(enumerate_srt(w)) == 2
    assert len(enumerate_lsvrt(w)) == 3
    assert enumerate_srt(Permutation.identity(3)) == [SetValuedTableau(())]


def test_printed_set_valued_example():
    w = P("426315")
    T = SetValuedTableau.from_mapping(PRINTED_SVRT)
    assert is_svrt(w, T)
    assert not is_srt(w, T)
    assert T in enumerate_svrt(w)


def test_printed_limit_example():
    w = P("426315")
    T = SetValuedTableau.from_mapping(PRINTED_LIMIT)
    bold = SetValuedTableau.single(PRINTED_LIMIT_BOLD)
    assert is_srt(w, bold)
    assert T.contains(bold)
    assert limit_selection(w, T) is not None
    # it is a limit tableau in the selection sense, but 1 lies outside E at (3,3)
    assert is_lsvrt(w, T, bounded=False)
    assert 1 not in escape_set_E(w, (3, 3))
    assert not is_lsvrt(w, T)
    # it is not a set-valued Rothe tableau: row 3 is not weakly decreasing
    assert not is_svrt(w, T)


def test_escape_set_by_brute_force():
    w = P("25143")
    union = {}
    for T in brute_fillings(w, single=True):
        for sq, v in T.entries:
            union.setdefault(sq, set()).update(v)
    assert escape_sets(w) == {sq: frozenset(v) for sq, v in union.items()}
    assert escape_set_E(w, (4, 3)) == frozenset({2, 3, 4})
    with pytest.raises(SquareNotInDiagram):
        escape_set_E(w, (3, 3))


def test_upward_moves():
    w = P("132")
    low = SetValuedTableau.single({(2, 2): 1})
    high = SetValuedTableau.single({(2, 2): 2})
    assert upward_moves_Y(w, low, (2, 2)) == {2}
    assert upward_moves_Y(w, high, (2, 2)) == frozenset()


def test_limit_enumeration_against_definition():
    for n in range(1, 5):
        for w in all_permutations(n):
            E = escape_sets(w)
            cells = rothe_diagram(w).sorted()
            want = set()
            for combo in product(*(list(nonempty_subsets(sorted(E[sq]))) for sq in cells)):
                T = SetValuedTableau(tuple(zip(cells, combo)))
                if is_lsvrt(w, T):
                    want.add(T)
            assert set(enumerate_lsvrt(w)) == want


def test_ground_set_cap():
    with pytest.raises(GroundSetTooLarge):
        enumerate_lsvrt(P("4321"), max_ground_set=3)


def test_small_explicit_sums():
    R = ring_for(3)
    assert formula_theorem11(P("213")) == oplus(R.x(1), R.y(1))
    assert formula_corollary13_single(P("132")) == R.x(1) + R.x(2)
    assert formula_theorem11(Permutation.identity(4)) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_transfer_sum_equals_enumeration(n):
    for w in all_permutations(n):
        assert formula_theorem11(w) == formula_theorem11_by_enumeration(w)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_tableau_sums_against_oracle(n):
    ctx = GrothContext(n)
    for w in all_permutations(n):
        G = ctx.double_grothendieck(w)
        avoider = is_1432_avoiding(w)
        assert (formula_theorem11(w) == G) == avoider
        if avoider:
            assert formula_theorem14_srt(w) == G
            assert formula_corollary12(w) == set_y_zero(G)
            assert formula_corollary13_double(w) == ctx.double_schubert(w)
            assert formula_corollary13_single(w) == ctx.single_schubert(w)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_limit_sum_against_oracle(n):
    ctx = GrothContext(n)
    for w in all_permutations(n):
        if is_1432_avoiding(w):
            assert formula_theorem14_limit(w) == ctx.double_grothendieck(w)


def test_skew_tableaux_small_shape():
    # one-row shape of length 2, flag 2: {1},{1} / {1},{2} / {2},{2} / {1},{1,2} / {1,2},{2}
    fillings = list(enumerate_skew_svt((2,), (0,), (2,)))
    assert len(fillings) == 5


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_skew_formula_against_oracle(n):
    ctx = GrothContext(n)
    for w in all_permutations(n):
        if is_321_avoiding(w):
            G = ctx.double_grothendieck(w)
            assert formula_matsumura_321(w) == G == formula_theorem11(w)


def test_skew_formula_312465():
    w = P("312465")
    assert formula_matsumura_321(w) == GrothContext(6).double_grothendieck(w)


def test_skew_formula_rejects_321():
    with pytest.raises(NotThreeTwoOneAvoiding):
        formula_matsumura_321(P("321"))
