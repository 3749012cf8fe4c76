from itertools import product

import pytest

from rothe_tableaux.balanced import (
    Labeling,
    counterexample_labeling,
    enumerate_csbl,
    fgrs_schubert,
    hook,
    is_balanced,
    is_column_strict,
    is_csbl,
)
from rothe_tableaux.errors import No1432Occurrence, SquareNotInDiagram
from rothe_tableaux.oracle import GrothContext
from rothe_tableaux.perm import Permutation, all_permutations, is_1432_avoiding, rothe_diagram
from rothe_tableaux.tableaux import enumerate_srt, formula_corollary13_single, is_srt

P = Permutation.parse

PRINTED_LEFT = {(1, 1): 1, (2, 1): 2, (2, 3): 2, (2, 4): 2, (4, 3): 1}
PRINTED_RIGHT = {(1, 1): 1, (2, 1): 2, (2, 3): 2, (2, 4): 1, (4, 3): 3}


def balanced_by_counting(w, labels):
    """Counting form: with ``a`` other arm squares, the corner label needs at
    most ``a`` other hook labels below it and at least ``a`` at or below it."""
    d = rothe_diagram(w)
    for i, j in d.squares:
        L = labels[(i, j)]
        others = [labels[(i, c)] for c in d.row(i) if c > j] + [labels[(r, j)] for r in d.column(j) if r > i]
        a = sum(1 for c in d.row(i) if c > j)
        if not (sum(v < L for v in others) <= a <= sum(v <= L for v in others)):
            return False
    return True


def test_hook_shape():
    H = hook(P("25143"), 2, 3)
    assert H.arm == ((2, 3), (2, 4))
    assert H.leg == ((2, 3), (4, 3))
    assert H.path() == [(2, 4), (2, 3), (4, 3)]
    with pytest.raises(SquareNotInDiagram):
        hook(P("25143"), 3, 3)


def test_printed_labelings_are_balanced():
    w = P("25143")
    for labels in (PRINTED_LEFT, PRINTED_RIGHT):
        L = Labeling.from_mapping(labels)
        assert is_balanced(w, L)
        assert is_csbl(w, L)


def test_a_labeling_that_is_not_balanced():
    w = P("25143")
    bad = {(1, 1): 1, (2, 1): 2, (2, 3): 1, (2, 4): 2, (4, 3): 2}
    assert not balanced_by_counting(w, bad)
    assert not is_balanced(w, Labeling.from_mapping(bad))


def test_balance_check_agrees_on_all_small_labelings():
    w = P("25143")
    cells = rothe_diagram(w).sorted()
    for vals in product(range(1, 4), repeat=len(cells)):
        labels = dict(zip(cells, vals))
        assert is_balanced(w, Labeling.from_mapping(labels)) == balanced_by_counting(w, labels)


def test_column_strict():
    assert not is_column_strict(Labeling.from_mapping({(1, 1): 1, (2, 1): 1}))
    assert is_column_strict(Labeling.from_mapping({(1, 1): 1, (1, 2): 1}))


def test_flag_violation_is_not_csbl():
    w = P("213")
    assert not is_csbl(w, Labeling.from_mapping({(1, 1): 2}))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_csbl_sum_is_schubert(n):
    ctx = GrothContext(n)
    for w in all_permutations(n):
        assert fgrs_schubert(w) == ctx.single_schubert(w)
        labelings = {tuple(sorted(L.as_dict().items())) for L in enumerate_csbl(w)}
        for T in enumerate_srt(w):
            assert tuple(sorted(T.values().items())) in labelings


def test_printed_counterexample():
    w = P("1,4,5,9,6,10,7,8,2,3")
    L = counterexample_labeling(w).as_dict()
    d = rothe_diagram(w)
    special = {(2, 3): 1, (3, 3): 2, (5, 3): 3}
    for (i, j), v in L.items():
        assert v == special.get((i, j), i)
    # every square drawn in the printed example is present
    for sq in [(4, 6), (4, 7), (4, 8), (6, 7), (6, 8)] + [(i, 2) for i in range(2, 9)]:
        assert sq in d
    assert is_csbl(w, counterexample_labeling(w))
    assert not is_srt(w, counterexample_labeling(w).as_tableau())


def test_counterexample_for_1432():
    L = counterexample_labeling(P("1432"))
    assert L.as_dict() == {(2, 2): 2, (2, 3): 2, (3, 2): 1}


def test_counterexample_needs_pattern():
    with pytest.raises(No1432Occurrence):
        counterexample_labeling(P("2143"))


@pytest.mark.parametrize("n", [4, 5])
def test_counterexample_on_every_container(n):
    ctx = GrothContext(n)
    for w in all_permutations(n):
        if not is_1432_avoiding(w):
            L = counterexample_labeling(w)
            assert is_csbl(w, L) and not is_srt(w, L.as_tableau())
            assert formula_corollary13_single(w) != ctx.single_schubert(w)
