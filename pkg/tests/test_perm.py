from itertools import combinations, permutations

import pytest

from rothe_tableaux.errors import DuplicateValue, InvalidPermutation, NotApplicable, NotThreeTwoOneAvoiding, SquareNotInDiagram
from rothe_tableaux.perm import (
    P1432,
    P2143,
    Permutation,
    all_permutations,
    avoids,
    first_ascent,
    is_1432_avoiding,
    is_321_avoiding,
    m_statistic,
    pattern_occurrences,
    rothe_diagram,
    skew_shape_321,
)


def brute_diagram(word):
    n = len(word)
    inv = {v: i + 1 for i, v in enumerate(word)}
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if word[i - 1] > j and inv[j] > i}


def brute_contains(word, pattern):
    k = len(pattern)
    for idx in combinations(range(len(word)), k):
        vals = [word[i] for i in idx]
        ranks = tuple(sorted(vals).index(v) + 1 for v in vals)
        if ranks == tuple(pattern):
            return True
    return False


def test_parse_forms():
    assert Permutation.parse("426315").word == (4, 2, 6, 3, 1, 5)
    assert Permutation.parse("1,4,5,9,6,10,7,8,2,3").n == 10
    assert str(Permutation.parse("1,4,5,9,6,10,7,8,2,3")) == "1,4,5,9,6,10,7,8,2,3"
    assert str(Permutation.parse("426315")) == "426315"


@pytest.mark.parametrize("word", [(), (0, 1), (1, 3), (2, 2)])
def test_invalid_words(word):
    with pytest.raises(InvalidPermutation):
        Permutation(word)


def test_duplicate_value_error():
    with pytest.raises(DuplicateValue):
        Permutation((1, 1, 3))


def test_parse_rejects_garbage():
    with pytest.raises(InvalidPermutation):
        Permutation.parse("12a")


def test_length_of_printed_example():
    assert Permutation.parse("426315").length() == 8


def test_length_matches_diagram_size_and_inversions():
    for n in range(1, 6):
        for w in all_permutations(n):
            inv = sum(1 for a, b in combinations(w.word, 2) if a > b)
            assert w.length() == inv == len(rothe_diagram(w))


def test_diagram_matches_brute_force():
    for n in range(1, 6):
        for w in all_permutations(n):
            assert set(rothe_diagram(w).squares) == brute_diagram(w.word)


def test_printed_diagram():
    d = rothe_diagram(Permutation.parse("426315"))
    assert set(d.squares) == {(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (3, 3), (3, 5), (4, 1)}
    d = rothe_diagram(Permutation.parse("25143"))
    assert set(d.squares) == {(1, 1), (2, 1), (2, 3), (2, 4), (4, 3)}
    assert len(rothe_diagram(Permutation.identity(5))) == 0


def test_row_counts_are_the_lehmer_code():
    for w in all_permutations(5):
        d = rothe_diagram(w)
        code = [sum(1 for j in range(i + 1, w.n + 1) if w[j] < w[i]) for i in range(1, w.n + 1)]
        assert [len(d.row(i)) for i in range(1, w.n + 1)] == code


def test_m_statistic_examples():
    assert m_statistic(Permutation.parse("426315"), 3, 5) == 3
    assert m_statistic(Permutation.parse("25143"), 2, 4) == 3
    w = Permutation.parse("426315")
    for i, j in rothe_diagram(w).squares:
        if j == rothe_diagram(w).row(i)[0]:
            assert m_statistic(w, i, j) == 1
    with pytest.raises(SquareNotInDiagram):
        m_statistic(w, 2, 2)


def test_first_ascent():
    assert first_ascent(Permutation.parse("321")) is None
    assert first_ascent(Permutation.parse("2143")) == 2
    assert first_ascent(Permutation.parse("123")) == 1


def test_pattern_detection_matches_brute_force():
    for n in range(1, 7):
        for w in all_permutations(n):
            assert is_1432_avoiding(w) == (not brute_contains(w.word, (1, 4, 3, 2)))
            assert is_321_avoiding(w) == (not brute_contains(w.word, (3, 2, 1)))


def test_first_occurrence_is_lexicographic():
    w = Permutation.parse("1,4,5,9,6,10,7,8,2,3")
    occ = list(pattern_occurrences(w, P1432))
    assert occ == sorted(occ)
    assert occ[0] == (1, 4, 5, 9)


def test_avoider_counts_small():
    counts = {n: sum(avoids(w, P1432) for w in all_permutations(n)) for n in range(1, 6)}
    assert counts == {1: 1, 2: 2, 3: 6, 4: 23, 5: 103}
    assert sum(avoids(w, P2143) for w in all_permutations(5)) == 103
    assert [p for p in permutations(range(1, 5)) if brute_contains(p, (1, 4, 3, 2))] == [(1, 4, 3, 2)]


def test_first_ascent_step_keeps_avoidance():
    for n in range(2, 7):
        for w in all_permutations(n):
            r = first_ascent(w)
            if r is not None and is_1432_avoiding(w):
                assert is_1432_avoiding(w.swap(r))


def test_skew_shape_of_312465():
    s = skew_shape_321(Permutation.parse("312465"))
    assert s.f == (1, 5)
    assert s.lam == (4, 1)
    assert s.mu == (2, 0)
    assert len(s.squares()) == Permutation.parse("312465").length()


def test_skew_correspondence_closed_forms():
    # row and column of a square's image, computed straight from w
    for n in range(2, 7):
        for w in all_permutations(n):
            if w.is_identity() or not is_321_avoiding(w):
                continue
            s = skew_shape_321(w)
            top = w[s.f[-1]]
            assert sorted(s.correspondence.values()) == sorted(s.squares())
            for (i, j), (r, c) in s.correspondence.items():
                assert r == i - sum(1 for t in range(1, i) if w[t] <= t)
                assert c == top - j - sum(1 for t in range(1, n + 1) if w[t] > t and w[t] > j) + 1


def test_skew_shape_errors():
    with pytest.raises(NotThreeTwoOneAvoiding):
        skew_shape_321(Permutation.parse("321"))
    with pytest.raises(NotApplicable):
        skew_shape_321(Permutation.identity(3))
