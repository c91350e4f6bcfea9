
import pytest
from hypothesis import given, settings, strategies as st

from ybx.enumeration import brute_head, brute_left_divisors, brute_normal_form
from ybx.errors import ReversingBudgetError
from ybx.garside import (
    build_lattice,
    complement_system,
    garside_failures,
    left_divides_word,
    reverse_left,
    reverse_right,
    right_divides_word,
    right_lcm,
    left_lcm,
    words_equal,
)
from ybx.solution import trivial_solution


def w(*letters):
    """1-based letters to an internal word."""
    return tuple(a - 1 for a in letters)


def mask(*atoms):
    return sum(1 << (a - 1) for a in atoms)


@pytest.fixture(scope="module")
def L5(e5):
    return build_lattice(e5)


@pytest.fixture(scope="module")
def L4(e4):
    return build_lattice(e4)


def test_complements(e5, e4):
    assert complement_system(e5).rc[0][2] == 1
    assert complement_system(e4).rc[0][1] == 0
    C3 = complement_system(trivial_solution(3))
    assert all(C3.rc[a][b] == b for a in range(3) for b in range(3) if a != b)


def test_reverse_right(e5, e4):
    C = complement_system(e5)
    assert reverse_right(w(1), w(3), C) == (w(2), w(4))
    assert reverse_right(w(1, 2), w(1, 2), C) == ((), ())
    C4 = complement_system(e4)
    a, b = reverse_right(w(1, 1), w(3, 3), C4)
    assert len(w(1, 1) + a) == 4
    assert words_equal(w(1, 1) + a, w(3, 3) + b, C4)
    assert words_equal(w(1, 1) + a, build_lattice(e4).delta.word, C4)


def test_reverse_left(e5):
    C = complement_system(e5)
    p, q = reverse_left(w(2), w(4), C)
    assert words_equal(p + w(2), q + w(4), C)


def test_words_equal(e5):
    C = complement_system(e5)
    assert words_equal(w(1, 1, 1, 1, 5), build_lattice(e5).delta.word, C)
    assert not words_equal(w(1), w(2), C)
    assert words_equal(w(1, 2), w(3, 4), C)
    assert not words_equal(w(1, 2), w(1, 2, 3), C)


def test_budget_is_enforced(e5):
    C = complement_system(e5, budget=3)
    with pytest.raises(ReversingBudgetError, match="complemented-complete"):
        reverse_right(w(1, 1, 1), w(3, 3, 3), C)


def test_lcms(e5):
    C = complement_system(e5)
    assert words_equal(right_lcm(w(1, 2, 3), C), w(1, 1, 1), C)
    assert words_equal(left_lcm(w(1, 2, 3), C), w(1, 1, 1), C)
    assert right_lcm([2], C) == (2,)
    assert words_equal(right_lcm(range(5), C), w(1, 1, 1, 1, 5), C)


def test_lattice_sizes(L5, L4):
    assert len(L5) == 32
    assert len(L4) == 16
    assert len(build_lattice(trivial_solution(2))) == 4


def test_e5_delta(L5):
    assert len(L5.delta.word) == 5
    assert L5.equal(L5.delta.word, w(1, 1, 1, 1, 5))
    assert L5.delta.x_ell == L5.delta.x_r == frozenset(range(5))


def test_e4_delta(L4):
    # Delta is x1^4 = x3^4; x1^2 x3^2 is a different element
    assert L4.equal(L4.delta.word, w(1, 1, 1, 1))
    assert L4.equal(L4.delta.word, w(3, 3, 3, 3))
    assert not L4.equal(L4.delta.word, w(1, 1, 3, 3))


def test_x_r(L5):
    s = L5.simples[mask(1, 3)]
    assert L5.equal(s.word, w(1, 2))
    assert s.r == mask(2, 4)
    assert L5.atom(2).x_ell == L5.atom(2).x_r == frozenset({2})


def test_divisibility(L5):
    s13, s123 = L5.simples[mask(1, 3)], L5.simples[mask(1, 2, 3)]
    assert L5.left_divides(s13, s123)
    assert not L5.right_divides(s13, s123)
    assert L5.left_divides(s123, s123)


def test_join_meet(L5):
    assert L5.join(L5.atom(0), L5.atom(2)) == L5.simples[mask(1, 3)]
    for s in L5:
        assert L5.meet(s, L5.delta) == s
        assert L5.join(s, L5.identity) == s
    assert L5.meet(L5.simples[mask(1, 2)], L5.simples[mask(2, 3)]) == L5.atom(1)


def test_complements_on_simples(L5):
    for s in L5:
        for t in L5:
            rc = L5.right_complement(s, t)
            assert L5.equal(s.word + rc.word, L5.join(s, t).word)
            lc = L5.left_complement(s, t)
            assert L5.equal(lc.word + s.word, L5.right_join(s, t).word)


def test_balanced(L5):
    x1_cubed = L5.index_of(w(1, 1, 1))
    assert x1_cubed.x_ell == x1_cubed.x_r == frozenset({0, 1, 2})
    assert not L5.is_balanced(x1_cubed)
    assert L5.equal(L5.balance_witness(x1_cubed).word, w(1, 2))
    assert L5.is_balanced(L5.delta)
    x1_sq = L5.index_of(w(1, 1))
    assert x1_sq.ell == mask(1, 2) and L5.is_balanced(x1_sq)


def test_support(L5):
    assert L5.support(L5.delta) == frozenset(range(5))
    assert L5.support(L5.index_of(w(1, 1))) == frozenset({0, 1})
    assert L5.support(L5.atom(4)) == frozenset({4})
    with pytest.raises(ValueError):
        L5.support(L5.index_of(w(1, 1, 1)))


def test_head(L5):
    assert L5.head(L5.delta.word) == L5.delta
    assert L5.head(w(1, 2)) == L5.simples[mask(1, 3)]
    assert L5.head(w(1)) == L5.atom(0)
    assert L5.index_of(w(1, 1, 1, 1, 1, 1)) is None


def test_normal_form(L5):
    assert L5.normal_form(L5.delta.word) == [L5.delta]
    assert L5.normal_form(w(1, 1, 1)) == [L5.simples[mask(1, 2, 3)]]
    nf = L5.normal_form(w(1, 1, 1, 1, 1))
    assert len(nf) == 2 and sum(len(s.word) for s in nf) == 5
    assert L5.equal(tuple(x for s in nf for x in s.word), w(1, 1, 1, 1, 1))


def test_brute_divisors(L5, L4):
    assert len(brute_left_divisors(L5.delta.word, L5.C)) == 32
    assert len(brute_left_divisors(L4.delta.word, L4.C)) == 16
    assert brute_left_divisors(w(2), L5.C) == [(), w(2)]
    divs = brute_left_divisors(w(1, 1, 1), L5.C)
    assert any(L5.equal(d, w(1, 2)) for d in divs)


@pytest.mark.parametrize("which", ["e5", "e4"])
def test_garside_checks(which, request):
    assert garside_failures(request.getfixturevalue(which)) == []


words = st.lists(st.integers(0, 4), max_size=6)


@settings(max_examples=60, deadline=None)
@given(u=words, v=words)
def test_divisibility_matches_brute(L5, u, v):
    assert left_divides_word(u, v, L5.C) == any(
        L5.equal(d, tuple(u)) for d in brute_left_divisors(v, L5.C) if len(d) == len(u)
    )


@settings(max_examples=60, deadline=None)
@given(u=words)
def test_head_and_normal_form_match_brute(L5, u):
    assert L5.equal(L5.head(u).word, brute_head(u, L5.C))
    nf = L5.normal_form(u)
    brute = brute_normal_form(u, L5.C)
    assert len(nf) == len(brute)
    assert all(L5.equal(s.word, b) for s, b in zip(nf, brute))


@settings(max_examples=60, deadline=None)
@given(u=words, v=words)
def test_normal_key_decides_equality(L5, u, v):
    assert (L5.normal_key(u) == L5.normal_key(v)) == L5.equal(u, v)


def test_right_divides_word(L5):
    assert right_divides_word(w(2), w(1, 2), L5.C)
    assert right_divides_word(w(4), w(1, 2), L5.C)
    assert not right_divides_word(w(1), w(1, 2), L5.C)
