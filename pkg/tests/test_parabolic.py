import pytest

from ybx.errors import SolutionError
from ybx.garside import build_lattice
from ybx.parabolic import (
    analysis_report,
    delta_classes,
    f_orbits,
    g_orbits,
    invariant_bipartitions,
    is_decomposable,
    is_delta_pure,
    is_standard_parabolic,
    member_of_MY,
    parabolic_delta_of,
    simples_in_submonoid,
    standard_parabolics,
    verify_theorem_A,
)
from ybx.solution import trivial_solution


def z(*atoms):
    return tuple(a - 1 for a in atoms)


def supports(S):
    return [tuple(a + 1 for a in d.support) for d in standard_parabolics(S)]


def test_member_of_MY(e5):
    L = build_lattice(e5)
    assert member_of_MY(L, L.index_of(z(1, 1)), z(1, 2))
    assert not member_of_MY(L, L.delta, z(1, 2, 3, 4))
    assert member_of_MY(L, L.simple(z(1, 3)), z(1, 2, 3, 4))


def test_simples_in_submonoid_non_invariant(e5):
    L = build_lattice(e5)
    found = simples_in_submonoid(L, z(1, 2))
    # x1 x2 is a word over {1, 2} but its x_ell is {1, 3}
    assert L.index_of(z(1, 2)) in found
    assert not set(found) <= set(L.left_divisors(L.index_of(z(1, 1))))


def test_parabolic_delta_of(e5):
    L = build_lattice(e5)
    d = parabolic_delta_of(L, z(1, 2, 3, 4))
    assert len(d.word) == 4 and L.is_balanced(d)
    assert parabolic_delta_of(L, z(5)).word == z(5)
    assert parabolic_delta_of(L, range(5)) == L.delta
    with pytest.raises(SolutionError):
        parabolic_delta_of(L, z(1, 2))


def test_is_standard_parabolic(e5):
    L = build_lattice(e5)
    assert is_standard_parabolic(L, z(1, 2)) is None
    assert is_standard_parabolic(L, z(1, 2, 3, 4)) is not None
    assert is_standard_parabolic(L, range(5)).delta == L.delta


def test_standard_parabolics(e5, e4):
    assert supports(e5) == [(5,), (1, 2, 3, 4), (1, 2, 3, 4, 5)]
    assert supports(e4) == [(1, 2, 3, 4)]
    assert supports(trivial_solution(2)) == [(1,), (2,), (1, 2)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_theorem_A_trivial(n):
    assert verify_theorem_A(trivial_solution(n))
    assert len(standard_parabolics(trivial_solution(n))) == 2 ** n - 1


def test_theorem_A_fixtures(e5, e4):
    assert verify_theorem_A(e5)
    assert verify_theorem_A(e4)


def test_orbits(e5, e4):
    assert f_orbits(e5) == [z(1, 2, 3, 4), z(5)]
    assert g_orbits(e5) == f_orbits(e5)
    assert f_orbits(e4) == [z(1, 2, 3, 4)]
    assert f_orbits(trivial_solution(3)) == [(0,), (1,), (2,)]


def test_decomposable(e5, e4):
    assert is_decomposable(e5)
    assert not is_decomposable(e4)
    assert is_decomposable(trivial_solution(2))
    assert invariant_bipartitions(e5) == [(z(1, 2, 3, 4), z(5))]


def test_delta_classes_e5(e5):
    rep = delta_classes(e5)
    assert rep.classes == (z(1, 2, 3, 4), z(5))
    assert len(rep.class_deltas[0].word) == 4
    assert rep.class_deltas[1].word == z(5)
    assert rep.flags() == {"product": True, "commute": True, "gcd_trivial": True}


def test_delta_classes_e4(e4):
    rep = delta_classes(e4)
    assert rep.classes == (z(1, 2, 3, 4),)
    assert rep.class_deltas == (build_lattice(e4).delta,)


def test_delta_classes_trivial():
    rep = delta_classes(trivial_solution(3))
    assert rep.classes == ((0,), (1,), (2,))
    assert rep.ok
    L = build_lattice(trivial_solution(3))
    assert L.equal(L.delta.word, z(1, 2, 3))


def test_delta_pure(e5, e4):
    assert is_delta_pure(e4)
    assert not is_delta_pure(e5)
    assert not is_delta_pure(trivial_solution(2))


def test_analysis_report(e5, e4):
    rep = analysis_report(e5)
    assert rep["decomposable"] is True
    assert len(rep["parabolics"]) == 3
    assert rep["delta_classes"]["classes"] == [[1, 2, 3, 4], [5]]
    assert analysis_report(e4)["delta_pure"] is True
    assert len(analysis_report(trivial_solution(3))["invariant_subsets"]) == 7
