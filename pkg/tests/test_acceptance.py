"""Acceptance criteria 1-8, one test each.

Each test prints a single ``criterion N: PASS|FAIL`` line; the lines are
collected again at the end of the pytest run.  Run on its own with
``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import io
import random
import sys
import time
from contextlib import redirect_stdout

import pytest

from ybx.cli import main
from ybx.enumeration import (
    brute_head,
    brute_left_divisors,
    brute_normal_form,
    enumerate_solutions,
    run_property_suite,
    solutions_by_g_families,
    solutions_by_pair_bijections,
)
from ybx.fixtures import E4, E5, fixture_document
from ybx.folding import find_foldings, find_strong_foldings, verify_theorem_B
from ybx.garside import build_lattice
from ybx.parabolic import (
    delta_classes,
    f_orbits,
    is_decomposable,
    is_delta_pure,
    standard_parabolics,
    verify_theorem_A,
)
from ybx.solution import (
    invariant_subsets,
    is_square_free,
    presentation_of,
    trivial_solution,
)

RESULTS: list[str] = []

E5_RELATIONS = {
    "x1 x1 = x2 x2", "x1 x2 = x3 x4", "x1 x3 = x4 x2", "x1 x5 = x5 x1",
    "x2 x1 = x4 x3", "x2 x4 = x3 x1", "x2 x5 = x5 x2", "x3 x3 = x4 x4",
    "x3 x5 = x5 x3", "x4 x5 = x5 x4",
}


def z(*atoms):
    return tuple(a - 1 for a in atoms)


def sets(family):
    return {frozenset(a + 1 for a in Y) for Y in family}


def record(num: int, checks: dict) -> None:
    failed = [name for name, ok in checks.items() if not ok]
    status = "PASS" if not failed else "FAIL"
    line = f"criterion {num}: {status}"
    if failed:
        line += " (" + "; ".join(failed) + ")"
    else:
        line += " (" + "; ".join(checks) + ")"
    RESULTS.append(line)
    print(line)
    assert not failed, line


def cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


@pytest.fixture
def e5_file(tmp_path):
    import json
    p = tmp_path / "e5.json"
    p.write_text(json.dumps(fixture_document("e5")))
    return str(p)


def test_criterion_1(e5_file):
    build_lattice.cache_clear()

    def work():
        check_code, check_out = cli("check", e5_file)
        pres_code, pres_out = cli("presentation", e5_file)
        return check_code, check_out, pres_code, pres_out

    (check_code, check_out, pres_code, pres_out), dt = timed(work)
    axioms = ("nondegenerate", "involutive", "braided", "symmetric")
    record(1, {
        "check exit 0": check_code == 0,
        "four axioms true": all(f"{a}: true" in check_out for a in axioms),
        "presentation exit 0": pres_code == 0,
        "exactly the 10 relations": set(pres_out.strip().splitlines()) == E5_RELATIONS
        and len(pres_out.strip().splitlines()) == 10,
        f"runtime {dt:.3f}s < 1s": dt < 1.0,
    })


def test_criterion_2():
    build_lattice.cache_clear()

    def work():
        L = build_lattice(E5())
        x1_cubed = L.index_of(z(1, 1, 1))
        return L, x1_cubed, L.balance_witness(x1_cubed)

    (L, s, witness), dt = timed(work)
    record(2, {
        "32 simples": len(L) == 32,
        "Delta length 5": len(L.delta.word) == 5,
        "Delta = x1^4 x5": L.equal(L.delta.word, z(1, 1, 1, 1, 5)),
        "x1^3 has X_l = X_r = {1,2,3}": s.x_ell == s.x_r == frozenset(z(1, 2, 3)),
        "x1^3 not balanced": not L.is_balanced(s),
        "witness x1x2": witness is not None and L.equal(witness.word, z(1, 2)),
        f"runtime {dt:.3f}s < 1s": dt < 1.0,
    })


def test_criterion_3():
    S = E5()
    expected = {frozenset({5}), frozenset({1, 2, 3, 4}), frozenset({1, 2, 3, 4, 5})}
    record(3, {
        "invariant subsets {5}, {1,2,3,4}, X": sets(invariant_subsets(S)) == expected,
        "parabolic supports coincide": sets(d.support for d in standard_parabolics(S)) == expected,
        "verify_theorem_A": verify_theorem_A(S),
    })


def test_criterion_4():
    S = E5()
    L = build_lattice(S)
    dc = delta_classes(S)
    product = tuple(a for d in dc.class_deltas for a in d.word)
    strong_trivial = [
        r for r in find_strong_foldings(S)
        if r.k == 2 and r.induced == trivial_solution(2)
    ]
    record(4, {
        "f-orbits {1,2,3,4}|{5}": f_orbits(S) == [z(1, 2, 3, 4), z(5)],
        "decomposable": is_decomposable(S),
        "Delta-class flags": dc.flags() == {"product": True, "commute": True, "gcd_trivial": True},
        "Delta = Delta_1 Delta_2": L.equal(product, L.delta.word),
        "strong trivial folding, k=2": len(strong_trivial) == 1,
    })


def test_criterion_5():
    build_lattice.cache_clear()

    def work():
        S = E4()
        supports = sets(d.support for d in standard_parabolics(S))
        foldings = find_foldings(S)
        return S, supports, foldings, is_delta_pure(S), is_decomposable(S), verify_theorem_B(S)

    (S, supports, foldings, pure, decomposable, thm_b), dt = timed(work)
    target = [r for r in foldings if [list(b) for b in r.partition] == [[0, 1], [2, 3]]]
    induced_ok = bool(target) and str(presentation_of(target[0].induced)) == "x1 x1 = x2 x2"
    record(5, {
        "no proper standard parabolic": supports == {frozenset({1, 2, 3, 4})},
        "Delta-pure": pure,
        "indecomposable": not decomposable,
        "folding {1,2}|{3,4}": len(target) == 1,
        "induced presentation x^2 = y^2": induced_ok,
        "folding not strong": bool(target) and target[0].strong is False,
        "verify_theorem_B": thm_b,
        f"runtime {dt:.3f}s < 1s": dt < 1.0,
    })


def test_criterion_6():
    t0 = time.perf_counter()
    censuses = {n: enumerate_solutions(n) for n in (1, 2, 3, 4)}
    dt = time.perf_counter() - t0
    agree = all(
        {S.flat() for S in solutions_by_g_families(n)}
        == {S.flat() for S in solutions_by_pair_bijections(n)}
        for n in (1, 2, 3)
    )
    failures = []
    for n, c in censuses.items():
        for S in c.classes:
            rep = run_property_suite(S)
            if not rep.passed:
                failures.append((n, rep.failures))
    record(6, {
        f"enumeration n=1..4 in {dt:.1f}s < 300s": dt < 300,
        "iso counts 1, 2, 5, 23": [censuses[n].iso_count for n in (1, 2, 3, 4)] == [1, 2, 5, 23],
        "strategies agree for n <= 3": agree,
        f"property suite on {sum(len(c.classes) for c in censuses.values())} classes": not failures,
    })


def test_criterion_7():
    rng = random.Random(20240601)
    checks = {}
    for name, S, size in (("E5", E5(), 32), ("E4", E4(), 16)):
        L = build_lattice(S)
        divs = brute_left_divisors(L.delta.word, L.C)
        from_brute = {L.index_of(d) for d in divs}
        checks[f"{name} brute divisors of Delta = {size} simples"] = (
            len(divs) == size and from_brute == set(L.simples)
        )
        agree = 0
        for _ in range(100):
            u = tuple(rng.randrange(S.n) for _ in range(rng.randint(0, 6)))
            head_ok = L.equal(L.head(u).word, brute_head(u, L.C)) if u else L.head(u) == L.identity
            nf = L.normal_form(u)
            brute = brute_normal_form(u, L.C)
            nf_ok = len(nf) == len(brute) and all(L.equal(s.word, b) for s, b in zip(nf, brute))
            agree += head_ok and nf_ok
        checks[f"{name} head/normal form agree on {agree}/100 words"] = agree == 100
    record(7, checks)


def test_criterion_8():
    checked, exceptions = 0, []
    for n in (2, 3, 4):
        for S in enumerate_solutions(n).classes:
            if is_square_free(S):
                checked += 1
                if not is_decomposable(S):
                    exceptions.append(S)
    record(8, {
        f"{checked} square-free classes decomposable": checked > 0 and not exceptions,
    })


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
