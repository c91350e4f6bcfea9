"""
Exhaustive enumeration of small solutions and brute-force oracles.

Solutions are generated from families ``(g_x)`` in ``Sym(n)^n``: for an
involutive solution ``f`` is forced, ``f_y(x) = g_{g_x(y)}^{-1}(x)``, so only
``f``-bijectivity and the braid relation need filtering.  An independent
search over all bijections of ``X x X`` cross-checks the counts for small n.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

from .documents import dumps, solution_document
from .garside import (
    ComplementSystem,
    build_lattice,
    complement_system,
    left_divides_word,
    reverse_right,
    right_divides_word,
    right_lcm,
    words_equal,
)
from .solution import (
    SolutionTable,
    check_qybe,
    element_signature,
    fixed_partners,
    is_braided,
    is_nondegenerate,
    is_solution,
    is_square_free,
    is_symmetric,
    isomorphic,
    presentation_of,
    solution_from_presentation,
)

MAX_EXHAUSTIVE_N = 4


@dataclass
class SolutionCensus:
    n: int
    classes: list[SolutionTable]
    raw_count: int
    iso_count: int


# ---------------------------------------------------------------------------
# g-family search
# ---------------------------------------------------------------------------

def _braided(g, f, n) -> bool:
    for x in range(n):
        gx = g[x]
        for y in range(n):
            a, b = gx[y], f[y][x]
            for z in range(n):
                # S12 S23 S12
                c, d = g[b][z], f[z][b]
                e, h = g[a][c], f[c][a]
                # S23 S12 S23
                p, q = g[y][z], f[z][y]
                r, s = g[x][p], f[p][x]
                t, u = g[s][q], f[q][s]
                if (e, h, d) != (r, t, u):
                    return False
    return True


def _search_branch(n: int, first: int) -> list[tuple]:
    """Solutions with ``g_0`` the ``first``-th permutation, as flat tables."""
    perms = list(itertools.permutations(range(n)))
    inv = {p: tuple(sorted(range(n), key=p.__getitem__)) for p in perms}
    found = []
    for rest in itertools.product(perms, repeat=n - 1):
        g = (perms[first],) + rest
        ginv = [inv[p] for p in g]
        f = [[ginv[g[x][y]][x] for x in range(n)] for y in range(n)]
        if any(len(set(fy)) != n for fy in f):
            continue
        if _braided(g, f, n):
            found.append(tuple(v for x in range(n) for y in range(n) for v in (g[x][y], f[y][x])))
    return found


def _from_flat(n: int, flat: Sequence[int]) -> SolutionTable:
    it = iter(flat)
    return SolutionTable.from_rows([[(next(it), next(it)) for _ in range(n)] for _ in range(n)])


def solutions_by_g_families(n: int, jobs: int = 1) -> list[SolutionTable]:
    """All labelled non-degenerate symmetric solutions on ``n`` points."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_N}")
    branches = range(len(list(itertools.permutations(range(n)))))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_branch, itertools.repeat(n), branches))
    else:
        results = [_search_branch(n, b) for b in branches]
    flats = sorted(fl for branch in results for fl in branch)
    return [_from_flat(n, fl) for fl in flats]


def solutions_by_pair_bijections(n: int) -> list[SolutionTable]:
    """Independent oracle: try every bijection of ``X x X`` (``(n^2)!`` of them)."""
    if n > 3:
        raise ValueError("pair-bijection search is only feasible for n <= 3")
    pairs = [(x, y) for x in range(n) for y in range(n)]
    found = []
    for perm in itertools.permutations(range(n * n)):
        if any(perm[perm[p]] != p for p in range(n * n)):
            continue
        S = SolutionTable.from_rows([[pairs[perm[x * n + y]] for y in range(n)] for x in range(n)])
        if is_nondegenerate(S) and is_symmetric(S):
            found.append(S)
    return sorted(found, key=SolutionTable.flat)


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def canonical_form(S: SolutionTable) -> SolutionTable:
    """Lexicographically least relabelling among those that list elements by
    increasing isomorphism-invariant signature.

    The signature is preserved by isomorphisms, so isomorphic solutions
    give identical results.
    """
    sig = element_signature(S)
    levels = sorted(set(sig))
    groups = [[x for x in range(S.n) if sig[x] == s] for s in levels]
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        order = [x for part in choice for x in part]
        phi = [0] * S.n
        for new, old in enumerate(order):
            phi[old] = new
        T = S.relabel(phi)
        if best is None or T.flat() < best.flat():
            best = T
    return best


def enumerate_solutions(n: int, up_to_iso: bool = True, jobs: int = 1) -> SolutionCensus:
    raw = solutions_by_g_families(n, jobs)
    if not up_to_iso:
        return SolutionCensus(n, raw, len(raw), len({canonical_form(S) for S in raw}))
    reps = sorted({canonical_form(S) for S in raw}, key=SolutionTable.flat)
    return SolutionCensus(n, reps, len(raw), len(reps))


def census_lines(census: SolutionCensus) -> list[str]:
    lines = [dumps(solution_document(S)) for S in census.classes]
    lines.append(dumps({"n": census.n, "raw_count": census.raw_count, "iso_count": census.iso_count}))
    return lines


def write_census(census: SolutionCensus, path: Union[str, Path]) -> None:
    Path(path).write_text("\n".join(census_lines(census)) + "\n", encoding="utf-8")


def read_census(path: Union[str, Path]) -> tuple[list[dict], Optional[dict]]:
    """Solution documents and the trailing summary record of a census file."""
    docs, summary = [], None
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        if "kind" in rec:
            docs.append(rec)
        else:
            summary = rec
    return docs, summary


# ---------------------------------------------------------------------------
# word-level oracles
# ---------------------------------------------------------------------------

def brute_left_divisors(u: Sequence[int], C: ComplementSystem) -> list[tuple[int, ...]]:
    """One representative word per left divisor of ``u``, by prefix search."""
    u = tuple(u)
    if len(u) > 8:
        raise ValueError("brute_left_divisors is limited to words of length <= 8")
    reps = [()]
    level = [()]
    for _ in range(len(u)):
        nxt = []
        for w in level:
            for a in range(C.n):
                cand = w + (a,)
                if not left_divides_word(cand, u, C):
                    continue
                if not any(words_equal(cand, r, C) for r in nxt):
                    nxt.append(cand)
        reps.extend(nxt)
        level = nxt
    return reps


def brute_head(u: Sequence[int], C: ComplementSystem) -> tuple[int, ...]:
    """Longest left divisor of ``u`` that also left-divides ``Delta``."""
    delta = right_lcm(range(C.n), C)
    simple_divs = [w for w in brute_left_divisors(u, C) if left_divides_word(w, delta, C)]
    longest = max(len(w) for w in simple_divs)
    top = [w for w in simple_divs if len(w) == longest]
    if len(top) != 1:
        raise AssertionError(f"{len(top)} maximal simple divisors")
    return top[0]


def brute_normal_form(u: Sequence[int], C: ComplementSystem) -> list[tuple[int, ...]]:
    factors = []
    u = tuple(u)
    while u:
        h = brute_head(u, C)
        factors.append(h)
        u = reverse_right(h, u, C)[0]
    return factors


# ---------------------------------------------------------------------------
# property suite
# ---------------------------------------------------------------------------

@dataclass
class PropertyReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list[tuple[str, str]]:
        return [(name, detail) for name, ok, detail in self.checks if not ok]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
        }


def run_property_suite(S: SolutionTable, depth: int = 2) -> PropertyReport:
    """Run every cross-module invariant on ``S`` and collect pass/fail entries.

    ``depth`` bounds the word length used when certifying foldings.
    """
    # imported here: folding and parabolic sit above this module
    from .folding import decomposition_folding, find_foldings, product_lattice_failures, verify_theorem_B
    from .parabolic import (
        delta_classes,
        f_orbits,
        g_orbits,
        is_decomposable,
        is_delta_pure,
        is_standard_parabolic,
        parabolic_delta_of,
        verify_theorem_A,
    )
    from .solution import invariant_subsets

    rep = PropertyReport()

    def guarded(name, fn):
        try:
            ok, detail = fn()
        except (AssertionError, ArithmeticError, ValueError, RuntimeError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rep.add(name, ok, detail)

    rep.add("solution axioms", is_solution(S))
    q = check_qybe(S)
    rep.add("qybe matches braid", q["qybe"] == is_braided(S))
    rep.add("unique fixed partner", all(len(p) == 1 for p in fixed_partners(S)))
    guarded("presentation round trip",
            lambda: (solution_from_presentation(presentation_of(S)) == S, ""))
    guarded("canonical form", lambda: (
        canonical_form(canonical_form(S)) == canonical_form(S)
        and isomorphic(S, canonical_form(S)) is not None, ""))

    try:
        lat = build_lattice(S)
    except (ValueError, RuntimeError) as exc:
        rep.add("lattice build", False, str(exc))
        return rep
    n = S.n
    C = lat.C
    rep.add("lattice size 2^n", len(lat) == 2 ** n, f"{len(lat)}")
    rep.add("x_r indexing is a bijection", len(lat.by_r) == 2 ** n)

    def divisibility_oracle():
        for s in lat:
            for t in lat:
                if lat.left_divides(s, t) != left_divides_word(s.word, t.word, C):
                    return False, f"left {s!r} {t!r}"
                if lat.right_divides(s, t) != right_divides_word(s.word, t.word, C):
                    return False, f"right {s!r} {t!r}"
        return True, ""

    guarded("mask divisibility matches reversing", divisibility_oracle)
    rep.add("join length additivity", all(
        len(lat.join(s, t)) == bin(s.ell | t.ell).count("1") for s in lat for t in lat))
    rep.add("Delta balanced", lat.is_balanced(lat.delta))
    rep.add("atoms divide Delta on both sides", all(
        left_divides_word((a,), lat.delta.word, C) and right_divides_word((a,), lat.delta.word, C)
        for a in range(n)))
    rep.add("balanced implies x_ell == x_r", all(s.ell == s.r for s in lat if lat.is_balanced(s)))
    guarded("brute divisors of Delta", lambda: (
        len(brute_left_divisors(lat.delta.word, C)) == 2 ** n, ""))

    inv = invariant_subsets(S)

    def invariant_parabolics():
        for Y in inv:
            parabolic_delta_of(lat, Y)
            if is_standard_parabolic(lat, Y) is None:
                return False, f"{Y}"
        return True, ""

    guarded("invariant subsets give parabolics", invariant_parabolics)
    guarded("parabolic supports are the invariant subsets", lambda: (verify_theorem_A(lat), ""))
    dc = delta_classes(lat)
    rep.add("Delta-class identities", dc.ok, str(dc.flags()))
    rep.add("Delta-classes are f-orbits", list(dc.classes) == f_orbits(S))
    rep.add("g-orbits equal f-orbits", g_orbits(S) == f_orbits(S))
    guarded("decomposable iff not Delta-pure",
            lambda: (is_decomposable(S) != is_delta_pure(lat), ""))
    if is_square_free(S) and n >= 2:
        rep.add("square-free implies decomposable", is_decomposable(S))
    guarded("decomposable iff strong trivial 2-folding", lambda: (verify_theorem_B(lat, depth=depth), ""))
    if is_decomposable(S):
        guarded("product lattice identities", lambda: (
            not product_lattice_failures(lat), ", ".join(product_lattice_failures(lat))))
        guarded("decomposition folding", lambda: (
            decomposition_folding(lat, f_orbits(S)[0][0], depth=depth).strong, ""))
    guarded("foldings certified", lambda: (
        all(r.induced.n == r.k for r in find_foldings(lat, depth=depth)), ""))
    return rep
