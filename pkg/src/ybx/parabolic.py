"""
Standard parabolic subgroups, decomposability and Delta-classes.

An invariant subset ``Y`` gives the balanced simple ``delta = lcm(Y)`` whose
divisors are exactly the simples of the submonoid ``M_Y`` generated by
``Y``; conversely the support of such a ``delta`` is invariant.  The
functions here compute both sides of that correspondence independently so
that it can be checked on concrete solutions.

Conjugates of standard parabolic subgroups are not computed: conjugating by
``g`` only relabels the solution, giving an isomorphic one.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import LatticeError, SolutionError, TheoremViolation
from .garside import DivisorLattice, Simple, lattice_of, words_equal
from .solution import (
    SolutionTable,
    invariant_subsets,
    is_invariant,
    mask_elements,
    require_solution,
    subset_mask,
)


@dataclass(frozen=True)
class ParabolicDescriptor:
    delta: Simple
    support: tuple[int, ...]


@dataclass(frozen=True)
class DeltaClassReport:
    classes: tuple[tuple[int, ...], ...]
    class_deltas: tuple[Simple, ...]
    product_ok: bool
    commute_ok: bool
    gcd_trivial_ok: bool

    @property
    def ok(self) -> bool:
        return self.product_ok and self.commute_ok and self.gcd_trivial_ok

    def flags(self) -> dict:
        return {
            "product": self.product_ok,
            "commute": self.commute_ok,
            "gcd_trivial": self.gcd_trivial_ok,
        }


def _solution(obj) -> SolutionTable:
    return obj.solution if isinstance(obj, DivisorLattice) else obj


def simples_in_submonoid(lat: DivisorLattice, Y: Iterable[int]) -> set:
    """``Div(Delta) & M_Y`` as a set of simples.

    Found by extending simples one letter of ``Y`` at a time; prefixes of a
    simple are simple, so this reaches every simple expressible over ``Y``
    whether or not ``Y`` is invariant.
    """
    Y = sorted(set(Y))
    seen = {lat.identity}
    frontier = [lat.identity]
    while frontier:
        nxt = []
        for s in frontier:
            for y in Y:
                t = lat.index_of(s.word + (y,))
                if t is not None and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def member_of_MY(lat: DivisorLattice, s: Simple, Y: Iterable[int]) -> bool:
    """Does the simple ``s`` lie in the submonoid generated by ``Y``?

    For invariant ``Y`` this is ``x_ell(s) <= Y``, equivalently
    ``x_r(s) <= Y``; both are tested.  When ``Y`` is not invariant the two
    mask tests can disagree, and the word-level search decides.
    """
    Y = tuple(Y)
    m = subset_mask(Y)
    by_left = s.ell & ~m == 0
    by_right = s.r & ~m == 0
    if by_left == by_right:
        return by_left
    if is_invariant(lat.solution, Y):
        raise LatticeError(f"x_ell and x_r membership disagree for {s!r} in invariant {Y}")
    return s in simples_in_submonoid(lat, Y)


def parabolic_delta_of(lat, Y: Iterable[int]) -> Simple:
    """``lcm(Y)`` for an invariant ``Y``, checked to be balanced with support ``Y``."""
    lat = lattice_of(lat)
    Y = tuple(sorted(set(Y)))
    if not Y or not is_invariant(lat.solution, Y):
        raise SolutionError(f"{Y} is not an invariant subset")
    delta = lat.simple(Y)
    witness = lat.balance_witness(delta)
    if witness is not None:
        raise TheoremViolation(f"lcm of invariant {Y} is not balanced: {witness!r}")
    if lat.support(delta) != frozenset(Y):
        raise TheoremViolation(f"support of lcm({Y}) differs from {Y}")
    return delta


def is_standard_parabolic(lat, Y: Iterable[int]) -> Optional[ParabolicDescriptor]:
    """Descriptor if ``Y`` is the support of a standard parabolic submonoid.

    Requires ``delta = lcm(Y)`` balanced and ``Div(delta) = Div(Delta) & M_Y``,
    with the right-hand side computed at word level.
    """
    lat = lattice_of(lat)
    Y = tuple(sorted(set(Y)))
    if not Y:
        return None
    delta = lat.simple(Y)
    if not lat.is_balanced(delta):
        return None
    if set(lat.left_divisors(delta)) != simples_in_submonoid(lat, Y):
        return None
    return ParabolicDescriptor(delta, Y)


def standard_parabolics(S) -> list[ParabolicDescriptor]:
    """All nonempty supports of standard parabolic submonoids, by size then lexicographic."""
    lat = lattice_of(S)
    found = []
    for mask in range(1, 1 << lat.n):
        d = is_standard_parabolic(lat, mask_elements(mask))
        if d is not None:
            found.append(d)
    found.sort(key=lambda d: (len(d.support), d.support))
    return found


def verify_theorem_A(S) -> bool:
    """Invariant subsets and supports of standard parabolics coincide.

    Both directions are checked: each invariant subset has a balanced lcm
    with ``Div(delta) = Div(Delta) & M_Y``, and the support of every
    standard parabolic is invariant.
    """
    lat = lattice_of(S)
    inv = invariant_subsets(lat.solution)
    for Y in inv:
        parabolic_delta_of(lat, Y)
        if is_standard_parabolic(lat, Y) is None:
            return False
    supports = [d.support for d in standard_parabolics(lat)]
    if not all(is_invariant(lat.solution, Y) for Y in supports):
        return False
    return sorted(inv) == sorted(supports)


# ---------------------------------------------------------------------------
# orbits and decomposability
# ---------------------------------------------------------------------------

def _orbits(n: int, perms) -> list[tuple[int, ...]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for x in range(n):
            parent[find(x)] = find(p[x])
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(tuple(g) for g in groups.values())


def f_orbits(S) -> list[tuple[int, ...]]:
    """Orbits of the group generated by the ``f_x``, ordered by least element."""
    S = _solution(S)
    require_solution(S)
    orbits = _orbits(S.n, [S.f(x) for x in range(S.n)])
    g = _orbits(S.n, [S.g(x) for x in range(S.n)])
    if g != orbits:
        warnings.warn(f"g-orbits {g} differ from f-orbits {orbits}", RuntimeWarning)
    return orbits


def g_orbits(S) -> list[tuple[int, ...]]:
    S = _solution(S)
    return _orbits(S.n, [S.g(x) for x in range(S.n)])


def invariant_bipartitions(S) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Splittings ``X = Y | Z`` into nonempty disjoint invariant subsets."""
    S = _solution(S)
    inv = set(invariant_subsets(S))
    full = set(range(S.n))
    out = []
    for Y in sorted(inv):
        Z = tuple(sorted(full - set(Y)))
        if Z and Z in inv and Y < Z:
            out.append((Y, Z))
    return out


def is_decomposable(S) -> bool:
    """True iff the ``f``-action has at least two orbits.

    Cross-checked against the existence of an invariant bipartition.
    """
    S = _solution(S)
    by_orbits = len(f_orbits(S)) >= 2
    by_subsets = bool(invariant_bipartitions(S))
    if by_orbits != by_subsets:
        raise TheoremViolation(
            f"f-orbit criterion says {by_orbits}, invariant bipartitions say {by_subsets}"
        )
    return by_orbits


def _complement_closure(lat: DivisorLattice, x: int) -> int:
    rc = lat.C.rc
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for a in range(lat.n):
            if a != y:
                z = rc[a][y]
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return subset_mask(seen)


def delta_classes(S) -> DeltaClassReport:
    """Group atoms by ``Delta_x``, the lcm of all complements ``b\\x``.

    ``b\\x`` for a word ``b`` is obtained by applying single-atom complements
    letter by letter, so closing ``{x}`` under ``y -> a\\y`` reaches every
    such complement.
    """
    lat = lattice_of(S)
    closures = [_complement_closure(lat, x) for x in range(lat.n)]
    groups = {}
    for x, m in enumerate(closures):
        groups.setdefault(m, []).append(x)
    classes = sorted(tuple(g) for g in groups.values())
    for cls in classes:
        if closures[cls[0]] != subset_mask(cls):
            raise TheoremViolation(f"complement closure of x{cls[0] + 1} is not its class")
    deltas = tuple(lat.simple(cls) for cls in classes)

    product = tuple(a for d in deltas for a in d.word)
    product_ok = words_equal(product, lat.delta.word, lat.C)
    commute_ok = all(
        words_equal(di.word + dj.word, dj.word + di.word, lat.C)
        for i, di in enumerate(deltas)
        for dj in deltas[i + 1:]
    )
    one = lat.identity
    gcd_ok = all(
        lat.meet(di, dj) == one and lat.right_meet(di, dj) == one
        for i, di in enumerate(deltas)
        for dj in deltas[i + 1:]
    )
    return DeltaClassReport(tuple(classes), deltas, product_ok, commute_ok, gcd_ok)


def is_delta_pure(S) -> bool:
    """A single Delta-class; must coincide with indecomposability."""
    pure = len(delta_classes(S).classes) == 1
    if pure == is_decomposable(_solution(S)):
        raise TheoremViolation("Delta-purity does not match indecomposability")
    return pure


def analysis_report(S) -> dict:
    """JSON-ready analysis (1-based)."""
    lat = lattice_of(S)
    sol = lat.solution
    dc = delta_classes(lat)

    def one_based(Y):
        return [a + 1 for a in Y]

    return {
        "invariant_subsets": [one_based(Y) for Y in invariant_subsets(sol)],
        "parabolics": [
            {"support": one_based(d.support), "delta_word": one_based(d.delta.word)}
            for d in standard_parabolics(lat)
        ],
        "decomposable": is_decomposable(sol),
        "delta_pure": is_delta_pure(lat),
        "delta_classes": {
            "classes": [one_based(c) for c in dc.classes],
            "deltas": [one_based(d.word) for d in dc.class_deltas],
            "flags": dc.flags(),
        },
    }
