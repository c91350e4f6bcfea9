"""
Garside submonoids generated by sets of simples, induced solutions and foldings.

A set ``D`` of simples generates a Garside submonoid when it is a sublattice
of ``Div(Delta)`` for both divisibilities, is closed under left and right
complements, and for ``x, y`` in ``D`` the left and right gcd of ``xy``
with the top of ``D`` stay in ``D``.  Given a partition of the atoms,
each block's Garside element ``Delta_i`` is computed inside that framework;
when the ``Delta_i`` are themselves the atoms of a Garside submonoid closed
under complements, they carry an induced solution, the folding.

The reverse construction (substituting solutions into the atoms of a
folding to build larger solutions) is not attempted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .documents import solution_document
from .errors import FoldingError, SolutionError, TheoremViolation
from .garside import DivisorLattice, Simple, build_lattice, lattice_of, popcount, words_equal
from .parabolic import f_orbits, is_decomposable, is_standard_parabolic, standard_parabolics
from .solution import (
    SolutionTable,
    is_invariant,
    is_solution,
    isomorphic,
    mask_elements,
    restrict,
    trivial_solution,
)

DEFAULT_DEPTH = 4


@dataclass(frozen=True)
class GarsideGeneratingSet:
    elements: frozenset
    atoms: tuple[Simple, ...]
    delta: Simple


@dataclass(frozen=True)
class FoldingReport:
    partition: tuple[tuple[int, ...], ...]
    block_deltas: tuple[Simple, ...]
    induced: SolutionTable
    strong: bool
    block_subgroup_atomic: tuple[bool, ...]

    @property
    def k(self) -> int:
        return len(self.partition)

    def to_json(self) -> dict:
        return {
            "partition": [[a + 1 for a in block] for block in self.partition],
            "deltas": [[a + 1 for a in d.word] for d in self.block_deltas],
            "induced": solution_document(self.induced),
            "strong": self.strong,
        }


# ---------------------------------------------------------------------------
# Garside generating sets
# ---------------------------------------------------------------------------

def _top(lat: DivisorLattice, D) -> Simple:
    ell = 0
    for s in D:
        ell |= s.ell
    return lat.simples[ell]


def _gcds_with(lat: DivisorLattice, x: Simple, y: Simple, top: Simple) -> tuple[Simple, Simple]:
    head, rhead = lat.product_heads(x, y)
    return lat.simples[head.ell & top.ell], lat.by_r[rhead.r & top.r]


def minimal_elements(lat: DivisorLattice, D) -> tuple[Simple, ...]:
    """Minimal non-identity elements of ``D`` for left divisibility."""
    nontrivial = [s for s in D if s.ell]
    atoms = [
        s for s in nontrivial
        if not any(t != s and lat.left_divides(t, s) for t in nontrivial)
    ]
    return tuple(sorted(atoms, key=lambda s: (popcount(s.ell), s.ell)))


def garside_failure(lat: DivisorLattice, D: Iterable[Simple]) -> Optional[str]:
    """First failed condition for ``D`` to generate a Garside submonoid, else ``None``."""
    D = frozenset(D)
    if not D:
        return "empty set"
    for x in D:
        for y in D:
            for name, op in (("join", lat.join), ("meet", lat.meet),
                             ("right join", lat.right_join), ("right meet", lat.right_meet)):
                if op(x, y) not in D:
                    return f"not closed under {name}: {x!r}, {y!r}"
    for x in D:
        for y in D:
            if lat.right_complement(x, y) not in D:
                return f"not closed under right complement: {x!r}, {y!r}"
            if lat.left_complement(x, y) not in D:
                return f"not closed under left complement: {x!r}, {y!r}"
    top = _top(lat, D)
    for x in D:
        for y in D:
            left, right = _gcds_with(lat, x, y, top)
            if left not in D:
                return f"left gcd of product with top leaves D: {x!r}, {y!r}"
            if right not in D:
                return f"right gcd of product with top leaves D: {x!r}, {y!r}"
    return None


def is_garside_generating_set(lat, D: Iterable[Simple]) -> bool:
    return garside_failure(lattice_of(lat), D) is None


def garside_closure(lat: DivisorLattice, generators: Iterable[Simple]) -> frozenset:
    """Smallest set containing ``1`` and ``generators`` closed under the lattice operations,
    complements and product gcds with its own top."""
    D = {lat.identity, *generators}
    while True:
        top = _top(lat, D)
        new = set()
        items = list(D)
        for x in items:
            for y in items:
                new.update((
                    lat.join(x, y), lat.meet(x, y),
                    lat.right_join(x, y), lat.right_meet(x, y),
                    lat.right_complement(x, y), lat.left_complement(x, y),
                ))
                new.update(_gcds_with(lat, x, y, top))
        if new <= D:
            return frozenset(D)
        D |= new


def generated_garside_set(lat: DivisorLattice, generators: Iterable[Simple]) -> Optional[GarsideGeneratingSet]:
    """The Garside closure of ``generators`` if it is valid with a two-sided maximum."""
    D = garside_closure(lat, generators)
    if garside_failure(lat, D) is not None:
        return None
    top = _top(lat, D)
    right_top = lat.by_r[_right_top_mask(D)]
    if top != right_top:
        return None
    return GarsideGeneratingSet(D, minimal_elements(lat, D), top)


def _right_top_mask(D) -> int:
    r = 0
    for s in D:
        r |= s.r
    return r


def atomic_garside_subgroup(lat, Xi: Iterable[int]) -> Optional[GarsideGeneratingSet]:
    """Garside submonoid generated by the atoms ``Xi``, if its atom set is exactly ``Xi``."""
    lat = lattice_of(lat)
    Xi = sorted(set(Xi))
    if not Xi:
        raise ValueError("empty block")
    G = generated_garside_set(lat, [lat.atom(a) for a in Xi])
    if G is None:
        return None
    if sorted(s.ell for s in G.atoms) != sorted(1 << a for a in Xi):
        return None
    return G


# ---------------------------------------------------------------------------
# induced solutions
# ---------------------------------------------------------------------------

def induced_solution(lat, XH: Sequence[Simple]) -> SolutionTable:
    """Solution on ``XH`` with ``S_H(x, x\\z) = (z, z\\x)`` for ``x != z``.

    Labels follow the order of ``XH``.  For each ``x`` the one partner not of
    the form ``x\\z`` becomes a fixed pair.
    """
    lat = lattice_of(lat)
    XH = list(XH)
    pos = {s: i for i, s in enumerate(XH)}
    if len(pos) != len(XH):
        raise SolutionError("repeated element in XH")
    k = len(XH)
    table = [[None] * k for _ in range(k)]
    for i, x in enumerate(XH):
        for j, z in enumerate(XH):
            if i == j:
                continue
            y = lat.right_complement(x, z)
            t = lat.right_complement(z, x)
            if y not in pos or t not in pos:
                raise SolutionError(f"XH is not closed under right complement: {x!r}, {z!r}")
            iy, it = pos[y], pos[t]
            if table[i][iy] is not None:
                raise TheoremViolation(f"complements of {x!r} are not injective")
            table[i][iy] = (j, it)
    for i in range(k):
        free = [j for j in range(k) if table[i][j] is None]
        if len(free) != 1:
            raise TheoremViolation(f"{XH[i]!r} has {len(free)} unmatched partners")
        table[i][free[0]] = (i, free[0])
    S = SolutionTable.from_rows(table)
    if not is_solution(S):
        raise TheoremViolation("induced table is not a non-degenerate symmetric solution")
    return S


def restriction_solution(lat, XH: Iterable[int]) -> SolutionTable:
    """``S`` restricted to an atomic Garside submonoid's atoms ``XH``.

    Pairs that ``S`` sends outside ``XH x XH`` are completed as fixed pairs;
    for invariant ``XH`` nothing is completed and this is ``restrict(S, XH)``.
    """
    lat = lattice_of(lat)
    XH = sorted(set(XH))
    if atomic_garside_subgroup(lat, XH) is None:
        raise SolutionError(f"{tuple(XH)} is not the atom set of an atomic Garside submonoid")
    S = lat.solution
    pos = {a: i for i, a in enumerate(XH)}
    rows = []
    for x in XH:
        row = []
        for y in XH:
            a, b = S(x, y)
            row.append((pos[a], pos[b]) if a in pos and b in pos else (pos[x], pos[y]))
        rows.append(row)
    R = SolutionTable.from_rows(rows)
    if R != induced_solution(lat, [lat.atom(a) for a in XH]):
        raise TheoremViolation("restriction differs from the induced solution")
    if is_invariant(S, XH) and R != restrict(S, XH):
        raise TheoremViolation("restriction differs from restrict() on an invariant set")
    return R


def certify_embedding(lat: DivisorLattice, XH: Sequence[Simple], induced: SolutionTable,
                      depth: int = DEFAULT_DEPTH) -> None:
    """Check the map ``G(XH, S_H) -> G`` on relations and on short words.

    Every defining relation of ``induced`` must hold in ``M``, its Garside
    element must map to ``Delta``, and two words over ``XH`` of length at
    most ``depth`` must be equal in the induced monoid exactly when their
    images are equal in ``M``.
    """
    words = [s.word for s in XH]

    def image(u):
        return tuple(a for i in u for a in words[i])

    for x in range(induced.n):
        for y in range(induced.n):
            z, t = induced(x, y)
            if not words_equal(image((x, y)), image((z, t)), lat.C):
                raise TheoremViolation(f"relation {(x, y)} = {(z, t)} fails in M")
    sub = build_lattice(induced)
    if not words_equal(image(sub.delta.word), lat.delta.word, lat.C):
        raise TheoremViolation("Garside element of the folding differs from Delta")
    seen = {}
    for length in range(depth + 1):
        for u in itertools.product(range(induced.n), repeat=length):
            key_sub = sub.normal_key(u)
            key_big = lat.normal_key(image(u))
            if seen.setdefault(key_big, key_sub) != key_sub:
                raise TheoremViolation(f"word {u} collapses in M")
    if len(set(seen.values())) != len(seen):
        raise TheoremViolation("distinct images for equal words")


# ---------------------------------------------------------------------------
# foldings
# ---------------------------------------------------------------------------

def set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of ``range(n)``, blocks in order of least element."""
    def rec(i, blocks):
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def proper_partitions(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Proper partitions (``1 < k < n``) ordered by block count, then lexicographically."""
    parts = [p for p in set_partitions(n) if 1 < len(p) < n]
    return sorted(parts, key=lambda p: (len(p), p))


def _check_partition(n: int, partition, allow_improper: bool) -> tuple[tuple[int, ...], ...]:
    blocks = tuple(tuple(sorted(set(b))) for b in partition)
    flat = sorted(a for b in blocks for a in b)
    if flat != list(range(n)) or any(not b for b in blocks):
        raise ValueError(f"{partition} is not a partition of the {n} atoms")
    if not allow_improper and not 1 < len(blocks) < n:
        raise FoldingError(f"partition into {len(blocks)} blocks is not proper")
    return blocks


def folding_for_partition(S, partition, *, depth: int = DEFAULT_DEPTH,
                          allow_improper: bool = False, _cache: Optional[dict] = None) -> FoldingReport:
    """Test one partition; raises :class:`FoldingError` naming the first failed condition."""
    lat = lattice_of(S)
    blocks = _check_partition(lat.n, partition, allow_improper)
    cache = {} if _cache is None else _cache

    def block_group(b):
        if b not in cache:
            cache[b] = atomic_garside_subgroup(lat, b)
        return cache[b]

    groups = []
    for b in blocks:
        G = block_group(b)
        if G is None:
            raise FoldingError(
                f"block {[a + 1 for a in b]} does not generate an atomic Garside submonoid"
            )
        groups.append(G)
    deltas = tuple(G.delta for G in groups)
    dset = set(deltas)
    for x in deltas:
        for z in deltas:
            if x == z:
                continue
            if lat.right_complement(x, z) not in dset:
                raise FoldingError("block Garside elements are not closed under right complement")
            if lat.left_complement(x, z) not in dset:
                raise FoldingError("block Garside elements are not closed under left complement")
    G = generated_garside_set(lat, deltas)
    if G is None:
        raise FoldingError("block Garside elements do not generate a Garside submonoid")
    if set(G.atoms) != dset:
        raise FoldingError("block Garside elements are not the atoms of their Garside submonoid")
    if G.delta != lat.delta:
        raise TheoremViolation("Garside element of the folding differs from Delta")
    induced = induced_solution(lat, deltas)
    certify_embedding(lat, deltas, induced, depth)
    strong = all(is_standard_parabolic(lat, b) is not None for b in blocks)
    return FoldingReport(blocks, deltas, induced, strong, tuple(True for _ in blocks))


def find_foldings(S, partitions: Optional[Iterable] = None, *, depth: int = DEFAULT_DEPTH) -> list[FoldingReport]:
    """All foldings over the given partitions (default: every proper partition)."""
    lat = lattice_of(S)
    parts = proper_partitions(lat.n) if partitions is None else list(partitions)
    cache = {}
    found = []
    for p in parts:
        try:
            found.append(folding_for_partition(lat, p, depth=depth, _cache=cache))
        except FoldingError:
            continue
    return found


def _covers(n: int, supports: list[tuple[int, ...]]):
    """Partitions of ``range(n)`` whose blocks all come from ``supports``."""
    def rec(remaining, chosen):
        if not remaining:
            yield tuple(chosen)
            return
        first = min(remaining)
        for Y in supports:
            if Y[0] == first and set(Y) <= remaining:
                chosen.append(Y)
                yield from rec(remaining - set(Y), chosen)
                chosen.pop()

    yield from rec(set(range(n)), [])


def find_strong_foldings(S, *, depth: int = DEFAULT_DEPTH) -> list[FoldingReport]:
    """Foldings whose blocks are all supports of standard parabolic submonoids."""
    lat = lattice_of(S)
    supports = [d.support for d in standard_parabolics(lat)]
    parts = [p for p in _covers(lat.n, supports) if 1 < len(p) < lat.n]
    parts.sort(key=lambda p: (len(p), p))
    return [r for r in find_foldings(lat, parts, depth=depth) if r.strong]


def decomposition_folding(S, block: Union[int, Iterable[int]], *, depth: int = DEFAULT_DEPTH) -> FoldingReport:
    """Two-block strong folding ``Y | X - Y`` of a decomposable solution.

    ``block`` is either an atom, in which case ``Y`` is its ``f``-orbit, or
    the set ``Y`` itself; both ``Y`` and its complement must be invariant.
    """
    lat = lattice_of(S)
    sol = lat.solution
    if isinstance(block, int):
        Y = next(o for o in f_orbits(sol) if block in o)
    else:
        Y = tuple(sorted(set(block)))
    Z = tuple(a for a in range(lat.n) if a not in Y)
    if not Z or not Y:
        raise SolutionError("need a splitting into two nonempty sets")
    if not is_invariant(sol, Y) or not is_invariant(sol, Z):
        raise SolutionError(
            f"{[a + 1 for a in Y]} | {[a + 1 for a in Z]} is not a splitting into invariant subsets"
        )
    report = folding_for_partition(lat, (Y, Z), depth=depth, allow_improper=True)
    dy, dz = report.block_deltas
    if not (words_equal(dy.word + dz.word, lat.delta.word, lat.C)
            and words_equal(dz.word + dy.word, lat.delta.word, lat.C)):
        raise TheoremViolation("block Garside elements do not multiply to Delta in both orders")
    if not report.strong or report.induced != trivial_solution(2):
        raise TheoremViolation("decomposition folding is not a strong trivial folding")
    return report


def product_lattice_failures(S) -> list[str]:
    """Check the lattice ``{Delta_1^e1 ... Delta_k^ek}`` built on the ``f``-orbits.

    Meets and joins must be the componentwise min and max of exponent
    vectors, and ``Delta^(e+e') ^ Delta`` the componentwise max.  Returns
    the failed identities (empty when all hold).
    """
    lat = lattice_of(S)
    orbits = f_orbits(lat.solution)
    deltas = [lat.simple(o) for o in orbits]
    k = len(deltas)
    vectors = list(itertools.product((0, 1), repeat=k))

    def word(exps):
        return tuple(a for d, e in zip(deltas, exps) for _ in range(e) for a in d.word)

    elem = {}
    failures = []
    for v in vectors:
        s = lat.index_of(word(v))
        if s is None:
            failures.append(f"product {v} is not simple")
            return failures
        elem[v] = s
    if garside_failure(lat, set(elem.values())) is not None:
        failures.append("product lattice is not a Garside generating set")
    for v, w in itertools.product(vectors, repeat=2):
        lo = tuple(map(min, v, w))
        hi = tuple(map(max, v, w))
        if not words_equal(lat.meet(elem[v], elem[w]).word, elem[lo].word, lat.C):
            failures.append(f"meet {v} {w}")
        if not words_equal(lat.join(elem[v], elem[w]).word, elem[hi].word, lat.C):
            failures.append(f"join {v} {w}")
        summed = tuple(map(lambda a, b: a + b, v, w))
        h = lat.meet(lat.head(word(summed)), lat.delta)
        if not words_equal(h.word, elem[hi].word, lat.C):
            failures.append(f"head {v} {w}")
    return failures


def strong_trivial_bipartition_foldings(S, *, depth: int = DEFAULT_DEPTH) -> list[FoldingReport]:
    """Strong 2-block foldings whose induced solution is the trivial one."""
    lat = lattice_of(S)
    supports = [d.support for d in standard_parabolics(lat)]
    triv = trivial_solution(2)
    out = []
    for Y in supports:
        Z = tuple(a for a in range(lat.n) if a not in Y)
        if not Z or Y[0] != 0 or Z not in supports:
            continue
        try:
            r = folding_for_partition(lat, (Y, Z), depth=depth, allow_improper=True)
        except FoldingError:
            continue
        if r.strong and isomorphic(r.induced, triv) is not None:
            out.append(r)
    return out


def verify_theorem_B(S, *, depth: int = DEFAULT_DEPTH) -> bool:
    """Decomposable iff there is a strong trivial folding onto two elements.

    When decomposable, the product lattice over the ``f``-orbits must also
    pass all its identities.
    """
    lat = lattice_of(S)
    decomposable = is_decomposable(lat.solution)
    has_folding = bool(strong_trivial_bipartition_foldings(lat, depth=depth))
    if decomposable and product_lattice_failures(lat):
        return False
    return decomposable == has_folding
