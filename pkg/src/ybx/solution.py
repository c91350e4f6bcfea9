"""
Finite set-theoretic solutions of the quantum Yang-Baxter equation.

A solution on ``X = {0, ..., n-1}`` is stored as its full table
``S[x][y] = (g_x(y), f_y(x))``.  Everything in the Python API is 0-based;
the JSON documents (see :mod:`ybx.documents`) are 1-based.

The module covers the axioms (non-degenerate, involutive, braided,
symmetric), the R-matrix form of the QYBE, invariant subsets and
restriction, isomorphism testing and the quadratic presentation
``xy = g_x(y) f_y(x)`` of the structure monoid in both directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import SolutionError

Pair = tuple[int, int]
Word2 = tuple[int, int]
# bijection old label -> new label
IsoWitness = tuple[int, ...]


def is_permutation(images: Sequence[int], n: Optional[int] = None) -> bool:
    n = len(images) if n is None else n
    return len(images) == n and sorted(images) == list(range(n))


def perm_inverse(images: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(images)
    for i, j in enumerate(images):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True)
class SolutionTable:
    """The map ``S`` on ``X x X`` as an ``n x n`` table of pairs.

    Construction checks that the table is square, in range, and that ``S``
    is a bijection of ``X x X``; the solution axioms are checked separately.
    """

    table: tuple[tuple[Pair, ...], ...]

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise SolutionError("empty table")
        seen = {}
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise SolutionError(f"row {i + 1} has length {len(row)}, expected {n}")
            for j, (a, b) in enumerate(row):
                if not (0 <= a < n and 0 <= b < n):
                    raise SolutionError(f"entry ({i + 1},{j + 1}) out of range")
                if (a, b) in seen:
                    i0, j0 = seen[(a, b)]
                    raise SolutionError(
                        f"not a bijection on pairs: ({i0 + 1},{j0 + 1}) and "
                        f"({i + 1},{j + 1}) both map to ({a + 1},{b + 1})"
                    )
                seen[(a, b)] = (i, j)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Sequence[int]]]) -> "SolutionTable":
        return cls(tuple(tuple((int(a), int(b)) for a, b in row) for row in rows))

    @classmethod
    def from_maps(cls, g: Sequence[Sequence[int]], f: Sequence[Sequence[int]]) -> "SolutionTable":
        """Build ``S(x, y) = (g[x][y], f[y][x])``."""
        n = len(g)
        return cls(tuple(tuple((g[x][y], f[y][x]) for y in range(n)) for x in range(n)))

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, x: int, y: int) -> Pair:
        return self.table[x][y]

    def g(self, x: int) -> tuple[int, ...]:
        """Images of ``g_x``, i.e. first coordinates along row ``x``."""
        return tuple(self.table[x][y][0] for y in range(self.n))

    def f(self, y: int) -> tuple[int, ...]:
        """Images of ``f_y``, i.e. second coordinates along column ``y``."""
        return tuple(self.table[x][y][1] for x in range(self.n))

    def relabel(self, phi: Sequence[int]) -> "SolutionTable":
        """Transport ``S`` along the bijection ``phi`` (old label -> new label)."""
        n = self.n
        rows = [[None] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                a, b = self.table[x][y]
                rows[phi[x]][phi[y]] = (phi[a], phi[b])
        return SolutionTable.from_rows(rows)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for pair in row for v in pair)

    def __repr__(self):
        return f"SolutionTable(n={self.n})"


def trivial_solution(n: int) -> SolutionTable:
    """The permutation map ``S(x, y) = (y, x)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return SolutionTable(tuple(tuple((j, i) for j in range(n)) for i in range(n)))


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def is_nondegenerate(S: SolutionTable) -> bool:
    return all(is_permutation(S.g(x)) and is_permutation(S.f(x)) for x in range(S.n))


def is_involutive(S: SolutionTable) -> bool:
    t = S.table
    return all(t[a][b] == (x, y) for x in range(S.n) for y in range(S.n) for a, b in [t[x][y]])


def _s12(t, x, y, z):
    a, b = t[x][y]
    return a, b, z


def _s23(t, x, y, z):
    b, c = t[y][z]
    return x, b, c


def is_braided(S: SolutionTable) -> bool:
    """``S12 S23 S12 == S23 S12 S23`` on all ``n**3`` triples."""
    t = S.table
    for x, y, z in itertools.product(range(S.n), repeat=3):
        lhs = _s12(t, *_s23(t, *_s12(t, x, y, z)))
        rhs = _s23(t, *_s12(t, *_s23(t, x, y, z)))
        if lhs != rhs:
            return False
    return True


def is_symmetric(S: SolutionTable) -> bool:
    return is_involutive(S) and is_braided(S)


def is_solution(S: SolutionTable) -> bool:
    """Non-degenerate and symmetric, the standing hypothesis everywhere else."""
    return is_nondegenerate(S) and is_symmetric(S)


def require_solution(S: SolutionTable) -> None:
    if not is_nondegenerate(S):
        raise SolutionError("solution is degenerate")
    if not is_involutive(S):
        raise SolutionError("solution is not involutive")
    if not is_braided(S):
        raise SolutionError("solution is not braided")


def check_qybe(S: SolutionTable) -> dict:
    """Check the R-matrix ``R = alpha o S`` on basis triples.

    Returns ``{"qybe": bool, "unitary": bool}`` where ``qybe`` is
    ``R12 R13 R23 == R23 R13 R12`` and ``unitary`` is ``R21 R == id``.
    """
    n, t = S.n, S.table

    def R(x, y):
        a, b = t[x][y]
        return b, a

    def r12(v):
        a, b = R(v[0], v[1])
        return a, b, v[2]

    def r13(v):
        a, c = R(v[0], v[2])
        return a, v[1], c

    def r23(v):
        b, c = R(v[1], v[2])
        return v[0], b, c

    qybe = all(
        r12(r13(r23(v))) == r23(r13(r12(v)))
        for v in itertools.product(range(n), repeat=3)
    )

    def r21(x, y):
        b, a = R(y, x)
        return a, b

    unitary = all(r21(*R(x, y)) == (x, y) for x in range(n) for y in range(n))
    return {"qybe": qybe, "unitary": unitary}


def is_square_free(S: SolutionTable) -> bool:
    return all(S.table[x][x] == (x, x) for x in range(S.n))


def fixed_partners(S: SolutionTable) -> list[list[int]]:
    """For each ``x`` the list of ``y`` with ``S(x, y) == (x, y)``."""
    return [[y for y in range(S.n) if S.table[x][y] == (x, y)] for x in range(S.n)]


# ---------------------------------------------------------------------------
# invariant subsets
# ---------------------------------------------------------------------------

def subset_mask(Y: Iterable[int]) -> int:
    m = 0
    for y in Y:
        m |= 1 << y
    return m


def mask_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def is_invariant(S: SolutionTable, Y: Iterable[int]) -> bool:
    Y = tuple(Y)
    m = subset_mask(Y)
    return all((m >> a) & 1 and (m >> b) & 1 for x in Y for y in Y for a, b in [S.table[x][y]])


def invariant_subsets(S: SolutionTable) -> list[tuple[int, ...]]:
    """All nonempty invariant subsets, ordered by size then lexicographically.

    Every invariant subset of a finite solution is non-degenerate; this is
    asserted on each subset returned.
    """
    require_solution(S)
    found = []
    for mask in range(1, 1 << S.n):
        Y = mask_elements(mask)
        if is_invariant(S, Y):
            if not is_nondegenerate(restrict(S, Y)):
                raise SolutionError(f"invariant subset {Y} is degenerate")
            found.append(Y)
    found.sort(key=lambda Y: (len(Y), Y))
    return found


def restrict(S: SolutionTable, Y: Iterable[int]) -> SolutionTable:
    """Restriction of ``S`` to ``Y x Y``, relabelled ``0..|Y|-1`` in increasing order."""
    Y = sorted(set(Y))
    if not Y or not is_invariant(S, Y):
        raise SolutionError(f"{tuple(Y)} is not an invariant subset")
    pos = {y: i for i, y in enumerate(Y)}
    rows = [[(pos[S.table[x][y][0]], pos[S.table[x][y][1]]) for y in Y] for x in Y]
    return SolutionTable.from_rows(rows)


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def f_orbit_sizes(S: SolutionTable) -> list[int]:
    n = S.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for y in range(n):
        for x, fx in enumerate(S.f(y)):
            parent[find(x)] = find(fx)
    roots = [find(x) for x in range(n)]
    return [roots.count(r) for r in roots]


def _cycle_type(images: Sequence[int]) -> tuple[int, ...]:
    seen = set()
    lengths = []
    for i in range(len(images)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = images[j]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths))


def element_signature(S: SolutionTable) -> list[tuple]:
    """Isomorphism-invariant data attached to each element."""
    orbit = f_orbit_sizes(S)
    partners = fixed_partners(S)
    sig = []
    for x in range(S.n):
        diag = S.table[x][x]
        sig.append((
            orbit[x],
            diag == (x, x),
            len(partners[x]),
            sum(1 for y in range(S.n) if S.table[y][x] == (y, x)),
            _cycle_type(S.g(x)),
            _cycle_type(S.f(x)),
            diag[0] == diag[1],
        ))
    return sig


def _consistent(S: SolutionTable, S2: SolutionTable, phi: Sequence[int], k: int) -> bool:
    """Is ``phi`` (defined on ``0..k-1``) compatible with ``S -> S2`` so far?"""
    t, t2 = S.table, S2.table
    image = set(phi[:k])
    for x in range(k):
        for y in range(k):
            a, b = t[x][y]
            a2, b2 = t2[phi[x]][phi[y]]
            if a < k and phi[a] != a2 or a >= k and a2 in image:
                return False
            if b < k and phi[b] != b2 or b >= k and b2 in image:
                return False
    return True


def _iso_search(S, S2, prune) -> Iterator[IsoWitness]:
    n = S.n
    sig1 = element_signature(S) if prune else [None] * n
    sig2 = element_signature(S2) if prune else [None] * n
    if prune and sorted(sig1) != sorted(sig2):
        return
    phi = [0] * n
    used = [False] * n

    def extend(k):
        if k == n:
            yield tuple(phi)
            return
        for c in range(n):
            if used[c] or sig1[k] != sig2[c]:
                continue
            phi[k] = c
            used[c] = True
            if not prune or _consistent(S, S2, phi, k + 1):
                yield from extend(k + 1)
            used[c] = False

    for cand in extend(0):
        if S.relabel(cand) == S2:
            yield cand


def isomorphic(S: SolutionTable, S2: SolutionTable, prune: bool = True) -> Optional[IsoWitness]:
    """A bijection ``phi`` with ``S2(phi x, phi y) = (phi a, phi b)``, or ``None``.

    With ``prune=False`` every one of the ``n!`` bijections is tried.
    """
    if S.n != S2.n:
        return None
    return next(_iso_search(S, S2, prune), None)


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelationSet:
    """Quadratic relations ``x_i x_j = x_k x_l`` stored as ``((i, j), (k, l))``."""

    n: int
    relations: tuple[tuple[Word2, Word2], ...]

    def __len__(self):
        return len(self.relations)

    def normalized(self) -> frozenset:
        """Relations as a set of unordered pairs, for order-free comparison."""
        return frozenset(frozenset(r) for r in self.relations)

    def __str__(self):
        return "\n".join(
            f"x{i + 1} x{j + 1} = x{k + 1} x{l + 1}" for (i, j), (k, l) in self.relations
        )


def presentation_of(S: SolutionTable) -> RelationSet:
    """The ``n(n-1)/2`` non-trivial defining relations ``xy = g_x(y) f_y(x)``."""
    require_solution(S)
    rels = set()
    for x in range(S.n):
        for y in range(S.n):
            other = S.table[x][y]
            if other != (x, y):
                rels.add(tuple(sorted([(x, y), other])))
    rels = tuple(sorted(rels))
    expected = S.n * (S.n - 1) // 2
    if len(rels) != expected:
        raise SolutionError(f"{len(rels)} non-trivial relations, expected {expected}")
    return RelationSet(S.n, rels)


def solution_from_presentation(R: RelationSet) -> SolutionTable:
    """Read ``S`` off a quadratic presentation.

    Each relation ``x_i x_j = x_k x_l`` gives ``S(i, j) = (k, l)`` and
    ``S(k, l) = (i, j)``; every pair not occurring in a relation is a fixed
    point of ``S``.
    """
    n = R.n
    expected = n * (n - 1) // 2
    if len(R.relations) != expected:
        raise SolutionError(f"{len(R.relations)} relations given, expected n(n-1)/2 = {expected}")
    S = {}
    for idx, rel in enumerate(R.relations):
        if len(rel) != 2 or any(len(w) != 2 for w in rel):
            raise SolutionError(f"relation {idx + 1}: both sides must have length 2")
        u, v = (tuple(int(c) for c in w) for w in rel)
        if not all(0 <= c < n for c in u + v):
            raise SolutionError(f"relation {idx + 1}: letter out of range")
        if u == v:
            raise SolutionError(f"relation {idx + 1} is trivial")
        for w in (u, v):
            if w in S:
                raise SolutionError(
                    f"relation {idx + 1}: word x{w[0] + 1}x{w[1] + 1} appears more than once"
                )
        S[u] = v
        S[v] = u
    rows = [[S.get((x, y), (x, y)) for y in range(n)] for x in range(n)]
    table = SolutionTable.from_rows(rows)
    try:
        require_solution(table)
    except SolutionError as exc:
        raise SolutionError(f"presentation does not give a solution: {exc}") from None
    return table
