"""
Garside structure of the structure monoid ``M = <X | xy = g_x(y) f_y(x)>``.

Words are tuples of 0-based atom indices.  Equality in ``M`` is decided by
word reversing: for distinct atoms ``a, b`` there is exactly one relation
``a a' = b b'`` with ``a'``, ``b'`` atoms, so the right complement of ``a``
by ``b`` is the single letter ``a' = g_a^{-1}(b)``.  Left complements come
from the ``f`` maps in the same way.

The divisors of the Garside element ``Delta`` are indexed by subsets of
atoms: each simple is the right lcm of a unique set ``x_ell`` of atoms and
the left lcm of a unique set ``x_r`` of the same size.  The lattice checks
both facts when it is built, and afterwards all gcd/lcm computations on
simples are bit-mask operations.  Reversing stays available as an
independent check of the mask arithmetic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import LatticeError, ReversingBudgetError
from .solution import SolutionTable, mask_elements, perm_inverse, require_solution, subset_mask

Word = tuple[int, ...]


def _default_budget(total_length: int) -> int:
    return 4 ** max(total_length, 1)


@dataclass(frozen=True)
class ComplementSystem:
    """Atom-level complement tables.

    ``rc[a][b]`` is the letter with ``a rc[a][b] = b rc[b][a]`` and
    ``lc[a][b]`` the letter with ``lc[a][b] a = lc[b][a] b``; diagonal
    entries are ``None``.
    """

    n: int
    rc: tuple[tuple[Optional[int], ...], ...]
    lc: tuple[tuple[Optional[int], ...], ...]
    budget: Optional[int] = None


def complement_system(S: SolutionTable, budget: Optional[int] = None) -> ComplementSystem:
    require_solution(S)
    n = S.n
    ginv = [perm_inverse(S.g(a)) for a in range(n)]
    finv = [perm_inverse(S.f(a)) for a in range(n)]
    rc = tuple(tuple(None if a == b else ginv[a][b] for b in range(n)) for a in range(n))
    lc = tuple(tuple(None if a == b else finv[a][b] for b in range(n)) for a in range(n))
    return ComplementSystem(n, rc, lc, budget)


def _reverse(u: Sequence[int], v: Sequence[int], comp, budget: int) -> tuple[Word, Word]:
    # push each letter of u through the current v-word
    steps = 0
    w = list(v)
    vu = []
    for a in u:
        cur = a
        out = []
        for b in w:
            steps += 1
            if steps > budget:
                raise ReversingBudgetError(
                    f"reversing exceeded {budget} steps: presentation not complemented-complete"
                )
            if cur is None:
                out.append(b)
            elif cur == b:
                cur = None
            else:
                out.append(comp[cur][b])
                cur = comp[b][cur]
        w = out
        if cur is not None:
            vu.append(cur)
    return tuple(w), tuple(vu)


def reverse_right(u: Sequence[int], v: Sequence[int], C: ComplementSystem,
                  budget: Optional[int] = None) -> tuple[Word, Word]:
    """Right-reverse ``u^-1 v`` into ``v' u'^-1``.

    Returns ``(u\\v, v\\u)``, so that ``u (u\\v) = v (v\\u)`` is the right lcm
    of ``u`` and ``v``.
    """
    if budget is None:
        budget = C.budget or _default_budget(len(u) + len(v))
    return _reverse(u, v, C.rc, budget)


def reverse_left(u: Sequence[int], v: Sequence[int], C: ComplementSystem,
                 budget: Optional[int] = None) -> tuple[Word, Word]:
    """Left-reverse ``u v^-1``; returns ``(p, q)`` with ``p u = q v`` the left lcm."""
    if budget is None:
        budget = C.budget or _default_budget(len(u) + len(v))
    p, q = _reverse(tuple(reversed(u)), tuple(reversed(v)), C.lc, budget)
    return tuple(reversed(p)), tuple(reversed(q))


def words_equal(u: Sequence[int], v: Sequence[int], C: ComplementSystem) -> bool:
    if len(u) != len(v):
        # the relations are length preserving
        return False
    a, b = reverse_right(u, v, C)
    return not a and not b


def left_divides_word(u: Sequence[int], w: Sequence[int], C: ComplementSystem) -> bool:
    """Is there ``t`` with ``w = u t`` in ``M``?"""
    return len(u) <= len(w) and not reverse_right(u, w, C)[1]


def right_divides_word(u: Sequence[int], w: Sequence[int], C: ComplementSystem) -> bool:
    """Is there ``t`` with ``w = t u`` in ``M``?"""
    return len(u) <= len(w) and not reverse_left(u, w, C)[1]


def right_lcm(A: Iterable[int], C: ComplementSystem) -> Word:
    """Word for the right lcm of the atoms in ``A``, folded in increasing order."""
    atoms = sorted(set(A))
    if not atoms:
        raise ValueError("right_lcm of an empty set")
    w: Word = (atoms[0],)
    for a in atoms[1:]:
        w = w + reverse_right(w, (a,), C)[0]
    return w


def left_lcm(A: Iterable[int], C: ComplementSystem) -> Word:
    """Word for the left lcm of the atoms in ``A``, folded in increasing order."""
    atoms = sorted(set(A))
    if not atoms:
        raise ValueError("left_lcm of an empty set")
    w: Word = (atoms[0],)
    for a in atoms[1:]:
        w = reverse_left(w, (a,), C)[0] + w
    return w


def popcount(m: int) -> int:
    return bin(m).count("1")


@dataclass(frozen=True, eq=True)
class Simple:
    """A divisor of ``Delta``, with its left and right atom sets as masks."""

    ell: int
    r: int
    word: Word = field(compare=False)

    @property
    def x_ell(self) -> frozenset:
        return frozenset(mask_elements(self.ell))

    @property
    def x_r(self) -> frozenset:
        return frozenset(mask_elements(self.r))

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        letters = "".join(f"x{a + 1}" for a in self.word) or "1"
        return f"Simple({letters}, x_ell={sorted(a + 1 for a in self.x_ell)})"


class DivisorLattice:
    """The ``2**n`` simples of the structure monoid of ``S``."""

    def __init__(self, S: SolutionTable, budget: Optional[int] = None):
        self.solution = S
        self.n = n = S.n
        self.full = (1 << n) - 1
        self.C = C = complement_system(S, budget)
        words: list[Word] = [()] * (1 << n)
        for mask in range(1, 1 << n):
            top = mask.bit_length() - 1
            rest = mask & ~(1 << top)
            if rest == 0:
                words[mask] = (top,)
            else:
                words[mask] = words[rest] + reverse_right(words[rest], (top,), C)[0]

        simples = []
        by_r = {}
        for mask, w in enumerate(words):
            k = popcount(mask)
            if len(w) != k:
                raise LatticeError(f"lcm of {k} atoms has length {len(w)}")
            ell = self._atoms_left(w)
            if ell != mask:
                raise LatticeError(
                    f"lcm of {mask_elements(mask)} is left divisible by {mask_elements(ell)}"
                )
            r = self._atoms_right(w)
            if popcount(r) != k:
                raise LatticeError(f"simple {w} has |x_ell| = {k} but x_r = {mask_elements(r)}")
            if r in by_r:
                raise LatticeError(f"two simples share x_r = {mask_elements(r)}")
            if r and not words_equal(left_lcm(mask_elements(r), C), w, C):
                raise LatticeError(f"left lcm of x_r differs from simple {w}")
            s = Simple(mask, r, w)
            simples.append(s)
            by_r[r] = s
        self.simples: list[Simple] = simples
        self.by_r: dict[int, Simple] = by_r
        if self.delta.r != self.full:
            raise LatticeError("x_r(Delta) is not the whole set")

    def __repr__(self):
        return f"DivisorLattice(n={self.n}, simples={len(self.simples)})"

    def __len__(self):
        return len(self.simples)

    def __iter__(self):
        return iter(self.simples)

    # -- word level ----------------------------------------------------------

    def _atoms_left(self, w: Sequence[int]) -> int:
        return subset_mask(a for a in range(self.n) if left_divides_word((a,), w, self.C))

    def _atoms_right(self, w: Sequence[int]) -> int:
        return subset_mask(a for a in range(self.n) if right_divides_word((a,), w, self.C))

    def equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return words_equal(u, v, self.C)

    # -- indexing ------------------------------------------------------------

    @property
    def delta(self) -> Simple:
        return self.simples[self.full]

    @property
    def identity(self) -> Simple:
        return self.simples[0]

    def simple(self, A: Iterable[int]) -> Simple:
        """The simple whose ``x_ell`` is ``A``."""
        return self.simples[subset_mask(A)]

    def from_right(self, B: Iterable[int]) -> Simple:
        """The simple whose ``x_r`` is ``B``."""
        return self.by_r[subset_mask(B)]

    def atom(self, a: int) -> Simple:
        return self.simples[1 << a]

    def index_of(self, w: Sequence[int]) -> Optional[Simple]:
        """The simple represented by ``w``, or ``None`` if ``w`` does not divide ``Delta``."""
        if len(w) > self.n:
            return None
        s = self.simples[self._atoms_left(w)]
        if len(s.word) == len(w) and self.equal(s.word, w):
            return s
        return None

    # -- order and lattice operations --------------------------------------

    def left_divides(self, s: Simple, t: Simple) -> bool:
        return s.ell & ~t.ell == 0

    def right_divides(self, s: Simple, t: Simple) -> bool:
        return s.r & ~t.r == 0

    def join(self, s: Simple, t: Simple) -> Simple:
        """Right lcm (join for left divisibility)."""
        return self.simples[s.ell | t.ell]

    def meet(self, s: Simple, t: Simple) -> Simple:
        """Left gcd (meet for left divisibility)."""
        return self.simples[s.ell & t.ell]

    def right_join(self, s: Simple, t: Simple) -> Simple:
        """Left lcm (join for right divisibility)."""
        return self.by_r[s.r | t.r]

    def right_meet(self, s: Simple, t: Simple) -> Simple:
        """Right gcd (meet for right divisibility)."""
        return self.by_r[s.r & t.r]

    @functools.lru_cache(maxsize=None)
    def right_complement(self, s: Simple, t: Simple) -> Simple:
        """``s\\t``: the simple with ``s (s\\t) = s v t``."""
        w = reverse_right(s.word, t.word, self.C)[0]
        return self.simples[self._atoms_left(w)] if w else self.identity

    @functools.lru_cache(maxsize=None)
    def left_complement(self, s: Simple, t: Simple) -> Simple:
        """``t/s``: the simple ``p`` with ``p s`` the left lcm of ``s`` and ``t``."""
        w = reverse_left(s.word, t.word, self.C)[0]
        return self.by_r[self._atoms_right(w)] if w else self.identity

    # -- balance and support -------------------------------------------------

    def left_divisors(self, s: Simple) -> list[Simple]:
        return [t for t in self.simples if t.ell & ~s.ell == 0]

    def right_divisors(self, s: Simple) -> list[Simple]:
        return [t for t in self.simples if t.r & ~s.r == 0]

    def balance_witness(self, s: Simple) -> Optional[Simple]:
        """A simple dividing ``s`` on one side only, or ``None`` if ``s`` is balanced."""
        left = {t.ell for t in self.left_divisors(s)}
        right = {t.ell for t in self.right_divisors(s)}
        diff = sorted(left ^ right, key=lambda m: (popcount(m), m))
        return self.simples[diff[0]] if diff else None

    def is_balanced(self, s: Simple) -> bool:
        return self.balance_witness(s) is None

    def support(self, s: Simple) -> frozenset:
        if not self.is_balanced(s):
            raise ValueError(f"{s!r} is not balanced")
        return s.x_ell

    # -- heads and normal forms ----------------------------------------------

    def head(self, u: Sequence[int]) -> Simple:
        """The greatest simple left divisor of ``u``."""
        return self.simples[self._atoms_left(u)]

    def right_head(self, u: Sequence[int]) -> Simple:
        """The greatest simple right divisor of ``u``."""
        return self.by_r[self._atoms_right(u)]

    @functools.lru_cache(maxsize=None)
    def product_heads(self, s: Simple, t: Simple) -> tuple[Simple, Simple]:
        """Left and right heads of the product ``s t``."""
        w = s.word + t.word
        return self.head(w), self.right_head(w)

    def normal_form(self, u: Sequence[int]) -> list[Simple]:
        """Left-greedy normal form: repeatedly split off the head."""
        factors = []
        u = tuple(u)
        while u:
            h = self.head(u)
            rest, back = reverse_right(h.word, u, self.C)
            if back:
                raise LatticeError("head does not divide the word")
            factors.append(h)
            u = rest
        return factors

    def normal_key(self, u: Sequence[int]) -> tuple[int, ...]:
        """Hashable canonical key; equal for words equal in ``M``."""
        return tuple(s.ell for s in self.normal_form(u))

    def dump(self) -> list[dict]:
        return [
            {
                "x_ell": [a + 1 for a in mask_elements(s.ell)],
                "x_r": [a + 1 for a in mask_elements(s.r)],
                "word": [a + 1 for a in s.word],
                "balanced": self.is_balanced(s),
            }
            for s in self.simples
        ]


@functools.lru_cache(maxsize=512)
def build_lattice(S: SolutionTable, budget: Optional[int] = None) -> DivisorLattice:
    """Build (and cache) the divisor lattice of ``Delta`` for ``S``."""
    return DivisorLattice(S, budget)


def lattice_of(obj) -> DivisorLattice:
    return obj if isinstance(obj, DivisorLattice) else build_lattice(obj)


def garside_failures(S) -> list[str]:
    """Lattice-level checks: size ``2**n``, mask divisibility against
    reversing on both sides, ``Delta`` balanced and divisible by every atom."""
    lat = lattice_of(S)
    C = lat.C
    out = []
    if len(lat.simples) != 2 ** lat.n or len(lat.by_r) != 2 ** lat.n:
        out.append("lattice does not have 2^n simples")
    for s in lat.simples:
        for t in lat.simples:
            if lat.left_divides(s, t) != left_divides_word(s.word, t.word, C):
                out.append(f"left divisibility {s!r} | {t!r}")
            if lat.right_divides(s, t) != right_divides_word(s.word, t.word, C):
                out.append(f"right divisibility {s!r} | {t!r}")
    if not lat.is_balanced(lat.delta):
        out.append("Delta is not balanced")
    for a in range(lat.n):
        if not (left_divides_word((a,), lat.delta.word, C)
                and right_divides_word((a,), lat.delta.word, C)):
            out.append(f"atom x{a + 1} does not divide Delta on both sides")
    return out


def verify_garside(S) -> bool:
    return not garside_failures(S)
