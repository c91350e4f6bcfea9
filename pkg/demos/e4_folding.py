"""
An indecomposable solution that still folds
===========================================

Four points, no proper standard parabolic subgroup, and a non-strong
folding onto the two-point solution with presentation x^2 = y^2.
"""

from ybx import E4, build_lattice, find_foldings, presentation_of, standard_parabolics
from ybx.folding import atomic_garside_subgroup

S = E4()
L = build_lattice(S)
print(f"{len(L)} simples, Delta = {L.delta}")
print("x1^2 x3^2 == Delta?", L.equal((0, 0, 2, 2), L.delta.word))
print("parabolic supports:", [[a + 1 for a in d.support] for d in standard_parabolics(S)])

G = atomic_garside_subgroup(L, [0, 1])
print("\nGarside submonoid on {x1, x2}:", sorted(map(repr, G.elements)), "top", G.delta)

for r in find_foldings(S):
    print("\nfolding", [[a + 1 for a in b] for b in r.partition], "strong =", r.strong)
    print(presentation_of(r.induced))
