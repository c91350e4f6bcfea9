"""
A decomposable solution on five points
======================================

Builds the divisor lattice of the structure monoid, lists the standard
parabolic subgroups and shows the folding onto the trivial solution.
"""

from ybx import E5, build_lattice, find_strong_foldings, presentation_of, standard_parabolics
from ybx.parabolic import delta_classes

S = E5()
print("defining relations:")
print(presentation_of(S))

# 2^5 simples; Delta is x1^4 x5
L = build_lattice(S)
print(f"\n{len(L)} simples, Delta = {L.delta}")

# x1^3 is divided by the same atoms on both sides but is not balanced
s = L.index_of((0, 0, 0))
print(f"x1^3: x_ell = {sorted(a + 1 for a in s.x_ell)}, balanced = {L.is_balanced(s)}, "
      f"witness = {L.balance_witness(s)}")

print("\nstandard parabolic supports:")
for d in standard_parabolics(S):
    print("  ", [a + 1 for a in d.support], "delta =", d.delta)

dc = delta_classes(S)
print("\nDelta-classes:", [[a + 1 for a in c] for c in dc.classes], dc.flags())

for r in find_strong_foldings(S):
    print("\nstrong folding", [[a + 1 for a in b] for b in r.partition], "induced:", r.induced.table)
