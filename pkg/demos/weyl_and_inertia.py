"""The Weyl group of G2, its classes, and the stabilizers W^s that pick out
each inertial case."""

from g2series.inertial import CASES, canonical_ram, stabilizer_subgroup
from g2series.weyl import conjugacy_classes, g2_weyl_group

G = g2_weyl_group()
print(f"|W| = {len(G)}")
for cls in conjugacy_classes(G):
    print(f"  class of {cls.representative.name:>7}: size {len(cls.members)}, centralizer {len(cls.centralizer)}")

print()
for case in CASES:
    ram = canonical_ram(case)
    Ws = stabilizer_subgroup(ram)
    print(f"{case.value:>11}: ramified pair {ram}, |W^s| = {len(Ws)}, words {[w.name for w in Ws]}")
