"""Component groups of centralizers in SL2 x SL2 / (-I,-I).

The mixed cases come out connected: a sign in one factor is absorbed by the
torus of the other modulo (-I,-I)."""

from g2series.correcting import so4_dual_check

for row in so4_dual_check():
    mark = "ok  " if row["pass"] else "DIFF"
    print(f"{mark} {row['check']:<40} expected {row['expected']}, computed {row['observed']}")
