"""Correcting cocharacters at work: the fibers of pi at q^(1/2) over the
reducibility points, next to the number of constituents of the principal
series there."""

import sys

from g2series.correcting import fiber, verify_counts

case = sys.argv[1] if len(sys.argv) > 1 else "iwahori"
for row in verify_counts(case):
    print(f"{row['point_tag']:<22} {row['fiber_size']} points, "
          f"{row['constituent_count']} constituents ({row['count_source']})")

# The self-intersection point: t_c has two preimages on the a-line.
if case == "iwahori":
    from g2series.families import special_points
    t_c = dict(special_points("iwahori"))["t_c"]
    print("\nfiber over t_c:")
    for p in fiber("iwahori", t_c):
        print("  ", p.text())
