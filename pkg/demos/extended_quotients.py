"""Components of T//W^s for each case, with their cells and compact forms."""

from g2series.extquot import extended_quotient
from g2series.inertial import CASES

for case in CASES:
    print(f"== {case.value}")
    for m in extended_quotient(case):
        print(f"  {m.tag:<11} cell {m.cell:<5} w = {m.class_rep.name:<7} "
              f"{m.branch.text():<28} {m.compact_form}")
