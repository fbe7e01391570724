"""The flat family X_tau: at tau = q^(1/2) it is the reducibility locus, at
tau = 1 the image of the non-lowest components."""

from g2series.families import curve_intersection, flat_family, reducibility_curves
from g2series.inertial import CASES

for case in CASES:
    fam = flat_family(case)
    print(f"{case.value:>11}: " + "  ".join(fam.text()))
    for curve in reducibility_curves(case):
        print(f"{'':>13}curve {curve.name}: {curve.parametrization.text()}")

# Where the first curve meets the second factor of the family.
for case in ("iwahori", "so4"):
    first = reducibility_curves(case)[0]
    equation = flat_family(case).factors[-1 if case == "so4" else 0]
    pts = curve_intersection(case, first, equation)
    print(f"{case}: {first.name} meets {equation.text()} in", ", ".join(str(p) for p in pts))
