"""The lowest cell of the SO4 case: products in the based ring, evaluation ranks, and
the crossed product by epsilon."""

from g2series.asymptotic import (LowestCellElement, crossed_product_full_ideal_check, evaluate,
                                 j_multiply, tensor_to_graded, truncated_basis)

w = LowestCellElement(True, 1, True, 1)
print(f"{w.text()} squared:")
for term, c in j_multiply(w, w).items():
    print(f"  {c} * {term.text()}")

for degree in (2, 3, 4):
    basis = [tensor_to_graded(t) for t in truncated_basis(degree)]
    print(f"D = {degree}: rank at (0,0) = {evaluate(basis, 0, 0)}, at (2,3) = {evaluate(basis, 2, 3)}")

print("group sum generates the crossed product (D = 2):", crossed_product_full_ideal_check(2))
