"""Coupling two modules: transition coefficients and exact Clebsch-Gordan data.

Tensor products of modules decompose exactly as in the classical theory
(multiplicity-free, spins j1+j2 down to |j1-j2|), but the vectors carrying
that decomposition are deformed.  The bridge is a triangular table of
h-monomial "alpha" coefficients turning product-basis vectors into
intermediate vectors on which the coupled generators act with classical
matrix elements; composing with the classical Clebsch-Gordan table then
gives the deformed coupling coefficients.
"""

from jordanian.coupling import (alpha_table, decompose, sl2_cgc, uh_cgc,
                                verify_alpha_orthogonality,
                                verify_intermediate_orthonormality)
from jordanian.halfint import half, weight_range

print(__doc__)

j1 = j2 = half(1, 2)
table = alpha_table(j1, j2)
print(f"alpha table for the pair ({j1}, {j2}) — every entry is a single "
      f"power of h:")
for m1 in weight_range(j1):
    for m2 in weight_range(j2):
        for k1 in weight_range(j1):
            for k2 in weight_range(j2):
                v = table.value(k1, k2, m1, m2)
                if v:
                    print(f"  alpha[{k1},{k2}; {m1},{m2}] = {v}")

print("\nThe table is unitriangular, and its defining orthogonality")
print("relation inverts it exactly:")
for pair in ((half(1, 2), half(1, 2)), (half(1), half(1, 2)),
             (half(1), half(1))):
    ortho = verify_alpha_orthogonality(*pair)
    onb = verify_intermediate_orthonormality(*pair)
    assert ortho.ok and onb.ok
    print(f"  pair {pair[0]} (x) {pair[1]}: orthogonality "
          f"{ortho.counts()['pass']} checks, intermediate orthonormality "
          f"{onb.counts()['pass']} checks — all exact")

print("\nDeformed coupling coefficients (ket convention), singlet of two")
print("spin-1/2 modules at coupled weight m = 0:")
for k1 in weight_range(j1):
    for k2 in weight_range(j2):
        v = uh_cgc(j1, j2, half(0), k1, k2, half(0))
        if v:
            print(f"  [{k1}, {k2}] = {v}")
print("The extra [1/2, 1/2] component is the deformation at work: the")
print("coupled weight no longer has to equal k1 + k2, it only bounds it.")

print("\nAt h = 0 each coefficient collapses to the classical table:")
value = uh_cgc(j1, j2, half(0), half(1, 2), half(-1, 2), half(0))
classical = sl2_cgc(j1, j2, half(0), half(1, 2), half(-1, 2))
assert value.eval_h(0) == classical
print(f"  [1/2, -1/2] = {value}; classical value {classical}")

print("\nDecompositions certified by exact coupled-Casimir eigenvalues:")
for pair in ((half(1, 2), half(1, 2)), (half(1), half(1, 2)),
             (half(3, 2), half(1)), (half(2), half(2))):
    summands = decompose(*pair)
    text = " + ".join(str(j) for j, _ in summands)
    print(f"  {pair[0]} (x) {pair[1]} = {text}")
