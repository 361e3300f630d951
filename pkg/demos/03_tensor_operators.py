"""Concrete tensor operators: fermionic, bosonic, and generator-built families.

An operator family {t_m} of rank r is a tensor operator when the adjoint
action of every generator reshuffles the components with the classical
spin-r matrix elements.  Three very different constructions satisfy the
definition exactly:

  * two spin-1/2 families of dressed fermion creation operators on a
    four-dimensional Fock space,
  * spin-1/2 families of dressed boson creation/annihilation operators
    transferring between neighbouring spin modules,
  * a rank-1 family written directly in the algebra generators.
"""

from jordanian.halfint import half
from jordanian.tensorops import (boson_lowering_family, boson_raising_family,
                                 fermion_realization, rank1_generators,
                                 verify_boson_action, verify_tensor_operator)

print(__doc__)

block, fam_a, fam_b = fermion_realization()
print("Fermionic family A on the Fock space (components t[1/2], t[-1/2]):")
for m in fam_a.weights:
    print(f"t[{m}] =\n{fam_a.component(m)}\n")

for label, fam in (("fermion A", fam_a), ("fermion B", fam_b)):
    report = verify_tensor_operator(fam)
    assert report.ok
    print(f"{label}: tensor-operator definition holds exactly "
          f"({report.counts()['pass']} residuals)")

print("\nBosonic transfer families between neighbouring spin modules:")
for j in (half(1, 2), half(1), half(3, 2)):
    up = verify_tensor_operator(boson_raising_family(j))
    dn = verify_tensor_operator(boson_lowering_family(j))
    assert up.ok and dn.ok
    print(f"  spin {j}: raising ({up.counts()['pass']} residuals) and "
          f"lowering ({dn.counts()['pass']} residuals) both exact")

print("\nClosed forms for the boson family action, checked against")
print("brute-force operator application.  Two coefficient patterns of the")
print("commonly quoted lowering closed form disagree with the operator")
print("definition; the suite derives the correct coefficients and reports")
print("the difference without failing:")
report = verify_boson_action(half(3, 2))
assert report.ok
print(f"  spin 3/2: {report.counts()['pass']} entrywise checks pass")
for note in report.notes:
    print(f"  NOTE {note}")

print("\nRank-1 family in the generators on the spin-1 module:")
fam = rank1_generators(half(1))
for m in fam.weights:
    print(f"t[{m}] =\n{fam.component(m)}\n")
report = verify_tensor_operator(fam)
assert report.ok
print(f"rank-1 family: definition holds exactly "
      f"({report.counts()['pass']} residuals); at h = 0 the components "
      f"reduce to the classical triple (-Zp, H/sqrt(2), Zm).")
