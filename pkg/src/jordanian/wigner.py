"""Reduced matrix elements and the deformed Wigner-Eckart identity.

For a rank-j1 tensor operator family mapping the spin-j2 module into the
spin-j module, every matrix element factorizes as

    <j m| t_{j1 m1} |j2 m2> = I * sum_n alpha[(-m1,-m2); (-n1,-n2)] C(n1,n2,m)

with C the classical Clebsch-Gordan coefficients, alpha the
product-to-intermediate transition table of the (j1, j2) pair, and I a
reduced matrix element independent of m1, m2 and m.  The weight multiplying
I is exactly the coefficient of <j1 m1| (x) <j2 m2| in the coupled bra
<j m|, so the identity reads: matrix elements are reduced-element multiples
of the deformed bra Clebsch-Gordan coefficients.

The factorization is established here the same way it is proved: the
alpha-combinations phi(n1,n2) of the operator columns transform like an
intermediate basis under the target module action, so their overlaps with
the target weight basis obey the classical CGC recurrences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coupling import (alpha_table, coupled_bra, coupled_spins,
                       product_weight_index, sl2_cgc, triangle_allowed,
                       uh_cgc, uh_cgc_bra)
from .halfint import HalfInt, as_half, weight_index, weight_range
from .hpoly import HPoly
from .irreps import irrep
from .polymatrix import PolyMatrix
from .report import Check, Report, scalar_check, zero_check
from .tensorops import TensorOpFamily


class SelectionRuleError(ValueError):
    """The requested spins admit no coupling channel."""


class ChannelMismatch(ArithmeticError):
    """Different channels disagree on the reduced matrix element."""


@dataclass(frozen=True)
class ReducedMatrixElement:
    """The invariant factor of one family between two modules."""

    rank: HalfInt
    source_j: HalfInt
    target_j: HalfInt
    value: HPoly

    def __str__(self) -> str:
        return (f"I({self.rank} {self.source_j} {self.target_j}) "
                f"= {self.value}")


def _require_ladder_basis(fam: TensorOpFamily) -> tuple[HalfInt, HalfInt]:
    """Both modules must be standard ladder-basis copies of their spins."""
    j2, j = fam.ctx.source_j, fam.ctx.target_j
    for label, gens, spin in (("source", fam.ctx.source, j2),
                              ("target", fam.ctx.target, j)):
        canon = irrep(spin).gens()
        for name in ("x", "y", "h", "ep", "em"):
            if getattr(gens, name) != getattr(canon, name):
                raise ValueError(
                    f"{label} module is not the standard spin-{spin} "
                    f"ladder basis (generator {name} differs)")
    return j2, j


def matrix_element(fam: TensorOpFamily, m, m1, m2) -> HPoly:
    """<j m| t_{rank m1} |j2 m2> as a polynomial in the deformation."""
    j2, j = fam.ctx.source_j, fam.ctx.target_j
    m, m1, m2 = as_half(m), as_half(m1), as_half(m2)
    return fam.component(m1).entry(weight_index(j, m), weight_index(j2, m2))


def wigner_eckart_weight(j1, j2, j, m1, m2, m) -> HPoly:
    """The coefficient multiplying the reduced matrix element.

    Computed from its defining sum over classical channels,
    sum_n alpha[(-m1,-m2); (-n1,-n2)] C(n1,n2,m); it coincides with the
    coupled-bra coefficient uh_cgc_bra(j1, j2, j, m1, m2, m).
    """
    j1, j2, j = as_half(j1), as_half(j2), as_half(j)
    m1, m2, m = as_half(m1), as_half(m2), as_half(m)
    table = alpha_table(j1, j2)
    acc = HPoly.zero()
    for n1 in weight_range(j1):
        n2 = m - n1
        if abs(n2.twice) > j2.twice:
            continue
        c = sl2_cgc(j1, j2, j, n1, n2)
        if c:
            a = table.value(-m1, -m2, -n1, -n2)
            if a:
                acc = acc + a * c
    return acc


def phi_vector(fam: TensorOpFamily, n1, n2) -> PolyMatrix:
    """The intermediate combination sum_k alpha[k; n] t_{k1} |j2 k2>."""
    j1, j2 = fam.rank, fam.ctx.source_j
    n1, n2 = as_half(n1), as_half(n2)
    table = alpha_table(j1, j2)
    acc = PolyMatrix.zeros(fam.ctx.target.dim, 1)
    for k1 in weight_range(j1):
        comp = fam.component(k1)
        for col, k2 in enumerate(weight_range(j2)):
            a = table.value(k1, k2, n1, n2)
            if a:
                acc = acc + comp.column(col) * a
    return acc


def _phi_table(fam: TensorOpFamily) -> dict[tuple[HalfInt, HalfInt], PolyMatrix]:
    j1, j2 = fam.rank, fam.ctx.source_j
    return {(n1, n2): phi_vector(fam, n1, n2)
            for n1 in weight_range(j1) for n2 in weight_range(j2)}


def _overlap(phi: dict, j: HalfInt, n1: HalfInt, n2: HalfInt, m: HalfInt,
             j1: HalfInt, j2: HalfInt) -> HPoly:
    """<j m|phi(n1, n2)>, zero for out-of-range labels."""
    if abs(n1.twice) > j1.twice or abs(n2.twice) > j2.twice \
            or abs(m.twice) > j.twice:
        return HPoly.zero()
    return phi[(n1, n2)].entry(weight_index(j, m), 0)


def verify_phi_recurrence(fam: TensorOpFamily, label: str = "") -> Report:
    """The phi vectors carry the classical intermediate-basis action.

    On the target module, H phi(n1,n2) = 2(n1+n2) phi(n1,n2) and
    Z+- phi(n1,n2) = sqrt((j1-+n1)(j1+-n1+1)) phi(n1+-1,n2)
                   + sqrt((j2-+n2)(j2+-n2+1)) phi(n1,n2+-1).
    """
    from .irreps import ladder_factor

    j2, j = _require_ladder_basis(fam)
    j1 = fam.rank
    rep = irrep(j)
    phi = _phi_table(fam)
    zero = PolyMatrix.zeros(rep.dim, 1)

    def at(n1, n2):
        if abs(n1.twice) > j1.twice or abs(n2.twice) > j2.twice:
            return zero
        return phi[(n1, n2)]

    report = Report(f"intermediate action on operator combinations {label}".rstrip())
    one = HalfInt(1)
    for (n1, n2), vec in phi.items():
        r = rep.hm @ vec - vec * (2 * (n1 + n2).as_fraction())
        report.add(zero_check(f"H phi({n1},{n2}) = 2({n1}+{n2}) phi", r))
        for sign, sym in ((+1, "Z+"), (-1, "Z-")):
            zmat = rep.zp if sign > 0 else rep.zm
            step = one if sign > 0 else -one
            want = (at(n1 + step, n2) * ladder_factor(j1, n1, sign)
                    + at(n1, n2 + step) * ladder_factor(j2, n2, sign))
            report.add(zero_check(
                f"{sym} phi({n1},{n2}) follows the two-slot ladder rule",
                zmat @ vec - want))
    return report


def verify_overlap_recurrence(fam: TensorOpFamily, label: str = "") -> Report:
    """The overlaps <j m|phi(n1,n2)> obey the classical CGC recurrences:
    sqrt((j-+m)(j+-m+1)) <jm|phi(n1,n2)>
      = sqrt((j1-+n1)(j1+-n1+1)) <j m+-1|phi(n1+-1,n2)>
      + sqrt((j2-+n2)(j2+-n2+1)) <j m+-1|phi(n1,n2+-1)>.
    """
    from .irreps import ladder_factor

    j2, j = _require_ladder_basis(fam)
    j1 = fam.rank
    phi = _phi_table(fam)
    report = Report(f"overlap recurrences {label}".rstrip())
    one = HalfInt(1)
    for n1 in weight_range(j1):
        for n2 in weight_range(j2):
            for m in weight_range(j):
                for sign, sym in ((+1, "raising"), (-1, "lowering")):
                    step = one if sign > 0 else -one
                    lhs = _overlap(phi, j, n1, n2, m, j1, j2) * ladder_factor(j, m, sign)
                    rhs = (_overlap(phi, j, n1 + step, n2, m + step, j1, j2)
                           * ladder_factor(j1, n1, sign)
                           + _overlap(phi, j, n1, n2 + step, m + step, j1, j2)
                           * ladder_factor(j2, n2, sign))
                    report.add(scalar_check(
                        f"{sym} recurrence at n=({n1},{n2}), m={m}", lhs, rhs))
    return report


def reduced_matrix_element(fam: TensorOpFamily) -> ReducedMatrixElement:
    """Extract the reduced matrix element, certifying channel agreement.

    Every overlap <j m|phi(n1,n2)> must equal I * C(n1,n2,m) for a single
    I; channels with nonvanishing classical coefficient each determine a
    candidate, and any disagreement raises ChannelMismatch.  Spins outside
    the coupling range raise SelectionRuleError.
    """
    j2, j = _require_ladder_basis(fam)
    j1 = fam.rank
    if not triangle_allowed(j1, j2, j):
        raise SelectionRuleError(
            f"rank {j1} cannot connect spin {j2} to spin {j}")
    phi = _phi_table(fam)
    value = None
    origin = None
    for (n1, n2), vec in phi.items():
        m = n1 + n2
        if abs(m.twice) > j.twice:
            continue
        c = sl2_cgc(j1, j2, j, n1, n2)
        if not c:
            continue
        candidate = _overlap(phi, j, n1, n2, m, j1, j2) / c
        if value is None:
            value, origin = candidate, (n1, n2, m)
        elif candidate != value:
            raise ChannelMismatch(
                f"channel n=({n1},{n2}), m={m} gives {candidate}, but "
                f"channel n=({origin[0]},{origin[1]}), m={origin[2]} "
                f"gives {value}")
    if value is None:
        raise SelectionRuleError(
            f"no classical channel connects spin {j2} to spin {j} at rank {j1}")
    return ReducedMatrixElement(rank=j1, source_j=j2, target_j=j, value=value)


def verify_wigner_eckart(fam: TensorOpFamily, label: str = "") -> Report:
    """Full factorization check for one family.

    Covers: channel-consistent extraction of I; the proportionality
    <jm|phi(n)> = I C(n,m) on every channel; reconstruction of the operator
    columns from the phi vectors through the inverse alpha table; the
    factorization of every matrix element through the bra coefficient; and
    the identification of that coefficient with the coupled-bra expansion
    (checked against the independently built coupled bra, and through
    duality with the deformed ket coefficients).
    """
    report = Report(f"factorization of matrix elements {label}".rstrip())
    j2, j = _require_ladder_basis(fam)
    j1 = fam.rank
    try:
        rme = reduced_matrix_element(fam)
    except (SelectionRuleError, ChannelMismatch) as exc:
        report.add(Check("reduced matrix element extraction", "fail", str(exc)))
        return report
    ivalue = rme.value
    report.add(Check("reduced matrix element extraction", "pass",
                     f"I = {ivalue}"))

    phi = _phi_table(fam)
    for (n1, n2), vec in phi.items():
        for m in weight_range(j):
            got = _overlap(phi, j, n1, n2, m, j1, j2)
            want = ivalue * HPoly.constant(sl2_cgc(j1, j2, j, n1, n2)) \
                if m == n1 + n2 else HPoly.zero()
            report.add(scalar_check(
                f"<{j} {m}|phi({n1},{n2})> = I C at n=({n1},{n2}), m={m}",
                got, want))

    table = alpha_table(j1, j2)
    for m1 in weight_range(j1):
        comp = fam.component(m1)
        for col, m2 in enumerate(weight_range(j2)):
            acc = PolyMatrix.zeros(fam.ctx.target.dim, 1)
            for n1 in weight_range(j1):
                for n2 in weight_range(j2):
                    a = table.value(-m1, -m2, -n1, -n2)
                    if a:
                        acc = acc + phi[(n1, n2)] * a
            report.add(zero_check(
                f"t_({m1})|{j2} {m2}> rebuilt from phi via the inverse table",
                comp.column(col) - acc))

    for m in weight_range(j):
        for m1 in weight_range(j1):
            for m2 in weight_range(j2):
                got = matrix_element(fam, m, m1, m2)
                weight = uh_cgc_bra(j1, j2, j, m1, m2, m)
                report.add(scalar_check(
                    f"<{j} {m}|t_({m1})|{j2} {m2}> = I * bra coefficient",
                    got, ivalue * weight))

    remark_ok = True
    for m in weight_range(j):
        bra = coupled_bra(j1, j2, j, m)
        for m1 in weight_range(j1):
            for m2 in weight_range(j2):
                w = wigner_eckart_weight(j1, j2, j, m1, m2, m)
                if w != uh_cgc_bra(j1, j2, j, m1, m2, m):
                    remark_ok = False
                if w != bra.entry(0, product_weight_index(j1, j2, m1, m2)):
                    remark_ok = False
    report.add(Check(
        "the factorization weight is the coupled-bra coefficient",
        "pass" if remark_ok else "fail", "exact" if remark_ok else ""))

    duality_ok = True
    for jp in coupled_spins(j1, j2):
        for m in weight_range(j):
            for mp in weight_range(jp):
                s = HPoly.zero()
                for m1 in weight_range(j1):
                    for m2 in weight_range(j2):
                        s = s + (uh_cgc_bra(j1, j2, j, m1, m2, m)
                                 * uh_cgc(j1, j2, jp, m1, m2, mp))
                want = HPoly.one() if (jp == j and m == mp) else HPoly.zero()
                if s != want:
                    duality_ok = False
    report.add(Check(
        "bra and ket deformed coefficients are dual",
        "pass" if duality_ok else "fail", "exact" if duality_ok else ""))
    return report
