"""Vanishing and rational classes, the weight omega(G), and the centralizer bound.

omega(G) = (sum of character degrees)^2 / |G|. For a rational class C whose
elements no irreducible character vanishes on, |C_G(x)| >= omega(G); the
non-trivial case goes through the energy of the normal Cayley graph
Cay(G, C), which is bounded below by |C| * sum chi(1) and above by
|G| * sqrt(|C|).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .dixon import CharacterTable
from .errors import InputError, VerificationError
from .spectra import ConnectionSet, mcclelland_holds_exact, normal_cayley_spectrum


@dataclass(frozen=True)
class WeightReport:
    degree_sum: int
    group_order: int
    weight: Fraction

    def decimal(self, digits: int = 10) -> str:
        return decimal_string(self.weight, digits)

    def repetend(self) -> str:
        return repeating_decimal(self.weight)


def decimal_string(x: Fraction, digits: int = 10) -> str:
    """Decimal expansion rounded half-up to exactly ``digits`` fractional digits."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    sign = "-" if x < 0 else ""
    scale = 10**digits
    n = abs(x) * scale
    q, r = divmod(n.numerator, n.denominator)
    if 2 * r >= n.denominator:
        q += 1
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}" + (f".{frac:0{digits}d}" if digits else "")


def repeating_decimal(x: Fraction) -> str:
    """Exact decimal with the repetend in parentheses, e.g. 11881/1980 -> 6.00(05)."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    digits = []
    seen: dict[int, int] = {}
    while rem and rem not in seen:
        seen[rem] = len(digits)
        rem *= 10
        d, rem = divmod(rem, x.denominator)
        digits.append(str(d))
    if not digits:
        return f"{sign}{whole}"
    if not rem:
        return f"{sign}{whole}." + "".join(digits)
    start = seen[rem]
    return f"{sign}{whole}." + "".join(digits[:start]) + "(" + "".join(digits[start:]) + ")"


def weight(table: CharacterTable) -> WeightReport:
    s = sum(table.degrees)
    return WeightReport(degree_sum=s, group_order=table.order, weight=Fraction(s * s, table.order))


def _compare(a: int, w: Fraction) -> str:
    if a > w:
        return "above"
    if a == w:
        return "equal"
    return "below"


@dataclass(frozen=True)
class ClassVerdict:
    index: int
    label: str
    size: int
    element_order: int
    is_vanishing: bool
    vanishing_witnesses: tuple[int, ...]
    is_rational: bool
    centralizer_order: int
    weight_comparison: str


def classify_classes(table: CharacterTable) -> list[ClassVerdict]:
    w = weight(table).weight
    out = []
    for c in table.classes:
        witnesses = tuple(i for i, row in enumerate(table.values) if row[c.index].is_zero())
        out.append(
            ClassVerdict(
                index=c.index,
                label=c.label,
                size=c.size,
                element_order=c.element_order,
                is_vanishing=bool(witnesses),
                vanishing_witnesses=witnesses,
                is_rational=c.is_rational,
                centralizer_order=c.centralizer_order,
                weight_comparison=_compare(c.centralizer_order, w),
            )
        )
    return out


@dataclass(frozen=True)
class EnergyCheck:
    class_index: int
    label: str
    energy: int
    bound: int
    holds: bool
    singular: bool
    mcclelland_ok: bool


def check_energy_bound(table: CharacterTable, class_index: int) -> EnergyCheck:
    """Energy of Cay(G, C) against |C| * sum chi(1), for a rational non-vanishing class C != {1}."""
    if not 0 <= class_index < table.k:
        raise InputError(f"class index {class_index} out of range")
    c = table.classes[class_index]
    if c.element_order == 1:
        raise InputError("hypothesis failed: class must be non-trivial")
    if not c.is_rational:
        raise InputError(f"hypothesis failed: class {c.label} is not rational")
    if any(row[class_index].is_zero() for row in table.values):
        raise InputError(f"hypothesis failed: class {c.label} is vanishing")
    report = normal_cayley_spectrum(table, ConnectionSet.from_classes(table.classes, [class_index]))
    if not report.energy_exact:
        raise InputError(f"class {c.label}: eigenvalues are not all integers")
    bound = c.size * sum(table.degrees)
    energy = int(report.energy)
    return EnergyCheck(
        class_index=class_index,
        label=c.label,
        energy=energy,
        bound=bound,
        holds=energy >= bound,
        singular=report.is_singular,
        mcclelland_ok=mcclelland_holds_exact(energy, table.order, c.size),
    )


@dataclass
class VerifyReport:
    weight: WeightReport
    verdicts: list[ClassVerdict]
    energy_checks: list[EnergyCheck]
    contrapositive: list[int]
    theorem_holds: bool
    diagnostics: list[str] = field(default_factory=list)


def verify_main_theorem(table: CharacterTable) -> VerifyReport:
    """Check |C_G(x)| >= omega(G) on every rational non-vanishing class.

    Any failure is reported as an implementation defect (wrong table or
    spectrum), since the inequality is a theorem.
    """
    wr = weight(table)
    w = wr.weight
    verdicts = classify_classes(table)
    checks = []
    diag = []
    for v in verdicts:
        if not v.is_rational or v.is_vanishing:
            continue
        if v.centralizer_order < w:
            diag.append(f"class {v.label}: centralizer {v.centralizer_order} < omega {w}")
        if v.element_order == 1:
            continue
        try:
            chk = check_energy_bound(table, v.index)
        except (InputError, VerificationError) as exc:
            diag.append(f"class {v.label}: spectrum unusable ({exc})")
            continue
        checks.append(chk)
        if not chk.holds:
            diag.append(f"class {v.label}: energy {chk.energy} < |C| * sum chi(1) = {chk.bound}")
        if chk.singular:
            diag.append(f"class {v.label}: Cayley graph is singular although the class is non-vanishing")
        if not chk.mcclelland_ok:
            diag.append(f"class {v.label}: energy {chk.energy} exceeds |G| sqrt|C|")
    contra = _forced_vanishing(table)
    for i in contra:
        if not verdicts[i].is_vanishing:
            diag.append(f"class {verdicts[i].label}: forced vanishing but no character vanishes on it")
    if not burnside_check(table):
        diag.append("a non-linear character has no zero (table corrupt)")
    if diag:
        diag.insert(0, "internal inconsistency: the inequality is proven, so a failure means a wrong table or spectrum")
    return VerifyReport(
        weight=wr,
        verdicts=verdicts,
        energy_checks=checks,
        contrapositive=contra,
        theorem_holds=not diag,
        diagnostics=diag,
    )


def _forced_vanishing(table: CharacterTable) -> list[int]:
    w = weight(table).weight
    return [c.index for c in table.classes if c.is_rational and c.centralizer_order < w]


def contrapositive_classify(table: CharacterTable) -> list[int]:
    """Rational classes with |C_G(x)| < omega(G), which the bound forces to be vanishing.

    Each one is re-tested for an exact zero in its column; a miss raises.
    """
    forced = _forced_vanishing(table)
    for i in forced:
        if not any(row[i].is_zero() for row in table.values):
            raise VerificationError(
                f"class {table.classes[i].label} is forced vanishing but no character vanishes on it"
            )
    return forced


def burnside_check(table: CharacterTable) -> bool:
    """Every character of degree >= 2 has an exact zero somewhere."""
    return all(
        any(v.is_zero() for v in row) for d, row in zip(table.degrees, table.values) if d >= 2
    )
