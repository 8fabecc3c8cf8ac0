"""Equilibria, linearization and local stability of the three maps.

Besides the direct route (roots of the characteristic quadratic), this module
evaluates the coefficient-chain root bound for complex polynomials and the
closed-form feasibility conditions built on it, so that the two routes can be
compared case by case.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .maps import MapKind, MapSpec

NONHYPERBOLIC_TOL = 1e-9
GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0


class DegenerateParameters(ValueError):
    """``alpha + beta == 0``: the characteristic polynomial is undefined."""


class ChainViolation(ValueError):
    def __init__(self, index: int):
        super().__init__(f"coefficient chain fails at index {index}")
        self.index = index


@dataclass(frozen=True)
class CharPoly2:
    """Monic quadratic ``lambda**2 + a1*lambda + a0``."""

    a1: complex
    a0: complex

    @property
    def coeffs(self) -> tuple[complex, complex, complex]:
        """Coefficients from the highest degree down."""
        return (1 + 0j, self.a1, self.a0)

    def __call__(self, lam: complex) -> complex:
        return lam * lam + self.a1 * lam + self.a0


@dataclass(frozen=True)
class RootPair:
    lambda_plus: complex
    lambda_minus: complex

    @property
    def moduli(self) -> tuple[float, float]:
        return abs(self.lambda_plus), abs(self.lambda_minus)


class StabilityClass(enum.Enum):
    LOC_ASYMP_STABLE = "loc_asymp_stable"
    ALL_OUTSIDE = "all_outside"
    SADDLE = "saddle"
    NON_HYPERBOLIC = "non_hyperbolic"

    @property
    def legacy_labels(self) -> tuple[str, ...]:
        """Labels used by the original tables for this class.

        The historical vocabulary is inverted with respect to the usual one:
        "sink" there means every root lies outside the unit circle and
        "repeller" means every root lies inside.
        """
        return _LEGACY_LABELS[self]

    @property
    def legacy_label(self) -> str:
        return self.legacy_labels[0]


_LEGACY_LABELS = {
    StabilityClass.LOC_ASYMP_STABLE: ("l.a.s", "repeller"),
    StabilityClass.ALL_OUTSIDE: ("sink",),
    StabilityClass.SADDLE: ("saddle",),
    StabilityClass.NON_HYPERBOLIC: ("non-hyp",),
}


@dataclass(frozen=True)
class EquilibriumReport:
    spec: MapSpec
    equilibrium: complex
    charpoly: CharPoly2
    roots: RootPair
    stability: StabilityClass
    residual: float


def is_degenerate(spec: MapSpec) -> bool:
    return spec.alpha + spec.beta == 0


def equilibria(spec: MapSpec) -> list[complex]:
    """Fixed points of the map.

    E1 has ``+sqrt(alpha+beta)`` and ``-sqrt(alpha+beta)`` (principal branch
    first); E8 and E9 share the single fixed point ``alpha + beta``.  When
    ``alpha + beta == 0`` the E1 pair collapses onto 0, which is returned
    once (see :func:`is_degenerate`).
    """
    s = spec.alpha + spec.beta
    if spec.kind is MapKind.E1:
        if s == 0:
            return [0j]
        r = cmath.sqrt(s)
        return [r, -r]
    return [s]


def fixed_point_residual(spec: MapSpec, zbar: complex) -> float:
    """``|f(zbar, zbar) - zbar| / max(1, |zbar|)`` evaluated in closed form."""
    a, b = spec.alpha, spec.beta
    if spec.kind is MapKind.E1:
        value = a / zbar + b / zbar
    elif spec.kind is MapKind.E8:
        value = a + zbar / zbar * b
    else:
        value = zbar / zbar * a + b
    return abs(value - zbar) / max(1.0, abs(zbar))


def charpoly(spec: MapSpec) -> CharPoly2:
    """Characteristic quadratic of the linearization at the equilibrium.

    It is the same for both E1 equilibria since only ``zbar**2`` enters.
    """
    a, b = spec.alpha, spec.beta
    s = a + b
    if s == 0:
        raise DegenerateParameters("alpha + beta = 0")
    if spec.kind is MapKind.E1:
        return CharPoly2(a / s, b / s)
    if spec.kind is MapKind.E8:
        return CharPoly2(-(b / s), b / s)
    return CharPoly2(a / s, -(a / s))


def _order(r1: complex, r2: complex) -> tuple[complex, complex]:
    k1 = (abs(r1), r1.real, r1.imag)
    k2 = (abs(r2), r2.real, r2.imag)
    return (r1, r2) if k1 >= k2 else (r2, r1)


def solve_quadratic(p: CharPoly2) -> RootPair:
    """Both roots of ``lambda**2 + a1*lambda + a0``.

    The larger-magnitude root is formed without cancellation and the other
    one is recovered from the product ``a0``.
    """
    b, c = p.a1, p.a0
    disc = cmath.sqrt(b * b - 4 * c)
    # pick the sign that adds magnitudes
    if (b.conjugate() * disc).real >= 0:
        q = -0.5 * (b + disc)
    else:
        q = -0.5 * (b - disc)
    if q == 0:
        r1 = r2 = 0j
    else:
        r1 = q
        r2 = c / q
    return RootPair(*_order(r1, r2))


def classify_moduli(moduli, tol: float = NONHYPERBOLIC_TOL) -> StabilityClass:
    if tol <= 0:
        raise ValueError("tol must be positive")
    moduli = list(moduli)
    if any(abs(m - 1.0) < tol for m in moduli):
        return StabilityClass.NON_HYPERBOLIC
    if all(m < 1.0 for m in moduli):
        return StabilityClass.LOC_ASYMP_STABLE
    if all(m > 1.0 for m in moduli):
        return StabilityClass.ALL_OUTSIDE
    return StabilityClass.SADDLE


def classify_roots(r: RootPair, tol: float = NONHYPERBOLIC_TOL) -> StabilityClass:
    return classify_moduli(r.moduli, tol)


def trinomial_largest_root(n: int, tol: float = 1e-12) -> float:
    """Largest positive root of ``R**(n+1) - 2 R**n + 1``.

    ``R = 1`` is always a root; for ``n >= 2`` there is exactly one more in
    ``(1, 2)`` and that is returned.  For ``n == 1`` the polynomial is
    ``(R - 1)**2`` and the answer is 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1.0

    def poly(r):
        return r ** n * (r - 2.0) + 1.0

    lo, hi = 1.0 + 1e-9, 2.0
    if poly(lo) >= 0:
        # root too close to 1 to separate from the trivial one
        return 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if poly(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def check_chain(coeffs, a: float) -> None:
    """Raise :class:`ChainViolation` unless ``a**k |c_k|`` is nonincreasing.

    ``coeffs`` runs from the leading coefficient down.
    """
    if a <= 0:
        raise ValueError("a must be positive")
    # multiply step by step: a**k alone can overflow while a**k |c_k| is tiny
    weighted = []
    for k, c in enumerate(coeffs):
        w = abs(c)
        for _ in range(k):
            w *= a
        weighted.append(w)
    for k in range(1, len(weighted)):
        if weighted[k] > weighted[k - 1] * (1 + 1e-15):
            raise ChainViolation(k)


def govil_rahman_radius(coeffs, a: float) -> float:
    """Radius of a disk containing every zero of the polynomial.

    Valid when ``|c_n| >= a|c_{n-1}| >= a**2 |c_{n-2}| >= ...``, with
    ``coeffs`` given leading coefficient first.  The radius is ``R1 / a``
    where ``R1`` is :func:`trinomial_largest_root` of the degree.
    """
    coeffs = list(coeffs)
    if len(coeffs) < 2:
        raise ValueError("need a polynomial of degree >= 1")
    check_chain(coeffs, a)
    return trinomial_largest_root(len(coeffs) - 1) / a


def max_chain_parameter(p: CharPoly2) -> float:
    """Supremum of ``a`` for which ``a|a0| <= |a1| <= 1/a`` holds.

    This is the chain ``1 >= a|a1| >= a**2|a0|`` of the monic quadratic;
    0 means no positive ``a`` works.
    """
    m1, m0 = abs(p.a1), abs(p.a0)
    upper = math.inf
    if m1 > 0:
        upper = min(upper, 1.0 / m1)
    if m0 > 0:
        upper = min(upper, m1 / m0)
    return upper


@dataclass(frozen=True)
class LemmaPredicates:
    stable_condition: bool
    outside_condition: bool
    hyperbolic: bool
    chain_sup: float


def lemma_predicates(spec: MapSpec) -> LemmaPredicates:
    """Closed-form evaluation of the three coefficient-chain predicates.

    ``stable_condition``: the chain holds for some ``a > phi``.
    ``outside_condition``: the chain holds for some ``0 < a < phi``.
    ``hyperbolic``: no root of the characteristic quadratic on the unit
    circle.

    The chain ``a|a0| <= |a1| <= 1/a`` is an interval ``(0, U]`` in ``a``, so
    both existential conditions reduce to comparing ``U`` with ``phi``.
    """
    p = charpoly(spec)
    upper = max_chain_parameter(p)
    roots = solve_quadratic(p)
    return LemmaPredicates(
        stable_condition=upper > GOLDEN_RATIO,
        outside_condition=upper > 0,
        hyperbolic=classify_roots(roots) is not StabilityClass.NON_HYPERBOLIC,
        chain_sup=upper,
    )


def report(spec: MapSpec) -> list[EquilibriumReport]:
    """One :class:`EquilibriumReport` per equilibrium of ``spec``."""
    p = charpoly(spec)
    roots = solve_quadratic(p)
    cls = classify_roots(roots)
    return [
        EquilibriumReport(spec, z, p, roots, cls, fixed_point_residual(spec, z))
        for z in equilibria(spec)
    ]


@dataclass(frozen=True)
class AuditRow:
    table: int
    kind: MapKind
    case: str
    printed_polynomial: str
    polynomial_matches: bool
    moduli: tuple[float, float]
    stability: StabilityClass
    printed_claim: str
    claim_agrees: bool
    printed_inference: str
    inference_agrees: bool

    @property
    def agrees(self) -> bool:
        return self.polynomial_matches and self.claim_agrees and self.inference_agrees

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "map": self.kind.value,
            "case": self.case,
            "printed_polynomial": self.printed_polynomial,
            "polynomial_matches": self.polynomial_matches,
            "moduli": list(self.moduli),
            "class": self.stability.value,
            "printed_claim": self.printed_claim,
            "claim_agrees": self.claim_agrees,
            "printed_inference": self.printed_inference,
            "inference_agrees": self.inference_agrees,
        }


@dataclass(frozen=True)
class AuditReport:
    rows: tuple[AuditRow, ...]

    @property
    def disagreements(self) -> tuple[AuditRow, ...]:
        return tuple(r for r in self.rows if not r.agrees)

    def to_list(self) -> list[dict]:
        return [r.to_dict() for r in self.rows]

    def summary(self) -> str:
        lines = []
        for r in self.rows:
            flag = "agree" if r.agrees else "DISAGREE"
            m = ", ".join(f"{x:.6f}" for x in r.moduli)
            lines.append(
                f"{r.kind.value} {r.case:<17} moduli ({m}) class {r.stability.value:<16} "
                f"printed '{r.printed_claim}' / {r.printed_inference}: {flag}"
            )
        lines.append(f"{len(self.disagreements)} of {len(self.rows)} rows disagree with the root computation")
        return "\n".join(lines)


def audit_tables() -> AuditReport:
    """Recompute every printed characteristic-polynomial row.

    For each row the printed polynomial is compared with :func:`charpoly`,
    the printed modulus statement with the moduli from
    :func:`solve_quadratic`, and the printed inference with the labels of the
    computed :class:`StabilityClass`.
    """
    from .cases import PRINTED_STABILITY_ROWS

    rows = []
    for row in PRINTED_STABILITY_ROWS:
        spec = MapSpec(row.kind, row.case.alpha, row.case.beta)
        p = charpoly(spec)
        roots = solve_quadratic(p)
        cls = classify_roots(roots)
        poly_ok = abs(p.a1 - row.a1) <= 1e-15 and abs(p.a0 - row.a0) <= 1e-15
        rows.append(AuditRow(
            table=row.table,
            kind=row.kind,
            case=row.case.label,
            printed_polynomial=row.polynomial_text,
            polynomial_matches=poly_ok,
            moduli=roots.moduli,
            stability=cls,
            printed_claim=row.claim.text,
            claim_agrees=row.claim.holds(roots.moduli),
            printed_inference=row.inference,
            inference_agrees=row.inference in cls.legacy_labels,
        ))
    return AuditReport(tuple(rows))
