"""The scaled multiplication family and its unitality analysis.

On integers: for a fixed scale a, the operation n * m = a*n*m is a
commutative ring multiplication compatible with the usual addition, and it
has a unit exactly when a is 1 (the usual product) or -1 (the negated
product, here "alternate"). ``verify_scaled_form`` checks the converse
direction on a bounded window: any distributive black-box multiplication
coincides there with the scaled family for a = mul(1, 1).

On finite base rings: ``scale_ring`` transplants the same construction to
an arbitrary associative ring with a central scale element, and
``check_scaled_unitality`` verifies that the "unital iff scale is plus or
minus one" pattern holds exactly for base rings whose only reciprocal
pairs are (1, 1) and (-1, -1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .abelian import (
    INT_CAPACITY,
    GroupElement,
    IntegerWindow,
    all_elements,
    checked,
    scalar_mul,
)
from .errors import IntegerOverflowError, InvariantViolation, UsageError
from .structures import (
    BlackBoxMul,
    DistributivityCounterexample,
    RingStructure,
    StructureConstants,
    check_associativity,
    check_commutativity,
    check_distributivity_blackbox,
    cyclic_constants,
    find_unit,
)


@dataclass(frozen=True)
class ScaledMult:
    """The multiplication (n, m) -> scale * n * m with checked arithmetic."""

    scale: int

    def __call__(self, n: int, m: int) -> int:
        # hot path: the context string is only built on actual overflow
        value = self.scale * n * m
        if value > INT_CAPACITY or value < -INT_CAPACITY:
            raise IntegerOverflowError(
                f"integer {value} exceeds the checked capacity "
                f"{INT_CAPACITY} in {self.scale}*{n}*{m}"
            )
        return value


def make_scaled(a: int) -> ScaledMult:
    """The multiplication (n, m) -> a*n*m."""
    return ScaledMult(a)


def alternate() -> ScaledMult:
    """The negated product (n, m) -> -(n*m); its unit is -1."""
    return ScaledMult(-1)


def unit_of_scaled(a: int) -> Optional[int]:
    """Closed-form unit of the scaled multiplication: a itself for a = +-1.

    Cross-validated against ``find_unit_windowed`` by the test suite; the
    equivalence, not the formula, is the content.
    """
    if a == 1 or a == -1:
        return a
    return None


def extract_scale(mul: BlackBoxMul) -> int:
    """Recover the scale of a (claimed) scaled multiplication as mul(1, 1)."""
    return checked(mul(1, 1), "extract_scale")


def find_unit_windowed(mul: BlackBoxMul, window: IntegerWindow) -> Optional[int]:
    """Brute-force two-sided identity search over a window.

    A candidate u qualifies only if mul(u, n) = n = mul(n, u) for every n
    in the window.
    """
    for u in window:
        if all(mul(u, n) == n and mul(n, u) == n for n in window):
            return u
    return None


def scaled_identity_failure(a: int, n: int, m: int, k: int) -> Optional[str]:
    """Check the ring identities of the scaled family at one point.

    Verifies associativity and two-sided distributivity of n * m = a*n*m,
    each against the other route and against the expanded closed form
    (a*a*n*m*k for the triple product, a*n*m + a*n*k for the split sum),
    plus commutativity. Returns a description of the first failing
    identity, or None when all hold.
    """
    mul = ScaledMult(a)
    try:
        assoc_left = mul(n, mul(m, k))
        assoc_right = mul(mul(n, m), k)
        closed_triple = checked(a * a * n * m * k)
        if not (assoc_left == assoc_right == closed_triple):
            return f"associativity fails at (a={a}, n={n}, m={m}, k={k})"
        dist_left = mul(n, m + k)
        dist_split = checked(mul(n, m) + mul(n, k))
        closed_split = checked(a * n * m + a * n * k)
        if not (dist_left == dist_split == closed_split):
            return f"left distributivity fails at (a={a}, n={n}, m={m}, k={k})"
        if mul(m + k, n) != checked(mul(m, n) + mul(k, n)):
            return f"right distributivity fails at (a={a}, n={n}, m={m}, k={k})"
        if mul(n, m) != mul(m, n):
            return f"commutativity fails at (a={a}, n={n}, m={m})"
    except IntegerOverflowError as exc:
        raise IntegerOverflowError(
            f"overflow in identity check at (a={a}, n={n}, m={m}, k={k}): {exc}"
        ) from exc
    return None


@dataclass(frozen=True)
class IdentitySuiteReport:
    scale: int
    samples: int
    ok: bool
    failure: Optional[str]


def scaled_identity_suite(
    a: int, bound: int, samples: int = 10_000, seed: int = 0
) -> IdentitySuiteReport:
    """Run the ring-identity checks for one scale on random window triples."""
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(-bound, bound)
        m = rng.randint(-bound // 2, bound // 2)
        k = rng.randint(-bound // 2, bound // 2)
        failure = scaled_identity_failure(a, n, m, k)
        if failure is not None:
            return IdentitySuiteReport(a, samples, False, failure)
    return IdentitySuiteReport(a, samples, True, None)


@dataclass(frozen=True)
class ScaledFormReport:
    """Outcome of matching a black-box multiplication against the scaled family."""

    ok: bool
    scale: Optional[int]
    counterexample: Optional[tuple[int, int]]
    rejection: Optional[DistributivityCounterexample]

    @property
    def rejected(self) -> bool:
        return self.rejection is not None


def verify_scaled_form(
    mul: BlackBoxMul,
    window: IntegerWindow,
    samples: int = 512,
    seed: int = 0,
) -> ScaledFormReport:
    """Check that mul(n, m) = a*n*m on the whole window, a = mul(1, 1).

    A multiplication that is not distributive on the window is rejected
    rather than classified; otherwise every pair in the window is compared
    against the scaled form and the first violation, if any, is reported.
    """
    dist = check_distributivity_blackbox(mul, window, samples=samples, seed=seed)
    if not dist.ok:
        return ScaledFormReport(False, None, None, dist.counterexample)
    a = extract_scale(mul)
    b = window.bound
    for n in range(-b, b + 1):
        an = a * n
        for m in range(-b, b + 1):
            if mul(n, m) != checked(an * m):
                return ScaledFormReport(False, a, (n, m), None)
    return ScaledFormReport(True, a, None, None)


# ---------------------------------------------------------------------------
# The same construction on finite base rings.
# ---------------------------------------------------------------------------


def usual_cyclic_ring(modulus: int) -> RingStructure:
    """Z/modulus with its usual multiplication, flags verified."""
    return RingStructure.from_constants(cyclic_constants(modulus, 1))


def _require_associative(ring: RingStructure, op: str) -> None:
    # cached flags are never trusted bare: recheck before relying on them
    if not ring.associative or not check_associativity(ring.mult):
        raise UsageError(f"{op} needs an associative base ring")


def scale_ring(ring: RingStructure, a: GroupElement) -> StructureConstants:
    """Structure constants of (x, y) -> a*x*y inside a finite base ring.

    The scale must be central: the associativity of the scaled product
    reorders factors past a, so a non-central scale would break it. The
    centrality check runs against the generators (sufficient by
    bilinearity) and names a witness on failure.
    """
    _require_associative(ring, "scale_ring")
    if a.group != ring.group:
        raise UsageError("scale_ring: scale element belongs to a different group")
    mult = ring.mult
    for e in ring.group.generators():
        if mult.eval(a, e) != mult.eval(e, a):
            raise UsageError(
                f"scale_ring: scale {a} is not central, it fails to commute "
                f"with {e}"
            )
    table = tuple(
        tuple(mult.eval(a, entry) for entry in row) for row in mult.table
    )
    return StructureConstants(ring.group, table)


def find_pm1_violation(
    ring: RingStructure,
) -> Optional[tuple[GroupElement, GroupElement]]:
    """First pair (a, u) with a*u = 1 beyond (1, 1) and (-1, -1), if any."""
    _require_associative(ring, "find_pm1_violation")
    if ring.unit is None:
        raise UsageError("the reciprocal-pair scan needs a unital base ring")
    one = ring.unit
    minus_one = scalar_mul(-1, one)
    for a in all_elements(ring.group):
        for u in all_elements(ring.group):
            if ring.mult.eval(a, u) == one:
                if (a == one and u == one) or (a == minus_one and u == minus_one):
                    continue
                return (a, u)
    return None


def has_pm1_unit_property(ring: RingStructure) -> bool:
    """True iff the only reciprocal pairs are (1, 1) and (-1, -1)."""
    return find_pm1_violation(ring) is None


@dataclass(frozen=True)
class ScaledUnitEntry:
    scale: GroupElement
    unit: Optional[GroupElement]


def scaled_unit_sweep(ring: RingStructure) -> list[ScaledUnitEntry]:
    """Unit search over every scaled version of a commutative base ring.

    Diagnostic companion to ``check_scaled_unitality``: no hypothesis on
    the reciprocal pairs, so unitality may well appear at scales other
    than plus or minus one (Z/5 with scale 2 is the standard example).
    """
    _require_associative(ring, "scaled_unit_sweep")
    if not check_commutativity(ring.mult):
        raise UsageError("scaled_unit_sweep needs a commutative base ring")
    entries = []
    for a in all_elements(ring.group):
        scaled = scale_ring(ring, a)
        entries.append(ScaledUnitEntry(a, find_unit(scaled)))
    return entries


def check_scaled_unitality(ring: RingStructure) -> list[ScaledUnitEntry]:
    """Verify: a scaled version of the base ring is unital iff scale = +-1.

    Preconditions: the base ring is unital, commutative, and its only
    reciprocal pairs are (1, 1) and (-1, -1). Under those hypotheses the
    sweep must find units exactly at the scales 1 and -1; any departure is
    an invariant violation, not a result.
    """
    _require_associative(ring, "check_scaled_unitality")
    if ring.unit is None:
        raise UsageError("check_scaled_unitality needs a unital base ring")
    if not check_commutativity(ring.mult):
        raise UsageError("check_scaled_unitality needs a commutative base ring")
    violation = find_pm1_violation(ring)
    if violation is not None:
        a, u = violation
        raise UsageError(
            "check_scaled_unitality precondition fails: "
            f"{a} * {u} = 1 with {a} outside {{1, -1}}; "
            "run scaled_unit_sweep for the diagnostic picture"
        )
    one = ring.unit
    minus_one = scalar_mul(-1, one)
    entries = scaled_unit_sweep(ring)
    for entry in entries:
        expected = entry.scale == one or entry.scale == minus_one
        if (entry.unit is not None) != expected:
            raise InvariantViolation(
                f"scaled ring at scale {entry.scale}: unit "
                f"{'found' if entry.unit else 'missing'}, expected "
                f"{'unital' if expected else 'non-unital'}"
            )
    return entries
