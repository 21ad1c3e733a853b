"""Candidate ring multiplications on finite abelian groups.

A bilinear multiplication on Z/n_1 x ... x Z/n_k is pinned down by its
structure constants, the k x k table of generator products C[i][j] =
e_i * e_j. Distributivity then holds by construction, so only
associativity, commutativity and unitality remain to be checked. The
bilinear extension is consistent on the quotients exactly when the order
of C[i][j] divides gcd(n_i, n_j); tables violating that are rejected at
construction time.

Black-box multiplications on windowed integers are handled separately:
they are opaque binary functions, probed for distributivity on small
exhaustive triples plus random samples.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Optional

from .abelian import (
    DEFAULT_ELEMENT_CAP,
    GroupElement,
    GroupSpec,
    IntegerWindow,
    all_elements,
    checked_add,
    element_order,
    scalar_mul,
)
from .errors import IntegerOverflowError, UsageError

BlackBoxMul = Callable[[int, int], int]


@dataclass(frozen=True)
class StructureConstants:
    """Generator products determining a bilinear multiplication."""

    group: GroupSpec
    table: tuple[tuple[GroupElement, ...], ...]

    def __post_init__(self) -> None:
        k = self.group.rank
        table = tuple(tuple(row) for row in self.table)
        if len(table) != k or any(len(row) != k for row in table):
            raise UsageError(f"structure-constant table must be {k}x{k}")
        moduli = self.group.moduli
        for i, row in enumerate(table):
            for j, entry in enumerate(row):
                if entry.group != self.group:
                    raise UsageError(
                        f"table entry [{i}][{j}] belongs to {entry.group}, "
                        f"not {self.group}"
                    )
                bound = math.gcd(moduli[i], moduli[j])
                if bound % element_order(entry) != 0:
                    raise UsageError(
                        f"table entry [{i}][{j}] = {entry} has order "
                        f"{element_order(entry)}, which does not divide "
                        f"gcd({moduli[i]}, {moduli[j]}) = {bound}; the "
                        "bilinear extension would be ill-defined"
                    )
        object.__setattr__(self, "table", table)

    @classmethod
    def from_coords(cls, group: GroupSpec, entries) -> StructureConstants:
        """Build from raw coordinate vectors (or bare residues for rank 1)."""
        table = tuple(
            tuple(group.element(e) for e in row) for row in entries
        )
        return cls(group, table)

    def eval(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """The bilinear product of g and h: sum of g_i * h_j * C[i][j]."""
        if g.group != self.group or h.group != self.group:
            raise UsageError("eval: elements do not belong to this table's group")
        acc = self.group.zero()
        for i, gi in enumerate(g.coords):
            if gi == 0:
                continue
            row = self.table[i]
            for j, hj in enumerate(h.coords):
                if hj == 0:
                    continue
                acc = acc + scalar_mul(gi * hj, row[j])
        return acc

    def coords_table(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """The table as plain coordinate tuples, for serialization."""
        return tuple(tuple(e.coords for e in row) for row in self.table)


def cyclic_constants(modulus: int, scale: int) -> StructureConstants:
    """The multiplication n*m = scale*n*m on Z/modulus."""
    spec = GroupSpec((modulus,))
    return StructureConstants(spec, ((spec.element(scale),),))


def check_associativity(constants: StructureConstants) -> bool:
    """Associativity on all generator triples.

    By trilinearity this is equivalent to associativity on every element;
    the test suite cross-checks that equivalence against full |G|^3 scans
    on small groups.
    """
    gens = constants.group.generators()
    for ei in gens:
        for ej in gens:
            left = constants.eval(ei, ej)
            for ek in gens:
                if constants.eval(left, ek) != constants.eval(
                    ei, constants.eval(ej, ek)
                ):
                    return False
    return True


def check_commutativity(constants: StructureConstants) -> bool:
    """Table symmetry; by bilinearity, sufficient and necessary."""
    k = constants.group.rank
    return all(
        constants.table[i][j] == constants.table[j][i]
        for i in range(k)
        for j in range(i + 1, k)
    )


def find_unit(
    constants: StructureConstants, cap: int = DEFAULT_ELEMENT_CAP
) -> Optional[GroupElement]:
    """The unique two-sided identity, or None.

    Scans all elements, testing each candidate against the generators
    (sufficient by bilinearity); a surviving candidate is then verified
    against every element before being returned.
    """
    gens = constants.group.generators()
    for u in all_elements(constants.group, cap):
        if all(
            constants.eval(u, e) == e and constants.eval(e, u) == e
            for e in gens
        ):
            for g in all_elements(constants.group, cap):
                if constants.eval(u, g) != g or constants.eval(g, u) != g:
                    break
            else:
                return u
    return None


@dataclass(frozen=True)
class RingStructure:
    """A multiplication together with its verified classification flags."""

    group: GroupSpec
    mult: StructureConstants
    associative: bool
    commutative: bool
    unit: Optional[GroupElement]

    @classmethod
    def from_constants(
        cls, constants: StructureConstants, cap: int = DEFAULT_ELEMENT_CAP
    ) -> RingStructure:
        return cls(
            group=constants.group,
            mult=constants,
            associative=check_associativity(constants),
            commutative=check_commutativity(constants),
            unit=find_unit(constants, cap),
        )


@dataclass(frozen=True)
class DistributivityCounterexample:
    side: str  # "left" for n*(m+k), "right" for (m+k)*n
    n: int
    m: int
    k: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class DistributivityReport:
    ok: bool
    counterexample: Optional[DistributivityCounterexample]
    checked: int


def _dist_at(mul: BlackBoxMul, n: int, m: int, k: int):
    try:
        left_whole = mul(n, m + k)
        left_split = checked_add(mul(n, m), mul(n, k))
        right_whole = mul(m + k, n)
        right_split = checked_add(mul(m, n), mul(k, n))
    except IntegerOverflowError as exc:
        raise IntegerOverflowError(
            f"overflow while checking distributivity at (n={n}, m={m}, k={k}): {exc}"
        ) from exc
    if left_whole != left_split:
        return DistributivityCounterexample("left", n, m, k, left_whole, left_split)
    if right_whole != right_split:
        return DistributivityCounterexample("right", n, m, k, right_whole, right_split)
    return None


def check_distributivity_blackbox(
    mul: BlackBoxMul,
    window: IntegerWindow,
    samples: int = 512,
    seed: int = 0,
) -> DistributivityReport:
    """Probe an opaque integer multiplication for two-sided distributivity.

    Runs every triple with |n|, |m|, |k| <= 3 first (so small
    counterexamples are found deterministically), then `samples` random
    triples drawn with m, k in the half window so that m + k stays inside
    the window. Returns the first counterexample, if any.
    """
    checked_count = 0
    small = min(3, window.bound)
    for n in range(-small, small + 1):
        for m in range(-small, small + 1):
            for k in range(-small, small + 1):
                checked_count += 1
                bad = _dist_at(mul, n, m, k)
                if bad is not None:
                    return DistributivityReport(False, bad, checked_count)

    rng = random.Random(seed)
    half = window.bound // 2
    for _ in range(samples):
        n = rng.randint(-window.bound, window.bound)
        m = rng.randint(-half, half)
        k = rng.randint(-half, half)
        checked_count += 1
        bad = _dist_at(mul, n, m, k)
        if bad is not None:
            return DistributivityReport(False, bad, checked_count)
    return DistributivityReport(True, None, checked_count)
