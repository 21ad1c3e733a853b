"""Finite abelian groups as explicit products of cyclic factors.

A group is given by its factor moduli ``(n_1, ..., n_k)`` and carries
elements as residue vectors. Z/2 x Z/3 and Z/6 are deliberately distinct
specs: no Smith-normal-form canonicalization is performed, which keeps the
element representation transparent.

The module also provides ``IntegerWindow``, a bounded symmetric slice of
the integers used to machine-check statements about (Z, +) at desk scale,
together with capacity-checked integer arithmetic. All arithmetic is exact;
a value that leaves the fixed-width representation range raises
``IntegerOverflowError`` instead of wrapping around.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator

from .errors import CapacityError, IntegerOverflowError, UsageError

# Signed 64-bit range, the representation the checked arithmetic emulates.
INT_CAPACITY = 2**63 - 1

DEFAULT_ELEMENT_CAP = 10**6


def checked(value: int, context: str = "") -> int:
    """Return *value* unchanged, or raise if it left the representable range."""
    if value > INT_CAPACITY or value < -INT_CAPACITY:
        where = f" in {context}" if context else ""
        raise IntegerOverflowError(
            f"integer {value} exceeds the checked capacity {INT_CAPACITY}{where}"
        )
    return value


def checked_mul(x: int, y: int, context: str = "") -> int:
    return checked(x * y, context)


def checked_add(x: int, y: int, context: str = "") -> int:
    return checked(x + y, context)


@dataclass(frozen=True)
class GroupSpec:
    """The group Z/n_1 x ... x Z/n_k, each factor modulus >= 2."""

    moduli: tuple[int, ...]
    order: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not self.moduli:
            raise UsageError("a group spec needs at least one factor")
        for n in self.moduli:
            if not isinstance(n, int) or n < 2:
                raise UsageError(f"modulus must be >= 2, got {n!r}")
        order = math.prod(self.moduli)
        checked(order, "group order")
        object.__setattr__(self, "moduli", tuple(self.moduli))
        object.__setattr__(self, "order", order)

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        """Parse a comma-separated modulus list such as ``"4"`` or ``"2,2,3"``."""
        parts = [p.strip() for p in text.split(",")]
        try:
            moduli = tuple(int(p) for p in parts if p != "")
        except ValueError:
            raise UsageError(f"cannot parse group spec {text!r}") from None
        if len(moduli) != len(parts):
            raise UsageError(f"cannot parse group spec {text!r}")
        return cls(moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def is_cyclic(self) -> bool:
        """True for single-factor specs. Z/2 x Z/3 counts as two factors."""
        return len(self.moduli) == 1

    def element(self, coords) -> GroupElement:
        """Build an element, reducing each coordinate modulo its factor."""
        if isinstance(coords, int):
            coords = (coords,)
        return GroupElement(self, tuple(coords))

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.moduli))

    def generators(self) -> tuple[GroupElement, ...]:
        """The standard generators e_1, ..., e_k."""
        k = len(self.moduli)
        return tuple(
            GroupElement(self, tuple(1 if j == i else 0 for j in range(k)))
            for i in range(k)
        )

    def __str__(self) -> str:
        return " x ".join(f"Z/{n}" for n in self.moduli)


@dataclass(frozen=True)
class GroupElement:
    """A residue vector in its owning group spec."""

    group: GroupSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        moduli = self.group.moduli
        if len(self.coords) != len(moduli):
            raise UsageError(
                f"element has {len(self.coords)} coordinates, "
                f"group {self.group} has {len(moduli)} factors"
            )
        object.__setattr__(
            self, "coords", tuple(c % n for c, n in zip(self.coords, moduli))
        )

    def __add__(self, other: GroupElement) -> GroupElement:
        return add(self, other)

    def __neg__(self) -> GroupElement:
        return scalar_mul(-1, self)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return add(self, scalar_mul(-1, other))

    def __rmul__(self, c: int) -> GroupElement:
        if not isinstance(c, int):
            return NotImplemented
        return scalar_mul(c, self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _same_group(g: GroupElement, h: GroupElement, op: str) -> None:
    if g.group != h.group:
        raise UsageError(f"{op}: elements of {g.group} and {h.group} do not mix")


def add(g: GroupElement, h: GroupElement) -> GroupElement:
    """Coordinatewise sum modulo each factor."""
    _same_group(g, h, "add")
    return GroupElement(
        g.group, tuple(a + b for a, b in zip(g.coords, h.coords))
    )


def scalar_mul(c: int, g: GroupElement) -> GroupElement:
    """The c-fold sum of g (inverse-sum for negative c).

    Computed by modular multiplication per coordinate, which agrees with
    iterated addition; the test suite pins that agreement down.
    """
    return GroupElement(g.group, tuple(c * x for x in g.coords))


def element_order(g: GroupElement) -> int:
    """Least d >= 1 with d*g = 0; always divides the group order.

    Computed exactly from the coordinate orders: the order of residue x in
    Z/n is n / gcd(x, n), and the order of a vector is the lcm over factors.
    """
    return math.lcm(
        *(n // math.gcd(x, n) for x, n in zip(g.coords, g.group.moduli))
    )


def all_elements(
    spec: GroupSpec, cap: int = DEFAULT_ELEMENT_CAP
) -> Iterator[GroupElement]:
    """Every element exactly once, in lexicographic coordinate order."""
    if spec.order > cap:
        raise CapacityError(
            f"group order {spec.order} exceeds the enumeration cap {cap}"
        )
    for coords in itertools.product(*(range(n) for n in spec.moduli)):
        yield GroupElement(spec, coords)


@dataclass(frozen=True)
class IntegerWindow:
    """The symmetric slice {-bound, ..., bound} of the integers."""

    bound: int

    def __post_init__(self) -> None:
        if not isinstance(self.bound, int) or self.bound < 1:
            raise UsageError(f"window bound must be a positive integer, got {self.bound!r}")

    def __contains__(self, n: int) -> bool:
        return -self.bound <= n <= self.bound

    def __iter__(self) -> Iterator[int]:
        return iter(range(-self.bound, self.bound + 1))

    def __len__(self) -> int:
        return 2 * self.bound + 1
