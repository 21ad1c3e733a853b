"""Shared helpers: independent oracles and small-group generators.

The oracles here deliberately avoid the library's own shortcuts: repeated
addition instead of modular scalar multiplication, full element scans
instead of generator checks. Tests compare the fast path against these.
"""

from __future__ import annotations

import math
import random

from ringrigidity import GroupElement, GroupSpec, StructureConstants, all_elements


def iterated_add(g: GroupElement, count: int) -> GroupElement:
    """count-fold sum of g using only the group addition."""
    acc = g.group.zero()
    step = g if count >= 0 else -g
    for _ in range(abs(count)):
        acc = acc + step
    return acc


def naive_eval(
    table, g: GroupElement, h: GroupElement
) -> GroupElement:
    """Bilinear product computed purely by iterated addition.

    `table` is a k x k grid of GroupElements; the coordinates of g and h
    are used as plain repetition counts.
    """
    acc = g.group.zero()
    for i, gi in enumerate(g.coords):
        for j, hj in enumerate(h.coords):
            acc = acc + iterated_add(table[i][j], gi * hj)
    return acc


def factor_sequences(max_order: int) -> list[tuple[int, ...]]:
    """Every ordered factor list (entries >= 2) with product <= max_order."""
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], product: int) -> None:
        if prefix:
            out.append(prefix)
        f = 2
        while product * f <= max_order:
            extend(prefix + (f,), product * f)
            f += 1

    extend((), 1)
    return sorted(out)


def allowed_entries(spec: GroupSpec, i: int, j: int) -> list[GroupElement]:
    """Elements usable at table cell (i, j): order divides gcd(n_i, n_j)."""
    d = math.gcd(spec.moduli[i], spec.moduli[j])
    return [g for g in all_elements(spec) if iterated_add(g, d).is_zero()]


def random_constants(spec: GroupSpec, rng: random.Random) -> StructureConstants:
    """A uniformly random well-defined structure-constant table."""
    k = spec.rank
    table = tuple(
        tuple(rng.choice(allowed_entries(spec, i, j)) for j in range(k))
        for i in range(k)
    )
    return StructureConstants(spec, table)


def full_mult_table(constants: StructureConstants) -> dict:
    """Precomputed products over all element pairs, for fast exhaustive scans."""
    elements = list(all_elements(constants.group))
    return {(g, h): constants.eval(g, h) for g in elements for h in elements}
