"""Exhaustive census of ring multiplications on a finite abelian group.

Candidates are structure-constant tables: entry (i, j) ranges over the
elements whose order divides gcd(n_i, n_j), which is exactly the
well-definedness constraint, so distributivity holds by construction and
only associativity filters the stream. Candidates are visited in
lexicographic order of the flattened table, making runs reproducible and
the search resumable by prefix.

The search space is partitioned across workers by fixing the value of the
first constant; each partition is independent and results merge back in
deterministic order.

``full_table_oracle`` is the independent cross-check: it enumerates raw
N x N Cayley tables with no structure-constant machinery at all and keeps
the ones that are distributive and associative over addition mod N.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, Optional

from .abelian import GroupElement, GroupSpec, all_elements, element_order
from .errors import CapacityError, InvariantViolation, UsageError
from .structures import (
    RingStructure,
    StructureConstants,
    check_associativity,
    find_unit,
)

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the enumeration engine; all caps are positive."""

    group_order_cap: int = 10_000
    full_table_cap: int = 3
    workers: int = 1
    deterministic: bool = True
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        for name in ("group_order_cap", "full_table_cap", "workers", "budget"):
            if getattr(self, name) < 1:
                raise UsageError(f"search config {name} must be positive")


def _candidate_sets(spec: GroupSpec) -> list[list[GroupElement]]:
    """Per table cell (row-major), the elements allowed by well-definedness."""
    elements = list(all_elements(spec))
    k = spec.rank
    sets: list[list[GroupElement]] = []
    for i in range(k):
        for j in range(k):
            d = math.gcd(spec.moduli[i], spec.moduli[j])
            sets.append([g for g in elements if d % element_order(g) == 0])
    return sets


def search_space_size(spec: GroupSpec) -> int:
    return math.prod(len(s) for s in _candidate_sets(spec))


def _survivors(
    spec: GroupSpec, flats: Iterator[tuple[GroupElement, ...]]
) -> list[RingStructure]:
    k = spec.rank
    found = []
    for flat in flats:
        table = tuple(flat[i * k : (i + 1) * k] for i in range(k))
        constants = StructureConstants(spec, table)
        if check_associativity(constants):
            found.append(RingStructure.from_constants(constants))
    return found


def _partition_task(args: tuple[tuple[int, ...], tuple[int, ...]]) -> list[RingStructure]:
    moduli, first_coords = args
    spec = GroupSpec(moduli)
    sets = _candidate_sets(spec)
    first = GroupElement(spec, first_coords)
    flats = ((first,) + rest for rest in itertools.product(*sets[1:]))
    return _survivors(spec, flats)


def enumerate_multiplications(
    spec: GroupSpec, config: SearchConfig = SearchConfig()
) -> Iterator[RingStructure]:
    """Every associative bilinear multiplication on the group, exactly once.

    Emitted in lexicographic order of the flattened constant table. The
    candidate count (before the associativity filter) is charged against
    the budget up front.
    """
    if spec.order > config.group_order_cap:
        raise CapacityError(
            f"group order {spec.order} exceeds the search cap "
            f"{config.group_order_cap}"
        )
    sets = _candidate_sets(spec)
    size = math.prod(len(s) for s in sets)
    if size > config.budget:
        raise CapacityError(
            f"search space has {size} candidate tables, over the budget "
            f"of {config.budget}"
        )
    if config.workers <= 1:
        yield from _survivors(spec, itertools.product(*sets))
        return
    tasks = [(spec.moduli, first.coords) for first in sets[0]]
    with Pool(min(config.workers, len(tasks))) as pool:
        if config.deterministic:
            for batch in pool.map(_partition_task, tasks):
                yield from batch
        else:
            for batch in pool.imap_unordered(_partition_task, tasks):
                yield from batch


@dataclass(frozen=True)
class RigidityReport:
    """How far the group is from determining its own multiplication."""

    group: GroupSpec
    total: int
    commutative_count: int
    unital_count: int
    unital_scales: Optional[tuple[int, ...]]  # single-factor groups only
    scaled_form_all: Optional[bool]  # single-factor groups only
    unital_examples: tuple[RingStructure, ...]
    search_space: int
    elapsed_ms: int


def _matches_scaled_form(constants: StructureConstants) -> bool:
    """Exhaustive check that a cyclic multiplication is scale*n*m for its own scale."""
    spec = constants.group
    modulus = spec.moduli[0]
    scale = constants.table[0][0].coords[0]
    for n in range(modulus):
        gn = spec.element(n)
        for m in range(modulus):
            if constants.eval(gn, spec.element(m)).coords[0] != (scale * n * m) % modulus:
                return False
    return True


def rigidity_report(
    spec: GroupSpec, config: SearchConfig = SearchConfig()
) -> RigidityReport:
    """Aggregate the enumeration stream into the census counts."""
    start = time.perf_counter()
    total = 0
    commutative = 0
    unital = 0
    scales: list[int] = []
    scaled_form_all: Optional[bool] = True if spec.is_cyclic else None
    examples: list[RingStructure] = []
    for ring in enumerate_multiplications(spec, config):
        total += 1
        if ring.commutative:
            commutative += 1
        if ring.unit is not None:
            unital += 1
            if spec.is_cyclic:
                scales.append(ring.mult.table[0][0].coords[0])
            if len(examples) < 2 and all(
                ring.mult.table != seen.mult.table for seen in examples
            ):
                examples.append(ring)
        if spec.is_cyclic and not _matches_scaled_form(ring.mult):
            scaled_form_all = False
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return RigidityReport(
        group=spec,
        total=total,
        commutative_count=commutative,
        unital_count=unital,
        unital_scales=tuple(sorted(scales)) if spec.is_cyclic else None,
        scaled_form_all=scaled_form_all,
        unital_examples=tuple(examples),
        search_space=search_space_size(spec),
        elapsed_ms=elapsed_ms,
    )


@dataclass(frozen=True)
class CyclicClassification:
    scale: int
    unital: bool
    unit: Optional[int]
    is_minus_one: bool


def classify_cyclic(
    modulus: int, config: SearchConfig = SearchConfig()
) -> list[CyclicClassification]:
    """Classify every multiplication on Z/modulus by its scale mul(1, 1).

    Each candidate is verified exhaustively against scale*n*m over all
    modulus^2 products; a mismatch would contradict what the enumeration
    guarantees, so it raises rather than reports.
    """
    spec = GroupSpec((modulus,))
    out = []
    for ring in enumerate_multiplications(spec, config):
        one = spec.element(1)
        scale = ring.mult.eval(one, one).coords[0]
        if scale != ring.mult.table[0][0].coords[0] or not _matches_scaled_form(
            ring.mult
        ):
            raise InvariantViolation(
                f"multiplication on Z/{modulus} is not the scaled form of its "
                f"own mul(1,1) = {scale}"
            )
        unit = ring.unit
        out.append(
            CyclicClassification(
                scale=scale,
                unital=unit is not None,
                unit=unit.coords[0] if unit is not None else None,
                is_minus_one=scale == modulus - 1,
            )
        )
    return out


FullTable = tuple[tuple[int, ...], ...]


def _table_distributive(table: FullTable, modulus: int) -> bool:
    rng = range(modulus)
    for a in rng:
        row = table[a]
        for b in rng:
            for c in rng:
                if row[(b + c) % modulus] != (row[b] + row[c]) % modulus:
                    return False
                if table[(b + c) % modulus][a] != (table[b][a] + table[c][a]) % modulus:
                    return False
    return True


def _table_associative(table: FullTable, modulus: int) -> bool:
    rng = range(modulus)
    return all(
        table[table[a][b]][c] == table[a][table[b][c]]
        for a in rng
        for b in rng
        for c in rng
    )


def full_table_oracle(modulus: int, cap: int = 3) -> frozenset[FullTable]:
    """All N^(N^2) Cayley tables on {0..N-1}, filtered to ring multiplications.

    Deliberately ignorant of the structure-constant pipeline: tables are
    raw tuples, distributivity and associativity are checked directly over
    all triples. The survivor set is the ground truth the enumeration is
    compared against.
    """
    if modulus > cap:
        raise CapacityError(
            f"full-table oracle capped at carrier size {cap}, got {modulus} "
            f"({modulus}^{modulus * modulus} tables)"
        )
    survivors = []
    for flat in itertools.product(range(modulus), repeat=modulus * modulus):
        table = tuple(
            flat[i * modulus : (i + 1) * modulus] for i in range(modulus)
        )
        if _table_distributive(table, modulus) and _table_associative(table, modulus):
            survivors.append(table)
    return frozenset(survivors)


def expand_to_full_table(constants: StructureConstants) -> FullTable:
    """Expand a cyclic structure-constant table to its full Cayley table."""
    spec = constants.group
    modulus = spec.moduli[0]
    return tuple(
        tuple(
            constants.eval(spec.element(n), spec.element(m)).coords[0]
            for m in range(modulus)
        )
        for n in range(modulus)
    )
