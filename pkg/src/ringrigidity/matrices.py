"""Two ring multiplications sharing one additive group of square matrices.

The n x n matrices over Z/m form an abelian group under entrywise
addition. That single addition supports (at least) two genuinely different
ring multiplications: the usual row-by-column product, noncommutative for
n >= 2 with the diagonal identity matrix as unit, and the entrywise
(Hadamard) product, commutative with the all-ones matrix as unit. The base
ring is Z/m rather than the reals so every claim here can be checked
exactly, and exhaustively on tiny carriers.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .errors import InvariantViolation, UsageError

STANDARD = "standard"
HADAMARD = "hadamard"


@dataclass(frozen=True)
class MatrixElement:
    """A square matrix with entries reduced modulo a base modulus."""

    modulus: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise UsageError(f"matrix modulus must be >= 2, got {self.modulus}")
        n = len(self.rows)
        if n < 1 or any(len(row) != n for row in self.rows):
            raise UsageError("matrix must be square with dimension >= 1")
        object.__setattr__(
            self,
            "rows",
            tuple(tuple(x % self.modulus for x in row) for row in self.rows),
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def _check_compatible(a: MatrixElement, b: MatrixElement, op: str) -> None:
    if a.n != b.n or a.modulus != b.modulus:
        raise UsageError(
            f"{op}: shapes {a.n}x{a.n} mod {a.modulus} and "
            f"{b.n}x{b.n} mod {b.modulus} do not mix"
        )


def mat_add(a: MatrixElement, b: MatrixElement) -> MatrixElement:
    _check_compatible(a, b, "mat_add")
    return MatrixElement(
        a.modulus,
        tuple(
            tuple(x + y for x, y in zip(ra, rb))
            for ra, rb in zip(a.rows, b.rows)
        ),
    )


def mat_neg(a: MatrixElement) -> MatrixElement:
    return MatrixElement(a.modulus, tuple(tuple(-x for x in row) for row in a.rows))


def mat_mul_standard(a: MatrixElement, b: MatrixElement) -> MatrixElement:
    """Row-by-column product modulo the base modulus."""
    _check_compatible(a, b, "mat_mul_standard")
    n = a.n
    cols = list(zip(*b.rows))
    return MatrixElement(
        a.modulus,
        tuple(
            tuple(sum(ra[t] * col[t] for t in range(n)) for col in cols)
            for ra in a.rows
        ),
    )


def mat_mul_hadamard(a: MatrixElement, b: MatrixElement) -> MatrixElement:
    """Entrywise product modulo the base modulus."""
    _check_compatible(a, b, "mat_mul_hadamard")
    return MatrixElement(
        a.modulus,
        tuple(
            tuple(x * y for x, y in zip(ra, rb))
            for ra, rb in zip(a.rows, b.rows)
        ),
    )


def zero_matrix(n: int, modulus: int) -> MatrixElement:
    return MatrixElement(modulus, tuple((0,) * n for _ in range(n)))


def unit_matrix(mode: str, n: int, modulus: int) -> MatrixElement:
    """The two-sided identity of the chosen product.

    Diagonal-ones for the standard product, all-ones for the Hadamard
    product; the two coincide only at n = 1. The construction self-checks
    against a few deterministic sample elements.
    """
    if n < 1:
        raise UsageError(f"matrix dimension must be >= 1, got {n}")
    if mode == STANDARD:
        unit = MatrixElement(
            modulus,
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
        )
        product = mat_mul_standard
    elif mode == HADAMARD:
        unit = MatrixElement(modulus, tuple((1,) * n for _ in range(n)))
        product = mat_mul_hadamard
    else:
        raise UsageError(f"unknown multiplication mode {mode!r}")

    rng = random.Random(31 * n + modulus)
    for _ in range(4):
        sample = random_matrix(rng, n, modulus)
        if product(unit, sample) != sample or product(sample, unit) != sample:
            raise InvariantViolation(
                f"{mode} unit failed the identity check against {sample.rows}"
            )
    return unit


def random_matrix(rng: random.Random, n: int, modulus: int) -> MatrixElement:
    return MatrixElement(
        modulus,
        tuple(tuple(rng.randrange(modulus) for _ in range(n)) for _ in range(n)),
    )


def all_matrices(n: int, modulus: int) -> Iterator[MatrixElement]:
    """Every n x n matrix over Z/modulus, lexicographic by flattened entries."""
    for flat in itertools.product(range(modulus), repeat=n * n):
        yield MatrixElement(
            modulus, tuple(flat[i * n : (i + 1) * n] for i in range(n))
        )


def noncommutativity_witness(
    n: int, modulus: int
) -> tuple[MatrixElement, MatrixElement] | None:
    """A fixed pair A, B with A.B != B.A under the standard product.

    Embeds the 2x2 single-entry witness in the top-left corner: A has a
    lone 1 at (0, 1), B at (1, 0), so A.B and B.A land on different
    diagonal cells. Returns None at n = 1, where no witness exists.
    """
    if n < 2:
        return None
    a_rows = [[0] * n for _ in range(n)]
    b_rows = [[0] * n for _ in range(n)]
    a_rows[0][1] = 1
    b_rows[1][0] = 1
    a = MatrixElement(modulus, tuple(tuple(r) for r in a_rows))
    b = MatrixElement(modulus, tuple(tuple(r) for r in b_rows))
    if mat_mul_standard(a, b) == mat_mul_standard(b, a):
        raise InvariantViolation("stored noncommutativity witness commutes")
    return a, b


def sample_axioms(
    mode: str, n: int, modulus: int, triples: int = 1000, seed: int = 7
) -> dict:
    """Sampled ring-axiom summary for one of the two products.

    Checks associativity and two-sided distributivity over entrywise
    addition on random triples, and commutativity on the corresponding
    pairs; for the standard product the stored witness is consulted too,
    so the commutativity verdict at n >= 2 never depends on sampling luck.
    """
    product = mat_mul_standard if mode == STANDARD else mat_mul_hadamard
    rng = random.Random(seed)
    associative = True
    distributive = True
    commutative = True
    for _ in range(triples):
        a = random_matrix(rng, n, modulus)
        b = random_matrix(rng, n, modulus)
        c = random_matrix(rng, n, modulus)
        if product(a, product(b, c)) != product(product(a, b), c):
            associative = False
        if product(a, mat_add(b, c)) != mat_add(product(a, b), product(a, c)):
            distributive = False
        if product(mat_add(b, c), a) != mat_add(product(b, a), product(c, a)):
            distributive = False
        if product(a, b) != product(b, a):
            commutative = False
    if mode == STANDARD and noncommutativity_witness(n, modulus) is not None:
        commutative = False
    return {
        "triples": triples,
        "associative": associative,
        "distributive": distributive,
        "commutative": commutative,
    }
