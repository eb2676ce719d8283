"""Dense linear algebra over GF(2) on bit-packed row matrices.

A :class:`BitMatrix` is square, stored as a tuple of n row ints with bit
j of row i holding the (i, j) entry. All products use the row-vector
convention (v.A = XOR of the rows of A picked by the set bits of v),
matching the squaring-matrix semantics in :mod:`gf2q.berlekamp`; a
column convention would silently transpose every contract here.

Elimination pivots are chosen in column order, lowest row index first,
so ranks and nullspace bases are deterministic across runs and backends.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ._backend import impl


class BitMatrix:
    """An immutable square matrix over GF(2)."""

    __slots__ = ("n", "rows")

    n: int
    rows: tuple[int, ...]

    def __init__(self, rows: Sequence[int]):
        n = len(rows)
        if n == 0:
            raise ValueError("matrix dimension must be >= 1")
        limit = 1 << n
        for i, r in enumerate(rows):
            if not isinstance(r, int) or r < 0 or r >= limit:
                raise ValueError(f"row {i} is not a {n}-bit row vector: {r!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("BitMatrix is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"BitMatrix({list(self.rows)!r})"

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_bitstrings(self) -> list[str]:
        """Rows as little-endian bit-strings: character j is column j."""
        return [format(r, f"0{self.n}b")[::-1] for r in self.rows]

    @classmethod
    def from_bitstrings(cls, strings: Iterable[str]) -> BitMatrix:
        rows = []
        for s in strings:
            if not s or set(s) - {"0", "1"}:
                raise ValueError(f"malformed row bit-string {s!r}")
            rows.append(int(s[::-1], 2))
        return cls(rows)


def identity(n: int) -> BitMatrix:
    """The n x n identity; n must be >= 1."""
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    return BitMatrix([1 << i for i in range(n)])


def _check_same(a: BitMatrix, b: BitMatrix) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2) by row-by-row XOR accumulation."""
    _check_same(a, b)
    return BitMatrix(impl.mat_mul(list(a.rows), list(b.rows), a.n))


def matpow(a: BitMatrix, e: int) -> BitMatrix:
    """a^e by square-and-multiply; a^0 is the identity."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return BitMatrix(impl.mat_pow(list(a.rows), e, a.n))


def rank(a: BitMatrix) -> int:
    """Rank over GF(2)."""
    return impl.mat_rank(list(a.rows), a.n)


def nullspace(a: BitMatrix) -> tuple[int, ...]:
    """Deterministic basis of the left nullspace {v : v.A == 0}.

    Basis vectors are row-vector ints; the basis has n - rank(a)
    elements and is byte-for-byte reproducible.
    """
    return tuple(impl.mat_nullspace(list(a.rows), a.n))


def apply_row(v: int, a: BitMatrix) -> int:
    """v.A for a row vector v given as an int."""
    if v < 0 or v >= (1 << a.n):
        raise ValueError(f"not a {a.n}-bit row vector: {v!r}")
    acc = 0
    while v:
        low = v & -v
        acc ^= a.rows[low.bit_length() - 1]
        v ^= low
    return acc


def multiplicative_order(a: BitMatrix, bound: int) -> int:
    """Least k >= 1 with a^k == I, found by cycle-stepping a, a^2, ...

    Raises if a is singular (no power is ever the identity) or if no
    k <= bound works. For the squaring matrix of a squarefree degree-n
    polynomial, bound = lcm(1..n) is always sufficient.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if impl.mat_rank(list(a.rows), a.n) < a.n:
        raise ValueError("no order exists: matrix is singular")
    k = impl.mat_order(list(a.rows), a.n, bound)
    if k == 0:
        raise ValueError(f"no power up to the bound {bound} equals the identity")
    return k
