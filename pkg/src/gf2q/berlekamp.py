"""The squaring matrix Q of a polynomial, factorization, and orders.

For f of degree m, Q(f) is the m x m GF(2) matrix whose row i (0-based)
is the coefficient vector of x^(2i) mod f. Under the row convention of
:mod:`gf2q.linalg2`, v -> v.Q is exactly v -> v^2 mod f, so Q is the
squaring (Frobenius) map on GF(2)[x]/(f).

Key facts the module exposes and its tests pin down exhaustively at
small degree:

* Q(f)^m = I  <=>  f divides x^(2^m) - x.
* Q(f) is invertible  <=>  f is squarefree  <=>  Q(f) has some finite
  multiplicative order. Note that Q^m = I is strictly stronger than
  squarefreeness: f = (x^2+x+1)(x^3+x+1) is squarefree of degree 5 but
  its Q has order 6, so Q^5 != I.
* For squarefree f, the order of Q(f) is the least common multiple of
  the degrees of f's distinct irreducible factors.

Factorization uses the classic nullspace method: for squarefree g the
left nullspace of Q(g) - I has one basis vector per distinct irreducible
factor, and gcd(g, v) / gcd(g, v+1) split g along any basis polynomial
v. Multiplicities are recovered first by squarefree decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from ._backend import impl
from .gf2poly import Poly
from .linalg2 import BitMatrix

#: Default cap on deg f for Q-matrix construction (Q is m x m).
DEGREE_CAP = 4096


@dataclass(frozen=True)
class Factorization:
    """Irreducible factors with multiplicities, sorted by (degree, bits).

    The product of factor^multiplicity reconstructs the input exactly;
    factors are pairwise distinct.
    """

    factors: tuple[tuple[Poly, int], ...]

    def product(self) -> Poly:
        acc = 1
        for p, mult in self.factors:
            for _ in range(mult):
                acc = impl.pmul(acc, p.bits)
        return Poly(acc)

    def distinct_degrees(self) -> tuple[int, ...]:
        return tuple(p.bits.bit_length() - 1 for p, _ in self.factors)

    def is_squarefree(self) -> bool:
        return all(mult == 1 for _, mult in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class PolyOrder:
    """The multiplicative order of Q(f) for squarefree f."""

    value: int

    def __int__(self) -> int:
        return self.value


def int_gcd(values: Iterable[int]) -> int:
    """gcd of a collection of nonnegative ints."""
    return math.gcd(*values)


def int_lcm(values: Iterable[int]) -> int:
    """lcm of a collection of positive ints (exact, arbitrary precision)."""
    return math.lcm(*values)


def _require_nonconstant(f: Poly) -> int:
    m = f.bits.bit_length() - 1
    if m < 1:
        raise ValueError(f"operation requires degree >= 1, got {f!r}")
    return m


def build_q(f: Poly, max_degree: int | None = None) -> BitMatrix:
    """The m x m squaring matrix of f; row i is x^(2i) mod f.

    Row 0 is always the first unit vector. ``max_degree`` guards the
    m x m allocation (default DEGREE_CAP).
    """
    m = _require_nonconstant(f)
    cap = DEGREE_CAP if max_degree is None else max_degree
    if m > cap:
        raise ValueError(f"degree {m} exceeds the Q-matrix cap {cap}")
    return BitMatrix(impl.qmatrix_rows(f.bits))


def frobenius_apply(q: BitMatrix, a: Poly, f: Poly) -> Poly:
    """The polynomial with coefficient row-vector coeffs(a).Q.

    Requires deg a < deg f and q == build_q(f); equals square_mod(a, f).
    """
    m = _require_nonconstant(f)
    if a.bits.bit_length() > m:
        raise ValueError(f"deg a must be < deg f = {m}, got {a!r}")
    if q.n != m:
        raise ValueError(f"Q is {q.n} x {q.n} but deg f = {m}")
    v = a.bits
    acc = 0
    while v:
        low = v & -v
        acc ^= q.rows[low.bit_length() - 1]
        v ^= low
    return Poly(acc)


def _squarefree_decompose_bits(f: int) -> list[tuple[int, int]]:
    """Squarefree decomposition on raw bit-vectors; see squarefree_decompose."""
    out: dict[int, int] = {}
    d = impl.pderiv(f)
    if d == 0:
        # all exponents even: f = g(x)^2 with g the even-position bits
        for part, e in _squarefree_decompose_bits(impl.psqrt(f)):
            out[part] = out.get(part, 0) + 2 * e
    else:
        c = impl.pgcd(f, d)
        w = impl.pdivmod(f, c)[0]
        i = 1
        while w != 1:
            y = impl.pgcd(w, c)
            z = impl.pdivmod(w, y)[0]
            if z != 1:
                out[z] = out.get(z, 0) + i
            w = y
            c = impl.pdivmod(c, y)[0]
            i += 1
        if c != 1:
            for part, e in _squarefree_decompose_bits(impl.psqrt(c)):
                out[part] = out.get(part, 0) + 2 * e
    return sorted(out.items(), key=lambda kv: (kv[1], kv[0]))


def squarefree_decompose(f: Poly) -> tuple[tuple[Poly, int], ...]:
    """Split f into pairwise-coprime squarefree parts with exponents.

    Returns ((part, exponent), ...) with f = prod part^exponent, each
    part squarefree, parts pairwise coprime, sorted by exponent.
    """
    _require_nonconstant(f)
    return tuple((Poly(p), e) for p, e in _squarefree_decompose_bits(f.bits))


def _factor_squarefree_bits(g: int) -> list[int]:
    """Distinct irreducible factors of squarefree g, sorted ascending."""
    m = g.bit_length() - 1
    if m == 1:
        return [g]
    rows = impl.qmatrix_rows(g)
    qmi = [rows[i] ^ (1 << i) for i in range(m)]  # Q - I
    basis = impl.mat_nullspace(qmi, m)
    r = len(basis)
    if r == 1:
        return [g]
    factors = [g]
    for v in basis:
        if len(factors) == r:
            break
        if v == 1:
            continue  # the constant polynomial never splits anything
        split: list[int] = []
        for u in factors:
            a = impl.pgcd(u, v)
            if a == 1 or a == u:
                split.append(u)
            else:
                # u = gcd(u, v) * gcd(u, v+1); the cofactor is the second gcd
                split.append(a)
                split.append(impl.pdivmod(u, a)[0])
        factors = split
    if len(factors) != r:
        raise AssertionError(f"nullspace basis failed to separate {g:#x}")
    factors.sort()
    return factors


def _factor_bits(f: int) -> list[tuple[int, int]]:
    """Complete factorization on raw bit-vectors, sorted by factor value."""
    out: dict[int, int] = {}
    for part, exp in _squarefree_decompose_bits(f):
        for irr in _factor_squarefree_bits(part):
            out[irr] = out.get(irr, 0) + exp
    return sorted(out.items())


def factor(f: Poly) -> Factorization:
    """Complete factorization into irreducibles with multiplicities.

    Squarefree-decomposes f, then splits each squarefree part with the
    nullspace of Q - I (the nullity equals the number of distinct
    irreducible factors). Output order is ascending (degree, bits), and
    the whole pipeline is deterministic.
    """
    _require_nonconstant(f)
    return Factorization(tuple((Poly(p), e) for p, e in _factor_bits(f.bits)))


def _poly_order_bits(f: int) -> int:
    if impl.pgcd(f, impl.pderiv(f)) != 1:
        raise ValueError(
            "order undefined: the squaring matrix of a non-squarefree "
            "polynomial has no finite multiplicative order"
        )
    degrees = [g.bit_length() - 1 for g in _factor_squarefree_bits(f)]
    return math.lcm(*degrees)


def poly_order(f: Poly) -> PolyOrder:
    """Order of Q(f) for squarefree f: lcm of distinct factor degrees.

    Raises for non-squarefree input, whose Q is singular and has no
    order at all.
    """
    _require_nonconstant(f)
    return PolyOrder(_poly_order_bits(f.bits))


def divides_x2m_minus_x(f: Poly) -> bool:
    """True iff f divides x^(2^m) - x for m = deg f.

    Computed as x^(2^m) == x (mod f) by repeated squaring; equivalent to
    Q(f)^m == I, which the test suite checks exhaustively.
    """
    m = _require_nonconstant(f)
    return impl.ppow2k_mod(m, f.bits) == impl.pmod(2, f.bits)


def factorization_to_json(f: Poly, fact: Factorization) -> dict:
    """JSON payload for a factorization, with the order when defined."""
    try:
        order: int | None = _poly_order_bits(f.bits)
    except ValueError:
        order = None
    return {
        "input": f.hex(),
        "factors": [
            {"poly": p.hex(), "text": str(p), "multiplicity": mult} for p, mult in fact
        ],
        "order": order,
    }
