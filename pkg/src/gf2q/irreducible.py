"""Irreducibility testing, counting, and enumeration over GF(2).

The count of degree-l irreducibles is N(l) = (1/l) sum_{d|l} mu(d)
2^(l/d); the first values are N(1)=2, N(2)=1, N(3)=2, N(4)=3, N(5)=6.
Testing uses the derandomized Rabin criterion: f of degree m is
irreducible iff x^(2^m) == x (mod f) and gcd(x^(2^(m/r)) - x, f) == 1
for every prime r dividing m. Subtraction is XOR here.

Enumeration is numeric-ascending on the coefficient bit-vector, so
"the first k irreducibles of degree l" is deterministic across runs and
platforms. A small memo table caches scans; it is guarded by a lock
(single writer, any readers) and results are identical with or without
it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from ._backend import impl
from .gf2poly import Poly


@dataclass(frozen=True)
class IrreducibleCount:
    """Exact number of irreducible polynomials of one degree."""

    degree: int
    count: int

    def __int__(self) -> int:
        return self.count


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending, by trial division."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _prime_factorization(n: int) -> list[tuple[int, int]]:
    """(prime, exponent) pairs of n >= 2, ascending by prime."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _is_prime(n: int) -> bool:
    return n >= 2 and _prime_factors(n) == [n]


def mobius(n: int) -> int:
    """Moebius function by trial factorization: mu(n) in {-1, 0, 1}."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def _is_irreducible_bits(fb: int) -> bool:
    m = fb.bit_length() - 1
    if m < 1:
        raise ValueError("irreducibility requires degree >= 1")
    if m == 1:
        return True
    h = 2  # x, already reduced since m >= 2
    k = 0
    for r in _prime_factors(m):
        cp = m // r
        while k < cp:
            h = impl.psqr_mod(h, fb)
            k += 1
        if impl.pgcd(h ^ 2, fb) != 1:
            return False
    while k < m:
        h = impl.psqr_mod(h, fb)
        k += 1
    return h == 2


def is_irreducible(f: Poly) -> bool:
    """True iff f has no nontrivial factor (Rabin test, deg f >= 1)."""
    return _is_irreducible_bits(f.bits)


@lru_cache(maxsize=None)
def _count_exact(ell: int) -> int:
    total = 0
    for d in _divisors(ell):
        total += mobius(d) * (1 << (ell // d))
    assert total % ell == 0
    return total // ell


def count_irreducible(ell: int) -> IrreducibleCount:
    """Exact N(ell) from the Moebius sum, as an arbitrary-precision int."""
    if ell < 1:
        raise ValueError("degree must be >= 1")
    return IrreducibleCount(ell, _count_exact(ell))


def count_at_most(ell: int, cap: int) -> int:
    """min(N(ell), cap), short-circuiting once N(ell) provably >= cap.

    Search loops only ever need N(ell) clamped to a small multiplicity
    cap; the lower bound N(ell) >= (2^ell - 2^(ell//2 + 1)) / ell
    usually settles that without evaluating the full Moebius sum.
    """
    if ell < 1:
        raise ValueError("degree must be >= 1")
    if cap <= 0:
        return 0
    if ell > 2:
        lower = ((1 << ell) - (1 << (ell // 2 + 1))) // ell
        if lower >= cap:
            return cap
    return min(_count_exact(ell), cap)


_scan_lock = threading.Lock()
_scan_cache: dict[int, tuple[list[int], int]] = {}


def first_k_irreducibles(ell: int, k: int) -> tuple[Poly, ...]:
    """The k numerically smallest irreducibles of degree ell, ascending.

    Found by an ascending scan over bit-vectors with the top bit set;
    raises if k exceeds N(ell), naming the count.
    """
    if ell < 1:
        raise ValueError("degree must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    with _scan_lock:
        found, nxt = _scan_cache.get(ell, ([], 1 << ell))
        if len(found) < k:
            n = _count_exact(ell)
            if k > n:
                raise ValueError(
                    f"requested {k} irreducibles of degree {ell}, but N({ell}) = {n}"
                )
            found = list(found)
            while len(found) < k:
                if _is_irreducible_bits(nxt):
                    found.append(nxt)
                nxt += 1
            _scan_cache[ell] = (found, nxt)
        return tuple(Poly(b) for b in found[:k])
