"""Exact decision of properties P1 and P2 with counterexample witnesses.

For the squaring matrix Q of a degree-m polynomial f:

* P1(m): "Q^m = I iff f is irreducible" holds for every degree-m f.
  Exactly the degree-m divisors of x^(2^m) - x satisfy Q^m = I, and
  those are the products of distinct irreducibles whose degrees divide
  m. So P1 fails at m iff some multiset of degrees {d: c} exists with
  every d | m, sum d*c = m, total count >= 2, and c <= N(d) (so the
  product can use c distinct irreducibles). P1 holds exactly for odd
  prime m and m = 9.

* P2(m): "order(Q) = m iff f is irreducible" holds for every degree-m
  f. Non-squarefree f have no order and never threaten P2, so P2 fails
  at m iff a multiset as above exists whose degree-lcm equals m (which
  forces every d | m). A necessary condition for P2 is m = p^i or
  m = p^i*q for primes p < q; a partial corollary decides many p^i*q
  cases outright, and the search settles the rest.

Witness partitions are materialized as products of the numerically
smallest distinct irreducibles per degree, so every counterexample is a
concrete, reproducible polynomial.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from ._backend import impl
from .berlekamp import _factor_bits, _poly_order_bits
from .gf2poly import Poly
from .irreducible import (
    _divisors,
    _is_irreducible_bits,
    _is_prime,
    _prime_factorization,
    count_at_most,
    first_k_irreducibles,
)

P1 = "P1"
P2 = "P2"

MAX_BRUTE_DEGREE = 12


class CorollaryVerdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class DegreePartition:
    """A multiset of (degree, count) parts certifying a reducible shape.

    Parts are stored ascending by degree with positive counts and
    distinct degrees. For a degree-m certificate, sum(d*c) == m and
    every count is realizable by distinct irreducibles (c <= N(d));
    P2 certificates additionally have lcm of degrees == m.
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 0
        for d, c in self.parts:
            if d <= last:
                raise ValueError("part degrees must be ascending and distinct")
            if c < 1:
                raise ValueError("part counts must be >= 1")
            last = d

    def total_degree(self) -> int:
        return sum(d * c for d, c in self.parts)

    def total_count(self) -> int:
        return sum(c for _, c in self.parts)

    def degree_lcm(self) -> int:
        return lcm(*(d for d, _ in self.parts))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{d}:{c}" for d, c in self.parts) + "}"

    def to_json(self) -> dict:
        return {"parts": [{"degree": d, "count": c} for d, c in self.parts]}


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a P1/P2 decision for one degree m.

    ``holds`` == False guarantees a witness partition; ``witness_poly``
    is only populated when a witness has been materialized.
    """

    property: str
    m: int
    holds: bool
    method: str  # search | theorem | corollary | brute
    witness: DegreePartition | None = None
    witness_poly: Poly | None = None

    def __post_init__(self):
        if self.property not in (P1, P2):
            raise ValueError(f"unknown property {self.property!r}")
        if self.holds and self.witness is not None:
            raise ValueError("a holding verdict carries no witness")
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict requires a witness")

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "m": self.m,
            "holds": self.holds,
            "method": self.method,
            "witness": self.witness.to_json() if self.witness else None,
            "witness_poly": self.witness_poly.hex() if self.witness_poly else None,
        }


def _require_m(m: int) -> None:
    if m < 2:
        raise ValueError(f"property decisions require m >= 2, got {m}")


@lru_cache(maxsize=4096)
def _search_partition(m: int, require_lcm_m: bool) -> tuple[tuple[int, int], ...] | None:
    """Lexicographically smallest valid partition, or None.

    Only proper divisors of m can contribute: a degree-m part would be
    the whole polynomial (one factor, not a counterexample). That also
    makes the >= 2 total count automatic, since a single proper-degree
    part needs count >= 2 to reach m. Depth-first over divisors in
    ascending order with counts tried ascending, so the first completed
    solution is smallest when partitions are compared as sequences of
    (degree, count). Dead (index, remaining, lcm) states are memoized;
    lcm states live in the divisor lattice of m, and P1, which does not
    constrain the lcm, drops it from the state.
    """
    divs = [d for d in _divisors(m) if d < m]
    caps = [count_at_most(d, m // d) for d in divs]
    nd = len(divs)
    dead: set[tuple[int, int, int]] = set()
    parts: list[tuple[int, int]] = []

    def dfs(idx: int, remaining: int, lcm_so: int) -> bool:
        if remaining == 0:
            return not require_lcm_m or lcm_so == m
        key = (idx, remaining, lcm_so)
        if key in dead:
            return False
        for j in range(idx, nd):
            d = divs[j]
            if d > remaining:
                break
            cmax = caps[j]
            if cmax * d > remaining:
                cmax = remaining // d
            nlcm = lcm(lcm_so, d) if require_lcm_m else 1
            for c in range(1, cmax + 1):
                parts.append((d, c))
                if dfs(j + 1, remaining - d * c, nlcm):
                    return True
                parts.pop()
        dead.add(key)
        return False

    if dfs(0, m, 1):
        return tuple(parts)
    return None


def decide_p1_search(m: int) -> PropertyVerdict:
    """Decide P1 at degree m by exhaustive partition search.

    P1 fails iff a reducible degree-m divisor of x^(2^m) - x exists,
    i.e. a partition into >= 2 irreducibles of m-dividing degrees with
    per-degree counts at most N(d).
    """
    _require_m(m)
    w = _search_partition(m, require_lcm_m=False)
    if w is None:
        return PropertyVerdict(P1, m, True, "search")
    return PropertyVerdict(P1, m, False, "search", witness=DegreePartition(w))


def decide_p1_theorem(m: int) -> bool:
    """Closed form for P1: true iff m is an odd prime or m == 9."""
    _require_m(m)
    return (m != 2 and _is_prime(m)) or m == 9


def decide_p2_search(m: int) -> PropertyVerdict:
    """Decide P2 at degree m by exhaustive partition search.

    P2 fails iff a reducible squarefree degree-m polynomial of order m
    exists: a partition into >= 2 distinct irreducibles whose degree
    lcm is m (every degree then divides m automatically).
    """
    _require_m(m)
    w = _search_partition(m, require_lcm_m=True)
    if w is None:
        return PropertyVerdict(P2, m, True, "search")
    return PropertyVerdict(P2, m, False, "search", witness=DegreePartition(w))


def decide_p2_necessary(m: int) -> bool:
    """Necessary condition for P2: m = p^i or m = p^i*q, primes p < q.

    The larger prime must appear with exponent exactly 1; 18 = 2*3^2
    fails the shape while 12 = 2^2*3 passes it. Passing the shape does
    not certify P2 (use the corollary or the search).
    """
    _require_m(m)
    fac = _prime_factorization(m)
    if len(fac) == 1:
        return True
    if len(fac) == 2:
        return fac[1][1] == 1
    return False


def decide_p2_corollary(m: int) -> CorollaryVerdict:
    """Partial closed-form decision of P2; UNKNOWN where no rule applies.

    Rules, in order: prime powers hold; shapes other than p^i*q fail;
    for m = p^i*q (primes p < q): q > 2^(p^i) holds; p^i = 2 holds iff
    q > 4; q > p^i > 2 with (p^i-2)q <= 2^(p^i) - 2^(p^(i-1)) + 1
    fails; q < p^i with (q-2)p^i <= 2^q fails; anything else is UNKNOWN.
    """
    _require_m(m)
    fac = _prime_factorization(m)
    if len(fac) == 1:
        return CorollaryVerdict.HOLDS
    if len(fac) != 2 or fac[1][1] != 1:
        return CorollaryVerdict.FAILS
    (p, i), (q, _) = fac
    pi = p**i
    if q > (1 << pi):
        return CorollaryVerdict.HOLDS
    if pi == 2:
        return CorollaryVerdict.HOLDS if q > 4 else CorollaryVerdict.FAILS
    if q > pi:
        if (pi - 2) * q <= (1 << pi) - (1 << p ** (i - 1)) + 1:
            return CorollaryVerdict.FAILS
    else:
        if (q - 2) * pi <= (1 << q):
            return CorollaryVerdict.FAILS
    return CorollaryVerdict.UNKNOWN


def materialize_witness(w: DegreePartition) -> Poly:
    """Product of the first c distinct irreducibles of degree d per part.

    The result is squarefree of degree sum(d*c); for a P2 witness its
    order is the lcm of the part degrees. Raises if any count exceeds
    N(d).
    """
    acc = 1
    for d, c in w.parts:
        for p in first_k_irreducibles(d, c):
            acc = impl.pmul(acc, p.bits)
    return Poly(acc)


def theorem_decomposition_witness(m: int) -> DegreePartition | None:
    """Verbatim P2 witness for m = p^i*q^j with j >= 2, else None.

    Uses the identity p^i q^j = (p-1) p^(i-1)q^j + p^i q^(j-1)
    + (q-p) p^(i-1)q^(j-1), whose three degrees have lcm m. (No such
    closed decomposition is used for three pairwise-coprime factors;
    the generic search covers that shape.)
    """
    fac = _prime_factorization(m)
    if len(fac) != 2 or fac[1][1] < 2:
        return None
    (p, i), (q, j) = fac
    parts = {
        p ** (i - 1) * q**j: p - 1,
        p**i * q ** (j - 1): 1,
        p ** (i - 1) * q ** (j - 1): q - p,
    }
    return DegreePartition(tuple(sorted(parts.items())))


def construct_pigeonhole_witness(p: int, i: int, q: int) -> DegreePartition:
    """P2 witness for m = p^i*q from the pigeonhole recipe.

    Scans for u with u*q == 1 or 2 (mod p^i) (or with p^i and q swapped
    when q < p^i) and assembles {1: residue, p^i: l, q: p^i - u} with
    l = (u*q - residue)/p^i, which sums to m with degree-lcm m. Only
    valid where the corollary's failure inequality holds; the residual
    m = 6 case is handed its direct witness.
    """
    if not _is_prime(p) or not _is_prime(q) or p >= q or i < 1:
        raise ValueError("need primes p < q and i >= 1")
    pi = p**i
    if pi == 2:
        if q == 3:
            return DegreePartition(((1, 1), (2, 1), (3, 1)))
        raise ValueError("corollary gives no witness here")
    if q > pi:
        if (pi - 2) * q > (1 << pi) - (1 << p ** (i - 1)) + 1:
            raise ValueError("corollary gives no witness here")
        cap = ((1 << pi) - (1 << p ** (i - 1))) // pi  # N(p^i)
        for u in range(1, pi - 1):
            r = (u * q) % pi
            if r in (1, 2):
                ell = (u * q - r) // pi
                assert ell <= cap, "pigeonhole multiplicity exceeds N(p^i)"
                return DegreePartition(tuple(sorted({1: r, pi: ell, q: pi - u}.items())))
    else:
        if (q - 2) * pi > (1 << q):
            raise ValueError("corollary gives no witness here")
        cap = ((1 << q) - 2) // q  # N(q)
        for u in range(1, q - 1):
            r = (u * pi) % q
            if r in (1, 2):
                ell = (u * pi - r) // q
                assert ell <= cap, "pigeonhole multiplicity exceeds N(q)"
                return DegreePartition(tuple(sorted({1: r, q: ell, pi: q - u}.items())))
    raise AssertionError("pigeonhole scan found no residue 1 or 2")


def _partition_of_bits(fb: int) -> DegreePartition:
    """Degree partition of a squarefree polynomial's factorization."""
    counts: dict[int, int] = {}
    for irr, mult in _factor_bits(fb):
        assert mult == 1
        d = irr.bit_length() - 1
        counts[d] = counts.get(d, 0) + 1
    return DegreePartition(tuple(sorted(counts.items())))


def brute_force_property(prop: str, m: int) -> PropertyVerdict:
    """Evaluate the defining biconditional over all 2^m degree-m polys.

    P1 compares Q^m == I against irreducibility; P2 compares "the order
    is defined and equals m". Fails on the numerically first violator,
    returned with its factorization shape and the polynomial itself.
    """
    if prop not in (P1, P2):
        raise ValueError(f"unknown property {prop!r}")
    if not 2 <= m <= MAX_BRUTE_DEGREE:
        raise ValueError(f"brute force supports 2 <= m <= {MAX_BRUTE_DEGREE}, got {m}")
    ident = [1 << j for j in range(m)]
    for bits in range(1 << m, 1 << (m + 1)):
        irr = _is_irreducible_bits(bits)
        if prop == P1:
            lhs = impl.mat_pow(impl.qmatrix_rows(bits), m, m) == ident
        else:
            if impl.pgcd(bits, impl.pderiv(bits)) != 1:
                lhs = False  # no order defined, so "order == m" is false
            else:
                lhs = _poly_order_bits(bits) == m
        if lhs != irr:
            return PropertyVerdict(
                prop, m, False, "brute",
                witness=_partition_of_bits(bits), witness_poly=Poly(bits),
            )
    return PropertyVerdict(prop, m, True, "brute")


def classify(prop: str, m: int, method: str = "search") -> PropertyVerdict:
    """Route a P1/P2 decision through the requested method.

    ``theorem`` and ``corollary`` raise when inconclusive for m (the
    P2 theorem is only a necessary condition, the corollary has an
    UNKNOWN region); failing verdicts from those methods borrow the
    search's witness so every failure stays certified.
    """
    _require_m(m)
    if prop not in (P1, P2):
        raise ValueError(f"unknown property {prop!r}")
    if method == "search":
        return decide_p1_search(m) if prop == P1 else decide_p2_search(m)
    if method == "brute":
        return brute_force_property(prop, m)
    if method == "theorem":
        if prop == P1:
            if decide_p1_theorem(m):
                return PropertyVerdict(P1, m, True, "theorem")
            return PropertyVerdict(
                P1, m, False, "theorem", witness=decide_p1_search(m).witness
            )
        if decide_p2_necessary(m):
            raise ValueError(
                f"the P2 theorem is only a necessary condition and cannot "
                f"certify m={m}; use --method search or corollary"
            )
        w = theorem_decomposition_witness(m) or decide_p2_search(m).witness
        return PropertyVerdict(P2, m, False, "theorem", witness=w)
    if method == "corollary":
        if prop != P2:
            raise ValueError("the corollary method applies to P2 only")
        v = decide_p2_corollary(m)
        if v is CorollaryVerdict.UNKNOWN:
            raise ValueError(
                f"the corollary gives no verdict for m={m}; use --method search"
            )
        if v is CorollaryVerdict.HOLDS:
            return PropertyVerdict(P2, m, True, "corollary")
        return PropertyVerdict(
            P2, m, False, "corollary", witness=decide_p2_search(m).witness
        )
    raise ValueError(f"unknown method {method!r}")
