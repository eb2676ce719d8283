"""Pure-Python kernels for GF(2) polynomial and bit-matrix arithmetic.

A polynomial over GF(2) is a nonnegative int: bit j is the coefficient
of x^j, so 0b1011 is x^3+x+1. The encoding is canonical (one int per
polynomial) and addition is plain XOR.

A square n x n matrix over GF(2) is a list of n row ints; bit j of row i
is the entry in column j. Vectors follow the row convention, so v.A is
the XOR of the rows of A selected by the set bits of v.

The compiled backend in ``gf2q._kernels`` implements the same interface
and must produce bit-identical results, including the order of nullspace
basis vectors; ``tests/test_backends.py`` holds the two to that.
"""

from __future__ import annotations

BACKEND = "python"

# byte -> 16-bit spread with zeros interleaved (little-endian pair), used
# to square: (sum x^i)^2 = sum x^(2i) in characteristic 2
_SQR_BYTES = []
for _b in range(256):
    _v = 0
    for _j in range(8):
        if (_b >> _j) & 1:
            _v |= 1 << (2 * _j)
    _SQR_BYTES.append(_v.to_bytes(2, "little"))
del _b, _v, _j


def pmul(a: int, b: int) -> int:
    """Carry-less (polynomial) product of a and b."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        low = a & -a
        acc ^= b << (low.bit_length() - 1)
        a ^= low
    return acc


def psqr(a: int) -> int:
    """Square of a; bit-spreading, no reduction."""
    if a == 0:
        return 0
    n = (a.bit_length() + 7) // 8
    return int.from_bytes(
        b"".join(_SQR_BYTES[byte] for byte in a.to_bytes(n, "little")), "little"
    )


def pdivmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a by b; b must be nonzero."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    da = a.bit_length()
    while da >= db:
        shift = da - db
        q |= 1 << shift
        a ^= b << shift
        da = a.bit_length()
    return q, a


def pmod(a: int, b: int) -> int:
    """Remainder of a modulo b; b must be nonzero."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length()
    return a


def pgcd(a: int, b: int) -> int:
    """Greatest common divisor by Euclid; gcd(a, 0) == a."""
    while b:
        a, b = b, pmod(a, b)
    return a


def pderiv(a: int) -> int:
    """Formal derivative in characteristic 2: even-exponent terms vanish."""
    if a == 0:
        return 0
    length = a.bit_length()
    if length % 2:
        length += 1
    # mask 0b0101..01 keeps the even positions of (a >> 1)
    return (a >> 1) & (((1 << length) - 1) // 3)


def psqrt(a: int) -> int:
    """Square root of a perfect square (odd-position bits are ignored)."""
    r = 0
    j = 0
    while a:
        if a & 1:
            r |= 1 << j
        a >>= 2
        j += 1
    return r


def psqr_mod(a: int, f: int) -> int:
    """a*a reduced modulo f."""
    return pmod(psqr(a), f)


def ppow2k_mod(k: int, f: int) -> int:
    """x^(2^k) reduced modulo f, by k repeated squarings of x mod f."""
    r = pmod(2, f)
    for _ in range(k):
        r = pmod(psqr(r), f)
    return r


def qmatrix_rows(f: int) -> list[int]:
    """Rows of the m x m squaring matrix of f: row i is x^(2i) mod f.

    Maintains the running power p = x^(2i) mod f and steps p <- p*x^2
    mod f, so building the whole matrix costs m reductions.
    """
    m = f.bit_length() - 1
    p = pmod(1, f)
    rows = [p]
    for _ in range(m - 1):
        p = pmod(p << 2, f)
        rows.append(p)
    return rows


def mat_mul(a_rows: list[int], b_rows: list[int], n: int) -> list[int]:
    """Product of two n x n matrices (row i of the result is a_i . B)."""
    out = []
    for r in a_rows:
        acc = 0
        while r:
            low = r & -r
            acc ^= b_rows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return out


def mat_pow(rows: list[int], e: int, n: int) -> list[int]:
    """e-th power by square-and-multiply; the 0th power is the identity."""
    result = [1 << i for i in range(n)]
    base = list(rows)
    while e:
        if e & 1:
            result = mat_mul(result, base, n)
        e >>= 1
        if e:
            base = mat_mul(base, base, n)
    return result


def mat_rank(rows: list[int], n: int) -> int:
    """Rank over GF(2) by Gaussian elimination with XOR row operations."""
    work = list(rows)
    used = [False] * n
    rank = 0
    for col in range(n):
        mask = 1 << col
        pivot = -1
        for r in range(n):
            if not used[r] and work[r] & mask:
                pivot = r
                break
        if pivot < 0:
            continue
        used[pivot] = True
        rank += 1
        pr = work[pivot]
        for r in range(n):
            if r != pivot and work[r] & mask:
                work[r] ^= pr
    return rank


def mat_nullspace(rows: list[int], n: int) -> list[int]:
    """Basis of the left nullspace {v : v.A == 0}, as row-vector ints.

    Pivots are chosen in column order, lowest row index first, so the
    basis is reproducible byte for byte across runs and backends.
    """
    work = list(rows)
    tags = [1 << i for i in range(n)]
    used = [False] * n
    for col in range(n):
        mask = 1 << col
        pivot = -1
        for r in range(n):
            if not used[r] and work[r] & mask:
                pivot = r
                break
        if pivot < 0:
            continue
        used[pivot] = True
        pw = work[pivot]
        pt = tags[pivot]
        for r in range(n):
            if r != pivot and work[r] & mask:
                work[r] ^= pw
                tags[r] ^= pt
    return [tags[r] for r in range(n) if work[r] == 0]


def mat_order(rows: list[int], n: int, bound: int) -> int:
    """Least k in [1, bound] with A^k == I, or 0 if no such k.

    Plain cycle stepping A, A^2, ...; the caller is responsible for
    rejecting singular matrices (which have no order at all).
    """
    ident = [1 << i for i in range(n)]
    if rows == ident:
        return 1
    p = list(rows)
    k = 1
    while k < bound:
        p = mat_mul(p, rows, n)
        k += 1
        if p == ident:
            return k
    return 0
