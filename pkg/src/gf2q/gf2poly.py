"""Exact arithmetic in GF(2)[x] on bit-packed coefficient vectors.

A :class:`Poly` wraps a nonnegative int whose bit j is the coefficient
of x^j. The representation is canonical: equal polynomials are equal
ints, there are no trailing-zero ambiguities, and every nonzero
polynomial is automatically monic (its leading coefficient is the top
set bit). Addition is XOR; multiplication is carry-less.

The zero polynomial's degree is the sentinel ``NEG_DEGREE``
(``float("-inf")``), which compares strictly below every natural number
and never collides with a real degree. Code that branches on degree
should compare against it explicitly.

Textual grammar (shared with the CLI and JSON payloads):

* sum of monomials, terms in any order: ``"x^3+x+1"``, ``"1+x^3+x"``;
  ``"1"`` and ``"x^0"`` both denote the constant term, ``"x"`` and
  ``"x^1"`` the linear one. Duplicate monomials are an error. ``"0"``
  alone denotes the zero polynomial.
* hex literal ``"0xB"``: the coefficient bit-vector itself, bit-exact
  (``0xB`` == x^3+x+1).

Formatting always emits descending exponents, so parse(format(p)) == p.
"""

from __future__ import annotations

import re

from ._backend import impl

NEG_DEGREE = float("-inf")

_TERM_RE = re.compile(r"^(1|x|x\^(\d+))$")


class ParseError(ValueError):
    """Raised for malformed polynomial text; names the offending token."""


class Poly:
    """An immutable polynomial over GF(2).

    ``bits`` is the coefficient bit-vector. Poly supports ``+`` (XOR),
    ``*``, ``divmod``, ``//``, ``%``, comparisons by bit-vector value,
    and hashing; instances are safe to share across threads.
    """

    __slots__ = ("bits",)

    bits: int

    def __init__(self, bits: int):
        if not isinstance(bits, int) or bits < 0:
            raise ValueError(f"coefficient bit-vector must be a nonnegative int, got {bits!r}")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls) -> Poly:
        return cls(0)

    @classmethod
    def one(cls) -> Poly:
        return cls(1)

    @classmethod
    def x(cls) -> Poly:
        return cls(2)

    @property
    def degree(self) -> int | float:
        """Index of the highest set bit; NEG_DEGREE for the zero polynomial."""
        if self.bits == 0:
            return NEG_DEGREE
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def coefficient(self, j: int) -> int:
        """Coefficient of x^j, as 0 or 1."""
        if j < 0:
            raise ValueError("exponent must be nonnegative")
        return (self.bits >> j) & 1

    def hex(self) -> str:
        """Bit-exact hex literal, e.g. '0xB' for x^3+x+1."""
        return f"0x{self.bits:X}"

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(self.bits ^ other.bits)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(impl.pmul(self.bits, other.bits))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not isinstance(other, Poly):
            return NotImplemented
        q, r = impl.pdivmod(self.bits, other.bits)
        return Poly(q), Poly(r)

    def __floordiv__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(impl.pdivmod(self.bits, other.bits)[0])

    def __mod__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(impl.pmod(self.bits, other.bits))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.bits == other.bits

    def __lt__(self, other: Poly) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.bits < other.bits

    def __le__(self, other: Poly) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.bits <= other.bits

    def __hash__(self) -> int:
        return hash((Poly, self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for j in range(self.bits.bit_length() - 1, -1, -1):
            if (self.bits >> j) & 1:
                terms.append("1" if j == 0 else "x" if j == 1 else f"x^{j}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self.hex()})"


ZERO = Poly(0)
ONE = Poly(1)
X = Poly(2)


def parse(text: str) -> Poly:
    """Parse the textual grammar (sum of monomials or 0x-hex literal)."""
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise ParseError("empty polynomial string")
    if stripped[:2].lower() == "0x":
        digits = stripped[2:]
        if not digits or not re.fullmatch(r"[0-9a-fA-F]+", digits):
            raise ParseError(f"malformed hex literal {stripped!r}")
        return Poly(int(digits, 16))
    if stripped == "0":
        return ZERO
    bits = 0
    for term in stripped.split("+"):
        m = _TERM_RE.match(term)
        if not m:
            raise ParseError(f"malformed term {term!r}")
        if term == "1":
            exp = 0
        elif term == "x":
            exp = 1
        else:
            exp = int(m.group(2))
        if (bits >> exp) & 1:
            raise ParseError(f"duplicate monomial {term!r}")
        bits |= 1 << exp
    return Poly(bits)


def add(a: Poly, b: Poly) -> Poly:
    """Sum (coefficient-wise XOR); add(a, a) is the zero polynomial."""
    return Poly(a.bits ^ b.bits)


def mul(a: Poly, b: Poly) -> Poly:
    """Carry-less product; deg(a*b) = deg a + deg b for nonzero inputs."""
    return Poly(impl.pmul(a.bits, b.bits))


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """(q, r) with a = q*b + r and deg r < deg b; b must be nonzero."""
    q, r = impl.pdivmod(a.bits, b.bits)
    return Poly(q), Poly(r)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via Euclid; gcd(a, 0) == a."""
    if a.bits == 0 and b.bits == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return Poly(impl.pgcd(a.bits, b.bits))


def derivative(a: Poly) -> Poly:
    """Formal derivative; in characteristic 2 even-exponent terms vanish."""
    return Poly(impl.pderiv(a.bits))


def _require_modulus(f: Poly) -> None:
    if f.bits.bit_length() < 2:
        raise ValueError(f"modulus must have degree >= 1, got {f!r}")


def square_mod(a: Poly, f: Poly) -> Poly:
    """a^2 reduced modulo f; deg f must be >= 1."""
    _require_modulus(f)
    return Poly(impl.psqr_mod(a.bits, f.bits))


def pow2k_mod(k: int, f: Poly) -> Poly:
    """x^(2^k) mod f by k repeated squarings; pow2k_mod(0, f) = x mod f."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    _require_modulus(f)
    return Poly(impl.ppow2k_mod(k, f.bits))


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') == 1; a vanishing derivative forces a square."""
    _require_modulus(f)
    return impl.pgcd(f.bits, impl.pderiv(f.bits)) == 1
