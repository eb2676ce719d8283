"""gf2q: exact workbench for polynomials over GF(2).

Bit-packed GF(2)[x] arithmetic, the squaring (Q) matrix of a
polynomial, Berlekamp nullspace factorization, multiplicative orders,
irreducibility counting and enumeration, and exact decision of the
degree properties P1 and P2 with counterexample witnesses.
"""

from ._backend import backend_name
from .berlekamp import (
    DEGREE_CAP,
    Factorization,
    PolyOrder,
    build_q,
    divides_x2m_minus_x,
    factor,
    frobenius_apply,
    int_gcd,
    int_lcm,
    poly_order,
    squarefree_decompose,
)
from .gf2poly import (
    NEG_DEGREE,
    ONE,
    X,
    ZERO,
    ParseError,
    Poly,
    add,
    derivative,
    divrem,
    gcd,
    is_squarefree,
    mul,
    parse,
    pow2k_mod,
    square_mod,
)
from .irreducible import (
    IrreducibleCount,
    count_at_most,
    count_irreducible,
    first_k_irreducibles,
    is_irreducible,
    mobius,
)
from .linalg2 import (
    BitMatrix,
    identity,
    matmul,
    matpow,
    multiplicative_order,
    nullspace,
    rank,
)
from .properties import (
    CorollaryVerdict,
    DegreePartition,
    PropertyVerdict,
    brute_force_property,
    classify,
    construct_pigeonhole_witness,
    decide_p1_search,
    decide_p1_theorem,
    decide_p2_corollary,
    decide_p2_necessary,
    decide_p2_search,
    materialize_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "CorollaryVerdict",
    "DEGREE_CAP",
    "DegreePartition",
    "Factorization",
    "IrreducibleCount",
    "NEG_DEGREE",
    "ONE",
    "ParseError",
    "Poly",
    "PolyOrder",
    "PropertyVerdict",
    "X",
    "ZERO",
    "__version__",
    "add",
    "backend_name",
    "brute_force_property",
    "build_q",
    "classify",
    "construct_pigeonhole_witness",
    "count_at_most",
    "count_irreducible",
    "decide_p1_search",
    "decide_p1_theorem",
    "decide_p2_corollary",
    "decide_p2_necessary",
    "decide_p2_search",
    "derivative",
    "divides_x2m_minus_x",
    "divrem",
    "factor",
    "first_k_irreducibles",
    "frobenius_apply",
    "gcd",
    "identity",
    "int_gcd",
    "int_lcm",
    "is_irreducible",
    "is_squarefree",
    "materialize_witness",
    "matmul",
    "matpow",
    "mobius",
    "mul",
    "multiplicative_order",
    "nullspace",
    "parse",
    "poly_order",
    "pow2k_mod",
    "rank",
    "square_mod",
    "squarefree_decompose",
]
