"""Embedded invariant suite: small-degree exhaustive checks.

Runs the desk-scale core of the verification suite so an installed
package can certify itself without the test tree (CLI verb
``selfcheck``). Every check is deterministic.
"""

from __future__ import annotations

import random
from math import lcm
from typing import Callable

from ._backend import backend_name, impl
from . import properties
from .berlekamp import build_q, divides_x2m_minus_x, factor, poly_order
from .gf2poly import Poly, is_squarefree
from .irreducible import _is_irreducible_bits, count_irreducible
from .linalg2 import identity, matpow, multiplicative_order, rank

_MAX_EXHAUSTIVE = 8


def _check_ring_axioms() -> None:
    rng = random.Random(2024)
    for _ in range(200):
        a, b, c = (rng.getrandbits(32) for _ in range(3))
        assert impl.pmul(a, b) == impl.pmul(b, a)
        assert impl.pmul(impl.pmul(a, b), c) == impl.pmul(a, impl.pmul(b, c))
        assert impl.pmul(a, b ^ c) == impl.pmul(a, b) ^ impl.pmul(a, c)


def _check_divrem() -> None:
    rng = random.Random(99)
    for _ in range(200):
        a = rng.getrandbits(48)
        b = rng.getrandbits(24) | 1
        q, r = impl.pdivmod(a, b)
        assert impl.pmul(q, b) ^ r == a
        assert r.bit_length() < b.bit_length()


def _check_qpower_vs_divides() -> None:
    for m in range(1, _MAX_EXHAUSTIVE + 1):
        ident = [1 << j for j in range(m)]
        for bits in range(1 << m, 1 << (m + 1)):
            f = Poly(bits)
            qm = impl.mat_pow(impl.qmatrix_rows(bits), m, m)
            assert (qm == ident) == divides_x2m_minus_x(f), f.hex()


def _check_invertible_iff_squarefree() -> None:
    for m in range(1, _MAX_EXHAUSTIVE + 1):
        for bits in range(1 << m, 1 << (m + 1)):
            f = Poly(bits)
            q = build_q(f)
            assert (rank(q) == m) == is_squarefree(f), f.hex()


def _check_factor_roundtrip() -> None:
    for m in range(1, _MAX_EXHAUSTIVE + 1):
        for bits in range(1 << m, 1 << (m + 1)):
            f = Poly(bits)
            fact = factor(f)
            assert fact.product() == f, f.hex()
            for p, _ in fact:
                assert _is_irreducible_bits(p.bits), f"{p.hex()} inside {f.hex()}"


def _check_order_lemma() -> None:
    bound = lcm(*range(1, _MAX_EXHAUSTIVE + 1))
    for m in range(1, _MAX_EXHAUSTIVE + 1):
        for bits in range(1 << m, 1 << (m + 1)):
            f = Poly(bits)
            if not is_squarefree(f):
                continue
            o = poly_order(f).value
            assert o == lcm(*factor(f).distinct_degrees())
            assert o == multiplicative_order(build_q(f), bound), f.hex()


def _check_counts() -> None:
    expected = {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 9: 56}
    for ell, n in expected.items():
        assert count_irreducible(ell).count == n, ell
    for ell in range(1, _MAX_EXHAUSTIVE + 1):
        brute = sum(
            1 for bits in range(1 << ell, 1 << (ell + 1)) if _is_irreducible_bits(bits)
        )
        assert count_irreducible(ell).count == brute, ell


def _check_p1_closed_form() -> None:
    for m in range(2, 101):
        assert properties.decide_p1_search(m).holds == properties.decide_p1_theorem(m), m


def _check_p2_rules() -> None:
    for m in range(2, 101):
        holds = properties.decide_p2_search(m).holds
        if holds:
            assert properties.decide_p2_necessary(m), m
        cv = properties.decide_p2_corollary(m)
        if cv is not properties.CorollaryVerdict.UNKNOWN:
            assert (cv is properties.CorollaryVerdict.HOLDS) == holds, m


def _check_brute_vs_search() -> None:
    for m in range(2, _MAX_EXHAUSTIVE + 1):
        for prop in (properties.P1, properties.P2):
            brute = properties.brute_force_property(prop, m)
            search = properties.classify(prop, m, "search")
            assert brute.holds == search.holds, (prop, m)


def _check_order_without_qm_identity() -> None:
    # squarefree degree-5 witness whose Q has order 6, not dividing 5
    f = Poly(0b110001)  # (x^2+x+1)(x^3+x+1)
    assert is_squarefree(f)
    q = build_q(f)
    assert matpow(q, 5) != identity(5)
    assert poly_order(f).value == 6
    assert matpow(q, 6) == identity(5)


CHECKS: list[tuple[str, Callable[[], None]]] = [
    ("ring axioms on random triples", _check_ring_axioms),
    ("divrem reconstruction", _check_divrem),
    ("Q^m = I iff f | x^(2^m) - x (exhaustive deg <= 8)", _check_qpower_vs_divides),
    ("Q invertible iff f squarefree (exhaustive deg <= 8)", _check_invertible_iff_squarefree),
    ("factor round-trip, factors irreducible (exhaustive deg <= 8)", _check_factor_roundtrip),
    ("order = lcm of factor degrees = matrix order (deg <= 8)", _check_order_lemma),
    ("irreducible counts vs enumeration and table", _check_counts),
    ("P1 search matches closed form (m <= 100)", _check_p1_closed_form),
    ("P2 search vs necessary shape and corollary (m <= 100)", _check_p2_rules),
    ("brute-force property vs partition search (m <= 8)", _check_brute_vs_search),
    ("squarefree f with Q^m != I exists; order still finite", _check_order_without_qm_identity),
]


def run(report: Callable[[str], None] = print) -> bool:
    """Run every embedded check; report one line each, return overall pass."""
    report(f"backend: {backend_name()}")
    ok = True
    for name, fn in CHECKS:
        try:
            fn()
        except AssertionError as exc:
            ok = False
            report(f"FAIL  {name}: {exc}")
        else:
            report(f"ok    {name}")
    report("selfcheck PASSED" if ok else "selfcheck FAILED")
    return ok
