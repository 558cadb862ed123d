"""Polynomials over GF(2) packed into Python integers.

A polynomial ``b_n t^n + ... + b_1 t + b_0`` is the integer with bit ``j``
equal to ``b_j``.  The zero polynomial is ``0`` and has no degree.

Squaring spreads bits through a byte table (numpy), products are computed
with a windowed shift-and-xor, and reduction folds the high part back with
the sparse tail of the modulus when that is cheap.  This keeps primitivity
tests of trinomials with degree around 20000 in the range of seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from .exceptions import ReducibleError

T = 0b10

# Exponents p with 2^p - 1 prime, up to the largest trinomial degree of interest.
MERSENNE_EXPONENTS = frozenset(
    {2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607, 1279, 2203,
     2281, 3217, 4253, 4423, 9689, 9941, 11213, 19937, 21701, 23209, 44497}
)

MAX_FACTORED_DEGREE = 64


def _build_spread_table():
    table = np.zeros(256, dtype="<u2")
    for byte in range(256):
        v = 0
        for bit in range(8):
            if byte >> bit & 1:
                v |= 1 << (2 * bit)
        table[byte] = v
    return table


_SPREAD = _build_spread_table()


def degree(a: int) -> int:
    if a == 0:
        raise ValueError("the zero polynomial has no degree")
    return a.bit_length() - 1


def from_exponents(*exps: int) -> int:
    """Build the polynomial with the given exponents set, e.g. ``(0, 1, 3)``."""
    a = 0
    for e in exps:
        a ^= 1 << e
    return a


def exponents(a: int) -> list[int]:
    return [j for j in range(a.bit_length()) if a >> j & 1]


def to_str(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    for e in exponents(a):
        terms.append("1" if e == 0 else "t" if e == 1 else f"t^{e}")
    return " + ".join(terms)


def gf2_square(a: int) -> int:
    """Return a(t)^2, i.e. a(t^2): bit j moves to bit 2j."""
    if a < 1 << 32:
        if a < 256:
            return int(_SPREAD[a])
        return (int(_SPREAD[a & 0xFF]) | int(_SPREAD[a >> 8 & 0xFF]) << 16
                | int(_SPREAD[a >> 16 & 0xFF]) << 32 | int(_SPREAD[a >> 24]) << 48)
    nbytes = (a.bit_length() + 7) // 8
    raw = np.frombuffer(a.to_bytes(nbytes, "little"), dtype=np.uint8)
    return int.from_bytes(_SPREAD[raw].tobytes(), "little")


def gf2_mul(a: int, b: int) -> int:
    """Carry-free product of two GF(2) polynomials."""
    if bin(a).count("1") < bin(b).count("1"):
        a, b = b, a
    if b.bit_length() <= 64 or bin(b).count("1") <= 32:
        c = 0
        while b:
            low = b & -b
            c ^= a << (low.bit_length() - 1)
            b ^= low
        return c
    # 8-bit windows over b against a table of a * k for k < 256
    table = [0] * 256
    for k in range(1, 256):
        low = k & -k
        table[k] = table[k ^ low] ^ (a << (low.bit_length() - 1))
    c = 0
    shift = 0
    while b:
        byte = b & 0xFF
        if byte:
            c ^= table[byte] << shift
        b >>= 8
        shift += 8
    return c


def gf2_mod(a: int, q: int) -> int:
    """Remainder of ``a`` on division by ``q`` in GF(2)[t]."""
    if q == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    r = q.bit_length() - 1
    if a.bit_length() <= r:
        return a
    tail = q ^ (1 << r)
    gap = r - tail.bit_length()
    if gap >= 8 and bin(tail).count("1") <= 16:
        # t^r = tail (mod q): fold the high part back in, several bits per pass
        mask = (1 << r) - 1
        while a.bit_length() > r:
            a = (a & mask) ^ gf2_mul(a >> r, tail)
        return a
    n = a.bit_length() - 1
    while n >= r:
        if a >> n & 1:
            a ^= q << (n - r)
        n -= 1
    return a


def gf2_divmod(a: int, q: int) -> tuple[int, int]:
    if q == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    r = q.bit_length() - 1
    quot = 0
    n = a.bit_length() - 1
    while n >= r:
        if a >> n & 1:
            a ^= q << (n - r)
            quot |= 1 << (n - r)
        n -= 1
    return quot, a


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def gf2_inverse_mod(a: int, q: int) -> int:
    """Inverse of ``a`` in GF(2)[t]/q by the extended Euclidean algorithm.

    Raises ZeroDivisionError when gcd(a, q) != 1.
    """
    r0, r1 = q, gf2_mod(a, q)
    s0, s1 = 0, 1
    while r1:
        quot, rem = gf2_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 ^ gf2_mul(quot, s1)
    if r0 != 1:
        raise ZeroDivisionError("polynomial is not invertible modulo q")
    return gf2_mod(s0, q)


def gf2_mulmod(a: int, b: int, q: int) -> int:
    return gf2_mod(gf2_mul(a, b), q)


def gf2_powmod(a: int, e: int, q: int) -> int:
    if e < 0:
        raise ValueError("negative exponent")
    result = gf2_mod(1, q)
    a = gf2_mod(a, q)
    for bit in bin(e)[2:]:
        result = gf2_mod(gf2_square(result), q)
        if bit == "1":
            result = gf2_mulmod(result, a, q)
    return result


def _frobenius_chain(q: int, steps: int) -> list[int]:
    """[t, t^2, t^4, ..., t^(2^steps)] reduced mod q."""
    x = gf2_mod(T, q)
    chain = [x]
    for _ in range(steps):
        x = gf2_mod(gf2_square(x), q)
        chain.append(x)
    return chain


def is_irreducible(q: int) -> bool:
    """Rabin's test: t^(2^r) = t mod q and gcd(t^(2^(r/p)) - t, q) = 1 for primes p | r."""
    r = degree(q)
    if r < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if r == 1:
        return True
    if not q & 1:
        return False
    chain = _frobenius_chain(q, r)
    t_mod = gf2_mod(T, q)
    if chain[r] != t_mod:
        return False
    for p in sympy.primefactors(r):
        if gf2_gcd(q, chain[r // p] ^ t_mod) != 1:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError("factors must be strictly increasing primes with e >= 1")
            prod *= p**e
            last = p
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


@lru_cache(maxsize=None)
def factor_mersenne(r: int) -> Factorization:
    """Prime factorization of 2^r - 1 for 1 <= r <= 64 (memoized)."""
    if not 1 <= r <= MAX_FACTORED_DEGREE:
        raise ValueError(f"2^{r} - 1 is outside the factorable range (r <= 64)")
    n = (1 << r) - 1
    return Factorization(n, tuple(sorted(sympy.factorint(n).items())))


def euler_phi(fac: Factorization) -> int:
    phi = 1
    for p, e in fac.factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def _group_order_factorization(r: int) -> Factorization:
    if r <= MAX_FACTORED_DEGREE:
        return factor_mersenne(r)
    if r in MERSENNE_EXPONENTS:
        return Factorization((1 << r) - 1, (((1 << r) - 1, 1),))
    raise ValueError(
        f"degree {r}: 2^r - 1 is not factored (only r <= 64 or Mersenne exponents)"
    )


def order_of_t(q: int, fac: Factorization | None = None) -> int:
    """Multiplicative order of t modulo (2, q) for irreducible q."""
    r = degree(q)
    if q == T or not is_irreducible(q):
        raise ReducibleError(f"{to_str(q)} is not irreducible with t invertible")
    if fac is None:
        fac = _group_order_factorization(r)
    if fac.n != (1 << r) - 1:
        raise ValueError("factorization is not of 2^r - 1")
    one = gf2_mod(1, q)
    order = fac.n
    for p, e in fac.factors:
        for _ in range(e):
            if gf2_powmod(T, order // p, q) == one:
                order //= p
            else:
                break
    return order


def is_primitive(q: int) -> bool:
    """True iff q is irreducible and t has order 2^r - 1 modulo (2, q)."""
    r = degree(q)
    if r < 1:
        raise ValueError("primitivity needs degree >= 1")
    if q == T:
        return False
    if r in MERSENNE_EXPONENTS:
        # 2^r - 1 prime: t^(2^r) = t with q(0) = q(1) = 1 decides it
        if not q & 1 or bin(q).count("1") % 2 == 0:
            return False
        return _frobenius_chain(q, r)[r] == gf2_mod(T, q)
    fac = _group_order_factorization(r)
    if not is_irreducible(q):
        return False
    one = gf2_mod(1, q)
    return all(gf2_powmod(T, fac.n // p, q) != one for p in fac.primes)
