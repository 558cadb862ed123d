"""Arithmetic in Z_{2^w}[t]/Q(t) for 1 <= w <= 64.

Residues live in ``numpy.uint64`` arrays; products wrap modulo 2^64 and are
then masked down to 2^w, which is exact because 2^w divides 2^64.
"""

from __future__ import annotations

import numpy as np

from . import gf2poly
from .exceptions import BudgetExhausted, NotInvertibleError, ReducibleError
from .intpoly import IntPoly, reverse

__all__ = [
    "IntPoly", "RingCtx", "ModElem", "reverse", "ring_mul", "power_of_t",
    "invert", "rho_w", "order_of_t_brute",
]

_U64 = np.uint64


class RingCtx:
    """The quotient ring Z_{2^w}[t]/Q(t); Q needs odd q_0 and q_r."""

    def __init__(self, q: IntPoly, w: int):
        if not 1 <= w <= 64:
            raise ValueError(f"w must be in [1, 64], got {w}")
        q.require_odd_ends()
        self.q = q
        self.w = w
        self.r = r = q.degree
        self.modulus = 1 << w
        self.mask = self.modulus - 1
        self.residues = tuple(c & self.mask for c in q.coeffs)
        self.q_r_inv = pow(self.residues[-1], -1, self.modulus)
        # t^r = -q_r^{-1} (q_0 + ... + q_{r-1} t^{r-1})
        t_r = [(-self.q_r_inv * c) & self.mask for c in self.residues[:-1]]
        self._t_r = np.array(t_r, dtype=_U64)
        self._mask64 = _U64(self.mask)
        # rows: t^k mod Q for k = r .. 2r-2, used to fold a raw product back
        rows = []
        cur = self._t_r.copy()
        for _ in range(max(r - 1, 0)):
            rows.append(cur)
            cur = self._times_t(cur)
        self._fold = (np.array(rows, dtype=_U64) if rows
                      else np.zeros((0, r), dtype=_U64))

    def __repr__(self):
        return f"RingCtx(Q={self.q}, w={self.w})"

    def _times_t(self, v: np.ndarray) -> np.ndarray:
        top = v[-1]
        out = np.empty_like(v)
        out[0] = 0
        out[1:] = v[:-1]
        out += top * self._t_r
        return out & self._mask64

    def element(self, coeffs) -> ModElem:
        """Reduce an arbitrary coefficient list (low to high) into the ring."""
        c = [int(x) & self.mask for x in coeffs]
        r = self.r
        t_r = [int(x) for x in self._t_r]
        for k in range(len(c) - 1, r - 1, -1):
            top = c[k]
            if top:
                for j in range(r):
                    c[k - r + j] = (c[k - r + j] + top * t_r[j]) & self.mask
        c = (c + [0] * r)[:r]
        return ModElem(self, np.array(c, dtype=_U64))

    def one(self) -> ModElem:
        return self.element([1])

    def t(self) -> ModElem:
        return self.element([0, 1])


class ModElem:
    """An element a_0 + a_1 t + ... + a_{r-1} t^{r-1} of a RingCtx."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: RingCtx, coeffs: np.ndarray):
        self.ctx = ctx
        coeffs.setflags(write=False)
        self.coeffs = coeffs

    def __eq__(self, other):
        if not isinstance(other, ModElem):
            return NotImplemented
        return self.ctx is other.ctx and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs.tobytes()))

    def __mul__(self, other: ModElem) -> ModElem:
        return ring_mul(self, other)

    def __repr__(self):
        return f"ModElem({self.to_list()})"

    def to_list(self) -> list[int]:
        return [int(x) for x in self.coeffs]

    def is_constant(self, value: int) -> bool:
        ctx = self.ctx
        c = self.to_list()
        return c[0] == value & ctx.mask and not any(c[1:])

    def mod2(self) -> int:
        bits = 0
        for j, x in enumerate(self.to_list()):
            if x & 1:
                bits |= 1 << j
        return bits

    def reduce(self, w: int) -> list[int]:
        """Coefficients reduced modulo a smaller power 2^w."""
        m = (1 << w) - 1
        return [x & m for x in self.to_list()]


def ring_mul(a: ModElem, b: ModElem) -> ModElem:
    ctx = a.ctx
    if b.ctx is not ctx:
        raise ValueError("ring_mul of elements from different contexts")
    raw = np.convolve(a.coeffs, b.coeffs)
    r = ctx.r
    out = raw[:r] + raw[r:] @ ctx._fold
    return ModElem(ctx, out & ctx._mask64)


def power_of_t(ctx: RingCtx, n: int) -> ModElem:
    """t^n mod (2^w, Q): the coefficient vector a_{n,0..r-1}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return power(ctx.t(), n)


def power(a: ModElem, n: int) -> ModElem:
    result = a.ctx.one()
    for bit in bin(n)[2:]:
        result = ring_mul(result, result)
        if bit == "1":
            result = ring_mul(result, a)
    return result


def invert(a: ModElem) -> ModElem:
    """Inverse of ``a`` by Hensel lifting of the mod-2 inverse.

    The inverse modulo (2, Q) comes from the extended Euclidean algorithm;
    Newton's step b <- b (2 - a b) then doubles the 2-adic precision.
    """
    ctx = a.ctx
    q2 = ctx.q.mod2()
    try:
        b0 = gf2poly.gf2_inverse_mod(a.mod2(), q2)
    except ZeroDivisionError:
        raise NotInvertibleError(
            f"{a!r} is a zero divisor: gcd(a mod 2, Q mod 2) != 1 for Q = {ctx.q}"
        ) from None
    b = ctx.element([b0 >> j & 1 for j in range(ctx.r)])
    two = ctx.element([2])
    precision = 1
    while precision < ctx.w:
        ab = ring_mul(a, b)
        b = ring_mul(b, ModElem(ctx, (two.coeffs - ab.coeffs) & ctx._mask64))
        precision *= 2
    return b


def rho_w(ctx: RingCtx, lam: int) -> int:
    """Order of t modulo (2^w, Q), given lambda = order of t modulo (2, Q).

    Squares u = t^lambda at the full modulus until it reaches 1; the order is
    2^e lambda where e is the number of squarings.
    """
    if not gf2poly.is_irreducible(ctx.q.mod2()):
        raise ReducibleError(f"Q = {ctx.q} is reducible mod 2; rho_w is not defined here")
    u = power_of_t(ctx, lam)
    if u.mod2() != 1:
        raise ValueError(f"t^{lam} != 1 mod (2, Q): {lam} is not the order mod 2")
    one = ctx.one()
    e = 0
    while u != one:
        if e >= ctx.w - 1:
            raise ValueError("t^lambda did not reach 1 within w-1 squarings")
        u = ring_mul(u, u)
        e += 1
    return lam << e


def order_of_t_brute(ctx: RingCtx, max_steps: int = 1 << 20) -> int:
    """Order of t by repeated multiplication; works for reducible Q too."""
    t = ctx.t()
    one = ctx.one()
    x = t
    for k in range(1, max_steps + 1):
        if x == one:
            return k
        x = ring_mul(x, t)
    raise BudgetExhausted(f"order of t exceeds {max_steps}")
