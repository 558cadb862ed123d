"""Sequences q_0 x_n + q_1 x_{n+1} + ... + q_r x_{n+r} = 0 (mod 2^w).

Includes brute-force period detection and the closed-form identities
(jump-ahead through t^n mod Q, and the generating-function numerator) that
serve as cross-checks on the ring arithmetic.
"""

from __future__ import annotations

from collections import deque

from .exceptions import BudgetExhausted, PreconditionError
from .intpoly import IntPoly
from .modring import RingCtx, power_of_t


class RecurrenceState:
    """Sliding window x_n .. x_{n+r-1} of the recurrence, mod 2^w."""

    def __init__(self, ctx: RingCtx, init, require_odd: bool = False):
        init = [int(x) & ctx.mask for x in init]
        if len(init) != ctx.r:
            raise ValueError(f"initial window needs {ctx.r} values, got {len(init)}")
        if require_odd and not any(x & 1 for x in init):
            raise PreconditionError("initial values are all even")
        self.ctx = ctx
        self.window = deque(init, maxlen=ctx.r)
        self.step_count = 0
        m = ctx.mask
        res = ctx.residues
        self._fwd = [(-ctx.q_r_inv * c) & m for c in res[:-1]]
        q0_inv = pow(res[0], -1, ctx.modulus)
        self._back = [(-q0_inv * c) & m for c in res[1:]]

    @classmethod
    def from_lags(cls, r: int, s: int, signs, w: int, init) -> RecurrenceState:
        """x_n = sigma_s x_{n-s} + sigma_r x_{n-r}  (two-term lagged form).

        Written as a polynomial this is Q(t) = t^r - sigma_s t^(r-s) - sigma_r.
        """
        sig_s, sig_r = signs
        c = [0] * (r + 1)
        c[0] = -sig_r
        c[r - s] = -sig_s
        c[r] = 1
        return cls(RingCtx(IntPoly(c), w), init)

    def __repr__(self):
        return f"RecurrenceState(Q={self.ctx.q}, w={self.ctx.w}, window={list(self.window)})"

    def values(self) -> list[int]:
        return list(self.window)

    def step(self) -> int:
        """Advance by one; return the new value x_{n+r}."""
        x = sum(a * b for a, b in zip(self._fwd, self.window)) & self.ctx.mask
        self.window.append(x)
        self.step_count += 1
        return x

    def step_back(self) -> int:
        """Retreat by one; return the recovered value x_{n-1}."""
        x = sum(a * b for a, b in zip(self._back, self.window)) & self.ctx.mask
        self.window.appendleft(x)
        self.step_count -= 1
        return x

    def stream(self, count: int):
        for _ in range(count):
            yield self.step()


def brute_period(state: RecurrenceState, max_steps: int = 1 << 24) -> int:
    """Smallest p >= 1 after which the whole window returns to its start.

    The sequence is purely periodic (q_0 odd), so this is the period p_w.
    The passed state is left untouched.
    """
    ctx = state.ctx
    start = tuple(state.window)
    r = ctx.r
    mask = ctx.mask
    coef = state._fwd
    buf = list(start)
    for p in range(1, max_steps + 1):
        buf.append(sum(a * b for a, b in zip(coef, buf[-r:])) & mask)
        if buf[-1] == start[-1] and tuple(buf[-r:]) == start:
            return p
        if len(buf) > 4096:
            del buf[:-r]
    raise BudgetExhausted(f"no period found within {max_steps} steps")


def coeffs_reconstruct(ctx: RingCtx, n: int, init) -> int:
    """x_n = sum_j a_{n,j} x_j, with t^n = sum_j a_{n,j} t^j mod (2^w, Q)."""
    a = power_of_t(ctx, n).to_list()
    return sum(x * y for x, y in zip(a, init)) & ctx.mask


def numerator_poly(ctx: RingCtx, init) -> IntPoly:
    """P(t) with G(t) = P(t) / reverse(Q)(t) mod 2^w, G the sequence's generating function."""
    q = ctx.residues
    r = ctx.r
    coeffs = []
    for k in range(r):
        coeffs.append(sum(q[r + j - k] * init[j] for j in range(k + 1)) & ctx.mask)
    return IntPoly(coeffs)


def sequence(ctx: RingCtx, init, length: int) -> list[int]:
    """The first ``length`` terms x_0, x_1, ... (including the initial window)."""
    state = RecurrenceState(ctx, init)
    out = state.values()[:length]
    while len(out) < length:
        out.append(state.step())
    return out


def bit_period(state: RecurrenceState, k: int, max_steps: int = 1 << 24) -> int:
    """Period of bit k (1 = least significant) of the sequence."""
    w = state.ctx.w
    if not 1 <= k <= w:
        raise ValueError(f"bit index must be in [1, {w}]")
    p = brute_period(state, max_steps)
    seq = sequence(state.ctx, state.values(), p)
    bits = [x >> (k - 1) & 1 for x in seq]
    for d in range(1, p + 1):
        if p % d == 0 and all(bits[i] == bits[i % d] for i in range(p)):
            return d
    return p
