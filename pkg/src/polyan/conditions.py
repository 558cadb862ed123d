"""Condition S in three equivalent forms, and the period classification.

Q(t) satisfies Condition S when Q(t)^2 + Q(-t)^2 = 2 q_r Q(t^2) (mod 8).
For Q irreducible mod 2, that is equivalent to t^lambda = -1 mod (4, Q), and
Q(-t) satisfying it is equivalent to t^lambda = +1 mod (4, Q).  The period
of the recurrence is maximal, 2^(w-1) lambda, iff neither holds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import gf2poly
from .exceptions import ConditionConflict, PreconditionError, ReducibleError
from .intpoly import IntPoly
from .modring import RingCtx, rho_w


def _arr(q: IntPoly) -> np.ndarray:
    return np.array(q.coeffs or (0,), dtype=np.int64)


def condition_s_def(q: IntPoly) -> bool:
    """Evaluate Q(t)^2 + Q(-t)^2 - 2 q_r Q(t^2) coefficient-wise mod 8."""
    c = _arr(q) % 8
    cneg = _arr(q.negate_variable()) % 8
    lhs = np.convolve(c, c) + np.convolve(cneg, cneg)
    rhs = np.zeros_like(lhs)
    rhs[::2] = 2 * c[-1] * c
    return not np.any((lhs - rhs) % 8)


@dataclass(frozen=True)
class ConditionSReport:
    holds_for_q: bool
    holds_for_q_neg: bool
    epsilon: tuple[int, ...]


def epsilon(q: IntPoly) -> list[int]:
    """eps_m = q_m (q_m - q_r) / 2 mod 2 for 0 <= m <= r (needs odd q_r)."""
    qr = q.coeffs[-1]
    out = []
    for qm in q.coeffs:
        prod = qm * (qm - qr)
        assert prod % 2 == 0
        out.append((prod // 2) & 1)
    return out


def _half_convolutions(q: IntPoly) -> np.ndarray:
    """sum_{j+k=2m, j<k} q_j q_k mod 2, for each m.

    The full square has (Q^2)_{2m} = q_m^2 + 2 * (that sum).
    """
    c = _arr(q)
    sq = np.convolve(c, c)[::2]
    return ((sq - c * c) // 2) & 1


def _conv_holds(q: IntPoly) -> tuple[bool, list[int]]:
    eps = epsilon(q)
    sums = _half_convolutions(q)
    return bool(np.array_equal(sums, np.array(eps, dtype=np.int64))), eps


def condition_s_conv(q: IntPoly) -> ConditionSReport:
    if not q.coeffs or not q.coeffs[-1] & 1:
        raise PreconditionError("the convolution form needs an odd leading coefficient q_r")
    holds, eps = _conv_holds(q)
    holds_neg, _ = _conv_holds(q.negate_variable())
    return ConditionSReport(holds, holds_neg, tuple(eps))


def condition_s_split(q: IntPoly) -> bool:
    """V(t)^2 + t W(t)^2 - q_r Q(t) = 0 (mod 4), V/W the even/odd parts of Q."""
    c = _arr(q)
    v, w = c[::2], c[1::2]
    lhs = np.zeros(2 * len(c) + 1, dtype=np.int64)
    vv = np.convolve(v, v)
    lhs[: len(vv)] += vv
    if len(w):
        ww = np.convolve(w, w)
        lhs[1: 1 + len(ww)] += ww
    lhs[: len(c)] -= c[-1] * c
    return not np.any(lhs % 4)


def condition_s(q: IntPoly) -> bool:
    return condition_s_def(q)


class PeriodKind(enum.Enum):
    MAXIMAL = "MAXIMAL"
    UPPER_HALF_FROM_QNEG = "UPPER_HALF_FROM_QNEG"  # t^lambda = +1 mod (4, Q)
    UPPER_HALF_FROM_Q = "UPPER_HALF_FROM_Q"  # t^lambda = -1 mod (4, Q)


@dataclass
class PeriodClassification:
    q: IntPoly
    lam: int
    kind: PeriodKind
    s_q: bool
    s_q_neg: bool
    source: str = "condition-s"
    rho: dict[int, int] = field(default_factory=dict)

    def period_bound(self, w: int) -> int:
        """The largest period the theory allows at modulus 2^w."""
        full = self.lam << (w - 1)
        if self.kind is PeriodKind.MAXIMAL:
            return full
        if self.kind is PeriodKind.UPPER_HALF_FROM_QNEG and w >= 2:
            return full // 2
        if self.kind is PeriodKind.UPPER_HALF_FROM_Q and w >= 3:
            return full // 2
        return full


def _kind(s_q: bool, s_q_neg: bool, q: IntPoly) -> PeriodKind:
    if s_q and s_q_neg:
        raise ConditionConflict(f"both Q(t) and Q(-t) satisfy Condition S for Q = {q}")
    if s_q:
        return PeriodKind.UPPER_HALF_FROM_Q
    if s_q_neg:
        return PeriodKind.UPPER_HALF_FROM_QNEG
    return PeriodKind.MAXIMAL


def _fill_rho(result: PeriodClassification, ws) -> PeriodClassification:
    for w in ws or ():
        result.rho[w] = rho_w(RingCtx(result.q, w), result.lam)
    return result


def classify_period(q: IntPoly, ws=None) -> PeriodClassification:
    """Classify the period of the recurrence defined by Q.

    ``ws`` optionally lists moduli exponents for which the exact rho_w is
    computed in the ring.
    """
    q.require_odd_ends()
    bits = q.mod2()
    if not gf2poly.is_irreducible(bits):
        raise ReducibleError(f"Q = {q} is reducible mod 2")
    lam = gf2poly.order_of_t(bits)
    s_q = condition_s_def(q)
    s_q_neg = condition_s_def(q.negate_variable())
    result = PeriodClassification(q, lam, _kind(s_q, s_q_neg, q), s_q, s_q_neg)
    return _fill_rho(result, ws)


def trinomial_verdict(r: int, s: int, signs=(1, 1, 1), ws=None) -> PeriodClassification:
    """Period verdict for sigma_0 + sigma_s t^s + sigma_r t^r.

    Primitive with r > 2, or irreducible with r != 2s, is maximal without
    looking at Condition S; everything else goes through classify_period.
    """
    if any(x not in (-1, 1) for x in signs):
        raise ValueError("signs must be +1 or -1")
    q = IntPoly.trinomial(r, s, signs)
    bits = q.mod2()
    if not gf2poly.is_irreducible(bits):
        raise ReducibleError(f"trinomial {q} is reducible mod 2")
    if r > 2 and gf2poly.is_primitive(bits):
        result = PeriodClassification(q, (1 << r) - 1, PeriodKind.MAXIMAL, False, False,
                                      source="primitive-trinomial")
    elif r != 2 * s:
        result = PeriodClassification(q, gf2poly.order_of_t(bits), PeriodKind.MAXIMAL,
                                      False, False, source="irreducible-trinomial")
    else:
        return classify_period(q, ws)
    return _fill_rho(result, ws)
