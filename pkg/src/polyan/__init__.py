"""Period analysis of linear recurrences modulo 2^w.

The period of q_0 x_n + ... + q_r x_{n+r} = 0 (mod 2^w) is maximal,
2^(w-1) lambda, iff neither Q(t) nor Q(-t) satisfies Condition S.
"""

from .conditions import (ConditionSReport, PeriodClassification, PeriodKind, classify_period,
                         condition_s, condition_s_conv, condition_s_def, condition_s_split,
                         trinomial_verdict)
from .enumeration import EnumSummary, enumerate_degree, lambda2, lift_bits, nu_bar, \
    verify_exceptional
from .exceptions import (BudgetExhausted, ConditionConflict, NotInvertibleError, PolyanError,
                         PreconditionError, ReducibleError)
from .intpoly import IntPoly, parse_poly, reverse
from .modring import ModElem, RingCtx, invert, power_of_t, rho_w, ring_mul
from .recurrence import RecurrenceState, bit_period, brute_period, coeffs_reconstruct, \
    numerator_poly

__version__ = "0.1.0"
