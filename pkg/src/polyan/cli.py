"""Command-line front end: ``polyan check|enumerate|period|rng|tables``.

Exit codes: 0 success, 2 parse/usage error, 3 theory precondition violated,
4 golden-table mismatch, 5 brute-force budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import gf2poly
from .conditions import (PeriodKind, classify_period, condition_s_conv,
                         trinomial_verdict)
from .enumeration import DEVICE2_MAX_S, default_workers, enumerate_degree, format_nu_bar
from .exceptions import BudgetExhausted, PolyanError, PreconditionError
from .intpoly import IntPoly, format_trinomial, parse_poly
from .modring import RingCtx, order_of_t_brute, rho_w
from .recurrence import RecurrenceState, brute_period
from .tables import reproduce

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_THEORY = 3
EXIT_MISMATCH = 4
EXIT_BUDGET = 5

_MASK64 = (1 << 64) - 1


class _UsageError(Exception):
    pass


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _kv(out, key, value):
    print(f"{key}: {value}", file=out)


def _machine(out, header, row):
    print("#" + "\t".join(header), file=out)
    print("\t".join(str(x) for x in row), file=out)


def _poly(text: str) -> IntPoly:
    try:
        return parse_poly(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise _UsageError(f"bad integer list {text!r}") from None


def splitmix64(state: int):
    """Infinite stream of 64-bit outputs from the SplitMix64 generator."""
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def seed_window(seed: int, r: int, w: int) -> list[int]:
    """Initial window x_0..x_{r-1}: SplitMix64 outputs masked to w bits, x_0 forced odd."""
    gen = splitmix64(seed & _MASK64)
    mask = (1 << w) - 1
    window = [next(gen) & mask for _ in range(r)]
    window[0] |= 1
    return window


def cmd_check(args, out) -> int:
    q = _poly(args.poly)
    w = args.w
    _kv(out, "poly", q)
    _kv(out, "coeffs", q.to_csv())
    _kv(out, "degree", q.degree)
    q.require_odd_ends()
    bits = q.mod2()
    irreducible = gf2poly.is_irreducible(bits)
    _kv(out, "irreducible", _yes(irreducible))
    if not irreducible:
        _kv(out, "classification", "refused (Q mod 2 is reducible)")
        return EXIT_THEORY
    primitive = gf2poly.is_primitive(bits)
    _kv(out, "primitive", _yes(primitive))
    cls = classify_period(q, ws=[w])
    report = condition_s_conv(q)
    _kv(out, "lambda", cls.lam)
    _kv(out, "condition_s_q", _yes(cls.s_q))
    _kv(out, "condition_s_q_neg", _yes(cls.s_q_neg))
    _kv(out, "epsilon", "".join(str(e) for e in report.epsilon))
    _kv(out, "kind", cls.kind.value)
    _kv(out, f"rho_{w}", cls.rho[w])
    _kv(out, f"bound_{w}", cls.period_bound(w))
    tri = format_trinomial(q)
    if tri and q.coeffs[-1] in (1, -1):
        r, s, signs = tri[4:].split(",")
        signs_t = tuple(1 if ch == "+" else -1 for ch in signs)
        verdict = trinomial_verdict(int(r), int(s), signs_t)
        _kv(out, "trinomial_verdict", f"{verdict.kind.value} ({verdict.source})")
    _machine(out, ["degree", "irreducible", "primitive", "lambda", "s_q", "s_q_neg", "kind",
                   "w", "rho_w"],
             [q.degree, _yes(irreducible), _yes(primitive), cls.lam, _yes(cls.s_q),
              _yes(cls.s_q_neg), cls.kind.value, w, cls.rho[w]])
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    summ = enumerate_degree(args.degree, device1=not args.no_device1,
                            device2_s=args.device2, workers=args.workers)
    nb = format_nu_bar(summ.r, summ.nu_bar, digits=4)
    _kv(out, "degree", summ.r)
    _kv(out, "kappa", summ.kappa)
    _kv(out, "nu", summ.nu)
    _kv(out, "lambda2", summ.lambda2 if summ.lambda2 is not None else "n/a")
    _kv(out, "nu_bar", nb)
    _kv(out, "elapsed_s", f"{summ.elapsed:.3f}")
    st = summ.stats
    _kv(out, "visited", st.visited)
    _kv(out, "device1_skips", st.device1_skips)
    _kv(out, "device1_skipped", st.device1_skipped)
    _kv(out, "device2_table_size", st.device2_table_size)
    _machine(out, ["r", "kappa", "nu", "lambda2", "nu_bar", "visited"],
             [summ.r, summ.kappa, summ.nu, summ.lambda2 if summ.lambda2 else "n/a", nb,
              st.visited])
    if args.list:
        for q in summ.representatives:
            print(q.to_csv(), file=out)
    return EXIT_OK


def cmd_period(args, out) -> int:
    q = _poly(args.poly)
    init = _int_list(args.init)
    ctx = RingCtx(q, args.w)
    if len(init) != ctx.r:
        raise _UsageError(f"--init needs {ctx.r} values, got {len(init)}")
    if not any(x & 1 for x in init):
        _kv(out, "warning", "initial values are all even; the period theory does not apply")
    state = RecurrenceState(ctx, init)
    p = brute_period(state, args.max_steps)
    _kv(out, "period", p)
    irreducible = gf2poly.is_irreducible(q.mod2())
    _kv(out, "irreducible", _yes(irreducible))
    if irreducible:
        rho = rho_w(ctx, gf2poly.order_of_t(q.mod2()))
        _kv(out, f"rho_{args.w}", rho)
        status = "agree" if rho == p else "differ"
        if not any(x & 1 for x in init):
            status += " (all-even init)"
        _kv(out, "status", status)
    else:
        _kv(out, "note", "Q is reducible mod 2: the period need not equal the order of t")
        try:
            _kv(out, "order_of_t", order_of_t_brute(ctx, args.max_steps))
        except BudgetExhausted:
            _kv(out, "order_of_t", "budget exhausted")
    return EXIT_OK


def cmd_rng(args, out) -> int:
    q = _poly(args.poly)
    tri = format_trinomial(q)
    if not args.unsafe:
        if tri is None:
            raise PreconditionError("rng needs a +-1 trinomial (or --unsafe)")
        r, s, signs = tri[4:].split(",")
        if int(r) <= 2:
            raise PreconditionError("maximal period is only certified for degree r > 2")
        verdict = trinomial_verdict(int(r), int(s),
                                    tuple(1 if ch == "+" else -1 for ch in signs))
        if verdict.kind is not PeriodKind.MAXIMAL:
            raise PreconditionError(f"{q} does not give maximal period ({verdict.kind.value})")
    ctx = RingCtx(q, args.w)
    state = RecurrenceState(ctx, seed_window(args.seed, ctx.r, args.w))
    for x in state.stream(args.count):
        print(x, file=out)
    return EXIT_OK


def cmd_tables(args, out) -> int:
    if args.max_degree < 1:
        raise _UsageError("--max-degree must be >= 1")
    start = time.perf_counter()
    report = reproduce(args.max_degree, device2_s=args.device2, workers=args.workers)
    print("#r\tnu\tnu_bar\tkappa\tlambda2", file=out)
    for r, summ in report.summaries.items():
        print(f"{r}\t{summ.nu}\t{format_nu_bar(r, summ.nu_bar)}\t{summ.kappa}\t{summ.lambda2}",
              file=out)
    if args.max_degree >= 14:
        print(f"# exceptional list: {report.list_rows} polynomials of degree <= 14",
              file=out)
        for r in range(1, 15):
            for q in report.summaries[r].representatives:
                print(f"{r}\t{q}", file=out)
    for d in report.diffs:
        print(f"DIFF {d}", file=out)
    print(f"# diffs: {len(report.diffs)}  elapsed_s: {time.perf_counter() - start:.2f}", file=out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyan",
        description="Period analysis of linear recurrences modulo 2^w.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify the period of the recurrence defined by Q")
    p.add_argument("--poly", required=True,
                   help='coefficients low-to-high ("1,-1,1") or "tri:r,s[,+-+]"')
    p.add_argument("--w", type=int, default=3, help="modulus exponent (default 3)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="count exceptional polynomials of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--no-device1", action="store_true", help="disable prefix block skipping")
    p.add_argument("--device2", type=int, default=0, metavar="S",
                   help=f"suffix table width, 0..{DEVICE2_MAX_S} (default 0 = off)")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default $POLYAN_WORKERS or 1)")
    p.add_argument("--list", action="store_true", help="print the representatives")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("period", help="brute-force period of one sequence")
    p.add_argument("--poly", required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--init", required=True, help="comma-separated x_0..x_{r-1}")
    p.add_argument("--max-steps", type=int, default=1 << 24)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("rng", help="stream a certified lagged-Fibonacci sequence")
    p.add_argument("--poly", required=True)
    p.add_argument("--w", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--unsafe", action="store_true", help="skip the maximal-period certificate")
    p.set_defaults(func=cmd_rng)

    p = sub.add_parser("tables", help="regenerate the exceptional-polynomial tables")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--device2", type=int, default=0, metavar="S")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = default_workers()
    try:
        return args.func(args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PreconditionError, PolyanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_THEORY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
