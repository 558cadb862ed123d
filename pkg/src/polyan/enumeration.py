"""Enumeration of candidate and exceptional polynomials of a given degree.

A degree-r polynomial with q_0 = q_r = 1 is indexed by the (r-1)-bit number
N = b_1 b_2 ... b_{r-1} (b_1 most significant), where b_j = q_j mod 2.  The
bits fix every eps_m, and eps_m fixes q_m mod 4: a lift into {-1, 0, 1}
exists iff no eps_m = 1 sits on a zero bit.  Such a lift is a candidate;
it is exceptional when the bit pattern is also primitive.

Two pruning devices shrink the scan:

* device 1 -- eps_m only depends on b_1 .. b_{2m}, so a violation at
  m < r/2 rules out the whole block of 2^(r-2m-1) values sharing that prefix;
* device 2 -- symmetrically eps_{r-m} only depends on b_{r-2m} .. b_{r-1},
  so only low-order s-bit suffixes from a precomputed table are visited.

Each N is screened with a single big-integer square: packing b_j into
fields of F bits, the coefficient of t^(2m) in the square is
b_m + 2 * sum_{j<k, j+k=2m} b_j b_k, so "bit 1 set, bit 0 clear" in field 2m
is exactly a forbidden coefficient q_m = 2 (mod 4).
"""

from __future__ import annotations

import logging
import os
import time
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import gf2poly
from .conditions import condition_s_def
from .intpoly import IntPoly

log = logging.getLogger(__name__)

DEVICE2_MAX_S = 22


@dataclass(frozen=True)
class CandidateLift:
    bits: int
    lifted: IntPoly


@dataclass(frozen=True)
class Forbidden:
    m: int


@dataclass
class EnumStats:
    visited: int = 0
    device1_skips: int = 0
    device1_skipped: int = 0
    device2_table_size: int = 0

    def merge(self, other: EnumStats) -> None:
        self.visited += other.visited
        self.device1_skips += other.device1_skips
        self.device1_skipped += other.device1_skipped


@dataclass
class EnumSummary:
    r: int
    kappa: int
    nu: int
    lambda2: int | None
    nu_bar: float | None
    representatives: list[IntPoly]
    stats: EnumStats = field(default_factory=EnumStats)
    elapsed: float = 0.0


def poly_bits(r: int, n: int) -> int:
    """GF(2) bit pattern (bit j = b_j) of the polynomial indexed by N."""
    bits = 1 | 1 << r
    for j in range(1, r):
        if n >> (r - 1 - j) & 1:
            bits |= 1 << j
    return bits


def index_of(q: IntPoly) -> int:
    """Inverse of poly_bits: the N of a degree-r pattern with q_0 = q_r odd."""
    r = q.degree
    n = 0
    for j in range(1, r):
        n = n << 1 | (q[j] & 1)
    return n


def lift_bits(r: int, n: int) -> CandidateLift | Forbidden:
    """Lift the pattern N to coefficients in {-1, 0, 1}, or report the first clash.

    eps_m is computed directly from the bit convolutions here (this is the
    readable reference; the scanner uses the packed-square screen instead).
    """
    bits = poly_bits(r, n)
    b = [bits >> j & 1 for j in range(r + 1)]
    coeffs = []
    for m in range(r + 1):
        eps = 0
        for j in range(m):
            eps ^= b[j] & b[2 * m - j] if 2 * m - j <= r else 0
        if eps and not b[m]:
            return Forbidden(m)
        coeffs.append(-1 if eps else b[m])
    return CandidateLift(bits, IntPoly(coeffs))


class _Screen:
    """Per-degree tables for the packed-square candidate screen."""

    def __init__(self, r: int):
        self.r = r
        self.width = f = max(3, (r + 1).bit_length() + 1)
        self.base = 1 | 1 << (r * f)
        self.chunks = []
        for sh in range(0, max(r - 1, 0), 8):
            tab = []
            for v in range(256):
                x = 0
                for i in range(8):
                    pos = sh + i
                    if v >> i & 1 and pos < r - 1:
                        x |= 1 << ((r - 1 - pos) * f)
                tab.append(x)
            self.chunks.append((sh, tab))
        self.eps_mask = sum(1 << (2 * m * f + 1) for m in range(r + 1))

    def square(self, n: int) -> int:
        x = self.base
        for sh, tab in self.chunks:
            x += tab[n >> sh & 255]
        return x * x

    def first_forbidden(self, sq: int) -> int | None:
        bad = sq & self.eps_mask & ~(sq << 1)
        if not bad:
            return None
        return ((bad & -bad).bit_length() - 2) // (2 * self.width)

    def lift(self, n: int, sq: int) -> IntPoly:
        f = self.width
        bits = poly_bits(self.r, n)
        coeffs = []
        for m in range(self.r + 1):
            if sq >> (2 * m * f + 1) & 1:
                coeffs.append(-1)
            else:
                coeffs.append(bits >> m & 1)
        return IntPoly(coeffs)


@lru_cache(maxsize=64)
def suffix_table(r: int, s: int) -> tuple[int, ...]:
    """Admissible low-order s-bit suffixes of N (bit i-1 holds b_{r-i}).

    Reading the polynomial from the top, c_i = b_{r-i} with c_0 = b_r = 1;
    the constraint at q_{r-m} is the prefix constraint at m on c_0 .. c_{2m}.
    Built by extending valid prefixes two bits at a time.
    """
    if s <= 0:
        return (0,)
    level = [1]  # bit i of an entry is c_i; c_0 = 1
    for k in range(1, s + 1):
        nxt = []
        for v in level:
            for c in (0, 1):
                u = v | c << k
                if k % 2 == 0:
                    m = k // 2
                    eps = 0
                    for j in range(m):
                        eps ^= (u >> j) & (u >> (k - j)) & 1
                    if eps and not u >> m & 1:
                        continue
                nxt.append(u)
        level = nxt
    return tuple(sorted(v >> 1 for v in level))


def _scan_range(r: int, lo: int, hi: int, device1: bool, s: int):
    screen = _Screen(r)
    table = suffix_table(r, s) if s else None
    smask = (1 << s) - 1
    stats = EnumStats()
    kappa = 0
    exceptional: list[IntPoly] = []
    half = r / 2

    def admissible(n: int) -> int:
        if table is None:
            return n
        top, low = n >> s, n & smask
        i = bisect_left(table, low)
        if i == len(table):
            top += 1
            i = 0
        return top << s | table[i]

    n = admissible(lo)
    while n < hi:
        stats.visited += 1
        sq = screen.square(n)
        m = screen.first_forbidden(sq)
        if m is None:
            kappa += 1
            bits = poly_bits(r, n)
            if gf2poly.is_primitive(bits):
                exceptional.append(screen.lift(n, sq))
            n = admissible(n + 1)
        elif device1 and m < half:
            free = r - 1 - 2 * m
            nxt = ((n >> free) + 1) << free
            stats.device1_skips += 1
            stats.device1_skipped += nxt - n - 1
            n = admissible(nxt)
        else:
            n = admissible(n + 1)
    return kappa, exceptional, stats


def canonical(q: IntPoly) -> IntPoly:
    """The lexicographically smaller of Q and its reverse (ordering -1 < 0 < 1)."""
    rev = q.reverse()
    return q if q.coeffs <= rev.coeffs else rev


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("POLYAN_WORKERS", "1")))
    except ValueError:
        return 1


def enumerate_degree(r: int, device1: bool = True, device2_s: int = 0,
                     workers: int | None = None) -> EnumSummary:
    """Count candidates kappa(r) and exceptional pairs nu(r) of degree r.

    ``device2_s`` is clamped to r - 1.  The result does not depend on the
    device flags or on ``workers``.
    """
    if r < 1:
        raise ValueError("degree must be >= 1")
    if not 0 <= device2_s <= DEVICE2_MAX_S:
        raise ValueError(f"device2_s must be in [0, {DEVICE2_MAX_S}] (table memory budget)")
    if workers is None:
        workers = default_workers()
    s = min(device2_s, r - 1)
    start = time.perf_counter()
    total = 1 << (r - 1)
    kappa = 0
    found: list[IntPoly] = []
    stats = EnumStats(device2_table_size=len(suffix_table(r, s)) if s else 0)
    if r == 1:
        # Q = 1 + t: both ends fixed, nothing to scan; not exceptional (needs r > 1)
        kappa = 1 if condition_s_def(IntPoly([1, 1])) else 0
    else:
        pieces = min(total, max(1, workers) * 16)
        bounds = [total * i // pieces for i in range(pieces + 1)]
        jobs = [(r, bounds[i], bounds[i + 1], device1, s) for i in range(pieces)]
        if workers > 1 and pieces > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_scan_range, *zip(*jobs)))
        else:
            results = [_scan_range(*job) for job in jobs]
        for k, exc, st in results:
            kappa += k
            found.extend(exc)
            stats.merge(st)
    reps = sorted({canonical(q) for q in found}, key=IntPoly.sort_key)
    nu = len(reps)
    lam2 = lambda2(r) if _lambda2_available(r) else None
    summary = EnumSummary(
        r=r, kappa=kappa, nu=nu, lambda2=lam2,
        nu_bar=nu_bar(r, nu) if lam2 is not None else None,
        representatives=reps, stats=stats,
        elapsed=time.perf_counter() - start,
    )
    log.debug("degree %d: kappa=%d nu=%d visited=%d", r, kappa, nu, stats.visited)
    return summary


def _lambda2_available(r: int) -> bool:
    return r <= gf2poly.MAX_FACTORED_DEGREE or r in gf2poly.MERSENNE_EXPONENTS


def lambda2(r: int) -> int:
    """Number of primitive polynomials of degree r over GF(2): phi(2^r - 1) / r."""
    if r <= gf2poly.MAX_FACTORED_DEGREE:
        phi = gf2poly.euler_phi(gf2poly.factor_mersenne(r))
    elif r in gf2poly.MERSENNE_EXPONENTS:
        phi = (1 << r) - 2
    else:
        raise ValueError(f"lambda2({r}) needs the factorization of 2^{r} - 1")
    assert phi % r == 0
    return phi // r


def nu_bar(r: int, nu: int) -> float:
    """nu(r) / ((3/4)^r lambda2(r))."""
    return nu / (0.75**r * lambda2(r))


def format_nu_bar(r: int, value: float | None, digits: int | None = None) -> str:
    """Print like the published table: '0' for zero, 2 dp up to r = 20, else 4 dp."""
    if value is None:
        return "n/a"
    if value == 0:
        return "0"
    if digits is None:
        digits = 2 if r <= 20 else 4
    return f"{value:.{digits}f}"


def verify_exceptional(q: IntPoly) -> bool:
    """Re-check the three defining conditions independently of the scan."""
    if q.degree < 2 or not q.is_candidate_form():
        return False
    if not gf2poly.is_primitive(q.mod2()):
        return False
    return condition_s_def(q)
