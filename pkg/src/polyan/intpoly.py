"""Integer-coefficient polynomials Q(t) = q_0 + q_1 t + ... + q_r t^r."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exceptions import PreconditionError


@dataclass(frozen=True)
class IntPoly:
    """Immutable integer polynomial; ``coeffs[j]`` is the coefficient of t^j.

    Trailing zero coefficients are stripped, so ``coeffs[-1]`` is the leading
    coefficient.  The zero polynomial has ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_bits(cls, bits: int) -> IntPoly:
        return cls([bits >> j & 1 for j in range(bits.bit_length())])

    @classmethod
    def trinomial(cls, r: int, s: int, signs=(1, 1, 1)) -> IntPoly:
        """sigma_0 + sigma_s t^s + sigma_r t^r."""
        if not r > s > 0:
            raise ValueError(f"trinomial needs r > s > 0, got r={r}, s={s}")
        c = [0] * (r + 1)
        c[0], c[s], c[r] = signs
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def mod2(self) -> int:
        """Q(t) mod 2 as a GF(2) bit pattern."""
        bits = 0
        for j, c in enumerate(self.coeffs):
            if c & 1:
                bits |= 1 << j
        return bits

    def negate_variable(self) -> IntPoly:
        """Q(-t)."""
        return IntPoly([-c if j & 1 else c for j, c in enumerate(self.coeffs)])

    def reverse(self) -> IntPoly:
        return reverse(self)

    def require_odd_ends(self) -> None:
        if self.degree < 1:
            raise PreconditionError("Q must have degree r >= 1")
        if not self.coeffs[0] & 1:
            raise PreconditionError(f"q_0 = {self.coeffs[0]} is even (q_0 must be odd)")
        if not self.coeffs[-1] & 1:
            raise PreconditionError(f"q_r = {self.coeffs[-1]} is even (q_r must be odd)")

    def is_candidate_form(self) -> bool:
        """Coefficients in {-1, 0, 1} with q_0 = q_r = 1."""
        return (self.degree >= 1 and self.coeffs[0] == 1 and self.coeffs[-1] == 1
                and all(c in (-1, 0, 1) for c in self.coeffs))

    def sort_key(self) -> tuple[int, ...]:
        return self.coeffs

    def to_csv(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else "t" if j == 1 else f"t^{j}"
            mag = abs(c)
            body = str(mag) if j == 0 else (mono if mag == 1 else f"{mag}{mono}")
            if not out:
                out = body if c > 0 else "-" + body
            else:
                out += (" + " if c > 0 else " - ") + body
        return out


def reverse(q: IntPoly) -> IntPoly:
    """The reverse polynomial t^r Q(1/t)."""
    if q[0] == 0:
        raise ValueError("reverse needs q_0 != 0, otherwise the degree drops")
    return IntPoly(q.coeffs[::-1])


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:\*?\s*(t)(?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str) -> IntPoly:
    """Parse ``"1,-1,1"``, ``"tri:r,s[,signs]"`` or ``"1 - t + t^2"``.

    Raises ValueError on malformed input.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if text.startswith("tri:"):
        parts = text[4:].split(",")
        if len(parts) not in (2, 3):
            raise ValueError(f"bad trinomial shorthand {text!r}")
        try:
            r, s = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad trinomial shorthand {text!r}") from None
        signs = (1, 1, 1)
        if len(parts) == 3:
            sign_str = parts[2].strip()
            if len(sign_str) != 3 or any(ch not in "+-" for ch in sign_str):
                raise ValueError(f"sign string must be three of '+'/'-', got {sign_str!r}")
            signs = tuple(1 if ch == "+" else -1 for ch in sign_str)
        return IntPoly.trinomial(r, s, signs)
    if "t" not in text:
        try:
            return IntPoly(int(x) for x in text.split(","))
        except ValueError:
            raise ValueError(f"bad coefficient list {text!r}") from None
    coeffs: dict[int, int] = {}
    pos = 0
    compact = text.replace(" ", "")
    while pos < len(compact):
        m = _TERM.match(compact, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial near {compact[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing operator near {compact[pos:]!r}")
        mag = int(m.group(2)) if m.group(2) else 1
        exp = 0 if not m.group(3) else int(m.group(4)) if m.group(4) else 1
        coeffs[exp] = coeffs.get(exp, 0) + sign * mag
        pos = m.end()
    top = max(coeffs)
    return IntPoly([coeffs.get(j, 0) for j in range(top + 1)])


def format_trinomial(q: IntPoly) -> str | None:
    """Shorthand ``tri:r,s,signs`` when q is a +-1 trinomial, else None."""
    nz = [j for j, c in enumerate(q.coeffs) if c]
    if len(nz) != 3 or nz[0] != 0 or any(abs(q[j]) != 1 for j in nz):
        return None
    signs = "".join("+" if q[j] > 0 else "-" for j in nz)
    return f"tri:{nz[2]},{nz[1]},{signs}"
