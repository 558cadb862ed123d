"""Golden copies of the published exceptional-polynomial tables and diffing."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .enumeration import EnumSummary, canonical, enumerate_degree, format_nu_bar
from .intpoly import IntPoly, parse_poly

LIST_MAX_DEGREE = 14


def _data_lines(name: str):
    text = resources.files("polyan").joinpath("data", name).read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line.split("\t")


def golden_exceptional() -> dict[int, list[IntPoly]]:
    out: dict[int, list[IntPoly]] = {}
    for r, poly in _data_lines("exceptional.txt"):
        out.setdefault(int(r), []).append(parse_poly(poly))
    return out


def golden_counts() -> dict[int, tuple[int, str]]:
    return {int(r): (int(nu), nb) for r, nu, nb in _data_lines("counts.tsv")}


@dataclass
class TableReport:
    summaries: dict[int, EnumSummary]
    diffs: list[str] = field(default_factory=list)
    list_rows: int = 0

    @property
    def ok(self) -> bool:
        return not self.diffs


def reproduce(max_degree: int, device1: bool = True, device2_s: int = 0,
              workers: int | None = None) -> TableReport:
    """Enumerate degrees 1..max_degree and diff against the golden tables.

    The exceptional list is compared as a set of reversal pairs, so it does not matter
    which member of each pair the published table happens to list.
    """
    t2 = golden_counts()
    report = TableReport({})
    for r in range(1, max_degree + 1):
        report.summaries[r] = summ = enumerate_degree(r, device1, device2_s, workers)
        if r in t2:
            nu, printed = t2[r]
            if summ.nu != nu:
                report.diffs.append(f"counts r={r}: nu {summ.nu} != published {nu}")
            mine = format_nu_bar(r, summ.nu_bar, digits=_digits(printed))
            if mine != printed:
                report.diffs.append(f"counts r={r}: nu_bar {mine} != published {printed}")
    if max_degree >= LIST_MAX_DEGREE:
        t1 = golden_exceptional()
        for r in range(1, LIST_MAX_DEGREE + 1):
            want = {canonical(q) for q in t1.get(r, [])}
            got = set(report.summaries[r].representatives)
            report.list_rows += len(got)
            for q in sorted(want - got, key=IntPoly.sort_key):
                report.diffs.append(f"list r={r}: missing {q}")
            for q in sorted(got - want, key=IntPoly.sort_key):
                report.diffs.append(f"list r={r}: unexpected {q}")
    return report


def _digits(printed: str) -> int | None:
    return len(printed.split(".")[1]) if "." in printed else None
