"""Counting tables and coverage bounds in exact arithmetic.

Two arithmetic modes exist.  ``"exact"`` (the default) uses integers and
fractions throughout.  ``"float64"`` evaluates the same formulas in IEEE
double precision and prints the resulting doubles; the published tables
were produced that way, so this mode reproduces them digit for digit while
the exact mode shows the true values.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from importlib import resources
from typing import Iterable

from .composer import _trim_amount, square_map_size
from .errors import ArgumentError
from .patterns2d import UnreducedFraction, ap_ratio
from .words import necklace_poly, necklace_poly_float64

ARITHMETIC_MODES = ("exact", "float64")
PERCENT_DIGITS = 15


def decimal_string(value: Fraction, digits: int = PERCENT_DIGITS) -> str:
    """Fixed-point rendering of a rational by long division, rounding half up."""
    if value < 0:
        raise ArgumentError("only nonnegative values are rendered")
    scaled = value * 10**digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    whole, frac = divmod(q, 10**digits)
    return f"{whole}.{frac:0{digits}d}" if digits else str(whole)


def float_decimal_string(value: float, digits: int = PERCENT_DIGITS) -> str:
    """Fixed-point rendering of the exact binary value of a double, rounding half up."""
    return decimal_string(Fraction(value), digits)


@dataclass(frozen=True)
class Table1Row:
    m: int
    n: int
    k: int
    numerator: int
    denominator: int

    @property
    def fraction(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class CoverageRow:
    k: int
    n: int
    N: int
    Ntilde: int
    ratio: Fraction  # N^2 / Ntilde^2, exact in both modes
    percent: str

    @property
    def fraction(self) -> str:
        return f"{self.N}/{self.Ntilde}"


def _check_mode(arithmetic):
    if arithmetic not in ARITHMETIC_MODES:
        raise ArgumentError(f"arithmetic must be one of {ARITHMETIC_MODES}, got {arithmetic!r}")


def table1_cell(m: int, n: int, k: int, arithmetic: str = "exact") -> Table1Row:
    _check_mode(arithmetic)
    if arithmetic == "exact":
        num, den = ap_ratio(m, n, k)
    else:
        num = int(m * necklace_poly_float64(k**n, m))
        den = int(float(k) ** (m * n))
    return Table1Row(m, n, k, num, den)


def table1(m_range=range(2, 7), n_range=range(2, 7), k_range=range(2, 6), arithmetic="exact") -> list[Table1Row]:
    """Ratio of row-aperiodic to all (m, n) patterns, unreduced."""
    return [table1_cell(m, n, k, arithmetic) for m in m_range for n in n_range for k in k_range]


def table2_row(k: int, n: int, arithmetic: str = "exact") -> CoverageRow:
    _check_mode(arithmetic)
    N = square_map_size(k, n)
    Ntilde = k ** (n * n)
    ratio = Fraction(N * N, Ntilde * Ntilde)
    if arithmetic == "exact":
        return CoverageRow(k, n, N, Ntilde, ratio, decimal_string(100 * ratio))
    _, n_pp = _trim_amount(necklace_poly(k**n, n), n)
    N_f = n * (necklace_poly_float64(k**n, n) - n_pp)
    percent = N_f**2 / float(k * k) ** (n * n) * 100
    return CoverageRow(k, n, int(N_f), int(float(k) ** (n * n)), ratio, float_decimal_string(percent))


def table2(k_range=range(2, 6), n_range=range(2, 7), arithmetic="exact") -> list[CoverageRow]:
    """Square (n, n)_{k^2} maps against hypothetical de Bruijn tori of side k^(n^2)."""
    return [table2_row(k, n, arithmetic) for k in k_range for n in n_range]


def coverage_series(k_values=(2, 3, 4, 5), n_values=range(2, 7)) -> dict[int, list[tuple[int, Fraction]]]:
    """Coverage percentages per k as exact fractions (the plotted series)."""
    return {k: [(n, 100 * table2_row(k, n).ratio) for n in n_values] for k in k_values}


def necklace_bounds(k: int, m: int) -> tuple[Fraction, Fraction]:
    """Strict bounds (lower, upper) on M(k, m) for k, m >= 2."""
    return Fraction(k**m - k ** (m // 2 + 1), m), Fraction(k**m, m)


def periodic_fraction(k: int, m: int) -> Fraction:
    return 1 - Fraction(m * necklace_poly(k, m), k**m)


def periodic_fraction_bound(k: int, m: int) -> Fraction:
    """Upper bound k^(1 - ceil(m/2)) on the share of periodic words."""
    return Fraction(k) ** (1 - (m + 1) // 2)


def ap_ratio_lower_bound(m: int, n: int, k: int) -> Fraction:
    return Fraction(k ** (m * n) - k ** ((m // 2 + 1) * n), k ** (m * n))


def my_comparison(d: int, k: int, m: int, n: int) -> tuple[Fraction, Fraction]:
    """Coverage of the marker-based construction with a base alphabet of ``d``
    letters inside ``k``, and its bound ((k-1)/k)^(mn-1)."""
    if not 0 < d < k:
        raise ArgumentError(f"need 0 < d < k, got d={d}, k={k}")
    share = Fraction(d ** (m * n - 1) * k, k ** (m * n))
    bound = Fraction(k - 1, k) ** (m * n - 1)
    if share > bound:
        raise ArithmeticError("marker coverage exceeds its bound")
    return share, bound


def load_printed(name: str) -> list[dict]:
    """Published table cells shipped with the package (``table1`` or ``table2``)."""
    text = resources.files("dbrings").joinpath("data").joinpath(f"printed_{name}.csv").read_text()
    return list(csv.DictReader(io.StringIO(text)))


@dataclass(frozen=True)
class CellDiff:
    key: tuple
    column: str
    computed: str
    printed: str


def diff_table1(rows: Iterable[Table1Row]) -> list[CellDiff]:
    printed = {(int(r["m"]), int(r["n"]), int(r["k"])): r for r in load_printed("table1")}
    diffs = []
    for row in rows:
        ref = printed.get((row.m, row.n, row.k))
        if ref is None:
            continue
        got = f"{row.numerator}/{row.denominator}"
        want = f"{ref['numerator']}/{ref['denominator']}"
        if got != want:
            diffs.append(CellDiff((row.m, row.n, row.k), "fraction", got, want))
    return diffs


def diff_table2(rows: Iterable[CoverageRow]) -> list[CellDiff]:
    printed = {(int(r["k"]), int(r["n"])): r for r in load_printed("table2")}
    diffs = []
    for row in rows:
        ref = printed.get((row.k, row.n))
        if ref is None:
            continue
        if row.fraction != f"{ref['N']}/{ref['Ntilde']}":
            diffs.append(CellDiff((row.k, row.n), "fraction", row.fraction, f"{ref['N']}/{ref['Ntilde']}"))
        if row.percent != ref["percent"]:
            diffs.append(CellDiff((row.k, row.n), "percent", row.percent, ref["percent"]))
    return diffs


def table1_csv(rows: Iterable[Table1Row]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["m", "n", "k", "numerator", "denominator"])
    for r in rows:
        writer.writerow([r.m, r.n, r.k, r.numerator, r.denominator])
    return out.getvalue()


def table2_csv(rows: Iterable[CoverageRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k", "n", "N", "Ntilde", "percent"])
    for r in rows:
        writer.writerow([r.k, r.n, r.N, r.Ntilde, r.percent])
    return out.getvalue()


def _aligned(header: list[str], body: list[list[str]]) -> str:
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in body]
    return "\n".join(lines) + "\n"


def table1_text(rows: Iterable[Table1Row]) -> str:
    return _aligned(["m", "n", "k", "ratio"], [[str(r.m), str(r.n), str(r.k), r.fraction] for r in rows])


def table2_text(rows: Iterable[CoverageRow]) -> str:
    return _aligned(
        ["k", "n", "N/Ntilde", "N^2/Ntilde^2 %"],
        [[str(r.k), str(r.n), r.fraction, r.percent] for r in rows],
    )


def parse_range(text: str) -> range:
    """``"2-6"`` -> range(2, 7); ``"4"`` -> range(4, 5)."""
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise ArgumentError(f"bad range {text!r}; expected N or LO-HI") from None
    if lo > hi:
        raise ArgumentError(f"empty range {text!r}")
    return range(lo, hi + 1)
