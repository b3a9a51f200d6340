"""Brute-force accumulators and the identity verification harness.

Everything here compares exact integers.  The brute-force side only ever
uses the partition-core primitives (enumeration plus statistics); it never
calls the series builders or bijection code paths it is checking, so each
comparison really is two independent routes to the same number.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import List, Optional

from . import bijections as bij
from . import qseries as qs
from .partition import (
    Partition,
    chain_maex,
    chain_mex,
    count_multiples,
    in_gap_class,
    is_strict,
    largest_repeating,
    maex_offset,
    mex_offset,
    parts_above_maex,
    parts_above_mex,
    partitions,
    smallest_repeating,
    top_multiple_multiplicity,
)

STATISTICS = ("mex", "mex+offset", "mex+r-1", "largest-maex+offset",
              "sum-largest", "sum-maex")

FAMILIES = ("multiples", "largest-repeating", "top-multiple",
            "smallest-repeating", "above-mex", "above-maex")


def sigma_stat(n: int, r: int, stat: str) -> int:
    """Exact sum of the chosen statistic over all partitions of n."""
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}")
    total = 0
    for lam in partitions(n):
        if stat == "mex":
            total += chain_mex(lam, r)
        elif stat == "mex+offset":
            total += chain_mex(lam, r) + mex_offset(lam, r)
        elif stat == "mex+r-1":
            total += chain_mex(lam, r) + r - 1
        elif stat == "largest-maex+offset":
            total += lam.largest - chain_maex(lam, r) + maex_offset(lam, r)
        elif stat == "sum-largest":
            total += lam.largest
        elif stat == "sum-maex":
            total += chain_maex(lam, 1)
    return total


def count_family(n: int, r: int, j: int, family: str) -> int:
    """Count partitions of n in one of the equinumerous families."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if r < 2:
        raise ValueError("family counts need r >= 2")
    if family in ("top-multiple", "smallest-repeating", "above-maex") and j < 1:
        raise ValueError(f"family {family!r} needs j >= 1")
    total = 0
    for lam in partitions(n):
        if family == "multiples":
            hit = count_multiples(lam, r) == j
        elif family == "largest-repeating":
            hit = largest_repeating(lam, r) == j
        elif family == "top-multiple":
            hit = top_multiple_multiplicity(lam, r) == j
        elif family == "smallest-repeating":
            hit = smallest_repeating(lam, r) == j
        elif family == "above-mex":
            hit = parts_above_mex(lam, r - 1) == j
        else:  # above-maex, restricted off the gap-bounded class
            hit = (not in_gap_class(lam, r - 1)) and parts_above_maex(lam, r - 1) == j
        total += hit
    return total


@dataclass
class Row:
    r: Optional[int]
    j: Optional[int]
    n: int
    lhs: int
    rhs: int
    label: str = ""

    @property
    def match(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class VerificationReport:
    theorem: str
    rows: List[Row] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(row.match for row in self.rows)

    def add(self, r, j, n, lhs, rhs, label=""):
        self.rows.append(Row(r, j, n, lhs, rhs, label))

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "theorem": self.theorem,
            "passed": self.passed,
            "wall_time": self.wall_time,
            "rows": [
                {"r": row.r, "j": row.j, "n": row.n, "label": row.label,
                 "lhs": str(row.lhs), "rhs": str(row.rhs), "match": row.match}
                for row in self.rows
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["theorem", "r", "j", "n", "lhs", "rhs", "match"])
        for row in self.rows:
            name = self.theorem + (f"/{row.label}" if row.label else "")
            writer.writerow([name, row.r, row.j, row.n, row.lhs, row.rhs, row.match])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.theorem}: {'PASS' if self.passed else 'FAIL'} "
                 f"({len(self.rows)} checks)"]
        for row in self.rows:
            if not row.match:
                lines.append(f"  MISMATCH r={row.r} j={row.j} n={row.n} "
                             f"{row.label} lhs={row.lhs} rhs={row.rhs}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Theorem harness
# ---------------------------------------------------------------------------

THEOREMS = ("thm-1.4", "thm-1.5", "thm-1.6", "thm-1.7", "thm-1.8",
            "thm-1.10", "thm-1.11", "q-binomial", "maex-distribution")


def check_theorem(theorem: str, r_values=None, n_max: int = None,
                  j_values=None, order: int = None) -> VerificationReport:
    """Run the brute-force vs series comparison for one identity.

    Mismatches are recorded in the report, not raised.
    """
    start = time.monotonic()
    report = VerificationReport(theorem)
    if theorem == "thm-1.4":
        n_max = 40 if n_max is None else n_max
        series = qs.series_sigma_mex(order or max(n_max, 1))
        for n in range(n_max + 1):
            report.add(1, None, n, sigma_stat(n, 1, "mex"), series.coeff(n))
    elif theorem in ("thm-1.5", "thm-1.10"):
        n_max = 25 if n_max is None else n_max
        r_values = list(r_values or range(2, 6))
        if j_values is None:
            j_values = range(0, 6) if theorem == "thm-1.5" else range(1, 6)
        families = (("multiples", "largest-repeating", "above-mex")
                    if theorem == "thm-1.5"
                    else ("top-multiple", "smallest-repeating", "above-maex"))
        j_values = list(j_values)
        stats = {
            "multiples": lambda lam, r: count_multiples(lam, r),
            "largest-repeating": lambda lam, r: largest_repeating(lam, r),
            "above-mex": lambda lam, r: parts_above_mex(lam, r - 1),
            "top-multiple": lambda lam, r: top_multiple_multiplicity(lam, r),
            "smallest-repeating": lambda lam, r: smallest_repeating(lam, r),
            "above-maex": lambda lam, r: (parts_above_maex(lam, r - 1)
                                          if not in_gap_class(lam, r - 1) else -1),
        }
        for r in r_values:
            # one enumeration pass per n, bucketing every family by j
            counts = {fam: {j: [0] * (n_max + 1) for j in j_values} for fam in families}
            for n in range(n_max + 1):
                for lam in partitions(n):
                    for fam in families:
                        j = stats[fam](lam, r)
                        if j in counts[fam]:
                            counts[fam][j][n] += 1
            for j in j_values:
                # the closed-form series counts the smallest-repeating
                # family, so it cross-checks the thm-1.10 triple only
                series = (qs.series_parts_above(r, j, order or max(n_max, 1))
                          if theorem == "thm-1.10" else None)
                for n in range(n_max + 1):
                    ref = counts[families[0]][j][n]
                    for fam in families[1:]:
                        report.add(r, j, n, counts[fam][j][n], ref, fam)
                    if series is not None:
                        report.add(r, j, n, ref, series.coeff(n), "series")
    elif theorem in ("thm-1.6", "thm-1.7", "thm-1.11"):
        n_max = 30 if n_max is None else n_max
        r_values = list(r_values or range(1, 7))
        builders = {
            "thm-1.6": (qs.series_chain_mex_shifted, "mex+r-1"),
            "thm-1.7": (qs.series_chain_mex_offset_sum, "mex+offset"),
            "thm-1.11": (qs.series_chain_maex_sum, "largest-maex+offset"),
        }
        builder, stat = builders[theorem]
        for r in r_values:
            series = builder(r, order or max(n_max, 1))
            for n in range(n_max + 1):
                report.add(r, None, n, sigma_stat(n, r, stat), series.coeff(n))
            if theorem == "thm-1.11":
                other = qs.series_chain_maex_product(r, order or qs.DEFAULT_ORDER)
                top = min(series.order, other.order)
                for n in range(top + 1):
                    report.add(r, None, n, series.coeff(n), other.coeff(n), "sum-vs-product")
    elif theorem == "thm-1.8":
        n_max = 30 if n_max is None else n_max
        series = qs.series_maex_defect(order or max(n_max, 1))
        for n in range(n_max + 1):
            lhs = sigma_stat(n, 1, "sum-largest") - sigma_stat(n, 1, "sum-maex")
            report.add(1, None, n, lhs, series.coeff(n))
    elif theorem == "q-binomial":
        top = order or qs.DEFAULT_ORDER
        cases = [(None, 1, False), (1, 1, False), (1, 2, True), (2, 1, False), (None, 2, False)]
        for a_exp, z_exp, a_negate in cases:
            lhs = qs.q_binomial_sum(a_exp, z_exp, top, a_negate)
            rhs = qs.q_binomial_product(a_exp, z_exp, top, a_negate)
            label = f"a={'0' if a_exp is None else ('-' if a_negate else '') + 'q^' + str(a_exp)},z=q^{z_exp}"
            for n in range(top + 1):
                report.add(None, None, n, lhs.coeff(n), rhs.coeff(n), label)
    elif theorem == "maex-distribution":
        n_max = 20 if n_max is None else n_max
        r_values = list(r_values or range(1, 4))
        for r in r_values:
            z_top = max(n_max - 1, r)
            series = qs.maex_bivariate(r, z_top, n_max)
            other = qs.maex_bivariate_double_sum(r, z_top, n_max)
            counts = [[0] * (n_max + 1) for _ in range(z_top + 1)]
            for n in range(n_max + 1):
                for lam in partitions(n):
                    m = chain_maex(lam, r)
                    if m > 0:
                        counts[m][n] += 1
            for m in range(z_top + 1):
                for n in range(n_max + 1):
                    report.add(r, m, n, counts[m][n], series.coeff(m, n), "enumeration")
                    report.add(r, m, n, series.coeff(m, n), other.coeff(m, n), "double-sum")
    else:
        raise ValueError(f"unknown theorem id {theorem!r}")
    report.wall_time = time.monotonic() - start
    return report


# ---------------------------------------------------------------------------
# Bijection certification
# ---------------------------------------------------------------------------

BIJECTIONS = ("glaisher", "multiples-repeats", "top-multiple",
              "gamma", "gamma-star", "delta")


def _mex_codomain_pairs(n, r):
    for a in range(n + 1):
        for alpha in partitions(a, lambda p: is_strict(p, r + 1)):
            for beta in partitions(n - a):
                pair = bij.PartitionPair(alpha, beta)
                if bij.in_mex_codomain(pair, r):
                    yield pair


def _colored_codomain_pairs(n, r):
    for a in range(n + 1):
        for alpha in partitions(a, lambda p: is_strict(p, r + 1)):
            if a == n:
                for color in range(1, r + 1):
                    yield bij.PartitionPair(alpha, bij.ColoredEmpty(color))
            for beta in partitions(n - a, lambda p: not p.is_empty):
                pair = bij.PartitionPair(alpha, beta)
                if bij.in_mex_codomain(pair, r):
                    yield pair


def _maex_codomain_pairs(n, r):
    for a in range(n + 1):
        for alpha in partitions(a, lambda p: is_strict(p, r + 1)):
            for beta in partitions(n - a):
                pair = bij.PartitionPair(alpha, beta)
                if bij.in_maex_codomain(pair, r):
                    yield pair


def certify_bijection(name: str, r: int, n_max: int) -> VerificationReport:
    """Exhaustively certify one constructive map for all weights <= n_max:
    forward output lands in the codomain, the inverse round-trips, and
    independently enumerated domain and codomain cardinalities agree."""
    start = time.monotonic()
    report = VerificationReport(f"bijection:{name}")
    for n in range(n_max + 1):
        if name == "glaisher":
            domain = list(partitions(n, lambda p: all(v % r for v, _ in p.pairs)))
            codomain = list(partitions(n, lambda p: is_strict(p, r)))
            images = set()
            ok = True
            for lam in domain:
                out = bij.glaisher_merge(lam, r)
                ok &= is_strict(out, r) and out.weight == n
                ok &= bij.glaisher_split(out, r) == lam
                images.add(out)
            ok &= images == set(codomain)
            report.add(r, None, n, len(domain), len(codomain), "cardinality")
            report.add(r, None, n, int(ok), 1, "roundtrip")
        elif name == "multiples-repeats":
            images = set()
            ok = True
            fibers = True
            for lam in partitions(n):
                j = count_multiples(lam, r)
                out = bij.multiples_to_repeats(lam, r)
                ok &= out.weight == n
                fibers &= largest_repeating(out, r) == j
                ok &= bij.repeats_to_multiples(out, r) == lam
                images.add(out)
            ok &= len(images) == sum(1 for _ in partitions(n))
            report.add(r, None, n, int(ok), 1, "roundtrip")
            report.add(r, None, n, int(fibers), 1, "fiber")
        elif name == "top-multiple":
            domain = list(partitions(n, lambda p: any(v % r == 0 for v, _ in p.pairs)))
            codomain = list(partitions(n, lambda p: any(m >= r for _, m in p.pairs)))
            images = set()
            ok = True
            fibers = True
            for lam in domain:
                j = top_multiple_multiplicity(lam, r)
                out = bij.top_multiple_to_repeats(lam, r)
                ok &= out.weight == n
                fibers &= smallest_repeating(out, r) == j
                ok &= bij.repeats_to_top_multiple(out, r) == lam
                images.add(out)
            ok &= images == set(codomain)
            report.add(r, None, n, len(domain), len(codomain), "cardinality")
            report.add(r, None, n, int(ok), 1, "roundtrip")
            report.add(r, None, n, int(fibers), 1, "fiber")
        elif name in ("gamma", "gamma-star", "delta"):
            if name == "gamma":
                bound = lambda lam: chain_mex(lam, r) + mex_offset(lam, r)
                forward, inverse = bij.mex_pairing, bij.mex_pairing_inv
                checker = bij.in_mex_codomain
                codomain = list(_mex_codomain_pairs(n, r))
            elif name == "gamma-star":
                bound = lambda lam: chain_mex(lam, r) + r - 1
                forward, inverse = bij.mex_pairing_colored, bij.mex_pairing_colored_inv
                checker = bij.in_colored_codomain
                codomain = list(_colored_codomain_pairs(n, r))
            else:
                bound = lambda lam: lam.largest - chain_maex(lam, r) + maex_offset(lam, r)
                forward, inverse = bij.maex_pairing, bij.maex_pairing_inv
                checker = bij.in_maex_codomain
                codomain = list(_maex_codomain_pairs(n, r))
            ok = True
            images = set()
            domain_size = 0
            for lam in partitions(n):
                for i in range(1, bound(lam) + 1):
                    domain_size += 1
                    pair = forward(lam, i, r)
                    ok &= pair.weight == n and checker(pair, r)
                    ok &= inverse(pair, r) == (lam, i)
                    images.add((pair.alpha, pair.beta))
            codomain_keys = {(p.alpha, p.beta) for p in codomain}
            ok &= images == codomain_keys and len(images) == domain_size
            report.add(r, None, n, domain_size, len(codomain_keys), "cardinality")
            report.add(r, None, n, int(ok), 1, "roundtrip")
        else:
            raise ValueError(f"unknown bijection id {name!r}")
    report.wall_time = time.monotonic() - start
    return report


def report_to_format(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2)
    if fmt == "csv":
        return report.to_csv()
    return report.to_text()
