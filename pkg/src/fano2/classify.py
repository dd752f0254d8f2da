"""Exhaustive enumeration of candidate Hilbert series and their statistics.

A candidate is a pair (basket, genus) passing every numerical filter:
basket load < 24, polarisation residual 0, degree A^3 = base + genus + 2
strictly positive and at most (48/5)(Ac2/12).  The genus range -2..9 is
not imposed anywhere; it emerges from the filters and is asserted by the
test suite.

Candidates serialise to JSON records and CSV rows with a fixed field
order; rationals are written as exact ``p/q`` strings, never floats.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Iterable, Sequence, TextIO

from .basket import Basket, SingularityType, enumerate_baskets, parse_basket
from .riemann_roch import (
    acz12_from_basket,
    base_degree,
    hilbert_series,
    kawamata_status,
    polarisation_residual,
    STABLE,
)
from .series import DEFAULT_CUTOFF, TruncatedSeries

#: A basket whose singular rank reaches this bound cannot carry a K3
#: elephant: that many exceptional (-2)-curves plus the polarisation class
#: would exceed the rank-20 Picard lattice of a K3 surface.
K3_RANK_BOUND = 20

#: Fixed column order for JSON records and CSV rows.
RECORD_FIELDS = (
    "basket",
    "genus",
    "A3",
    "Ac2_over_12",
    "stable",
    "h0_A",
    "h0_2A",
    "k3_obstructed",
    "series",
)


@dataclass(frozen=True)
class Candidate:
    """One admissible (basket, genus) pair with its derived data."""

    basket: Basket
    genus: int
    a3: Fraction
    acz12: Fraction
    stable: bool
    series: TruncatedSeries
    k3_obstructed: bool


def anticanonical_sections(c: Candidate) -> int:
    """h^0(-K) = h^0(2A), the coefficient of t^2; always >= 1."""
    return int(c.series[2])


def k3_obstruction(c: Candidate) -> bool:
    """True when the basket's singular rank rules out a K3 elephant."""
    return c.basket.singular_rank >= K3_RANK_BOUND


@lru_cache(maxsize=4)
def _enumerate(cutoff: int) -> tuple[Candidate, ...]:
    if cutoff < 2:
        raise ValueError("candidate records report h0(2A); cutoff must be >= 2")
    out: list[Candidate] = []
    for basket in enumerate_baskets():
        if polarisation_residual(basket) != 0:
            # Never observed; a nonzero residual would be major news, so
            # fail loudly rather than silently dropping the basket.
            raise AssertionError(
                f"polarisation residual nonzero for basket [{basket}]"
            )
        acz12 = acz12_from_basket(basket)
        base = base_degree(basket)
        cap = Fraction(48, 5) * acz12
        n_min = max(0, floor(-base) + 1)  # smallest N with base + N > 0
        n_max = floor(cap - base)
        for n in range(n_min, n_max + 1):
            a3 = base + n
            genus = n - 2
            out.append(
                Candidate(
                    basket=basket,
                    genus=genus,
                    a3=a3,
                    acz12=acz12,
                    stable=kawamata_status(a3, acz12) == STABLE,
                    series=hilbert_series(basket, genus, cutoff),
                    k3_obstructed=basket.singular_rank >= K3_RANK_BOUND,
                )
            )
    return tuple(out)


def enumerate_candidates(
    cutoff: int = DEFAULT_CUTOFF, stable_only: bool = False
) -> tuple[Candidate, ...]:
    """All candidates in canonical order: basket (lexicographic), then
    genus ascending.  Deterministic; memoised per cutoff."""
    cands = _enumerate(cutoff)
    if stable_only:
        return tuple(c for c in cands if c.stable)
    return cands


def distinct_series_count(candidates: Iterable[Candidate]) -> int:
    """Number of distinct truncated series among the candidates.

    Candidates are (basket, genus) pairs; this counts the series
    themselves in case two pairs ever produce the same expansion (none do
    at the default cutoff, so both counts are reported equal)."""
    return len({c.series.coeffs for c in candidates})


@dataclass(frozen=True)
class GenusRow:
    genus: int
    total: int
    unstable: int
    min_a3: Fraction
    max_a3: Fraction


def genus_histogram(candidates: Sequence[Candidate]) -> list[GenusRow]:
    """Per-genus totals, unstable counts and exact degree extremes."""
    by_genus: dict[int, list[Candidate]] = {}
    for c in candidates:
        by_genus.setdefault(c.genus, []).append(c)
    rows = []
    for g in sorted(by_genus):
        group = by_genus[g]
        rows.append(
            GenusRow(
                genus=g,
                total=len(group),
                unstable=sum(1 for c in group if not c.stable),
                min_a3=min(c.a3 for c in group),
                max_a3=max(c.a3 for c in group),
            )
        )
    return rows


def degree_extremes(
    candidates: Sequence[Candidate],
) -> list[tuple[int, Fraction, Fraction]]:
    """(genus, min A^3, max A^3) per genus, exact rationals."""
    return [(r.genus, r.min_a3, r.max_a3) for r in genus_histogram(candidates)]


# ---------------------------------------------------------------------------
# serialisation


def candidate_record(c: Candidate) -> dict:
    """JSON-ready dict with the fixed field order of RECORD_FIELDS."""
    return {
        "basket": [[s.r, s.a] for s in c.basket],
        "genus": c.genus,
        "A3": str(c.a3),
        "Ac2_over_12": str(c.acz12),
        "stable": c.stable,
        "h0_A": int(c.series[1]),
        "h0_2A": int(c.series[2]),
        "k3_obstructed": c.k3_obstructed,
        "series": list(c.series.integer_coeffs()),
    }


def candidate_from_record(record: dict) -> Candidate:
    """Inverse of :func:`candidate_record`; round-trips exactly."""
    basket = Basket(tuple(SingularityType(r, a) for r, a in record["basket"]))
    return Candidate(
        basket=basket,
        genus=int(record["genus"]),
        a3=Fraction(record["A3"]),
        acz12=Fraction(record["Ac2_over_12"]),
        stable=bool(record["stable"]),
        series=TruncatedSeries.from_ints(record["series"]),
        k3_obstructed=bool(record["k3_obstructed"]),
    )


def write_json(candidates: Iterable[Candidate], fp: TextIO) -> None:
    json.dump([candidate_record(c) for c in candidates], fp, indent=None)
    fp.write("\n")


def write_csv(candidates: Iterable[Candidate], fp: TextIO) -> None:
    """CSV with the JSON field order; basket in r/a text syntax, series as
    space-separated integers."""
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    for c in candidates:
        rec = candidate_record(c)
        writer.writerow(
            [
                str(c.basket),
                rec["genus"],
                rec["A3"],
                rec["Ac2_over_12"],
                rec["stable"],
                rec["h0_A"],
                rec["h0_2A"],
                rec["k3_obstructed"],
                " ".join(str(x) for x in rec["series"]),
            ]
        )


def candidate_from_csv_row(row: Sequence[str]) -> Candidate:
    """Rebuild a candidate from a CSV data row (column order as written)."""
    basket = parse_basket(row[0])
    return Candidate(
        basket=basket,
        genus=int(row[1]),
        a3=Fraction(row[2]),
        acz12=Fraction(row[3]),
        stable=row[4] == "True",
        series=TruncatedSeries.from_ints(int(x) for x in row[8].split()),
        k3_obstructed=row[7] == "True",
    )
