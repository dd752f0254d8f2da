"""Structure of the candidate list and its serialisation."""

import csv
import json
from fractions import Fraction
from io import StringIO

from fano2.basket import Basket, parse_basket
from fano2.classify import (
    RECORD_FIELDS,
    anticanonical_sections,
    candidate_from_csv_row,
    candidate_from_record,
    candidate_record,
    degree_extremes,
    distinct_series_count,
    enumerate_candidates,
    genus_histogram,
    k3_obstruction,
    write_csv,
    write_json,
)


class TestCandidateInvariants:
    def test_series_coefficients(self, candidates):
        for c in candidates[::17]:
            coeffs = c.series.integer_coeffs()
            assert coeffs[0] == 1
            assert coeffs[1] == c.genus + 2
            assert coeffs[2] >= 1
            assert all(x >= 0 for x in coeffs)

    def test_degree_caps(self, candidates):
        for c in candidates:
            assert 0 < c.a3 <= Fraction(48, 5) * c.acz12
            if c.stable:
                assert c.a3 <= 9 * c.acz12
            else:
                assert c.a3 > 9 * c.acz12

    def test_genus_range_emerges(self, candidates):
        assert min(c.genus for c in candidates) == -2
        assert max(c.genus for c in candidates) == 9

    def test_max_genus_attained_only_by_empty_basket(self, candidates):
        top = [c for c in candidates if c.genus == 9]
        assert len(top) == 1
        assert top[0].basket == Basket()
        assert top[0].a3 == 9

    def test_unstable_flagship(self, candidates):
        # next-largest degree after the sharp cap 9
        match = [
            c for c in candidates
            if c.basket == parse_basket("3/1") and c.genus == 8
        ]
        assert len(match) == 1
        assert match[0].a3 == Fraction(25, 3)
        assert not match[0].stable

    def test_candidates_and_series_counts_agree(self, candidates):
        # pairs (basket, genus) are counted; the series themselves do not
        # collide at this cutoff, so both readings give the same number
        assert distinct_series_count(candidates) == len(candidates)

    def test_deterministic_and_canonically_ordered(self, candidates):
        keys = [
            (tuple((s.r, s.a) for s in c.basket), c.genus) for c in candidates
        ]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_anticanonical_sections_and_obstruction_accessors(self, candidates):
        c0 = candidates[0]
        assert anticanonical_sections(c0) == int(c0.series[2])
        for c in candidates[::101]:
            assert k3_obstruction(c) == (c.basket.singular_rank >= 20)
            assert k3_obstruction(c) == c.k3_obstructed


class TestHistograms:
    def test_histogram_rows_are_consistent(self, candidates):
        rows = genus_histogram(candidates)
        assert sum(r.total for r in rows) == len(candidates)
        assert [r.genus for r in rows] == list(range(-2, 10))
        for row in rows:
            assert 0 <= row.unstable <= row.total
            assert row.min_a3 <= row.max_a3

    def test_extremes_match_histogram(self, candidates):
        rows = genus_histogram(candidates)
        assert degree_extremes(candidates) == [
            (r.genus, r.min_a3, r.max_a3) for r in rows
        ]


class TestSerialisation:
    def test_record_field_order(self, candidates):
        rec = candidate_record(candidates[0])
        assert tuple(rec.keys()) == RECORD_FIELDS

    def test_json_round_trip(self, candidates):
        for c in candidates[::97]:
            rec = json.loads(json.dumps(candidate_record(c)))
            assert candidate_from_record(rec) == c

    def test_rationals_serialised_exactly(self, candidates):
        c = next(x for x in candidates if x.a3 == Fraction(1, 165))
        rec = candidate_record(c)
        assert rec["A3"] == "1/165"
        assert rec["Ac2_over_12"] == "116/495"

    def test_json_stream_is_schema_shaped(self, candidates):
        buf = StringIO()
        write_json(candidates[:5], buf)
        data = json.loads(buf.getvalue())
        assert len(data) == 5
        for rec in data:
            assert tuple(rec.keys()) == RECORD_FIELDS
            assert isinstance(rec["series"], list)

    def test_csv_round_trip(self, candidates):
        sample = list(candidates[::211])
        buf = StringIO()
        write_csv(sample, buf)
        rows = list(csv.reader(StringIO(buf.getvalue())))
        assert rows[0] == list(RECORD_FIELDS)
        assert len(rows) == len(sample) + 1
        assert all(len(r) == len(RECORD_FIELDS) for r in rows[1:])
        rebuilt = [candidate_from_csv_row(r) for r in rows[1:]]
        assert rebuilt == sample

    def test_stable_filter(self, candidates):
        stable = enumerate_candidates(stable_only=True)
        assert list(stable) == [c for c in candidates if c.stable]
