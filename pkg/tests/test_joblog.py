from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from drperf.errors import ParseError
from drperf.joblog import (
    parse_job_log,
    parse_restore_samples,
    render_job_log,
    render_restore_samples,
)
from drperf.metrics import JobSample, RestoreSample, Tier


class TestParseJobLog:
    def test_seconds_header(self):
        samples = parse_job_log("day,data_mb,duration_s\n1,8362,3270\n")
        assert samples == (JobSample(1, 8362.0, 3270.0),)

    def test_minutes_header_converts(self):
        samples = parse_job_log("day,data_mb,duration_min\n1,26956,8.75\n")
        assert samples == (JobSample(1, 26956.0, 525.0),)

    def test_crlf_and_blank_lines(self):
        samples = parse_job_log("day,data_mb,duration_s\r\n1,10,20\r\n\r\n2,11,21\r\n")
        assert [s.day for s in samples] == [1, 2]

    def test_whitespace_tolerated(self):
        samples = parse_job_log("day, data_mb, duration_s\n 1 , 10 , 20 \n")
        assert samples[0].data_mb == 10.0

    def test_empty_body(self):
        with pytest.raises(ParseError, match="no samples"):
            parse_job_log("day,data_mb,duration_s\n")

    def test_missing_header(self):
        with pytest.raises(ParseError, match="header"):
            parse_job_log("")
        with pytest.raises(ParseError, match="expected header"):
            parse_job_log("day,mb,secs\n1,2,3\n")

    def test_errors_carry_line_numbers(self):
        with pytest.raises(ParseError, match="line 3") as excinfo:
            parse_job_log("day,data_mb,duration_s\n1,10,20\n2,oops,30\n")
        assert excinfo.value.line == 3

    def test_duplicate_day(self):
        with pytest.raises(ParseError, match="repeats or precedes"):
            parse_job_log("day,data_mb,duration_s\n1,10,20\n1,11,21\n")

    def test_decreasing_day(self):
        with pytest.raises(ParseError, match="repeats or precedes"):
            parse_job_log("day,data_mb,duration_s\n2,10,20\n1,11,21\n")

    def test_non_positive_duration(self):
        with pytest.raises(ParseError, match="duration_s"):
            parse_job_log("day,data_mb,duration_s\n1,10,0\n")

    def test_fractional_day_rejected(self):
        with pytest.raises(ParseError, match="integer"):
            parse_job_log("day,data_mb,duration_s\n1.5,10,20\n")

    def test_wrong_column_count(self):
        with pytest.raises(ParseError, match="columns"):
            parse_job_log("day,data_mb,duration_s\n1,10\n")


finite_mb = st.floats(0.0, 1e9, allow_nan=False, allow_infinity=False)
finite_duration = st.floats(0.001, 1e9, allow_nan=False, allow_infinity=False)


class TestRoundTrip:
    @given(
        st.lists(st.tuples(finite_mb, finite_duration), min_size=1, max_size=25)
    )
    def test_job_log_round_trip(self, rows):
        samples = tuple(
            JobSample(day=i + 1, data_mb=mb, duration_s=sec)
            for i, (mb, sec) in enumerate(rows)
        )
        assert parse_job_log(render_job_log(samples)) == samples

    @given(
        st.lists(
            st.tuples(st.sampled_from(list(Tier)), finite_duration, finite_duration),
            min_size=1,
            max_size=6,
        )
    )
    def test_restore_round_trip(self, rows):
        samples = tuple(
            RestoreSample(source_tier=tier, data_mb=mb, duration_s=sec)
            for tier, mb, sec in rows
        )
        assert parse_restore_samples(render_restore_samples(samples)) == samples

    def test_reference_files_round_trip(self, hybrid_log, hybrid_restores):
        assert parse_job_log(render_job_log(hybrid_log)) == hybrid_log
        assert parse_restore_samples(render_restore_samples(hybrid_restores)) == hybrid_restores


class TestParseRestoreSamples:
    def test_basic(self):
        samples = parse_restore_samples("tier,data_mb,duration_s\nVault,7690,1380\n")
        assert samples == (RestoreSample(Tier.VAULT, 7690.0, 1380.0),)

    def test_unknown_tier(self):
        with pytest.raises(ParseError, match="unknown tier") as excinfo:
            parse_restore_samples("tier,data_mb,duration_s\nTape,1,1\n")
        assert excinfo.value.line == 2

    def test_empty_body(self):
        with pytest.raises(ParseError, match="no samples"):
            parse_restore_samples("tier,data_mb,duration_s\n")

    def test_bad_number(self):
        with pytest.raises(ParseError, match="non-numeric"):
            parse_restore_samples("tier,data_mb,duration_s\nLocal,x,1\n")
