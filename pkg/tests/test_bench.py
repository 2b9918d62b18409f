from fractions import Fraction

import pytest

from sapsolve import ContractViolationError, run_bench
from sapsolve.bench import instance_digest
from sapsolve import GenParams, generate_instance


def strip_timing(data):
    if isinstance(data, dict):
        return {k: strip_timing(v) for k, v in data.items() if not k.endswith("_ms")}
    if isinstance(data, list):
        return [strip_timing(v) for v in data]
    return data


def test_deterministic_modulo_timing():
    a = run_bench(count=4, num_students=5, num_seminars=3, seed=7, with_oracle=True)
    b = run_bench(count=4, num_students=5, num_seminars=3, seed=7, with_oracle=True)
    assert strip_timing(a.to_json()) == strip_timing(b.to_json())


def test_rows_ordered_by_index():
    report = run_bench(count=5, num_students=4, num_seminars=2, seed=3)
    assert [row.index for row in report.rows] == list(range(5))


def test_oracle_ratios_within_bounds():
    report = run_bench(count=10, num_students=6, num_seminars=3, seed=11, with_oracle=True)
    assert report.bound_violations == ()
    for row in report.rows:
        assert row.opt is not None
        assert row.half_ratio <= 1
        assert row.full_ratio <= 1
        assert row.full_profit >= row.half_profit
    agg = report.aggregate()
    assert Fraction(*map(int, agg["min_full_ratio"].split("/"))) >= Fraction(63212055, 10**8)


def test_zero_profit_instances_report_ratio_one():
    report = run_bench(
        count=3, num_students=4, num_seminars=2, p_max=0, seed=5, with_oracle=True
    )
    for row in report.rows:
        assert row.opt == 0
        assert row.half_ratio == 1
        assert row.full_ratio == 1


def test_without_oracle_omits_ratios():
    report = run_bench(count=3, num_students=10, num_seminars=3, seed=2)
    for row in report.rows:
        assert row.opt is None
        assert row.half_ratio is None
        assert row.full_ratio is None
    assert "min_full_ratio" not in report.aggregate()


def test_digest_tracks_content():
    a = generate_instance(GenParams(4, 2, seed=1))
    b = generate_instance(GenParams(4, 2, seed=2))
    assert instance_digest(a) == instance_digest(a)
    assert instance_digest(a) != instance_digest(b)


def test_count_must_be_positive():
    with pytest.raises(ContractViolationError):
        run_bench(count=0, num_students=4, num_seminars=2)
