"""The verification suite itself."""
import numpy as np

from polemap.verify import (
    chaos_reports_for_dim,
    check_angle_reduction,
    check_classification,
    check_sphere_image_norm,
    render_table,
    run_checks,
)


def test_full_suite_passes_at_low_dimensions():
    for dim in (1, 3):
        results = run_checks(dim, seed=7, samples=400)
        assert all(r.passed for r in results), render_table(results)


def test_individual_checks_report_errors():
    r = check_sphere_image_norm(2, seed=0, samples=200)
    assert r.passed and 0.0 <= r.max_error <= r.tolerance
    r = check_angle_reduction(1, seed=0, orbits=20)
    assert r.passed


def test_reports_per_dimension():
    assert [r.system for r in chaos_reports_for_dim(1, seed=3)] == ["circle", "interval", "interval"]
    assert [r.system for r in chaos_reports_for_dim(2, seed=3)] == ["sphere", "disk"]
    assert check_classification(2, seed=3).passed


def test_suite_is_deterministic():
    a = run_checks(2, seed=9, samples=300)
    b = run_checks(2, seed=9, samples=300)
    assert [(r.name, r.max_error) for r in a] == [(r.name, r.max_error) for r in b]


def test_table_rendering():
    table = render_table(run_checks(1, seed=1, samples=100))
    assert "PASS" in table and "sphere-image-unit-norm" in table
