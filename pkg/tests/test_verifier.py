import csv
import io
import json
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, strategies as st

from tornheim_lab.dirichlet import character
from tornheim_lab.errors import DomainError, NotPrimitive, ParityViolation
from tornheim_lab.series import ValueWithError
from tornheim_lab.verifier import (CSV_COLUMNS, DEFAULT_GRIDS, REPORT_SCHEMA, GridSpec, make_report, passes,
                                   reports_to_csv, reports_to_json, run_suite, verify_char_inversion_report,
                                   verify_limit_report, verify_limit_xy, verify_prop1, verify_prop2,
                                   verify_recursion, verify_stuffle, verify_theorem1)

THIRD = Fraction(1, 3)


@pytest.mark.parametrize("args", [(1, 1, 0, THIRD, 2 * THIRD), (2, 3, 2, 0.3, 0.7), (1, 2, 1.5 + 0.5j, 0.25, 0.6)])
def test_theorem1_examples(args):
    r = verify_theorem1(*args)
    assert r.passed and r.residual < 1e-6


def test_theorem1_domain():
    with pytest.raises(DomainError):
        verify_theorem1(1, 1, -1, 0.3, 0.7)
    with pytest.raises(DomainError):
        verify_theorem1(1, 1, 1, 0.3, 0.3)


def test_prop1_equal_indices_both_pass():
    for o in ("as_printed", "swapped"):
        assert verify_prop1(2, 2, THIRD, Fraction(1, 4), orientation=o).passed


def test_prop1_product_swapped_holds_off_diagonal():
    for a, b, x, y in [(1, 2, 0.3, 0.7), (2, 3, 0.2, 0.9), (3, 1, THIRD, Fraction(1, 4))]:
        r = verify_prop1(a, b, x, y, orientation="product_swapped")
        assert r.passed and r.residual < 1e-9


def test_prop1_unknown_orientation():
    with pytest.raises(ValueError):
        verify_prop1(1, 2, 0.3, 0.7, orientation="sideways")


def test_prop2_example():
    r = verify_prop2(1, 1, character(4, 1), character(3, 1), character(3, 1))
    assert r.passed and r.residual < 1e-5


def test_prop2_preconditions():
    with pytest.raises(ParityViolation):
        verify_prop2(1, 2, "4:1", "3:1", "3:1")
    with pytest.raises(ParityViolation):
        verify_prop2(2, 1, "3:1", "3:1", "3:1")
    with pytest.raises(NotPrimitive):
        verify_prop2(1, 1, "8:2", "3:1", "3:1")


@pytest.mark.parametrize("args", [(1, 1, 0.62, 0.27), (2, 3, 0.3, 0.5), (1, 2, THIRD, THIRD)])
def test_stuffle_reports(args):
    assert verify_stuffle(*args).passed


def test_recursion_examples():
    assert verify_recursion(2, 2, 1, 0.3, 0.7).passed
    assert verify_recursion(1, 1, 2, 0.2, 0.5).passed
    with pytest.raises(DomainError):
        verify_recursion(1, 1, 0, 0, 0)


def test_limit_examples():
    mags = verify_limit_xy(1, 1, 2, 0.4, [0.1, 0.01, 0.001])
    assert mags[0] > mags[1] > mags[2]
    mags = verify_limit_xy(2, 2, 1, 0.3, [0.05, 0.005])
    assert mags[0] > mags[1]
    with pytest.raises(DomainError):
        verify_limit_xy(1, 1, 2, 0.4, [0.1, 0])
    r = verify_limit_report(1, 1, 2, 0.4, [0.001, 0.1, 0.01])
    assert r.passed and r.detail["deltas"] == [0.1, 0.01, 0.001]


def test_char_inversion_report():
    assert verify_char_inversion_report("5:1", 3).passed
    with pytest.raises(NotPrimitive):
        verify_char_inversion_report("8:2", 3)


@given(st.floats(0, 1), st.floats(0, 1e-3), st.floats(0, 1e-3))
def test_pass_rule(residual, budget, tol):
    assert passes(residual, budget, tol) == (residual <= max(tol, 10 * budget))


@given(st.complex_numbers(max_magnitude=10), st.complex_numbers(max_magnitude=10),
       st.floats(0, 1), st.floats(0, 1))
def test_report_arithmetic(l, r, el, er):
    rep = make_report("stuffle", {}, ValueWithError(l, el, 3), ValueWithError(r, er, 4), 1e-6)
    assert rep.residual == abs(l - r) >= 0
    assert rep.budget == el + er
    assert rep.terms_used == 7


def test_empty_grid():
    res = run_suite(GridSpec("theorem1"))
    assert res.summary == {"total": 0, "passed": 0, "failed": 0, "skipped": 0}
    assert res.reports == ()


def test_domain_error_point_is_skipped():
    res = run_suite({"identity": "recursion", "points": [dict(a=1, b=1, s=0, x=0, y=0),
                                                          dict(a=2, b=2, s=1, x=0.3, y=0.7)]})
    assert res.summary == {"total": 2, "passed": 1, "failed": 0, "skipped": 1}
    skipped = [r for r in res.reports if r.skipped]
    assert "DomainError" in skipped[0].error
    assert skipped[0].to_dict()["lhs"] is None


def test_grid_expansion_zips_joined_keys():
    g = GridSpec("theorem1", {"a": [1, 2], "x,y": [(0.1, 0.2), (0.3, 0.4)]}, [dict(a=9, x=0, y=0)])
    pts = g.expand()
    assert len(pts) == 5
    assert pts[1] == dict(a=1, x=0.3, y=0.4)
    with pytest.raises(ValueError):
        GridSpec("theorem1", {"x,y": [(0.1,)]}).expand()


def test_unknown_identity():
    with pytest.raises(ValueError):
        run_suite({"identity": "theorem9"})


def test_determinism_and_worker_independence():
    grid = DEFAULT_GRIDS["stuffle"]
    a = reports_to_json(run_suite(grid).reports)
    b = reports_to_json(run_suite(grid, workers=3).reports)
    assert a == b


def test_json_schema_and_csv():
    reports = list(run_suite(DEFAULT_GRIDS["recursion"]).reports)
    reports += run_suite(DEFAULT_GRIDS["limit"]).reports
    reports += run_suite({"identity": "recursion", "points": [dict(a=1, b=1, s=0, x=0, y=0)]}).reports
    for d in json.loads(reports_to_json(reports)):
        jsonschema.validate(d, REPORT_SCHEMA)
    rows = list(csv.reader(io.StringIO(reports_to_csv(reports))))
    assert rows[0] == CSV_COLUMNS
    assert len(rows) == len(reports) + 1


def test_number_format():
    d = verify_recursion(2, 2, 1, 0.3, 0.7).to_dict()
    for side in ("lhs", "rhs"):
        for key in ("re", "im"):
            assert len(repr(abs(d[side][key])).replace(".", "").lstrip("0").split("e")[0]) <= 10


def test_prop1_suite_surfaces_orientation():
    res = run_suite(DEFAULT_GRIDS["prop1"])
    assert {"orientation", "passing_sets", "coherent"} <= set(res.summary)
    assert res.summary["total"] == 2 * 27
