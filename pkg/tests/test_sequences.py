import pytest
import sympy

from mupermanent.sequences import (
    a001792_closed_form,
    a001792_det_3diag,
    a001792_det_toeplitz,
    a001792_recurrence,
    cross_validate,
    format_csv,
    format_table,
)

PATH_COUNTS = [1, 3, 8, 20, 48, 112, 256, 576, 1280, 2816]


def test_closed_form_examples():
    assert [a001792_closed_form(k) for k in range(10)] == PATH_COUNTS
    with pytest.raises(ValueError):
        a001792_closed_form(-1)


def test_recurrence_examples():
    assert a001792_recurrence(0) == 1
    assert a001792_recurrence(1) == 3
    assert a001792_recurrence(4) == 48
    assert a001792_recurrence(12) == 14 * 2**11 == 28672


def test_generating_function():
    # independent route: series coefficients of (1 - x) / (1 - 2x)^2
    x = sympy.symbols("x")
    series = sympy.series((1 - x) / (1 - 2 * x) ** 2, x, 0, 25).removeO()
    coeffs = [int(series.coeff(x, k)) for k in range(25)]
    assert coeffs == [a001792_closed_form(k) for k in range(25)]


def test_determinant_examples():
    assert a001792_det_3diag(1) == 3
    assert a001792_det_3diag(2) == 8
    assert a001792_det_3diag(5) == 112
    assert a001792_det_3diag(0) == 1
    assert a001792_det_toeplitz(1) == 1
    assert a001792_det_toeplitz(2) == 3
    assert a001792_det_toeplitz(3) == 8


def test_toeplitz_offset_fixed_by_first_terms():
    for k in range(1, 6):
        M = sympy.Matrix(k, k, lambda p, q: abs(p - q) + 1)
        assert a001792_det_toeplitz(k) == abs(M.det()) == a001792_closed_form(k - 1)
    for k in range(1, 6):
        M = sympy.Matrix(k, k, lambda p, q: 3 if p == q else 1)
        assert a001792_det_3diag(k) == M.det() == a001792_closed_form(k)


def test_pairwise_agreement_up_to_twenty():
    for k in range(21):
        values = {
            a001792_closed_form(k),
            a001792_recurrence(k),
            a001792_det_3diag(k),
            a001792_det_toeplitz(k + 1),
        }
        assert len(values) == 1


def test_cross_validate_path_counts():
    rows = cross_validate(9)
    assert all(r.agree for r in rows)
    assert [r.enumeration for r in rows] == PATH_COUNTS


def test_cross_validate_single_row():
    (row,) = cross_validate(0)
    assert row.values == [1, 1, 1, 1, 1]


def test_cross_validate_beyond_enumeration():
    rows = cross_validate(12)
    assert all(r.agree for r in rows)
    assert [r.enumeration for r in rows[10:]] == [None, None, None]


def test_report_formats():
    rows = cross_validate(2)
    csv_text = format_csv(rows)
    assert csv_text.splitlines()[0] == "k,closed,recurrence,det3,toeplitz,enumeration"
    assert csv_text.splitlines()[3] == "2,8,8,8,8,8"
    table = format_table(rows)
    assert table.splitlines()[0].split() == ["k", "closed", "recurrence", "det3", "toeplitz", "enumeration", "agree"]
    assert format_csv(cross_validate(11)).splitlines()[-1] == "11,13312,13312,13312,13312,"
