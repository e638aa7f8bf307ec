import jsonschema
import pytest

from kgroth.families import (
    CheckResult,
    affine_grothendieck,
    column_pieri,
    dual_grothendieck,
    dual_k_schur,
    expand_in_dual_family,
    expand_in_family,
    expand_in_kkschur,
    grothendieck,
    k_schur,
    kkschur,
    omega_big,
    omega_classical,
    row_pieri,
    scan_kss_cancellation,
    verify_bijection,
    verify_duality,
    verify_k_newton,
    verify_newton,
    verify_omega,
    verify_pieri,
)
from kgroth.partitions import (
    conjugate,
    degree,
    k_bounded_partitions,
    k_bounded_up_to,
    k_conjugate,
    main_hook,
    partitions_of,
)
from kgroth.schemas import SCAN_REPORT_SCHEMA
from kgroth.symfunc import SymFunc, binomial, convert, e, h, hall_inner, s

from known_values import COL_PIERI_321_R2_K3, ROW_PIERI_321_R2_K3


def test_dual_grothendieck_rows_are_complete_generators():
    for r in range(6):
        lam = (r,) if r else ()
        assert dual_grothendieck(lam) == h(lam)


def test_dual_grothendieck_columns():
    """Columns expand through binomials into elementary generators."""
    for ell in range(6):
        expected = SymFunc("e", {})
        for j in range(1, ell + 1):
            expected = expected + binomial(ell - 1, j - 1) * e((j,))
        if ell == 0:
            expected = e(())
        assert dual_grothendieck((1,) * ell) == convert(expected, "h")


def test_dual_grothendieck_top_term_is_schur():
    for d in range(1, 6):
        for lam in partitions_of(d):
            g = dual_grothendieck(lam)
            assert g.homogeneous(d) == convert(s(lam), "h")


def test_grothendieck_truncations():
    assert grothendieck((1,), 2) == SymFunc("m", {(1,): 1, (1, 1): -1}, 2)
    assert grothendieck((1,), 3).coeff((1, 1, 1)) == 1
    assert grothendieck((), 2) == SymFunc("m", {(): 1}, 2)
    with pytest.raises(ValueError):
        grothendieck((2, 1), 2)


def test_grothendieck_is_dual_to_its_inverse_system():
    for d in range(4):
        for lam in partitions_of(d):
            for mu in partitions_of(d + 1):
                want = 1 if lam == mu else 0
                assert hall_inner(dual_grothendieck(lam), grothendieck(mu, 4)) == want
            assert hall_inner(dual_grothendieck(lam), grothendieck(lam, 4)) == 1


def test_kkschur_row_cases():
    for k in (2, 3):
        for r in range(1, k + 1):
            assert kkschur((r,), k) == h((r,))
    assert kkschur((), 3) == h(())


def test_kkschur_reduces_to_dual_grothendieck():
    for k in (2, 3):
        for lam in k_bounded_up_to(k, k):
            assert kkschur(lam, k) == dual_grothendieck(lam)


def test_kkschur_leading_structure():
    for k in (2, 3):
        for lam in k_bounded_up_to(5, k):
            g = kkschur(lam, k)
            assert g.coeff(lam) == 1
            top = g.homogeneous(degree(lam))
            assert top == k_schur(lam, k)
            from kgroth.partitions import dominates

            for mu in top.coeffs:
                assert dominates(mu, lam)


def test_kkschur_regression_value():
    # fixed by inverting the weight system up to degree 6
    g = kkschur((3, 2, 1), 3)
    assert g == h((3, 2, 1)) - h((3, 3)) + h((3, 1, 1)) + h((3, 1))


def test_k_schur_reduces_to_schur_for_small_hooks():
    for k in (2, 3, 4):
        for lam in k_bounded_up_to(6, k):
            if main_hook(lam) <= k:
                assert k_schur(lam, k) == convert(s(lam), "h")


def test_dual_k_schur_unitriangular():
    for k in (2, 3):
        for lam in k_bounded_up_to(5, k):
            f = dual_k_schur(lam, k)
            assert f.coeff(lam) == 1
            from kgroth.partitions import dominates

            for mu in f.coeffs:
                assert dominates(lam, mu)


def test_affine_grothendieck_structure():
    assert affine_grothendieck((), 2, 3) == SymFunc("m", {(): 1}, 3, 2)
    big = affine_grothendieck((2, 1, 1), 2, 5)
    assert big.coeff((2, 1, 1, 1)) == -4
    assert big.homogeneous(4) == dual_k_schur((2, 1, 1), 2)
    g3 = affine_grothendieck((3, 3, 2, 1), 3, 9)
    assert abs(g3.coeff((3, 2, 1, 1, 1, 1))) == 3


def test_row_pieri_worked_example():
    assert row_pieri((3, 2, 1), 2, 3).terms == ROW_PIERI_321_R2_K3


def test_column_pieri_worked_example():
    assert column_pieri((3, 2, 1), 2, 3).terms == COL_PIERI_321_R2_K3


def test_pieri_edges():
    assert row_pieri((), 2, 3).terms == {(2,): 1}
    assert column_pieri((), 2, 3).terms == {(1, 1): 1}
    for lam in k_bounded_up_to(3, 2):
        assert row_pieri(lam, 1, 2).terms == column_pieri(lam, 1, 2).terms
    with pytest.raises(ValueError):
        row_pieri((1,), 3, 2)


def test_pieri_matches_products_small():
    for lam in k_bounded_up_to(4, 2):
        g = kkschur(lam, 2)
        for r in (1, 2):
            assert row_pieri(lam, r, 2).as_symfunc() == h((r,)) * g
            assert column_pieri(lam, r, 2).as_symfunc() == kkschur((1,) * r, 2) * g


def test_omega_classical():
    assert omega_classical(h((2, 1))) == e((2, 1))
    assert omega_classical(e((2,))) == h((2,))
    for d in range(6):
        for lam in partitions_of(d):
            image = convert(omega_classical(s(lam)), "h")
            assert image == convert(s(conjugate(lam)), "h")


def test_omega_big_basics():
    assert omega_big(h(())) == h(())
    assert omega_big(h((1,))) == h((1,))
    # the image of a single generator matches the column expansion
    for ell in range(1, 6):
        assert omega_big(h((ell,))) == dual_grothendieck((1,) * ell)
    with pytest.raises(ValueError):
        omega_big(h((2,), deg_max=3))


def test_omega_big_involution_small():
    for lam in k_bounded_up_to(5, 2):
        assert omega_big(omega_big(h(lam))) == h(lam)


def test_omega_big_permutes_the_family():
    for k in (2, 3):
        for lam in k_bounded_up_to(4, k):
            assert omega_big(kkschur(lam, k)) == kkschur(k_conjugate(lam, k), k)


def test_newton_identities():
    for ell in range(7):
        assert verify_newton(ell)
        assert verify_k_newton(ell)


def test_expand_in_kkschur_roundtrip():
    k = 3
    f = h((2,)) * kkschur((3, 2, 1), k)
    coeffs = expand_in_kkschur(f, k)
    assert coeffs == ROW_PIERI_321_R2_K3
    assert expand_in_kkschur(kkschur((2, 1), k), k) == {(2, 1): 1}


def test_expand_in_family_rejects_outsiders():
    with pytest.raises(ValueError):
        expand_in_family(
            h((3,)), lambda mu: kkschur(mu, 2), lambda d: k_bounded_partitions(d, 2)
        )


def test_expand_in_dual_family_roundtrip():
    k = 2
    f = affine_grothendieck((2, 1), k, 5)
    coeffs = expand_in_dual_family(
        f, lambda mu: affine_grothendieck(mu, k, 5), lambda d: k_bounded_partitions(d, k), 5
    )
    assert coeffs == {(2, 1): 1}


def test_duality_small():
    res = verify_duality(2, 4)
    assert res.ok and res.instances == 9 * 9


def test_duality_at_level_four():
    assert verify_duality(4, 4).ok


def test_omega_classical_rejects_quotient():
    with pytest.raises(ValueError):
        omega_classical(dual_k_schur((1,), 2))


def test_quotient_lift_is_rejected():
    with pytest.raises(ValueError):
        convert(dual_k_schur((2, 1), 2), "h")


def test_verify_suites_smoke():
    assert verify_omega(2, 3).ok
    assert verify_pieri(2, 3).ok
    assert verify_bijection(2, 3).ok


def test_check_result_records():
    res = CheckResult("demo", {})
    res.record(True, "fine")
    res.record(False, "broken")
    assert not res.ok and res.instances == 2 and res.failures == ["broken"]


def test_scan_reports_are_schema_valid():
    from kgroth.families import SCANS

    for name, fn in SCANS.items():
        report = fn(2, 3)
        jsonschema.validate(report, SCAN_REPORT_SCHEMA)
        assert report["conjecture"] == name


def test_kss_scan_is_exact_at_tiny_degree():
    report = scan_kss_cancellation(2, 2)
    assert all(entry["exact"] for entry in report["entries"])
