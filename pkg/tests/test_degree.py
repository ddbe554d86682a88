"""Fiber polynomials, root counting and fiber-element reconstruction."""

import numpy as np
import pytest

from cayleymap import catalog, clifford as cl, degree, linalg
from cayleymap import representation as rm
from cayleymap.errors import DegenerateInput, NotSkew


def _rng(seed):
    return np.random.default_rng(seed)


# --- sl fibers ------------------------------------------------------------------


def test_sl2_fiber_over_diag():
    report = degree.sl_fiber(2, np.diag([1.0, -1.0]))
    roots = np.sort(report.roots.real)
    assert np.allclose(roots, [-np.sqrt(2), np.sqrt(2)], atol=1e-10)
    assert report.count == 2
    for el in report.valid_elements:
        assert abs(np.linalg.det(el) - 1) < 1e-10


def test_sl2_central_fiber():
    report = degree.sl_fiber(2, np.zeros((2, 2)))
    assert report.count == 2
    assert np.allclose(np.sort(report.roots.real), [-1.0, 1.0], atol=1e-10)


def test_sl_fiber_elements_project_back():
    rng = _rng(0)
    for n in (2, 3, 4):
        rep = catalog.make_sl(n)
        x = degree.random_trace_free(n, rng)
        report = degree.sl_fiber(n, x)
        for el in report.valid_elements:
            phi = rm.cayley(rep, el).matrix()
            assert np.linalg.norm(phi - x) <= 1e-6 * (1 + np.linalg.norm(x))


def test_sl_generic_degree_counts():
    rng = _rng(1)
    for n in (2, 3, 4, 5):
        for _ in range(8):
            report = degree.sl_fiber(n, degree.random_trace_free(n, rng))
            assert report.count == n


def test_sl_fiber_requires_traceless():
    with pytest.raises(DegenerateInput):
        degree.sl_fiber(2, np.eye(2))


def test_principal_nilpotent_fiber_counts():
    for n in (2, 3, 4):
        report = degree.sl_principal_nilpotent_fiber(n)
        assert report.count == n
        # roots are the n-th roots of unity
        assert np.allclose(np.sort(np.abs(report.roots)), np.ones(n), atol=1e-10)
        rep = catalog.make_sl(n)
        x = degree.principal_nilpotent(n)
        for el in report.valid_elements:
            assert abs(np.linalg.det(el) - 1) < 1e-9
            assert np.linalg.norm(rm.cayley(rep, el).matrix() - x) <= 1e-9


def test_sl2_principal_nilpotent_elements():
    report = degree.sl_principal_nilpotent_fiber(2)
    x = degree.principal_nilpotent(2)
    got = sorted(report.valid_elements, key=lambda e: e[0, 0].real)
    assert np.allclose(got[0], x - np.eye(2), atol=1e-10)
    assert np.allclose(got[1], x + np.eye(2), atol=1e-10)


# --- minimal polynomial coefficients ----------------------------------------------


def test_minimal_poly_sl2_diag():
    p = degree.minimal_poly_coeffs("sl", 2, np.diag([1.0, -1.0]))
    assert np.allclose(p.coeffs, [-2.0, 0.0, 1.0], atol=1e-10)


def test_minimal_poly_sl3_tracefree_coefficient():
    rng = _rng(2)
    p = degree.minimal_poly_coeffs("sl", 3, degree.random_trace_free(3, rng))
    assert abs(p.coeffs[2]) < 1e-9


def test_minimal_poly_spin_shift():
    rng = _rng(3)
    x = degree.random_skew(4, rng)
    p = degree.minimal_poly_coeffs("spin", 4, x)
    assert p.coeffs[4] == pytest.approx(1.0, abs=1e-9)
    # sampling oracle: the degree-2 coefficient carries the -2^n shift
    plain = degree.minimal_poly_coeffs("sl", 4, x - np.trace(x) / 4 * np.eye(4))
    # compare by evaluating both at sample points
    for t in (0.7, -1.3, 2.1 + 0.5j):
        det_val = np.linalg.det(t * np.eye(4) + x)
        assert p(t) == pytest.approx(det_val - 2**4 * t**2, rel=1e-8)


def test_minimal_poly_rejects_nonskew_spin_target():
    with pytest.raises(NotSkew):
        degree.minimal_poly_coeffs("spin", 3, np.eye(3))


# --- spin fibers -------------------------------------------------------------------


def test_spin_degree_counts_even():
    rng = _rng(4)
    for n in (4, 6, 8):
        for _ in range(5):
            report = degree.spin_fiber(n, degree.random_skew(n, rng))
            assert report.count == n


def test_spin_degree_counts_odd():
    rng = _rng(5)
    for n in (5, 7):
        for _ in range(5):
            report = degree.spin_fiber(n, degree.random_skew(n, rng))
            assert report.count == n - 1


def test_spin_odd_single_zero_root():
    rng = _rng(6)
    for n in (5, 7):
        x = degree.random_skew(n, rng)
        poly = degree.minimal_poly_coeffs("spin", n, x)
        roots = linalg.poly_roots(poly)
        zeros = np.sum(np.abs(roots) <= 1e-8 * (1 + np.max(np.abs(roots))))
        assert zeros == 1


def test_spin_fiber_det_consistency():
    rng = _rng(7)
    for n in (4, 5, 6):
        x = degree.random_skew(n, rng)
        report = degree.spin_fiber(n, x)
        assert len(report.element_roots) == len(report.valid_elements)
        for t, rot in zip(report.element_roots, report.valid_elements):
            assert np.linalg.norm(rot.T @ rot - np.eye(n)) < 1e-6
            det_shift = np.linalg.det(np.eye(n) + rot)
            assert abs(det_shift - t * t) <= 1e-6 * (1 + abs(t) ** 2)


def test_spin_fiber_elements_reproduce_target():
    # chain check: lift each rotation to the double cover and confirm the
    # degree-2 part matches the target under the fiber normalization
    # t * Gamma(T) = X with t = 2^(n/2) pr0
    rng = _rng(8)
    for n in (4, 5):
        x = degree.random_skew(n, rng)
        report = degree.spin_fiber(n, x)
        for t, rot in zip(report.element_roots, report.valid_elements):
            matched = 0
            for g in cl.lift_rotation(rot):
                pr0 = cl.spin_scalar(g)
                if abs(2 ** (n / 2.0) * pr0 - t) > 1e-6 * (1 + abs(t)):
                    continue  # the other sign of the lift
                matched += 1
                recovered = 2 ** (n / 2.0) * pr0 * cl.tau(cl.tau_inv(cl.cayley_gamma(rot)))
                assert np.linalg.norm(recovered - x) <= 1e-6 * (1 + np.linalg.norm(x))
                # and through the projection chain: tau(pr2(g)) = -2 pr0 Gamma(T)
                via_proj = cl.tau(cl.spin_cayley(g))
                expected = -(2.0 ** (1 - n / 2.0)) * x
                assert np.linalg.norm(via_proj - expected) <= 1e-6 * (1 + np.linalg.norm(x))
            assert matched == 1


def test_fiber_report_json():
    report = degree.sl_fiber(2, np.diag([1.0, -1.0]))
    d = report.to_json()
    assert d["count"] == 2
    assert len(d["roots"]) == 2
    assert len(d["elements"]) == 2
    assert len(d["polynomial"]) == 3
