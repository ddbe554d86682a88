"""Fiber polynomials and mapping-degree evidence.

For the defining representation of the trace-free group, the fiber of the
projection map over a trace-free X consists of the shifts X + t*1 with
det(t*1 + X) = 1.  For the spin representation the fiber over a skew X is
governed by det(t*1 + X) - 2^n t^(n-2) = 0, each nonzero root t giving the
rotation (1 - X/t)(1 + X/t)^{-1}.  Counting distinct admissible roots over
generic targets exhibits the mapping degree.

Polynomials are built by evaluating the determinant at n+1 nodes on a
scaled circle and interpolating, rather than by symbolic expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .clifford import cayley_gamma
from .errors import DegenerateInput, NotSkew, SingularShift

# |root| below this counts as the zero root (excluded from spin fibers).
ZERO_ROOT_TOL = 1e-7


@dataclass
class FiberReport:
    """Roots of the fiber polynomial and the reconstructed fiber elements.

    element_roots runs parallel to valid_elements; it differs from roots
    only when a reconstruction was skipped (recorded in skipped_roots).
    """

    family: str
    n: int
    target: np.ndarray
    polynomial: linalg.Polynomial
    roots: np.ndarray
    valid_elements: list
    element_roots: list
    count: int
    skipped_roots: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "polynomial": _complex_list(self.polynomial.coeffs),
            "roots": _complex_list(self.roots),
            "count": self.count,
            "elements": [linalg.matrix_to_json(e) for e in self.valid_elements],
            "element_roots": _complex_list(np.asarray(self.element_roots)),
            "skipped_roots": _complex_list(np.asarray(self.skipped_roots)),
        }


def _complex_list(values) -> list:
    return [[float(v.real), float(v.imag)] for v in np.atleast_1d(values)]


def _char_poly(x: np.ndarray) -> linalg.Polynomial:
    """Coefficients of t -> det(t*1 + x) by node evaluation and interpolation."""
    n = x.shape[0]
    radius = 1.0 + np.linalg.norm(x)
    nodes = radius * np.exp(2j * np.pi * np.arange(n + 1) / (n + 1))
    values = np.array([linalg.determinant(t * np.eye(n) + x) for t in nodes])
    vander = np.vander(nodes, n + 1, increasing=True)
    return linalg.Polynomial(np.linalg.solve(vander, values))


def minimal_poly_coeffs(family: str, n: int, x) -> linalg.Polynomial:
    """Fiber polynomial for the given family ('sl' or 'spin').

    sl:   det(t*1 + X) - 1, with p_{n-1} = tr X required to vanish and p_n = 1
    spin: det(t*1 + X) - 2^n t^(n-2), X skew
    """
    x = linalg.as_square_matrix(x, "fiber target")
    if x.shape[0] != n:
        raise ValueError(f"target is {x.shape[0]}x{x.shape[0]}, expected n={n}")
    scale = 1.0 + np.linalg.norm(x)
    if family == "sl":
        if abs(np.trace(x)) > 1e-8 * scale:
            raise DegenerateInput(f"sl fiber target must be trace-free, tr = {np.trace(x):.2e}")
        coeffs = _char_poly(x).coeffs.copy()
        coeffs = np.concatenate([coeffs, np.zeros(max(0, n + 1 - coeffs.size), dtype=complex)])
        coeffs[0] -= 1.0
        if abs(coeffs[n] - 1.0) > 1e-8 or abs(coeffs[n - 1]) > 1e-6 * scale**n:
            raise DegenerateInput("characteristic coefficients violate the trace-free normalization")
        return linalg.Polynomial(coeffs)
    if family == "spin":
        if np.linalg.norm(x + x.T) > 1e-10 * scale:
            raise NotSkew("spin fiber target must be skew-symmetric")
        if n < 3:
            raise ValueError("spin fibers need n >= 3")
        coeffs = _char_poly(x).coeffs.copy()
        coeffs = np.concatenate([coeffs, np.zeros(max(0, n + 1 - coeffs.size), dtype=complex)])
        coeffs[n - 2] -= 2.0**n
        return linalg.Polynomial(coeffs)
    raise ValueError(f"unknown fiber family {family!r}")


def sl_fiber(n: int, x, dedup_tol: float = linalg.ROOT_DEDUP_TOL) -> FiberReport:
    """All shifts X + t*1 with unit determinant; count = distinct roots."""
    x = linalg.as_square_matrix(x, "fiber target")
    poly = minimal_poly_coeffs("sl", n, x)
    roots = linalg.poly_roots(poly)
    distinct, _ = linalg.dedup_roots(roots, tol=dedup_tol)
    elements = [x + t * np.eye(n) for t in distinct]
    return FiberReport(
        family="sl",
        n=n,
        target=x,
        polynomial=poly,
        roots=distinct,
        valid_elements=elements,
        element_roots=list(distinct),
        count=len(distinct),
    )


def principal_nilpotent(n: int) -> np.ndarray:
    """The single regular nilpotent Jordan block (ones on the superdiagonal)."""
    x = np.zeros((n, n), dtype=complex)
    for i in range(n - 1):
        x[i, i + 1] = 1.0
    return x


def sl_principal_nilpotent_fiber(n: int, dedup_tol: float = linalg.ROOT_DEDUP_TOL) -> FiberReport:
    """Fiber over the regular nilpotent: t^n = 1, one element per central root."""
    return sl_fiber(n, principal_nilpotent(n), dedup_tol=dedup_tol)


def spin_fiber(n: int, x, dedup_tol: float = linalg.ROOT_DEDUP_TOL) -> FiberReport:
    """Rotations T = (1 - X/t)(1 + X/t)^{-1} over the distinct nonzero roots.

    Each reconstruction is checked to be special orthogonal with
    det(1 + T) = t^2; roots where 1 + X/t is singular are skipped and
    recorded, not raised.
    """
    x = linalg.as_square_matrix(x, "fiber target")
    poly = minimal_poly_coeffs("spin", n, x)
    roots = linalg.poly_roots(poly)
    distinct, _ = linalg.dedup_roots(roots, tol=dedup_tol)
    admissible = [t for t in distinct if abs(t) > ZERO_ROOT_TOL]
    elements = []
    element_roots = []
    skipped = []
    for t in admissible:
        try:
            rot = cayley_gamma(x / t)
        except SingularShift:
            skipped.append(t)
            continue
        ortho = np.linalg.norm(rot.T @ rot - np.eye(n))
        det_shift = linalg.determinant(np.eye(n) + rot)
        if ortho > 1e-6 or abs(det_shift - t * t) > 1e-6 * (1.0 + abs(t) ** 2):
            skipped.append(t)
            continue
        elements.append(rot)
        element_roots.append(t)
    return FiberReport(
        family="spin",
        n=n,
        target=x,
        polynomial=poly,
        roots=np.asarray(admissible),
        valid_elements=elements,
        element_roots=element_roots,
        count=len(admissible),
        skipped_roots=skipped,
    )


def random_trace_free(n: int, rng: np.random.Generator) -> np.ndarray:
    m = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    return m - (np.trace(m) / n) * np.eye(n)


def random_skew(n: int, rng: np.random.Generator) -> np.ndarray:
    m = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    return 0.5 * (m - m.T)
