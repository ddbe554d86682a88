"""Concrete representations and the combinators acting on them.

Families
--------
  sl(n)        trace-free matrices; basis: H_i = E_ii - E_{i+1,i+1}, then E_ij
  gl(n)        all matrices; basis: E_ij row-major
  so(n)        skew matrices; basis: E_ij - E_ji, Cartan rotation planes first
  sl2_irrep(m) the (m+1)-dimensional symmetric power of the defining sl2 rep,
               acting on monomials x^(m-p) y^p, ordered basis (H, E, F)

Combinators build block-diagonal sums, Kronecker tensor products, duals
(B -> -B^T) and tensor powers, and check numerically (via structure
constants) that both operands represent the same abstract algebra.

Samplers return deterministic group elements per (kind, seed, rep) in the
classes generic / hyperbolic / elliptic / unipotent / cartan / trace_free,
characterized by eigenvalue location.
"""

from __future__ import annotations

import zlib

import numpy as np

from . import linalg
from .errors import IncompatibleAlgebras, NotProportional
from .representation import GroupElement, Representation

SAMPLE_KINDS = ("generic", "hyperbolic", "elliptic", "unipotent", "cartan", "trace_free")


def _unit(i: int, j: int, n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1.0
    return m


def make_sl(n: int) -> Representation:
    """Standard representation of the trace-free n x n matrices."""
    if n < 2:
        raise ValueError("sl needs n >= 2")
    basis = [_unit(i, i, n) - _unit(i + 1, i + 1, n) for i in range(n - 1)]
    basis += [_unit(i, j, n) for i in range(n) for j in range(n) if i != j]
    meta = {
        "family": "sl",
        "n": n,
        "rank": n - 1,
        "cartan_indices": list(range(n - 1)),
        "hyperbolic_unit": 1.0,
    }
    return Representation(f"sl{n}", basis, metadata=meta)


def make_gl(n: int) -> Representation:
    """Standard representation of all n x n matrices."""
    if n < 1:
        raise ValueError("gl needs n >= 1")
    pairs = [(i, j) for i in range(n) for j in range(n)]
    basis = [_unit(i, j, n) for i, j in pairs]
    meta = {
        "family": "gl",
        "n": n,
        "rank": n,
        "cartan_indices": [k for k, (i, j) in enumerate(pairs) if i == j],
        "hyperbolic_unit": 1.0,
    }
    return Representation(f"gl{n}", basis, metadata=meta)


def make_so(n: int) -> Representation:
    """Standard representation of the skew n x n matrices.

    The rotation-plane generators E_{2k,2k+1} - E_{2k+1,2k} spanning the
    Cartan subalgebra come first in the basis.
    """
    if n < 2:
        raise ValueError("so needs n >= 2")
    cartan_pairs = [(2 * k, 2 * k + 1) for k in range(n // 2)]
    rest = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in cartan_pairs]
    pairs = cartan_pairs + rest
    basis = [_unit(i, j, n) - _unit(j, i, n) for i, j in pairs]
    meta = {
        "family": "so",
        "n": n,
        "rank": n // 2,
        "cartan_indices": list(range(n // 2)),
        # rotation generators have spectrum {+-i}; the hyperbolic Cartan
        # directions are i times them
        "hyperbolic_unit": 1j,
    }
    return Representation(f"so{n}", basis, metadata=meta)


def make_sl2_irrep(m: int) -> Representation:
    """(m+1)-dimensional irreducible sl2 representation, basis (H, E, F).

    On the monomial basis x^(m-p) y^p: H has eigenvalue m - 2p, E sends
    y -> x (coefficient p), F sends x -> y (coefficient m - p).
    """
    if m < 1:
        raise ValueError("irrep label m must be >= 1")
    d = m + 1
    h = np.diag([complex(m - 2 * p) for p in range(d)])
    e = np.zeros((d, d), dtype=complex)
    f = np.zeros((d, d), dtype=complex)
    for p in range(1, d):
        e[p - 1, p] = p
    for p in range(d - 1):
        f[p + 1, p] = m - p
    meta = {
        "family": "sl2_irrep",
        "m": m,
        "rank": 1,
        "cartan_indices": [0],
        "hyperbolic_unit": 1.0,
        "nilpotent_index": 1,
    }
    return Representation(f"sl2irrep{m}", basis=[h, e, f], metadata=meta)


def torus_element(rep: Representation, a: complex) -> GroupElement:
    """diag(a, 1/a) realized in an sl2-type representation."""
    family = rep.metadata.get("family")
    if family == "sl2_irrep":
        m = rep.metadata["m"]
        return GroupElement(np.diag([a ** (m - 2 * p) for p in range(m + 1)]), f"torus({a})")
    if family == "sl" and rep.metadata.get("n") == 2:
        return GroupElement(np.diag([a, 1.0 / a]), f"torus({a})")
    raise ValueError(f"no torus parametrization for {rep.name}")


# --- combinators --------------------------------------------------------------


def _require_same_algebra(r1: Representation, r2: Representation):
    if r1.g_dim != r2.g_dim:
        raise IncompatibleAlgebras(f"{r1.name} and {r2.name} have different algebra dimensions")
    c1 = r1.structure_constants()
    c2 = r2.structure_constants()
    scale = 1.0 + max(np.abs(c1).max(), np.abs(c2).max())
    if np.abs(c1 - c2).max() > 1e-8 * scale:
        raise IncompatibleAlgebras(
            f"structure constants of {r1.name} and {r2.name} disagree"
        )


def _combined_meta(r1: Representation, family: str) -> dict:
    meta = {"family": family, "parents": r1.metadata.get("family")}
    for key in ("rank", "cartan_indices", "hyperbolic_unit", "nilpotent_index", "m", "n"):
        if key in r1.metadata:
            meta[key] = r1.metadata[key]
    return meta


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    _require_same_algebra(r1, r2)
    n1, n2 = r1.v_dim, r2.v_dim
    basis = []
    for b1, b2 in zip(r1.basis, r2.basis):
        m = np.zeros((n1 + n2, n1 + n2), dtype=complex)
        m[:n1, :n1] = b1
        m[n1:, n1:] = b2
        basis.append(m)
    return Representation(f"({r1.name})+({r2.name})", basis, metadata=_combined_meta(r1, "sum"))


def tensor(r1: Representation, r2: Representation) -> Representation:
    _require_same_algebra(r1, r2)
    i1 = np.eye(r1.v_dim, dtype=complex)
    i2 = np.eye(r2.v_dim, dtype=complex)
    basis = [np.kron(b1, i2) + np.kron(i1, b2) for b1, b2 in zip(r1.basis, r2.basis)]
    return Representation(f"({r1.name})x({r2.name})", basis, metadata=_combined_meta(r1, "tensor"))


def dual(rep: Representation) -> Representation:
    """Contragredient representation: the algebra acts by B -> -B^T."""
    basis = [-b.T for b in rep.basis]
    return Representation(f"dual({rep.name})", basis, metadata=_combined_meta(rep, "dual"))


def tensor_power(rep: Representation, k: int) -> Representation:
    if k < 1:
        raise ValueError("tensor power needs k >= 1")
    out = rep
    for _ in range(k - 1):
        out = tensor(out, rep)
    return out


def dynkin_ratio(rep: Representation, reference: Representation) -> float:
    """Least-squares scalar j with gram(rep) = j * gram(reference).

    Only ratios are meaningful, so a reference representation is always
    required; raises NotProportional when the fit residual exceeds 1e-6
    (non-simple algebra or mismatched bases).
    """
    _require_same_algebra(rep, reference)
    gref = reference.gram
    grep = rep.gram
    j = np.vdot(gref, grep) / np.vdot(gref, gref)
    residual = np.linalg.norm(grep - j * gref) / max(np.linalg.norm(grep), 1e-300)
    if residual > 1e-6:
        raise NotProportional(f"trace forms not proportional (residual {residual:.2e})")
    if abs(j.imag) > 1e-8 * (1 + abs(j.real)):
        raise NotProportional(f"fitted ratio is not real: {j}")
    return float(j.real)


# --- element construction and sampling ----------------------------------------


def realize(rep: Representation, coords, provenance: str = "realize") -> GroupElement:
    """Group element exp(sum coords_i B_i) in the given representation."""
    return GroupElement(linalg.matrix_exp(rep.materialize(coords)), provenance)


def _rng_for(rep: Representation, kind: str, seed: int) -> np.random.Generator:
    entropy = [int(seed), zlib.crc32(kind.encode()), zlib.crc32(rep.name.encode())]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def _cgauss(rng, size, scale=1.0):
    return scale * (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2)


def _conjugate(rep: Representation, m: np.ndarray, rng) -> np.ndarray:
    q = linalg.matrix_exp(rep.materialize(_cgauss(rng, rep.g_dim, 0.3)))
    return q @ m @ np.linalg.inv(q)


def _nilpotent_direction(rep: Representation, rng) -> np.ndarray:
    """A nonzero nilpotent algebra element, per family."""
    family = rep.metadata.get("family")
    if family in ("sl", "gl"):
        n = rep.v_dim
        x = np.triu(_cgauss(rng, (n, n)), k=1)
        return x
    if family == "so":
        # rank-2 nilpotent w a^T - a w^T with w isotropic and a^T w = 0
        n = rep.v_dim
        w = np.zeros(n, dtype=complex)
        w[0], w[1] = 1.0, 1.0j
        wt = np.zeros(n, dtype=complex)
        wt[0], wt[1] = 0.5, -0.5j  # dual vector with wt . w = 1
        a = _cgauss(rng, n)
        a = a - (a @ w) * wt
        return np.outer(w, a) - np.outer(a, w)
    if "nilpotent_index" in rep.metadata:
        coords = np.zeros(rep.g_dim, dtype=complex)
        coords[rep.metadata["nilpotent_index"]] = 0.5 + _cgauss(rng, ())
        return rep.materialize(coords)
    raise ValueError(f"no unipotent sampler for family {family!r} of {rep.name}")


def _traceless_spectrum(n: int, rng) -> np.ndarray:
    """Eigenvalues with sum 0 and product 1: the free ones are sampled in an
    annulus and the last two solve the sum/product constraints."""
    if n == 2:
        return np.array([1j, -1j])
    free = np.exp(1j * rng.uniform(0, 2 * np.pi, n - 2)) * rng.uniform(0.7, 1.4, n - 2)
    s = -np.sum(free)
    p = 1.0 / np.prod(free)
    last = linalg.poly_roots(linalg.Polynomial([p, -s, 1.0]))
    return np.concatenate([free, last])


def sample_element(rep: Representation, kind: str, seed: int) -> GroupElement:
    """Deterministic group element of the requested eigenvalue class."""
    if kind not in SAMPLE_KINDS:
        raise ValueError(f"unknown sample kind {kind!r}; choose from {SAMPLE_KINDS}")
    rng = _rng_for(rep, kind, seed)
    tag = f"{rep.name}:{kind}:{seed}"
    family = rep.metadata.get("family")

    if kind == "generic":
        return GroupElement(linalg.matrix_exp(rep.materialize(_cgauss(rng, rep.g_dim, 0.4))), tag)

    if kind in ("hyperbolic", "elliptic"):
        cartan = rep.metadata.get("cartan_indices")
        if cartan is None:
            raise ValueError(f"{rep.name} has no Cartan bookkeeping for {kind} sampling")
        unit = rep.metadata.get("hyperbolic_unit", 1.0)
        if kind == "elliptic":
            # rotate real directions to unit-modulus spectrum and vice versa
            unit = unit * 1j
        coords = np.zeros(rep.g_dim, dtype=complex)
        coords[list(cartan)] = unit * rng.uniform(-0.8, 0.8, len(cartan))
        m = linalg.matrix_exp(rep.materialize(coords))
        return GroupElement(_conjugate(rep, m, rng), tag)

    if kind == "unipotent":
        m = linalg.matrix_exp(_nilpotent_direction(rep, rng))
        return GroupElement(_conjugate(rep, m, rng), tag)

    if kind == "cartan":
        cartan = rep.metadata.get("cartan_indices")
        if cartan is None:
            raise ValueError(f"{rep.name} has no Cartan bookkeeping")
        coords = np.zeros(rep.g_dim, dtype=complex)
        coords[list(cartan)] = _cgauss(rng, len(cartan), 0.6)
        return GroupElement(linalg.matrix_exp(rep.materialize(coords)), tag)

    # trace_free: group elements whose representing matrix is itself
    # trace-free, hence lies in the algebra image; only meaningful for sl
    if family != "sl":
        raise ValueError("trace_free sampling is defined for the sl family")
    n = rep.metadata["n"]
    lams = _traceless_spectrum(n, rng)
    q = np.linalg.qr(_cgauss(rng, (n, n)))[0]
    m = q @ np.diag(lams) @ q.conj().T
    m = m - (np.trace(m) / n) * np.eye(n)  # pin the trace to exactly 0
    return GroupElement(m, tag)


# --- descriptors ---------------------------------------------------------------


def from_descriptor(d: dict) -> Representation:
    """Build a representation from the JSON descriptor form."""
    family = d.get("family")
    if family == "sl":
        return make_sl(int(d["n"]))
    if family == "gl":
        return make_gl(int(d["n"]))
    if family == "so":
        return make_so(int(d["n"]))
    if family == "sl2_irrep":
        return make_sl2_irrep(int(d["m"]))
    if family == "custom":
        basis = [linalg.matrix_from_json(b) for b in d["basis"]]
        return Representation(d.get("name", "custom"), basis, metadata={"family": "custom"})
    raise ValueError(f"unknown family {family!r}")


def to_descriptor(rep: Representation) -> dict:
    family = rep.metadata.get("family", "custom")
    if family in ("sl", "gl", "so"):
        return {"family": family, "n": rep.metadata["n"]}
    if family == "sl2_irrep":
        return {"family": family, "m": rep.metadata["m"]}
    return {
        "family": "custom",
        "name": rep.name,
        "basis": [linalg.matrix_to_json(b) for b in rep.basis],
    }
