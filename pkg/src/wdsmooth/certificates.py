"""Singularity certificates for components of the pair variety.

A component attached to a nonzero non-distinguished nilpotent orbit is
certified singular by exhibiting, at a carefully chosen point (phi0, 0),
more independent tangent directions than the component's dimension.
Every certified direction is the derivative of an explicit curve inside
the component, so the count is a true lower bound on the local tangent
space, not just on the tangent space of the ambient pair variety.

The curves come in four families:

* the conjugation orbit of (phi0, 0);
* central torus translations of phi0, for the Levi of the orbit and for
  its reflection through a marked simple root fixing phi0;
* a unipotent translation along a root vector commuting with the
  nilpotent representative;
* straight lines in the q-eigenspace of Ad(phi0) that degenerate from
  the orbit stratum.

The resulting count satisfies an exact bookkeeping identity

    lower = dim g + eps1 + eps2 + eps3 - eps0

whose correction terms measure how much each family exceeds its naive
size. lower > dim(component) certifies a singular point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from . import kernels
from .arith import multiplicative_order
from .orbits import OrbitLabel
from .variety import GroupSpec, SGPoint, jordan_partition, tangent_dim

__all__ = [
    "CertificateError",
    "BasePoint",
    "EpsilonCertificate",
    "build_phi0",
    "epsilon_certificate",
]


class CertificateError(ValueError):
    """Raised when no certificate base point exists for the input."""


@dataclass(frozen=True)
class BasePoint:
    """Base point data: phi0, the orbit representative e, the grading
    element, the Levi basis, and the marked-reflection matrix."""

    spec: GroupSpec
    orbit: OrbitLabel
    p: int
    q: int
    phi0: NDArray[np.int64]
    e_mat: NDArray[np.int64]
    marked: int | None
    grading: NDArray[np.int64]
    levi_basis: NDArray[np.int64]
    reflection: NDArray[np.int64] | None


def _coxeter_number(spec: GroupSpec) -> int:
    return spec.n if spec.kind == "GL" else 4


def _gl_jordan(parts: tuple[int, ...]) -> NDArray[np.int64]:
    n = sum(parts)
    out = np.zeros((n, n), dtype=np.int64)
    pos = 0
    for part in parts:
        for i in range(part - 1):
            out[pos + i, pos + i + 1] = 1
        pos += part
    return out


def _gl_grading(parts: tuple[int, ...]) -> NDArray[np.int64]:
    diag = []
    for part in parts:
        diag.extend(range(part - 1, -part, -2))
    return np.diag(np.array(diag, dtype=np.int64))


def _gl_levi_basis(parts: tuple[int, ...]) -> NDArray[np.int64]:
    n = sum(parts)
    mats = []
    pos = 0
    for part in parts:
        for i in range(pos, pos + part):
            for j in range(pos, pos + part):
                m = np.zeros((n, n), dtype=np.int64)
                m[i, j] = 1
                mats.append(m)
        pos += part
    return np.stack(mats)


def _transposition(n: int, i: int, j: int) -> NDArray[np.int64]:
    w = np.eye(n, dtype=np.int64)
    w[[i, j]] = w[[j, i]]
    return w


#: reflection through the long simple root of the similitude group,
#: chosen inside the symplectic part so conjugation preserves the form
_GSP4_REFLECTION = np.array(
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, -1, 0, 0],
        [0, 0, 0, 1],
    ],
    dtype=np.int64,
)

#: grading cocharacter direction for the (2, 2) orbit
_GSP4_GRADING = np.diag(np.array([1, -1, 1, -1], dtype=np.int64))

#: indices into the gsp4 basis spanning the short-root Levi
_GSP4_LEVI_INDICES = (0, 1, 2, 3, 7)


def build_phi0(spec: GroupSpec, orbit: OrbitLabel, q: int, p: int,
               marked: int | None = None) -> BasePoint:
    """Construct the certificate base point for an orbit.

    phi0 is diagonal with consecutive eigenvalue ratios q inside Jordan
    blocks and across unmarked block boundaries, and ratio 1 at the
    marked boundary. Requires the order of q mod p to exceed the
    Coxeter number, so distinct powers of q stay distinct.
    """
    if orbit.parts is None:
        raise CertificateError("certificates need a partition orbit label")
    q = q % p
    if q == 0:
        raise CertificateError("q must be a unit mod p")
    h = _coxeter_number(spec)
    if multiplicative_order(q, p) <= h:
        raise CertificateError(
            "order of q mod p must exceed %d to separate eigenvalue ratios" % h
        )
    parts = tuple(sorted(orbit.parts, reverse=True))
    if spec.kind == "GSp4":
        return _build_gsp4(spec, parts, q, p)
    if sum(parts) != spec.n:
        raise CertificateError("partition does not sum to the matrix size")
    n = spec.n
    boundaries = set(np.cumsum(parts[:-1]).tolist())
    if len(parts) == 1:
        if marked is not None:
            raise CertificateError("a single-block orbit has no boundary to mark")
        exps = list(range(n - 1, -1, -1))
        phi0 = np.diag(np.array([pow(q, a, p) for a in exps], dtype=np.int64))
        return BasePoint(
            spec=spec, orbit=OrbitLabel.partition(parts), p=p, q=q,
            phi0=phi0, e_mat=_gl_jordan(parts), marked=None,
            grading=_gl_grading(parts), levi_basis=_gl_levi_basis(parts),
            reflection=None,
        )
    if marked is None:
        marked = parts[0]
    if marked not in boundaries:
        raise CertificateError(
            "marked position %d is not a block boundary %s" % (marked, sorted(boundaries))
        )
    exps = [0] * n
    for i in range(n - 2, -1, -1):
        step = 0 if (i + 1) == marked else 1
        exps[i] = exps[i + 1] + step
    phi0 = np.diag(np.array([pow(q, a, p) for a in exps], dtype=np.int64))
    return BasePoint(
        spec=spec, orbit=OrbitLabel.partition(parts), p=p, q=q,
        phi0=phi0, e_mat=_gl_jordan(parts), marked=marked,
        grading=_gl_grading(parts), levi_basis=_gl_levi_basis(parts),
        reflection=_transposition(n, marked - 1, marked),
    )


def _build_gsp4(spec: GroupSpec, parts: tuple[int, ...], q: int, p: int) -> BasePoint:
    qinv = pow(q, -1, p)
    if parts == (4,):
        q2, q3 = pow(q, 2, p), pow(q, 3, p)
        phi0 = np.diag(np.array([q3, q2, q, 1], dtype=np.int64))
        e = (spec.lie_basis[3] + spec.lie_basis[4]) % p
        grading = np.diag(np.array([3, 1, -1, -3], dtype=np.int64))
        return BasePoint(
            spec=spec, orbit=OrbitLabel.partition(parts), p=p, q=q,
            phi0=phi0, e_mat=e, marked=None, grading=grading,
            levi_basis=spec.lie_basis.copy(), reflection=None,
        )
    if parts == (2, 2):
        phi0 = np.diag(np.array([q, 1, 1, qinv], dtype=np.int64)) % p
        e = spec.lie_basis[3] % p
        levi = np.stack([spec.lie_basis[k] for k in _GSP4_LEVI_INDICES])
        return BasePoint(
            spec=spec, orbit=OrbitLabel.partition(parts), p=p, q=q,
            phi0=phi0, e_mat=e, marked=2, grading=_GSP4_GRADING,
            levi_basis=levi, reflection=_GSP4_REFLECTION.copy(),
        )
    raise CertificateError(
        "no base point construction for GSp4 orbit %r" % (parts,)
    )


@dataclass(frozen=True)
class EpsilonCertificate:
    """Verified tangent-direction count at a base point (phi0, 0).

    phi_span_dim counts independent group-side directions (orbit,
    doubled central torus, unipotent translation), n_span_dim counts
    nilpotent-side directions; lower_bound is their sum. The eps
    corrections satisfy lower = dim g + eps1 + eps2 + eps3 - eps0.
    certifies_singular means every direction was verified to come from
    a curve inside the component and the count exceeds dim(component).
    """

    group: str
    orbit: OrbitLabel
    p: int
    q: int
    marked: int
    phi0: NDArray[np.int64]
    stab_dim: int
    levi_zero_dim: int
    levi_two_dim: int
    center_dim: int
    orbit_dim: int
    torus_span_dim: int
    n_span_dim: int
    eps0: int
    eps1: int
    eps2: int
    eps3: int
    phi_span_dim: int
    lower_bound: int
    component_dim: int
    ambient_tangent_dim: int
    verified_tangency: bool
    failed_checks: tuple[str, ...]

    @property
    def certifies_singular(self) -> bool:
        return self.verified_tangency and self.lower_bound > self.component_dim

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "orbit": str(self.orbit),
            "p": self.p,
            "q": self.q,
            "marked": self.marked,
            "phi0_diagonal": [int(x) for x in np.diag(self.phi0)],
            "stab_dim": self.stab_dim,
            "levi_zero_dim": self.levi_zero_dim,
            "levi_two_dim": self.levi_two_dim,
            "center_dim": self.center_dim,
            "orbit_dim": self.orbit_dim,
            "torus_span_dim": self.torus_span_dim,
            "n_span_dim": self.n_span_dim,
            "eps": [self.eps0, self.eps1, self.eps2, self.eps3],
            "phi_span_dim": self.phi_span_dim,
            "lower_bound": self.lower_bound,
            "component_dim": self.component_dim,
            "ambient_tangent_dim": self.ambient_tangent_dim,
            "verified_tangency": self.verified_tangency,
            "certifies_singular": self.certifies_singular,
            "failed_checks": list(self.failed_checks),
        }


def _ad(phi: NDArray[np.int64], m: NDArray[np.int64], p: int) -> NDArray[np.int64]:
    return phi @ m @ kernels.inv_mod(phi, p) % p


def _span_dim(mats: list[NDArray[np.int64]], p: int) -> int:
    if not mats:
        return 0
    return kernels.rank_mod(np.stack([m.reshape(-1) % p for m in mats]), p)


def _graded_piece(levi_basis: NDArray[np.int64], grading: NDArray[np.int64],
                  weight: int, p: int) -> list[NDArray[np.int64]]:
    """Basis of the weight space of ad(grading) inside the Levi span."""
    cols = []
    for b in levi_basis:
        br = (grading @ b - b @ grading - weight * b) % p
        cols.append(br.reshape(-1))
    coeffs = kernels.nullspace_mod(np.stack(cols, axis=1), p)
    return [
        np.tensordot(c, levi_basis, axes=1) % p for c in coeffs
    ]


def _levi_center(levi_basis: NDArray[np.int64], p: int) -> list[NDArray[np.int64]]:
    cols = []
    for b in levi_basis:
        rows = []
        for other in levi_basis:
            br = (b @ other - other @ b) % p
            rows.append(br.reshape(-1))
        cols.append(np.concatenate(rows))
    coeffs = kernels.nullspace_mod(np.stack(cols, axis=1), p)
    return [np.tensordot(c, levi_basis, axes=1) % p for c in coeffs]


def epsilon_certificate(spec: GroupSpec, orbit: OrbitLabel, q: int, p: int,
                        marked: int | None = None) -> EpsilonCertificate:
    """Build and verify the singularity certificate for a nonzero
    non-distinguished orbit, at the base point (phi0, 0)."""
    base = build_phi0(spec, orbit, q, p, marked=marked)
    if base.marked is None or base.reflection is None:
        raise CertificateError(
            "orbit %s is distinguished here; the certificate targets "
            "non-distinguished orbits" % orbit
        )
    q = base.q
    phi0 = base.phi0
    e = base.e_mat
    w = base.reflection
    failures: list[str] = []

    def check(name: str, ok: bool) -> None:
        if not ok:
            failures.append(name)

    winv = kernels.inv_mod(w, p)
    e_alt = w @ e @ winv % p

    # -- structural conditions backing the curve arguments --
    check("phi0-in-group", spec.is_group_element(phi0, p))
    check("reflection-in-group", spec.is_group_element(w, p))
    check("base-stratum", np.array_equal(_ad(phi0, e, p), q * e % p))
    check("orbit-type", jordan_partition(e, p) == base.orbit.parts)
    check("reflection-fixes-phi0", np.array_equal(w @ phi0 @ winv % p, phi0))
    check("grading-acts-by-two",
          np.array_equal((base.grading @ e - e @ base.grading) % p, 2 * e % p))

    # stabilizer of phi0 inside the Lie algebra
    stab_cols = []
    orbit_vecs = []
    phi0_inv = kernels.inv_mod(phi0, p)
    for b in spec.lie_basis:
        img = (_ad(phi0, b % p, p) - b) % p
        stab_cols.append(img.reshape(-1))
        back = (phi0_inv @ (b % p) @ phi0 - b) % p
        if back.any():
            orbit_vecs.append(back)
    stab_dim = kernels.nullity_mod(np.stack(stab_cols, axis=1), p)
    orbit_dim = _span_dim(orbit_vecs, p)
    check("orbit-rank", orbit_dim == spec.dim_g - stab_dim)

    # Levi grading pieces and center
    levi_zero = _graded_piece(base.levi_basis, base.grading, 0, p)
    levi_two = _graded_piece(base.levi_basis, base.grading, 2, p)
    center = _levi_center(base.levi_basis, p)
    levi_zero_dim = len(levi_zero)
    levi_two_dim = len(levi_two)
    center_dim = len(center)
    # the orbit must be distinguished inside its Levi for the count
    if levi_zero_dim != levi_two_dim + center_dim:
        raise CertificateError(
            "orbit representative is not distinguished in its Levi"
        )

    # doubled torus: center and its reflection
    torus_vecs = [z % p for z in center] + [w @ z @ winv % p for z in center]
    torus_span_dim = _span_dim(torus_vecs, p)
    for z in center:
        check("center-commutes", not ((z @ e - e @ z) % p).any())
    for z in torus_vecs:
        check("torus-fixed-by-phi0", np.array_equal(_ad(phi0, z, p), z))

    # unipotent direction: lowering vector at the marked position
    if spec.kind == "GL":
        m = base.marked
        e_neg = np.zeros((spec.n, spec.n), dtype=np.int64)
        e_neg[m, m - 1] = 1
    else:
        e_neg = spec.lie_basis[8] % p
    check("lowering-commutes", not ((e_neg @ e - e @ e_neg) % p).any())
    check("lowering-weight-zero", np.array_equal(_ad(phi0, e_neg, p), e_neg))

    # nilpotent-side directions: Levi weight-2 piece and its reflection
    n_vecs = [v % p for v in levi_two] + [w @ v @ winv % p for v in levi_two]
    n_span_dim = _span_dim(n_vecs, p)
    for v in n_vecs:
        check("eigen-q", np.array_equal(_ad(phi0, v, p), q * v % p))
        check("in-lie-algebra", spec.in_lie_algebra(v, p))
        # v + s e (or its reflection) realizes the orbit for some unit s
        anchor = e if jordan_partition((v + e) % p, p) == base.orbit.parts else e_alt
        realized = any(
            jordan_partition((v + s * anchor) % p, p) == base.orbit.parts
            for s in range(1, min(p, 5))
        )
        check("degenerates-from-orbit", realized)

    phi_vecs = orbit_vecs + torus_vecs + [e_neg]
    phi_span_dim = _span_dim(phi_vecs, p)
    check(
        "phi-direct-sum",
        phi_span_dim == orbit_dim + torus_span_dim + 1,
    )

    eps0 = stab_dim - levi_zero_dim
    eps1 = torus_span_dim - center_dim
    eps2 = n_span_dim - levi_two_dim
    eps3 = 1
    lower = phi_span_dim + n_span_dim
    check(
        "bookkeeping-identity",
        lower == spec.dim_g + eps1 + eps2 + eps3 - eps0,
    )

    ambient = tangent_dim(
        SGPoint(spec=spec, phi=phi0,
                n_mat=np.zeros((spec.n, spec.n), dtype=np.int64), q=q, p=p)
    ).tangent_dim
    check("within-ambient-tangent", lower <= ambient)

    return EpsilonCertificate(
        group=spec.name,
        orbit=base.orbit,
        p=p,
        q=q,
        marked=base.marked,
        phi0=phi0,
        stab_dim=stab_dim,
        levi_zero_dim=levi_zero_dim,
        levi_two_dim=levi_two_dim,
        center_dim=center_dim,
        orbit_dim=orbit_dim,
        torus_span_dim=torus_span_dim,
        n_span_dim=n_span_dim,
        eps0=eps0,
        eps1=eps1,
        eps2=eps2,
        eps3=eps3,
        phi_span_dim=phi_span_dim,
        lower_bound=lower,
        component_dim=spec.dim_g,
        ambient_tangent_dim=ambient,
        verified_tangency=not failures,
        failed_checks=tuple(failures),
    )
