"""Exact matrix models of the pair variety over a prime field.

Points are pairs (phi, N) with phi in the group, N nilpotent in its Lie
algebra, and Ad(phi) N = q N. Supported realizations: GL(n) for n <= 4,
and GSp4 for the similitude form Omega = antidiag(1, 1, -1, -1), i.e.
g^T Omega g = mu(g) Omega with mu a unit.

All computations are exact over F_p; tangent dimensions come from the
kernel of the defining map's differential, evaluated by deterministic
Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from . import kernels
from .orbits import OrbitLabel

__all__ = [
    "GroupSpec",
    "SGPoint",
    "TangentReport",
    "RedundancyReport",
    "BundleReport",
    "OMEGA4",
    "sg_member",
    "tangent_matrix",
    "tangent_dim",
    "enumerate_sg",
    "stratum_sample",
    "nilpotency_redundancy_check",
    "exp_nilpotent",
    "log_unipotent",
    "exp_bridge_check",
    "bundle_count_check",
    "jordan_partition",
    "conjugate_point",
]

#: similitude form for GSp4
OMEGA4 = np.array(
    [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, -1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=np.int64,
)


def _gl_basis(n: int) -> NDArray[np.int64]:
    basis = np.zeros((n * n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            basis[i * n + j, i, j] = 1
    return basis


def _gsp4_basis() -> NDArray[np.int64]:
    # Chevalley-style basis: Cartan (3) with the similitude direction,
    # then positive root vectors by height, then their transposes.
    def m(entries):
        out = np.zeros((4, 4), dtype=np.int64)
        for i, j, v in entries:
            out[i, j] = v
        return out

    basis = [
        m([(0, 0, 1), (3, 3, -1)]),             # h_beta-ish
        m([(1, 1, 1), (2, 2, -1)]),
        m([(2, 2, 1), (3, 3, 1)]),              # similitude direction
        m([(0, 1, 1), (2, 3, -1)]),             # x_beta (short)
        m([(1, 2, 1)]),                          # x_alpha (long)
        m([(0, 2, 1), (1, 3, 1)]),              # x_{beta+alpha}
        m([(0, 3, 1)]),                          # x_{2beta+alpha}
        m([(1, 0, 1), (3, 2, -1)]),             # y_beta
        m([(2, 1, 1)]),                          # y_alpha
        m([(2, 0, 1), (3, 1, 1)]),              # y_{beta+alpha}
        m([(3, 0, 1)]),                          # y_{2beta+alpha}
    ]
    return np.stack(basis)


@dataclass(frozen=True)
class GroupSpec:
    """A matrix group with its Lie algebra basis.

    kind is "GL" or "GSp4"; n is the matrix size; lie_basis is a
    (dim_g, n, n) integer array whose rows span the Lie algebra.
    """

    kind: str
    n: int
    dim_g: int
    lie_basis: NDArray[np.int64]

    @staticmethod
    def gl(n: int) -> "GroupSpec":
        if not 1 <= n <= 4:
            raise ValueError("GL(n) realizations support n <= 4")
        return GroupSpec(kind="GL", n=n, dim_g=n * n, lie_basis=_gl_basis(n))

    @staticmethod
    def gsp4() -> "GroupSpec":
        return GroupSpec(kind="GSp4", n=4, dim_g=11, lie_basis=_gsp4_basis())

    @property
    def name(self) -> str:
        return "GSp4" if self.kind == "GSp4" else "GL%d" % self.n

    def is_group_element(self, m, p: int) -> bool:
        mat = kernels.as_field(m, p)
        if mat.shape != (self.n, self.n):
            return False
        if kernels.rank_mod(mat, p) < self.n:
            return False
        if self.kind == "GL":
            return True
        mu, ok = _similitude_factor(mat, p)
        return ok and mu != 0

    def in_lie_algebra(self, x, p: int) -> bool:
        mat = kernels.as_field(x, p)
        if mat.shape != (self.n, self.n):
            return False
        if self.kind == "GL":
            return True
        # X^T Omega + Omega X must be a multiple of Omega
        omega = OMEGA4 % p
        y = (mat.T @ omega + omega @ mat) % p
        c = int(y[0, 3])
        return bool(np.array_equal(y, c * omega % p))


def _similitude_factor(mat: NDArray[np.int64], p: int) -> tuple[int, bool]:
    omega = OMEGA4 % p
    s = (mat.T @ omega @ mat) % p
    mu = int(s[0, 3])
    return mu, bool(np.array_equal(s, mu * omega % p))


def _is_nilpotent(n_mat: NDArray[np.int64], p: int) -> bool:
    power = n_mat % p
    for _ in range(n_mat.shape[0] - 1):
        power = power @ n_mat % p
    return not power.any()


@dataclass(frozen=True)
class SGPoint:
    """A point (phi, N) of the pair variety over F_p with scalar q."""

    spec: GroupSpec
    phi: NDArray[np.int64]
    n_mat: NDArray[np.int64]
    q: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", kernels.as_field(self.phi, self.p))
        object.__setattr__(self, "n_mat", kernels.as_field(self.n_mat, self.p))
        self.phi.setflags(write=False)
        self.n_mat.setflags(write=False)


def sg_member(spec: GroupSpec, phi, n_mat, q: int, p: int) -> bool:
    """Exact membership test for the pair variety.

    Checks: phi invertible (and a similitude for GSp4), N in the Lie
    algebra and nilpotent, and phi N = q N phi (equivalent to the
    adjoint condition without forming an inverse).
    """
    phi = kernels.as_field(phi, p)
    n_mat = kernels.as_field(n_mat, p)
    if not spec.is_group_element(phi, p):
        return False
    if not spec.in_lie_algebra(n_mat, p):
        return False
    if not _is_nilpotent(n_mat, p):
        return False
    return bool(np.array_equal(phi @ n_mat % p, q * (n_mat @ phi) % p))


def ad_matrix(phi, p: int) -> NDArray[np.int64]:
    """Matrix of Ad(phi) on gl_n in row-major vec coordinates."""
    phi = kernels.as_field(phi, p)
    inv = kernels.inv_mod(phi, p)
    # vec(phi X phi^{-1}) = (phi kron inv^T) vec(X)
    return np.kron(phi, inv.T) % p


def tangent_matrix(spec: GroupSpec, phi, n_mat, q: int, p: int) -> NDArray[np.int64]:
    """Differential of the defining equation at (phi, N).

    In the chart phi * exp(eps X), N + eps M with X, M running over the
    Lie algebra basis, the equation Ad(phi) N = q N differentiates to
    (X, M) -> Ad(phi)([X, N] + M) - q M. Returns the (n^2, 2 dim_g)
    matrix of that map; the tangent space is its kernel.
    """
    phi = kernels.as_field(phi, p)
    n_mat = kernels.as_field(n_mat, p)
    inv = kernels.inv_mod(phi, p)
    cols = []
    for b in spec.lie_basis:
        bracket = (b @ n_mat - n_mat @ b) % p
        cols.append(phi @ bracket @ inv % p)
    for b in spec.lie_basis:
        cols.append((phi @ (b % p) @ inv - q * b) % p)
    return np.stack([c.reshape(-1) for c in cols], axis=1) % p


@dataclass(frozen=True)
class TangentReport:
    point: SGPoint
    tangent_dim: int
    reference_dim: int
    kernel_basis_size: int


def tangent_dim(pt: SGPoint) -> TangentReport:
    """Tangent space dimension at a point, by exact elimination."""
    mat = tangent_matrix(pt.spec, pt.phi, pt.n_mat, pt.q, pt.p)
    nullity = kernels.nullity_mod(mat, pt.p)
    return TangentReport(
        point=pt,
        tangent_dim=nullity,
        reference_dim=pt.spec.dim_g,
        kernel_basis_size=nullity,
    )


def _all_invertible_2x2(p: int) -> NDArray[np.int64]:
    rng = np.arange(p, dtype=np.int64)
    a, b, c, d = np.meshgrid(rng, rng, rng, rng, indexing="ij")
    mats = np.stack(
        [a.reshape(-1), b.reshape(-1), c.reshape(-1), d.reshape(-1)], axis=1
    ).reshape(-1, 2, 2)
    dets = (mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]) % p
    return mats[dets != 0]


def _inv_2x2_batch(mats: NDArray[np.int64], p: int) -> NDArray[np.int64]:
    dets = (mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]) % p
    inv_dets = np.array([pow(int(d), -1, p) for d in dets], dtype=np.int64)
    out = np.empty_like(mats)
    out[:, 0, 0] = mats[:, 1, 1]
    out[:, 1, 1] = mats[:, 0, 0]
    out[:, 0, 1] = (-mats[:, 0, 1]) % p
    out[:, 1, 0] = (-mats[:, 1, 0]) % p
    return out * inv_dets[:, None, None] % p


def enumerate_sg(spec: GroupSpec, p: int, q: int) -> list[SGPoint]:
    """Exhaustively enumerate the pair variety for GL(2), p <= 13.

    For each invertible phi the N side is the kernel of Ad(phi) - q
    intersected with the nilpotent cone, which is enumerated exactly.
    Points come out in lexicographic phi order, then lexicographic N.
    """
    if spec.kind != "GL" or spec.n != 2:
        raise ValueError("full enumeration is only supported for GL(2)")
    if p > 13:
        raise ValueError("full enumeration is capped at p = 13")
    q = q % p
    if q == 0:
        raise ValueError("q must be a unit mod p")
    phis = _all_invertible_2x2(p)
    invs = _inv_2x2_batch(phis, p)
    # Ad(phi) - q on gl_2 in vec coordinates, batched
    ad = np.einsum("bik,blj->bijkl", phis, invs).reshape(-1, 4, 4) % p
    ad = (ad - q * np.eye(4, dtype=np.int64)) % p
    nullities = kernels.batch_nullity_mod(ad, p)
    points: list[SGPoint] = []
    for idx in range(phis.shape[0]):
        phi = phis[idx]
        points.append(SGPoint(spec=spec, phi=phi, n_mat=np.zeros((2, 2), dtype=np.int64), q=q, p=p))
        d = int(nullities[idx])
        if d == 0:
            continue
        basis = kernels.nullspace_mod(ad[idx], p)
        seen = set()
        for coeffs in _nonzero_tuples(d, p):
            vec = np.zeros(4, dtype=np.int64)
            for c, row in zip(coeffs, basis):
                vec = (vec + c * row) % p
            key = tuple(int(x) for x in vec)
            if key in seen or not any(key):
                continue
            seen.add(key)
            n_mat = vec.reshape(2, 2)
            if _is_nilpotent(n_mat, p):
                points.append(SGPoint(spec=spec, phi=phi, n_mat=n_mat, q=q, p=p))
    return points


def _nonzero_tuples(d: int, p: int):
    idx = np.zeros(d, dtype=np.int64)
    total = p**d
    for k in range(1, total):
        carry = k
        for i in range(d):
            idx[i] = carry % p
            carry //= p
        yield tuple(int(x) for x in idx)


def _jordan_nilpotent(parts: tuple[int, ...]) -> NDArray[np.int64]:
    n = sum(parts)
    out = np.zeros((n, n), dtype=np.int64)
    pos = 0
    for part in parts:
        for i in range(part - 1):
            out[pos + i, pos + i + 1] = 1
        pos += part
    return out


def _gsp4_rep(spec: GroupSpec, parts: tuple[int, ...], p: int) -> NDArray[np.int64]:
    x_beta = spec.lie_basis[3]
    x_alpha = spec.lie_basis[4]
    if parts == (4,):
        return (x_beta + x_alpha) % p
    if parts == (2, 2):
        return x_beta % p
    if parts == (2, 1, 1):
        return x_alpha % p
    if parts == (1, 1, 1, 1):
        return np.zeros((4, 4), dtype=np.int64)
    raise ValueError("unsupported GSp4 orbit %r" % (parts,))


def _random_gl(rng: np.random.Generator, n: int, p: int) -> NDArray[np.int64]:
    while True:
        g = rng.integers(0, p, size=(n, n)).astype(np.int64)
        if kernels.rank_mod(g, p) == n:
            return g


def _random_gsp4(rng: np.random.Generator, spec: GroupSpec, p: int) -> NDArray[np.int64]:
    # torus element (t1, t2, mu) followed by unipotents from every root
    t1, t2, mu = (int(rng.integers(1, p)) for _ in range(3))
    t3 = mu * pow(t2, -1, p) % p
    t4 = mu * pow(t1, -1, p) % p
    g = np.diag(np.array([t1, t2, t3, t4], dtype=np.int64))
    eye = np.eye(4, dtype=np.int64)
    for k in (3, 4, 5, 6, 7, 8, 9, 10):  # all root vectors in the basis
        c = int(rng.integers(0, p))
        g = g @ ((eye + c * spec.lie_basis[k]) % p) % p
    return g % p


def stratum_sample(
    spec: GroupSpec,
    p: int,
    q: int,
    orbit: OrbitLabel,
    count: int,
    seed: int = 0,
) -> list[SGPoint]:
    """Sample points (phi, N) with N in a fixed nilpotent orbit.

    GL(n): conjugate the Jordan form by random invertible matrices and
    solve the linear equation phi N = q N phi for phi exactly, sampling
    invertible solutions from the kernel. GSp4: conjugate a base point
    by random group elements built from torus and root elements. The
    generator is seeded, so samples are deterministic.
    """
    if orbit.parts is None:
        raise ValueError("stratum sampling needs a partition orbit label")
    q = q % p
    rng = np.random.default_rng(seed)
    points: list[SGPoint] = []
    if spec.kind == "GSp4":
        base_n = _gsp4_rep(spec, orbit.parts, p)
        base_phi = _gsp4_base_phi(orbit.parts, q, p)
        attempts = 0
        while len(points) < count and attempts < 200 * count:
            attempts += 1
            g = _random_gsp4(rng, spec, p)
            pt = SGPoint(
                spec=spec,
                phi=g @ base_phi @ kernels.inv_mod(g, p) % p,
                n_mat=g @ base_n @ kernels.inv_mod(g, p) % p,
                q=q,
                p=p,
            )
            points.append(pt)
        return points
    if sum(orbit.parts) != spec.n:
        raise ValueError("partition does not sum to the matrix size")
    jordan = _jordan_nilpotent(orbit.parts)
    dim = spec.n * spec.n
    attempts = 0
    while len(points) < count and attempts < 500 * count:
        attempts += 1
        g = _random_gl(rng, spec.n, p)
        n_mat = g @ jordan @ kernels.inv_mod(g, p) % p
        # phi N - q N phi = 0 as a linear system on vec(phi)
        eye = np.eye(spec.n, dtype=np.int64)
        sys = (np.kron(eye, n_mat.T) - q * np.kron(n_mat, eye)) % p
        basis = kernels.nullspace_mod(sys, p)
        if basis.shape[0] == 0:
            continue
        for _ in range(40):
            coeffs = rng.integers(0, p, size=basis.shape[0]).astype(np.int64)
            phi = (coeffs @ basis % p).reshape(spec.n, spec.n)
            if kernels.rank_mod(phi, p) == spec.n:
                points.append(SGPoint(spec=spec, phi=phi, n_mat=n_mat, q=q, p=p))
                break
    return points


def _gsp4_base_phi(parts: tuple[int, ...], q: int, p: int) -> NDArray[np.int64]:
    qinv = pow(q, -1, p)
    if parts == (4,):
        # both simple-root ratios must equal q; scalar shift keeps the
        # entries integral without a square root of q
        q2, q3 = pow(q, 2, p), pow(q, 3, p)
        return np.diag(np.array([q3, q2, q, 1], dtype=np.int64)) % p
    if parts == (2, 2):
        return np.diag(np.array([q, 1, 1, qinv], dtype=np.int64)) % p
    if parts == (2, 1, 1):
        # long-root vector x_alpha = E_23 needs t2/t3 = q
        return np.diag(np.array([1, q, 1, q], dtype=np.int64)) % p
    if parts == (1, 1, 1, 1):
        return np.eye(4, dtype=np.int64)
    raise ValueError("unsupported GSp4 orbit %r" % (parts,))


@dataclass(frozen=True)
class RedundancyReport:
    """Outcome of scanning every phi for non-nilpotent solutions N of
    Ad(phi) N = q N. With q of large order there are none, so imposing
    nilpotency on N is redundant; with small order a witness appears."""

    p: int
    q: int
    pairs_checked: int
    non_nilpotent_count: int
    witness_phi: NDArray[np.int64] | None
    witness_n: NDArray[np.int64] | None


def nilpotency_redundancy_check(spec: GroupSpec, p: int, q: int) -> RedundancyReport:
    """Scan all phi in GL(2, F_p) and all solutions of Ad(phi) N = q N."""
    if spec.kind != "GL" or spec.n != 2:
        raise ValueError("redundancy scan is only supported for GL(2)")
    if p > 13:
        raise ValueError("redundancy scan is capped at p = 13")
    q = q % p
    phis = _all_invertible_2x2(p)
    invs = _inv_2x2_batch(phis, p)
    ad = np.einsum("bik,blj->bijkl", phis, invs).reshape(-1, 4, 4) % p
    ad = (ad - q * np.eye(4, dtype=np.int64)) % p
    nullities = kernels.batch_nullity_mod(ad, p)
    checked = 0
    bad = 0
    wphi = None
    wn = None
    for idx in range(phis.shape[0]):
        d = int(nullities[idx])
        if d == 0:
            continue
        basis = kernels.nullspace_mod(ad[idx], p)
        for coeffs in _nonzero_tuples(d, p):
            vec = np.zeros(4, dtype=np.int64)
            for c, row in zip(coeffs, basis):
                vec = (vec + c * row) % p
            if not vec.any():
                continue
            checked += 1
            n_mat = vec.reshape(2, 2)
            if not _is_nilpotent(n_mat, p):
                bad += 1
                if wphi is None:
                    wphi = phis[idx].copy()
                    wn = n_mat.copy()
    return RedundancyReport(
        p=p, q=q, pairs_checked=checked, non_nilpotent_count=bad,
        witness_phi=wphi, witness_n=wn,
    )


def exp_nilpotent(n_mat, p: int) -> NDArray[np.int64]:
    """exp(N) for nilpotent N via the terminating series; needs p > n
    so the factorials are invertible."""
    n_mat = kernels.as_field(n_mat, p)
    size = n_mat.shape[0]
    if p <= size:
        raise ValueError("need p > matrix size for the exponential series")
    out = np.eye(size, dtype=np.int64)
    term = np.eye(size, dtype=np.int64)
    for k in range(1, size):
        term = term @ n_mat % p * pow(k, -1, p) % p
        out = (out + term) % p
    return out


def log_unipotent(u, p: int) -> NDArray[np.int64]:
    """log(u) for unipotent u via the terminating series."""
    u = kernels.as_field(u, p)
    size = u.shape[0]
    if p <= size:
        raise ValueError("need p > matrix size for the logarithm series")
    a = (u - np.eye(size, dtype=np.int64)) % p
    out = np.zeros((size, size), dtype=np.int64)
    term = np.eye(size, dtype=np.int64)
    for k in range(1, size):
        term = term @ a % p
        sign = 1 if k % 2 == 1 else -1
        out = (out + sign * term * pow(k, -1, p)) % p
    return out


def exp_bridge_check(pt: SGPoint) -> bool:
    """Translate (phi, N) to (phi, sigma) with sigma = exp(N) and check
    phi sigma phi^{-1} = sigma^q, plus log(exp(N)) = N."""
    p = pt.p
    sigma = exp_nilpotent(pt.n_mat, p)
    if not np.array_equal(log_unipotent(sigma, p), pt.n_mat % p):
        return False
    inv = kernels.inv_mod(pt.phi, p)
    lhs = pt.phi @ sigma @ inv % p
    rhs = kernels.matpow_mod(sigma, pt.q % p, p)
    return bool(np.array_equal(lhs, rhs))


@dataclass(frozen=True)
class BundleReport:
    """Fiber counts of the projection to phi over the open stratum where
    phi has eigenvalue multiset z * {1, q, ..., q^{n-1}}."""

    p: int
    q: int
    base_points: int
    expected_fiber: int
    fiber_counts: tuple[int, ...]
    quadratic_extension_points: int

    @property
    def ok(self) -> bool:
        return all(c == self.expected_fiber for c in self.fiber_counts)


def bundle_count_check(
    spec: GroupSpec, p: int, q: int, samples: int = 20, seed: int = 0
) -> BundleReport:
    """Count solutions N of Ad(phi) N = q N over semisimple base points.

    GL(2): enumerate every phi whose eigenvalue multiset is {z, qz}
    (including pairs living in the quadratic extension, detected from
    the characteristic polynomial) and count the N solutions, which
    should number p^{n-1} each. GL(3): sample conjugates of
    z diag(1, q, q^2) with a seeded generator.
    """
    q = q % p
    if spec.kind != "GL" or spec.n not in (2, 3):
        raise ValueError("bundle check supports GL(2) and GL(3)")
    expected = p ** (spec.n - 1)
    counts: list[int] = []
    quad = 0
    if spec.n == 2:
        split_pairs = set()
        for z in range(1, p):
            tr = z * (1 + q) % p
            det = q * z * z % p
            split_pairs.add((tr, det))
        phis = _all_invertible_2x2(p)
        for phi in phis:
            tr = int((phi[0, 0] + phi[1, 1]) % p)
            det = int((phi[0, 0] * phi[1, 1] - phi[0, 1] * phi[1, 0]) % p)
            is_split = (tr, det) in split_pairs
            # irreducible characteristic polynomial with root multiset
            # {z, qz} in F_{p^2} satisfies q tr^2 = (1+q)^2 det
            disc = (tr * tr - 4 * det) % p
            is_quad = (
                not is_split
                and disc != 0
                and pow(disc, (p - 1) // 2, p) == p - 1
                and q * tr * tr % p == (1 + q) ** 2 * det % p
            )
            if not is_split and not is_quad:
                continue
            if is_quad:
                quad += 1
            ad = ad_matrix(phi, p)
            sys = (ad - q * np.eye(4, dtype=np.int64)) % p
            d = kernels.nullity_mod(sys, p)
            counts.append(p**d)
        return BundleReport(
            p=p, q=q, base_points=len(counts), expected_fiber=expected,
            fiber_counts=tuple(counts), quadratic_extension_points=quad,
        )
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        z = int(rng.integers(1, p))
        diag = np.diag(np.array([z, z * q % p, z * q * q % p], dtype=np.int64))
        g = _random_gl(rng, 3, p)
        phi = g @ diag @ kernels.inv_mod(g, p) % p
        ad = ad_matrix(phi, p)
        sys = (ad - q * np.eye(9, dtype=np.int64)) % p
        d = kernels.nullity_mod(sys, p)
        counts.append(p**d)
    return BundleReport(
        p=p, q=q, base_points=len(counts), expected_fiber=expected,
        fiber_counts=tuple(counts), quadratic_extension_points=0,
    )


def jordan_partition(n_mat, p: int) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix, as a descending partition.

    #(parts >= k) equals rank(A^(k-1)) - rank(A^k); the partition is
    read off from that staircase.
    """
    a = kernels.as_field(n_mat, p)
    size = a.shape[0]
    if not _is_nilpotent(a, p):
        raise ValueError("matrix is not nilpotent")
    ranks = [size]
    power = np.eye(size, dtype=np.int64)
    while ranks[-1] > 0:
        power = power @ a % p
        ranks.append(kernels.rank_mod(power, p))
    counts = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    parts = []
    for size_k in range(1, len(counts) + 1):
        mult = counts[size_k - 1] - (counts[size_k] if size_k < len(counts) else 0)
        parts.extend([size_k] * mult)
    parts.sort(reverse=True)
    return tuple(parts)


def conjugate_point(pt: SGPoint, g) -> SGPoint:
    """Act by simultaneous conjugation; the variety is stable under it."""
    g = kernels.as_field(g, pt.p)
    ginv = kernels.inv_mod(g, pt.p)
    return SGPoint(
        spec=pt.spec,
        phi=g @ pt.phi @ ginv % pt.p,
        n_mat=g @ pt.n_mat @ ginv % pt.p,
        q=pt.q,
        p=pt.p,
    )


_CERTIFICATE_NAMES = (
    "BasePoint",
    "CertificateError",
    "EpsilonCertificate",
    "build_phi0",
    "epsilon_certificate",
)


def __getattr__(name: str):
    # the certificate builders operate on GroupSpec points and are
    # reachable from here as well; resolved lazily to avoid a cycle
    if name in _CERTIFICATE_NAMES:
        from . import certificates

        return getattr(certificates, name)
    raise AttributeError("module %r has no attribute %r" % (__name__, name))
