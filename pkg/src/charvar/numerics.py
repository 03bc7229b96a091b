"""Numerical side: explicit surface group representations over C.

A representation of a genus-g surface group into GL(n) is a tuple of
matrices A_1, B_1, ..., A_g, B_g satisfying the single relation

    [A_1, B_1] [A_2, B_2] ... [A_g, B_g] = 1,

with [A, B] = A B A^-1 B^-1.  This module refines approximate tuples onto
the relation variety with a damped Gauss-Newton iteration (analytic
Jacobians, no finite differences), computes group cohomology ranks at a
point via Fox derivatives of the relator, and measures centralizers.

There is also a second coordinate system: tuples A_1..A_g with

    prod_i (1 + A_i A_i*) (1 + A_i* A_i)^-1 = 1.

Writing B_i = A_i^-1 + A_i* turns each factor into the commutator
[A_i, B_i] on the nose, so solutions transfer to surface representations
with no extra work.  Unitary tuples solve the equation exactly and make
convenient starting points.

Conventions: matrices are flattened row-major throughout, so
vec(P X Q) = kron(P, Q^T) vec(X).  Real parametrizations interleave as
(Re vec M, Im vec M) per matrix, matrices ordered A_1, B_1, A_2, B_2, ...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

DEFAULT_RANK_TOL = 1e-8
RELIABLE_GAP = 1e3

_LAMBDA_INIT = 1e-3
_LAMBDA_MIN = 1e-14
_LAMBDA_MAX = 1e8


class ConvergenceError(RuntimeError):
    """Gauss-Newton failed to reach the requested residual."""


# --------------------------------------------------------------------------
# Lie algebra bases and adjoint action


def lie_basis(n: int, mode: str = "sl") -> np.ndarray:
    """Orthonormal basis of sl_n or gl_n under <X, Y> = tr(X^H Y).

    Off-diagonal matrix units are already orthonormal; the diagonal part
    uses the staircase matrices diag(1, ..., 1, -k, 0, ..., 0)/sqrt(k(k+1)).
    Returned as a stack of shape (d, n, n) with d = n^2 - 1 or n^2.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if mode not in ("sl", "gl"):
        raise ValueError(f"mode must be 'sl' or 'gl', got {mode!r}")
    mats = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            unit = np.zeros((n, n), dtype=complex)
            unit[i, j] = 1.0
            mats.append(unit)
    for k in range(1, n):
        diag = np.zeros(n, dtype=complex)
        diag[:k] = 1.0
        diag[k] = -k
        mats.append(np.diag(diag) / np.sqrt(k * (k + 1)))
    if mode == "gl":
        mats.append(np.eye(n, dtype=complex) / np.sqrt(n))
    return np.stack(mats)


def adjoint_matrix(g: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Matrix of X -> g X g^-1 in the given orthonormal basis."""
    ginv = np.linalg.inv(g)
    conjugated = np.einsum("ab,kbc,cd->kad", g, basis, ginv)
    # entries <B_j, g B_k g^-1>
    return np.einsum("jba,kba->jk", basis.conj(), conjugated)


# --------------------------------------------------------------------------
# Representations


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b @ np.linalg.inv(a) @ np.linalg.inv(b)


def relator_eval(
    A: Sequence[np.ndarray], B: Sequence[np.ndarray]
) -> np.ndarray:
    """Product of the g commutators [A_i, B_i]."""
    if len(A) != len(B):
        raise ValueError("need equally many A and B matrices")
    n = A[0].shape[0]
    out = np.eye(n, dtype=complex)
    for a, b in zip(A, B):
        out = out @ commutator(a, b)
    return out


@dataclass(frozen=True)
class SurfaceRep:
    """A point on the representation variety, not yet up to conjugation.

    det_mode 'sl' asserts unit determinants (checked on construction);
    'gl' places no constraint.
    """

    genus: int
    n: int
    A: tuple[np.ndarray, ...]
    B: tuple[np.ndarray, ...]
    det_mode: str = "sl"

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")
        if len(self.A) != self.genus or len(self.B) != self.genus:
            raise ValueError("matrix counts must match the genus")
        for m in (*self.A, *self.B):
            if m.shape != (self.n, self.n):
                raise ValueError(f"expected {self.n} x {self.n} matrices")
        if self.det_mode not in ("sl", "gl"):
            raise ValueError(f"det_mode must be 'sl' or 'gl', got {self.det_mode!r}")
        if self.det_mode == "sl":
            for m in (*self.A, *self.B):
                if abs(np.linalg.det(m) - 1.0) > 1e-10:
                    raise ValueError(
                        "det_mode 'sl' requires unit determinants "
                        f"(got det = {np.linalg.det(m):.3e})"
                    )

    def generators(self) -> list[np.ndarray]:
        """Interleaved A_1, B_1, ..., A_g, B_g."""
        out = []
        for a, b in zip(self.A, self.B):
            out.extend((a, b))
        return out

    def relator(self) -> np.ndarray:
        return relator_eval(self.A, self.B)

    def relator_residual(self) -> float:
        return float(np.linalg.norm(self.relator() - np.eye(self.n)))


def _unit_det(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    det = np.linalg.det(m)
    if det == 0:
        raise ValueError("matrix is singular, cannot normalize determinant")
    return m / det ** (1.0 / n)


def sample_diagonal_rep(n: int, genus: int, seed: int = 0) -> SurfaceRep:
    """Commuting unit-circle diagonal matrices: an exact reducible point."""
    rng = np.random.default_rng(seed)
    mats = []
    for _ in range(2 * genus):
        angles = rng.uniform(0.0, 2.0 * np.pi, size=n)
        mats.append(_unit_det(np.diag(np.exp(1j * angles))))
    return SurfaceRep(
        genus=genus, n=n, A=tuple(mats[0::2]), B=tuple(mats[1::2]), det_mode="sl"
    )


def sample_random_rep(
    n: int, genus: int, seed: int = 0, spread: float = 0.3
) -> SurfaceRep:
    """Random unit-determinant tuple; a Gauss-Newton starting point, not a
    solution."""
    rng = np.random.default_rng(seed)
    mats = []
    for _ in range(2 * genus):
        noise = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        mats.append(_unit_det(np.eye(n) + spread * noise))
    return SurfaceRep(
        genus=genus, n=n, A=tuple(mats[0::2]), B=tuple(mats[1::2]), det_mode="sl"
    )


def perturb_rep(rep: SurfaceRep, scale: float, seed: int = 0) -> SurfaceRep:
    """Additive noise of the given scale, then back to unit determinants."""
    rng = np.random.default_rng(seed)

    def jiggle(m: np.ndarray) -> np.ndarray:
        noise = rng.standard_normal(m.shape) + 1j * rng.standard_normal(m.shape)
        out = m + scale * noise
        return _unit_det(out) if rep.det_mode == "sl" else out

    return SurfaceRep(
        genus=rep.genus,
        n=rep.n,
        A=tuple(jiggle(a) for a in rep.A),
        B=tuple(jiggle(b) for b in rep.B),
        det_mode=rep.det_mode,
    )


def clock_matrix(n: int) -> np.ndarray:
    zeta = np.exp(2j * np.pi / n)
    return np.diag(zeta ** np.arange(n))


def shift_matrix(n: int) -> np.ndarray:
    # rolled so that commutator(clock, shift) is exactly exp(2 pi i / n) times
    # the identity
    return np.roll(np.eye(n, dtype=complex), -1, axis=1)


# --------------------------------------------------------------------------
# Damped Gauss-Newton on real-lifted systems

SystemFn = Callable[[list[np.ndarray]], tuple[np.ndarray, np.ndarray]]


def _lift_real(
    residual: np.ndarray,
    holo_blocks: Sequence[np.ndarray],
    anti_blocks: Optional[Sequence[np.ndarray]] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Real residual and Jacobian from complex Wirtinger blocks.

    holo_blocks[t] differentiates the residual against vec(M_t),
    anti_blocks[t] against conj(vec(M_t)).  With dz = dx + i dy the chain
    rule gives dF = (C + D) dx + i (C - D) dy.
    """
    F = np.concatenate([residual.real, residual.imag])
    cols = []
    for t, C in enumerate(holo_blocks):
        D = anti_blocks[t] if anti_blocks is not None else np.zeros_like(C)
        s, d = C + D, C - D
        Jx = np.vstack([s.real, s.imag])
        Jy = np.vstack([-d.imag, d.real])
        cols.append(np.hstack([Jx, Jy]))
    return F, np.hstack(cols)


def _apply_step(mats: list[np.ndarray], delta: np.ndarray) -> list[np.ndarray]:
    out = []
    offset = 0
    for m in mats:
        size = m.size
        dx = delta[offset : offset + size]
        dy = delta[offset + size : offset + 2 * size]
        offset += 2 * size
        out.append(m + (dx + 1j * dy).reshape(m.shape))
    return out


def _damped_gauss_newton(
    mats: Sequence[np.ndarray],
    system: SystemFn,
    tol: float,
    max_iter: int = 100,
    retract: Optional[Callable[[list[np.ndarray]], list[np.ndarray]]] = None,
) -> list[np.ndarray]:
    """Minimum-norm Gauss-Newton steps with a multiplicative trust damper.

    The step solves (J J^T + lambda I) y = F, delta = -J^T y.  Accepted
    steps divide lambda by 10 (floor 1e-14), rejected ones multiply by 10;
    past 1e8 the iteration gives up.
    """
    current = [np.array(m, dtype=complex) for m in mats]
    if retract is not None:
        current = retract(current)
    F, J = system(current)
    res = float(np.linalg.norm(F))
    if res <= tol:
        return current
    lam = _LAMBDA_INIT
    eye = np.eye(J.shape[0])
    for _ in range(max_iter):
        try:
            y = np.linalg.solve(J @ J.T + lam * eye, F)
            delta = -(J.T @ y)
            candidate = _apply_step(current, delta)
            if retract is not None:
                candidate = retract(candidate)
            F2, J2 = system(candidate)
            res2 = float(np.linalg.norm(F2))
        except np.linalg.LinAlgError:
            res2 = np.inf
        if res2 < res:
            current, F, J, res = candidate, F2, J2, res2
            lam = max(lam / 10.0, _LAMBDA_MIN)
            if res <= tol:
                return current
        else:
            lam *= 10.0
            if lam > _LAMBDA_MAX:
                raise ConvergenceError(
                    f"damping exhausted at residual {res:.3e} (target {tol:.1e})"
                )
    raise ConvergenceError(
        f"no convergence in {max_iter} iterations, residual {res:.3e} "
        f"(target {tol:.1e})"
    )


def _sl_retraction(mats: list[np.ndarray]) -> list[np.ndarray]:
    # scaling each matrix leaves every commutator unchanged, so this costs
    # nothing in residual while pinning determinants to 1
    return [_unit_det(m) for m in mats]


def _relator_system(genus: int, n: int) -> SystemFn:
    eye = np.eye(n, dtype=complex)

    def system(mats: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
        A = mats[0::2]
        B = mats[1::2]
        Ainv = [np.linalg.inv(a) for a in A]
        Binv = [np.linalg.inv(b) for b in B]
        K = [A[i] @ B[i] @ Ainv[i] @ Binv[i] for i in range(genus)]
        left = [eye]
        for i in range(genus):
            left.append(left[-1] @ K[i])
        right = [eye] * genus
        for i in range(genus - 2, -1, -1):
            right[i] = K[i + 1] @ right[i + 1]
        residual = (left[genus] - eye).reshape(-1)

        blocks = []
        for i in range(genus):
            tail = Ainv[i] @ Binv[i] @ right[i]
            jac_a = np.kron(left[i], (B[i] @ tail).T) - np.kron(
                left[i] @ A[i] @ B[i] @ Ainv[i], tail.T
            )
            jac_b = np.kron(left[i] @ A[i], tail.T) - np.kron(
                left[i] @ K[i], (Binv[i] @ right[i]).T
            )
            blocks.extend((jac_a, jac_b))
        return _lift_real(residual, blocks)

    return system


def newton_refine_rep(
    rep: SurfaceRep, tol: float = 1e-12, max_iter: int = 100
) -> SurfaceRep:
    """Project an approximate tuple onto the relation variety.

    Raises ConvergenceError when the damping or iteration budget runs out.
    """
    if rep.genus < 2:
        raise ValueError("refinement needs genus >= 2 (genus 1 is rigid here)")
    system = _relator_system(rep.genus, rep.n)
    retract = _sl_retraction if rep.det_mode == "sl" else None
    refined = _damped_gauss_newton(
        rep.generators(), system, tol=tol, max_iter=max_iter, retract=retract
    )
    return SurfaceRep(
        genus=rep.genus,
        n=rep.n,
        A=tuple(refined[0::2]),
        B=tuple(refined[1::2]),
        det_mode=rep.det_mode,
    )


# --------------------------------------------------------------------------
# The multiplicative moment-map coordinates


def moment_map(A: Sequence[np.ndarray]) -> np.ndarray:
    """prod_i (1 + A_i A_i*)(1 + A_i* A_i)^-1."""
    n = A[0].shape[0]
    out = np.eye(n, dtype=complex)
    for a in A:
        astar = a.conj().T
        out = out @ (np.eye(n) + a @ astar) @ np.linalg.inv(np.eye(n) + astar @ a)
    return out


def moment_residual(A: Sequence[np.ndarray]) -> float:
    n = A[0].shape[0]
    return float(np.linalg.norm(moment_map(A) - np.eye(n)))


def _transpose_permutation(n: int) -> np.ndarray:
    """Permutation with vec(X^T) = T vec(X), row-major."""
    T = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            T[i * n + j, j * n + i] = 1.0
    return T


def _moment_system(count: int, n: int) -> SystemFn:
    eye = np.eye(n, dtype=complex)
    tperm = _transpose_permutation(n)

    def system(mats: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
        stars = [a.conj().T for a in mats]
        P = [eye + a @ s for a, s in zip(mats, stars)]
        Qinv = [np.linalg.inv(eye + s @ a) for a, s in zip(mats, stars)]
        factors = [p @ qi for p, qi in zip(P, Qinv)]
        left = [eye]
        for f in factors:
            left.append(left[-1] @ f)
        right = [eye] * count
        for i in range(count - 2, -1, -1):
            right[i] = factors[i + 1] @ right[i + 1]
        residual = (left[count] - eye).reshape(-1)

        holo, anti = [], []
        for i in range(count):
            qr = Qinv[i] @ right[i]
            # dPsi = L dA (A* Qinv R) + (L A) dA* (Qinv R)
            #        - (L P Qinv) dA* (A Qinv R) - (L P Qinv A*) dA (Qinv R)
            C = np.kron(left[i], (stars[i] @ qr).T) - np.kron(
                left[i] @ P[i] @ Qinv[i] @ stars[i], qr.T
            )
            Dstar = np.kron(left[i] @ mats[i], qr.T) - np.kron(
                left[i] @ P[i] @ Qinv[i], (mats[i] @ qr).T
            )
            # dA* is the transpose of the entrywise conjugate
            holo.append(C)
            anti.append(Dstar @ tperm)
        return _lift_real(residual, holo, anti)

    return system


def sample_moment_start(
    n: int, count: int, seed: int = 0, spread: float = 0.3
) -> list[np.ndarray]:
    """Perturbed unitaries.  Unitary tuples satisfy the equation exactly,
    so small spreads start close to the solution set."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        gauss = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        q, _ = np.linalg.qr(gauss)
        noise = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        out.append(q @ (np.eye(n) + spread * noise))
    return out


def refine_moment_map_point(
    A: Sequence[np.ndarray], tol: float = 1e-8, max_iter: int = 100
) -> list[np.ndarray]:
    """Gauss-Newton onto the solution set of the multiplicative equation."""
    if not A:
        raise ValueError("need at least one matrix")
    n = A[0].shape[0]
    return _damped_gauss_newton(
        list(A), _moment_system(len(A), n), tol=tol, max_iter=max_iter
    )


def mpa_to_surface(A: Sequence[np.ndarray], tol: float = 1e-8) -> SurfaceRep:
    """Transfer a solved tuple to a genus-len(A) surface representation.

    B_i = A_i^-1 + A_i* makes A_i B_i = 1 + A_i A_i* and
    B_i A_i = 1 + A_i* A_i, so each moment factor is the commutator
    [A_i, B_i] and the relator residual matches the moment residual up to
    rounding.
    """
    res = moment_residual(A)
    if res > tol:
        raise ValueError(
            f"moment residual {res:.3e} exceeds {tol:.1e}; refine first"
        )
    B = [np.linalg.inv(a) + a.conj().T for a in A]
    return SurfaceRep(
        genus=len(A), n=A[0].shape[0], A=tuple(A), B=tuple(B), det_mode="gl"
    )


# --------------------------------------------------------------------------
# Cohomology at a representation via Fox derivatives


def surface_relator_word(genus: int) -> list[tuple[int, int]]:
    """The relator as (generator index, exponent) letters; A_i -> 2i,
    B_i -> 2i+1."""
    word = []
    for i in range(genus):
        word.extend([(2 * i, 1), (2 * i + 1, 1), (2 * i, -1), (2 * i + 1, -1)])
    return word


def coboundary_matrix(
    rep: SurfaceRep, basis: Optional[np.ndarray] = None
) -> np.ndarray:
    """d0: stacked blocks (I - Ad(gen)) of shape (2g d, d)."""
    if basis is None:
        basis = lie_basis(rep.n, rep.det_mode)
    d = basis.shape[0]
    blocks = [np.eye(d) - adjoint_matrix(g, basis) for g in rep.generators()]
    return np.vstack(blocks)


def cocycle_matrix(
    rep: SurfaceRep, basis: Optional[np.ndarray] = None
) -> np.ndarray:
    """d1: the Fox derivative of the relator, shape (d, 2g d).

    Walking the word left to right, a letter g^{+1} contributes the adjoint
    of the prefix before it, a letter g^{-1} minus the adjoint of the prefix
    through it.
    """
    if basis is None:
        basis = lie_basis(rep.n, rep.det_mode)
    d = basis.shape[0]
    gens = rep.generators()
    adjoints = [adjoint_matrix(g, basis) for g in gens]
    adjoints_inv = [adjoint_matrix(np.linalg.inv(g), basis) for g in gens]
    coeffs = [np.zeros((d, d), dtype=complex) for _ in gens]
    prefix = np.eye(d, dtype=complex)
    for j, exp in surface_relator_word(rep.genus):
        if exp == 1:
            coeffs[j] = coeffs[j] + prefix
            prefix = prefix @ adjoints[j]
        else:
            prefix = prefix @ adjoints_inv[j]
            coeffs[j] = coeffs[j] - prefix
    return np.hstack(coeffs)


def _svd_rank(M: np.ndarray, rank_tol: float) -> tuple[int, float]:
    """Numerical rank and the spectral gap at the cut.

    The cut is rank_tol times max(top singular value, 1): the matrices here
    are built from order-one adjoint blocks, so anything uniformly below
    rank_tol is roundoff, not structure, even when it dwarfs the (zero) top
    value's relative scale.
    """
    if M.size == 0:
        return 0, np.inf
    s = np.linalg.svd(M, compute_uv=False)
    cut = rank_tol * max(float(s[0]), 1.0)
    rank = int(np.sum(s > cut))
    if rank == 0 or rank == len(s) or s[rank] == 0.0:
        return rank, np.inf
    return rank, float(s[rank - 1] / s[rank])


@dataclass(frozen=True)
class CohomologyReport:
    """Twisted cohomology dimensions at one representation."""

    h0: int
    h1: int
    h2: int
    euler_residual: int
    dim_g: int
    singular_value_gap: float
    reliable: bool

    def to_json(self) -> dict:
        gap = self.singular_value_gap
        return {
            "h0": self.h0,
            "h1": self.h1,
            "h2": self.h2,
            "euler_residual": self.euler_residual,
            "dim_g": self.dim_g,
            "singular_value_gap": None if np.isinf(gap) else gap,
            "reliable": self.reliable,
        }


def cohomology_dims(
    rep: SurfaceRep, rank_tol: float = DEFAULT_RANK_TOL
) -> CohomologyReport:
    """h^0, h^1, h^2 with coefficients in the adjoint representation.

    Ranks come from SVD cuts at rank_tol times the top singular value; the
    report carries the worst gap across both differentials, and is flagged
    unreliable when that gap drops below 1000.
    """
    basis = lie_basis(rep.n, rep.det_mode)
    d = basis.shape[0]
    g = rep.genus
    r0, gap0 = _svd_rank(coboundary_matrix(rep, basis), rank_tol)
    r1, gap1 = _svd_rank(cocycle_matrix(rep, basis), rank_tol)
    h0 = d - r0
    h1 = 2 * g * d - r0 - r1
    h2 = d - r1
    euler = (h0 - h1 + h2) - (2 - 2 * g) * d
    gap = float(min(gap0, gap1))
    return CohomologyReport(
        h0=h0,
        h1=h1,
        h2=h2,
        euler_residual=euler,
        dim_g=d,
        singular_value_gap=gap,
        reliable=bool(gap >= RELIABLE_GAP),
    )


def centralizer_dim(
    rep: SurfaceRep,
    mode: Optional[str] = None,
    rank_tol: float = DEFAULT_RANK_TOL,
    seed: int = 0,
) -> int:
    """Dimension of the joint centralizer of the image, in gl_n or sl_n.

    Stacks W X - X W = 0 for the generators and a few random words; random
    words guard against accidental common symmetry of the generators alone.
    """
    if mode is None:
        mode = rep.det_mode
    n = rep.n
    gens = rep.generators()
    rng = np.random.default_rng(seed)
    words = list(gens)
    for _ in range(4):
        w = np.eye(n, dtype=complex)
        for _ in range(rng.integers(2, 7)):
            pick = gens[rng.integers(0, len(gens))]
            w = w @ (pick if rng.integers(0, 2) else np.linalg.inv(pick))
        words.append(w)
    eye = np.eye(n)
    stack = np.vstack(
        [np.kron(w, eye) - np.kron(eye, w.T) for w in words]
    )
    rank, _ = _svd_rank(stack, rank_tol)
    nullity = n * n - rank
    return nullity - 1 if mode == "sl" else nullity


def fixed_point_tangent_check(
    n: int, ell: int, genus: int, rank_tol: float = DEFAULT_RANK_TOL
) -> Optional[int]:
    """Codimension of the locus fixed by an order-ell central twist, computed
    from an explicit fixed tuple built on clock(ell) x 1.

    The twist multiplies a generator by a primitive ell-th root of unity
    zeta; a representation fixed up to conjugation yields an intertwiner
    A with spectrum spread over the zeta-eigenspaces.  The tangent count
    reduces to c = dim {X : A X A^-1 = zeta X}, and the codimension is
    2(g-1)(n^2 - c).  Returns None when ell does not divide n (no fixed
    points at all).
    """
    if genus < 2:
        raise ValueError("tangent counting needs genus >= 2")
    if ell < 1:
        raise ValueError(f"twist order must be positive, got {ell}")
    if n % ell:
        return None
    block = np.eye(n // ell, dtype=complex)
    A = np.kron(clock_matrix(ell), block)
    zeta = np.exp(2j * np.pi / ell)
    op = np.kron(A, np.linalg.inv(A).T) - zeta * np.eye(n * n)
    rank, _ = _svd_rank(op, rank_tol)
    c = n * n - rank
    return 2 * (genus - 1) * (n * n - c)
