"""Bijection-induced algebra isomorphisms T : A(G) -> A(H) and their norms.

All norms are computed on the adjoint side: the adjoint T* : VN(H) -> VN(G)
sends lambda_h to lambda_{t(h)} for the underlying bijection t : H -> G, so
T is a fixed coefficient permutation and the whole difficulty sits in the
operator-norm evaluation over the block decompositions.  Every reported
value is achieved by an explicit feasible witness and is therefore a
certified lower bound of the true supremum; upper bounds are never claimed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GroupMismatchError, SizeLimitError
from .fourier import GroupAlgebraElement
from .groups import FiniteGroup, GroupBijection
from .irreps import IrrepTable
from .optim import (BlockLinearMap, haar_unitary, maximize_block_image,
                    polar_factor, resolve_effort)

LEVEL_DIM_LIMIT = 64
CB_LEVEL_LIMIT = 8


@dataclass(eq=False)
class InducedHom:
    """The isomorphism T(f) = f o t induced by a bijection t : H -> G.

    ``source_table`` holds the irreps of G (the source of T) and
    ``target_table`` those of H (the target of T).
    """

    bijection: GroupBijection
    source_table: IrrepTable
    target_table: IrrepTable
    _kernels: list | None = field(default=None, repr=False)

    def __post_init__(self):
        if not np.array_equal(self.bijection.target.table, self.source_table.group.table):
            raise GroupMismatchError("source_table must belong to the bijection codomain")
        if not np.array_equal(self.bijection.source.table, self.target_table.group.table):
            raise GroupMismatchError("target_table must belong to the bijection domain")

    @property
    def source_group(self) -> FiniteGroup:
        return self.source_table.group

    @property
    def target_group(self) -> FiniteGroup:
        return self.target_table.group

    def inverse(self) -> InducedHom:
        return InducedHom(
            bijection=self.bijection.inverse(),
            source_table=self.target_table,
            target_table=self.source_table,
        )

    def apply(self, values: np.ndarray) -> np.ndarray:
        """T on function values: (T f)(h) = f(t(h))."""
        return np.asarray(values, dtype=complex)[self.bijection.map]

    def kernels(self) -> list[list[np.ndarray]]:
        """Lazy kernels of the adjoint in block coordinates.

        K[pi][sigma][A,B,a,b] = (d_sigma/|H|) sum_h conj(sigma(h)[a,b]) pi(t(h))[A,B],
        so that output blocks are Y_pi = sum_sigma K[pi][sigma] . X_sigma.
        """
        if self._kernels is None:
            tmap = self.bijection.map
            n = self.target_group.order
            kernels = []
            for rep_g in self.source_table.irreps:
                row = []
                pi_t = rep_g.matrices[tmap]
                for rep_h in self.target_table.irreps:
                    row.append(rep_h.dimension / n *
                               np.einsum("hAB,hab->ABab", pi_t, rep_h.matrices.conj()))
                kernels.append(row)
            self._kernels = kernels
        return self._kernels

    def linear_map(self, k: int = 1) -> BlockLinearMap:
        return BlockLinearMap(
            kernels=self.kernels(),
            dims_in=self.target_table.dims,
            dims_out=self.source_table.dims,
            k=k,
        )


def induced_hom(source_table: IrrepTable, target_table: IrrepTable,
                mapping) -> InducedHom:
    """Convenience constructor from a raw index map t : H -> G."""
    bij = GroupBijection(source=target_table.group, target=source_table.group,
                         map=np.asarray(mapping, dtype=np.int64))
    return InducedHom(bijection=bij, source_table=source_table, target_table=target_table)


def adjoint_image(hom: InducedHom, x: GroupAlgebraElement) -> GroupAlgebraElement:
    """T* on VN(H): the coefficient of lambda_h moves to lambda_{t(h)}."""
    if x.group.order != hom.target_group.order or \
            not np.array_equal(x.group.table, hom.target_group.table):
        raise GroupMismatchError("element must live over the bijection domain")
    out = np.zeros(hom.source_group.order, dtype=complex)
    out[hom.bijection.map] = x.coeffs
    return GroupAlgebraElement(group=hom.source_group, coeffs=out)


@dataclass(frozen=True, eq=False)
class Witness:
    """A feasible block tuple in M_k(VN(H)) achieving a reported norm."""

    level: int
    blocks: list[np.ndarray]

    def matrix_coefficients(self, hom: InducedHom) -> np.ndarray:
        """Coefficients C_h with X = sum_h C_h (x) lambda_h, shape (n, k, k)."""
        n = hom.target_group.order
        k = self.level
        coeffs = np.zeros((n, k, k), dtype=complex)
        for rep, blk in zip(hom.target_table.irreps, self.blocks):
            d = rep.dimension
            x4 = blk.reshape(k, d, k, d)
            coeffs += rep.dimension / n * np.einsum("hab,iajb->hij", rep.matrices.conj(), x4)
        return coeffs


@dataclass(frozen=True, eq=False)
class NormEstimate:
    value: float
    witness: Witness
    meta: dict


def _lift_witness(witness: Witness, target_table: IrrepTable, k: int) -> list[np.ndarray]:
    """Embed a level-j witness into level k >= j without changing norms.

    Tensoring with an identity (j = 1) or padding with zeros keeps both the
    constraint norm and the image norm, so lifted starts guarantee that the
    level-k value is at least the level-j value.
    """
    dims = target_table.dims
    if witness.level == 1:
        return [np.kron(np.eye(k, dtype=complex), blk) for blk in witness.blocks]
    j = witness.level
    lifted = []
    for d, blk in zip(dims, witness.blocks):
        big = np.zeros((k, d, k, d), dtype=complex)
        big[:j, :, :j, :] = blk.reshape(j, d, j, d)
        lifted.append(big.reshape(k * d, k * d))
    return lifted


def level_k_norm(hom: InducedHom, k: int, effort="default", seed: int = 0,
                 hints: tuple[Witness, ...] = ()) -> NormEstimate:
    """Norm of the level-k amplification id_{M_k} (x) T*, with witness.

    Maximizes max_pi ||sum_h C_h (x) pi(t(h))|| over block tuples
    X = sum_h C_h (x) lambda_h with max_sigma ||sum_h C_h (x) sigma(h)|| <= 1.
    """
    if k < 1:
        raise ValueError("amplification level must be >= 1")
    max_dim = max(hom.source_table.dims + hom.target_table.dims)
    if k * max_dim > LEVEL_DIM_LIMIT:
        raise SizeLimitError(
            f"level {k} with block dimension {max_dim} exceeds the limit {LEVEL_DIM_LIMIT}")
    eff = resolve_effort(effort)
    linmap = hom.linear_map(k)
    extra = tuple(_lift_witness(w, hom.target_table, k) for w in hints if w.level <= k)
    value, blocks, meta = maximize_block_image(linmap, eff, seed=seed, extra_starts=extra)
    return NormEstimate(value=value, witness=Witness(level=k, blocks=blocks), meta=meta)


def op_norm(hom: InducedHom, effort="default", seed: int = 0) -> NormEstimate:
    """||T|| = ||T*||, as a certified lower bound with witness."""
    return level_k_norm(hom, 1, effort=effort, seed=seed)


@dataclass(frozen=True, eq=False)
class CbNormResult:
    value: float
    levels: list[tuple[int, float]]
    witness: Witness
    meta: dict


def cb_norm(hom: InducedHom, effort="default", seed: int = 0) -> CbNormResult:
    """Completely bounded norm, reported at the stabilization level.

    VN(G) embeds in the matrices of size m = sum_pi d_pi(G), so the supremum
    over amplification levels stabilizes by level m; the whole sequence
    k = 1..m is returned to exhibit the stabilization.
    """
    m = int(sum(hom.source_table.dims))
    if m > CB_LEVEL_LIMIT:
        raise SizeLimitError(f"stabilization level {m} exceeds the cap {CB_LEVEL_LIMIT}")
    eff = resolve_effort(effort)
    levels = []
    hints: tuple[Witness, ...] = ()
    best: NormEstimate | None = None
    for k in range(1, m + 1):
        est = level_k_norm(hom, k, effort=eff, seed=seed, hints=hints)
        levels.append((k, est.value))
        hints = (est.witness,)
        best = est
    return CbNormResult(value=levels[-1][1], levels=levels, witness=best.witness,
                        meta=best.meta)


def _convolve(group: FiniteGroup, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Coefficient convolution: lambda_g lambda_h = lambda_{gh}."""
    out = np.zeros(group.order, dtype=complex)
    for g in range(group.order):
        if a[g] != 0:
            out[group.table[g]] += a[g] * b
    return out


def _jordan_coeffs(hom: InducedHom, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Coefficients over G of T*(ab) + T*(ba) - T*(a)T*(b) - T*(b)T*(a)."""
    h_group, g_group = hom.target_group, hom.source_group
    tmap = hom.bijection.map

    def push(c):
        out = np.zeros(g_group.order, dtype=complex)
        out[tmap] = c
        return out

    pa, pb = push(a), push(b)
    return (push(_convolve(h_group, a, b)) + push(_convolve(h_group, b, a))
            - _convolve(g_group, pa, pb) - _convolve(g_group, pb, pa))


def _vn_norm_coeffs(table: IrrepTable, coeffs: np.ndarray) -> float:
    return max(
        float(np.linalg.svd(np.einsum("g,gab->ab", coeffs, rep.matrices),
                            compute_uv=False)[0])
        for rep in table.irreps)


def jordan_defect(hom: InducedHom, samples: int = 256, seed: int = 0,
                  refine_rounds: int = 25) -> float:
    """Lower-bound estimate of the Jordan defect of T* over unit-ball pairs.

    Scans all lambda-basis pairs exactly, adds random unitary pairs, then
    refines the best candidates by alternating exact maximization of the
    linearized objective in each argument.
    """
    h_table = hom.target_table
    h_group = hom.target_group
    n = h_group.order
    rng = np.random.default_rng([seed, 7])

    def defect(a, b):
        return _vn_norm_coeffs(hom.source_table, _jordan_coeffs(hom, a, b))

    candidates = []
    eye_n = np.eye(n, dtype=complex)
    for h1 in range(n):
        for h2 in range(n):
            candidates.append((defect(eye_n[h1], eye_n[h2]), eye_n[h1], eye_n[h2]))
    for _ in range(samples):
        a = _random_unitary_element(h_table, rng)
        b = _random_unitary_element(h_table, rng)
        candidates.append((defect(a, b), a, b))
    candidates.sort(key=lambda t: -t[0])
    best = candidates[0][0]
    for val, a, b in candidates[:4]:
        refined = _refine_jordan_pair(hom, a, b, refine_rounds)
        best = max(best, refined)
    return float(best)


def _random_unitary_element(table: IrrepTable, rng: np.random.Generator) -> np.ndarray:
    """Coefficients of a Haar-random unitary element of VN(H)."""
    n = table.group.order
    coeffs = np.zeros(n, dtype=complex)
    for rep in table.irreps:
        u = haar_unitary(rng, rep.dimension)
        coeffs += rep.dimension / n * np.einsum("gba,ba->g", rep.matrices.conj(), u)
    return coeffs


def _conv_matrices(group: FiniteGroup, b: np.ndarray):
    """Matrices of c -> conv(c, b) and c -> conv(b, c)."""
    n = group.order
    right = np.zeros((n, n), dtype=complex)
    left = np.zeros((n, n), dtype=complex)
    for g in range(n):
        right[group.table[g], g] = b          # column g: e_g * b
    for h in range(n):
        left[group.table[:, h], h] = b        # column h: b * e_h
    return right, left


def _refine_jordan_pair(hom: InducedHom, a0: np.ndarray, b0: np.ndarray,
                        rounds: int) -> float:
    """Alternating exact ascent of the defect over the two unit balls."""
    h_table, g_table = hom.target_table, hom.source_table
    h_group, g_group = hom.target_group, hom.source_group
    n = h_group.order
    tmap = hom.bijection.map
    perm = np.zeros((n, n), dtype=complex)
    perm[tmap, np.arange(n)] = 1.0

    def linear_map_given(other):
        """Matrix of c -> Jordan coefficients when the other argument is fixed."""
        right_h, left_h = _conv_matrices(h_group, other)
        p_other = perm @ other
        right_g, left_g = _conv_matrices(g_group, p_other)
        return perm @ (right_h + left_h) - (right_g + left_g) @ perm

    def blocks_of(c):
        return [np.einsum("g,gab->ab", c, rep.matrices) for rep in h_table.irreps]

    def coeffs_of(blocks):
        out = np.zeros(n, dtype=complex)
        for rep, blk in zip(h_table.irreps, blocks):
            out += rep.dimension / n * np.einsum("gba,ba->g", rep.matrices.conj(), blk)
        return out

    a, b = a0.copy(), b0.copy()
    best = _vn_norm_coeffs(g_table, _jordan_coeffs(hom, a, b))
    for _ in range(rounds):
        improved = False
        for which in (0, 1):
            fixed = b if which == 0 else a
            lin = linear_map_given(fixed)
            var = a if which == 0 else b
            cj = lin @ var
            val, idx, u, v = _best_g_block(g_table, cj)
            w = np.array([np.vdot(u, rep_mat @ v)
                          for rep_mat in g_table.irreps[idx].matrices])
            grad_c = lin.conj().T @ w.conj()
            grad_blocks = [rep.dimension / n * np.einsum("h,hab->ab", grad_c, rep.matrices)
                           for rep in h_table.irreps]
            new_var = coeffs_of([polar_factor(gb) for gb in grad_blocks])
            if which == 0:
                a = new_var
            else:
                b = new_var
            val_new = _vn_norm_coeffs(g_table, _jordan_coeffs(hom, a, b))
            if val_new > best + 1e-13:
                best = val_new
                improved = True
        if not improved:
            break
    return best


def _best_g_block(table: IrrepTable, coeffs: np.ndarray):
    best_val, best = -1.0, None
    for idx, rep in enumerate(table.irreps):
        blk = np.einsum("g,gab->ab", coeffs, rep.matrices)
        u, s, vh = np.linalg.svd(blk)
        if s[0] > best_val:
            best_val = float(s[0])
            best = (idx, u[:, 0], vh[0].conj())
    idx, u, v = best
    return best_val, idx, u, v


@dataclass(frozen=True, eq=False)
class HomNormReport:
    """Norms of T and T^{-1}, amplified norms, distortion, and witnesses."""

    norm_T: float
    norm_Tinv: float
    level_k_norms: dict[int, tuple[float, float]]
    distortion: float
    witnesses: dict
    optimizer_meta: dict


def hom_norm_report(hom: InducedHom, levels=(1, 2), effort="default",
                    seed: int = 0) -> HomNormReport:
    """Compute ||T||, ||T^{-1}||, the requested amplified norms and distortion.

    Witnesses from lower levels seed the higher levels, so the reported
    level-k values are nondecreasing in k.
    """
    eff = resolve_effort(effort)
    inv = hom.inverse()
    levels = sorted(set(int(k) for k in levels) | {1})
    level_norms: dict[int, tuple[float, float]] = {}
    witnesses: dict = {}
    meta: dict = {}
    hints_f: tuple[Witness, ...] = ()
    hints_i: tuple[Witness, ...] = ()
    for k in levels:
        est_f = level_k_norm(hom, k, effort=eff, seed=seed, hints=hints_f)
        est_i = level_k_norm(inv, k, effort=eff, seed=seed, hints=hints_i)
        level_norms[k] = (est_f.value, est_i.value)
        hints_f += (est_f.witness,)
        hints_i += (est_i.witness,)
        witnesses[k] = (est_f.witness, est_i.witness)
        meta[k] = (est_f.meta, est_i.meta)
    norm_t, norm_tinv = level_norms[1]
    return HomNormReport(
        norm_T=norm_t,
        norm_Tinv=norm_tinv,
        level_k_norms=level_norms,
        distortion=norm_t * norm_tinv,
        witnesses=witnesses,
        optimizer_meta=meta,
    )
