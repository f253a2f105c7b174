"""Maximization of block-image norms over products of spectral unit balls.

The problems solved here all have the shape: a fixed linear map L sends a
tuple of square complex matrices (one per input block) to a tuple of output
blocks, and we want sup ||L(X)||_max-block over max_sigma ||X_sigma|| <= 1.
The objective is convex, so every reported value is the exact evaluation at
a feasible witness and therefore a certified lower bound of the supremum.

Three candidate generators are combined and the best witness kept:
multi-start projected subgradient ascent (steps along the top singular pair
of the leading output block, singular-value clipping as projection), an
alternating exact phase that replaces each input block by the polar factor
of its gradient block (monotone, usually attains the optimum), and a coarse
random-sampling oracle over unitary tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class Effort:
    """Optimizer budget; larger budgets only extend the candidate set."""

    restarts: int = 64
    iterations: int = 500
    samples: int = 100_000
    polish_rounds: int = 60
    step: float = 0.1

    def scaled(self, restarts=None, iterations=None, samples=None) -> Effort:
        return replace(
            self,
            restarts=self.restarts if restarts is None else restarts,
            iterations=self.iterations if iterations is None else iterations,
            samples=self.samples if samples is None else samples,
        )

    def for_scan(self) -> Effort:
        """Reduced per-item budget used inside exhaustive bijection scans."""
        return Effort(
            restarts=max(3, self.restarts // 16),
            iterations=min(self.iterations, 80),
            samples=max(1024, self.samples // 64),
            polish_rounds=self.polish_rounds,
            step=self.step,
        )


EFFORT_PRESETS = {
    "low": Effort(restarts=16, iterations=200, samples=10_000),
    "default": Effort(),
    "high": Effort(restarts=200, iterations=800, samples=1_000_000),
}


def resolve_effort(effort) -> Effort:
    if isinstance(effort, Effort):
        return effort
    if effort is None:
        return EFFORT_PRESETS["default"]
    try:
        return EFFORT_PRESETS[effort]
    except KeyError:
        raise ValueError(f"unknown effort {effort!r}; expected one of "
                         f"{sorted(EFFORT_PRESETS)} or an Effort instance")


def haar_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    """Haar-distributed unitary from the QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r).copy()
    ph /= np.abs(ph)
    return q * ph


def top_singular_value(m: np.ndarray) -> float:
    """Largest singular value, with closed forms for 1x1 and 2x2 blocks."""
    d = m.shape[0]
    if d == 1:
        return float(abs(m[0, 0]))
    if d == 2:
        frob2 = float((m.real ** 2 + m.imag ** 2).sum())
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        gap = math.sqrt(max(frob2 * frob2 - 4.0 * abs(det) ** 2, 0.0))
        return math.sqrt((frob2 + gap) / 2.0)
    return float(np.linalg.svd(m, compute_uv=False)[0])


def clip_to_ball(m: np.ndarray) -> np.ndarray:
    """Project onto the spectral unit ball by clipping singular values."""
    if m.shape[0] == 1:
        a = abs(m[0, 0])
        return m if a <= 1.0 else m / a
    if top_singular_value(m) <= 1.0:
        return m
    u, s, vh = np.linalg.svd(m)
    return u @ (np.minimum(s, 1.0)[:, None] * vh)


def polar_factor(m: np.ndarray) -> np.ndarray:
    if m.shape[0] == 1:
        a = abs(m[0, 0])
        return m / a if a > 0 else np.ones_like(m)
    u, _, vh = np.linalg.svd(m)
    return u @ vh


class BlockLinearMap:
    """The linear map between block tuples, given by kernels K[out][in].

    K[i][j] has shape (dout, dout, din, din); at amplification level k each
    input block is a (k*din, k*din) matrix and the map acts as the identity
    on the k-index:  Y[i A j B] = sum K[A B a b] X[i a j b].  The map is
    materialized once as a flat matrix so that apply/adjoint are single
    matvecs over concatenated vectorized blocks.
    """

    def __init__(self, kernels: list[list[np.ndarray]], dims_in: list[int],
                 dims_out: list[int], k: int = 1):
        self.kernels = kernels
        self.dims_in = dims_in
        self.dims_out = dims_out
        self.k = k
        self.sizes_in = [k * d for d in dims_in]
        self.sizes_out = [k * d for d in dims_out]
        self._off_in = np.cumsum([0] + [s * s for s in self.sizes_in])
        self._off_out = np.cumsum([0] + [s * s for s in self.sizes_out])
        self.matrix = self._materialize()
        self.matrix_h = self.matrix.conj().T

    def _materialize(self) -> np.ndarray:
        k = self.k
        mat = np.zeros((self._off_out[-1], self._off_in[-1]), dtype=complex)
        eye_k = np.eye(k)
        for i, dout in enumerate(self.dims_out):
            for j, din in enumerate(self.dims_in):
                # flat[(i,A,j',B), (i2,a,j2,b)] = eye_k[i,i2] K[A,B,a,b] eye_k[j',j2]
                kern = self.kernels[i][j]
                big = np.einsum("pr,ABab,qs->pAqBrasb", eye_k, kern, eye_k,
                                optimize=True)
                rows = (k * dout) ** 2
                cols = (k * din) ** 2
                mat[self._off_out[i]:self._off_out[i + 1],
                    self._off_in[j]:self._off_in[j + 1]] = big.reshape(rows, cols)
        return mat

    def vec_in(self, blocks: list[np.ndarray]) -> np.ndarray:
        return np.concatenate([b.ravel() for b in blocks])

    def unvec_in(self, v: np.ndarray) -> list[np.ndarray]:
        return [v[self._off_in[j]:self._off_in[j + 1]].reshape(s, s)
                for j, s in enumerate(self.sizes_in)]

    def unvec_out(self, v: np.ndarray) -> list[np.ndarray]:
        return [v[self._off_out[i]:self._off_out[i + 1]].reshape(s, s)
                for i, s in enumerate(self.sizes_out)]

    def apply(self, blocks: list[np.ndarray]) -> list[np.ndarray]:
        return self.unvec_out(self.matrix @ self.vec_in(blocks))

    def adjoint(self, blocks_out: list[np.ndarray]) -> list[np.ndarray]:
        vec = np.concatenate([b.ravel() for b in blocks_out])
        return self.unvec_in(self.matrix_h @ vec)

    def apply_batch(self, stacks: list[np.ndarray]) -> list[np.ndarray]:
        """Batched apply; stacks[j] has shape (N, k*din, k*din)."""
        n_batch = stacks[0].shape[0]
        flat = np.concatenate([s.reshape(n_batch, -1) for s in stacks], axis=1)
        out_flat = flat @ self.matrix.T
        return [out_flat[:, self._off_out[i]:self._off_out[i + 1]].reshape(n_batch, s, s)
                for i, s in enumerate(self.sizes_out)]


def _best_block(blocks: list[np.ndarray]):
    """Largest block spectral norm with its top singular pair."""
    vals = [top_singular_value(blk) for blk in blocks]
    i = int(np.argmax(vals))
    blk = blocks[i]
    if blk.shape[0] == 1:
        a = abs(blk[0, 0])
        u = blk[:, 0] / a if a > 0 else np.ones(1, dtype=complex)
        return vals[i], i, u, np.ones(1, dtype=complex)
    u, s, vh = np.linalg.svd(blk)
    return float(s[0]), i, u[:, 0], vh[0].conj()


def _objective(blocks: list[np.ndarray]) -> float:
    return max(top_singular_value(blk) for blk in blocks)


def _gradient(linmap: BlockLinearMap, idx: int, u: np.ndarray, v: np.ndarray):
    seed_blocks = [np.zeros((linmap.k * d,) * 2, dtype=complex) for d in linmap.dims_out]
    seed_blocks[idx] = np.outer(u, v.conj())
    return linmap.adjoint(seed_blocks)


def _ascend(linmap: BlockLinearMap, start: list[np.ndarray], effort: Effort):
    """One restart: projected subgradient ascent then exact polishing."""
    x = [clip_to_ball(b) for b in start]
    y = linmap.apply(x)
    val, idx, u, v = _best_block(y)
    best_val, best_x = val, [b.copy() for b in x]
    step = effort.step
    stall = 0
    for _ in range(effort.iterations):
        grad = _gradient(linmap, idx, u, v)
        accepted = False
        for _ in range(3):
            x_try = [clip_to_ball(xb + step * gb) for xb, gb in zip(x, grad)]
            val_try = _objective(linmap.apply(x_try))
            if val_try > val:
                x, val = x_try, val_try
                step = min(step * 1.25, 1.0)
                accepted = True
                break
            step *= 0.5
        if accepted:
            y = linmap.apply(x)
            val, idx, u, v = _best_block(y)
            if val > best_val + 1e-14:
                best_val, best_x = val, [b.copy() for b in x]
                stall = 0
            else:
                stall += 1
        else:
            stall += 1
        if stall >= 12:
            break
    # alternating exact phase: maximize the current linearization in closed form
    x = best_x
    val, idx, u, v = _best_block(linmap.apply(x))
    stall = 0
    for _ in range(effort.polish_rounds):
        grad = _gradient(linmap, idx, u, v)
        x = [polar_factor(gb) for gb in grad]
        val, idx, u, v = _best_block(linmap.apply(x))
        if val > best_val + 1e-14:
            best_val, best_x = val, [b.copy() for b in x]
            stall = 0
        else:
            stall += 1
            if stall >= 3:
                break
    return best_val, best_x


def _sample_oracle(linmap: BlockLinearMap, total: int, seed: int):
    """Coarse oracle: best objective over random unitary tuples."""
    best_val, best_x = -1.0, None
    chunk = 2048
    done = 0
    ci = 0
    while done < total:
        m = min(chunk, total - done)
        rng = np.random.default_rng([seed, 90_000 + ci])
        stacks = []
        for d in linmap.dims_in:
            dd = linmap.k * d
            z = (rng.standard_normal((m, dd, dd)) + 1j * rng.standard_normal((m, dd, dd)))
            q, r = np.linalg.qr(z)
            ph = np.einsum("nii->ni", r).copy()
            ph /= np.abs(ph)
            stacks.append(q * ph[:, None, :])
        images = linmap.apply_batch(stacks)
        norms = np.stack([np.linalg.svd(img, compute_uv=False)[:, 0] for img in images])
        vals = norms.max(axis=0)
        j = int(vals.argmax())
        if vals[j] > best_val:
            best_val = float(vals[j])
            best_x = [s[j] for s in stacks]
        done += m
        ci += 1
    return best_val, best_x


def maximize_block_image(linmap: BlockLinearMap, effort: Effort, seed: int = 0,
                         extra_starts: tuple = (), use_sampling: bool = True):
    """Best feasible witness found for sup ||L(X)|| over the unit polyball.

    Returns (value, witness_blocks, meta).  The identity tuple is always one
    of the starts, so the result is at least the objective at the identity.
    """
    k = linmap.k
    starts: list[list[np.ndarray]] = [
        [np.eye(k * d, dtype=complex) for d in linmap.dims_in]
    ]
    starts.extend([b.copy() for b in s] for s in extra_starts)
    for r in range(effort.restarts):
        rng = np.random.default_rng([seed, 1000 + r])
        if r % 2 == 0:
            starts.append([haar_unitary(rng, k * d) for d in linmap.dims_in])
        else:
            starts.append([
                (rng.standard_normal((k * d,) * 2) + 1j * rng.standard_normal((k * d,) * 2))
                / np.sqrt(2 * k * d)
                for d in linmap.dims_in
            ])
    best_val, best_x, best_src = -1.0, None, "start"
    for si, start in enumerate(starts):
        val, x = _ascend(linmap, start, effort)
        if val > best_val:
            best_val, best_x = val, x
            best_src = "ascent" if si > 0 else "identity-start"
    meta = {
        "restarts": effort.restarts,
        "iterations": effort.iterations,
        "samples": effort.samples if use_sampling else 0,
        "converged": True,
    }
    if use_sampling and effort.samples > 0:
        s_val, s_x = _sample_oracle(linmap, effort.samples, seed)
        meta["sampling_value"] = s_val
        if s_val > best_val:
            best_val, best_x = s_val, s_x
            best_src = "sampling"
            # the coarse oracle beating the ascent signals under-convergence
            meta["converged"] = False
    meta["best_source"] = best_src
    return best_val, best_x, meta
