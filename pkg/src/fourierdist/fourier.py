"""Fourier transform and norms on A(G) and VN(G) for a finite group G.

Conventions.  For an irrep pi the transform of a function f is
F_pi = sum_g f(g) pi(g)^*, and the Fourier-algebra norm is
||f||_A = sum_pi (d_pi / |G|) ||F_pi||_1.  The 1/|G| factor makes the point
mass at the identity have norm exactly 1 and makes ||.||_A the exact dual of
the operator norm on VN(G) under the pairing <sum c_g lambda_g, f> =
sum c_g f(g).  The inverse transform f(g) = (1/|G|) sum_pi d_pi tr(pi(g) F_pi)
round-trips exactly with this choice (see the convention tests).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GroupMismatchError, NumericInputError
from .groups import FiniteGroup
from .irreps import IrrepTable


@dataclass(frozen=True, eq=False)
class AFunction:
    """A complex function on a finite group, i.e. an element of A(G)."""

    group: FiniteGroup
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        object.__setattr__(self, "values", vals)
        if vals.shape != (self.group.order,):
            raise GroupMismatchError("function length must equal the group order")
        vals.setflags(write=False)

    def translate(self, g: int) -> AFunction:
        """Left translate: the function x -> f(g^{-1} x)."""
        sel = self.group.table[self.group.inverses[g]]
        return AFunction(self.group, self.values[sel])


@dataclass(frozen=True, eq=False)
class GroupAlgebraElement:
    """Coefficients c_g of an element sum_g c_g lambda_g of VN(G)."""

    group: FiniteGroup
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        object.__setattr__(self, "coeffs", c)
        if c.shape != (self.group.order,):
            raise GroupMismatchError("coefficient length must equal the group order")
        c.setflags(write=False)


@dataclass(frozen=True, eq=False)
class FourierBlocks:
    """Per-irrep matrix coefficients of a function."""

    table: IrrepTable
    blocks: list[np.ndarray]


def schatten_norm(x: np.ndarray, p) -> float:
    """Schatten p-norm for p in {1, 2, inf} via singular values."""
    x = np.asarray(x, dtype=complex)
    if not np.isfinite(x).all():
        raise NumericInputError("matrix entries must be finite")
    sv = np.linalg.svd(x, compute_uv=False)
    if p == 1:
        return float(sv.sum())
    if p == 2:
        return float(np.sqrt((sv ** 2).sum()))
    if p in (np.inf, float("inf"), "inf"):
        return float(sv.max()) if sv.size else 0.0
    raise ValueError(f"unsupported Schatten exponent {p!r}")


def _require_same_group(obj_group: FiniteGroup, table: IrrepTable):
    if obj_group is not table.group and not np.array_equal(obj_group.table, table.group.table):
        raise GroupMismatchError("function and irrep table live over different groups")


def fourier_transform(f: AFunction, t: IrrepTable) -> FourierBlocks:
    """Blocks F_pi = sum_g f(g) pi(g)^*."""
    _require_same_group(f.group, t)
    blocks = [np.einsum("g,gba->ab", f.values, rep.matrices.conj())
              for rep in t.irreps]
    return FourierBlocks(table=t, blocks=blocks)


def fourier_inverse(b: FourierBlocks) -> AFunction:
    """Inverse transform f(g) = (1/|G|) sum_pi d_pi tr(pi(g) F_pi)."""
    t = b.table
    n = t.group.order
    values = np.zeros(n, dtype=complex)
    for rep, blk in zip(t.irreps, b.blocks):
        if blk.shape != (rep.dimension, rep.dimension):
            raise GroupMismatchError("block shape does not match irrep dimension")
        values += rep.dimension * np.einsum("gab,ba->g", rep.matrices, blk)
    return AFunction(group=t.group, values=values / n)


def a_norm(f: AFunction, t: IrrepTable) -> float:
    """The Fourier-algebra norm sum_pi (d_pi/|G|) ||F_pi||_1."""
    blocks = fourier_transform(f, t)
    n = t.group.order
    return float(sum(rep.dimension / n * schatten_norm(blk, 1)
                     for rep, blk in zip(t.irreps, blocks.blocks)))


def a_norm_contributions(f: AFunction, t: IrrepTable) -> list[dict]:
    """Per-block trace norms and their weighted contributions to ||f||_A."""
    blocks = fourier_transform(f, t)
    n = t.group.order
    out = []
    for rep, blk in zip(t.irreps, blocks.blocks):
        s1 = schatten_norm(blk, 1)
        out.append({"dim": rep.dimension, "s1": s1, "contribution": rep.dimension / n * s1})
    return out


def vn_blocks(x: GroupAlgebraElement, t: IrrepTable) -> list[np.ndarray]:
    """Blocks sum_g c_g pi(g), the image of x in each irreducible summand."""
    _require_same_group(x.group, t)
    return [np.einsum("g,gab->ab", x.coeffs, rep.matrices) for rep in t.irreps]


def vn_norm(x: GroupAlgebraElement, t: IrrepTable) -> float:
    """Operator norm of sum_g c_g lambda_g, i.e. the largest block norm."""
    return max(schatten_norm(blk, np.inf) for blk in vn_blocks(x, t))


def vn_element_from_blocks(t: IrrepTable, blocks: list[np.ndarray]) -> GroupAlgebraElement:
    """Coefficients of the VN(G) element with the given irrep blocks."""
    n = t.group.order
    coeffs = np.zeros(n, dtype=complex)
    for rep, blk in zip(t.irreps, blocks):
        coeffs += rep.dimension * np.einsum("gba,ba->g", rep.matrices.conj(), blk)
    return GroupAlgebraElement(group=t.group, coeffs=coeffs / n)


def pairing(x: GroupAlgebraElement, f: AFunction) -> complex:
    """The duality pairing <x, f> = sum_g c_g f(g)."""
    if x.group.order != f.group.order:
        raise GroupMismatchError("pairing needs matching groups")
    return complex(np.dot(x.coeffs, f.values))


def delta_function(g: FiniteGroup, index: int = 0) -> AFunction:
    values = np.zeros(g.order, dtype=complex)
    values[index] = 1.0
    return AFunction(group=g, values=values)


def function_from_cyclic_coeffs(g: FiniteGroup, coeffs) -> AFunction:
    """The function with values f(k) = sum_j c_j exp(2 pi i j k / n).

    The coefficients are expansion coefficients with respect to the cyclic
    characters of Z_n carried over to g by the index identification; this is
    how reference functions on non-abelian groups of the same order are
    specified.
    """
    c = np.asarray(coeffs, dtype=complex)
    n = g.order
    if c.shape != (n,):
        raise GroupMismatchError("need one coefficient per group element")
    k = np.arange(n)
    chars = np.exp(2j * np.pi * np.outer(np.arange(n), k) / n)
    return AFunction(group=g, values=c @ chars)


def dual_norm_witness(f: AFunction, t: IrrepTable, iters: int = 25,
                      seed: int = 0) -> tuple[float, GroupAlgebraElement]:
    """Maximize |<x, f>| over the unit ball of VN(G) by projected ascent.

    Returns the achieved value (a certified lower bound of ||f||_A, equal to
    it at convergence) and the optimizing element.  Ascent steps follow the
    phase-aligned gradient, projected back into the spectral ball by singular
    value clipping; a final exact alignment step sets each block to the polar
    unitary of the corresponding transform block.
    """
    blocks_f = fourier_transform(f, t).blocks
    n = t.group.order
    rng = np.random.default_rng(seed)
    x = [np.linalg.svd(rng.standard_normal((rep.dimension,) * 2)
                       + 1j * rng.standard_normal((rep.dimension,) * 2))[0]
         for rep in t.irreps]

    def pair(xblocks):
        return sum(rep.dimension / n * np.einsum("ab,ba->", xb, fb)
                   for rep, xb, fb in zip(t.irreps, xblocks, blocks_f))

    def project(m):
        u, s, vh = np.linalg.svd(m)
        return u @ (np.minimum(s, 1.0)[:, None] * vh)

    best = abs(pair(x))
    step = 0.5
    for _ in range(iters):
        p = pair(x)
        phase = p / abs(p) if abs(p) > 0 else 1.0
        x_new = [project(xb + step * np.conj(phase) * rep.dimension / n * fb.conj().T)
                 for rep, xb, fb in zip(t.irreps, x, blocks_f)]
        val = abs(pair(x_new))
        if val >= best:
            best, x = val, x_new
        else:
            step *= 0.5
    # exact alignment: block-wise polar maximizer of Re tr(X F)
    aligned = []
    for fb in blocks_f:
        u, _, vh = np.linalg.svd(fb)
        aligned.append((u @ vh).conj().T)
    val = abs(pair(aligned))
    if val >= best:
        best, x = val, aligned
    return float(best), vn_element_from_blocks(t, x)
