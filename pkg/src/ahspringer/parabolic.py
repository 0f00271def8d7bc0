"""Standard parabolic subgroups of GL_n by block composition.

A composition (b_1, ..., b_r) of n determines the block-upper-triangular
subgroup P, its unipotent radical U_P (identity blocks on the diagonal)
and the nilradical u_P (strictly block-upper matrices).  The nilpotence
class of u_P is r - 1; when that is below p, the degree-(p-1) truncated
exponential is a bijection u_P -> U_P, and that is what eps_P computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import DomainError
from .expmaps import truncated_exp
from .gf import _check_field_params
from .groups import random_invertible
from .matrices import FpMatrix
from .rng import stream


@dataclass(frozen=True)
class Composition:
    """Ordered positive block sizes."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if not blocks:
            raise ValueError("a composition needs at least one block")
        if any(b <= 0 for b in blocks):
            raise ValueError("block sizes must be positive")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        try:
            return cls(tuple(int(s) for s in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad composition {text!r}: {exc}") from exc


@dataclass(frozen=True)
class ParabolicGL:
    """A standard parabolic of GL_n over F_{p^e}."""

    comp: Composition
    p: int
    e: int = 1

    def __post_init__(self):
        _check_field_params(self.p, self.e)

    @property
    def n(self) -> int:
        return self.comp.n

    def block_index(self) -> tuple[int, ...]:
        """block_index()[i] = which block row/column i belongs to."""
        out = []
        for b, size in enumerate(self.comp.blocks):
            out.extend([b] * size)
        return tuple(out)

    def radical_support(self) -> np.ndarray:
        """Boolean (n, n) mask of the strictly-upper-block positions."""
        return _support_mask(self)


@lru_cache(maxsize=None)
def _support_mask(par: "ParabolicGL") -> np.ndarray:
    idx = np.array(par.block_index())
    mask = idx[:, None] < idx[None, :]
    mask.flags.writeable = False
    return mask


@lru_cache(maxsize=None)
def _support_positions(par: "ParabolicGL") -> tuple[tuple[int, int], ...]:
    mask = _support_mask(par)
    return tuple((i, j) for i in range(par.n) for j in range(par.n) if mask[i, j])


def nilradical_basis(par: ParabolicGL) -> list[FpMatrix]:
    """Matrix units spanning u_P, row-major over the block-upper support."""
    mask = par.radical_support()
    return [
        FpMatrix.matrix_unit(par.p, par.e, par.n, i, j)
        for i in range(par.n)
        for j in range(par.n)
        if mask[i, j]
    ]


def in_nilradical(par: ParabolicGL, x: FpMatrix) -> bool:
    if (x.p, x.e, x.n) != (par.p, par.e, par.n):
        return False
    mask = par.radical_support()
    return not x.planes[:, ~mask].any()


@lru_cache(maxsize=None)
def nilpotence_class(par: ParabolicGL) -> int:
    """Length of the descending central series of u_P, computed by
    iterating Lie brackets until the span dies (equals r - 1)."""
    basis = nilradical_basis(par)
    current = linalg.span_basis(basis)
    cls = 0
    while current:
        cls += 1
        brackets = []
        for a in current:
            for b in basis:
                c = a @ b - b @ a
                if not c.is_zero():
                    brackets.append(c)
        current = linalg.span_basis(brackets)
    return cls


def is_restricted(par: ParabolicGL) -> bool:
    """Whether the nilpotence class of U_P is below p."""
    return nilpotence_class(par) < par.p


def eps_p(par: ParabolicGL, x: FpMatrix) -> FpMatrix:
    """The block exponential u_P -> U_P on a restricted parabolic.

    Elements of u_P satisfy x^p = 0 (the class bound gives x^r = 0 with
    r <= p), so the truncated exponential applies exactly.
    """
    if not is_restricted(par):
        raise DomainError(
            f"parabolic {par.comp.blocks} has nilpotence class >= {par.p}"
        )
    if not in_nilradical(par, x):
        raise DomainError("matrix is not in the nilradical of this parabolic")
    return truncated_exp(x)


def random_p_element(par: ParabolicGL, seed: int) -> FpMatrix:
    """Seeded invertible block-upper-triangular matrix in P."""
    st = stream(seed, f"p-element/{par.comp.blocks}/{par.p}/{par.e}")
    n = par.n
    planes = np.zeros((par.e, n, n), dtype=np.int64)
    offset = 0
    for size in par.comp.blocks:
        g = random_invertible(par.p, par.e, size, st)
        planes[:, offset : offset + size, offset : offset + size] = g.planes
        offset += size
    for i, j in _support_positions(par):
        for k in range(par.e):
            planes[k, i, j] = st.below(par.p)
    return FpMatrix(par.p, par.e, planes)


def random_radical_element(par: ParabolicGL, seed: int, index: int = 0) -> FpMatrix:
    """Seeded element of u_P (suite plumbing)."""
    st = stream(seed, f"radical/{par.comp.blocks}/{par.p}/{par.e}", index)
    planes = np.zeros((par.e, par.n, par.n), dtype=np.int64)
    for i, j in _support_positions(par):
        for k in range(par.e):
            planes[k, i, j] = st.below(par.p)
    return FpMatrix(par.p, par.e, planes)


def restricted_compositions(n: int, p: int):
    """All compositions of n whose parabolic is restricted (r - 1 < p)."""
    def parts(total, maxblocks):
        if total == 0:
            yield ()
            return
        if maxblocks == 0:
            return
        for first in range(1, total + 1):
            for rest in parts(total - first, maxblocks - 1):
                yield (first,) + rest

    return [Composition(c) for c in parts(n, p)]
