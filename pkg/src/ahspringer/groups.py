"""Classical matrix groups over F_{p^e}: GL, SL, SO, Sp.

Covers nilpotent generation by Jordan type, group / Lie algebra
membership for the classical forms, nilpotent order, exact centralizer
computation, and seeded random sampling of nilpotents and group
elements.  The default bilinear forms are antidiagonal so that the
strictly upper triangular part of each Lie algebra is a nilpotent
subalgebra we can sample from directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import DomainError
from .gf import FieldScalar, _check_field_params
from .matrices import FpMatrix
from .rng import Stream, stream

KINDS = ("GL", "SL", "SO", "Sp")


@dataclass(frozen=True)
class JordanType:
    """A partition (weakly decreasing positive block sizes)."""

    partition: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.partition)
        if not parts:
            raise ValueError("a Jordan type needs at least one block")
        if any(x <= 0 for x in parts):
            raise ValueError("Jordan block sizes must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("Jordan block sizes must be weakly decreasing")
        object.__setattr__(self, "partition", parts)

    @property
    def n(self) -> int:
        return sum(self.partition)


@dataclass(frozen=True)
class GroupSpec:
    """One of GL_n, SL_n, SO_n, Sp_n, with an optional explicit bilinear form."""

    kind: str
    n: int
    form: FpMatrix | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if self.kind == "Sp" and self.n % 2:
            raise ValueError("Sp requires even dimension")
        if self.form is not None:
            if self.form.n != self.n:
                raise ValueError("form dimension does not match group dimension")
            if self.kind in ("GL", "SL"):
                raise ValueError(f"{self.kind} does not carry a bilinear form")
            _validate_form(self.kind, self.form)

    def form_for(self, p: int, e: int) -> FpMatrix | None:
        """The bilinear form over F_{p^e}; checks the good-prime constraint."""
        if self.kind in ("GL", "SL"):
            return None
        if p == 2:
            raise ValueError(f"{self.kind} is not supported in characteristic 2")
        if self.form is not None:
            if (self.form.p, self.form.e) != (p, e):
                raise ValueError("form field does not match requested field")
            return self.form
        return default_form(self.kind, self.n, p, e)

    def has_default_form(self, p: int, e: int) -> bool:
        if self.kind in ("GL", "SL"):
            return True
        return self.form is None or self.form == default_form(self.kind, self.n, p, e)


def _validate_form(kind: str, form: FpMatrix) -> None:
    if linalg.det(form).is_zero():
        raise ValueError("bilinear form must be invertible")
    if kind == "Sp" and form.transpose() != -form:
        raise ValueError("Sp form must be skew-symmetric")
    if kind == "SO" and form.transpose() != form:
        raise ValueError("SO form must be symmetric")


@lru_cache(maxsize=None)
def default_form(kind: str, n: int, p: int, e: int) -> FpMatrix:
    """Antidiagonal form: all ones for SO; lower antidiagonal half -1 for Sp."""
    planes = np.zeros((e, n, n), dtype=np.int64)
    for i in range(n):
        if kind == "Sp" and i >= n // 2:
            planes[0, i, n - 1 - i] = p - 1
        else:
            planes[0, i, n - 1 - i] = 1
    return FpMatrix(p, e, planes)


def jordan_nilpotent(t: JordanType, p: int, e: int = 1) -> FpMatrix:
    """Block-diagonal nilpotent with ones on each block's superdiagonal."""
    _check_field_params(p, e)
    n = t.n
    planes = np.zeros((e, n, n), dtype=np.int64)
    offset = 0
    for size in t.partition:
        for i in range(size - 1):
            planes[0, offset + i, offset + i + 1] = 1
        offset += size
    return FpMatrix(p, e, planes)


def nilpotency_degree(x: FpMatrix) -> int:
    """Least d >= 1 with x^d = 0; DomainError when x is not nilpotent."""
    y = x
    for d in range(1, x.n + 1):
        if y.is_zero():
            return d
        y = y @ x
    raise DomainError("matrix is not nilpotent")


def is_nilpotent(x: FpMatrix) -> bool:
    return (x ** x.n).is_zero()


def nilpotent_order(x: FpMatrix) -> int:
    """Least m with x^(p^m) = 0 (0 iff x = 0); DomainError if not nilpotent."""
    if not is_nilpotent(x):
        raise DomainError("matrix is not nilpotent")
    m = 0
    y = x
    while not y.is_zero():
        y = y ** x.p
        m += 1
    return m


def unipotent_order_exponent(u: FpMatrix) -> int:
    """Least j with u^(p^j) = identity; DomainError if u is not unipotent."""
    ident = FpMatrix.identity(u.p, u.e, u.n)
    if not is_nilpotent(u - ident):
        raise DomainError("matrix is not unipotent")
    j = 0
    y = u
    while y != ident:
        y = y ** u.p
        j += 1
    return j


def in_group(spec: GroupSpec, g: FpMatrix) -> bool:
    if g.n != spec.n:
        raise ValueError("matrix dimension does not match group")
    form = spec.form_for(g.p, g.e)
    if spec.kind == "GL":
        return not linalg.det(g).is_zero()
    if spec.kind == "SL":
        return linalg.det(g) == FieldScalar.one(g.p, g.e)
    preserves = (g.transpose() @ form @ g) == form
    if spec.kind == "SO":
        return preserves and linalg.det(g) == FieldScalar.one(g.p, g.e)
    return preserves


def in_lie_algebra(spec: GroupSpec, x: FpMatrix) -> bool:
    if x.n != spec.n:
        raise ValueError("matrix dimension does not match group")
    form = spec.form_for(x.p, x.e)
    if spec.kind == "GL":
        return True
    if spec.kind == "SL":
        return x.trace().is_zero()
    return (x.transpose() @ form + form @ x).is_zero()


@dataclass(frozen=True)
class CentralizerSpace:
    """A basis of { Z : ZA = AZ } inside the full matrix algebra."""

    dimension: int
    basis: tuple[FpMatrix, ...]


def commutator_map_planes(a: FpMatrix):
    """Planes of the n^2 x n^2 matrix of Z -> AZ - ZA on row-major vec(Z)."""
    n = a.n
    eye = np.eye(n, dtype=np.int64)
    planes = []
    for k in range(a.e):
        plane = np.kron(a.planes[k], eye) - np.kron(eye, a.planes[k].T)
        planes.append(plane % a.p)
    return np.stack(planes)


def centralizer_space(a: FpMatrix) -> CentralizerSpace:
    vecs = linalg.null_space_planes(commutator_map_planes(a), a.p, a.e)
    basis = tuple(FpMatrix(a.p, a.e, v.reshape(a.e, a.n, a.n)) for v in vecs)
    return CentralizerSpace(dimension=len(basis), basis=basis)


def jordan_type_of(x: FpMatrix) -> JordanType:
    """Jordan type of a nilpotent matrix from its power-rank sequence."""
    if not is_nilpotent(x):
        raise DomainError("matrix is not nilpotent")
    ranks = [x.n]
    y = x
    while ranks[-1] > 0:
        ranks.append(linalg.rank(y))
        y = y @ x
    # parts >= k appear (rank x^(k-1) - rank x^k) times
    counts = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    parts = []
    for size in range(len(counts), 0, -1):
        copies = counts[size - 1] - (counts[size] if size < len(counts) else 0)
        parts.extend([size] * copies)
    parts.sort(reverse=True)
    return JordanType(tuple(parts))


# -- sampling ----------------------------------------------------------


def random_scalar(p: int, e: int, st: Stream) -> FieldScalar:
    return FieldScalar(p, e, tuple(st.below(p) for _ in range(e)))


def random_matrix(p: int, e: int, n: int, st: Stream) -> FpMatrix:
    planes = np.array(
        [[[st.below(p) for _ in range(n)] for _ in range(n)] for _ in range(e)],
        dtype=np.int64,
    )
    return FpMatrix(p, e, planes)


def random_invertible(p: int, e: int, n: int, st: Stream) -> FpMatrix:
    while True:
        g = random_matrix(p, e, n, st)
        if not linalg.det(g).is_zero():
            return g


@lru_cache(maxsize=None)
def upper_nilradical_basis(kind: str, n: int, p: int, e: int, lower: bool = False) -> tuple[FpMatrix, ...]:
    """Basis of Lie(G) intersected with the strictly upper (or lower) triangle.

    For GL/SL these are just the matrix units; for SO/Sp the linear
    condition X^T J + J X = 0 is solved on the triangular coordinates.
    """
    positions = [(i, j) for i in range(n) for j in range(n) if (i > j if lower else i < j)]
    if kind in ("GL", "SL"):
        return tuple(FpMatrix.matrix_unit(p, e, n, i, j) for i, j in positions)
    GroupSpec(kind, n).form_for(p, e)  # validates the good-prime constraint
    # the form has F_p entries, so an F_p basis spans the F_{p^e} solutions
    form = default_form(kind, n, p, 1)
    cols = np.zeros((1, n * n, len(positions)), dtype=np.int64)
    for idx, (i, j) in enumerate(positions):
        unit = FpMatrix.matrix_unit(p, 1, n, i, j)
        cond = unit.transpose() @ form + form @ unit
        cols[0, :, idx] = cond.planes[0].reshape(n * n)
    vecs = linalg.null_space_planes(cols, p, 1)
    basis = []
    for v in vecs:
        planes = np.zeros((e, n, n), dtype=np.int64)
        for idx, (i, j) in enumerate(positions):
            planes[0, i, j] = v[0, idx]
        basis.append(FpMatrix(p, e, planes))
    return tuple(basis)


def _combine(basis, p: int, e: int, st: Stream) -> FpMatrix:
    first = basis[0]
    acc = FpMatrix.zeros(p, e, first.n)
    for b in basis:
        acc = acc + b.scale(random_scalar(p, e, st))
    return acc


def random_group_element(spec: GroupSpec, p: int, e: int, st: Stream) -> FpMatrix:
    """A pseudo-random element of G(F_{p^e}).

    GL/SL use rejection-sampled invertible matrices (SL rescales one row
    by 1/det); SO/Sp multiply exponentials of nilradical elements from
    both triangles.
    """
    if spec.kind == "GL":
        return random_invertible(p, e, spec.n, st)
    if spec.kind == "SL":
        g = random_invertible(p, e, spec.n, st)
        d = linalg.det(g)
        planes = g.planes.copy()
        from .matrices import _scale_planes

        planes[:, 0, :] = _scale_planes(d.inverse().coords, planes[:, 0, :], p, g._mod)
        return FpMatrix(p, e, planes)
    from .expmaps import ah_exp

    upper = upper_nilradical_basis(spec.kind, spec.n, p, e)
    lower = upper_nilradical_basis(spec.kind, spec.n, p, e, lower=True)
    g = FpMatrix.identity(p, e, spec.n)
    for basis in (upper, lower, upper):
        if basis:
            g = g @ ah_exp(_combine(basis, p, e, st))
    return g


_SAMPLE_CAP = 3000


def _jordan_type_satisfiable(kind: str, n: int, t: JordanType) -> bool:
    if t.n != n:
        return False
    if kind in ("GL", "SL"):
        return True
    mult = {}
    for part in t.partition:
        mult[part] = mult.get(part, 0) + 1
    if kind == "Sp":
        return all(mult[part] % 2 == 0 for part in mult if part % 2 == 1)
    return all(mult[part] % 2 == 0 for part in mult if part % 2 == 0)


def random_nilpotent(
    spec: GroupSpec,
    jordan_type: JordanType | str,
    seed: int,
    p: int,
    e: int = 1,
) -> FpMatrix:
    """Seeded nilpotent element of Lie(G), optionally of a given Jordan type.

    Requires the default antidiagonal form (the triangular sampling
    needs it).  Deterministic for fixed arguments.
    """
    if not spec.has_default_form(p, e):
        raise ValueError("random_nilpotent requires the default antidiagonal form")
    type_label = "any" if jordan_type == "any" else ",".join(map(str, jordan_type.partition))
    st = stream(seed, f"nilpotent/{spec.kind}/{spec.n}/{p}/{e}/{type_label}")
    if jordan_type != "any":
        if not _jordan_type_satisfiable(spec.kind, spec.n, jordan_type):
            raise DomainError(
                f"Jordan type {jordan_type.partition} is not realizable in {spec.kind}_{spec.n}"
            )
        if spec.kind in ("GL", "SL"):
            x0 = jordan_nilpotent(jordan_type, p, e)
            g = random_invertible(p, e, spec.n, st)
            return g @ x0 @ linalg.inv(g)
        for _ in range(_SAMPLE_CAP):
            x = _sample_lie_nilpotent(spec, p, e, st)
            if jordan_type_of(x) == jordan_type:
                return x
        raise DomainError(
            f"could not realize Jordan type {jordan_type.partition} in {spec.kind}_{spec.n}"
        )
    return _sample_lie_nilpotent(spec, p, e, st)


def _sample_lie_nilpotent(spec: GroupSpec, p: int, e: int, st: Stream) -> FpMatrix:
    basis = upper_nilradical_basis(spec.kind, spec.n, p, e)
    if not basis:
        return FpMatrix.zeros(p, e, spec.n)
    x = _combine(basis, p, e, st)
    if st.below(2):
        from .expmaps import ah_exp

        lower = upper_nilradical_basis(spec.kind, spec.n, p, e, lower=True)
        g = ah_exp(_combine(lower, p, e, st)) if lower else FpMatrix.identity(p, e, spec.n)
        g = g @ ah_exp(_combine(basis, p, e, st))
        x = g @ x @ linalg.inv(g)
    return x


def enumerate_nilpotents(p: int, n: int, e: int = 1):
    """Every nilpotent matrix in gl_n(F_{p^e}); only sane for tiny p^n."""
    total = p ** (e * n * n)
    if total > 600000:
        raise ValueError("enumeration space too large")
    for code in range(total):
        planes = np.zeros((e, n, n), dtype=np.int64)
        c = code
        for k in range(e):
            for i in range(n):
                for j in range(n):
                    planes[k, i, j] = c % p
                    c //= p
        x = FpMatrix(p, e, planes)
        if is_nilpotent(x):
            yield x
