"""Dense square matrices over F_{p^e} with exact arithmetic.

Entries are stored as ``e`` integer coefficient planes, each an (n, n)
int64 array reduced into [0, p).  With p <= 7 and n <= 8 every
intermediate product fits comfortably in int64 before reduction, so all
arithmetic is exact.  Matrices are immutable once constructed.
"""

from __future__ import annotations

import json

import numpy as np

from .gf import FieldScalar, _check_field_params, quadratic_modulus


def _mat_mul_planes(a, b, p, mod):
    if len(a) == 1:
        return (a[0] @ b[0]) % p
    mb, mc = mod
    hi = a[1] @ b[1]
    return np.stack((
        (a[0] @ b[0] - mc * hi) % p,
        (a[0] @ b[1] + a[1] @ b[0] - mb * hi) % p,
    ))


def _scale_planes(coords, a, p, mod):
    # coords: e field coordinates; a: (e, ...) planes
    if len(a) == 1:
        return (coords[0] * a) % p
    s0, s1 = coords
    mb, mc = mod
    hi = s1 * a[1]
    return np.stack((
        (s0 * a[0] - mc * hi) % p,
        (s0 * a[1] + s1 * a[0] - mb * hi) % p,
    ))


def _outer_planes(col, row, p, mod):
    # field outer product of a column (e, r) with a row (e, c) -> (e, r, c)
    if len(col) == 1:
        return np.outer(col[0], row[0]) % p
    mb, mc = mod
    hi = np.outer(col[1], row[1])
    return np.stack((
        (np.outer(col[0], row[0]) - mc * hi) % p,
        (np.outer(col[0], row[1]) + np.outer(col[1], row[0]) - mb * hi) % p,
    ))


class FpMatrix:
    """An n x n matrix over F_{p^e}."""

    __slots__ = ("p", "e", "n", "planes")

    def __init__(self, p: int, e: int, planes):
        _check_field_params(p, e)
        planes = np.asarray(planes, dtype=np.int64)
        if planes.ndim == 2:
            planes = planes[np.newaxis, :, :]
        if planes.ndim != 3 or planes.shape[0] != e or planes.shape[1] != planes.shape[2]:
            raise ValueError(f"expected ({e}, n, n) coefficient planes, got {planes.shape}")
        planes = planes % p
        planes.flags.writeable = False
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "n", planes.shape[1])
        object.__setattr__(self, "planes", planes)

    def __setattr__(self, name, value):
        raise AttributeError("FpMatrix is immutable")

    @classmethod
    def _wrap(cls, p, e, n, planes):
        # fast path for arithmetic results: planes already reduced mod p
        m = object.__new__(cls)
        planes.flags.writeable = False
        object.__setattr__(m, "p", p)
        object.__setattr__(m, "e", e)
        object.__setattr__(m, "n", n)
        object.__setattr__(m, "planes", planes)
        return m

    @property
    def _mod(self):
        return quadratic_modulus(self.p) if self.e == 2 else None

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, p: int, e: int, n: int) -> "FpMatrix":
        return cls(p, e, np.zeros((e, n, n), dtype=np.int64))

    @classmethod
    def identity(cls, p: int, e: int, n: int) -> "FpMatrix":
        planes = np.zeros((e, n, n), dtype=np.int64)
        planes[0] = np.eye(n, dtype=np.int64)
        return cls(p, e, planes)

    @classmethod
    def from_rows(cls, p: int, e: int, rows) -> "FpMatrix":
        """Build from nested lists of ints (e=1), coordinate pairs, or FieldScalars."""
        n = len(rows)
        planes = np.zeros((e, n, n), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("matrix rows must all have length n")
            for j, v in enumerate(row):
                if isinstance(v, FieldScalar):
                    if (v.p, v.e) != (p, e):
                        raise ValueError("entry field does not match matrix field")
                    coords = v.coords
                elif isinstance(v, int):
                    coords = (v,) + (0,) * (e - 1)
                else:
                    coords = tuple(v)
                    if len(coords) != e:
                        raise ValueError(f"entry {v!r} has wrong coordinate count")
                for k, c in enumerate(coords):
                    planes[k, i, j] = c % p
        return cls(p, e, planes)

    @classmethod
    def matrix_unit(cls, p: int, e: int, n: int, i: int, j: int) -> "FpMatrix":
        planes = np.zeros((e, n, n), dtype=np.int64)
        planes[0, i, j] = 1
        return cls(p, e, planes)

    # -- basic queries ------------------------------------------------

    def entry(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(self.p, self.e, tuple(int(self.planes[k, i, j]) for k in range(self.e)))

    def is_zero(self) -> bool:
        return not self.planes.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return (
            (self.p, self.e, self.n) == (other.p, other.e, other.n)
            and np.array_equal(self.planes, other.planes)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.n, self.planes.tobytes()))

    def __repr__(self):
        if self.e == 1:
            return f"FpMatrix(p={self.p}, {self.planes[0].tolist()})"
        return f"FpMatrix(p={self.p}, e=2, planes={self.planes.tolist()})"

    def _check_match(self, other: "FpMatrix") -> None:
        if (self.p, self.e, self.n) != (other.p, other.e, other.n):
            raise ValueError("matrix shape/field mismatch")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_match(other)
        return FpMatrix._wrap(self.p, self.e, self.n, (self.planes + other.planes) % self.p)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_match(other)
        return FpMatrix._wrap(self.p, self.e, self.n, (self.planes - other.planes) % self.p)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix._wrap(self.p, self.e, self.n, (-self.planes) % self.p)

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_match(other)
        prod = _mat_mul_planes(self.planes, other.planes, self.p, self._mod)
        if prod.ndim == 2:
            prod = prod[np.newaxis, :, :]
        return FpMatrix._wrap(self.p, self.e, self.n, prod)

    def __pow__(self, k: int) -> "FpMatrix":
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = FpMatrix.identity(self.p, self.e, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def scale(self, s) -> "FpMatrix":
        """Multiply by a scalar (FieldScalar or int)."""
        if isinstance(s, int):
            return FpMatrix._wrap(self.p, self.e, self.n, (s % self.p * self.planes) % self.p)
        if (s.p, s.e) != (self.p, self.e):
            raise ValueError("scalar field does not match matrix field")
        return FpMatrix._wrap(
            self.p, self.e, self.n, _scale_planes(s.coords, self.planes, self.p, self._mod)
        )

    def transpose(self) -> "FpMatrix":
        return FpMatrix._wrap(self.p, self.e, self.n, self.planes.transpose(0, 2, 1).copy())

    def trace(self) -> FieldScalar:
        return FieldScalar(
            self.p, self.e,
            tuple(int(np.trace(self.planes[k])) % self.p for k in range(self.e)),
        )

    def frobenius_entries(self) -> "FpMatrix":
        """Apply x -> x^p to every entry (identity when e=1)."""
        if self.e == 1:
            return self
        mb, _ = quadratic_modulus(self.p)
        a0, a1 = self.planes
        return FpMatrix(self.p, 2, np.stack(((a0 - mb * a1) % self.p, (-a1) % self.p)))

    # -- serialization ------------------------------------------------

    def to_json_obj(self) -> dict:
        if self.e == 1:
            entries = self.planes[0].tolist()
        else:
            entries = [
                [[int(self.planes[0, i, j]), int(self.planes[1, i, j])] for j in range(self.n)]
                for i in range(self.n)
            ]
        return {"p": self.p, "e": self.e, "n": self.n, "entries": entries}

    @classmethod
    def from_json_obj(cls, obj) -> "FpMatrix":
        if not isinstance(obj, dict):
            raise ValueError("matrix JSON must be an object")
        for key in ("p", "e", "n", "entries"):
            if key not in obj:
                raise ValueError(f"matrix JSON missing key {key!r}")
        p, e, n, entries = obj["p"], obj["e"], obj["n"], obj["entries"]
        if not (isinstance(p, int) and isinstance(e, int) and isinstance(n, int)):
            raise ValueError("matrix JSON p, e, n must be integers")
        if not (isinstance(entries, list) and len(entries) == n):
            raise ValueError(f"matrix JSON needs {n} rows of entries")
        rows = []
        for i, row in enumerate(entries):
            if not (isinstance(row, list) and len(row) == n):
                raise ValueError(f"matrix JSON row {i} must have {n} entries")
            rows.append([FieldScalar.from_json(p, e, v) for v in row])
        return cls.from_rows(p, e, rows)

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())


def load_matrix(path: str) -> FpMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    try:
        return FpMatrix.from_json_obj(obj)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc
