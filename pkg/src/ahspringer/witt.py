"""Witt vectors of length m <= 3 over F_{p^e}, additive group only.

The sum polynomials S_0, ..., S_{m-1} are computed once over Z from the
ghost components w_n(x) = sum_{i<=n} p^i x_i^(p^(n-i)) by the exact
recursion

    p^n S_n = w_n(a) + w_n(b) - sum_{i<n} p^i S_i^(p^(n-i)),

asserting exact divisibility at every step (a failed division would be
a correctness bug, never a rounding issue).  The reduced polynomials are
cached per (p, m) and evaluated over any F_{p^e}.  Length is capped at
m = 3; the symbolic S_2 is the largest polynomial the desk-scale suites
need.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import FieldScalar, _check_field_params

MAX_LENGTH = 3


class ZPoly:
    """Multivariate polynomial with integer coefficients.

    ``terms`` maps exponent tuples (one slot per variable) to nonzero
    integer coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[tuple(mono)] = self.terms.get(tuple(mono), 0) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def const(cls, nvars: int, c: int) -> "ZPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, index: int) -> "ZPoly":
        mono = [0] * nvars
        mono[index] = 1
        return cls(nvars, {tuple(mono): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"ZPoly({self.nvars}, {self.terms!r})"

    def __add__(self, other: "ZPoly") -> "ZPoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return ZPoly(self.nvars, out)

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) - c
        return ZPoly(self.nvars, out)

    def __neg__(self) -> "ZPoly":
        return ZPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(x + y for x, y in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return ZPoly(self.nvars, out)

    def __rmul__(self, k: int) -> "ZPoly":
        return ZPoly(self.nvars, {m: k * c for m, c in self.terms.items()})

    def __pow__(self, k: int) -> "ZPoly":
        result = ZPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, k: int) -> "ZPoly":
        out = {}
        for mono, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"coefficient {c} not divisible by {k}")
            out[mono] = q
        return ZPoly(self.nvars, out)

    def reduce_mod(self, p: int) -> "ZPoly":
        return ZPoly(self.nvars, {m: c % p for m, c in self.terms.items()})

    def eval(self, values, one):
        """Evaluate at ring elements supporting *, +, and int * element."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        # power cache per variable
        maxdeg = [0] * self.nvars
        for mono in self.terms:
            for i, k in enumerate(mono):
                maxdeg[i] = max(maxdeg[i], k)
        pows = []
        for i, v in enumerate(values):
            col = [one]
            for _ in range(maxdeg[i]):
                col.append(col[-1] * v)
            pows.append(col)
        total = None
        for mono, c in self.terms.items():
            term = one
            for i, k in enumerate(mono):
                if k:
                    term = term * pows[i][k]
            term = c * term
            total = term if total is None else total + term
        if total is None:
            return 0 * one
        return total


def _ghost(nvars: int, var_indices, p: int, n: int) -> ZPoly:
    # w_n(x) = sum_{i<=n} p^i x_i^(p^(n-i))
    acc = ZPoly(nvars, {})
    for i in range(n + 1):
        acc = acc + (p ** i) * (ZPoly.var(nvars, var_indices[i]) ** (p ** (n - i)))
    return acc


@lru_cache(maxsize=None)
def witt_sum_polys(p: int, m: int) -> tuple[ZPoly, ...]:
    """The integral sum polynomials S_0..S_{m-1} in a_0..a_{m-1}, b_0..b_{m-1}.

    Variables 0..m-1 are the a-coordinates, m..2m-1 the b-coordinates.
    """
    _check_field_params(p, 1)
    if m < 1:
        raise ValueError("length must be >= 1")
    if m > MAX_LENGTH:
        raise ValueError(f"Witt length {m} unsupported (max {MAX_LENGTH})")
    nvars = 2 * m
    avars = list(range(m))
    bvars = list(range(m, 2 * m))
    polys: list[ZPoly] = []
    for n in range(m):
        rhs = _ghost(nvars, avars, p, n) + _ghost(nvars, bvars, p, n)
        for i in range(n):
            rhs = rhs - (p ** i) * (polys[i] ** (p ** (n - i)))
        polys.append(rhs.exact_div(p ** n))
    return tuple(polys)


@lru_cache(maxsize=None)
def _sum_polys_mod_p(p: int, m: int) -> tuple[ZPoly, ...]:
    return tuple(s.reduce_mod(p) for s in witt_sum_polys(p, m))


@dataclass(frozen=True)
class WittVector:
    """Length-m Witt vector with entries in F_{p^e}."""

    p: int
    e: int
    m: int
    entries: tuple[FieldScalar, ...]

    def __post_init__(self):
        _check_field_params(self.p, self.e)
        if self.m < 1 or self.m > MAX_LENGTH:
            raise ValueError(f"Witt length must be 1..{MAX_LENGTH}")
        if len(self.entries) != self.m:
            raise ValueError("entry count does not match length")
        for a in self.entries:
            if (a.p, a.e) != (self.p, self.e):
                raise ValueError("entry field mismatch")

    @classmethod
    def from_ints(cls, p: int, m: int, values, e: int = 1) -> "WittVector":
        return cls(p, e, m, tuple(FieldScalar.from_int(p, e, v) for v in values))

    @classmethod
    def zero(cls, p: int, m: int, e: int = 1) -> "WittVector":
        return cls.from_ints(p, m, [0] * m, e)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def to_json(self) -> list:
        return [a.to_json() for a in self.entries]

    def __str__(self):
        if self.e == 1:
            return ",".join(str(a.lift()) for a in self.entries)
        return ",".join(f"({a.coords[0]}+{a.coords[1]}w)" for a in self.entries)


def _check_pair(u: WittVector, v: WittVector) -> None:
    if (u.p, u.e, u.m) != (v.p, v.e, v.m):
        raise ValueError("Witt vector parameter mismatch")


def witt_add(u: WittVector, v: WittVector) -> WittVector:
    """Group law, via the mod-p reduced sum polynomials."""
    _check_pair(u, v)
    polys = _sum_polys_mod_p(u.p, u.m)
    values = u.entries + v.entries
    one = FieldScalar.one(u.p, u.e)
    return WittVector(u.p, u.e, u.m, tuple(s.eval(values, one) for s in polys))


def witt_neg(w: WittVector) -> WittVector:
    """Group inverse, solved coordinate-by-coordinate.

    Each S_k is b_k plus terms in lower-index coordinates, so setting
    b_k = 0 and negating the evaluation yields the k-th inverse entry.
    """
    polys = _sum_polys_mod_p(w.p, w.m)
    one = FieldScalar.one(w.p, w.e)
    zero = FieldScalar.zero(w.p, w.e)
    neg_entries: list[FieldScalar] = []
    for k in range(w.m):
        values = w.entries + tuple(neg_entries) + (zero,) * (w.m - k)
        neg_entries.append(-polys[k].eval(values, one))
    return WittVector(w.p, w.e, w.m, tuple(neg_entries))


def witt_pow_p(w: WittVector) -> WittVector:
    """The p-th power map: (a_0, ..., a_{m-1}) -> (0, a_0^p, ..., a_{m-2}^p)."""
    entries = (FieldScalar.zero(w.p, w.e),) + tuple(a.frobenius() for a in w.entries[:-1])
    return WittVector(w.p, w.e, w.m, entries)


def witt_order(w: WittVector) -> int:
    """Order of w in the additive group: p^j, or 1 for the identity."""
    order = 1
    v = w
    while not v.is_zero():
        v = witt_pow_p(v)
        order *= w.p
    return order


def witt_from_integer(p: int, m: int, value: int) -> WittVector:
    """The image of an integer under Z -> W_m(F_p), n -> n * (1, 0, ..., 0).

    This is the independent oracle for the group law: it realizes the
    isomorphism Z/p^m = W_m(F_p).  Base field only (e = 1).
    """
    unit = WittVector.from_ints(p, m, [1] + [0] * (m - 1))
    acc = WittVector.zero(p, m)
    for _ in range(value % (p ** m)):
        acc = witt_add(acc, unit)
    return acc


def witt_entries_from_string(p: int, m: int, text: str, e: int = 1) -> WittVector:
    """Parse the CLI form "a_0,a_1,...": integer entries lifted into F_{p^e}."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != m:
        raise ValueError(f"expected {m} comma-separated entries, got {len(parts)}")
    try:
        values = [int(s) for s in parts]
    except ValueError as exc:
        raise ValueError(f"Witt vector entries must be integers: {text!r}") from exc
    return WittVector.from_ints(p, m, values, e)
