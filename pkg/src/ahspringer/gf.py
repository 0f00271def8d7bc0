"""Exact scalar arithmetic in F_p and the quadratic extension F_{p^2}.

Elements are represented by their coordinates in [0, p) over the basis
{1, w}, where w is a root of a fixed irreducible monic quadratic.  Only
extension degrees 1 and 2 are supported; everything is plain integer
arithmetic, no floating point anywhere.
"""

from __future__ import annotations

from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")


@lru_cache(maxsize=None)
def quadratic_modulus(p: int) -> tuple[int, int]:
    """Coefficients (b, c) of the fixed irreducible x^2 + b*x + c over F_p.

    The first irreducible polynomial in lexicographic order on (b, c) is
    chosen, so the extension field is reproducible across runs and
    implementations: p=2 -> x^2+x+1, p=3 -> x^2+1, p=5 -> x^2+2,
    p=7 -> x^2+1.
    """
    check_prime(p)
    for b in range(p):
        for c in range(p):
            if all((x * x + b * x + c) % p != 0 for x in range(p)):
                return (b, c)
    raise AssertionError("unreachable: F_p always has an irreducible quadratic")


@lru_cache(maxsize=None)
def _check_field_params(p: int, e: int) -> None:
    check_prime(p)
    if e not in (1, 2):
        raise ValueError(f"extension degree must be 1 or 2, got {e!r}")


class FieldScalar:
    """An element of F_{p^e}, immutable and hashable.

    ``coords`` holds e integers in [0, p); for e=2 the element is
    coords[0] + coords[1]*w with w^2 + b*w + c = 0 from
    ``quadratic_modulus(p)``.
    """

    __slots__ = ("p", "e", "coords")

    def __init__(self, p: int, e: int, coords):
        _check_field_params(p, e)
        coords = tuple(int(x) % p for x in coords)
        if len(coords) != e:
            raise ValueError(f"expected {e} coordinates, got {len(coords)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    @classmethod
    def from_int(cls, p: int, e: int, value: int) -> "FieldScalar":
        """Image of the integer ``value`` under Z -> F_p <= F_{p^e}."""
        return cls(p, e, (value,) + (0,) * (e - 1))

    @classmethod
    def zero(cls, p: int, e: int) -> "FieldScalar":
        return cls.from_int(p, e, 0)

    @classmethod
    def one(cls, p: int, e: int) -> "FieldScalar":
        return cls.from_int(p, e, 1)

    def _check_match(self, other: "FieldScalar") -> None:
        if self.p != other.p or self.e != other.e:
            raise ValueError(
                f"field mismatch: F_{self.p}^{self.e} vs F_{other.p}^{other.e}"
            )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldScalar):
            return NotImplemented
        return (self.p, self.e, self.coords) == (other.p, other.e, other.coords)

    def __hash__(self):
        return hash((self.p, self.e, self.coords))

    def __repr__(self):
        if self.e == 1:
            return f"FieldScalar({self.p}, 1, ({self.coords[0]},))"
        return f"FieldScalar({self.p}, 2, {self.coords})"

    def __add__(self, other: "FieldScalar") -> "FieldScalar":
        self._check_match(other)
        p = self.p
        return FieldScalar(p, self.e, tuple((x + y) % p for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "FieldScalar") -> "FieldScalar":
        self._check_match(other)
        p = self.p
        return FieldScalar(p, self.e, tuple((x - y) % p for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "FieldScalar":
        p = self.p
        return FieldScalar(p, self.e, tuple((-x) % p for x in self.coords))

    def __mul__(self, other: "FieldScalar") -> "FieldScalar":
        self._check_match(other)
        p = self.p
        if self.e == 1:
            return FieldScalar(p, 1, ((self.coords[0] * other.coords[0]) % p,))
        a0, a1 = self.coords
        b0, b1 = other.coords
        mb, mc = quadratic_modulus(p)
        hi = a1 * b1
        return FieldScalar(
            p, 2, ((a0 * b0 - mc * hi) % p, (a0 * b1 + a1 * b0 - mb * hi) % p)
        )

    def __rmul__(self, k: int) -> "FieldScalar":
        # integer scaling, used by generic polynomial evaluation
        if not isinstance(k, int):
            return NotImplemented
        p = self.p
        return FieldScalar(p, self.e, tuple((k * x) % p for x in self.coords))

    def __pow__(self, n: int) -> "FieldScalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = FieldScalar.one(self.p, self.e)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        q = self.p ** self.e
        return self ** (q - 2)

    def __truediv__(self, other: "FieldScalar") -> "FieldScalar":
        return self * other.inverse()

    def frobenius(self) -> "FieldScalar":
        """The p-th power map x -> x^p (identity on F_p)."""
        if self.e == 1:
            return self
        # w^p is the conjugate root -b - w of x^2 + b*x + c
        a0, a1 = self.coords
        mb, _ = quadratic_modulus(self.p)
        return FieldScalar(self.p, 2, ((a0 - mb * a1) % self.p, (-a1) % self.p))

    def lift(self) -> int:
        """Canonical integer representative; only valid for e=1."""
        if self.e != 1:
            raise ValueError("lift() only defined for prime-field elements")
        return self.coords[0]

    def to_json(self):
        """int for e=1, [int, int] for e=2 — the file-format encoding."""
        if self.e == 1:
            return self.coords[0]
        return list(self.coords)

    @classmethod
    def from_json(cls, p: int, e: int, obj) -> "FieldScalar":
        if e == 1:
            if not isinstance(obj, int):
                raise ValueError(f"expected integer entry, got {obj!r}")
            return cls(p, 1, (obj,))
        if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(x, int) for x in obj)):
            raise ValueError(f"expected [int, int] entry for e=2, got {obj!r}")
        return cls(p, 2, tuple(obj))


def all_scalars(p: int, e: int):
    """Iterate every element of F_{p^e} in a fixed order."""
    _check_field_params(p, e)
    if e == 1:
        for x in range(p):
            yield FieldScalar(p, 1, (x,))
    else:
        for x0 in range(p):
            for x1 in range(p):
                yield FieldScalar(p, 2, (x0, x1))


def inverse_mod(a: int, p: int) -> int:
    """Inverse of a mod prime p; raises ZeroDivisionError when p | a."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"{a} has no inverse mod {p}")
    return pow(a, p - 2, p)
