"""Exact arithmetic in Z[ζ_m].

Values are stored in the power basis 1, ζ, ..., ζ^{φ(m)-1}, i.e. reduced
modulo the m-th cyclotomic polynomial, so equality is coefficient equality.
"""
from __future__ import annotations

import cmath
from collections.abc import Iterable
from functools import lru_cache
from math import gcd

import numpy as np


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        out[k] = c
        for i, bc in enumerate(b):
            a[k + i] -= c * bc
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (little-endian) of the m-th cyclotomic polynomial."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


class CycloField:
    """Reduction data for Z[ζ_m]."""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("modulus must be positive")
        self.m = m
        self.poly = cyclotomic_poly(m)
        self.degree = len(self.poly) - 1
        n = self.degree
        red = np.zeros((m, n), dtype=np.int64)
        cur = np.zeros(n, dtype=np.int64)
        cur[0] = 1
        low = -np.array(self.poly[:-1], dtype=np.int64)
        for e in range(m):
            red[e] = cur
            top = cur[-1]
            cur = np.roll(cur, 1)
            cur[0] = 0
            if top:
                cur = cur + top * low
        self.reduction = red
        red.setflags(write=False)

    def reduce_dense(self, weights: np.ndarray) -> np.ndarray:
        """Reduce a length-m vector of root multiplicities."""
        return weights @ self.reduction


@lru_cache(maxsize=None)
def field(m: int) -> CycloField:
    return CycloField(m)


class CycloValue:
    """An element Σ c_e ζ_m^e of Z[ζ_m], kept in canonical reduced form."""

    __slots__ = ("m", "_c", "_hash")

    def __init__(self, m: int, coeffs: np.ndarray):
        self.m = m
        self._c = coeffs
        self._c.setflags(write=False)
        self._hash = None

    # ---------------------------------------------------------- constructors
    @classmethod
    def integer(cls, m: int, n: int) -> "CycloValue":
        c = np.zeros(field(m).degree, dtype=np.int64)
        c[0] = n
        return cls(m, c)

    @classmethod
    def zero(cls, m: int) -> "CycloValue":
        return cls.integer(m, 0)

    @classmethod
    def one(cls, m: int) -> "CycloValue":
        return cls.integer(m, 1)

    @classmethod
    def root(cls, m: int, e: int, coeff: int = 1) -> "CycloValue":
        return cls(m, coeff * field(m).reduction[e % m].copy())

    @classmethod
    def from_weights(cls, m: int, weights: np.ndarray) -> "CycloValue":
        """Σ weights[e] ζ^e for a length-m integer vector."""
        return cls(m, field(m).reduce_dense(np.asarray(weights, dtype=np.int64)))

    @classmethod
    def from_exponents(cls, m: int, exponents: Iterable[int]) -> "CycloValue":
        """Σ ζ^e over a multiset of exponents."""
        w = np.zeros(m, dtype=np.int64)
        for e in exponents:
            w[e % m] += 1
        return cls.from_weights(m, w)

    @classmethod
    def from_terms(cls, m: int, terms: Iterable[tuple[int, int]]) -> "CycloValue":
        w = np.zeros(m, dtype=np.int64)
        for e, c in terms:
            w[e % m] += c
        return cls.from_weights(m, w)

    # ------------------------------------------------------------ arithmetic
    def _coerce(self, other) -> "CycloValue":
        if isinstance(other, CycloValue):
            if other.m == self.m:
                return other
            if other.m < self.m and self.m % other.m == 0:
                return other.lift(self.m)
            if other.m % self.m == 0:
                return other  # the caller retries from the larger side
            raise ValueError(f"incompatible moduli {self.m} and {other.m}")
        if isinstance(other, (int, np.integer)):
            return CycloValue.integer(self.m, int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.m != self.m:
            return o + self
        return CycloValue(self.m, self._c + o._c)

    __radd__ = __add__

    def __neg__(self):
        return CycloValue(self.m, -self._c)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return CycloValue(self.m, self._c * int(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.m != self.m:
            return o * self
        m = self.m
        full = np.convolve(self._c, o._c)
        w = np.zeros(m, dtype=np.int64)
        np.add.at(w, np.arange(len(full)) % m, full)
        return CycloValue.from_weights(m, w)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = CycloValue.one(self.m)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self) -> "CycloValue":
        m = self.m
        w = np.zeros(m, dtype=np.int64)
        idx = (-np.arange(len(self._c))) % m
        np.add.at(w, idx, self._c)
        return CycloValue.from_weights(m, w)

    def abs2(self) -> "CycloValue":
        return self * self.conj()

    def lift(self, m2: int) -> "CycloValue":
        """The same number viewed in Z[ζ_{m2}] (m | m2)."""
        if m2 % self.m:
            raise ValueError(f"{self.m} does not divide {m2}")
        s = m2 // self.m
        w = np.zeros(m2, dtype=np.int64)
        w[np.arange(len(self._c)) * s] = self._c
        return CycloValue.from_weights(m2, w)

    # ------------------------------------------------------------ inspection
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.is_rational() and int(self._c[0]) == int(other)
        if not isinstance(other, CycloValue):
            return NotImplemented
        if other.m != self.m:
            big = self.m * other.m // gcd(self.m, other.m)
            return self.lift(big) == other.lift(big)
        return np.array_equal(self._c, other._c)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.m, self._c.tobytes()))
        return self._hash

    def is_zero(self) -> bool:
        return not self._c.any()

    def is_rational(self) -> bool:
        return not self._c[1:].any()

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return int(self._c[0])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self._c)

    def terms(self) -> list[tuple[int, int]]:
        return [(e, int(c)) for e, c in enumerate(self._c) if c]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(c * z**e for e, c in self.terms())

    def to_json(self) -> dict:
        return {"m": self.m, "terms": [[e, c] for e, c in self.terms()]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycloValue":
        return cls.from_terms(obj["m"], obj["terms"])

    def render(self) -> str:
        """Compact text: an integer when rational, else ``z<m>[e:c,...]``."""
        if self.is_rational():
            return str(int(self._c[0]))
        body = ",".join(f"{e}:{c}" for e, c in self.terms())
        return f"z{self.m}[{body}]"

    def __repr__(self) -> str:
        return f"CycloValue({self.render()})"
