"""Finite chain rings O_r and their unramified quadratic extensions.

Two families are supported:

* mixed characteristic: the Galois ring GR(p^r, f) = (Z/p^r)[x]/(h),
  uniformizer p;
* equal characteristic: F_q[t]/(t^r), uniformizer t.

Elements are plain ``int`` codes.  A code is the little-endian digit vector
of the element read as an integer: in the mixed case the digits are the f
coefficients of 1, x, ..., x^{f-1} (each in [0, p^r)), in the equal case the
digits are the r coefficients of 1, t, ..., t^{r-1}, each an F_q code (itself
f base-p digits).  Code order is the canonical enumeration order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

MIXED = "mixed"
EQUAL = "equal"
KINDS = (MIXED, EQUAL)

TABLE_LIMIT = 1024


class RingError(ValueError):
    """Invalid ring parameters or an operation outside its domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_rem(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` by the monic polynomial ``m`` over F_p."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for i in range(dm + 1):
                a[k - dm + i] = (a[k - dm + i] - c * m[i]) % p
    a = a[:dm] if dm else []
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, d: int) -> Iterable[list[int]]:
    for code in range(p**d):
        coeffs = []
        for _ in range(d):
            code, c = divmod(code, p)
            coeffs.append(c)
        yield coeffs + [1]


def _is_irreducible(h: Sequence[int], p: int) -> bool:
    deg = len(h) - 1
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_rem(list(h), g, p):
                return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Least monic irreducible polynomial of degree f over F_p.

    Polynomials are ordered by the integer whose base-p digits are the
    low coefficients c_0, ..., c_{f-1}.  Returned little-endian, monic.
    """
    for h in _monic_polys(p, f):
        if _is_irreducible(h, p):
            return tuple(h)
    raise RingError(f"no irreducible polynomial of degree {f} over F_{p}")


class Ring:
    """The finite chain ring O_r for one (p, f, r, kind)."""

    def __init__(self, p: int, f: int, r: int, kind: str = MIXED):
        if kind not in KINDS:
            raise RingError(f"char_kind must be one of {KINDS}, got {kind!r}")
        if p == 2:
            raise RingError("odd residue characteristic required")
        if not is_prime(p):
            raise RingError(f"p = {p} is not prime")
        if f < 1 or r < 1:
            raise RingError("f and r must be at least 1")
        self.p, self.f, self.r, self.kind = p, f, r, kind
        self.q = p**f
        self.size = self.q**r
        self.h = least_irreducible(p, f)
        if kind == MIXED:
            self._base, self._ndig = p**r, f
        else:
            self._base, self._ndig = self.q, r
            self._fq_add, self._fq_mul, self._fq_neg = _residue_tables(p, f, self.h)
        self.zero = 0
        self.one = 1
        self.pi = self.from_int(p) if kind == MIXED else (self.q if r > 1 else 0)
        self._tabled = self.size <= TABLE_LIMIT
        if self._tabled:
            self._build_tables()

    # ------------------------------------------------------------------ basics
    def __repr__(self) -> str:
        return f"Ring(p={self.p}, f={self.f}, r={self.r}, kind={self.kind!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __call__(self, x: int | str | Sequence[int]) -> "RingElem":
        if isinstance(x, str):
            return RingElem(self, self.parse(x))
        if isinstance(x, int):
            return RingElem(self, self.from_int(x))
        return RingElem(self, self.from_digits(x))

    @property
    def key(self) -> tuple:
        return (self.p, self.f, self.r, self.kind)

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self._ndig):
            a, d = divmod(a, self._base)
            out.append(d)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        if len(ds) != self._ndig:
            raise RingError(f"expected {self._ndig} digits, got {len(ds)}")
        code = 0
        for d in reversed(ds):
            if not 0 <= d < self._base:
                raise RingError(f"digit {d} out of range [0, {self._base})")
            code = code * self._base + d
        return code

    def from_int(self, n: int) -> int:
        if self.kind == MIXED:
            return n % self._base
        return n % self.p

    def to_str(self, a: int) -> str:
        return f"{self.p}^{self.r}:{self.f}:" + ":".join(str(d) for d in self.digits(a))

    def parse(self, s: str) -> int:
        parts = s.strip().split(":")
        prefix = f"{self.p}^{self.r}"
        if len(parts) == self._ndig + 2 and parts[0] == prefix and parts[1] == str(self.f):
            parts = parts[2:]
        if len(parts) == 1 and self._ndig > 1:
            return self.from_int(int(parts[0]))
        try:
            return self.from_digits([int(x) for x in parts])
        except ValueError as exc:
            raise RingError(f"cannot parse ring element {s!r}") from exc

    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def units(self) -> list[int]:
        return [a for a in range(self.size) if self.valuation(a) == 0]

    def section(self, i: int) -> list[int]:
        """The digit section A_i: canonical lifts of O_i, in code order."""
        if not 0 <= i <= self.r:
            raise RingError(f"section index {i} outside [0, {self.r}]")
        return [self.lift(b, i) for b in range(self.q**i)]

    def section_units(self, i: int) -> list[int]:
        return [a for a in self.section(i) if self.valuation(a) == 0]

    # ------------------------------------------------------------- raw arithmetic
    def _add_raw(self, a: int, b: int) -> int:
        x, y = self.digits(a), self.digits(b)
        if self.kind == MIXED:
            return self.from_digits([(u + v) % self._base for u, v in zip(x, y)])
        fa = self._fq_add
        return self.from_digits([fa[u][v] for u, v in zip(x, y)])

    def _neg_raw(self, a: int) -> int:
        x = self.digits(a)
        if self.kind == MIXED:
            return self.from_digits([(-u) % self._base for u in x])
        return self.from_digits([self._fq_neg[u] for u in x])

    def _mul_raw(self, a: int, b: int) -> int:
        x, y = self.digits(a), self.digits(b)
        if self.kind == MIXED:
            P, f, h = self._base, self.f, self.h
            prod = [0] * (2 * f - 1)
            for i, u in enumerate(x):
                if u:
                    for j, v in enumerate(y):
                        prod[i + j] += u * v
            for k in range(2 * f - 2, f - 1, -1):
                c = prod[k] % P
                if c:
                    for i in range(f):
                        prod[k - f + i] -= c * h[i]
            return self.from_digits([c % P for c in prod[:f]])
        fa, fm = self._fq_add, self._fq_mul
        r = self.r
        out = [0] * r
        for i, u in enumerate(x):
            if u:
                for j in range(r - i):
                    v = y[j]
                    if v:
                        out[i + j] = fa[out[i + j]][fm[u][v]]
        return self.from_digits(out)

    def _build_tables(self) -> None:
        n = self.size
        add = [0] * (n * n)
        mul = [0] * (n * n)
        for a in range(n):
            for b in range(a, n):
                s, m = self._add_raw(a, b), self._mul_raw(a, b)
                add[a * n + b] = add[b * n + a] = s
                mul[a * n + b] = mul[b * n + a] = m
        self._add_t, self._mul_t = add, mul
        self._neg_t = [self._neg_raw(a) for a in range(n)]
        inv = [None] * n
        for a in range(n):
            if inv[a] is None and self._valuation_raw(a) == 0:
                for b in range(n):
                    if mul[a * n + b] == 1:
                        inv[a], inv[b] = b, a
                        break
        self._inv_t = inv

    # ------------------------------------------------------------ arithmetic API
    def add(self, a: int, b: int) -> int:
        if self._tabled:
            return self._add_t[a * self.size + b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self._tabled:
            return self._neg_t[a]
        return self._neg_raw(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._tabled:
            return self._mul_t[a * self.size + b]
        return self._mul_raw(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if self._tabled:
            b = self._inv_t[a]
            if b is None:
                raise RingError(f"{self.to_str(a)} is not invertible")
            return b
        if self.valuation(a) != 0:
            raise RingError(f"{self.to_str(a)} is not invertible")
        return self.pow(a, len_units(self) - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def smul(self, n: int, a: int) -> int:
        """Integer multiple n·a."""
        return self.mul(self.from_int(n), a)

    def sum(self, items: Iterable[int]) -> int:
        total = 0
        for x in items:
            total = self.add(total, x)
        return total

    # ---------------------------------------------------------------- valuation
    def _valuation_raw(self, a: int) -> int:
        if a == 0:
            return self.r
        ds = self.digits(a)
        if self.kind == MIXED:
            v = self.r
            for c in ds:
                if c:
                    k = 0
                    while c % self.p == 0:
                        c //= self.p
                        k += 1
                    v = min(v, k)
            return v
        for j, c in enumerate(ds):
            if c:
                return j
        return self.r

    @cached_property
    def _val_t(self) -> list[int] | None:
        if not self._tabled:
            return None
        return [self._valuation_raw(a) for a in range(self.size)]

    def valuation(self, a: int) -> int:
        vt = self._val_t
        if vt is not None:
            return vt[a]
        return self._valuation_raw(a)

    def is_unit(self, a: int) -> bool:
        return self.valuation(a) == 0

    def mul_pi(self, a: int, k: int = 1) -> int:
        """ϖ^k · a."""
        if k >= self.r:
            return 0
        if self.kind == MIXED:
            s = self.p**k
            return self.from_digits([(c * s) % self._base for c in self.digits(a)])
        return (a * self.q**k) % self.size

    def pi_pow(self, k: int) -> int:
        return self.mul_pi(self.one, k)

    def div_pi(self, a: int, k: int = 1) -> int:
        """The canonical lift in A_{r-k} of a/ϖ^k (requires v(a) ≥ k)."""
        if self.valuation(a) < k:
            raise RingError(f"{self.to_str(a)} is not divisible by ϖ^{k}")
        if self.kind == MIXED:
            s = self.p**k
            return self.from_digits([c // s for c in self.digits(a)])
        return a // self.q**k

    def unit_part(self, a: int) -> tuple[int, int]:
        """(v, u) with a = ϖ^v u; for a = 0 this is (r, 1)."""
        v = self.valuation(a)
        if v == self.r:
            return v, self.one
        return v, self.div_pi(a, v)

    # --------------------------------------------------------- levels & sections
    def sub_ring(self, n: int) -> "Ring":
        """The quotient O_n (n ≤ r)."""
        if not 1 <= n <= self.r:
            raise RingError(f"level {n} outside [1, {self.r}]")
        return make_ring(self.p, self.f, n, self.kind)

    def reduce(self, a: int, n: int) -> int:
        """Image of a in O_n, as a code of ``sub_ring(n)``."""
        if n >= self.r:
            return a
        if n <= 0:
            return 0
        if self.kind == MIXED:
            m = self.p**n
            code = 0
            for c in reversed(self.digits(a)):
                code = code * m + c % m
            return code
        return a % self.q**n

    def lift(self, b: int, n: int) -> int:
        """Canonical lift into A_n ⊂ O_r of a code b of O_n."""
        if n <= 0:
            return 0
        if n >= self.r or self.kind == EQUAL:
            return b
        m = self.p**n
        ds = []
        for _ in range(self.f):
            b, c = divmod(b, m)
            ds.append(c)
        return self.from_digits(ds)

    def truncate(self, a: int, n: int) -> int:
        """The element of A_n congruent to a modulo ϖ^n."""
        return self.lift(self.reduce(a, n), n)

    # -------------------------------------------------------------- squares
    @cached_property
    def residue_field(self) -> "Ring":
        return self.sub_ring(1)

    def legendre(self, a: int) -> int:
        if self.valuation(a) != 0:
            return 0
        k = self.residue_field
        y = k.pow(self.reduce(a, 1), (self.q - 1) // 2)
        return 1 if y == k.one else -1

    def sqrt(self, a: int) -> int | None:
        """Square root of a unit (the one with the smaller code), or None."""
        if self.valuation(a) != 0:
            raise RingError("square roots are only taken of units")
        if self.legendre(a) != 1:
            return None
        k = self.residue_field
        abar = self.reduce(a, 1)
        y0 = next(y for y in k.elements() if k.mul(y, y) == abar)
        y = self.lift(y0, 1)
        inv2 = self.inv(self.from_int(2))
        for _ in range(self.r.bit_length() + 1):
            y = self.mul(self.add(y, self.div(a, y)), inv2)
        if self.mul(y, y) != a:
            raise AssertionError("Hensel lifting failed")
        return min(y, self.neg(y))

    @cached_property
    def nonsquare(self) -> int:
        """ε: the first non-square unit in code order."""
        return next(a for a in range(self.size) if self.legendre(a) == -1)

    @cached_property
    def half(self) -> int:
        return self.inv(self.from_int(2))

    # ------------------------------------------------------------- substitution
    def gen(self) -> int:
        """The polynomial generator x (the residue-field generator)."""
        if self.f == 1:
            return self.from_int(0)
        if self.kind == MIXED:
            return self.from_digits([0, 1] + [0] * (self.f - 2))
        return self.p  # F_q code of x in block 0

    def substitute(self, a: int, target: "Ring", x_image: int) -> int:
        """Ring map sending x ↦ x_image and (equal case) t ↦ t into ``target``."""
        powers = [target.one]
        for _ in range(1, self.f):
            powers.append(target.mul(powers[-1], x_image))
        total = 0
        if self.kind == MIXED:
            for i, c in enumerate(self.digits(a)):
                if c:
                    total = target.add(total, target.mul(target.from_int(c), powers[i]))
            return total
        for j, block in enumerate(self.digits(a)):
            if not block:
                continue
            val = 0
            for m in range(self.f):
                block, d = divmod(block, self.p)
                if d:
                    val = target.add(val, target.mul(target.from_int(d), powers[m]))
            total = target.add(total, target.mul_pi(val, j))
        return total

    def eval_poly(self, coeffs: Sequence[int], z: int) -> int:
        """Evaluate an integer polynomial (little-endian) at z."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, z), self.from_int(c))
        return acc

    # ------------------------------------------------------------ numpy views
    @cached_property
    def np_tables(self) -> dict[str, np.ndarray]:
        """Cayley tables as arrays (only for tabled rings)."""
        if not self._tabled:
            raise RingError("ring too large for dense tables")
        n = self.size
        return {
            "add": np.array(self._add_t, dtype=np.int64).reshape(n, n),
            "mul": np.array(self._mul_t, dtype=np.int64).reshape(n, n),
            "neg": np.array(self._neg_t, dtype=np.int64),
            "unit": np.array([v == 0 for v in self._val_t], dtype=bool),
        }


def _residue_tables(p: int, f: int, h: Sequence[int]):
    q = p**f

    def dec(c):
        out = []
        for _ in range(f):
            c, d = divmod(c, p)
            out.append(d)
        return out

    def enc(ds):
        code = 0
        for d in reversed(ds):
            code = code * p + d
        return code

    vecs = [dec(c) for c in range(q)]
    add = [[enc([(u + v) % p for u, v in zip(vecs[a], vecs[b])]) for b in range(q)]
           for a in range(q)]
    neg = [enc([(-u) % p for u in vecs[a]]) for a in range(q)]
    mul = [[0] * q for _ in range(q)]
    for a in range(q):
        for b in range(q):
            prod = [0] * (2 * f - 1)
            for i, u in enumerate(vecs[a]):
                for j, v in enumerate(vecs[b]):
                    prod[i + j] += u * v
            rem = _poly_rem(prod, h, p) if f > 1 else [prod[0] % p]
            mul[a][b] = enc(rem + [0] * (f - len(rem)))
    return add, mul, neg


def len_units(R: Ring) -> int:
    return R.size - R.size // R.q


@lru_cache(maxsize=None)
def make_ring(p: int, f: int, r: int, char_kind: str = MIXED) -> Ring:
    return Ring(p, f, r, char_kind)


@dataclass(frozen=True)
class RingElem:
    """A ring element with operator overloading, for interactive use."""

    ring: Ring
    code: int

    def _other(self, o) -> int:
        if isinstance(o, RingElem):
            if o.ring != self.ring:
                raise RingError("elements of different rings")
            return o.code
        if isinstance(o, int):
            return self.ring.from_int(o)
        return NotImplemented

    def __add__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else RingElem(self.ring, self.ring.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else RingElem(self.ring, self.ring.sub(self.code, b))

    def __rsub__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else RingElem(self.ring, self.ring.sub(b, self.code))

    def __mul__(self, o):
        b = self._other(o)
        return NotImplemented if b is NotImplemented else RingElem(self.ring, self.ring.mul(self.code, b))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.code))

    def __pow__(self, e: int):
        return RingElem(self.ring, self.ring.pow(self.code, e))

    def inverse(self) -> "RingElem":
        return RingElem(self.ring, self.ring.inv(self.code))

    def __eq__(self, o) -> bool:
        if isinstance(o, int):
            return self.code == self.ring.from_int(o)
        return isinstance(o, RingElem) and o.ring == self.ring and o.code == self.code

    def __hash__(self) -> int:
        return hash((self.ring.key, self.code))

    def __str__(self) -> str:
        return self.ring.to_str(self.code)

    def __repr__(self) -> str:
        return f"RingElem({self.ring.to_str(self.code)!r})"


def valuation(x: RingElem) -> int:
    return x.ring.valuation(x.code)


def legendre(x: RingElem) -> int:
    return x.ring.legendre(x.code)


def sqrt(x: RingElem) -> RingElem | None:
    y = x.ring.sqrt(x.code)
    return None if y is None else RingElem(x.ring, y)


def choose_nonsquare(R: Ring) -> RingElem:
    return RingElem(R, R.nonsquare)


class QuadExt:
    """O_r^E with the embedding of O_r, the involution σ and Φ = √ε."""

    def __init__(self, base: Ring):
        self.base = base
        E = make_ring(base.p, 2 * base.f, base.r, base.kind)
        self.E = E
        rho = self._root_of(base.h, base.q)
        self._embed = [base.substitute(a, E, rho) for a in range(base.size)]
        self._from_base = {z: a for a, z in enumerate(self._embed)}
        if len(self._from_base) != base.size:
            raise AssertionError("embedding is not injective")
        y = E.gen()
        s = self._lift_root(E.h, E.pow(y, base.q))
        self._sigma_y = s
        self._sigma_cache: dict[int, int] = {}
        if E.size <= 10**4:
            self._sigma_t = [E.substitute(z, E, s) for z in range(E.size)]
            self._verify()
        else:
            self._sigma_t = None
        self.phi = E.sqrt(self.embed(base.nonsquare))
        self._fixed: dict[int, list[int]] = {}

    def _root_of(self, h: Sequence[int], q: int) -> int:
        E = self.E
        k = E.residue_field
        root = next(z for z in k.elements() if k.eval_poly(h, z) == 0)
        return self._lift_root(h, E.lift(root, 1))

    def _lift_root(self, h: Sequence[int], z: int) -> int:
        E = self.E
        dh = [i * c for i, c in enumerate(h)][1:]
        if E.kind == EQUAL:
            z = E.truncate(z, 1)
        for _ in range(E.r.bit_length() + 1):
            val = E.eval_poly(h, z)
            if val == 0:
                break
            z = E.sub(z, E.div(val, E.eval_poly(dh, z)))
        if E.eval_poly(h, z) != 0:
            raise AssertionError("root lifting failed")
        return z

    def _verify(self) -> None:
        E, st = self.E, self._sigma_t
        fixed = [z for z in range(E.size) if st[z] == z]
        if any(st[st[z]] != z for z in range(E.size)):
            raise AssertionError("σ is not an involution")
        if sorted(fixed) != sorted(self._embed):
            raise AssertionError("σ-fixed ring differs from the image of O_r")

    def __repr__(self) -> str:
        return f"QuadExt({self.base!r})"

    def embed(self, a: int) -> int:
        return self._embed[a]

    def to_base(self, z: int) -> int:
        try:
            return self._from_base[z]
        except KeyError:
            raise RingError(f"{self.E.to_str(z)} does not lie in O_r") from None

    def in_base(self, z: int) -> bool:
        return z in self._from_base

    def sigma(self, z: int) -> int:
        if self._sigma_t is not None:
            return self._sigma_t[z]
        out = self._sigma_cache.get(z)
        if out is None:
            out = self.E.substitute(z, self.E, self._sigma_y)
            self._sigma_cache[z] = out
        return out

    frobenius = sigma

    def trace(self, z: int) -> int:
        return self.to_base(self.E.add(z, self.sigma(z)))

    def norm(self, z: int) -> int:
        return self.to_base(self.E.mul(z, self.sigma(z)))

    def fixed_part(self, sign: int) -> list[int]:
        """O_r^{E(±)} = {z : σ(z) = ±z}, in code order."""
        if sign not in self._fixed:
            E = self.E
            if sign == 1:
                part = sorted(self._embed)
            else:
                # σ is additive, so O^{E(-)} is the image of w ↦ (w - σ(w))/2;
                # that image is Φ·O_r
                part = sorted({E.mul(self.embed(a), self.phi) for a in range(self.base.size)})
            self._fixed[sign] = part
        return list(self._fixed[sign])

    fixed_part_iter = fixed_part


@lru_cache(maxsize=None)
def quad_ext(R: Ring) -> QuadExt:
    return QuadExt(R)
