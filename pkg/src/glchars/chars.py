"""Additive and multiplicative characters with exact cyclotomic values.

A character value ζ_m^e is handled as its exponent ``e`` (an int mod m);
:class:`~glchars.cyclo.CycloValue` only appears when values are summed.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Hashable, Iterable, Sequence
from math import lcm

import numpy as np

from .abelian import AbelianGroupTable
from .cyclo import CycloValue
from .group import Mat2, identity, in_congruence_kernel, mat_mul, mat_sub
from .ring import MIXED, QuadExt, Ring


# ------------------------------------------------------------------ additive
class AddChar:
    """An additive character of a ring O_n, stored as an exponent table."""

    def __init__(self, ring: Ring, exps: Sequence[int], m: int):
        self.ring = ring
        self.m = m
        self.exps = list(exps)

    def __call__(self, a: int) -> int:
        return self.exps[a]

    def value(self, a: int) -> CycloValue:
        return CycloValue.root(self.m, self.exps[a])

    def __repr__(self) -> str:
        return f"AddChar({self.ring!r}, m={self.m}, level={self.level})"

    @property
    def level(self) -> int:
        """Smallest k with kernel ⊇ ϖ^k O_n."""
        R = self.ring
        for k in range(R.r + 1):
            if all(self.exps[R.mul_pi(x, k)] == 0 for x in range(R.size)):
                return k
        raise AssertionError("unreachable")

    def is_primitive(self) -> bool:
        return self.level == self.ring.r

    def scaled(self, c: int) -> "AddChar":
        """x ↦ λ(c x)."""
        R = self.ring
        return AddChar(R, [self.exps[R.mul(c, x)] for x in range(R.size)], self.m)

    def factor(self, shift: int, unit: int | None = None) -> "AddChar":
        """The character z ↦ λ(ϖ^shift · unit · z) of O_{n - shift}."""
        R = self.ring
        n = R.r - shift
        if n < 1:
            raise ValueError("factored character would live on the zero ring")
        S = R.sub_ring(n)
        u = R.one if unit is None else unit
        exps = [self.exps[R.mul(u, R.mul_pi(R.lift(z, n), shift))] for z in range(S.size)]
        return AddChar(S, exps, self.m)

    def with_modulus(self, m2: int) -> "AddChar":
        if m2 % self.m:
            raise ValueError("new modulus must be a multiple")
        s = m2 // self.m
        return AddChar(self.ring, [e * s for e in self.exps], m2)


def _trace_form(R: Ring) -> list[int]:
    """Traces of the basis 1, x, ..., x^{f-1} (mixed: down to Z/p^r)."""
    if R.kind == MIXED:
        basis = [R.from_digits([int(k == i) for k in range(R.f)]) for i in range(R.f)]
        return [
            sum(R.digits(R.mul(b, basis[k]))[k] for k in range(R.f)) % (R.p**R.r) for b in basis
        ]
    k = R.residue_field
    basis = [R.p**i for i in range(R.f)]  # F_q codes of 1, x, ..., x^{f-1}
    out = []
    for b in basis:
        t = 0
        for j, e in enumerate(basis):
            prod = k.mul(b, e)
            t += (prod // R.p**j) % R.p
        out.append(t % R.p)
    return out


def standard_psi(R: Ring, m: int | None = None) -> AddChar:
    """The fixed primitive additive character of level r.

    Mixed: ψ(x) = ζ_{p^r}^{T(x)} with T the trace to Z/p^r.
    Equal: ψ(x) = ζ_p^{tr(c_{r-1}(x))} with c_{r-1} the t^{r-1} coefficient.
    """
    base = R.p**R.r if R.kind == MIXED else R.p
    if m is None:
        m = base
    if m % base:
        raise ValueError(f"modulus {m} is not a multiple of {base}")
    s = m // base
    tf = _trace_form(R)
    exps = []
    for a in range(R.size):
        ds = R.digits(a)
        if R.kind == MIXED:
            t = sum(c * w for c, w in zip(ds, tf)) % base
        else:
            top = ds[-1]
            t = 0
            for i in range(R.f):
                top, d = divmod(top, R.p)
                t += d * tf[i]
            t %= base
        exps.append(t * s)
    return AddChar(R, exps, m)


def psi_beta(psi: AddChar, beta: Mat2, x: Mat2, l: int) -> int:
    """Exponent of ψ(Tr(β(x - I))) for x ∈ K_l."""
    R = psi.ring
    if not in_congruence_kernel(R, x, l):
        raise ValueError("matrix is not in the congruence kernel K_l")
    y = mat_mul(R, beta, mat_sub(R, x, identity(R)))
    return psi(R.add(y[0], y[3]))


# ------------------------------------------------------------ multiplicative
class MultChar:
    """A character of an :class:`AbelianGroupTable`.

    ``c[j]`` ∈ Z/d_j is the image exponent of basis element j, so the value
    on basis element j is ζ_{d_j}^{c_j}.
    """

    __slots__ = ("table", "c", "m", "_w", "_values")

    def __init__(self, table: AbelianGroupTable, c: Sequence[int], m: int):
        if m % table.exponent:
            raise ValueError(f"modulus {m} is not a multiple of the exponent {table.exponent}")
        self.table = table
        self.c = tuple(int(x) % d for x, d in zip(c, table.orders))
        self.m = m
        self._w = np.array([cj * (m // d) for cj, d in zip(self.c, table.orders)], dtype=np.int64)
        self._values = None

    @property
    def values(self) -> np.ndarray:
        """Exponents on all elements, in table order."""
        if self._values is None:
            self._values = (self.table.coord_array @ self._w) % self.m
        return self._values

    def __call__(self, g: Hashable) -> int:
        if self._values is not None:
            return int(self._values[self.table.index[g]])
        return int(np.dot(self.table.dlog(g), self._w) % self.m) if self.c else 0

    def value(self, g: Hashable) -> CycloValue:
        return CycloValue.root(self.m, self(g))

    def __mul__(self, other: "MultChar") -> "MultChar":
        self._check(other)
        return MultChar(self.table, [a + b for a, b in zip(self.c, other.c)], self.m)

    def __truediv__(self, other: "MultChar") -> "MultChar":
        self._check(other)
        return MultChar(self.table, [a - b for a, b in zip(self.c, other.c)], self.m)

    def inverse(self) -> "MultChar":
        return MultChar(self.table, [-a for a in self.c], self.m)

    def _check(self, other: "MultChar") -> None:
        if other.table is not self.table or other.m != self.m:
            raise ValueError("characters of different groups")

    def __eq__(self, other) -> bool:
        return isinstance(other, MultChar) and other.table is self.table and other.c == self.c

    def __hash__(self) -> int:
        return hash((id(self.table), self.c))

    def __repr__(self) -> str:
        return f"MultChar({self.table.name}, {list(self.c)})"

    def is_trivial(self) -> bool:
        return not any(self.c)

    def is_trivial_on(self, elements: Iterable[Hashable]) -> bool:
        return all(self(g) == 0 for g in elements)

    def compose(self, fn: Callable[[Hashable], Hashable]) -> "MultChar":
        """g ↦ χ(fn(g)) for an automorphism fn of the group."""
        c = []
        for b, d in zip(self.table.basis, self.table.orders):
            e = self(fn(b))
            step = self.m // d
            if e % step:
                raise ValueError("composition does not give a character of the same group")
            c.append(e // step)
        return MultChar(self.table, c, self.m)

    def to_json(self) -> list[int]:
        return list(self.c)


def all_characters(table: AbelianGroupTable, m: int | None = None) -> list[MultChar]:
    """Every character, ordered lexicographically by generator exponents."""
    m = table.exponent if m is None else m
    return [MultChar(table, c, m) for c in itertools.product(*[range(d) for d in table.orders])]


def trivial_character(table: AbelianGroupTable, m: int) -> MultChar:
    return MultChar(table, [0] * len(table.orders), m)


# ------------------------------------------------------------- split family
def one_plus(R: Ring, k: int, xs: Iterable[int]) -> list[int]:
    """{1 + ϖ^k x}."""
    return [R.add(R.one, R.mul_pi(x, k)) for x in xs]


def is_regular_split(mu: MultChar, mu2: MultChar, R: Ring) -> bool:
    """μμ'^{-1} is non-trivial on 1 + ϖ^{r-1} O_r."""
    ratio = mu / mu2
    return not ratio.is_trivial_on(one_plus(R, R.r - 1, R.section(1)))


def level_param(chi: MultChar, psi: AddChar, l: int) -> int:
    """a ∈ A_l with χ(1 + ϖ^l x) = ψ(ϖ^l a x) for all x."""
    R = psi.ring
    xs = R.section(l)
    target = [chi(R.add(R.one, R.mul_pi(x, l))) for x in xs]
    if psi.m != chi.m:
        raise ValueError("character moduli differ")
    for a in xs:
        if all(psi(R.mul_pi(R.mul(a, x), l)) == t for x, t in zip(xs, target)):
            return a
    raise AssertionError("no parameter found: restriction is not of the expected form")


def split_params(mu: MultChar, mu2: MultChar, psi: AddChar) -> tuple[int, int]:
    l = psi.ring.r // 2
    return level_param(mu, psi, l), level_param(mu2, psi, l)


# ---------------------------------------------------------- cuspidal family
def is_regular_cuspidal(nu: MultChar, nu2: MultChar, ext: QuadExt) -> bool:
    """νν'^{-1} is non-trivial on 1 + ϖ^{r-1} O^{E(-)}."""
    E = ext.E
    ratio = nu / nu2
    anti = ext.fixed_part(-1)
    return not ratio.is_trivial_on({E.add(E.one, E.mul_pi(z, E.r - 1)) for z in anti})


def cuspidal_tau(nu: MultChar, nu2: MultChar, ext: QuadExt, psi: AddChar) -> int:
    """τ ∈ A_l^E attached to a regular pair, checked exhaustively."""
    E, R = ext.E, ext.base
    l = R.r // 2
    one = E.one

    def lhs(z: int, sign: int) -> int:
        w = E.mul_pi(z, l)
        return (nu(E.add(one, w)) + nu2(E.add(one, w if sign > 0 else E.neg(w)))) % nu.m

    plus = ext.fixed_part(1)
    minus = ext.fixed_part(-1)
    sols = {}
    for sign, part in ((1, plus), (-1, minus)):
        reps = sorted({E.truncate(z, l) for z in part})
        cands = [min(z for z in part if E.truncate(z, l) == t) for t in reps]
        found = []
        for tau in cands:
            if all(psi(ext.to_base(E.mul_pi(E.mul(tau, z), l))) == lhs(z, sign) for z in cands):
                found.append(tau)
        if len(found) != 1:
            raise AssertionError(f"τ^({'+' if sign > 0 else '-'}) is not unique: {len(found)} solutions")
        sols[sign] = found[0]
    tau = E.truncate(E.mul(E.add(sols[1], sols[-1]), E.half), l)
    _check_tau(nu, nu2, ext, psi, tau)
    return tau


def _check_tau(nu: MultChar, nu2: MultChar, ext: QuadExt, psi: AddChar, tau: int) -> None:
    """ν(1+ϖ^l(x+yτ)) ν'(1+ϖ^l(x+yσ(τ))) = ψ(ϖ^l(τ(x+yτ) + σ(τ)(x+yσ(τ)))) for x, y ∈ O_r."""
    E, R = ext.E, ext.base
    l = R.r // 2
    st = ext.sigma(tau)
    for x0 in R.section(l):
        x = ext.embed(x0)
        for y0 in R.section(l):
            y = ext.embed(y0)
            u = E.add(x, E.mul(y, tau))
            v = E.add(x, E.mul(y, st))
            a = (nu(E.add(E.one, E.mul_pi(u, l))) + nu2(E.add(E.one, E.mul_pi(v, l)))) % nu.m
            s = E.mul_pi(E.add(E.mul(tau, u), E.mul(st, v)), l)
            if a != psi(ext.to_base(s)):
                raise AssertionError("recovered τ violates the defining condition")


# ----------------------------------------------------------------- S groups
class SGroup:
    """S(Δ̂, 0) = {aI + bβ̂ : a a unit}, β̂ = [[0, 1], [-Δ̂, 0]], as pairs (a, b)."""

    def __init__(self, R: Ring, delta_hat: int):
        self.ring = R
        self.delta = delta_hat
        n = R.size
        self._n = n
        elements = [a * n + b for a in R.units for b in range(n)]
        self.table = AbelianGroupTable(elements, self.op, R.one * n, name=f"S({delta_hat})")

    def op(self, x: int, y: int) -> int:
        R, n = self.ring, self._n
        a, b = divmod(x, n)
        c, d = divmod(y, n)
        return R.sub(R.mul(a, c), R.mul(self.delta, R.mul(b, d))) * n + R.add(R.mul(a, d), R.mul(b, c))

    def encode(self, a: int, b: int) -> int:
        return a * self._n + b

    def decode(self, s: int) -> tuple[int, int]:
        return divmod(s, self._n)

    def matrix(self, s: int) -> Mat2:
        a, b = self.decode(s)
        return (a, b, self.ring.mul(self.ring.neg(self.delta), b), a)

    def kernel_part(self, l: int) -> list[tuple[int, int]]:
        """S ∩ K_l as (element, b) pairs: (1 + ϖ^l a) I + ϖ^l b β̂."""
        R = self.ring
        xs = R.section(R.r - l)
        return [
            (self.encode(R.add(R.one, R.mul_pi(a, l)), R.mul_pi(b, l)), R.mul_pi(b, l))
            for a in xs
            for b in xs
        ]


def theta_characters(S: SGroup, psi: AddChar, m: int) -> list[MultChar]:
    """Characters θ of S with θ(I + ϖ^l bβ̂) = ψ(-2Δ̂ ϖ^l b) on S ∩ K_l."""
    R = S.ring
    l = R.r // 2
    kern = S.kernel_part(l)
    m2 = R.smul(-2, S.delta)
    target = [(S.table.index[s], psi(R.mul(m2, b)) * (m // psi.m)) for s, b in kern]
    out = []
    for chi in all_characters(S.table, m):
        vals = chi.values
        if all(vals[i] == t for i, t in target):
            out.append(chi)
    return out


def star(R: Ring, delta: int, x: int, y: int) -> int:
    """x ⋆ y = (x + y)/(1 - Δ̂xy)."""
    return R.div(R.add(x, y), R.sub(R.one, R.mul(delta, R.mul(x, y))))


def common_modulus(*parts: int) -> int:
    return lcm(*parts)
