"""Exponential sums over O_k: Gauss, Kloosterman, Salié and related counts.

Every closed form has a brute-force twin named ``*_direct``; the tests
compare the two exactly.
"""
from __future__ import annotations

from collections.abc import Callable
from typing import NamedTuple

from .chars import AddChar, MultChar
from .cyclo import CycloValue
from .ring import Ring

LEGENDRE = "legendre"


def _terms(m: int, terms) -> CycloValue:
    return CycloValue.from_terms(m, terms)


def _units(R: Ring) -> list[int]:
    return R.units


# ------------------------------------------------------------------ basics
def gauss(a: int, lam: AddChar) -> CycloValue:
    """G(a, λ) = Σ_x λ(a x²)."""
    R = lam.ring
    return CycloValue.from_exponents(lam.m, (lam(R.mul(a, R.mul(x, x))) for x in range(R.size)))


def kloosterman(a: int, b: int, lam: AddChar, rho: MultChar | str | Callable | None = None) -> CycloValue:
    """Σ_{x unit} ρ(x) λ(ax + b/x).  ``rho="legendre"`` gives the Salié sum."""
    R = lam.ring
    out = []
    for x in _units(R):
        e = lam(R.add(R.mul(a, x), R.mul(b, R.inv(x))))
        if rho is None:
            out.append((e, 1))
        elif rho == LEGENDRE:
            out.append((e, R.legendre(x)))
        else:
            out.append((e + rho(x), 1))
    return _terms(lam.m, out)


def salie(a: int, b: int, lam: AddChar) -> CycloValue:
    return kloosterman(a, b, lam, LEGENDRE)


def _sign_kloosterman(a: int, b: int, lam: AddChar, power: int) -> CycloValue:
    """Kloosterman sum twisted by the Legendre symbol to the given power."""
    return salie(a, b, lam) if power % 2 else kloosterman(a, b, lam)


def _check_nonsquare(R: Ring, eta: int) -> None:
    if R.legendre(eta) != -1:
        raise ValueError("η must be a non-square unit")


# ---------------------------------------------------------------- T sums
def T_sum_direct(b: int, eta: int, lam: AddChar) -> CycloValue:
    """Σ_{c, d unit} λ(d^{-1}(b - c²) + dη)."""
    R = lam.ring
    out = []
    for d in _units(R):
        di = R.inv(d)
        de = R.mul(d, eta)
        for c in range(R.size):
            out.append(lam(R.add(R.mul(di, R.sub(b, R.mul(c, c))), de)))
    return CycloValue.from_exponents(lam.m, out)


def T_sum(b: int, eta: int, lam: AddChar) -> CycloValue:
    """Closed form of :func:`T_sum_direct` for a non-square unit η."""
    R = lam.ring
    _check_nonsquare(R, eta)
    k, q, m = R.r, R.q, lam.m
    eb = R.mul(eta, b)
    if R.is_unit(eb) and R.legendre(eb) == 1:
        u2 = R.smul(2, R.sqrt(eb))
        return _terms(m, [(lam(u2), 1), (lam(R.neg(u2)), 1)]) * ((-q) ** k)
    if k == 1 and b == 0:
        return CycloValue.integer(m, -q)
    return CycloValue.zero(m)


def T_sum_reduction(b: int, eta: int, lam: AddChar) -> CycloValue:
    """G(-1, λ)(-1)^k Σ_d (d/O_k)^k λ(dbη + d^{-1})."""
    R = lam.ring
    k = R.r
    tw = _sign_kloosterman(R.mul(b, eta), R.one, lam, k)
    return gauss(R.neg(R.one), lam) * tw * ((-1) ** k)


# ------------------------------------------------------------------- ρ(y)
def rho_count_direct(y: int, eta: int, R: Ring) -> int:
    """|{(c, d) ∈ O_k² : d² - ηc² = y}|."""
    sq = [R.mul(x, x) for x in range(R.size)]
    esq = [R.mul(eta, s) for s in sq]
    counts: dict[int, int] = {}
    for s in sq:
        counts[s] = counts.get(s, 0) + 1
    return sum(counts.get(R.add(y, e), 0) for e in esq)


def rho_count(y: int, eta: int, R: Ring) -> int:
    _check_nonsquare(R, eta)
    k, q = R.r, R.q
    if y == 0:
        return q ** (2 * (k - (k + 1) // 2))
    if R.valuation(y) % 2:
        return 0
    # y = ϖ^{2s}u: (c, d) = ϖ^s(c', d') with q^{2s} lifts of each solution mod ϖ^{k-2s}
    return (q + 1) * q ** (k - 1)


# -------------------------------------------------------- other identities
def quad_diff_sum_direct(eta: int, lam: AddChar) -> CycloValue:
    """Σ_{e, f} λ(e² - ηf²)."""
    R = lam.ring
    sq = [R.mul(x, x) for x in range(R.size)]
    out = []
    for s in sq:
        for t in sq:
            out.append(lam(R.sub(s, R.mul(eta, t))))
    return CycloValue.from_exponents(lam.m, out)


def quad_diff_sum(eta: int, lam: AddChar) -> CycloValue:
    R = lam.ring
    _check_nonsquare(R, eta)
    return CycloValue.integer(lam.m, (-R.q) ** R.r)


def scaled_unit_sum_direct(j: int, lam: AddChar) -> CycloValue:
    """Σ over the set ϖ^j O_k^× of λ(x)."""
    R = lam.ring
    pts = {R.mul_pi(u, j) for u in _units(R)}
    return CycloValue.from_exponents(lam.m, (lam(x) for x in pts))


def scaled_unit_sum(j: int, lam: AddChar) -> CycloValue:
    k = lam.ring.r
    if not 0 <= j <= k:
        raise ValueError(f"j = {j} outside [0, {k}]")
    if j < k - 1:
        return CycloValue.zero(lam.m)
    return CycloValue.integer(lam.m, -1 if j == k - 1 else 1)


def _identity1_points(R: Ring, i: int, l: int) -> list[int]:
    lo = max(l - i, 0)
    return [x for x in R.section(l) if R.valuation(x) >= lo]


def identity1_sum_direct(i: int, u: int, lam: MultChar, R: Ring) -> CycloValue:
    """Σ λ(1 + uϖ^i xy) over x, y ∈ A_l with v(x), v(y) ≥ l - i.

    λ is a character of the group 1 + ϖ^l O_r (r = 2l).
    """
    l = R.r // 2
    xs = _identity1_points(R, i, l)
    out = []
    for x in xs:
        ux = R.mul_pi(R.mul(u, x), i)
        for y in xs:
            out.append(lam(R.add(R.one, R.mul(ux, y))))
    return CycloValue.from_exponents(lam.m, out)


def identity1_sum(i: int, u: int, lam: MultChar, R: Ring) -> CycloValue:
    if not 0 <= i <= R.r - 1:
        raise ValueError(f"i = {i} outside [0, {R.r - 1}]")
    if not R.is_unit(u):
        raise ValueError("u must be a unit")
    return CycloValue.integer(lam.m, R.q**i)


# ------------------------------------------------------------------- χ₂
class Chi2(NamedTuple):
    value: CycloValue
    branch: str
    direct: bool = False


def _check_chi2_range(R: Ring, i: int, j: int, k: int) -> None:
    r, l = R.r, R.r // 2
    if r % 2:
        raise ValueError("χ₂ is defined for even r only")
    if not (l <= i < r - 1 and 0 <= j <= r - 1 and 1 <= k <= r and 1 + i + j <= r):
        raise ValueError(f"(i, j, k) = {(i, j, k)} outside the admissible range for r = {r}")


def chi2_direct(
    i: int, j: int, k: int, alpha: int, beta1: int, delta1: int, psi: AddChar, theta_exp: int = 0
) -> CycloValue:
    """θ(I_α) Σ_{c ∈ A_{l-1}, d ∈ A_l^×} ψ(ϖ^i/α ((ϖ^{j+1}β' - ϖ²c²)/d - dϖ^{j+k}Δ̂'β'))."""
    R = psi.ring
    _check_chi2_range(R, i, j, k)
    l = R.r // 2
    ai = R.inv(alpha)
    top = R.mul_pi(beta1, j + 1)
    dd = R.mul_pi(R.mul(delta1, beta1), j + k)
    out = []
    for d in R.section_units(l):
        di = R.inv(d)
        tail = R.mul(d, dd)
        for c in R.section(l - 1):
            z = R.sub(R.mul(R.sub(top, R.mul_pi(R.mul(c, c), 2)), di), tail)
            out.append(psi(R.mul_pi(R.mul(ai, z), i)) + theta_exp)
    return CycloValue.from_exponents(psi.m, out)


def chi2(
    i: int, j: int, k: int, alpha: int, beta1: int, delta1: int, psi: AddChar, theta_exp: int = 0
) -> Chi2:
    """The reduction of :func:`chi2_direct` to Gauss, Kloosterman and Salié sums.

    With n = r - i, λ(z) = ψ(ϖ^i z/α) on O_n, μ = λ(ϖ²·) on O_{n-2}:

    * j ≥ 1: q^{2(i-l)+3} G_{n-2}(-1, μ) times |O_{n-2}^×| or 0 when
      i+j+1 = r, else q^{j-1} K or S_{n-j-1}(β', -ϖ^{k-1}Δ̂'β', μ(ϖ^{j-1}·));
    * j = 0: q^{2(i-l)+2} G_{n-2}(-1, μ) K or S_{n-1}(β', -ϖ^{k-1}Δ̂'β', λ(ϖ·)),

    Salié when n is odd.  For n = 2 and j = 1 every term is trivial.
    Kloosterman sums over O_1 with two unit arguments are left as sums and
    the result is flagged ``direct``.
    """
    R = psi.ring
    _check_chi2_range(R, i, j, k)
    r, l, q, m = R.r, R.r // 2, R.q, psi.m
    n = r - i
    th = CycloValue.root(m, theta_exp)
    if n == 2 and j >= 1:
        return Chi2(th * (q ** (r - 2) * (q - 1)), "i=r-2")
    lam = psi.factor(i, R.inv(alpha))
    if n - 2 >= 1:
        mu = lam.factor(2)
        G = gauss(mu.ring.neg(mu.ring.one), mu)
    else:
        G = CycloValue.one(m)
    twist = n % 2  # parity of n - 2

    def kl(char: AddChar, scale: int) -> tuple[CycloValue, bool]:
        S = char.ring
        a = R.reduce(beta1, S.r)
        b = 0 if k > 1 else R.reduce(R.neg(R.mul(delta1, beta1)), S.r)
        flag = S.r == 1 and S.is_unit(a) and S.is_unit(b)
        val = _sign_kloosterman(a, b, char, twist)
        return val * scale, flag

    if j >= 1:
        if i + j + 1 == r:
            body = G * ((q - 1) * q ** (n - 3) if twist == 0 else 0)
            return Chi2(th * body * q ** (2 * (i - l) + 3), "j>=1,i+j+1=r")
        val, flag = kl(mu.factor(j - 1), q ** (j - 1))
        tag = "j>=1," + ("S" if twist else "K")
        return Chi2(th * G * val * q ** (2 * (i - l) + 3), tag, flag)
    val, flag = kl(lam.factor(1), 1)
    tag = "j=0," + ("S" if twist else "K")
    return Chi2(th * G * val * q ** (2 * (i - l) + 2), tag, flag)
