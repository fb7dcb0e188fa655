"""Strongly primitive irreducible characters of GL(2, O_r) for even r.

Three families, each induced from a character of a stabilizer SK_l:

* :class:`PrincipalSplit` Π_{μ,μ'}: S the diagonal torus;
* :class:`Cuspidal` 𝒞_{ν,ν'}: S = O_r[β̂]^× for an elliptic β̂;
* :class:`NonPrincipalSplit` Ξ_{a,Δ,θ}: S = S(Δ̂, 0), twisted by χ̃_a ∘ det.

:func:`char_value` evaluates closed forms and the finite sums left over on
B-classes; :func:`frobenius_char_value` sums the induced character over an
explicit coset section and is the independent oracle.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
import itertools

import numpy as np

from .abelian import abelian_table
from .chars import (
    MultChar,
    all_characters,
    cuspidal_tau,
    is_regular_cuspidal,
    is_regular_split,
    split_params,
    standard_psi,
    theta_characters,
)
from .context import GL2Context
from .cyclo import CycloValue, field
from .group import ConjClassLabel, Mat2, det, mat_inv, mat_mul
from .ring import Ring, quad_ext
from .sums import chi2


# -------------------------------------------------------------------- labels
@dataclass(frozen=True)
class PrincipalSplit:
    mu: MultChar
    mu2: MultChar
    family = "PS"

    def name(self, R: Ring) -> str:
        return f"Pi[{_c(self.mu)}|{_c(self.mu2)}]"

    def to_json(self, R: Ring) -> dict:
        return {"family": self.family, "mu": self.mu.to_json(), "mu2": self.mu2.to_json()}


@dataclass(frozen=True)
class Cuspidal:
    nu: MultChar
    nu2: MultChar
    tau: int  # element of A_l^E recovered from (ν, ν')
    family = "C"

    def name(self, R: Ring) -> str:
        return f"Cusp[{_c(self.nu)}|{_c(self.nu2)}]"

    def to_json(self, R: Ring) -> dict:
        return {"family": self.family, "nu": self.nu.to_json(), "nu2": self.nu2.to_json()}


@dataclass(frozen=True)
class NonPrincipalSplit:
    a: int
    delta: int
    theta: MultChar
    chi_a: MultChar
    family = "NPS"

    def name(self, R: Ring) -> str:
        return f"Xi[{_d(R, self.a)};{_d(R, self.delta)};{_c(self.theta)}]"

    def to_json(self, R: Ring) -> dict:
        return {
            "family": self.family,
            "a": R.to_str(self.a),
            "delta": R.to_str(self.delta),
            "theta": self.theta.to_json(),
            "chi_a": self.chi_a.to_json(),
        }


IrrepLabel = PrincipalSplit | Cuspidal | NonPrincipalSplit


def _c(chi: MultChar) -> str:
    return ":".join(map(str, chi.c))


def _d(R: Ring, x: int) -> str:
    return ":".join(map(str, R.digits(x)))


# --------------------------------------------------------------- enumeration
def family_counts(q: int, r: int) -> dict[str, int]:
    return {
        "PS": (q - 1) ** 3 * q ** (2 * r - 3) // 2,
        "C": (q - 1) * (q * q - 1) * q ** (2 * r - 3) // 2,
        "NPS": (q - 1) * q ** (2 * r - 2),
    }


def dimension(label: IrrepLabel, R: Ring) -> int:
    q, r = R.q, R.r
    if isinstance(label, PrincipalSplit):
        return (q + 1) * q ** (r - 1)
    if isinstance(label, Cuspidal):
        return (q - 1) * q ** (r - 1)
    return (q * q - 1) * q ** (r - 2)


def unit_characters(ctx: GL2Context) -> list[MultChar]:
    return _cached_chars(ctx, "units")


def ext_unit_characters(ctx: GL2Context) -> list[MultChar]:
    return _cached_chars(ctx, "ext_units")


def _cached_chars(ctx: GL2Context, attr: str) -> list[MultChar]:
    key = "_chars_" + attr
    if not hasattr(ctx, key):
        setattr(ctx, key, all_characters(getattr(ctx, attr), ctx.m))
    return getattr(ctx, key)


def principal_split_labels(ctx: GL2Context) -> list[PrincipalSplit]:
    R = ctx.ring
    chars = unit_characters(ctx)
    return [
        PrincipalSplit(mu, mu2)
        for i, mu in enumerate(chars)
        for mu2 in chars[i + 1 :]
        if is_regular_split(mu, mu2, R)
    ]


def cuspidal_labels(ctx: GL2Context) -> list[Cuspidal]:
    """One label (χ, 1) per class.

    θ_{ν,ν'} only sees z ↦ ν(z)ν'(σz), and χ, χ∘σ induce the same
    representation, so the classes are the regular χ modulo σ.
    """
    ext = ctx.ext
    triv = MultChar(ctx.ext_units, [0] * len(ctx.ext_units.orders), ctx.m)
    out = []
    for chi in ext_unit_characters(ctx):
        if not is_regular_cuspidal(chi, triv, ext):
            continue
        if chi.c > chi.compose(ext.sigma).c:
            continue
        out.append(Cuspidal(chi, triv, cuspidal_tau(chi, triv, ext, ctx.psi)))
    return out


def twist_character(ctx: GL2Context, a: int) -> MultChar:
    """χ̃_a: the first character of O_r^× with χ̃(1 + ϖ^l y) = ψ(aϖ^l y)."""
    R, l, psi = ctx.ring, ctx.l, ctx.psi
    ys = R.section(R.r - l)
    pts = [(R.add(R.one, R.mul_pi(y, l)), psi(R.mul_pi(R.mul(a, y), l))) for y in ys]
    for chi in unit_characters(ctx):
        if all(chi(g) == e for g, e in pts):
            return chi
    raise AssertionError(f"no character of O_r^x restricts to ψ_(aI) for a = {a}")


def theta_list(ctx: GL2Context, delta: int) -> list[MultChar]:
    key = "_theta"
    if not hasattr(ctx, key):
        setattr(ctx, key, {})
    cache = getattr(ctx, key)
    if delta not in cache:
        cache[delta] = theta_characters(ctx.s_groups[delta], ctx.psi, ctx.m)
    return cache[delta]


def nonprincipal_split_labels(ctx: GL2Context) -> list[NonPrincipalSplit]:
    R = ctx.ring
    out = []
    for a in R.section(ctx.l):
        chi_a = twist_character(ctx, a)
        for delta in ctx.deltas:
            for th in theta_list(ctx, delta):
                out.append(NonPrincipalSplit(a, delta, th, chi_a))
    return out


def enumerate_irreps(ctx: GL2Context) -> list[IrrepLabel]:
    """All strongly primitive irreducibles: Π, then 𝒞, then Ξ."""
    key = "_irreps"
    if not hasattr(ctx, key):
        labels = principal_split_labels(ctx) + cuspidal_labels(ctx) + nonprincipal_split_labels(ctx)
        setattr(ctx, key, labels)
    return list(getattr(ctx, key))


# ----------------------------------------------------------- closed forms
def _val(ctx: GL2Context, terms: Iterable[tuple[int, int]]) -> CycloValue:
    return CycloValue.from_terms(ctx.m, terms)


def _ext_point(ctx: GL2Context, x: int, y: int) -> int:
    """x + yΦ in O_r^E."""
    ext = ctx.ext
    E = ext.E
    return E.add(ext.embed(x), E.mul(ext.embed(y), ext.phi))


def char_value(ctx: GL2Context, label: IrrepLabel, cls: ConjClassLabel) -> CycloValue:
    """Closed-form character value of ``label`` on the class ``cls``."""
    if isinstance(label, PrincipalSplit):
        return _pi_value(ctx, label, cls)
    if isinstance(label, Cuspidal):
        return _cusp_value(ctx, label, cls)
    return _xi_value(ctx, label, cls)


def _pi_value(ctx: GL2Context, L: PrincipalSplit, cls: ConjClassLabel) -> CycloValue:
    q, r = ctx.q, ctx.r
    mu, mu2 = L.mu, L.mu2
    a = cls.alpha
    if cls.kind == "I":
        return _val(ctx, [(mu(a) + mu2(a), (q + 1) * q ** (r - 1))])
    if cls.kind == "D":
        d = cls.second
        return _val(ctx, [(mu(a) + mu2(d), q**cls.i), (mu2(a) + mu(d), q**cls.i)])
    if cls.kind == "B" and cls.i == r - 1:
        return _val(ctx, [(mu(a) + mu2(a), q ** (r - 1))])
    return CycloValue.zero(ctx.m)


def _cusp_value(ctx: GL2Context, L: Cuspidal, cls: ConjClassLabel) -> CycloValue:
    q, r = ctx.q, ctx.r
    ext = ctx.ext
    nu, nu2 = L.nu, L.nu2
    a = ext.embed(cls.alpha)
    if cls.kind == "I":
        return _val(ctx, [(nu(a) + nu2(a), (q - 1) * q ** (r - 1))])
    if cls.kind == "C":
        R = ctx.ring
        z = _ext_point(ctx, cls.alpha, R.mul_pi(cls.second, cls.i))
        zs = ext.sigma(z)
        c = (-q) ** cls.i
        return _val(ctx, [(nu(z) + nu2(zs), c), (nu(zs) + nu2(z), c)])
    if cls.kind == "B" and cls.i == r - 1:
        return _val(ctx, [(nu(a) + nu2(a), -(q ** (r - 1)))])
    return CycloValue.zero(ctx.m)


def _sigma_exp(ctx: GL2Context, L: NonPrincipalSplit, alpha: int) -> int:
    """σ(α) = θ(αI)."""
    S = ctx.s_groups[L.delta]
    return L.theta(S.encode(alpha, 0))


def _xi_value(ctx: GL2Context, L: NonPrincipalSplit, cls: ConjClassLabel) -> CycloValue:
    R, q, r = ctx.ring, ctx.q, ctx.r
    a = cls.alpha
    chi = L.chi_a
    if cls.kind == "I":
        e = chi(R.mul(a, a)) + _sigma_exp(ctx, L, a)
        return _val(ctx, [(e, (q * q - 1) * q ** (r - 2))])
    if cls.kind == "D":
        if cls.i != r - 1:
            return CycloValue.zero(ctx.m)
        d = cls.second
        e = chi(a) + chi(d) + _sigma_exp(ctx, L, d)
        return _val(ctx, [(e, (q - 1) * q ** (r - 2))])
    if cls.kind == "C":
        if cls.i != r - 1:
            return CycloValue.zero(ctx.m)
        e = chi(R.mul(a, a)) + _sigma_exp(ctx, L, a)
        return _val(ctx, [(e, -(q + 1) * q ** (r - 2))])
    return _xi_b_value(ctx, L, cls)


def xi_b_case(ctx: GL2Context, L: NonPrincipalSplit, cls: ConjClassLabel) -> str:
    """Which branch of the B-class analysis applies."""
    return _xi_b_dispatch(ctx, L, cls)[0]


def _b_params(ctx: GL2Context, L: NonPrincipalSplit, cls: ConjClassLabel):
    R, r = ctx.ring, ctx.r
    i, beta = cls.i, cls.second
    if beta == 0:
        j, b1 = r - i - 1, R.one
    else:
        j, b1 = R.unit_part(beta)
    k, d1 = R.unit_part(L.delta)
    return i, j, b1, k, d1


def _xi_b_dispatch(ctx: GL2Context, L: NonPrincipalSplit, cls: ConjClassLabel):
    R, r, l = ctx.ring, ctx.r, ctx.l
    i, j, b1, k, d1 = _b_params(ctx, L, cls)
    if i == r - 1:
        return "i=r-1", None
    if i >= l:
        return "chi2", None
    if i + j + 1 < l:
        if k != j + 1:
            return "zero:k!=j+1", None
        g2 = R.neg(R.div(b1, d1))
        if R.legendre(g2) != 1:
            return "zero:nonsquare", None
        return "chi3", R.sqrt(g2)
    if i + k < l:
        return "zero:i+k<l", None
    return "chi4", None


def _xi_b_value(ctx: GL2Context, L: NonPrincipalSplit, cls: ConjClassLabel) -> CycloValue:
    R, q, r, l, m = ctx.ring, ctx.q, ctx.r, ctx.l, ctx.m
    a = cls.alpha
    i, j, b1, k, d1 = _b_params(ctx, L, cls)
    det_b = R.sub(R.mul(a, a), R.mul_pi(cls.second, 2 * i + 1))
    tw = L.chi_a(det_b)
    case, gamma = _xi_b_dispatch(ctx, L, cls)
    sig = _sigma_exp(ctx, L, a)
    if case.startswith("zero"):
        return CycloValue.zero(m)
    if case == "i=r-1":
        return _val(ctx, [(tw + sig, -(q ** (r - 2)))])
    if case == "chi2":
        if L.delta == 0:
            # dΔ̂ vanishes; any k' with j + k' = r kills the Δ term
            return chi2(i, j, r - j, a, b1, R.one, ctx.psi, tw + sig).value
        if k > j:
            return chi2(i, j, k - j, a, b1, R.div(d1, b1), ctx.psi, tw + sig).value
        return _xi_chi2_sum(ctx, L, cls, tw + sig)
    if case == "chi3":
        ds = []
        for g in (gamma, R.neg(gamma)):
            for f in R.section(i + k):
                d = R.truncate(R.add(g, R.mul_pi(f, l - i - k)), l)
                ds.append(d)
        es = R.section(i)
        top = R.mul_pi(b1, i + k)
    else:
        ds = R.section_units(l)
        es = R.section(i)
        top = R.mul_pi(b1, i + j + 1)
    S = ctx.s_groups[L.delta]
    dh = L.delta
    out = []
    for d in ds:
        di = R.inv(d)
        dpi = R.mul_pi(d, i)
        th = L.theta(S.encode(a, dpi))
        den = R.add(R.mul(a, a), R.mul(R.mul(dpi, dpi), dh))
        scale = R.div(a, den)
        head = R.mul(R.mul_pi(d, i), dh)  # dϖ^{i+k}Δ̂'
        for e in es:
            inner = R.mul(di, R.sub(top, R.mul_pi(R.mul(e, e), 2 * l - i)))
            out.append(th + ctx.psi(R.mul(R.add(head, inner), scale)))
    return CycloValue.from_exponents(m, out) * CycloValue.root(m, tw)


def _xi_chi2_sum(ctx: GL2Context, L: NonPrincipalSplit, cls: ConjClassLabel, exp0: int) -> CycloValue:
    """θ(I_α) Σ_{c ∈ A_{l-1}, d ∈ A_l^×} ψ(((ϖ^{i+1}β - ϖ^{i+2}c²)/d - Δ̂dϖ^i)/α)."""
    R, l = ctx.ring, ctx.l
    i, a, beta = cls.i, cls.alpha, cls.second
    ai = R.inv(a)
    top = R.mul_pi(beta, i + 1)
    out = []
    for d in R.section_units(l):
        di = R.inv(d)
        tail = R.mul(L.delta, R.mul_pi(d, i))
        for c in R.section(l - 1):
            z = R.sub(R.mul(R.sub(top, R.mul_pi(R.mul(c, c), i + 2)), di), tail)
            out.append(exp0 + ctx.psi(R.mul(ai, z)))
    return CycloValue.from_exponents(ctx.m, out)


# ---------------------------------------------------------------- oracle
@dataclass(frozen=True)
class CosetSection:
    family: str
    matrices: tuple[Mat2, ...]


def coset_section(ctx: GL2Context, family: str) -> CosetSection:
    R, l = ctx.ring, ctx.l
    one = R.one
    if family == "PS":
        mats = [(R.add(one, R.mul(x, y)), x, y, one) for x in R.section(l) for y in R.section(l)]
        for x in R.section(l):
            for z in R.section(l - 1):
                pz = R.mul_pi(z, 1)
                mats.append((R.add(pz, x), R.add(one, R.mul(x, pz)), one, pz))
        return CosetSection(family, tuple(mats))
    ys = [(d, 0, c, one) for c in R.section(l) for d in R.section_units(l)]
    if family == "C":
        return CosetSection(family, tuple(ys))
    zs = [(0, d, one, R.mul_pi(c, 1)) for c in R.section(l - 1) for d in R.section_units(l)]
    return CosetSection(family, tuple(ys + zs))


class _Stabilizer:
    """The character θψ_β of SK_l, with its membership test."""

    def __init__(self, ctx: GL2Context, label: IrrepLabel):
        self.ctx = ctx
        self.label = label
        R, l = ctx.ring, ctx.l
        if isinstance(label, PrincipalSplit):
            a, d = split_params(label.mu, label.mu2, ctx.psi)
            self.beta = (a, 0, 0, d)
            self.n, self.t = None, None
        elif isinstance(label, Cuspidal):
            ext = ctx.ext
            self.n = ext.norm(label.tau)
            self.t = ext.trace(label.tau)
            self.beta = (0, R.one, R.neg(self.n), self.t)
        else:
            self.n, self.t = label.delta, 0
            self.beta = (0, R.one, R.neg(label.delta), 0)
        self.l = l

    def contains(self, M: Mat2) -> bool:
        R, l = self.ctx.ring, self.l
        a, b, c, d = M
        if self.n is None:
            return R.valuation(b) >= l and R.valuation(c) >= l
        c1 = R.add(c, R.mul(b, self.n))
        c2 = R.sub(R.sub(d, a), R.mul(b, self.t))
        return R.valuation(c1) >= l and R.valuation(c2) >= l

    def value(self, M: Mat2) -> int:
        """Exponent of the character at M ∈ SK_l (M = s·k)."""
        ctx, R, L = self.ctx, self.ctx.ring, self.label
        a, b, c, d = M
        if self.n is None:
            s = (a, 0, 0, d)
            th = L.mu(a) + L.mu2(d)
        else:
            s = (a, b, R.neg(R.mul(b, self.n)), R.add(a, R.mul(b, self.t)))
            if isinstance(L, Cuspidal):
                ext = ctx.ext
                E = ext.E
                z = E.add(ext.embed(a), E.mul(ext.embed(b), L.tau))
                th = L.nu(z) + L.nu2(ext.sigma(z))
            else:
                S = ctx.s_groups[L.delta]
                th = L.theta(S.encode(a, b)) + L.chi_a(det(R, M))
        k = mat_mul(R, mat_inv(R, s), M)
        x = (R.sub(k[0], R.one), k[1], k[2], R.sub(k[3], R.one))
        bx = mat_mul(R, self.beta, x)
        return th + ctx.psi(R.add(bx[0], bx[3]))


def stabilizer(ctx: GL2Context, label: IrrepLabel) -> _Stabilizer:
    return _Stabilizer(ctx, label)


def check_coset_section(ctx: GL2Context, label: IrrepLabel) -> bool:
    """|X| = |G|/|SK_l| and the cosets SK_l t are pairwise distinct."""
    R = ctx.ring
    H = _Stabilizer(ctx, label)
    X = coset_section(ctx, label.family).matrices
    if len(X) != dimension(label, R):
        return False
    inv = [mat_inv(R, t) for t in X]
    for i, t in enumerate(X):
        for j in range(i + 1, len(X)):
            if H.contains(mat_mul(R, t, inv[j])):
                return False
    return True


def frobenius_char_value(ctx: GL2Context, label: IrrepLabel, g: Mat2) -> CycloValue:
    """Σ_{t ∈ X} (θψ_β)^0(t g t^{-1}) over the coset section X."""
    R = ctx.ring
    H = _Stabilizer(ctx, label)
    out = []
    for t in coset_section(ctx, label.family).matrices:
        M = mat_mul(R, mat_mul(R, t, g), mat_inv(R, t))
        if H.contains(M):
            out.append(H.value(M))
    return CycloValue.from_exponents(ctx.m, out)


# ------------------------------------------------------------------ tables
def character_table(ctx: GL2Context, labels: Sequence[IrrepLabel] | None = None) -> list[list[CycloValue]]:
    """Rows in ``enumerate_irreps`` order, columns in class order."""
    labels = enumerate_irreps(ctx) if labels is None else labels
    return [[char_value(ctx, L, c) for c in ctx.classes] for L in labels]


def frobenius_table(ctx: GL2Context, labels: Sequence[IrrepLabel] | None = None) -> list[list[CycloValue]]:
    labels = enumerate_irreps(ctx) if labels is None else labels
    R = ctx.ring
    return [[frobenius_char_value(ctx, L, c.matrix(R, ctx.eps)) for c in ctx.classes] for L in labels]


def _coeff_tensor(rows: Sequence[Sequence[CycloValue]], m: int) -> np.ndarray:
    n = field(m).degree
    out = np.zeros((len(rows), len(rows[0]), n), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            v = v if v.m == m else v.lift(m)
            out[i, j] = v.coeffs
    return out


def gram_matrix(
    rows: Sequence[Sequence[CycloValue]], weights: Sequence[int], m: int
) -> list[list[CycloValue]]:
    """G[a][b] = Σ_c w_c χ_a(c) conj(χ_b(c)), exactly."""
    A = _coeff_tensor(rows, m)
    B = _coeff_tensor([[v.conj() for v in row] for row in rows], m)
    w = np.asarray(weights, dtype=np.int64)
    n = A.shape[2]
    full = np.zeros((A.shape[0], A.shape[0], 2 * n - 1), dtype=np.int64)
    Aw = A * w[None, :, None]
    for s in range(n):
        # coefficient s of A times every coefficient of B
        full[:, :, s : s + n] += np.einsum("ic,jcb->ijb", Aw[:, :, s], B)
    red = field(m).reduction
    idx = np.arange(2 * n - 1) % m
    dense = np.zeros((2 * n - 1, red.shape[1]), dtype=np.int64)
    dense[:] = red[idx]
    coeffs = full @ dense
    return [[CycloValue(m, coeffs[i, j].copy()) for j in range(A.shape[0])] for i in range(A.shape[0])]


def inner_products(ctx: GL2Context, table: Sequence[Sequence[CycloValue]]) -> list[list[CycloValue]]:
    """|G|·⟨χ_a, χ_b⟩ for all rows of ``table``."""
    return gram_matrix(table, ctx.class_sizes(), ctx.m)


# ------------------------------------------------- level-one completion
@dataclass(frozen=True)
class LevelOneCharacter:
    """χ ∘ (mod ϖ) ⊗ η ∘ det for an irreducible χ of GL(2, k)."""

    name: str
    values: tuple[CycloValue, ...]  # over ctx.classes


def _gl2_residue(ctx: GL2Context):
    """Brute-force irreducible characters of GL(2, k), k the residue field."""
    k = ctx.ring.residue_field
    m = ctx.m
    G = [g for g in itertools.product(range(k.size), repeat=4) if k.is_unit(det(k, g))]
    index = {g: i for i, g in enumerate(G)}
    inv = [mat_inv(k, g) for g in G]
    conj_tab = np.empty((len(G), len(G)), dtype=np.int64)  # [t, g] -> t g t^{-1}
    for ti, t in enumerate(G):
        for gi, g in enumerate(G):
            conj_tab[ti, gi] = index[mat_mul(k, mat_mul(k, t, g), inv[ti])]
    ext1 = quad_ext(k)
    E1 = ext1.E
    kchars = all_characters(abelian_table(k.units, k.mul, k.one, name="k^x"), m)
    echars = all_characters(abelian_table(E1.units, E1.mul, E1.one, name="l^x"), m)
    psi1 = standard_psi(k, m)

    def induce(mask: np.ndarray, vals: np.ndarray) -> list[CycloValue]:
        hsize = int(mask.sum())
        out = []
        for gi in range(len(G)):
            img = conj_tab[:, gi]
            v = CycloValue.from_exponents(m, vals[img[mask[img]]])
            c = np.asarray(v.coeffs, dtype=np.int64)
            if np.any(c % hsize):
                raise AssertionError("induced character is not integral")
            out.append(CycloValue(m, c // hsize))
        return out

    def det_char(chi: MultChar) -> list[CycloValue]:
        return [CycloValue.root(m, chi(det(k, g))) for g in G]

    borel = np.array([g[2] == 0 for g in G])
    zn = np.array([g[2] == 0 and g[0] == g[3] for g in G])
    # l^x = k[Φ]^x inside GL(2, k) as x + yΦ ↦ [[x, εy], [y, x]]
    emb = {}
    for x in range(k.size):
        for y in range(k.size):
            g = (x, k.mul(k.nonsquare, y), y, x)
            if g in index:
                emb[index[g]] = E1.add(ext1.embed(x), E1.mul(ext1.embed(y), ext1.phi))
    torus = np.zeros(len(G), dtype=bool)
    torus[list(emb)] = True

    chars: list[tuple[str, list[CycloValue]]] = []
    for chi in kchars:
        chars.append((f"det[{_c(chi)}]", det_char(chi)))
    for n, c1 in enumerate(kchars):
        for c2 in kchars[n:]:
            ind = induce(borel, np.array([c1(g[0]) + c2(g[3]) if g[2] == 0 else 0 for g in G], dtype=np.int64))
            if c1 == c2:
                chars.append((f"St[{_c(c1)}]", [x - y for x, y in zip(ind, det_char(c1))]))
            else:
                chars.append((f"PS[{_c(c1)}|{_c(c2)}]", ind))
    seen = set()
    for th in echars:
        thf = th.compose(ext1.sigma)
        if th == thf or thf.c in seen:
            continue
        seen.add(th.c)
        v1 = np.array([th(ext1.embed(g[0])) + psi1(g[1]) if h else 0 for g, h in zip(G, zn)], dtype=np.int64)
        v2 = np.zeros(len(G), dtype=np.int64)
        for gi, z in emb.items():
            v2[gi] = th(z)
        a, b = induce(zn, v1), induce(torus, v2)
        chars.append((f"Cu[{_c(th)}]", [x - y for x, y in zip(a, b)]))
    return index, chars


def level_one_characters(ctx: GL2Context) -> list[LevelOneCharacter]:
    """The irreducibles of sublevel ≤ 1: pulled back from GL(2, k), twisted."""
    R = ctx.ring
    index, chars = _gl2_residue(ctx)
    # twists: characters of O_r^× modulo those trivial on 1 + ϖO_r
    one_plus = [R.add(R.one, R.mul_pi(x, 1)) for x in R.section(R.r - 1)]
    reps: dict[tuple, MultChar] = {}
    for eta in unit_characters(ctx):
        key = tuple(eta(u) for u in one_plus)
        reps.setdefault(key, eta)
    out = []
    for eta in reps.values():
        for name, vals in chars:
            col = []
            for cls in ctx.classes:
                M = cls.matrix(R, ctx.eps)
                g = tuple(R.reduce(x, 1) for x in M)
                col.append(vals[index[g]] * CycloValue.root(ctx.m, eta(det(R, M))))
            out.append(LevelOneCharacter(f"{name}x{_c(eta)}", tuple(col)))
    return out
