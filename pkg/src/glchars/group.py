"""GL(2, O_r): matrices, conjugacy-class representatives, and a brute-force oracle.

Matrices are 4-tuples ``(a, b, c, d)`` of ring codes, read row-major.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .abelian import BudgetExceeded, abelian_table
from .ring import MIXED, Ring

Mat2 = tuple[int, int, int, int]

DEFAULT_BUDGET = 10**6


# ------------------------------------------------------------------ matrices
def mat(R: Ring, a: int, b: int, c: int, d: int) -> Mat2:
    return (a, b, c, d)


def identity(R: Ring) -> Mat2:
    return (R.one, 0, 0, R.one)


def scalar(R: Ring, a: int) -> Mat2:
    return (a, 0, 0, a)


def mat_mul(R: Ring, X: Mat2, Y: Mat2) -> Mat2:
    a, b, c, d = X
    e, f, g, h = Y
    add, mul = R.add, R.mul
    return (
        add(mul(a, e), mul(b, g)),
        add(mul(a, f), mul(b, h)),
        add(mul(c, e), mul(d, g)),
        add(mul(c, f), mul(d, h)),
    )


def det(R: Ring, X: Mat2) -> int:
    a, b, c, d = X
    return R.sub(R.mul(a, d), R.mul(b, c))


def trace(R: Ring, X: Mat2) -> int:
    return R.add(X[0], X[3])


def mat_inv(R: Ring, X: Mat2) -> Mat2:
    a, b, c, d = X
    u = R.inv(det(R, X))
    return (R.mul(d, u), R.mul(R.neg(b), u), R.mul(R.neg(c), u), R.mul(a, u))


def mat_sub(R: Ring, X: Mat2, Y: Mat2) -> Mat2:
    return tuple(R.sub(x, y) for x, y in zip(X, Y))


def mat_scale(R: Ring, s: int, X: Mat2) -> Mat2:
    return tuple(R.mul(s, x) for x in X)


def conj(R: Ring, g: Mat2, X: Mat2, g_inv: Mat2 | None = None) -> Mat2:
    """g X g^{-1}."""
    if g_inv is None:
        g_inv = mat_inv(R, g)
    return mat_mul(R, mat_mul(R, g, X), g_inv)


def is_invertible(R: Ring, X: Mat2) -> bool:
    return R.is_unit(det(R, X))


def mat_valuation(R: Ring, X: Mat2) -> int:
    return min(R.valuation(x) for x in X)


def in_congruence_kernel(R: Ring, X: Mat2, level: int) -> bool:
    """X ≡ I mod ϖ^level."""
    return mat_valuation(R, mat_sub(R, X, identity(R))) >= level


# -------------------------------------------------------------------- counts
def group_order(R: Ring) -> int:
    q, r = R.q, R.r
    return q ** (4 * r - 3) * (q + 1) * (q - 1) ** 2


def class_count(R: Ring) -> int:
    q, r = R.q, R.r
    return q ** (r - 1) * (q ** (r + 1) - 1)


# -------------------------------------------------------------------- labels
@dataclass(frozen=True, order=True)
class ConjClassLabel:
    """A conjugacy class representative.

    kind ``I``: αI.  ``B``: [[α, ϖ^{i+1}β],[ϖ^i, α]].
    ``C``: [[α, ϖ^i εβ],[ϖ^i β, α]].  ``D``: diag(α, δ) with v(α-δ) = i.
    ``second`` holds β (B, C) or δ (D).
    """

    kind: str
    i: int
    alpha: int
    second: int

    def matrix(self, R: Ring, eps: int | None = None) -> Mat2:
        a = self.alpha
        if self.kind == "I":
            return (a, 0, 0, a)
        if self.kind == "B":
            return (a, R.mul_pi(self.second, self.i + 1), R.pi_pow(self.i), a)
        if self.kind == "C":
            e = R.nonsquare if eps is None else eps
            return (a, R.mul_pi(R.mul(e, self.second), self.i), R.mul_pi(self.second, self.i), a)
        if self.kind == "D":
            return (a, 0, 0, self.second)
        raise ValueError(f"unknown class kind {self.kind!r}")

    def to_json(self, R: Ring) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind != "I":
            out["i"] = self.i
        out["alpha"] = R.to_str(self.alpha)
        if self.kind in "BC":
            out["beta"] = R.to_str(self.second)
        elif self.kind == "D":
            out["delta"] = R.to_str(self.second)
        return out

    def name(self, R: Ring) -> str:
        def s(x):
            return ":".join(str(d) for d in R.digits(x))

        if self.kind == "I":
            return f"I[{s(self.alpha)}]"
        return f"{self.kind}[{self.i};{s(self.alpha)};{s(self.second)}]"


_KIND_ORDER = {"I": 0, "B": 1, "C": 2, "D": 3}


def _sort_key(L: ConjClassLabel):
    return (_KIND_ORDER[L.kind], L.i, L.alpha, L.second)


def _c_beta(R: Ring, i: int, beta: int) -> int:
    """Normalize β ~ -β for C-classes (β matters modulo ϖ^{r-i})."""
    n = R.r - i
    b = R.truncate(beta, n)
    return min(b, R.truncate(R.neg(b), n))


def class_reps(R: Ring) -> list[ConjClassLabel]:
    """One label per conjugacy class of GL(2, O_r), in canonical order."""
    r = R.r
    units = R.units
    out = [ConjClassLabel("I", r, a, 0) for a in units]
    for i in range(r):
        for a in units:
            for b in R.section(r - i - 1):
                out.append(ConjClassLabel("B", i, a, b))
    eps = R.nonsquare
    for i in range(r):
        for b in R.section_units(r - i):
            if b != _c_beta(R, i, b):
                continue
            shift = R.mul_pi(R.mul(eps, R.mul(b, b)), 2 * i) if 2 * i < r else 0
            for a in range(R.size):
                if R.is_unit(R.sub(R.mul(a, a), shift)):
                    out.append(ConjClassLabel("C", i, a, b))
    for a in units:
        for d in units:
            if a < d and R.valuation(R.sub(a, d)) < r:
                out.append(ConjClassLabel("D", R.valuation(R.sub(a, d)), a, d))
    out.sort(key=_sort_key)
    return out


def _scalar_depth(R: Ring, X: Mat2) -> int:
    """Largest j with X ≡ scalar mod ϖ^j."""
    a, b, c, d = X
    return min(R.valuation(b), R.valuation(c), R.valuation(R.sub(a, d)))


def canonical_form(R: Ring, X: Mat2) -> ConjClassLabel:
    """The class label of an invertible matrix X."""
    if not is_invertible(R, X):
        raise ValueError("matrix is not invertible")
    r = R.r
    j = _scalar_depth(R, X)
    if j >= r:
        return ConjClassLabel("I", r, X[0], 0)
    # X = α1 I + ϖ^j B with α1 ∈ A_j; B is cyclic modulo ϖ, so X is
    # conjugate to [[a, ϖ^j], [ϖ^j b, a]] with a = tr(X)/2 and b = disc(B)/4.
    a1 = R.truncate(X[0], j)
    Bm = tuple(R.div_pi(x, j) for x in (R.sub(X[0], a1), X[1], X[2], R.sub(X[3], a1)))
    n = r - j
    S = R.sub_ring(n)
    dB = R.sub(R.mul(Bm[0], Bm[3]), R.mul(Bm[1], Bm[2]))
    tB, dB = R.reduce(R.add(Bm[0], Bm[3]), n), R.reduce(dB, n)
    quarter = S.inv(S.from_int(4))
    b = S.mul(S.sub(S.mul(tB, tB), S.smul(4, dB)), quarter)
    a = R.mul(R.add(X[0], X[3]), R.half)
    if S.valuation(b) > 0:
        beta = S.div_pi(b, 1) if n > 1 else 0
        return ConjClassLabel("B", j, a, R.lift(S.reduce(beta, n - 1), n - 1) if n > 1 else 0)
    mu = S.sqrt(b)
    if mu is not None:
        m_ = R.mul_pi(R.lift(mu, n), j)
        x, y = R.add(a, m_), R.sub(a, m_)
        return ConjClassLabel("D", j, min(x, y), max(x, y))
    nu = S.sqrt(S.mul(b, S.inv(S.reduce(R.nonsquare, n))))
    return ConjClassLabel("C", j, a, _c_beta(R, j, R.lift(nu, n)))


# -------------------------------------------------------------- brute force
def _unit_generators(R: Ring) -> list[int]:
    return abelian_table(R.units, R.mul, R.one, name="units").basis


def _additive_generators(R: Ring) -> list[int]:
    if R.kind == MIXED:
        return [R.from_digits([int(k == i) for k in range(R.f)]) for i in range(R.f)]
    return [R.mul_pi(R.p**m, j) for j in range(R.r) for m in range(R.f)]


def group_generators(R: Ring) -> list[Mat2]:
    """Generators of GL(2, O_r): elementary matrices and diag(u, 1)."""
    gens = []
    for x in _additive_generators(R):
        gens.append((R.one, x, 0, R.one))
        gens.append((R.one, 0, x, R.one))
    for u in _unit_generators(R):
        gens.append((u, 0, 0, R.one))
    return gens


class ClassPartition:
    """Orbit decomposition of GL(2, O_r) under conjugation."""

    def __init__(self, R: Ring, budget: int = DEFAULT_BUDGET):
        if group_order(R) > budget:
            raise BudgetExceeded(
                f"|GL(2,O_r)| = {group_order(R)} exceeds brute-force budget {budget}"
            )
        from scipy.sparse import coo_matrix
        from scipy.sparse.csgraph import connected_components

        self.ring = R
        n = R.size
        T = R.np_tables
        add, mul, neg, unit = T["add"], T["mul"], T["neg"], T["unit"]
        idx = np.arange(n**4, dtype=np.int64)
        A, B, C, D = idx // n**3, (idx // n**2) % n, (idx // n) % n, idx % n
        dets = add[mul[A, D], neg[mul[B, C]]]
        inv_mask = unit[dets]
        self.matrix_count = int(inv_mask.sum())
        codes = idx[inv_mask]
        A, B, C, D = A[inv_mask], B[inv_mask], C[inv_mask], D[inv_mask]
        pos = np.full(n**4, -1, dtype=np.int64)
        pos[codes] = np.arange(len(codes))

        def mm(X, Y):
            a, b, c, d = X
            e, f, g, h = Y
            return (
                add[mul[a, e], mul[b, g]],
                add[mul[a, f], mul[b, h]],
                add[mul[c, e], mul[d, g]],
                add[mul[c, f], mul[d, h]],
            )

        rows, cols = [], []
        for g in group_generators(R):
            gi = mat_inv(R, g)
            Y = mm(mm(tuple(np.int64(x) for x in g), (A, B, C, D)), tuple(np.int64(x) for x in gi))
            tgt = ((Y[0] * n + Y[1]) * n + Y[2]) * n + Y[3]
            rows.append(np.arange(len(codes)))
            cols.append(pos[tgt])
        rows, cols = np.concatenate(rows), np.concatenate(cols)
        graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(len(codes),) * 2)
        ncomp, lab = connected_components(graph, directed=True, connection="weak")
        # relabel orbits by their smallest matrix code
        first = np.full(ncomp, len(codes), dtype=np.int64)
        np.minimum.at(first, lab, np.arange(len(codes)))
        order = np.argsort(first)
        rank = np.empty(ncomp, dtype=np.int64)
        rank[order] = np.arange(ncomp)
        self.orbit_of_pos = rank[lab]
        self.sizes = np.bincount(self.orbit_of_pos, minlength=ncomp)
        self._pos = pos
        self._codes = codes
        self.n_orbits = ncomp

    def encode(self, X: Mat2) -> int:
        n = self.ring.size
        return ((X[0] * n + X[1]) * n + X[2]) * n + X[3]

    def orbit(self, X: Mat2) -> int:
        p = self._pos[self.encode(X)]
        if p < 0:
            raise ValueError("matrix is not invertible")
        return int(self.orbit_of_pos[p])

    def orbit_size(self, X: Mat2) -> int:
        return int(self.sizes[self.orbit(X)])

    def orbit_members(self, k: int) -> list[Mat2]:
        n = self.ring.size
        out = []
        for c in self._codes[self.orbit_of_pos == k]:
            c = int(c)
            out.append((c // n**3, (c // n**2) % n, (c // n) % n, c % n))
        return out

    def representatives(self) -> list[Mat2]:
        n = self.ring.size
        first = np.full(self.n_orbits, -1, dtype=np.int64)
        for p in range(len(self._codes) - 1, -1, -1):
            first[self.orbit_of_pos[p]] = self._codes[p]
        return [(int(c) // n**3, (int(c) // n**2) % n, (int(c) // n) % n, int(c) % n) for c in first]


_partitions: dict[tuple, ClassPartition] = {}


def brute_force_classes(R: Ring, budget: int = DEFAULT_BUDGET) -> ClassPartition:
    if group_order(R) > budget:
        raise BudgetExceeded(f"|GL(2,O_r)| = {group_order(R)} exceeds brute-force budget {budget}")
    key = R.key
    if key not in _partitions:
        _partitions[key] = ClassPartition(R, budget)
    return _partitions[key]


def class_size(R: Ring, label: ConjClassLabel, budget: int = DEFAULT_BUDGET) -> int:
    if label.kind == "I":
        return 1
    return brute_force_classes(R, budget).orbit_size(label.matrix(R))


def centralizer_order(R: Ring, label: ConjClassLabel, budget: int = DEFAULT_BUDGET) -> int:
    return group_order(R) // class_size(R, label, budget)


@lru_cache(maxsize=None)
def class_sizes(R: Ring, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    part = brute_force_classes(R, budget)
    return tuple(part.orbit_size(L.matrix(R)) for L in class_reps(R))
