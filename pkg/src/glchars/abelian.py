"""Finite abelian groups given by an element list and a multiplication.

The structure is found by brute force: a generating sequence is grown one
element at a time, the resulting relation matrix is brought to Smith normal
form, and every element receives coordinates with respect to a basis whose
orders d_1 | d_2 | ... are the elementary divisors.
"""
from __future__ import annotations

from collections.abc import Callable, Hashable, Sequence
from typing import Any

import numpy as np


class BudgetExceeded(RuntimeError):
    """A brute-force computation would exceed the configured size bound."""


class NonAbelianError(ValueError):
    pass


def smith_normal_form(A: Sequence[Sequence[int]]):
    """Return (U, D, V) with U·A·V = D diagonal, U and V unimodular."""
    n = len(A)
    m = len(A[0]) if n else 0
    D = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k·row_src
        for M in (D, U):
            M[dst] = [a + k * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, k):  # col_dst += k·col_src
        for M in (D, V):
            for row in M:
                row[dst] += k * row[src]

    for t in range(min(n, m)):
        while True:
            piv = None
            for i in range(t, n):
                for j in range(t, m):
                    if D[i][j] and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return U, D, V
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            clean = True
            for i in range(t + 1, n):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, m):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, m) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-a for a in M[t]]
    return U, D, V


class AbelianGroupTable:
    """Structure of a finite abelian group.

    ``coords[i]`` is the coordinate vector of ``elements[i]`` on ``basis``,
    with ``coords[i][j]`` taken modulo ``orders[j]``.
    """

    def __init__(
        self,
        elements: Sequence[Hashable],
        op: Callable[[Any, Any], Any],
        identity: Hashable,
        name: str = "",
        budget: int = 10**6,
    ):
        if len(elements) > budget:
            raise BudgetExceeded(f"group {name or ''} of order {len(elements)} exceeds budget {budget}")
        self.name = name
        self.elements = list(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.op = op
        self.identity = identity
        N = len(self.elements)
        if identity not in self.index:
            raise ValueError("identity is not among the elements")

        nf: dict[Hashable, tuple[int, ...]] = {identity: ()}
        gens: list[Hashable] = []
        rels: list[tuple[int, tuple[int, ...]]] = []
        for cand in self.elements:
            if len(nf) == N:
                break
            if cand in nf:
                continue
            powers = [identity]
            x = cand
            while x not in nf:
                powers.append(x)
                x = op(x, cand)
                if len(powers) > N:
                    raise NonAbelianError("element of unbounded order; not a finite group")
            rels.append((len(powers), nf[x]))
            new: dict[Hashable, tuple[int, ...]] = {}
            for t, gt in enumerate(powers):
                for h, v in nf.items():
                    new[op(gt, h)] = v + (t,)
            if len(new) != len(powers) * len(nf):
                raise NonAbelianError("cosets overlap: operation is not an abelian group law")
            for g in gens:
                if op(g, cand) != op(cand, g):
                    raise NonAbelianError("generators do not commute")
            gens.append(cand)
            nf = new
        if len(nf) != N or set(nf) != set(self.index):
            raise NonAbelianError("generated subgroup differs from the element list")

        t = len(gens)
        R = [[0] * t for _ in range(t)]
        for i, (e, vec) in enumerate(rels):
            R[i][i] = e
            for j, c in enumerate(vec):
                R[i][j] -= c
        if t:
            _, D, V = smith_normal_form(R)
            diag = [D[i][i] for i in range(t)]
        else:
            V, diag = [], []
        keep = [j for j, d in enumerate(diag) if d > 1]
        self.orders = tuple(diag[j] for j in keep)
        Vk = np.array([[V[i][j] for j in keep] for i in range(t)], dtype=object).reshape(t, len(keep))
        mods = np.array(self.orders, dtype=object)
        coords = [None] * N
        for g, v in nf.items():
            x = np.array(v, dtype=object)
            y = (x @ Vk) % mods if keep else np.zeros(0, dtype=object)
            coords[self.index[g]] = tuple(int(c) for c in y)
        self.coords = coords
        self._by_coords = {c: self.elements[i] for i, c in enumerate(coords)}
        if len(self._by_coords) != N:
            raise AssertionError("discrete logarithm is not injective")
        self.basis = [
            self._by_coords[tuple(int(i == j) for i in range(len(keep)))] for j in range(len(keep))
        ]
        self.coord_array = np.array(coords, dtype=np.int64).reshape(N, len(keep))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def exponent(self) -> int:
        return self.orders[-1] if self.orders else 1

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"AbelianGroupTable({self.name!r}, orders={self.orders})"

    def dlog(self, g: Hashable) -> tuple[int, ...]:
        return self.coords[self.index[g]]

    def from_coords(self, c: Sequence[int]) -> Hashable:
        return self._by_coords[tuple(int(x) % d for x, d in zip(c, self.orders))]

    def mul(self, a: Hashable, b: Hashable) -> Hashable:
        return self.op(a, b)

    def cayley(self) -> np.ndarray:
        """Full multiplication index table (small groups only)."""
        N = len(self.elements)
        out = np.empty((N, N), dtype=np.int64)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                out[i, j] = self.index[self.op(a, b)]
        return out


def abelian_table(elements, op, identity=None, name: str = "", budget: int = 10**6) -> AbelianGroupTable:
    if identity is None:
        identity = elements[0]
    return AbelianGroupTable(elements, op, identity, name=name, budget=budget)
