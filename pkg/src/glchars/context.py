"""Shared data for one even level: unit groups, S groups, ψ and the modulus m."""
from __future__ import annotations

from functools import cached_property
from math import lcm

from .abelian import AbelianGroupTable, abelian_table
from .chars import AddChar, SGroup, standard_psi
from .group import DEFAULT_BUDGET, ConjClassLabel, class_reps, class_sizes, group_order
from .ring import MIXED, QuadExt, Ring, make_ring, quad_ext


class LevelError(ValueError):
    """The requested level is outside what the construction covers."""


class GL2Context:
    """Everything needed to build and evaluate strongly primitive characters.

    All characters attached to one context take values in Z[ζ_m] for one
    fixed m, so sums and comparisons are exact.
    """

    def __init__(self, R: Ring, budget: int = DEFAULT_BUDGET):
        if R.r < 2 or R.r % 2:
            raise LevelError("even-level only; odd level r is out of scope")
        self.ring = R
        self.budget = budget
        self.r = R.r
        self.l = R.r // 2
        self.q = R.q
        self.eps = R.nonsquare
        self.ext: QuadExt = quad_ext(R)
        E = self.ext.E
        self.units: AbelianGroupTable = abelian_table(R.units, R.mul, R.one, name="O_r^x", budget=budget)
        self.ext_units: AbelianGroupTable = abelian_table(
            E.units, E.mul, E.one, name="(O_r^E)^x", budget=budget
        )
        self.deltas = [d for d in R.section(self.l) if R.valuation(d) >= 1]
        self.s_groups = {d: SGroup(R, d) for d in self.deltas}
        base = R.p**R.r if R.kind == MIXED else R.p
        self.m = lcm(
            base,
            self.units.exponent,
            self.ext_units.exponent,
            *(S.table.exponent for S in self.s_groups.values()),
        )
        self.psi: AddChar = standard_psi(R, self.m)

    def __repr__(self) -> str:
        R = self.ring
        return f"GL2Context(p={R.p}, f={R.f}, r={R.r}, kind={R.kind!r}, m={self.m})"

    @property
    def group_order(self) -> int:
        return group_order(self.ring)

    @cached_property
    def classes(self) -> list[ConjClassLabel]:
        return class_reps(self.ring)

    def class_sizes(self) -> tuple[int, ...]:
        """Brute-force class sizes, in ``classes`` order."""
        return class_sizes(self.ring, self.budget)


_contexts: dict[tuple, GL2Context] = {}


def get_context(p: int, f: int, r: int, char_kind: str = MIXED, budget: int = DEFAULT_BUDGET) -> GL2Context:
    key = (p, f, r, char_kind)
    if key not in _contexts:
        _contexts[key] = GL2Context(make_ring(p, f, r, char_kind), budget)
    return _contexts[key]
