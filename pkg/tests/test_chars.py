import pytest

from glchars.chars import (
    SGroup,
    all_characters,
    is_regular_split,
    psi_beta,
    standard_psi,
    theta_characters,
)
from glchars.context import LevelError, get_context
from glchars.group import identity, mat_mul
from glchars.ring import make_ring


@pytest.mark.parametrize("params", [(3, 1, 2, "mixed"), (3, 1, 2, "equal"), (5, 1, 2, "mixed"), (3, 2, 2, "mixed")])
def test_standard_psi_is_primitive_character(params):
    R = make_ring(*params)
    psi = standard_psi(R)
    assert psi.is_primitive()
    for a in range(0, R.size, 3):
        for b in range(0, R.size, 5):
            assert psi(R.add(a, b)) % psi.m == (psi(a) + psi(b)) % psi.m


def test_character_orthogonality_on_units(ctx3):
    chars = all_characters(ctx3.units, ctx3.m)
    assert len(chars) == len(ctx3.ring.units)
    assert len(set(chars)) == len(chars)
    for chi in chars:
        s = sum(chi.value(g).to_complex() for g in ctx3.ring.units)
        assert abs(s - (len(chars) if chi.is_trivial() else 0)) < 1e-9


def test_characters_are_homomorphisms(ctx5):
    R = ctx5.ring
    for chi in all_characters(ctx5.units, ctx5.m)[::13]:
        for g in R.units[::9]:
            for h in R.units[::11]:
                assert chi(R.mul(g, h)) == (chi(g) + chi(h)) % chi.m


def test_regular_split_pairs(ctx3):
    chars = all_characters(ctx3.units, ctx3.m)
    n = sum(is_regular_split(a, b, ctx3.ring) for i, a in enumerate(chars) for b in chars[i + 1:])
    assert n == 12


def test_modulus(ctx3, ctx3_equal, ctx5):
    assert (ctx3.m, ctx3_equal.m, ctx5.m) == (72, 24, 600)
    assert get_context(3, 2, 2).m == 720


@pytest.mark.parametrize("r", [1, 3])
def test_odd_level_rejected(r):
    with pytest.raises(LevelError):
        get_context(3, 1, r)


def test_s_group_order_and_theta_counts(ctx3):
    R = ctx3.ring
    for d in ctx3.deltas:
        S = ctx3.s_groups[d]
        assert S.table.order == (R.q - 1) * R.q ** (2 * R.r - 1)
        assert len(theta_characters(S, ctx3.psi, ctx3.m)) == (R.q - 1) * R.q ** (R.r - 1)


def test_theta_restriction_matches_psi_beta(ctx3):
    R, psi = ctx3.ring, ctx3.psi
    S = SGroup(R, R.pi)
    beta = (0, R.one, R.neg(R.pi), 0)
    th = theta_characters(S, psi, ctx3.m)[0]
    for s, _ in S.kernel_part(ctx3.l):
        assert th(s) == psi_beta(psi, beta, S.matrix(s), ctx3.l)


def test_psi_beta_is_character_of_kernel(ctx3):
    R, psi = ctx3.ring, ctx3.psi
    beta = (R.one, R.pi, 0, 2)
    ks = [(R.add(1, R.mul_pi(a, 1)), R.mul_pi(b, 1), R.mul_pi(c, 1), R.add(1, R.mul_pi(d, 1)))
          for a in range(3) for b in range(3) for c in range(3) for d in range(3)]
    for x in ks[::5]:
        for y in ks[::7]:
            lhs = psi_beta(psi, beta, mat_mul(R, x, y), 1)
            assert lhs == (psi_beta(psi, beta, x, 1) + psi_beta(psi, beta, y, 1)) % psi.m
    assert psi_beta(psi, beta, identity(R), 1) == 0
