import random

import pytest
from hypothesis import given, settings, strategies as st

from glchars import sums
from glchars.chars import standard_psi
from glchars.cyclo import CycloValue
from glchars.ring import make_ring
from glchars.verify import check_chi2, chi2_branches, primitive_one_plus_characters


@pytest.fixture(scope="module", params=[(3, 1), (3, 2), (5, 1), (5, 2), (3, 3)], ids=lambda s: "q%d-k%d" % s)
def lam(request):
    q, k = request.param
    return standard_psi(make_ring(q, 1, k))


def test_gauss_examples(lam):
    R = lam.ring
    q, k = R.q, R.r
    assert sums.gauss(0, lam) == q**k
    g = sums.gauss(R.one, lam)
    assert g * g == R.legendre(R.neg(R.one)) ** k * q**k
    assert g.abs2() == q**k


def test_gauss_over_z9():
    lam = standard_psi(make_ring(3, 1, 2))
    g = sums.gauss(1, lam)
    assert g == 3 and g * g == 9


def test_kloosterman_examples(lam):
    R = lam.ring
    q, k = R.q, R.r
    assert sums.kloosterman(0, 0, lam) == q**k - q ** (k - 1)
    if k >= 2:
        for u in R.units[:5]:
            assert sums.kloosterman(u, 0, lam).is_zero()
    if k % 2:
        assert sums.salie(0, 0, lam).is_zero()


def test_kloosterman_is_real(lam):
    R = lam.ring
    for a in R.units[:4]:
        for b in R.units[:4]:
            v = sums.kloosterman(a, b, lam)
            assert v == v.conj()


def test_T_sum_cases(lam):
    R = lam.ring
    eta = R.nonsquare
    for b in range(R.size):
        assert sums.T_sum(b, eta, lam) == sums.T_sum_direct(b, eta, lam)
    if R.r == 1:
        assert sums.T_sum(0, eta, lam) == -R.q


def test_T_sum_rejects_square(lam):
    with pytest.raises(ValueError):
        sums.T_sum(1, lam.ring.one, lam)


def test_rho_examples():
    R = make_ring(3, 1, 2)
    eta = R.nonsquare
    assert sums.rho_count(0, eta, R) == 9
    assert sums.rho_count(R.one, eta, R) == 4 * 3
    assert sums.rho_count(R.pi, eta, R) == 0


@pytest.mark.parametrize("q,k", [(3, 4), (5, 3)])
def test_rho_count_and_square_invariance(q, k):
    R = make_ring(q, 1, k)
    eta = R.nonsquare
    for y in range(R.size):
        n = sums.rho_count_direct(y, eta, R)
        assert n == sums.rho_count(y, eta, R)
    for y in range(0, R.size, 7):
        for u in R.units[::11]:
            assert sums.rho_count(R.mul(R.mul(u, u), y), eta, R) == sums.rho_count(y, eta, R)


def test_quad_diff_examples():
    R1, R2 = make_ring(3, 1, 1), make_ring(3, 1, 2)
    assert sums.quad_diff_sum_direct(2, standard_psi(R1)) == -3
    assert sums.quad_diff_sum_direct(2, standard_psi(R2)) == 9


def test_quad_diff_square_twin():
    # with a square in place of η the sum is (η/O_k)^k q^k = q^k
    R = make_ring(5, 1, 1)
    assert sums.quad_diff_sum_direct(R.one, standard_psi(R)) == 5
    with pytest.raises(ValueError):
        sums.quad_diff_sum(R.one, standard_psi(R))


def test_scaled_unit_sum(lam):
    k = lam.ring.r
    for j in range(k + 1):
        assert sums.scaled_unit_sum(j, lam) == sums.scaled_unit_sum_direct(j, lam)
    assert sums.scaled_unit_sum(k, lam) == 1 and sums.scaled_unit_sum(k - 1, lam) == -1


def test_identity1():
    R = make_ring(3, 1, 2)
    lam = primitive_one_plus_characters(R)[0]
    for i in range(R.r):
        for u in R.units:
            assert sums.identity1_sum_direct(i, u, lam, R) == R.q**i


def test_reduction_chain(lam):
    R = lam.ring
    for b in range(0, R.size, 2):
        assert sums.T_sum_reduction(b, R.nonsquare, lam) == sums.T_sum_direct(b, R.nonsquare, lam)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 124), st.integers(0, 2))
def test_T_sum_property(b, e):
    R = make_ring(5, 1, 3)
    lam = standard_psi(R)
    eta = [2, 3, 7][e]
    assert sums.T_sum(b, eta, lam) == sums.T_sum_direct(b, eta, lam)


# ------------------------------------------------------------------- χ₂
def test_chi2_examples():
    R = make_ring(3, 1, 4)
    psi = standard_psi(R)
    # i = r-2 with j >= 1 collapses to q^{r-2}(q-1)
    assert sums.chi2(2, 1, 1, 1, 1, 1, psi).value == 9 * 2
    assert sums.chi2(2, 1, 1, 1, 1, 1, psi, theta_exp=3).value == CycloValue.root(psi.m, 3) * 18
    res = sums.chi2(2, 0, 2, 1, 1, 1, psi)
    assert res.value == sums.chi2_direct(2, 0, 2, 1, 1, 1, psi)


def test_chi2_range_checks():
    psi = standard_psi(make_ring(3, 1, 4))
    with pytest.raises(ValueError):
        sums.chi2(1, 0, 1, 1, 1, 1, psi)
    with pytest.raises(ValueError):
        sums.chi2(3, 0, 1, 1, 1, 1, psi)
    with pytest.raises(ValueError):
        sums.chi2_direct(2, 2, 1, 1, 1, 1, psi)


def test_chi2_exhaustive_equal_kind():
    checks = check_chi2(make_ring(3, 1, 4, "equal"))
    assert all(c.ok for c in checks), checks


def _sampled_chi2(R, n, seed):
    psi = standard_psi(R)
    r, l = R.r, R.r // 2
    rng = random.Random(seed)
    seen = set()
    for i in range(l, r - 1):
        us = R.section_units(r - i)
        for _ in range(n):
            j, k = rng.randrange(r - i), rng.randrange(1, r + 1)
            a, b, d = (rng.choice(us) for _ in range(3))
            res = sums.chi2(i, j, k, a, b, d, psi)
            seen.add(res.branch)
            assert res.value == sums.chi2_direct(i, j, k, a, b, d, psi), (i, j, k, a, b, d)
    return seen


def test_chi2_r6_sampled():
    R = make_ring(3, 1, 6)
    assert _sampled_chi2(R, 150, 3) == set(chi2_branches(R))


def test_chi2_q5_r4_sampled():
    _sampled_chi2(make_ring(5, 1, 4), 120, 4)
