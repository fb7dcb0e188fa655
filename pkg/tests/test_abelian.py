import pytest

from glchars.abelian import BudgetExceeded, abelian_table, smith_normal_form
from glchars.ring import make_ring


def test_smith_normal_form_diagonal():
    U, D, V = smith_normal_form([[2, 4], [6, 8]])
    diag = [abs(D[i][i]) for i in range(2)]
    assert diag == [2, 4]


@pytest.mark.parametrize("n, orders", [(12, (12,)), (8, (8,))])
def test_cyclic(n, orders):
    T = abelian_table(list(range(n)), lambda a, b: (a + b) % n, 0)
    assert T.order == n and T.exponent == n
    assert tuple(sorted(T.orders)) == orders


def test_unit_group_of_z9_and_z8_shapes():
    T = abelian_table([u for u in range(1, 15) if u % 3 and u % 5], lambda a, b: a * b % 15, 1)
    assert T.order == 8 and T.exponent == 4
    R = make_ring(3, 1, 2)
    U = abelian_table(R.units, R.mul, R.one)
    assert U.order == 6 and U.exponent == 6


def test_dlog_roundtrip_and_homomorphism():
    R = make_ring(5, 1, 2)
    U = abelian_table(R.units, R.mul, R.one)
    for g in R.units[:10]:
        assert U.from_coords(U.dlog(g)) == g
        for h in R.units[::7]:
            lhs = U.dlog(R.mul(g, h))
            rhs = [(x + y) % d for x, y, d in zip(U.dlog(g), U.dlog(h), U.orders)]
            assert list(lhs) == rhs


def test_budget():
    with pytest.raises(BudgetExceeded):
        abelian_table(list(range(50)), lambda a, b: (a + b) % 50, 0, budget=10)
