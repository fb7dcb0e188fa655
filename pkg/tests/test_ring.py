import pytest
from hypothesis import given, settings, strategies as st

from glchars.ring import EQUAL, MIXED, RingError, make_ring, quad_ext

PARAMS = [(3, 1, 2, MIXED), (3, 1, 2, EQUAL), (5, 1, 2, MIXED), (3, 2, 2, MIXED), (3, 1, 3, EQUAL)]


@pytest.fixture(params=PARAMS, ids=lambda s: "%d-%d-%d-%s" % s)
def R(request):
    return make_ring(*request.param)


def _elem(R):
    return st.integers(0, R.size - 1)


@pytest.mark.parametrize("params", PARAMS)
def test_ring_axioms(params):
    R = make_ring(*params)

    @settings(max_examples=150, deadline=None)
    @given(_elem(R), _elem(R), _elem(R))
    def check(a, b, c):
        assert R.add(a, R.add(b, c)) == R.add(R.add(a, b), c)
        assert R.mul(a, R.mul(b, c)) == R.mul(R.mul(a, b), c)
        assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
        assert R.add(a, R.neg(a)) == 0
        assert R.mul(a, b) == R.mul(b, a)

    check()


def test_sizes_and_units(R):
    assert R.size == R.q**R.r
    assert len(R.units) == R.q ** (R.r - 1) * (R.q - 1)
    for u in R.units:
        assert R.mul(u, R.inv(u)) == R.one


def test_valuation_and_pi(R):
    assert R.valuation(0) == R.r
    assert R.valuation(R.pi) == 1
    for a in range(R.size):
        v, u = R.unit_part(a)
        assert v == R.valuation(a)
        if a:
            assert R.is_unit(u) and R.mul_pi(u, v) == a
    assert R.unit_part(0) == (R.r, R.one)
    assert R.mul_pi(R.one, R.r) == 0


def test_sections(R):
    for i in range(R.r + 1):
        sec = R.section(i)
        assert len(sec) == R.q**i
        assert len({R.reduce(x, i) for x in sec}) == len(sec) if i else sec == [0]
        assert len(R.section_units(i)) == (R.q ** (i - 1) * (R.q - 1) if i else 0)


def test_reduce_lift_roundtrip(R):
    for n in range(1, R.r + 1):
        S = R.sub_ring(n)
        for b in range(S.size):
            assert R.reduce(R.lift(b, n), n) == b


def test_legendre_and_sqrt(R):
    squares = {R.mul(x, x) for x in R.units}
    for u in R.units:
        assert (R.legendre(u) == 1) == (u in squares)
        if u in squares:
            y = R.sqrt(u)
            assert R.mul(y, y) == u
    assert R.legendre(R.nonsquare) == -1
    assert R.mul(R.half, R.from_int(2)) == R.one


def test_str_roundtrip(R):
    for a in range(0, R.size, max(1, R.size // 50)):
        assert R.parse(R.to_str(a)) == a
    assert make_ring(3, 1, 2).to_str(5) == "3^2:1:5"


@pytest.mark.parametrize("bad", [(2, 1, 2), (4, 1, 2), (3, 0, 2), (3, 1, 0)])
def test_rejects_bad_specs(bad):
    with pytest.raises(RingError):
        make_ring(*bad)


def test_rejects_unknown_kind():
    with pytest.raises(RingError):
        make_ring(3, 1, 2, "weird")


def test_equal_kind_has_characteristic_p():
    R = make_ring(3, 1, 2, EQUAL)
    assert R.add(R.add(R.one, R.one), R.one) == 0
    Rm = make_ring(3, 1, 2, MIXED)
    assert Rm.add(Rm.add(Rm.one, Rm.one), Rm.one) != 0


@pytest.mark.parametrize("params", PARAMS[:4])
def test_quadratic_extension(params):
    R = make_ring(*params)
    X = quad_ext(R)
    E = X.E
    assert E.size == R.size**2
    assert E.mul(X.phi, X.phi) == X.embed(R.nonsquare)
    assert X.sigma(X.phi) == E.neg(X.phi)
    for z in range(0, E.size, max(1, E.size // 200)):
        assert X.sigma(X.sigma(z)) == z
        assert X.trace(z) == X.to_base(E.add(z, X.sigma(z)))
    for a in range(R.size):
        for b in (0, R.one, R.pi):
            assert X.embed(R.mul(a, b)) == E.mul(X.embed(a), X.embed(b))
    assert len(X.fixed_part(1)) == len(X.fixed_part(-1)) == R.size
    assert all(X.sigma(z) == E.neg(z) for z in X.fixed_part(-1))


def test_norm_multiplicative():
    X = quad_ext(make_ring(3, 1, 2))
    E = X.E
    for z in range(0, E.size, 7):
        for w in range(0, E.size, 11):
            assert X.norm(E.mul(z, w)) == X.base.mul(X.norm(z), X.norm(w))


def test_ring_elem_operators():
    R = make_ring(5, 1, 2)
    x, y = R(7), R("3")
    assert (x + y).code == 10 and (x * y).code == 21 and (x - y).code == 4
    assert (x * x.inverse()).code == 1
    assert str(R(5)) == "5^2:1:5"
