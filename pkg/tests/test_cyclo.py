from hypothesis import given, strategies as st

from glchars.cyclo import CycloValue, cyclotomic_poly, field

M = 72
terms = st.lists(st.tuples(st.integers(0, M - 1), st.integers(-3, 3)), max_size=6)


def cv(ts):
    return CycloValue.from_terms(M, ts)


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)
    assert field(72).degree == 24


def test_roots_sum_to_zero():
    for m in (3, 8, 9, 72):
        assert CycloValue.from_exponents(m, range(m)).is_zero()
    assert CycloValue.root(4, 2) == -1


@given(terms, terms, terms)
def test_ring_laws(a, b, c):
    x, y, z = cv(a), cv(b), cv(c)
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x - x).is_zero()


@given(terms, terms)
def test_conj_is_multiplicative(a, b):
    x, y = cv(a), cv(b)
    assert (x * y).conj() == x.conj() * y.conj()
    assert x.abs2() == x * x.conj()
    assert x.abs2().conj() == x.abs2()


@given(terms)
def test_json_roundtrip(a):
    x = cv(a)
    assert CycloValue.from_json(x.to_json()) == x
    assert hash(CycloValue.from_json(x.to_json())) == hash(x)


@given(terms)
def test_complex_embedding(a):
    x = cv(a)
    want = sum(c * complex(__import__("cmath").exp(2j * __import__("math").pi * e / M)) for e, c in a)
    assert abs(x.to_complex() - want) < 1e-9


def test_lift_preserves_value():
    x = CycloValue.from_terms(8, [(1, 2), (3, -1)])
    y = x.lift(72)
    assert abs(x.to_complex() - y.to_complex()) < 1e-12
    assert x + y == y + y


def test_render():
    assert CycloValue.integer(9, -4).render() == "-4"
    assert CycloValue.root(9, 1).render() == "z9[1:1]"
    assert CycloValue.integer(9, 3).to_int() == 3
