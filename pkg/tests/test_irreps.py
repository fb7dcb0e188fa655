import random
from collections import Counter

import pytest

from conftest import random_invertible
from glchars import irreps as I
from glchars.chars import SGroup, cuspidal_tau, is_regular_cuspidal, theta_characters
from glchars.context import LevelError, get_context
from glchars.group import conj, identity


def _row(ctx, L):
    return tuple(I.char_value(ctx, L, c) for c in ctx.classes)


def _oracle(ctx, L, c):
    return I.frobenius_char_value(ctx, L, c.matrix(ctx.ring, ctx.eps))


@pytest.mark.parametrize("fixture", ["ctx3", "ctx3_equal", "ctx5"])
def test_counts_and_dimensions(fixture, request):
    ctx = request.getfixturevalue(fixture)
    labels = I.enumerate_irreps(ctx)
    got = Counter(L.family for L in labels)
    assert dict(got) == I.family_counts(ctx.q, ctx.r)
    assert len(labels) == (ctx.q - 1) * ctx.q ** (2 * ctx.r - 1)
    dims = {L.family: I.dimension(L, ctx.ring) for L in labels}
    q = ctx.q
    assert dims == {"PS": (q + 1) * q, "C": (q - 1) * q, "NPS": q * q - 1}


def test_family_order(ctx3):
    fams = [L.family for L in I.enumerate_irreps(ctx3)]
    assert fams == sorted(fams, key=["PS", "C", "NPS"].index)


def test_dimensions_q3():
    ctx = get_context(3, 1, 2)
    by = {L.family: I.dimension(L, ctx.ring) for L in I.enumerate_irreps(ctx)}
    assert by == {"PS": 12, "C": 6, "NPS": 8}


def test_odd_level_rejected():
    with pytest.raises(LevelError):
        get_context(5, 1, 3)


@pytest.mark.parametrize("fam", ["PS", "C", "NPS"])
@pytest.mark.parametrize("fixture", ["ctx3", "ctx3_equal", "ctx5"])
def test_coset_sections_disjoint(fam, fixture, request):
    ctx = request.getfixturevalue(fixture)
    L = next(x for x in I.enumerate_irreps(ctx) if x.family == fam)
    assert I.check_coset_section(ctx, L)


def test_oracle_at_identity_is_dimension(ctx3):
    R = ctx3.ring
    for L in I.enumerate_irreps(ctx3)[::5]:
        assert I.frobenius_char_value(ctx3, L, identity(R)) == I.dimension(L, R)


def test_equal_kind_full_table(ctx3_equal):
    ctx = ctx3_equal
    for L in I.enumerate_irreps(ctx):
        for c in ctx.classes:
            assert I.char_value(ctx, L, c) == _oracle(ctx, L, c), (L.name(ctx.ring), c)
    table = I.character_table(ctx)
    gram = I.inner_products(ctx, table)
    n = len(table)
    assert all(gram[a][b] == (ctx.group_order if a == b else 0) for a in range(n) for b in range(n))


def test_q5_sampled_cells(ctx5):
    labels = I.enumerate_irreps(ctx5)
    rng = random.Random(11)
    for _ in range(2500):
        L, c = rng.choice(labels), rng.choice(ctx5.classes)
        assert I.char_value(ctx5, L, c) == _oracle(ctx5, L, c), (L.name(ctx5.ring), c)


def test_q5_every_class_once(ctx5):
    labels = I.enumerate_irreps(ctx5)
    rng = random.Random(5)
    for c in ctx5.classes:
        L = rng.choice(labels)
        assert I.char_value(ctx5, L, c) == _oracle(ctx5, L, c)


def test_oracle_is_class_function(ctx3):
    R = ctx3.ring
    rng = random.Random(3)
    labels = I.enumerate_irreps(ctx3)
    picks = [next(L for L in labels if L.family == f) for f in ("PS", "C", "NPS")]
    for L in picks:
        for c in ctx3.classes:
            want = I.char_value(ctx3, L, c)
            X = c.matrix(R, ctx3.eps)
            for _ in range(20):
                g = random_invertible(R, rng)
                assert I.frobenius_char_value(ctx3, L, conj(R, g, X)) == want


def test_principal_split_symmetric(ctx3):
    for L in I.principal_split_labels(ctx3)[:6]:
        assert _row(ctx3, L) == _row(ctx3, I.PrincipalSplit(L.mu2, L.mu))


def test_no_duplicate_rows(ctx3):
    rows = [_row(ctx3, L) for L in I.enumerate_irreps(ctx3)]
    assert len(set(rows)) == len(rows)


def test_cuspidal_pair_equivalence(ctx3):
    ext = ctx3.ext
    chars = I.ext_unit_characters(ctx3)
    rng = random.Random(2)
    done = 0
    while done < 8:
        nu, nu2 = rng.choice(chars), rng.choice(chars)
        if not is_regular_cuspidal(nu, nu2, ext):
            continue
        a = I.Cuspidal(nu, nu2, cuspidal_tau(nu, nu2, ext, ctx3.psi))
        s1, s2 = nu2.compose(ext.sigma), nu.compose(ext.sigma)
        b = I.Cuspidal(s1, s2, cuspidal_tau(s1, s2, ext, ctx3.psi))
        ra = _row(ctx3, a)
        assert ra == _row(ctx3, b)
        assert ra in {_row(ctx3, L) for L in I.cuspidal_labels(ctx3)}
        for c in ctx3.classes[::4]:
            assert ra[ctx3.classes.index(c)] == _oracle(ctx3, a, c)
        done += 1


def test_twist_extension_independence(ctx3):
    R = ctx3.ring
    top = [R.add(R.one, R.mul_pi(x, ctx3.l)) for x in R.section(R.r - ctx3.l)]
    for a in R.section(ctx3.l):
        base = I.twist_character(ctx3, a)
        rows = {_row(ctx3, L) for L in I.nonprincipal_split_labels(ctx3) if L.a == a}
        others = [c for c in I.unit_characters(ctx3)
                  if c != base and all(c(u) == base(u) for u in top)]
        assert others
        for chi in others:
            alt = {_row(ctx3, I.NonPrincipalSplit(a, d, th, chi))
                   for d in ctx3.deltas for th in I.theta_list(ctx3, d)}
            assert alt == rows


def test_delta_lift_independence(ctx3):
    R = ctx3.ring
    rows = {_row(ctx3, L) for L in I.nonprincipal_split_labels(ctx3) if L.a == 0}
    for t in (1, 2):
        d2 = R.mul_pi(t, ctx3.l)
        ctx3.s_groups.setdefault(d2, SGroup(R, d2))
        chi = I.twist_character(ctx3, 0)
        alt = {_row(ctx3, I.NonPrincipalSplit(0, d2, th, chi))
               for th in theta_characters(ctx3.s_groups[d2], ctx3.psi, ctx3.m)}
        assert alt == rows


def test_names_unique_and_json(ctx3):
    R = ctx3.ring
    labels = I.enumerate_irreps(ctx3)
    names = [L.name(R) for L in labels]
    assert len(set(names)) == len(names)
    assert {L.to_json(R)["family"] for L in labels} == {"PS", "C", "NPS"}


# ------------------------------------------------------------------ r = 4
@pytest.fixture(scope="module")
def r4(ctx3_r4):
    return ctx3_r4, I.enumerate_irreps(ctx3_r4)


@pytest.mark.slow
def test_r4_counts(r4):
    ctx, labels = r4
    assert dict(Counter(L.family for L in labels)) == {"PS": 972, "C": 1944, "NPS": 1458}


@pytest.mark.slow
def test_r4_xi_every_b_branch(r4):
    ctx, labels = r4
    R = ctx.ring
    xi = [L for L in labels if L.family == "NPS"]
    bs = [c for c in ctx.classes if c.kind == "B"]
    rng = random.Random(1)
    seen = Counter()
    for _ in range(20000):
        L, c = rng.choice(xi), rng.choice(bs)
        case = I.xi_b_case(ctx, L, c)
        if case == "chi2":
            j = R.r - c.i - 1 if c.second == 0 else R.unit_part(c.second)[0]
            k = R.unit_part(L.delta)[0]
            case = "chi2:delta=0" if L.delta == 0 else ("chi2:k>j" if k > j else "chi2:direct")
        if seen[case] >= 8:
            continue
        seen[case] += 1
        assert I.char_value(ctx, L, c) == _oracle(ctx, L, c), (case, L.name(R), c)
    assert set(seen) == {"i=r-1", "chi2:delta=0", "chi2:k>j", "chi2:direct", "chi3", "chi4",
                         "zero:k!=j+1", "zero:nonsquare", "zero:i+k<l"}


@pytest.mark.slow
@pytest.mark.parametrize("fam", ["PS", "C", "NPS"])
def test_r4_random_cells(r4, fam):
    ctx, labels = r4
    rng = random.Random(fam)
    labs = [L for L in labels if L.family == fam]
    kinds = "ICD" if fam == "NPS" else "IBCD"
    cls = [c for c in ctx.classes if c.kind in kinds]
    for _ in range(150):
        L, c = rng.choice(labs), rng.choice(cls)
        assert I.char_value(ctx, L, c) == _oracle(ctx, L, c)


@pytest.mark.slow
def test_r4_cuspidal_on_elliptic(r4):
    ctx, labels = r4
    rng = random.Random(9)
    cus = [L for L in labels if L.family == "C"]
    for c in [c for c in ctx.classes if c.kind == "C"][::7]:
        L = rng.choice(cus)
        assert I.char_value(ctx, L, c) == _oracle(ctx, L, c)
