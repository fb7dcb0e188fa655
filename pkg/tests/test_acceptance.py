"""Acceptance criteria 1-7, exact equality throughout.

Each test prints a single PASS/FAIL line (shown even under output capture).
"""
import subprocess
import sys

import pytest

from glchars.context import get_context
from glchars.ring import make_ring
from glchars.verify import (
    FULL_BUDGET,
    Criterion,
    check_chi2,
    check_counts,
    check_determinism,
    check_orthogonality,
    check_sums,
    check_table_vs_oracle,
    check_zero_structure,
)


def _report(capsys, crit: Criterion):
    with capsys.disabled():
        print("\n" + crit.line())
        for c in crit.checks:
            if not c.ok:
                print(f"    FAIL {c.name}: lhs={c.lhs!r} rhs={c.rhs!r}")
    assert crit.ok, [c for c in crit.checks if not c.ok]


@pytest.fixture(scope="module")
def ctx():
    return get_context(3, 1, 2, budget=FULL_BUDGET)


def test_criterion_1_counting(capsys, ctx):
    checks = check_counts(ctx) + check_counts(get_context(5, 1, 2, budget=FULL_BUDGET))
    _report(capsys, Criterion(1, "counting identities at q=3 and q=5, r=2", checks))


def test_criterion_2_table_vs_oracle(capsys, ctx):
    _report(capsys, Criterion(2, "54x78 closed-form table = Frobenius oracle at q=3, r=2", check_table_vs_oracle(ctx)))


def test_criterion_3_orthogonality(capsys, ctx):
    _report(capsys, Criterion(3, "orthonormality and completion to |G| = 3888", check_orthogonality(ctx)))


def test_criterion_4_sums(capsys):
    _report(capsys, Criterion(4, "exponential sums at q in {3,5}, k in {1,2,3}", check_sums()))


def test_criterion_5_chi2(capsys):
    _report(capsys, Criterion(5, "chi2 closed form = direct sum at q=3, r=4", check_chi2(make_ring(3, 1, 4))))


def test_criterion_6_zero_structure(capsys, ctx):
    _report(capsys, Criterion(6, "zero-value structure by formula and oracle", check_zero_structure(ctx)))


def test_criterion_7_determinism(capsys):
    cmd = [sys.executable, "-m", "glchars", "table", "--p", "3", "--f", "1", "--r", "2", "--format", "csv"]

    def render():
        return subprocess.run(cmd, capture_output=True, check=True).stdout.decode()

    _report(capsys, Criterion(7, "two `table` runs are byte-identical", check_determinism(render)))
