import random

import pytest

from pivotloop import linalg, verify


@pytest.mark.parametrize("suite", sorted(verify.SUITES))
def test_suites_pass_small(suite):
    for res in verify.run_suite(suite, max_n=3, seed=11):
        assert res.passed, res.line()
        assert res.cases > 0


def test_broken_pivot_is_caught(monkeypatch):
    real = linalg.ppt

    def off_by_one(A, X):
        B = real(A, X)
        if len(X) == 2:
            rows = list(B.rows)
            rows[0] ^= 1
            return type(B)._unchecked(B.ground, rows)
        return B

    monkeypatch.setattr(linalg, "ppt", off_by_one)
    res = verify.check_pivot_involution_composition(3, random.Random(0))
    assert not res.passed
    assert "A=" in res.counterexample


def test_seeded_runs_are_reproducible():
    a = [r.cases for r in verify.run_suite("word", max_n=2, seed=5)]
    b = [r.cases for r in verify.run_suite("word", max_n=2, seed=5)]
    assert a == b
