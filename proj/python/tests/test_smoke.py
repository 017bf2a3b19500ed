import itertools
import random
from fractions import Fraction

import pytest

import trop


def test_round_trip():
    rng = random.Random(5)
    for k, n in [(2, 4), (2, 5), (3, 6)]:
        X = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(k * (n - k))]
        assert trop.trop_psi(k, n, trop.trop_phi(k, n, X)) == X
        x = [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(k * (n - k))]
        assert trop.psi(k, n, trop.phi(k, n, x)) == x


def test_phi_is_positive_and_satisfies_plucker_relations():
    k, n = 2, 5
    p = dict(zip(map(tuple, trop.ksubsets(k, n)), trop.phi(k, n, [1, 2, 3, Fraction(1, 2), 5, 7])))
    assert all(v > 0 for v in p.values())
    for a, b, c, d in itertools.combinations(range(1, n + 1), 4):
        assert p[(a, c)] * p[(b, d)] == p[(a, b)] * p[(c, d)] + p[(a, d)] * p[(b, c)]


def test_membership_and_subdivision():
    zero = [0] * 6
    assert trop.is_positive_tropical_plucker(2, 4, zero)["ok"]
    split = [0, 0, 1, 1, 0, 0]  # P14 = P23 = 1
    info = trop.classify(2, 4, split)
    assert info["cells"] == 2 and info["positroidal"] and info["finest"]
    assert info["interior_face_counts"] == {"2": 1, "3": 2}
    bad = [1, 0, 1, 0, 0, 0]
    r = trop.is_tropical_plucker(2, 4, bad)
    assert not r["ok"] and r["witness"] == {"S": [], "a": 1, "b": 2, "c": 3, "d": 4}
    assert len(trop.regular_subdivision(2, 4, split)) == 2


def test_positroids():
    assert trop.is_positroid(4, 2, [list(s) for s in itertools.combinations(range(1, 5), 2)])
    assert not trop.is_positroid(6, 3, trop.graphic_k4_bases())
    assert trop.is_positroid(4, 2, [[2, 3], [3, 4]])
    with pytest.raises(ValueError):
        trop.is_positroid(4, 2, [[1, 2], [3, 4]])


def test_worked_values():
    assert trop.web_trip(2, 5) == [3, 4, 5, 1, 2]
    assert trop.fvector_bound(3, 12, 1) == 45


def test_counterexample():
    r = trop.verify_counterexample()
    assert r["passed"] and r["cells"] == 45 and not r["lift_regular"]
    assert trop.counterexample_svg().startswith("<svg")
