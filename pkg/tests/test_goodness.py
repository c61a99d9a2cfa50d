from dataclasses import replace

import pytest

from sdgamma.errors import RangeError
from sdgamma.goodness import (
    DOMINATED, SCALED, all_certificates, certificate_range, goodness_certificate,
    verify_certificate,
)
from sdgamma.transforms import CountVector, padded, vec_add, vec_shift


def test_base_case_three_two():
    c = goodness_certificate(3, 2)
    assert c.target == (0, 2) and c.base == (1,)
    assert c.level == 1 and c.d == 0
    assert verify_certificate(c)


def test_first_even_split():
    c = goodness_certificate(4, 2)
    assert c.target == (0, 6)
    assert c.level == c.d == 1
    assert all(s.kind == SCALED for s in c.summands)
    assert verify_certificate(c)


def test_six_three():
    c = goodness_certificate(6, 3)
    assert c.target == (0, 12, 72)
    assert verify_certificate(c)


def test_range_by_parity():
    assert certificate_range(4) == [(2, False), (1, True), (2, True)]
    assert certificate_range(5) == [(2, False), (3, False), (1, True), (2, True)]
    with pytest.raises(RangeError):
        goodness_certificate(4, 1)
    with pytest.raises(RangeError):
        goodness_certificate(5, 3, primed=True)
    with pytest.raises(RangeError):
        goodness_certificate(1, 1, primed=True)


def test_memoized():
    assert goodness_certificate(7, 3) is goodness_certificate(7, 3)


def test_all_certificates_verify():
    for c in all_certificates(10):
        rep = verify_certificate(c)
        assert rep.ok, (rep.label, rep.violations)


def test_summands_add_to_target():
    for c in all_certificates(9):
        total = vec_shift(vec_add(*(s.vector for s in c.summands)))
        m = max(len(total), len(c.target))
        assert padded(total, m) == padded(c.target, m)
        if c.level == c.d:
            assert all(s.kind == SCALED for s in c.summands)
        else:
            assert any(s.kind == DOMINATED for s in c.summands)


def test_primed_leaf_identity_recorded():
    # the doubled shift of gamma^(n,1) matches at every n
    for n in range(2, 11):
        c = goodness_certificate(n, 1, primed=True)
        assert f"target equals (0, 2 gamma^({n},1))" in c.notes


def test_tampered_summand_fails():
    c = goodness_certificate(3, 2)
    s = c.summands[0]
    bumped = replace(s, vector=CountVector([s.vector[0] + 1, *s.vector[1:]]))
    bad = replace(c, summands=(bumped,) + c.summands[1:])
    rep = verify_certificate(bad)
    assert not rep.ok
    assert any("domination" in v for v in rep.violations)


def test_tampered_target_fails():
    c = goodness_certificate(6, 2)
    bad = replace(c, target=CountVector([0, 1, 1]))
    assert not verify_certificate(bad)


def test_wrong_level_fails():
    c = goodness_certificate(6, 2)
    assert not verify_certificate(replace(c, level=c.level + 1))
