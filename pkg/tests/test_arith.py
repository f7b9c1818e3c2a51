"""Order conditions on q, group orders, considerate/banal sweep."""

import itertools

import pytest

from wdsmooth.arith import (
    QContext,
    chevalley_steinberg_order,
    implication_sweep,
    is_banal,
    is_considerate,
    is_prime,
    multiplicative_order,
    order_capped,
)
from wdsmooth.rootsys import build_root_system, parse_group


def rs_of(name):
    return build_root_system(parse_group(name))


def brute_force_gl2_order(p):
    count = 0
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p != 0:
            count += 1
    return count


def brute_force_sl2_order(p):
    count = 0
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            count += 1
    return count


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(49)
    assert is_prime(97)


def test_qcontext_validation():
    QContext(q=4, l=5)
    QContext(q=9, l=0)
    with pytest.raises(ValueError, match="prime power"):
        QContext(q=6, l=5)
    with pytest.raises(ValueError, match="prime power"):
        QContext(q=1, l=5)
    with pytest.raises(ValueError, match="l must be 0 or a prime"):
        QContext(q=4, l=9)
    with pytest.raises(ValueError, match="divide"):
        QContext(q=4, l=2)


def test_multiplicative_order():
    assert multiplicative_order(3, 11) == 5
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(4, 5) == 2
    assert multiplicative_order(1, 13) == 1
    with pytest.raises(ValueError):
        multiplicative_order(3, 12)
    with pytest.raises(ValueError):
        multiplicative_order(22, 11)


def test_order_capped():
    assert order_capped(3, 11, 6) == 5
    assert order_capped(3, 11, 4) is None
    assert order_capped(2, 7, 3) == 3


def test_considerate_basics():
    # order of 3 mod 11 is 5: fine up to h=4, fails at h >= 5
    assert is_considerate(QContext(q=3, l=11), 4)
    assert not is_considerate(QContext(q=3, l=11), 5)
    assert not is_considerate(QContext(q=3, l=11), 6)
    # characteristic zero is always considerate
    assert is_considerate(QContext(q=3, l=0), 30)
    with pytest.raises(ValueError):
        is_considerate(QContext(q=3, l=11), 0)


@pytest.mark.parametrize("p,want", [(2, 6), (3, 48), (5, 480)])
def test_gl2_order_brute_force(p, want):
    gl2 = rs_of("GL2")
    assert chevalley_steinberg_order(gl2, p) == want
    assert brute_force_gl2_order(p) == want


def test_sl2_order_brute_force():
    sl2 = rs_of("SL2")
    assert chevalley_steinberg_order(sl2, 3) == 24
    assert brute_force_sl2_order(3) == 24


def test_sp6_order_formula():
    sp6 = rs_of("Sp6")
    for q in (2, 3):
        want = q**9 * (q**2 - 1) * (q**4 - 1) * (q**6 - 1)
        assert chevalley_steinberg_order(sp6, q) == want
    assert chevalley_steinberg_order(sp6, 3) == 9170703360


def test_central_torus_factor():
    # GL_n order = SL_n order times (q - 1)
    gl3, sl3 = rs_of("GL3"), rs_of("SL3")
    for q in (2, 3, 4):
        assert chevalley_steinberg_order(gl3, q) == \
            chevalley_steinberg_order(sl3, q) * (q - 1)


def test_banal_witness_pair():
    # 11 does not divide |Sp6(F_3)| but ord(3 mod 11) = 5 <= 6 = h
    sp6, so7 = rs_of("Sp6"), rs_of("SO7")
    assert is_banal(11, sp6, 3)
    assert so7.coxeter_number == 6
    assert not is_considerate(QContext(q=3, l=11), so7.coxeter_number)
    assert multiplicative_order(3, 11) == 5


def test_implication_sweep_clean():
    report = implication_sweep("ABC", rank_max=3, l_max=13, q_max=9)
    assert report.ok
    assert report.checked == 245
    assert report.violations == []
    assert report.type_a_violations == []
    # the gap cases exist: banal but not considerate outside type A
    assert any(name.startswith("C3") for name, _, _, _ in report.banal_not_considerate)


def test_implication_sweep_rejects_unknown_family():
    with pytest.raises(ValueError, match="unknown family"):
        implication_sweep("AX", rank_max=2, l_max=5, q_max=4)


def test_banal_agrees_with_order_divisibility():
    rs = rs_of("Sp4")
    for q in (2, 3, 4, 5):
        for l in (3, 5, 7, 11, 13):
            if q % l == 0:
                continue
            assert is_banal(l, rs, q) == (chevalley_steinberg_order(rs, q) % l != 0)
