from fractions import Fraction as F

import pytest

from pencillab.polynomials import (PONE, PZERO, linear_valuation, padd, pdeg,
                                   pdivides, pdivmod, pmonic, pmul, pnorm, psub,
                                   rational_roots, s_minus, smith_diagonal)


def test_poly_basics():
    assert pnorm((1, 2, 0, 0)) == (F(1), F(2))
    assert pnorm(()) == PZERO
    assert pdeg(PZERO) == -1 and pdeg(PONE) == 0
    assert padd((F(1),), (F(-1), F(1))) == (F(0), F(1))
    assert psub((F(1), F(1)), (F(1),)) == (F(0), F(1))
    assert pmul(PZERO, PONE) == PZERO
    assert pmonic(pnorm((2, 4))) == (F(1, 2), F(1))


def test_divmod_property():
    import random
    rng = random.Random(3)
    for _ in range(200):
        a = pnorm([F(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(rng.randint(0, 6))])
        b = pnorm([F(rng.randint(-4, 4)) for _ in range(rng.randint(1, 4))])
        if not b:
            continue
        q, r = pdivmod(a, b)
        assert padd(pmul(q, b), r) == a
        assert pdeg(r) < pdeg(b)
    with pytest.raises(ZeroDivisionError):
        pdivmod(PONE, PZERO)


def test_pdivides():
    assert pdivides(s_minus(F(2)), pmul(s_minus(F(2)), s_minus(F(3))))
    assert not pdivides(s_minus(F(1)), s_minus(F(2)))
    assert pdivides(PONE, PZERO)


def test_linear_valuation_and_roots():
    p = pmul(pmul(s_minus(F(2)), s_minus(F(2))), s_minus(F(-1, 2)))
    assert linear_valuation(p, F(2))[0] == 2
    assert linear_valuation(p, F(5))[0] == 0
    assert rational_roots(p) == {F(2): 2, F(-1, 2): 1}
    # zero roots handled before divisor enumeration
    assert rational_roots(pnorm((0, 0, 1))) == {F(0): 2}
    # irreducible over the rationals
    assert rational_roots(pnorm((-2, 0, 1))) == {}


def test_smith_diagonal_hand_cases():
    s = s_minus(F(0))
    one = PONE
    # [[s, 1], [0, s]] has invariant factors (1, s^2)
    mat = [[s, one], [PZERO, s]]
    assert smith_diagonal(mat, 2, 2) == [one, pnorm((0, 0, 1))]
    # diag(s, s(s-1)) is already in form
    mat = [[s, PZERO], [PZERO, pmul(s, s_minus(F(1)))]]
    assert smith_diagonal(mat, 2, 2) == [s, pmul(s, s_minus(F(1)))]
    # divisibility fixup needed: diag(s, s-1) -> (1, s(s-1))
    mat = [[s, PZERO], [PZERO, s_minus(F(1))]]
    assert smith_diagonal(mat, 2, 2) == [one, pmul(s, s_minus(F(1)))]
    assert smith_diagonal([[PZERO]], 1, 1) == []
