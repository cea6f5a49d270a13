import random

import pytest

from weilcensus.algebra import IntPolynomial
from weilcensus.modpoly import (
    ModPoly,
    factor,
    is_irreducible,
    multiplicative_order_of_x,
    poly_mod_prime,
    squarefree_decomposition,
)


def test_poly_mod_prime_examples():
    f = IntPolynomial([2, 0, 1])
    assert poly_mod_prime(f, 3) == ModPoly(3, [2, 0, 1])
    assert poly_mod_prime(f, 2) == ModPoly(2, [0, 0, 1])   # T^2
    assert poly_mod_prime(f, 5).is_monic
    with pytest.raises(ValueError):
        poly_mod_prime(f, 6)


def test_factor_examples():
    fac = factor(ModPoly(3, [2, 0, 1]))
    assert [(str(g), m) for g, m in fac] == [("T + 1", 1), ("T + 2", 1)]
    assert factor(ModPoly(2, [0, 0, 1])) == [(ModPoly(2, [0, 1]), 2)]
    assert factor(ModPoly(2, [1, 1, 1])) == [(ModPoly(2, [1, 1, 1]), 1)]


def test_factor_recomposition_random():
    rng = random.Random(21)
    for _ in range(150):
        p = rng.choice((2, 3, 5, 7, 11))
        coeffs = [rng.randrange(p) for _ in range(rng.randint(2, 9))]
        f = ModPoly(p, coeffs)
        if f.degree < 1:
            continue
        prod = ModPoly.one(p).scale(f.leading)
        for g, mult in factor(f):
            assert g.is_monic and is_irreducible(g)
            for _ in range(mult):
                prod = prod * g
        assert prod == f


def test_factor_is_seed_independent():
    f = ModPoly(5, [1, 0, 2, 0, 3, 0, 0, 1])
    assert factor(f, seed=1) == factor(f, seed=999) == factor(f)


def test_squarefree_decomposition_char_p_powers():
    p = 3
    a = ModPoly(p, [1, 1])       # T + 1
    f = a * a * a               # (T+1)^3 = T^3 + 1 over F_3, derivative 0
    assert f.derivative().is_zero
    assert squarefree_decomposition(f) == [(a, 3)]


def test_is_irreducible():
    assert is_irreducible(ModPoly(2, [1, 1, 1]))
    assert not is_irreducible(ModPoly(2, [1, 0, 1]))      # (T+1)^2
    assert is_irreducible(ModPoly(3, [1, 0, 1]))          # T^2 + 1 over F_3
    assert is_irreducible(ModPoly(5, [2, 0, 1]))          # T^2 + 2 over F_5
    assert not is_irreducible(ModPoly(7, [1]))


def test_multiplicative_order():
    # order of T modulo T^2 + 2 over F_5 is 8: T^2 = 3, T^4 = 4, T^8 = 1
    assert multiplicative_order_of_x(ModPoly(5, [2, 0, 1])) == 8
    assert multiplicative_order_of_x(ModPoly(3, [2, 1])) == 1     # root 1
    assert multiplicative_order_of_x(ModPoly(3, [1, 1])) == 2     # root -1
    with pytest.raises(ValueError):
        multiplicative_order_of_x(ModPoly(3, [0, 1]))             # T not invertible


def test_modpoly_division_and_gcd():
    rng = random.Random(22)
    for _ in range(100):
        p = rng.choice((2, 3, 5))
        f = ModPoly(p, [rng.randrange(p) for _ in range(rng.randint(1, 8))])
        g = ModPoly(p, [rng.randrange(p) for _ in range(rng.randint(1, 8))])
        if g.is_zero:
            continue
        q, r = f.divmod(g)
        assert q * g + r == f
        assert r.degree < g.degree
        d = f.gcd(g)
        if not f.is_zero:
            assert (f % d).is_zero and (g % d).is_zero
