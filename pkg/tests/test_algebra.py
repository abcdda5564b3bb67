import itertools
import math
import random

import pytest

from hassewitt.algebra import (
    ExtensionField,
    PrimeFieldElement,
    SparseLaurentPoly,
    det_leibniz,
    factorial_table,
    find_irreducible,
    is_prime,
    multinomial_mod_p,
)

P = SparseLaurentPoly


def mono(exp, c=1, p=None):
    return P.monomial(exp, c, modulus=p)


# -- multinomial -------------------------------------------------------------


def test_multinomial_examples():
    assert multinomial_mod_p((1, 1, 1, 1), 5) == 4  # 24 mod 5
    assert multinomial_mod_p((4, 0, 0, 0), 5) == 1
    assert multinomial_mod_p((1, 1), 3) == 2


def test_multinomial_rejects_wrong_sum():
    with pytest.raises(ValueError):
        multinomial_mod_p((1, 1), 5)
    with pytest.raises(ValueError):
        multinomial_mod_p((-1, 5), 5)


def test_wilson():
    for p in (2, 3, 5, 7, 11, 13, 97):
        assert factorial_table(p)[p - 1] == (p - 1) % p


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (3, 3), (5, 2), (5, 3)])
def test_multinomial_completeness(p, n):
    # sum of multinomial(e) * L^e over all e with sum e = p-1 equals
    # (L1 + ... + Ln)^(p-1), term for term
    lin = P(n, p, {tuple(int(k == i) for k in range(n)): 1 for i in range(n)})
    power = P.constant(n, 1, p)
    for _ in range(p - 1):
        power = power * lin
    direct = {}
    for e in itertools.product(range(p), repeat=n):
        if sum(e) == p - 1:
            direct[e] = multinomial_mod_p(e, p).value
    assert power == P(n, p, direct)


# -- prime field -------------------------------------------------------------


def test_prime_field_basics():
    x = PrimeFieldElement(7, 5)
    assert x.value == 2
    assert (x + 4).value == 1
    assert (x * x).value == 4
    assert (x.inverse() * x) == 1
    with pytest.raises(ValueError):
        PrimeFieldElement(1, 6)
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElement(0, 5).inverse()


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


# -- polynomial arithmetic ----------------------------------------------------


def test_difference_of_squares_mod5():
    l1, l2 = mono((1, 0), p=5), mono((0, 1), p=5)
    assert (l1 + l2) * (l1 - l2) == mono((2, 0), p=5) + mono((0, 2), 4, p=5)


def test_freshman_dream_mod2():
    l1, l2 = mono((1, 0), p=2), mono((0, 1), p=2)
    sq = (l1 + l2) * (l1 + l2)
    assert sq == mono((2, 0), p=2) + mono((0, 2), p=2)


def test_laurent_inverse_monomial():
    assert mono((-1,)) * mono((1,)) == P.constant(1, 1)


def test_mismatched_operands_rejected():
    with pytest.raises(ValueError):
        mono((1, 0), p=5) + mono((1,), p=5)
    with pytest.raises(ValueError):
        mono((1, 0), p=5) * mono((1, 0), p=3)


def random_poly(rng, nvars, p, nterms=3):
    terms = {}
    for _ in range(nterms):
        exp = tuple(rng.randint(-3, 3) for _ in range(nvars))
        terms[exp] = rng.randint(0, p - 1)
    return P(nvars, p, terms)


def test_ring_axioms_random():
    rng = random.Random(20260823)
    for _ in range(1000):
        p = rng.choice([2, 3, 5, 7])
        f, g, h = (random_poly(rng, 3, p) for _ in range(3))
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_constant_term():
    f = P.constant(4, 1, 5) + mono((1, 1, 1, -3), 4, p=5)
    assert f.constant_term() == 1
    assert mono((0, 0, 0, -1), p=5).constant_term() == 0
    assert P.zero(4, 5).constant_term() == 0


def test_canonical_str_deterministic():
    f = mono((0, 1), 2, p=5) + mono((1, 0), 3, p=5)
    assert f.canonical_str() == "2*L1^0*L2^1 + 3*L1^1*L2^0"
    assert P.zero(2, 5).canonical_str() == "0"


# -- determinants -------------------------------------------------------------


def det_cofactor(mat):
    # independent oracle: expansion along the first row
    m = len(mat)
    if m == 1:
        return mat[0][0]
    proto = mat[0][0]
    acc = SparseLaurentPoly.zero(proto.nvars, proto.modulus)
    for j in range(m):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * det_cofactor(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def test_det_identity_and_diag():
    one = P.constant(2, 1, 5)
    zero = P.zero(2, 5)
    assert det_leibniz([[one, zero], [zero, one]]) == one
    l1, l2 = mono((1, 0), p=5), mono((0, 1), p=5)
    assert det_leibniz([[l1, zero], [zero, l2]]) == l1 * l2


def test_det_2x2_example():
    one = P.constant(2, 1, 5)
    l1, l2 = mono((1, 0), p=5), mono((0, 1), p=5)
    mat = [[one + l1, l2], [l2, one]]
    expected = one + l1 + mono((0, 2), 4, p=5)
    assert det_leibniz(mat) == expected


def test_det_3x3_matches_cofactor():
    rng = random.Random(7)
    for _ in range(25):
        p = rng.choice([3, 5, 7])
        mat = [[random_poly(rng, 2, p, 2) for _ in range(3)] for _ in range(3)]
        assert det_leibniz(mat) == det_cofactor(mat)


def test_det_bound():
    one = P.constant(1, 1, 5)
    mat = [[one] * 9 for _ in range(9)]
    with pytest.raises(ValueError):
        det_leibniz(mat)


# -- extension fields ---------------------------------------------------------


def test_gf4_arithmetic():
    F = ExtensionField(2, 2)
    assert F.modulus == (1, 1, 1)  # t^2 + t + 1
    t = F.gen()
    one = F.one()
    assert t * (t + one) == one
    assert t.inverse() == t + one


def test_degenerate_extension_matches_prime_field():
    F = ExtensionField(5, 1)
    three = F.from_int(3)
    assert (three * three).canonical_str() == "4"
    assert (three + F.from_int(4)).canonical_str() == "2"


def test_irreducible_search_deterministic():
    assert find_irreducible(2, 1) == (0, 1)
    assert find_irreducible(3, 2) == (1, 0, 1)  # t^2 + 1 over GF(3)


@pytest.mark.parametrize(
    "p,a",
    [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
     (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (61, 1)],
)
def test_multiplicative_order_exhaustive(p, a):
    F = ExtensionField(p, a)
    one = F.one()
    for x in F.elements():
        if x:
            assert x ** (F.q - 1) == one


def test_extension_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        ExtensionField(3, 2).zero().inverse()


def test_extension_inverse_random():
    rng = random.Random(3)
    F = ExtensionField(7, 2)
    pool = [x for x in F.elements() if x]
    for _ in range(50):
        x = rng.choice(pool)
        assert x * x.inverse() == F.one()
