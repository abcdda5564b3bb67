import random

import pytest

from hassewitt.algebra import SparseLaurentPoly
from hassewitt.geometry import enumerate_box_relations
from hassewitt.hasse_witt import symbolic_entry
from hassewitt.hypergeometric import (
    box_apply,
    derivative_series,
    euler_apply,
    rho_window,
    series_Gi,
    trunc,
    verify_hypergeometric_solution,
    verify_truncation_identity,
)

P = SparseLaurentPoly

# reindexed Hesse coordinates: L1 = coefficient of xyz, the interior monomial
HESSE_REL = (-3, 1, 1, 1)


def hesse_beta(hesse, j=0):
    return tuple(-x for x in hesse.lifted[j])


# -- box operators -----------------------------------------------------------


def test_box_kills_constants():
    f = P.constant(4, 7)
    assert box_apply(HESSE_REL, f).is_zero


def test_box_on_inverse_monomial():
    # Box = d2 d3 d4 - d1^3 applied to L1^-1: the falling factorial
    # (-1)(-2)(-3) = -6 and the operator's minus sign give +6 L1^-4
    f = P.monomial((-1, 0, 0, 0))
    got = box_apply(HESSE_REL, f)
    assert got == P.monomial((-4, 0, 0, 0), 6)


def test_box_depth_one_solution():
    # the visible cancellation: d2 d3 d4 of the second term matches d1^3 of
    # the first; the only residual is the boundary term at (-7,1,1,1),
    # cancelled by the next (depth-excluded) series term
    f = P.monomial((-1, 0, 0, 0)) + P.monomial((-4, 1, 1, 1), -6)
    got = box_apply(HESSE_REL, f)
    assert got == P.monomial((-7, 1, 1, 1), -720)
    rep = verify_hypergeometric_solution(
        f, (-1, -1, -1, -1), [HESSE_REL], _hesse_lifted(), mode="exact-integer"
    )
    assert rep.passed


def _hesse_lifted():
    from hassewitt.geometry import SupportSet

    return SupportSet.build(
        2, 3, [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)]
    ).lifted


def test_box_native_mod_path_agrees():
    rng = random.Random(11)
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        terms = {
            tuple(rng.randint(-4, 4) for _ in range(4)): rng.randint(1, p - 1)
            for _ in range(4)
        }
        f = P(4, p, terms)
        assert box_apply(HESSE_REL, f) == box_apply(HESSE_REL, f, native_mod=True)


# -- Euler operators -----------------------------------------------------------


def test_euler_annihilates_matching_monomial(hesse):
    # a monomial whose lifted degree equals beta is killed by every coordinate
    f = P.monomial((-1, 0, 0, 0))
    beta = hesse_beta(hesse)  # -a_1+ = (-1,-1,-1,-1)
    for coord in range(4):
        assert euler_apply(hesse.lifted, coord, beta, f).is_zero


def test_euler_nonmatching_monomial(hesse):
    f = P.monomial((1, 0, 0, 0))  # lifted degree a_1+ = (1,1,1,1)
    got = euler_apply(hesse.lifted, 0, (0, 0, 0, 0), f)
    assert got == P.monomial((1, 0, 0, 0), 1)


def test_euler_iff_lifted_degree(hesse):
    rng = random.Random(5)
    lifted = hesse.lifted
    for _ in range(100):
        exp = tuple(rng.randint(-3, 3) for _ in range(4))
        degree = tuple(
            sum(e * v[c] for e, v in zip(exp, lifted)) for c in range(4)
        )
        beta = tuple(rng.randint(-3, 3) for _ in range(4))
        killed = all(
            euler_apply(lifted, c, beta, P.monomial(exp)).is_zero
            for c in range(4)
        )
        assert killed == (degree == beta)


# -- series ---------------------------------------------------------------------


def test_Gi_hesse_coefficients(hesse):
    g = series_Gi(hesse, 0, 6)
    assert g.poly.terms == {(-3, 1, 1, 1): 2, (-6, 2, 2, 2): -15}
    g3 = series_Gi(hesse, 0, 3)
    assert g3.poly.terms == {(-3, 1, 1, 1): 2}


def test_Gi_trivial_lattice():
    from hassewitt.geometry import SupportSet

    s = SupportSet.build(1, 2, [(1, 1)])
    assert series_Gi(s, 0, 5).poly.is_zero


def test_Gi_bad_index(hesse):
    with pytest.raises(ValueError):
        series_Gi(hesse, 1, 3)


def test_derivative_series_diagonal(hesse):
    # depth bounds -l_1, so depth 3 admits exactly l = 0 and the generator
    ds = derivative_series(hesse, 0, 0, 3)
    assert ds.poly.terms == {(-1, 0, 0, 0): 1, (-4, 1, 1, 1): -6}
    ds6 = derivative_series(hesse, 0, 0, 6)
    assert ds6.poly.terms == {
        (-1, 0, 0, 0): 1,
        (-4, 1, 1, 1): -6,
        (-7, 2, 2, 2): 90,
    }


def test_derivative_series_off_diagonal(quartic):
    # j != i: every exponent is l - e_j with l_j > 0, coefficients integers
    ds = derivative_series(quartic, 0, 1, 3)
    assert not ds.poly.is_zero
    for exp, c in ds.poly.terms.items():
        assert isinstance(c, int)
        l = list(exp)
        l[1] += 1
        assert l[1] > 0 and l[0] <= 0


def test_derivative_series_trivial_off_diagonal():
    # with a trivial lattice the j != i sum is empty
    from hassewitt.geometry import SupportSet

    s = SupportSet.build(2, 4, [(2, 1, 1), (1, 2, 1), (1, 1, 2), (4, 0, 0), (0, 4, 0), (0, 0, 4)])
    if not __import__("hassewitt.geometry", fromlist=["kernel_basis"]).kernel_basis(
        s.lifted
    ):
        assert derivative_series(s, 0, 1, 3).poly.is_zero


# -- truncation ------------------------------------------------------------------


def test_trunc_rho_window(hesse):
    p = 5
    ds = derivative_series(hesse, 0, 0, 6).poly.reduce_mod(p)
    got = trunc(rho_window(4, 0), ds, p)
    # the term at (-7,2,2,2) falls outside s_1 in [-5,-1]
    assert got == P(4, p, {(-1, 0, 0, 0): 1, (-4, 1, 1, 1): -6})


def test_trunc_zero_window_identity():
    p = 5
    f = P(3, p, {(0, 1, 2): 3, (4, 4, 4): 1})
    assert trunc((0, 0, 0), f, p) == f


def test_trunc_disjoint_window():
    f = P(2, 5, {(1, 1): 2})
    assert trunc((1, 1), f, 5).is_zero


def test_trunc_commutes_with_derivative_mod_p():
    # d/dL_k (Trunc_r f) = Trunc_r (d/dL_k f) mod p: boundary terms carry
    # coefficients divisible by p
    rng = random.Random(314)
    for _ in range(1000):
        p = rng.choice([2, 3, 5, 7])
        nvars = rng.choice([2, 3])
        f = P(
            nvars,
            p,
            {
                tuple(rng.randint(-2 * p, 2 * p) for _ in range(nvars)): rng.randint(
                    1, p - 1
                )
                for _ in range(5)
            },
        )
        r = tuple(rng.randint(-2, 1) for _ in range(nvars))
        k = rng.randrange(nvars)
        orders = tuple(int(c == k) for c in range(nvars))
        from hassewitt.hypergeometric import _monomial_derivative

        lhs = _monomial_derivative(trunc(r, f, p), orders)
        rhs = trunc(r, _monomial_derivative(f, orders), p)
        assert lhs == rhs


# -- solution verification ---------------------------------------------------------


def test_verify_entry_as_solution(hesse):
    p = 5
    entry = symbolic_entry(hesse, (1, 1, 1), (1, 1, 1), p)
    up = hesse.lifted[0]
    beta = tuple(p * a - b for a, b in zip(up, up))
    rep = verify_hypergeometric_solution(
        entry, beta, [HESSE_REL], hesse.lifted, mode="mod-p"
    )
    assert rep.passed


def test_verify_truncated_series_mod_p(hesse):
    p = 5
    ds = derivative_series(hesse, 0, 0, p).poly.reduce_mod(p)
    f = trunc(rho_window(4, 0), ds, p)
    rep = verify_hypergeometric_solution(
        f, hesse_beta(hesse), [HESSE_REL], hesse.lifted, mode="mod-p"
    )
    assert rep.passed


def test_verify_detects_corruption(hesse):
    p = 5
    ds = derivative_series(hesse, 0, 0, p).poly.reduce_mod(p)
    f = trunc(rho_window(4, 0), ds, p)
    corrupted = f + P.monomial((-1, 0, 0, 0), 1, p)
    rep = verify_hypergeometric_solution(
        corrupted, hesse_beta(hesse), [HESSE_REL], hesse.lifted, mode="mod-p"
    )
    assert not rep.passed


def test_verify_exact_integer_mode(hesse):
    ds = derivative_series(hesse, 0, 0, 5)
    rep = verify_hypergeometric_solution(
        ds.poly, hesse_beta(hesse), [HESSE_REL], hesse.lifted, mode="exact-integer"
    )
    assert rep.passed
    assert rep.witnesses["integer_coefficients"]


def test_verify_rejects_non_relation(hesse):
    with pytest.raises(ValueError):
        verify_hypergeometric_solution(
            P.constant(4, 1, 5),
            (0, 0, 0, 0),
            [(1, 0, 0, 0)],
            hesse.lifted,
            mode="mod-p",
        )


# -- truncation identity (entry vs series) ---------------------------------------


@pytest.mark.parametrize("p", [3, 5, 7])
def test_truncation_identity_hesse(hesse, p):
    rep = verify_truncation_identity(hesse, 0, 0, p)
    assert rep.passed
    assert rep.witnesses["signs"] == ["+"]


def test_truncation_identity_trivial_lattice():
    # with L_i trivial both sides reduce to L_i^{p-1}
    from hassewitt.geometry import SupportSet

    s = SupportSet.build(1, 2, [(1, 1)])
    p = 5
    rep = verify_truncation_identity(s, 0, 0, p)
    assert rep.passed
    assert rep.witnesses["entry"] == P.monomial((p - 1,), 1, p).canonical_str()


def test_truncation_identity_quartic_entries(quartic):
    for i in range(quartic.m):
        for j in range(quartic.m):
            rep = verify_truncation_identity(quartic, i, j, 3)
            assert rep.passed
            assert "+" in rep.witnesses["signs"]
