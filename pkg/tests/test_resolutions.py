"""Free resolutions, Betti tables, regularity, and the randomized test."""

from math import comb

import pytest

from groebner import (
    GF,
    GREVLEX,
    LEX,
    NOT_REGULAR,
    QQ,
    REGULAR,
    BettiTable,
    PolynomialRing,
    bayer_stillman_test,
    buchberger,
    free_resolution,
    hilbert_function,
    random_ideal,
    regularity,
    twisted_cubic,
)
from groebner.ideals import generic_change
from groebner.modules import BuchbergerOptions


def test_twisted_cubic_resolution(cubic_grevlex):
    ring, gens = cubic_grevlex
    res = free_resolution(gens)
    bt = res.betti()
    assert bt.entries == {(0, 2): 3, (1, 3): 2}
    assert regularity(res) == 2
    assert res.composition_is_zero()
    assert not res.has_scalar_entries()
    assert res.length <= ring.nvars + 1


def test_monomial_ideal_resolution(ring_qq_xy):
    x, y = ring_qq_xy.variables()
    res = free_resolution([x * x, x * y, y ** 3])
    assert res.betti().entries == {(0, 2): 2, (0, 3): 1, (1, 3): 1, (1, 4): 1}
    assert regularity(res) == 3


def test_principal_ideal_resolution(ring_qq_xy):
    x, y = ring_qq_xy.variables()
    res = free_resolution([x * x + y * y])
    assert res.length == 0
    assert res.betti().entries == {(0, 2): 1}


def test_linear_form_regularity(ring_qq_xy):
    x, _ = ring_qq_xy.variables()
    assert regularity(free_resolution([x])) == 1


def test_regularity_requires_minimal():
    ring, gens = twisted_cubic(QQ, GREVLEX)
    res = free_resolution(gens, minimal=False)
    with pytest.raises(ValueError):
        regularity(res)
    assert res.composition_is_zero()


def test_degree_cap_flags_partial_resolution():
    ring, gens = twisted_cubic(QQ, GREVLEX)
    res = free_resolution(gens, opts=BuchbergerOptions(degree_cap=1))
    assert not res.complete
    with pytest.raises(ValueError):
        regularity(res)


def test_resolution_matrix_accessor(cubic_grevlex):
    ring, gens = cubic_grevlex
    res = free_resolution(gens)
    m0 = res.matrix(0)
    assert len(m0) == 1 and len(m0[0]) == 3  # three quadrics into the ring
    m1 = res.matrix(1)
    assert len(m1) == 3 and len(m1[0]) == 2
    # columns of matrix(1) pair against steps[0] to give zero
    for col in range(2):
        acc = ring.zero()
        for row in range(3):
            acc = acc + m1[row][col] * res.steps[0][row].comps[0]
        assert acc.is_zero


def test_regularity_at_least_max_generator_degree():
    for seed in (31, 32, 33):
        ring, gens = random_ideal(seed, 3, 2, 2)
        reg = regularity(free_resolution(gens))
        from groebner import minimalize_generators

        assert reg >= max(g.total_degree() for g in minimalize_generators(gens))


def test_betti_table_formats():
    bt = BettiTable({(0, 2): 3, (1, 3): 2})
    assert bt.regularity() == 2
    assert bt[(0, 2)] == 3 and bt[(5, 5)] == 0
    assert bt.json_rows() == [
        {"i": 0, "j": 2, "beta": 3},
        {"i": 1, "j": 3, "beta": 2},
    ]
    art = bt.ascii()
    assert "0" in art and "2:" in art


def test_betti_numbers_intrinsic_across_presentations():
    # same ideal handed over in lex and grevlex reduced-basis form
    ring_l, gens_l = twisted_cubic(QQ, LEX)
    ring_g, gens_g = twisted_cubic(QQ, GREVLEX)
    lex_basis = buchberger(gens_l).elements
    grev_basis = buchberger(gens_g).elements
    assert free_resolution(lex_basis).betti() == free_resolution(grev_basis).betti()


def test_betti_numbers_stable_under_selection_seeds(cubic_grevlex):
    ring, gens = cubic_grevlex
    reference = free_resolution(gens).betti()
    for seed in (1, 5):
        bt = free_resolution(gens, opts=BuchbergerOptions(select_seed=seed)).betti()
        assert bt == reference


def test_alternating_sum_matches_hilbert_series(cubic_grevlex):
    ring, gens = cubic_grevlex
    res = free_resolution(gens)
    num = res.betti().alternating_numerator()
    v = ring.nvars
    cap = 10
    hf = hilbert_function(gens, cap)  # dims of S/I
    for d in range(cap + 1):
        dim_ideal = sum(c * comb(d - e + v - 1, v - 1) for e, c in num.items() if e <= d)
        assert comb(d + v - 1, v - 1) - dim_ideal == hf[d]


def test_resolution_of_random_ideals_is_exact():
    for seed in (3, 4):
        ring, gens = random_ideal(seed, 3, 2, 2)
        res = free_resolution(gens)
        assert res.composition_is_zero()
        assert not res.has_scalar_entries()
        assert res.length <= ring.nvars + 1


# ---------------------------------------------------------------------------
# the randomized regularity test
# ---------------------------------------------------------------------------

def test_bs_twisted_cubic():
    ring, gens = twisted_cubic(QQ, GREVLEX)
    assert bayer_stillman_test(gens, 2, seed=3) == REGULAR
    assert bayer_stillman_test(gens, 1, seed=3) == NOT_REGULAR  # degree-2 generators


def test_bs_single_variable():
    ring = PolynomialRing(GF(32003), ["x0", "x1", "x2"], GREVLEX)
    assert bayer_stillman_test([ring.variable(0)], 1) == REGULAR


def test_bs_agrees_with_resolution_on_seeds():
    for seed in (11, 12, 13):
        ring, gens = random_ideal(seed, 3, 2, 2)
        changed, _ = generic_change(gens, seed=seed + 100)
        reg = regularity(free_resolution(changed))
        assert bayer_stillman_test(changed, reg, seed=seed) == REGULAR
        assert bayer_stillman_test(changed, reg - 1, seed=seed) == NOT_REGULAR


def test_bs_small_field_guard():
    ring = PolynomialRing(GF(5), ["x", "y"], GREVLEX)
    x, y = ring.variables()
    with pytest.raises(ValueError):
        bayer_stillman_test([x * x], 2, trials=30)
