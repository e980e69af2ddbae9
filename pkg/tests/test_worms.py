import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jrworms.exactnum import ONE, PHI, ZERO, floor
from jrworms.nonexpansive import orbit_delta
from jrworms.worms import (
    ALPHA, WORM_CASES, RotationParams, decompose, decomposition_text, extract_patterns, factor_complexity,
    fibonacci_factor_check, fibonacci_word, height_sequence, hv_counts, hv_points, mechanical_word,
    placement_matrix, return_step, rotation_word, worm_anchors, worm_delta_set, worm_heights, worm_point, worm_rho,
)

rhos = st.builds(Fraction, st.integers(0, 999), st.just(1000))


def test_rotation_params_invariants():
    with pytest.raises(ValueError):
        RotationParams(ONE, ZERO)
    with pytest.raises(ValueError):
        RotationParams(ALPHA, ONE)
    assert RotationParams().alpha == 2 - PHI


def test_rotation_word_examples():
    assert rotation_word(RotationParams(ALPHA, ZERO), (0, 0)) == [0]
    assert rotation_word(RotationParams(ALPHA, Fraction(9, 10)), (0, 5)) == [1, 0, 1, 0, 0, 1]
    assert rotation_word(RotationParams(ALPHA, Fraction(3, 10)), (0, 10)) == [0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0]
    assert mechanical_word(RotationParams(ALPHA, Fraction(1, 4)), (0, 4)) == [0, 1, 0, 0, 1]


@given(rhos)
def test_rotation_equals_lower_mechanical(rho):
    params = RotationParams(ALPHA, rho)
    assert rotation_word(params, (-60, 60)) == mechanical_word(params, (-60, 60))


@given(rhos, st.integers(-100, 100))
def test_upper_and_lower_differ_in_two_consecutive_places(rho, start):
    params = RotationParams(ALPHA, rho)
    lo = mechanical_word(params, (start, start + 80), "lower")
    up = mechanical_word(params, (start, start + 80), "upper")
    diff = [i for i, (a, b) in enumerate(zip(lo, up)) if a != b]
    assert len(diff) in (0, 2) or (len(diff) == 1 and diff[0] in (0, 80))
    if len(diff) == 2:
        assert diff[1] == diff[0] + 1


def test_upper_word_at_zero_swaps_one_pair():
    params = RotationParams(ALPHA, ZERO)
    lo = mechanical_word(params, (-5, 5), "lower")
    up = mechanical_word(params, (-5, 5), "upper")
    assert [i for i, (a, b) in enumerate(zip(lo, up)) if a != b] == [4, 5]


def test_mechanical_word_kind():
    with pytest.raises(ValueError):
        mechanical_word(RotationParams(), (0, 1), "middle")


@given(rhos)
def test_hv_partition_and_counts(rho):
    params = RotationParams(ALPHA, rho)
    H, V = hv_points(params, (-20, 20))
    assert not set(H) & set(V)
    assert sorted(H + V) == [(n, floor(ALPHA * n + rho)) for n in range(-20, 21)]
    for n in (-7, 0, 5, 13):
        k, l = hv_counts(params, n)
        assert (k + l, l) == (n, floor(ALPHA * n + rho) - floor(rho))


def test_hv_example():
    H, V = hv_points(RotationParams(ALPHA, Fraction(9, 10)), (-6, 5))
    assert set(H) == {(-6, -2), (-4, -1), (-2, 0), (-1, 0), (1, 1), (3, 2), (4, 2)}
    assert set(V) == {(-5, -2), (-3, -1), (0, 0), (2, 1), (5, 2)}


def test_case_data():
    c = WORM_CASES
    assert c["phi2"].matrix == ((6, -2), (5, -1)) and len(c["phi2"].supp_B) == 11 and len(c["phi2"].supp_G) == 8
    assert c["phi"].matrix == ((-2, 1), (5, -1))
    assert c["inf"].matrix == ((1, 0), (5, -1))
    assert c["0"].matrix == ((1, 0), (0, 0)) and c["0"].supp_B == c["0"].supp_G == {(0, 0), (0, 1)}
    for name in ("phi2", "phi", "inf"):
        case = c[name]
        assert placement_matrix(case.b_vec, case.g_vec) == case.matrix
        # b/(b+g) = phi - 1 means b = (phi - 1)(b + g), compared through squares
        assert case.b_len_sq * (2 - PHI) ** 2 == case.g_len_sq * (PHI - 1) ** 2


def test_anchor_examples():
    mh, mv = worm_anchors("phi2", RotationParams(ALPHA, Fraction(9, 10)), None, (-6, 5))
    assert {(-32, -28), (-22, -19), (-12, -10), (-6, -5), (4, 4), (14, 13), (20, 18)} <= set(mh)
    assert {(-26, -23), (-16, -14), (0, 0), (10, 9), (26, 23)} <= set(mv)
    p = worm_point("inf", Fraction(1, 5))
    mh, mv = worm_anchors("inf", RotationParams(ALPHA, Fraction(1, 5)), p, (-4, 4))
    assert {(-3, -14), (-2, -9), (0, 0), (1, 5), (3, 14)} <= set(mh)
    with pytest.raises(ValueError):
        worm_anchors("inf", RotationParams(ALPHA, Fraction(1, 4)), p, (-4, 4))


def test_worm_rho_rejects_points_off_segment():
    with pytest.raises(ValueError):
        worm_rho("phi2", (PHI / 7, ONE / 3))
    assert worm_rho("phi", worm_point("phi", Fraction(1, 4))) == Fraction(1, 4)


@settings(max_examples=12)
@given(st.sampled_from(sorted(WORM_CASES)), st.builds(Fraction, st.integers(1, 96), st.just(97)))
def test_worm_set_equals_brute_force(case, rho):
    p = worm_point(case, rho)
    assert worm_delta_set(case, p, 25) == orbit_delta(p, 25)


def test_empty_range():
    p = worm_point("phi2", Fraction(1, 3))
    assert worm_delta_set("phi2", p, None, n_range=(1, 0)) == set()


def test_slope0_worm_is_two_rows():
    p = worm_point("0", Fraction(3, 10))
    dec = decompose("0", p, None, n_range=(-10, 10))
    assert {a[1] for a in dec.B_anchors + dec.G_anchors} == {0}
    assert dec.delta_set == {(n, y) for n in range(-10, 11) for y in (0, 1)}


def test_patterns():
    p = worm_point("phi2", Fraction(1, 3))
    bp, gp = extract_patterns("phi2", p, "+", 30)
    bm, gm = extract_patterns("phi2", p, "-", 30)
    assert set(bp) == WORM_CASES["phi2"].supp_B and set(gp) == WORM_CASES["phi2"].supp_G
    assert bp != bm and gp != gm
    b0p, _ = extract_patterns("0", worm_point("0", Fraction(1, 3)), "+", 10)
    b0m, _ = extract_patterns("0", worm_point("0", Fraction(1, 3)), "-", 10)
    relabel = {9: 1, 0: 6}
    assert {s: relabel[k] for s, k in b0m.items()} == b0p


def test_height_sequences():
    assert height_sequence([(0, 0), (1, 5), (2, 9)]) == [5, 4]
    params = RotationParams(ALPHA, Fraction(1, 5))
    mh, mv = worm_anchors("inf", params, None, (-4, 4))
    assert worm_heights("inf", params, (-4, 4)) == height_sequence(mh + mv)
    with pytest.raises(ValueError):
        worm_heights("0", params, (-4, 4))
    dec = decompose("phi2", worm_point("phi2", Fraction(1, 3)), None, n_range=(-30, 30))
    assert set(height_sequence(dec)) == {4, 5}


def test_fibonacci():
    assert fibonacci_word(8) == "abaababa"
    assert fibonacci_factor_check("abaab", 5)
    assert not fibonacci_factor_check("bb", 2)
    assert fibonacci_factor_check("5,4,5,5,4,5,4,5,5,4", 10)
    for w in ("5455454554545545545455455", "5455454554554545545455455"):
        assert fibonacci_factor_check(w, 12)
    with pytest.raises(ValueError):
        fibonacci_factor_check("abc", 2)


def test_complexity_of_heights():
    params = RotationParams(ALPHA, Fraction(2, 7))
    h = "".join(map(str, worm_heights("inf", params, (-300, 300))))
    assert [factor_complexity(h, n) for n in range(1, 13)] == list(range(2, 14))


@pytest.mark.parametrize("case", ["phi2", "phi", "inf"])
def test_return_map_is_rotation(case):
    rng = random.Random(7)
    for _ in range(50):
        rho = Fraction(rng.randint(0, 999), 1000)
        step, new = return_step(case, rho)
        t = rho + ALPHA
        assert new == t - floor(t)


def test_return_map_slope0_is_inverse_rotation():
    for k in range(1, 20):
        rho = Fraction(k, 21)
        _, new = return_step("0", rho)
        t = rho - ALPHA
        assert new == t - floor(t)


def test_text_export():
    p = worm_point("phi2", Fraction(9, 10))
    dec = decompose("phi2", p, None, n_range=(-6, 5))
    text = decomposition_text(dec, (-6, 5))
    assert "word: 010100101001" in text and "(-32,-28)" in text and "heights:" in text
