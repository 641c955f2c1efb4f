import random
from fractions import Fraction

from twslab.ratpoly import BiPoly, UniPoly, rat
from twslab.wavemodel import (
    ParamPoint,
    SaddleRole,
    a1_sym,
    a1_value,
    a2_sym,
    a2_value,
    build_from_cK,
    build_from_cs,
    cs_gens,
    f2s_sym,
    phi,
    phi_sym,
    ubar_sym,
)


def rand_rat(rng, span=8, den=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def test_ubar_zero_at_c_minus_one():
    assert build_from_cK(-1, 0).ubar == 0


def test_quadratic_term_vanishes_at_c_one():
    m = build_from_cK(1, 0)
    u = UniPoly.gen("u")
    assert m.F == u**3 * Fraction(1, 14) - u**4 * Fraction(1, 28) + u**5 * Fraction(3, 70)


def test_model_shape():
    m = build_from_cK(rat("7/3"), rat("-2/5"))
    assert m.F.degree == 5
    assert m.F.lc == Fraction(3, 70)
    assert m.ubar == -(1 + Fraction(7, 3)) / 14


def test_c2_K0_second_derivative():
    m = build_from_cK(2, 0)
    assert m.F1(0) == 0
    assert m.F2(0) == Fraction(-1, 14)


def test_phi_factor_s():
    rng = random.Random(3)
    for _ in range(10):
        assert phi(rand_rat(rng), 0) == 0


def test_phi_printed_value():
    assert phi(1, 1) == Fraction(-2, 7)


def test_phi_is_the_defining_property():
    rng = random.Random(17)
    for _ in range(50):
        c, s = rand_rat(rng), rand_rat(rng)
        model, _ = build_from_cs(ParamPoint(c, s))
        assert model.F1(s) == 0
        assert model.K == phi(c, s)


def test_saddle_examples():
    m, role = build_from_cs(ParamPoint.of("3/2", "-1/10"))
    assert role is SaddleRole.SADDLE
    assert rat("-1/10") > m.ubar == rat("-5/28")

    _, role = build_from_cs(ParamPoint.of(2, 0))
    assert role is SaddleRole.SADDLE

    # s exactly on the singular line
    _, role = build_from_cs(ParamPoint.of(-1, 0))
    assert role is SaddleRole.DEGENERATE


def test_a_values():
    assert a1_value(1, 0) == 0
    assert a2_value(-1, 0) == 0


def test_a1_identity_symbolic():
    # a1 == -14 F''(s) as polynomials in (c, s)
    assert (a1_sym() + f2s_sym() * 14).is_zero()


def test_a2_identity_symbolic():
    c, s = cs_gens()
    assert a2_sym() == s - ubar_sym()


def test_a_values_match_model():
    rng = random.Random(23)
    for _ in range(100):
        c, s = rand_rat(rng), rand_rat(rng)
        model, _ = build_from_cs(ParamPoint(c, s))
        assert a1_value(c, s) == -14 * model.F2(s)
        assert a2_value(c, s) == s - model.ubar


def test_hamiltonian_is_exact():
    m, _ = build_from_cs(ParamPoint.of(2, 0))
    h = m.hamiltonian(rat("1/3"), rat("2/7"))
    u, v = rat("1/3"), rat("2/7")
    assert h == m.F(u) + v * v * (u - m.ubar) / 2


def test_phi_sym_matches_pointwise():
    rng = random.Random(39)
    p = phi_sym()
    for _ in range(20):
        c, s = rand_rat(rng), rand_rat(rng)
        assert p.eval(c, s) == phi(c, s)
