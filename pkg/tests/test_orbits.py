import random
from fractions import Fraction

import pytest

from twslab.orbits import (
    CompactFactorization,
    DegenerateCritical,
    LevelOutOfRange,
    NegativeRadicand,
    NoCrest,
    OnSingularLine,
    PointKind,
    WrongRegion,
    compacton_factorization,
    crest,
    critical_points,
    deflate_double_root,
    peaked_level_factorization,
    periodic_turning_points,
    v_of_u,
)
from twslab.ratpoly import Interval, UniPoly, rat, sturm_count
from twslab.wavemodel import ParamPoint, build_from_cK, build_from_cs, phi


def model_at(c, s):
    m, _ = build_from_cs(ParamPoint.of(c, s))
    return m


# ---------------------------------------------------------------------------
# critical points
# ---------------------------------------------------------------------------

def test_critical_points_at_2_0():
    m = model_at(2, 0)
    cps = critical_points(m)
    assert len(cps) == 2
    saddle = [cp for cp in cps if cp.kind is PointKind.SADDLE]
    center = [cp for cp in cps if cp.kind is PointKind.CENTER]
    assert len(saddle) == 1 and len(center) == 1
    assert saddle[0].u.cmp_rational(0) == 0
    uc = center[0].u.as_float()
    assert 0 < uc < 0.5514318688957323


def test_critical_point_count_never_exceeds_two():
    rng = random.Random(101)
    for _ in range(60):
        c = Fraction(rng.randint(-30, 30), rng.randint(1, 4))
        K = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
        m = build_from_cK(c, K)
        try:
            cps = critical_points(m)
        except DegenerateCritical:
            continue
        assert len(cps) <= 2


def test_degenerate_critical_raised_on_double_root():
    # choose K so that F' has a double root: K riding the discriminant.
    # F'(u) with a planted double root at u=r: solve K from F'(r)=0, then
    # tune c so F''(r)=0 as well.
    # F''(r) = (1-c)/14 + 3r/7 - 3r^2/7 + 6r^3/7 = 0 -> c = 1 + 6r - 6r^2 + 12r^3
    r = Fraction(1, 2)
    c = 1 + 6 * r - 6 * r**2 + 12 * r**3
    # F'(r) = K + (1-c)/14 r + 3/14 r^2 - 1/7 r^3 + 3/14 r^4 = 0
    base = build_from_cK(c, 0)
    K = -base.F1(r)
    m = build_from_cK(c, K)
    assert m.F1(r) == 0 and m.F2(r) == 0
    with pytest.raises(DegenerateCritical):
        critical_points(m)


def test_detj_rule_matches_condexpr():
    rng = random.Random(55)
    tested = 0
    while tested < 25:
        c = Fraction(rng.randint(-12, 12), rng.randint(1, 3))
        s = Fraction(rng.randint(-8, 8), rng.randint(2, 7))
        m = model_at(c, s)
        try:
            cps = critical_points(m)
        except DegenerateCritical:
            continue
        tested += 1
        for cp in cps:
            f2_sign = cp.u.sign_of(m.F2)
            side_sign = cp.u.sign_of(UniPoly.gen("u") - m.ubar)
            assert cp.detj_sign == f2_sign * side_sign
            assert (cp.kind is PointKind.SADDLE) == (cp.detj_sign < 0)


# ---------------------------------------------------------------------------
# crest
# ---------------------------------------------------------------------------

def test_crest_at_2_0():
    m = model_at(2, 0)
    ref = crest(m, 0)
    g = deflate_double_root(m.F - m.F(0), rat(0)) * 140
    assert g == UniPoly([-5, 10, -5, 6], "u")
    assert abs(ref.as_float() - 0.5514318688957323) < 1e-12


def test_crest_deflation_is_exact_cubic():
    rng = random.Random(77)
    done = 0
    while done < 20:
        c = Fraction(rng.randint(-10, 20), rng.randint(1, 3))
        s = Fraction(rng.randint(-6, 6), rng.randint(2, 9))
        m = model_at(c, s)
        g = deflate_double_root(m.F - m.F(s), s)
        assert g.degree == 3
        u = UniPoly.gen("u")
        assert g * (u - s) ** 2 == m.F - m.F(s)
        done += 1


def test_crest_sides():
    # elevation: m > s; depression: m < s
    m = model_at(rat("3/2"), rat("-1/10"))
    assert crest(m, rat("-1/10")).cmp_rational(rat("-1/10")) > 0
    m = model_at(-15, rat("-1/2"))
    assert crest(m, rat("-1/2")).cmp_rational(rat("-1/2")) < 0


def test_crest_rejects_center_role():
    # (1/2, -1/20) has F''(s) > 0 with s > ubar: center role, no crest
    m = model_at(rat("1/2"), rat("-1/20"))
    with pytest.raises(NoCrest):
        crest(m, rat("-1/20"))


# ---------------------------------------------------------------------------
# v_of_u and turning points
# ---------------------------------------------------------------------------

def test_v_zero_at_turning_point():
    m = model_at(2, 0)
    assert v_of_u(m, m.F(0), 0) == 0.0


def test_v_exact_radicand_is_on_level():
    m = model_at(2, 0)
    h = m.F(0)
    u = rat("1/4")
    r = m.radicand(h, u)
    assert m.F(u) + r * (u - m.ubar) / 2 == h


def test_v_errors():
    m = model_at(2, 0)
    with pytest.raises(OnSingularLine):
        v_of_u(m, m.F(0), m.ubar)
    with pytest.raises(NegativeRadicand):
        v_of_u(m, m.F(0), rat(2))  # far outside the orbit


def test_periodic_turning_points_level_midway():
    m = model_at(2, 0)
    cps = critical_points(m)
    center = [cp for cp in cps if cp.kind is PointKind.CENTER][0]
    hc_sign_poly = m.F  # h_c = F(u_c) is algebraic; use midpoint level in floats
    hs = m.F(0)
    hc = Fraction(str(m.F.eval_float(center.u.as_float())))
    h = (hc + hs) / 2
    um, up = periodic_turning_points(m, h, prefer_s=0)
    uc = center.u.as_float()
    assert 0 < um.as_float() < uc < up.as_float() < 0.5514318688957323
    # radicand positive strictly inside
    lo, hi = um.as_float(), up.as_float()
    for k in range(1, 1000):
        u = lo + (hi - lo) * k / 1000
        assert m.radicand(h, Fraction(str(u))) > 0


def test_periodic_turning_points_shrink_to_center():
    m = model_at(2, 0)
    center = [cp for cp in critical_points(m) if cp.kind is PointKind.CENTER][0]
    uc = center.u.as_float()
    hs = m.F(0)
    hc = Fraction(str(m.F.eval_float(uc)))
    widths = []
    for eps in (rat("1/10"), rat("1/100")):
        h = hc + (hs - hc) * eps
        um, up = periodic_turning_points(m, h, prefer_s=0)
        widths.append(up.as_float() - um.as_float())
    assert widths[1] < widths[0]


def test_periodic_level_out_of_range():
    m = model_at(2, 0)
    hs = m.F(0)
    with pytest.raises(LevelOutOfRange):
        periodic_turning_points(m, hs + 1, prefer_s=0)


# ---------------------------------------------------------------------------
# peaked-level factorization (R3/R6) and compacton factorization (A2)
# ---------------------------------------------------------------------------

def test_peaked_factorization_r3_point():
    m = model_at(0, 0)  # (0, 0) lies in the two-center region
    fac = peaked_level_factorization(m)
    # remainder of (h_p - F) by (u - ubar) is zero by construction
    u = UniPoly.gen("u")
    assert fac.w * (u - m.ubar) == -(m.F - fac.h)
    assert sturm_count(fac.w, Interval.real_line()) == 2
    assert fac.m1.cmp_rational(m.ubar) < 0 < fac.m2.cmp_rational(m.ubar)
    # v_i^2 = 2 W(u) matches the level-set radicand at 100 sample points
    m1f, m2f = fac.m1.as_float(), fac.m2.as_float()
    for k in range(1, 100):
        uu = Fraction(str(m1f + (m2f - m1f) * k / 100))
        if uu == m.ubar:
            continue
        assert m.radicand(fac.h, uu) == 2 * fac.w(uu)


def test_peaked_factorization_wrong_region():
    m = model_at(2, 0)  # admissible solitary point, not R3/R6
    with pytest.raises(WrongRegion):
        peaked_level_factorization(m)


def test_compacton_factorization_c2():
    c = rat(2)
    s = -(1 + c) / 14
    m = model_at(c, s)  # s = ubar: on the compacton line
    fac = compacton_factorization(m)
    assert fac.rho.degree == 3
    assert fac.rho(m.ubar) == -m.F2(m.ubar)
    assert fac.side == 1  # F''(ubar) < 0: elevation
    assert abs(fac.m.as_float() - 0.9210595908364992) < 1e-10
    # radicand factorization: 2(h - F(u))/(u-ubar) = (u-ubar) rho(u)
    for k in range(1, 50):
        uu = m.ubar + (rat("9/10") - m.ubar) * k / 50
        assert m.radicand(fac.h, uu) == (uu - m.ubar) * fac.rho(uu)


def test_compacton_wrong_line():
    m = model_at(2, 0)
    with pytest.raises(WrongRegion):
        compacton_factorization(m)
