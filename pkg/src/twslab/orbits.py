"""Critical points, level sets, and orbit factorizations in the phase plane.

The planar system behind u''(u - ubar) + (u')^2/2 + F'(u) = 0 has critical
points exactly at (u*, 0) with F'(u*) = 0; the determinant of its Jacobian
there is F''(u*)(u* - ubar), negative for a topological saddle and positive
for a center.  Orbits live on level sets H(u, v) = h of

    H(u, v) = F(u) + v^2 (u - ubar) / 2.

Roots are kept as `RootRef`s: the defining polynomial plus an isolating
interval.  Signs of other polynomials at such a root are decided exactly by
shrinking the interval, never by floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .ratpoly import (
    Interval,
    NotSquarefree,
    UniPoly,
    isolate_roots,
    rat,
    refine_root,
    sturm_count,
)
from .wavemodel import SaddleRole, WaveModel, saddle_role


class OrbitError(ValueError):
    pass


class DegenerateCritical(OrbitError):
    """F' has a repeated real root (discriminant boundary)."""


class NoCrest(OrbitError):
    """No admissible crest/trough on the required side of ubar."""


class NegativeRadicand(OrbitError):
    pass


class OnSingularLine(OrbitError):
    pass


class LevelOutOfRange(OrbitError):
    pass


class WrongRegion(OrbitError):
    pass


class RepeatedRootInP(OrbitError):
    pass


class PNotPositive(OrbitError):
    pass


class PointKind(enum.Enum):
    SADDLE = "saddle"
    CENTER = "center"


class OrbitKind(enum.Enum):
    HOMOCLINIC = "homoclinic"
    PERIODIC = "periodic"
    HETEROCLINIC_PAIR = "heteroclinic_pair"
    COMPACT_HOMOCLINIC = "compact_homoclinic"


@dataclass
class RootRef:
    """A real algebraic number: defining squarefree polynomial + isolator."""

    poly: UniPoly
    interval: Interval
    _cached: dict = field(default_factory=dict, repr=False)

    def refine(self, tol) -> Fraction:
        return refine_root(self.poly, self.interval, tol)

    def as_float(self) -> float:
        if "float" not in self._cached:
            self._cached["float"] = float(self.refine(rat("1e-24")))
        return self._cached["float"]

    def exact(self) -> Optional[Fraction]:
        """The root itself when rational (point isolator), else None."""
        if self.interval.is_point():
            return self.interval.lower
        return None

    def shrink_once(self) -> None:
        iv = self.interval
        if iv.is_point():
            return
        m = iv.midpoint()
        if self.poly(m) == 0:
            self.interval = Interval.point(m)
            return
        left = Interval(iv.lower, m, iv.lower_open, True)
        if sturm_count(self.poly, left, _checked=True) == 1:
            self.interval = left
        else:
            self.interval = Interval(m, iv.upper, True, iv.upper_open)

    def sign_of(self, V: UniPoly, max_bisect: int = 256) -> int:
        """Exact sign of V at this root; 0 iff V vanishes there."""
        if V.is_zero():
            return 0
        x = self.exact()
        if x is not None:
            v = V(x)
            return (v > 0) - (v < 0)
        g = V.gcd(self.poly)
        if g.degree >= 1 and sturm_count(g.squarefree_part(), self.interval, _checked=True) > 0:
            return 0
        vsf = V.squarefree_part()
        for _ in range(max_bisect):
            iv = self.interval
            x = self.exact()
            if x is not None:
                v = V(x)
                return (v > 0) - (v < 0)
            a, b = iv.lower, iv.upper
            va, vb = V(a), V(b)
            if va != 0 and vb != 0 and (va > 0) == (vb > 0):
                if sturm_count(vsf, Interval.closed(a, b), _checked=True) == 0:
                    return 1 if va > 0 else -1
            self.shrink_once()
        raise OrbitError("sign undecided after maximal refinement")

    def cmp_rational(self, x) -> int:
        """Exact comparison of the root with a rational: -1, 0, +1."""
        x = rat(x)
        e = self.exact()
        if e is not None:
            return (e > x) - (e < x)
        while self.interval.contains(x):
            if self.poly(x) == 0:
                return 0
            self.shrink_once()
        return 1 if self.interval.lower >= x else -1


@dataclass
class CriticalPoint:
    u: RootRef
    kind: PointKind
    detj_sign: int


@dataclass
class OrbitSpec:
    h: Fraction
    kind: OrbitKind
    turning_points: list
    side: int  # +1 above ubar, -1 below


def critical_points(model: WaveModel) -> list:
    """All real critical points of the phase flow, classified exactly.

    Raises DegenerateCritical when F' has a repeated real root (boundary
    of the region conditions, Dis(F') = 0 with a real double root).
    """
    f1 = model.F1
    try:
        isolators = isolate_roots(f1, Interval.real_line())
    except NotSquarefree as e:
        raise DegenerateCritical(str(e)) from None
    out = []
    # det J at (u*, 0) is F''(u*)(u* - ubar)
    u = UniPoly.gen(f1.var)
    detj = model.F2 * (u - model.ubar)
    for iv in isolators:
        ref = RootRef(f1, iv)
        sgn = ref.sign_of(detj)
        if sgn == 0:
            raise DegenerateCritical("critical point on the singular line or degenerate")
        kind = PointKind.SADDLE if sgn < 0 else PointKind.CENTER
        out.append(CriticalPoint(u=ref, kind=kind, detj_sign=sgn))
    return out


def deflate_double_root(p: UniPoly, s: Fraction) -> UniPoly:
    """Exact division of p by (u - s)^2; p must vanish to second order at s."""
    u = UniPoly.gen(p.var)
    return p.exact_div((u - s) * (u - s))


def crest(model: WaveModel, s) -> RootRef:
    """The crest/trough value m != s with F(m) = F(s), on the saddle side.

    F - F(s) carries the exact factor (u - s)^2; the cofactor is isolated
    and the root nearest to s on the correct side of ubar is returned.
    """
    s = rat(s)
    if saddle_role(model, s) is not SaddleRole.SADDLE:
        raise NoCrest("(s, 0) is not the saddle of the phase plane")
    side = 1 if s > model.ubar else -1
    g = deflate_double_root(model.F - model.F(s), s)
    try:
        isolators = isolate_roots(g, Interval.real_line())
    except NotSquarefree:
        raise NoCrest("level set tangency: repeated intersection with the saddle level")
    candidates = []
    for iv in isolators:
        ref = RootRef(g, iv)
        if ref.cmp_rational(s) == side:
            candidates.append(ref)
    if not candidates:
        raise NoCrest("no intersection of the saddle level on the saddle side")
    # nearest to s on that side; isolators are ordered
    candidates.sort(key=lambda r: r.as_float())
    m = candidates[0] if side > 0 else candidates[-1]
    # the orbit interval (s, m) must stay on one side of ubar
    if m.cmp_rational(model.ubar) != side:
        raise NoCrest("saddle level reaches the singular line first")
    return m


def v_of_u(model: WaveModel, h, u) -> float:
    """Upper-branch v = sqrt(2 (h - F(u)) / (u - ubar)); exact radicand."""
    h, u = rat(h), rat(u)
    if u == model.ubar:
        if model.F(u) == h:
            return 0.0
        raise OnSingularLine("u = ubar off the matching level")
    r = model.radicand(h, u)
    if r < 0:
        raise NegativeRadicand(f"radicand {r} < 0 at u={u}")
    return math.sqrt(float(r))


def center_at(model: WaveModel, prefer_s=None) -> CriticalPoint:
    """The center the periodic family encircles.

    With a unique center it is returned outright; with two (both extrema
    of F centers, singular line between them) the critical point at u = s
    is used, matching the construction that varies s.
    """
    cps = critical_points(model)
    centers = [cp for cp in cps if cp.kind is PointKind.CENTER]
    if len(centers) == 1:
        return centers[0]
    if prefer_s is not None:
        s = rat(prefer_s)
        for cp in centers:
            if cp.u.cmp_rational(s) == 0:
                return cp
    raise LevelOutOfRange("no unambiguous center for the periodic family")


def periodic_turning_points(model: WaveModel, h, center: Optional[CriticalPoint] = None,
                            prefer_s=None):
    """The two roots of F - h bracketing the center, strictly on its side.

    Raises LevelOutOfRange unless h lies strictly between the center level
    and the level at which the bracketing orbit family degenerates.
    """
    h = rat(h)
    if center is None:
        center = center_at(model, prefer_s)
    # exclude the degenerate levels h = F(center) and levels through the
    # center's own polynomial: sign test of F - h at the center
    lvl = model.F - h
    side_center = center.u.sign_of(UniPoly.gen(model.F.var) - model.ubar)
    sgn_at_center = center.u.sign_of(lvl)
    if sgn_at_center == 0:
        raise LevelOutOfRange("h equals the center level")
    try:
        isolators = isolate_roots(lvl, Interval.real_line())
    except NotSquarefree:
        raise LevelOutOfRange("h is a critical level of F")
    refs = [RootRef(lvl, iv) for iv in isolators]
    below = [r for r in refs if _root_lt(r, center.u)]
    above = [r for r in refs if _root_lt(center.u, r)]
    if not below or not above:
        raise LevelOutOfRange("level set does not close around the center")
    u_minus = below[-1]
    u_plus = above[0]
    for ref in (u_minus, u_plus):
        if ref.cmp_rational(model.ubar) != side_center:
            raise LevelOutOfRange("orbit would cross the singular line")
    return u_minus, u_plus


def _root_lt(a: RootRef, b: RootRef) -> bool:
    """Exact comparison of two isolated roots (shrink until separated)."""
    if a.poly == b.poly and a.interval == b.interval:
        return False
    ea, eb = a.exact(), b.exact()
    if ea is not None and eb is not None:
        return ea < eb
    if ea is not None:
        return b.cmp_rational(ea) > 0
    if eb is not None:
        return a.cmp_rational(eb) < 0
    for _ in range(512):
        if a.interval.upper <= b.interval.lower:
            return True
        if b.interval.upper <= a.interval.lower:
            return False
        a.shrink_once()
        b.shrink_once()
    raise OrbitError("could not separate roots (equal algebraic numbers?)")


@dataclass
class PeakedFactorization:
    """h_p - F(u) = (u - ubar) W(u) with W quartic, two real roots m1 < ubar < m2.

    W's remaining quadratic factor has no real roots (certified by the
    Sturm count of W being exactly 2); its coefficients are irrational, so
    the quartic W itself is the exact object carried around.  On the level
    h_p = F(ubar) the squared orbit velocity is v^2 = 2 W(u).
    """

    m1: RootRef
    m2: RootRef
    w: UniPoly
    h: Fraction


def peaked_level_factorization(model: WaveModel) -> PeakedFactorization:
    """Factorize the singular-line level set for the peaked periodic pair.

    Requires one extremum of F on each side of ubar (F'(ubar) < 0 case);
    raises WrongRegion otherwise.
    """
    u = UniPoly.gen(model.F.var)
    hp = model.F(model.ubar)
    E = -(model.F - hp)  # h_p - F(u)
    if model.F1(model.ubar) == 0:
        raise WrongRegion("F'(ubar) = 0: singular-line level is degenerate (compacton locus)")
    W = E.exact_div(u - model.ubar)
    try:
        n_real = sturm_count(W, Interval.real_line())
        isolators = isolate_roots(W, Interval.real_line())
    except NotSquarefree:
        raise WrongRegion("repeated intersection on the singular-line level")
    if n_real != 2:
        raise WrongRegion(f"expected 2 real intersections beside ubar, found {n_real}")
    refs = [RootRef(W, iv) for iv in isolators]
    m1, m2 = refs[0], refs[1]
    if not (m1.cmp_rational(model.ubar) < 0 < m2.cmp_rational(model.ubar)):
        raise WrongRegion("intersections do not straddle the singular line")
    return PeakedFactorization(m1=m1, m2=m2, w=W, h=hp)


@dataclass
class CompactFactorization:
    """v^2 = (u - ubar) rho(u) on the level h = F(ubar) when F'(ubar) = 0.

    rho is the exact cubic 2 (F(ubar) - F(u)) / (u - ubar)^2 and m is the
    crest (nearest root of rho on the side where the radicand is positive).
    """

    rho: UniPoly
    m: RootRef
    h: Fraction
    side: int


def compacton_factorization(model: WaveModel) -> CompactFactorization:
    """Factorize the finite-time homoclinic level set (parameters with
    s = ubar).  Raises RepeatedRootInP / PNotPositive per the preconditions."""
    if model.F1(model.ubar) != 0:
        raise WrongRegion("F'(ubar) != 0: parameter point is not on the compacton line")
    hp = model.F(model.ubar)
    rho = deflate_double_root(-(model.F - hp), model.ubar) * 2
    rho_at = rho(model.ubar)  # equals -F''(ubar)
    if rho_at == 0:
        raise PNotPositive("rho(ubar) = 0: degenerate corner of the compacton line")
    from .ratpoly import discriminant

    if rho.degree >= 2 and discriminant(rho) == 0:
        raise RepeatedRootInP("rho has a repeated root")
    side = 1 if rho_at > 0 else -1
    if side > 0:
        isolators = isolate_roots(rho, Interval(model.ubar, None))
    else:
        isolators = isolate_roots(rho, Interval(None, model.ubar))
    if not isolators:
        raise PNotPositive("no crest: radicand never returns to zero on that side")
    refs = sorted((RootRef(rho, iv) for iv in isolators), key=lambda r: r.as_float())
    m = refs[0] if side > 0 else refs[-1]
    return CompactFactorization(rho=rho, m=m, h=hp, side=side)
