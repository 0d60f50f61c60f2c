"""Winding numbers of complex polynomials on rectangle boundaries.

The winding number is half the signed sum of four Cauchy indices, one per
edge, of the pair (F_re, F_im) restricted to that edge.  Everything is exact:
the value is a quarter-integer Fraction and is defined even when F vanishes
on the boundary.

Polynomials may be given as a :class:`ComplexPoly` in Z or as a pair
(F_re, F_im) of elements of Q[Y][X].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cauchy import cauchy_index, count_real_roots
from .exact import (
    ComplexPoly,
    Gaussian,
    I,
    Poly,
    Q,
    bipoly_from_dict,
    format_rational,
    gcd,
    pair_scale,
    poly_from,
    specialize,
    squarefree_part,
)


class RootOnBoundary(ValueError):
    pass


class SoundnessViolation(AssertionError):
    pass


class PointIsRoot(ValueError):
    pass


class ConstantPolynomial(ValueError):
    pass


@dataclass(frozen=True)
class Rectangle:
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    def __post_init__(self):
        for name in ("x0", "x1", "y0", "y1"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError(f"degenerate rectangle {self}")

    def __str__(self):
        f = format_rational
        return f"[{f(self.x0)}, {f(self.x1)}] x [{f(self.y0)}, {f(self.y1)}]"

    @classmethod
    def square(cls, cx, cy, half) -> Rectangle:
        cx, cy, half = Q(cx), Q(cy), Q(half)
        return cls(cx - half, cx + half, cy - half, cy + half)

    @property
    def width(self) -> Fraction:
        return max(self.x1 - self.x0, self.y1 - self.y0)

    def contains(self, z: Gaussian, strict: bool = True) -> bool:
        if strict:
            return self.x0 < z.re < self.x1 and self.y0 < z.im < self.y1
        return self.x0 <= z.re <= self.x1 and self.y0 <= z.im <= self.y1

    def on_boundary(self, z: Gaussian) -> bool:
        return self.contains(z, strict=False) and not self.contains(z)

    def corners(self):
        return (self.x0, self.y0), (self.x1, self.y0), (self.x1, self.y1), (self.x0, self.y1)


@dataclass(frozen=True)
class WindingReport:
    value: Fraction
    bottom: Fraction
    right: Fraction
    top: Fraction
    left: Fraction
    boundary_vanishes: bool

    @property
    def edges(self):
        return (self.bottom, self.right, self.top, self.left)


@dataclass(frozen=True)
class IsolationBox:
    rectangle: Rectangle
    multiplicity: int
    squarefree_certified: bool


def _bivariate(p) -> Poly:
    """Lift a polynomial in X with rational coefficients into Q[Y][X]."""
    p = poly_from(p)
    if p and not p.is_nested():
        return Poly([Poly.constant(c) for c in p.coeffs])
    return p


def as_pair(F):
    if isinstance(F, ComplexPoly):
        return F.realify()
    re, im = F
    return _bivariate(re), _bivariate(im)


def edge_restrictions(F, G: Rectangle):
    """The four edge restrictions (re, im, start, end) in counterclockwise order.

    Bottom runs x0 -> x1 at y0, right runs y0 -> y1 at x1, top runs x1 -> x0 at
    y1 and left runs y1 -> y0 at x0.
    """
    re, im = as_pair(F)

    def at_y(y):
        return specialize(re, "Y", y), specialize(im, "Y", y)

    def at_x(x):
        return specialize(re, "X", x), specialize(im, "X", x)

    return (
        (*at_y(G.y0), G.x0, G.x1),
        (*at_x(G.x1), G.y0, G.y1),
        (*at_y(G.y1), G.x1, G.x0),
        (*at_x(G.x0), G.y1, G.y0),
    )


def _segment_vanishes(re: Poly, im: Poly, a, b) -> bool:
    if not re and not im:
        return True
    g = gcd(re, im)
    if g.degree <= 0:
        return False
    lo, hi = min(a, b), max(a, b)
    return count_real_roots(g, lo, hi) > 0


def vanishes_on_boundary(F, G: Rectangle) -> bool:
    """True iff F has a zero (over the real closure) on the boundary of G."""
    return any(_segment_vanishes(re, im, a, b) for re, im, a, b in edge_restrictions(F, G))


def winding_number(F, G: Rectangle) -> WindingReport:
    edges = edge_restrictions(F, G)
    idx = [cauchy_index(re, im, a, b) for re, im, a, b in edges]
    vanishes = any(_segment_vanishes(re, im, a, b) for re, im, a, b in edges)
    return WindingReport(sum(idx, Fraction(0)) / 2, *idx, vanishes)


def _nonconstant(F: ComplexPoly):
    if not isinstance(F, ComplexPoly):
        raise TypeError("expected a ComplexPoly")
    if not F or F.degree < 1:
        raise ConstantPolynomial("polynomial must be nonconstant")


def count_roots_in_rectangle(F: ComplexPoly, G: Rectangle) -> int:
    """Number of roots of F inside G, with multiplicity."""
    _nonconstant(F)
    rep = winding_number(F, G)
    if rep.boundary_vanishes:
        raise RootOnBoundary(f"polynomial vanishes on the boundary of {G}")
    w = rep.value
    if w.denominator != 1 or not 0 <= w <= F.degree:
        raise SoundnessViolation(f"winding number {w} on a zero-free boundary")
    return int(w)


# -- non-vanishing boxes ---------------------------------------------------


def _taylor_coefficients(p: Poly, x, y):
    """{(j1, j2): c} with p(x + U, y + V) = sum c U^j1 V^j2."""
    out = {}
    for i, row in enumerate(p.coeffs):
        for j, c in enumerate(row.coeffs):
            if not c:
                continue
            for a in range(i + 1):
                for b in range(j + 1):
                    t = c * comb(i, a) * comb(j, b) * x ** (i - a) * y ** (j - b)
                    out[(a, b)] = out.get((a, b), 0) + t
    return {k: v for k, v in out.items() if v}


def _root_lower_bound(t: Fraction, k: int) -> Fraction:
    """A rational r with r**k <= t and r > t**(1/k) / 2 (t > 0)."""
    e = 0
    while Fraction(2) ** (e * k) > t:
        e -= 1
    while Fraction(2) ** ((e + 1) * k) <= t:
        e += 1
    lo, hi = Fraction(2) ** e, Fraction(2) ** (e + 1)
    for _ in range(2):
        mid = (lo + hi) / 2
        if mid ** k <= t:
            lo = mid
        else:
            hi = mid
    return lo


def nonvanishing_delta(F, x, y) -> Fraction:
    """A positive rational delta with F zero-free on the closed square of
    half-width delta centred at (x, y).

    With G = (i / F(x, y)) F we have G_im(x, y) = 1; the box keeps every other
    Taylor term of G_im below 1/Delta in modulus, where Delta is the number of
    monomials of degree at most the total degree D.  Hence G_im > 0 there.
    """
    x, y = Q(x), Q(y)
    re, im = as_pair(F)
    val = Gaussian(specialize(re, "Y", y)(x), specialize(im, "Y", y)(x))
    if not val:
        raise PointIsRoot(f"F vanishes at ({x}, {y})")
    g_im = _bivariate(pair_scale((re, im), I / val)[1])
    coeffs = _taylor_coefficients(g_im, x, y)
    assert coeffs.get((0, 0)) == 1
    terms = {k: v for k, v in coeffs.items() if k != (0, 0)}
    if not terms:
        return Fraction(1)
    D = g_im.total_degree()
    delta_count = Fraction((D + 1) * (D + 2), 2)
    return min(_root_lower_bound(1 / (delta_count * abs(c)), a + b) for (a, b), c in terms.items())


def sufficient_radius(F: ComplexPoly) -> Fraction:
    """r' = 1 + 2 max |a_j| + |b_j| over the non-leading coefficients of monic F."""
    _nonconstant(F)
    coeffs = F.monic().coeffs[:-1]
    return 1 + 2 * max((c.l1() for c in coeffs), default=Fraction(0))


def clear_square(F, m) -> Fraction:
    """Grow the half-width m by factors 1 + 1/(k+2) until F has no zero on the
    boundary of [-m, m]^2.  Terminates because F has finitely many roots."""
    m = Q(m)
    k = 0
    while vanishes_on_boundary(F, Rectangle.square(0, 0, m)):
        m = m * (1 + Fraction(1, k + 2))
        k += 1
    return m


def count_all_roots(F: ComplexPoly) -> int:
    """Count every complex root of F by winding around a large enough square.

    Every root z satisfies |z| < r', so the first square is already clear;
    the nudge in :func:`clear_square` is a safeguard only.
    """
    _nonconstant(F)
    F = F.monic()
    m = clear_square(F, sufficient_radius(F))
    return count_roots_in_rectangle(F, Rectangle.square(0, 0, m))


# -- isolation -------------------------------------------------------------


def _cut_clear(F, vertical: bool, c, lo, hi) -> bool:
    re, im = as_pair(F)
    var = "X" if vertical else "Y"
    return not _segment_vanishes(specialize(re, var, c), specialize(im, var, c), lo, hi)


def _clear_cut(F, vertical: bool, mid, lo, hi, size):
    step = size / 8
    c = mid
    while not _cut_clear(F, vertical, c, lo, hi):
        c = mid + step
        step /= 2
    return c


def _split(F, G: Rectangle):
    mx = _clear_cut(F, True, (G.x0 + G.x1) / 2, G.y0, G.y1, G.x1 - G.x0)
    my = _clear_cut(F, False, (G.y0 + G.y1) / 2, G.x0, G.x1, G.y1 - G.y0)
    return [
        Rectangle(G.x0, mx, G.y0, my),
        Rectangle(mx, G.x1, G.y0, my),
        Rectangle(G.x0, mx, my, G.y1),
        Rectangle(mx, G.x1, my, G.y1),
    ]


def isolate_roots(F: ComplexPoly, G: Rectangle, min_width) -> list[IsolationBox]:
    """Boxes inside G, each holding one distinct root of F (or a cluster once
    the box is narrower than min_width), with multiplicities counted for F."""
    _nonconstant(F)
    min_width = Q(min_width)
    if min_width <= 0:
        raise ValueError("min_width must be positive")
    if vanishes_on_boundary(F, G):
        raise RootOnBoundary(f"polynomial vanishes on the boundary of {G}")
    Fs = squarefree_part(F)
    out = []
    stack = [G]
    while stack:
        cell = stack.pop()
        w = count_roots_in_rectangle(Fs, cell)
        if w == 0:
            continue
        if w == 1 or cell.width < min_width:
            out.append(IsolationBox(cell, count_roots_in_rectangle(F, cell), w == 1))
            continue
        stack.extend(_split(Fs, cell))
    out.sort(key=lambda b: (b.rectangle.x0, b.rectangle.y0))
    return out


def is_well_controlled(F):
    """(flag, FX, FY); FX and FY are "F" or "iF" when the flag is set."""
    re, im = as_pair(F)
    if not re or not im:
        return False, None, None
    if re.degree == im.degree or re.inner_degree() == im.inner_degree():
        return False, None, None
    fx = "F" if im.degree > re.degree else "iF"
    fy = "F" if im.inner_degree() > re.inner_degree() else "iF"
    return True, fx, fy


# -- trivariate faces ------------------------------------------------------


@dataclass(frozen=True)
class Box3:
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction
    t0: Fraction
    t1: Fraction


def _face(terms: dict, fixed: int, value) -> Poly:
    """Specialize a trivariate {(i, j, k): c} at one variable; the remaining
    two keep their order and become (X, Y) of a bivariate polynomial."""
    value = Q(value)
    out = {}
    for exps, c in terms.items():
        rest = tuple(e for n, e in enumerate(exps) if n != fixed)
        out[rest] = out.get(rest, 0) + c * value ** exps[fixed]
    return bipoly_from_dict(out)


def face_pair(F3, fixed: int, value):
    re, im = F3
    return _bivariate(_face(re, fixed, value)), _bivariate(_face(im, fixed, value))


def cube_face_windings(F3, box: Box3):
    """The six signed face winding numbers of a trivariate F = (re, im), each
    a dict {(i, j, k): coeff} in (X, Y, T).  Their sum is always 0."""
    gt = Rectangle(box.x0, box.x1, box.y0, box.y1)
    gy = Rectangle(box.x0, box.x1, box.t0, box.t1)
    gx = Rectangle(box.y0, box.y1, box.t0, box.t1)
    return [
        -winding_number(face_pair(F3, 2, box.t0), gt).value,
        winding_number(face_pair(F3, 1, box.y0), gy).value,
        -winding_number(face_pair(F3, 0, box.x0), gx).value,
        winding_number(face_pair(F3, 2, box.t1), gt).value,
        -winding_number(face_pair(F3, 1, box.y1), gy).value,
        winding_number(face_pair(F3, 0, box.x1), gx).value,
    ]
