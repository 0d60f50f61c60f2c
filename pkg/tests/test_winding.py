import random
from fractions import Fraction

import pytest

from rootwind.exact import ComplexPoly, Gaussian, I, pair_mul
from rootwind.winding import (
    Box3,
    ConstantPolynomial,
    PointIsRoot,
    Rectangle,
    RootOnBoundary,
    clear_square,
    count_all_roots,
    count_roots_in_rectangle,
    cube_face_windings,
    is_well_controlled,
    isolate_roots,
    nonvanishing_delta,
    sufficient_radius,
    vanishes_on_boundary,
    winding_number,
)

from gen import complex_poly, gaussian, rectangle, rooted_poly

UNIT = Rectangle(-1, 1, -1, 1)


def linear(z):
    return ComplexPoly.from_roots([z])


def test_rectangle_validation():
    with pytest.raises(ValueError):
        Rectangle(1, 1, 0, 1)
    assert str(Rectangle(0, Fraction(1, 2), -1, 1)) == "[0, 1/2] x [-1, 1]"


def test_linear_table():
    assert winding_number(linear(Gaussian(0)), UNIT).value == 1
    assert winding_number(linear(Gaussian(1)), UNIT).value == Fraction(1, 2)
    assert winding_number(linear(Gaussian(1, 1)), UNIT).value == Fraction(1, 4)
    assert winding_number(linear(Gaussian(3)), UNIT).value == 0


def test_report_fields():
    rep = winding_number(linear(Gaussian(0)), UNIT)
    assert rep.value == sum(rep.edges) / 2
    assert not rep.boundary_vanishes
    assert winding_number(linear(Gaussian(1)), UNIT).boundary_vanishes


def test_powers_of_z():
    G = Rectangle(Fraction(-1, 3), 2, -1, Fraction(1, 2))
    for e in range(1, 7):
        f = ComplexPoly.from_roots([Gaussian(0)] * e)
        assert winding_number(f, G).value == e
        assert count_roots_in_rectangle(f, G) == e


def test_pair_input_matches_complex_input():
    f = ComplexPoly.from_roots([Gaussian(1, 2), Gaussian(0, -1)])
    G = Rectangle(-3, 3, -3, 3)
    assert winding_number(f.realify(), G) == winding_number(f, G)


def test_vanishes_on_boundary():
    assert vanishes_on_boundary(linear(Gaussian(1)), UNIT)
    assert not vanishes_on_boundary(linear(Gaussian(0)), Rectangle(1, 2, 1, 2))
    assert vanishes_on_boundary(ComplexPoly.from_roots([Gaussian(2, 3), Gaussian(-5)]), Rectangle(0, 2, -1, 3))
    # irrational boundary root: Z^2 - 2 on [0, 2] x [0, 1] vanishes at sqrt 2 on the bottom edge
    assert vanishes_on_boundary(ComplexPoly([-2, 0, 1]), Rectangle(0, 2, 0, 1))
    assert not vanishes_on_boundary(ComplexPoly([-2, 0, 1]), Rectangle(0, 2, Fraction(1, 10), 1))


def test_count_examples():
    f = ComplexPoly.from_roots([Gaussian(Fraction(1, 2))] * 2 + [Gaussian(-2)])
    assert count_roots_in_rectangle(f, UNIT) == 2
    with pytest.raises(RootOnBoundary):
        count_roots_in_rectangle(linear(Gaussian(1)), UNIT)
    with pytest.raises(ConstantPolynomial):
        count_roots_in_rectangle(ComplexPoly([3]), UNIT)


def test_counting_matches_construction():
    rng = random.Random(40)
    for _ in range(60):
        G = rectangle(rng)
        f, roots = rooted_poly(rng, 6, avoid=G)
        assert count_roots_in_rectangle(f, G) == sum(G.contains(z) for z in roots)


def test_irrational_roots_counted():
    # Z^2 - 2 has roots +-sqrt 2 on the real axis
    f = ComplexPoly([-2, 0, 1])
    assert count_roots_in_rectangle(f, Rectangle(0, 2, -1, 1)) == 1
    assert count_roots_in_rectangle(f, Rectangle(-2, 2, -1, 1)) == 2
    assert count_roots_in_rectangle(f, Rectangle(Fraction(3, 2), 2, -1, 1)) == 0


def test_grid_additivity():
    rng = random.Random(41)
    for _ in range(20):
        f = complex_poly(rng, rng.randint(1, 4))
        G = rectangle(rng)
        xs = [G.x0, G.x0 + (G.x1 - G.x0) / 3, G.x1]
        ys = [G.y0, G.y0 + (G.y1 - G.y0) * Fraction(3, 5), G.y1]
        total = sum(
            winding_number(f, Rectangle(xs[i], xs[i + 1], ys[j], ys[j + 1])).value
            for i in range(2) for j in range(2)
        )
        assert total == winding_number(f, G).value


def test_product_additivity():
    rng = random.Random(42)
    done = 0
    while done < 20:
        f, g = complex_poly(rng, rng.randint(1, 3)), complex_poly(rng, rng.randint(0, 3))
        G = rectangle(rng)
        if vanishes_on_boundary(f, G) or (g.degree > 0 and vanishes_on_boundary(g, G)):
            continue
        lhs = winding_number(f * g, G).value
        assert lhs == winding_number(f, G).value + winding_number(g, G).value
        assert winding_number(pair_mul(f.realify(), g.realify()), G).value == lhs
        done += 1


def test_constant_multiple_does_not_change_winding():
    f = ComplexPoly.from_roots([Gaussian(0, Fraction(1, 2)), Gaussian(4)])
    assert winding_number(f * Gaussian(-3, 7), UNIT).value == winding_number(f, UNIT).value == 1


def test_roots_outside_give_zero():
    rng = random.Random(43)
    for _ in range(30):
        G = rectangle(rng)
        roots = []
        while len(roots) < rng.randint(1, 6):
            z = gaussian(rng)
            if not G.contains(z, strict=False):
                roots.append(z)
        assert winding_number(ComplexPoly.from_roots(roots), G).value == 0


def test_nonvanishing_delta_examples():
    assert nonvanishing_delta(ComplexPoly([3]), 1, 1) == 1
    assert nonvanishing_delta(ComplexPoly([Gaussian(2, -1)]), 0, 5) == 1
    # G_im = 1 + X for F = 1 + Z at 0, so Delta = 3 and delta <= 1/3
    d = nonvanishing_delta(ComplexPoly([1, 1]), 0, 0)
    assert 0 < d <= Fraction(1, 3)
    with pytest.raises(PointIsRoot):
        nonvanishing_delta(linear(Gaussian(1, 2)), 1, 2)


def test_nonvanishing_delta_is_sound():
    rng = random.Random(44)
    for _ in range(30):
        f, roots = rooted_poly(rng, 5)
        x, y = gaussian(rng).re, gaussian(rng).im
        if Gaussian(x, y) in roots:
            continue
        d = nonvanishing_delta(f, x, y)
        box = Rectangle.square(x, y, d)
        assert d > 0
        assert not any(box.contains(z, strict=False) for z in roots)
        assert count_roots_in_rectangle(f, box) == 0


def test_sufficient_radius():
    assert sufficient_radius(ComplexPoly.from_roots([Gaussian(0)] * 3)) == 1
    assert sufficient_radius(ComplexPoly([4, 0, 1])) == 9
    assert sufficient_radius(ComplexPoly([8, 0, 2])) == 9
    with pytest.raises(ConstantPolynomial):
        sufficient_radius(ComplexPoly([1]))


def test_radius_square_counts_degree():
    rng = random.Random(45)
    for _ in range(15):
        f = complex_poly(rng, rng.randint(1, 5)).monic()
        r = sufficient_radius(f)
        for m in (r, 2 * r):
            assert winding_number(f, Rectangle.square(0, 0, m)).value == f.degree


def test_count_all_roots():
    assert count_all_roots(ComplexPoly([-1, 0, 0, 1])) == 3
    assert count_all_roots(ComplexPoly.from_roots([I, I])) == 2
    assert count_all_roots(ComplexPoly([Gaussian(5, 1), Gaussian(0, -3)])) == 1
    assert count_all_roots(ComplexPoly.from_roots([Gaussian(19), Gaussian(0, 19), Gaussian(-1, 1)])) == 3


def test_clear_square_nudges_past_boundary_roots():
    f = ComplexPoly.from_roots([Gaussian(2), Gaussian(0, 3)])
    assert clear_square(f, 1) == 1
    assert clear_square(f, 2) == 4  # 2 -> 3 (root 3i on the top edge) -> 4
    assert clear_square(f, Fraction(5, 2)) == Fraction(5, 2)


def test_isolation_examples():
    boxes = isolate_roots(ComplexPoly.from_roots([Gaussian(1), Gaussian(-1)]), Rectangle(-2, 2, -2, 2), Fraction(1, 4))
    assert len(boxes) == 2
    assert [b.multiplicity for b in boxes] == [1, 1]
    assert boxes[0].rectangle.contains(Gaussian(-1)) and boxes[1].rectangle.contains(Gaussian(1))
    boxes = isolate_roots(ComplexPoly.from_roots([Gaussian(0)] * 2), UNIT, 10)
    assert len(boxes) == 1 and boxes[0].multiplicity == 2 and boxes[0].squarefree_certified
    z = Gaussian(Fraction(1, 3), Fraction(1, 7))
    boxes = isolate_roots(linear(z), UNIT, Fraction(1, 100))
    assert len(boxes) == 1 and boxes[0].rectangle.contains(z)


def test_isolation_cluster_reported():
    f = ComplexPoly.from_roots([Gaussian(0), Gaussian(Fraction(1, 1000))])
    boxes = isolate_roots(f, UNIT, Fraction(1, 4))
    assert len(boxes) == 1
    assert boxes[0].multiplicity == 2 and not boxes[0].squarefree_certified


def test_isolation_random():
    rng = random.Random(46)
    G = Rectangle(-3, 3, -3, 3)
    for _ in range(8):
        f, roots = rooted_poly(rng, 5, avoid=G)
        distinct = set(roots)
        boxes = isolate_roots(f, G, Fraction(1, 64))
        inside = [z for z in distinct if G.contains(z)]
        assert len(boxes) == len(inside)
        for b in boxes:
            held = [z for z in inside if b.rectangle.contains(z)]
            assert len(held) == 1 and b.squarefree_certified
            assert b.multiplicity == roots.count(held[0])


def test_well_controlled():
    assert is_well_controlled(linear(Gaussian(0))) == (True, "iF", "F")
    assert is_well_controlled(ComplexPoly([I])) == (False, None, None)
    rng = random.Random(47)
    for _ in range(10):
        f = complex_poly(rng, rng.randint(1, 5)).monic()
        flag, fx, fy = is_well_controlled(f)
        assert flag
        re, im = f.realify() if fx == "F" else (-f.realify()[1], f.realify()[0])
        assert im.degree > re.degree


def test_cube_identity():
    rng = random.Random(48)
    for _ in range(15):
        re = {(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 1)): Fraction(rng.randint(-4, 4)) for _ in range(4)}
        im = {(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 1)): Fraction(rng.randint(-4, 4)) for _ in range(4)}
        bounds = [sorted(rng.sample(range(-6, 7), 2)) for _ in range(3)]
        box = Box3(*[Fraction(v, 3) for pair in bounds for v in pair])
        assert sum(cube_face_windings((re, im), box)) == 0


def test_cube_faces_of_time_independent_polynomial():
    # F = Z - 0 constant in T: the two T-faces cancel and the side faces vanish
    re = {(1, 0, 0): Fraction(1)}
    im = {(0, 1, 0): Fraction(1)}
    faces = cube_face_windings((re, im), Box3(*map(Fraction, (-1, 1, -1, 1, 0, 1))))
    assert faces[0] == -1 and faces[3] == 1
    assert sum(faces) == 0
