"""
Projective Geometry Test Suite
Incidence, conics, tangency, projection, cross-ratios and frames
"""

from fractions import Fraction

import pytest

from conftest import veronese_config
from src.fields import FieldDescriptor, conjugate
from src.geometry import (
    INFINITY,
    Conic,
    Line,
    Map2,
    Map3,
    PlaneConfig,
    Point1,
    Point2,
    collinear,
    conic_through_five,
    cross_ratio,
    evaluate_conic,
    join,
    map2_from_triples,
    map_from_frames,
    meet,
    permute_labels,
    polar_line,
    project_from,
    second_intersection,
    standard_frame,
    tangent_line_at,
    tangent_points,
    veronese_normalize,
)
from src.utils.exceptions import (
    CenterEqualsPoint,
    DegenerateFrame,
    DegenerateTriple,
    InvalidConfiguration,
    NotIrreducible,
    NotUnique,
    PointOnConic,
    ZeroVector,
)


def P(field, *coords):
    return Point2.of(field, *coords)


def A(field, value):
    return Point1.from_affine(field, value)


# incidence

def test_collinear(Q):
    assert collinear(P(Q, 1, 0, 0), P(Q, 0, 1, 0), P(Q, 1, 1, 0))
    assert not collinear(P(Q, 1, 0, 0), P(Q, 0, 1, 0), P(Q, 0, 0, 1))
    assert not collinear(P(Q, 1, 1, 1), P(Q, 1, 2, 4), P(Q, 1, 3, 9))


def test_join_and_meet(Q):
    line = join(P(Q, 1, 0, 0), P(Q, 0, 1, 0))
    assert line == Line.of(Q, 0, 0, 1)
    assert meet(line, Line.of(Q, 1, 0, 0)) == P(Q, 0, 1, 0)


def test_points_compare_up_to_scale(Q):
    assert P(Q, 2, 4, 6) == P(Q, 1, 2, 3)
    assert P(Q, 2, 4, 6).key() == P(Q, 1, 2, 3).key()
    assert P(Q, 1, 2, 3) != P(Q, 1, 2, 4)


def test_zero_vector_is_rejected(Q):
    with pytest.raises(ZeroVector):
        P(Q, 0, 0, 0)


# conics

def test_conic_through_five_veronese_points(Q):
    points = [P(Q, 1, 0, 0), P(Q, 0, 0, 1), P(Q, 1, 1, 1), P(Q, 1, 2, 4), P(Q, 1, 3, 9)]
    conic = conic_through_five(points)
    assert conic == Conic.veronese(Q)
    assert all(conic.contains(p) for p in points)


def test_conic_through_three_collinear_points_is_a_line_pair(Q):
    points = [P(Q, 1, 0, 0), P(Q, 0, 1, 0), P(Q, 1, 1, 0), P(Q, 0, 0, 1), P(Q, 1, 1, 1)]
    with pytest.raises(NotIrreducible) as info:
        conic_through_five(points)
    assert info.value.conic.rank == 2


def test_four_collinear_points_leave_a_pencil(Q):
    points = [P(Q, 1, 0, 0), P(Q, 0, 1, 0), P(Q, 1, 1, 0), P(Q, 1, 2, 0), P(Q, 0, 0, 1)]
    with pytest.raises(NotUnique):
        conic_through_five(points)


def test_evaluate_conic(Q):
    conic = Conic.veronese(Q)
    assert evaluate_conic(conic, P(Q, 1, 2, 4)).is_zero()
    off = evaluate_conic(conic, P(Q, 0, 1, 0))
    assert not off.is_zero()
    assert evaluate_conic(conic, P(Q, 1, 1, 0)) == off


def test_polar_and_tangent_lines(Q):
    conic = Conic.veronese(Q)
    assert polar_line(conic, P(Q, 0, 1, 0)) == Line.of(Q, 0, 1, 0)
    assert polar_line(conic, P(Q, 1, 0, 0)) == Line.of(Q, 0, 0, 1)
    assert tangent_line_at(conic, P(Q, 1, 0, 0)) == Line.of(Q, 0, 0, 1)
    assert tangent_line_at(conic, P(Q, 0, 0, 1)) == Line.of(Q, 1, 0, 0)
    assert tangent_line_at(conic, P(Q, 1, 1, 1)) == Line.of(Q, -1, 2, -1)


def test_conic_from_coefficients_round_trip(Q):
    conic = Conic.from_coefficients(Q, 1, 2, 3, 4, 5, 6)
    again = Conic.from_coefficients(Q, *conic.coefficients())
    assert conic == again


# tangency

def test_tangent_points_from_the_veronese_center(Q):
    t1, t2 = tangent_points(Conic.veronese(Q), P(Q, 0, 1, 0))
    assert {t1.key(), t2.key()} == {P(Q, 1, 0, 0).key(), P(Q, 0, 0, 1).key()}
    assert t1.key() < t2.key()


def test_tangent_points_in_an_extension(Q):
    conic = Conic.veronese(Q)
    p = P(Q, 1, 0, 1)
    polar = polar_line(conic, p)
    t1, t2 = tangent_points(conic, p)
    assert t1.field.is_extension
    assert t1 != t2
    for t in (t1, t2):
        assert conic.contains(t)
        assert polar.contains(t)
    assert Point2(tuple(conjugate(c) for c in t1.coords)) == t2


def test_tangent_points_over_a_small_prime():
    F11 = FieldDescriptor.prime(11)
    conic = Conic.veronese(F11)
    p = P(F11, 1, 0, 1)
    polar = polar_line(conic, p)
    for t in tangent_points(conic, p):
        assert conic.contains(t)
        assert polar.contains(t)


def test_tangent_points_need_a_point_off_the_conic(Q):
    with pytest.raises(PointOnConic):
        tangent_points(Conic.veronese(Q), P(Q, 1, 2, 4))


def test_second_intersection(Q):
    conic = Conic.veronese(Q)
    m6 = P(Q, 0, 1, 0)
    assert second_intersection(conic, P(Q, 1, 2, 4), m6) == P(Q, 1, -2, 4)
    assert second_intersection(conic, P(Q, 1, 0, 0), m6) == P(Q, 1, 0, 0)


def test_second_intersection_is_an_involution(Q):
    conic = Conic.veronese(Q)
    m = P(Q, 3, 1, -2)
    for x in (1, 2, Fraction(1, 3), -5):
        a = P(Q, 1, x, x * x)
        b = second_intersection(conic, a, m)
        assert conic.contains(b)
        assert collinear(a, b, m)
        assert second_intersection(conic, b, m) == a


# projection and cross-ratio

def test_project_from_uses_the_xz_pencil(Q):
    center = P(Q, 0, 1, 0)
    assert project_from(center, P(Q, 1, 3, 9)) == Point1.of(Q, 1, 9)
    assert project_from(center, P(Q, 1, 0, 0)) == Point1.of(Q, 1, 0)
    assert project_from(center, P(Q, 0, 0, 1)) == Point1.of(Q, 0, 1)
    assert project_from(center, P(Q, 0, 0, 1)).affine() is INFINITY


def test_project_from_itself(Q):
    with pytest.raises(CenterEqualsPoint):
        project_from(P(Q, 1, 2, 3), P(Q, 2, 4, 6))


def test_cross_ratio_convention(Q):
    zero, one, inf = A(Q, 0), A(Q, 1), A(Q, INFINITY)
    assert cross_ratio(zero, one, inf, A(Q, 7)) == Q.element(7)
    assert cross_ratio(zero, one, inf, A(Q, Fraction(1, 2))) == Q.element(Fraction(1, 2))
    assert cross_ratio(zero, one, inf, inf) is INFINITY


def test_cross_ratio_is_moebius_invariant(Q):
    points = [A(Q, 2), A(Q, -1), A(Q, Fraction(5, 3)), A(Q, 11)]
    g = Map2.of(Q, [[1, 2], [3, -1]])
    before = cross_ratio(*points)
    after = cross_ratio(*(g.apply(p) for p in points))
    assert before == after


def test_cross_ratio_needs_distinct_points(Q):
    with pytest.raises(DegenerateTriple):
        cross_ratio(A(Q, 1), A(Q, 1), A(Q, 2), A(Q, 3))


def test_map2_from_triples(Q):
    src = (A(Q, 0), A(Q, 1), A(Q, INFINITY))
    dst = (A(Q, 1), A(Q, 2), A(Q, INFINITY))
    g = map2_from_triples(src, dst)
    assert g.apply(A(Q, 5)) == A(Q, 6)


# frames

def test_standard_frame_maps_by_the_identity(Q):
    frame = standard_frame(Q)
    assert map_from_frames(frame, frame) == Map3.identity(Q)


def test_permuted_frame_gives_a_permutation_matrix(Q):
    src = standard_frame(Q)
    dst = (P(Q, 0, 1, 0), P(Q, 1, 0, 0), P(Q, 0, 0, 1), P(Q, 1, 1, 1))
    assert map_from_frames(src, dst) == Map3.of(Q, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def test_frame_incidences(Q):
    src = (P(Q, 1, 2, 3), P(Q, -1, 0, 4), P(Q, 2, 2, 1), P(Q, 0, 5, -3))
    dst = (P(Q, 7, 1, 1), P(Q, 0, 1, -2), P(Q, 3, 3, 4), P(Q, 1, -1, 6))
    g = map_from_frames(src, dst)
    assert all(g.apply(s) == d for s, d in zip(src, dst))


def test_degenerate_frame(Q):
    src = (P(Q, 1, 0, 0), P(Q, 0, 1, 0), P(Q, 1, 1, 0), P(Q, 0, 0, 1))
    with pytest.raises(DegenerateFrame):
        map_from_frames(src, standard_frame(Q))


def test_map3_transports_conics(Q):
    g = Map3.of(Q, [[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    conic = Conic.veronese(Q)
    image = g.apply_conic(conic)
    for x in (0, 1, 2, -3):
        assert image.contains(g.apply(P(Q, 1, x, x * x)))


def test_map3_transports_lines(Q):
    g = Map3.of(Q, [[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    p, q = P(Q, 1, 2, 3), P(Q, 2, -1, 5)
    assert g.apply_line(join(p, q)) == join(g.apply(p), g.apply(q))


def test_maps_compose_and_invert(Q):
    g = Map3.of(Q, [[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    h = Map3.of(Q, [[2, 0, 1], [1, 1, 0], [0, 3, 1]])
    p = P(Q, 3, 1, 4)
    assert g.compose(h).apply(p) == g.apply(h.apply(p))
    assert g.compose(g.inverse()) == Map3.identity(Q)
    m = Map2.of(Q, [[1, 2], [3, 4]])
    assert m.compose(m.inverse()) == Map2.identity(Q)
    assert m.inverse().apply(m.apply(A(Q, 5))) == A(Q, 5)


# normal form

def test_veronese_normalize_fixes_normalized_input(veronese):
    g, moved = veronese_normalize(veronese.points)
    assert g == Map3.identity(veronese.field)
    assert all(a == b for a, b in zip(moved, veronese.points))


def test_veronese_normalize_postconditions(Q):
    g0 = Map3.of(Q, [[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    cfg = PlaneConfig.of(Q, [(1, x, x * x) for x in range(1, 6)] + [(1, 0, 1)]).apply(g0)
    g, moved = veronese_normalize(cfg.points)
    conic = Conic.veronese(moved[0].field)
    assert all(conic.contains(p) for p in moved[:5])
    assert moved[5] == P(Q, 0, 1, 0)
    assert moved[0] == P(Q, 1, 1, 1)
    for p in moved[:5]:
        assert p[0].is_one()
        assert p[2] == p[1] * p[1]


def test_rational_tangency_stays_rational(Q):
    rows = [(1, x, x * x) for x in (2, 3, 4, 5, 6)] + [(-1, 0, 1)]
    cfg = PlaneConfig.of(Q, rows)
    g, moved = veronese_normalize(cfg.points)
    assert g.field == Q
    assert all(p.field == Q for p in moved)


# configurations

def test_plane_config_rejects_coincident_points(Q):
    rows = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 2, 2), (1, 2, 3)]
    with pytest.raises(InvalidConfiguration):
        PlaneConfig.of(Q, rows)


def test_plane_config_needs_six_points(Q):
    with pytest.raises(InvalidConfiguration):
        PlaneConfig.of(Q, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_permute_labels(veronese):
    swapped = permute_labels(veronese, {1: 2, 2: 1})
    assert swapped[1] == veronese[2]
    assert swapped[2] == veronese[1]
    assert swapped[6] == veronese[6]
    assert permute_labels(swapped, [2, 1]) == veronese


def test_points_lift_into_extensions(Q):
    cfg = veronese_config(Q)
    E = FieldDescriptor.quadratic(Q, 5)
    lifted = cfg.lift(E)
    assert lifted.field == E
    assert lifted == cfg
