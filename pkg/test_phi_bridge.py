"""
Bridge Test Suite
Stratum classification, phi67 and its fibers, lifting, and the boundary
identifications
"""

import pytest

from conftest import veronese_config
from src.bridge import (
    P1Output,
    StratumKind,
    as_p1_config,
    classify,
    collinear_to_conic,
    collinear_triples,
    cremona_base_for,
    degenerate_limit_check_I,
    fiber_orbit,
    lift,
    moduli_equal_plane,
    normal_form_key,
    output_stratum,
    phi67,
    phi67_on_conic,
)
from src.cremona import SwapSet, geometric_swap
from src.fields import FieldDescriptor
from src.geometry import INFINITY, Map3, PlaneConfig, Point1, Point2, permute_labels
from src.moduli import Stability, WeightVector, collision_stratum, moduli_equal, stability
from src.verification import random_generic_config
from src.utils.exceptions import (
    NotGeneric,
    NotInDomain,
    NotInStratum,
    NotOnConic,
    UnliftableOverField,
    WrongDegeneracy,
    WrongStratum,
)


def pts(field, *values):
    return tuple(Point1.from_affine(field, v) for v in values)


def output(field, ordered, pair=(INFINITY, 0)):
    return P1Output(pts(field, *ordered), pts(field, *pair))


# classification

def test_classify_generic(veronese):
    assert classify(veronese).kind is StratumKind.GENERIC_SMOOTH
    assert classify(veronese).to_dict() == {"stratum": "GenericSmooth"}


def test_classify_on_conic(on_conic_cfg):
    assert classify(on_conic_cfg).kind is StratumKind.ON_CONIC


def test_classify_collinear_through_m6(collinear_cfg):
    stratum = classify(collinear_cfg)
    assert stratum.kind is StratumKind.COLLINEAR_THROUGH_6
    assert stratum.pair == (1, 2)
    assert stratum.to_dict() == {"stratum": "CollinearThrough6", "pair": [1, 2]}
    assert str(stratum) == "CollinearThrough6(1,2)"


def test_three_of_the_first_five_collinear(Q):
    cfg = PlaneConfig.of(Q, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 2, 3), (2, 3, 7)])
    assert collinear_triples(cfg.points) == [(1, 2, 3)]
    stratum = classify(cfg)
    assert stratum.kind is StratumKind.EXCLUDED
    assert "{1,2,3}" in stratum.reason


def test_several_collinear_triples(degenerate_witness):
    assert collinear_triples(degenerate_witness.points) == [(1, 2, 6), (1, 3, 4)]
    stratum = classify(degenerate_witness)
    assert stratum.kind is StratumKind.EXCLUDED
    assert "several" in stratum.reason


# phi67

def test_phi_of_the_veronese_configuration(veronese, Q):
    out = phi67(veronese)
    assert out.ordered == pts(Q, 1, 4, 9, 16, 25)
    assert out.pair == pts(Q, INFINITY, 0)
    assert output_stratum(out) == WeightVector((2, 2, 2, 2, 2, 1, 1))


def test_phi_is_not_defined_off_its_domain(on_conic_cfg, degenerate_witness):
    with pytest.raises(NotInDomain):
        phi67(on_conic_cfg)
    with pytest.raises(NotInDomain):
        phi67(degenerate_witness)


def test_phi_of_a_collinear_configuration(collinear_cfg):
    out = phi67(collinear_cfg)
    assert out.ordered[0] == out.ordered[1]
    assert output_stratum(out) == WeightVector((4, 2, 2, 2, 1, 1))
    # tangency points 3 +- sqrt(2) on the conic
    assert out.field.is_extension
    assert out.field.d == 2


@pytest.mark.parametrize("perm", [
    {1: 2, 2: 1},
    {1: 3, 3: 5, 5: 1},
    {1: 5, 2: 4, 3: 3, 4: 2, 5: 1},
])
def test_phi_is_s5_equivariant(veronese, perm):
    assert phi67(permute_labels(veronese, perm)) == phi67(veronese).permute(perm)


def test_phi_is_swap_invariant(veronese):
    image = phi67(veronese)
    for swap in SwapSet.all_subsets():
        assert phi67(geometric_swap(veronese, swap)) == image, str(swap)


def test_phi_is_projectively_invariant(veronese, Q):
    g = Map3.of(Q, [[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    a, sigma = as_p1_config(phi67(veronese))
    b, _ = as_p1_config(phi67(veronese.apply(g)))
    assert moduli_equal(a, b, sigma)


def test_as_p1_config(veronese):
    cfg, sigma = as_p1_config(phi67(veronese))
    assert cfg.weights == WeightVector((2, 2, 2, 2, 2, 1, 1))
    assert sigma.order() == 2
    _, full = as_p1_config(phi67(veronese), ordered_symmetric=True)
    assert full.order() == 240


def test_outputs_reject_foreign_patterns(Q):
    with pytest.raises(NotInStratum):
        output(Q, (1, 2, 3, 4, 5), pair=(0, 0))
    with pytest.raises(NotInStratum):
        output(Q, (1, 1, 2, 2, 3))
    out = output(Q, (0, 1, 2, 3, 4))
    assert output_stratum(out) == WeightVector((3, 2, 2, 2, 2, 1))


# fibers

def test_generic_fiber_has_sixteen_classes(veronese):
    orbit = fiber_orbit(veronese)
    assert len(orbit) == 16
    assert orbit[0] == veronese
    keys = {normal_form_key(member.points) for member in orbit}
    assert len(keys) == 16


def test_fiber_through_a_tangency_point(Q):
    cfg = PlaneConfig.of(Q, [(1, 0, 0)] + [(1, x, x * x) for x in (2, 3, 4, 5)] + [(0, 1, 0)])
    assert classify(cfg).kind is StratumKind.GENERIC_SMOOTH
    assert len(fiber_orbit(cfg)) == 8


def test_fiber_members_share_the_phi_point(veronese):
    a, sigma = as_p1_config(phi67(veronese))
    for member in fiber_orbit(veronese):
        b, _ = as_p1_config(phi67(member))
        assert moduli_equal(a, b, sigma)


def test_fiber_needs_a_generic_configuration(collinear_cfg):
    with pytest.raises(NotGeneric):
        fiber_orbit(collinear_cfg)


# lift

def test_lift_inverts_phi_over_q(veronese):
    assert lift(phi67(veronese)) == veronese


def test_lift_needs_rational_squares(Q):
    with pytest.raises(UnliftableOverField):
        lift(output(Q, (1, 2, 3, 4, 5)))


def test_lift_adds_one_layer_over_a_prime_field(F101):
    out = output(F101, (1, 2, 3, 4, 5))
    cfg = lift(out)
    assert cfg.field.is_extension
    assert cfg.field.base == F101
    assert phi67(cfg) == out


def test_lift_normalizes_the_pair(Q):
    out = output(Q, (2, 5, 10, 17, 26), pair=(1, INFINITY))
    cfg = lift(out)
    assert classify(cfg).kind is StratumKind.GENERIC_SMOOTH
    a, sigma = as_p1_config(phi67(cfg))
    b, _ = as_p1_config(out)
    assert moduli_equal(a, b, sigma)


def test_lift_of_a_point_on_the_pair(Q):
    cfg = lift(output(Q, (INFINITY, 1, 4, 9, 16)))
    assert cfg[1] == Point2.of(Q, 0, 0, 1)
    assert cfg[2] == Point2.of(Q, 1, 1, 1)
    assert cfg[6] == Point2.of(Q, 0, 1, 0)


def test_lift_rejects_coincident_ordered_points(collinear_cfg):
    with pytest.raises(NotInStratum):
        lift(phi67(collinear_cfg))


# on-conic variant

def test_on_conic_projection(on_conic_cfg):
    projected = phi67_on_conic(on_conic_cfg)
    assert projected.weights == WeightVector((2,) * 6)
    assert projected.distinct_count() == 6
    assert stability(projected) is Stability.STABLE


def test_on_conic_projection_needs_a_conic(veronese):
    with pytest.raises(NotOnConic):
        phi67_on_conic(veronese)


# boundary identifications

def test_cremona_base_for():
    assert cremona_base_for((1, 2)) == (3, 4, 5)
    assert cremona_base_for((2, 5)) == (1, 3, 4)


def test_collinear_configuration_goes_onto_a_conic(collinear_cfg):
    image = collinear_to_conic(collinear_cfg)
    assert classify(image).kind is StratumKind.ON_CONIC
    assert all(image[b] == collinear_cfg[b] for b in (3, 4, 5))
    assert stability(phi67_on_conic(image)) is Stability.STABLE


def test_collinear_identification_is_projectively_natural(collinear_cfg, Q):
    g = Map3.of(Q, [[2, 1, 0], [0, 1, 1], [1, 0, 3]])
    assert moduli_equal_plane(collinear_to_conic(collinear_cfg).points,
                              collinear_to_conic(collinear_cfg.apply(g)).points)


def test_collinear_identification_needs_the_collinear_stratum(veronese):
    with pytest.raises(WrongStratum):
        collinear_to_conic(veronese)


def test_degenerate_limit(degenerate_witness):
    report = degenerate_limit_check_I(degenerate_witness)
    assert report["pair"] == [1, 2]
    assert report["base"] == [3, 4, 5]
    assert report["degenerate_label"] == 1
    assert report["opposite_vertex"] == 5
    assert report["classes"] == 5
    assert report["doubled"] == [1, 5]
    assert report["on_conic"]
    assert report["merged_stratum"] == [4, 2, 2, 2, 2]
    assert report["passed"]


def test_degenerate_limit_image_collapses_to_weight_four(degenerate_witness):
    from src.cremona import based_cremona
    image = based_cremona(degenerate_witness.points, (3, 4, 5))
    assert image[0] == image[4]
    merged = collision_stratum(phi67_on_conic(image)).merged
    assert merged == WeightVector((4, 2, 2, 2, 2))


def test_degenerate_limit_needs_the_pattern(veronese):
    with pytest.raises(WrongDegeneracy):
        degenerate_limit_check_I(veronese)
    points = list(veronese.points)
    points[1] = points[0]
    with pytest.raises(WrongDegeneracy):
        degenerate_limit_check_I(points)


# plane moduli

def test_plane_moduli_equality(veronese, Q):
    g = Map3.of(Q, [[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    moved = veronese.apply(g)
    assert moduli_equal_plane(veronese.points, moved.points)
    assert normal_form_key(veronese.points) == normal_form_key(moved.points)
    other = veronese_config(Q, (1, 2, 3, 4, 6))
    assert not moduli_equal_plane(veronese.points, other.points)
    assert not moduli_equal_plane(veronese.points, permute_labels(veronese, {1: 2, 2: 1}).points)


def test_plane_moduli_over_prime_fields(Fp):
    assert moduli_equal_plane(veronese_config(Fp).points, veronese_config(Fp).points)
    assert veronese_config(FieldDescriptor.prime(101)) == veronese_config(FieldDescriptor.prime(101))


def test_phi_is_projectively_invariant_over_the_default_prime(Fp):
    g = Map3.of(Fp, [[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    extended = 0
    for seed in range(8):
        cfg = random_generic_config(seed, Fp)
        image, moved = phi67(cfg), phi67(cfg.apply(g))
        extended += image.field.is_extension or moved.field.is_extension
        a, sigma = as_p1_config(image)
        b, _ = as_p1_config(moved)
        assert moduli_equal(a, b, sigma), seed
    assert extended
