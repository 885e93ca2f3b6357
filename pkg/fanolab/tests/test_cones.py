from itertools import product
from math import gcd

import numpy as np
import pytest

from fanolab.app.core.cones import (
    canonical_singularity,
    classify_cone,
    cone_metrics,
    cone_normal_form,
    cone_singularity_content,
    cqs_isomorphic,
    edge_heights,
    is_homogeneous,
    l_reflexive_index,
    polygon_singularity_content,
)
from fanolab.app.core.exceptions import DegenerateCone, InvalidParameters
from fanolab.app.core.families import family_polygon
from fanolab.app.core.lattice import REFLECTION, det2, is_primitive
from fanolab.app.domain.models import (
    Cone,
    ConeClassTag,
    CyclicQuotientSingularity,
    SingularityContent,
    UnimodularMap,
)
from fanolab.tests.samples import vec

CQS = CyclicQuotientSingularity


def _normal_cone(r: int, s: int) -> Cone:
    return Cone(vec(r, -s), vec(0, 1))


def _brute_normal_form(c: Cone) -> set[int]:
    """Every s reachable by a det +1 map with small entries."""
    u, w = c.ray1, c.ray2
    r = det2(u, w)
    found = set()
    for a, b, cc, d in product(range(-12, 13), repeat=4):
        if a * d - b * cc != 1:
            continue
        if (a * w.x + b * w.y, cc * w.x + d * w.y) != (0, 1):
            continue
        image = (a * u.x + b * u.y, cc * u.x + d * u.y)
        if image[0] == r and 0 <= -image[1] < r:
            found.add(-image[1])
    return found


class TestConeConstruction:
    def test_clockwise_rays_are_swapped(self) -> None:
        c = Cone(vec(0, 1), vec(3, -1))
        assert c.ray1 == vec(3, -1)
        assert c.ray2 == vec(0, 1)
        assert det2(c.ray1, c.ray2) > 0

    def test_collinear_rays_are_rejected(self) -> None:
        with pytest.raises(DegenerateCone):
            Cone(vec(1, 2), vec(-1, -2))


class TestNormalForm:
    @pytest.mark.parametrize(
        ("rays", "expected"),
        [
            (((0, 1), (2, -1)), (2, 1)),
            (((0, 1), (3, -1)), (3, 1)),
            (((0, 1), (12, -7)), (12, 7)),
            (((1, 1), (-1, 4)), (5, 1)),
            (((1, 0), (0, 1)), (1, 0)),
        ],
    )
    def test_examples(self, rays, expected) -> None:
        c = Cone(vec(*rays[0]), vec(*rays[1]))
        assert cone_normal_form(c) == CQS(*expected)

    @pytest.mark.parametrize("rays", [((1, 1), (-1, 4)), ((2, 1), (-1, 3)), ((3, -2), (1, 1))])
    def test_matches_brute_force(self, rays) -> None:
        c = Cone(vec(*rays[0]), vec(*rays[1]))
        assert _brute_normal_form(c) == {cone_normal_form(c).s}

    def test_invariant_under_sl2z(self) -> None:
        rng = np.random.default_rng(3)
        for r in range(2, 30):
            for s in range(1, r):
                if gcd(r, s) != 1:
                    continue
                while True:
                    a, b, c, d = (int(x) for x in rng.integers(-4, 5, size=4))
                    if a * d - b * c == 1:
                        break
                h = UnimodularMap(a, b, c, d)
                image = Cone(h.apply(vec(r, -s)), h.apply(vec(0, 1)))
                assert cone_normal_form(image) == CQS(r, s)

    def test_orientation_reversing_maps_give_isomorphic_singularities(self) -> None:
        rng = np.random.default_rng(17)
        for r in range(2, 40):
            for s in range(1, r):
                if gcd(r, s) != 1:
                    continue
                while True:
                    a, b, c, d = (int(x) for x in rng.integers(-4, 5, size=4))
                    if a * d - b * c == -1:
                        break
                h = UnimodularMap(a, b, c, d)
                image = Cone(h.apply(vec(r, -s)), h.apply(vec(0, 1)))
                assert cqs_isomorphic(cone_normal_form(image), CQS(r, s))

    def test_reflection_inverts_the_weight(self) -> None:
        c = _normal_cone(7, 3)
        mirrored = Cone(REFLECTION.apply(c.ray1), REFLECTION.apply(c.ray2))
        assert cone_normal_form(mirrored) == CQS(7, 5)


class TestMetricsAndClassification:
    def test_metrics_examples(self) -> None:
        assert cone_metrics(Cone(vec(0, 1), vec(2, -1))) == (2, 1)
        assert cone_metrics(Cone(vec(0, 1), vec(3, -1))) == (1, 3)
        assert cone_metrics(Cone(vec(0, 1), vec(12, -7))) == (4, 3)

    def test_length_times_height_is_the_determinant(self) -> None:
        rng = np.random.default_rng(5)
        rays = [
            vec(int(x), int(y))
            for x, y in rng.integers(-12, 13, size=(80, 2))
            if gcd(int(x), int(y)) == 1
        ][:40]
        for ux, uy in product(range(-12, 13), repeat=2):
            u = vec(ux, uy)
            if not is_primitive(u):
                continue
            for w in rays:
                d = det2(u, w)
                if d == 0:
                    continue
                length, height = cone_metrics(Cone(u, w))
                assert length * height == abs(d)

    def test_classify_examples(self) -> None:
        t = classify_cone(Cone(vec(0, 1), vec(2, -1)))
        assert (t.tag, t.length, t.height) == (ConeClassTag.T, 2, 1)
        assert t.residual is None

        r = classify_cone(Cone(vec(0, 1), vec(3, -1)))
        assert r.tag == ConeClassTag.R
        assert r.n == 0

        composite = classify_cone(Cone(vec(0, 1), vec(12, -7)))
        assert composite.tag == ConeClassTag.COMPOSITE
        assert (composite.n, composite.remainder) == (1, 1)
        assert composite.residual == CQS(3, 1)

        smooth = classify_cone(Cone(vec(1, 0), vec(0, 1)))
        assert smooth.tag == ConeClassTag.PRIMITIVE_T
        assert smooth.n == 1

    def test_r_cones_are_exactly_the_residual_only_cones(self) -> None:
        for r in range(2, 61):
            for s in range(1, r):
                if gcd(r, s) != 1:
                    continue
                c = _normal_cone(r, s)
                n, residual = cone_singularity_content(c)
                is_r = classify_cone(c).tag == ConeClassTag.R
                assert is_r == (n == 0 and residual is not None)
                assert is_r == CQS(r, s).is_r_singularity()


class TestSingularityContent:
    def test_cone_examples(self) -> None:
        assert cone_singularity_content(Cone(vec(0, 1), vec(5, -2))) == (0, CQS(5, 2))
        assert cone_singularity_content(Cone(vec(0, 1), vec(2, -1))) == (2, None)
        assert cone_singularity_content(Cone(vec(0, 1), vec(12, -7))) == (1, CQS(3, 1))

    def test_residual_placement_does_not_matter(self) -> None:
        for r in range(2, 61):
            for s in range(1, r):
                if gcd(r, s) != 1:
                    continue
                c = _normal_cone(r, s)
                n_acw, acw = cone_singularity_content(c, "anticlockwise")
                n_cw, cw = cone_singularity_content(c, "clockwise")
                assert n_acw == n_cw
                if acw is None:
                    assert cw is None
                else:
                    assert cqs_isomorphic(acw, cw)

    def test_hexagon(self, hexagon) -> None:
        content = polygon_singularity_content(hexagon)
        assert content == SingularityContent(0, (CQS(3, 1),) * 6)
        assert is_homogeneous(content, 3)

    def test_square_is_smooth(self, square) -> None:
        assert polygon_singularity_content(square) == SingularityContent(4, ())

    def test_triangle(self, triangle_7_3) -> None:
        content = polygon_singularity_content(triangle_7_3)
        assert content.n == 0
        assert len(content.basket) == 3
        assert all(cqs_isomorphic(b, CQS(7, 3)) for b in content.basket)

    def test_triangle_35_12_basket(self) -> None:
        content = polygon_singularity_content(family_polygon("k3f1", 35, 12))
        assert content.n == 0
        expected = [CQS(35, 3), CQS(35, 17), CQS(35, 19)]
        for target in expected:
            assert sum(cqs_isomorphic(b, target) for b in content.basket) == 1
        assert not is_homogeneous(content)


class TestIsomorphism:
    def test_examples(self) -> None:
        assert cqs_isomorphic(CQS(5, 2), CQS(5, 3))
        assert not cqs_isomorphic(CQS(7, 2), CQS(7, 3))
        assert not cqs_isomorphic(CQS(5, 2), CQS(7, 2))
        assert cqs_isomorphic(CQS(35, 12), CQS(35, 3))

    def test_canonical_singularity(self) -> None:
        assert canonical_singularity(35, 12) == CQS(35, 3)
        assert canonical_singularity(7, 5) == CQS(7, 3)
        assert canonical_singularity(1, 0) == CQS(1, 0)
        with pytest.raises(InvalidParameters):
            canonical_singularity(6, 3)


class TestReflexivity:
    def test_hexagon_is_three_reflexive(self, hexagon) -> None:
        assert l_reflexive_index(hexagon) == 3

    def test_square_is_reflexive(self, square) -> None:
        assert l_reflexive_index(square) == 1

    def test_triangle_35_12_is_not_l_reflexive(self) -> None:
        polygon = family_polygon("k3f1", 35, 12)
        assert sorted(edge_heights(polygon)) == [7, 35, 35]
        assert l_reflexive_index(polygon) is None


def test_singularity_rejects_bad_weights() -> None:
    with pytest.raises(InvalidParameters):
        CQS(6, 2)
    with pytest.raises(InvalidParameters):
        CQS(5, 5)
    assert CQS(3, 1).label == "1/3(1,1)"
    assert CQS(12, 7).lattice_length == 4
