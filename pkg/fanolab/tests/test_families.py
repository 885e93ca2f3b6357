import pytest

from fanolab.app.core.cones import (
    cone_normal_form,
    cqs_isomorphic,
    l_reflexive_index,
    polygon_singularity_content,
)
from fanolab.app.core.exceptions import (
    GcdConditionViolated,
    InvalidParameters,
    NotConvexAtParameters,
    UnknownFamily,
)
from fanolab.app.core.families import (
    FAMILIES,
    family_cone_types,
    family_polygon,
    family_vertices,
    valid_parameters,
)
from fanolab.app.core.lattice import det2, validate_polygon
from fanolab.app.domain.models import (
    AffineForm,
    Cone,
    ConeTypeStatus,
    CyclicQuotientSingularity,
    FamilyModel,
    VertexTemplate,
)
from fanolab.tests.samples import HEXAGON, vec

CQS = CyclicQuotientSingularity


def test_nine_families() -> None:
    assert sorted(FAMILIES) == [
        "k3f1", "k4f1", "k4f2", "k4f3", "k4f4", "k5f1", "k5f2", "k5f3", "k6f1",
    ]
    for family_id, model in FAMILIES.items():
        assert len(model.vertex_template) == model.k == int(family_id[1])


def test_templates_start_from_the_normal_form_cone() -> None:
    for family_id in FAMILIES:
        v = family_vertices(family_id, 7, 2)
        assert v[0] == vec(7, -2)
        assert v[1] == vec(0, 1)


def test_triangle_instantiation() -> None:
    polygon = family_polygon("k3f1", 7, 3)
    assert polygon.vertices == (vec(-7, 2), vec(7, -3), vec(0, 1))


def test_hexagon_instantiation() -> None:
    assert family_polygon("k6f1", 3, 1) == validate_polygon(HEXAGON)


def test_every_cone_has_determinant_r() -> None:
    for family_id in FAMILIES:
        for r in range(3, 30):
            for s in valid_parameters(family_id, r):
                polygon = family_polygon(family_id, r, s)
                assert all(det2(u, w) == r for u, w in polygon.edges())


def test_parameter_errors() -> None:
    with pytest.raises(UnknownFamily):
        family_polygon("k7f1", 7, 1)
    with pytest.raises(GcdConditionViolated):
        family_polygon("k3f1", 7, 1)
    with pytest.raises(GcdConditionViolated):
        family_polygon("k4f2", 9, 2)
    with pytest.raises(InvalidParameters):
        family_polygon("k4f1", 5, 5)


def test_non_convex_template_is_reported() -> None:
    def point(x: int, y: int) -> VertexTemplate:
        return VertexTemplate(AffineForm(const=x), AffineForm(const=y))

    collinear = FamilyModel(
        "collinear", 4, (point(1, -1), point(1, 0), point(1, 1), point(-1, 0)), ()
    )
    with pytest.raises(NotConvexAtParameters):
        family_polygon(collinear, 3, 1)


def test_valid_parameters() -> None:
    assert valid_parameters("k3f1", 7) == [2, 3, 4, 5, 6]
    assert valid_parameters("k4f1", 8) == [1, 3, 5, 7]
    assert valid_parameters("k6f1", 3) == [1]


class TestConeTypes:
    def test_triangle_7_3(self) -> None:
        types = family_cone_types("k3f1", 7, 3)
        assert [t.status for t in types] == [ConeTypeStatus.CLOSED_FORM] * 3
        assert [t.singularity for t in types] == [CQS(7, 3), CQS(7, 5), CQS(7, 5)]

    def test_square_5_2(self) -> None:
        types = family_cone_types("k4f1", 5, 2)
        assert [t.singularity for t in types] == [CQS(5, 2), CQS(5, 3), CQS(5, 2), CQS(5, 3)]

    def test_hexagon_has_unknown_entries(self) -> None:
        types = family_cone_types("k6f1", 3, 1)
        assert [t.status for t in types] == [
            ConeTypeStatus.CLOSED_FORM,
            ConeTypeStatus.CLOSED_FORM,
            ConeTypeStatus.UNKNOWN,
            ConeTypeStatus.CLOSED_FORM,
            ConeTypeStatus.CLOSED_FORM,
            ConeTypeStatus.UNKNOWN,
        ]
        assert [t.position for t in types] == [1, 2, 3, 4, 5, 6]
        assert all(t.singularity == CQS(3, 1) for t in types if t.singularity)

    def test_floor_formula_can_degenerate(self) -> None:
        sigma3 = family_cone_types("k3f1", 33, 5)[2]
        assert sigma3.status == ConeTypeStatus.DEGENERATE
        assert sigma3.singularity is None
        assert "floor" in sigma3.formula

    def test_floor_formula_example(self) -> None:
        sigma3 = family_cone_types("k3f1", 35, 12)[2]
        assert sigma3.singularity == CQS(35, 17)

    def test_closed_forms_match_the_computed_cones(self) -> None:
        for family_id in FAMILIES:
            for r in range(3, 41):
                for s in valid_parameters(family_id, r):
                    v = family_vertices(family_id, r, s)
                    k = len(v)
                    for entry in family_cone_types(family_id, r, s):
                        if entry.status != ConeTypeStatus.CLOSED_FORM:
                            continue
                        i = entry.position - 1
                        computed = cone_normal_form(Cone(v[i], v[(i + 1) % k]))
                        assert cqs_isomorphic(computed, entry.singularity), (
                            family_id, r, s, entry.position
                        )


def test_r_cone_members_have_homogeneous_determinant() -> None:
    for family_id in FAMILIES:
        for r in range(3, 41):
            for s in valid_parameters(family_id, r):
                polygon = family_polygon(family_id, r, s)
                content = polygon_singularity_content(polygon)
                if content.n == 0 and len(content.basket) == polygon.k:
                    assert all(b.r == r for b in content.basket)


@pytest.mark.parametrize(
    ("family_id", "s"),
    [
        ("k4f1", 2),
        ("k4f2", 7),
        ("k4f3", 13),
        ("k4f4", 2),
        ("k5f1", 7),
        ("k5f2", 2),
        ("k5f3", 13),
    ],
)
def test_order_15_witnesses_are_not_l_reflexive(family_id, s) -> None:
    polygon = family_polygon(family_id, 15, s)
    content = polygon_singularity_content(polygon)
    assert content.n == 0
    assert len(content.basket) == polygon.k
    assert l_reflexive_index(polygon) is None
