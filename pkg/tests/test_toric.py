"""Fans, their face-ring cohomology dimensions, and the fan file formats."""

import json

import pytest

from lefschetz import errors
from lefschetz.complexes import SimplicialComplex
from lefschetz.exactla import QQ
from lefschetz.toric import (
    Fan,
    fan_from_json,
    fan_to_json,
    format_fan,
    load_fan,
    parse_fan,
    product_of_lines_fan,
    projective_plane_fan,
    ray_system,
    stellar_refine,
    toric_betti,
    toric_m_check,
    toric_wle,
    underlying_complex,
    validate_complete,
)


# ----------------------------------------------------------------------
#  fan construction and validation
# ----------------------------------------------------------------------


def test_fan_normalizes_cones():
    f = Fan(2, [(1, 0), (0, 1), (-1, -1)], [(2, 1), (3, 2), (1, 3), (1, 2)])
    assert f.cones == ((1, 2), (1, 3), (2, 3))


def test_fan_rejects_bad_input():
    with pytest.raises(errors.InvalidFan):
        Fan(0, [], [])
    with pytest.raises(errors.InvalidFan):
        Fan(2, [(0, 0)], [(1,)])                      # zero ray
    with pytest.warns(UserWarning), pytest.raises(errors.InvalidFan):
        Fan(2, [(1, 0), (2, 0)], [(1, 2)])            # duplicate after scaling
    with pytest.raises(errors.InvalidFan):
        Fan(2, [(1, 0), (0, 1)], [(1, 3)])            # missing ray index
    with pytest.raises(errors.InvalidFan):
        Fan(2, [(1, 0), (0, 1)], [()])                # empty cone
    with pytest.raises(errors.InvalidFan):
        Fan(2, [(1, 0), (0, 1), (1, 1)], [(1, 2, 3)])  # more rays than dim
    with pytest.raises(errors.InvalidFan):
        Fan(2, [(1, 0), (-1, 0)], [(1, 2)])           # parallel, not simplicial
    with pytest.raises(errors.InvalidFan):
        Fan(2, [(1, 0, 0), (0, 1, 0)], [(1, 2)])      # ray arity vs dim


def test_fan_primitivizes_with_warning():
    with pytest.warns(UserWarning):
        f = Fan(2, [(2, 0), (0, 1), (-1, -1)], [(1, 2), (2, 3), (3, 1)])
    assert f.rays[0] == (1, 0)


def test_validate_complete():
    c = validate_complete(projective_plane_fan())
    assert c.facets == ((1, 2), (1, 3), (2, 3))
    validate_complete(product_of_lines_fan())
    # half plane: ridge (the origin... a single ray) in one cone only
    half = Fan(2, [(1, 0), (0, 1)], [(1, 2)])
    with pytest.raises(errors.InvalidFan):
        validate_complete(half)
    # unused ray
    with pytest.raises(errors.InvalidFan):
        validate_complete(Fan(2, [(1, 0), (0, 1), (-1, -1), (1, 1)],
                              [(1, 2), (2, 3), (3, 1)]))


def test_underlying_complexes():
    assert underlying_complex(projective_plane_fan()).facets == \
        ((1, 2), (1, 3), (2, 3))
    assert underlying_complex(product_of_lines_fan()).facets == \
        ((1, 2), (1, 4), (2, 3), (3, 4))


def test_one_dimensional_fan():
    f = Fan(1, [(1,), (-1,)], [(1,), (2,)])
    assert tuple(toric_betti(f)) == (1, 1)


# ----------------------------------------------------------------------
#  cohomology dimensions
# ----------------------------------------------------------------------


def test_projective_plane_betti():
    b = toric_betti(projective_plane_fan())
    assert tuple(b) == (1, 1, 1)
    assert b.kind == "betti"


def test_product_of_lines_betti():
    assert tuple(toric_betti(product_of_lines_fan())) == (1, 2, 1)


def test_betti_sum_is_facet_count():
    for fan in (projective_plane_fan(), product_of_lines_fan()):
        assert sum(toric_betti(fan)) == len(fan.cones)


def test_betti_symmetric():
    for fan in (projective_plane_fan(), product_of_lines_fan()):
        b = tuple(toric_betti(fan))
        assert b == b[::-1]


def test_ray_system_is_pinned():
    fan = projective_plane_fan()
    s = ray_system(fan)
    assert s.field is QQ
    assert s.d == 2 and s.m == 3
    # rows are the coordinate functionals of the rays
    assert [int(x) for x in s.rows[0]] == [1, 0, -1]
    assert [int(x) for x in s.rows[1]] == [0, 1, -1]


def test_toric_m_check():
    rep = toric_m_check(projective_plane_fan())
    assert tuple(rep.differences) == (1, 0)
    assert rep.ok
    rep = toric_m_check(product_of_lines_fan())
    assert tuple(rep.differences) == (1, 1)
    assert rep.ok


def test_toric_wle_deterministic():
    fan = product_of_lines_fan()
    a = toric_wle(fan, 5)
    b = toric_wle(fan, 5)
    assert a.ok and a.method == "toric"
    assert a.to_dict() == b.to_dict()
    # pinned system: theta comes from the rays, only omega is searched
    assert a.theta == ray_system(fan).rows


# ----------------------------------------------------------------------
#  refinement
# ----------------------------------------------------------------------


def test_stellar_refine_projective_plane():
    fan = projective_plane_fan()
    refined = stellar_refine(fan, (1, 2))
    assert len(refined.rays) == 4
    assert refined.rays[3] == (1, 1)
    assert tuple(toric_betti(refined)) == (1, 2, 1)
    # one facet became two
    assert sum(toric_betti(refined)) == sum(toric_betti(fan)) + 1


def test_stellar_refine_chain():
    fan = product_of_lines_fan()
    r1 = stellar_refine(fan, (1, 2))
    r2 = stellar_refine(r1, (2, 3))
    assert tuple(toric_betti(r2)) == (1, 4, 1)
    assert sum(toric_betti(r2)) == len(fan.cones) + 2


def test_stellar_refine_errors():
    fan = projective_plane_fan()
    with pytest.raises(errors.InvalidFan):
        stellar_refine(fan, (1, 2, 3))  # not a cone of the fan
    # an unused ray would break the ray/vertex alignment
    with pytest.raises(errors.InvalidFan):
        stellar_refine(Fan(2, [(1, 0), (0, 1), (-1, -1), (1, 1)],
                           [(1, 2), (2, 3), (3, 1)]), (1, 2))
    # the inserted ray must be new
    clash = Fan(2, [(1, 0), (0, 1), (-1, -1), (1, 1)],
                [(1, 2), (2, 3), (3, 1), (1, 4)])
    with pytest.raises(errors.InvalidFan):
        stellar_refine(clash, (1, 2))


# ----------------------------------------------------------------------
#  file formats
# ----------------------------------------------------------------------

FAN_TEXT = """\
2
1 0
0 1
-1 0
0 -1

1 2
2 3
3 4
1 4
"""


def test_parse_fan():
    fan = parse_fan(FAN_TEXT)
    assert fan == product_of_lines_fan()


def test_parse_fan_comments():
    text = "# fan\n2\n1 0\n0 1\n-1 -1\n\n# cones now\n1 2\n2 3\n1 3\n"
    assert parse_fan(text) == projective_plane_fan()


def test_format_parse_roundtrip():
    for fan in (projective_plane_fan(), product_of_lines_fan(),
                stellar_refine(projective_plane_fan(), (1, 2))):
        assert parse_fan(format_fan(fan)) == fan


def test_parse_fan_errors():
    with pytest.raises(errors.ParseError):
        parse_fan("")
    with pytest.raises(errors.ParseError):
        parse_fan("2 3\n1 0\n")            # bad header
    with pytest.raises(errors.ParseError) as e:
        parse_fan("2\n1 0\nx y\n")
    assert "line 3" in str(e.value)
    with pytest.raises(errors.ParseError):
        parse_fan("2\n1 0 0\n")            # wrong coordinate count
    with pytest.raises(errors.ParseError):
        parse_fan("2\n1 0\n0 1\n")         # no cones


def test_json_roundtrip(tmp_path):
    fan = product_of_lines_fan()
    assert fan_from_json(fan_to_json(fan)) == fan
    with pytest.raises(errors.ParseError):
        fan_from_json('{"dim": 2}')
    p = tmp_path / "f.json"
    p.write_text(fan_to_json(fan), encoding="utf-8")
    assert load_fan(str(p)) == fan
    q = tmp_path / "f.fan"
    q.write_text(format_fan(fan), encoding="utf-8")
    assert load_fan(str(q)) == fan
