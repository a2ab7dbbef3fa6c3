from fractions import Fraction

import pytest

import echcap


def test_ball_capacities():
    seq = echcap.capacities(echcap.ball(1), k=5)
    assert seq["values"] == ["0", "1", "1", "2", "2", "2"]
    assert len(seq["witnesses"]) == 6
    assert seq["witnesses"][0]["points"] >= 1


def test_quad_c2_and_witness():
    quad = echcap.intersection(echcap.ellipsoid(2, 4), echcap.ellipsoid(4, 2))
    seq = echcap.capacities(quad, k=2)
    assert seq["values"][2] == "8/3"
    witness = seq["witnesses"][2]
    assert witness["points"] == 3
    assert witness["length"] == "8/3"


def test_translation_invariance():
    spec = echcap.polydisk(1, 2)
    moved = echcap.translate(spec, (1, 1))
    assert echcap.capacities(spec, k=6)["values"] == echcap.capacities(moved, k=6)["values"]


def test_oracles_match_engine():
    assert echcap.capacities(echcap.ellipsoid(1, 2), k=8)["values"] == echcap.ellipsoid_sequence(
        1, 2, k=8
    )
    assert echcap.capacities(echcap.polydisk(1, 2), k=8)["values"] == echcap.polydisk_sequence(
        1, 2, k=8
    )


def test_geometry_helpers():
    quad = echcap.intersection(echcap.ellipsoid(2, 4), echcap.ellipsoid(4, 2))
    assert Fraction(echcap.area(quad)) == Fraction(8, 3)
    assert echcap.enclosing_ball_radius(quad) == "8/3"
    assert echcap.ell(quad, 1, 1) == "8/3"
    verts = echcap.region_vertices(quad)
    assert ["4/3", "4/3"] in verts


def test_criterion_and_kernel():
    rect = echcap.polygon([("1/2", 0), ("3/2", 0), ("3/2", 1), ("1/2", 1)])
    para = echcap.polygon([("1/2", 0), ("3/2", 0), ("5/2", 1), ("3/2", 1)])
    assert echcap.criterion(rect)["pass"]
    bad = echcap.criterion(para)
    assert not bad["pass"]
    assert bad["axis2"]["witness_chord"] == "2"

    lshape = echcap.polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
    k = echcap.kernel(lshape)
    assert not k["empty"]
    assert [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]] == k["vertices"]


def test_obstruct_and_ball_bound():
    quad = echcap.intersection(echcap.ellipsoid(2, 4), echcap.ellipsoid(4, 2))
    report = echcap.obstruct(quad, echcap.ball("5/2"), k=6)
    assert report["obstructed"]
    assert report["first_violating_k"] == 2

    bound = echcap.ball_bound(quad, k=6)
    assert bound == {"lower": "8/3", "lower_witness_k": 2, "upper": "8/3", "sharp": True}

    poly = echcap.ball_bound(echcap.polydisk(1, 2), k=10)
    assert (poly["lower"], poly["upper"], poly["sharp"]) == ("2", "3", False)


def test_parallel_is_deterministic():
    quad = echcap.intersection(echcap.ellipsoid(2, 4), echcap.ellipsoid(4, 2))
    assert echcap.capacities(quad, k=8) == echcap.capacities(quad, k=8, parallel=True)


def test_errors():
    with pytest.raises(ValueError):
        echcap.capacities({"kind": "nonagon"})
    with pytest.raises(ValueError):
        echcap.capacities(echcap.ellipsoid(0, 1))
    with pytest.raises(ValueError):
        echcap.ell(echcap.ball(1), 0, 0)


def test_normalize_roundtrip():
    spec = {"kind": "ellipsoid", "a": "4/2", "b": "4"}
    norm = echcap.normalize_spec(spec)
    assert norm["a"] == "2"
    assert echcap.normalize_spec(norm) == norm


def test_selftest_passes():
    result = echcap.selftest()
    assert result["pass"], result
