from fractions import Fraction

import pytest

import wsim


def triangle(ab, ac, bc, labels=("a", "b", "c")):
    return wsim.Space(list(labels), [[0, ab, ac], [ab, 0, bc], [ac, bc, 0]])


def test_space_and_axioms():
    s = triangle(1, 1, 3)
    assert len(s) == 3
    assert s.distance("b", "c") == Fraction(3)
    ok, witness = wsim.is_metric(s)
    assert not ok and witness == ("b", "a", "c")
    assert wsim.is_ultrametric(triangle(1, 1, 1)) == (True, None)
    assert wsim.distance_set(triangle("1/2", 1, 1)) == [0, Fraction(1, 2), 1]


def test_invalid_space_raises():
    with pytest.raises(wsim.WsimError, match="NotSemimetric"):
        wsim.Space(["a", "b"], [[0, 1], [2, 0]])
    assert issubclass(wsim.WsimError, ValueError)


def test_json_round_trip():
    s = triangle(Fraction(1, 3), 2, "5/2")
    assert wsim.Space.from_json(s.to_json()) == s


def test_weak_similarity_search():
    x = wsim.segment_grid(4)
    y = wsim.segment_grid(4, 2)
    all_maps = wsim.enumerate_weak_similarities(x, y)
    assert len(all_maps) == 2
    ws = all_maps[0]
    assert ws.classification == "similarity"
    assert ws.ratio == 2
    assert wsim.verify(x, y, ws.report())
    back = wsim.invert(ws)
    assert wsim.compose(ws, back).classification == "isometry"
    assert wsim.find_weak_similarity(x, wsim.random_metric(4, 3)) is None


def test_families_and_pullback():
    x, y, realization = wsim.example_2_6(5)
    assert wsim.is_ultrametric(x)[0]
    assert wsim.verify(x, y, realization.report())
    rho = wsim.pullback(x, y, realization.map)
    assert wsim.coincreasing(x, rho) == (True, None)
    x2, y2, r2 = wsim.example_2_6_star(3)
    assert len(x2) == 6 and wsim.verify(x2, y2, r2.report())


def test_transforms():
    ok, violation = wsim.check_generalized_subadditivity([(0, 0), (1, 1), (2, 4)])
    assert not ok and violation["x"] == "2"
    assert wsim.hull_eval([(0, 0), (1, 1), (3, 2)], 4) == 3
    assert not wsim.is_metric_preserving([(0, 0), (1, 1), (2, 4)])
    path = wsim.Space(["a", "b", "c"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    squared = wsim.apply_function(path, [(0, 0), (1, 1), (2, 4)])
    assert not wsim.is_metric(squared)[0]
    flake = wsim.snowflake(path, Fraction(1, 2))
    assert flake.backend == "float"
    assert abs(flake.distance("a", "c") - 2 ** 0.5) < 1e-12


def test_partners():
    x = wsim.random_ultrametric(5, 1)
    y, realization = wsim.derive_partner(x, "distorted", seed=4)
    assert wsim.is_ultrametric(y)[0]
    assert realization.classification in {"isometry", "similarity", "generic"}
    z, r = wsim.derive_partner(x, "scaled", ratio=Fraction(1, 3))
    assert r.ratio == Fraction(1, 3)
