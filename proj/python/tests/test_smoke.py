import pytest

import char2lift


def test_version():
    assert char2lift.__version__


def test_expression_round_trip():
    assert char2lift.canonical_expr("P2 + P1") == "P2+P1"
    assert char2lift.order_of_expr("P2+31*P34") == 2 + 31 * 34
    assert char2lift.order_of_expr("join(T0, V1)") == 3


def test_class_extraction():
    assert char2lift.class_of_expr("P2+P1", 3) == [0, 4]
    assert char2lift.class_of_expr("join(V1,V1,V1,V1)", 4) == [12, 0, 8]


def test_enumeration_matches_known_set():
    assert char2lift.enumerate_classes("S", 3, 3) == [[0, 0], [0, 4]]
    assert char2lift.enumerate_classes("S", 7, 3, workers=4) == [[0, 0], [0, 4]]
    assert char2lift.enumerate_classes("U", 2, 3) == [[0], [2]]


def test_sampling_is_deterministic_and_sound():
    first = char2lift.sample_classes("S", 5, 3, trials=200, seed=11)
    assert first == char2lift.sample_classes("S", 5, 3, trials=200, seed=11)
    exhaustive = char2lift.enumerate_classes("S", 5, 3)
    assert all(t in exhaustive for t in first)


def test_predicted_counts():
    assert char2lift.predicted_count("T", 6, odd_n=False) == 16
    assert char2lift.predicted_count("T", 6, odd_n=True) == 4
    assert char2lift.predicted_count("S", 5, odd_n=True) == 16
    assert char2lift.predicted_count("U", 4, odd_n=False) == 2**6


def test_lift_certificates():
    cert = char2lift.verify_lift("2*P2", "I", 4, f=2)
    assert cert["passed"] and all(c["ok"] for c in cert["checks"])
    assert not char2lift.verify_lift("P2", "I", 4, f=2)["passed"]


def test_construct_lift_round_trip():
    expr = char2lift.construct_lift("T", "I", 5, f=4)
    assert char2lift.verify_lift(expr, "I", 5, f=4)["passed"]
    expr = char2lift.construct_lift("S", "II", 3)
    assert char2lift.verify_lift(expr, "II", 3)["passed"]


def test_witness_hits_targets():
    witness = char2lift.u_witness(3, [2, 0])
    assert witness["verified"]
    assert witness["achieved"] == [2, 0]
    assert witness["multipliers"] == [7, 2]
    assert char2lift.class_of_expr(witness["expr"], 3) == [2, 0]
    assert [2, 0] in char2lift.admissible_u_targets(3)


def test_theorem_report():
    rows = char2lift.theorem_report("S", 3, [3, 4, 5])
    assert [row["observed"] for row in rows] == [2, 1, 2]
    assert all(row["bound_ok"] for row in rows)


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        char2lift.enumerate_classes("X", 3, 3)
    with pytest.raises(ValueError):
        char2lift.class_of_expr("Q17", 3)
    with pytest.raises(ValueError):
        char2lift.u_witness(3, [1, 0])
