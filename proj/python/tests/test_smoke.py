import json

import pytest

import gamelab


def test_graph_roundtrip():
    g = gamelab.generate("cycle:7")
    assert g.vertex_count == 7 and g.edge_count == 7 and g.max_degree == 2
    assert gamelab.read_edge_list(gamelab.write_edge_list(g)).edge_count == 7
    p = gamelab.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert gamelab.edge_distance(p, 0, 3) == 2
    with pytest.raises(gamelab.GamelabError):
        gamelab.Graph(2, [(0, 0)])


def test_exact_solver():
    assert gamelab.solve(gamelab.generate("cycle:5"), 2, variant="classic") == "breaker"
    assert gamelab.solve(gamelab.generate("cycle:5"), 3, variant="classic") == "maker"
    chi = gamelab.game_chromatic_index(gamelab.generate("star:4"))
    assert chi["value"] == 4 and chi["complete"]
    assert set(chi["winners"]) == {4, 5, 6, 7}
    with pytest.raises(gamelab.BudgetExceeded):
        gamelab.solve(gamelab.generate("complete:5"), 6, budget=10)


def test_box_game():
    assert gamelab.box_threshold(5, 2) == 20
    assert gamelab.bob_wins([2, 2, 2, 2, 2], 2)
    assert not gamelab.bob_wins([2, 2], 1)
    assert gamelab.solve_boxgame([1, 1], 1) == "bob"
    assert gamelab.traverse_bob_strategy([2, 2, 2, 2, 2], 2)["sound"]


def test_good_set():
    cert = gamelab.find_good_set(gamelab.generate("cycle:25"), 2)
    assert len(cert["F"]) == 5
    assert cert["satisfied"]
    assert cert["condition_rhs"] == "25/12"


def test_match_and_telemetry():
    g = gamelab.generate("cycle:25")
    rep = gamelab.run_match(g, maker="greedy", breaker="box", k=2, bias=2, trials=50, seed=3)
    assert rep["breaker_wins"] == 50
    assert rep == gamelab.run_match(g, maker="greedy", breaker="box", k=2, bias=2, trials=50, seed=3)

    r = gamelab.generate("random_regular:16:4:1")
    rep, logs = gamelab.run_match(r, maker="paper", breaker="greedy", k=7, mode="modified", trials=3, telemetry=True, keep_logs=True)
    assert rep["telemetry_mismatches"] == 0 and len(logs) == 3
    first = json.loads(logs[0].splitlines()[0])
    assert first["p"] in ("M", "B")
    summary = gamelab.telemetry_summary(r, logs[0], 7, mode="modified")
    assert summary["k"] == 7


def test_acceptance_subset():
    results = gamelab.run_acceptance([4, 5])
    assert [r["status"] for r in results] == ["PASS", "PASS"]
