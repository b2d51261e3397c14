import itertools

import pytest

import amgraph


def circular_ok(s):
    if "1" not in s:
        return True
    if "0" not in s:
        return False
    k = next(i for i in range(len(s)) if s[i] == "1" and s[i - 1] == "0")
    t = s[k:] + s[:k]
    runs = [(c, len(list(g))) for c, g in itertools.groupby(t)]
    return all(c == "0" or (i + 1 < len(runs) and runs[i + 1][1] > n) for i, (c, n) in enumerate(runs))


def test_sequences():
    assert [amgraph.fib(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert amgraph.lucas(0) == 2
    counts = [sum(circular_ok("".join(b)) for b in itertools.product("01", repeat=n)) for n in range(1, 9)]
    assert [amgraph.assoc_mersenne(n) for n in range(1, 9)] == counts
    assert amgraph.fib(200) == 280571172992510140037611932413038677189525
    assert amgraph.edge_count_closed(4) == 4


def test_enumerate_matches_brute_force():
    for n in range(1, 11):
        brute = ["".join(b) for b in itertools.product("01", repeat=n) if circular_ok("".join(b))]
        assert amgraph.enumerate("M", n) == brute
        assert amgraph.build_M_recursive(n) == brute
    assert sorted(amgraph.enumerate("R", 6)) == sorted(
        ["000000", "001000", "000100", "010000", "100000", "110000", "011000", "100100"]
    )


def test_graph_object():
    g = amgraph.build_graph("M", 3)
    assert (g.order, g.size) == (4, 3)
    assert sorted(g.degree_sequence()) == [1, 1, 1, 3]
    assert len(g.edges) == 3
    assert g.cube_polynomial() == [4, 3]
    assert g.to_json()["n"] == 3
    assert "graph" in g.to_dot()
    m = amgraph.build_graph("M", 10).metrics()
    assert m["diameter"] >= m["radius"] > 0


def test_isometry_and_median():
    assert amgraph.build_graph("M", 8).isometry()["isometric"]
    iso = amgraph.build_graph("M", 9).isometry()
    assert not iso["isometric"]
    assert amgraph.majority("1110000", "1000000", "0010000") == "1010000"
    assert not amgraph.build_graph("M", 7).median_graph()["median_graph"]
    assert amgraph.build_graph("M", 6).median_graph()["median_graph"]


def test_phi_and_errors():
    assert amgraph.phi("11000") == "10100"
    assert amgraph.phi_inverse("10100") == "11000"
    with pytest.raises(amgraph.ExcludedStringError):
        amgraph.phi_inverse("101010")
    with pytest.raises(ValueError):
        amgraph.build_graph("X", 3)


def test_hamiltonicity():
    r = amgraph.build_graph("R", 4).hamiltonian_path()
    assert r["has_path"]
    assert amgraph.build_graph("R", 6).hamiltonian_cycle()["has_cycle"]
    assert not amgraph.build_graph("M", 4).hamiltonian_path()["has_path"]


def test_verify():
    lines = amgraph.verify("edges-closed", 4, 12)
    assert len(lines) == 9
    assert all(status == "PASS" for status, _, _, _ in lines)
    with pytest.raises(ValueError):
        amgraph.verify("no-such-check", 1, 2)
