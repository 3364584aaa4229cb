import pytest

import loopchain as lc


def test_profile_and_sequence():
    p = lc.martens_profile(10, [3, 5])
    assert p.genus == 10
    assert p.torsions == [2, 0, 2, 0, 2, 2, 2, 2, 2]
    assert lc.gonality_sequence(p, 10) == [4, 6, 8, 10, 12, 14, 16, 17, 18, 20]
    assert lc.gonality(p) == 4
    assert lc.clifford_index(p) == 2


def test_rank_with_witness():
    p = lc.TorsionProfile(2, [2])
    r, witness = lc.rank(p, 2, [0, 1])
    assert r == 1
    assert witness == [[1], [2]]
    assert lc.rank(p, 2, [0, 0])[0] == 0
    assert lc.rank(p, 2, [None, None])[0] == 0
    assert lc.rank(p, -1, [0, 0]) == (-1, None)


def test_tableaux():
    p = lc.TorsionProfile(3, [2, 2])
    assert lc.enumerate_tableaux(p, 2, 2) == [[[1, 2], [2, 3]]]
    assert lc.count_tableaux(p, 0, 3) == 1


def test_chain_and_oracle_agree():
    p = lc.martens_profile(5, [3], discrete=True)
    cycles = lc.realize_chain(p)
    assert [size for size, _ in cycles] == [2, 2, 6, 2, 2]
    assert lc.chain_profile(cycles) == p
    n, edges = lc.chain_graph(cycles)
    canonical = [0] * n
    for u, v in edges:
        canonical[u] += 1
        canonical[v] += 1
    canonical = [c - 2 for c in canonical]
    assert lc.chain_rank(cycles, canonical) == 4
    assert lc.oracle_rank(n, edges, canonical) == 4


def test_oracle_functions():
    tri = [(0, 1), (1, 2), (0, 2)]
    reduced = lc.dhar_reduce(3, tri, [2, 0, -1], base=2)
    assert sum(reduced) == 1
    assert all(c >= 0 for i, c in enumerate(reduced) if i != 2)
    assert lc.wrd(3, tri, 1, 1) == -1


def test_reports():
    report = lc.verify("thm-b", 5, [3])
    assert report["claim"] == "thm-b"
    assert all(i["pass"] for i in report["instances"])
    div = lc.divisorial_complete_report(lc.martens_profile(5, [3]))
    assert div["pass"] and div["clifford"] == 1


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        lc.martens_profile(4, [3])
    with pytest.raises(ValueError):
        lc.TorsionProfile(3, [2])
    with pytest.raises(ValueError):
        lc.realize_chain(lc.TorsionProfile(3, [0, 2]))
