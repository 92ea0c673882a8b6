"""Smoke test for the pyunicyclic extension module.

Run with `pytest python/` or `python python/smoke_test.py` after
`pip install --no-build-isolation crates/py`.
"""

import pyunicyclic as pu


def test_elementary_counts():
    assert pu.subtree_count(pu.cycle(5)) == 26
    assert pu.subtree_profile(pu.path(4)) == [1, 4, 3, 2, 1]
    p1 = pu.path(1)
    assert (pu.subtree_count(p1), pu.wiener(p1), pu.merrifield_simmons(p1), pu.hosoya(p1)) == (2, 0, 2, 1)
    assert pu.closed_form("n_us", [6]) == pu.subtree_count(pu.us(6))


def test_counterexample_values():
    assert pu.wiener(pu.u_two_branch(4, 4, [1], [1])) == 118
    assert pu.wiener(pu.u_cycle_seg([4, 4, 1, 1], 1)) == 120
    assert pu.hosoya(pu.u_cycle_seg([6, 4], 1)) == 114
    assert pu.merrifield_simmons(pu.u_cycle_seg([6, 4], 2)) == 131
    report = pu.counterexamples()
    assert all(c["ok"] for c in report["checks"])


def test_big_integers_are_exact():
    g = pu.star(80)
    assert pu.subtree_count(g) == 80 + 2**79


def test_graph_round_trip_and_rooted_counts():
    g = pu.u_two_branch(2, 1, [1], [1])
    assert pu.subtree_count(g) == 28
    assert pu.rooted_subtree_count(g, vertices=[1]) == 17
    h = pu.Graph.from_edge_list(g.to_edge_list())
    assert h == g
    assert h.segment_sequence() == [2, 1, 1, 1]
    relabelled = pu.Graph(5, [(4, 3), (3, 2), (2, 4), (2, 1), (4, 0)])
    assert h.is_isomorphic(relabelled) and h.canonical_key() == relabelled.canonical_key()
    assert not h.is_isomorphic(pu.us(5))


def test_enumeration_and_verify():
    assert pu.class_count(order=4) == 2
    assert len(pu.enumerate_unicyclic(segments=[4, 4, 1, 1])) == 5
    assert len(pu.enumerate_trees(8)) == 23
    v = pu.verify("T3", segments=[4, 4, 1, 1])
    assert v["holds"] is True and v["extremal_value"] == "219"
    assert pu.verify("T8", n=7, segment_count=3)["holds"] is False
    assert pu.verify("L4_5")["holds"] is True


def test_errors_raise_value_error():
    for call in (lambda: pu.cycle(2), lambda: pu.verify("T99"), lambda: pu.Graph(2, [(0, 0)])):
        try:
            call()
        except ValueError:
            continue
        raise AssertionError("expected ValueError")


def test_correlate_csv():
    csv = pu.correlate(order=4)
    assert csv.splitlines()[0] == "key,order,subtrees,wiener,sigma,hosoya"


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
