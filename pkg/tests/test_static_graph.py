import pytest

from linkstream import Q, SnapshotGraph, bfs_counts, connected_components

from conftest import seeded


def graph(nodes, edges):
    return SnapshotGraph(nodes, edges)


class TestBfsCounts:
    def test_two_edge_chain(self, demo):
        g = demo.graph_at(Q(19))  # edges bc, cd
        res = bfs_counts(g, "b")
        assert res.dist["d"] == 2
        assert res.count["d"] == 1

    def test_source_properties(self):
        g = graph("abc", [("a", "b")])
        res = bfs_counts(g, "a")
        assert res.dist["a"] == 0 and res.count["a"] == 1

    def test_isolated_source(self):
        g = graph("abc", [("b", "c")])
        res = bfs_counts(g, "a")
        assert set(res.dist) == {"a"}

    def test_unknown_source(self):
        with pytest.raises(KeyError):
            bfs_counts(graph("ab", []), "z")

    def test_diamond_counts_multiply(self):
        g = graph("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
        res = bfs_counts(g, "a")
        assert res.dist["d"] == 2 and res.count["d"] == 2

    def test_count_recurrence(self):
        rng = seeded(42)
        names = "abcdefg"
        for _ in range(30):
            n = rng.randint(2, 7)
            nodes = names[:n]
            edges = [
                (u, v)
                for i, u in enumerate(nodes)
                for v in nodes[i + 1:]
                if rng.random() < 0.4
            ]
            g = graph(nodes, edges)
            res = bfs_counts(g, nodes[0])
            for w, dw in res.dist.items():
                if dw == 0:
                    continue
                total = sum(
                    res.count[y]
                    for y in g.neighbors(w)
                    if res.dist.get(y) == dw - 1
                )
                assert res.count[w] == total


class TestConnectedComponents:
    def test_demo_at_16(self, demo):
        comps = connected_components(demo.graph_at(Q(16)))
        assert comps == [{"a", "b"}, {"c"}, {"d", "e"}]

    def test_empty_graph_singletons(self):
        assert connected_components(graph("abc", [])) == [
            {"a"}, {"b"}, {"c"}
        ]

    def test_complete_graph(self):
        g = graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
        assert connected_components(g) == [{"a", "b", "c"}]

    def test_partition(self):
        g = graph("abcde", [("a", "b"), ("d", "e")])
        comps = connected_components(g)
        seen = set()
        for comp in comps:
            assert not (comp & seen)
            seen |= comp
        assert seen == set("abcde")
