import pytest

from linkstream import (
    Q,
    StreamError,
    TemporalNode,
    V_ZERO,
    Volume,
    cell_ratio,
    contribution,
    latency_lists,
    next_list,
    parse_stream,
    prev_list,
    reachable,
    vsp,
)


def tn(t, v):
    return TemporalNode(Q(t) if not isinstance(t, str) else Q(*map(int, t.split("/"))), v)


@pytest.fixture(scope="module")
def ll_ae(demo):
    return latency_lists(demo, "a")["e"]


class TestBoundaryLists:
    def test_prev_list_anchor_9_16(self, demo, ll_ae):
        lst = prev_list(demo, "a", "e", Q(9), Q(16), ll_ae)
        assert [(b, v) for b, v in lst.entries] == [
            (Q(2), V_ZERO),
            (Q(0), Volume(Q(2), 2)),
        ]

    def test_next_list_anchor_9_16(self, demo, ll_ae):
        lst = next_list(demo, "a", "e", Q(9), Q(16), ll_ae)
        assert [(b, v) for b, v in lst.entries] == [
            (Q(23), V_ZERO),
            (Q(30), Volume(Q(1), 0)),
        ]

    def test_prev_list_first_pair_falls_back_to_alpha(self, demo, ll_ae):
        lst = prev_list(demo, "a", "e", Q(2), Q(9), ll_ae)
        assert [(b, v) for b, v in lst.entries] == [(Q(0), V_ZERO)]

    def test_next_list_last_pair_falls_back_to_omega(self, demo, ll_ae):
        lst = next_list(demo, "a", "e", Q(24), Q(30), ll_ae)
        assert [(b, v) for b, v in lst.entries] == [(Q(32), V_ZERO)]

    def test_boundaries_monotone_and_first_volume_zero(self, demo):
        for u in demo.nodes:
            lists = latency_lists(demo, u)
            for w in demo.nodes:
                for s, a in lists[w]:
                    prev = prev_list(demo, u, w, s, a, lists[w])
                    nxt = next_list(demo, u, w, s, a, lists[w])
                    if prev.entries:
                        assert prev.entries[0][1] == V_ZERO
                        bs = [b for b, _ in prev.entries]
                        assert bs == sorted(bs, reverse=True) or len(bs) == 1
                        assert all(x > y for x, y in zip(bs, bs[1:]))
                    if nxt.entries:
                        assert nxt.entries[0][1] == V_ZERO
                        bs = [b for b, _ in nxt.entries]
                        assert all(x < y for x, y in zip(bs, bs[1:]))

    def test_next_list_mirrors_prev_list_of_reversed_stream(self, demo):
        # reverse every interval about the window midpoint and compare the
        # forward scan with the backward scan of the mirrored stream
        span = demo.alpha + demo.omega
        lines = ["%s %s" % (demo.alpha, demo.omega)]
        for (u, v), ivs in sorted(demo.presence.items()):
            for b, e in ivs:
                lines.append("%s %s %s %s" % (u, v, span - e, span - b))
        mirrored = parse_stream("\n".join(lines) + "\n")
        ll = latency_lists(demo, "a")["e"]
        ll_m = latency_lists(mirrored, "e")["a"]
        for s, a in ll:
            nxt = next_list(demo, "a", "e", s, a, ll)
            prev_m = prev_list(mirrored, "e", "a", span - a, span - s, ll_m)
            assert [
                (span - b, v.dim if not v.is_zero() else None)
                for b, v in nxt.entries
            ] == [
                (b, v.dim if not v.is_zero() else None)
                for b, v in prev_m.entries
            ]
            assert [v.size for _, v in nxt.entries] == [
                v.size for _, v in prev_m.entries
            ]

    def test_non_latency_pair_rejected(self, demo, ll_ae):
        with pytest.raises(StreamError):
            prev_list(demo, "a", "e", Q(3), Q(10), ll_ae)


class TestCellRatio:
    CASES = [
        ((Q(9, 2), "c"), Q(3, 4)),
        ((Q(8), "d"), Q(1)),
        ((Q(15, 2), "c"), Q(0)),
        ((Q(10), "b"), Q(0)),
        ((Q(10), "c"), Q(0)),
        ((Q(14), "d"), Q(0)),
    ]

    @pytest.mark.parametrize("tv,expected", CASES)
    def test_cell_at_0_18(self, demo, ll_ae, tv, expected):
        t, v = tv
        got = cell_ratio(
            demo, "a", "e", TemporalNode(t, v), ll_ae, Q(0), Q(18)
        )
        assert got == expected

    def test_ratio_in_unit_interval(self, demo, ll_ae):
        for t in range(0, 33, 4):
            for v in demo.nodes:
                r = cell_ratio(
                    demo, "a", "e", TemporalNode(Q(t), v), ll_ae,
                    Q(1), Q(20),
                )
                assert 0 <= r <= 1


class TestContribution:
    def test_no_involvement_is_zero(self, demo, ll_ae):
        res = contribution(demo, "a", "e", tn("15/2", "c"), ll_ae)
        assert res.value == 0 and res.anchor is None
        res = contribution(demo, "a", "e", tn(10, "b"), ll_ae)
        assert res.value == 0 and res.anchor is None

    def test_anchors(self, demo, ll_ae):
        assert contribution(demo, "a", "e", tn("9/2", "c"), ll_ae).anchor == (2, 9)
        assert contribution(demo, "a", "e", tn(10, "c"), ll_ae).anchor == (9, 16)
        assert contribution(demo, "a", "e", tn(16, "d"), ll_ae).anchor == (9, 16)

    def test_values(self, demo, ll_ae):
        assert contribution(demo, "a", "e", tn("9/2", "c"), ll_ae).value == Q(63, 2)
        assert contribution(demo, "a", "e", tn(10, "c"), ll_ae).value == 98
        assert contribution(demo, "a", "e", tn(16, "d"), ll_ae).value == 98

    def test_same_pair_is_zero(self, demo):
        ll = latency_lists(demo, "c")["c"]
        res = contribution(demo, "c", "c", tn(10, "b"), ll)
        assert res.value == 0
        res = contribution(demo, "c", "c", tn(11, "c"), ll)
        assert res.value == 0

    def test_outside_window_rejected(self, demo, ll_ae):
        with pytest.raises(StreamError):
            contribution(demo, "a", "e", tn(40, "c"), ll_ae)

    def test_anchor_is_unique(self, demo):
        # no second latency pair may satisfy the involvement conditions
        for u in demo.nodes:
            lists = latency_lists(demo, u)
            for w in demo.nodes:
                for t in range(0, 33, 2):
                    for v in demo.nodes:
                        tv = TemporalNode(Q(t), v)
                        hits = [
                            (x, y)
                            for x, y in lists[w]
                            if x <= tv.time <= y
                            and reachable(demo, TemporalNode(x, u), tv)
                            and reachable(demo, tv, TemporalNode(y, w))
                        ]
                        assert len(hits) <= 1

    def test_support_bound(self, demo, ll_ae):
        # accumulated cells tile ]S,s] x [a,A[ for the anchor of (10,c)
        s, a = Q(9), Q(16)
        prev = prev_list(demo, "a", "e", s, a, ll_ae)
        nxt = next_list(demo, "a", "e", s, a, ll_ae)
        S = prev.entries[-1][0]
        A = nxt.entries[-1][0]
        area = Q(0)
        s_hi = s
        for s_left, _ in prev.entries:
            a_lo = a
            for a_right, _ in nxt.entries:
                area += (s_hi - s_left) * (a_right - a_lo)
                a_lo = a_right
            s_hi = s_left
        assert area == (s - S) * (A - a)

    def test_value_bounded_by_support_area(self, demo):
        for u in demo.nodes:
            lists = latency_lists(demo, u)
            for w in demo.nodes:
                for t in range(0, 33, 4):
                    for v in demo.nodes:
                        res = contribution(
                            demo, u, w, TemporalNode(Q(t), v), lists[w]
                        )
                        assert res.value >= 0
                        span = demo.omega - demo.alpha
                        assert res.value <= span * span

    def test_instantaneous_non_event_anchor_is_zero(self, demo):
        # at a non-event time, u -> w instantaneous reachability leaves no
        # anchored pair, so the contribution vanishes
        ll = latency_lists(demo, "b")["c"]
        res = contribution(demo, "b", "c", tn(4, "c"), ll)
        assert res.value == 0 and res.anchor is None
