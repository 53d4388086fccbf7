"""Latency pairs and latency lists.

A latency pair (s, a) from u to w means the fastest paths from (s, u) to
(a, w) start exactly at s and arrive exactly at a.  Non-instantaneous pairs
have event-time coordinates; the lists record instantaneous pairs at event
times only (the continuum between event times is implied).
"""

from typing import NamedTuple
from weakref import WeakKeyDictionary

from .numbers import Q
from .static_graph import bfs_counts, connected_components
from .stream import StreamError


class LatencyPair(NamedTuple):
    start: object
    arrival: object

    def __repr__(self):
        return "(%s,%s)" % (self.start, self.arrival)


class LatencyList:
    """Componentwise strictly increasing list of latency pairs."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = [LatencyPair(s, a) for s, a in pairs]
        for (s, a), (s2, a2) in zip(self.pairs, self.pairs[1:]):
            if not (s < s2 and a < a2):
                raise ValueError(
                    "latency pairs not componentwise increasing: "
                    "(%s,%s) then (%s,%s)" % (s, a, s2, a2)
                )

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __getitem__(self, k):
        return self.pairs[k]

    def __eq__(self, other):
        return isinstance(other, LatencyList) and self.pairs == other.pairs

    def __repr__(self):
        return "LatencyList(%r)" % (self.pairs,)


def latency_lists(stream, u):
    """All latency lists from node u, one per node of the stream.

    Scans event times in increasing order; at each time, every connected
    component reachable from u extends the lists of its members that are not
    already reachable from the latest feasible start.
    """
    if u not in stream.nodes:
        raise StreamError("unknown node %r" % u)
    ll = {w: [] for w in stream.nodes}
    for t in stream.event_times():
        ll[u].append((t, t))
        graph = stream.graph_at(t)
        for comp in connected_components(graph):
            s = None
            maximizers = set()
            for w in comp:
                if not ll[w]:
                    continue
                s2, _ = ll[w][-1]
                if s is None or s2 > s:
                    s = s2
                    maximizers = {w}
                elif s2 == s:
                    maximizers.add(w)
            if maximizers:
                for w in comp - maximizers:
                    ll[w].append((s, t))
    return {w: LatencyList(pairs) for w, pairs in ll.items()}


_LL_CACHE = WeakKeyDictionary()


def cached_latency_lists(stream, u):
    per_stream = _LL_CACHE.get(stream)
    if per_stream is None:
        per_stream = {}
        _LL_CACHE[stream] = per_stream
    lists = per_stream.get(u)
    if lists is None:
        lists = latency_lists(stream, u)
        per_stream[u] = lists
    return lists


def latency(stream, src, dst_node, arrive_by=None):
    """Minimal duration of a path from src to dst_node arriving by
    `arrive_by` (default omega); None when unreachable.

    Only pairs starting at or after src.time are usable; an instantaneous
    path in the snapshot at src.time gives 0 directly (it covers the
    continuum of instantaneous pairs inside the gap holding src.time).
    """
    stream.check_temporal_node(src)
    if dst_node not in stream.nodes:
        raise StreamError("unknown node %r" % dst_node)
    x, u = src
    y = stream.omega if arrive_by is None else arrive_by
    if y < x:
        return None
    if u == dst_node:
        return Q(0)
    if dst_node in bfs_counts(stream.graph_at(x), u).dist:
        return Q(0)
    best = None
    for s, a in cached_latency_lists(stream, u)[dst_node]:
        if s >= x and a <= y:
            dur = a - s
            if best is None or dur < best:
                best = dur
    return best
