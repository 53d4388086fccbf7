"""Volumes of shortest paths between temporal nodes.

The sweep advances over consecutive event times, maintaining for every node
the temporal distance from the source and the volume of the set of shortest
paths reaching it.  Crossing an open gap ]t, t'[ multiplies volumes by
sigma * (t'-t)^d / d! terms (one per shortest path of length d in the gap
graph); arriving exactly at t' adds the volumes of neighbors one link closer.

Tables from a fixed source are cached on the stream, so repeated queries
(contribution and betweenness make many) cost one sweep per source.
"""

from bisect import bisect_right
from math import factorial
from typing import NamedTuple
from weakref import WeakKeyDictionary

from .numbers import Q
from .static_graph import bfs_counts
from .stream import StreamError
from .volumes import V_UNIT, V_ZERO, Volume, vol_add, vol_mul


class VspResult(NamedTuple):
    volume: Volume
    distance: object  # int, or None when unreachable


def segment_volume(g_plus, x, w, t, t2):
    """Volume of the shortest paths from x to w that start and arrive
    strictly inside ]t, t2[, whose constant graph is `g_plus`."""
    res = bfs_counts(g_plus, x)
    d = res.dist.get(w)
    if d is None:
        return V_ZERO
    return _gap_volume(res.count[w], t2 - t, d)


def _gap_volume(sigma, span, d):
    if d == 0:
        return V_UNIT
    return Volume(sigma * span**d / factorial(d), d)


def _advance(stream, t, t2, dist_t, vol_t):
    """One sweep step from event time t to the next time t2."""
    g_next = stream.graph_at(t2)
    g_plus = stream.graph_between(t, t2)
    order = {v: k for k, v in enumerate(stream.nodes)}

    # distances: a merge of the carried-over distances (list X) and a BFS of
    # g_next (queue Q); both fronts are non-decreasing in d.  Ties take X
    # first, then the lower node index.
    xs = sorted(((d, order[w], w) for w, d in dist_t.items()))
    xi = 0
    queue = []
    qi = 0
    dist = {}
    while xi < len(xs) or qi < len(queue):
        if qi >= len(queue) or (xi < len(xs) and xs[xi][0] <= queue[qi][0]):
            d, _, w = xs[xi]
            xi += 1
        else:
            d, w = queue[qi]
            qi += 1
        if w in dist:
            continue
        dist[w] = d
        for y in g_next.neighbors(w):
            if y not in dist:
                queue.append((d + 1, y))

    # volumes, in increasing distance so strictly-closer terms are final
    span = t2 - t
    vol = {}
    for w in sorted(dist, key=lambda w: (dist[w], order[w])):
        acc = V_ZERO
        dw = dist[w]
        gap = bfs_counts(g_plus, w)
        for x, dx in dist_t.items():
            dp = gap.dist.get(x)
            if dp is not None and dx + dp == dw:
                acc = vol_add(
                    acc, vol_mul(vol_t[x], _gap_volume(gap.count[x], span, dp))
                )
        for y in g_next.neighbors(w):
            if dist.get(y) == dw - 1:
                acc = vol_add(acc, vol[y])
        vol[w] = acc
    return dist, vol


class SweepTables:
    """Distance/volume tables from one source temporal node, evaluated at
    every event time up to omega, with cheap extension to off-event times."""

    def __init__(self, stream, i, u):
        self.stream = stream
        self.source = (i, u)
        times = [i]
        for t in stream.event_times():
            if t > i:
                times.append(t)
        if times[-1] < stream.omega:
            times.append(stream.omega)
        init = bfs_counts(stream.graph_at(i), u)
        dist = dict(init.dist)
        vol = {w: Volume(Q(init.count[w]), 0) for w in dist}
        states = [(dist, vol)]
        for t, t2 in zip(times, times[1:]):
            dist, vol = _advance(stream, t, t2, dist, vol)
            states.append((dist, vol))
        self.times = times
        self.states = states
        self._extensions = {}

    def state_at(self, j):
        """(dist, vol) maps at time j >= source time."""
        k = bisect_right(self.times, j) - 1
        if k < 0:
            raise StreamError("query time %s before source time %s"
                              % (j, self.source[0]))
        if self.times[k] == j:
            return self.states[k]
        state = self._extensions.get(j)
        if state is None:
            dist, vol = self.states[k]
            state = _advance(self.stream, self.times[k], j, dist, vol)
            self._extensions[j] = state
        return state


_CACHE = WeakKeyDictionary()


def sweep_tables(stream, i, u):
    """Cached SweepTables for source (i, u)."""
    per_stream = _CACHE.get(stream)
    if per_stream is None:
        per_stream = {}
        _CACHE[stream] = per_stream
    tables = per_stream.get((i, u))
    if tables is None:
        tables = SweepTables(stream, i, u)
        per_stream[(i, u)] = tables
    return tables


def vsp(stream, src, dst):
    """Volume of the shortest paths from src to dst, with the temporal
    distance; ((0,0), None) when dst is unreachable."""
    stream.check_temporal_node(src)
    stream.check_temporal_node(dst)
    if src.time > dst.time:
        raise StreamError("source time %s after destination time %s"
                          % (src.time, dst.time))
    dist, vol = sweep_tables(stream, src.time, src.node).state_at(dst.time)
    d = dist.get(dst.node)
    if d is None:
        return VspResult(V_ZERO, None)
    return VspResult(vol[dst.node], d)


def reachable(stream, src, dst):
    """True iff some path leads from src to dst (the empty path counts)."""
    if src.time > dst.time:
        return False
    return vsp(stream, src, dst).distance is not None
