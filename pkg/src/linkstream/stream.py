"""Link streams: nodes linked over unions of disjoint closed time intervals.

A stream lives on a window [alpha, omega]; each unordered node pair carries a
normalized set of maximal presence intervals.  Event times are the interval
bounds; the instantaneous graph only changes there.
"""

from bisect import bisect_left, bisect_right
from typing import NamedTuple

from .numbers import parse_time


class StreamError(ValueError):
    pass


class TemporalNode(NamedTuple):
    time: object  # exact rational
    node: str

    def __repr__(self):
        return "(%s,%s)" % (self.time, self.node)


class IntervalSet:
    """Sorted list of pairwise disjoint closed intervals [b, e], b <= e.
    Overlapping or touching intervals merge on normalization."""

    __slots__ = ("intervals",)

    def __init__(self, intervals=()):
        merged = []
        for b, e in sorted(intervals):
            if b > e:
                raise StreamError("interval with b > e: [%s, %s]" % (b, e))
            if merged and b <= merged[-1][1]:
                pb, pe = merged[-1]
                merged[-1] = (pb, max(pe, e))
            else:
                merged.append((b, e))
        self.intervals = merged

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __eq__(self, other):
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __contains__(self, t):
        for b, e in self.intervals:
            if b <= t <= e:
                return True
            if b > t:
                break
        return False

    def bounds(self):
        for b, e in self.intervals:
            yield b
            yield e


class SnapshotGraph:
    """Static undirected graph at one instant (or over one open gap)."""

    __slots__ = ("nodes", "adjacency")

    def __init__(self, nodes, edges):
        self.nodes = tuple(nodes)
        adj = {v: [] for v in self.nodes}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency = adj

    @property
    def edges(self):
        return {
            frozenset((u, v)) for u, nbrs in self.adjacency.items() for v in nbrs
        }

    def neighbors(self, v):
        return self.adjacency[v]


class LinkStream:
    """Immutable after construction; snapshot graphs are cached lazily."""

    def __init__(self, alpha, omega, nodes, presence):
        if alpha > omega:
            raise StreamError("alpha > omega")
        self.alpha = alpha
        self.omega = omega
        self.nodes = tuple(sorted(set(nodes)))
        self.presence = {}
        for pair, ivs in presence.items():
            u, v = pair
            if u == v:
                raise StreamError("self-link on node %r" % u)
            if u not in self.nodes or v not in self.nodes:
                raise StreamError("link on unknown node in pair %r" % (pair,))
            key = (u, v) if u < v else (v, u)
            if not isinstance(ivs, IntervalSet):
                ivs = IntervalSet(ivs)
            if key in self.presence:
                ivs = IntervalSet(list(self.presence[key]) + list(ivs))
            for b, e in ivs:
                if b < alpha or e > omega:
                    raise StreamError(
                        "interval [%s, %s] outside [%s, %s]" % (b, e, alpha, omega)
                    )
            if len(ivs):
                self.presence[key] = ivs
        times = set()
        for ivs in self.presence.values():
            times.update(ivs.bounds())
        self._event_times = sorted(times)
        # snapshot caches: index i -> graph at event time i; gap index g ->
        # graph on the open gap before event time g (g == len(T) is the gap
        # after the last event time; with no event times, gap 0 covers all).
        self._at_event = {}
        self._in_gap = {}

    # -- basic queries ----------------------------------------------------

    def segment_count(self):
        """Total number of maximal presence intervals."""
        return sum(len(ivs) for ivs in self.presence.values())

    def event_times(self):
        return list(self._event_times)

    def _check_time(self, t):
        if t < self.alpha or t > self.omega:
            raise StreamError("time %s outside [%s, %s]" % (t, self.alpha, self.omega))

    def graph_at(self, t):
        """The instantaneous graph G_t."""
        self._check_time(t)
        ev = self._event_times
        i = bisect_left(ev, t)
        if i < len(ev) and ev[i] == t:
            g = self._at_event.get(i)
            if g is None:
                g = self._build_snapshot(t)
                self._at_event[i] = g
            return g
        g = self._in_gap.get(i)
        if g is None:
            g = self._build_snapshot(t)
            self._in_gap[i] = g
        return g

    def slot_of(self, t):
        """Opaque snapshot-constancy key: equal for times with identical G_t."""
        ev = self._event_times
        i = bisect_left(ev, t)
        if i < len(ev) and ev[i] == t:
            return ("event", i)
        return ("gap", i)

    def _build_snapshot(self, t):
        edges = [pair for pair, ivs in self.presence.items() if t in ivs]
        return SnapshotGraph(self.nodes, edges)

    def graph_between(self, t, t2):
        """The constant graph on the open gap ]t, t2[ (no event time may lie
        strictly inside)."""
        if not t < t2:
            raise StreamError("graph_between needs t < t2")
        ev = self._event_times
        if bisect_right(ev, t) != bisect_left(ev, t2):
            raise StreamError(
                "event time strictly inside ]%s, %s[" % (t, t2)
            )
        return self.graph_at((t + t2) / 2)

    def check_temporal_node(self, tn):
        self._check_time(tn.time)
        if tn.node not in self.nodes:
            raise StreamError("unknown node %r" % tn.node)

    # -- serialization ----------------------------------------------------

    def serialize(self):
        lines = ["%s %s" % (self.alpha, self.omega)]
        for (u, v) in sorted(self.presence):
            for b, e in self.presence[(u, v)]:
                lines.append("%s %s %s %s" % (u, v, b, e))
        return "\n".join(lines) + "\n"


def parse_stream(text):
    """Parse the link-stream file format.

    Line 1 holds `alpha omega`; every following non-comment line is
    `u v b e` declaring a presence interval [b, e] for the pair uv.
    `#` starts a comment.  Overlapping or touching intervals on one pair
    are merged silently.
    """
    header = None
    raw = {}
    nodes = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise StreamError("line %d: expected `alpha omega`" % lineno)
            try:
                header = (parse_time(fields[0]), parse_time(fields[1]))
            except ValueError as exc:
                raise StreamError("line %d: %s" % (lineno, exc)) from None
            continue
        if len(fields) != 4:
            raise StreamError("line %d: expected `u v b e`" % lineno)
        u, v = fields[0], fields[1]
        if u == v:
            raise StreamError("line %d: self-link on node %r" % (lineno, u))
        try:
            b, e = parse_time(fields[2]), parse_time(fields[3])
        except ValueError as exc:
            raise StreamError("line %d: %s" % (lineno, exc)) from None
        if b > e:
            raise StreamError("line %d: interval with b > e" % lineno)
        nodes.update((u, v))
        key = (u, v) if u < v else (v, u)
        raw.setdefault(key, []).append((b, e))
    if header is None:
        raise StreamError("missing `alpha omega` header line")
    alpha, omega = header
    for key, ivs in raw.items():
        for b, e in ivs:
            if b < alpha or e > omega:
                raise StreamError(
                    "pair %s %s: interval [%s, %s] outside [%s, %s]"
                    % (key[0], key[1], b, e, alpha, omega)
                )
    return LinkStream(alpha, omega, nodes, raw)
