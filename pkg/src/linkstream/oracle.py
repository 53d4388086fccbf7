"""Brute-force grid oracle for validation.

Time is discretized on a uniform grid; temporal paths are enumerated by
dynamic programming over (grid time, node) states.  Everything here is
independent of the volume arithmetic and the sweep algorithms: the oracle
only reads the stream model and re-implements its own static-graph
subroutines, so agreement with the exact pipeline is meaningful evidence.

Counts converge to exact sizes as count * step^dim when the step shrinks;
durations and path lengths are exact once the step divides the event-time
lattice.
"""

from fractions import Fraction


class GridError(ValueError):
    pass


class GridSpec:
    """Uniform time grid of a given exact step; every event time and query
    time must be a whole multiple of the step."""

    __slots__ = ("step",)

    def __init__(self, step):
        step = Fraction(step)
        if step <= 0:
            raise GridError("grid step must be > 0, got %s" % step)
        self.step = step

    def index(self, t):
        k = Fraction(t) / self.step
        if k.denominator != 1:
            raise GridError("time %s is not on the grid of step %s"
                            % (t, self.step))
        return int(k)

    def time(self, k):
        return k * self.step

    def check_stream(self, stream):
        for t in [stream.alpha, stream.omega] + stream.event_times():
            self.index(t)


# -- local static-graph helpers (deliberately not shared with the pipeline) --


def _static_dist_counts(graph, source):
    """BFS distances and shortest-path counts inside one snapshot."""
    dist = {source: 0}
    count = {source: 1}
    queue = [source]
    head = 0
    while head < len(queue):
        w = queue[head]
        head += 1
        for y in graph.neighbors(w):
            if y not in dist:
                dist[y] = dist[w] + 1
                count[y] = count[w]
                queue.append(y)
            elif dist[y] == dist[w] + 1:
                count[y] += count[w]
    return dist, count


def _reach_set(graph, sources):
    seen = set(sources)
    queue = list(sources)
    head = 0
    while head < len(queue):
        w = queue[head]
        head += 1
        for y in graph.neighbors(w):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _walk_counts(graph, maxlen):
    """walks[r][x][y] = number of walks of length r from x to y, r=1..maxlen."""
    one = {x: {y: 1 for y in graph.neighbors(x)} for x in graph.nodes}
    walks = [None, one]
    for _ in range(2, maxlen + 1):
        prev = walks[-1]
        nxt = {}
        for x, row in prev.items():
            acc = {}
            for y, c in row.items():
                for z in graph.neighbors(y):
                    acc[z] = acc.get(z, 0) + c
            if acc:
                nxt[x] = acc
        walks.append(nxt)
    return walks


def _has_edges(graph):
    return any(graph.adjacency[v] for v in graph.nodes)


# -- shortest paths -----------------------------------------------------------


def grid_count_shortest(stream, src, dst, grid):
    """(minimal length, number of minimal-length paths) over paths whose
    crossing times all lie on the grid inside [src.time, dst.time];
    (None, 0) when unreachable.

    count * step^dim approaches the exact size at first order in the step;
    Richardson extrapolation across two steps (2*E(step/2) - E(step))
    cancels the leading boundary bias.
    """
    grid.check_stream(stream)
    stream.check_temporal_node(src)
    stream.check_temporal_node(dst)
    k0, k1 = grid.index(src.time), grid.index(dst.time)
    if k0 > k1:
        return (None, 0)
    avail = {src.node: (0, 1)}
    for k in range(k0, k1 + 1):
        g = stream.graph_at(grid.time(k))
        if not _has_edges(g):
            continue
        cand = {}
        for x, (lx, cx) in avail.items():
            dist, count = _static_dist_counts(g, x)
            for y, dy in dist.items():
                if dy == 0:
                    continue
                ly = lx + dy
                cy = cx * count[y]
                cur = cand.get(y)
                if cur is None or ly < cur[0]:
                    cand[y] = (ly, cy)
                elif ly == cur[0]:
                    cand[y] = (ly, cur[1] + cy)
        for y, (ly, cy) in cand.items():
            cur = avail.get(y)
            if cur is None or ly < cur[0]:
                avail[y] = (ly, cy)
            elif ly == cur[0]:
                avail[y] = (ly, cur[1] + cy)
    return avail.get(dst.node, (None, 0))


# -- fastest paths ------------------------------------------------------------


def grid_fastest(stream, src, dst_node, grid, arrive_by=None):
    """Minimal duration over grid-timed paths from src to dst_node arriving
    by `arrive_by` (default omega); None when unreachable."""
    grid.check_stream(stream)
    stream.check_temporal_node(src)
    if dst_node not in stream.nodes:
        raise GridError("unknown node %r" % dst_node)
    if src.node == dst_node:
        return Fraction(0)
    limit = stream.omega if arrive_by is None else arrive_by
    k0, k1 = grid.index(src.time), grid.index(limit)
    best = None
    for ks in range(k0, k1 + 1):
        cur = {src.node}
        for ka in range(ks, k1 + 1):
            if best is not None and (ka - ks) >= best:
                break
            cur = _reach_set(stream.graph_at(grid.time(ka)), cur)
            if dst_node in cur:
                if best is None or ka - ks < best:
                    best = ka - ks
                break
        if best == 0:
            break
    return None if best is None else best * grid.step


# -- contribution -------------------------------------------------------------


def _exact_start_arrivals(stream, grid, u, w, k_lo, k_hi):
    """arrival[s] = earliest grid index a with a path u -> w whose first
    crossing is exactly at grid index s and last crossing at a; None when w
    is never reached by k_hi."""
    arrivals = {}
    for ks in range(k_lo, k_hi + 1):
        g = stream.graph_at(grid.time(ks))
        if not g.neighbors(u):
            arrivals[ks] = None
            continue
        cur = _reach_set(g, [u])
        arrival = None
        if w in cur:
            arrival = ks
        else:
            prev_g = g
            for ka in range(ks + 1, k_hi + 1):
                g2 = stream.graph_at(grid.time(ka))
                if g2 is prev_g and not _has_edges(g2):
                    continue
                prev_g = g2
                grown = _reach_set(g2, cur)
                if len(grown) > len(cur):
                    cur = grown
                    if w in cur:
                        arrival = ka
                        break
        arrivals[ks] = arrival
    return arrivals


class _PairTables:
    """Per (first crossing s, last crossing a): minimal length, count of
    minimal-length paths, and counts through each queried temporal node."""

    __slots__ = ("length", "count", "through")

    def __init__(self, stream, grid, u, w, ks, ka, tv_idx):
        maxlen = len(stream.nodes) - 1
        walk_cache = {}

        def walks_at(k):
            g = stream.graph_at(grid.time(k))
            key = id(g)
            got = walk_cache.get(key)
            if got is None:
                got = (g, _walk_counts(g, maxlen))
                walk_cache[key] = got
            return got[1]

        interior = [(kt, v) for kt, v in tv_idx
                    if v not in (u, w) and ks <= kt <= ka]
        snap_at = sorted({kt for kt, _ in interior})

        # forward: walks from u, first crossing exactly at ks, all crossings
        # in [ks, k]; avail[x][length] = count
        avail = {}
        arrived = [0] * (maxlen + 1)
        fwd_snap = {}
        snap_i = 0
        for k in range(ks, ka + 1):
            walks = walks_at(k)
            new = {}
            if k == ks:
                for r in range(1, maxlen + 1):
                    for y, c in walks[r].get(u, {}).items():
                        new.setdefault(y, [0] * (maxlen + 1))[r] += c
            else:
                for x, lens in avail.items():
                    for r in range(1, maxlen + 1):
                        row = walks[r].get(x)
                        if not row:
                            continue
                        for lam in range(1, maxlen + 1 - r):
                            cx = lens[lam]
                            if cx:
                                for y, c in row.items():
                                    new.setdefault(
                                        y, [0] * (maxlen + 1)
                                    )[lam + r] += cx * c
            if k == ka:
                wl = new.get(w)
                if wl:
                    for lam in range(maxlen + 1):
                        arrived[lam] += wl[lam]
            for y, lens in new.items():
                tgt = avail.setdefault(y, [0] * (maxlen + 1))
                for lam in range(maxlen + 1):
                    tgt[lam] += lens[lam]
            while snap_i < len(snap_at) and snap_at[snap_i] == k:
                fwd_snap[k] = {x: list(lens) for x, lens in avail.items()}
                snap_i += 1

        self.length = None
        self.count = 0
        for lam in range(1, maxlen + 1):
            if arrived[lam]:
                self.length = lam
                self.count = arrived[lam]
                break

        self.through = {}
        if self.length is None:
            for kt, v in tv_idx:
                self.through[(kt, v)] = 0
            return

        need_bwd = sorted({kt for kt, v in interior}, reverse=True)
        bwd_snap = {}
        if need_bwd:
            avail_b = {}
            snap_j = 0
            for k in range(ka, ks - 1, -1):
                walks = walks_at(k)
                new = {}
                if k == ka:
                    for r in range(1, maxlen + 1):
                        for x, row in walks[r].items():
                            c = row.get(w)
                            if c:
                                new.setdefault(x, [0] * (maxlen + 1))[r] += c
                else:
                    for y, lens in avail_b.items():
                        for r in range(1, maxlen + 1):
                            for x, row in walks[r].items():
                                c = row.get(y)
                                if not c:
                                    continue
                                for lam in range(1, maxlen + 1 - r):
                                    cy = lens[lam]
                                    if cy:
                                        new.setdefault(
                                            x, [0] * (maxlen + 1)
                                        )[lam + r] += cy * c
                for x, lens in new.items():
                    tgt = avail_b.setdefault(x, [0] * (maxlen + 1))
                    for lam in range(maxlen + 1):
                        tgt[lam] += lens[lam]
                while snap_j < len(need_bwd) and need_bwd[snap_j] == k:
                    bwd_snap[k] = {x: list(lens)
                                   for x, lens in avail_b.items()}
                    snap_j += 1

        for kt, v in tv_idx:
            if v == u:
                self.through[(kt, v)] = self.count if kt == ks else 0
            elif v == w:
                self.through[(kt, v)] = self.count if kt == ka else 0
            elif kt < ks or kt > ka:
                self.through[(kt, v)] = 0
            else:
                fwd = fwd_snap.get(kt, {}).get(v)
                bwd = bwd_snap.get(kt, {}).get(v)
                total = 0
                if fwd and bwd:
                    for l1 in range(1, self.length):
                        total += fwd[l1] * bwd[self.length - l1]
                self.through[(kt, v)] = total


def _grid_contributions(stream, u, w, tvs, grid, window):
    """Riemann-sum estimates of the contribution of (u, w) to the
    betweenness of every temporal node in tvs, sharing one window scan."""
    if window is None:
        lo, hi = stream.alpha, stream.omega
    else:
        lo, hi = window
    k_lo, k_hi = grid.index(lo), grid.index(hi)
    tv_idx = [(grid.index(tv.time), tv.node) for tv in tvs]
    arrivals = _exact_start_arrivals(stream, grid, u, w, k_lo, k_hi)
    tables = {}

    def pair(ks):
        tab = tables.get(ks)
        if tab is None:
            tab = _PairTables(stream, grid, u, w, ks, arrivals[ks], tv_idx)
            tables[ks] = tab
        return tab

    totals = [Fraction(0)] * len(tvs)
    for kj in range(k_lo, k_hi + 1):
        dur = None
        length = None
        count = 0
        through = None
        for ki in range(kj, k_lo - 1, -1):
            ka = arrivals.get(ki)
            if ka is not None and ka <= kj:
                g = ka - ki
                if dur is None or g < dur:
                    dur = g
                    tab = pair(ki)
                    length = tab.length
                    count = tab.count
                    through = [tab.through[t] for t in tv_idx]
                elif g == dur:
                    tab = pair(ki)
                    if tab.length is not None and (
                        length is None or tab.length < length
                    ):
                        length = tab.length
                        count = tab.count
                        through = [tab.through[t] for t in tv_idx]
                    elif tab.length is not None and tab.length == length:
                        count += tab.count
                        through = [a + b for a, b in
                                   zip(through, [tab.through[t]
                                                 for t in tv_idx])]
            if count:
                for n, thr in enumerate(through):
                    if thr:
                        totals[n] += Fraction(thr, count)
    cell = grid.step * grid.step
    return [t * cell for t in totals]


def grid_contribution(stream, u, w, tv, grid, window=None):
    """Riemann-sum estimate of C_tv(u, w); converges as the step shrinks."""
    grid.check_stream(stream)
    stream.check_temporal_node(tv)
    return _grid_contributions(stream, u, w, [tv], grid, window)[0]


def grid_betweenness(stream, tvs, grid):
    """Riemann-sum betweenness estimates for several temporal nodes at once
    (one window scan per ordered node pair, shared across the queries)."""
    grid.check_stream(stream)
    for tv in tvs:
        stream.check_temporal_node(tv)
    totals = [Fraction(0)] * len(tvs)
    for u in stream.nodes:
        for w in stream.nodes:
            if u == w:
                continue
            part = _grid_contributions(stream, u, w, tvs, grid, None)
            totals = [a + b for a, b in zip(totals, part)]
    return totals
