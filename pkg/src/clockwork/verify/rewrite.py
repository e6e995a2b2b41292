"""Local rewrites of PD diagrams.

Every rewrite works on the raw crossing list.  New crossings are laid out in
a small local frame whose four directions, counterclockwise, are E, N, W, S;
``crossing_from_slots`` turns such a frame into PD ports.  Arcs that end up
glued together are merged with a union-find, and components are re-traced
afterwards, so surgeries that merge or split components need no special
handling.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..braids import crossing_from_slots
from ..diagram import LEFT, RIGHT, Diagram, DiagramError, build_diagram

E, N, W, S = 0, 1, 2, 3


class RewriteError(DiagramError):
    """The requested site does not admit the requested move."""


@dataclass(frozen=True)
class RewriteSite:
    kind: str          # "arc" | "crossing" | "arc-pair" | "region"
    ids: tuple
    variant: str = ""


class _Draft:
    """Mutable copy of a diagram's raw data."""

    def __init__(self, d: Diagram):
        self.d = d
        self.crossings = {c.id: [list(c.ports), c.over_dir] for c in d.crossings}
        self.arc_color = {a: d.colors[k] for a, k in d.arc_component.items()}
        self.arcs = set(d.arc_component)
        self.joins: list = []
        self._next_cid = d.n + 1
        self._next_arc = max(self.arcs) + 1

    def new_arc(self, color) -> int:
        a = self._next_arc
        self._next_arc += 1
        self.arcs.add(a)
        self.arc_color[a] = color
        return a

    def add_crossing(self, ports, o) -> int:
        cid = self._next_cid
        self._next_cid += 1
        self.crossings[cid] = [list(ports), o]
        return cid

    def set_head(self, a: int, new: int):
        """Point the head end of arc ``a`` at arc ``new`` instead."""
        cid, port = self.d.arc_head[a]
        self.crossings[cid][0][port] = new

    def remove_crossing(self, cid: int):
        del self.crossings[cid]

    def drop_arc(self, a: int):
        self.arcs.discard(a)

    def join(self, a: int, b: int):
        self.joins.append((a, b))

    def finish(self, name: str | None = None, outer=None) -> Diagram:
        parent = {a: a for a in self.arcs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.joins:
            ra, rb = find(a), find(b)
            if ra != rb:
                if self.arc_color[ra] != self.arc_color[rb]:
                    raise RewriteError("surgery joins strands of different colors")
                parent[max(ra, rb)] = min(ra, rb)
        xs = [(tuple(find(a) for a in ports), o) for _, (ports, o) in sorted(self.crossings.items())]
        arcs = sorted({find(a) for a in self.arcs})
        arc_component, colors = _trace_components(xs, arcs, self.arc_color)
        out = outer or self.d.outer
        arc, side = find(out[0]) if out[0] in parent else None, out[1]
        if arc not in arc_component:
            arc, side = arcs[0], LEFT
        return build_diagram(name or self.d.name, colors, arc_component, xs, (arc, side))


def _trace_components(xs, arcs, arc_color):
    succ = {}
    for ports, o in xs:
        oi, oo = (1, 3) if o == "ccw" else (3, 1)
        succ[ports[0]] = ports[2]
        succ[ports[oi]] = ports[oo]
    arc_component, colors, k = {}, {}, 0
    for a in arcs:
        if a in arc_component:
            continue
        k += 1
        colors[k] = arc_color[a]
        cur = a
        while cur not in arc_component:
            if arc_color[cur] != colors[k]:
                raise RewriteError("a component would carry two colors")
            arc_component[cur] = k
            cur = succ.get(cur, cur)
    return arc_component, colors


def _split_arc(dr: _Draft, a: int, pieces: int) -> list:
    """Cut arc ``a`` into ``pieces`` consecutive arcs; the first keeps the id ``a``."""
    col = dr.arc_color[a]
    free = a not in dr.d.arc_head
    ids = [a] + [dr.new_arc(col) for _ in range(pieces - 1)]
    if free:
        ids.append(a)
    else:
        last = dr.new_arc(col)
        dr.set_head(a, last)
        ids.append(last)
    return ids  # pieces + 1 ids: the arcs between successive cut points, then the exit arc


# -- Reidemeister I ------------------------------------------------------------------


def apply_r1(d: Diagram, site: int, variant: str, side: str = LEFT) -> Diagram:
    """Add a curl on arc ``site`` (``curl+``/``curl-``) or remove the curl at crossing ``site``.

    ``side`` says whether the loop lies to the left (counterclockwise loop) or
    to the right of the strand; ``curl+`` gives a positive crossing.
    """
    if variant == "remove":
        return _remove_curl(d, site)
    if variant not in ("curl+", "curl-"):
        raise RewriteError(f"unknown R1 variant {variant!r}")
    if site not in d.arc_component:
        raise RewriteError(f"no arc {site}")
    dr = _Draft(d)
    a, loop, out = _split_arc(dr, site, 2)
    positive = variant == "curl+"
    # the strand enters from S; the loop is the middle piece
    if side == LEFT:
        slots = [out, loop, loop, a]       # E N W S: leaves N, returns from W, exits E
        first_in, second_in = S, W
    elif side == RIGHT:
        slots = [loop, loop, out, a]       # leaves N, returns from E, exits W
        first_in, second_in = S, E
    else:
        raise RewriteError(f"unknown side {side!r}")
    # a positive crossing on a left loop has the first passage under
    first_under = positive == (side == LEFT)
    under, over = (first_in, second_in) if first_under else (second_in, first_in)
    dr.add_crossing(*crossing_from_slots(slots, under, over))
    return dr.finish()


def curl_arcs(d: Diagram, cid: int):
    """(loop arc, in arc, out arc) when crossing ``cid`` is a curl, else ``None``."""
    c = d.crossing(cid)
    p = c.ports
    for k in range(4):
        if p[k] == p[(k + 1) % 4]:
            ins = [q for q in (0, c.over_in_port) if q not in (k, (k + 1) % 4)]
            outs = [q for q in (2, c.over_out_port) if q not in (k, (k + 1) % 4)]
            return p[k], p[ins[0]], p[outs[0]]
    return None


def _remove_curl(d: Diagram, cid: int) -> Diagram:
    found = curl_arcs(d, cid) if 1 <= cid <= d.n else None
    if found is None:
        raise RewriteError(f"crossing {cid} is not a curl")
    loop, a_in, a_out = found
    dr = _Draft(d)
    dr.remove_crossing(cid)
    if loop not in (a_in, a_out):
        dr.drop_arc(loop)
    dr.join(a_in, a_out)
    return dr.finish()


# -- Reidemeister II -----------------------------------------------------------------


def apply_r2(d: Diagram, a: int, b: int, region: int, over: str = "a") -> Diagram:
    """Push arc ``a`` across arc ``b`` through their common region.

    ``over`` picks which strand lies on top at both new crossings.
    """
    if a == b:
        raise RewriteError("R2 needs two distinct arcs")
    sides_a = [s for s in (LEFT, RIGHT) if d.side_region[(a, s)] == region]
    sides_b = [s for s in (LEFT, RIGHT) if d.side_region[(b, s)] == region]
    if not sides_a or not sides_b:
        raise RewriteError("both arcs must border the region")
    if over not in ("a", "b"):
        raise RewriteError(f"unknown R2 variant {over!r}")
    # frame: the region lies north of a and south of b
    a_east = sides_a[0] == LEFT
    b_east = sides_b[0] == RIGHT
    dr = _Draft(d)
    a0, a1, a2 = _split_arc(dr, a, 2)
    b0, b1, b2 = _split_arc(dr, b, 2)
    west_a, east_a = (a0, a2) if a_east else (a2, a0)
    west_b, east_b = (b0, b2) if b_east else (b2, b0)
    # a bulges north through b: crossing xl on the west, xr on the east
    xl = [b1, a1, west_b, west_a]
    xr = [east_b, a1, b1, east_a]
    a_in_l, a_in_r = (S, N) if a_east else (N, S)
    b_in = W if b_east else E
    for slots, a_in in ((xl, a_in_l), (xr, a_in_r)):
        if over == "a":
            dr.add_crossing(*crossing_from_slots(slots, b_in, a_in))
        else:
            dr.add_crossing(*crossing_from_slots(slots, a_in, b_in))
    return dr.finish()


def r2_sites(d: Diagram) -> list:
    """All (a, b, region) triples for R2 insertion with ``a < b``."""
    out = []
    for r in d.regions:
        arcs = sorted({a for a, _ in r.sides})
        for i, a in enumerate(arcs):
            for b in arcs[i + 1:]:
                out.append((a, b, r.id))
    return out


def r2_bigon(d: Diagram, region: int):
    """(over edge, under edge, crossing pair) if ``region`` is a removable bigon."""
    r = d.regions[region]
    cids = {c for c, _ in r.corners}
    arcs = {a for a, _ in r.sides}
    if len(r.corners) != 2 or len(cids) != 2 or len(arcs) != 2:
        return None
    over = under = None
    for e in arcs:
        (tc, tp), (hc, hp) = d.arc_tail[e], d.arc_head[e]
        tcr, hcr = d.crossing(tc), d.crossing(hc)
        if tp == tcr.over_out_port and hp == hcr.over_in_port:
            over = e
        elif tp == 2 and hp == 0:
            under = e
    if over is None or under is None:
        return None
    return over, under, tuple(sorted(cids))


def remove_r2(d: Diagram, region: int) -> Diagram:
    found = r2_bigon(d, region)
    if found is None:
        raise RewriteError(f"region {region} is not an R2 bigon")
    over, under, cids = found
    dr = _Draft(d)
    for e in (over, under):
        (tc, tp), (hc, hp) = d.arc_tail[e], d.arc_head[e]
        a_in = d.crossing(tc).ports[(tp + 2) % 4]
        a_out = d.crossing(hc).ports[(hp + 2) % 4]
        dr.drop_arc(e)
        dr.join(a_in, a_out)
    for c in cids:
        dr.remove_crossing(c)
    return dr.finish()


# -- Reidemeister III ----------------------------------------------------------------


def r3_triangle(d: Diagram, region: int):
    """Triangle data ``{(crossing, edge): port}`` if ``region`` admits R3, else ``None``."""
    r = d.regions[region]
    cids = [c for c, _ in r.corners]
    edges = [a for a, _ in r.sides]
    if len(cids) != 3 or len(set(cids)) != 3 or len(set(edges)) != 3:
        return None
    ports = {}
    pattern = []
    for e in edges:
        ends = [d.arc_tail.get(e), d.arc_head.get(e)]
        if None in ends or {ends[0][0], ends[1][0]} - set(cids) or ends[0][0] == ends[1][0]:
            return None
        flags = []
        for cid, p in ends:
            ports[(cid, e)] = p
            c = d.crossing(cid)
            flags.append(p in (c.over_in_port, c.over_out_port))
        pattern.append(flags)
    if not any(f[0] == f[1] for f in pattern):
        return None
    return ports


def apply_r3(d: Diagram, region: int) -> Diagram:
    """Slide a strand across the crossing opposite a triangle face."""
    ports = r3_triangle(d, region)
    if ports is None:
        raise RewriteError(f"region {region} is not a valid R3 triangle")
    dr = _Draft(d)
    edge_ends: dict = {}
    for (cid, e), p in ports.items():
        edge_ends.setdefault(e, []).append((cid, p))
    for e, ((c1, p1), (c2, p2)) in edge_ends.items():
        x1 = d.crossing(c1).ports[(p1 + 2) % 4]
        x2 = d.crossing(c2).ports[(p2 + 2) % 4]
        for (c, p), x_other in (((c1, p1), x2), ((c2, p2), x1)):
            dr.crossings[c][0][p] = x_other
            dr.crossings[c][0][(p + 2) % 4] = e
    return dr.finish()


def r3_sites(d: Diagram) -> list:
    return [r.id for r in d.regions if r3_triangle(d, r.id) is not None]


# -- crossing surgeries --------------------------------------------------------------


def switch_crossing(d: Diagram, cid: int) -> Diagram:
    dr = _Draft(d)
    ports, o = dr.crossings[cid]
    if o == "ccw":
        dr.crossings[cid] = [ports[1:] + ports[:1], "cw"]
    else:
        dr.crossings[cid] = [ports[3:] + ports[:3], "ccw"]
    return dr.finish()


def _braid_frame(c) -> dict:
    """Ports of a crossing as SW, SE, NE, NW with both strands running north."""
    if c.over_dir == "ccw":
        return {"SW": 0, "SE": 1, "NE": 2, "NW": 3}
    return {"SW": 3, "SE": 0, "NE": 1, "NW": 2}


def replace_crossing(d: Diagram, cid: int, word) -> Diagram:
    """Replace a crossing by a two-strand braid word.

    Both strands are turned to run north; the crossing itself is the word
    ``[1]`` (positive) or ``[-1]`` (negative), the empty word is the oriented
    smoothing.
    """
    c = d.crossing(cid)
    f = _braid_frame(c)
    dr = _Draft(d)
    dr.remove_crossing(cid)
    cur = [c.ports[f["SW"]], c.ports[f["SE"]]]
    for g in word:
        if abs(g) != 1:
            raise RewriteError("two-strand words use only 1 and -1")
        sw, se = cur
        nw, ne = dr.new_arc(dr.arc_color[se]), dr.new_arc(dr.arc_color[sw])
        slots = [ne, nw, sw, se]
        dr.add_crossing(*crossing_from_slots(slots, 3, 2) if g > 0 else crossing_from_slots(slots, 2, 3))
        cur = [nw, ne]
    dr.join(cur[0], c.ports[f["NW"]])
    dr.join(cur[1], c.ports[f["NE"]])
    return dr.finish()


def smooth_crossing(d: Diagram, cid: int) -> Diagram:
    return replace_crossing(d, cid, [])


def insert_meridian(d: Diagram, arc: int, color: str, positive: bool = True) -> Diagram:
    """Clasp a small new circle of the given color around ``arc``."""
    if arc not in d.arc_component:
        raise RewriteError(f"no arc {arc}")
    dr = _Draft(d)
    a0, a1, a2 = _split_arc(dr, arc, 2)
    m1, m2 = dr.new_arc(color), dr.new_arc(color)
    # strand runs north; the circle runs east below the midpoint and west above it
    low = [m1, a1, m2, a0]
    high = [m1, a2, m2, a1]
    circle_on_top_low = positive
    if circle_on_top_low:
        dr.add_crossing(*crossing_from_slots(low, S, W))
        dr.add_crossing(*crossing_from_slots(high, E, S))
    else:
        dr.add_crossing(*crossing_from_slots(low, W, S))
        dr.add_crossing(*crossing_from_slots(high, S, E))
    return dr.finish()


# -- canonical form ------------------------------------------------------------------


def canonical_form(d: Diagram) -> tuple:
    """Arc-renumbering-invariant description of the crossings and colors.

    Minimum over all starting arcs of the relabeling that walks the starting
    component first and then each further component from the first arc of
    it met at a crossing.  The unbounded-region choice is ignored.
    """
    best = None
    for start in d.arcs:
        label: dict = {}
        order: list = []
        comp_order = []

        def walk(a0):
            comp_order.append(d.colors[d.arc_component[a0]])
            a = a0
            while a not in label:
                label[a] = len(label) + 1
                order.append(a)
                a = d.next_arc(a)

        walk(start)
        k = 0
        while k < len(order):
            a = order[k]
            k += 1
            if a in d.arc_head:
                c = d.crossing(d.arc_head[a][0])
                for p in (0, c.over_in_port):
                    if c.ports[p] not in label:
                        walk(c.ports[p])
        for _, a in sorted((d.colors[d.arc_component[a]], a) for a in d.arcs):
            if a not in label:
                walk(a)
        xs = tuple(sorted((tuple(label[a] for a in c.ports), c.over_dir) for c in d.crossings))
        key = (xs, tuple(comp_order))
        if best is None or key < best:
            best = key
    return best
