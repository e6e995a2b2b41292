"""Oriented colored link diagrams as annotated PD codes.

Each crossing lists its four incident arcs counterclockwise, starting at the
incoming under-arc, and records whether the incoming over-arc sits one step
counterclockwise (``o=ccw``, port 1) or one step clockwise (``o=cw``, port 3)
from it.  The ports order is the rotation system of the planar 4-valent graph,
so faces, region indices and curvatures all come out of pure combinatorics.

Quadrant ``q`` of a crossing is the corner lying counterclockwise between
ports ``q`` and ``q+1``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

LEFT, RIGHT = "left", "right"


class DiagramError(ValueError):
    """Raised for malformed or non-planar PD input."""


@dataclass(frozen=True)
class Crossing:
    id: int
    ports: tuple  # four arc ids, CCW from the incoming under-arc
    over_dir: str  # "ccw" | "cw"

    @property
    def over_in_port(self) -> int:
        return 1 if self.over_dir == "ccw" else 3

    @property
    def over_out_port(self) -> int:
        return 3 if self.over_dir == "ccw" else 1

    @property
    def sign(self) -> int:
        # Right-handed convention: the over strand, turned a quarter turn
        # counterclockwise, points along the under strand.  With ports laid
        # out S, E, N, W and the under strand running S -> N this is the case
        # of the over strand running W -> E, i.e. entering at port 3.
        return 1 if self.over_dir == "cw" else -1

    def right_of_under(self, q: int) -> bool:
        return q in (0, 1)

    def right_of_over(self, q: int) -> bool:
        return q in ((1, 2) if self.over_dir == "ccw" else (3, 0))

    @property
    def low_quadrant(self) -> int:
        """The quadrant to the left of both strands (lowest region index)."""
        for q in range(4):
            if not self.right_of_under(q) and not self.right_of_over(q):
                return q
        raise AssertionError("unreachable")

    @property
    def high_quadrant(self) -> int:
        return (self.low_quadrant + 2) % 4

    def pd(self) -> str:
        return "X({},{},{},{}) o={}".format(*self.ports, self.over_dir)


@dataclass(frozen=True)
class Region:
    id: int
    corners: tuple  # ((crossing_id, quadrant), ...) in boundary order
    sides: tuple    # ((arc, side), ...) bounding this region


@dataclass
class Diagram:
    """A validated diagram; derived data is computed eagerly in ``__post_init__``."""

    name: str
    colors: dict              # component -> color label
    arc_component: dict       # arc id -> component
    crossings: tuple          # Crossing, ids 1..n in order
    outer: tuple              # (arc id, "left" | "right")

    regions: tuple = field(init=False, repr=False)
    corner_region: dict = field(init=False, repr=False)
    side_region: dict = field(init=False, repr=False)
    connected: bool = field(init=False)
    unbounded: int | None = field(init=False)
    index: dict = field(init=False, repr=False)
    arc_tail: dict = field(init=False, repr=False)
    arc_head: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.crossings = tuple(self.crossings)
        self._validate_arcs()
        self._trace_faces()
        self._check_planar()
        self.unbounded = self.side_region[self.outer] if self.connected else None
        self.index = self._alexander_indices() if self.connected else {}

    # -- basic accessors ------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.colors)

    @property
    def arcs(self) -> list:
        return sorted(self.arc_component)

    def crossing(self, cid: int) -> Crossing:
        return self.crossings[cid - 1]

    def free_arcs(self) -> list:
        return [a for a in self.arcs if a not in self.arc_tail]

    def corners(self) -> list:
        return [(c.id, q) for c in self.crossings for q in range(4)]

    def component_of_port(self, cid: int, port: int) -> int:
        return self.arc_component[self.crossing(cid).ports[port]]

    def strand_components(self, cid: int) -> tuple:
        """(under component, over component) at a crossing."""
        c = self.crossing(cid)
        return self.arc_component[c.ports[0]], self.arc_component[c.ports[1]]

    # -- validation -------------------------------------------------------
    def _validate_arcs(self):
        tails, heads = {}, {}
        for c in self.crossings:
            if len(c.ports) != 4:
                raise DiagramError(f"crossing {c.id} must have four ports")
            for a in c.ports:
                if a not in self.arc_component:
                    raise DiagramError(f"crossing {c.id} uses undeclared arc {a}")
            ends = {0: heads, 2: tails, c.over_in_port: heads, c.over_out_port: tails}
            for port, table in ends.items():
                a = c.ports[port]
                if a in table:
                    kind = "head" if table is heads else "tail"
                    raise DiagramError(f"arc {a} has two {kind} ends (used too often or misoriented)")
                table[a] = (c.id, port)
            ac = self.arc_component
            if ac[c.ports[0]] != ac[c.ports[2]]:
                raise DiagramError(f"crossing {c.id}: under-strand changes component")
            if ac[c.ports[1]] != ac[c.ports[3]]:
                raise DiagramError(f"crossing {c.id}: over-strand changes component")
        for a in self.arc_component:
            if (a in tails) != (a in heads):
                raise DiagramError(f"arc {a} is used an odd number of times")
        self.arc_tail, self.arc_head = tails, heads
        for k in set(self.arc_component.values()):
            if k not in self.colors:
                raise DiagramError(f"component {k} has no color")
        # each component must be a single closed strand
        for k in self.colors:
            arcs = [a for a, kk in self.arc_component.items() if kk == k]
            if not arcs:
                raise DiagramError(f"component {k} has no arcs")
            free = [a for a in arcs if a not in tails]
            if free:
                if len(arcs) != 1:
                    raise DiagramError(f"component {k}: a crossing-free arc must be the whole component")
                continue
            seen, a = set(), arcs[0]
            while a not in seen:
                seen.add(a)
                a = self.next_arc(a)
            if len(seen) != len(arcs):
                raise DiagramError(f"component {k} is not a single closed strand")
        if self.outer[0] not in self.arc_component or self.outer[1] not in (LEFT, RIGHT):
            raise DiagramError(f"dangling unbounded-region declaration {self.outer}")

    def next_arc(self, a: int) -> int:
        """The arc following ``a`` along its component."""
        if a not in self.arc_head:
            return a
        cid, port = self.arc_head[a]
        return self.crossing(cid).ports[(port + 2) % 4]

    def other_end(self, cid: int, port: int) -> tuple:
        a = self.crossing(cid).ports[port]
        tail, head = self.arc_tail[a], self.arc_head[a]
        return head if tail == (cid, port) else tail

    # -- faces --------------------------------------------------------------
    def _trace_faces(self):
        regions, corner_region, side_region = [], {}, {}
        for start in self.corners():
            if start in corner_region:
                continue
            rid = len(regions)
            cyc, cur = [], start
            while cur not in corner_region:
                corner_region[cur] = rid
                cyc.append(cur)
                cid, q = cur
                cur = self.other_end(cid, (q + 1) % 4)
            if cur != start:
                raise DiagramError("rotation system does not close up into faces")
            regions.append(cyc)
        for a in self.free_arcs():
            for side in (LEFT, RIGHT):
                side_region[(a, side)] = len(regions)
                regions.append([])
        for a, (cid, i) in self.arc_tail.items():
            side_region[(a, RIGHT)] = corner_region[(cid, (i - 1) % 4)]
            side_region[(a, LEFT)] = corner_region[(cid, i)]
            hc, j = self.arc_head[a]
            if (corner_region[(hc, j)], corner_region[(hc, (j - 1) % 4)]) != (
                side_region[(a, RIGHT)], side_region[(a, LEFT)]):
                raise DiagramError(f"arc {a}: inconsistent sides, rotation system is not planar")
        sides = [[] for _ in regions]
        for key in sorted(side_region):
            sides[side_region[key]].append(key)
        self.regions = tuple(Region(i, tuple(c), tuple(s)) for i, (c, s) in enumerate(zip(regions, sides)))
        self.corner_region = corner_region
        self.side_region = side_region

    def _pieces(self) -> list:
        """Connected pieces of the projection as sets of arcs."""
        parent = {a: a for a in self.arc_component}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.crossings:
            r = find(c.ports[0])
            for a in c.ports[1:]:
                parent[find(a)] = r
        groups: dict = {}
        for a in self.arc_component:
            groups.setdefault(find(a), set()).add(a)
        return sorted(groups.values(), key=min)

    def _check_planar(self):
        pieces = self._pieces()
        self.connected = len(pieces) == 1
        for arcs in pieces:
            cids = {self.arc_tail[a][0] for a in arcs if a in self.arc_tail}
            faces = {self.side_region[(a, s)] for a in arcs for s in (LEFT, RIGHT)}
            # a crossing-free circle counts as one vertex on one edge
            v, e = (len(cids), len(arcs)) if cids else (1, 1)
            if v - e + len(faces) != 2:
                raise DiagramError("non-planar rotation system (Euler characteristic check failed)")

    # -- indices ------------------------------------------------------------
    def _alexander_indices(self) -> dict:
        N = self.n_components
        comps = sorted(self.colors)
        pos = {k: i for i, k in enumerate(comps)}
        adj: dict = {r.id: [] for r in self.regions}
        for a, k in self.arc_component.items():
            lo, hi = self.side_region[(a, LEFT)], self.side_region[(a, RIGHT)]
            adj[lo].append((hi, pos[k], +1))
            adj[hi].append((lo, pos[k], -1))
        idx = {self.unbounded: (0,) * N}
        queue = deque([self.unbounded])
        while queue:
            r = queue.popleft()
            for s, k, step in adj[r]:
                p = list(idx[r])
                p[k] += step
                p = tuple(p)
                if s in idx:
                    if idx[s] != p:
                        raise DiagramError("inconsistent Alexander indices (embedding bug)")
                else:
                    idx[s] = p
                    queue.append(s)
        return idx

    def alexander_index_sum(self, rid: int) -> int:
        return sum(self.index[rid])

    def region_adjacency(self) -> dict:
        """Map from unordered region pair to the sorted list of shared arcs."""
        out: dict = {}
        for a in self.arcs:
            pair = frozenset((self.side_region[(a, LEFT)], self.side_region[(a, RIGHT)]))
            out.setdefault(pair, []).append(a)
        return out

    # -- serialization --------------------------------------------------------
    def to_pd(self) -> str:
        lines = [f"link {self.name}", f"components {self.n_components}"]
        lines += [f"color {k} {self.colors[k]}" for k in sorted(self.colors)]
        lines += [f"arc {a} component {self.arc_component[a]}" for a in self.arcs]
        lines += [c.pd() for c in self.crossings]
        lines.append(f"outer arc {self.outer[0]} side {self.outer[1]}")
        return "\n".join(lines) + "\n"

    def with_outer(self, arc: int, side: str) -> "Diagram":
        return Diagram(self.name, dict(self.colors), dict(self.arc_component), self.crossings, (arc, side))

    def recolored(self, mapping: dict) -> "Diagram":
        return Diagram(self.name, {k: mapping.get(k, v) for k, v in self.colors.items()},
                       dict(self.arc_component), self.crossings, self.outer)


# ---------------------------------------------------------------------------
# parsing

_X_RE = re.compile(r"^X\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*o\s*=\s*(ccw|cw)$")


def parse_diagram(text: str) -> Diagram:
    name, ncomp, outer = "unnamed", None, None
    colors, arcs, crossings = {}, {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        try:
            if words[0] == "link":
                name = " ".join(words[1:]) or name
            elif words[0] == "components":
                ncomp = int(words[1])
            elif words[0] == "color":
                colors[int(words[1])] = words[2]
            elif words[0] == "arc" and words[2] == "component":
                a = int(words[1])
                if a in arcs:
                    raise DiagramError(f"arc {a} declared twice")
                arcs[a] = int(words[3])
            elif words[0] == "outer":
                if words[1] != "arc" or words[3] != "side":
                    raise IndexError
                outer = (int(words[2]), words[4])
            elif line.startswith("X"):
                m = _X_RE.match(line.replace(" ", "").replace("o=", " o=")) or _X_RE.match(line)
                if not m:
                    raise IndexError
                crossings.append(Crossing(len(crossings) + 1, tuple(int(g) for g in m.groups()[:4]), m.group(5)))
            else:
                raise IndexError
        except (IndexError, ValueError) as e:
            if isinstance(e, DiagramError):
                raise
            raise DiagramError(f"line {lineno}: syntax error: {raw.strip()!r}") from None
    if ncomp is None:
        raise DiagramError("missing 'components' line")
    if outer is None:
        raise DiagramError("missing 'outer' declaration")
    if sorted(colors) != list(range(1, ncomp + 1)):
        raise DiagramError("colors must be given for components 1..N")
    if set(arcs.values()) - set(colors):
        raise DiagramError("arc assigned to an unknown component")
    return Diagram(name, colors, arcs, tuple(crossings), outer)


def load_diagram(path) -> Diagram:
    with open(path) as fh:
        return parse_diagram(fh.read())


# ---------------------------------------------------------------------------
# derived quantities


def faces(d: Diagram) -> list:
    return list(d.regions)


def alexander_indices(d: Diagram) -> dict:
    if not d.connected:
        raise DiagramError("projection not connected")
    return dict(d.index)


def crossing_sign(d: Diagram, c) -> int:
    if isinstance(c, int):
        c = d.crossing(c)
    return c.sign


def is_split(d: Diagram) -> bool:
    """True when the projection is disconnected."""
    return not d.connected


def curvature(d: Diagram, component: int) -> int:
    """Rotation number of one component's plane curve.

    Uses winding numbers of the curve around the faces:
    ``rot = sum_faces w(F) - sum_double_points w(v)``.  Faces of the
    sub-curve are unions of diagram regions glued along arcs and crossings of
    other components, so the sum is expanded over those cells.
    """
    if not d.connected:
        raise DiagramError("projection not connected")
    k = sorted(d.colors).index(component)
    w = {r: -p[k] for r, p in d.index.items()}
    total = sum(w.values())
    for a, comp in d.arc_component.items():
        if comp != component:
            total -= w[d.side_region[(a, LEFT)]]
    for c in d.crossings:
        under, over = d.strand_components(c.id)
        ws = [w[d.corner_region[(c.id, q)]] for q in range(4)]
        if under != component and over != component:
            total += ws[0]
        elif under == component and over == component:
            total -= sum(ws) // 4
    return total


def curvatures(d: Diagram) -> dict:
    return {k: curvature(d, k) for k in sorted(d.colors)}


def build_diagram(name: str, colors: dict, arc_component: dict, crossings: Iterable, outer) -> Diagram:
    """Construct a diagram from raw parts, numbering crossings 1..n."""
    xs = tuple(Crossing(i + 1, tuple(p), o) for i, (p, o) in enumerate(crossings))
    return Diagram(name, dict(colors), dict(arc_component), xs, tuple(outer))
