"""States and the clock graph of transpositions between them."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import LEFT, RIGHT, Diagram, DiagramError


@dataclass(frozen=True, order=True)
class StarPair:
    """Two adjacent regions carrying the stars.

    ``low`` and ``high`` are the regions on the two sides of a strand of
    component ``component``; ``high`` has the larger index in that
    component's coordinate.
    """

    low: int
    high: int
    shared_arc: int
    component: int

    @property
    def regions(self) -> tuple:
        return (self.low, self.high)

    def orientation_class(self, labels: dict) -> str:
        """``"A"`` when the higher-index region carries the larger label, else ``"B"``."""
        return "A" if labels[self.high] > labels[self.low] else "B"


def _require_connected(d: Diagram):
    if not d.connected:
        raise DiagramError("projection not connected")


def star_pair_for_arc(d: Diagram, arc: int) -> StarPair:
    _require_connected(d)
    lo, hi = d.side_region[(arc, LEFT)], d.side_region[(arc, RIGHT)]
    return StarPair(lo, hi, arc, d.arc_component[arc])


def adjacent_star_pairs(d: Diagram) -> list:
    """Every unordered pair of adjacent regions, named by its lowest shared arc."""
    _require_connected(d)
    seen, out = set(), []
    for a in d.arcs:
        sp = star_pair_for_arc(d, a)
        if sp.regions not in seen:
            seen.add(sp.regions)
            out.append(sp)
    return out


def default_star_pair(d: Diagram) -> StarPair:
    return star_pair_for_arc(d, d.arcs[0])


@dataclass(frozen=True)
class KState:
    markers: tuple  # ((crossing_id, quadrant), ...) sorted by crossing id
    stars: StarPair

    def marker(self, cid: int) -> int:
        return self.markers[cid - 1][1]

    def key(self) -> str:
        return " ".join(f"{c}:{q}" for c, q in self.markers)

    def replace(self, changes: dict) -> "KState":
        return KState(tuple((c, changes.get(c, q)) for c, q in self.markers), self.stars)


def is_valid_state(d: Diagram, s: KState) -> bool:
    starred = set(s.stars.regions)
    if [c for c, _ in s.markers] != [c.id for c in d.crossings]:
        return False
    used = [d.corner_region[m] for m in s.markers]
    if starred & set(used):
        return False
    free = {r.id for r in d.regions} - starred
    return sorted(used) == sorted(free)


def enumerate_states(d: Diagram, stars: StarPair) -> list:
    """All states for the given stars, by backtracking.

    Crossings are matched to non-starred regions through their corners;
    output order is lexicographic in (crossing id, quadrant).
    """
    _require_connected(d)
    starred = set(stars.regions)
    options = [
        [(q, d.corner_region[(c.id, q)]) for q in range(4) if d.corner_region[(c.id, q)] not in starred]
        for c in d.crossings
    ]
    out, chosen, used = [], [], set()

    def rec(i):
        if i == len(options):
            out.append(KState(tuple((k + 1, q) for k, q in enumerate(chosen)), stars))
            return
        for q, r in options[i]:
            if r in used:
                continue
            used.add(r)
            chosen.append(q)
            rec(i + 1)
            chosen.pop()
            used.discard(r)

    rec(0)
    return out


def transpositions(d: Diagram, s: KState) -> list:
    """All ``(direction, state)`` pairs one transposition away from ``s``.

    Two crossings joined by an arc may swap their markers across that arc
    when they sit diagonally in the two regions flanking it.  Walking along
    the arc from tail to head, the move that takes the markers from
    (tail right, head left) to (tail left, head right) is clockwise.
    """
    out = []
    for a in d.arcs:
        if a not in d.arc_tail:
            continue
        c1, i = d.arc_tail[a]
        c2, j = d.arc_head[a]
        if c1 == c2:
            continue
        t_left, t_right = i, (i - 1) % 4
        h_left, h_right = (j - 1) % 4, j
        m1, m2 = s.marker(c1), s.marker(c2)
        if (m1, m2) == (t_right, h_left):
            out.append(("cw", s.replace({c1: t_left, c2: h_right})))
        elif (m1, m2) == (t_left, h_right):
            out.append(("ccw", s.replace({c1: t_right, c2: h_left})))
    seen, uniq = set(), []
    for direction, t in out:
        if (direction, t) not in seen:
            seen.add((direction, t))
            uniq.append((direction, t))
    return uniq


@dataclass
class ClockGraph:
    nodes: list
    edges: list = field(default_factory=list)  # (i, j): node j is a clockwise move from node i

    def sources(self) -> list:
        has_in = {j for _, j in self.edges}
        return [i for i in range(len(self.nodes)) if i not in has_in]

    def sinks(self) -> list:
        has_out = {i for i, _ in self.edges}
        return [i for i in range(len(self.nodes)) if i not in has_out]

    def reachable(self, start: int) -> set:
        succ: dict = {}
        for i, j in self.edges:
            succ.setdefault(i, []).append(j)
        seen, stack = {start}, [start]
        while stack:
            for j in succ.get(stack.pop(), []):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return seen

    def to_json_obj(self) -> dict:
        return {
            "nodes": [s.key() for s in self.nodes],
            "edges": [[self.nodes[i].key(), self.nodes[j].key()] for i, j in self.edges],
            "sources": [self.nodes[i].key() for i in self.sources()],
            "sinks": [self.nodes[i].key() for i in self.sinks()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def to_dot(self, name: str = "clock") -> str:
        lines = [f'digraph "{name}" {{']
        for i, s in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{s.key()}"];')
        for i, j in self.edges:
            lines.append(f'  n{i} -> n{j} [label="cw"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def clock_graph(d: Diagram, stars: StarPair) -> ClockGraph:
    nodes = enumerate_states(d, stars)
    pos = {s: i for i, s in enumerate(nodes)}
    edges = []
    for i, s in enumerate(nodes):
        for direction, t in transpositions(d, s):
            if direction == "cw":
                edges.append((i, pos[t]))
    return ClockGraph(nodes, sorted(set(edges)))


def _descend(d: Diagram, s: KState, avoid: str) -> KState:
    seen = set()
    while True:
        if s in seen:
            raise DiagramError("transposition cycle: clock lattice is broken")
        seen.add(s)
        moves = [t for direction, t in transpositions(d, s) if direction == avoid]
        if not moves:
            return s
        s = moves[0]


def _seed(d: Diagram, stars: StarPair) -> KState:
    states = enumerate_states(d, stars)
    if not states:
        raise DiagramError("no state exists for this star pair")
    return states[0]


def clocked_state(d: Diagram, stars: StarPair) -> KState:
    """The state admitting only clockwise transpositions."""
    return _descend(d, _seed(d, stars), "ccw")


def counter_clocked_state(d: Diagram, stars: StarPair) -> KState:
    return _descend(d, _seed(d, stars), "cw")
