"""Closed braids as PD diagrams.

Strands run upward; generator ``i`` (1-based) crosses positions ``i`` and
``i+1`` and ``-i`` is its inverse.  A positive generator is a right-handed
crossing.  Strands are closed around the right-hand side, so the unbounded
region lies to the left of position 1.
"""
from __future__ import annotations

import string

from .diagram import Diagram, build_diagram


def crossing_from_slots(slots, under_in: int, over_in: int):
    """PD ports and over-direction for four arcs given counterclockwise.

    ``under_in`` and ``over_in`` index into ``slots``.
    """
    ports = tuple(slots[(under_in + k) % 4] for k in range(4))
    o = "ccw" if over_in == (under_in + 1) % 4 else "cw"
    return ports, o


def braid_closure(word, n_strands: int | None = None, strand_colors=None, name: str = "braid") -> Diagram:
    word = [int(g) for g in word]
    if any(g == 0 for g in word):
        raise ValueError("generator 0 is not allowed")
    m = n_strands or (max((abs(g) for g in word), default=0) + 1)
    if any(abs(g) >= m for g in word):
        raise ValueError("generator out of range for the strand count")

    counter = iter(range(1, 10 ** 6))
    start = [next(counter) for _ in range(m)]
    cur = list(start)
    label = {a: i for i, a in enumerate(start)}   # arc -> starting position of its strand
    owner = list(range(m))                         # position -> strand label
    raw = []
    for g in word:
        i = abs(g) - 1
        sw, se = cur[i], cur[i + 1]
        nw, ne = next(counter), next(counter)
        label[nw], label[ne] = owner[i + 1], owner[i]
        # counterclockwise slots: NE, NW, SW, SE
        slots = [ne, nw, sw, se]
        raw.append(crossing_from_slots(slots, 3, 2) if g > 0 else crossing_from_slots(slots, 2, 3))
        cur[i], cur[i + 1] = nw, ne
        owner[i], owner[i + 1] = owner[i + 1], owner[i]

    rename = {c: s for c, s in zip(cur, start) if c != s}
    # closure joins the top of each position to its bottom
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for pos in range(m):
        a, b = find(owner[pos]), find(pos)
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots = sorted({find(i) for i in range(m)})
    comp_of_root = {r: k + 1 for k, r in enumerate(roots)}

    used = []
    for ports, _ in raw:
        for a in ports:
            a = rename.get(a, a)
            if a not in used:
                used.append(a)
    for a in start:
        if a not in used:
            used.append(a)
    compact = {a: i + 1 for i, a in enumerate(sorted(used))}

    def fix(a):
        return compact[rename.get(a, a)]

    crossings = [(tuple(fix(a) for a in ports), o) for ports, o in raw]
    arc_component = {compact[a]: comp_of_root[find(label[a])] for a in used}

    if strand_colors is None:
        colors = {k: string.ascii_lowercase[k - 1] for k in comp_of_root.values()}
    else:
        colors = {}
        for pos, col in enumerate(strand_colors):
            k = comp_of_root[find(pos)]
            if colors.setdefault(k, col) != col:
                raise ValueError(f"strands of component {k} carry different colors")
    return build_diagram(name, colors, arc_component, crossings, (compact[start[0]], "left"))
