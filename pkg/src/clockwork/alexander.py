"""Alexander matrices and how their reduced determinants relate to state sums."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import Diagram, DiagramError
from .polyring import B_VAR, ONE, W_VAR, ZERO, LaurentPoly, link_var
from .states import StarPair, adjacent_star_pairs
from .statesum import BW, LINKVARS, SCHEMES, WeightScheme, state_sum


@dataclass(frozen=True)
class AlexanderMatrix:
    rows: tuple      # crossing ids
    cols: tuple      # region ids
    entries: tuple   # tuple of row tuples of LaurentPoly
    scheme: str

    def entry(self, cid: int, rid: int) -> LaurentPoly:
        return self.entries[self.rows.index(cid)][self.cols.index(rid)]

    def column(self, rid: int) -> list:
        k = self.cols.index(rid)
        return [row[k] for row in self.entries]

    def to_json_obj(self) -> dict:
        return {
            "scheme": self.scheme,
            "rows": list(self.rows),
            "cols": list(self.cols),
            "entries": [[e.to_json_obj() for e in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def alexander_matrix(d: Diagram, w: WeightScheme | str) -> AlexanderMatrix:
    """Row per crossing, column per region; entries sum the corner weights."""
    if isinstance(w, str):
        w = SCHEMES[w]
    if not d.connected:
        raise DiagramError("projection not connected")
    cols = tuple(r.id for r in d.regions)
    rows = []
    for c in d.crossings:
        row = [ZERO] * len(cols)
        for q in range(4):
            k = cols.index(d.corner_region[(c.id, q)])
            row[k] = row[k] + w.weight(d, c.id, q)
        rows.append(tuple(row))
    return AlexanderMatrix(tuple(c.id for c in d.crossings), cols, tuple(rows), w.kind)


def reduced(A: AlexanderMatrix, i1: int, i2: int) -> list:
    """Delete the columns of regions ``i1`` and ``i2``; the order of the rest is kept."""
    if i1 == i2:
        raise ValueError("the two deleted columns must differ")
    for r in (i1, i2):
        if r not in A.cols:
            raise IndexError(f"no column for region {r}")
    keep = [k for k, r in enumerate(A.cols) if r not in (i1, i2)]
    return [[row[k] for k in keep] for row in A.entries]


def det(M) -> LaurentPoly:
    """Exact determinant by cofactor expansion along rows, memoized on column sets."""
    n = len(M)
    if n == 0:
        return ONE
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    memo = {}

    def minor(r, cols):
        # determinant of rows r.. restricted to the sorted column tuple ``cols``
        if r == n:
            return ONE
        if cols in memo:
            return memo[cols]
        total = ZERO
        for pos, c in enumerate(cols):
            e = M[r][c]
            if e.is_zero():
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
            term = e * sub
            total = total + (term if pos % 2 == 0 else -term)
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


# -- labelings and the sign law ---------------------------------------------------


@dataclass(frozen=True)
class Labeling:
    """An ordering of crossings (rows) and regions (labels 1..n+2).

    ``regions[k]`` carries label ``k + 1``.
    """

    rows: tuple
    regions: tuple

    def label(self, rid: int) -> int:
        return self.regions.index(rid) + 1

    def matrix(self, A: AlexanderMatrix) -> list:
        return [[A.entry(c, r) for r in self.regions] for c in self.rows]


def labeled_minor(d: Diagram, A: AlexanderMatrix, lab: Labeling, i: int, j: int) -> LaurentPoly:
    """``det A(i, j)`` with rows and columns in labeling order, ``i``, ``j`` 1-based labels."""
    M = lab.matrix(A)
    keep = [k for k in range(len(lab.regions)) if k + 1 not in (i, j)]
    return det([[row[k] for k in keep] for row in M])


def _m(d: Diagram, rid: int) -> int:
    return d.alexander_index_sum(rid)


def compliant_labeling(d: Diagram, base: StarPair | None = None, scheme: WeightScheme | str = BW) -> Labeling:
    """A labeling with an adjacent pair at ``n+1``, ``n+2`` and the base minor normalized.

    The higher-index region of the base pair gets label ``n+2``.  Rows are
    swapped when needed so that ``det A(n+1, n+2)`` equals the state sum.
    Without a given base every adjacent pair is tried in turn.
    """
    if isinstance(scheme, str):
        scheme = SCHEMES[scheme]
    A = alexander_matrix(d, scheme)
    candidates = [base] if base is not None else adjacent_star_pairs(d)
    n = d.n
    for sp in candidates:
        rest = tuple(r.id for r in d.regions if r.id not in sp.regions)
        rows = tuple(c.id for c in d.crossings)
        lab = Labeling(rows, rest + (sp.low, sp.high))
        value = state_sum(d, sp, scheme).value
        got = labeled_minor(d, A, lab, n + 1, n + 2)
        if got == value:
            return lab
        if got == -value and n >= 2:
            return Labeling((rows[1], rows[0]) + rows[2:], lab.regions)
    raise DiagramError("no compliant labeling: the base minor cannot be normalized")


def pair_type(d: Diagram, lab: Labeling, i: int, j: int) -> str:
    """``"A"`` when the larger label sits on the higher-index region (like the base pair)."""
    lo, hi = sorted((i, j))
    ri, rj = lab.regions[lo - 1], lab.regions[hi - 1]
    return "A" if _m(d, rj) > _m(d, ri) else "B"


def signed_det_relation(d: Diagram, lab: Labeling, i: int, j: int) -> int:
    """Predicted sign ``s`` with ``det A(i,j) = s * <S(i,j)>`` for adjacent labels ``i < j``."""
    if not i < j:
        raise ValueError("expected i < j")
    n = d.n
    if lab.regions[n:] and _m(d, lab.regions[n + 1]) <= _m(d, lab.regions[n]):
        raise DiagramError("labeling precondition: base pair is not in increasing index order")
    e = i + j + 1 if pair_type(d, lab, i, j) == "A" else i + j
    return -1 if e % 2 else 1


def star_pair_of_labels(d: Diagram, lab: Labeling, i: int, j: int) -> StarPair:
    r1, r2 = lab.regions[i - 1], lab.regions[j - 1]
    for sp in adjacent_star_pairs(d):
        if set(sp.regions) == {r1, r2}:
            return sp
    raise ValueError("regions are not adjacent")


def check_signed_relation(d: Diagram, scheme: WeightScheme | str, lab: Labeling | None = None) -> list:
    """For every adjacent pair: (i, j, predicted sign, observed sign or None)."""
    if isinstance(scheme, str):
        scheme = SCHEMES[scheme]
    lab = lab or compliant_labeling(d, scheme=scheme)
    A = alexander_matrix(d, scheme)
    out = []
    for sp in adjacent_star_pairs(d):
        i, j = sorted((lab.label(sp.low), lab.label(sp.high)))
        D = labeled_minor(d, A, lab, i, j)
        P = state_sum(d, sp, scheme).value
        obs = 1 if D == P else (-1 if D == -P else None)
        out.append((i, j, signed_det_relation(d, lab, i, j), obs))
    return out


# -- column relations -------------------------------------------------------------


@dataclass(frozen=True)
class AlphaElt:
    """``u + v*alpha`` with ``alpha^2 = -(B+W) alpha - 1``."""

    u: LaurentPoly
    v: LaurentPoly

    def __add__(self, o):
        return AlphaElt(self.u + o.u, self.v + o.v)

    def __sub__(self, o):
        return AlphaElt(self.u - o.u, self.v - o.v)

    def __mul__(self, o):
        if isinstance(o, LaurentPoly):
            return AlphaElt(self.u * o, self.v * o)
        s = LaurentPoly.var(B_VAR) + LaurentPoly.var(W_VAR)
        vv = self.v * o.v
        return AlphaElt(self.u * o.u - vv, self.u * o.v + self.v * o.u - vv * s)

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    @classmethod
    def power(cls, k: int) -> "AlphaElt":
        s = LaurentPoly.var(B_VAR) + LaurentPoly.var(W_VAR)
        step = cls(ZERO, ONE) if k >= 0 else cls(-s, -ONE)  # alpha or alpha^-1
        out = cls(ONE, ZERO)
        for _ in range(abs(k)):
            out = out * step
        return out


def beta(d: Diagram, x: int, y: int) -> AlphaElt:
    k = _m(d, x) - _m(d, y)
    return AlphaElt.power(k) - AlphaElt.power(-k)


def beta_prime(d: Diagram, x: int, y: int) -> LaurentPoly:
    comps = sorted(d.colors)
    diff = [a - b for a, b in zip(d.index[x], d.index[y])]
    mono = LaurentPoly.monomial({link_var(k): -2 * t for k, t in zip(comps, diff)})
    return (ONE - mono) * (-1 if sum(diff) % 2 else 1)


def column_relation_residues(d: Diagram, scheme: str) -> list:
    """Per column ``k``, the row-wise values of ``sum_j beta(j,k) col_j``.

    BW uses ``beta`` in the alpha extension; LinkVars uses ``beta_prime``.
    Every returned element is zero when the relation holds.
    """
    A = alexander_matrix(d, scheme)
    out = []
    for k in A.cols:
        if scheme == BW:
            zero = AlphaElt(ZERO, ZERO)
            acc = [zero for _ in A.rows]
            for j in A.cols:
                b = beta(d, j, k)
                acc = [a + b * e for a, e in zip(acc, A.column(j))]
        elif scheme == LINKVARS:
            acc = [ZERO for _ in A.rows]
            for j in A.cols:
                b = beta_prime(d, j, k)
                acc = [a + b * e for a, e in zip(acc, A.column(j))]
        else:
            raise ValueError(f"no column relation for scheme {scheme!r}")
        out.append(acc)
    return out


def column_relations_hold(d: Diagram, scheme: str) -> bool:
    return all(x.is_zero() for col in column_relation_residues(d, scheme) for x in col)
