"""Sparse multivariable Laurent polynomials with integer coefficients.

A polynomial is an immutable map ``Monomial -> int``; a monomial is a sorted
tuple of ``(VarId, exponent)`` pairs with no zero exponents.  Everything here is
exact and hashable, so values can be used as dict keys and compared with ``==``.
"""
from __future__ import annotations

import json
import re
from enum import IntEnum
from typing import Iterable, Mapping, NamedTuple, Union


class VarKind(IntEnum):
    LINK = 0     # X_K, one per component
    COLOR = 1    # X_mu, one per color label
    B = 2
    W = 3
    I = 4        # formal corner variables I_k, O_k, U_k, D_k
    O = 5
    U = 6
    D = 7


class VarId(NamedTuple):
    kind: VarKind
    index: Union[int, str] = 0

    @property
    def name(self) -> str:
        k = self.kind
        if k is VarKind.LINK:
            return f"X{self.index}"
        if k is VarKind.COLOR:
            return f"X_{self.index}"
        if k in (VarKind.B, VarKind.W):
            return k.name
        return f"{k.name}{self.index}"

    def __repr__(self):
        return self.name


def link_var(k: int) -> VarId:
    return VarId(VarKind.LINK, int(k))


def color_var(label: str) -> VarId:
    return VarId(VarKind.COLOR, str(label))


B_VAR = VarId(VarKind.B, 0)
W_VAR = VarId(VarKind.W, 0)

_NAME_RE = re.compile(r"^(?:X(\d+)|X_(.+)|([BW])|([IOUD])(\d+))$")


def parse_var(name: str) -> VarId:
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"unknown variable name {name!r}")
    if m.group(1):
        return link_var(int(m.group(1)))
    if m.group(2):
        return color_var(m.group(2))
    if m.group(3):
        return B_VAR if m.group(3) == "B" else W_VAR
    return VarId(VarKind[m.group(4)], int(m.group(5)))


Monomial = tuple  # tuple[tuple[VarId, int], ...], sorted by VarId

ONE_MONO: Monomial = ()


def mono(exps: Mapping[VarId, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e != 0))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            if ea + eb:
                out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_inv(a: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in a)


class LaurentPoly:
    """Immutable Laurent polynomial over the integers.

    >>> x = LaurentPoly.var(link_var(1))
    >>> str((x + x**-1) * (x - x**-1))
    'X1^2 - X1^-2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, v: VarId, e: int = 1) -> "LaurentPoly":
        return cls({mono({v: e}): 1})

    @classmethod
    def monomial(cls, exps: Mapping[VarId, int], coeff: int = 1) -> "LaurentPoly":
        return cls({mono(exps): coeff})

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for ``+-`` a monomial, the units of the Laurent ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def coeff(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return LaurentPoly._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            (m, c), = self._terms.items()
            return LaurentPoly._wrap({mono_inv(m): c}) ** (-e)
        out = LaurentPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def unit_inverse(self) -> "LaurentPoly":
        return self ** -1

    # equality / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution -------------------------------------------------------
    def substitute(self, sigma: Mapping[VarId, "LaurentPoly"]) -> "LaurentPoly":
        """Ring homomorphism sending each ``v`` in ``sigma`` to ``sigma[v]``.

        Images must be units whenever the variable occurs with a negative
        exponent; other variables are left alone.
        """
        out = LaurentPoly()
        cache: dict = {}
        for m, c in self._terms.items():
            term = LaurentPoly.const(c)
            rest = {}
            for v, e in m:
                if v not in sigma:
                    rest[v] = e
                    continue
                img = sigma[v]
                if not isinstance(img, LaurentPoly):
                    img = LaurentPoly._coerce(img)
                if e < 0 and not img.is_unit():
                    raise ValueError(f"non-unit image for {v.name} with negative exponent")
                key = (v, e)
                if key not in cache:
                    cache[key] = img ** e
                term = term * cache[key]
            if rest:
                term = term * LaurentPoly.monomial(rest)
            out = out + term
        return out

    # canonical order / output --------------------------------------------
    def sorted_terms(self, reverse: bool = False):
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]), reverse=reverse)

    def leading(self):
        """Largest term in the canonical order, or ``None`` for zero."""
        if not self._terms:
            return None
        return max(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def min_exponents(self) -> dict:
        vs = self.variables()
        return {v: min(dict(m).get(v, 0) for m in self._terms) for v in vs}

    def max_exponents(self) -> dict:
        vs = self.variables()
        return {v: max(dict(m).get(v, 0) for m in self._terms) for v in vs}

    def to_json_obj(self) -> list:
        return [
            {"exps": {v.name: e for v, e in m}, "coeff": c}
            for m, c in self.sorted_terms()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Iterable[dict]) -> "LaurentPoly":
        out = cls()
        for t in obj:
            exps = {parse_var(k): int(e) for k, e in t["exps"].items()}
            out = out + cls.monomial(exps, int(t["coeff"]))
        return out

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms(reverse=True):
            body = "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in m)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            if not parts:
                parts.append(s if c > 0 else "-" + s)
            else:
                parts.append(("+ " if c > 0 else "- ") + s)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _mono_key(m: Monomial):
    # lexicographic by (kind, index) then exponent, variables present first
    return tuple((v.kind, str(v.index) if v.kind == VarKind.COLOR else v.index, e) for v, e in m)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def g_plus(x: LaurentPoly) -> LaurentPoly:
    """``x + x^-1`` for a unit ``x``."""
    return x + x ** -1


def g_minus(x: LaurentPoly) -> LaurentPoly:
    """``x - x^-1`` for a unit ``x``."""
    return x - x ** -1


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_substitute(p: LaurentPoly, sigma: Mapping[VarId, LaurentPoly]) -> LaurentPoly:
    return p.substitute(sigma)


class PotentialValue:
    """A fraction ``num / den`` of Laurent polynomials.

    Equality is by cross multiplication; no GCDs are taken.  The canonical
    form clears the denominator when it divides the numerator exactly;
    otherwise it only moves a monomial between numerator and denominator and
    fixes the overall sign, which is enough to make printing deterministic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | int = 1):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("PotentialValue with zero denominator")
        self.num = num
        self.den = den

    def __eq__(self, other):
        if not isinstance(other, PotentialValue):
            return NotImplemented
        return rat_eq(self, other)

    __hash__ = None

    def __mul__(self, other):
        if isinstance(other, PotentialValue):
            return PotentialValue(self.num * other.num, self.den * other.den)
        return PotentialValue(self.num * other, self.den)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, PotentialValue):
            other = PotentialValue(LaurentPoly._coerce(other))
        if self.den == other.den:
            return PotentialValue(self.num + other.num, self.den)
        return PotentialValue(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return PotentialValue(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def substitute(self, sigma) -> "PotentialValue":
        return PotentialValue(self.num.substitute(sigma), self.den.substitute(sigma))

    def canonical(self) -> "PotentialValue":
        if self.num.is_zero():
            return PotentialValue(ZERO, ONE)
        q = exact_divide(self.num, self.den)
        if q is not None:
            return PotentialValue(q, ONE)
        lo, hi = self.den.min_exponents(), self.den.max_exponents()
        # centre the denominator's exponent range on zero (floor when odd)
        shift = {v: -((lo[v] + hi[v]) // 2) for v in lo}
        m = LaurentPoly.monomial(shift)
        num, den = self.num * m, self.den * m
        if den.leading()[1] < 0:
            num, den = -num, -den
        return PotentialValue(num, den)

    def to_json_obj(self) -> dict:
        c = self.canonical()
        return {"num": c.num.to_json_obj(), "den": c.den.to_json_obj(), "canonical": True}

    def __str__(self):
        c = self.canonical()
        if c.num.is_zero():
            return "0"
        num = str(c.num)
        if c.den == ONE:
            return num
        if len(c.num) > 1:
            num = f"({num})"
        return f"{num}/({c.den})"

    def __repr__(self):
        return f"PotentialValue({self})"


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """``a / b`` when ``b`` divides ``a`` in the Laurent ring, else ``None``.

    Long division on lexicographic leading terms.  In each variable the
    exponent range of a quotient is pinned by those of ``a`` and ``b``, so a
    candidate quotient term outside that box proves non-divisibility.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    vs = a.variables() | b.variables()
    alo, ahi, blo, bhi = a.min_exponents(), a.max_exponents(), b.min_exponents(), b.max_exponents()
    box = {v: (alo.get(v, 0) - blo.get(v, 0), ahi.get(v, 0) - bhi.get(v, 0)) for v in vs}
    order = sorted(vs)

    def lead(p):
        return max(p.items(), key=lambda t: tuple(dict(t[0]).get(v, 0) for v in order))

    bm, bc = lead(b)
    q, r = ZERO, a
    while not r.is_zero():
        rm, rc = lead(r)
        if rc % bc:
            return None
        tm = mono_mul(rm, mono_inv(bm))
        exps = dict(tm)
        if any(not lo <= exps.get(v, 0) <= hi for v, (lo, hi) in box.items()):
            return None
        t = LaurentPoly({tm: rc // bc})
        q, r = q + t, r - t * b
    return q


def rat_eq(a: PotentialValue, b: PotentialValue) -> bool:
    return a.num * b.den == b.num * a.den
