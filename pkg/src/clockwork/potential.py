"""The potential function as a normalized state sum."""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, curvatures
from .polyring import ONE, LaurentPoly, PotentialValue, color_var, link_var
from .states import StarPair, default_star_pair
from .statesum import LINK_SCHEME, index_monomial, state_sum


def curvature_monomial(d: Diagram) -> LaurentPoly:
    """``prod_K X_K^{rot_K}``."""
    return LaurentPoly.monomial({link_var(k): r for k, r in curvatures(d).items()})


def norm_factor(d: Diagram, stars: StarPair) -> LaurentPoly:
    """The state-sum normalizer for a star pair.

    With ``p`` the index of the lower starred region and ``K`` the component
    of the separating strand this is ``X^{-2p} X_K^{-1} (X_K - X_K^{-1})``.
    """
    xk = LaurentPoly.var(link_var(stars.component))
    return index_monomial(d, stars.low) * xk ** -1 * (xk - xk ** -1)


def state_sum_potential(d: Diagram, stars: StarPair | None = None) -> PotentialValue:
    """The potential in per-component variables ``X1, X2, ...``.

    Disconnected projections give 0.
    """
    if not d.connected:
        return PotentialValue(LaurentPoly(), ONE)
    if stars is None:
        stars = default_star_pair(d)
    total = state_sum(d, stars, LINK_SCHEME).value
    return PotentialValue(curvature_monomial(d) * total, norm_factor(d, stars))


@dataclass(frozen=True)
class Coloring:
    """Component -> color label; components sharing a label share a variable."""

    labels: tuple  # ((component, label), ...)

    @classmethod
    def of(cls, d: Diagram, overrides: dict | None = None) -> "Coloring":
        m = dict(d.colors)
        m.update(overrides or {})
        return cls(tuple(sorted(m.items())))

    def substitution(self) -> dict:
        return {link_var(k): LaurentPoly.var(color_var(lab)) for k, lab in self.labels}


def colored_potential(d: Diagram, coloring: Coloring | None = None, stars: StarPair | None = None) -> PotentialValue:
    """The potential with each component variable replaced by its color variable."""
    if coloring is None:
        coloring = Coloring.of(d)
    return state_sum_potential(d, stars).substitute(coloring.substitution()).canonical()
