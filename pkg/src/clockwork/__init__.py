"""Exact state sums and the multivariable potential function of colored links."""
from .diagram import Diagram, DiagramError, load_diagram, parse_diagram
from .polyring import LaurentPoly, PotentialValue, rat_eq
from .potential import Coloring, colored_potential, state_sum_potential

__all__ = [
    "Coloring", "Diagram", "DiagramError", "LaurentPoly", "PotentialValue",
    "colored_potential", "state_sum_potential", "load_diagram", "parse_diagram", "rat_eq",
]
__version__ = "0.1.0"
