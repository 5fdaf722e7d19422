"""Valid systems of three-term arithmetic-progression patterns and the
distributive lattices that count them."""

from .errors import BudgetExceeded, DomainError, IsomorphismUndecided
from .kernels import BACKEND
from .polynomial import RankPolynomial
from .poset import FinitePoset, are_isomorphic, join_irreducibles, order_ideals
from .tableaux import Shape, Tableau, UClass
from .triples import Realization, Triple, TripleSystem, enumerate_valid, is_consistent, is_valid, realize

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "DomainError",
    "FinitePoset",
    "IsomorphismUndecided",
    "RankPolynomial",
    "Realization",
    "Shape",
    "Tableau",
    "Triple",
    "TripleSystem",
    "UClass",
    "are_isomorphic",
    "enumerate_valid",
    "is_consistent",
    "is_valid",
    "join_irreducibles",
    "order_ideals",
    "realize",
]
