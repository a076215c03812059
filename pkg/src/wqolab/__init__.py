"""wqolab: a desk-scale laboratory for well-quasi-order combinatorics.

Subpackages cover finite quasi-orders and their constructions, labelled
trees with the inhomogeneous embedding, ordered term algebras and the
evaluation map between graded trees and algebra carriers, the weight/block
bijection between binary strings and positive tuples, Cantor-normal-form
ordinal arithmetic with fundamental sequences and the slow-growing
hierarchy, exponential terms with dual integer/ordinal readings, and
Ackermannian terms with bounded well-ordering searches.
"""

__version__ = "0.1.0"

from .errors import BudgetExceeded, DomainError, ParseError, SearchExhausted, WqolabError

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "ParseError",
    "SearchExhausted",
    "WqolabError",
    "__version__",
]
