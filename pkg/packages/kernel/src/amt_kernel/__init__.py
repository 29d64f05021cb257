"""Semantics kernel for answer set programming modulo theories.

Programs mix regular atoms with linear constraint atoms. Their stable models
are computed directly from theory solutions and, independently, through
translations into here-and-there logic with constraints, so that the two
readings can be compared.
"""

from amt_kernel.errors import KernelError, ParseError
from amt_kernel.valuation import TRUE, Truth, Valuation

__version__ = "0.1.0"

__all__ = ["TRUE", "KernelError", "ParseError", "Truth", "Valuation", "__version__"]
