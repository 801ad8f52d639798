"""Spectroscopy of behavioral equivalences for finite-state processes.

The heavy lifting lives in the compiled extension; this package re-exports
its operations.
"""

from ._spectro import (
    budgets,
    compare,
    formula_languages,
    formula_price,
    satisfies,
    verify,
)

__all__ = [
    "budgets",
    "compare",
    "formula_languages",
    "formula_price",
    "satisfies",
    "verify",
]
