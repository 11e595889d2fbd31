"""Determinant tables over an (order, shift) grid.

A table fixes the prime and the formula family and tabulates the exact
determinant for every matrix order n in a vertical range and every shift
c in a horizontal range. Sign classes drive the color-coded views in the
render module.
"""

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .determinant import determinant
from .matrices import DiffPlusC, EvenPowerPlusC, Formula, SumPlusC, build_matrix
from .residues import Prime, as_prime

__all__ = [
    "FAMILIES",
    "EXTENDED_EXTRA_ORDERS",
    "SignClass",
    "sign_classify",
    "family_formula",
    "DeterminantTable",
    "generate_table",
]

FAMILIES = ("diff", "sum", "even-power")

# extra orders past p in the extended view, where the all-zero band lives
EXTENDED_EXTRA_ORDERS = 10


class SignClass(enum.Enum):
    """Ternary cell classification used for color coding."""

    ZERO = "zero"
    NEGATIVE = "negative"
    POSITIVE = "positive"


def sign_classify(v: int) -> SignClass:
    """ZERO, NEGATIVE or POSITIVE according to the sign of v."""
    if v == 0:
        return SignClass.ZERO
    return SignClass.NEGATIVE if v < 0 else SignClass.POSITIVE


def family_formula(family: str, c: int, t: int = 1) -> Formula:
    """The concrete formula for one table column."""
    if family == "diff":
        return DiffPlusC(c)
    if family == "sum":
        return SumPlusC(c)
    if family == "even-power":
        return EvenPowerPlusC(t, c)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


@dataclass(frozen=True)
class DeterminantTable:
    """Exact determinants on an inclusive (n, c) grid for one prime and
    one formula family. t is only meaningful for the even-power family."""

    prime: Prime
    family: str
    t: int
    n_range: tuple[int, int]
    c_range: tuple[int, int]
    cells: Mapping[tuple[int, int], int]

    def orders(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    def shifts(self) -> range:
        return range(self.c_range[0], self.c_range[1] + 1)

    def cell(self, n: int, c: int) -> int:
        return self.cells[n, c]

    def row(self, n: int) -> list[int]:
        return [self.cells[n, c] for c in self.shifts()]

    def column(self, c: int) -> list[int]:
        return [self.cells[n, c] for n in self.orders()]


def generate_table(
    family: str,
    p: "Prime | int",
    n_range: "tuple[int, int] | None" = None,
    c_range: "tuple[int, int] | None" = None,
    *,
    t: int = 1,
    extended: bool = False,
) -> DeterminantTable:
    """Tabulate cell(n, c) = det of the order-n matrix built with shift c.

    Defaults cover orders 1..p and shifts 0..2p-1, two horizontal periods
    of the difference family. extended=True stretches the orders to p+10
    instead, exposing the all-zero band past n = p. The result is a pure
    function of the arguments, whatever order the cells are evaluated in.
    """
    p = as_prime(p)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if p.value == 3:
        raise ValueError("tables need a prime of the form 3k+1 or 3k+2; 3 is neither")
    if extended and n_range is not None:
        raise ValueError("pass either n_range or extended, not both")
    pv = p.value
    if n_range is None:
        n_range = (1, pv + EXTENDED_EXTRA_ORDERS) if extended else (1, pv)
    if c_range is None:
        c_range = (0, 2 * pv - 1)
    n_lo, n_hi = (int(v) for v in n_range)
    c_lo, c_hi = (int(v) for v in c_range)
    if n_lo < 1:
        raise ValueError(f"orders start at 1, got n_range ({n_lo}, {n_hi})")
    if n_hi < n_lo or c_hi < c_lo:
        raise ValueError("order and shift ranges must be nonempty")
    cells: dict[tuple[int, int], int] = {}
    for n in range(n_lo, n_hi + 1):
        for c in range(c_lo, c_hi + 1):
            cells[n, c] = determinant(build_matrix(family_formula(family, c, t), p, n))
    return DeterminantTable(p, family, t, (n_lo, n_hi), (c_lo, c_hi), MappingProxyType(cells))
