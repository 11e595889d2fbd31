"""Modular arithmetic over odd prime moduli.

Primality testing, residue-class bookkeeping, the cubic and quadratic
residue symbols, and primitive roots. Everything here is a pure function
of its arguments; Prime instances are immutable and safe to share.
"""

import operator
from dataclasses import dataclass, field
from math import isqrt

__all__ = [
    "Prime",
    "as_prime",
    "is_prime",
    "odd_primes_up_to",
    "cubic_residue_symbol",
    "cubic_residue_set",
    "cube_root",
    "legendre_symbol",
    "primitive_root",
    "next_primitive_root",
]


def is_prime(m: int) -> bool:
    """Exact deterministic primality check by trial division."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    limit = isqrt(m)
    f = 3
    while f <= limit:
        if m % f == 0:
            return False
        f += 2
    return True


def odd_primes_up_to(limit: int) -> list[int]:
    """All odd primes p with 3 <= p <= limit, ascending."""
    return [m for m in range(3, limit + 1, 2) if is_prime(m)]


@dataclass(frozen=True)
class Prime:
    """A validated odd prime with its residue classes mod 3, 4 and 12.

    The mod-3 class drives everything else in this package: cubing is a
    bijection on the nonzero residues when ``mod3 == 2`` and a 3-to-1 map
    when ``mod3 == 1``. For ``value == 3`` the classes mod 3 and 12 are
    0 and 3; the shifted-difference determinant patterns need one of the
    other two forms, so the table and verification modules reject 3 even
    though the symbol itself is fine with it.
    """

    value: int
    mod3: int = field(init=False)
    mod4: int = field(init=False)
    mod12: int = field(init=False)

    def __post_init__(self) -> None:
        v = self.value
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"modulus must be an int, got {type(v).__name__}")
        if not is_prime(v):
            raise ValueError(f"modulus must be prime, got {v}")
        if v == 2:
            raise ValueError("modulus must be an odd prime, got 2")
        object.__setattr__(self, "mod3", v % 3)
        object.__setattr__(self, "mod4", v % 4)
        object.__setattr__(self, "mod12", v % 12)


def as_prime(p: "Prime | int") -> Prime:
    """Coerce an int (or any integer-like) to a validated Prime."""
    if isinstance(p, Prime):
        return p
    return Prime(operator.index(p))


def cubic_residue_symbol(a: int, p: "Prime | int") -> int:
    """Cubic residue symbol of a modulo an odd prime: 0 when p divides a,
    1 when a is congruent to a nonzero cube, -1 otherwise.

    Only the class of a mod p matters, so a may be negative or arbitrarily
    large. When p % 3 != 1 cubing permutes the nonzero residues and every
    nonzero value scores 1. When p % 3 == 1 the nonzero cubes are exactly
    the roots of x**((p-1)/3) == 1, one modular exponentiation per query.
    """
    p = as_prime(p)
    r = a % p.value
    if r == 0:
        return 0
    if p.mod3 != 1:
        return 1
    return 1 if pow(r, (p.value - 1) // 3, p.value) == 1 else -1


def cube_root(a: int, p: "Prime | int") -> "int | None":
    """Smallest x in [0, p-1] with x**3 = a (mod p), or None. O(p) scan."""
    p = as_prime(p)
    r = a % p.value
    for x in range(p.value):
        if pow(x, 3, p.value) == r:
            return x
    return None


def cubic_residue_set(p: "Prime | int") -> set[int]:
    """The nonzero cubic residues mod p: {x**3 mod p for 1 <= x < p}.

    Has (p-1)/3 elements when p % 3 == 1 and all p-1 nonzero classes
    otherwise.
    """
    p = as_prime(p)
    return {pow(x, 3, p.value) for x in range(1, p.value)}


def legendre_symbol(a: int, p: "Prime | int") -> int:
    """Quadratic residue symbol: 0 when p divides a, else 1 for squares
    and -1 for nonsquares, by Euler's criterion."""
    p = as_prime(p)
    r = a % p.value
    if r == 0:
        return 0
    return 1 if pow(r, (p.value - 1) // 2, p.value) == 1 else -1


def _distinct_prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _is_generator(g: int, pv: int, order_factors: list[int]) -> bool:
    return all(pow(g, (pv - 1) // q, pv) != 1 for q in order_factors)


def primitive_root(p: "Prime | int") -> int:
    """Smallest generator of the multiplicative group mod p.

    A candidate g generates iff g**((p-1)/q) != 1 for every prime q
    dividing p - 1; candidates are tried in increasing order, so the
    choice is reproducible run to run.
    """
    p = as_prime(p)
    pv = p.value
    order_factors = _distinct_prime_factors(pv - 1)
    for g in range(2, pv):
        if _is_generator(g, pv, order_factors):
            return g
    raise ArithmeticError(f"no primitive root found modulo {pv}")


def next_primitive_root(p: "Prime | int", after: int) -> int:
    """Smallest primitive root strictly greater than after."""
    p = as_prime(p)
    pv = p.value
    order_factors = _distinct_prime_factors(pv - 1)
    for g in range(after + 1, pv):
        if _is_generator(g, pv, order_factors):
            return g
    raise ValueError(f"no primitive root modulo {pv} above {after}")
