"""Levi-Civita symbol: permutation parity and its closed-form relatives.

The symbol on an N-tuple drawn from {1..N} is +1 on even permutations,
-1 on odd permutations, and 0 whenever an index repeats.  This module
provides three independent routes to those values:

* ``sign_oracle`` counts inversions -- the ground truth everything else
  is checked against;
* ``epsilon_product`` evaluates the exact double-product closed form
  (a Vandermonde product over the indices divided by the same product
  at the identity tuple) in rational arithmetic;
* ``epsilon_generalized`` drives that ratio through an arbitrary
  injective value table instead of the identity map.

A gamma-function expression for the Kronecker delta on {1,2,3} lives
here too, since the compact three-dimensional transform is indexed
through it.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from .errors import (
    DegenerateDenominatorError,
    InputDomainError,
    UnsupportedDimensionError,
)

MultiIndex = tuple[int, ...]

EXACT_SCALARS = (int, Fraction)


def check_index(indices: Sequence[int]) -> MultiIndex:
    """Validate and normalize an index tuple.

    The dimension is the tuple length N and every entry must lie in
    [1, N].  Raises :class:`InputDomainError` otherwise.
    """
    idx = tuple(indices)
    dim = len(idx)
    if dim == 0:
        raise InputDomainError("index tuple must be non-empty")
    for n in idx:
        if not isinstance(n, int):
            raise InputDomainError(f"indices must be integers, got {n!r}")
        if not 1 <= n <= dim:
            raise InputDomainError(f"index {n} outside [1, {dim}]")
    return idx


def sign_oracle(indices: Sequence[int]) -> int:
    """Symbol value by inversion counting: 0 on repeats, else parity sign."""
    idx = check_index(indices)
    n = len(idx)
    if len(set(idx)) != n:
        return 0
    inversions = sum(
        1 for a in range(n) for b in range(a + 1, n) if idx[a] > idx[b]
    )
    return -1 if inversions % 2 else 1


def epsilon_product(indices: Sequence[int]) -> int:
    """Closed-form symbol value as an exact product of index differences.

    Evaluates  prod_{p=1}^{N-1} prod_{q=1}^{N-p} (n_{N+1-p} - n_q) / (N+1-p-q)
    with exact rationals.  Intermediate quotients are generally not
    integers, so no shortcut through integer division is taken; the
    final value is always 0 or +/-1 and equals ``sign_oracle``.
    """
    idx = check_index(indices)
    dim = len(idx)
    if dim < 2:
        raise UnsupportedDimensionError(
            "the product closed form needs dimension >= 2"
        )
    value = Fraction(1)
    for p in range(1, dim):
        top = idx[dim - p]  # n_{N+1-p} with 1-based index N+1-p
        for q in range(1, dim - p + 1):
            value *= Fraction(top - idx[q - 1], dim + 1 - p - q)
    assert value.denominator == 1, "product form must collapse to an integer"
    return int(value)


def epsilon_generalized(indices: Sequence[int], values: Sequence) -> "Fraction | complex":
    """Symbol value with index differences replaced by table differences.

    ``values`` supplies an injective map g on {1..N} (entry k-1 holds
    g(k)); the result is
    prod (g(n_{N+1-p}) - g(n_q)) / (g(N+1-p) - g(q)),
    which equals ``sign_oracle`` exactly for rational tables and up to
    rounding for float/complex ones.  A table with two equal entries
    makes a denominator vanish and raises
    :class:`DegenerateDenominatorError`.
    """
    idx = check_index(indices)
    dim = len(idx)
    if dim < 2:
        raise UnsupportedDimensionError(
            "the generalized closed form needs dimension >= 2"
        )
    table = tuple(values)
    if len(table) != dim:
        raise InputDomainError(
            f"value table must have one entry per index ({dim}), got {len(table)}"
        )
    for a in range(dim):
        for b in range(a + 1, dim):
            if table[a] == table[b]:
                raise DegenerateDenominatorError(
                    f"table is not injective: entries {a + 1} and {b + 1} coincide"
                )
    exact = all(isinstance(v, EXACT_SCALARS) for v in table)
    value = Fraction(1) if exact else complex(1)
    for p in range(1, dim):
        top = dim + 1 - p
        g_top = table[idx[dim - p] - 1]
        for q in range(1, dim - p + 1):
            num = g_top - table[idx[q - 1] - 1]
            den = table[top - 1] - table[q - 1]
            if exact:
                value *= Fraction(num, 1) / Fraction(den, 1)
            else:
                value *= complex(num) / complex(den)
    return value


def gamma_int(k: int) -> int:
    """Gamma function on positive integers: (k-1)!."""
    if not isinstance(k, int) or k < 1:
        raise InputDomainError(f"gamma_int needs a positive integer, got {k!r}")
    return factorial(k - 1)


def kron_delta(m: int, p: int) -> int:
    """Kronecker delta on {1,2,3} through a gamma/cosine identity.

    Computes, entirely in integers,
        [2*G(m)*cos(p*pi) + m - 2]*(G(p) - 1) - (p*G(m) - m)*cos(p*pi) + 1
    with G(k) = (k-1)! and cos(p*pi) = (-1)**p, which collapses to
    1 when m == p and 0 otherwise.
    """
    if m not in (1, 2, 3) or p not in (1, 2, 3):
        raise InputDomainError(
            f"kron_delta is defined for arguments in {{1, 2, 3}}, got ({m}, {p})"
        )
    gm = gamma_int(m)
    gp = gamma_int(p)
    cos_p = (-1) ** p
    return (2 * gm * cos_p + m - 2) * (gp - 1) - (p * gm - m) * cos_p + 1


def enumerate_indices(dim: int) -> Iterator[MultiIndex]:
    """All dim**dim index tuples over {1..dim}, in lexicographic order."""
    if not isinstance(dim, int) or dim < 1:
        raise InputDomainError(f"dimension must be a positive integer, got {dim!r}")
    return itertools.product(range(1, dim + 1), repeat=dim)
