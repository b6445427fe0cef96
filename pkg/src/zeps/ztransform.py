"""Z-domain closed forms for the Levi-Civita symbol.

The N-dimensional transform attaches one complex variable z_q to each
tensor slot and sums the symbol over all N**N index tuples against
z_1^{-n_1} ... z_N^{-n_N}.  Because the symbol is a scaled Vandermonde
product in its indices, that full sum collapses, by multilinearity in
the columns, to a scaled determinant of power-moment sums
S(p, q) = sum_{r=1}^{N} r^p z_q^{-r}.  Both routes are built here --
the brute-force summation as the oracle and the determinant as the
canonical closed form -- together with a gamma-indexed double-sum
variant special to three dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LaurentPoly, det, scale_value
from .epsilon import enumerate_indices, gamma_int, sign_oracle
from .errors import InputDomainError, UnsupportedDimensionError

MIN_DIM = 2
MAX_DIM = 6


def _require_dim(dim: int, low: int, high: int) -> None:
    if not isinstance(dim, int) or not low <= dim <= high:
        raise UnsupportedDimensionError(
            f"dimension must be an integer in [{low}, {high}], got {dim!r}"
        )


@dataclass(frozen=True)
class ROCSpec:
    """Region-of-convergence metadata: one nonzero-modulus constraint per variable.

    All transforms here are finite Laurent polynomials, so the only
    genuine singularities sit at z_q = 0; the constraints record that
    and nothing more.
    """

    dim: int
    constraints: tuple[str, ...]


def roc(dim: int) -> ROCSpec:
    """Per-dimension constraint set ``z_q != 0`` for q = 1..dim."""
    if not isinstance(dim, int) or dim < MIN_DIM:
        raise UnsupportedDimensionError(
            f"region of convergence is built for dimension >= {MIN_DIM}, got {dim!r}"
        )
    return ROCSpec(dim, tuple(f"z{q} != 0" for q in range(1, dim + 1)))


@dataclass(frozen=True)
class TransformResult:
    """One closed-form Z-domain transform: ``scale * body`` plus ROC metadata.

    ``body`` is a Laurent polynomial in z_1..z_dim whose exponents all
    lie in [-dim, -1] per variable (the summation window is 1..dim).
    """

    dim: int
    scale: Fraction
    body: LaurentPoly
    roc: ROCSpec

    def expanded(self) -> LaurentPoly:
        """The transform as a single canonical polynomial, scale folded in."""
        return self.scale * self.body

    def evaluate(self, point: Sequence) -> "Fraction | complex":
        return scale_value(self.scale, self.body.evaluate(point))

    def varnames(self) -> tuple[str, ...]:
        return tuple(f"z{q}" for q in range(1, self.dim + 1))

    def latex_names(self) -> tuple[str, ...]:
        return tuple(f"z_{{{q}}}" for q in range(1, self.dim + 1))

    def to_text(self) -> str:
        body = self.body.to_text(self.varnames())
        if self.scale == 1:
            return body
        return f"{self.scale} * ({body})"

    def to_latex(self) -> str:
        body = self.body.to_latex(self.latex_names())
        if self.scale == 1:
            return body
        scale = f"\\frac{{{self.scale.numerator}}}{{{self.scale.denominator}}}"
        return f"{scale} \\left( {body} \\right)"

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "scale": {
                "num": self.scale.numerator,
                "den": self.scale.denominator,
            },
            "body": self.body.to_json_dict(),
            "roc": list(self.roc.constraints),
        }


def heaviside(n: int, n0: int) -> int:
    """Discrete unit step: 0 while n < n0, 1 from n0 on."""
    return 0 if n < n0 else 1


def s_sum(dim: int, p: int, q: int) -> LaurentPoly:
    """Power-moment sum S(p, q) = sum_{r=1}^{dim} r^p z_q^{-r}.

    This is the single-variable transform of n^p gated to the window
    1..dim by a pair of step functions; it lives in the full
    dim-variable ring so matrix entries for different q multiply
    directly.
    """
    _require_dim(dim, MIN_DIM, MAX_DIM)
    if not isinstance(p, int) or not 0 <= p <= dim - 1:
        raise InputDomainError(f"moment order p must lie in [0, {dim - 1}], got {p!r}")
    if not isinstance(q, int) or not 1 <= q <= dim:
        raise InputDomainError(f"variable index q must lie in [1, {dim}], got {q!r}")
    terms = {}
    for r in range(1, dim + 1):
        exponents = [0] * dim
        exponents[q - 1] = -r
        terms[tuple(exponents)] = Fraction(r**p)
    return LaurentPoly(dim, terms)


def scale_constant(dim: int) -> int:
    """Denominator of the symbol's product form at the identity tuple.

    The double loop multiplies (dim+1-p-q) over 1 <= p <= dim-1,
    1 <= q <= dim-p; the result equals the factorial product
    1! * 2! * ... * (dim-1)!.
    """
    if not isinstance(dim, int) or dim < MIN_DIM:
        raise UnsupportedDimensionError(
            f"scale constant is defined for dimension >= {MIN_DIM}, got {dim!r}"
        )
    value = 1
    for p in range(1, dim):
        for q in range(1, dim - p + 1):
            value *= dim + 1 - p - q
    return value


def brute_force_ztransform(dim: int) -> TransformResult:
    """Oracle transform: direct summation over all dim**dim index tuples.

    Exactly dim! tuples survive (the permutations), each contributing a
    distinct monomial with coefficient +/-1.
    """
    _require_dim(dim, MIN_DIM, MAX_DIM)
    terms = {}
    for idx in enumerate_indices(dim):
        sign = sign_oracle(idx)
        if sign:
            terms[tuple(-n for n in idx)] = Fraction(sign)
    return TransformResult(dim, Fraction(1), LaurentPoly(dim, terms), roc(dim))


def determinant_ztransform(dim: int) -> TransformResult:
    """Canonical closed form: scaled determinant of the moment-sum matrix.

    Entry (row p, column q) of the dim x dim matrix is s_sum(dim, p, q)
    with p = 0..dim-1 down the rows and q = 1..dim across the columns;
    the determinant divided by ``scale_constant(dim)`` reproduces the
    brute-force transform exactly.
    """
    _require_dim(dim, MIN_DIM, MAX_DIM)
    matrix = [[s_sum(dim, p, q) for q in range(1, dim + 1)] for p in range(dim)]
    body = det(matrix)
    return TransformResult(dim, Fraction(1, scale_constant(dim)), body, roc(dim))


def compact_form_3d() -> TransformResult:
    """Gamma-indexed double-sum form of the three-dimensional transform.

    Expands the 3x3 determinant down its first column as
    (1/2) * sum_{m=1}^{3} sum_{k=1}^{2} (-1)^{m+k}
        S(m-1, 1) * S(G(m)-m+1, k+1) * S(3-G(m), 4-k)
    with G the integer gamma function; the result equals
    ``determinant_ztransform(3)`` term for term.
    """
    total = LaurentPoly.zero(3)
    for m in (1, 2, 3):
        g = gamma_int(m)
        for k in (1, 2):
            sign = (-1) ** (m + k)
            product = (
                s_sum(3, m - 1, 1)
                * s_sum(3, g - m + 1, k + 1)
                * s_sum(3, 3 - g, 4 - k)
            )
            total = total + sign * product
    return TransformResult(3, Fraction(1, 2), total, roc(3))
