"""Exact multivariate Laurent polynomials and rational functions.

Coefficients are arbitrary-precision :class:`fractions.Fraction`
values; exponent vectors are plain integer tuples and may carry
negative entries.  Floating point enters only at evaluation time, and
only when the evaluation point itself is inexact.

Variables are positional: a polynomial of arity N has variables
numbered 1..N, and entry i-1 of each exponent tuple belongs to
variable i.  Terms are kept in a canonical map (no zero coefficients),
so two equal polynomials always carry identical term maps; the
serialization order is graded-lexicographic, highest first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    DegenerateDenominatorError,
    EvaluationPoleError,
    InputDomainError,
)

EXACT_SCALARS = (int, Fraction)

MAX_DET_SIDE = 8


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InputDomainError(
        f"coefficients must be integers or Fractions, got {type(value).__name__}"
    )


def _grlex_key(exponents: tuple[int, ...]) -> tuple:
    return (sum(exponents), exponents)


def _default_names(arity: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, arity + 1))


class LaurentPoly:
    """Canonical multivariate Laurent polynomial over the rationals.

    Instances are immutable values; every operation returns a fresh
    polynomial.  Scalars (``int``/``Fraction``) mix freely on either
    side of ``+``, ``-``, ``*`` and ``==``.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Sequence[int], object] | None = None):
        if not isinstance(arity, int) or arity < 1:
            raise InputDomainError(f"arity must be a positive integer, got {arity!r}")
        canonical: dict[tuple[int, ...], Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            key = tuple(exponents)
            if len(key) != arity:
                raise InputDomainError(
                    f"exponent tuple {key} does not match arity {arity}"
                )
            if not all(isinstance(e, int) for e in key):
                raise InputDomainError(f"exponents must be integers: {key}")
            value = _as_fraction(coeff)
            if value:
                canonical[key] = value
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly instances are immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "LaurentPoly":
        return cls(arity, {})

    @classmethod
    def constant(cls, arity: int, value) -> "LaurentPoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, arity: int, var: int, power: int = 1) -> "LaurentPoly":
        """Monomial ``x_var ** power``; ``var`` is 1-based."""
        if not 1 <= var <= arity:
            raise InputDomainError(f"variable {var} outside [1, {arity}]")
        exponents = [0] * arity
        exponents[var - 1] = power
        return cls(arity, {tuple(exponents): 1})

    @classmethod
    def monomial(cls, arity: int, exponents: Sequence[int], coeff=1) -> "LaurentPoly":
        return cls(arity, {tuple(exponents): coeff})

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded-lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.arity != self.arity:
                raise InputDomainError(
                    f"arity mismatch: {self.arity} vs {other.arity}"
                )
            return other
        if isinstance(other, EXACT_SCALARS):
            return LaurentPoly.constant(self.arity, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        merged = dict(self.terms)
        for exponents, coeff in rhs.terms.items():
            total = merged.get(exponents, 0) + coeff
            if total:
                merged[exponents] = total
            elif exponents in merged:
                del merged[exponents]
        return LaurentPoly(self.arity, merged)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        product: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in rhs.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                total = product.get(key, 0) + ca * cb
                if total:
                    product[key] = total
                elif key in product:
                    del product[key]
        return LaurentPoly(self.arity, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise InputDomainError(
                f"polynomial powers must be non-negative integers, got {exponent!r}"
            )
        result = LaurentPoly.constant(self.arity, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        rhs = self._coerce(other) if not isinstance(other, LaurentPoly) else other
        if rhs is None:
            return NotImplemented
        if isinstance(other, LaurentPoly) and other.arity != self.arity:
            return False
        return self.terms == rhs.terms

    __hash__ = None

    # -- evaluation ------------------------------------------------------

    def evaluate(self, point: Sequence) -> "Fraction | complex":
        """Value at ``point`` (one coordinate per variable).

        With all-exact coordinates (``int``/``Fraction``) the result is
        an exact ``Fraction``; otherwise coefficients and coordinates
        are taken to machine-precision ``complex``.  A zero coordinate
        under a negative exponent raises :class:`EvaluationPoleError`.
        """
        coords = tuple(point)
        if len(coords) != self.arity:
            raise InputDomainError(
                f"point has {len(coords)} coordinates, expected {self.arity}"
            )
        exact = all(isinstance(c, EXACT_SCALARS) for c in coords)
        for i in range(self.arity):
            if coords[i] == 0 and any(e[i] < 0 for e in self.terms):
                raise EvaluationPoleError(
                    f"variable {i + 1} is zero but occurs with a negative exponent"
                )
        bases = [Fraction(c) if exact else complex(c) for c in coords]
        power_cache: list[dict[int, object]] = [{} for _ in range(self.arity)]
        total = Fraction(0) if exact else complex(0)
        for exponents, coeff in self.terms.items():
            term = coeff if exact else complex(coeff)
            for i, e in enumerate(exponents):
                if e == 0:
                    continue
                cache = power_cache[i]
                if e not in cache:
                    cache[e] = bases[i] ** e
                term = term * cache[e]
            total = total + term
        return total

    # -- rendering and serialization --------------------------------------

    def to_text(self, varnames: Sequence[str] | None = None) -> str:
        """Deterministic plain-text form, e.g. ``z1^-1*z2^-2 - z1^-2*z2^-1``."""
        if self.is_zero:
            return "0"
        names = tuple(varnames) if varnames else _default_names(self.arity)
        pieces: list[str] = []
        for exponents, coeff in self.sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(exponents)
                if e != 0
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def to_latex(self, varnames: Sequence[str] | None = None) -> str:
        """LaTeX form with explicit negative exponents, e.g. ``z_{1}^{-1}``."""
        if self.is_zero:
            return "0"
        names = tuple(varnames) if varnames else _default_names(self.arity)
        pieces: list[str] = []
        for exponents, coeff in self.sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{{{e}}}"
                for i, e in enumerate(exponents)
                if e != 0
            ]
            magnitude = abs(coeff)
            if magnitude.denominator == 1:
                mag_tex = str(magnitude.numerator)
            else:
                mag_tex = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
            if not factors:
                body = mag_tex
            elif magnitude == 1:
                body = " ".join(factors)
            else:
                body = " ".join([mag_tex] + factors)
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def to_json_dict(self) -> dict:
        """JSON-ready dict: ``{arity, terms: [{exp, num, den}, ...]}``.

        Coefficients are decimal strings of exact integers and terms
        follow the graded-lexicographic order, so the output is
        bit-stable for equal polynomials.
        """
        return {
            "arity": self.arity,
            "terms": [
                {
                    "exp": list(exponents),
                    "num": str(coeff.numerator),
                    "den": str(coeff.denominator),
                }
                for exponents, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPoly":
        try:
            arity = data["arity"]
            terms = {
                tuple(entry["exp"]): Fraction(int(entry["num"]), int(entry["den"]))
                for entry in data["terms"]
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise InputDomainError(f"malformed polynomial JSON: {exc}") from exc
        return cls(arity, terms)

    def __repr__(self):
        return f"LaurentPoly({self.arity}, {self.to_text()})"

    __str__ = to_text


class RationalFn:
    """Quotient of two Laurent polynomials, kept unreduced.

    There is no gcd normal form; equality is decided by
    cross-multiplication.  The only simplification applied is the
    cancellation of a common monomial factor (a unit of the Laurent
    ring), which keeps repeated arithmetic from drifting into deep
    exponents.  Addition recognizes operands with identical
    denominators and sums numerators directly, so determinant
    accumulation over a column-structured matrix keeps one shared
    denominator instead of squaring it at every step.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if not isinstance(num, LaurentPoly):
            raise InputDomainError("numerator must be a LaurentPoly")
        if den is None:
            den = LaurentPoly.constant(num.arity, 1)
        if not isinstance(den, LaurentPoly):
            raise InputDomainError("denominator must be a LaurentPoly")
        if num.arity != den.arity:
            raise InputDomainError(
                f"arity mismatch: {num.arity} vs {den.arity}"
            )
        if den.is_zero:
            raise DegenerateDenominatorError("denominator is identically zero")
        if num.is_zero:
            den = LaurentPoly.constant(num.arity, 1)
        else:
            shift = _common_monomial_shift(num, den)
            if any(shift):
                num = _shift_exponents(num, shift)
                den = _shift_exponents(den, shift)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn instances are immutable")

    @property
    def arity(self) -> int:
        return self.num.arity

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "RationalFn":
        return cls(LaurentPoly.zero(arity))

    @classmethod
    def constant(cls, arity: int, value) -> "RationalFn":
        return cls(LaurentPoly.constant(arity, value))

    # -- field operations -------------------------------------------------

    def _coerce(self, other) -> "RationalFn | None":
        if isinstance(other, RationalFn):
            if other.arity != self.arity:
                raise InputDomainError(
                    f"arity mismatch: {self.arity} vs {other.arity}"
                )
            return other
        if isinstance(other, LaurentPoly):
            return RationalFn(other)
        if isinstance(other, EXACT_SCALARS):
            return RationalFn.constant(self.arity, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.den == rhs.den:
            return RationalFn(self.num + rhs.num, self.den)
        return RationalFn(
            self.num * rhs.den + rhs.num * self.den, self.den * rhs.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return RationalFn(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs.num.is_zero:
            raise DegenerateDenominatorError("division by the zero rational function")
        return RationalFn(self.num * rhs.den, self.den * rhs.num)

    def __eq__(self, other):
        if isinstance(other, (RationalFn, LaurentPoly)) and other.arity != self.arity:
            return False
        rhs = self._coerce(other) if not isinstance(other, RationalFn) else other
        if rhs is None:
            return NotImplemented
        return (self.num * rhs.den - rhs.num * self.den).is_zero

    __hash__ = None

    # -- evaluation ------------------------------------------------------

    def evaluate(self, point: Sequence) -> "Fraction | complex":
        """Exact or complex value of num/den at ``point``."""
        den_value = self.den.evaluate(point)
        if den_value == 0:
            raise EvaluationPoleError("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / den_value

    # -- rendering and serialization --------------------------------------

    def to_text(self, varnames: Sequence[str] | None = None) -> str:
        if self.den == 1:
            return self.num.to_text(varnames)
        return f"({self.num.to_text(varnames)}) / ({self.den.to_text(varnames)})"

    def to_latex(self, varnames: Sequence[str] | None = None) -> str:
        if self.den == 1:
            return self.num.to_latex(varnames)
        return (
            f"\\frac{{{self.num.to_latex(varnames)}}}"
            f"{{{self.den.to_latex(varnames)}}}"
        )

    def to_json_dict(self) -> dict:
        return {
            "arity": self.arity,
            "numerator": self.num.to_json_dict(),
            "denominator": self.den.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "RationalFn":
        try:
            num = LaurentPoly.from_json_dict(data["numerator"])
            den = LaurentPoly.from_json_dict(data["denominator"])
        except (KeyError, TypeError) as exc:
            raise InputDomainError(f"malformed rational-function JSON: {exc}") from exc
        return cls(num, den)

    def __repr__(self):
        return f"RationalFn({self.to_text()})"

    __str__ = to_text


def _common_monomial_shift(num: LaurentPoly, den: LaurentPoly) -> tuple[int, ...]:
    """Per-variable exponent of the largest monomial dividing both parts."""
    arity = num.arity
    shift = []
    for i in range(arity):
        low_num = min(e[i] for e in num.terms)
        low_den = min(e[i] for e in den.terms)
        shift.append(min(low_num, low_den))
    return tuple(shift)


def _shift_exponents(poly: LaurentPoly, shift: Sequence[int]) -> LaurentPoly:
    return LaurentPoly(
        poly.arity,
        {
            tuple(e - s for e, s in zip(exponents, shift)): coeff
            for exponents, coeff in poly.terms.items()
        },
    )


def det(matrix: Sequence[Sequence]):
    """Determinant of a small square matrix of ring elements.

    Works for any elements supporting ``+``, unary ``-`` and ``*``
    (here: :class:`LaurentPoly` or :class:`RationalFn`).  Uses cofactor
    expansion with memoization over column subsets, so each minor is
    computed once.  The side is capped at ``MAX_DET_SIDE``.
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise InputDomainError("determinant needs a non-empty square matrix")
    if n > MAX_DET_SIDE:
        raise InputDomainError(f"determinant side capped at {MAX_DET_SIDE}, got {n}")
    arities = {
        element.arity
        for row in matrix
        for element in row
        if hasattr(element, "arity")
    }
    if len(arities) > 1:
        raise InputDomainError(f"matrix entries mix arities: {sorted(arities)}")

    memo: dict[tuple[int, ...], object] = {}

    def minor(cols: tuple[int, ...]):
        row = n - len(cols)
        if len(cols) == 1:
            return matrix[row][cols[0]]
        if cols in memo:
            return memo[cols]
        total = None
        for i, c in enumerate(cols):
            term = matrix[row][c] * minor(cols[:i] + cols[i + 1 :])
            if i % 2:
                term = -term
            total = term if total is None else total + term
        memo[cols] = total
        return total

    return minor(tuple(range(n)))


def scale_value(scale: Fraction, value):
    """Multiply an evaluation result by an exact rational scale."""
    if isinstance(value, EXACT_SCALARS):
        return scale * value
    return float(scale) * value
