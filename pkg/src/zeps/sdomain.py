"""Laplace-domain forms obtained through Tustin's bilinear map.

Substituting z_q = (1 + s_q*T_q/2)/(1 - s_q*T_q/2) into the Z-domain
moment sums turns each S(p, q) into the rational function
R(p, q) = sum_{r=1}^{N} ((2 - T_q*s_q)/(2 + T_q*s_q))^r * r^p,
and the transform determinant into a determinant over these entries.
Every denominator is a power of (2 + T_q*s_q), so the poles sit on the
hyperplanes s_q = -2/T_q; the unit-circle/imaginary-axis geometry of
the bilinear map carries intra-dimensional stability across unchanged.

Step constants are exact rationals throughout.  ``float`` steps are
accepted and converted to their exact binary value, so the symbolic
path never leaves rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import EXACT_SCALARS, LaurentPoly, RationalFn, det, scale_value
from .errors import (
    EvaluationPoleError,
    InputDomainError,
    MapSingularityError,
    UnsupportedDimensionError,
)
from .epsilon import gamma_int
from .ztransform import scale_constant

MIN_DIM = 2
MAX_LAPLACE_DIM = 5


def _as_step(value) -> Fraction:
    if isinstance(value, Fraction):
        step = value
    elif isinstance(value, (int, float, str)):
        try:
            step = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputDomainError(f"cannot read step constant from {value!r}") from exc
    else:
        raise InputDomainError(
            f"step constants must be rational numbers, got {type(value).__name__}"
        )
    if step <= 0:
        raise InputDomainError(f"step constants must be positive, got {step}")
    return step


@dataclass(frozen=True)
class TustinParams:
    """Per-dimension positive step constants T_q for the bilinear map."""

    dim: int
    steps: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputDomainError(f"dimension must be a positive integer, got {self.dim!r}")
        steps = tuple(_as_step(t) for t in self.steps)
        if len(steps) != self.dim:
            raise InputDomainError(
                f"need one step constant per dimension ({self.dim}), got {len(steps)}"
            )
        object.__setattr__(self, "steps", steps)

    @classmethod
    def uniform(cls, dim: int, step=1) -> "TustinParams":
        return cls(dim, (step,) * dim)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.steps)) == 1


def tustin_map(s, T):
    """Bilinear map z = (1 + s*T/2)/(1 - s*T/2).

    Approximates z = exp(s*T): the imaginary axis lands on the unit
    circle, the left half-plane inside it, the right half-plane
    outside.  Exact inputs stay exact; the map is singular at s = 2/T.
    """
    step = _as_step(T)
    if isinstance(s, EXACT_SCALARS):
        half = Fraction(s) * step / 2
    else:
        half = complex(s) * float(step) / 2
    denominator = 1 - half
    if denominator == 0:
        raise MapSingularityError(f"bilinear map is singular at s = 2/T = {2 / step}")
    return (1 + half) / denominator


def _linear_factor(dim: int, q: int, step: Fraction, sign: int) -> LaurentPoly:
    """The polynomial 2 + sign*T_q*s_q inside the dim-variable ring."""
    return LaurentPoly.constant(dim, 2) + sign * step * LaurentPoly.variable(dim, q)


def _denominator_product(params: TustinParams, power: int) -> LaurentPoly:
    """prod_q (2 + T_q s_q)^power -- the shared pole structure."""
    product = LaurentPoly.constant(params.dim, 1)
    for q in range(1, params.dim + 1):
        product = product * _linear_factor(params.dim, q, params.steps[q - 1], +1) ** power
    return product


def r_sum(dim: int, p: int, q: int, params: TustinParams) -> RationalFn:
    """Bilinear image of the power-moment sum:
    R(p, q) = sum_{r=1}^{dim} ((2 - T_q s_q)/(2 + T_q s_q))^r r^p.

    Assembled over the common denominator (2 + T_q s_q)^dim, so the
    numerator is sum_r r^p (2 - T_q s_q)^r (2 + T_q s_q)^(dim - r).
    """
    _require_laplace_dim(dim)
    if not isinstance(p, int) or not 0 <= p <= dim - 1:
        raise InputDomainError(f"moment order p must lie in [0, {dim - 1}], got {p!r}")
    if not isinstance(q, int) or not 1 <= q <= dim:
        raise InputDomainError(f"variable index q must lie in [1, {dim}], got {q!r}")
    if params.dim != dim:
        raise InputDomainError(
            f"step constants are for dimension {params.dim}, expected {dim}"
        )
    step = params.steps[q - 1]
    minus = _linear_factor(dim, q, step, -1)
    plus = _linear_factor(dim, q, step, +1)
    numerator = LaurentPoly.zero(dim)
    for r in range(1, dim + 1):
        numerator = numerator + (r**p) * minus**r * plus ** (dim - r)
    return RationalFn(numerator, plus**dim)


def _require_laplace_dim(dim: int) -> None:
    if not isinstance(dim, int) or not MIN_DIM <= dim <= MAX_LAPLACE_DIM:
        raise UnsupportedDimensionError(
            f"dimension must be an integer in [{MIN_DIM}, {MAX_LAPLACE_DIM}], got {dim!r}"
        )


@dataclass(frozen=True)
class LaplaceResult:
    """One Laplace-domain closed form: ``scale * body`` with its step constants.

    The denominator of ``body`` vanishes only on the hyperplanes
    T_q s_q = -2.
    """

    dim: int
    scale: Fraction
    body: RationalFn
    params: TustinParams

    def evaluate(self, point: Sequence) -> "Fraction | complex":
        return scale_value(self.scale, self.body.evaluate(point))

    def varnames(self) -> tuple[str, ...]:
        return tuple(f"s{q}" for q in range(1, self.dim + 1))

    def latex_names(self) -> tuple[str, ...]:
        return tuple(f"s_{{{q}}}" for q in range(1, self.dim + 1))

    def to_text(self) -> str:
        body = self.body.to_text(self.varnames())
        if self.scale == 1:
            return body
        return f"{self.scale} * ({body})"

    def to_latex(self) -> str:
        """LaTeX with the denominator in its factored (T s + 2)-power style.

        The factored form is emitted only after checking that the body
        denominator really is prod_q (2 + T_q s_q)^dim; otherwise the
        expanded denominator is used verbatim.
        """
        names = self.latex_names()
        numerator = self.body.num.to_latex(names)
        if self.body.den == _denominator_product(self.params, self.dim):
            factors = []
            for q in range(1, self.dim + 1):
                step = self.params.steps[q - 1]
                if step == 1:
                    head = names[q - 1]
                elif step.denominator == 1:
                    head = f"{step.numerator} {names[q - 1]}"
                else:
                    head = f"\\frac{{{step.numerator}}}{{{step.denominator}}} {names[q - 1]}"
                factors.append(f"\\left({head} + 2\\right)^{{{self.dim}}}")
            denominator = " ".join(factors)
        else:
            denominator = self.body.den.to_latex(names)
        fraction = f"\\frac{{{numerator}}}{{{denominator}}}"
        if self.scale == 1:
            return fraction
        scale = f"\\frac{{{self.scale.numerator}}}{{{self.scale.denominator}}}"
        return f"{scale} \\, {fraction}"

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "T": [
                {"num": t.numerator, "den": t.denominator} for t in self.params.steps
            ],
            "scale": {"num": self.scale.numerator, "den": self.scale.denominator},
            "numerator": self.body.num.to_json_dict(),
            "denominator": self.body.den.to_json_dict(),
        }


def _default_params(dim: int, params: TustinParams | None) -> TustinParams:
    if params is None:
        return TustinParams.uniform(dim)
    if params.dim != dim:
        raise InputDomainError(
            f"step constants are for dimension {params.dim}, expected {dim}"
        )
    return params


def laplace_determinant(dim: int, params: TustinParams | None = None) -> LaplaceResult:
    """Laplace-domain transform as the scaled determinant over R(p, q) entries.

    Exactly the Z-domain determinant with every moment sum replaced by
    its bilinear image; agrees with evaluating the Z-domain form at
    z_q = tustin_map(s_q, T_q).
    """
    _require_laplace_dim(dim)
    params = _default_params(dim, params)
    matrix = [[r_sum(dim, p, q, params) for q in range(1, dim + 1)] for p in range(dim)]
    body = det(matrix)
    return LaplaceResult(dim, Fraction(1, scale_constant(dim)), body, params)


def laplace_2d_closed(params: TustinParams) -> LaplaceResult:
    """Direct two-dimensional closed form (uniform step T):

        4T (s1 - s2) (T s1 - 2)(T s2 - 2) / ((T s1 + 2)^2 (T s2 + 2)^2)

    Cross-multiplication-equal to ``laplace_determinant(2, params)``.
    """
    if params.dim != 2:
        raise InputDomainError(f"closed 2-D form needs dimension 2, got {params.dim}")
    if not params.is_uniform:
        raise InputDomainError("closed 2-D form is stated for a single uniform T")
    step = params.steps[0]
    s1 = LaurentPoly.variable(2, 1)
    s2 = LaurentPoly.variable(2, 2)
    numerator = (
        (4 * step)
        * (s1 - s2)
        * (step * s1 - 2)
        * (step * s2 - 2)
    )
    denominator = (
        _linear_factor(2, 1, step, +1) ** 2 * _linear_factor(2, 2, step, +1) ** 2
    )
    return LaplaceResult(2, Fraction(1), RationalFn(numerator, denominator), params)


def laplace_compact_3d(params: TustinParams | None = None) -> Callable:
    """Numeric evaluator for the gamma-indexed three-dimensional form.

    Returns a function of one s-point computing
        (1/2) sum_{m=1}^{3} sum_{k=1}^{2} sum_{r1,r2,r3=1}^{3}
            w_1^{r1} w_{k+1}^{r2} w_{4-k}^{r3}
            (-1)^{k+m} r1^{m-1} r2^{G(m)-m+1} r3^{3-G(m)}
    with w_q = (2 - T_q s_q)/(2 + T_q s_q); it agrees with
    ``laplace_determinant(3, params)`` at every nonsingular point.
    """
    params = _default_params(3, params)

    def evaluate(point: Sequence) -> "Fraction | complex":
        coords = tuple(point)
        if len(coords) != 3:
            raise InputDomainError(f"point must have 3 coordinates, got {len(coords)}")
        w = [None]  # 1-based
        for q in (1, 2, 3):
            step = params.steps[q - 1]
            s = coords[q - 1]
            if isinstance(s, EXACT_SCALARS):
                ts = Fraction(s) * step
            else:
                ts = complex(s) * float(step)
            denominator = 2 + ts
            if denominator == 0:
                raise EvaluationPoleError(
                    f"point sits on the pole hyperplane T_{q} s_{q} = -2"
                )
            w.append((2 - ts) / denominator)
        total = 0
        for m in (1, 2, 3):
            g = gamma_int(m)
            for k in (1, 2):
                sign = (-1) ** (k + m)
                for r1 in (1, 2, 3):
                    for r2 in (1, 2, 3):
                        for r3 in (1, 2, 3):
                            total += (
                                sign
                                * w[1] ** r1
                                * w[k + 1] ** r2
                                * w[4 - k] ** r3
                                * r1 ** (m - 1)
                                * r2 ** (g - m + 1)
                                * r3 ** (3 - g)
                            )
        return total / 2 if isinstance(total, complex) else Fraction(total, 2)

    return evaluate


@dataclass(frozen=True)
class PoleZeroReport:
    """Pole/zero structure of the two-dimensional Laplace transform.

    ``poles`` and ``intra_zeros`` hold one (location, multiplicity)
    pair per dimension, with exact rational locations; ``inter_zeros``
    describes zeros living on relations between variables.
    """

    dim: int
    step: Fraction
    poles: tuple[tuple[Fraction, int], ...]
    intra_zeros: tuple[tuple[Fraction, int], ...]
    inter_zeros: tuple[str, ...]

    def to_text(self) -> str:
        lines = [f"pole/zero report (dim={self.dim}, T={self.step})"]
        for q in range(self.dim):
            pole, pole_mult = self.poles[q]
            zero, zero_mult = self.intra_zeros[q]
            lines.append(
                f"  dimension {q + 1}: pole at {pole} (multiplicity {pole_mult}); "
                f"zero at {zero} (multiplicity {zero_mult})"
            )
        for description in self.inter_zeros:
            lines.append(f"  inter-dimensional zero: {description}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "T": {"num": self.step.numerator, "den": self.step.denominator},
            "poles": [
                {
                    "dimension": q + 1,
                    "location": {"num": loc.numerator, "den": loc.denominator},
                    "multiplicity": mult,
                }
                for q, (loc, mult) in enumerate(self.poles)
            ],
            "intra_zeros": [
                {
                    "dimension": q + 1,
                    "location": {"num": loc.numerator, "den": loc.denominator},
                    "multiplicity": mult,
                }
                for q, (loc, mult) in enumerate(self.intra_zeros)
            ],
            "inter_zeros": list(self.inter_zeros),
        }


def pole_zero_report_2d(params: TustinParams) -> PoleZeroReport:
    """Pole/zero structure of the 2-D transform for a uniform step T.

    The Z-domain poles at the origin land at s_q = -2/T with their
    multiplicity (2) intact; new intra-dimensional zeros appear at
    s_q = +2/T, and the inter-dimensional zero on s_1 = s_2 survives
    the map.
    """
    if params.dim != 2:
        raise InputDomainError(f"pole/zero report covers dimension 2, got {params.dim}")
    if not params.is_uniform:
        raise InputDomainError("pole/zero report is stated for a single uniform T")
    step = params.steps[0]
    pole = Fraction(-2) / step
    zero = Fraction(2) / step
    return PoleZeroReport(
        dim=2,
        step=step,
        poles=((pole, 2), (pole, 2)),
        intra_zeros=((zero, 1), (zero, 1)),
        inter_zeros=("s1 = s2",),
    )
