"""Cross-verification sweeps tying each closed form back to its oracle.

Three checks are exposed: the product closed form against inversion
parity (exhaustive), the determinant transform against brute-force
summation (exact polynomial equality), and the Laplace determinant
against the Z-domain form composed with the bilinear map (seeded
random sampling).  All sampling uses an explicit ``random.Random``
instance so identical seeds reproduce identical sweeps everywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .epsilon import enumerate_indices, epsilon_product, sign_oracle
from .sdomain import TustinParams, laplace_determinant, tustin_map
from .ztransform import brute_force_ztransform, determinant_ztransform


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: tuple[str, ...] = field(default_factory=tuple)


def rel_close(a, b, tol: float) -> bool:
    """Relative closeness with an absolute floor of 1."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def random_z_point(rng: random.Random, dim: int, min_modulus: float = 0.2) -> tuple:
    """Random complex point with every coordinate off the origin."""
    point = []
    while len(point) < dim:
        z = complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
        if abs(z) >= min_modulus:
            point.append(z)
    return tuple(point)


def random_s_point(rng: random.Random, params: TustinParams, margin: float = 0.25) -> tuple:
    """Random complex point keeping |T_q s_q -+ 2| clear of zero.

    Staying away from T_q s_q = -2 avoids the transform's poles;
    staying away from T_q s_q = +2 keeps the bilinear map itself
    regular.
    """
    point = []
    for q in range(params.dim):
        t = float(params.steps[q])
        while True:
            s = complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
            if abs(t * s - 2) >= margin and abs(t * s + 2) >= margin:
                point.append(s)
                break
    return tuple(point)


def random_rational_s_point(
    rng: random.Random, params: TustinParams, denominator: int = 8
) -> tuple:
    """Random exact rational point off the hyperplanes T_q s_q = -+2.

    Exact coordinates let both transform routes evaluate in rational
    arithmetic, so cross-checks at these points are free of the
    cancellation noise that the expanded numerators pick up in floating
    point at higher dimensions.
    """
    point = []
    for q in range(params.dim):
        step = params.steps[q]
        while True:
            s = Fraction(rng.randint(-3 * denominator, 3 * denominator), denominator)
            if step * s not in (2, -2):
                point.append(s)
                break
    return tuple(point)


def check_epsilon_formulas(dim: int) -> CheckResult:
    """Product closed form vs inversion parity over all dim**dim tuples."""
    mismatches = [
        idx
        for idx in enumerate_indices(dim)
        if epsilon_product(idx) != sign_oracle(idx)
    ]
    details = tuple(f"mismatch at {idx}" for idx in mismatches[:20])
    return CheckResult(
        name=f"product closed form vs permutation parity, all {dim}**{dim} tuples",
        passed=not mismatches,
        details=details,
    )


def check_determinant_oracle(dim: int) -> CheckResult:
    """Determinant transform vs brute-force summation, exact equality."""
    determinant = determinant_ztransform(dim).expanded()
    brute = brute_force_ztransform(dim).expanded()
    difference = determinant - brute
    details = ()
    if not difference.is_zero:
        details = (f"{len(difference.terms)} differing monomials",)
    return CheckResult(
        name=f"determinant closed form vs brute-force transform, dim={dim}",
        passed=difference.is_zero,
        details=details,
    )


def check_tustin_consistency(
    dim: int,
    params: TustinParams | None = None,
    samples: int = 100,
    seed: int = 0,
    tol: float = 1e-10,
) -> CheckResult:
    """Z-domain form composed with the bilinear map vs the Laplace determinant.

    Samples exact rational s-points so both routes evaluate with no
    rounding: any surviving difference is a true algebraic mismatch.
    (The expanded higher-dimensional numerators cancel catastrophically
    under floating point, which would otherwise drown tolerances near
    1e-10.)
    """
    if params is None:
        params = TustinParams.uniform(dim)
    z_form = determinant_ztransform(dim)
    s_form = laplace_determinant(dim, params)
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        s_point = random_rational_s_point(rng, params)
        z_point = tuple(
            tustin_map(s, params.steps[q]) for q, s in enumerate(s_point)
        )
        via_z = z_form.evaluate(z_point)
        via_s = s_form.evaluate(s_point)
        if not rel_close(via_z, via_s, tol):
            failures.append(f"at s={s_point}: z-route {via_z} vs s-route {via_s}")
    return CheckResult(
        name=(
            f"bilinear substitution consistency, dim={dim}, "
            f"{samples} seeded rational points, tol={tol:g}"
        ),
        passed=not failures,
        details=tuple(failures[:20]),
    )
