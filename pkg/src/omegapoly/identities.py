"""Checks of structural identities satisfied by the Omega polynomials."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .engines import compute_omega, omega_product, y_coefficient
from .poly import Monomial, OmegaPoly, PartitionSpec, poly_render, poly_to_json


class JRange(NamedTuple):
    """Inclusive range of offsets ``j``; ``unrestricted`` marks the whole ``[0, b**ell - 1]``."""

    lo: int
    hi: int
    unrestricted: bool = False

    def __contains__(self, j: object) -> bool:
        return isinstance(j, int) and self.lo <= j <= self.hi

    def values(self) -> range:
        return range(self.lo, self.hi + 1)


def factorization_j_range(spec: PartitionSpec, ell: int) -> JRange:
    """Offsets ``j`` for which ``Omega(n*b**ell + j)`` is known to factor.

    For ``b <= lambda`` the range is ``[(lambda-b+1)(b**ell-1)/(b-1), b**ell-1]``
    (possibly empty); for ``b > lambda`` every ``0 <= j < b**ell`` works.
    """
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    b, lam = spec.base, spec.lambda_total
    top = b**ell - 1
    if b > lam:
        return JRange(0, top, True)
    return JRange((lam - b + 1) * (top // (b - 1)), top)


@dataclass(frozen=True)
class FactorizationReport:
    n: int
    ell: int
    j: int
    holds: bool
    lhs: OmegaPoly
    rhs_left: OmegaPoly
    rhs_right: OmegaPoly
    first_difference: Monomial | None = None
    in_range: bool = False

    @property
    def target(self) -> int:
        return self.n * self.lhs.spec.base**self.ell + self.j

    def to_text(self, notation: str | None = None) -> str:
        head = (
            f"Omega({self.target}) = Omega({self.n}; Z^(T^{self.ell})) * Omega({self.j})"
            f"  [{'holds' if self.holds else 'fails'}"
            f"{', j in guaranteed range' if self.in_range else ''}]"
        )
        if self.holds:
            left = poly_render(self.rhs_left, notation=notation)
            right = poly_render(self.rhs_right, notation=notation)
            return f"{head}\n  = ({left})*({right})"
        diff = poly_render(OmegaPoly(self.lhs.spec, {self.first_difference: 1}), notation=notation)
        return f"{head}\n  first differing monomial: {diff}"

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "ell": self.ell,
                "j": self.j,
                "target": self.target,
                "holds": self.holds,
                "in_range": self.in_range,
                "lhs": poly_to_json(self.lhs),
                "rhs_left": poly_to_json(self.rhs_left),
                "rhs_right": poly_to_json(self.rhs_right),
                "first_difference": None
                if self.first_difference is None
                else poly_to_json(OmegaPoly(self.lhs.spec, {self.first_difference: 1}))["terms"][0],
            }
        )


def check_factorization(
    n: int, ell: int, j: int, spec: PartitionSpec, engine: str = "recurrence"
) -> FactorizationReport:
    """Compare ``Omega(n*b**ell + j)`` with ``Omega(n; Z^(T^ell)) * Omega(j)``.

    Offsets outside the guaranteed range are allowed; the report just says
    whether the identity happens to hold.
    """
    if n < 1 or ell < 1:
        raise ValueError("n and ell must be positive")
    b = spec.base
    if not 0 <= j <= b**ell - 1:
        raise ValueError(f"j must lie in [0, {b**ell - 1}], got {j}")
    lhs = compute_omega(n * b**ell + j, spec, engine)
    left = compute_omega(n, spec, engine).substitute_ZT(ell)
    right = compute_omega(j, spec, engine)
    product = left * right
    diff = lhs - product
    first = diff.monomials()[0] if diff else None
    return FactorizationReport(
        n, ell, j, not diff, lhs, left, right, first, j in factorization_j_range(spec, ell)
    )


def functional_equation_sides(spec: PartitionSpec, n_max: int) -> tuple[list[OmegaPoly], list[OmegaPoly]]:
    """Both sides of ``F(Z, q) = (1 + Y_1 q + ... + Y_lambda q^lambda) F(Z^T, q^b)`` up to ``q**n_max``."""
    series = omega_product(n_max, spec)
    b = spec.base
    lhs = series
    rhs = [OmegaPoly.zero(spec) for _ in range(n_max + 1)]
    for m in range(n_max // b + 1):
        shifted = series[m].substitute_ZT(1)
        for nu in range(spec.lambda_total + 1):
            deg = b * m + nu
            if deg > n_max:
                break
            rhs[deg] = rhs[deg] + y_coefficient(nu, spec) * shifted
    return lhs, rhs


def check_functional_equation(spec: PartitionSpec, n_max: int) -> bool:
    lhs, rhs = functional_equation_sides(spec, n_max)
    return all(a == c for a, c in zip(lhs, rhs))


def uniform_color_count(n: int, b: int, rho: int) -> int:
    """Number of partitions of ``n`` when every color bound is ``b - 1``.

    Does not depend on ``b``: it is ``C(n + rho - 1, rho - 1)``.
    """
    if n < 0 or b < 2 or rho < 1:
        raise ValueError("need n >= 0, b >= 2, rho >= 1")
    return comb(n + rho - 1, rho - 1)
