"""Four independent ways of computing ``Omega(n)`` for a partition spec.

* ``recurrence``  -- digit recurrence on ``n = b*m + j`` with the ``Y_nu``
  coefficient polynomials, memoized per ``(spec, n)``
* ``product``     -- truncated expansion of the infinite generating product
* ``explicit``    -- sum over ``M_b`` tuples weighted by starred multinomials
* ``convolution`` -- convolution of the single-color polynomials

Every engine returns a canonical :class:`OmegaPoly`, so results can be
compared with ``==``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterator

from .numtheory import d_support, d_transform, enumerate_Mb, starred_multinomial
from .poly import ExponentPoly, Monomial, OmegaPoly, PartitionSpec


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")


@lru_cache(maxsize=None)
def y_coefficient(nu: int, spec: PartitionSpec) -> OmegaPoly:
    """Sum of ``z[1,i_1] * ... * z[rho,i_rho]`` over ``i_1+...+i_rho = nu``.

    ``z[l,0]`` stands for 1; the result is 0 once ``nu`` exceeds the total bound.
    """
    terms: dict[Monomial, int] = {}
    if 0 <= nu <= spec.lambda_total:
        for combo in itertools.product(*(range(lam + 1) for lam in spec.lambdas)):
            if sum(combo) != nu:
                continue
            mono = Monomial.from_dict(
                {(color, i): ExponentPoly.one() for color, i in enumerate(combo, start=1) if i}
            )
            terms[mono] = terms.get(mono, 0) + 1
    return OmegaPoly(spec, terms)


def omega_recurrence(n: int, spec: PartitionSpec) -> OmegaPoly:
    _check_n(n)
    return _omega_rec(n, spec)


# Cache holds unshifted Omega(n); shifted copies are derived on demand.
# lru_cache is safe to share between threads.
@lru_cache(maxsize=None)
def _omega_rec(n: int, spec: PartitionSpec) -> OmegaPoly:
    if n == 0:
        return OmegaPoly.one(spec, 0)
    b = spec.base
    m, j = divmod(n, b)
    acc: dict[Monomial, int] = {}
    for k in range(spec.lambda_total // b + 1):
        if m - k < 0:
            break
        Y = y_coefficient(b * k + j, spec)
        if not Y:
            continue
        shifted = [(om.shift(1), oc) for om, oc in _omega_rec(m - k, spec).terms.items()]
        for ym, yc in Y.terms.items():
            for om, oc in shifted:
                mono = om * ym
                acc[mono] = acc.get(mono, 0) + yc * oc
    return OmegaPoly(spec, acc, n)


def omega_product(n_max: int, spec: PartitionSpec) -> list[OmegaPoly]:
    """Coefficients of ``q**0 .. q**n_max`` in the generating product."""
    _check_n(n_max)
    b = spec.base
    series: list[dict[Monomial, int]] = [{} for _ in range(n_max + 1)]
    series[0][Monomial()] = 1
    j = 0
    while b**j <= n_max:
        unit = b**j
        shift = ExponentPoly(((j, 1),))
        for color, lam in enumerate(spec.lambdas, start=1):
            factor = [(i * unit, Monomial.var(color, i, shift)) for i in range(1, lam + 1)]
            new = [dict(s) for s in series]
            for deg, mono in factor:
                for src in range(n_max + 1 - deg):
                    dst = new[src + deg]
                    for m, c in series[src].items():
                        key = m * mono
                        dst[key] = dst.get(key, 0) + c
            series = new
        j += 1
    return [OmegaPoly(spec, s, n) for n, s in enumerate(series)]


@lru_cache(maxsize=4096)
def _exponent_of(k: int, b: int) -> ExponentPoly:
    return ExponentPoly.from_powers(d_support(k, b))


def omega_explicit(n: int, spec: PartitionSpec) -> OmegaPoly:
    """Sum over ``k[l,i]`` in ``M_b`` with ``sum(i * k[l,i]) = n``.

    Each solution contributes the product over colors of the starred
    multinomial of ``(k[l,1], ..., k[l,lambda_l])`` times the monomial with
    ``z[l,i] ** d^b_{t[l,i]}(k[l,i])``.  A color tuple whose digit supports
    already overlap can never recover a nonzero starred multinomial, so such
    branches are cut early.
    """
    _check_n(n)
    b = spec.base
    variables = spec.var_indices()
    candidates = enumerate_Mb(n, b)
    masks = {k: d_transform(k, b, 2) for k in candidates}
    acc: dict[Monomial, int] = {}
    chosen: list[int] = []

    def search(pos: int, remaining: int, color_mask: int) -> None:
        if pos == len(variables):
            if remaining == 0:
                _emit()
            return
        color, mult = variables[pos]
        if mult == 1:
            color_mask = 0
        last = pos + 1 == len(variables)
        for k in candidates:
            cost = mult * k
            if cost > remaining:
                break
            if last and cost != remaining:
                continue
            if masks[k] & color_mask:
                continue
            chosen.append(k)
            search(pos + 1, remaining - cost, color_mask | masks[k])
            chosen.pop()

    def _emit() -> None:
        coeff = 1
        start = 0
        for lam in spec.lambdas:
            coeff *= starred_multinomial(chosen[start:start + lam], b)
            start += lam
        if not coeff:
            return
        mono = Monomial.from_dict(
            {idx: _exponent_of(k, b) for idx, k in zip(variables, chosen) if k}
        )
        acc[mono] = acc.get(mono, 0) + coeff

    search(0, n, 0)
    return OmegaPoly(spec, acc, n)


def stern_omega(n: int, base: int, lam: int) -> OmegaPoly:
    """Single-color generalized Stern polynomial ``omega^lam_b(n)``.

    Indexed from 1 like the classical Stern sequence: ``omega(0) = 0`` and
    ``omega(n + 1) = Omega(n)`` for the spec ``(base, (lam,))``.
    """
    spec = PartitionSpec(base, (lam,))
    if n == 0:
        return OmegaPoly.zero(spec)
    return omega_recurrence(n - 1, spec)


def _weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def omega_convolution(n: int, spec: PartitionSpec) -> OmegaPoly:
    """Sum over ``n_1+...+n_rho = n`` of products of single-color polynomials."""
    _check_n(n)
    per_color = []
    for color, lam in enumerate(spec.lambdas, start=1):
        relabel = {1: color}
        per_color.append(
            [
                [(m.recolor(relabel), c) for m, c in stern_omega(k + 1, spec.base, lam).terms.items()]
                for k in range(n + 1)
            ]
        )
    acc: dict[Monomial, int] = {}
    for comp in _weak_compositions(n, spec.rho):
        factors = [per_color[c][k] for c, k in enumerate(comp)]
        for picks in itertools.product(*factors):
            # colors are disjoint, so concatenating factor lists is the product
            mono = Monomial(tuple(sorted(f for m, _ in picks for f in m.factors)))
            coeff = 1
            for _, c in picks:
                coeff *= c
            acc[mono] = acc.get(mono, 0) + coeff
    return OmegaPoly(spec, acc, n)


ENGINES: dict[str, Callable[[int, PartitionSpec], OmegaPoly]] = {
    "recurrence": omega_recurrence,
    "product": lambda n, spec: omega_product(n, spec)[n],
    "explicit": omega_explicit,
    "convolution": omega_convolution,
}


def compute_omega(n: int, spec: PartitionSpec, engine: str = "recurrence") -> OmegaPoly:
    try:
        fn = ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from {sorted(ENGINES)}") from None
    return fn(n, spec)
