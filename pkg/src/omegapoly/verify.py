"""Verification suites shared by the CLI and the test-suite.

Each suite yields ``Check`` records; a suite passes when every check does.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .codec import monomial_to_partition, omega_to_partitions, partition_to_monomial
from .engines import ENGINES, compute_omega, omega_product
from .identities import (
    check_factorization,
    check_functional_equation,
    factorization_j_range,
    uniform_color_count,
)
from .partitions import count_partitions, enumerate_partitions
from .poly import PartitionSpec

GRID_BASES = (2, 3, 4, 5)


def grid_lambdas(b: int) -> list[tuple[int, ...]]:
    return [(1,), (2,), (3,), (1, 1), (2, 3), (1, 1, 1), (2, 2, 2), (b - 1,) * 3]


def default_grid() -> list[PartitionSpec]:
    """The built-in grid of specs; duplicates (e.g. ``(b-1,)*3`` at b=2) removed."""
    seen = []
    for b in GRID_BASES:
        for lams in grid_lambdas(b):
            spec = PartitionSpec(b, lams)
            if spec not in seen:
                seen.append(spec)
    return seen


class Check(NamedTuple):
    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.label}" + (f"  ({self.detail})" if self.detail else "")


def ones(spec: PartitionSpec) -> dict:
    return {idx: 1 for idx in spec.var_indices()}


def suite_engines(specs: Iterable[PartitionSpec], upto: int = 40) -> Iterator[Check]:
    """All engines agree, and agree with the partition count, for n <= upto."""
    for spec in specs:
        series = omega_product(upto, spec)
        bad = []
        for n in range(upto + 1):
            ref = series[n]
            for name in ENGINES:
                if name != "product" and compute_omega(n, spec, name) != ref:
                    bad.append(f"{name} differs at n={n}")
            count = count_partitions(n, spec)
            if len(ref) != count or ref.evaluate(ones(spec), ones(spec)) != count:
                bad.append(f"count mismatch at n={n}")
            if not ref.is_finished():
                bad.append(f"not multiplicity-free at n={n}")
        yield Check(f"engines {spec} n<={upto}", not bad, "; ".join(bad[:3]))


def suite_codec(specs: Iterable[PartitionSpec], upto: int = 30) -> Iterator[Check]:
    """Decoding Omega(n) gives exactly the enumerated partitions; round trips are identities."""
    for spec in specs:
        bad = []
        for n in range(upto + 1):
            P = compute_omega(n, spec)
            decoded = omega_to_partitions(P)
            listed = enumerate_partitions(n, spec)
            if len(set(decoded)) != len(decoded) or set(decoded) != set(listed):
                bad.append(f"bijection fails at n={n}")
            for m in P.monomials():
                if partition_to_monomial(monomial_to_partition(m, spec)) != m:
                    bad.append(f"monomial round trip fails at n={n}")
                    break
            for p in listed:
                if monomial_to_partition(partition_to_monomial(p), spec) != p:
                    bad.append(f"partition round trip fails at n={n}")
                    break
        yield Check(f"codec {spec} n<={upto}", not bad, "; ".join(bad[:3]))


def suite_factorization(
    specs: Iterable[PartitionSpec], upto: int = 8, ells: Iterable[int] = (1, 2)
) -> Iterator[Check]:
    """Omega(n b^ell + j) = Omega(n; Z^(T^ell)) Omega(j) for j in the guaranteed range."""
    ells = tuple(ells)
    for spec in specs:
        bad = []
        tried = 0
        for ell in ells:
            for j in factorization_j_range(spec, ell).values():
                for n in range(1, upto + 1):
                    tried += 1
                    if not check_factorization(n, ell, j, spec).holds:
                        bad.append(f"n={n} ell={ell} j={j}")
        yield Check(f"factorization {spec} n<={upto} ell in {ells}", not bad, f"{tried} cases" if not bad else "; ".join(bad[:3]))


def suite_functional(specs: Iterable[PartitionSpec], upto: int = 20) -> Iterator[Check]:
    for spec in specs:
        yield Check(f"functional equation {spec} deg<={upto}", check_functional_equation(spec, upto))


def suite_counts(specs: Iterable[PartitionSpec] | None = None, upto: int = 25) -> Iterator[Check]:
    """Uniform bounds b-1: the count is C(n+rho-1, rho-1), whatever b is."""
    if specs is None:
        specs = [PartitionSpec(b, (b - 1,) * rho) for rho in (1, 2, 3) for b in GRID_BASES]
    for spec in specs:
        b, rho = spec.base, spec.rho
        if any(lam != b - 1 for lam in spec.lambdas):
            yield Check(f"counts {spec}", False, "uniform count needs every bound equal to b-1")
            continue
        bad = [n for n in range(upto + 1) if count_partitions(n, spec) != uniform_color_count(n, b, rho)]
        yield Check(f"counts {spec} n<={upto}", not bad, f"n={bad[:5]}" if bad else "")


SUITES = {
    "engines": suite_engines,
    "codec": suite_codec,
    "factorization": suite_factorization,
    "functional": suite_functional,
    "counts": suite_counts,
}
