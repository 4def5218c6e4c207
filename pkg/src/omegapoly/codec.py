"""Translate between monomials of ``Omega(n)`` and colored partitions of ``n``.

In a monomial, the factor ``z[l,i] ** (t**a + t**b + ...)`` stands for the
part ``b**a`` occurring ``i`` times in color ``l``, the part ``b**b`` occurring
``i`` times in color ``l``, and so on.  Inputs are validated: a genuine Omega
polynomial never produces a malformed monomial, so one showing up means an
upstream bug and is reported rather than reinterpreted.
"""

from __future__ import annotations

from .partitions import ColoredPartition
from .poly import ExponentPoly, Monomial, OmegaPoly, PartitionSpec


class CodecError(ValueError):
    pass


class MalformedExponent(CodecError):
    """An exponent polynomial has a coefficient other than 1."""


class ColorConflict(CodecError):
    """Two multiplicities of one color claim the same power of b."""


class MixedValue(CodecError):
    """Terms of one polynomial decode to partitions of different integers."""


def monomial_to_partition(m: Monomial, spec: PartitionSpec) -> ColoredPartition:
    counts: dict[tuple[int, int], int] = {}
    for idx, e in m.factors:
        spec.check_index(idx)
        for power, c in e.terms:
            if c != 1:
                raise MalformedExponent(f"coefficient {c} at t^{power} in exponent of z{tuple(idx)}")
            key = (idx.color, power)
            if key in counts:
                raise ColorConflict(
                    f"power {power} of color {idx.color} claimed by multiplicities "
                    f"{counts[key]} and {idx.mult}"
                )
            counts[key] = idx.mult
    return ColoredPartition.from_counts(spec, counts)


def partition_to_monomial(p: ColoredPartition) -> Monomial:
    powers: dict[tuple[int, int], list[int]] = {}
    for (color, power), mult in p.parts:
        powers.setdefault((color, mult), []).append(power)
    return Monomial.from_dict({idx: ExponentPoly.from_powers(ps) for idx, ps in powers.items()})


def omega_to_partitions(P: OmegaPoly, spec: PartitionSpec | None = None) -> list[ColoredPartition]:
    """Decode every term, in canonical monomial order."""
    spec = spec or P.spec
    out = []
    value = None
    for m, c in P:
        if c != 1:
            raise CodecError(f"coefficient {c} on {m}; not a finished Omega polynomial")
        part = monomial_to_partition(m, spec)
        if value is None:
            value = part.value
        elif part.value != value:
            raise MixedValue(f"terms decode to both {value} and {part.value}")
        out.append(part)
    return out
