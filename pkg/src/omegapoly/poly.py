"""Exact sparse algebra for the Omega polynomials.

A variable ``z[l,i]`` (color ``l``, multiplicity ``i``) carries its own formal
parameter ``t[l,i]``; every exponent in an Omega polynomial is a polynomial in
that parameter with nonnegative integer coefficients.  The three layers are

* :class:`ExponentPoly` -- sparse univariate polynomial, ``{power: coeff}``
* :class:`Monomial` -- product of ``z[l,i] ** p(t[l,i])`` factors
* :class:`OmegaPoly` -- integer combination of monomials, tied to a spec

All values are immutable.  Monomials order canonically: lexicographically on
the sequence of ``(color, mult, exponent terms)`` triples, shorter first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple


class SpecMismatch(ValueError):
    """Raised when polynomials over different partition specs are combined."""


@dataclass(frozen=True)
class PartitionSpec:
    """Base ``b`` and the color bounds ``lambdas = (lambda_1, ..., lambda_rho)``.

    The bounds must already be nondecreasing; they are not sorted for you.
    """

    base: int
    lambdas: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(int(x) for x in self.lambdas))
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if not self.lambdas:
            raise ValueError("at least one color is required")
        if self.lambdas[0] < 1:
            raise ValueError(f"color bounds must be positive: {self.lambdas}")
        if any(a > b for a, b in zip(self.lambdas, self.lambdas[1:])):
            raise ValueError(f"color bounds must be nondecreasing: {self.lambdas}")

    @property
    def rho(self) -> int:
        return len(self.lambdas)

    @property
    def lambda_total(self) -> int:
        return sum(self.lambdas)

    def var_indices(self) -> list[VarIndex]:
        return [
            VarIndex(color, mult)
            for color, lam in enumerate(self.lambdas, start=1)
            for mult in range(1, lam + 1)
        ]

    def check_index(self, idx: VarIndex) -> None:
        color, mult = idx
        if not 1 <= color <= self.rho or not 1 <= mult <= self.lambdas[color - 1]:
            raise ValueError(f"variable index {tuple(idx)} out of range for {self}")

    def __str__(self) -> str:
        lams = ",".join(map(str, self.lambdas))
        return f"b={self.base} Lambda=({lams})"


class VarIndex(NamedTuple):
    color: int
    mult: int


class ExponentPoly(tuple):
    """Sparse polynomial ``sum(c * t**p)`` stored as ascending ``(p, c)`` pairs.

    A tuple subclass, so hashing and ordering run at C speed; ordering is
    lexicographic on the pair sequence.
    """

    __slots__ = ()

    def __new__(cls, terms: Iterable[tuple[int, int]] = ()) -> ExponentPoly:
        return tuple.__new__(cls, terms)

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return tuple(self)

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> ExponentPoly:
        return cls(sorted((p, c) for p, c in coeffs.items() if c))

    @classmethod
    def from_powers(cls, powers: Iterable[int]) -> ExponentPoly:
        """Exponent with coefficient 1 at each given power (powers must be distinct)."""
        ps = sorted(powers)
        if len(set(ps)) != len(ps):
            raise ValueError(f"repeated power in {ps}")
        return cls((p, 1) for p in ps)

    @classmethod
    def one(cls) -> ExponentPoly:
        return _ONE

    def __repr__(self) -> str:
        return f"ExponentPoly({tuple(self)!r})"

    def powers(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self)

    def is_zero_one(self) -> bool:
        return all(c == 1 for _, c in self)

    def plus(self, other: ExponentPoly) -> ExponentPoly:
        acc = dict(self)
        for p, c in other:
            acc[p] = acc.get(p, 0) + c
        return ExponentPoly.from_dict(acc)

    def shift(self, k: int) -> ExponentPoly:
        return ExponentPoly((p + k, c) for p, c in self)

    def evaluate(self, t: int) -> int:
        return sum(c * t**p for p, c in self)


_ONE = tuple.__new__(ExponentPoly, ((0, 1),))


def expoly_shift(p: ExponentPoly, k: int) -> ExponentPoly:
    """Multiply the exponent by ``t**k`` (the effect of ``z -> z**(t**k)``)."""
    if k < 1:
        raise ValueError(f"shift must be positive, got {k}")
    return p.shift(k)


class Monomial(tuple):
    """Product of ``z[idx] ** exponent`` over ``(idx, exponent)`` factors.

    Factors are sorted by index and a missing index means the variable does
    not occur; ``Monomial()`` is the constant 1.  Tuple order on the factor
    sequence is the canonical monomial order.
    """

    __slots__ = ()

    def __new__(cls, factors: Iterable[tuple[VarIndex, ExponentPoly]] = ()) -> Monomial:
        return tuple.__new__(cls, factors)

    @property
    def factors(self) -> tuple[tuple[VarIndex, ExponentPoly], ...]:
        return tuple(self)

    @classmethod
    def from_dict(cls, factors: Mapping[tuple[int, int], ExponentPoly]) -> Monomial:
        return cls(sorted((VarIndex(*idx), e) for idx, e in factors.items() if e))

    @classmethod
    def var(cls, color: int, mult: int, exponent: ExponentPoly | None = None) -> Monomial:
        return cls(((VarIndex(color, mult), exponent or _ONE),))

    def __bool__(self) -> bool:
        # the empty monomial is 1, still a legitimate term
        return True

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)!r})"

    def as_dict(self) -> dict[VarIndex, ExponentPoly]:
        return dict(self)

    def __mul__(self, other: Monomial) -> Monomial:
        if not len(other):
            return self
        if not len(self):
            return other
        out = []
        i = j = 0
        while i < len(self) and j < len(other):
            a, b = self[i], other[j]
            if a[0] < b[0]:
                out.append(a)
                i += 1
            elif b[0] < a[0]:
                out.append(b)
                j += 1
            else:
                out.append((a[0], a[1].plus(b[1])))
                i += 1
                j += 1
        out.extend(self[i:])
        out.extend(other[j:])
        return Monomial(out)

    def shift(self, k: int) -> Monomial:
        return Monomial((idx, e.shift(k)) for idx, e in self)

    def recolor(self, mapping: Mapping[int, int]) -> Monomial:
        return Monomial(sorted((VarIndex(mapping[idx.color], idx.mult), e) for idx, e in self))

    def evaluate(self, T: Mapping[VarIndex, int], Z: Mapping[VarIndex, int]) -> int:
        out = 1
        for idx, e in self:
            out *= Z[idx] ** e.evaluate(T[idx])
        return out


@dataclass(frozen=True, eq=False)
class OmegaPoly:
    """Integer combination of monomials over a fixed :class:`PartitionSpec`.

    ``n`` optionally records which ``Omega(n)`` the polynomial is; it is
    metadata only and does not take part in equality.
    """

    spec: PartitionSpec
    terms: Mapping[Monomial, int] = field(default_factory=dict)
    n: int | None = None

    def __post_init__(self) -> None:
        clean = {m: c for m, c in self.terms.items() if c}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, spec: PartitionSpec) -> OmegaPoly:
        return cls(spec, {})

    @classmethod
    def one(cls, spec: PartitionSpec, n: int | None = None) -> OmegaPoly:
        return cls(spec, {Monomial(): 1}, n)

    @classmethod
    def monomial(cls, spec: PartitionSpec, mono: Monomial, coeff: int = 1) -> OmegaPoly:
        for idx, _ in mono.factors:
            spec.check_index(idx)
        return cls(spec, {mono: coeff})

    @classmethod
    def var(cls, spec: PartitionSpec, color: int, mult: int, exponent: ExponentPoly | None = None) -> OmegaPoly:
        return cls.monomial(spec, Monomial.var(color, mult, exponent))

    def with_n(self, n: int | None) -> OmegaPoly:
        return OmegaPoly(self.spec, self.terms, n)

    # -- container protocol ---------------------------------------------
    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(sorted(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OmegaPoly):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.spec, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"OmegaPoly({self.spec}, {poly_render(self)!r})"

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: OmegaPoly) -> None:
        if self.spec != other.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other: OmegaPoly) -> OmegaPoly:
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return OmegaPoly(self.spec, acc)

    def __neg__(self) -> OmegaPoly:
        return OmegaPoly(self.spec, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: OmegaPoly) -> OmegaPoly:
        return self + (-other)

    def __mul__(self, other: OmegaPoly | int) -> OmegaPoly:
        if isinstance(other, int):
            return OmegaPoly(self.spec, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return OmegaPoly(self.spec, acc)

    __rmul__ = __mul__

    def times_monomial(self, mono: Monomial, coeff: int = 1) -> OmegaPoly:
        return OmegaPoly(self.spec, {m * mono: c * coeff for m, c in self.terms.items()})

    def substitute_ZT(self, k: int) -> OmegaPoly:
        if k < 1:
            raise ValueError(f"shift must be positive, got {k}")
        return OmegaPoly(self.spec, {m.shift(k): c for m, c in self.terms.items()})

    def evaluate(self, T: Mapping[VarIndex, int], Z: Mapping[VarIndex, int]) -> int:
        T = {VarIndex(*k): v for k, v in T.items()}
        Z = {VarIndex(*k): v for k, v in Z.items()}
        missing = [idx for idx in self.spec.var_indices() if idx not in T or idx not in Z]
        if missing:
            raise ValueError(f"no value assigned to {[tuple(i) for i in missing]}")
        return sum(c * m.evaluate(T, Z) for m, c in self.terms.items())

    # -- finished-Omega checks -------------------------------------------
    def finished_violations(self) -> list[str]:
        """Reasons why this cannot be a finished Omega polynomial (empty if fine)."""
        problems = []
        for m, c in self.terms.items():
            if c != 1:
                problems.append(f"coefficient {c} on {m}")
            seen: dict[tuple[int, int], int] = {}
            for idx, e in m.factors:
                if not e.is_zero_one():
                    problems.append(f"exponent coefficient > 1 on z{tuple(idx)} in {m}")
                for p in e.powers():
                    key = (idx.color, p)
                    if key in seen:
                        problems.append(
                            f"color {idx.color} power {p} claimed by multiplicities "
                            f"{seen[key]} and {idx.mult} in {m}"
                        )
                    seen[key] = idx.mult
        return problems

    def is_finished(self) -> bool:
        return not self.finished_violations()


def poly_add(P: OmegaPoly, Q: OmegaPoly) -> OmegaPoly:
    return P + Q


def poly_mul(P: OmegaPoly, Q: OmegaPoly) -> OmegaPoly:
    return P * Q


def poly_substitute_ZT(P: OmegaPoly, k: int) -> OmegaPoly:
    """Replace every ``z[l,i]`` by ``z[l,i] ** (t[l,i] ** k)``."""
    return P.substitute_ZT(k)


def poly_eval(P: OmegaPoly, T: Mapping[VarIndex, int], Z: Mapping[VarIndex, int]) -> int:
    return P.evaluate(T, Z)


# ---------------------------------------------------------------------------
# rendering

_LETTERS = "xyz"
_PARAMS = {"x": "r", "y": "s", "z": "t"}


def _letter_for(color: int, rho: int) -> str:
    if rho > 3:
        raise ValueError("letter notation needs at most 3 colors; use indexed notation")
    return _LETTERS[3 - rho + color - 1]


def _names(idx: VarIndex, rho: int, notation: str, latex: bool) -> tuple[str, str]:
    if notation == "letters":
        v = _letter_for(idx.color, rho)
        p = _PARAMS[v]
        if latex:
            return f"{v}_{{{idx.mult}}}", f"{p}_{{{idx.mult}}}"
        return f"{v}{idx.mult}", f"{p}{idx.mult}"
    if notation == "indexed":
        if latex:
            sub = f"{{{idx.color},{idx.mult}}}"
            return f"z_{sub}", f"t_{sub}"
        sub = f"[{idx.color},{idx.mult}]"
        return f"z{sub}", f"t{sub}"
    raise ValueError(f"unknown notation {notation!r}")


def _exponent_text(e: ExponentPoly, param: str, latex: bool) -> str:
    pieces = []
    for p, c in e.terms:
        if p == 0:
            base = ""
        elif p == 1:
            base = param
        else:
            base = f"{param}^{{{p}}}" if latex else f"{param}^{p}"
        if not base:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(base)
        else:
            pieces.append(f"{c}{base}" if latex else f"{c}*{base}")
    return "+".join(pieces)


def _monomial_text(m: Monomial, rho: int, notation: str, latex: bool) -> str:
    parts = []
    for idx, e in m.factors:
        var, param = _names(idx, rho, notation, latex)
        if e == _ONE:
            parts.append(var)
        elif latex:
            parts.append(f"{var}^{{{_exponent_text(e, param, latex)}}}")
        else:
            parts.append(f"{var}^({_exponent_text(e, param, latex)})")
    return ("" if latex else "*").join(parts)


def default_notation(spec: PartitionSpec) -> str:
    return "letters" if spec.rho <= 3 else "indexed"


def render_monomial(m: Monomial, spec: PartitionSpec, style: str = "plain", notation: str | None = None) -> str:
    notation = notation or default_notation(spec)
    text = _monomial_text(m, spec.rho, notation, style == "latex")
    return text or "1"


def poly_render(P: OmegaPoly, style: str = "plain", notation: str | None = None) -> str:
    """Render deterministically in ``plain``, ``latex`` or ``json`` style."""
    if style == "json":
        return json.dumps(poly_to_json(P))
    if style not in ("plain", "latex"):
        raise ValueError(f"unknown style {style!r}")
    notation = notation or default_notation(P.spec)
    if notation == "letters":
        _letter_for(1, P.spec.rho)
    latex = style == "latex"
    out = []
    for m, c in P:
        body = _monomial_text(m, P.spec.rho, notation, latex)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{body}" if latex else f"{mag}*{body}"
        if not out:
            out.append(text if c > 0 else f"-{text}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {text}")
    return " ".join(out) if out else "0"


def poly_to_json(P: OmegaPoly) -> dict:
    return {
        "spec": {"b": P.spec.base, "lambdas": list(P.spec.lambdas)},
        "n": P.n,
        "terms": [
            {
                "coeff": c,
                "factors": [
                    {"color": idx.color, "mult": idx.mult, "exponent": [list(t) for t in e.terms]}
                    for idx, e in m.factors
                ],
            }
            for m, c in P
        ],
    }


def poly_from_json(data: str | dict) -> OmegaPoly:
    """Inverse of the ``json`` rendering."""
    if isinstance(data, str):
        data = json.loads(data)
    spec = PartitionSpec(data["spec"]["b"], tuple(data["spec"]["lambdas"]))
    terms: dict[Monomial, int] = {}
    for term in data["terms"]:
        factors = {}
        for f in term["factors"]:
            idx = VarIndex(f["color"], f["mult"])
            spec.check_index(idx)
            factors[idx] = ExponentPoly.from_dict({p: c for p, c in f["exponent"]})
        m = Monomial.from_dict(factors)
        terms[m] = terms.get(m, 0) + term["coeff"]
    return OmegaPoly(spec, terms, data.get("n"))
