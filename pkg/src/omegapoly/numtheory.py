"""Digit-level helpers for integers whose base-b digits are all 0 or 1.

Such integers form the set ``M_b``.  For ``k`` in ``M_b`` with digits
``c_j`` (least significant first) the digit transplant ``d_t^b(k)`` is
``sum(c_j * t**j)``, i.e. the same 0/1 digit string read in base ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


class NonBinaryDigit(ValueError):
    """Raised when an integer has a base-b digit other than 0 or 1."""


def _check_base(b: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")


@dataclass(frozen=True)
class DigitVector:
    """Canonical 0/1 digit expansion, least significant digit first.

    Zero is the empty tuple; there are never trailing zeros.
    """

    digits: tuple[int, ...]
    base: int

    def __post_init__(self) -> None:
        _check_base(self.base)
        if any(d not in (0, 1) for d in self.digits):
            raise NonBinaryDigit(f"digits must be 0 or 1: {self.digits}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("digit vector has trailing zeros")

    @property
    def value(self) -> int:
        return sum(self.base**j for j, c in enumerate(self.digits) if c)

    def support(self) -> frozenset[int]:
        return frozenset(j for j, c in enumerate(self.digits) if c)


def is_in_Mb(k: int, b: int) -> bool:
    """True iff every base-``b`` digit of ``k`` is 0 or 1."""
    _check_base(b)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    while k:
        k, c = divmod(k, b)
        if c > 1:
            return False
    return True


def to_digit_vector(k: int, b: int) -> DigitVector:
    _check_base(b)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    digits = []
    rest = k
    while rest:
        rest, c = divmod(rest, b)
        if c > 1:
            raise NonBinaryDigit(f"{k} has base-{b} digit {c}")
        digits.append(c)
    return DigitVector(tuple(digits), b)


@lru_cache(maxsize=4096)
def d_support(k: int, b: int) -> frozenset[int]:
    """Positions ``j`` at which ``k`` has base-``b`` digit 1."""
    _check_base(b)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    out = []
    rest, j = k, 0
    while rest:
        rest, c = divmod(rest, b)
        if c > 1:
            raise NonBinaryDigit(f"{k} has base-{b} digit {c}")
        if c:
            out.append(j)
        j += 1
    return frozenset(out)


def d_transform(k: int, b: int, t: int) -> int:
    """Digit transplant ``d_t^b(k)``: reinterpret the 0/1 digits of k in base t."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    return sum(t**j for j in d_support(k, b))


def _support_mask(k: int, b: int) -> int:
    # bit j set iff base-b digit j of k is 1; numerically this is d_2^b(k)
    return d_transform(k, b, 2)


def starred_multinomial(ks: Sequence[int], b: int) -> int:
    """Multinomial coefficient of the ``d_2^b(k_i)`` reduced mod 2.

    By Lucas' theorem at p = 2 the multinomial is odd exactly when the
    binary expansions of its lower entries do not overlap, so no big
    multinomial is ever formed.
    """
    seen = 0
    for k in ks:
        mask = _support_mask(k, b)
        if seen & mask:
            return 0
        seen |= mask
    return 1


def enumerate_Mb(bound: int, b: int) -> list[int]:
    """All elements of ``M_b`` that are ``<= bound``, ascending.

    Generated by counting in binary over digit positions and reading each
    counter value in base ``b`` (order preserving, since ``d_b^b`` is).
    """
    _check_base(b)
    if bound < 0:
        return []
    out = []
    counter = 0
    while True:
        k = d_transform(counter, 2, b)
        if k > bound:
            # every larger counter maps above bound as well
            break
        out.append(k)
        counter += 1
    return out


def multinomial(ks: Iterable[int]) -> int:
    """Exact multinomial coefficient ``(sum ks)! / prod(k!)``."""
    total = 0
    result = 1
    for k in ks:
        total += k
        result *= comb(total, k)
    return result
