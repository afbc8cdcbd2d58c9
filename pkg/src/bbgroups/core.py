"""Black-box group core.

A black-box group is accessed only through multiplication, inversion and
equality of opaque fixed-length encodings, plus a factored global exponent
E with x**E = 1 for every element.  This module holds the element/exponent
abstractions and the order-free primitives built on them: square-and-multiply
powering, pseudo-order, the involution produced by an element, and square
roots of odd-order elements.

Conventions used throughout the package:

* elements are ``bytes``; two elements are equal iff their encodings are
  byte-identical,
* conjugation is ``x^g = g^-1 * x * g``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class BlackBoxError(Exception):
    """Base class for black-box arithmetic failures."""


class ExponentViolation(BlackBoxError):
    """An element did not satisfy x**E = 1 for the claimed exponent E.

    For honest backends this never fires; for working-hypothesis exponents
    (modular units with composite modulus) it is meaningful output.
    """


class OddOrderRequired(BlackBoxError):
    """A square root was requested for an element of even order."""


@dataclass(frozen=True)
class FactoredExponent:
    """Global exponent E as a pairwise-coprime factor base.

    ``factors`` lists (base, multiplicity) pairs with pairwise-coprime bases
    whose product equals ``2**two_part * odd_part``; the prime 2 is always an
    explicit base when ``two_part > 0``.
    """

    factors: tuple[tuple[int, int], ...]
    two_part: int
    odd_part: int

    def __post_init__(self) -> None:
        bases = [b for b, _ in self.factors]
        for b, m in self.factors:
            if b < 2 or m < 1:
                raise ValueError(f"bad factor ({b}, {m})")
        for i in range(len(bases)):
            for j in range(i + 1, len(bases)):
                if math.gcd(bases[i], bases[j]) != 1:
                    raise ValueError(
                        f"bases {bases[i]} and {bases[j]} are not coprime"
                    )
        if self.odd_part % 2 == 0:
            raise ValueError(f"odd_part {self.odd_part} is even")
        if self.two_part > 0 and 2 not in bases:
            raise ValueError("two_part > 0 but 2 is not an explicit base")
        if self.value != (1 << self.two_part) * self.odd_part:
            raise ValueError("factors do not match two_part/odd_part")

    @property
    def value(self) -> int:
        e = 1
        for b, m in self.factors:
            e *= b**m
        return e

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{b}^{m}" if m > 1 else str(b) for b, m in self.factors)


def coprime_refine(raw: Iterable[tuple[int, int]]) -> FactoredExponent:
    """Refine integer factors into a pairwise-coprime base.

    The product (with multiplicities) is preserved; powers of two are fully
    split out into the explicit base 2.  Bases are refined by repeated gcd
    splitting, so prime inputs stay prime.
    """
    counts: dict[int, int] = {}

    def _add(n: int, mult: int) -> None:
        counts[n] = counts.get(n, 0) + mult

    for n, mult in raw:
        n = int(n)
        if n < 2:
            raise ValueError(f"factors must be >= 2, got {n}")
        if mult < 1:
            raise ValueError(f"multiplicities must be >= 1, got {mult}")
        two = 0
        while n % 2 == 0:
            n //= 2
            two += 1
        if two:
            _add(2, two * mult)
        if n > 1:
            _add(n, mult)

    # gcd-split odd bases until pairwise coprime
    changed = True
    while changed:
        changed = False
        bases = sorted(b for b in counts if b != 2)
        for i in range(len(bases)):
            for j in range(i + 1, len(bases)):
                a, b = bases[i], bases[j]
                g = math.gcd(a, b)
                if g == 1:
                    continue
                ea = counts.pop(a)
                eb = counts.pop(b)
                for part, mult in ((g, ea), (a // g, ea), (g, eb), (b // g, eb)):
                    if part > 1:
                        _add(part, mult)
                changed = True
                break
            if changed:
                break

    two_part = counts.get(2, 0)
    odd_part = 1
    for b, m in counts.items():
        if b != 2:
            odd_part *= b**m
    return FactoredExponent(
        factors=tuple(sorted(counts.items())), two_part=two_part, odd_part=odd_part
    )


def factored_lcm(a: FactoredExponent, b: FactoredExponent) -> FactoredExponent:
    """Least common multiple of two factored exponents, refactored coprime."""
    merged = coprime_refine(list(a.factors) + list(b.factors))
    kept: list[tuple[int, int]] = []
    for base, _ in merged.factors:
        va = _valuation(a.value, base)
        vb = _valuation(b.value, base)
        m = max(va, vb)
        if m > 0:
            kept.append((base, m))
    return coprime_refine(kept) if kept else coprime_refine([])


def _valuation(n: int, base: int) -> int:
    v = 0
    while n % base == 0:
        n //= base
        v += 1
    return v


class BlackBox:
    """Group arithmetic on opaque fixed-length encodings.

    Subclasses provide ``multiply``, ``invert``, the identity encoding and a
    factored exponent.  ``mult_count`` tallies multiplications for cost
    reporting; it is advisory and not part of element equality.

    Elements are immutable byte strings and freely shareable; the only
    mutable state is the counter, so concurrent use should give each worker
    its own backend instance and sum the counters afterwards.
    """

    exponent: FactoredExponent
    encoding_length: int
    _identity: bytes

    def __init__(self) -> None:
        self.mult_count = 0

    @property
    def identity(self) -> bytes:
        return self._identity

    def multiply(self, a: bytes, b: bytes) -> bytes:
        raise NotImplementedError

    def invert(self, a: bytes) -> bytes:
        raise NotImplementedError

    def elements(self) -> list[bytes]:
        raise NotImplementedError(f"{self.describe()} is not enumerable")

    def order(self) -> int:
        raise NotImplementedError(f"{self.describe()} has no known order")

    def describe(self) -> str:
        return type(self).__name__

    def parse(self, text: str) -> bytes:
        raise NotImplementedError

    def format(self, element: bytes) -> str:
        return element.hex()


def power(bb: BlackBox, x: bytes, e: int) -> bytes:
    """x**e by square-and-multiply; at most 2*floor(log2 e) + 1 multiplications."""
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    if e == 0:
        return bb.identity
    result: bytes | None = None
    base = x
    while True:
        if e & 1:
            result = base if result is None else bb.multiply(result, base)
        e >>= 1
        if e == 0:
            assert result is not None
            return result
        base = bb.multiply(base, base)


def conjugate(bb: BlackBox, x: bytes, g: bytes) -> bytes:
    """x^g = g^-1 * x * g."""
    return bb.multiply(bb.multiply(bb.invert(g), x), g)


def commutes(bb: BlackBox, a: bytes, b: bytes) -> bool:
    return bb.multiply(a, b) == bb.multiply(b, a)


def pseudo_order(bb: BlackBox, x: bytes) -> int:
    """Least product of factor-base powers annihilating x.

    Reduces E greedily base by base; since the bases are pairwise coprime
    the per-base reductions are independent, so the result is the minimum
    over the base lattice.  Equals the true order when every base is prime.

    Raises ExponentViolation if x**E != 1.
    """
    exp = bb.exponent
    l = exp.value
    if power(bb, x, l) != bb.identity:
        raise ExponentViolation(
            f"element does not satisfy x**E = 1 for E = {l} in {bb.describe()}"
        )
    for base, mult in exp.factors:
        for _ in range(mult):
            if power(bb, x, l // base) == bb.identity:
                l //= base
            else:
                break
    return l


def involution_from(bb: BlackBox, x: bytes) -> bytes:
    """The involution produced by x: last non-identity value in the squaring
    sequence of x**odd_part, or the identity when x has odd order.

    Raises ExponentViolation if the sequence fails to reach the identity
    within two_part squarings (the claimed exponent is wrong for x).
    """
    exp = bb.exponent
    y = power(bb, x, exp.odd_part)
    if y == bb.identity:
        return bb.identity
    for _ in range(exp.two_part):
        z = bb.multiply(y, y)
        if z == bb.identity:
            return y
        y = z
    raise ExponentViolation(
        f"squaring sequence of x**{exp.odd_part} missed the identity "
        f"within {exp.two_part} steps in {bb.describe()}"
    )


def sqrt_odd_order(bb: BlackBox, x: bytes) -> bytes:
    """Square root of an odd-order element: x**((odd_part + 1) / 2).

    Raises OddOrderRequired when x**odd_part != 1.
    """
    exp = bb.exponent
    if power(bb, x, exp.odd_part) != bb.identity:
        raise OddOrderRequired(
            f"element is not of odd order (x**{exp.odd_part} != 1)"
        )
    return power(bb, x, (exp.odd_part + 1) // 2)


def naive_order(bb: BlackBox, x: bytes, limit: int = 10**7) -> int:
    """Order by repeated multiplication; independent of exponent machinery."""
    acc = x
    n = 1
    while acc != bb.identity:
        acc = bb.multiply(acc, x)
        n += 1
        if n > limit:
            raise BlackBoxError(f"order exceeds safety limit {limit}")
    return n


def primes_up_to(n: int) -> list[int]:
    """Primes <= n by sieve; small-parameter utility."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def is_prime(n: int) -> bool:
    """Trial division; intended for validating small user parameters."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorisation of a small group parameter."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def exponent_for_symmetric(n: int) -> FactoredExponent:
    """lcm(1..n) in prime-power factored form."""
    raw: list[tuple[int, int]] = []
    for p in primes_up_to(n):
        m = 1
        while p ** (m + 1) <= n:
            m += 1
        raw.append((p, m))
    return coprime_refine(raw)


def sequence_lcm(values: Sequence[int]) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out
