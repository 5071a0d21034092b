"""Exact residue arithmetic on p-integral rationals.

Everything here is exact: rationals are `fractions.Fraction`, residues are
canonical non-negative integers below the modulus, and reduction mod p^k is
the ring homomorphism num * den^-1 (mod p^k), defined exactly when p does not
divide the denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt

__all__ = [
    "NotPIntegral",
    "NotInvertible",
    "ResidueValue",
    "mod_inverse",
    "mod_reduce",
    "hensel_digit",
    "binomial",
    "is_prime",
    "primes_in",
]


class NotPIntegral(ValueError):
    """The rational has the prime in its denominator, so no residue exists."""


class NotInvertible(ValueError):
    """The value shares a factor with the modulus and has no inverse."""


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m, in [0, m).  Raises NotInvertible if gcd(a, m) != 1."""
    if m <= 0:
        raise ValueError(f"modulus must be positive, got {m}")
    a %= m
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


@dataclass(frozen=True)
class ResidueValue:
    """Element of Z/p^k that remembers its prime and exponent.

    Arithmetic is only defined between residues with identical (prime,
    exponent); mixing moduli raises ValueError.  Plain ints coerce.
    """

    residue: int
    prime: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.prime < 2:
            raise ValueError(f"prime must be >= 2, got {self.prime}")
        if self.exponent < 1:
            raise ValueError(f"exponent must be >= 1, got {self.exponent}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue {self.residue} outside [0, {self.modulus}) for "
                f"p={self.prime}, k={self.exponent}"
            )

    @property
    def modulus(self) -> int:
        return self.prime ** self.exponent

    def _coerce(self, other: "ResidueValue | int") -> int:
        if isinstance(other, ResidueValue):
            if (other.prime, other.exponent) != (self.prime, self.exponent):
                raise ValueError(
                    f"modulus mismatch: {self.prime}^{self.exponent} vs "
                    f"{other.prime}^{other.exponent}"
                )
            return other.residue
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def _make(self, value: int) -> "ResidueValue":
        return ResidueValue(value % self.modulus, self.prime, self.exponent)

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return self._make(self.residue + r)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return self._make(self.residue - r)

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return self._make(r - self.residue)

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return self._make(self.residue * r)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.residue)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return self._make(pow(self.residue, n, self.modulus))

    def inverse(self) -> "ResidueValue":
        return self._make(mod_inverse(self.residue, self.modulus))

    def __eq__(self, other):
        if isinstance(other, ResidueValue):
            return (self.residue, self.prime, self.exponent) == (
                other.residue,
                other.prime,
                other.exponent,
            )
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.prime, self.exponent))

    def __int__(self) -> int:
        return self.residue

    def __str__(self) -> str:
        return str(self.residue)


def mod_reduce(x: Fraction | int, p: int, k: int = 1) -> ResidueValue:
    """Canonical residue of a p-integral rational modulo p^k.

    Raises NotPIntegral when p divides the denominator of x.
    """
    if p < 2:
        raise ValueError(f"prime must be >= 2, got {p}")
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    if not isinstance(x, Fraction):
        x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPIntegral(f"{x} is not p-integral at p={p}")
    m = p ** k
    r = x.numerator * pow(x.denominator, -1, m) % m
    return ResidueValue(r, p, k)


def hensel_digit(x: Fraction | int, p: int, i: int) -> int:
    """Digit i of the base-p expansion of a p-integral rational, in [0, p).

    One reduction mod p^(i+1) followed by base-p extraction; digits satisfy
    sum_j digit_j * p^j = x (mod p^(i+1)).
    """
    if i < 0:
        raise ValueError(f"digit index must be >= 0, got {i}")
    r = mod_reduce(x, p, i + 1).residue
    return (r // p ** i) % p


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; k outside [0, n] gives 0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


# Deterministic Miller-Rabin witness set, sound for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (trial division + Miller-Rabin)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending.  Requires lo <= hi."""
    if lo > hi:
        raise ValueError(f"empty range bounds: {lo} > {hi}")
    if hi < 2:
        return []
    if hi <= 1_000_000:
        sieve = bytearray([1]) * (hi + 1)
        sieve[0:2] = b"\x00\x00"
        for q in range(2, isqrt(hi) + 1):
            if sieve[q]:
                sieve[q * q :: q] = bytearray(len(sieve[q * q :: q]))
        return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]
