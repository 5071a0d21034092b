"""Exact generators for the number families under study.

Bernoulli numbers (both B_1 conventions), divided Bernoulli numbers, harmonic
and generalized harmonic numbers, sums of powers, the Eulerian triangle with
its even-ascent column sums, the Fermat quotient of 2, the Agoh-Giuga
quotient, and the power-weighted Bernoulli convolution.  Everything returns
exact ints or Fractions; the *_mod variants work purely in modular arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .modular import ResidueValue, is_prime, mod_reduce

__all__ = [
    "MINUS_HALF",
    "PLUS_HALF",
    "BernoulliTable",
    "bernoulli",
    "bernoulli_table",
    "divided_bernoulli",
    "von_staudt_denominator",
    "harmonic",
    "gen_harmonic",
    "odd_reciprocal_sum",
    "odd_harmonic_sum",
    "harmonic_convolution",
    "sum_powers",
    "sum_powers_bernoulli",
    "eulerian",
    "eulerian_explicit",
    "eulerian_mod",
    "even_ascent_count",
    "even_ascent_count_mod",
    "euler_number_sides",
    "fermat_quotient_2",
    "agoh_giuga_quotient",
    "weighted_convolution",
    "bernoulli_mod_row",
    "PrimeContext",
    "get_prime_context",
]

MINUS_HALF = "minus_half"
PLUS_HALF = "plus_half"
_CONVENTIONS = (MINUS_HALF, PLUS_HALF)

_HALF = Fraction(1, 2)


def von_staudt_denominator(n: int) -> int:
    """Product of the primes q with (q-1) | n; the denominator of B_n for even n."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    d = 1
    for div in range(1, n + 1):
        if n % div == 0 and is_prime(div + 1):
            d *= div + 1
    return d


class BernoulliTable:
    """Memoized Bernoulli numbers B_0..B_max under a fixed B_1 convention.

    Entries are extended on demand by the defining recurrence
    sum_{j=0}^{n} C(n+1, j) B_j = 0 (iterated over even n only; odd entries
    beyond B_1 vanish).
    """

    def __init__(self, convention: str = MINUS_HALF,
                 entries: dict[int, Fraction] | None = None):
        if convention not in _CONVENTIONS:
            raise ValueError(f"unknown convention {convention!r}")
        self.convention = convention
        if entries is None:
            b1 = -_HALF if convention == MINUS_HALF else _HALF
            entries = {0: Fraction(1), 1: b1}
        else:
            entries = dict(entries)
            if sorted(entries) != list(range(len(entries))):
                raise ValueError("entries must be contiguous from index 0")
        self._entries = entries
        self._max = max(entries)

    @property
    def max_index(self) -> int:
        return self._max

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._entries.items())

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"index must be >= 0, got {n}")
        if n > self._max:
            self._extend(n)
        return self._entries[n]

    def _extend(self, target: int) -> None:
        e = self._entries
        for n in range(self._max + 1, target + 1):
            if n % 2 == 1:
                e[n] = Fraction(0)
                continue
            # C(n+1,1) * B_1 with the recurrence's own convention (-1/2)
            acc = Fraction(-(n + 1), 2)
            for j in range(0, n, 2):
                acc += comb(n + 1, j) * e[j]
            e[n] = -acc / (n + 1)
        self._max = max(self._max, target)

    def merge(self, other: "BernoulliTable") -> None:
        """Adopt entries from another table of the same convention."""
        if other.convention != self.convention:
            raise ValueError(
                f"convention mismatch: {self.convention} vs {other.convention}"
            )
        for n, val in other.items():
            if n <= self._max:
                if self._entries[n] != val:
                    raise ValueError(f"conflicting value for B_{n}")
            else:
                if n != self._max + 1:
                    raise ValueError("merge would leave a gap in the table")
                self._entries[n] = val
                self._max = n

    def validate(self) -> None:
        """Check the structural invariants; raises ValueError on violation."""
        e = self._entries
        if e[0] != 1:
            raise ValueError("B_0 must be 1")
        want_b1 = -_HALF if self.convention == MINUS_HALF else _HALF
        if self._max >= 1 and e[1] != want_b1:
            raise ValueError(f"B_1 must be {want_b1} under {self.convention}")
        for n in range(3, self._max + 1, 2):
            if e[n] != 0:
                raise ValueError(f"B_{n} must be 0")
        for n in range(2, self._max + 1, 2):
            if e[n].denominator != von_staudt_denominator(n):
                raise ValueError(f"B_{n} has denominator {e[n].denominator}, "
                                 f"expected {von_staudt_denominator(n)}")
        # the defining recurrence at the top entry ties every earlier value
        # in, so a single altered numerator anywhere breaks this sum
        n = self._max if self._max % 2 == 0 else self._max - 1
        if n >= 2:
            total = sum(comb(n + 1, j) * e[j] for j in range(n + 1))
            want = 0 if self.convention == MINUS_HALF else n + 1
            if total != want:
                raise ValueError(f"entries fail the defining recurrence "
                                 f"at B_{n}")


_TABLES = {c: BernoulliTable(c) for c in _CONVENTIONS}


def bernoulli_table(convention: str = MINUS_HALF) -> BernoulliTable:
    """The process-wide shared table for a convention."""
    if convention not in _CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    return _TABLES[convention]


def bernoulli(n: int, convention: str = MINUS_HALF) -> Fraction:
    """Exact Bernoulli number B_n; B_1 is -1/2 unless convention says +1/2."""
    return bernoulli_table(convention).value(n)


def divided_bernoulli(n: int) -> Fraction:
    """B_n / n for n >= 1 (B_1 convention -1/2)."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return bernoulli(n) / n


_HARMONIC: list[Fraction] = [Fraction(0)]
_GEN_HARMONIC: dict[int, list[Fraction]] = {}


def harmonic(n: int) -> Fraction:
    """H_n = sum_{j=1}^{n} 1/j, with H_0 = 0."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    h = _HARMONIC
    while len(h) <= n:
        h.append(h[-1] + Fraction(1, len(h)))
    return h[n]


def gen_harmonic(n: int, r: int) -> Fraction:
    """H_n^(r) = sum_{j=1}^{n} 1/j^r, with H_0^(r) = 0."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if r < 1:
        raise ValueError(f"order must be >= 1, got {r}")
    if r == 1:
        return harmonic(n)
    h = _GEN_HARMONIC.setdefault(r, [Fraction(0)])
    while len(h) <= n:
        h.append(h[-1] + Fraction(1, len(h) ** r))
    return h[n]


def odd_reciprocal_sum(p: int) -> Fraction:
    """Sum of 1/j over odd j in [1, p-2] for an odd prime p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    return sum((Fraction(1, j) for j in range(1, p - 1, 2)), Fraction(0))


def odd_harmonic_sum(p: int) -> Fraction:
    """Sum of H_m over odd m in [1, p-2] for an odd prime p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    return sum((harmonic(m) for m in range(1, p - 1, 2)), Fraction(0))


def harmonic_convolution(m: int) -> Fraction:
    """H_1/(2m-1) + H_2/(2m-2) + ... + H_{2m-1}/1 for m >= 1."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    return sum((harmonic(k) / (2 * m - k) for k in range(1, 2 * m)), Fraction(0))


def sum_powers(n: int, k: int) -> int:
    """S_{n,k} = 1^k + 2^k + ... + n^k by direct summation."""
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    return sum(a ** k for a in range(1, n + 1))


def sum_powers_bernoulli(n: int, k: int) -> int:
    """S_{n,k} via the Bernoulli-number formula (B_1 = +1/2 variant).

    S_{n,k} = (1/(k+1)) * sum_{j=0}^{k} C(k+1, j) B_j n^{k+1-j}.
    """
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    acc = Fraction(0)
    for j in range(k + 1):
        b = bernoulli(j, PLUS_HALF)
        if b:
            acc += comb(k + 1, j) * b * n ** (k + 1 - j)
    acc /= k + 1
    if acc.denominator != 1:
        raise AssertionError(f"power-sum formula gave non-integer {acc}")
    return int(acc)


_EULER_ROWS: list[tuple[int, ...]] = [(), (1,)]


def eulerian(n: int, m: int) -> int:
    """Eulerian number E(n, m) by the triangular recurrence; 0 outside the row."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if m < 0 or m > n - 1:
        return 0
    rows = _EULER_ROWS
    while len(rows) <= n:
        prev = rows[-1]
        d = len(rows)  # degree of the row being built
        row = tuple(
            (j + 1) * (prev[j] if j < d - 1 else 0)
            + (d - j) * (prev[j - 1] if j >= 1 else 0)
            for j in range(d)
        )
        rows.append(row)
    return rows[n][m]


def eulerian_explicit(n: int, m: int) -> int:
    """E(n, m) by the alternating binomial sum; 0 outside the row."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if m < 0 or m > n - 1:
        return 0
    return sum(
        (-1) ** j * comb(n + 1, j) * (m + 1 - j) ** n for j in range(m + 1)
    )


def eulerian_mod(n: int, m: int, p: int, k: int = 1) -> ResidueValue:
    """E(n, m) mod p^k computed purely modularly.

    The running binomial C(n+1, j) is kept as unit * p^v with the p-part
    tracked separately so the incremental update stays valid when j or
    n+2-j is divisible by p.
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"need a prime, got {p}")
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    pk = p ** k
    if m < 0 or m > n - 1:
        return ResidueValue(0, p, k)
    total = 0
    unit = 1
    val = 0
    for j in range(m + 1):
        if j > 0:
            a = n + 2 - j
            while a % p == 0:
                a //= p
                val += 1
            b = j
            while b % p == 0:
                b //= p
                val -= 1
            unit = unit * a % pk * pow(b, -1, pk) % pk
        if val < k:
            term = unit * p ** val % pk * pow(m + 1 - j, n, pk) % pk
            total = (total - term) if j % 2 else (total + term)
    return ResidueValue(total % pk, p, k)


def even_ascent_count(n: int) -> int:
    """N_n: permutations of degree n with an even number of ascents."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    return sum(eulerian(n, m) for m in range(0, n, 2))


def even_ascent_count_mod(p: int, k: int = 1) -> ResidueValue:
    """N_{p-2} mod p^k for a prime p >= 5, via the modular Eulerian path."""
    ctx = get_prime_context(p)
    return ResidueValue(ctx.even_ascent_residue(k), p, k)


def euler_number_sides(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the tangent-number relation at odd n.

    Left: 2^(n+1) (2^(n+1) - 1) B_{n+1} / (n+1).
    Right: the alternating Eulerian row sum sum_{m=0}^{n-1} (-1)^m E(n, m).
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"need odd n >= 1, got {n}")
    w = 2 ** (n + 1)
    lhs = w * (w - 1) * bernoulli(n + 1) / (n + 1)
    rhs = Fraction(sum((-1) ** m * eulerian(n, m) for m in range(n)))
    return lhs, rhs


def fermat_quotient_2(p: int) -> int:
    """q_2(p) = (2^(p-1) - 1) / p, exact, for an odd prime p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    num = 2 ** (p - 1) - 1
    if num % p:
        raise AssertionError(f"2^{p - 1} - 1 not divisible by {p}")
    return num // p


def agoh_giuga_quotient(p: int) -> Fraction:
    """(1 + p B_{p-1}) / p, a p-integral rational, for a prime p >= 5."""
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime >= 5, got {p}")
    return (1 + p * bernoulli(p - 1)) / p


def weighted_convolution(p: int, a: int = 2) -> Fraction:
    """CB_w^(a)(p-1) = sum_{i=2}^{p-3} (B_i / a^i) B_{p-1-i}, exact."""
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime >= 5, got {p}")
    if not 1 <= a <= p - 1:
        raise ValueError(f"weight must be in [1, {p - 1}], got {a}")
    acc = Fraction(0)
    # odd i contribute nothing: B_i = 0 for odd i >= 3
    for i in range(2, p - 2, 2):
        acc += bernoulli(i) / a ** i * bernoulli(p - 1 - i)
    return acc


def bernoulli_mod_row(p: int) -> list[int]:
    """B_j mod p for j = 0..p-3, from power sums read through Sun's congruence.

    For 2 <= j <= p-3 the congruence S_{p-1,j} = p B_j (mod p^2) holds (the
    B_{j-1} correction term is itself divisible by p^2 there), so one modular
    power sum per index pins B_j mod p without touching the exact table.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime >= 5, got {p}")
    p2 = p * p
    row = [1, (p - 1) // 2]  # B_0 = 1, B_1 = -1/2 mod p
    for j in range(2, p - 2):
        t = sum(pow(a, j, p2) for a in range(1, p)) % p2
        if t % p:
            raise AssertionError(f"power sum S_(p-1),{j} not divisible by {p}")
        row.append((t // p) % p)
    return row


class PrimeContext:
    """Per-prime workspace shared by congruence evaluators.

    Holds the exact harmonic and order-2 harmonic prefixes H_0..H_{p-1} and
    lazily built modular binomial/power tables, so a sweep touches each
    expensive table once per prime.
    """

    def __init__(self, p: int):
        if p < 5 or not is_prime(p):
            raise ValueError(f"need a prime >= 5, got {p}")
        self.p = p
        self.harmonics = tuple(harmonic(i) for i in range(p))
        self.gen_harmonics2 = tuple(gen_harmonic(i, 2) for i in range(p))
        self._even_ascent: dict[int, int] = {}
        self._power_prefix: list[int] | None = None
        self._odd_harmonic_sum: Fraction | None = None

    def harmonic(self, k: int) -> Fraction:
        return self.harmonics[k]

    def gen_harmonic2(self, k: int) -> Fraction:
        return self.gen_harmonics2[k]

    def odd_harmonic_sum(self) -> Fraction:
        if self._odd_harmonic_sum is None:
            self._odd_harmonic_sum = sum(
                (self.harmonics[m] for m in range(1, self.p - 1, 2)),
                Fraction(0),
            )
        return self._odd_harmonic_sum

    def even_ascent_residue(self, exponent: int = 1) -> int:
        """N_{p-2} mod p^exponent from the explicit Eulerian sums."""
        if exponent < 1:
            raise ValueError(f"exponent must be >= 1, got {exponent}")
        if exponent not in self._even_ascent:
            p = self.p
            pk = p ** exponent
            # C(p-1, j) mod p^exponent for j = 0..p-3; all j < p are units
            binoms = [1]
            for j in range(1, p - 2):
                binoms.append(
                    binoms[-1] * (p - j) % pk * pow(j, -1, pk) % pk
                )
            pows = [pow(a, p - 2, pk) for a in range(p)]
            total = 0
            for mm in range(0, p - 2, 2):
                s = 0
                for j in range(mm + 1):
                    term = binoms[j] * pows[mm + 1 - j] % pk
                    s = (s - term) if j % 2 else (s + term)
                total += s
            self._even_ascent[exponent] = total % pk
        return self._even_ascent[exponent]

    def _prefix(self) -> list[int]:
        if self._power_prefix is None:
            p = self.p
            acc = 0
            prefix = [0]
            for a in range(1, p):
                acc += a ** (p - 2)
                prefix.append(acc)
            self._power_prefix = prefix
        return self._power_prefix

    def power_sum(self, t: int) -> int:
        """S_{t, p-2} exactly, for 0 <= t <= p-1."""
        return self._prefix()[t]

    def odd_power_sum_total(self) -> int:
        """sum over m = 0..(p-3)/2 of S_{2m+1, p-2}, exactly."""
        prefix = self._prefix()
        return sum(prefix[t] for t in range(1, self.p - 1, 2))

    def shifted_harmonic_tail(self, m: int) -> Fraction:
        """sum_{K=p-(2m+1)}^{p-2} H_K / (K + 2m + 2); empty at m = 0."""
        p = self.p
        if m < 0 or 2 * m + 1 > p - 1:
            raise ValueError(f"need 0 <= m <= (p-3)/2, got m={m}, p={p}")
        return sum(
            (self.harmonics[K] / (K + 2 * m + 2)
             for K in range(p - 2 * m - 1, p - 1)),
            Fraction(0),
        )


@lru_cache(maxsize=None)
def get_prime_context(p: int) -> PrimeContext:
    """Shared PrimeContext per prime (contexts are immutable once warmed)."""
    return PrimeContext(p)
