"""Exact arithmetic for Bernoulli, Eulerian and harmonic number families,
with modular reduction helpers and a catalog of checkable congruences."""

from .modular import (
    NotInvertible,
    NotPIntegral,
    ResidueValue,
    binomial,
    hensel_digit,
    is_prime,
    mod_inverse,
    mod_reduce,
    primes_in,
)
from .sequences import (
    MINUS_HALF,
    PLUS_HALF,
    BernoulliTable,
    PrimeContext,
    agoh_giuga_quotient,
    bernoulli,
    bernoulli_mod_row,
    bernoulli_table,
    divided_bernoulli,
    euler_number_sides,
    eulerian,
    eulerian_explicit,
    eulerian_mod,
    even_ascent_count,
    even_ascent_count_mod,
    fermat_quotient_2,
    gen_harmonic,
    get_prime_context,
    harmonic,
    harmonic_convolution,
    odd_harmonic_sum,
    odd_reciprocal_sum,
    sum_powers,
    sum_powers_bernoulli,
    von_staudt_denominator,
    weighted_convolution,
)
from .permutations import (
    MAX_DEGREE,
    DegreeTooLarge,
    InvalidPermutation,
    PermStatProfile,
    ascent_count,
    profile,
)
from .identities import (
    CheckReport,
    IdentityDescriptor,
    UnknownIdentity,
    catalog,
    check,
    identity_ids,
    sweep,
    theorem1_rhs,
)
from .cache import ConventionMismatch, CorruptCache, load, save

__version__ = "0.1.0"

__all__ = [
    "NotInvertible",
    "NotPIntegral",
    "ResidueValue",
    "binomial",
    "hensel_digit",
    "is_prime",
    "mod_inverse",
    "mod_reduce",
    "primes_in",
    "MINUS_HALF",
    "PLUS_HALF",
    "BernoulliTable",
    "PrimeContext",
    "agoh_giuga_quotient",
    "bernoulli",
    "bernoulli_mod_row",
    "bernoulli_table",
    "divided_bernoulli",
    "euler_number_sides",
    "eulerian",
    "eulerian_explicit",
    "eulerian_mod",
    "even_ascent_count",
    "even_ascent_count_mod",
    "fermat_quotient_2",
    "gen_harmonic",
    "get_prime_context",
    "harmonic",
    "harmonic_convolution",
    "odd_harmonic_sum",
    "odd_reciprocal_sum",
    "sum_powers",
    "sum_powers_bernoulli",
    "von_staudt_denominator",
    "weighted_convolution",
    "MAX_DEGREE",
    "DegreeTooLarge",
    "InvalidPermutation",
    "PermStatProfile",
    "ascent_count",
    "profile",
    "CheckReport",
    "IdentityDescriptor",
    "UnknownIdentity",
    "catalog",
    "check",
    "identity_ids",
    "sweep",
    "theorem1_rhs",
    "ConventionMismatch",
    "CorruptCache",
    "load",
    "save",
    "__version__",
]
