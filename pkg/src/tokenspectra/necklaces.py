"""Rotation orbits of k-subsets of Z_n (fixed-density binary necklaces).

One orbit per necklace with k black and n-k white beads.  The orbit
table fixes a canonical representative per orbit (the lexicographically
least rotation), records each orbit's period, and can locate any subset
as representative-plus-shift.  Three counting routes are provided:

* fixed-point count:  T(n,k) = (1/n) * sum over r with o(r) | k of
  C(d(r), k/o(r)), where d(r) = gcd(n, r) and o(r) = n/d(r);
* totient count:      T(n,k) = (1/n) * sum over d | gcd(n,k) of
  phi(d) * C(n/d, k/d);
* Moebius count of aperiodic orbits:
  M(n,k) = (1/n) * sum over d | gcd(n,k) of mu(d) * C(n/d, k/d).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, gcd

from .errors import NumericFailureError, ParameterDomainError
from .tokengraph import check_params, check_token_set


def sector_order(n: int, r: int) -> int:
    """Multiplicative order of the rotation by r, n / gcd(n, r)."""
    return n // gcd(n, r)


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(m: int) -> int:
    # trial division; m stays small at desk scale
    result = m
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def moebius(m: int) -> int:
    if m == 1:
        return 1
    result = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def rotate(subset, shift: int, n: int) -> tuple[int, ...]:
    return tuple(sorted((x + shift) % n for x in subset))


def period(subset, n: int) -> int:
    """Smallest positive rotation fixing the subset; divides n."""
    s = check_token_set(subset, n)
    for d in divisors(n):
        if rotate(s, d, n) == s:
            return d
    raise NumericFailureError("rotation by n must fix every subset")


@dataclass(frozen=True)
class OrbitTable:
    """Canonical orbit data for Z_n acting on k-subsets by rotation.

    ``reps`` are lexicographically least in their orbits and sorted;
    ``lookup`` maps every k-subset to (representative index, shift) with
    the smallest nonnegative shift.  Immutable after construction.
    """

    n: int
    k: int
    reps: tuple[tuple[int, ...], ...]
    periods: tuple[int, ...]
    lookup: dict = field(repr=False, compare=False)

    @property
    def count(self) -> int:
        return len(self.reps)

    def locate(self, subset) -> tuple[int, int]:
        s = tuple(sorted(subset))
        try:
            return self.lookup[s]
        except KeyError:
            raise ParameterDomainError(
                f"{subset} is not a {self.k}-subset of Z_{self.n}") from None


@lru_cache(maxsize=None)
def enumerate_orbits(n: int, k: int) -> OrbitTable:
    """One canonical representative per orbit, with periods and lookup.

    Plain filter enumeration over all C(n, k) subsets.  Lexicographic
    iteration meets each orbit first at its lexicographically least
    member, so representatives come out canonical and sorted for free.
    """
    check_params(n, k)
    reps: list[tuple[int, ...]] = []
    periods: list[int] = []
    lookup: dict[tuple[int, ...], tuple[int, int]] = {}
    for s in combinations(range(n), k):
        if s in lookup:
            continue
        p = period(s, n)
        i = len(reps)
        reps.append(s)
        periods.append(p)
        for j in range(p):
            lookup[rotate(s, j, n)] = (i, j)
    if sum(periods) != comb(n, k):
        raise NumericFailureError("orbit sizes do not add up to C(n, k)")
    return OrbitTable(n, k, tuple(reps), tuple(periods), lookup)


def _exact_div(total: int, n: int, what: str) -> int:
    q, rem = divmod(total, n)
    if rem:
        raise NumericFailureError(f"{what} sum {total} is not divisible by {n}")
    return q


def count_burnside(n: int, k: int) -> int:
    """Orbit count via the fixed-point sum over all rotations."""
    if n < 1 or k < 1 or k > n:
        raise ParameterDomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    total = 0
    for r in range(n):
        d = gcd(n, r) if r else n
        o = n // d
        if k % o == 0:
            total += comb(d, k // o)
    return _exact_div(total, n, "fixed-point")


def count_polya(n: int, k: int) -> int:
    """Orbit count via the totient sum over divisors of gcd(n, k)."""
    if n < 1 or k < 1 or k > n:
        raise ParameterDomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    total = sum(euler_phi(d) * comb(n // d, k // d) for d in divisors(gcd(n, k)))
    return _exact_div(total, n, "totient")


def count_moreau(n: int, k: int) -> int:
    """Count of aperiodic orbits (period exactly n), via the Moebius sum."""
    if n < 1 or k < 1 or k > n:
        raise ParameterDomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    total = sum(moebius(d) * comb(n // d, k // d) for d in divisors(gcd(n, k)))
    return _exact_div(total, n, "Moebius")
