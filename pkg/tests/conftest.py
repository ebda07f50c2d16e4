"""Shared caches for the test suite.

Spectra are pure functions of (n, k), so tests share one computation
per pair instead of redoing dense eigensolves.
"""
from functools import lru_cache

from tokenspectra import brute_spectrum, full_spectrum, spectrum_2token


@lru_cache(maxsize=None)
def cached_brute(n, k):
    return brute_spectrum(n, k)


@lru_cache(maxsize=None)
def cached_overlift(n, k):
    return full_spectrum(n, k)


@lru_cache(maxsize=None)
def cached_contfrac(n):
    return spectrum_2token(n)
