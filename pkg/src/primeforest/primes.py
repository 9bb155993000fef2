"""Incremental prime table, shared by labels, factorization and parsing.

The table only ever grows; a lock guards extension so concurrent readers
can share it safely.
"""

import threading

_primes = [2, 3, 5, 7, 11, 13]
_index = {p: i for i, p in enumerate(_primes)}
_lock = threading.Lock()


def _is_prime_trial(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _extend_to_index(k):
    with _lock:
        while len(_primes) <= k:
            c = _primes[-1] + 2
            while not _is_prime_trial(c):
                c += 2
            _index[c] = len(_primes)
            _primes.append(c)


def _extend_to_value(n):
    with _lock:
        while _primes[-1] < n:
            c = _primes[-1] + 2
            while not _is_prime_trial(c):
                c += 2
            _index[c] = len(_primes)
            _primes.append(c)


def prime_by_index(k):
    """Return the k-th prime, counting from prime_by_index(0) == 2."""
    if k < 0:
        raise ValueError("prime index must be >= 0")
    if k >= len(_primes):
        _extend_to_index(k)
    return _primes[k]


def prime_index_of(p):
    """Inverse of prime_by_index; raises ValueError if p is not prime."""
    if p < 2 or not _is_prime_trial(p):
        raise ValueError(f"{p} is not prime")
    if p > _primes[-1]:
        _extend_to_value(p)
    return _index[p]


def is_prime(n):
    return _is_prime_trial(n)


def primes_upto(n):
    """All primes <= n, ascending."""
    if n < 2:
        return []
    _extend_to_value(n)
    out = []
    for p in _primes:
        if p > n:
            break
        out.append(p)
    return out
