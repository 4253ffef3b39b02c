"""Small modular-arithmetic toolbox backing the exact DP engine.

The counting kernels run in int64 arrays modulo 30-bit primes; the true
(arbitrary-precision) counts are recovered afterwards with the Chinese
remainder theorem. Primes stay below 2**30 so that a sum of up to 2**31
residues never overflows a signed 64-bit accumulator.
"""

from __future__ import annotations

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

PRIME_CEILING = 1 << 30


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for anything below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_primes: list[int] = []


def _extend_primes() -> None:
    candidate = (_primes[-1] if _primes else PRIME_CEILING) - 1
    while not is_probable_prime(candidate):
        candidate -= 2 if candidate % 2 else 1
    _primes.append(candidate)


def modulus_set(bound: int) -> list[int]:
    """Primes just below 2**30 whose product strictly exceeds `bound`."""
    chosen: list[int] = []
    product = 1
    i = 0
    while product <= bound:
        if i >= len(_primes):
            _extend_primes()
        p = _primes[i]
        chosen.append(p)
        product *= p
        i += 1
    return chosen


def crt(residues: list[int], moduli: list[int]) -> int:
    """Unique x in [0, prod(moduli)) with x = residues[i] mod moduli[i]."""
    x = 0
    modulus = 1
    for r, p in zip(residues, moduli):
        # lift: adjust x by a multiple of the accumulated modulus
        t = (r - x) * pow(modulus, -1, p) % p
        x += modulus * t
        modulus *= p
    return x
