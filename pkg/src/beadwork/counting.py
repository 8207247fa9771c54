"""Closed-form orbit counts via Burnside averaging, in exact integer
arithmetic.

Necklaces of length n over m symbols:   (1/n) * sum_{d|n} phi(d) * m^(n/d)
Lyndon words (aperiodic necklaces):     (1/n) * sum_{d|n} mu(d)  * m^(n/d)
Bracelets add the reflection term of the dihedral group:
    n odd:   B = (N + m^((n+1)/2)) / 2
    n even:  B = (N + (m+1) * m^(n/2) / 2) / 2

Python integers are unbounded, so no overflow handling is needed; every
division above is exact.
"""


def _check_positive(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive integers")


def _factorize(n: int) -> dict:
    """Prime factorization by trial division; n >= 1."""
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    divs = [1]
    for p, e in _factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    """Euler's totient: count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


def moebius(n: int) -> int:
    """Moebius function: 0 on squareful n, else (-1)^(number of prime
    factors)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    factors = _factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def count_necklaces(n: int, m: int) -> int:
    """Number of rotation classes of length-n words over m symbols."""
    _check_positive(n, m)
    return sum(totient(d) * m ** (n // d) for d in divisors(n)) // n


def count_lyndon(n: int, m: int) -> int:
    """Number of aperiodic rotation classes (Lyndon words) of length n."""
    _check_positive(n, m)
    return sum(moebius(d) * m ** (n // d) for d in divisors(n)) // n


def count_bracelets(n: int, m: int) -> int:
    """Number of rotation+reflection classes of length-n words over m
    symbols."""
    _check_positive(n, m)
    if n % 2:
        reflection = m ** ((n + 1) // 2)
    else:
        reflection = (m + 1) * m ** (n // 2) // 2
    return (count_necklaces(n, m) + reflection) // 2
