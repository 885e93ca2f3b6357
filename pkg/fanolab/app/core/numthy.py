"""Arithmetic for homogeneous baskets.

Factorization by trial division, Legendre symbols by Euler's criterion, and
quadratic congruences s^2 + b*s + c = 0 (mod r). The default congruence solver
is an exhaustive scan; the lifting path (roots mod p, lifted to p^e, glued by
the Chinese remainder theorem) must agree with it.
"""

from __future__ import annotations

from itertools import product
from math import gcd
from typing import Literal

from ..domain.models import Factorization, SolvabilityRow
from .exceptions import InputTooLarge, InvalidParameters, NotOddPrime

TRIAL_DIVISION_LIMIT = 2**32

CongruenceMethod = Literal["scan", "lift"]


def factorize(n: int) -> Factorization:
    if n < 1:
        raise InvalidParameters(f"factorize needs n >= 1, got {n}")
    if n > TRIAL_DIVISION_LIMIT:
        raise InputTooLarge(n, TRIAL_DIVISION_LIMIT)
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return Factorization(tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).factors == ((n, 1),)


def legendre(a: int, p: int) -> int:
    if p == 2 or not is_prime(p):
        raise NotOddPrime(p)
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def tonelli_shanks(n: int, p: int) -> tuple[int, ...]:
    """Square roots of n modulo an odd prime p (empty for non-residues)."""
    n %= p
    if n == 0:
        return (0,)
    if legendre(n, p) != 1:
        return ()

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        x = pow(n, (p + 1) // 4, p)
        return tuple(sorted({x, p - x}))

    z = next(z for z in range(2, p) if legendre(z, p) == -1)
    c = pow(z, q, p)
    x = pow(n, (q + 1) // 2, p)
    t = pow(n, q, p)
    m = s
    while t != 1:
        i, t2 = 1, t * t % p
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return tuple(sorted({x, p - x}))


def _quadratic(s: int, b: int, c: int) -> int:
    return s * s + b * s + c


def _roots_mod_prime(b: int, c: int, p: int) -> list[int]:
    if p == 2:
        return [s for s in range(2) if _quadratic(s, b, c) % 2 == 0]
    half = pow(2, -1, p)
    disc = (b * b - 4 * c) % p
    return sorted({(-b + y) * half % p for y in tonelli_shanks(disc, p)})


def _roots_mod_prime_power(b: int, c: int, p: int, e: int) -> list[int]:
    roots = _roots_mod_prime(b, c, p)
    modulus = p
    for _ in range(1, e):
        nxt = modulus * p
        roots = [
            x + t * modulus
            for x in roots
            for t in range(p)
            if _quadratic(x + t * modulus, b, c) % nxt == 0
        ]
        modulus = nxt
    return roots


def _crt(residues: tuple[int, ...], moduli: tuple[int, ...]) -> int:
    total = 1
    for m in moduli:
        total *= m
    x = 0
    for a, m in zip(residues, moduli, strict=True):
        rest = total // m
        x += a * rest * pow(rest, -1, m)
    return x % total


def solve_quadratic_congruence(
    b: int, c: int, r: int, *, method: CongruenceMethod = "scan"
) -> list[int]:
    """All s in [0, r) with s^2 + b*s + c = 0 (mod r), ascending."""
    if r < 1:
        raise InvalidParameters(f"Modulus must be positive, got {r}")
    if method == "scan":
        return [s for s in range(r) if _quadratic(s, b, c) % r == 0]

    factors = factorize(r).factors
    if not factors:
        return [0]
    moduli = tuple(p**e for p, e in factors)
    per_prime = [_roots_mod_prime_power(b, c, p, e) for p, e in factors]
    return sorted(_crt(combo, moduli) for combo in product(*per_prime))


def all_primes_congruent(r: int, m: int, target: int) -> bool:
    return all(p % m == target % m for p in factorize(r).primes)


# Existence of homogeneous baskets -----------------------------------------------


def _check_parameters(k: int, r: int, s: int) -> None:
    if k < 3 or r < 3 or not 1 <= s < r or gcd(r, s) != 1:
        raise InvalidParameters(
            f"(k, r, s) = ({k}, {r}, {s}) needs k >= 3, r >= 3, 1 <= s < r and gcd(r, s) = 1"
        )


def existence_branch(k: int, r: int, s: int) -> str | None:
    """Label of the satisfied clause of the published existence criterion, or None."""
    _check_parameters(k, r, s)
    if k == 3 and all_primes_congruent(r, 6, 1) and (s * s - s + 1) % r == 0:
        return f"k=3, s^2-s+1 ≡ 0 (mod {r})"
    if k == 4 and all_primes_congruent(r, 4, 1) and (s * s + 1) % r == 0:
        return f"k=4, s^2+1 ≡ 0 (mod {r})"
    if k == 6 and (r, s) == (3, 1):
        return "k=6, r=3, s=1"
    if k == 6 and all_primes_congruent(r, 6, 1) and (s * s + s + 1) % r == 0:
        return f"k=6, s^2+s+1 ≡ 0 (mod {r})"
    return None


def existence_predicate(k: int, r: int, s: int) -> bool:
    """The published criterion for a polygon with content (0, {k x 1/r(1,s)})."""
    return existence_branch(k, r, s) is not None


def congruence_criterion(k: int, r: int, s: int) -> bool:
    """Existence criterion keeping only the quadratic congruences.

    Triangles also need r != 3, where the only solution gives the T-cone
    1/3(1,2). No condition on the primes dividing r is imposed.
    """
    _check_parameters(k, r, s)
    if k == 3:
        return r != 3 and (s * s - s + 1) % r == 0
    if k == 4:
        return (s * s + 1) % r == 0
    if k == 6:
        return (s * s + s + 1) % r == 0
    return False


SOLVABILITY_FORMS: dict[str, tuple[int, int, int]] = {
    # form: (b, c, modulus of the prime condition p = 1 (mod m))
    "s^2-s+1": (-1, 1, 6),
    "s^2+1": (0, 1, 4),
    "s^2+s+1": (1, 1, 6),
}


def solvability_report(r_max: int) -> list[SolvabilityRow]:
    """Solvability of each congruence against its prime condition, for 1 <= r <= r_max."""
    rows: list[SolvabilityRow] = []
    for r in range(1, r_max + 1):
        for form, (b, c, m) in SOLVABILITY_FORMS.items():
            solutions = tuple(solve_quadratic_congruence(b, c, r))
            rows.append(
                SolvabilityRow(
                    r=r,
                    form=form,
                    solvable=bool(solutions),
                    prime_condition=all_primes_congruent(r, m, 1),
                    solutions=solutions,
                )
            )
    return rows
