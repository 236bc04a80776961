from functools import reduce
from math import gcd

from sympy import factorint


def prime_factors(n):
    """
    The sorted primes dividing `n`, i.e. pi(n). Empty for n == 1.
    """
    return sorted(factorint(n))


def prime_power(n):
    """
    Returns (p, a) when n == p**a with a >= 1, otherwise None.
    """
    factors = factorint(n)
    if len(factors) != 1:
        return None
    (p, a), = factors.items()
    return p, a


def p_part(n, p):
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def lcm(numbers):
    return reduce(lambda a, b: a * b // gcd(a, b), numbers, 1)


def is_power_of(n, p):
    return n >= 1 and p_part(n, p) == n
