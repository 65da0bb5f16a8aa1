"""Independent reference implementations used as test oracles.

Nothing here imports the package under test. Gaussian rationals are plain
``(Fraction, Fraction)`` pairs and sequences are iterated straight from the
recurrence, in both directions, with no memo or matrix tricks.
"""

from fractions import Fraction
from math import comb

Z = (Fraction(0), Fraction(0))
ONE = (Fraction(1), Fraction(0))


def g(re, im=0):
    return (Fraction(re), Fraction(im))


def gadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def gsub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def gdiv(x, y):
    norm = y[0] * y[0] + y[1] * y[1]
    if norm == 0:
        raise ZeroDivisionError
    return ((x[0] * y[0] + x[1] * y[1]) / norm, (x[1] * y[0] - x[0] * y[1]) / norm)


def gpow(x, n):
    if n < 0:
        return gdiv(ONE, gpow(x, -n))
    out = ONE
    for _ in range(n):
        out = gmul(out, x)
    return out


def gscale(x, c):
    return (x[0] * c, x[1] * c)


def seq_term(a, b, p, q, n):
    """w_n by plain iteration; negative n iterates w_{j} = (p w_{j+1} - w_{j+2}) / q."""
    if n >= 0:
        w0, w1 = a, b
        for _ in range(n):
            w0, w1 = w1, gsub(gmul(p, w1), gmul(q, w0))
        return w0
    hi, lo = b, a  # w_1, w_0
    for _ in range(-n):
        hi, lo = lo, gdiv(gsub(gmul(p, lo), hi), q)
    return lo


def seq_u(p, q, n):
    return seq_term(ONE, p, p, q, n)


def seq_v(p, q, n):
    return seq_term(g(2), p, p, q, n)


def fib(n):
    return seq_term(g(0), g(1), g(1), g(-1), n)


def binomial_weighted(k, weights_and_terms):
    """sum_j C(k, j) * weight_j * term_j over the given (weight, term) list."""
    total = Z
    for j, (wt, t) in enumerate(weights_and_terms):
        total = gadd(total, gscale(gmul(wt, t), comb(k, j)))
    return total
