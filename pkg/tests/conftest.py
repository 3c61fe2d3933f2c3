"""Shared test-side oracles.

Everything here recomputes results through the most literal route
available (schoolbook polynomial arithmetic, stepping through powers,
double loops over field elements) so the library's table-driven fast
paths are checked against something that cannot share their bugs.
"""

from __future__ import annotations

from fractions import Fraction


def naive_mul(ctx, a, b):
    """Schoolbook product in F_p[x]/(modulus) on digit lists; avoids the
    library's log tables and reduction shortcuts."""
    p, D = ctx.p, ctx.degree
    da = [(a // p**i) % p for i in range(D)]
    db = [(b // p**i) % p for i in range(D)]
    prod = [0] * (2 * D)
    for i, ai in enumerate(da):
        for j, bj in enumerate(db):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    mod = list(ctx.modulus)
    for k in range(2 * D - 1, D - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(D):
                prod[k - D + i] = (prod[k - D + i] - c * mod[i]) % p
    return sum(d * p**i for i, d in enumerate(prod[:D]))


def naive_pow(ctx, a, k):
    out = 1
    for _ in range(k):
        out = naive_mul(ctx, a, out)
    return out


def naive_add(ctx, a, b):
    p, D = ctx.p, ctx.degree
    return sum(((a // p**i) % p + (b // p**i) % p) % p * p**i for i in range(D))


def frobenius_sum(ctx, a, base, steps):
    """Trace as the literal sum of iterated base-th powers."""
    acc, z = a, a
    for _ in range(steps - 1):
        z = naive_pow(ctx, z, base)
        acc = naive_add(ctx, acc, z)
    return acc


def step_order_of_x(p, coeffs):
    """Multiplicative order of x in F_p[x]/(f) by stepping through all
    powers; returns 0 when a power collapses to 0.  f is primitive exactly
    when the order is p^deg - 1."""
    D = len(coeffs) - 1
    size = p**D
    digits = [0] * D
    digits[0] = 1
    for k in range(1, size + 1):
        carry = digits[-1]
        digits = [0] + digits[:-1]
        if carry:
            digits = [(d - carry * c) % p for d, c in zip(digits, coeffs)]
        if not any(digits):
            return 0
        if digits[0] == 1 and not any(digits[1:]):
            return k
    return 0


def lex_primitive_modulus(p, degree, rank=0):
    """Independent search for the (rank+1)-th lex-smallest primitive
    polynomial: order-of-x stepping decides primitivity outright."""
    found = 0
    for packed in range(p**degree):
        coeffs = [(packed // p**i) % p for i in range(degree)] + [1]
        if step_order_of_x(p, coeffs) == p**degree - 1:
            if found == rank:
                return tuple(coeffs)
            found += 1
    raise AssertionError("no primitive polynomial found")


def nu(q, zeta_is_zero):
    return q - 1 if zeta_is_zero else -1


def shift_sum_rows(q, s, r, eps):
    """Value -> count of the linear-shift sum over beta for an even-rank-r
    form of type sign eps (three-row distribution)."""
    rows = {}

    def put(value, count):
        if count:
            rows[value] = rows.get(value, 0) + count

    half = r // 2
    put(0, q**s - q**r)
    put(eps * (q - 1) * q ** (s - half),
        int(Fraction(q**r, q) + eps * (q - 1) * Fraction(q**half, q)))
    put(-eps * q ** (s - half),
        int((Fraction(q**r, q) - eps * Fraction(q**half, q)) * (q - 1)))
    return rows


def offset_sum_rows(q, s, r, eps):
    """Value -> count of the constant-shifted sum over beta, b nonzero."""
    rows = {}

    def put(value, count):
        if count:
            rows[value] = rows.get(value, 0) + count

    half = r // 2
    put(0, q**s - q**r)
    put(eps * (q - 1) * q ** (s - half),
        int(Fraction(q**r, q) - eps * Fraction(q**half, q)))
    put(-eps * q ** (s - half),
        int(q**r - Fraction(q**r, q) + eps * Fraction(q**half, q)))
    return rows


def solution_count_multiset(q, s, r, eps, zeta):
    """Multiset (as value -> count) of solution counts over beta for a
    prime q: q^s - q^r betas give the balanced count, and for each c in
    F_q a batch of betas shifts it by eps*nu(zeta+c)*q^(s-r/2-1)."""
    half = r // 2
    rows = {}

    def put(value, count):
        if count:
            rows[value] = rows.get(value, 0) + count

    put(q ** (s - 1), q**s - q**r)
    for c in range(q):
        count = int(Fraction(q**r, q) + eps * nu(q, c == 0) * Fraction(q**half, q))
        value = q ** (s - 1) + eps * nu(q, (zeta + c) % q == 0) * q ** (s - half - 1)
        put(value, count)
    return rows


def prime_powers_up_to(bound):
    out = []
    sieve = [True] * (bound + 1)
    for p in range(2, bound + 1):
        if sieve[p]:
            for multiple in range(2 * p, bound + 1, p):
                sieve[multiple] = False
            v = p
            while v <= bound:
                out.append(v)
                v *= p
    return sorted(out)
