"""Arithmetic in a tower F_p < F_q < F_{q^s} inside one packed representation.

A field context describes F_{q^s} with q = p^e and s = 2m, built as
F_p[x]/(modulus) where the modulus is the lexicographically smallest
primitive polynomial of degree e*s over F_p (coefficients compared
low-to-high as base-p digits).  Elements are plain Python ints: the
polynomial a_0 + a_1 x + a_2 x^2 + ... packs to the integer
a_0 + a_1 p + a_2 p^2 + ...  The residue class of x is a multiplicative
generator by construction, exposed as ctx.pi.

Subfields are not separate towers: F_q is the fixed set of y -> y^q,
F_{q^2} of y -> y^{q^2}, and (odd m) F_{q^m} of y -> y^{q^m}.  A
SubfieldView attaches dense label tables (labels 0..Q-1, F_p-linear
labelling) so inner loops can work on small numpy arrays instead of
packed values.

Exp/log tables are built lazily and only for fields up to
ctx.table_bound elements (default 2**26); operations that need them on
a larger field raise FieldSizeError.  Everything on a context is a pure
function of its inputs; contexts are immutable after construction apart
from idempotent lazy caches, so they are safe to share across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_TABLE_BOUND = 2**26
MAX_DEGREE = 64


class BudgetExceeded(RuntimeError):
    """An operation would exceed its work or size budget.  Carries the
    a-priori estimate so callers can report how far over budget it was."""

    def __init__(self, message: str, estimate: int | None = None,
                 budget: int | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget


class FieldSizeError(BudgetExceeded):
    """Raised when an operation would exceed the configured size budget."""


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any field size used here."""
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}.  Fields here are desk scale,
    so trial division does nearly all the work; rho covers stray big factors."""
    factors: dict[int, int] = {}
    for sp in range(2, 1 << 16):
        if sp * sp > n:
            break
        while n % sp == 0:
            factors[sp] = factors.get(sp, 0) + 1
            n //= sp
    stack = [n] if n > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            factors[v] = factors.get(v, 0) + 1
            continue
        d = _pollard_rho(v)
        stack += [d, v // d]
    return factors


def coset_size(u: int, n: int, q: int) -> int:
    """Smallest l >= 1 with q^l * u = u (mod n): the q-cyclotomic coset size
    of u modulo n, which is the degree of the minimal polynomial of an
    element of discrete log -u (or u) in the order-n group."""
    if n <= 0:
        raise ValueError("modulus must be positive")
    u %= n
    v = u * q % n
    size = 1
    while v != u:
        v = v * q % n
        size += 1
        if size > n:
            raise ArithmeticError("coset iteration failed to close")
    return size


# ---------------------------------------------------------------------------
# F_p[x] on coefficient lists (used only to find and check the modulus)


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(p: int, a: list[int], b: list[int], mod: list[int]) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _fp_divmod(p, prod, mod)[1]


def _fp_divmod(p: int, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    a = list(a)
    _fp_trim(a)
    db, lb = len(b) - 1, b[-1]
    linv = pow(lb, p - 2, p)
    quot = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] * linv % p
        shift = len(a) - 1 - db
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _fp_trim(a)
    return quot, a


def _fp_powmod(p: int, a: list[int], k: int, mod: list[int]) -> list[int]:
    result = [1]
    base = _fp_divmod(p, list(a), mod)[1]
    while k:
        if k & 1:
            result = _fp_mulmod(p, result, base, mod)
        base = _fp_mulmod(p, base, base, mod)
        k >>= 1
    return result


def _fp_gcd(p: int, a: list[int], b: list[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_divmod(p, a, b)[1]
    return a


def _is_irreducible(p: int, f: list[int]) -> bool:
    # Rabin's test: x^(p^d) = x mod f, and x^(p^(d/r)) - x coprime to f
    # for every prime r dividing d.
    d = len(f) - 1
    x = [0, 1]
    if _fp_powmod(p, x, p**d, f) != x:
        return False
    for r in factorize(d):
        h = _fp_powmod(p, x, p ** (d // r), f)
        h = _fp_trim([(c - xc) % p for c, xc in _zip_padded(h, x)])
        if len(_fp_gcd(p, f, h)) != 1:
            return False
    return True


def _zip_padded(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _x_is_primitive(p: int, f: list[int], group_factors: dict[int, int]) -> bool:
    order = p ** (len(f) - 1) - 1
    for r in group_factors:
        if _fp_powmod(p, [0, 1], order // r, f) == [1]:
            return False
    return True


def find_primitive_modulus(p: int, degree: int, rank: int = 0) -> tuple[int, ...]:
    """The (rank+1)-th lexicographically smallest primitive polynomial of the
    given degree over F_p, monic, coefficients low-to-high.  Lex order treats
    the non-leading coefficients as base-p digits, constant term least
    significant.  Deterministic; rank 0 is the canonical modulus."""
    group_factors = factorize(p**degree - 1)
    found = 0
    for packed in range(p**degree):
        coeffs, v = [], packed
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        f = coeffs + [1]
        if f[0] == 0 and degree > 1:
            continue
        if _is_irreducible(p, f) and _x_is_primitive(p, f, group_factors):
            if found == rank:
                return tuple(f)
            found += 1
    raise ArithmeticError(f"no primitive polynomial of degree {degree} over F_{p}")


# ---------------------------------------------------------------------------
# the field context


class FieldCtx:
    """Immutable description of F_p < F_q < F_{q^s}, s = 2m, with pi = x.

    Elements are ints packing base-p coefficient vectors of length
    e*s.  All arithmetic methods are pure; lazy table construction is
    idempotent (call warm_tables() before sharing across threads).
    """

    def __init__(self, p: int, e: int, s: int, modulus: tuple[int, ...],
                 table_bound: int = DEFAULT_TABLE_BOUND, modulus_rank: int = 0):
        self.p = p
        self.e = e
        self.s = s
        self.modulus_rank = modulus_rank
        self.m = s // 2
        self.q = p**e
        self.degree = e * s
        self.size = p**self.degree
        self.n = self.size - 1
        self.modulus = modulus
        self.pi = p  # residue class of x (degree is always >= 2)
        self.table_bound = table_bound
        self._ppow = [p**i for i in range(self.degree + 1)]
        # x^degree = -(low part of modulus), precomputed as digits
        self._top_reduction = [(-c) % p for c in modulus[:-1]]
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None
        self._subfields: dict[int, SubfieldView] = {}
        self._trace_tables: dict[tuple[int, int], np.ndarray] = {}

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, s={self.s}, size={self.size})"

    # -- digit packing ------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p, out = self.p, []
        for _ in range(self.degree):
            out.append(a % p)
            a //= p
        return out

    def pack(self, digits) -> int:
        v = 0
        for d, pw in zip(digits, self._ppow):
            v += d * pw
        return v

    # -- ring operations ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, v = self.p, 0
        for pw in self._ppow[: self.degree]:
            da, db = a // pw % p, b // pw % p
            v += (da + db) % p * pw
        return v

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, v = self.p, 0
        for pw in self._ppow[: self.degree]:
            v += (-(a // pw % p)) % p * pw
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % self.n])
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        p, D = self.p, self.degree
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * D - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for k in range(2 * D - 2, D - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i, r in enumerate(self._top_reduction):
                    if r:
                        prod[k - D + i] = (prod[k - D + i] + c * r) % p
        return self.pack(prod[:D])

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        k %= self.n
        if self._log is not None:
            return int(self._exp[int(self._log[a]) * k % self.n])
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        return self.pow(a, self.n - 1)

    def frobenius_q(self, a: int) -> int:
        """The relative Frobenius a -> a^q whose fixed set is the embedded F_q."""
        return self.pow(a, self.q)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("order of 0 undefined")
        order = self.n
        for r in factorize(self.n):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    # -- traces -------------------------------------------------------------

    def trace(self, a: int, lower: str = "q") -> int:
        """Relative trace of a into a subfield.

        lower="q":  Tr from F_{q^s} to F_q, the sum of a^(q^i), 0 <= i < s.
        lower="p":  absolute trace into F_p.
        lower="qm": Tr from F_{q^m} to F_q (odd m only; a must lie in the
                    embedded F_{q^m}).
        """
        if lower == "q":
            return self._trace_chain(a, self.q, self.s)
        if lower == "p":
            return self._trace_chain(a, self.p, self.degree)
        if lower == "qm":
            if self.m % 2 == 0:
                raise ValueError("F_{q^m} trace requires odd m")
            if self.pow(a, self.q**self.m) != a:
                raise ValueError("element not in the embedded F_{q^m}")
            return self._trace_chain(a, self.q, self.m)
        raise ValueError(f"unknown trace selector {lower!r}")

    def _trace_chain(self, a: int, base: int, steps: int) -> int:
        acc, z = a, a
        for _ in range(steps - 1):
            z = self.pow(z, base)
            acc = self.add(acc, z)
        return acc

    def trace_q_to_p(self, a: int) -> int:
        """Absolute trace of an element of the embedded F_q down to F_p,
        returned as the residue 0..p-1 (prime-field elements pack to
        single digits)."""
        return self._trace_chain(a, self.p, self.e)

    # -- exp/log tables -----------------------------------------------------

    def tables_available(self) -> bool:
        return self.size <= self.table_bound

    def require_tables(self):
        if self._log is not None:
            return
        if not self.tables_available():
            raise FieldSizeError(
                f"field of size {self.size} exceeds the log-table bound "
                f"{self.table_bound}; discrete-log operations refused")
        p, D, N = self.p, self.degree, self.size
        exp = np.zeros(N - 1, dtype=np.int64)
        log = np.zeros(N, dtype=np.int64)
        digits = [0] * D
        digits[0] = 1
        top = self._top_reduction
        for k in range(N - 1):
            v = self.pack(digits)
            exp[k] = v
            log[v] = k
            carry = digits[D - 1]
            for i in range(D - 1, 0, -1):
                digits[i] = digits[i - 1]
            digits[0] = 0
            if carry:
                for i, r in enumerate(top):
                    if r:
                        digits[i] = (digits[i] + carry * r) % p
        if int(exp[1]) != self.pi:
            raise AssertionError("exp table inconsistent with pi")
        self._exp = exp
        self._log = log

    def warm_tables(self):
        """Eagerly build the lazy tables (for sharing across threads)."""
        self.require_tables()

    def exp(self, k: int) -> int:
        self.require_tables()
        return int(self._exp[k % self.n])

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log(0) undefined")
        self.require_tables()
        return int(self._log[a])

    def exp_table(self) -> np.ndarray:
        self.require_tables()
        return self._exp

    def log_table(self) -> np.ndarray:
        self.require_tables()
        return self._log

    def frobenius_table(self) -> np.ndarray:
        """Value table of a -> a^q over the whole field."""
        self.require_tables()
        table = np.zeros(self.size, dtype=np.int64)
        idx = np.arange(self.n, dtype=np.int64)
        table[self._exp] = self._exp[(idx * (self.q % self.n)) % self.n]
        return table

    # -- subfields and traces as label tables -------------------------------

    def subfield(self, order: int) -> SubfieldView:
        if order not in self._subfields:
            self._subfields[order] = SubfieldView(self, order)
        return self._subfields[order]

    def trace_label_table(self, upper: int, lower: int) -> np.ndarray:
        """uint8 array over all packed values: label in subfield(lower) of the
        trace from subfield(upper) down to subfield(lower).  Entries for
        values outside subfield(upper) are 0xFF."""
        key = (upper, lower)
        if key not in self._trace_tables:
            self.require_tables()
            sub_lo = self.subfield(lower)
            steps = round(math.log(upper, lower))
            if lower**steps != upper:
                raise ValueError("incompatible trace levels")
            table = np.full(self.size, 0xFF, dtype=np.uint8)
            frob = self.frobenius_table() if lower == self.q else None
            for a in _subfield_values(self, upper):
                acc, z = a, a
                for _ in range(steps - 1):
                    z = int(frob[z]) if frob is not None else self.pow(z, lower)
                    acc = self.add(acc, z)
                table[a] = sub_lo.label_of(acc)
            self._trace_tables[key] = table
        return self._trace_tables[key]


def _subfield_values(ctx: FieldCtx, order: int):
    yield 0
    if order == ctx.size:
        yield from range(1, ctx.size)
        return
    g = ctx.pow(ctx.pi, ctx.n // (order - 1))
    v = 1
    for _ in range(order - 1):
        yield v
        v = ctx.mul(v, g)


class SubfieldView:
    """Dense tables for one embedded subfield F_Q of a FieldCtx.

    Labels 0..Q-1 are packed F_p coordinates with respect to the basis
    {g^0, .., g^(k-1)} where g = pi^((q^s-1)/(Q-1)), so label addition is
    digitwise base-p (plain XOR when p = 2).  Label 0 is the zero element
    and label 1 is the one element.
    """

    def __init__(self, ctx: FieldCtx, order: int):
        if (ctx.size - 1) % (order - 1) != 0:
            raise ValueError(f"F_{order} is not a subfield of F_{ctx.size}")
        k = round(math.log(order, ctx.p))
        if ctx.p**k != order:
            raise ValueError(f"{order} is not a power of p={ctx.p}")
        if order > 1 << 16:
            raise FieldSizeError("subfield label tables capped at 2^16 elements")
        self.ctx = ctx
        self.order = order
        self.ext_deg = k
        self.gen = ctx.pow(ctx.pi, ctx.n // (order - 1))
        basis = [ctx.pow(self.gen, i) for i in range(k)]
        self.basis = basis
        elems = [0] * order
        p = ctx.p
        for lbl in range(order):
            v, rem = 0, lbl
            for b in basis:
                c = rem % p
                rem //= p
                if c:
                    v = ctx.add(v, ctx.mul(_small_scalar(ctx, c), b))
            elems[lbl] = v
        self.elements_by_label = tuple(elems)
        self._label_of = {v: i for i, v in enumerate(elems)}
        if len(self._label_of) != order:
            raise AssertionError("subfield labelling not injective")

    def contains(self, a: int) -> bool:
        return a in self._label_of

    def abs_trace_residue(self, a: int) -> int:
        """Trace of a subfield element down to F_p, as a residue 0..p-1."""
        return self.ctx._trace_chain(a, self.ctx.p, self.ext_deg)

    def label_of(self, a: int) -> int:
        return self._label_of[a]

    def from_label(self, lbl: int) -> int:
        return self.elements_by_label[lbl]

    def _op_table(self, name, fn):
        attr = f"_tab_{name}"
        if not hasattr(self, attr):
            Q = self.order
            t = np.empty((Q, Q), dtype=np.uint8)
            for i in range(Q):
                for j in range(Q):
                    t[i, j] = self.label_of(fn(self.from_label(i), self.from_label(j)))
            setattr(self, attr, t)
        return getattr(self, attr)

    def add_table(self) -> np.ndarray:
        return self._op_table("add", self.ctx.add)

    def mul_table(self) -> np.ndarray:
        return self._op_table("mul", self.ctx.mul)

    def inv_label(self, lbl: int) -> int:
        return self.label_of(self.ctx.inv(self.from_label(lbl)))

    def add_labels(self, a, b):
        """Label addition, vectorized: digitwise base-p on label ints."""
        if self.ctx.p == 2:
            return a ^ b
        if self.ext_deg == 1:
            return (a + b) % self.ctx.p
        return self.add_table()[a, b]


def _small_scalar(ctx: FieldCtx, c: int) -> int:
    # the prime-field element c*1, packed (digit 0 = c)
    return c % ctx.p


def label_matrix_rank(sub: SubfieldView, rows: list[list[int]]) -> int:
    """Rank over F_Q of a matrix given as rows of subfield labels.
    Plain Gaussian elimination; destroys nothing (rows are copied)."""
    ctx = sub.ctx
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = sub.inv_label(rows[rank][col])
        if inv != 1:
            rows[rank] = [sub.label_of(ctx.mul(sub.from_label(v), sub.from_label(inv)))
                          for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                celem = sub.from_label(c)
                rows[r] = [sub.label_of(ctx.sub(sub.from_label(a),
                                                ctx.mul(celem, sub.from_label(b))))
                           for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# ---------------------------------------------------------------------------
# polynomials over the big field


@dataclass(frozen=True)
class Poly:
    """Dense polynomial with coefficients in a FieldCtx, ascending order,
    leading coefficient nonzero (empty tuple = zero polynomial)."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    @staticmethod
    def make(ctx: FieldCtx, coeffs) -> Poly:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return Poly(ctx, tuple(c))

    @staticmethod
    def x_power_minus_one(ctx: FieldCtx, n: int) -> Poly:
        c = [0] * (n + 1)
        c[0] = ctx.neg(1)
        c[n] = 1
        return Poly(ctx, tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __mul__(self, other: Poly) -> Poly:
        if self.is_zero() or other.is_zero():
            return Poly(self.ctx, ())
        ctx = self.ctx
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return Poly.make(ctx, out)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(ctx, ()), self
        quot = [0] * (dq + 1)
        linv = ctx.inv(other.coeffs[-1])
        for shift in range(dq, -1, -1):
            top = rem[shift + other.degree]
            if top:
                c = ctx.mul(top, linv)
                quot[shift] = c
                for i, b in enumerate(other.coeffs):
                    rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(c, b))
        while rem and rem[-1] == 0:
            rem.pop()
        return Poly(ctx, tuple(quot)), Poly(ctx, tuple(rem))

    def divides(self, other: Poly) -> bool:
        return other.divmod(self)[1].is_zero()

    def __call__(self, point: int) -> int:
        ctx, acc = self.ctx, 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, point), c)
        return acc


def minimal_polynomial(ctx: FieldCtx, a: int) -> Poly:
    """Monic minimal polynomial of a over the embedded F_q: the product of
    (X - c) over the distinct Frobenius conjugates c of a.  Coefficients are
    verified to lie in F_q."""
    conjugates, c = [], a
    while c not in conjugates:
        conjugates.append(c)
        c = ctx.frobenius_q(c)
    poly = [1]
    for root in conjugates:
        nroot = ctx.neg(root)
        nxt = [0] * (len(poly) + 1)
        for i, coef in enumerate(poly):
            nxt[i] = ctx.add(nxt[i], ctx.mul(coef, nroot))
            nxt[i + 1] = ctx.add(nxt[i + 1], coef)
        poly = nxt
    for coef in poly:
        if ctx.frobenius_q(coef) != coef:
            raise AssertionError("minimal polynomial coefficient escaped F_q")
    return Poly(ctx, tuple(poly))


# ---------------------------------------------------------------------------
# context construction


_CTX_CACHE: dict[tuple, FieldCtx] = {}


def make_field(p: int, e: int, s: int, modulus_rank: int = 0,
               table_bound: int = DEFAULT_TABLE_BOUND) -> FieldCtx:
    """Build the canonical context for F_{(p^e)^s} over F_p.

    Deterministic: the modulus is the (modulus_rank+1)-th lexicographically
    smallest primitive polynomial of degree e*s over F_p and pi is the
    residue class of x.  Requires p prime, e >= 1, s >= 2 even.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if e < 1:
        raise ValueError("extension degree e must be >= 1")
    if s < 2 or s % 2:
        raise ValueError("s must be even and >= 2")
    if e * s > MAX_DEGREE:
        raise FieldSizeError(f"degree {e * s} exceeds the word budget {MAX_DEGREE}")
    key = (p, e, s, modulus_rank, table_bound)
    if key not in _CTX_CACHE:
        modulus = find_primitive_modulus(p, e * s, modulus_rank)
        _CTX_CACHE[key] = FieldCtx(p, e, s, modulus, table_bound, modulus_rank)
    return _CTX_CACHE[key]


def split_prime_power(q: int) -> tuple[int, int]:
    """q = p^e with p prime, or ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next((d for d in range(2, q) if d * d <= q and q % d == 0), q)
    v, e = q, 0
    while v % p == 0:
        v //= p
        e += 1
    if v != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return p, e
