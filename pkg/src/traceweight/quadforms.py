"""Quadratic forms behind the code families, with exact exponential sums.

Even m:  Q(x) = sum_{j=1}^{t} Tr_{q^s/q}(c_j x^(q^(2j-1)+1))
Odd m:   Q(x) = Tr_{q^m/q}(c_0 x^(q^m+1)) + the same sum,

with coefficients running over F_{q^s}^t (even) or F_{q^m} x F_{q^s}^t
(odd), q^(m^2) forms either way.  FormSpace fixes the canonical
enumeration: an index's base-q digits are F_q labels of the coefficient
coordinates with respect to the power bases, least-significant digit
first; the engine relies on this exact order for partitioning.

The rank of a form is the codimension of the radical of its polarized
bilinear form B(x,y) = Q(x+y) - Q(x) - Q(y), computed as s minus the
nullity of the Gram matrix over F_q; for even q the symplectic radical
is used as-is, with no quadratic refinement.  All character sums are
kept exact: values of Tr down to F_p are tallied per residue and the
tally is contracted against p-th roots of unity symbolically, so a
non-integral sum raises instead of rounding.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .codes import ConsistencyError, form_exponents
from .fields import FieldCtx, FieldSizeError, label_matrix_rank

_VALUE_TABLE_BOUND = 4096  # all-pairs trace matrices are N^2 bytes


def integral_character_sum(residue_counts, p: int) -> int:
    """Contract sum_k counts[k] * w^k (w a primitive p-th root of unity)
    to a rational integer; raises if the sum is not one."""
    counts = list(residue_counts)
    if len(counts) != p:
        raise ValueError("need one count per residue class mod p")
    if p > 2 and any(c != counts[1] for c in counts[2:]):
        raise ConsistencyError(f"character sum not a rational integer: {counts}")
    return counts[0] - counts[1]


class QuadForm:
    """Handle for one form: coefficients plus lazily cached rank and sign."""

    def __init__(self, ctx: FieldCtx, coeffs):
        coeffs = tuple(coeffs)
        self.ctx = ctx
        self.exponents = form_exponents(ctx.q, ctx.m)
        if len(coeffs) != len(self.exponents):
            raise ValueError(
                f"expected {len(self.exponents)} coefficients, got {len(coeffs)}")
        odd = ctx.m % 2 == 1
        self.selectors = (("qm",) if odd else ()) + ("q",) * (ctx.m // 2)
        if odd and ctx.pow(coeffs[0], ctx.q**ctx.m) != coeffs[0]:
            raise ValueError("leading coefficient is not in the embedded F_{q^m}")
        self.coeffs = coeffs
        self._rank: int | None = None
        self._epsilon: int | None = None
        self._value_labels: np.ndarray | None = None

    def __call__(self, x: int) -> int:
        ctx, acc = self.ctx, 0
        for c, u, sel in zip(self.coeffs, self.exponents, self.selectors):
            if c:
                acc = ctx.add(acc, ctx.trace(ctx.mul(c, ctx.pow(x, u)), sel))
        return acc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def bilinear(self, x: int, y: int) -> int:
        """Polarization B(x,y) = Q(x+y) - Q(x) - Q(y), an element of F_q."""
        ctx = self.ctx
        return ctx.sub(ctx.sub(self(ctx.add(x, y)), self(x)), self(y))

    @property
    def rank(self) -> int:
        """s minus the F_q-dimension of the radical of B."""
        if self._rank is None:
            ctx = self.ctx
            sub = ctx.subfield(ctx.q)
            basis = [ctx.pow(ctx.pi, i) for i in range(ctx.s)]
            gram = [[sub.label_of(self.bilinear(a, b)) for b in basis] for a in basis]
            r = label_matrix_rank(sub, gram)
            if r % 2:
                raise ConsistencyError(f"odd radical rank {r} for {self.coeffs}")
            self._rank = r
        return self._rank

    @property
    def epsilon(self) -> int:
        """Sign of the plain character sum T; +1 for the zero form, and
        always (-1)^(rank/2) for these families (asserted, with |T| checked
        against q^(s - rank/2))."""
        if self._epsilon is None:
            t, r = big_T(self), self.rank
            if t == 0:
                raise ConsistencyError("T = 0 cannot happen for these forms")
            eps = 1 if t > 0 else -1
            if abs(t) != self.ctx.q ** (self.ctx.s - r // 2):
                raise ConsistencyError(f"|T| = {abs(t)} inconsistent with rank {r}")
            if eps != (-1) ** (r // 2):
                raise ConsistencyError(f"sign of T inconsistent with rank {r}")
            self._epsilon = eps
        return self._epsilon

    def value_labels(self) -> np.ndarray:
        """F_q labels of Q(x) for every packed x, as a uint8 array."""
        if self._value_labels is None:
            ctx = self.ctx
            out = np.zeros(ctx.size, dtype=np.uint8)
            idx = np.arange(ctx.n, dtype=np.int64)
            exp = ctx.exp_table()
            nonzero = np.zeros(ctx.n, dtype=np.uint8)
            for c, u, sel in zip(self.coeffs, self.exponents, self.selectors):
                if not c:
                    continue
                upper = ctx.q**ctx.m if sel == "qm" else ctx.size
                tr_tbl = ctx.trace_label_table(upper, ctx.q)
                vals = exp[(ctx.log(c) + u * idx) % ctx.n]
                nonzero = ctx.subfield(ctx.q).add_labels(nonzero, tr_tbl[vals])
            out[exp[idx]] = nonzero
            self._value_labels = out
        return self._value_labels


class FormSpace:
    """Canonical enumeration of the whole coefficient space at one (q, m)."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        q, m, s = ctx.q, ctx.m, ctx.s
        self.exponents = form_exponents(q, m)
        zeta = ctx.pow(ctx.pi, q**m + 1)
        self.slot_bases: list[tuple[int, ...]] = []
        for u in self.exponents:
            if m % 2 and u == q**m + 1:
                self.slot_bases.append(tuple(ctx.pow(zeta, i) for i in range(m)))
            else:
                self.slot_bases.append(tuple(ctx.pow(ctx.pi, i) for i in range(s)))
        # digit d lives in slot slot_of[d] scaling basis element basis_of[d]
        self.slot_of: list[int] = []
        self.basis_of: list[int] = []
        for si, basis in enumerate(self.slot_bases):
            for b in basis:
                self.slot_of.append(si)
                self.basis_of.append(b)
        self.digit_count = len(self.slot_of)
        self.num_forms = q**self.digit_count
        if self.digit_count != m * m:
            raise ConsistencyError("parameter space dimension is not m^2")

    def digits_at(self, index: int) -> list[int]:
        q, out = self.ctx.q, []
        for _ in range(self.digit_count):
            out.append(index % q)
            index //= q
        return out

    def coeffs_at(self, index: int) -> tuple[int, ...]:
        ctx = self.ctx
        sub = ctx.subfield(ctx.q)
        coeffs = [0] * len(self.exponents)
        for d, lbl in enumerate(self.digits_at(index)):
            if lbl:
                si = self.slot_of[d]
                coeffs[si] = ctx.add(coeffs[si],
                                     ctx.mul(sub.from_label(lbl), self.basis_of[d]))
        return tuple(coeffs)

    def form_at(self, index: int) -> QuadForm:
        return QuadForm(self.ctx, self.coeffs_at(index))


def all_forms(ctx: FieldCtx):
    """Every form at (q, m), in canonical index order."""
    space = FormSpace(ctx)
    for i in range(space.num_forms):
        yield space.form_at(i)


@lru_cache(maxsize=8)
def _linear_trace_labels(ctx: FieldCtx) -> np.ndarray:
    """(size, size) uint8 matrix: entry [b, x] is the F_q label of
    Tr_{q^s/q}(b*x).  Verification-scale only."""
    if ctx.size > _VALUE_TABLE_BOUND:
        raise FieldSizeError("all-pairs trace matrix refused at this field size")
    exp = ctx.exp_table()
    logs = np.arange(ctx.n, dtype=np.int64)
    tr = ctx.trace_label_table(ctx.size, ctx.q)
    out = np.zeros((ctx.size, ctx.size), dtype=np.uint8)
    prods = exp[(logs[:, None] + logs[None, :]) % ctx.n]
    out[np.ix_(exp[logs], exp[logs])] = tr[prods]
    return out


def big_T(form: QuadForm) -> int:
    """The plain character sum over all of F_{q^s}: the exact integer
    sum of w_p^(Tr_{q/p}(Q(x)))."""
    ctx = form.ctx
    if not ctx.tables_available():
        raise FieldSizeError("character-sum brute force refused at this size")
    sub = ctx.subfield(ctx.q)
    residue_of_label = np.array(
        [ctx.trace_q_to_p(sub.from_label(l)) for l in range(ctx.q)], dtype=np.int64)
    counts = np.bincount(residue_of_label[form.value_labels()], minlength=ctx.p)
    return integral_character_sum(counts.tolist(), ctx.p)


def count_solutions(form: QuadForm, beta: int, zeta: int) -> int:
    """|{x : Q(x) + Tr(beta x) = zeta}| by direct counting; zeta in F_q."""
    ctx = form.ctx
    sub = ctx.subfield(ctx.q)
    target = sub.label_of(zeta)
    sums = sub.add_labels(form.value_labels(), _linear_trace_labels(ctx)[beta])
    return int(np.count_nonzero(sums == target))


def _match_counts(form: QuadForm, target_label: int) -> np.ndarray:
    """For every beta: |{x : Q(x) + Tr(beta x) = the target value}|."""
    ctx = form.ctx
    sub = ctx.subfield(ctx.q)
    sums = sub.add_labels(form.value_labels()[None, :], _linear_trace_labels(ctx))
    return (sums == target_label).sum(axis=1)


def s_histogram(form: QuadForm) -> dict[int, int]:
    """Value distribution over beta of the shifted sum S(beta), computed
    through the exact identity S(beta) = q*N_beta(0) - q^s."""
    ctx = form.ctx
    counts = _match_counts(form, 0)
    values, freqs = np.unique(ctx.q * counts - ctx.size, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, freqs)}


def r_histogram(form: QuadForm, b: int) -> dict[int, int]:
    """Value distribution over beta of the constant-shifted sum R_b(beta)
    for b != 0 in F_q, via R_b(beta) = q*N_beta(-b) - q^s."""
    ctx = form.ctx
    if b == 0:
        raise ValueError("b must be nonzero; use s_histogram for b = 0")
    sub = ctx.subfield(ctx.q)
    if not sub.contains(b):
        raise ValueError("b is not in the embedded F_q")
    counts = _match_counts(form, sub.label_of(ctx.neg(b)))
    values, freqs = np.unique(ctx.q * counts - ctx.size, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, freqs)}
