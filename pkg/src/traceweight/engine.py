"""The independent oracles: exhaustive codeword counting and the rank sweep.

brute_distribution enumerates the whole parameter space.  It never
materializes codewords: for each form (the quadratic part of the
parameters) it keeps the n-vector of form values over the coordinates
as F_q labels, updated incrementally while the form index walks its
odometer, and counts coordinate matches against the precomputed table
of linear-functional vectors, one row per beta.  Family E reuses the
same match counts, one bin per constant shift; family C skips the beta
loop entirely.  The merge over any partition of the form-index range is
a plain integer histogram sum, so results are bitwise identical for
every worker count and chunking.

rank_sweep instead measures the radical rank of every form (the Gram
matrix of the polarized bilinear form is F_p-linear in the form index,
so per-digit basis Grams are combined and eliminated, batched and
bit-packed when q = 2) and converts the measured rank multiplicities
into the weight distribution through the exponential-sum value classes.
It trusts those value distributions, which quadforms.py property-tests,
but not the closed-form rank frequencies, which it measures; the sign
convention is cross-checked against the plain character sum on a sample
of forms.

Work is accounted in elementary operations: coordinate matches for the
brute oracle (forms x betas x n, or forms x n for family C) and s^3 per
form for the sweep.  Budgets refuse with the estimate attached.
"""

from __future__ import annotations

import dataclasses
import os
import time
from dataclasses import dataclass

import numpy as np

from .codes import CodeSpec, ConsistencyError, build_code
from .fields import (BudgetExceeded, label_matrix_rank, make_field,
                     split_prime_power)
from .quadforms import FormSpace, QuadForm, big_T
from .spectra import WeightDistribution, assemble_distribution, predict

TIER_BUDGETS = {"quick": 2**24, "standard": 2**32, "extended": 2**38}
DEFAULT_BUDGET = 2**36
_EPSILON_SAMPLES = 12


def brute_work(spec: CodeSpec) -> int:
    forms = spec.q ** (spec.m * spec.m)
    if spec.family == "C":
        return forms * spec.n
    return forms * spec.ctx.size * spec.n


def rank_sweep_work(spec: CodeSpec) -> int:
    return spec.q ** (spec.m * spec.m) * spec.ctx.s**3


# ---------------------------------------------------------------------------
# per-process plans


class _Task:
    """Picklable description of one enumeration job; workers rebuild the
    context deterministically from it."""

    def __init__(self, spec: CodeSpec):
        self.p = spec.ctx.p
        self.e = spec.ctx.e
        self.s = spec.ctx.s
        self.family = spec.family
        self.modulus_rank = spec.ctx.modulus_rank

    def key(self):
        return (self.p, self.e, self.s, self.family, self.modulus_rank)

    def rebuild(self) -> CodeSpec:
        ctx = make_field(self.p, self.e, self.s, self.modulus_rank)
        return build_code(ctx, self.family)


class _CountPlan:
    """Everything a worker needs to match-count a form-index range."""

    def __init__(self, spec: CodeSpec):
        ctx = spec.ctx
        ctx.require_tables()
        self.spec = spec
        self.ctx = ctx
        self.space = FormSpace(ctx)
        q, n = ctx.q, ctx.n
        sub = ctx.subfield(q)
        self.sub = sub
        idx = np.arange(n, dtype=np.int64)
        exp = ctx.exp_table()
        mul_t = sub.mul_table()
        # per digit: the q prescaled coordinate vectors of its basis term
        self.scaled_vectors = []
        for d in range(self.space.digit_count):
            slot = self.space.slot_of[d]
            u = self.space.exponents[slot]
            upper = q**ctx.m if (spec.m % 2 and slot == 0) else ctx.size
            tr = ctx.trace_label_table(upper, q)
            base = tr[exp[(ctx.log(self.space.basis_of[d]) + u * idx) % n]]
            self.scaled_vectors.append(
                np.stack([mul_t[c][base] for c in range(q)]))
        # label delta of one digit increment (wrap included)
        self.delta = np.array(
            [sub.label_of(ctx.sub(sub.from_label((c + 1) % q), sub.from_label(c)))
             for c in range(q)], dtype=np.uint8)
        self.beta_rows = self._beta_matrix() if spec.family in ("D", "E") else None
        self._sum_buf = (np.empty_like(self.beta_rows)
                         if self.beta_rows is not None else None)

    def _beta_matrix(self) -> np.ndarray:
        ctx = self.ctx
        n = ctx.n
        exp = ctx.exp_table()
        tr = ctx.trace_label_table(ctx.size, ctx.q)
        rows = np.zeros((ctx.size, n), dtype=np.uint8)
        j = np.arange(n, dtype=np.int64)
        prods = exp[(j[:, None] + j[None, :]) % n]
        rows[exp[j]] = tr[prods]
        return rows

    def _vec_add(self, qv: np.ndarray) -> np.ndarray:
        """Label addition of the form vector onto every beta row."""
        out, rows = self._sum_buf, self.beta_rows
        ctx = self.ctx
        if ctx.p == 2:
            np.bitwise_xor(rows, qv[None, :], out=out)
        elif ctx.e == 1:
            np.add(rows, qv[None, :], out=out)
            np.remainder(out, ctx.p, out=out)
        else:
            out[:] = self.sub.add_table()[rows, qv[None, :]]
        return out

    def count_range(self, lo: int, hi: int) -> tuple[np.ndarray, int]:
        """Histogram of codeword weights contributed by forms lo..hi-1."""
        spec, ctx = self.spec, self.ctx
        q, n = ctx.q, ctx.n
        family = spec.family
        hist = np.zeros(n + 1, dtype=np.int64)
        digits = self.space.digits_at(lo)
        qv = np.zeros(n, dtype=np.uint8)
        for d, c in enumerate(digits):
            if c:
                qv = self.sub.add_labels(qv, self.scaled_vectors[d][c])
        c_weights = np.empty(hi - lo, dtype=np.int64) if family == "C" else None
        for step, index in enumerate(range(lo, hi)):
            if family == "C":
                c_weights[step] = n - np.count_nonzero(qv == 0)
            else:
                sums = self._vec_add(qv)
                remaining = np.full(sums.shape[0], n, dtype=np.int64)
                for lbl in range(q if family == "E" else 1):
                    if lbl < q - 1:
                        cnt = np.count_nonzero(sums == lbl, axis=1)
                    else:
                        cnt = remaining
                    if lbl < q - 1:
                        remaining -= cnt
                    hist += np.bincount(n - cnt, minlength=n + 1)
            if index + 1 < hi:
                d = 0
                while True:
                    c = digits[d]
                    qv = self.sub.add_labels(qv, self.scaled_vectors[d][self.delta[c]])
                    digits[d] = (c + 1) % q
                    if digits[d]:
                        break
                    d += 1
        if family == "C":
            hist += np.bincount(c_weights, minlength=n + 1)
        per_form = n if family == "C" else ctx.size * n
        return hist, (hi - lo) * per_form


class _RankPlan:
    """Per-digit Gram matrices; ranks via batched GF(2) elimination when
    q = 2, per-form elimination over labels otherwise."""

    def __init__(self, spec: CodeSpec):
        ctx = spec.ctx
        self.spec = spec
        self.ctx = ctx
        self.space = FormSpace(ctx)
        q, s, p, e = ctx.q, ctx.s, ctx.p, ctx.e
        sub = ctx.subfield(q)
        self.sub = sub
        basis = [ctx.pow(ctx.pi, i) for i in range(s)]
        fq_basis = sub.basis
        self.p_digits = e * self.space.digit_count
        grams = []
        for d in range(self.p_digits):
            coeff = ctx.mul(fq_basis[d % e], self.space.basis_of[d // e])
            slot = self.space.slot_of[d // e]
            coeffs = [0] * len(self.space.exponents)
            coeffs[slot] = coeff
            form = QuadForm(ctx, coeffs)
            gram = np.array(
                [[sub.label_of(form.bilinear(a, b)) for b in basis] for a in basis],
                dtype=np.uint8)
            grams.append(gram)
        self.grams = grams
        if q == 2:
            weights = (1 << np.arange(s, dtype=np.uint32))
            self.gram_bits = [g.astype(np.uint32) @ weights for g in grams]
        else:
            # scalar multiples of each Gram, per prime-field factor
            mul_t = sub.mul_table()
            self.scaled_grams = [
                [mul_t[sub.label_of(c % p)][g] for c in range(p)] for g in grams]

    def ranks_q2(self, lo: int, hi: int) -> np.ndarray:
        s = self.ctx.s
        idx = np.arange(lo, hi, dtype=np.int64)
        mats = np.zeros((len(idx), s), dtype=np.uint32)
        for d, rowbits in enumerate(self.gram_bits):
            mask = ((idx >> d) & 1).astype(np.uint32)
            mats ^= mask[:, None] * rowbits[None, :]
        return _batched_gf2_rank(mats, s)

    def rank_counts(self, lo: int, hi: int) -> np.ndarray:
        """Multiplicity of rank 2j, j = 0..m, over the index range."""
        m = self.ctx.m
        counts = np.zeros(m + 1, dtype=np.int64)
        if self.ctx.q == 2:
            ranks = self.ranks_q2(lo, hi)
            if np.any(ranks & 1):
                raise ConsistencyError("odd rank in sweep")
            counts += np.bincount(ranks >> 1, minlength=m + 1)
            return counts
        p = self.ctx.p
        for index in range(lo, hi):
            gram = np.zeros((self.ctx.s, self.ctx.s), dtype=np.uint8)
            rem, d = index, 0
            while rem:
                c = rem % p
                rem //= p
                if c:
                    gram = self.sub.add_labels(gram, self.scaled_grams[d][c])
                d += 1
            r = label_matrix_rank(self.sub, gram.tolist())
            if r % 2:
                raise ConsistencyError("odd rank in sweep")
            counts[r // 2] += 1
        return counts


def _batched_gf2_rank(mats: np.ndarray, s: int) -> np.ndarray:
    """Ranks of a batch of GF(2) matrices given as bit-packed rows."""
    b = mats.shape[0]
    rows = np.arange(b)
    cols = np.arange(s)
    pivot_count = np.zeros(b, dtype=np.int64)
    for col in range(s):
        bit = (mats >> col) & 1
        cand = (bit == 1) & (cols[None, :] >= pivot_count[:, None])
        has = cand.any(axis=1)
        piv = cand.argmax(axis=1)
        pc = np.minimum(pivot_count, s - 1)
        a_vals = mats[rows, piv]
        b_vals = mats[rows, pc]
        mats[rows, piv] = np.where(has, b_vals, a_vals)
        mats[rows, pc] = np.where(has, a_vals, b_vals)
        bit = (mats >> col) & 1
        elim = (bit == 1) & (cols[None, :] != pc[:, None]) & has[:, None]
        mats ^= elim * mats[rows, pc][:, None]
        pivot_count += has
    return pivot_count


# ---------------------------------------------------------------------------
# worker entry points (top level so they pickle)


_PLAN_CACHE: dict = {}


def _get_plan(task: _Task, kind: str):
    key = (task.key(), kind)
    if key not in _PLAN_CACHE:
        spec = task.rebuild()
        _PLAN_CACHE[key] = _CountPlan(spec) if kind == "count" else _RankPlan(spec)
    return _PLAN_CACHE[key]


def _count_chunk(args):
    task, lo, hi = args
    hist, work = _get_plan(task, "count").count_range(lo, hi)
    return hist, work


def _rank_chunk(args):
    task, lo, hi = args
    counts = _get_plan(task, "rank").rank_counts(lo, hi)
    return counts, (hi - lo) * task.s**3


def _run_chunks(fn, task: _Task, total: int, workers: int, progress=None,
                batch_cap: int = 1 << 16):
    """Split [0, total) into contiguous chunks, run fn over them (in a pool
    when workers > 1), and return the in-order results."""
    n_chunks = min(total, max(100, 4 * workers))
    if total > n_chunks * batch_cap:
        n_chunks = -(-total // batch_cap)
    bounds = [total * i // n_chunks for i in range(n_chunks + 1)]
    jobs = [(task, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
    results = []
    if workers <= 1:
        for i, job in enumerate(jobs):
            results.append(fn(job))
            if progress:
                progress(bounds[i + 1], total)
    else:
        import multiprocessing as mp
        with mp.Pool(processes=workers) as pool:
            for i, res in enumerate(pool.imap(fn, jobs)):
                results.append(res)
                if progress:
                    progress(bounds[i + 1], total)
    return results


# ---------------------------------------------------------------------------
# the oracles


def brute_distribution(spec: CodeSpec, budget: int = DEFAULT_BUDGET,
                       workers: int = 1, progress=None) -> WeightDistribution:
    """Exact weight distribution by enumerating every parameter tuple."""
    work = brute_work(spec)
    if work > budget:
        raise BudgetExceeded(
            f"brute enumeration needs ~{work} elementary operations "
            f"(budget {budget}); try rank_sweep", estimate=work, budget=budget)
    task = _Task(spec)
    forms = spec.q ** (spec.m * spec.m)
    hist = np.zeros(spec.n + 1, dtype=np.int64)
    done_work = 0
    for h, w in _run_chunks(_count_chunk, task, forms, workers, progress):
        hist += h
        done_work += w
    counts = {int(w): int(c) for w, c in enumerate(hist) if c}
    dist = WeightDistribution(spec.q, spec.m, spec.family, spec.n, spec.k,
                              counts, work_count=done_work)
    expected_total = spec.q**spec.k
    if dist.total() != expected_total:
        raise ConsistencyError(
            f"enumerated {dist.total()} codewords, expected {expected_total}")
    return dist


def measure_rank_counts(spec: CodeSpec, budget: int = DEFAULT_BUDGET,
                        workers: int = 1, progress=None) -> list[int]:
    """Rank-2j multiplicities measured by radical elimination per form."""
    work = rank_sweep_work(spec)
    if work > budget:
        raise BudgetExceeded(
            f"rank sweep needs ~{work} elementary operations (budget {budget})",
            estimate=work, budget=budget)
    task = _Task(spec)
    forms = spec.q ** (spec.m * spec.m)
    counts = np.zeros(spec.m + 1, dtype=np.int64)
    for c, _ in _run_chunks(_rank_chunk, task, forms, workers, progress):
        counts += c
    return [int(c) for c in counts]


def _epsilon_cross_check(spec: CodeSpec):
    """Sample forms: the radical rank must match sign and magnitude of the
    plain character sum (the sweep relies on eps = (-1)^(rank/2))."""
    ctx = spec.ctx
    if not ctx.tables_available():
        return
    space = FormSpace(ctx)
    plan = _RankPlan(spec)
    total = space.num_forms
    sample = sorted({round(i * (total - 1) / (_EPSILON_SAMPLES - 1))
                     for i in range(_EPSILON_SAMPLES)}) if total > 1 else [0]
    for index in sample:
        r_sweep = int(plan.rank_counts(index, index + 1).argmax() * 2)
        form = space.form_at(index)
        if form.rank != r_sweep:
            raise ConsistencyError(
                f"sweep rank {r_sweep} != radical rank {form.rank} at {index}")
        t = big_T(form)
        if abs(t) != ctx.q ** (ctx.s - r_sweep // 2) or (t < 0) != (r_sweep // 2 % 2 == 1):
            raise ConsistencyError(
                f"character sum {t} inconsistent with rank {r_sweep} at {index}")


def rank_sweep(spec: CodeSpec, budget: int = DEFAULT_BUDGET,
               workers: int = 1, progress=None) -> WeightDistribution:
    """Semi-analytic oracle: measured rank multiplicities pushed through the
    exponential-sum value classes."""
    counts = measure_rank_counts(spec, budget, workers, progress)
    _epsilon_cross_check(spec)
    dist = assemble_distribution(spec.q, spec.m, spec.family, counts)
    return dataclasses.replace(dist, work_count=rank_sweep_work(spec))


@dataclass
class VerifyReport:
    q: int
    m: int
    family: str
    tier: str
    oracle_kind: str
    equal: bool
    first_diff: int | None
    predicted: WeightDistribution
    oracle: WeightDistribution
    work_count: int
    runtime_seconds: float
    workers: int


def verify(q: int, m: int, family: str, tier: str = "quick", workers: int = 1,
           modulus_rank: int = 0, budgets: dict[str, int] | None = None,
           progress=None) -> VerifyReport:
    """Predict the distribution and check it against the strongest oracle
    the tier budget affords: brute enumeration if it fits, else the rank
    sweep, else a budget refusal."""
    budget = (budgets or TIER_BUDGETS)[tier]
    p, e = split_prime_power(q)
    ctx = make_field(p, e, 2 * m, modulus_rank)
    spec = build_code(ctx, family)
    predicted = predict(q, m, family)
    start = time.monotonic()
    if brute_work(spec) <= budget:
        kind = "brute"
        oracle = brute_distribution(spec, budget, workers, progress)
    elif rank_sweep_work(spec) <= budget:
        kind = "rank_sweep"
        oracle = rank_sweep(spec, budget, workers, progress)
    else:
        raise BudgetExceeded(
            f"no oracle fits tier {tier!r}: brute ~{brute_work(spec)}, "
            f"rank sweep ~{rank_sweep_work(spec)} (budget {budget})",
            estimate=min(brute_work(spec), rank_sweep_work(spec)), budget=budget)
    runtime = time.monotonic() - start
    equal = predicted.counts == oracle.counts
    first_diff = None
    if not equal:
        all_weights = sorted(set(predicted.counts) | set(oracle.counts))
        first_diff = next(w for w in all_weights
                          if predicted.counts.get(w) != oracle.counts.get(w))
    return VerifyReport(q, m, family, tier, kind, equal, first_diff, predicted,
                        oracle, oracle.work_count or 0, runtime, workers)


def default_workers() -> int:
    return os.cpu_count() or 1
