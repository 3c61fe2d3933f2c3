"""Field tower: modulus selection, traces, minimal polynomials, cosets."""

import pytest
from conftest import (frobenius_sum, lex_primitive_modulus, naive_add,
                      naive_mul, step_order_of_x)

from traceweight.fields import (FieldSizeError, Poly, coset_size, make_field,
                                minimal_polynomial, split_prime_power)


def test_modulus_matches_independent_search():
    for p, e, s in [(2, 1, 4), (3, 1, 4), (2, 2, 4)]:
        ctx = make_field(p, e, s)
        assert ctx.modulus == lex_primitive_modulus(p, e * s)
    assert make_field(3, 1, 4, modulus_rank=1).modulus == lex_primitive_modulus(3, 4, rank=1)


def test_canonical_f16_modulus_is_x4_x_1():
    assert make_field(2, 1, 4).modulus == (1, 1, 0, 0, 1)


def test_pi_is_x_and_generates():
    for p, e, s in [(2, 1, 4), (3, 1, 4), (2, 2, 4)]:
        ctx = make_field(p, e, s)
        assert ctx.pi == p
        assert ctx.element_order(ctx.pi) == ctx.n
        assert step_order_of_x(p, list(ctx.modulus)) == ctx.n


def test_f81_pi_has_order_80():
    assert make_field(3, 1, 4).element_order(make_field(3, 1, 4).pi) == 80


def test_embedded_f4_is_frobenius_fixed_set():
    ctx = make_field(2, 2, 4)  # F_256 with q = 4
    fixed = {a for a in range(ctx.size) if ctx.frobenius_q(a) == a}
    assert len(fixed) == 4
    assert fixed == set(ctx.subfield(4).elements_by_label)


def test_mul_against_schoolbook():
    for p, e, s in [(2, 1, 4), (3, 1, 4), (2, 2, 4)]:
        ctx = make_field(p, e, s)
        ctx.require_tables()
        sample = range(0, ctx.size, max(1, ctx.size // 23))
        for a in sample:
            for b in sample:
                assert ctx.mul(a, b) == naive_mul(ctx, a, b)
                assert ctx.add(a, b) == naive_add(ctx, a, b)


def test_trace_examples_f16():
    ctx = make_field(2, 1, 4)
    assert ctx.trace(0, "q") == 0
    pi3 = ctx.pow(ctx.pi, 3)
    assert frobenius_sum(ctx, ctx.pi, 2, 4) == 0
    assert frobenius_sum(ctx, pi3, 2, 4) == 1
    assert ctx.trace(ctx.pi, "q") == 0
    assert ctx.trace(pi3, "q") == 1


def test_trace_additive_and_frobenius_stable():
    ctx = make_field(2, 1, 4)
    for a in range(16):
        for b in range(16):
            assert ctx.trace(ctx.add(a, b), "q") == ctx.add(ctx.trace(a, "q"),
                                                            ctx.trace(b, "q"))
        assert ctx.trace(ctx.frobenius_q(a), "q") == ctx.trace(a, "q")
    ctx81 = make_field(3, 1, 4)
    for a in range(0, 81, 5):
        assert ctx81.trace(ctx81.frobenius_q(a), "q") == ctx81.trace(a, "q")


def test_trace_transitivity_through_f4():
    ctx = make_field(2, 2, 4)  # tower F_2 < F_4 < F_256
    for a in range(0, ctx.size, 7):
        via_q = ctx.trace_q_to_p(ctx.trace(a, "q"))
        assert ctx.trace(a, "p") == via_q


def test_trace_lands_in_subfield():
    ctx = make_field(2, 2, 6)
    sub = ctx.subfield(4)
    for a in range(0, ctx.size, 97):
        assert sub.contains(ctx.trace(a, "q"))


def test_qm_trace_odd_m_only():
    even = make_field(2, 1, 4)
    with pytest.raises(ValueError):
        even.trace(1, "qm")
    odd = make_field(2, 1, 6)
    qm = odd.q**odd.m
    member = odd.pow(odd.pi, (odd.n) // (qm - 1))
    assert odd.trace(member, "qm") in set(odd.subfield(2).elements_by_label)
    with pytest.raises(ValueError):
        odd.trace(odd.pi, "qm")  # pi generates the whole field, not F_8


def test_minimal_polynomial_of_zero_is_x():
    ctx = make_field(2, 1, 4)
    assert minimal_polynomial(ctx, 0).coeffs == (0, 1)


def test_minimal_polynomial_frozen_example():
    ctx = make_field(2, 1, 4)
    mp = minimal_polynomial(ctx, ctx.inv(ctx.pi))
    # least-degree search oracle: no monic polynomial of degree < 4 with
    # this root exists, and the degree-4 one is unique
    root = ctx.inv(ctx.pi)
    matches = []
    for packed in range(16):
        coeffs = [(packed >> i) & 1 for i in range(4)] + [1]
        acc = 0
        for c in reversed(coeffs):
            acc = ctx.add(naive_mul(ctx, acc, root), c)
        if acc == 0:
            matches.append(tuple(coeffs))
    assert matches == [(1, 0, 0, 1, 1)]
    assert mp.coeffs == (1, 0, 0, 1, 1)


def test_minimal_polynomial_degree_is_coset_size():
    ctx = make_field(2, 1, 4)
    for k in range(1, 15):
        a = ctx.pow(ctx.pi, k)
        assert minimal_polynomial(ctx, a).degree == coset_size(k, 15, 2)
    assert minimal_polynomial(ctx, ctx.pow(ctx.pi, (-5) % 15)).degree == 2


def test_minimal_polynomial_divides_field_polynomial():
    ctx = make_field(3, 1, 4)
    xq_minus_x = Poly.make(ctx, [0, ctx.neg(1)] + [0] * 79 + [1])  # x^81 - x
    for a in [1, ctx.pi, ctx.pow(ctx.pi, 7), ctx.pow(ctx.pi, 40)]:
        assert minimal_polynomial(ctx, a).divides(xq_minus_x)


def test_gamma_minimal_polynomials_distinct():
    from traceweight.codes import build_gamma
    for p, e, s in [(2, 1, 4), (2, 1, 6), (3, 1, 4)]:
        ctx = make_field(p, e, s)
        polys = [minimal_polynomial(ctx, ctx.pow(ctx.pi, (-u) % ctx.n))
                 for u in build_gamma(ctx.q, ctx.m)]
        assert len({p_.coeffs for p_ in polys}) == len(polys)


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (2, 3), (4, 2), (4, 3), (2, 5)])
def test_coset_sizes_on_gamma(q, m):
    n = q ** (2 * m) - 1
    assert coset_size(1, n, q) == 2 * m
    if m % 2:
        assert coset_size(q**m + 1, n, q) == m
    for i in range(1, m // 2 + 1):
        assert coset_size(q ** (2 * i - 1) + 1, n, q) == 2 * m


def test_coset_size_trivial_and_errors():
    assert coset_size(0, 15, 2) == 1
    with pytest.raises(ValueError):
        coset_size(1, 0, 2)


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        make_field(4, 1, 4)  # p not prime
    with pytest.raises(ValueError):
        make_field(2, 1, 3)  # s odd
    with pytest.raises(FieldSizeError):
        make_field(2, 1, 70)  # word budget


def test_log_table_bound_refusal():
    ctx = make_field(2, 1, 4, table_bound=8)
    with pytest.raises(FieldSizeError):
        ctx.exp(3)


def test_split_prime_power():
    assert split_prime_power(4) == (2, 2)
    assert split_prime_power(27) == (3, 3)
    assert split_prime_power(7) == (7, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            split_prime_power(bad)


def test_subfield_labels_are_additive():
    ctx = make_field(2, 2, 4)
    sub = ctx.subfield(4)
    for i in range(4):
        for j in range(4):
            total = ctx.add(sub.from_label(i), sub.from_label(j))
            assert sub.label_of(total) == sub.add_labels(i, j)


def test_poly_divmod_roundtrip():
    ctx = make_field(3, 1, 4)
    a = Poly.make(ctx, [2, 0, 1, 1, 0, 2, 1])
    b = Poly.make(ctx, [1, 2, 1])
    quot, rem = a.divmod(b)
    assert rem.degree < b.degree
    assert _poly_add(ctx, quot * b, rem) == a


def _poly_add(ctx, f, g):
    coeffs = [0] * max(len(f.coeffs), len(g.coeffs))
    for i, c in enumerate(f.coeffs):
        coeffs[i] = ctx.add(coeffs[i], c)
    for i, c in enumerate(g.coeffs):
        coeffs[i] = ctx.add(coeffs[i], c)
    return Poly.make(ctx, coeffs)
