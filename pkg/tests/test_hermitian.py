"""Hermitian-matrix witness: counts, spectrum, explicit embedding."""

import pytest

from traceweight.fields import BudgetExceeded, make_field
from traceweight.hermitian import (cayley_spectrum,
                                   character_table_rows_distinct,
                                   enumerate_hermitian, hermitian_at,
                                   matrix_rank, rank1_count,
                                   verify_isomorphism)
from traceweight.spectra import eigenvalues, frequencies

CASES = [(2, 1, 1), (2, 1, 2), (3, 1, 2), (2, 1, 3)]


def expected_spectrum(q, m):
    out = {}
    for xi, fj in zip(eigenvalues(q, m), frequencies(q, m)):
        out[xi] = out.get(xi, 0) + fj
    return out


def test_hermitian_1x1_over_f4():
    ctx = make_field(2, 1, 2)
    mats = list(enumerate_hermitian(ctx))
    assert mats == [((0,),), ((1,),)]


@pytest.mark.parametrize("p,e,m", CASES)
def test_hermitian_count_and_structure(p, e, m):
    ctx = make_field(p, e, 2 * m)
    q = p**e
    fq = ctx.subfield(q)
    count = 0
    for h in enumerate_hermitian(ctx):
        count += 1
        if count % 37 == 1:  # structural spot checks
            for i in range(m):
                assert fq.contains(h[i][i])
                for j in range(m):
                    assert h[j][i] == ctx.frobenius_q(h[i][j])
    assert count == q ** (m * m)


@pytest.mark.parametrize("p,e,m,expected", [
    (2, 1, 1, 1), (2, 1, 2, 5), (3, 1, 2, 20), (2, 1, 3, 21)])
def test_rank1_counts(p, e, m, expected):
    ctx = make_field(p, e, 2 * m)
    assert rank1_count(ctx) == expected
    assert expected == ((p**e) ** (2 * m) - 1) // (p**e + 1)


@pytest.mark.parametrize("p,e,m", CASES)
def test_spectrum_matches_closed_form(p, e, m):
    ctx = make_field(p, e, 2 * m)
    q = p**e
    spectrum = cayley_spectrum(ctx)
    assert spectrum == expected_spectrum(q, m)
    # sanity identities on the measured multiset alone
    kset_size = (q ** (2 * m) - 1) // (q + 1)
    assert sum(spectrum.values()) == q ** (m * m)
    assert sum(e_ * c for e_, c in spectrum.items()) == 0
    assert sum(e_ * e_ * c for e_, c in spectrum.items()) == q ** (m * m) * kset_size


def test_trivial_character_gives_kset_size():
    ctx = make_field(3, 1, 4)
    spectrum = cayley_spectrum(ctx)
    assert spectrum[20] >= 1  # |K| = 20 appears (the trivial character)


def test_character_rows_distinct_at_22():
    assert character_table_rows_distinct(make_field(2, 1, 4))


@pytest.mark.parametrize("p,e,m", CASES)
def test_isomorphism_checks(p, e, m):
    ctx = make_field(p, e, 2 * m)
    q = p**e
    report = verify_isomorphism(ctx)
    assert report.ok, report.notes
    assert report.connection_set_size == (q ** (2 * m) - 1) // (q + 1)


def test_zero_matrix_maps_to_zero():
    ctx = make_field(2, 1, 4)
    from traceweight.hermitian import _embedding_image
    zero = hermitian_at(ctx, 0)
    assert _embedding_image(ctx, [1, ctx.pi], [2], zero) == (0,)


def test_matrix_rank_basics():
    ctx = make_field(2, 1, 4)
    zero = hermitian_at(ctx, 0)
    assert matrix_rank(ctx, zero) == 0
    full = tuple(tuple(1 if i == j else 0 for j in range(2)) for i in range(2))
    assert matrix_rank(ctx, full) == 2


def test_budget_refusal():
    ctx = make_field(2, 1, 10)  # q^(m^2) = 2^25 matrices
    with pytest.raises(BudgetExceeded) as err:
        list(enumerate_hermitian(ctx))
    assert err.value.estimate == 2**25
