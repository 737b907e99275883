"""Field arithmetic: construction, axioms, Frobenius, square roots,
irreducibility, and the exact linear solver."""

import random
from itertools import product

import pytest

from galois_arrow.errors import (
    CompositeCharacteristic,
    DivisionByZero,
    EmptyMatrix,
    MixedFields,
    NoDefaultModulus,
    OddCharacteristic,
    ReducibleModulus,
    ZeroPolynomial,
)
from galois_arrow.field import (
    DEFAULT_MODULI,
    FieldSpec,
    add,
    elements,
    inv,
    is_irreducible,
    make_field,
    mul,
    neg,
    parse_modulus,
    solve_homogeneous,
    sqrt_char2,
    sub,
)

GF2 = make_field(2, 1)
GF3 = make_field(3, 1)
GF4 = make_field(2, 2)
GF8 = make_field(2, 3)


# --- construction -------------------------------------------------------------

def test_make_field_defaults():
    assert make_field(2, 1).order == 2
    assert make_field(2, 3).order == 8
    assert make_field(3).order == 3


def test_make_field_explicit_modulus():
    f = make_field(2, 3, (1, 1, 0, 1))
    assert f.order == 8
    assert f.modulus == (1, 1, 0, 1)


def test_make_field_rejects_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 in char 2


def test_make_field_rejects_composite_characteristic():
    with pytest.raises(CompositeCharacteristic):
        make_field(4, 1)
    with pytest.raises(CompositeCharacteristic):
        make_field(1, 1)


def test_make_field_without_default_modulus():
    with pytest.raises(NoDefaultModulus):
        make_field(2, 9)
    with pytest.raises(NoDefaultModulus):
        make_field(11, 1)


def test_make_field_wrong_degree_modulus():
    with pytest.raises(ValueError):
        make_field(2, 3, (1, 1, 1))


def test_default_moduli_all_validate():
    for (p, n), modulus in DEFAULT_MODULI.items():
        f = make_field(p, n)
        assert f.modulus == modulus
        assert is_irreducible(modulus, p)


def test_equal_parameters_mean_equal_fields():
    assert make_field(2, 3) == make_field(2, 3, (1, 1, 0, 1))
    assert make_field(2, 3) != make_field(2, 3, (1, 0, 1, 1))


# --- irreducibility ------------------------------------------------------------

def test_is_irreducible_examples():
    assert is_irreducible((1, 1, 1), 2)          # x^2 + x + 1
    assert not is_irreducible((1, 0, 1), 2)      # x^2 + 1 has root 1
    assert is_irreducible((1, 1, 0, 1), 2)       # x^3 + x + 1
    assert is_irreducible((1, 0, 1), 3)          # x^2 + 1 over GF(3)
    assert not is_irreducible((2, 0, 1), 3)      # x^2 + 2 has root 1


def test_is_irreducible_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        is_irreducible((0, 0), 2)


def test_is_irreducible_constants_are_units():
    assert not is_irreducible((1,), 2)
    assert not is_irreducible((2,), 3)


def _brute_force_irreducible(coeffs, p):
    """Oracle: trial division by every monic polynomial of degree <= deg/2."""
    from galois_arrow.field import _deg, _monic, _poly_mod, _trim

    f = _monic(_trim(c % p for c in coeffs), p)
    d = _deg(f)
    if d < 1:
        return False
    for deg in range(1, d // 2 + 1):
        for tail in product(range(p), repeat=deg):
            divisor = _trim(tail + (1,))
            if not _poly_mod(f, divisor, p):
                return False
    return True


def test_is_irreducible_against_brute_force():
    for p, max_deg in ((2, 6), (3, 4)):
        for deg in range(1, max_deg + 1):
            for tail in product(range(p), repeat=deg):
                poly = tail + (1,)
                if not any(poly):
                    continue
                assert is_irreducible(poly, p) == _brute_force_irreducible(poly, p), poly


# --- element arithmetic ---------------------------------------------------------

def test_add_examples():
    assert GF2.element(1) + GF2.element(1) == GF2.zero
    assert GF8.element(3) + GF8.element(6) == GF8.element(5)  # (x+1)+(x^2+x)
    assert GF3.element(2) + GF3.element(2) == GF3.one


def test_mul_examples():
    assert GF8.element(2) * GF8.element(4) == GF8.element(3)  # x * x^2 = x + 1
    assert GF2.element(1) * GF2.element(0) == GF2.zero
    assert GF8.element(2) * GF8.element(5) == GF8.one         # x * (x^2+1) = 1


def test_inv_examples():
    assert inv(GF2.one) == GF2.one
    assert inv(GF8.element(2)) == GF8.element(5)
    assert inv(GF3.element(2)) == GF3.element(2)


def test_inv_of_zero():
    with pytest.raises(DivisionByZero):
        inv(GF8.zero)


def test_sub_is_add_in_char2():
    for a in elements(GF8):
        for b in elements(GF8):
            assert sub(a, b) == add(a, b)


def test_neg_odd_characteristic():
    assert neg(GF3.element(1)) == GF3.element(2)
    assert neg(GF3.zero) == GF3.zero


def test_mixed_fields_rejected():
    other = make_field(2, 3, (1, 0, 1, 1))  # x^3 + x^2 + 1
    with pytest.raises(MixedFields):
        GF8.element(1) + other.element(1)
    with pytest.raises(MixedFields):
        GF8.element(3) * GF4.element(3)


def test_element_value_range_checked():
    with pytest.raises(ValueError):
        GF4.element(4)
    with pytest.raises(ValueError):
        GF4.element(-1)


def test_element_from_coefficients():
    assert GF8.element((1, 1, 0)) == GF8.element(3)
    assert GF8.element((0, 0, 1)) == GF8.element(4)


def test_division_and_pow():
    a, b = GF8.element(7), GF8.element(3)
    assert (a / b) * b == a
    assert a ** 0 == GF8.one
    assert a ** 3 == a * a * a
    assert a ** -1 == inv(a)


def test_elements_enumeration():
    assert [e.value for e in elements(GF2)] == [0, 1]
    gf4 = [e.coeffs for e in elements(GF4)]
    assert gf4 == [(0, 0), (1, 0), (0, 1), (1, 1)]  # 0, 1, x, x+1
    gf8 = elements(GF8)
    assert len(gf8) == 8 and len(set(gf8)) == 8


# --- axioms -------------------------------------------------------------------

AXIOM_FIELDS = [make_field(2, 1), make_field(2, 2), make_field(2, 3),
                make_field(2, 4), make_field(3, 1)]


@pytest.mark.parametrize("spec", AXIOM_FIELDS, ids=lambda s: f"q{s.order}")
def test_field_axioms_exhaustive(spec):
    els = elements(spec)
    zero, one = spec.zero, spec.one
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * inv(a) == one
    for a, b in product(els, els):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in product(els, els, els):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_field_axioms_random_gf32():
    spec = make_field(2, 5)
    rng = random.Random(1905)
    els = elements(spec)
    one = spec.one
    for _ in range(10_000):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * inv(a) == one


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_frobenius_additivity(n):
    spec = make_field(2, n)
    els = elements(spec)
    pairs = product(els, els) if spec.order <= 16 else \
        ((a, b) for a in els for b in els)
    for a, b in pairs:
        assert (a + b) ** 2 == a ** 2 + b ** 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sqrt_char2_is_the_inverse_bijection_of_squaring(n):
    spec = make_field(2, n)
    els = elements(spec)
    images = {sqrt_char2(a) for a in els}
    assert images == set(els)
    for a in els:
        r = sqrt_char2(a)
        assert r * r == a


def test_sqrt_char2_examples():
    assert sqrt_char2(GF2.one) == GF2.one
    assert sqrt_char2(GF8.element(4)) == GF8.element(2)  # sqrt(x^2) = x
    assert sqrt_char2(GF8.element(2)) == GF8.element(6)  # x^4 = x^2 + x


def test_sqrt_char2_exhaustive_search_oracle():
    for a in elements(GF8):
        brute = [b for b in elements(GF8) if b * b == a]
        assert brute == [sqrt_char2(a)]


def test_sqrt_odd_characteristic_rejected():
    with pytest.raises(OddCharacteristic):
        sqrt_char2(GF3.one)


# --- fast path vs reference path -------------------------------------------------

@pytest.mark.parametrize("spec", [GF4, GF8, make_field(2, 4), make_field(2, 5),
                                  make_field(3, 2, (1, 0, 1))],
                         ids=lambda s: f"q{s.order}")
def test_mul_table_matches_polynomial_reduction(spec):
    for a in range(spec.order):
        for b in range(spec.order):
            assert spec._mul_i(a, b) == spec._mul_slow(a, b)


def test_mul_log_tables_match_polynomial_reduction():
    spec = make_field(2, 7)  # q = 128 takes the log/antilog path
    assert spec._exp is not None
    for a in range(spec.order):
        for b in range(spec.order):
            assert spec._mul_i(a, b) == spec._mul_slow(a, b)


def test_inverse_consistent_with_mul_everywhere():
    for spec in (GF4, GF8, make_field(2, 5), make_field(3, 2, (1, 0, 1))):
        for a in elements(spec):
            if a:
                assert a * inv(a) == spec.one


# --- modulus parsing --------------------------------------------------------------

def test_parse_modulus_coefficient_list():
    assert parse_modulus("1,1,0,1", 2) == (1, 1, 0, 1)
    assert parse_modulus("1,0,1", 3) == (1, 0, 1)


def test_parse_modulus_hex_bitmask():
    assert parse_modulus("0xB", 2) == (1, 1, 0, 1)
    assert parse_modulus("0x13", 2) == (1, 1, 0, 0, 1)
    with pytest.raises(ValueError):
        parse_modulus("0xB", 3)
    with pytest.raises(ValueError):
        parse_modulus("x^3+x+1", 2)


def test_hex_and_list_moduli_agree():
    assert make_field(2, 3, parse_modulus("0xB", 2)) == make_field(2, 3, parse_modulus("1,1,0,1", 2))


# --- homogeneous solver ------------------------------------------------------------

def _as_matrix(spec, rows):
    return [[spec.element(v) for v in row] for row in rows]


def test_solve_homogeneous_full_rank_identity():
    m = _as_matrix(GF2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert solve_homogeneous(m) == []


def test_solve_homogeneous_zero_row():
    basis = solve_homogeneous(_as_matrix(GF2, [[0, 0, 0]]))
    assert len(basis) == 3
    vectors = {tuple(e.value for e in v) for v in basis}
    assert vectors == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_solve_homogeneous_empty_matrix():
    with pytest.raises(EmptyMatrix):
        solve_homogeneous([])
    with pytest.raises(EmptyMatrix):
        solve_homogeneous([[]])


def test_solve_homogeneous_mixed_fields():
    with pytest.raises(MixedFields):
        solve_homogeneous([[GF2.one, GF4.one]])


def _brute_force_kernel(spec, rows):
    """Oracle: enumerate every vector of GF(q)^c and keep the solutions."""
    ncols = len(rows[0])
    kernel = set()
    for vec in product(range(spec.order), repeat=ncols):
        ok = True
        for row in rows:
            acc = spec.zero
            for r, v in zip(row, vec):
                acc = acc + spec.element(r) * spec.element(v)
            if acc:
                ok = False
                break
        if ok:
            kernel.add(vec)
    return kernel


def _span(spec, basis):
    vectors = set()
    dims = len(basis)
    for coeffs in product(range(spec.order), repeat=dims):
        acc = [spec.zero] * len(basis[0])
        for k, vec in zip(coeffs, basis):
            kc = spec.element(k)
            acc = [a + kc * v for a, v in zip(acc, vec)]
        vectors.add(tuple(e.value for e in acc))
    return vectors


@pytest.mark.parametrize("spec,rows", [
    (GF2, [[1, 0, 1, 1], [0, 1, 1, 0]]),
    (GF2, [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1]]),
    (GF4, [[1, 2, 3, 0], [0, 1, 0, 2]]),
    (GF3, [[1, 2, 0], [2, 1, 1]]),
], ids=["gf2-rank2", "gf2-repeated-row", "gf4", "gf3"])
def test_solve_homogeneous_against_enumerated_kernel(spec, rows):
    matrix = _as_matrix(spec, rows)
    basis = solve_homogeneous(matrix)
    for vec in basis:
        for row in matrix:
            acc = spec.zero
            for r, v in zip(row, vec):
                acc = acc + r * v
            assert not acc
    assert _span(spec, basis) == _brute_force_kernel(spec, rows) if basis else \
        _brute_force_kernel(spec, rows) == {(0,) * len(rows[0])}


def test_solve_homogeneous_basis_count_is_cols_minus_rank():
    rows = [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1], [1, 1, 0, 1, 1]]
    basis = solve_homogeneous(_as_matrix(GF2, rows))
    # third row = first + second, so rank 2 over GF(2)
    assert len(basis) == 5 - 2
