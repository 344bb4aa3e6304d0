import random
from fractions import Fraction as F
from math import factorial

import pytest

from umbra import (
    ConnectionMatrix,
    NotInvertible,
    Poly,
    ShefferPair,
    TruncatedSeries,
    TruncationTooShort,
    SingularBasis,
    bernoulli,
    connection_coeffs,
    connection_oracle,
    euler,
    eval_functional,
    family_poly,
    frobenius_euler,
    hermite,
    operator_apply,
    pair_functional,
    sheffer_pair_of,
    sheffer_poly,
    sheffer_polys,
)
from umbra.umbral import _solve_in_basis

S = TruncatedSeries


def rand_poly(rng, max_degree):
    coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(max_degree + 1)]
    return Poly(coeffs)


def rand_series(rng, order):
    return S([F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order + 1)])


BUILTIN_SPECS = [
    hermite(),
    bernoulli(1),
    bernoulli(3),
    bernoulli(4),
    euler(1),
    euler(2),
    euler(4),
    frobenius_euler(1, F(2)),
    frobenius_euler(2, F(1, 2)),
    frobenius_euler(3, F(-1)),
    frobenius_euler(4, F(2)),
]


def test_monomial_pairing_is_factorial_delta():
    for n in range(7):
        p = Poly.monomial(n)
        for k in range(7):
            expected = factorial(n) if n == k else 0
            assert pair_functional(S.monomial(k, 8), p) == expected


def test_evaluation_functional():
    p = Poly([-1, 0, 1])  # x^2 - 1
    assert pair_functional(eval_functional(3, p.degree), p) == 8
    assert pair_functional(eval_functional(F(1, 2), 2), p) == F(-3, 4)


def test_constant_functional_reads_constant_term():
    p = Poly([F(5, 3), 2, 0, 7])
    assert pair_functional(S.one(3), p) == F(5, 3)


def test_pairing_needs_enough_coefficients():
    with pytest.raises(TruncationTooShort):
        pair_functional(S.one(1), Poly([0, 0, 1]))
    with pytest.raises(TruncationTooShort):
        operator_apply(S.one(1), Poly([0, 0, 1]))


def test_operator_examples():
    assert operator_apply(S.monomial(2, 4), Poly([0, 0, 0, 0, 1])) == Poly([0, 0, 12])
    p = Poly([1, 2, 3])
    assert operator_apply(S.one(2), p) == p
    gauss = S.monomial(2, 3, F(-1, 4)).exp()
    assert operator_apply(gauss, Poly.monomial(1, 2) ** 3) == Poly([0, -12, 0, 8])


def test_operator_matches_family_route():
    gauss = S.monomial(2, 3, F(-1, 4)).exp()
    assert operator_apply(gauss, Poly.monomial(1, 2) ** 3) == family_poly(hermite(), 3)


def test_adjoint_law_random():
    rng = random.Random(29)
    for _ in range(100):
        deg = rng.randint(0, 8)
        p = rand_poly(rng, deg)
        f = rand_series(rng, 8)
        g = rand_series(rng, 8)
        assert pair_functional(f * g, p) == pair_functional(g, operator_apply(f, p))


def test_derivative_extraction_law():
    rng = random.Random(31)
    for _ in range(20):
        p = rand_poly(rng, rng.randint(0, 8))
        k = rng.randint(0, 8)
        assert pair_functional(S.monomial(k, 8) if k else S.one(8), p) == \
            p.derivative(k).eval(0)


def test_sheffer_pair_validation():
    with pytest.raises(NotInvertible):
        ShefferPair(S.t(3), S.t(3))
    pair = sheffer_pair_of(hermite(), 6)
    assert pair.fbar.compose(pair.f) == S.t(6)
    assert pair.f.compose(pair.fbar) == S.t(6)


def test_sheffer_poly_identity_pair():
    pair = ShefferPair(S.one(6), S.t(6))
    for n in range(7):
        assert sheffer_poly(pair, n) == Poly.monomial(n)


def test_sheffer_poly_euler_and_hermite():
    assert sheffer_poly(sheffer_pair_of(euler(1), 1), 1) == Poly([F(-1, 2), 1])
    assert sheffer_poly(sheffer_pair_of(hermite(), 2), 2) == Poly([-2, 0, 4])


def test_sheffer_poly_needs_truncation():
    with pytest.raises(TruncationTooShort):
        sheffer_poly(sheffer_pair_of(hermite(), 3), 5)


def test_sheffer_orthogonality_all_builtin_pairs():
    for spec in BUILTIN_SPECS:
        pair = sheffer_pair_of(spec, 8)
        polys = sheffer_polys(pair, 8)
        for k in range(9):
            weight = pair.g * pair.f ** k
            for n in range(9):
                expected = factorial(n) if n == k else 0
                assert pair_functional(weight, polys[n]) == expected, (spec, n, k)


def test_connection_identity_when_source_is_target():
    pair = sheffer_pair_of(bernoulli(2), 6)
    matrix = connection_coeffs(pair, pair, 6)
    for n in range(7):
        for k in range(n + 1):
            assert matrix.entry(n, k) == (1 if n == k else 0)


def test_connection_hermite_to_monomials_gives_hermite_coeffs():
    src = sheffer_pair_of(hermite(), 6)
    tgt = ShefferPair(S.one(6), S.t(6))
    matrix = connection_coeffs(src, tgt, 6)
    for n in range(7):
        h = family_poly(hermite(), n)
        assert list(matrix.rows[n]) == [h.coeff(k) for k in range(n + 1)]


def test_connection_routes_agree():
    rng = random.Random(37)
    for src_spec in BUILTIN_SPECS:
        for tgt_spec in rng.sample(BUILTIN_SPECS, 4):
            src = sheffer_pair_of(src_spec, 8)
            tgt = sheffer_pair_of(tgt_spec, 8)
            assert connection_coeffs(src, tgt, 8) == connection_oracle(src, tgt, 8)


def test_connection_expands_source_in_target_basis():
    src = sheffer_pair_of(euler(2), 6)
    tgt = sheffer_pair_of(hermite(), 6)
    matrix = connection_coeffs(src, tgt, 6)
    targets = sheffer_polys(tgt, 6)
    for n in range(7):
        combo = Poly.zero()
        for k in range(n + 1):
            combo = combo + matrix.entry(n, k) * targets[k]
        assert combo == sheffer_poly(src, n)


def test_connection_transitivity():
    a = sheffer_pair_of(euler(1), 8)
    b = sheffer_pair_of(hermite(), 8)
    c = sheffer_pair_of(bernoulli(2), 8)
    ab = connection_coeffs(a, b, 8)
    bc = connection_coeffs(b, c, 8)
    ac = connection_coeffs(a, c, 8)
    for n in range(9):
        for m in range(n + 1):
            product = sum(ab.entry(n, k) * bc.entry(k, m) for k in range(m, n + 1))
            assert product == ac.entry(n, m)


def test_oracle_bernoulli2_row_in_monomials():
    src = sheffer_pair_of(bernoulli(2), 4)
    tgt = ShefferPair(S.one(4), S.t(4))
    matrix = connection_oracle(src, tgt, 4)
    assert list(matrix.rows[1]) == [F(-1), F(1)]  # x - 1


def test_solver_rejects_malformed_basis():
    basis = [Poly([1]), Poly([3])]  # degree-1 slot holds a constant
    with pytest.raises(SingularBasis):
        _solve_in_basis([Poly([1]), Poly([0, 1])], basis)


def test_connection_matrix_shape():
    matrix = ConnectionMatrix([[F(1)], [F(0), F(2)]])
    assert matrix.n_max == 1
    assert matrix.entry(1, 1) == 2
    with pytest.raises(IndexError):
        matrix.entry(1, 2)
    with pytest.raises(ValueError):
        ConnectionMatrix([[F(1), F(2)]])
