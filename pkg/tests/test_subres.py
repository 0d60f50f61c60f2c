import random
from fractions import Fraction

import pytest

from rootwind.exact import Poly, X, bipoly_from_dict, gcd, specialize
from rootwind.subres import (
    StructureTheoremViolation,
    ZeroInput,
    bareiss_det,
    check_structure,
    coefficient_degree_check,
    refined_bound_holds,
    subresultants,
    subresultants_naive,
    subresultants_structured,
    syha_matrix,
)

from gen import bipoly, bipoly_total, upoly


def det_by_expansion(M):
    if not M:
        return Fraction(1)
    return sum(
        (-1) ** c * M[0][c] * det_by_expansion([row[:c] + row[c + 1:] for row in M[1:]])
        for c in range(len(M))
    )


def test_matrix_rows_follow_shifted_inputs():
    # rows: P, then Q, then X*Q, in the basis X^2, X, 1
    M = syha_matrix(X * X, X + 1, 0)
    assert M == [[1, 0, 0], [0, 1, 1], [1, 1, 0]]
    # this ordering makes sRes_0 = -Res(X^2, X + 1) = -1
    assert det_by_expansion(M) == -1


def test_matrix_shape():
    rng = random.Random(0)
    for _ in range(20):
        p = rng.randint(1, 7)
        q = rng.randint(0, p - 1)
        P, Q = upoly(rng, p), upoly(rng, q)
        for j in range(q + 1):
            M = syha_matrix(P, Q, j)
            assert len(M) == p + q - 2 * j
            assert all(len(r) - len(M) == j for r in M)
    with pytest.raises(ValueError):
        syha_matrix(X * X, X + 1, 2)


def test_bareiss_matches_expansion():
    rng = random.Random(1)
    for n in range(1, 6):
        M = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(M, Fraction(0), Fraction(1)) == det_by_expansion(M)


def test_sturm_pair_values():
    P, Q = X * X - 2, 2 * X
    seq = subresultants_naive(P, Q)
    assert seq.polys == [Poly([8]), Q, P]
    assert seq.sres == [8, 2, 1]
    assert seq.degrees == (2, 1, 0)
    assert seq.T == {2: 1, 1: 2, 0: 8}
    # sRes_0 is the full 3x3 determinant, computed here by cofactor expansion
    assert det_by_expansion(syha_matrix(P, Q, 0)) == 8
    assert subresultants_structured(P, Q).same_as(seq)


def test_conventions():
    P = upoly(random.Random(2), 6)
    Q = Poly([1, 2, 3])
    for seq in (subresultants_naive(P, Q), subresultants_structured(P, Q)):
        assert seq.polys[6] == P and seq.polys[5] == Q
        assert seq.sres[6] == 1
        assert all(seq.sres[j] == 0 for j in (3, 4, 5))
        assert all(not seq.polys[j] for j in (3, 4))
        assert seq.d(-1) == 7


def test_zero_input_rejected():
    with pytest.raises(ZeroInput):
        subresultants_naive(X, Poly())
    with pytest.raises(ValueError):
        subresultants_structured(X, X * X)


def test_structured_equals_naive_over_rationals():
    rng = random.Random(4)
    for _ in range(60):
        p = rng.randint(1, 9)
        P, Q = upoly(rng, p), upoly(rng, rng.randint(0, p - 1))
        if rng.random() < 0.3 and p < 8:
            g = upoly(rng, rng.randint(1, 2))
            P, Q = P * g, Q * g
        s, n = subresultants_structured(P, Q), subresultants_naive(P, Q)
        assert s.same_as(n)
        assert check_structure(s)


def test_structured_equals_naive_over_polynomials():
    rng = random.Random(5)
    for _ in range(15):
        p = rng.randint(1, 4)
        P = bipoly(rng, p, rng.randint(0, 2))
        Q = bipoly(rng, rng.randint(0, p - 1), rng.randint(0, 2))
        s, n = subresultants_structured(P, Q), subresultants_naive(P, Q)
        assert s.same_as(n)
        assert check_structure(s)


def test_coprime_sequence_ends_in_constant():
    rng = random.Random(6)
    for _ in range(30):
        p = rng.randint(1, 8)
        P, Q = upoly(rng, p), upoly(rng, rng.randint(0, p - 1))
        seq = subresultants_structured(P, Q)
        coprime = gcd(P, Q).degree == 0
        assert (seq.degrees[-1] == 0) == coprime


def test_common_factor_is_last_entry():
    rng = random.Random(7)
    for _ in range(30):
        g = upoly(rng, rng.randint(1, 3))
        P0, Q0 = upoly(rng, rng.randint(1, 4)), upoly(rng, rng.randint(0, 3))
        if Q0.degree >= P0.degree or gcd(P0, Q0).degree > 0:
            continue
        seq = subresultants_structured(P0 * g, Q0 * g)
        ds = seq.degrees[-1]
        assert ds == g.degree
        assert seq.polys[ds].monic() == g.monic()
        assert seq.chain_polys()[-1].monic() == g.monic()
        assert all(not seq.polys[j] for j in range(ds))


def test_specialization_commutes_with_subresultants():
    rng = random.Random(8)
    checked = 0
    for _ in range(20):
        P = bipoly(rng, 3, 2)
        Q = bipoly(rng, 2, 2)
        seq = subresultants_structured(P, Q)
        for y in (Fraction(-1), Fraction(1, 2), Fraction(2)):
            Py, Qy = specialize(P, "Y", y), specialize(Q, "Y", y)
            if Py.degree != 3 or Qy.degree != 2:
                continue
            direct = subresultants_naive(Py, Qy)
            for j in range(4):
                assert specialize(seq.polys[j], "Y", y) == direct.polys[j]
            checked += 1
    assert checked > 10


def test_coefficient_degree_bound():
    rng = random.Random(9)
    for _ in range(25):
        d = rng.randint(2, 5)
        p = rng.randint(1, d)
        P = bipoly_total(rng, d, p)
        Q = bipoly_total(rng, d, rng.randint(0, p - 1))
        rows = coefficient_degree_check(P, Q, d)
        assert all(deg is None or deg <= min(bound, d * d) for _, _, deg, bound in rows)


def test_degree_bound_constant_in_y():
    P, Q = X ** 3 - 2 * X + 1, X * X + 3
    lift = lambda f: f.map_coeffs(Poly.constant)
    rows = coefficient_degree_check(lift(P), lift(Q), 3)
    assert all(deg in (None, 0) for _, _, deg, _ in rows)


def test_degree_check_rejects_understated_bound():
    P = bipoly_from_dict({(2, 0): 1, (0, 3): 1})
    with pytest.raises(ValueError):
        coefficient_degree_check(P, bipoly_from_dict({(0, 0): 1}), 2)


def test_refined_bound_arithmetic():
    assert refined_bound_holds(12)


def test_dispatch():
    assert subresultants(X * X - 2, 2 * X, "naive").same_as(subresultants(X * X - 2, 2 * X))
    with pytest.raises(ValueError):
        subresultants(X, Poly([1]), "fast")
    assert issubclass(StructureTheoremViolation, ArithmeticError)
