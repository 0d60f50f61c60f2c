"""Signed subresultant sequences over Q and over Q[Y].

Two independent routes compute the same :class:`SubresSeq`:

* :func:`subresultants_naive` expands every Sylvester-Habicht polynomial
  determinant with fraction-free (Bareiss) elimination;
* :func:`subresultants_structured` runs the Structure Theorem recursion, one
  remainder step per non-defective index followed by exact divisions.

The coefficient domain D is Q when the inputs have rational coefficients and
Q[Y] when the inputs are nested polynomials (elements of Q[Y][X]).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    InexactDivision,
    Poly,
    divrem,
    exact_quo,
    poly_exact_quo,
    pseudo_divrem,
)


class ZeroInput(ValueError):
    pass


class StructureTheoremViolation(ArithmeticError):
    """An exact division guaranteed by the Structure Theorem failed (a bug)."""


class DegreeBoundViolation(AssertionError):
    def __init__(self, j, i, degree, bound):
        super().__init__(f"deg_Y of X^{i} coefficient of sResP_{j} is {degree} > {bound}")
        self.j, self.i, self.degree, self.bound = j, i, degree, bound


def _domain(P: Poly, Q: Poly):
    """(zero, one) of the coefficient domain of P and Q."""
    if P.is_nested() or Q.is_nested():
        return Poly(), Poly([1])
    return Fraction(0), Fraction(1)


def _check_pair(P: Poly, Q: Poly):
    if not P or not Q:
        raise ZeroInput("subresultants need nonzero inputs")
    if P.degree < 1 or Q.degree >= P.degree:
        raise ValueError(f"need deg P >= 1 > ... and deg Q < deg P, got {P.degree}, {Q.degree}")


@dataclass
class SubresSeq:
    """Full signed subresultant sequence of (P, Q).

    ``polys[j]`` is sResP_j and ``sres[j]`` is sRes_j for 0 <= j <= p.
    ``degrees`` is (d_0, ..., d_s); ``T`` maps d_{i-1} - 1 to the leading
    coefficient of sResP_{d_{i-1}-1}, with ``T[p] = 1`` for the virtual
    index d_{-1} = p + 1.
    """

    P: Poly
    Q: Poly
    polys: list
    sres: list
    degrees: tuple
    T: dict
    one: object = field(repr=False, default=Fraction(1))

    @property
    def p(self) -> int:
        return self.P.degree

    @property
    def q(self) -> int:
        return self.Q.degree

    @property
    def s(self) -> int:
        return len(self.degrees) - 1

    def d(self, i: int) -> int:
        """d_i, with d_{-1} = p + 1."""
        return self.p + 1 if i == -1 else self.degrees[i]

    def chain_polys(self):
        """S_i = sResP_{d_{i-1}-1} for 0 <= i <= s."""
        return [self.polys[self.d(i - 1) - 1] for i in range(self.s + 1)]

    def A(self, i: int):
        return self.T[self.d(i - 2) - 1] * self.sres[self.d(i - 1)]

    def C(self, i: int):
        return self.T[self.d(i - 1) - 1] * self.sres[self.d(i)]

    def same_as(self, other: SubresSeq) -> bool:
        return (
            self.polys == other.polys
            and self.sres == other.sres
            and self.degrees == other.degrees
            and self.T == other.T
        )


# ---------------------------------------------------------------------------
# determinants


def syha_matrix(P: Poly, Q: Poly, j: int):
    """Sylvester-Habicht matrix SyHa_j(P, Q).

    Rows are X^(q-j-1)P, ..., P, Q, ..., X^(p-j-1)Q in the monomial basis
    X^(p+q-j-1), ..., X, 1.
    """
    _check_pair(P, Q)
    p, q = P.degree, Q.degree
    if not 0 <= j <= q:
        raise ValueError(f"index j={j} outside 0..{q}")
    zero, _ = _domain(P, Q)
    ncols = p + q - j
    rows = []
    for k in range(q - j - 1, -1, -1):
        rows.append(_row(P, k, ncols, zero))
    for k in range(p - j):
        rows.append(_row(Q, k, ncols, zero))
    return rows


def _row(F: Poly, shift: int, ncols: int, zero):
    # column c holds the coefficient of X^(ncols-1-c) in X^shift * F
    return [F.coeff(ncols - 1 - c - shift, zero) if ncols - 1 - c - shift >= 0 else zero
            for c in range(ncols)]


def bareiss_det(M, zero, one):
    """Determinant by fraction-free elimination (exact divisions only)."""
    n = len(M)
    if n == 0:
        return one
    A = [row[:] for row in M]
    sgn = 1
    prev = one
    for k in range(n - 1):
        if not A[k][k]:
            for r in range(k + 1, n):
                if A[r][k]:
                    A[k], A[r] = A[r], A[k]
                    sgn = -sgn
                    break
            else:
                return zero
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = exact_quo(akk * row_i[j] - aik * row_k[j], prev)
        prev = akk
    det = A[n - 1][n - 1]
    return -det if sgn < 0 else det


def _nondefective(P, Q, polys, sres):
    p = P.degree
    degrees = tuple(j for j in range(p, -1, -1) if sres[j])
    T = {p: sres[p]}
    for i in range(1, len(degrees)):
        T[degrees[i - 1] - 1] = polys[degrees[i - 1] - 1].lc
    return degrees, T


def subresultants_naive(P: Poly, Q: Poly) -> SubresSeq:
    """Subresultants straight from the determinant definition."""
    _check_pair(P, Q)
    p, q = P.degree, Q.degree
    zero, one = _domain(P, Q)
    polys = [Poly()] * (p + 1)
    sres = [zero] * (p + 1)
    for j in range(q + 1):
        M = syha_matrix(P, Q, j)
        size = p + q - 2 * j
        lead = [row[: size - 1] for row in M]
        coeffs = []
        for i in range(j + 1):
            col = p + q - j - i - 1
            sub = [lead[r] + [M[r][col]] for r in range(size)]
            coeffs.append(bareiss_det(sub, zero, one))
        polys[j] = Poly(coeffs)
        sres[j] = coeffs[j]
    polys[p] = P
    polys[p - 1] = Q
    sres[p] = one
    degrees, T = _nondefective(P, Q, polys, sres)
    return SubresSeq(P, Q, polys, sres, degrees, T, one)


# ---------------------------------------------------------------------------
# Structure Theorem recursion


def _rem_quo(num: Poly, den: Poly, nested: bool):
    """Rem and Quot of num by den over the fraction field of D.

    Over Q[Y] the pair is returned scaled: (rem*lc^e, quo*lc^e, lc^e).
    """
    if not nested:
        quo, rem = divrem(num, den)
        return rem, quo, Fraction(1)
    quo, rem, e = pseudo_divrem(num, den)
    return rem, quo, den.lc ** e if e else Poly([1])


def subresultants_structured(P: Poly, Q: Poly) -> SubresSeq:
    """Subresultants by the Structure Theorem recursion."""
    _check_pair(P, Q)
    p, q = P.degree, Q.degree
    zero, one = _domain(P, Q)
    nested = isinstance(one, Poly)
    polys = [Poly()] * (p + 1)
    sres = [zero] * (p + 1)
    polys[p], polys[p - 1] = P, Q
    sres[p] = one
    degrees = [p]
    T = {p: one}
    s_prev, s_cur = P, Q  # sResP_{d_{i-2}-1}, sResP_{d_{i-1}-1}
    try:
        while True:
            d_prev = degrees[-1]
            d_i = s_cur.degree
            t = s_cur.lc
            T[d_prev - 1] = t
            k = d_prev - d_i
            num = t ** k
            if k > 1:
                num = exact_quo(num, sres[d_prev] ** (k - 1))
            sres[d_i] = -num if (k * (k - 1) // 2) % 2 else num
            polys[d_i] = s_cur if k == 1 else poly_exact_quo(s_cur.scale(sres[d_i]), t)
            degrees.append(d_i)
            if d_i == 0:
                break
            c_i = t * sres[d_i]
            a_i = T[degrees[-3] - 1 if len(degrees) >= 3 else p] * sres[d_prev]
            rem, quo, scale = _rem_quo(s_prev.scale(c_i), s_cur, nested)
            # the quotient must lie in D[X]
            poly_exact_quo(quo, scale)
            s_next = poly_exact_quo(-rem, a_i * scale)
            if not s_next:
                break
            polys[d_i - 1] = s_next
            s_prev, s_cur = s_cur, s_next
    except InexactDivision as exc:
        raise StructureTheoremViolation(str(exc)) from exc
    return SubresSeq(P, Q, polys, sres, tuple(degrees), T, one)


def subresultants(P: Poly, Q: Poly, method: str = "structured") -> SubresSeq:
    if method == "structured":
        return subresultants_structured(P, Q)
    if method == "naive":
        return subresultants_naive(P, Q)
    raise ValueError(f"unknown method {method!r}")


def check_structure(seq: SubresSeq):
    """Assert every Structure Theorem identity on ``seq``.

    Raises StructureTheoremViolation on the first failure.
    """
    P, polys, sres, T = seq.P, seq.polys, seq.sres, seq.T
    nested = isinstance(seq.one, Poly)

    def fail(msg):
        raise StructureTheoremViolation(msg)

    if polys[seq.p] != P or polys[seq.p - 1] != seq.Q:
        fail("conventions sResP_p = P, sResP_{p-1} = Q")
    if seq.degrees[0] != seq.p or (seq.s >= 1 and seq.degrees[1] != seq.q):
        fail("d_0 = p and d_1 = q")
    for i in range(1, seq.s + 1):
        dp, di = seq.d(i - 1), seq.d(i)
        for j in range(di + 1, dp - 1):
            if polys[j]:
                fail(f"sResP_{j} should vanish")
        top = polys[dp - 1]
        if top.degree != di:
            fail(f"deg sResP_{dp - 1} = {top.degree} != {di}")
        if top.scale(sres[di]) != polys[di].scale(T[dp - 1]):
            fail(f"proportionality at i={i}")
        k = dp - di
        lhs = sres[di] * sres[dp] ** (k - 1) if k > 1 else sres[di]
        rhs = T[dp - 1] ** k
        if (k * (k - 1) // 2) % 2:
            rhs = -rhs
        if lhs != rhs:
            fail(f"sign/power formula at i={i}")
    ds = seq.d(seq.s)
    for j in range(ds):
        if polys[j]:
            fail(f"sResP_{j} below d_s should vanish")
    # remainder identities: A_i S_{i+1} = -Rem(C_i S_{i-1}, S_i)
    S = seq.chain_polys()
    for i in range(1, seq.s):
        rem, quo, scale = _rem_quo(S[i - 1].scale(seq.C(i)), S[i], nested)
        try:
            poly_exact_quo(quo, scale)
        except InexactDivision:
            fail(f"Quot not in D[X] at i={i}")
        if S[i + 1].scale(seq.A(i) * scale) != -rem:
            fail(f"remainder identity at i={i}")
    return True


def coefficient_degree_check(P: Poly, Q: Poly, d: int, seq: SubresSeq | None = None):
    """Check deg_Y bounds on every coefficient of sResP_j(P, Q) for j <= q.

    Returns a list of (j, i, degree, bound) rows; raises DegreeBoundViolation.
    """
    p, q = P.degree, Q.degree
    if max(P.total_degree(), Q.total_degree()) > d or p > d:
        raise ValueError("inputs exceed the declared total degree bound")
    if seq is None:
        seq = subresultants_structured(P, Q)
    report = []
    for j in range(q + 1):
        for i in range(j + 1):
            c = seq.polys[j].coeff(i, Poly())
            deg = c.degree
            bound = d * (p + q - 2 * j) - p * q + j * j + j - i
            if deg > bound or deg > d * d:
                raise DegreeBoundViolation(j, i, deg, min(bound, d * d))
            report.append((j, i, None if not c else deg, bound))
    return report


def refined_bound_holds(max_d: int = 12) -> bool:
    """d(p+q) - pq <= d^2 for every 0 <= q < p <= d <= max_d."""
    return all(
        d * (p + q) - p * q <= d * d
        for d in range(1, max_d + 1)
        for p in range(1, d + 1)
        for q in range(p)
    )
