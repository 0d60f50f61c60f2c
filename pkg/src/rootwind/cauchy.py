"""Cauchy indices, sign variations and (sigma, tau)-chains.

Indices are exact elements of (1/2)Z returned as Fractions.  Root and sign
semantics are those of the real closure of Q: a polynomial with rational
coefficients "has a root" in an interval when it has a real algebraic root
there, whether or not that root is rational.

Two independent evaluations of the index on an interval exist:

* :func:`cauchy_index` builds the subresultant (sigma, tau)-chain of the
  pair and counts weighted sign variations at the two endpoints;
* :func:`cauchy_index_oracle` isolates the real roots of the denominator by
  Descartes bisection and sums the local jumps directly from the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    InexactDivision,
    Poly,
    Q as rat,
    affine_compose,
    divrem,
    gcd,
    poly_exact_quo,
    pseudo_divrem,
    sign,
    specialize,
)
from .subres import subresultants_structured

HALF = Fraction(1, 2)


class NotCoprime(ValueError):
    pass


class DegreeOrder(ValueError):
    pass


class CommonRoot(ValueError):
    pass


class SignConditionFails(ValueError):
    def __init__(self, poly, what=""):
        super().__init__(f"sign condition fails for {what or 'polynomial'} {poly}")
        self.poly = poly


def sign_of(x) -> int:
    return sign(x)


def is_half_int(x) -> bool:
    return (2 * Fraction(x)).denominator == 1


# ---------------------------------------------------------------------------
# sign variations


def var_at(P: Poly, Q: Poly, x) -> Fraction:
    """Var_x(P, Q) = |sign P(x) - sign Q(x)| / 2."""
    x = rat(x)
    return HALF * abs(sign(P(x)) - sign(Q(x)))


def var_interval(P: Poly, Q: Poly, a, b) -> Fraction:
    return var_at(P, Q, a) - var_at(P, Q, b)


# ---------------------------------------------------------------------------
# index at a point


def multiplicity(P: Poly, x) -> tuple[int, Poly]:
    """(mu, P~) with P = (X - x)^mu * P~ and P~(x) != 0.  P must be nonzero."""
    if not P:
        raise ValueError("multiplicity of a root of the zero polynomial")
    lin = Poly([-rat(x), 1])
    mu = 0
    while P(x) == 0:
        P = divrem(P, lin)[0]
        mu += 1
    return mu, P


@dataclass(frozen=True)
class LocalIndex:
    plus: Fraction
    minus: Fraction

    @property
    def total(self) -> Fraction:
        return self.plus - self.minus

    def __iter__(self):
        return iter((self.plus, self.minus, self.total))


def local_index(Q: Poly, P: Poly, x) -> LocalIndex:
    """Ind_x^+(Q, P), Ind_x^-(Q, P) and their difference."""
    x = rat(x)
    if not P or not Q:
        return LocalIndex(Fraction(0), Fraction(0))
    mu, Pt = multiplicity(P, x)
    nu, Qt = multiplicity(Q, x)
    if mu <= nu:
        return LocalIndex(Fraction(0), Fraction(0))
    s = sign(Qt(x) * Pt(x))
    plus = HALF * s
    minus = plus if (mu - nu) % 2 == 0 else -plus
    return LocalIndex(plus, minus)


# ---------------------------------------------------------------------------
# chains


@dataclass
class SigmaTauChain:
    """A (sigma, tau)-chain S_0, ..., S_n with its witnesses A_i, B_i, C_i.

    ``A[i-1], B[i-1], C[i-1]`` belong to the relation of index i (1 <= i <= n-1).
    ``interval`` is None when the chain is valid on the whole line.
    """

    polys: list
    sigma: tuple
    tau: tuple
    A: list
    B: list
    C: list
    interval: tuple | None = None

    @property
    def n(self) -> int:
        return len(self.polys) - 1

    @property
    def epsilon(self) -> tuple:
        eps = [1]
        for s, t in zip(self.sigma, self.tau):
            eps.append(eps[-1] * s * t)
        return tuple(eps[: self.n])

    @property
    def good(self) -> bool:
        last = self.polys[-1]
        if not last:
            return False
        if last.degree == 0:
            return True
        if self.interval is None:
            return False
        return count_real_roots(last, *self.interval) == 0


def epsilon_weights(sigma, tau) -> tuple:
    eps = [1]
    for s, t in zip(sigma, tau):
        eps.append(eps[-1] * s * t)
    return tuple(eps)


def _check_chain_inputs(S0: Poly, S1: Poly):
    if not S0 or not S1:
        raise DegreeOrder("chain inputs must be nonzero")
    if S0.degree < 1 or S1.degree >= S0.degree:
        raise DegreeOrder(f"need deg S1 < deg S0 and deg S0 >= 1, got {S1.degree}, {S0.degree}")


def _quot_in_domain(num: Poly, den: Poly, nested: bool) -> Poly:
    if not nested:
        return divrem(num, den)[0]
    quo, _, e = pseudo_divrem(num, den)
    return poly_exact_quo(quo, den.lc ** e) if e else quo


def _chain_witnesses(seq, nested: bool):
    S = seq.chain_polys()
    A, B, C = [], [], []
    for i in range(1, seq.s):
        a_i, c_i = seq.A(i), seq.C(i)
        A.append(a_i)
        C.append(c_i)
        B.append(-_quot_in_domain(S[i - 1].scale(c_i), S[i], nested))
    return S, A, B, C


def build_chain(S0: Poly, S1: Poly, check_coprime: bool = True) -> SigmaTauChain:
    """Good Sturm (sigma, tau)-chain of a coprime pair from its subresultants."""
    _check_chain_inputs(S0, S1)
    if check_coprime and gcd(S0, S1).degree > 0:
        raise NotCoprime("S0 and S1 share a factor")
    seq = subresultants_structured(S0, S1)
    S, A, B, C = _chain_witnesses(seq, nested=False)
    if S[-1].degree != 0:
        raise NotCoprime("last subresultant is not a nonzero constant")
    sigma = tuple(sign(a) for a in A)
    tau = tuple(sign(c) for c in C)
    consts = [Poly.constant(a) for a in A], B, [Poly.constant(c) for c in C]
    return SigmaTauChain(S, sigma, tau, *consts, interval=None)


def var_sigma_tau(chain: SigmaTauChain, a, b) -> Fraction:
    """Var(sigma, tau)_a^b(S_0, ..., S_n)."""
    a, b = rat(a), rat(b)
    S = chain.polys
    total = Fraction(0)
    for i, e in enumerate(chain.epsilon, start=1):
        total += e * var_interval(S[i - 1], S[i], a, b)
    return total


def check_chain(chain: SigmaTauChain, a=None, b=None) -> bool:
    """Verify the defining properties of a good Sturm (sigma, tau)-chain.

    Signs are checked on [a, b] when given, else on the chain's interval;
    constant witnesses are checked once.  Raises AssertionError.
    """
    if a is None and chain.interval is not None:
        a, b = chain.interval
    S = chain.polys
    n = chain.n
    assert len(chain.sigma) == len(chain.tau) == max(n - 1, 0)
    for i in range(1, n):
        A, B, C = chain.A[i - 1], chain.B[i - 1], chain.C[i - 1]
        rel = A * S[i + 1] + B * S[i] + C * S[i - 1]
        assert not rel, f"chain relation fails at i={i}"
        for W, want in ((A, chain.sigma[i - 1]), (C, chain.tau[i - 1])):
            if W.degree == 0:
                assert sign(W.lc) == want, f"witness sign at i={i}"
            else:
                assert a is not None, "non-constant witness needs an interval"
                assert count_real_roots(W, a, b) == 0, f"witness vanishes at i={i}"
                assert sign(W((rat(a) + rat(b)) / 2)) == want, f"witness sign at i={i}"
    last = S[-1]
    assert last, "last member is zero"
    if last.degree > 0:
        assert a is not None and count_real_roots(last, a, b) == 0, "last member has a root"
    for m in range(1, n + 1):
        g = gcd(S[m - 1], S[m])
        if g.degree > 0:
            assert a is not None and count_real_roots(g, a, b) == 0, f"S_{m-1}, S_{m} share a root"
    return True


def weighted_counting_identity(chain: SigmaTauChain, a, b):
    """Both sides of Ind(S1,S0) + eps_n Ind(S_{n-1},S_n) = Var(sigma,tau)."""
    S = chain.polys
    n = chain.n
    lhs = cauchy_index(S[1], S[0], a, b) + chain.epsilon[-1] * cauchy_index(S[n - 1], S[n], a, b)
    return lhs, var_sigma_tau(chain, a, b)


# ---------------------------------------------------------------------------
# bivariate chains


def _content(P: Poly) -> Poly:
    g = Poly()
    for c in P.coeffs:
        g = gcd(g, c)
    return g


@dataclass
class BivariateChain:
    """Subresultant chain of a coprime pair in Q[Y][X] with sign data on [b, b']."""

    polys: list
    sigma: tuple
    tau: tuple
    A: list
    B: list
    C: list
    y_interval: tuple

    def at_y(self, y) -> SigmaTauChain:
        """Specialize Y = y: a good Sturm chain in X on the whole line."""
        y = rat(y)
        lo, hi = self.y_interval
        if not lo <= y <= hi:
            raise ValueError(f"y={y} outside [{lo}, {hi}]")
        S = [specialize(P, "Y", y) for P in self.polys]
        A = [Poly.constant(a(y)) for a in self.A]
        C = [Poly.constant(c(y)) for c in self.C]
        B = [specialize(b, "Y", y) for b in self.B]
        return SigmaTauChain(S, self.sigma, self.tau, A, B, C, interval=None)

    def at_x(self, x) -> SigmaTauChain:
        """Specialize X = x: a good Sturm chain in Y on [b, b']."""
        x = rat(x)
        S = [specialize(P, "X", x) for P in self.polys]
        B = [specialize(b, "X", x) for b in self.B]
        return SigmaTauChain(S, self.sigma, self.tau, list(self.A), B, list(self.C),
                             interval=self.y_interval)


def build_chain_bivariate(S0: Poly, S1: Poly, y_interval) -> BivariateChain:
    """Chain template from the subresultants of S0, S1 in Q[Y][X].

    Every A_i, C_i and the last member S_s (all in Q[Y]) must be free of
    roots on the closed Y-interval.
    """
    lo, hi = rat(y_interval[0]), rat(y_interval[1])
    if lo > hi:
        raise ValueError("empty y-interval")
    _check_chain_inputs(S0, S1)
    S0 = S0 if S0.is_nested() else S0.map_coeffs(Poly.constant)
    S1 = S1 if S1.is_nested() else S1.map_coeffs(Poly.constant)
    seq = subresultants_structured(S0, S1)
    S, A, B, C = _chain_witnesses(seq, nested=True)
    last = S[-1]
    if last.degree != 0:
        raise NotCoprime("S0, S1 have a common factor involving X")
    if gcd(_content(S0), _content(S1)).degree > 0:
        raise NotCoprime("S0, S1 have a common factor in Q[Y]")
    last_y = last.lc
    for poly, what in [(last_y, "S_s")] + [(a, f"A_{i}") for i, a in enumerate(A, 1)] + \
            [(c, f"C_{i}") for i, c in enumerate(C, 1)]:
        if count_real_roots(poly, lo, hi) != 0 or poly(lo) == 0 or poly(hi) == 0:
            raise SignConditionFails(poly, what)
    mid = (lo + hi) / 2
    sigma = tuple(sign(a(mid)) for a in A)
    tau = tuple(sign(c(mid)) for c in C)
    return BivariateChain(S, sigma, tau, A, B, C, (lo, hi))


# ---------------------------------------------------------------------------
# index on an interval


def _reduced_chain(Q: Poly, P: Poly):
    """The chain of (P, Q) after removing gcd(P, Q) and reducing Q mod P,
    or None when the index is identically 0."""
    if not P or not Q:
        return None
    g = gcd(P, Q)
    if g.degree > 0:
        P, Q = divrem(P, g)[0], divrem(Q, g)[0]
    if Q.degree >= P.degree:
        Q = divrem(Q, P)[1]
    if P.degree == 0 or not Q:
        return None
    return build_chain(P, Q, check_coprime=False)


def cauchy_index(Q: Poly, P: Poly, a, b) -> Fraction:
    """Ind_a^b(Q, P) through the subresultant (sigma, tau)-chain."""
    a, b = rat(a), rat(b)
    if a == b:
        return Fraction(0)
    if a > b:
        return -cauchy_index(Q, P, b, a)
    chain = _reduced_chain(Q, P)
    if chain is None:
        return Fraction(0)
    return var_sigma_tau(chain, a, b)


def index_trace(Q: Poly, P: Poly, a, b) -> dict:
    """The data behind :func:`cauchy_index`: chain members, sigma, tau,
    epsilon-weights and the sign of every member at both endpoints."""
    a, b = rat(a), rat(b)
    chain = _reduced_chain(Q, P) if a != b else None
    out = {"index": cauchy_index(Q, P, a, b), "chain": [], "sigma": [], "tau": [], "epsilon": []}
    if chain is None:
        out["signs"] = {}
        return out
    out["chain"] = list(chain.polys)
    out["sigma"] = list(chain.sigma)
    out["tau"] = list(chain.tau)
    out["epsilon"] = list(chain.epsilon)
    out["signs"] = {x: [sign(S(x)) for S in chain.polys] for x in (a, b)}
    return out


def count_real_roots(P: Poly, a, b) -> Fraction:
    """Ind_a^b(P', P): distinct roots in (a, b) plus 1/2 per root at a or b."""
    if not P:
        raise ValueError("count_real_roots of the zero polynomial")
    return cauchy_index(P.derivative(), P, a, b)


# -- Descartes oracle ------------------------------------------------------


def _sign_variations(coeffs) -> int:
    signs = [sign(c) for c in coeffs if c]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def descartes_bound(P: Poly, lo, hi) -> int:
    """Descartes bound on the number of roots of P in the open interval (lo, hi)."""
    T = affine_compose(P, hi - lo, lo)
    # (X+1)^n T(1/(X+1)): its positive roots are the roots of T in (0, 1)
    R = affine_compose(Poly(reversed(T.coeffs)), 1, 1)
    return _sign_variations(R.coeffs)


def isolate_real_roots(P: Poly, lo, hi):
    """Isolate the roots of a squarefree P in the open interval (lo, hi).

    P must not vanish at lo or hi.  Each returned interval (l, r) holds
    exactly one root in its interior, and P(l), P(r) != 0.
    """
    intervals = []
    stack = [(rat(lo), rat(hi))]
    while stack:
        l, r = stack.pop()
        v = descartes_bound(P, l, r)
        if v == 0:
            continue
        if v == 1:
            intervals.append((l, r))
            continue
        m, k = (l + r) / 2, 3
        while P(m) == 0:
            # never split at a root; finitely many candidates can fail
            m, k = l + (r - l) / k, k + 1
        stack.append((m, r))
        stack.append((l, m))
    return sorted(intervals)


def _remove_root(P: Poly, x) -> Poly:
    lin = Poly([-x, 1])
    while P and P.degree > 0 and P(x) == 0:
        P = divrem(P, lin)[0]
    return P


def cauchy_index_oracle(Q: Poly, P: Poly, a, b) -> Fraction:
    """Ind_a^b(Q, P) straight from the definition, with Descartes root isolation."""
    a, b = rat(a), rat(b)
    if not P or not Q or a == b:
        return Fraction(0)
    if a > b:
        return -cauchy_index_oracle(Q, P, b, a)
    g = gcd(P, Q)
    if g.degree > 0:
        P, Q = divrem(P, g)[0], divrem(Q, g)[0]
    total = local_index(Q, P, a).plus - local_index(Q, P, b).minus
    if P.degree == 0:
        return total
    sqf = divrem(P, gcd(P, P.derivative()))[0]
    sqf = _remove_root(_remove_root(sqf, a), b)
    if sqf.degree < 1:
        return total
    for l, r in isolate_real_roots(sqf, a, b):
        # shrink until Q has no root on [l, r] and l, r avoid the roots a, b of P
        while Q(l) == 0 or Q(r) == 0 or P(l) == 0 or P(r) == 0 or descartes_bound(Q, l, r) > 0:
            m = (l + r) / 2
            sm = sign(sqf(m))
            if sm == 0:
                total += local_index(Q, P, m).total
                break
            if sign(sqf(l)) != sm:
                r = m
            else:
                l = m
        else:
            total += HALF * (sign(Q(r) * P(r)) - sign(Q(l) * P(l)))
    return total


# ---------------------------------------------------------------------------
# inversion and product formulas


def _no_common_root(P: Poly, Q: Poly, a, b) -> bool:
    lo, hi = min(a, b), max(a, b)
    g = gcd(P, Q)
    if not g:
        return False
    return g.degree == 0 or count_real_roots(g, lo, hi) == 0


def inversion_check(P: Poly, Q: Poly, a, b):
    """(Ind(Q,P) + Ind(P,Q), Var_a^b(P,Q)); raises CommonRoot if the hypothesis fails."""
    a, b = rat(a), rat(b)
    if not _no_common_root(P, Q, a, b):
        raise CommonRoot("P and Q have a common root in the interval")
    lhs = cauchy_index(Q, P, a, b) + cauchy_index(P, Q, a, b)
    return lhs, var_interval(P, Q, a, b)


def product_formula_check(P: Poly, Q: Poly, R: Poly, S: Poly, a, b):
    """Both sides of the index product formula for (P + iQ)-style pairs.

    lhs = Ind(PR - QS, PS + QR); rhs = Ind(P, Q) + Ind(R, S) plus the two
    endpoint sign corrections of (PS + QR) Q S.
    """
    a, b = rat(a), rat(b)
    if not _no_common_root(P, Q, a, b) or not _no_common_root(R, S, a, b):
        raise CommonRoot("a pair shares a root in the interval")
    num = P * R - Q * S
    den = P * S + Q * R
    lhs = cauchy_index(num, den, a, b)
    w = den * Q * S
    rhs = (cauchy_index(P, Q, a, b) + cauchy_index(R, S, a, b)
           + HALF * sign(w(a)) - HALF * sign(w(b)))
    return lhs, rhs
