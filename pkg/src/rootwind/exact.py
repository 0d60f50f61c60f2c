"""Exact arithmetic: rationals, Gaussian rationals, dense polynomials.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Polynomials are dense and immutable.  A
:class:`Poly` whose coefficients are rationals is an element of Q[X]; a
:class:`Poly` whose coefficients are themselves :class:`Poly` objects is an
element of Q[Y][X] (recursive dense, X-major).  The same class is used at
every level so that the subresultant code can run over Q and over Q[Y]
without change.

The zero polynomial has no coefficients, so it is the same object at every
nesting level.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import comb
from numbers import Rational as _RationalABC


class ZeroDivisor(ZeroDivisionError):
    """Division by the zero polynomial."""


class InexactDivision(ArithmeticError):
    """A division that was required to be exact left a remainder."""


class _NegInf:
    """Degree of the zero polynomial.

    Compares below every integer but refuses arithmetic, so a zero degree
    can never leak into index computations unnoticed.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")


NEG_INF = _NegInf()


def Q(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: nothing in this package is allowed to be inexact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse a decimal integer or ``p/q`` literal."""
    s = text.strip()
    num, slash, den = s.partition("/")
    try:
        n = int(num, 10)
        d = int(den, 10) if slash else 1
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _coerce_coeff(c):
    if isinstance(c, (Poly, Fraction)):
        return c
    return Q(c)


class Poly:
    """Dense polynomial in one variable with ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce_coeff(c) for c in coeffs]
        if any(isinstance(c, Poly) for c in cs):
            cs = [c if isinstance(c, Poly) else Poly.constant(c) for c in cs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already coerced; only strip
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        c = _coerce_coeff(c)
        if not c:
            return cls()
        zero = Poly() if isinstance(c, Poly) else Fraction(0)
        return cls._raw([zero] * k + [c])

    @classmethod
    def constant(cls, c) -> Poly:
        return cls.monomial(0, c)

    # -- queries -------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        raise IndexError(k)

    def coeff(self, k: int, zero=None):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        if zero is not None:
            return zero
        return self._zero_coeff()

    def _zero_coeff(self):
        if self.coeffs and isinstance(self.coeffs[0], Poly):
            return Poly()
        return Fraction(0)

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_nested(self) -> bool:
        return bool(self.coeffs) and isinstance(self.coeffs[0], Poly)

    def total_degree(self):
        """Total degree across all nesting levels."""
        if not self.coeffs:
            return NEG_INF
        best = NEG_INF
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            td = k + (c.total_degree() if isinstance(c, Poly) else 0)
            if best is NEG_INF or td > best:
                best = td
        return best

    def inner_degree(self):
        """Degree in the second variable (deg_Y of an element of Q[Y][X])."""
        degs = [c.degree for c in self.coeffs if c]
        return max(degs) if degs else NEG_INF

    # -- ring structure --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return self
            other = Poly.constant(other) if not self.is_nested() else Poly.constant(Poly.constant(other))
        out = []
        for a, b in zip_longest(self.coeffs, other.coeffs):
            out.append(b if a is None else a if b is None else a + b)
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return self + (-other)
        out = []
        for a, b in zip_longest(self.coeffs, other.coeffs):
            out.append(-b if a is None else a if b is None else a - b)
        return Poly._raw(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly()
            out = [None] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if not x:
                    continue
                for j, y in enumerate(b):
                    if not y:
                        continue
                    t = x * y
                    out[i + j] = t if out[i + j] is None else out[i + j] + t
            zero = self._zero_coeff()
            return Poly._raw([zero if c is None else c for c in out])
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly._raw([c * other for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c):
        """Multiply every coefficient by ``c`` (an element of the coefficient ring)."""
        if not c:
            return Poly()
        return Poly._raw([x * c for x in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            one = Poly.constant(1)
            return one if not self.is_nested() else Poly.constant(one)
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by X**k."""
        if not self.coeffs or k == 0:
            return self
        return Poly._raw([self._zero_coeff()] * k + list(self.coeffs))

    def derivative(self) -> Poly:
        return Poly._raw([c * k for k, c in enumerate(self.coeffs) if k])

    def __call__(self, x):
        """Evaluate at ``x`` (Horner)."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def map_coeffs(self, f) -> Poly:
        return Poly._raw([f(c) for c in self.coeffs])

    # -- division over a field -------------------------------------------

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        return divrem(self, other)[1]

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self * (1 / self.coeffs[-1])

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return to_str(self)


# The two instantiations used throughout.
UniPoly = Poly
BiPoly = Poly

X = Poly([0, 1])


def to_str(p: Poly, var: str = "X", inner: str = "Y") -> str:
    if not p:
        return "0"
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        if isinstance(c, Poly):
            cs = to_str(c, inner, "T")
            body = cs if not mono else (mono if cs == "1" else f"({cs})*{mono}")
            terms.append(body)
        else:
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}" if mono else format_rational(c))
    return " + ".join(terms).replace("+ -", "- ")


def poly_from(values) -> Poly:
    """Build a polynomial from nested ascending coefficient lists.

    ``poly_from([1, 0, 1])`` is 1 + X^2; ``poly_from([[0, 1], [1]])`` is Y + X.
    """
    if isinstance(values, Poly):
        return values
    return Poly([poly_from(v) if isinstance(v, (list, tuple)) else v for v in values])


def divrem(num: Poly, den: Poly):
    """Euclidean division over Q: returns (quotient, remainder)."""
    if not den:
        raise ZeroDivisor("division by the zero polynomial")
    if num.is_nested() or den.is_nested():
        raise TypeError("divrem needs field coefficients; use pseudo_divrem over Q[Y]")
    dn = den.degree
    rem = list(num.coeffs)
    if len(rem) <= dn:
        return Poly(), num
    inv = 1 / den.coeffs[-1]
    quo = [Fraction(0)] * (len(rem) - dn)
    dc = den.coeffs
    for k in range(len(rem) - 1, dn - 1, -1):
        c = rem[k]
        if not c:
            continue
        f = c * inv
        quo[k - dn] = f
        for i in range(dn + 1):
            rem[k - dn + i] -= f * dc[i]
    return Poly._raw(quo), Poly._raw(rem[:dn])


def pseudo_divrem(num: Poly, den: Poly):
    """Pseudo-division lc(den)**e * num = quo*den + rem with e = deg num - deg den + 1.

    Works over any integral domain (only ring operations are used).
    Returns (quo, rem, e); e is 0 when deg num < deg den.
    """
    if not den:
        raise ZeroDivisor("division by the zero polynomial")
    dn = den.degree
    if not num or num.degree < dn:
        return Poly(), num, 0
    e = num.degree - dn + 1
    lc = den.lc
    rem = num
    quo = Poly()
    for _ in range(e):
        quo = quo.scale(lc)
        if rem and rem.degree >= dn:
            t = Poly.monomial(rem.degree - dn, rem.lc)
            rem = rem.scale(lc) - (den * t)
            quo = quo + t
        else:
            rem = rem.scale(lc)
    return quo, rem, e


def exact_quo(a, b):
    """Exact quotient a / b in Q or Q[Y]; raises InexactDivision otherwise."""
    if isinstance(a, Poly) or isinstance(b, Poly):
        if not isinstance(b, Poly):
            return a * (1 / Q(b))
        if not isinstance(a, Poly):
            a = Poly.constant(a)
        q, r = divrem(a, b)
        if r:
            raise InexactDivision(f"{a} is not divisible by {b}")
        return q
    if not b:
        raise ZeroDivisionError("exact_quo by zero")
    return a / b


def poly_exact_quo(p: Poly, d) -> Poly:
    """Divide every coefficient of ``p`` exactly by the domain element ``d``."""
    return Poly._raw([exact_quo(c, d) for c in p.coeffs])


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q; gcd(0, 0) = 0."""
    a, b = p, q
    while b:
        a, b = b, divrem(a, b)[1]
    return a.monic()


def affine_compose(p: Poly, c, e) -> Poly:
    """p(c*X + e)."""
    lin = Poly([Q(e), Q(c)])
    acc = Poly()
    for coef in reversed(p.coeffs):
        acc = acc * lin + Poly.constant(coef)
    return acc


def specialize(p: Poly, var: str, value) -> Poly:
    """Substitute a rational for X (outer) or Y (inner) in an element of Q[Y][X]."""
    v = Q(value)
    if var == "X":
        acc = Poly()
        for c in reversed(p.coeffs):
            acc = acc * v + c
        return acc
    if var == "Y":
        return Poly._raw([c(v) for c in p.coeffs])
    raise ValueError(f"unknown variable {var!r}")


def swap_vars(p: Poly) -> Poly:
    """Reorder an element of Q[Y][X] as an element of Q[X][Y]."""
    cells = {}
    for i, c in enumerate(p.coeffs):
        for j, v in enumerate(c.coeffs):
            if v:
                cells.setdefault(j, {})[i] = v
    if not cells:
        return Poly()
    rows = []
    for j in range(max(cells) + 1):
        row = cells.get(j, {})
        rows.append(Poly([row.get(i, 0) for i in range(max(row) + 1)]) if row else Poly())
    return Poly(rows)


def bipoly_from_dict(terms) -> Poly:
    """Build an element of Q[Y][X] from ``{(i, j): coeff}`` meaning coeff*X^i*Y^j."""
    rows = {}
    for (i, j), c in terms.items():
        if c:
            rows.setdefault(i, {})
            rows[i][j] = rows[i].get(j, 0) + c
    if not rows:
        return Poly()
    out = []
    for i in range(max(rows) + 1):
        row = rows.get(i, {})
        out.append(Poly([row.get(j, 0) for j in range(max(row) + 1)]) if row else Poly())
    return Poly(out)


def bivariate_terms(p: Poly):
    """Inverse of :func:`bipoly_from_dict`."""
    return {
        (i, j): v
        for i, c in enumerate(p.coeffs)
        for j, v in enumerate(c.coeffs)
        if v
    }


def eval2(p: Poly, x, y) -> Fraction:
    return specialize(p, "Y", y)(x)


# ---------------------------------------------------------------------------
# Gaussian rationals and complex polynomials


class Gaussian:
    """A Gaussian rational re + i*im."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Q(re)
        self.im = Q(im)

    def __repr__(self):
        return f"Gaussian({format_rational(self.re)}, {format_rational(self.im)})"

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @staticmethod
    def _lift(x):
        return x if isinstance(x, Gaussian) else Gaussian(x, 0)

    def __add__(self, other):
        o = self._lift(other)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._lift(other)
        n = o.norm()
        if not n:
            raise ZeroDivisionError("Gaussian division by zero")
        t = self * o.conjugate()
        return Gaussian(t.re / n, t.im / n)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        out = Gaussian(1)
        for _ in range(n):
            out = out * self
        return out

    def l1(self) -> Fraction:
        """|re| + |im|, a rational upper bound on the modulus."""
        return abs(self.re) + abs(self.im)


I = Gaussian(0, 1)


def _i_power(k: int):
    # i**k as (re, im)
    return ((1, 0), (0, 1), (-1, 0), (0, -1))[k % 4]


class ComplexPoly:
    """Polynomial in Z with Gaussian rational coefficients (ascending)."""

    __slots__ = ("coeffs", "_real")

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Gaussian) else Gaussian(*c) if isinstance(c, (tuple, list)) else Gaussian(c)
              for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._real = None

    @classmethod
    def from_roots(cls, roots, lead=Gaussian(1)) -> ComplexPoly:
        out = cls([lead])
        for r in roots:
            out = out * cls([-Gaussian._lift(r), Gaussian(1)])
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, ComplexPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ComplexPoly({list(self.coeffs)!r})"

    @property
    def lc(self) -> Gaussian:
        return self.coeffs[-1]

    def __add__(self, other):
        out = []
        for a, b in zip_longest(self.coeffs, other.coeffs):
            out.append(b if a is None else a if b is None else a + b)
        return ComplexPoly(out)

    def __neg__(self):
        return ComplexPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ComplexPoly):
            if not self.coeffs or not other.coeffs:
                return ComplexPoly()
            out = [Gaussian()] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return ComplexPoly(out)
        g = Gaussian._lift(other)
        return ComplexPoly([c * g for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ComplexPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, z) -> Gaussian:
        z = Gaussian._lift(z)
        acc = Gaussian()
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> ComplexPoly:
        return ComplexPoly([c * k for k, c in enumerate(self.coeffs) if k])

    def monic(self) -> ComplexPoly:
        if not self.coeffs:
            return self
        inv = Gaussian(1) / self.lc
        return ComplexPoly([c * inv for c in self.coeffs])

    def divrem(self, other):
        if not other:
            raise ZeroDivisor("division by the zero polynomial")
        rem = list(self.coeffs)
        dn = len(other.coeffs) - 1
        if len(rem) <= dn:
            return ComplexPoly(), self
        inv = Gaussian(1) / other.lc
        quo = [Gaussian()] * (len(rem) - dn)
        for k in range(len(rem) - 1, dn - 1, -1):
            f = rem[k] * inv
            if not f:
                continue
            quo[k - dn] = f
            for i in range(dn + 1):
                rem[k - dn + i] = rem[k - dn + i] - f * other.coeffs[i]
        return ComplexPoly(quo), ComplexPoly(rem[:dn])

    def realify(self):
        """(F_re, F_im) in Q[Y][X] with F(X + iY) = F_re + i F_im."""
        if self._real is None:
            re_terms, im_terms = {}, {}
            for j, c in enumerate(self.coeffs):
                if not c:
                    continue
                for k in range(j + 1):
                    b = comb(j, k)
                    ur, ui = _i_power(k)
                    # c * C(j,k) * i^k * X^(j-k) Y^k
                    r = b * (c.re * ur - c.im * ui)
                    m = b * (c.re * ui + c.im * ur)
                    key = (j - k, k)
                    if r:
                        re_terms[key] = re_terms.get(key, 0) + r
                    if m:
                        im_terms[key] = im_terms.get(key, 0) + m
            self._real = (bipoly_from_dict(re_terms), bipoly_from_dict(im_terms))
        return self._real


def complex_gcd(f: ComplexPoly, g: ComplexPoly) -> ComplexPoly:
    a, b = f, g
    while b:
        a, b = b, a.divrem(b)[1]
    return a.monic()


def squarefree_part(f: ComplexPoly) -> ComplexPoly:
    g = complex_gcd(f, f.derivative())
    return f.divrem(g)[0].monic()


# Pairs (re, im) of elements of Q[Y][X] stand for general F in C[X, Y].


def pair_mul(f, g):
    a, b = f
    c, d = g
    return (a * c - b * d, a * d + b * c)


def pair_times_i(f):
    return (-f[1], f[0])


def pair_scale(f, z: Gaussian):
    a, b = f
    return (a * z.re - b * z.im, a * z.im + b * z.re)


def as_pair(f):
    """Accept a ComplexPoly or an (F_re, F_im) pair; return the pair."""
    if isinstance(f, ComplexPoly):
        return f.realify()
    re, im = f
    return (poly_from(re), poly_from(im))
