"""Exact rational arithmetic for probability generating functions.

Sparse polynomials in one or two variables over Fraction, and rational
functions built from them. Everything here is exact; floats only appear
when the caller asks for them. Power series extraction works directly on
the num/den recurrence, so no truncated division or symbolic algebra
package is involved.

Conventions: the first variable is called x and marks walk length, the
second is y and marks width. A univariate polynomial is a dict mapping
exponent -> coefficient; a bivariate one maps (i, j) -> coefficient.
Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """Evaluation point is a pole of the (cancelled) rational function."""


class NotExpandableError(ValueError):
    """No power series at the origin: denominator vanishes there."""


class NotADistributionError(ValueError):
    """Generating function does not sum to 1 at the all-ones point."""


def _q(v: Scalar) -> Fraction:
    # floats are rejected on purpose: 0.1 is not 1/10
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def _fmt_coeff(c: Fraction, is_lead: bool) -> str:
    sign = "-" if c < 0 else ("" if is_lead else "+")
    mag = -c if c < 0 else c
    return sign, str(mag)


class Poly1:
    """Sparse univariate polynomial over Fraction."""

    __slots__ = ("coef",)

    def __init__(self, coef: Mapping[int, Scalar] | None = None):
        d: dict[int, Fraction] = {}
        if coef:
            for k, v in coef.items():
                if not isinstance(k, int) or k < 0:
                    raise ValueError(f"bad exponent {k!r}")
                q = _q(v)
                if q:
                    d[k] = q
        self.coef = d

    @classmethod
    def const(cls, c: Scalar) -> "Poly1":
        return cls({0: _q(c)})

    @classmethod
    def x(cls, k: int = 1) -> "Poly1":
        return cls({k: Fraction(1)})

    @classmethod
    def from_coeffs(cls, seq: Iterable[Scalar]) -> "Poly1":
        return cls({i: _q(c) for i, c in enumerate(seq)})

    @property
    def degree(self) -> int:
        return max(self.coef) if self.coef else -1

    def is_zero(self) -> bool:
        return not self.coef

    def coefficient(self, k: int) -> Fraction:
        return self.coef.get(k, Fraction(0))

    def coeffs_upto(self, n: int) -> list[Fraction]:
        return [self.coef.get(k, Fraction(0)) for k in range(n + 1)]

    def leading(self) -> Fraction:
        if not self.coef:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coef[self.degree]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly1):
            return self.coef == other.coef
        if isinstance(other, (int, Fraction)):
            return self == Poly1.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coef.items()))

    def __neg__(self) -> "Poly1":
        return Poly1({k: -v for k, v in self.coef.items()})

    def __add__(self, other) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            other = Poly1.const(other)
        if not isinstance(other, Poly1):
            return NotImplemented
        d = dict(self.coef)
        for k, v in other.coef.items():
            s = d.get(k, Fraction(0)) + v
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        out = Poly1.__new__(Poly1)
        out.coef = d
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "Poly1":
        return self + (-other if isinstance(other, Poly1) else Poly1.const(-_q(other)))

    def __rsub__(self, other) -> "Poly1":
        return Poly1.const(other) + (-self)

    def __mul__(self, other) -> "Poly1":
        if isinstance(other, (int, Fraction)):
            q = _q(other)
            return Poly1({k: v * q for k, v in self.coef.items()})
        if not isinstance(other, Poly1):
            return NotImplemented
        d: dict[int, Fraction] = {}
        for k1, v1 in self.coef.items():
            for k2, v2 in other.coef.items():
                k = k1 + k2
                s = d.get(k, Fraction(0)) + v1 * v2
                if s:
                    d[k] = s
                else:
                    d.pop(k, None)
        out = Poly1.__new__(Poly1)
        out.coef = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly1":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly1.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, v: Scalar) -> Fraction:
        v = _q(v)
        return sum((c * v**k for k, c in self.coef.items()), Fraction(0))

    def derivative(self) -> "Poly1":
        return Poly1({k - 1: k * v for k, v in self.coef.items() if k})

    def monic(self) -> "Poly1":
        if not self.coef:
            return self
        lead = self.leading()
        return Poly1({k: v / lead for k, v in self.coef.items()})

    def __divmod__(self, other: "Poly1") -> tuple["Poly1", "Poly1"]:
        if not isinstance(other, Poly1):
            other = Poly1.const(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, Fraction] = {}
        r = self
        dlead = other.leading()
        ddeg = other.degree
        while not r.is_zero() and r.degree >= ddeg:
            k = r.degree - ddeg
            c = r.leading() / dlead
            q[k] = c
            r = r - Poly1({k: c}) * other
        return Poly1(q), r

    def __floordiv__(self, other) -> "Poly1":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly1":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly1") -> "Poly1":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def gcd(self, other: "Poly1") -> "Poly1":
        """Monic gcd by Euclid's algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
            if not b.is_zero():
                b = b.monic()  # keeps Fraction numerators from ballooning
        return a.monic() if not a.is_zero() else a

    def __str__(self) -> str:
        return poly_str(self, "x")

    def __repr__(self) -> str:
        return f"Poly1({dict(sorted(self.coef.items()))!r})"


class Poly2:
    """Sparse bivariate polynomial over Fraction; keys are (i, j)."""

    __slots__ = ("coef",)

    def __init__(self, coef: Mapping[tuple[int, int], Scalar] | None = None):
        d: dict[tuple[int, int], Fraction] = {}
        if coef:
            for k, v in coef.items():
                i, j = k
                if i < 0 or j < 0:
                    raise ValueError(f"bad exponent pair {k!r}")
                q = _q(v)
                if q:
                    d[(i, j)] = q
        self.coef = d

    @classmethod
    def const(cls, c: Scalar) -> "Poly2":
        return cls({(0, 0): _q(c)})

    @classmethod
    def x(cls, k: int = 1) -> "Poly2":
        return cls({(k, 0): Fraction(1)})

    @classmethod
    def y(cls, k: int = 1) -> "Poly2":
        return cls({(0, k): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coef

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.coef.get((i, j), Fraction(0))

    @property
    def degrees(self) -> tuple[int, int]:
        if not self.coef:
            return (-1, -1)
        return (max(i for i, _ in self.coef), max(j for _, j in self.coef))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly2):
            return self.coef == other.coef
        if isinstance(other, (int, Fraction)):
            return self == Poly2.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coef.items()))

    def __neg__(self) -> "Poly2":
        return Poly2({k: -v for k, v in self.coef.items()})

    def __add__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        d = dict(self.coef)
        for k, v in other.coef.items():
            s = d.get(k, Fraction(0)) + v
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        out = Poly2.__new__(Poly2)
        out.coef = d
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly2":
        return Poly2.const(other) + (-self)

    def __mul__(self, other) -> "Poly2":
        if isinstance(other, (int, Fraction)):
            q = _q(other)
            return Poly2({k: v * q for k, v in self.coef.items()})
        if not isinstance(other, Poly2):
            return NotImplemented
        d: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), v1 in self.coef.items():
            for (i2, j2), v2 in other.coef.items():
                k = (i1 + i2, j1 + j2)
                s = d.get(k, Fraction(0)) + v1 * v2
                if s:
                    d[k] = s
                else:
                    d.pop(k, None)
        out = Poly2.__new__(Poly2)
        out.coef = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly2":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly2.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, point: tuple[Scalar, Scalar]) -> Fraction:
        vx, vy = _q(point[0]), _q(point[1])
        return sum(
            (c * vx**i * vy**j for (i, j), c in self.coef.items()), Fraction(0)
        )

    def subs_x(self, v: Scalar) -> Poly1:
        """Substitute x = v, leaving a polynomial in y."""
        v = _q(v)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.coef.items():
            s = out.get(j, Fraction(0)) + c * v**i
            if s:
                out[j] = s
            else:
                out.pop(j, None)
        return Poly1(out)

    def subs_y(self, v: Scalar) -> Poly1:
        """Substitute y = v, leaving a polynomial in x."""
        v = _q(v)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.coef.items():
            s = out.get(i, Fraction(0)) + c * v**j
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return Poly1(out)

    def __str__(self) -> str:
        return poly2_str(self)

    def __repr__(self) -> str:
        return f"Poly2({dict(sorted(self.coef.items()))!r})"


def poly_str(p: Poly1, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in sorted(p.coef, reverse=True):
        c = p.coef[k]
        sign, mag = _fmt_coeff(c, is_lead=not parts)
        if k == 0:
            term = mag
        else:
            xk = var if k == 1 else f"{var}^{k}"
            term = xk if mag == "1" else f"{mag}*{xk}"
        parts.append(f"{sign}{term}" if not parts else f"{sign} {term}")
    return " ".join(parts)


def poly2_str(p: Poly2) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, j in sorted(p.coef, key=lambda k: (-(k[0] + k[1]), -k[0])):
        c = p.coef[(i, j)]
        sign, mag = _fmt_coeff(c, is_lead=not parts)
        factors = []
        if mag != "1" or (i == 0 and j == 0):
            factors.append(mag)
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if j:
            factors.append("y" if j == 1 else f"y^{j}")
        term = "*".join(factors)
        parts.append(f"{sign}{term}" if not parts else f"{sign} {term}")
    return " ".join(parts)


class RationalFunction:
    """Quotient of two Poly1 or two Poly2. Not reduced automatically.

    Arithmetic keeps numerator and denominator as given; call cancelled()
    on a univariate function to divide out the gcd. Equality testing uses
    cross multiplication so it never needs a gcd.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = Poly1.const(num)
        if den is None:
            den = Poly1.const(1) if isinstance(num, Poly1) else Poly2.const(1)
        if isinstance(den, (int, Fraction)):
            den = Poly1.const(den) if isinstance(num, Poly1) else Poly2.const(den)
        if type(num) is not type(den):
            raise TypeError("numerator and denominator must have the same arity")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def bivariate(self) -> bool:
        return isinstance(self.num, Poly2)

    def _wrap(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Poly1, Poly2)):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            one = Poly2.const(1) if self.bivariate else Poly1.const(1)
            num = Poly2.const(other) if self.bivariate else Poly1.const(other)
            return RationalFunction(num, one)
        return NotImplemented

    def __add__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return o / self

    def equals(self, other) -> bool:
        """Mathematical equality via cross multiplication."""
        o = self._wrap(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare with {type(other).__name__}")
        return self.num * o.den == o.num * self.den

    def cancelled(self) -> "RationalFunction":
        """Divide out the univariate gcd; denominator is made monic."""
        if self.bivariate:
            raise ValueError("gcd cancellation is only implemented for one variable")
        if self.num.is_zero():
            return RationalFunction(Poly1(), Poly1.const(1))
        g = self.num.gcd(self.den)
        num = self.num.exact_div(g)
        den = self.den.exact_div(g)
        lead = den.leading()
        return RationalFunction(num * (1 / lead), den.monic())

    def specialize(self, x: Scalar | None = None, y: Scalar | None = None):
        """Substitute one variable of a bivariate function, keeping the other."""
        if not self.bivariate:
            raise ValueError("specialize applies to bivariate functions")
        if (x is None) == (y is None):
            raise ValueError("substitute exactly one of x, y")
        if x is not None:
            num, den = self.num.subs_x(x), self.den.subs_x(x)
        else:
            num, den = self.num.subs_y(y), self.den.subs_y(y)
        if den.is_zero():
            raise PoleError("substitution makes the denominator vanish identically")
        return RationalFunction(num, den)

    def evaluate(self, point) -> Fraction:
        if self.bivariate:
            dv = self.den(point)
            if dv == 0:
                # no bivariate gcd here: a zero denominator is reported as a
                # pole even if the numerator vanishes too
                raise PoleError(f"denominator vanishes at {point}")
            return self.num(point) / dv
        f = self.cancelled()
        dv = f.den(point)
        if dv == 0:
            raise PoleError(f"pole at {point}")
        return f.num(point) / dv

    def derivative(self) -> "RationalFunction":
        if self.bivariate:
            raise ValueError("derivative is only implemented for one variable")
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def series(self, n_max: int) -> list[Fraction]:
        """Taylor coefficients [a_0, ..., a_n_max] at the origin.

        Uses the linear recurrence induced by the denominator:
        sum_k d_k a_{n-k} = num_n, so a_n is solved from d_0 != 0.
        """
        if self.bivariate:
            raise ValueError("series applies to univariate functions")
        f = self
        if f.den.coefficient(0) == 0:
            f = f.cancelled()
            if f.den.coefficient(0) == 0:
                raise NotExpandableError("denominator vanishes at the origin")
        d0 = f.den.coefficient(0)
        dterms = [(k, v) for k, v in f.den.coef.items() if k > 0]
        out: list[Fraction] = []
        for n in range(n_max + 1):
            acc = f.num.coefficient(n)
            for k, v in dterms:
                if k <= n:
                    acc -= v * out[n - k]
            out.append(acc / d0)
        return out

    def series2(self, i_max: int, j_max: int) -> dict[tuple[int, int], Fraction]:
        """Bivariate Taylor table {(i, j): a_ij} for i <= i_max, j <= j_max.

        Same denominator recurrence as series(), run over the grid. The
        denominator must not vanish at the origin; bivariate cancellation
        is not attempted.
        """
        if not self.bivariate:
            raise ValueError("series2 applies to bivariate functions")
        d00 = self.den.coefficient(0, 0)
        if d00 == 0:
            raise NotExpandableError(
                "denominator vanishes at the origin (and bivariate "
                "cancellation is not implemented)"
            )
        dterms = [(k, v) for k, v in self.den.coef.items() if k != (0, 0)]
        a: dict[tuple[int, int], Fraction] = {}
        for i in range(i_max + 1):
            for j in range(j_max + 1):
                acc = self.num.coefficient(i, j)
                for (k, l), v in dterms:
                    if k <= i and l <= j:
                        acc -= v * a[(i - k, j - l)]
                a[(i, j)] = acc / d00
        return a

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


def series_coefficients(f: RationalFunction, n_max: int) -> list[Fraction]:
    """Coefficients of x^0 .. x^n_max of a univariate rational function."""
    return f.series(n_max)


def bivariate_coefficient(f: RationalFunction, i: int, j: int) -> Fraction:
    """Coefficient of x^i y^j. For many coefficients use f.series2 directly."""
    return f.series2(i, j)[(i, j)]


def specialize(f: RationalFunction, x=None, y=None) -> RationalFunction:
    return f.specialize(x=x, y=y)


def evaluate(f: RationalFunction, point) -> Fraction:
    return f.evaluate(point)


def mean_variance(f: RationalFunction) -> tuple[Fraction, Fraction]:
    """Exact mean and variance of the distribution with PGF f.

    Requires f(1) == 1 exactly. The variance is f''(1) + m - m^2 with
    m = f'(1). Cancellation is only performed when the raw denominator
    vanishes at 1 (a removable factor); otherwise the derivatives are
    evaluated directly, which is much cheaper than a gcd.
    """
    if f.bivariate:
        raise ValueError("mean_variance applies to univariate functions")
    g = f
    if g.den(1) == 0:
        g = g.cancelled()
        if g.den(1) == 0:
            raise PoleError("pole at 1")
    total = g.num(1) / g.den(1)
    if total != 1:
        raise NotADistributionError(f"f(1) = {total}, expected 1")
    d1 = g.derivative()
    mean = d1.num(1) / d1.den(1)
    d2 = d1.derivative()
    second = d2.num(1) / d2.den(1)
    return mean, second + mean - mean * mean
