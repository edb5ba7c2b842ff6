"""Exact arithmetic over Q and the rational function field Q(t).

Rationals are :class:`fractions.Fraction`.  Polynomials in ``t`` are stored as
tuples of Fractions indexed by degree with no trailing zeros; a :class:`Scalar`
is a reduced quotient of two such tuples with a monic denominator, so equality
of field elements is plain tuple equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from .errors import BothZero, DenominatorVanishes, DivisionByZero, ParseError

Rational = Fraction
Coeffs = Tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_ONE_T: Coeffs = (_ONE,)


# -- raw coefficient-tuple helpers -------------------------------------------

def _trim(c: Sequence[Fraction]) -> Coeffs:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _psub(a: Coeffs, b: Coeffs) -> Coeffs:
    n = max(len(a), len(b))
    out = [_ZERO] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _pmul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pscale(a: Coeffs, c: Fraction) -> Coeffs:
    if not c:
        return ()
    return tuple(c * x for x in a)


def _pdivmod(a: Coeffs, b: Coeffs) -> Tuple[Coeffs, Coeffs]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    quot = [_ZERO] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        c = c / lead
        quot[k - db] = c
        for j in range(db + 1):
            rem[k - db + j] -= c * b[j]
    return _trim(quot), _trim(rem[:db])


def _pmonic(a: Coeffs) -> Coeffs:
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(x / lead for x in a)


def _pgcd(a: Coeffs, b: Coeffs) -> Coeffs:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a) if a else ()


def _peval(a: Coeffs, r: Fraction) -> Fraction:
    acc = _ZERO
    for x in reversed(a):
        acc = acc * r + x
    return acc


def _coerce_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


# -- public polynomial type ----------------------------------------------------

class Polynomial:
    """Immutable univariate polynomial in ``t`` with rational coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        self.coefficients: Coeffs = _trim([_coerce_fraction(c) for c in coefficients])

    @classmethod
    def _raw(cls, coeffs: Coeffs) -> "Polynomial":
        p = cls.__new__(cls)
        p.coefficients = coeffs
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coefficients))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial._raw(_padd(self.coefficients, other.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial._raw(_psub(self.coefficients, other.coefficients))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial._raw(_pmul(self.coefficients, other.coefficients))

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-x for x in self.coefficients))

    def __divmod__(self, other: "Polynomial"):
        q, r = _pdivmod(self.coefficients, other.coefficients)
        return Polynomial._raw(q), Polynomial._raw(r)

    def __call__(self, r) -> Fraction:
        return _peval(self.coefficients, _coerce_fraction(r))

    def monic(self) -> "Polynomial":
        if not self.coefficients:
            return self
        return Polynomial._raw(_pmonic(self.coefficients))

    def __repr__(self):
        return f"Polynomial({_format_poly(self.coefficients) or '0'})"


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd of two polynomials over Q by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials is undefined")
    return Polynomial._raw(_pgcd(p.coefficients, q.coefficients))


# -- field elements ------------------------------------------------------------

class Scalar:
    """Element of Q(t), kept as a reduced fraction with monic denominator.

    Constants (numerator and denominator of degree <= 0) are the
    ``ConstantCase``; everything else is the ``FunctionCase``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=_ONE_T):
        if isinstance(num, Polynomial):
            num = num.coefficients
        if isinstance(den, Polynomial):
            den = den.coefficients
        num = _trim([_coerce_fraction(c) for c in num])
        den = _trim([_coerce_fraction(c) for c in den])
        if not den:
            raise DivisionByZero("zero denominator")
        self._set(*_normalize(num, den))

    def _set(self, num: Coeffs, den: Coeffs):
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Coeffs, den: Coeffs = _ONE_T) -> "Scalar":
        s = cls.__new__(cls)
        s.num = num
        s.den = den
        s._hash = None
        return s

    @classmethod
    def const(cls, value) -> "Scalar":
        v = _coerce_fraction(value)
        return cls._raw((v,) if v else ())

    # -- inspection
    @property
    def is_constant(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    @property
    def value(self) -> Fraction:
        """Rational value of a constant; raises ValueError otherwise."""
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return self.num[0] if self.num else _ZERO

    @property
    def numerator(self) -> Polynomial:
        return Polynomial._raw(self.num)

    @property
    def denominator(self) -> Polynomial:
        return Polynomial._raw(self.den)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic
    def __add__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        a_num, a_den, b_num, b_den = self.num, self.den, other.num, other.den
        if not b_num:
            return self
        if not a_num:
            return other
        if len(a_den) == 1 and len(b_den) == 1:
            return Scalar._raw(_padd(a_num, b_num))
        return Scalar._raw(*_normalize(_padd(_pmul(a_num, b_den), _pmul(b_num, a_den)),
                                       _pmul(a_den, b_den)))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(tuple(-x for x in self.num), self.den)

    def __sub__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        a_num, a_den, b_num, b_den = self.num, self.den, other.num, other.den
        if not a_num or not b_num:
            return ZERO
        if len(a_den) == 1 and len(b_den) == 1:
            return Scalar._raw(_pmul(a_num, b_num))
        if len(b_num) == 1 and len(b_den) == 1:
            return Scalar._raw(_pscale(a_num, b_num[0]), a_den)
        if len(a_num) == 1 and len(a_den) == 1:
            return Scalar._raw(_pscale(b_num, a_num[0]), b_den)
        return Scalar._raw(*_normalize(_pmul(a_num, b_num), _pmul(a_den, b_den)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        lead = den[-1]
        if lead != 1:
            num = tuple(x / lead for x in num)
            den = tuple(x / lead for x in den)
        return Scalar._raw(num, den)

    def __truediv__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return _as_scalar(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.value == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den)) if not self.is_constant else hash(self.value)
        return self._hash

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def _normalize(num: Coeffs, den: Coeffs) -> Tuple[Coeffs, Coeffs]:
    if not num:
        return (), _ONE_T
    if len(den) > 1 and len(num) > 1:
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = tuple(x / lead for x in num)
        den = tuple(x / lead for x in den)
    return num, den


def _as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.const(x)
    return NotImplemented


ZERO = Scalar._raw(())
ONE = Scalar._raw(_ONE_T)
T = Scalar._raw((_ZERO, _ONE))


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_inv(a: Scalar) -> Scalar:
    return a.inverse()


def specialize(a: Scalar, r) -> Fraction:
    """Evaluate ``a`` at ``t = r``."""
    r = _coerce_fraction(r)
    if a.is_constant:
        return a.value
    d = _peval(a.den, r)
    if not d:
        raise DenominatorVanishes(r)
    return _peval(a.num, r) / d


def specialize_scalar(a: Scalar, r) -> Scalar:
    return Scalar.const(specialize(a, r))


# -- text form -----------------------------------------------------------------

def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _format_poly(c: Coeffs) -> str:
    parts = []
    for k in range(len(c) - 1, -1, -1):
        x = c[k]
        if not x:
            continue
        sign = "-" if x < 0 else "+"
        mag = -x if x < 0 else x
        if k == 0:
            body = _format_rational(mag)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if mag == 1 else f"{_format_rational(mag)}*{mono}"
        parts.append((sign, body))
    if not parts:
        return ""
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_scalar(a: Scalar) -> str:
    """Render in the same grammar that :func:`parse_scalar` reads."""
    if not a.num:
        return "0"
    if a.is_constant:
        return _format_rational(a.num[0])
    num = _format_poly(a.num)
    if len(a.den) == 1:
        return num
    if sum(1 for x in a.num if x) > 1:
        num = f"({num})"
    return f"{num}/({_format_poly(a.den)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _fail(self, msg: str):
        raise ParseError(msg, self.pos)

    def parse(self) -> Scalar:
        if not self._peek():
            self._fail("empty scalar")
        value = self.expr()
        if self._peek():
            self._fail(f"unexpected character {self._peek()!r}")
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while self._peek() in ("+", "-") and self._peek():
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.unary()
        while self._peek() in ("*", "/") and self._peek():
            op = self.text[self.pos]
            at = self.pos
            self.pos += 1
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", at)
                value = value / rhs
        return value

    def unary(self) -> Scalar:
        c = self._peek()
        if c == "-":
            self.pos += 1
            return -self.unary()
        if c == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self) -> Scalar:
        base = self.atom()
        if self._peek() == "^":
            self.pos += 1
            self._skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self._fail("expected natural-number exponent")
            base = base ** int(self.text[start:self.pos])
        return base

    def atom(self) -> Scalar:
        c = self._peek()
        if c == "(":
            self.pos += 1
            value = self.expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            return value
        if c == "t":
            self.pos += 1
            return T
        if c.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return Scalar.const(int(self.text[start:self.pos]))
        self._fail(f"unexpected {c!r}" if c else "unexpected end of input")


def parse_scalar(text: str) -> Scalar:
    """Parse ``1/2``, ``t``, ``(t^2-1)/(t+1)``, ``-3`` and friends."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    return _Parser(text).parse()


def parse_rational(text: str) -> Fraction:
    """Parse a scalar that must not depend on ``t``."""
    s = parse_scalar(text)
    if not s.is_constant:
        raise ParseError(f"expected a rational number, got {text!r}")
    return s.value


def to_scalar(x: Union[Scalar, int, Fraction, str]) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Scalar.const(x)
