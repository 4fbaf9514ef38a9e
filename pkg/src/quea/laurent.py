"""Exact arithmetic kernel: Gaussian rationals, Laurent polynomials in s,
and the rational function field Q(i)(s).

Everything here is immutable by convention; all operations return fresh
objects.  Scalars are kept in canonical form (gcd-reduced, denominator a
monic honest polynomial with nonzero constant term) so that equality and
hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction


class QI:
    """A Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        other = _qi(other)
        return QI(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _qi(other)
        return QI(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _qi(other).__sub__(self)

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __mul__(self, other):
        other = _qi(other)
        if not self.im and not other.im:
            return QI(self.re * other.re)
        return QI(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _qi(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QI(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _qi(other).__truediv__(self)

    def conjugate(self):
        return QI(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, QI):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def to_complex(self):
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        return "QI(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%si" % ("" if self.im == 1 else "-" if self.im == -1 else self.im)
        sign = "+" if self.im > 0 else "-"
        imag = abs(self.im)
        return "%s%s%si" % (self.re, sign, "" if imag == 1 else imag)


def _qi(x):
    if isinstance(x, QI):
        return x
    if isinstance(x, (int, Fraction)):
        return QI(x)
    raise TypeError("cannot coerce %r to QI" % (x,))


QI_ZERO = QI(0)
QI_ONE = QI(1)
QI_I = QI(0, 1)


class Laurent:
    """Sparse Laurent polynomial in s with QI coefficients: dict exponent -> coeff."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        # Callers must not mutate coeffs afterwards; zero coefficients are dropped.
        if coeffs is None:
            self.c = {}
        else:
            self.c = {e: v for e, v in coeffs.items() if v}

    @staticmethod
    def const(x):
        x = _qi(x)
        return Laurent({0: x}) if x else Laurent()

    @staticmethod
    def monomial(exp, coeff=QI_ONE):
        return Laurent({int(exp): _qi(coeff)})

    def is_zero(self):
        return not self.c

    def is_monomial(self):
        return len(self.c) == 1

    def val(self):
        return min(self.c) if self.c else 0

    def deg(self):
        return max(self.c) if self.c else 0

    def __add__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e)
            if w is None:
                out[e] = v
            else:
                w = w + v
                if w:
                    out[e] = w
                else:
                    del out[e]
        r = Laurent.__new__(Laurent)
        r.c = out
        return r

    def __neg__(self):
        r = Laurent.__new__(Laurent)
        r.c = {e: -v for e, v in self.c.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.c or not other.c:
            return Laurent()
        a, b = self.c, other.c
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                w = out.get(e)
                if w is None:
                    out[e] = v1 * v2
                else:
                    w = w + v1 * v2
                    if w:
                        out[e] = w
                    else:
                        del out[e]
        r = Laurent.__new__(Laurent)
        r.c = out
        return r

    def scale(self, coeff):
        coeff = _qi(coeff)
        if not coeff:
            return Laurent()
        r = Laurent.__new__(Laurent)
        r.c = {e: v * coeff for e, v in self.c.items()}
        return r

    def shift(self, k):
        r = Laurent.__new__(Laurent)
        r.c = {e + k: v for e, v in self.c.items()}
        return r

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = Laurent.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.const(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def leading(self):
        e = self.deg()
        return e, self.c[e]

    def evaluate(self, s):
        return sum((v.to_complex() * s ** e for e, v in self.c.items()), 0j)

    def subs_inverse(self):
        """s -> 1/s."""
        r = Laurent.__new__(Laurent)
        r.c = {-e: v for e, v in self.c.items()}
        return r

    def __repr__(self):
        return "Laurent(%r)" % (self.c,)

    def __str__(self):
        return format_laurent(self)


L_ZERO = Laurent()
L_ONE = Laurent.const(1)


def _poly_mod(a: Laurent, b: Laurent) -> Laurent:
    """Remainder of a by b; both must be honest polynomials (val >= 0)."""
    db, (eb, cb) = b.deg(), b.leading()
    r = a
    while not r.is_zero() and r.deg() >= db:
        e, c = r.leading()
        r = r - b.shift(e - eb).scale(c / cb)
    return r


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _primitive(p: Laurent) -> Laurent:
    """Scale to coprime Gaussian-integer coefficients (content removed)."""
    denom = 1
    for v in p.c.values():
        denom = denom * v.re.denominator // _int_gcd(denom, v.re.denominator)
        denom = denom * v.im.denominator // _int_gcd(denom, v.im.denominator)
    num = 0
    for v in p.c.values():
        num = _int_gcd(num, abs(v.re.numerator * (denom // v.re.denominator)))
        num = _int_gcd(num, abs(v.im.numerator * (denom // v.im.denominator)))
    if num == 0:
        return p
    return p.scale(Fraction(denom, num))


def _pseudo_mod_primitive(a: Laurent, b: Laurent) -> Laurent:
    """Primitive pseudo-remainder of integer-coefficient polynomials.

    Keeps coefficient growth under control (primitive PRS), which naive
    monic Euclid over Q(i) does not.
    """
    db, (_, cb) = b.deg(), b.leading()
    r = a
    while not r.is_zero() and r.deg() >= db:
        e, c = r.leading()
        r = r.scale(cb) - b.shift(e - db).scale(c)
        if len(r.c) > 2 * (len(a.c) + len(b.c)):
            r = _primitive(r)
    return _primitive(r)


def laurent_gcd(a: Laurent, b: Laurent) -> Laurent:
    """Monic gcd of the polynomial parts (s-power factors stripped)."""
    if a.is_zero():
        return _strip_monic(b)
    if b.is_zero():
        return _strip_monic(a)
    if a.is_monomial() or b.is_monomial():
        return L_ONE
    a = _primitive(a.shift(-a.val()))
    b = _primitive(b.shift(-b.val()))
    while not b.is_zero():
        a, b = b, _pseudo_mod_primitive(a, b)
        if not b.is_zero():
            b = b.shift(-b.val())
        if b.is_monomial():
            return L_ONE
    return _strip_monic(a)


def _strip_monic(p: Laurent) -> Laurent:
    if p.is_zero():
        return p
    p = p.shift(-p.val())
    _, lead = p.leading()
    return p.scale(QI_ONE / lead)


def poly_divmod(a: Laurent, b: Laurent):
    """Exact-friendly division of honest polynomials: returns (q, r) with a = q*b + r."""
    db, (eb, cb) = b.deg(), b.leading()
    q = Laurent()
    r = a
    while not r.is_zero() and r.deg() >= db:
        e, c = r.leading()
        t = Laurent.monomial(e - eb, c / cb)
        q = q + t
        r = r - (b * t)
    return q, r


class ExactScalar:
    """Element of Q(i)(s): a reduced fraction of Laurent polynomials.

    Canonical form: denominator is a polynomial with nonzero constant term
    and leading coefficient 1; numerator and denominator are coprime.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction, QI)):
            num = Laurent.const(num)
        if den is None:
            den = L_ONE
        elif isinstance(den, (int, Fraction, QI)):
            den = Laurent.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _raw(num, den):
        r = ExactScalar.__new__(ExactScalar)
        r.num = num
        r.den = den
        return r

    @staticmethod
    def monomial(exp, coeff=QI_ONE):
        return ExactScalar._raw(Laurent.monomial(exp, coeff), L_ONE)

    def is_zero(self):
        return self.num.is_zero()

    def is_unit(self):
        return not self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return ExactScalar(self.num + other.num, self.den)
        return ExactScalar(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return ExactScalar._raw(-self.num, self.den)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return ExactScalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if n == 0:
            return ES_ONE
        if n < 0:
            return (ES_ONE / self) ** (-n)
        result = ES_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self):
        return ES_ONE / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, s):
        return self.num.evaluate(s) / self.den.evaluate(s)

    def bar(self):
        """The bar involution s -> 1/s (with complex conjugation of coefficients)."""
        num = Laurent({-e: v.conjugate() for e, v in self.num.c.items()})
        den = Laurent({-e: v.conjugate() for e, v in self.den.c.items()})
        return ExactScalar(num, den)

    def __repr__(self):
        return "ExactScalar(%s)" % (self,)

    def __str__(self):
        if self.den == L_ONE:
            return format_laurent(self.num)
        return "(%s)/(%s)" % (format_laurent(self.num), format_laurent(self.den))


def _coerce(x):
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction, QI)):
        return ExactScalar(x)
    return NotImplemented


def _reduce(num: Laurent, den: Laurent):
    if num.is_zero():
        return L_ZERO, L_ONE
    # shift all s-powers of the denominator into the numerator
    v = den.val()
    if v:
        num = num.shift(-v)
        den = den.shift(-v)
    if den.deg() > 0:
        g = laurent_gcd(num, den)
        if g.deg() > 0:
            nv = num.val()
            num, r = poly_divmod(num.shift(-nv), g)
            assert r.is_zero()
            num = num.shift(nv)
            den, r = poly_divmod(den, g)
            assert r.is_zero()
    # canonical form: denominator is a primitive Gaussian-integer polynomial
    # whose leading coefficient has re > 0, im >= 0 (unique unit choice);
    # integer coefficients keep the arithmetic fraction-free on hot paths.
    scale = _primitive_scale(den)
    _, lead = den.leading()
    lead = lead * scale
    for unit in (QI_ONE, QI(0, 1), QI(-1), QI(0, -1)):
        u = lead * unit
        if u.re > 0 and u.im >= 0:
            scale = scale * unit
            break
    if scale != QI_ONE:
        num = num.scale(scale)
        den = den.scale(scale)
    return num, den


def _primitive_scale(p: Laurent) -> QI:
    """Rational c with c*p having coprime Gaussian-integer coefficients."""
    denom = 1
    for v in p.c.values():
        denom = denom * v.re.denominator // _int_gcd(denom, v.re.denominator)
        denom = denom * v.im.denominator // _int_gcd(denom, v.im.denominator)
    num = 0
    for v in p.c.values():
        num = _int_gcd(num, abs(v.re.numerator * (denom // v.re.denominator)))
        num = _int_gcd(num, abs(v.im.numerator * (denom // v.im.denominator)))
    if num == 0:
        return QI_ONE
    return QI(Fraction(denom, num))


ES_ZERO = ExactScalar(0)
ES_ONE = ExactScalar(1)
ES_I = ExactScalar(QI_I)


def format_laurent(p: Laurent) -> str:
    """Canonical human-readable string, terms by ascending exponent."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.c):
        cs = _coeff_str(p.c[e])
        if e == 0:
            term = {"": "1", "-": "-1"}.get(cs, cs)
        else:
            base = "s" if e == 1 else "s^%d" % e
            if cs == "":
                term = base
            elif cs == "-":
                term = "-" + base
            else:
                term = "%s %s" % (cs, base)
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def _coeff_str(v: QI) -> str:
    # "" and "-" signal a suppressed unit coefficient
    if v == QI_ONE:
        return ""
    if v == -QI_ONE:
        return "-"
    if v.im == 0:
        return str(v.re)
    if v.re == 0:
        if v.im == 1:
            return "i"
        if v.im == -1:
            return "-i"
        return "%si" % (v.im,)
    return "(%s)" % (v,)
