"""q-calculus over the exact field Q(i)(s) with q = s^L, and a floating
complex backend at q = e^h.

Exponents of q are tracked as pairs (real, imag) with the imaginary part
in units of hbar^{-1} = 2*pi/h, so that q^{i*hbar^{-1} b} = e^{2*pi*i*b}.
The exact backend accepts 4*b in Z (phases 1, i, -1, -i) and L*real in Z;
anything else raises NonRepresentableExponent so callers can fall back to
the numeric backend.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .errors import NonRepresentableExponent
from .laurent import ES_ONE, ES_ZERO, QI, ExactScalar, Laurent

_PHASES = {0: QI(1), 1: QI(0, 1), 2: QI(-1), 3: QI(0, -1)}


class PhasedExponent:
    """Exponent a + i*hbar^{-1}*b of q, with a, b rational."""

    __slots__ = ("real", "imag")

    def __init__(self, real=0, imag=0):
        self.real = real if isinstance(real, Fraction) else Fraction(real)
        self.imag = imag if isinstance(imag, Fraction) else Fraction(imag)

    def __add__(self, other):
        other = as_exponent(other)
        return PhasedExponent(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_exponent(other)
        return PhasedExponent(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        return as_exponent(other) - self

    def __neg__(self):
        return PhasedExponent(-self.real, -self.imag)

    def __mul__(self, c):
        c = Fraction(c)
        return PhasedExponent(self.real * c, self.imag * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = as_exponent(other)
        return self.real == other.real and self.imag == other.imag

    def __hash__(self):
        return hash((self.real, self.imag))

    def is_zero(self):
        return self.real == 0 and self.imag == 0

    def __repr__(self):
        if self.imag == 0:
            return "PhasedExponent(%s)" % (self.real,)
        return "PhasedExponent(%s, %s)" % (self.real, self.imag)


def as_exponent(e) -> PhasedExponent:
    if isinstance(e, PhasedExponent):
        return e
    if isinstance(e, (int, Fraction)):
        return PhasedExponent(e)
    if isinstance(e, tuple) and len(e) == 2:
        return PhasedExponent(e[0], e[1])
    raise TypeError("cannot interpret %r as a q-exponent" % (e,))


class QContext:
    """Evaluation context: root datum label, lattice constant L and backend.

    backend "exact" produces ExactScalar values; "numeric" produces complex
    numbers at q = e^h.  Contexts are immutable and safe to share.
    """

    __slots__ = ("cartan_type", "L", "backend", "h_value")

    def __init__(self, cartan_type="A1", L=2, backend="exact", h_value=None):
        if backend not in ("exact", "numeric"):
            raise ValueError("backend must be 'exact' or 'numeric'")
        if backend == "numeric" and h_value is None:
            raise ValueError("numeric backend needs h_value")
        self.cartan_type = cartan_type
        self.L = int(L)
        self.backend = backend
        self.h_value = h_value

    @property
    def exact(self):
        return self.backend == "exact"

    @property
    def zero(self):
        return ES_ZERO if self.exact else 0j

    @property
    def one(self):
        return ES_ONE if self.exact else 1 + 0j

    def s_value(self):
        return cmath.exp(self.h_value / self.L)

    def with_backend(self, backend, h_value=None):
        return QContext(self.cartan_type, self.L, backend, h_value if h_value is not None else self.h_value)

    def __repr__(self):
        return "QContext(%r, L=%d, backend=%r)" % (self.cartan_type, self.L, self.backend)


def q_power(ctx: QContext, e):
    """q^e; multiplicative in e."""
    e = as_exponent(e)
    if ctx.backend == "numeric":
        return cmath.exp(ctx.h_value * complex(e.real)) * cmath.exp(2j * cmath.pi * complex(e.imag))
    se = e.real * ctx.L
    if se.denominator != 1:
        raise NonRepresentableExponent(
            "q^%s needs s^%s; not a Laurent monomial" % (e, se))
    phase4 = e.imag * 4
    if phase4.denominator != 1:
        raise NonRepresentableExponent(
            "phase e^{2 pi i %s} is not in {1, i, -1, -i}" % (e.imag,))
    return ExactScalar.monomial(int(se), _PHASES[int(phase4) % 4])


def q_number(ctx: QContext, e, d=1):
    """[e]_{q_d} = (q_d^e - q_d^{-e}) / (q_d - q_d^{-1})."""
    e = as_exponent(e)
    de = e * d
    num = q_power(ctx, de) - q_power(ctx, -de)
    den = q_power(ctx, Fraction(d)) - q_power(ctx, Fraction(-d))
    return num / den


def q_int(ctx: QContext, n: int, d=1):
    """[n]_{q_d} for integer n, as the balanced sum of monomials (fast path)."""
    if ctx.backend == "numeric":
        return q_number(ctx, n, d)
    k = ctx.L * d
    sign = 1
    if n < 0:
        n, sign = -n, -1
    coeffs = {k * (-n + 1 + 2 * j): QI(sign) for j in range(n)}
    return ExactScalar(Laurent(coeffs))


def q_factorial(ctx: QContext, n: int, d=1):
    out = ctx.one
    for k in range(2, n + 1):
        out = out * q_int(ctx, k, d)
    return out


def q_binomial(ctx: QContext, n: int, m: int, d=1):
    """Gaussian binomial [n choose m]_{q_d}; 0 for m < 0, 1 for m = 0."""
    if m < 0:
        return ctx.zero
    if m == 0:
        return ctx.one
    num = ctx.one
    for k in range(m):
        num = num * q_int(ctx, n - k, d)
    return num / q_factorial(ctx, m, d)


def q_exp_coefficients(ctx: QContext, n_max: int, d=1):
    """Coefficients c_n = q_d^{n(n-1)/2} / [n]_{q_d}! of the q-exponential."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    out = []
    for n in range(n_max + 1):
        c = q_power(ctx, Fraction(d * n * (n - 1), 2)) / q_factorial(ctx, n, d)
        out.append(c)
    return out


def q_exp_inverse_coefficients(ctx: QContext, n_max: int, d=1):
    """Coefficients of exp_{q_d}(x)^{-1} = exp_{q_d^{-1}}(-x)."""
    out = []
    for n in range(n_max + 1):
        c = q_power(ctx, Fraction(-d * n * (n - 1), 2)) / q_factorial(ctx, n, d)
        out.append(c if n % 2 == 0 else -c)
    return out


def q_number_is_zero(e, d=1):
    """Whether [e]_{q_d} = 0, i.e. q_d^{2e} = 1 (exact exponents only)."""
    e = as_exponent(e)
    return e.real == 0 and (2 * d * e.imag).denominator == 1


def q_number_ratio(ctx: QContext, x, y, d=1):
    """[x]_{q_d} / [y]_{q_d} as q_d^{y-x} (q_d^{2x} - 1)/(q_d^{2y} - 1).

    Representable under weaker conditions than the factors themselves,
    which matters for half-integral restricted parameters.
    """
    x, y = as_exponent(x), as_exponent(y)
    if ctx.backend == "numeric":
        return q_number(ctx, x, d) / q_number(ctx, y, d)
    if q_number_is_zero(y, d):
        raise ZeroDivisionError("[%s] vanishes" % (y,))
    if q_number_is_zero(x, d):
        return ctx.zero
    front = q_power(ctx, (y - x) * d)
    num = q_power(ctx, x * (2 * d)) - 1
    den = q_power(ctx, y * (2 * d)) - 1
    return front * num / den


def scalar_eq(ctx: QContext, a, b, tol=1e-9):
    if ctx.exact:
        return a == b
    return abs(a - b) <= tol


# ---------------------------------------------------------------------------
# Laurent polynomials in the Cartan indeterminates z_1..z_N over Q(i)(s),
# used by the symbolic Shapovalov machinery.
# ---------------------------------------------------------------------------

class MultiLaurent:
    """Sparse Laurent polynomial in z_1..z_n with ExactScalar coefficients."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.c = {} if coeffs is None else {e: v for e, v in coeffs.items() if v}

    @staticmethod
    def const(n, value):
        if isinstance(value, (int, Fraction, QI)):
            value = ExactScalar(value)
        return MultiLaurent(n, {(0,) * n: value})

    @staticmethod
    def monomial(n, exps, coeff=ES_ONE):
        return MultiLaurent(n, {tuple(exps): coeff})

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __add__(self, other):
        other = self._coerce(other)
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
        return MultiLaurent(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent(self.n, {e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                w = out.get(e)
                p = v1 * v2
                if w is None:
                    out[e] = p
                else:
                    w = w + p
                    if w:
                        out[e] = w
                    else:
                        del out[e]
        return MultiLaurent(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power; invert monomials explicitly")
        out = MultiLaurent.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, MultiLaurent):
            if other.n != self.n:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, (int, Fraction, QI, ExactScalar)):
            return MultiLaurent.const(self.n, other)
        raise TypeError("cannot coerce %r" % (other,))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QI, ExactScalar)):
            other = MultiLaurent.const(self.n, other)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def min_exps(self):
        return tuple(min(e[i] for e in self.c) for i in range(self.n))

    def shifted(self, offset):
        return MultiLaurent(self.n, {tuple(a + b for a, b in zip(e, offset)): v
                                     for e, v in self.c.items()})

    def is_monomial(self):
        return len(self.c) == 1

    def leading_term(self):
        e = max(self.c)  # lex order on exponent tuples
        return e, self.c[e]

    def evaluate(self, ctx: QContext, weight_values):
        """Substitute z_i -> given scalars (values of K_{alpha_i})."""
        total = ctx.zero
        for e, v in self.c.items():
            term = v if ctx.exact else v.evaluate(ctx.s_value())
            for zi, k in zip(weight_values, e):
                term = term * zi ** k
            total = total + term
        return total

    def exact_div(self, other):
        """Exact quotient self / other, or None if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return MultiLaurent(self.n)
        # shift both to honest polynomials; lex leading-term elimination
        off_s = self.min_exps()
        off_o = other.min_exps()
        f = self.shifted(tuple(-x for x in off_s))
        g = other.shifted(tuple(-x for x in off_o))
        ge, gc = g.leading_term()
        quot = {}
        while not f.is_zero():
            fe, fc = f.leading_term()
            te = tuple(a - b for a, b in zip(fe, ge))
            if any(x < 0 for x in te):
                return None
            tc = fc / gc
            quot[te] = tc
            f = f - MultiLaurent(self.n, {te: tc}) * g
        q = MultiLaurent(self.n, quot)
        return q.shifted(tuple(a - b for a, b in zip(off_s, off_o)))

    def __repr__(self):
        return "MultiLaurent(%d, %r)" % (self.n, self.c)

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            mono = " ".join("z%d^%d" % (i + 1, k) for i, k in enumerate(e) if k)
            coeff = str(self.c[e])
            parts.append("(%s) %s" % (coeff, mono) if mono else "(%s)" % coeff)
        return " + ".join(parts)
