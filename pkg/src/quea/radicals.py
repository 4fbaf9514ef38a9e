"""Scalars with formal square roots of positive q-numbers.

The Clebsch-Gordan data and intertwiner coefficients of the rank-one
theory carry factors [x]^{1/2} with x a positive half-integer.  A Rad is
a field element times a set of such square-root tokens; two tokens with
the same (2x, d) multiply back to the plain q-number.  Addition is only
defined within a common token set, which is all the closed formulas need;
mismatched additions raise instead of silently losing exactness.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import ExactScalar
from .scalars import QContext, q_int


class Rad:
    __slots__ = ("ctx", "coeff", "roots")

    def __init__(self, ctx: QContext, coeff, roots=frozenset()):
        self.ctx = ctx
        self.coeff = coeff
        self.roots = frozenset(roots) if coeff else frozenset()

    @staticmethod
    def of(ctx, value):
        if isinstance(value, Rad):
            return value
        if isinstance(value, (int, Fraction)):
            value = ctx.one * value
        return Rad(ctx, value)

    @staticmethod
    def sqrt_qint(ctx, x2, d=1):
        """[x]^{1/2} with x = x2/2 a nonnegative half-integer."""
        x2 = int(x2)
        if x2 < 0:
            raise ValueError("square roots only of nonnegative q-numbers")
        if x2 == 0:
            return Rad(ctx, ctx.zero)
        if ctx.backend == "numeric":
            import cmath
            val = _qnum_halfint(ctx, x2, d)
            return Rad(ctx, cmath.sqrt(val))
        return Rad(ctx, ctx.one, frozenset({(x2, d)}))

    def token_value(self, token):
        x2, d = token
        return _qnum_halfint(self.ctx, x2, d)

    def is_zero(self):
        return not self.coeff

    def __bool__(self):
        return bool(self.coeff)

    def __mul__(self, other):
        other = Rad.of(self.ctx, other)
        if not self.coeff or not other.coeff:
            return Rad(self.ctx, self.ctx.zero)
        coeff = self.coeff * other.coeff
        shared = self.roots & other.roots
        for token in shared:
            coeff = coeff * self.token_value(token)
        return Rad(self.ctx, coeff, self.roots ^ other.roots)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Rad.of(self.ctx, other)
        return self * other._inverse()

    def __rtruediv__(self, other):
        return Rad.of(self.ctx, other) / self

    def _inverse(self):
        if not self.coeff:
            raise ZeroDivisionError("inverse of zero radical scalar")
        coeff = self.ctx.one / self.coeff
        for token in self.roots:
            coeff = coeff / self.token_value(token)
        return Rad(self.ctx, coeff, self.roots)

    def __neg__(self):
        return Rad(self.ctx, -self.coeff, self.roots)

    def __add__(self, other):
        other = Rad.of(self.ctx, other)
        if not other.coeff:
            return self
        if not self.coeff:
            return other
        if self.roots != other.roots:
            raise ArithmeticError(
                "sum of radical scalars with mismatched tokens %s vs %s"
                % (sorted(self.roots), sorted(other.roots)))
        return Rad(self.ctx, self.coeff + other.coeff, self.roots)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Rad.of(self.ctx, other))

    def __rsub__(self, other):
        return Rad.of(self.ctx, other) - self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar, complex)):
            other = Rad.of(self.ctx, other)
        if not isinstance(other, Rad):
            return NotImplemented
        if self.ctx.backend == "numeric":
            return abs(self.coeff - other.coeff) <= 1e-9
        return self.coeff == other.coeff and self.roots == other.roots

    def __hash__(self):
        return hash((self.coeff, self.roots))

    def squared(self):
        out = self.coeff * self.coeff
        for token in self.roots:
            out = out * self.token_value(token)
        return out

    def evaluate(self, s):
        import cmath
        out = self.coeff.evaluate(s) if hasattr(self.coeff, "evaluate") else complex(self.coeff)
        for x2, d in self.roots:
            out *= cmath.sqrt(_qnum_halfint_value(s, x2, d, self.ctx.L))
        return out

    def __repr__(self):
        if not self.roots:
            return "Rad(%s)" % (self.coeff,)
        tags = " ".join("[%s]_%d^1/2" % (Fraction(x2, 2), d) for x2, d in sorted(self.roots))
        return "Rad(%s * %s)" % (self.coeff, tags)


def _qnum_halfint(ctx, x2, d):
    """[x]_{q_d} for x = x2/2 >= 0 a half-integer."""
    if x2 % 2 == 0:
        return q_int(ctx, x2 // 2, d)
    from .scalars import q_number
    return q_number(ctx, Fraction(x2, 2), d)


def _qnum_halfint_value(s, x2, d, L):
    q = s ** L
    qd = q ** d
    x = x2 / 2
    return (qd ** x - qd ** (-x)) / (qd - 1 / qd)
