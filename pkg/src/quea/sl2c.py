"""Rank-one complex quantum group: principal series of SL_q(2,C) on
K_q-type coefficients.

Parameters follow the number convention: weights are half-integers, the
simple root is 1, the invariant pairing is (x, y) = 2xy, and lambda lives
in C modulo i hbar^{-1} Z.  An intertwiner is a scalar sequence (T_l)
indexed by the K_q-types l = |mu|, |mu|+1, ...; the four coefficient
recurrences coming from tensoring with the fundamental representation
determine everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .radicals import Rad
from .scalars import PhasedExponent, QContext, q_number, q_power, as_exponent


def _half(x):
    x = Fraction(x)
    if (2 * x).denominator != 1:
        raise ValueError("%s is not a half-integer" % (x,))
    return x


def reduce_lambda(lam) -> PhasedExponent:
    """Canonical representative of lambda in C / i hbar^{-1} Z."""
    lam = as_exponent(lam)
    if isinstance(lam.imag, Fraction):
        imag = lam.imag - lam.imag.__floor__()
    else:
        imag = lam.imag % 1
    return PhasedExponent(lam.real, imag)


class PSParam:
    """Principal series parameter (mu, lambda) in (1/2)Z x C/i hbar^{-1} Z."""

    __slots__ = ("mu", "lam")

    def __init__(self, mu, lam):
        self.mu = _half(mu)
        self.lam = reduce_lambda(lam)

    def neg(self):
        return PSParam(-self.mu, PhasedExponent(-self.lam.real, -self.lam.imag))

    def lr(self):
        """(l, r) = (lambda + mu, lambda - mu), defined up to a simultaneous
        half-period shift of the imaginary part."""
        return (self.lam + self.mu, self.lam - self.mu)

    def min_type(self) -> Fraction:
        return abs(self.mu)

    def __eq__(self, other):
        return isinstance(other, PSParam) and self.mu == other.mu and self.lam == other.lam

    def __hash__(self):
        return hash((self.mu, self.lam))

    def __repr__(self):
        if self.lam.imag == 0:
            return "PSParam(%s, %s)" % (self.mu, self.lam.real)
        return "PSParam(%s, %s + %s i/hbar)" % (self.mu, self.lam.real, self.lam.imag)


def qn(ctx: QContext, z) -> Rad:
    """[z] as a radical-free scalar."""
    return Rad.of(ctx, q_number(ctx, as_exponent(z)))


def _sqrt(ctx, x) -> Rad:
    """[x]^{1/2} for a nonnegative half-integer x."""
    return Rad.sqrt_qint(ctx, int(2 * Fraction(x)))


def _qp(ctx, e) -> Rad:
    return Rad.of(ctx, q_power(ctx, as_exponent(e)))


def _imag_i(ctx) -> Rad:
    return _qp(ctx, PhasedExponent(0, Fraction(1, 4)))   # q^{i hbar^{-1}/4} = i


def abcd_coefficients(ctx: QContext, mu, lam, l):
    """The four expansion coefficients at type l; C and D are None at l = 0."""
    mu = _half(mu)
    l = _half(l)
    if l < abs(mu):
        raise ValueError("need l >= |mu|")
    lam = as_exponent(lam)
    i = _imag_i(ctx)
    qmq = _qp(ctx, 1) - _qp(ctx, -1)
    den_up = _sqrt(ctx, 2 * l + 1) * _sqrt(ctx, 2 * l + 2)
    a = i * qmq * qn(ctx, lam + (l + 1)) * _sqrt(ctx, l + mu + 1) * _sqrt(ctx, l - mu + 1) / den_up
    b = -(i * (_qp(ctx, lam) * qn(ctx, Fraction(l + mu + 1))
               + _qp(ctx, -lam) * qn(ctx, Fraction(l - mu + 1))) / den_up)
    if l == 0:
        return a, b, None, None
    den_dn = _sqrt(ctx, 2 * l) * _sqrt(ctx, 2 * l + 1)
    c = -(i * (_qp(ctx, lam) * qn(ctx, Fraction(l - mu))
               + _qp(ctx, -lam) * qn(ctx, Fraction(l + mu))) / den_dn)
    d = -(i * qmq * qn(ctx, -lam + Fraction(l)) * _sqrt(ctx, l + mu) * _sqrt(ctx, l - mu) / den_dn)
    return a, b, c, d


def cg_decompose(ctx: QContext, l, mu, side="right", sign=Fraction(1, 2)):
    """Expansion of e^l_mu (x) e^{1/2}_sign (side right) or the reversed
    order (side left) in the e^{l +- 1/2} bases; [(l', mu', coefficient)]."""
    l, mu = _half(l), _half(mu)
    sign = Fraction(sign)
    if abs(mu) > l:
        raise ValueError("|mu| must be at most l")
    if sign * 2 not in (1, -1):
        raise ValueError("sign must be +-1/2")
    half = Fraction(1, 2)
    out = []
    up = l + half
    dn = l - half
    den = _sqrt(ctx, 2 * l + 1)
    if side == "right" and sign == half:
        out.append((up, mu + half, _qp(ctx, (l - mu) * half) * _sqrt(ctx, l + mu + 1) / den))
        if dn >= abs(mu + half):
            out.append((dn, mu + half,
                        -(_qp(ctx, -(l + mu + 1) * half) * _sqrt(ctx, l - mu) / den)))
    elif side == "right":
        out.append((up, mu - half, _qp(ctx, -(l + mu) * half) * _sqrt(ctx, l - mu + 1) / den))
        if dn >= abs(mu - half):
            out.append((dn, mu - half,
                        _qp(ctx, (l - mu + 1) * half) * _sqrt(ctx, l + mu) / den))
    elif side == "left" and sign == half:
        out.append((up, mu + half, _qp(ctx, -(l - mu) * half) * _sqrt(ctx, l + mu + 1) / den))
        if dn >= abs(mu + half):
            out.append((dn, mu + half,
                        _qp(ctx, (l + mu + 1) * half) * _sqrt(ctx, l - mu) / den))
    elif side == "left":
        out.append((up, mu - half, _qp(ctx, (l + mu) * half) * _sqrt(ctx, l - mu + 1) / den))
        if dn >= abs(mu - half):
            out.append((dn, mu - half,
                        -(_qp(ctx, -(l - mu + 1) * half) * _sqrt(ctx, l + mu) / den)))
    else:
        raise ValueError("side must be 'left' or 'right'")
    return [(a, b, c) for a, b, c in out if c]


# ---------------------------------------------------------------------------
# Coefficient sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoeffSequence:
    start: Fraction               # minimal K_q-type
    values: tuple                 # scalars T_l for l = start, start+1, ...

    def at(self, l):
        l = Fraction(l)
        idx = l - self.start
        if idx.denominator != 1:
            raise KeyError("type %s is not on the lattice of %s" % (l, self.start))
        idx = int(idx)
        if idx < 0:
            return None
        if idx >= len(self.values):
            raise KeyError("sequence not computed up to type %s" % (l,))
        return self.values[idx]

    def cutoff(self):
        return self.start + len(self.values) - 1


def normalize_sequence(ctx, seq: CoeffSequence) -> CoeffSequence:
    """Scale so that the first nonzero coefficient is 1."""
    for v in seq.values:
        if v:
            return CoeffSequence(seq.start, tuple(x / v for x in seq.values))
    return seq


def sequences_proportional(ctx, a: CoeffSequence, b: CoeffSequence) -> bool:
    if a.start != b.start or len(a.values) != len(b.values):
        return False
    na, nb = normalize_sequence(ctx, a), normalize_sequence(ctx, b)
    return all(x == y for x, y in zip(na.values, nb.values))


def j_sequence(ctx: QContext, p: PSParam, cutoff) -> CoeffSequence:
    """Closed form (eq. J): T_l = prod_{k=|mu|+1}^{l} [k - lambda]/[k + lambda]."""
    l0 = p.min_type()
    vals = [Rad.of(ctx, 1)]
    l = l0 + 1
    cur = Rad.of(ctx, 1)
    while l <= cutoff:
        num = qn(ctx, -p.lam + l)
        den = qn(ctx, p.lam + l)
        cur = cur * num / den
        vals.append(cur)
        l += 1
    return CoeffSequence(l0, tuple(vals))


def i_sequence(ctx: QContext, p: PSParam, cutoff) -> CoeffSequence:
    """Closed form (eq. I) for lambda in -|mu| - N mod half periods: zero
    below -Re(lambda), then products starting with 1."""
    l0 = p.min_type()
    jump = -p.lam.real
    vals = []
    l = l0
    cur = Rad.of(ctx, 1)
    while l <= cutoff:
        if l < jump:
            vals.append(Rad.of(ctx, ctx.zero))
        elif l == jump:
            vals.append(cur)
        else:
            cur = cur * qn(ctx, -p.lam + l) / qn(ctx, p.lam + l)
            vals.append(cur)
        l += 1
    return CoeffSequence(l0, tuple(vals))


def f_power_sequence(ctx: QContext, mu1, mu2, cutoff) -> CoeffSequence:
    """Coefficients of F^{mu1 - mu2} as V(l)_{mu1} -> V(l)_{mu2} maps."""
    p = int(_half(mu1) - _half(mu2))
    if p < 0:
        raise ValueError("F-power needs mu1 >= mu2")
    l0 = abs(_half(mu1))
    vals = []
    l = l0
    while l <= cutoff:
        acc = Rad.of(ctx, 1)
        for k in range(p):
            if l + mu1 - k <= 0:      # the weight path exits the module
                acc = Rad.of(ctx, ctx.zero)
                break
            acc = acc * _sqrt(ctx, l + mu1 - k) * _sqrt(ctx, l - mu1 + k + 1)
        vals.append(acc)
        l += 1
    return CoeffSequence(l0, tuple(vals))


def e_power_sequence(ctx: QContext, mu1, mu2, cutoff) -> CoeffSequence:
    """Coefficients of E^{mu2 - mu1} as V(l)_{mu1} -> V(l)_{mu2} maps."""
    p = int(_half(mu2) - _half(mu1))
    if p < 0:
        raise ValueError("E-power needs mu2 >= mu1")
    l0 = abs(_half(mu1))
    vals = []
    l = l0
    while l <= cutoff:
        acc = Rad.of(ctx, 1)
        for k in range(p):
            if l - mu1 - k <= 0:
                acc = Rad.of(ctx, ctx.zero)
                break
            acc = acc * _sqrt(ctx, l - mu1 - k) * _sqrt(ctx, l + mu1 + k + 1)
        vals.append(acc)
        l += 1
    return CoeffSequence(l0, tuple(vals))


# ---------------------------------------------------------------------------
# Verification and the generic solver (oracle role)
# ---------------------------------------------------------------------------

def intertwiner_constraints(ctx: QContext, p1: PSParam, p2: PSParam, cutoff):
    """Linear constraints a * T_u + b * T_v = 0 on the types of p1.

    Yields (u, a, v, b) with v=None for single-variable constraints.
    Below the minimal type of the target, the target-side expansion
    coefficients are absent and enter as zero.
    """
    l0 = p1.min_type()
    zero = Rad.of(ctx, ctx.zero)
    if (p1.mu - p2.mu).denominator != 1:
        # weight difference outside the weight lattice of the types
        yield from ((l, Rad.of(ctx, 1), None, None)
                    for l in _type_range(l0, cutoff))
        return
    lo2 = p2.min_type()
    for l in _type_range(l0, cutoff):
        if l < lo2:
            yield (l, Rad.of(ctx, 1), None, None)   # target type absent
    for l in _type_range(l0, cutoff):
        a1, b1, c1, d1 = abcd_coefficients(ctx, p1.mu, p1.lam, l)
        if l >= lo2:
            a2, b2, c2, d2 = abcd_coefficients(ctx, p2.mu, p2.lam, l)
        else:
            a2, b2, c2, d2 = zero, zero, zero, zero
        if l + 1 <= cutoff:
            # T_{l+1} A(p1, l) = T_l A(p2, l)
            yield (l + 1, a1, l, -a2)
        yield (l, b1 - b2, None, None)
        if c1 is not None:
            yield (l, c1 - (c2 if c2 is not None else zero), None, None)
            # T_{l-1} D(p1, l) = T_l D(p2, l); T below the minimal type is 0
            d2 = d2 if d2 is not None else zero
            if l - 1 >= l0:
                yield (l - 1, d1, l, -d2)
            else:
                yield (l, d2, None, None)


def _type_range(l0, cutoff):
    l = l0
    while l <= cutoff:
        yield l
        l += 1


def verify_intertwiner(ctx: QContext, p1: PSParam, p2: PSParam,
                       seq: CoeffSequence, cutoff=None):
    """Exact check of the four recurrences; independent of the solver."""
    if cutoff is None:
        cutoff = seq.cutoff() - 1
    if seq.start != p1.min_type():
        return False
    zero = Rad.of(ctx, ctx.zero)
    for (u, a, v, b) in intertwiner_constraints(ctx, p1, p2, cutoff):
        tu = seq.at(u)
        lhs = a * tu if (a and tu) else zero
        if v is not None:
            tv = seq.at(v)
            if b and tv:
                lhs = lhs + b * tv
        if lhs:
            return False
    return True


def generic_solution_space(ctx: QContext, p1: PSParam, p2: PSParam, cutoff):
    """Kernel of the recurrence system by weighted union-find propagation.

    Returns (dimension, [CoeffSequence basis]).  Since every constraint
    couples at most two unknowns with monomial coefficients, elimination
    stays in the radical-monomial class.
    """
    l0 = p1.min_type()
    types = list(_type_range(l0, cutoff))
    parent = {l: l for l in types}
    weight = {l: Rad.of(ctx, 1) for l in types}   # T_l = weight[l] * T_{root}
    is_zero = {l: False for l in types}

    def find(l):
        if parent[l] == l:
            return l, Rad.of(ctx, 1)
        root, w = find(parent[l])
        w = weight[l] * w
        parent[l] = root
        weight[l] = w
        return root, w

    def set_zero(l):
        root, _ = find(l)
        is_zero[root] = True

    for (u, a, v, b) in intertwiner_constraints(ctx, p1, p2, cutoff):
        if v is None:
            if a:
                set_zero(u)
            continue
        if not a and not b:
            continue
        if not a:
            set_zero(v)
            continue
        if not b:
            set_zero(u)
            continue
        ru, wu = find(u)
        rv, wv = find(v)
        if ru == rv:
            # a wu T_r + b wv T_r = 0: forces T_r = 0 unless coefficients cancel
            try:
                total = a * wu + b * wv
            except ArithmeticError:
                total = True   # mismatched radicals cannot cancel
            if total:
                set_zero(ru)
        else:
            # T_u = wu T_ru, T_v = wv T_rv, a T_u = -b T_v
            # attach ru below rv: T_ru = -(b wv)/(a wu) T_rv
            parent[ru] = rv
            weight[ru] = -(b * wv) / (a * wu)
            if is_zero.pop(ru):
                is_zero[rv] = True

    roots = []
    for l in types:
        r, _ = find(l)
        if not is_zero[r] and r not in roots:
            roots.append(r)
    basis = []
    zero = Rad.of(ctx, ctx.zero)
    for r in roots:
        vals = []
        for l in types:
            rl, w = find(l)
            vals.append(w if rl == r and not is_zero[rl] else zero)
        basis.append(normalize_sequence(ctx, CoeffSequence(l0, tuple(vals))))
    return len(roots), basis


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

@dataclass
class IntertwinerResult:
    case: str                     # trivial | standard-* | Zhelobenko-* | none
    p1: PSParam
    p2: PSParam
    sequences: list               # CoeffSequence solutions up to the cutoff
    dim: int
    note: str = ""


def _is_weight(lam: PhasedExponent):
    return (isinstance(lam.real, Fraction) and (2 * lam.real).denominator == 1
            and lam.imag == 0)


def _in_plus_n_mod_half(lam: PhasedExponent, bound: Fraction):
    """lambda in bound + N modulo (1/2) i hbar^{-1} Z."""
    if lam.imag not in (Fraction(0), Fraction(1, 2)):
        return False
    if not isinstance(lam.real, Fraction):
        return False
    diff = lam.real - bound
    return diff.denominator == 1 and diff >= 1


def solve_intertwiner(ctx: QContext, p1: PSParam, p2: PSParam, cutoff=12) -> IntertwinerResult:
    """Classify Hom(Gamma(E_{p1}), Gamma(E_{p2})) and return the solutions.

    Case labels follow the rank-one classification; the sequences are the
    closed forms, normalized so the first nonzero coefficient is 1.
    """
    same = (p2 == p1)
    negated = (p2 == p1.neg())
    if same:
        seq = CoeffSequence(p1.min_type(),
                            tuple(Rad.of(ctx, 1) for _ in _type_range(p1.min_type(), cutoff)))
        return IntertwinerResult("trivial", p1, p2, [seq], 1,
                                 "self-intertwiners are scalar")
    if negated:
        mu_abs = abs(p1.mu)
        minus = PhasedExponent(-p1.lam.real, -p1.lam.imag)
        if _in_plus_n_mod_half(reduce_lambda(minus), mu_abs):
            seq = normalize_sequence(ctx, i_sequence(ctx, p1, cutoff))
            return IntertwinerResult("standard-Fredholm", p1, p2, [seq], 1,
                                     "zero on the minimal K_q-type")
        seq = normalize_sequence(ctx, j_sequence(ctx, p1, cutoff))
        if _in_plus_n_mod_half(p1.lam, mu_abs):
            return IntertwinerResult("standard-finite-rank", p1, p2, [seq], 1,
                                     "nonzero on the minimal K_q-type, finitely many types")
        return IntertwinerResult("standard-bijective", p1, p2, [seq], 1, "")
    # Zhelobenko cases: swap (mu, lambda) <-> +-(lambda, mu), possibly with a
    # half period attached to the lambda slots on both sides
    for half_shift in (Fraction(0), Fraction(1, 2)):
        if p1.lam.imag != half_shift:
            continue
        lam_w = p1.lam.real
        if not (isinstance(lam_w, Fraction) and (2 * lam_w).denominator == 1):
            continue
        if (lam_w - p1.mu).denominator != 1:
            continue
        plus = PSParam(lam_w, PhasedExponent(p1.mu, half_shift))
        minus = PSParam(-lam_w, PhasedExponent(-p1.mu, half_shift))
        mu, lam = p1.mu, lam_w
        if p2 == plus and abs(lam) != abs(mu):
            # solutions are the coefficients of F^{mu - lambda}
            if (abs(lam) > abs(mu) and lam < 0) or (abs(lam) < abs(mu) and mu > 0):
                seq = normalize_sequence(ctx, _restrict_start(
                    f_power_sequence(ctx, mu, lam, cutoff), p1.min_type(), ctx))
                return IntertwinerResult("Zhelobenko-F", p1, p2, [seq], 1, "")
            return IntertwinerResult("none", p1, p2, [], 0, "sign pattern excludes solutions")
        if p2 == minus and abs(lam) != abs(mu):
            if (abs(lam) > abs(mu) and lam < 0) or (abs(lam) < abs(mu) and mu < 0):
                seq = normalize_sequence(ctx, _restrict_start(
                    e_power_sequence(ctx, mu, -lam, cutoff), p1.min_type(), ctx))
                return IntertwinerResult("Zhelobenko-E", p1, p2, [seq], 1, "")
            return IntertwinerResult("none", p1, p2, [], 0, "sign pattern excludes solutions")
    return IntertwinerResult("none", p1, p2, [], 0, "central characters disagree")


def _restrict_start(seq: CoeffSequence, l0, ctx):
    """Extend or cut a closed-form sequence to start exactly at l0."""
    if seq.start == l0:
        return seq
    if seq.start < l0:
        skip = int(l0 - seq.start)
        return CoeffSequence(l0, seq.values[skip:])
    pad = int(seq.start - l0)
    zero = Rad.of(ctx, ctx.zero)
    return CoeffSequence(l0, (zero,) * pad + seq.values)


# ---------------------------------------------------------------------------
# Jordan series and unitarity
# ---------------------------------------------------------------------------

@dataclass
class JordanReport:
    case: str                  # finite-quotient | finite-sub | simple
    l: object
    r: object
    finite_types: tuple
    finite_dimension: int


def jordan_series(ctx: QContext, p: PSParam) -> JordanReport:
    """Composition series shape; the integrality of (l, r) is read modulo a
    simultaneous half-period shift of the pair."""
    lam, mu = p.lam, p.mu
    l_val, r_val = p.lr()
    integral = (lam.imag in (Fraction(0), Fraction(1, 2))
                and isinstance(lam.real, Fraction)
                and (lam.real + mu).denominator == 1)
    if integral:
        lr_re = (l_val.real, r_val.real)
        if all(x >= 1 for x in lr_re) or all(x <= -1 for x in lr_re):
            lam_abs = abs(lam.real)
            types = []
            t = abs(mu)
            while t <= lam_abs - 1:
                types.append(t)
                t += 1
            dim = sum(int(2 * t) + 1 for t in types)
            case = "finite-quotient" if lr_re[0] >= 1 else "finite-sub"
            return JordanReport(case, l_val, r_val, tuple(types), dim)
    return JordanReport("simple", l_val, r_val, (), 0)


@dataclass
class UnitarityReport:
    unitary_principal: bool
    complementary: bool
    case: str
    positive_up_to: object = None


def _qnumber_sign(x: Fraction):
    """Sign of [x] for real x (q > 0, q != 1)."""
    return (x > 0) - (x < 0)


def unitarity_report(ctx: QContext, p: PSParam, cutoff=12) -> UnitarityReport:
    """Unitary-principal and complementary-series verdicts.

    The standard intertwiner J(mu, lambda) induces the invariant Hermitian
    form; positivity of its coefficients on all types up to the cutoff is
    certified by exact sign bookkeeping of the q-numbers.
    """
    lam, mu = p.lam, p.mu
    if isinstance(lam.real, float):
        principal = abs(lam.real) <= 1e-9
        t = lam.real
    else:
        principal = lam.real == 0
        t = lam.real
    classification = solve_intertwiner(ctx, p, p.neg(), cutoff=cutoff)
    complementary = False
    positive_up_to = None
    in_window = (mu == 0 and lam.imag in (Fraction(0), Fraction(1, 2))
                 and not isinstance(t, float) and -1 < t < 1)
    if in_window:
        # J coefficients prod [k - t]/[k + t]: exact signs
        positive = True
        k = 1
        while k <= cutoff:
            if _qnumber_sign(Fraction(k) - t) * _qnumber_sign(Fraction(k) + t) < 0:
                positive = False
                break
            k += 1
        complementary = positive
        if positive:
            positive_up_to = cutoff
    return UnitarityReport(principal, complementary, classification.case, positive_up_to)


def compose_sequences(ctx, outer: CoeffSequence, inner: CoeffSequence) -> CoeffSequence:
    """Pointwise composition of per-type scalars (outer after inner)."""
    start = max(outer.start, inner.start)
    zero = Rad.of(ctx, ctx.zero)
    vals = []
    l = start
    while l <= min(outer.cutoff(), inner.cutoff()):
        a = outer.at(l) or zero
        b = inner.at(l) or zero
        vals.append(a * b)
        l += 1
    return CoeffSequence(start, tuple(vals))
