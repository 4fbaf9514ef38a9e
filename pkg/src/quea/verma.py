"""Verma modules M(lambda) on lowering-word spanning sets.

Vectors are linear combinations of F-words acting on the highest weight
vector; the contravariant (Shapovalov) form is computed recursively from
the defining relations, so every downstream quantity (ranks, simple
quotients, determinants) reduces to exact linear algebra.  A symbolic
mode replaces the Cartan values K_i by Laurent indeterminates z_i, which
is what the Shapovalov determinant factorization works with.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import (BasisDegenerate, MalformedWord, NotEmbeddable,
                     RankUnstable, TruncationExceeded)
from .laurent import ES_ONE, ExactScalar
from .rootdata import RootDatum, Weight, kostant_partition, linkage_orbit, strong_linkage_up
from .scalars import MultiLaurent, QContext, q_power


def words_of_weight(datum: RootDatum, nu):
    """All F-words with weight drop nu (root coordinates), in lex order."""
    nu = tuple(int(x) for x in nu)
    if any(x < 0 for x in nu):
        return []
    out = []

    def rec(remaining, prefix):
        if all(x == 0 for x in remaining):
            out.append(tuple(prefix))
            return
        for i in range(datum.rank):
            if remaining[i] > 0:
                rem = list(remaining)
                rem[i] -= 1
                prefix.append(i)
                rec(tuple(rem), prefix)
                prefix.pop()

    rec(nu, [])
    return out


def word_drop(datum: RootDatum, word):
    nu = [0] * datum.rank
    for i in word:
        nu[i] += 1
    return tuple(nu)


class VermaModule:
    """M(lambda) for a concrete highest weight, or the symbolic Verma family.

    In symbolic mode scalars are Laurent polynomials in z_1..z_N over
    Q(i)(s), with z_i standing for the value of K_{alpha_i} at the highest
    weight.
    """

    def __init__(self, ctx: QContext, datum: RootDatum, lam: Weight = None, depth=None):
        self.ctx = ctx
        self.datum = datum
        self.lam = lam
        self.symbolic = lam is None
        if depth is None:
            depth = 6 if datum.rank == 1 else 4
        self.depth = depth
        self._gram_cache = {}
        self._acte_cache = {}
        n = datum.rank
        if self.symbolic:
            self.zero = MultiLaurent(n)
            self.one = MultiLaurent.const(n, 1)
        else:
            self.zero = ctx.zero
            self.one = ctx.one
        # (alpha_i, alpha_j) table, integer valued
        self._aa = [[datum.pair_real(datum.simple_root(i), datum.simple_root(j))
                     for j in range(n)] for i in range(n)]

    # -- scalar helpers -------------------------------------------------------

    def _q_int_pair(self, e):
        """q^e for an integer e in units of the basic form."""
        return q_power(self.ctx, Fraction(e))

    def _k_value(self, i, drop):
        """Value of K_{alpha_i} on the weight space lambda - drop."""
        shift = -sum(self._aa[i][j] * drop[j] for j in range(self.datum.rank))
        if self.symbolic:
            coeff = q_power(self.ctx, Fraction(shift))
            exps = tuple(int(k == i) for k in range(self.datum.rank))
            return MultiLaurent.monomial(self.datum.rank, exps, coeff)
        e = self.datum.pair(self.lam, self.datum.simple_root(i)) + Fraction(shift)
        return q_power(self.ctx, e)

    def _k_value_inv(self, i, drop):
        shift = sum(self._aa[i][j] * drop[j] for j in range(self.datum.rank))
        if self.symbolic:
            coeff = q_power(self.ctx, Fraction(shift))
            exps = tuple(-int(k == i) for k in range(self.datum.rank))
            return MultiLaurent.monomial(self.datum.rank, exps, coeff)
        e = -self.datum.pair(self.lam, self.datum.simple_root(i)) + Fraction(shift)
        return q_power(self.ctx, e)

    def _comm_term(self, i, drop):
        """(K_i - K_i^{-1}) / (q_i - q_i^{-1}) evaluated at lambda - drop."""
        d = self.datum.d[i]
        den = self._q_int_pair(d) - self._q_int_pair(-d)
        num = self._k_value(i, drop) - self._k_value_inv(i, drop)
        if self.symbolic:
            return num * (ES_ONE / den)
        return num / den

    # -- actions ---------------------------------------------------------------

    def act_F(self, i, vec):
        return {(i,) + w: c for w, c in vec.items()}

    def act_E(self, i, vec):
        out = {}
        for w, c in vec.items():
            for w2, c2 in self._act_E_word(i, w).items():
                v = out.get(w2)
                v = c * c2 if v is None else v + c * c2
                if v:
                    out[w2] = v
                elif w2 in out:
                    del out[w2]
        return {w: c for w, c in out.items() if c}

    def _act_E_word(self, i, w):
        key = (i, w)
        hit = self._acte_cache.get(key)
        if hit is not None:
            return hit
        if not w:
            result = {}
        else:
            j, rest = w[0], w[1:]
            result = {}
            for w2, c in self._act_E_word(i, rest).items():
                result[(j,) + w2] = c
            if i == j:
                drop = word_drop(self.datum, rest)
                c = self._comm_term(i, drop)
                if c:
                    prev = result.get(rest)
                    total = c if prev is None else prev + c
                    if total:
                        result[rest] = total
                    elif rest in result:
                        del result[rest]
        self._acte_cache[key] = result
        return result

    # -- contravariant form -----------------------------------------------------

    def gram(self, w1, w2):
        """Sh^lambda(w1 . v, w2 . v)."""
        if word_drop(self.datum, w1) != word_drop(self.datum, w2):
            return self.zero
        key = (w1, w2) if w1 <= w2 else (w2, w1)
        hit = self._gram_cache.get(key)
        if hit is not None:
            return hit
        a, b = key
        if not a:
            result = self.one
        else:
            # Sh(F_i x, y) = chi(K_i^{-1} at wt y) Sh(x, E_i y)
            i, rest = a[0], a[1:]
            drop = word_drop(self.datum, b)
            kinv = self._k_value_inv(i, drop)
            acc = self.zero
            for w2, c in self._act_E_word(i, b).items():
                g = self.gram(rest, w2)
                if g:
                    acc = acc + c * g
            result = kinv * acc
        self._gram_cache[key] = result
        return result

    def gram_matrix(self, words):
        n = len(words)
        mat = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                v = self.gram(words[a], words[b])
                mat[a][b] = v
                mat[b][a] = v
        return mat


@dataclass
class GramBlock:
    lam: object          # Weight, or None in symbolic mode
    nu: tuple
    words: tuple
    matrix: list
    symbolic: bool = False

    def rank(self, ctx: QContext):
        if self.symbolic:
            raise ValueError("rank of a symbolic block needs an evaluation point")
        if ctx.exact:
            return linalg.rank(self.matrix, ctx.one)
        return _numeric_rank_checked(self.matrix)


def _numeric_rank_checked(matrix, tol_factor=1e-8):
    import numpy as np

    a = np.array(matrix, dtype=complex)
    if a.size == 0:
        return 0
    sv = np.linalg.svd(a, compute_uv=False)
    top = sv[0] if len(sv) else 0.0
    if top == 0.0:
        return 0
    cut = tol_factor * top
    if any(cut * 0.1 < s < cut * 10 for s in sv):
        raise RankUnstable("singular values straddle the rank tolerance")
    return int((sv > cut).sum())


def contravariant_gram(ctx: QContext, datum: RootDatum, lam, nu, words=None) -> GramBlock:
    """Gram block of the Shapovalov form on the weight space lambda - nu.

    lam=None gives the symbolic block over z_1..z_N.
    """
    nu = tuple(int(x) for x in nu)
    module = VermaModule(ctx, datum, lam)
    if sum(nu) > module.depth and words is None:
        raise TruncationExceeded("height %d exceeds depth %d" % (sum(nu), module.depth))
    if words is None:
        words = words_of_weight(datum, nu)
    return GramBlock(lam, nu, tuple(words), module.gram_matrix(list(words)),
                     symbolic=lam is None)


def act_E(ctx: QContext, datum: RootDatum, lam: Weight, i, vec):
    """E_i acting on a linear combination of F-words in M(lambda)."""
    if isinstance(vec, tuple):
        vec = {vec: ctx.one}
    return VermaModule(ctx, datum, lam).act_E(i, vec)


def simple_quotient_multiplicities(ctx: QContext, datum: RootDatum, lam: Weight, depth):
    """dim V(lambda)_{lambda - nu} = rank of the Gram block, per nu of height <= depth."""
    module = VermaModule(ctx, datum, lam, depth=depth)
    out = {}
    for nu in _q_plus_up_to(datum, depth):
        words = words_of_weight(datum, nu)
        mat = module.gram_matrix(words)
        if ctx.exact:
            out[nu] = linalg.rank(mat, ctx.one)
        else:
            out[nu] = _numeric_rank_checked(mat)
    return out


def _q_plus_up_to(datum: RootDatum, depth):
    ranges = [range(depth + 1)] * datum.rank
    for nu in itertools.product(*ranges):
        if 0 < sum(nu) <= depth:
            yield nu
    yield (0,) * datum.rank


# ---------------------------------------------------------------------------
# Shapovalov determinant
# ---------------------------------------------------------------------------

@dataclass
class ShapovalovReport:
    nu: tuple
    words: tuple
    determinant: MultiLaurent
    product: MultiLaurent
    factors: list
    quotient: MultiLaurent
    unit_certified: bool


def shapovalov_factors(ctx: QContext, datum: RootDatum, nu):
    """[(beta, m, multiplicity P(nu - m beta))] for the product formula."""
    out = []
    for beta in datum.positive_roots:
        m = 1
        while True:
            rem = tuple(a - m * b for a, b in zip(nu, beta))
            if any(x < 0 for x in rem):
                break
            p = kostant_partition(datum, rem)
            if p:
                out.append((beta, m, p))
            m += 1
    return out


def _factor_poly(ctx: QContext, datum: RootDatum, beta, m):
    """q_beta^{2 (rho, beta^vee)} K_beta - q_beta^{2m} K_beta^{-1}."""
    d_b = datum.root_norm_half(beta)
    rho_pair = datum.pair_real(datum.rho, datum.coroot_weight(beta))
    n = datum.rank
    c1 = q_power(ctx, 2 * d_b * rho_pair)
    c2 = q_power(ctx, Fraction(2 * m) * d_b)
    plus = MultiLaurent.monomial(n, tuple(beta), c1)
    minus = MultiLaurent.monomial(n, tuple(-x for x in beta), c2)
    return plus - minus


def shapovalov_determinant_check(ctx: QContext, datum: RootDatum, nu) -> ShapovalovReport:
    """Compare det(Sh_nu) on a word basis against the product formula, up to a unit."""
    if not ctx.exact:
        raise ValueError("the determinant factorization is an exact-backend computation")
    nu = tuple(int(x) for x in nu)
    p_nu = kostant_partition(datum, nu)
    words = words_of_weight(datum, nu)
    basis = _select_word_basis(ctx, datum, nu, words, p_nu)
    module = VermaModule(ctx, datum, lam=None)
    mat = module.gram_matrix(basis)
    one = MultiLaurent.const(datum.rank, 1)
    det = linalg.det_bareiss(mat, one, _ml_exact_div)
    if det.is_zero():
        raise BasisDegenerate("symbolic determinant vanished on the chosen words")
    product = one
    factors = shapovalov_factors(ctx, datum, nu)
    for beta, m, p in factors:
        product = product * _factor_poly(ctx, datum, beta, m) ** p
    quotient = det.exact_div(product)
    unit = quotient is not None and quotient.is_monomial()
    return ShapovalovReport(nu, tuple(basis), det, product, factors, quotient, unit)


def _ml_exact_div(a, b):
    q = a.exact_div(b)
    if q is None:
        raise ArithmeticError("non-exact division in Bareiss elimination")
    return q


def _select_word_basis(ctx, datum, nu, words, target_rank):
    """A word subset whose Gram minor has generic rank P(nu).

    Very antidominant integral weights are generic for this purpose: no
    factor of the Shapovalov determinant can vanish there.
    """
    if len(words) == target_rank:
        return list(words)
    probe = Weight(tuple(Fraction(-(sum(nu) + 2)) for _ in range(datum.rank)))
    module = VermaModule(ctx, datum, probe)
    basis = []
    rank = 0
    for w in words:
        trial = basis + [w]
        mat = module.gram_matrix(trial)
        r = linalg.rank(mat, ctx.one)
        if r > rank:
            basis = trial
            rank = r
            if rank == target_rank:
                return basis
    raise BasisDegenerate(
        "could not reach generic rank %d on words of weight %s" % (target_rank, (nu,)))


# ---------------------------------------------------------------------------
# Drinfeld pairing on words
# ---------------------------------------------------------------------------

class BorelElement:
    """Linear combination of word * K_mu monomials in U_q(b+) or U_q(b-).

    Words are tuples of simple indices (E-letters on the plus side,
    F-letters on the minus side); mu is in the weight lattice, stored in
    fundamental coordinates as a tuple of ints.
    """

    __slots__ = ("side", "terms")

    def __init__(self, side, terms=None):
        if side not in ("+", "-"):
            raise MalformedWord("side must be '+' or '-'")
        self.side = side
        self.terms = {} if terms is None else {k: v for k, v in terms.items() if v}

    @staticmethod
    def word(side, word, kweight=None, n=None, coeff=None):
        if kweight is None:
            if n is None:
                raise MalformedWord("need rank to build a trivial K-weight")
            kweight = (0,) * n
        return BorelElement(side, {(tuple(word), tuple(int(x) for x in kweight)):
                                   coeff if coeff is not None else ES_ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return BorelElement(self.side, out)

    def scale(self, c):
        return BorelElement(self.side, {k: c * v for k, v in self.terms.items()})


def _word_weight(datum, word):
    """Weight of an E- or F-word (positive root lattice element, fund coords)."""
    acc = [0] * datum.rank
    for i in word:
        for j in range(datum.rank):
            acc[j] += datum.cartan[j][i]
    return tuple(acc)


def _pair_p(datum, mu, nu):
    """(mu, nu) for lattice weights in fundamental coordinates."""
    total = Fraction(0)
    for i, x in enumerate(mu):
        if x:
            for j, y in enumerate(nu):
                if y:
                    total += x * datum.form[i][j] * y
    return total


class DrinfeldPairing:
    """Skew pairing tau: U_q(b+) x U_q(b-) -> scalars, computed recursively."""

    def __init__(self, ctx: QContext, datum: RootDatum):
        self.ctx = ctx
        self.datum = datum
        self._cache = {}

    def _q(self, e):
        return q_power(self.ctx, e)

    def pair(self, x: BorelElement, y: BorelElement):
        if x.side != "+" or y.side != "-":
            raise MalformedWord("pair expects (plus side, minus side)")
        total = self.ctx.zero
        for (xw, xk), cx in x.terms.items():
            for (yw, yk), cy in y.terms.items():
                v = self._pair_words(xw, xk, yw, yk)
                if v:
                    total = total + cx * cy * v
        return total

    def _pair_words(self, xw, xk, yw, yk):
        datum = self.datum
        if _word_weight(datum, xw) != _word_weight(datum, yw):
            return self.ctx.zero
        key = (xw, xk, yw, yk)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not xw:
            result = self._q(-_pair_p(datum, xk, yk)) if not yw else self.ctx.zero
        else:
            i, rest = xw[0], xw[1:]
            d = datum.d[i]
            minus_inv = -(self.ctx.one / (self._q(Fraction(d)) - self._q(Fraction(-d))))
            acc = self.ctx.zero
            for (w1, k1), (w2, k2), c in self._coproduct_terms(yw, yk):
                if w1 == (i,):
                    sub = self._pair_words(rest, xk, w2, k2)
                    if sub:
                        acc = acc + c * sub
            result = minus_inv * acc
        self._cache[key] = result
        return result

    def _coproduct_terms(self, yw, yk):
        """Terms of Delta(F_w K_mu) as ((w1,k1),(w2,k2),coeff) triples."""
        datum = self.datum
        terms = {(((), yk), ((), yk)): self.ctx.one}
        for j in reversed(yw):
            # Delta(F_j) = F_j (x) 1 + K_j^{-1} (x) F_j, multiplied on the left
            alpha_j = _word_weight(datum, (j,))
            new = {}
            for ((w1, k1), (w2, k2)), c in terms.items():
                # F_j (x) 1 branch: F_j * (F_{w1} K_{k1}) needs no commutation
                key1 = (((j,) + w1, k1), (w2, k2))
                _accumulate(new, key1, c)
                # K_j^{-1} (x) F_j branch: K_j^{-1} past F_{w1} gives a q-factor
                f = self._q(_pair_p(datum, alpha_j, _word_weight(datum, w1)))
                kk1 = tuple(a - b for a, b in zip(k1, alpha_j))
                key2 = ((w1, kk1), ((j,) + w2, k2))
                _accumulate(new, key2, c * f)
            terms = new
        return [(k[0], k[1], v) for k, v in terms.items()]


def _accumulate(d, key, value):
    cur = d.get(key)
    cur = value if cur is None else cur + value
    if cur:
        d[key] = cur
    elif key in d:
        del d[key]


def drinfeld_pair(ctx: QContext, datum: RootDatum, x: BorelElement, y: BorelElement):
    return DrinfeldPairing(ctx, datum).pair(x, y)


# ---------------------------------------------------------------------------
# Mixed normal ordering and the Harish-Chandra projection
# ---------------------------------------------------------------------------

class MixedElement:
    """Element of U_q(g) in triangular normal order: F-word * K * E-word.

    K-parts are tracked in root-lattice coordinates (integer multiples of
    the alpha_i), which is all the commutation relations produce.
    """

    __slots__ = ("datum", "terms")

    def __init__(self, datum, terms=None):
        self.datum = datum
        self.terms = {} if terms is None else {k: v for k, v in terms.items() if v}

    @staticmethod
    def from_eword(ctx, datum, ew):
        return MixedElement(datum, {((), (0,) * datum.rank, tuple(ew)): ctx.one})

    @staticmethod
    def from_fword(ctx, datum, fw):
        return MixedElement(datum, {(tuple(fw), (0,) * datum.rank, ()): ctx.one})


def _aa_pair(datum, kvec, j):
    """(sum_i kvec_i alpha_i, alpha_j)."""
    return sum(kvec[i] * datum.pair_real(datum.simple_root(i), datum.simple_root(j))
               for i in range(datum.rank))


def mixed_mul(ctx: QContext, a: MixedElement, b: MixedElement) -> MixedElement:
    datum = a.datum
    out = {}
    for (fw1, k1, ew1), c1 in a.terms.items():
        for (fw2, k2, ew2), c2 in b.terms.items():
            base = c1 * c2
            for (fw_m, k_m, ew_m), cm in _reorder_e_through_f(ctx, datum, ew1, fw2).terms.items():
                # assemble fw1 . K_{k1} . (fw_m K_{k_m} ew_m) . K_{k2} . ew2
                coeff = base * cm
                shift = Fraction(0)
                for j in fw_m:
                    shift -= _aa_pair(datum, k1, j)
                # ew_m past K_{k2}
                for j in ew_m:
                    shift -= _aa_pair(datum, k2, j)
                coeff = coeff * q_power(ctx, shift)
                key = (fw1 + fw_m,
                       tuple(x + y + z for x, y, z in zip(k1, k_m, k2)),
                       ew_m + ew2)
                _accumulate(out, key, coeff)
    return MixedElement(datum, out)


def _reorder_e_through_f(ctx: QContext, datum: RootDatum, ew, fw) -> MixedElement:
    """Normal ordering of E_{ew} . F_{fw}."""
    result = MixedElement(datum, {(tuple(fw), (0,) * datum.rank, ()): ctx.one})
    for e in reversed(ew):
        new = {}
        for (fw2, kv, ew2), c in result.terms.items():
            # push E_e through fw2, then past K_{kv}
            for (fw3, kv3, has_e), c3 in _push_single_e(ctx, datum, e, fw2).items():
                coeff = c * c3
                tail_e = (e,) + ew2 if has_e else ew2
                if has_e:
                    coeff = coeff * q_power(ctx, -_aa_pair(datum, kv, e))
                _accumulate(new, (fw3, tuple(x + y for x, y in zip(kv, kv3)), tail_e), coeff)
        result = MixedElement(datum, new)
    return result


def _push_single_e(ctx: QContext, datum: RootDatum, e, fw):
    """E_e . F_{fw} = F_{fw} E_e + commutator terms, as {(fw', kvec, has_e): coeff}."""
    out = {(tuple(fw), (0,) * datum.rank, True): ctx.one}
    d = datum.d[e]
    den = q_power(ctx, Fraction(d)) - q_power(ctx, Fraction(-d))
    for t, j in enumerate(fw):
        if j != e:
            continue
        removed = tuple(fw[:t] + fw[t + 1:])
        tail = fw[t + 1:]
        shift = Fraction(0)
        for u in tail:
            shift += _aa_pair(datum, tuple(int(x == e) for x in range(datum.rank)), u)
        plus_k = tuple(int(x == e) for x in range(datum.rank))
        minus_k = tuple(-int(x == e) for x in range(datum.rank))
        c_plus = q_power(ctx, -shift) / den
        c_minus = -(q_power(ctx, shift) / den)
        _accumulate(out, (removed, plus_k, False), c_plus)
        _accumulate(out, (removed, minus_k, False), c_minus)
    return out


def hc_projection(ctx: QContext, datum: RootDatum, eword, fword):
    """P(E_{eword} . F_{fword}) as {kvec (root coords): scalar}."""
    x = MixedElement.from_eword(ctx, datum, eword)
    y = MixedElement.from_fword(ctx, datum, fword)
    prod = mixed_mul(ctx, x, y)
    out = {}
    for (fw, kv, ew), c in prod.terms.items():
        if not fw and not ew:
            _accumulate(out, kv, c)
    return out


# ---------------------------------------------------------------------------
# Embeddings, BGG multiplicities
# ---------------------------------------------------------------------------

def verma_embedding_witness(ctx: QContext, datum: RootDatum, lam: Weight, i, k):
    """The primitive vector F_i^m v generating M(s_{k,alpha_i}.lam), if any."""
    lam = datum.reduce(lam)
    alpha = tuple(int(x == i) for x in range(datum.rank))
    e = datum.pair_coroot(lam + datum.rho, alpha)
    d_i = datum.d[i]
    im2 = 2 * d_i * e.imag
    if not (isinstance(e.real, Fraction) and e.real.denominator == 1 and e.real >= 0):
        raise NotEmbeddable("Re(lam+rho, alpha_i^vee) = %s is not a nonnegative integer" % (e.real,))
    if im2.denominator != 1 or int(im2) % 2 != k % 2:
        raise NotEmbeddable("imaginary part does not match k = %d" % (k,))
    m = int(e.real)
    word = (i,) * m
    module = VermaModule(ctx, datum, lam)
    for j in range(datum.rank):
        if module.act_E(j, {word: ctx.one}):
            raise AssertionError("F_%d^%d v is unexpectedly not primitive" % (i, m))
    return word


@dataclass
class CompositionTable:
    lam: Weight
    entries: list                     # [(mu, multiplicity)]
    support_matches_strong_linkage: bool
    strong_linkage: dict = field(repr=False, default=None)


def bgg_multiplicity_check(ctx: QContext, datum: RootDatum, lam: Weight, depth) -> CompositionTable:
    """Solve ch M(lam) = sum [M(lam):V(mu)] ch V(mu) by triangular elimination."""
    lam = datum.reduce(lam)
    if not lam.is_integral():
        raise ValueError("decidable character elimination needs an integral block")
    orbit = linkage_orbit(datum, lam)
    candidates = []
    for mu in orbit:
        if not mu.is_real():
            continue
        diff = datum.weight_in_root_lattice(lam - mu)
        if diff is None or any(x.denominator != 1 or x < 0 for x in diff):
            continue
        nu = tuple(int(x) for x in diff)
        if sum(nu) > depth:
            raise TruncationExceeded(
                "linkage class member at height %d is outside the window %d" % (sum(nu), depth))
        candidates.append((nu, mu))
    candidates.sort(key=lambda t: (sum(t[0]), t[0]))
    # residual character of M(lam) on the window, indexed by drop nu
    residual = {nu: kostant_partition(datum, nu) for nu in _q_plus_up_to(datum, depth)}
    entries = []
    for nu0, mu in candidates:
        mult = residual.get(nu0, 0)
        if mult == 0:
            continue
        entries.append((mu, mult))
        simple_dims = simple_quotient_multiplicities(ctx, datum, mu, depth - sum(nu0))
        for nu, dim in simple_dims.items():
            key = tuple(a + b for a, b in zip(nu0, nu))
            if key in residual:
                residual[key] -= mult * dim
    if any(v < 0 for v in residual.values()):
        raise AssertionError("negative residual multiplicity; elimination failed")
    strong = strong_linkage_up(datum, lam, depth)
    support = {mu for mu, m in entries if m}
    matches = support == set(strong.keys())
    return CompositionTable(lam, entries, matches, strong)
