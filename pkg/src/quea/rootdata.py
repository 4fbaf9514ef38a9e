"""Root data for finite Cartan types: weight arithmetic, Weyl and extended
Weyl group actions, Kostant partition function, dominance and linkage.

Conventions: weights live in the fundamental-weight basis (coordinates are
the coroot pairings), roots in the simple-root basis with integer
coordinates, and the invariant form is normalized so short roots have
square length 2.  Imaginary parts of weights are tracked in units of
hbar^{-1} and reduced modulo the coroot lattice, mirroring the parameter
space h*_q of the exponential ground field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotReduced
from .scalars import PhasedExponent

_BUILTIN = {
    "A1": ([[2]], [1]),
    "A2": ([[2, -1], [-1, 2]], [1, 1]),
    "A3": ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 1, 1]),
    "B2": ([[2, -1], [-2, 2]], [2, 1]),
    "G2": ([[2, -3], [-1, 2]], [1, 3]),
}


def _frac_mat_inv(m):
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


class Weight:
    """Element of h*_q: rational real and imaginary coordinates in the
    fundamental-weight basis, imaginary part in units of hbar^{-1}."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = tuple(x if isinstance(x, (Fraction, float)) else Fraction(x) for x in re)
        if im is None:
            im = (Fraction(0),) * len(self.re)
        self.im = tuple(x if isinstance(x, (Fraction, float)) else Fraction(x) for x in im)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.re, other.re)),
                      tuple(a + b for a, b in zip(self.im, other.im)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.re, other.re)),
                      tuple(a - b for a, b in zip(self.im, other.im)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.re), tuple(-a for a in self.im))

    def scale(self, c):
        c = Fraction(c)
        return Weight(tuple(a * c for a in self.re), tuple(a * c for a in self.im))

    def is_real(self):
        return all(x == 0 for x in self.im)

    def is_integral(self):
        return self.is_real() and all(
            isinstance(x, Fraction) and x.denominator == 1 for x in self.re)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.is_real():
            return "Weight(%s)" % (list(self.re),)
        return "Weight(%s, im=%s)" % (list(self.re), list(self.im))


class RootDatum:
    """Immutable root datum generated from a finite Cartan matrix."""

    def __init__(self, cartan, d=None, L=None, label=None):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.rank = len(self.cartan)
        if d is None:
            d = _symmetrizers(self.cartan)
        self.d = tuple(int(x) for x in d)
        for i in range(self.rank):
            for j in range(self.rank):
                if self.d[i] * self.cartan[i][j] != self.d[j] * self.cartan[j][i]:
                    raise ValueError("Cartan matrix is not symmetrizable by d")
        # form matrix (w_i, w_j) = d_i * (A^{-1})_{ij}
        ainv = _frac_mat_inv(self.cartan)
        self.form = tuple(tuple(self.d[i] * ainv[i][j] for j in range(self.rank))
                          for i in range(self.rank))
        lcm = 1
        for row in self.form:
            for x in row:
                lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        self.L = int(L) if L is not None else lcm
        if self.L % lcm != 0:
            raise ValueError("L must be a multiple of the lattice constant %d" % lcm)
        self.label = label or ("rank%d" % self.rank)
        # coroot basis matrix: column i = fundamental coords of alpha_i^vee
        self._coroot_cols = tuple(
            tuple(Fraction(self.cartan[j][i], self.d[i]) for j in range(self.rank))
            for i in range(self.rank))
        m = [[self._coroot_cols[i][j] for i in range(self.rank)] for j in range(self.rank)]
        self._coroot_inv = _frac_mat_inv(m)
        self.rho = Weight((Fraction(1),) * self.rank)
        self._pos_roots = self._reflection_closure()
        self.longest_word = self._find_longest_word()
        if len(self.longest_word) != len(self._pos_roots):
            raise NotReduced("longest word length disagrees with root count")
        self._kostant_cache = {}
        self._weyl = None

    @classmethod
    def from_type(cls, name, L=None):
        name = name.upper()
        if name not in _BUILTIN:
            raise ValueError("unknown type %r (have %s)" % (name, sorted(_BUILTIN)))
        cartan, d = _BUILTIN[name]
        return cls(cartan, d, L=L, label=name)

    # -- basic conversions ---------------------------------------------------

    def root_to_weight(self, root) -> Weight:
        """Simple-root coordinates -> fundamental-weight coordinates."""
        return Weight(tuple(
            Fraction(sum(self.cartan[i][j] * root[j] for j in range(self.rank)))
            for i in range(self.rank)))

    def simple_root(self, i) -> Weight:
        return self.root_to_weight(tuple(int(k == i) for k in range(self.rank)))

    def fundamental_weight(self, i) -> Weight:
        return Weight(tuple(Fraction(int(k == i)) for k in range(self.rank)))

    def root_norm_half(self, root) -> Fraction:
        """d_beta = (beta, beta)/2 for beta in root coordinates."""
        w = self.root_to_weight(root)
        return self.pair_real(w, w) / 2

    def coroot_weight(self, root) -> Weight:
        """beta^vee as a real weight."""
        db = self.root_norm_half(root)
        return self.root_to_weight(root).scale(Fraction(1, 1) / db)

    # -- bilinear form -------------------------------------------------------

    def pair_real(self, a: Weight, b: Weight) -> Fraction:
        total = Fraction(0)
        for i, x in enumerate(a.re):
            if x:
                row = self.form[i]
                for j, y in enumerate(b.re):
                    if y:
                        total += x * row[j] * y
        return total

    def pair(self, lam: Weight, mu: Weight) -> PhasedExponent:
        """(lam, mu) with mu real: returns the exponent of q."""
        if not mu.is_real():
            raise ValueError("second argument must be a real weight")
        re = self.pair_real(Weight(lam.re), mu)
        im = self.pair_real(Weight(lam.im), mu)
        return PhasedExponent(re, im)

    def pair_coroot(self, lam: Weight, root) -> PhasedExponent:
        return self.pair(lam, self.coroot_weight(root))

    def height(self, root) -> int:
        return sum(root)

    def weight_in_root_lattice(self, w: Weight):
        """Root coordinates of a real weight, or None if outside Q (x) Q."""
        if not w.is_real():
            return None
        # solve A^T? recall fundamental coords = A @ root coords
        coords = _solve_frac([[Fraction(self.cartan[i][j]) for j in range(self.rank)]
                              for i in range(self.rank)], list(w.re))
        return tuple(coords) if coords is not None else None

    # -- reduction mod i hbar^{-1} Q^vee --------------------------------------

    def reduce(self, w: Weight) -> Weight:
        """Canonical representative modulo i hbar^{-1} Q^vee."""
        if all(isinstance(x, Fraction) for x in w.im):
            t = [sum(self._coroot_inv[i][j] * w.im[j] for j in range(self.rank))
                 for i in range(self.rank)]
            t = [x - x.__floor__() for x in t]
            im = tuple(sum(self._coroot_cols[i][j] * t[i] for i in range(self.rank))
                       for j in range(self.rank))
            return Weight(w.re, im)
        return w

    def shift_imag_coroot(self, w: Weight, coro_coeffs) -> Weight:
        """w + i hbar^{-1} * sum_i c_i alpha_i^vee."""
        im = list(w.im)
        for i, c in enumerate(coro_coeffs):
            if c:
                for j in range(self.rank):
                    im[j] += Fraction(c) * self._coroot_cols[i][j]
        return self.reduce(Weight(w.re, tuple(im)))

    # -- positive roots and Weyl group ----------------------------------------

    def _reflection_closure(self):
        simples = [tuple(int(k == i) for k in range(self.rank)) for i in range(self.rank)]
        roots = set(simples)
        frontier = set(simples)
        while frontier:
            new = set()
            for r in frontier:
                for i in range(self.rank):
                    img = self.reflect_root(i, r)
                    if img not in roots and all(x >= 0 for x in img):
                        new.add(img)
            roots |= new
            frontier = new
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    def reflect_root(self, i, root):
        """s_i acting on simple-root coordinates."""
        pairing = sum(self.cartan[i][j] * root[j] for j in range(self.rank))
        out = list(root)
        out[i] -= pairing
        return tuple(out)

    @property
    def positive_roots(self):
        return self._pos_roots

    def _find_longest_word(self):
        word = []
        lam = self.rho
        while True:
            for i in range(self.rank):
                if lam.re[i] > 0:
                    lam = self.reflect_weight(i, lam)
                    word.append(i)
                    break
            else:
                break
        return tuple(word)

    def reflect_weight(self, i, w: Weight) -> Weight:
        ai = self.simple_root(i)
        re = tuple(x - w.re[i] * a for x, a in zip(w.re, ai.re))
        im = tuple(x - w.im[i] * a for x, a in zip(w.im, ai.re))
        return Weight(re, im)

    def act_word(self, word, w: Weight) -> Weight:
        # word (i_1 .. i_k) acts as s_{i_1} s_{i_2} ... s_{i_k}
        for i in reversed(word):
            w = self.reflect_weight(i, w)
        return w

    def dot_action(self, word, lam: Weight) -> Weight:
        return self.act_word(word, lam + self.rho) - self.rho

    def weyl_elements(self):
        """All Weyl group elements as reduced words, generated once."""
        if self._weyl is None:
            seen = {}
            start = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
            queue = [((), start)]
            seen[start] = ()
            while queue:
                word, mats = queue.pop(0)
                for i in range(self.rank):
                    new_mats = tuple(self.reflect_root(i, r) for r in mats)
                    if new_mats not in seen:
                        new_word = (i,) + word
                        seen[new_mats] = new_word
                        queue.append((new_word, new_mats))
            self._weyl = sorted(seen.values(), key=lambda w: (len(w), w))
        return self._weyl

    def word_length(self, word):
        return sum(1 for r in self._pos_roots
                   if any(x < 0 for x in self._act_word_root(word, r)))

    def _act_word_root(self, word, root):
        for i in reversed(word):
            root = self.reflect_root(i, root)
        return root

    def embed_sl2_number(self, lam: Weight, root):
        """Restriction lam_alpha = (lam, alpha^vee)/2 as a PhasedExponent."""
        e = self.pair_coroot(lam, root)
        return PhasedExponent(Fraction(e.real, 2) if isinstance(e.real, Fraction) else e.real / 2,
                              Fraction(e.imag, 2) if isinstance(e.imag, Fraction) else e.imag / 2)

    def __repr__(self):
        return "RootDatum(%s, L=%d)" % (self.label, self.L)


def _symmetrizers(cartan):
    n = len(cartan)
    d = [0] * n
    d[0] = 1
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if cartan[i][j] and d[i] and not d[j]:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * cartan[i][j] // cartan[j][i]
                    changed = True
    if any(x <= 0 for x in d):
        raise ValueError("could not symmetrize Cartan matrix")
    g = _gcd_list(d)
    return [x // g for x in d]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _gcd_list(xs):
    g = 0
    for x in xs:
        g = _gcd(g, x)
    return g


def _solve_frac(mat, rhs):
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            return None
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [aug[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def positive_roots_from_word(datum: RootDatum, word=None):
    """beta_r = s_{i_1} .. s_{i_{r-1}} alpha_{i_r} in convex PBW order."""
    if word is None:
        word = datum.longest_word
    roots = []
    for r in range(len(word)):
        root = tuple(int(k == word[r]) for k in range(datum.rank))
        for i in reversed(word[:r]):
            root = datum.reflect_root(i, root)
        roots.append(root)
    if len(set(roots)) != len(roots) or any(min(r) < 0 for r in roots):
        raise NotReduced("word %r is not reduced" % (word,))
    if set(roots) != set(datum.positive_roots):
        raise NotReduced("word %r does not produce all positive roots" % (word,))
    return tuple(roots)


def kostant_partition(datum: RootDatum, nu) -> int:
    """Number of ways to write nu (root coordinates) as a sum of positive roots."""
    nu = tuple(int(x) for x in nu)
    if any(x < 0 for x in nu):
        return 0
    roots = datum.positive_roots
    cache = datum._kostant_cache

    def count(v, j):
        if all(x == 0 for x in v):
            return 1
        if j >= len(roots):
            return 0
        key = (v, j)
        hit = cache.get(key)
        if hit is not None:
            return hit
        total = 0
        beta = roots[j]
        w = v
        while all(x >= 0 for x in w):
            total += count(w, j + 1)
            w = tuple(a - b for a, b in zip(w, beta))
        cache[key] = total
        return total

    return count(nu, 0)


@dataclass
class WeightClassification:
    dominant: bool
    antidominant: bool
    regular: bool
    delta_lambda: tuple
    numeric_warning: bool = False


def classify_weight(datum: RootDatum, lam: Weight, tol=1e-9) -> WeightClassification:
    """Dominance / antidominance / regularity and the integral subsystem."""
    lam = datum.reduce(lam)
    numeric = any(isinstance(x, float) for x in lam.re + lam.im)
    shifted = lam + datum.rho
    delta = []
    dominant = True
    antidominant = True
    for alpha in datum.positive_roots:
        d_a = datum.root_norm_half(alpha)
        e = datum.pair_coroot(shifted, alpha)
        integral, n = _is_half_period_integer(e, d_a, numeric, tol)
        if integral:
            delta.append(alpha)
            if n >= 1:
                antidominant = False
            if n <= -1:
                dominant = False
    regular = _is_regular(datum, lam)
    return WeightClassification(dominant, antidominant, regular, tuple(delta), numeric)


def _is_half_period_integer(e: PhasedExponent, d_a, numeric, tol):
    """Whether q_alpha^e lies in +-q_alpha^Z, and the integer part."""
    if numeric:
        re = float(e.real)
        n = round(re)
        ok_re = abs(re - n) <= tol
        im2 = 2 * float(d_a) * float(e.imag)
        ok_im = abs(im2 - round(im2)) <= tol
        return ok_re and ok_im, n
    ok_re = e.real.denominator == 1
    ok_im = (2 * d_a * e.imag).denominator == 1
    return ok_re and ok_im, int(e.real) if ok_re else 0


def _is_regular(datum: RootDatum, lam: Weight) -> bool:
    lam = datum.reduce(lam)
    for word in datum.weyl_elements():
        for shift in itertools.product((0, 1), repeat=datum.rank):
            if not word and not any(shift):
                continue
            img = datum.dot_action(word, lam)
            img = datum.shift_imag_coroot(img, [Fraction(c, 2) for c in shift])
            if img == lam:
                return False
    return True


def linkage_orbit(datum: RootDatum, lam: Weight):
    """Orbit of lam under the shifted extended Weyl group action."""
    lam = datum.reduce(lam)
    out = set()
    for word in datum.weyl_elements():
        base = datum.dot_action(word, lam)
        for shift in itertools.product((0, 1), repeat=datum.rank):
            out.add(datum.shift_imag_coroot(base, [Fraction(c, 2) for c in shift]))
    return out


def descent_candidates(datum: RootDatum, lam: Weight):
    """All (k, alpha, mu) with mu = s_{k,alpha}.lam < lam."""
    lam = datum.reduce(lam)
    shifted = lam + datum.rho
    out = []
    for alpha in datum.positive_roots:
        d_a = datum.root_norm_half(alpha)
        e = datum.pair_coroot(shifted, alpha)
        if not isinstance(e.real, Fraction) or e.real.denominator != 1 or e.real < 1:
            continue
        im2 = 2 * d_a * e.imag
        if im2.denominator != 1:
            continue
        k = int(im2) % 2
        m = int(e.real)
        drop = datum.root_to_weight(alpha).scale(m)
        mu = datum.reduce(Weight(tuple(a - b for a, b in zip(lam.re, drop.re)), lam.im))
        out.append((k, alpha, mu, m))
    return out


def strong_linkage_up(datum: RootDatum, lam: Weight, depth: int):
    """Weights strongly linked to lam within the given height window.

    Returns a dict mu -> chain, the chain being a tuple of (k, alpha) steps
    applied from the right as in the definition of the relation.
    """
    lam = datum.reduce(lam)
    found = {lam: ()}
    frontier = [(lam, (), 0)]
    while frontier:
        nu, chain, used = frontier.pop()
        for k, alpha, mu, m in descent_candidates(datum, nu):
            if used + m * datum.height(alpha) > depth:
                continue
            step_chain = ((k, alpha),) + chain
            if mu not in found:
                found[mu] = step_chain
                frontier.append((mu, step_chain, used + m * datum.height(alpha)))
    return found


# ---------------------------------------------------------------------------
# Classical oracles: Freudenthal multiplicities, Weyl dimension, tensor rule
# ---------------------------------------------------------------------------

def dominant_conjugate(datum: RootDatum, w: Weight):
    """(dominant representative, sign of the chamber-walking word, stabilized?)."""
    sign = 1
    cur = w
    while True:
        for i in range(datum.rank):
            if cur.re[i] < 0:
                cur = datum.reflect_weight(i, cur)
                sign = -sign
                break
        else:
            return cur, sign


def freudenthal_multiplicities(datum: RootDatum, mu: Weight):
    """Classical weight multiplicities of V(mu) via Freudenthal's recursion."""
    if not mu.is_integral() or any(x < 0 for x in mu.re):
        raise ValueError("mu must be dominant integral")
    rho = datum.rho
    mu_rho_sq = datum.pair_real(mu + rho, mu + rho)
    mults = {mu: 1}
    pos_weights = [datum.root_to_weight(a) for a in datum.positive_roots]
    # enumerate mu - Q^+ level by level while multiplicities persist
    level = [mu]
    while level:
        next_level = set()
        for w in level:
            for i in range(datum.rank):
                cand = w - datum.simple_root(i)
                dom, _ = dominant_conjugate(datum, cand)
                if _le_dominance(datum, dom, mu):
                    next_level.add(cand)
        next_level = sorted(next_level - set(mults), key=lambda v: tuple(v.re))
        for nu in next_level:
            acc = Fraction(0)
            for aw in pos_weights:
                k = 1
                while True:
                    hi = nu + aw.scale(k)
                    m = mults.get(hi)
                    if m is None:
                        dom, _ = dominant_conjugate(datum, hi)
                        if not _le_dominance(datum, dom, mu):
                            break
                        m = 0
                    if m:
                        acc += m * datum.pair_real(hi, aw)
                    k += 1
            denom = mu_rho_sq - datum.pair_real(nu + rho, nu + rho)
            mults[nu] = int(2 * acc / denom) if denom else 0
        level = [w for w in next_level if mults.get(w)]
    return {w: m for w, m in mults.items() if m}


def _le_dominance(datum: RootDatum, a: Weight, b: Weight) -> bool:
    """a <= b in the dominance order (difference in Q^+), both real."""
    diff = b - a
    coords = datum.weight_in_root_lattice(diff)
    if coords is None:
        return False
    return all(x.denominator == 1 and x >= 0 for x in coords)


def weyl_dimension(datum: RootDatum, mu: Weight) -> int:
    num = Fraction(1)
    den = Fraction(1)
    rho = datum.rho
    for alpha in datum.positive_roots:
        aw = datum.root_to_weight(alpha)
        num *= datum.pair_real(mu + rho, aw)
        den *= datum.pair_real(rho, aw)
    val = num / den
    assert val.denominator == 1
    return int(val)


def tensor_decompose(datum: RootDatum, mu1: Weight, mu2: Weight):
    """Multiplicities of V(sigma) in V(mu1) (x) V(mu2), by Brauer-Klimyk."""
    out = {}
    rho = datum.rho
    for eta, mult in freudenthal_multiplicities(datum, mu1).items():
        xi = mu2 + rho + eta
        dom, sign = dominant_conjugate(datum, xi)
        if any(x == 0 for x in dom.re):
            continue
        sigma = dom - rho
        out[sigma] = out.get(sigma, 0) + sign * mult
    return {s: m for s, m in out.items() if m}
