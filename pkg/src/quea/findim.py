"""Finite-dimensional simple modules V(mu) as explicit matrices, braid
operators, quantum root vectors, the truncated universal R-matrix, quantum
traces and the sl2 Casimir.

Modules are built level by level from the contravariant form: candidates
F_i . b are filtered by the rank of their Gram matrix, so the defining
relations hold by construction and the dimension of every weight space is
certified against the classical Freudenthal multiplicity.  Root vectors
exist only as matrices, obtained by conjugating generator matrices with
braid operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DimensionCapExceeded, NotReduced, WrongType
from .linalg import ColMat
from .rootdata import (RootDatum, Weight, freudenthal_multiplicities,
                       positive_roots_from_word, weyl_dimension)
from .scalars import QContext, q_power, q_int, q_factorial, q_exp_coefficients


class ModuleRep:
    """Explicit matrices for E_i, F_i and diagonal K_lambda on a weight basis."""

    def __init__(self, ctx, datum, mu, weights, e_ops, f_ops, labels=None):
        self.ctx = ctx
        self.datum = datum
        self.mu = mu                      # highest weight, or None for tensor products
        self.weights = list(weights)     # Weight per basis index
        self.dim = len(self.weights)
        self.e_ops = e_ops               # list of ColMat per simple index
        self.f_ops = f_ops
        self.labels = labels

    def k_diag(self, lam: Weight):
        """Diagonal scalars of K_lam."""
        return [q_power(self.ctx, self.datum.pair(lam, w)) for w in self.weights]

    def k_op(self, lam: Weight) -> ColMat:
        return ColMat.diagonal(self.k_diag(lam))

    def k_simple(self, i, power=1) -> ColMat:
        return self.k_op(self.datum.simple_root(i).scale(power))

    def weight_indices(self, w: Weight):
        return [b for b, wb in enumerate(self.weights) if wb == w]

    def identity(self) -> ColMat:
        return ColMat.identity(self.dim, self.ctx.one)

    def __repr__(self):
        return "ModuleRep(%s, mu=%r, dim=%d)" % (self.datum.label, self.mu, self.dim)


_module_cache = {}


def build_simple_module(ctx: QContext, datum: RootDatum, mu, dim_cap=200,
                        basis="normalized") -> ModuleRep:
    """The simple module V(mu) for dominant integral mu.

    For rank one the basis is the normalized one v_(j) with
    F v_(j) = [n-j+1] v_(j-1) and E v_(j) = [n+j+1] v_(j+1); pass
    basis="defining" with mu = 1 to get instead the standard 2x2 matrices
    with E = q^{-1/2} E_{12}.  Higher rank uses the contravariant-form
    construction.  Built modules are immutable and cached.
    """
    mu = _as_dominant_weight(datum, mu)
    key = (id(ctx), id(datum), mu.re, basis)
    hit = _module_cache.get(key)
    if hit is not None:
        return hit
    dim = weyl_dimension(datum, mu)
    if dim > dim_cap:
        raise DimensionCapExceeded("dim V(mu) = %d exceeds cap %d" % (dim, dim_cap))
    if datum.rank == 1:
        rep = _sl2_module(ctx, datum, mu, basis)
    elif basis != "normalized":
        raise ValueError("alternative bases are a rank-one feature")
    else:
        rep = _gram_module(ctx, datum, mu, dim)
    _module_cache[key] = rep
    return rep


def _as_dominant_weight(datum, mu):
    if isinstance(mu, (int, Fraction)):
        # rank-one shorthand: spin n -> highest weight 2n varpi
        if datum.rank != 1:
            raise WrongType("scalar highest weight only makes sense in rank one")
        two_n = Fraction(2 * Fraction(mu))
        if two_n.denominator != 1:
            raise ValueError("spin must be a half-integer")
        mu = Weight((two_n,))
    if not mu.is_integral() or any(x < 0 for x in mu.re):
        raise ValueError("highest weight must be dominant integral")
    return mu


def _sl2_module(ctx, datum, mu, basis):
    m = int(mu.re[0])                  # mu = 2n varpi
    dim = m + 1
    weights = [Weight((Fraction(m - 2 * k),)) for k in range(dim)]
    if basis == "defining":
        if m != 1:
            raise ValueError("the defining basis is the 2-dimensional module")
        half = Fraction(1, 2)
        e_col = {0: q_power(ctx, -half)}
        f_col = {1: q_power(ctx, half)}
        e = ColMat(2, [{}, e_col])
        f = ColMat(2, [f_col, {}])
        return ModuleRep(ctx, datum, mu, weights, [e], [f])
    if basis != "normalized":
        raise ValueError("unknown basis %r" % (basis,))
    d = datum.d[0]
    # index k holds v_(j) with j = n - k (in units of the weight, j = (m - 2k)/2)
    e_cols, f_cols = [], []
    for k in range(dim):
        # E v_(j) = [n + j + 1] v_(j+1): index k -> k - 1 with n + j + 1 = m - k + 1
        e_cols.append({k - 1: q_int(ctx, m - k + 1, d)} if k > 0 else {})
        # F v_(j) = [n - j + 1] v_(j-1): index k -> k + 1 with n - j + 1 = k + 1
        f_cols.append({k + 1: q_int(ctx, k + 1, d)} if k < dim - 1 else {})
    labels = [(0,) * k for k in range(dim)]
    return ModuleRep(ctx, datum, mu, weights,
                     [ColMat(dim, e_cols)], [ColMat(dim, f_cols)], labels)


def _gram_module(ctx, datum, mu, dim):
    n = datum.rank
    mults = freudenthal_multiplicities(datum, mu)
    by_drop = {}
    for w, m in mults.items():
        coords = datum.weight_in_root_lattice(mu - w)
        by_drop[tuple(int(x) for x in coords)] = m
    max_ht = max(sum(d) for d in by_drop)
    simple_pair = [[datum.pair_real(datum.simple_root(i), datum.simple_root(j))
                    for j in range(n)] for i in range(n)]
    mu_pair = [datum.pair_real(mu, datum.simple_root(i)) for i in range(n)]

    def comm_scalar(i, drop):
        # (K_i - K_i^{-1})/(q_i - q_i^{-1}) at weight mu - drop
        e = mu_pair[i] - sum(simple_pair[i][j] * drop[j] for j in range(n))
        num = q_power(ctx, e) - q_power(ctx, -e)
        den = q_power(ctx, Fraction(datum.d[i])) - q_power(ctx, Fraction(-datum.d[i]))
        return num / den

    # per level: index lists, gram matrices, sparse E/F actions between levels
    levels = {(0,) * n: [0]}
    grams = {(0,) * n: [[ctx.one]]}
    weights = [mu]
    labels = [()]
    e_entries = [dict() for _ in range(n)]   # global col -> {global row: scalar}
    f_entries = [dict() for _ in range(n)]
    drops_by_height = sorted(by_drop, key=lambda t: (sum(t), t))
    for drop in drops_by_height:
        h = sum(drop)
        if h == 0:
            continue
        target = by_drop[drop]
        # candidates (i, b) with b a basis index at drop - alpha_i
        cands = []
        for i in range(n):
            if drop[i] == 0:
                continue
            prev = tuple(drop[j] - int(j == i) for j in range(n))
            for b in levels.get(prev, []):
                cands.append((i, b, prev))
        # E_j action on each candidate: E_j F_i b = F_i E_j b + delta_ij [K;..] b
        cand_e = []
        for (i, b, prev) in cands:
            acts = {}
            for j in range(n):
                vec = {}
                for r, c in e_entries[j].get(b, {}).items():
                    for r2, c2 in f_entries[i].get(r, {}).items():
                        _acc(vec, r2, c * c2)
                if j == i:
                    _acc(vec, b, comm_scalar(i, tuple(prev)))
                if vec:
                    acts[j] = vec
            cand_e.append(acts)
        # gram of candidates via Sh(F_i b, c) = kinv * <E_i c, b>_gram
        m = len(cands)
        G = [[ctx.zero] * m for _ in range(m)]
        for a, (i, b, prev) in enumerate(cands):
            kinv_e = -(mu_pair[i] - sum(simple_pair[i][j] * drop[j] for j in range(n)))
            kinv = q_power(ctx, kinv_e)
            gprev = grams[prev]
            idx_prev = {g: t for t, g in enumerate(levels[prev])}
            for c in range(m):
                eic = cand_e[c].get(i, {})
                acc = ctx.zero
                for r, coeff in eic.items():
                    t = idx_prev.get(r)
                    if t is not None:
                        acc = acc + coeff * gprev[idx_prev[b]][t]
                G[a][c] = kinv * acc
        # select a basis subset of the candidates
        chosen = []
        rank = 0
        for c in range(m):
            trial = chosen + [c]
            sub = [[G[x][y] for y in trial] for x in trial]
            r = linalg.rank(sub, ctx.one)
            if r > rank:
                chosen.append(c)
                rank = r
                if rank == target:
                    break
        if rank != target:
            raise AssertionError(
                "weight space rank %d disagrees with classical multiplicity %d at %s"
                % (rank, target, (drop,)))
        base = len(weights)
        new_indices = list(range(base, base + target))
        levels[drop] = new_indices
        w_here = mu - datum.root_to_weight(drop)
        weights.extend([w_here] * target)
        for c_local, c in enumerate(chosen):
            i, b, prev = cands[c]
            labels.append((i,) + labels[b])
        gsub = [[G[x][y] for y in chosen] for x in chosen]
        grams[drop] = gsub
        # coordinates of every candidate in the chosen basis
        coords = {}
        for c in range(m):
            rhs = [G[x][c] for x in chosen]
            sol = linalg.solve(gsub, rhs, ctx.one, ctx.zero)
            coords[c] = {new_indices[t]: v for t, v in enumerate(sol) if v}
        # F action rows: F_i b = candidate (i, b)
        for c, (i, b, prev) in enumerate(cands):
            f_entries[i][b] = coords[c]
        # E action for the new basis vectors
        for c_local, c in enumerate(chosen):
            g = new_indices[c_local]
            for j, vec in cand_e[c].items():
                e_entries[j][g] = vec
    total = len(weights)
    assert total == dim, "built %d vectors, Weyl dimension is %d" % (total, dim)
    e_ops = [ColMat(total, [e_entries[i].get(c, {}) for c in range(total)])
             for i in range(n)]
    f_ops = [ColMat(total, [f_entries[i].get(c, {}) for c in range(total)])
             for i in range(n)]
    return ModuleRep(ctx, datum, mu, weights, e_ops, f_ops, labels)


def _acc(d, k, v):
    cur = d.get(k)
    cur = v if cur is None else cur + v
    if cur:
        d[k] = cur
    elif k in d:
        del d[k]


def tensor_product(v: ModuleRep, w: ModuleRep) -> ModuleRep:
    """V (x) W with the coproduct action Delta(E) = E (x) K + 1 (x) E."""
    ctx, datum = v.ctx, v.datum
    weights = [wv + ww for wv in v.weights for ww in w.weights]
    e_ops, f_ops = [], []
    iv = v.identity()
    iw = w.identity()
    for i in range(datum.rank):
        ki_w = w.k_simple(i)
        ki_v_inv = v.k_simple(i, -1)
        e_ops.append(v.e_ops[i].kron(ki_w) + iv.kron(w.e_ops[i]))
        f_ops.append(v.f_ops[i].kron(iw) + ki_v_inv.kron(w.f_ops[i]))
    rep = ModuleRep(ctx, datum, None, weights, e_ops, f_ops)
    rep.factors = (v, w)
    return rep


def precontragredient(rep: ModuleRep) -> ModuleRep:
    """The dual space with (X . f)(v) = f(S^{-1}(X) v).

    S^{-1}(E_j) = -K_j^{-1} E_j, S^{-1}(F_j) = -F_j K_j, S^{-1}(K) = K^{-1};
    matrices are transposes, weights are negated.
    """
    ctx, datum = rep.ctx, rep.datum
    weights = [Weight(tuple(-x for x in w.re), tuple(-x for x in w.im))
               for w in rep.weights]
    e_ops, f_ops = [], []
    for i in range(datum.rank):
        e_ops.append((rep.k_simple(i, -1) * rep.e_ops[i]).transpose().scale_all(-ctx.one))
        f_ops.append((rep.f_ops[i] * rep.k_simple(i)).transpose().scale_all(-ctx.one))
    out = ModuleRep(ctx, datum, None, weights, e_ops, f_ops)
    out.contragredient_of = rep
    return out


def verify_defining_relations(rep: ModuleRep):
    """All relations of the quantized enveloping algebra as matrix identities."""
    ctx, datum = rep.ctx, rep.datum
    n = datum.rank
    failures = []
    for i in range(n):
        ki = rep.k_simple(i)
        ki_inv = rep.k_simple(i, -1)
        d = datum.d[i]
        den = q_power(ctx, Fraction(d)) - q_power(ctx, Fraction(-d))
        for j in range(n):
            # K_i E_j K_i^{-1} = q^{(alpha_i, alpha_j)} E_j
            aa = datum.pair_real(datum.simple_root(i), datum.simple_root(j))
            lhs = ki * rep.e_ops[j] * ki_inv
            if not lhs == rep.e_ops[j].scale_all(q_power(ctx, aa)):
                failures.append(("KEK", i, j))
            lhs = ki * rep.f_ops[j] * ki_inv
            if not lhs == rep.f_ops[j].scale_all(q_power(ctx, -aa)):
                failures.append(("KFK", i, j))
            # [E_i, F_j] = delta_ij (K_i - K_i^{-1})/(q_i - q_i^{-1})
            comm = rep.e_ops[i] * rep.f_ops[j] - rep.f_ops[j] * rep.e_ops[i]
            if i == j:
                want = (ki - ki_inv).scale_all(ctx.one / den)
            else:
                want = ColMat.zero(rep.dim, rep.dim)
            if not comm == want:
                failures.append(("EF", i, j))
    failures.extend(verify_serre(rep))
    return failures


def verify_serre(rep: ModuleRep):
    ctx, datum = rep.ctx, rep.datum
    n = datum.rank
    from .scalars import q_binomial
    failures = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            bound = 1 - datum.cartan[i][j]
            for ops, tag in ((rep.e_ops, "serreE"), (rep.f_ops, "serreF")):
                acc = ColMat.zero(rep.dim, rep.dim)
                for k in range(bound + 1):
                    coeff = q_binomial(ctx, bound, k, datum.d[i])
                    if k % 2 == 1:
                        coeff = -coeff
                    term = ops[i].power(bound - k, ctx.one) * ops[j] * ops[i].power(k, ctx.one)
                    acc = acc + term.scale_all(coeff)
                if not acc.is_zero():
                    failures.append((tag, i, j))
    return failures


# ---------------------------------------------------------------------------
# Braid operators
# ---------------------------------------------------------------------------

@dataclass
class BraidOperator:
    i: int
    matrix: ColMat
    inverse: ColMat


def braid_operator(rep: ModuleRep, i) -> BraidOperator:
    """Lusztig's symmetry T_i = T_+ on an integrable module."""
    ctx, datum = rep.ctx, rep.datum
    d = datum.d[i]
    cols_fwd, cols_inv = [], []
    alpha_vee = datum.coroot_weight(tuple(int(k == i) for k in range(datum.rank)))
    for b in range(rep.dim):
        m_pair = datum.pair_real(Weight(rep.weights[b].re), alpha_vee)
        assert m_pair.denominator == 1
        cols_fwd.append(_braid_column(ctx, rep, i, b, int(m_pair), d, inverse=False))
        cols_inv.append(_braid_column(ctx, rep, i, b, int(m_pair), d, inverse=True))
    return BraidOperator(i, ColMat(rep.dim, cols_fwd), ColMat(rep.dim, cols_inv))


def _braid_column(ctx, rep, i, b, m, d, inverse):
    """T_i(v_b) = sum over r - s + t = m of (-1)^s q_i^{s - rt} F^(r) E^(s) F^(t) v_b.

    The inverse is the mirrored sum over -r + s - t = m of
    (-1)^s q_i^{rt - s} E^(r) F^(s) E^(t) v_b.
    """
    if not inverse:
        outer, middle = rep.f_ops[i], rep.e_ops[i]
    else:
        outer, middle = rep.e_ops[i], rep.f_ops[i]
    out = {}
    w_t = {b: ctx.one}                      # outer^(t) v
    t = 0
    while w_t:
        w_s = dict(w_t)                     # middle^(s) outer^(t) v
        s = 0
        while w_s:
            r = (m + s - t) if not inverse else (s - t - m)
            if r >= 0:
                w_r = w_s
                ok = True
                for k in range(1, r + 1):
                    w_r = outer.apply(w_r)
                    if not w_r:
                        ok = False
                        break
                    inv_k = ctx.one / q_int(ctx, k, d)
                    w_r = {key: v * inv_k for key, v in w_r.items()}
                if ok:
                    exp = (s - r * t) if not inverse else (r * t - s)
                    coeff = q_power(ctx, Fraction(d * exp))
                    if s % 2 == 1:
                        coeff = -coeff
                    for key, v in w_r.items():
                        _acc(out, key, coeff * v)
            w_s = middle.apply(w_s)
            s += 1
            if w_s:
                inv_s = ctx.one / q_int(ctx, s, d)
                w_s = {key: v * inv_s for key, v in w_s.items()}
        w_t = outer.apply(w_t)
        t += 1
        if w_t:
            inv_t = ctx.one / q_int(ctx, t, d)
            w_t = {key: v * inv_t for key, v in w_t.items()}
    return out


def braid_on_tensor(rep_v: ModuleRep, rep_w: ModuleRep, i):
    """T_i on V (x) W as (T_i (x) T_i) Z_i with Z_i = exp_{q_i}((q_i - q_i^{-1}) E_i (x) F_i)."""
    ctx, datum = rep_v.ctx, rep_v.datum
    rep_t = tensor_product(rep_v, rep_w)
    tv = braid_operator(rep_v, i)
    tw = braid_operator(rep_w, i)
    d = datum.d[i]
    x = rep_v.e_ops[i].kron(rep_w.f_ops[i]).scale_all(
        q_power(ctx, Fraction(d)) - q_power(ctx, Fraction(-d)))
    z = _nilpotent_qexp(ctx, x, d, rep_t.dim)
    z_inv = _nilpotent_qexp_inv(ctx, x, d, rep_t.dim)
    fwd = tv.matrix.kron(tw.matrix) * z
    inv = z_inv * tv.inverse.kron(tw.inverse)
    return rep_t, BraidOperator(i, fwd, inv)


def _nilpotent_qexp(ctx, x: ColMat, d, dim):
    out = ColMat.identity(dim, ctx.one)
    term = ColMat.identity(dim, ctx.one)
    k = 0
    while True:
        term = x * term
        k += 1
        if term.is_zero():
            break
        coeff = q_power(ctx, Fraction(d * k * (k - 1), 2)) / q_factorial(ctx, k, d)
        out = out + term.scale_all(coeff)
    return out


def _nilpotent_qexp_inv(ctx, x: ColMat, d, dim):
    out = ColMat.identity(dim, ctx.one)
    term = ColMat.identity(dim, ctx.one)
    k = 0
    while True:
        term = x * term
        k += 1
        if term.is_zero():
            break
        coeff = q_power(ctx, Fraction(-d * k * (k - 1), 2)) / q_factorial(ctx, k, d)
        if k % 2 == 1:
            coeff = -coeff
        out = out + term.scale_all(coeff)
    return out


def braid_word_operator(rep: ModuleRep, word):
    """T_{i_1} T_{i_2} ... as matrices (left to right composition order)."""
    ctx = rep.ctx
    fwd = rep.identity()
    inv = rep.identity()
    for i in word:
        op = braid_operator(rep, i)
        fwd = fwd * op.matrix
        inv = op.inverse * inv
    return fwd, inv


def root_vector_matrices(rep: ModuleRep, word=None):
    """Matrices of E_{beta_r}, F_{beta_r} for the convex order of a reduced word."""
    datum = rep.datum
    if word is None:
        word = datum.longest_word
    roots = positive_roots_from_word(datum, word)  # validates reducedness
    e_mats, f_mats = [], []
    fwd = rep.identity()
    inv = rep.identity()
    for r, i in enumerate(word):
        e_mats.append(fwd * rep.e_ops[i] * inv)
        f_mats.append(fwd * rep.f_ops[i] * inv)
        op = braid_operator(rep, i)
        fwd = fwd * op.matrix
        inv = op.inverse * inv
    return roots, e_mats, f_mats


# ---------------------------------------------------------------------------
# R-matrix
# ---------------------------------------------------------------------------

@dataclass
class RMatrixOp:
    rep: ModuleRep            # the tensor product module
    matrix: ColMat
    inverse: ColMat


def r_matrix(rep_v: ModuleRep, rep_w: ModuleRep) -> RMatrixOp:
    """Truncated universal R-matrix on V (x) W.

    Cartan factor acts on v (x) w of weights (lam, nu) by q^{(lam, nu)};
    the nilpotent factors run over the positive roots in convex order.
    """
    ctx, datum = rep_v.ctx, rep_v.datum
    rep_t = tensor_product(rep_v, rep_w)
    dim = rep_t.dim
    cartan = []
    for wv in rep_v.weights:
        for ww in rep_w.weights:
            cartan.append(q_power(ctx, datum.pair(wv, ww)))
    cartan_op = ColMat.diagonal(cartan)
    cartan_inv = ColMat.diagonal([ctx.one / c for c in cartan])
    roots_v, e_v, _ = root_vector_matrices(rep_v)
    _, _, f_w = root_vector_matrices(rep_w)
    mat = cartan_op
    factors = []
    for beta, ev, fw in zip(roots_v, e_v, f_w):
        d_b = datum.root_norm_half(beta)
        x = ev.kron(fw).scale_all(q_power(ctx, d_b) - q_power(ctx, -d_b))
        factors.append((x, d_b))
        mat = mat * _nilpotent_qexp(ctx, x, d_b, dim)
    inv = ColMat.identity(dim, ctx.one)
    for x, d_b in reversed(factors):
        inv = inv * _nilpotent_qexp_inv(ctx, x, d_b, dim)
    inv = inv * cartan_inv
    return RMatrixOp(rep_t, mat, inv)


def coproduct_op(rep_v: ModuleRep, rep_w: ModuleRep, which, generator_index=None, flipped=False):
    """Delta(X) or the flipped Delta^cop(X) on V (x) W for X among E_i, F_i."""
    i = generator_index
    iv, iw = rep_v.identity(), rep_w.identity()
    if which == "E":
        if not flipped:
            return rep_v.e_ops[i].kron(rep_w.k_simple(i)) + iv.kron(rep_w.e_ops[i])
        return rep_v.k_simple(i).kron(rep_w.e_ops[i]) + rep_v.e_ops[i].kron(iw)
    if which == "F":
        if not flipped:
            return rep_v.f_ops[i].kron(iw) + rep_v.k_simple(i, -1).kron(rep_w.f_ops[i])
        return iv.kron(rep_w.f_ops[i]) + rep_v.f_ops[i].kron(rep_w.k_simple(i, -1))
    raise ValueError("which must be 'E' or 'F'")


def quantum_trace(rep: ModuleRep, op: ColMat):
    """tau_mu(T) = tr(T K_{-2 rho})."""
    if op.nrows != rep.dim or op.ncols != rep.dim:
        raise ValueError("operator shape does not match the module")
    ctx, datum = rep.ctx, rep.datum
    k = rep.k_diag(datum.rho.scale(-2))
    acc = ctx.zero
    for c, col in enumerate(op.cols):
        v = col.get(c)
        if v:
            acc = acc + v * k[c]
    return acc


def sl2_casimir(rep: ModuleRep) -> ColMat:
    """C = FE + (q K_alpha + q^{-1} K_alpha^{-1})/(q - q^{-1})^2, rank one only."""
    if rep.datum.rank != 1:
        raise WrongType("the explicit Casimir is a rank-one operator")
    ctx = rep.ctx
    d = rep.datum.d[0]
    q = q_power(ctx, Fraction(d))
    qinv = q_power(ctx, Fraction(-d))
    den = (q - qinv) ** 2
    k2 = rep.k_simple(0)
    k2_inv = rep.k_simple(0, -1)
    cartan = (k2.scale_all(q) + k2_inv.scale_all(qinv)).scale_all(ctx.one / den)
    return rep.f_ops[0] * rep.e_ops[0] + cartan


def root_vector_word_expansion(ctx: QContext, datum: RootDatum, r_index, side="+",
                               probe_weights=None):
    """Expansion of the PBW root vector E_{beta_r} (or F) in generator words.

    Solved from matrices on a faithful family of modules and verified on an
    extra probe; returns {word: scalar}.
    """
    from .verma import words_of_weight
    word = datum.longest_word
    roots = positive_roots_from_word(datum, word)
    beta = roots[r_index]
    if probe_weights is None:
        probe_weights = [datum.fundamental_weight(i) for i in range(datum.rank)]
        probe_weights.append(datum.rho)
    words = words_of_weight(datum, beta)
    rows, rhs = [], []
    for pw in probe_weights:
        rep = build_simple_module(ctx, datum, pw)
        _, e_mats, f_mats = root_vector_matrices(rep, word)
        target = e_mats[r_index] if side == "+" else f_mats[r_index]
        ops = rep.e_ops if side == "+" else rep.f_ops
        word_mats = []
        for w in words:
            m = rep.identity()
            for i in w:
                m = m * ops[i]
            word_mats.append(m)
        for r in range(rep.dim):
            for c in range(rep.dim):
                row = [wm.cols[c].get(r, ctx.zero) for wm in word_mats]
                if any(x for x in row) or target.cols[c].get(r):
                    rows.append(row)
                    rhs.append(target.cols[c].get(r, ctx.zero))
    sol = linalg.solve(rows, rhs, ctx.one, ctx.zero)
    if sol is None:
        raise AssertionError("root vector is not a combination of generator words")
    return {w: c for w, c in zip(words, sol) if c}
