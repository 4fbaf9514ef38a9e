"""Central characters, Harish-Chandra images of the Casimir elements
z_mu, and the linkage theorem as a decidable test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import Inconclusive
from .findim import build_simple_module
from .rootdata import RootDatum, Weight, linkage_orbit
from .scalars import QContext, q_power, scalar_eq


@dataclass
class HCImage:
    """P(z_mu) = sum over weights nu of V(mu) of q^{(-2 rho, nu)} K_{-2 nu}."""
    mu: Weight
    terms: tuple          # ((-2 nu as Weight, coefficient), ...) with multiplicity
    w_invariant: bool


def _module_weights(ctx: QContext, datum: RootDatum, mu: Weight):
    rep = build_simple_module(ctx, datum, mu)
    return rep.weights


def hc_image(ctx: QContext, datum: RootDatum, mu: Weight) -> HCImage:
    weights = _module_weights(ctx, datum, mu)
    rho2 = datum.rho.scale(2)
    terms = []
    for nu in weights:
        coeff = q_power(ctx, -datum.pair_real(rho2, nu))
        terms.append((nu.scale(-2), coeff))
    invariant = _check_w_invariance(ctx, datum, terms)
    return HCImage(mu, tuple(terms), invariant)


def _check_w_invariance(ctx, datum, terms):
    """w . K_{2 mu} = q^{(rho, 2 w mu - 2 mu)} K_{2 w mu} must permute the terms."""
    collected = {}
    for wt, coeff in terms:
        key = wt.re
        collected[key] = collected.get(key, ctx.zero) + coeff
    rho = datum.rho
    for i in range(datum.rank):
        mapped = {}
        for wt, coeff in terms:
            half = wt.scale(Fraction(1, 2))          # wt = 2 mu with mu a module weight
            w_half = datum.reflect_weight(i, half)
            factor = q_power(ctx, datum.pair_real(rho, (w_half - half).scale(2)))
            key = w_half.scale(2).re
            mapped[key] = mapped.get(key, ctx.zero) + coeff * factor
        if set(mapped) != set(collected):
            return False
        for key in collected:
            if not scalar_eq(ctx, mapped[key], collected[key]):
                return False
    return True


def central_character(ctx: QContext, datum: RootDatum, lam: Weight, mu: Weight):
    """xi_lambda(z_mu) = sum_nu q^{(-2 rho, nu)} q^{(lambda, -2 nu)}."""
    weights = _module_weights(ctx, datum, mu)
    rho2 = datum.rho.scale(2)
    total = ctx.zero
    for nu in weights:
        e = datum.pair(lam, nu.scale(-2))
        coeff = q_power(ctx, -datum.pair_real(rho2, nu))
        total = total + coeff * q_power(ctx, e)
    return total


@dataclass
class LinkageVerdict:
    orbit_linked: bool
    characters_equal: bool
    agree: bool
    witness: object = None      # fundamental weight separating the characters


def linkage_theorem_check(ctx: QContext, datum: RootDatum, lam: Weight,
                          lam2: Weight) -> LinkageVerdict:
    """Compare W-hat orbit membership with equality of the central characters
    on the fundamental Casimirs z_{varpi_i}."""
    lam = datum.reduce(lam)
    lam2 = datum.reduce(lam2)
    orbit = lam2 in linkage_orbit(datum, lam)
    equal = True
    witness = None
    for i in range(datum.rank):
        mu = datum.fundamental_weight(i)
        a = central_character(ctx, datum, lam, mu)
        b = central_character(ctx, datum, lam2, mu)
        if ctx.exact:
            if a != b:
                equal = False
                witness = mu
                break
        else:
            if not scalar_eq(ctx, a, b):
                equal = False
                witness = mu
                break
    if not ctx.exact and equal and not orbit:
        raise Inconclusive(
            "characters agree within tolerance but the weights are not orbit-linked")
    return LinkageVerdict(orbit, equal, orbit == equal, witness)
