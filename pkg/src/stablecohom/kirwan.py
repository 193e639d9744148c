"""Equivariant Poincaré series and localization relation ideals for SL(2) quotients.

Rings built here use the generator names

* ``x``     degree 2, the equivariant hyperplane class
* ``alpha`` degree 2, the torus weight class (construction only)
* ``a``     degree 4, standing for alpha^2 in final presentations
"""
from __future__ import annotations

from .exactpoly import GradedRing, MultiPoly, collapse_even, degree_info, sym_pair
from .groebner import Ideal
from .series import RationalSeries, TPoly

#: construction ring in which alpha is an honest degree-2 generator
ALPHA_RING = GradedRing.of(("x", 2), ("alpha", 2))
#: presentation ring Q[x, alpha^2]
BASE_RING = GradedRing.of(("x", 2), ("a", 4))


def _one_minus(k: int) -> RationalSeries:
    return RationalSeries.one_minus(k)


def quasimap_series(d: int, n: int) -> RationalSeries:
    """Equivariant Poincaré series of P(Sym^d C^2 (x) C^n)^ss under SL(2)."""
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    if d % 2:
        m = (d + 1) // 2
        return _one_minus(2 * m * n - 2) * _one_minus(2 * m * n) * RationalSeries(1, [2, 4])
    m = d // 2
    num = TPoly({0: 1}) - TPoly({2 * n * (m + 1) - 2: 1}) - TPoly({2 * n * (m + 1): 1}) \
        + TPoly({2 * n * (2 * m + 1) - 2: 1})
    return RationalSeries(num, [2, 4])


def _symmetrized(f: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """(f(a) - f(-a))/(2a) and (f(a) + f(-a))/2, collapsed into Q[x, a]."""
    even, odd = sym_pair(f, "alpha")
    return collapse_even(odd, "alpha", "a"), collapse_even(even, "alpha", "a")


def relations_d2(n: int) -> Ideal:
    """Relations of H_SL(2)(P(Sym^2 C^2 (x) C^n)^ss) in Q[x:2, a:4]."""
    if n < 1:
        raise ValueError("n must be positive")
    x, alpha = ALPHA_RING.gens()
    odd, even = _symmetrized((x + 2 * alpha) ** n)
    xn = BASE_RING.gen("x") ** n
    return Ideal(BASE_RING, (xn * odd, xn * even))


def relations_d3(n: int) -> Ideal:
    """Relations of H_SL(2)(P(Sym^3 C^2 (x) C^n)^s) in Q[x:2, a:4]."""
    if n < 1:
        raise ValueError("n must be positive")
    x, alpha = ALPHA_RING.gens()
    odd, even = _symmetrized((x + alpha) ** n * (x + 3 * alpha) ** n)
    return Ideal(BASE_RING, (odd, even))


def projective_bundle_relation(cherns: list, rho: str) -> MultiPoly:
    """rho^r + c_1 rho^(r-1) + ... + c_r for Chern classes ``cherns = [c_1..c_r]``.

    The Chern classes must live in a ring that already contains ``rho``
    (weight 2); ``c_i`` has to be zero or homogeneous of degree 2i.
    """
    if not cherns:
        raise ValueError("need at least one Chern class")
    ring = cherns[0].ring
    r = len(cherns)
    p = ring.gen(rho)
    if ring.weight(rho) != 2:
        raise ValueError(f"{rho!r} must have weight 2")
    total = p ** r
    for i, c in enumerate(cherns, start=1):
        if c.ring != ring:
            raise ValueError("Chern classes must share one ring")
        info = degree_info(c)
        if c and (not info["is_homogeneous"] or info["weighted_degree"] != 2 * i):
            raise ValueError(f"c_{i} must be homogeneous of degree {2 * i}")
        total = total + c * p ** (r - i)
    return total


def torus_bundle_relation(weights: list, ring: GradedRing = None, rho: str = "rho",
                          alpha: str = "alpha") -> MultiPoly:
    """prod (rho + w_i alpha): the relation of an equivariant projective space."""
    if ring is None:
        ring = GradedRing.of((rho, 2), (alpha, 2))
    p, a = ring.gen(rho), ring.gen(alpha)
    out = ring.one()
    for w in weights:
        out = out * (p + w * a)
    return out


def chern_classes_from_roots(weights: list, ring: GradedRing, alpha: str = "alpha") -> list:
    """Elementary symmetric functions of the roots ``w_i * alpha``: [c_1, ..., c_r]."""
    a = ring.gen(alpha)
    cs = [ring.one()]
    for w in weights:
        new = cs + [ring.zero()]
        for k in range(len(cs), 0, -1):
            new[k] = new[k] + cs[k - 1] * (w * a)
        cs = new
    return cs[1:]


def unstable_correction_d2(n: int) -> RationalSeries:
    """Series of the unstable stratum removed from the degree-2 blow-up."""
    if n < 2:
        raise ValueError("need n >= 2")
    t_term = RationalSeries.monomial(2 * n - 2) * _one_minus(2 * n - 2)
    return (RationalSeries(1, [2]) * _one_minus(2 * n) * RationalSeries(1, [2])
            * t_term * RationalSeries(1, [2]))
