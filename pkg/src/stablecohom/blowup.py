"""Blow-up calculus: Betti numbers, normal-bundle Chern polynomials, ring presentations."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exactpoly import (GradedRing, MultiPoly, collapse_even, degree_info, exact_divide,
                        substitute, sym_pair, to_text)
from .groebner import GroebnerBasis, Ideal, buchberger, hilbert_series
from .series import RationalSeries, TPoly

#: ring of the split normal-bundle Chern polynomials; ``t`` is the formal variable
CHERN_RING = GradedRing.of(("x", 2), ("alpha", 2), ("t", 2))


@dataclass(frozen=True)
class Presentation:
    ring: GradedRing
    relations: tuple
    label: str = ""

    def __post_init__(self):
        rels = tuple(self.relations)
        for f in rels:
            if f.ring != self.ring:
                raise ValueError(f"relation {to_text(f)} lives in {f.ring}, not {self.ring}")
            if not degree_info(f)["is_homogeneous"]:
                raise ValueError(f"relation {to_text(f)} is not homogeneous")
        object.__setattr__(self, "relations", rels)

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.relations)

    def groebner_basis(self) -> GroebnerBasis:
        return buchberger(self.ideal)

    def hilbert_series(self) -> RationalSeries:
        return hilbert_series(self.groebner_basis())

    def relation_degrees(self) -> list:
        return [degree_info(f)["weighted_degree"] for f in self.relations]

    def to_json(self) -> dict:
        return {"label": self.label,
                "generators": [[n, w] for n, w in self.ring.generators],
                "relations": [to_text(f) for f in self.relations]}


@dataclass(frozen=True)
class BlowupStep:
    """One blow-up (``up``) or blow-down (``down``) with its center and codimension."""

    center_series: RationalSeries
    codimension: int
    direction: str = "up"
    label: str = ""
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if self.codimension < 1:
            raise ValueError("codimension must be >= 1")
        if self.direction not in ("up", "down"):
            raise ValueError(f"direction must be 'up' or 'down', got {self.direction!r}")

    def correction(self) -> RationalSeries:
        """Signed contribution of this step to the Poincaré series."""
        term = self.center_series * _exceptional_factor(self.codimension)
        return term if self.direction == "up" else -term

    def apply(self, p: RationalSeries) -> RationalSeries:
        if self.direction == "up":
            return betti_blowup(p, self.center_series, self.codimension)
        return betti_blowdown(p, self.center_series, self.codimension)


def _exceptional_factor(r: int) -> RationalSeries:
    """t^2 + t^4 + ... + t^(2(r-1))."""
    return RationalSeries.polynomial({2 * k: 1 for k in range(1, r)})


def betti_blowup(p_x: RationalSeries, p_y: RationalSeries, r: int) -> RationalSeries:
    """Poincaré series of the blow-up of X along Y of codimension r."""
    if r < 1:
        raise ValueError("codimension must be >= 1")
    return p_x + p_y * _exceptional_factor(r)


def betti_blowdown(p_xtilde: RationalSeries, p_y: RationalSeries, r: int) -> RationalSeries:
    """Inverse of :func:`betti_blowup`: contract the exceptional divisor over Y."""
    if r < 1:
        raise ValueError("codimension must be >= 1")
    return p_xtilde - p_y * _exceptional_factor(r)


def chern_normal_split(n: int, sign: int) -> MultiPoly:
    """((t + 2s*alpha + x)^n - x^n) / (t + 2s*alpha) in Q[x, alpha, t], s = +-1.

    The coefficient of t^k is c_(n-1-k) of the weight-``sign`` summand of the
    normal bundle.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    x, alpha, t = CHERN_RING.gens()
    shift = t + 2 * sign * alpha
    return exact_divide((shift + x) ** n - x ** n, shift)


def chern_normal_total(n: int) -> MultiPoly:
    """Product of the two split Chern polynomials: sum_k t^k c_(2n-2-k)(N)."""
    return chern_normal_split(n, 1) * chern_normal_split(n, -1)


def presentation_blowup(p: Presentation, ker_gens, chern_relation: MultiPoly = None,
                        pd_center: MultiPoly = None, rho: str = "rho",
                        label: str = "") -> Presentation:
    """Ring of a blow-up when restriction to the center is onto.

    New ring = old ring plus ``rho`` (weight 2).  New relations are the old
    ones, ``rho * k`` for each kernel generator ``k``, and, when a Chern
    relation is given, that relation with its rho-free part replaced by
    ``pd_center``.  ``chern_relation`` is read in the new ring (it may
    already be written there, or in any ring whose generators it contains).
    Surjectivity of the restriction and ``[Y] != 0`` are the caller's
    obligations.
    """
    if rho in p.ring.names:
        raise ValueError(f"{rho!r} is already a generator")
    ring = p.ring.adjoin(rho, 2)
    rels = [f.to_ring(ring) for f in p.relations]
    r = ring.gen(rho)
    for k in ker_gens:
        if not degree_info(k)["is_homogeneous"]:
            raise ValueError(f"kernel generator {to_text(k)} is not homogeneous")
        rels.append(r * k.to_ring(ring))
    if chern_relation is not None:
        rel = chern_relation.to_ring(ring)
        info = degree_info(rel)
        if not info["is_homogeneous"]:
            raise ValueError("Chern relation is not homogeneous")
        tail = rel.evaluate_at_zero(rho)
        rel = rel - tail
        if pd_center is not None:
            pd = pd_center.to_ring(ring)
            pd_info = degree_info(pd)
            if pd and (not pd_info["is_homogeneous"]
                       or pd_info["weighted_degree"] != info["weighted_degree"]):
                raise ValueError("Poincaré dual of the center has the wrong degree")
            rel = rel + pd
        rels.append(rel)
    return Presentation(ring, tuple(rels), label or p.label)


def degree2_chern_relation(n: int) -> MultiPoly:
    """Full Chern relation of the degree-2 blow-up center in Q[x, a, rho].

    Sum over k of rho^k c_(2n-2-k)(N), obtained from the split Chern
    polynomials with t -> rho and alpha^2 -> a.
    """
    total = chern_normal_total(n)
    ring = GradedRing.of(("x", 2), ("alpha", 2), ("rho", 2))
    renamed = substitute(total, {"x": ring.gen("x"), "alpha": ring.gen("alpha"),
                                 "t": ring.gen("rho")}, target=ring)
    even, odd = sym_pair(renamed, "alpha")
    if odd:
        raise ValueError("total Chern polynomial is not even in alpha")  # pragma: no cover
    return collapse_even(even, "alpha", "a")


def t_power_sum(lo: int, hi: int) -> RationalSeries:
    """t^lo + t^(lo+2) + ... + t^hi (empty when hi < lo)."""
    return RationalSeries(TPoly({k: 1 for k in range(lo, hi + 1, 2)}))
