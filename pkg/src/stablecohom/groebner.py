"""Buchberger's algorithm over weighted graded rings, Hilbert series, ideal equality.

The engine works on packed monomials with fraction-free integer
coefficients (see :mod:`stablecohom._kernels`); public results are
:class:`~stablecohom.exactpoly.MultiPoly` values with monic leading terms.
"""
from __future__ import annotations

import hashlib
import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm as int_lcm
from typing import Sequence

from . import _kernels as kern
from .exactpoly import GradedRing, MultiPoly, RingMismatchError, degree_info, order_key, to_text
from .series import RationalSeries, TPoly


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted degree first, then lexicographic (first generator largest)."""

    ring: GradedRing
    kind: str = "wdeg-lex"

    def __post_init__(self):
        if self.kind != "wdeg-lex":
            raise ValueError(f"unsupported monomial order {self.kind!r}")

    def key(self, mon) -> tuple:
        return order_key(self.ring, mon)

    def compare(self, m1, m2) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class Ideal:
    ring: GradedRing
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not isinstance(g, MultiPoly):
                raise TypeError(f"ideal generators must be MultiPoly, got {g!r}")
            if g.ring != self.ring:
                raise RingMismatchError(f"generator in {g.ring}, ideal in {self.ring}")
            if not degree_info(g)["is_homogeneous"]:
                raise ValueError(f"generator {to_text(g)} is not homogeneous")
        object.__setattr__(self, "generators", tuple(g for g in gens if g))

    @classmethod
    def of(cls, *gens: MultiPoly, ring: GradedRing = None) -> "Ideal":
        if ring is None:
            if not gens:
                raise ValueError("need a ring for the zero ideal")
            ring = gens[0].ring
        return cls(ring, tuple(gens))

    def degrees(self) -> list:
        return [degree_info(g)["weighted_degree"] for g in self.generators]


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    basis: tuple
    order: MonomialOrder
    stats: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def ring(self) -> GradedRing:
        return self.ideal.ring

    def leading_monomials(self) -> list:
        return [g.leading_monomial() for g in self.basis]

    def normal_form(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self)

    def contains(self, f: MultiPoly) -> bool:
        return not normal_form(f, self)

    def hilbert_series(self) -> RationalSeries:
        return hilbert_series(self)

    def to_text(self) -> list:
        return [to_text(g) for g in self.basis]

    def digest(self) -> str:
        text = "\n".join([str(self.ring)] + self.to_text())
        return hashlib.sha256(text.encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# conversion between MultiPoly and kernel handles


class _Codec:
    def __init__(self, ring: GradedRing, wide: bool = False):
        self.ring = ring
        self.weights = ring.weights
        self.kernel = kern
        self.layout = kern.Layout(self.weights, kern.WIDE_BITS if wide else kern.DEFAULT_BITS)

    def encode(self, f: MultiPoly):
        den = 1
        for _, c in f.items():
            den = int_lcm(den, c.denominator)
        terms = sorted(((self.kernel.pack(self.layout, m, self.weights), int(c * den))
                        for m, c in f.items()), reverse=True)
        mons = [m for m, _ in terms]
        coefs = [c for _, c in terms]
        g = 0
        for c in coefs:
            g = math.gcd(g, c)
        if coefs[0] < 0:
            g = -g
        coefs = [c // g for c in coefs]
        return self.kernel.make_poly(self.layout, mons, coefs)

    def decode(self, handle, monic: bool = True) -> MultiPoly:
        mons, coefs = self.kernel.poly_terms(handle)
        if not mons:
            return self.ring.zero()
        lc = Fraction(coefs[0]) if monic else Fraction(1)
        return MultiPoly(self.ring, {self.kernel.unpack(self.layout, m): Fraction(c) / lc
                                     for m, c in zip(mons, coefs)})


# ---------------------------------------------------------------------------
# Buchberger


def buchberger(ideal: Ideal, order: MonomialOrder = None) -> GroebnerBasis:
    """Reduced Gröbner basis with the normal pair strategy and both criteria."""
    if order is None:
        order = MonomialOrder(ideal.ring)
    if order.ring != ideal.ring:
        raise RingMismatchError("order and ideal live in different rings")
    try:
        return _buchberger(ideal, order, wide=False)
    except OverflowError:
        return _buchberger(ideal, order, wide=True)


def _buchberger(ideal: Ideal, order: MonomialOrder, wide: bool) -> GroebnerBasis:
    codec = _Codec(ideal.ring, wide)
    k, lay = codec.kernel, codec.layout
    stats = {"pairs": 0, "product_skips": 0, "chain_skips": 0,
             "zero_reductions": 0}
    G: list = []
    leads: list = []
    for f in ideal.generators:
        h = k.reduce(lay, codec.encode(f), G, True)
        if k.poly_terms(h)[0]:
            G.append(h)
            leads.append(k.poly_terms(h)[0][0])
    pairs: dict = {}
    queue: list = []

    def add_pairs(j):
        for i in range(j):
            l = k.lcm(lay, leads[i], leads[j])
            pairs[(i, j)] = l
            heapq.heappush(queue, (k.mon_wdeg(lay, l), i, j))

    for j in range(1, len(G)):
        add_pairs(j)
    while queue:
        # normal strategy: smallest lcm degree, ties by generator index
        _, i, j = heapq.heappop(queue)
        l = pairs.pop((i, j))
        stats["pairs"] += 1
        if k.coprime(lay, leads[i], leads[j]):
            stats["product_skips"] += 1
            continue
        if _chain_criterion(k, lay, i, j, l, leads, pairs):
            stats["chain_skips"] += 1
            continue
        s = k.spoly(lay, G[i], G[j])
        h = k.reduce(lay, s, G, True)
        if not k.poly_terms(h)[0]:
            stats["zero_reductions"] += 1
            continue
        G.append(h)
        leads.append(k.poly_terms(h)[0][0])
        add_pairs(len(G) - 1)
    reduced = _interreduce(k, lay, G)
    basis = sorted((codec.decode(h) for h in reduced),
                   key=lambda g: order.key(g.leading_monomial()))
    stats["size"] = len(basis)
    return GroebnerBasis(ideal, tuple(basis), order, stats)


def _chain_criterion(k, lay, i, j, l, leads, pairs) -> bool:
    guard = lay.guard
    for m in range(len(leads)):
        if m == i or m == j:
            continue
        if not k.divides(guard, leads[m], l):
            continue
        if (min(i, m), max(i, m)) in pairs or (min(j, m), max(j, m)) in pairs:
            continue
        return True
    return False


def _interreduce(k, lay, G: list) -> list:
    guard = lay.guard
    leads = [k.poly_terms(h)[0][0] for h in G]
    keep = []
    for idx, lm in enumerate(leads):
        redundant = False
        for jdx, other in enumerate(leads):
            if jdx == idx:
                continue
            if k.divides(guard, other, lm) and (other != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(G[idx])
    out = []
    for idx, h in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        out.append(k.reduce(lay, h, others, True))
    return out


# ---------------------------------------------------------------------------
# queries on a basis


def normal_form(f: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    """Unique remainder of ``f`` modulo the ideal (exact, with the true scale)."""
    if f.ring != gb.ring:
        raise RingMismatchError(f"{f.ring} vs {gb.ring}")
    if not f:
        return f
    ring = gb.ring
    basis = [(g.leading_monomial(), g) for g in gb.basis]
    rem = dict(f.items())
    out: dict = {}
    key = lambda m: order_key(ring, m)
    while rem:
        lm = max(rem, key=key)
        c = rem[lm]
        for glm, g in basis:
            shift = tuple(a - b for a, b in zip(lm, glm))
            if min(shift) >= 0:
                for m, cg in g.items():
                    mm = tuple(a + b for a, b in zip(m, shift))
                    v = rem.get(mm, 0) - c * cg
                    if v:
                        rem[mm] = v
                    else:
                        rem.pop(mm, None)
                break
        else:
            out[lm] = c
            del rem[lm]
    return MultiPoly(ring, out)


def hilbert_series(gb: GroebnerBasis) -> RationalSeries:
    """Hilbert series of ring/ideal from the leading-term ideal."""
    ring = gb.ring
    half = [w // 2 for w in ring.weights]
    num = kern.hilbert_numerator(gb.leading_monomials(), half)
    return RationalSeries(TPoly.from_u(num), ring.weights)


def _independent(subset, leads) -> bool:
    return not any(all(i in subset for i, e in enumerate(m) if e) for m in leads)


def krull_dimension(gb: GroebnerBasis) -> int:
    """Size of a largest variable set supporting no leading monomial."""
    leads = gb.leading_monomials()
    n = gb.ring.ngens
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            if _independent(set(subset), leads):
                return size
    return 0  # pragma: no cover - the empty set is always independent unless 1 is in the ideal


def quotient_vector_dimension(gb: GroebnerBasis):
    """Dimension over Q of ring/ideal: an int, or ``math.inf``."""
    leads = gb.leading_monomials()
    n = gb.ring.ngens
    if any(not any(m) for m in leads):
        return 0
    for i in range(n):
        if not any(m[i] and all(e == 0 for j, e in enumerate(m) if j != i) for m in leads):
            return math.inf
    return len(standard_monomials(gb))


def standard_monomials(gb: GroebnerBasis) -> list:
    """All monomials outside the leading-term ideal (zero-dimensional case)."""
    leads = gb.leading_monomials()
    n = gb.ring.ngens
    bounds = []
    for i in range(n):
        pure = [m[i] for m in leads if m[i] and all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            raise ValueError("quotient is not zero-dimensional")
        bounds.append(min(pure))
    out = []
    for mon in itertools.product(*(range(b) for b in bounds)):
        if not any(all(a <= b for a, b in zip(m, mon)) for m in leads):
            out.append(mon)
    return sorted(out, key=lambda m: order_key(gb.ring, m))


def ideal_equal(i1: Ideal, i2: Ideal) -> bool:
    if i1.ring != i2.ring:
        raise RingMismatchError(f"{i1.ring} vs {i2.ring}")
    gb1 = _basis_for(i1)
    gb2 = _basis_for(i2)
    return (all(not normal_form(f, gb2) for f in i1.generators)
            and all(not normal_form(f, gb1) for f in i2.generators))


def _basis_for(ideal: Ideal) -> GroebnerBasis:
    if not ideal.generators:
        return GroebnerBasis(ideal, (), MonomialOrder(ideal.ring))
    return buchberger(ideal)


def groebner(*gens: MultiPoly) -> GroebnerBasis:
    """Shorthand: reduced basis of the ideal generated by ``gens``."""
    return buchberger(Ideal.of(*gens))


def basis_from_text(lines: Sequence[str], ring: GradedRing) -> list:
    from .exactpoly import parse_poly
    return [parse_poly(line, ring) for line in lines]
