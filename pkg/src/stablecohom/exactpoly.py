"""Exact multivariate polynomials over the rationals on weighted graded rings.

Polynomials are sparse maps from exponent tuples to :class:`fractions.Fraction`
coefficients.  Every generator carries an even positive weight, so the
weighted degree of a monomial is its cohomological degree.

The monomial order used for printing and for division is weighted degree
first, then lexicographic with the first declared generator largest.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple  # tuple[int, ...], aligned with GradedRing.generators

Rational = Fraction


class RingMismatchError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


@dataclass(frozen=True)
class GradedRing:
    """Polynomial ring over Q on named generators with even weights."""

    generators: tuple[tuple[str, int], ...]

    def __post_init__(self):
        gens = tuple((str(name), int(w)) for name, w in self.generators)
        object.__setattr__(self, "generators", gens)
        names = [name for name, _ in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for name, w in gens:
            if w < 2 or w % 2:
                raise ValueError(f"generator {name!r} has weight {w}; weights must be even and >= 2")
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise ValueError(f"bad generator name {name!r}")

    @classmethod
    def of(cls, *pairs) -> "GradedRing":
        """``GradedRing.of(("x", 2), ("a", 4))``"""
        return cls(tuple(pairs))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.generators)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.generators)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a generator of {self}") from None

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def weighted_degree(self, mon: Monomial) -> int:
        return sum(e * w for e, w in zip(mon, self.weights))

    def gen(self, name: str) -> "MultiPoly":
        mon = [0] * self.ngens
        mon[self.index(name)] = 1
        return MultiPoly(self, {tuple(mon): Fraction(1)})

    def gens(self) -> tuple["MultiPoly", ...]:
        return tuple(self.gen(name) for name in self.names)

    def const(self, c) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.ngens: c})

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def adjoin(self, name: str, weight: int) -> "GradedRing":
        return GradedRing(self.generators + ((name, weight),))

    def __str__(self):
        inner = ", ".join(f"{n}:{w}" for n, w in self.generators)
        return f"Q[{inner}]"


def order_key(ring: GradedRing, mon: Monomial) -> tuple:
    """Sort key realising weighted-degree-then-lex; larger key = larger monomial."""
    return (ring.weighted_degree(mon),) + tuple(mon)


def _coerce(ring: GradedRing, other) -> "MultiPoly":
    if isinstance(other, MultiPoly):
        if other.ring != ring:
            raise RingMismatchError(f"{other.ring} vs {ring}")
        return other
    if isinstance(other, (int, Fraction)):
        return ring.const(other)
    return NotImplemented


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: GradedRing, terms: Mapping[Monomial, object] = None):
        self.ring = ring
        clean = {}
        n = ring.ngens
        for mon, c in (terms or {}).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != n or min(mon, default=0) < 0:
                raise ValueError(f"monomial {mon} does not fit {ring}")
            c = Fraction(c)
            if c:
                clean[mon] = c
        self._terms = clean
        self._hash = None

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # arithmetic

    def __add__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mon, c in other._terms.items():
            out[mon] = out.get(mon, 0) + c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.ring, {m: c * v for m, v in self._terms.items()})
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mon = tuple(a + b for a, b in zip(m1, m2))
                out[mon] = out.get(mon, 0) + c1 * c2
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return exact_divide(self, other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # order-dependent accessors

    def sorted_terms(self) -> list:
        """Terms in decreasing monomial order."""
        return sorted(self._terms.items(), key=lambda mc: order_key(self.ring, mc[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mon = max(self._terms, key=lambda m: order_key(self.ring, m))
        return mon, self._terms[mon]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def monic(self) -> "MultiPoly":
        return self * (1 / self.leading_coefficient()) if self else self

    def coefficient(self, mon: Monomial) -> Fraction:
        return self._terms.get(tuple(mon), Fraction(0))

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((m[i] for m in self._terms), default=-1)

    def evaluate_at_zero(self, name: str) -> "MultiPoly":
        """Drop every term involving generator ``name``."""
        i = self.ring.index(name)
        return MultiPoly(self.ring, {m: c for m, c in self._terms.items() if m[i] == 0})

    def to_ring(self, ring: GradedRing) -> "MultiPoly":
        """Re-embed into a ring that contains every generator used here, matched by name."""
        idx = []
        for j, name in enumerate(self.ring.names):
            if name in ring.names:
                idx.append(ring.index(name))
            else:
                if any(m[j] for m in self._terms):
                    raise RingMismatchError(f"{name!r} is used but missing from {ring}")
                idx.append(None)
        for j, name in enumerate(self.ring.names):
            if idx[j] is not None and ring.weights[idx[j]] != self.ring.weights[j]:
                raise RingMismatchError(f"weight of {name!r} differs between {self.ring} and {ring}")
        out = {}
        for m, c in self._terms.items():
            new = [0] * ring.ngens
            for j, e in enumerate(m):
                if e:
                    new[idx[j]] = e
            out[tuple(new)] = c
        return MultiPoly(ring, out)

    def __repr__(self):
        return f"MultiPoly({self.ring}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)


# ---------------------------------------------------------------------------
# canonical text form


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(ring: GradedRing, mon: Monomial) -> str:
    parts = []
    for name, e in zip(ring.names, mon):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def to_text(f: MultiPoly) -> str:
    """Canonical, byte-stable text: ``4*x^3 + 8*x*a``."""
    if not f:
        return "0"
    out = []
    for i, (mon, c) in enumerate(f.sorted_terms()):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        body = _format_monomial(f.ring, mon)
        if not body:
            text = _format_coeff(c)
        elif c == 1:
            text = body
        else:
            text = f"{_format_coeff(c)}*{body}"
        if i == 0:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, ring: GradedRing) -> MultiPoly:
    """Inverse of :func:`to_text` (also accepts any sum of coefficient*monomial terms)."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    terms: dict = {}
    pos = 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign = -1 if match.group(1) == "-" else 1
        coeff = Fraction(sign)
        mon = [0] * ring.ngens
        for factor in match.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            name, _, exp = factor.partition("^")
            mon[ring.index(name.strip())] += int(exp) if exp else 1
        mon = tuple(mon)
        terms[mon] = terms.get(mon, 0) + coeff
        pos = match.end()
    return MultiPoly(ring, terms)


# ---------------------------------------------------------------------------
# operations


def _check_same_ring(f: MultiPoly, g: MultiPoly):
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")


def arith(f: MultiPoly, g: MultiPoly, op: str) -> MultiPoly:
    _check_same_ring(f, g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Quotient ``q`` with ``q*g == f``; raises :class:`NotDivisibleError` otherwise."""
    _check_same_ring(f, g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    lm_g, lc_g = g.leading_term()
    g_terms = list(g.items())
    rem = dict(f.items())
    quot: dict = {}
    key = lambda m: order_key(ring, m)
    while rem:
        lm = max(rem, key=key)
        shift = tuple(a - b for a, b in zip(lm, lm_g))
        if min(shift) < 0:
            raise NotDivisibleError(f"{to_text(g)} does not divide {to_text(f)}")
        c = rem[lm] / lc_g
        quot[shift] = c
        for mon, cg in g_terms:
            m = tuple(a + b for a, b in zip(mon, shift))
            v = rem.get(m, 0) - c * cg
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return MultiPoly(ring, quot)


def reflect(f: MultiPoly, var: str) -> MultiPoly:
    """f with ``var`` replaced by ``-var``."""
    i = f.ring.index(var)
    return MultiPoly(f.ring, {m: (-c if m[i] % 2 else c) for m, c in f.items()})


def sym_pair(f: MultiPoly, var: str) -> tuple[MultiPoly, MultiPoly]:
    """Split f = even + var*odd with both parts even in ``var``.

    even = (f(v) + f(-v)) / 2 and odd = (f(v) - f(-v)) / (2v).
    """
    i = f.ring.index(var)
    even, odd = {}, {}
    for m, c in f.items():
        if m[i] % 2:
            odd[m[:i] + (m[i] - 1,) + m[i + 1:]] = c
        else:
            even[m] = c
    return MultiPoly(f.ring, even), MultiPoly(f.ring, odd)


def collapse_even(f: MultiPoly, var: str, target: str) -> MultiPoly:
    """Rewrite ``var^(2k)`` as ``target^k``.

    The result lives in the ring where ``var`` is replaced, at the same
    position, by ``target`` of twice the weight.  If ``target`` is already a
    generator its weight must be twice that of ``var``.
    """
    ring = f.ring
    i = ring.index(var)
    w = ring.weights[i]
    if target in ring.names:
        j = ring.index(target)
        if ring.weights[j] != 2 * w:
            raise ValueError(f"{target!r} must have weight {2 * w}")
        new_gens = ring.generators[:i] + ring.generators[i + 1:]
        new_ring = GradedRing(new_gens)
        j_new = new_ring.index(target)
    else:
        new_gens = ring.generators[:i] + ((target, 2 * w),) + ring.generators[i + 1:]
        new_ring = GradedRing(new_gens)
        j_new = i
    out = {}
    for m, c in f.items():
        e = m[i]
        if e % 2:
            raise ValueError(f"odd power {var}^{e} in {to_text(f)}; polynomial is not even in {var}")
        rest = m[:i] + m[i + 1:]
        if target in ring.names:
            new = list(rest)
            new[j_new] += e // 2
        else:
            new = list(m[:i]) + [e // 2] + list(m[i + 1:])
        out[tuple(new)] = out.get(tuple(new), 0) + c
    return MultiPoly(new_ring, out)


def expand_even(f: MultiPoly, target: str, var: str, var_weight: int = None) -> MultiPoly:
    """Inverse of :func:`collapse_even`: ``target^k`` becomes ``var^(2k)``."""
    ring = f.ring
    j = ring.index(target)
    w = ring.weights[j]
    if var_weight is None:
        var_weight = w // 2
    if 2 * var_weight != w:
        raise ValueError("target weight must be twice the weight of var")
    new_ring = GradedRing(ring.generators[:j] + ((var, var_weight),) + ring.generators[j + 1:])
    out = {m[:j] + (2 * m[j],) + m[j + 1:]: c for m, c in f.items()}
    return MultiPoly(new_ring, out)


def degree_info(f: MultiPoly) -> dict:
    degs = {f.ring.weighted_degree(m) for m in f._terms}
    if not degs:
        return {"is_homogeneous": True, "weighted_degree": None}
    if len(degs) == 1:
        return {"is_homogeneous": True, "weighted_degree": degs.pop()}
    return {"is_homogeneous": False, "weighted_degree": None}


def is_homogeneous(f: MultiPoly) -> bool:
    return degree_info(f)["is_homogeneous"]


def weighted_degree(f: MultiPoly):
    """Weighted degree of a homogeneous polynomial; None for zero."""
    info = degree_info(f)
    if not info["is_homogeneous"]:
        raise ValueError(f"{to_text(f)} is not homogeneous")
    return info["weighted_degree"]


def substitute(f: MultiPoly, mapping: Mapping[str, MultiPoly], target: GradedRing = None) -> MultiPoly:
    """Apply the ring homomorphism sending each generator to its image.

    Generators missing from ``mapping`` go to the same-named generator of the
    target ring (only those that actually occur in ``f`` need to exist
    there).  Every image must be homogeneous of its source generator's
    weight (zero is allowed).
    """
    if target is None:
        images = [img for img in mapping.values() if isinstance(img, MultiPoly)]
        target = images[0].ring if images else f.ring
    used = [any(m[i] for m in f.terms) for i in range(f.ring.ngens)]
    imgs = []
    for (name, w), occurs in zip(f.ring.generators, used):
        if name not in mapping and not occurs:
            imgs.append(None)
            continue
        if name in mapping:
            img = mapping[name]
            if not isinstance(img, MultiPoly):
                img = target.const(img)
            if img.ring != target:
                raise RingMismatchError(f"image of {name!r} lives in {img.ring}, expected {target}")
            info = degree_info(img)
            if not info["is_homogeneous"] or (img and info["weighted_degree"] != w):
                raise ValueError(f"image {to_text(img)} of {name!r} is not homogeneous of weight {w}")
        else:
            img = target.gen(name)
            if target.weight(name) != w:
                raise ValueError(f"generator {name!r} changes weight")
        imgs.append(img)
    powers: list[dict] = [{0: target.one(), 1: img} for img in imgs]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = imgs[i] ** e
        return cache[e]

    total: dict = {}
    for mon, c in f.items():
        term = target.const(c)
        for i, e in enumerate(mon):
            if e:
                term = term * power(i, e)
        for m, v in term.items():
            total[m] = total.get(m, 0) + v
    return MultiPoly(target, total)


def poly_sum(polys: Iterable[MultiPoly], ring: GradedRing) -> MultiPoly:
    total: dict = {}
    for p in polys:
        if p.ring != ring:
            raise RingMismatchError(f"{p.ring} vs {ring}")
        for m, c in p.items():
            total[m] = total.get(m, 0) + c
    return MultiPoly(ring, total)
