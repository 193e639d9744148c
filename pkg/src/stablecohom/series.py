"""Poincaré/Hilbert series as rational functions with (1 - t^k) denominators.

A :class:`RationalSeries` is ``num(t) / prod_k (1 - t^k)``.  Everything in
this package lives in even degree, so internally polynomials are dense
integer lists in ``u = t^2`` and the stored denominator exponents ``k`` are
exponents of ``t`` (always even).
"""
from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

# ---------------------------------------------------------------------------
# dense polynomial helpers in u = t^2 (lists of ints, index = power of u)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _add(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _scale(p: Sequence, c) -> list:
    return _trim([c * a for a in p])


def _mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _divmod(p: Sequence, q: Sequence):
    """Division over Q; returns (quotient, remainder) with Fraction entries."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(a) for a in p]
    dq = len(q) - 1
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(rem) - dq, 0)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i] / lead
        if c:
            quot[i - dq] = c
            for j, b in enumerate(q):
                rem[i - dq + j] -= c * b
    return _trim(quot), _trim(rem[:dq] if dq else [])


def _exact_div(p: Sequence, q: Sequence):
    """p / q if q divides p with integer quotient, else None."""
    quot, rem = _divmod(p, q)
    if rem or any(c.denominator != 1 for c in quot):
        return None
    return [int(c) for c in quot]


def _one_minus(k: int) -> list:
    """1 - u^k."""
    p = [0] * (k + 1)
    p[0] = 1
    p[k] -= 1
    return p


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple:
    """m-th cyclotomic polynomial in u, integer coefficients."""
    p = [-1] + [0] * (m - 1) + [1]  # u^m - 1
    for d in range(1, m):
        if m % d == 0:
            p = _exact_div(p, _cyclotomic(d))
    return tuple(p)


def _poly_gcd(p: Sequence, q: Sequence) -> list:
    """Primitive integer gcd (positive leading coefficient)."""
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in q]
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    if not a:
        return []
    den = 1
    for c in a:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = _gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------


class TPoly:
    """Integer polynomial in t supported on even exponents."""

    __slots__ = ("_u",)

    def __init__(self, coeffs: Mapping[int, int] = None):
        u: list = []
        for exp, c in (coeffs or {}).items():
            exp = int(exp)
            if exp < 0 or exp % 2:
                raise ValueError(f"exponent t^{exp} is not a nonnegative even integer")
            if int(c) != c:
                raise ValueError(f"non-integer coefficient {c}")
            k = exp // 2
            if len(u) <= k:
                u.extend([0] * (k + 1 - len(u)))
            u[k] += int(c)
        self._u = tuple(_trim(u))

    @classmethod
    def from_u(cls, coeffs: Sequence[int]) -> "TPoly":
        p = cls()
        p._u = tuple(_trim([int(c) for c in coeffs]))
        return p

    @property
    def u_coeffs(self) -> tuple:
        return self._u

    @property
    def coefficients(self) -> dict:
        return {2 * i: c for i, c in enumerate(self._u) if c}

    @property
    def degree(self) -> int:
        """Degree in t; -1 for zero."""
        return 2 * (len(self._u) - 1) if self._u else -1

    def __eq__(self, other):
        return isinstance(other, TPoly) and self._u == other._u

    def __hash__(self):
        return hash(self._u)

    def __bool__(self):
        return bool(self._u)

    def __add__(self, other):
        return TPoly.from_u(_add(self._u, other._u))

    def __sub__(self, other):
        return TPoly.from_u(_add(self._u, _scale(other._u, -1)))

    def __mul__(self, other):
        if isinstance(other, int):
            return TPoly.from_u(_scale(self._u, other))
        return TPoly.from_u(_mul(self._u, other._u))

    __rmul__ = __mul__

    def __neg__(self):
        return TPoly.from_u(_scale(self._u, -1))

    def __repr__(self):
        return f"TPoly({_poly_text(self._u)!r})"

    def __str__(self):
        return _poly_text(self._u)


def _poly_text(u: Sequence[int]) -> str:
    if not any(u):
        return "0"
    parts = []
    for i, c in enumerate(u):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        elif i == 1:
            body = "t^2" if a == 1 else f"{a}*t^2"
        else:
            body = f"t^{2 * i}" if a == 1 else f"{a}*t^{2 * i}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


class RationalSeries:
    """``numerator / prod(1 - t^k for k in denominator)`` in canonical form.

    Canonical form: each denominator factor that can be cancelled or shrunk
    (``1 - t^k`` to ``1 - t^j`` with ``j | k``) by exact division of the
    numerator is.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator, denominator: Iterable[int] = ()):
        if isinstance(numerator, TPoly):
            num = list(numerator.u_coeffs)
        elif isinstance(numerator, Mapping):
            num = list(TPoly(numerator).u_coeffs)
        elif isinstance(numerator, int):
            num = [numerator] if numerator else []
        else:
            raise TypeError(f"cannot build a numerator from {numerator!r}")
        den = []
        for k in denominator:
            k = int(k)
            if k <= 0 or k % 2:
                raise ValueError(f"denominator factor (1 - t^{k}) must have positive even exponent")
            den.append(k // 2)
        self._num, self._den = _canonicalize(num, den)

    @classmethod
    def _raw(cls, num_u: list, den_u: list) -> "RationalSeries":
        s = cls.__new__(cls)
        s._num, s._den = _canonicalize(list(num_u), list(den_u))
        return s

    @classmethod
    def polynomial(cls, coeffs: Mapping[int, int]) -> "RationalSeries":
        return cls(TPoly(coeffs))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "RationalSeries":
        return cls(TPoly({exp: coeff}))

    @classmethod
    def one_minus(cls, k: int) -> "RationalSeries":
        """The series ``1 - t^k`` (k even)."""
        return cls(TPoly({0: 1}) - TPoly({k: 1}))

    @classmethod
    def inverse_one_minus(cls, *ks: int) -> "RationalSeries":
        """``1 / prod (1 - t^k)``."""
        return cls(1, ks)

    @property
    def numerator(self) -> TPoly:
        return TPoly.from_u(self._num)

    @property
    def denominator(self) -> tuple:
        """Sorted t-exponents k of the (1 - t^k) factors."""
        return tuple(2 * k for k in self._den)

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self):
        return bool(self._num)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RationalSeries):
            return other
        if isinstance(other, int):
            return RationalSeries(other)
        if isinstance(other, TPoly):
            return RationalSeries(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        common, extra_a, extra_b = _common_den(self._den, other._den)
        num = _add(_mul(self._num, _den_poly(extra_a)), _mul(other._num, _den_poly(extra_b)))
        return RationalSeries._raw(num, common)

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries._raw(_scale(self._num, -1), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalSeries._raw(_mul(self._num, other._num), self._den + other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._num:
            raise ZeroDivisionError("division by the zero series")
        num = _mul(self._num, _den_poly(other._den))
        den = list(self._den)
        divisor = list(other._num)
        q = _exact_div(num, divisor)
        if q is None:
            g = _poly_gcd(num, divisor)
            num = _exact_div(num, g) if len(g) > 1 else num
            divisor = _exact_div(divisor, g) if len(g) > 1 else divisor
            if num is None or divisor is None:
                raise ArithmeticError("gcd step failed")  # pragma: no cover
            num, extra = _absorb_cyclotomic(num, divisor)
            den += extra
            q = num
        return RationalSeries._raw(q, den)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        result = RationalSeries(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return equals(self, other)

    def __hash__(self):
        return hash((self._num, self._den))

    def __repr__(self):
        return f"RationalSeries({str(self)!r})"

    def __str__(self):
        num = _poly_text(self._num)
        if not self._den:
            return num
        den = "".join(f"(1 - t^{2 * k})" for k in self._den)
        if len(self._num) > 1 and sum(1 for c in self._num if c) > 1:
            num = f"({num})"
        return f"{num}/({den})" if len(self._den) > 1 else f"{num}/{den}"

    # conversions

    def to_json(self) -> dict:
        return {"num": {str(2 * i): c for i, c in enumerate(self._num) if c},
                "den": [2 * k for k in self._den]}

    @classmethod
    def from_json(cls, data) -> "RationalSeries":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(TPoly({int(k): v for k, v in data["num"].items()}), data["den"])


def _canonicalize(num: list, den: list):
    num = _trim([int(c) for c in num])
    if not num:
        return (), ()
    den = sorted(den, reverse=True)
    changed = True
    while changed:
        changed = False
        for idx, k in enumerate(den):
            q = _exact_div(num, _one_minus(k))
            if q is not None:
                num = q
                del den[idx]
                changed = True
                break
            for j in range(1, k):
                if k % j:
                    continue
                # (1 - u^k) / (1 - u^j) = 1 + u^j + ... + u^(k-j)
                factor = [1 if i % j == 0 else 0 for i in range(k - j + 1)]
                q = _exact_div(num, factor)
                if q is not None:
                    num = q
                    den[idx] = j
                    changed = True
                    break
            if changed:
                break
    return tuple(num), tuple(sorted(den))


def _den_poly(den: Iterable[int]) -> list:
    p = [1]
    for k in den:
        p = _mul(p, _one_minus(k))
    return p


def _common_den(a: Sequence[int], b: Sequence[int]):
    ca, cb = Counter(a), Counter(b)
    common = ca | cb
    extra_a = list((common - ca).elements())
    extra_b = list((common - cb).elements())
    return sorted(common.elements()), extra_a, extra_b


def _absorb_cyclotomic(num: list, divisor: list):
    """Rewrite num/divisor with a (1 - u^m) denominator.

    ``divisor`` must be +-1 times a product of cyclotomic polynomials in u.
    Returns the new numerator and the list of m's added to the denominator.
    """
    extra = []
    rest = list(divisor)
    deg = len(rest) - 1
    m = 1
    while len(rest) > 1 and m <= 2 * deg * deg + 2:
        phi = list(_cyclotomic(m))
        q = _exact_div(rest, phi)
        if q is not None:
            rest = q
            cofactor = _exact_div(_one_minus(m), phi)
            num = _mul(num, cofactor)
            extra.append(m)
        else:
            m += 1
    if rest not in ([1], [-1]):
        raise ValueError("divisor numerator is not a product of cyclotomic factors; "
                         "the quotient has no (1 - t^k) denominator form")
    if rest == [-1]:
        num = _scale(num, -1)
    return num, extra


# ---------------------------------------------------------------------------
# public operations


def series_arith(a: RationalSeries, b: RationalSeries, op: str) -> RationalSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def expand_to(s: RationalSeries, order: int) -> list:
    """Coefficients of t^0, t^2, ..., t^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    n = order // 2 + 1
    coeffs = list(s._num[:n]) + [0] * max(0, n - len(s._num))
    for k in s._den:
        # multiply by 1/(1 - u^k): running sum with stride k
        for i in range(k, n):
            coeffs[i] += coeffs[i - k]
    return coeffs


def equals(a: RationalSeries, b: RationalSeries) -> bool:
    return _mul(a._num, _den_poly(b._den)) == _mul(b._num, _den_poly(a._den))


def as_polynomial(s: RationalSeries):
    """The series as a TPoly if it is a polynomial, else None."""
    q = _exact_div(list(s._num), _den_poly(s._den)) if s._num else []
    return None if q is None else TPoly.from_u(q)


def structural_checks(s: RationalSeries) -> dict:
    """Polynomial / nonnegative / palindromic flags.

    For a non-polynomial series, ``nonnegative`` inspects the expansion up to
    the numerator degree plus the denominator degree and ``palindromic`` is
    ``None``.
    """
    poly = as_polynomial(s)
    if poly is None:
        horizon = 2 * (len(s._num) + sum(s._den))
        return {"is_polynomial": False,
                "nonnegative": all(c >= 0 for c in expand_to(s, horizon)),
                "palindromic": None}
    u = list(poly.u_coeffs)
    return {"is_polynomial": True,
            "nonnegative": all(c >= 0 for c in u),
            "palindromic": u == u[::-1]}


def product_series(degrees: Iterable[int], weights: Iterable[int]) -> RationalSeries:
    """prod(1 - t^d) / prod(1 - t^w): the complete-intersection series."""
    num = RationalSeries(1)
    for d in degrees:
        num = num * RationalSeries.one_minus(d)
    return num * RationalSeries(1, list(weights))


def t_poly(coeffs: Mapping[int, int]) -> RationalSeries:
    return RationalSeries.polynomial(coeffs)
