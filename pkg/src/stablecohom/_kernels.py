"""Inner loops of the Gröbner engine on packed monomials.

Monomials are packed into one integer: fields ``[wdeg, e_0, ..., e_{k-1}]``
from most to least significant, each ``bits`` wide with its top bit kept
clear as a guard.  Integer comparison of packed monomials is then exactly the
weighted-degree-then-lex order, multiplication is addition, and divisibility
is a single masked subtraction.

A polynomial handle is a pair ``(mons, coefs)`` of lists sorted by
decreasing monomial, with integer coefficients.  Reduction is fraction-free:
results are primitive with a positive leading coefficient.
"""
from math import gcd

DEFAULT_BITS = 32
WIDE_BITS = 64


class Layout:
    """Bit layout for packed monomials of a ring with ``nvars`` generators."""

    __slots__ = ("nvars", "bits", "shifts", "guard", "field_mask", "limit", "half_weights")

    def __init__(self, weights, bits):
        self.nvars = len(weights)
        self.bits = bits
        nfields = self.nvars + 1
        self.shifts = [bits * (nfields - 1 - i) for i in range(nfields)]
        self.field_mask = (1 << bits) - 1
        self.guard = sum(1 << (s + bits - 1) for s in self.shifts)
        self.limit = 1 << (bits - 1)
        self.half_weights = [w // 2 for w in weights]

    @property
    def total_bits(self):
        return self.bits * (self.nvars + 1)


def pack(layout, exps, weights):
    wdeg = sum(e * w for e, w in zip(exps, weights))
    if wdeg >= layout.limit:
        raise OverflowError("monomial degree exceeds packed field width")
    m = wdeg << layout.shifts[0]
    for e, s in zip(exps, layout.shifts[1:]):
        m |= e << s
    return m


def unpack(layout, m):
    fm = layout.field_mask
    return tuple((m >> s) & fm for s in layout.shifts[1:])


def mon_wdeg(layout, m):
    return m >> layout.shifts[0]


def divides(guard, a, b):
    return ((b | guard) - a) & guard == guard


def lcm(layout, a, b):
    fm = layout.field_mask
    out = 0
    wdeg = 0
    for s, hw in zip(layout.shifts[1:], layout.half_weights):
        e = max((a >> s) & fm, (b >> s) & fm)
        out |= e << s
        wdeg += 2 * hw * e
    if wdeg >= layout.limit:
        raise OverflowError("monomial degree exceeds packed field width")
    return out | (wdeg << layout.shifts[0])


def coprime(layout, a, b):
    fm = layout.field_mask
    for s in layout.shifts[1:]:
        if (a >> s) & fm and (b >> s) & fm:
            return False
    return True


def make_poly(layout, mons, coefs):
    return (list(mons), list(coefs))


def poly_terms(handle):
    return handle


def _primitive(mons, coefs):
    g = 0
    for c in coefs:
        g = gcd(g, c)
        if g == 1:
            break
    if coefs and coefs[0] < 0:
        g = -g
    if g not in (0, 1):
        coefs = [c // g for c in coefs]
    return mons, coefs


def _sub_scaled(fm, fc, a, gm, gc, shift, b):
    """a*f - b*(x^shift * g), both sorted descending, merged."""
    om, oc = [], []
    i = j = 0
    nf, ng = len(fm), len(gm)
    while i < nf and j < ng:
        mf = fm[i]
        mg = gm[j] + shift
        if mf > mg:
            om.append(mf)
            oc.append(a * fc[i])
            i += 1
        elif mf < mg:
            om.append(mg)
            oc.append(-b * gc[j])
            j += 1
        else:
            c = a * fc[i] - b * gc[j]
            if c:
                om.append(mf)
                oc.append(c)
            i += 1
            j += 1
    while i < nf:
        om.append(fm[i])
        oc.append(a * fc[i])
        i += 1
    while j < ng:
        om.append(gm[j] + shift)
        oc.append(-b * gc[j])
        j += 1
    return om, oc


def spoly(layout, f, g):
    fm, fc = f
    gm, gc = g
    l = lcm(layout, fm[0], gm[0])
    d = gcd(fc[0], gc[0])
    a, b = gc[0] // d, fc[0] // d
    # a * (l/lm f) * f - b * (l/lm g) * g
    sf = l - fm[0]
    sg = l - gm[0]
    shifted_f = [m + sf for m in fm[1:]]
    om, oc = _sub_scaled(shifted_f, fc[1:], a, gm[1:], gc[1:], sg, b)
    return _primitive(om, oc)


def reduce(layout, f, basis, full=True):
    """Normal form of ``f`` modulo ``basis`` (list of handles), up to a unit."""
    guard = layout.guard
    fm, fc = list(f[0]), list(f[1])
    leads = [(g[0][0], g) for g in basis]
    rm, rc = [], []
    steps = 0
    while fm:
        lm = fm[0]
        for glm, g in leads:
            if ((lm | guard) - glm) & guard == guard:
                gm, gc = g
                lc = fc[0]
                d = gcd(lc, gc[0])
                a, b = gc[0] // d, lc // d
                fm, fc = _sub_scaled(fm[1:], fc[1:], a, gm[1:], gc[1:], lm - glm, b)
                if a != 1:
                    rc = [a * c for c in rc]
                steps += 1
                if steps % 16 == 0:
                    g0 = 0
                    for c in rc + fc:
                        g0 = gcd(g0, c)
                        if g0 == 1:
                            break
                    if g0 > 1:
                        rc = [c // g0 for c in rc]
                        fc = [c // g0 for c in fc]
                break
        else:
            if not full:
                return _primitive(fm, fc)
            rm.append(lm)
            rc.append(fc[0])
            fm, fc = fm[1:], fc[1:]
    return _primitive(rm, rc)


def hilbert_numerator(gens, half_weights):
    """Numerator N(u), u = t^2, of the Hilbert series of k[x]/<gens>.

    ``gens`` are exponent tuples of a monomial ideal; the series is
    ``N(u) / prod(1 - u^(w_i/2))``.  Returned as a dense coefficient list.
    """
    memo = {}
    return _hn(_minimalize(gens), tuple(half_weights), memo)


def _minimalize(gens):
    gens = sorted(set(tuple(g) for g in gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _padd(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _hn(gens, hw, memo):
    if gens in memo:
        return memo[gens]
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return []
    nvars = len(hw)
    counts = [0] * nvars
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    if max(counts) <= 1:
        # pairwise coprime generators: a regular sequence
        out = [1]
        for g in gens:
            d = sum(e * w for e, w in zip(g, hw))
            factor = [0] * (d + 1)
            factor[0] = 1
            factor[d] -= 1
            out = _pmul(out, factor)
        memo[gens] = out
        return out
    x = max(range(nvars), key=lambda i: (counts[i], -i))
    e = min(g[x] for g in gens if g[x])
    pure = tuple(e if i == x else 0 for i in range(nvars))
    plus = _minimalize([g for g in gens if not g[x]] + [pure])
    colon = _minimalize([g[:x] + (max(g[x] - e, 0),) + g[x + 1:] for g in gens])
    shift = e * hw[x]
    out = _padd(_hn(plus, hw, memo), [0] * shift + _hn(colon, hw, memo))
    memo[gens] = out
    return out
