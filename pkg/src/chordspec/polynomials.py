"""Exact integer-coefficient polynomials with Sturm-chain real-root isolation.

Coefficients are arbitrary-precision Python ints, stored ascending by degree.
The root machinery only ever evaluates at rational points that are not roots
(bisection points landing on a root are nudged), so the classic Sturm count
V(a) - V(b) for the open interval (a, b) applies without endpoint caveats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

LESS = -1
EQUAL = 0
GREATER = 1


class IntPolynomial:
    """Univariate polynomial over the integers, coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.text()

    def text(self, var: str = "x") -> str:
        """Human-readable descending-power form, e.g. ``x^3 - 13x^2 + 40x - 24``."""
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = f"{var}" if mag == 1 else f"{mag}{var}"
            else:
                body = f"{var}^{k}" if mag == 1 else f"{mag}{var}^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "IntPolynomial":
        return IntPolynomial([0] * degree + [coeff])


X = IntPolynomial.monomial(1)


# -- rational-coefficient helpers (internal to the Sturm machinery) ---------


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over the rationals (both nonempty, b nonzero)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        q = r[-1] / lb
        shift = len(r) - 1 - db
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _primitive(fr: Sequence[Fraction]) -> IntPolynomial:
    """Clear denominators and content; keep the sign of the leading coefficient."""
    if not fr:
        return IntPolynomial([])
    from math import gcd, lcm

    den = 1
    for c in fr:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return IntPolynomial([c // g for c in ints])


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        a, b = b, _frac_rem(a, b)
    g = _primitive(a)
    if not g.is_zero and g.leading < 0:
        g = -g
    return g


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p with repeated roots collapsed to simple ones (primitive, leading > 0)."""
    if p.degree <= 0:
        raise ValueError("constant polynomial has no squarefree part")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        q = p
    else:
        num = [Fraction(c) for c in p.coeffs]
        den = [Fraction(c) for c in g.coeffs]
        # exact division: compute quotient by synthetic long division
        quot: list[Fraction] = [Fraction(0)] * (len(num) - len(den) + 1)
        r = list(num)
        while len(r) >= len(den) and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(den):
                break
            k = len(r) - len(den)
            c = r[-1] / den[-1]
            quot[k] = c
            for i, d in enumerate(den):
                r[k + i] -= c * d
            r.pop()
        q = _primitive(quot)
    if q.leading < 0:
        q = -q
    return q


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    chain = [p, p.derivative()]
    a = [Fraction(c) for c in chain[0].coeffs]
    b = [Fraction(c) for c in chain[1].coeffs]
    while b:
        r = _frac_rem(a, b)
        if not r:
            break
        nxt = -_primitive(r)
        chain.append(nxt)
        a, b = b, [Fraction(c) for c in nxt.coeffs]
    return chain


def _variations(values: Iterable) -> int:
    count = 0
    prev = 0
    for v in values:
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def _variations_at_inf(chain: Sequence[IntPolynomial]) -> int:
    return _variations(0 if q.is_zero else q.leading for q in chain)


def root_count_above(chain: Sequence[IntPolynomial], a: Fraction) -> int:
    """Number of distinct real roots in (a, +inf); requires p(a) != 0."""
    va = _variations(q(a) for q in chain)
    return va - _variations_at_inf(chain)


def root_count_between(chain: Sequence[IntPolynomial], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b); requires p(a), p(b) != 0."""
    va = _variations(q(a) for q in chain)
    vb = _variations(q(b) for q in chain)
    return va - vb


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return Fraction(m, lead) + 1


def _nonroot(
    p: IntPolynomial, x: Fraction, lo: Fraction, hi: Fraction, direction: int = 1
) -> Fraction:
    """Nudge x (staying inside (lo, hi)) until it is not a root of p."""
    step = direction * (hi - lo) / (1 << 20)
    while p(x) == 0:
        x += step
        step /= 2
        if not lo < x < hi:
            raise ArithmeticError("failed to dodge a polynomial root")
    return x


def isolate_largest_root(p: IntPolynomial, width: Fraction = Fraction(1, 10**12)):
    """Open rational interval (a, b) of length <= width containing exactly the
    largest real root of p and no other root. Returns None when p has no real
    root. p must be squarefree for termination."""
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    chain = sturm_chain(p)
    bound = root_bound(p)
    lo, hi = -bound, bound
    if root_count_between(chain, lo, hi) == 0:
        return None
    # shrink to an interval holding exactly the largest root, then to width
    while root_count_between(chain, lo, hi) > 1 or hi - lo > width:
        mid = _nonroot(p, (lo + hi) / 2, lo, hi)
        if root_count_above(chain, mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def compare_largest_roots(p: IntPolynomial, q: IntPolynomial) -> int:
    """Exact ordering of the largest real roots of p and q.

    Both must have at least one real root (true for characteristic polynomials
    of symmetric matrices). Equality is decided through the common-root factor
    gcd(p*, q*), so exact ties terminate.
    """
    sp, sq = squarefree_part(p), squarefree_part(q)
    g = poly_gcd(sp, sq)
    gchain = sturm_chain(g) if g.degree >= 1 else None
    cp, cq = sturm_chain(sp), sturm_chain(sq)
    bp = isolate_largest_root(sp, width=Fraction(1, 1024))
    bq = isolate_largest_root(sq, width=Fraction(1, 1024))
    if bp is None or bq is None:
        raise ValueError("polynomial without real roots")
    (ap, hp), (aq, hq) = bp, bq
    while True:
        if hp <= aq:
            return LESS
        if hq <= ap:
            return GREATER
        lo, hi = max(ap, aq), min(hp, hq)
        # endpoints are non-roots of sp resp. sq, and every root of g is a root
        # of both, so lo and hi cannot be roots of g
        if gchain is not None and lo < hi:
            if root_count_between(gchain, lo, hi) >= 1:
                # a shared root inside both isolating intervals is the largest
                # root of each factor, hence of both polynomials
                return EQUAL
        # shrink both intervals and retry
        ap, hp = _halve(sp, cp, ap, hp)
        aq, hq = _halve(sq, cq, aq, hq)


def _halve(p: IntPolynomial, chain, lo: Fraction, hi: Fraction):
    mid = _nonroot(p, (lo + hi) / 2, lo, hi)
    if root_count_above(chain, mid) > 0:
        return mid, hi
    return lo, mid


def count_roots_in_interval(p: IntPolynomial, a: Fraction, b: Fraction) -> int:
    """Distinct real roots of p in the open interval (a, b); endpoints are
    nudged inward if they happen to be roots."""
    sp = squarefree_part(p)
    chain = sturm_chain(sp)
    a = Fraction(a)
    b = Fraction(b)
    if sp(a) == 0:
        a = _nonroot(sp, a + (b - a) / (1 << 30), a, b)
    if sp(b) == 0:
        b = _nonroot(sp, b - (b - a) / (1 << 30), a, b, direction=-1)
    return root_count_between(chain, a, b)


def count_roots_above(p: IntPolynomial, a: Fraction) -> int:
    """Distinct real roots of p strictly greater than a (a nudged if a root)."""
    sp = squarefree_part(p)
    chain = sturm_chain(sp)
    a = Fraction(a)
    if sp(a) == 0:
        a = _nonroot(sp, a + Fraction(1, 1 << 30), a, a + 1)
    return root_count_above(chain, a)
