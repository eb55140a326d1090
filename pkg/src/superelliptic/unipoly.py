"""Univariate polynomials over an exact coefficient domain.

Polynomials are sparse ``{exponent: raw coefficient}`` maps tied to a
:class:`~superelliptic.rings.Domain`.  The degree of the zero polynomial is
the sentinel ``NEG_INF``.  Products, powers and compositions are guarded by
a configurable degree cap so runaway symbolic expansion fails fast.

Resultants are Sylvester-matrix determinants.  The default engine is the
subresultant polynomial remainder sequence (Brown's algorithm), which is
fraction-free over polynomial coefficient domains; a direct Bareiss
elimination of the Sylvester matrix is kept as an independent cross-check
(`resultant(..., method="sylvester")`).

Mobius transport of ``f`` by ``mu = (a x + b)/(c x + d)`` is the polynomial
numerator ``f(mu(x)) * (c x + d)^deg(f)``; its roots are the preimages of
the roots of ``f`` under ``mu``, and its degree drops by one for each root
that ``mu`` sends to infinity.  Transport by M and then by N yields a
polynomial proportional to transport by the matrix product M*N; transport
does not re-monicize.
"""

from __future__ import annotations

import threading
from typing import Any

from .rings import QQ as QQ_, Domain, DomainMismatchError, El, embed

NEG_INF = float("-inf")

_DEFAULT_DEGREE_CAP = 4096
_cap_state = threading.local()


class DegreeCapError(ValueError):
    """A product or composition exceeded the configured degree cap."""


def degree_cap() -> int:
    return getattr(_cap_state, "cap", _DEFAULT_DEGREE_CAP)


def set_degree_cap(n: int) -> None:
    """Set the expansion guard for the current thread (so parallel batch
    requests cannot interfere with each other)."""
    if n < 1:
        raise ValueError("degree cap must be positive")
    _cap_state.cap = n


def _check_cap(deg: int) -> None:
    cap = degree_cap()
    if deg > cap:
        raise DegreeCapError(f"degree {deg} exceeds cap {cap}")


class Infinity:
    """The point at infinity on the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = Infinity()


class UniPoly:
    """Sparse univariate polynomial over a coefficient domain."""

    __slots__ = ("domain", "coeffs", "var")

    def __init__(self, domain: Domain, coeffs: dict[int, El] | None = None, var: str = "x"):
        self.domain = domain
        self.var = var
        cc = {}
        if coeffs:
            is_zero = domain.is_zero
            cc = {e: c for e, c in coeffs.items() if not is_zero(c)}
        self.coeffs = cc

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, domain: Domain, var: str = "x") -> "UniPoly":
        return cls(domain, {}, var)

    @classmethod
    def one(cls, domain: Domain, var: str = "x") -> "UniPoly":
        return cls(domain, {0: domain.one()}, var)

    @classmethod
    def constant(cls, domain: Domain, c: El, var: str = "x") -> "UniPoly":
        return cls(domain, {0: c}, var)

    @classmethod
    def gen(cls, domain: Domain, var: str = "x") -> "UniPoly":
        return cls(domain, {1: domain.one()}, var)

    @classmethod
    def from_list(cls, domain: Domain, coeffs, var: str = "x") -> "UniPoly":
        """From an iterable of raws, constant term first."""
        return cls(domain, dict(enumerate(coeffs)), var)

    @classmethod
    def from_int_list(cls, domain: Domain, ints, var: str = "x") -> "UniPoly":
        return cls(domain, {e: domain.from_int(n) for e, n in enumerate(ints)}, var)

    # -- basic queries ----------------------------------------------------

    def degree(self) -> int | float:
        return max(self.coeffs) if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, e: int) -> El:
        return self.coeffs.get(e, self.domain.zero())

    def lc(self) -> El:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[max(self.coeffs)]

    def constant_term(self) -> El:
        return self.coeff(0)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.domain.is_one(self.lc())

    def is_constant(self) -> bool:
        return not self.coeffs or max(self.coeffs) == 0

    def exponent_support(self) -> list[int]:
        return sorted(self.coeffs)

    def to_list(self) -> list[El]:
        """Coefficient list, constant term first."""
        z = self.domain.zero()
        d = int(self.degree()) if self.coeffs else -1
        return [self.coeffs.get(e, z) for e in range(d + 1)]

    def _same(self, other: "UniPoly") -> None:
        if not isinstance(other, UniPoly):
            raise TypeError(f"expected UniPoly, got {type(other).__name__}")
        if self.domain != other.domain:
            raise DomainMismatchError(
                f"polynomials over different domains: {self.domain!r} vs {other.domain!r}"
            )

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._same(other)
        dom = self.domain
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            if e in out:
                s = dom.add(out[e], c)
                if dom.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        p = UniPoly.__new__(UniPoly)
        p.domain, p.coeffs, p.var = dom, out, self.var
        return p

    def __neg__(self) -> "UniPoly":
        dom = self.domain
        p = UniPoly.__new__(UniPoly)
        p.domain, p.var = dom, self.var
        p.coeffs = {e: dom.neg(c) for e, c in self.coeffs.items()}
        return p

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._same(other)
        dom = self.domain
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero(dom, self.var)
        _check_cap(max(self.coeffs) + max(other.coeffs))
        mul, add, is_zero = dom.mul, dom.add, dom.is_zero
        f, g = self.coeffs, other.coeffs
        if len(f) > len(g):
            f, g = g, f
        out: dict[int, El] = {}
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                e = e1 + e2
                p = mul(c1, c2)
                if e in out:
                    s = add(out[e], p)
                    if is_zero(s):
                        del out[e]
                    else:
                        out[e] = s
                elif not is_zero(p):
                    out[e] = p
        q = UniPoly.__new__(UniPoly)
        q.domain, q.coeffs, q.var = dom, out, self.var
        return q

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        if self.coeffs:
            _check_cap(max(self.coeffs) * n)
        out = UniPoly.one(self.domain, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def scale(self, c: El) -> "UniPoly":
        dom = self.domain
        if dom.is_zero(c):
            return UniPoly.zero(dom, self.var)
        mul = dom.mul
        return UniPoly(dom, {e: mul(v, c) for e, v in self.coeffs.items()}, self.var)

    def shift_exp(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        return UniPoly(self.domain, {e + k: c for e, c in self.coeffs.items()}, self.var)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self.scale(self.domain.inv(self.lc()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.domain != other.domain:
            return False
        if set(self.coeffs) != set(other.coeffs):
            return False
        eq = self.domain.eq
        return all(eq(c, other.coeffs[e]) for e, c in self.coeffs.items())

    def __hash__(self):
        key = self.domain.key
        return hash((self.domain, frozenset((e, key(c)) for e, c in self.coeffs.items())))

    # -- division ---------------------------------------------------------

    def divrem(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Quotient and remainder; the divisor's leading coefficient must be
        invertible."""
        self._same(other)
        dom = self.domain
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        dg = max(other.coeffs)
        lead_inv = dom.inv(other.coeffs[dg])
        rem = dict(self.coeffs)
        quo: dict[int, El] = {}
        while rem:
            dr = max(rem)
            if dr < dg:
                break
            f = dom.mul(rem[dr], lead_inv)
            quo[dr - dg] = f
            for e, c in other.coeffs.items():
                t = e + dr - dg
                v = dom.sub(rem.get(t, dom.zero()), dom.mul(f, c))
                if dom.is_zero(v):
                    rem.pop(t, None)
                else:
                    rem[t] = v
        return UniPoly(dom, quo, self.var), UniPoly(dom, rem, self.var)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divrem(other)[1]

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divrem(other)[0]

    def divides_exactly(self, other: "UniPoly") -> "UniPoly | None":
        """Return other/self when self divides other exactly, else None."""
        quo, rem = other.divrem(self)
        return quo if rem.is_zero() else None

    # -- calculus & substitution -----------------------------------------

    def derivative(self) -> "UniPoly":
        dom = self.domain
        out = {}
        for e, c in self.coeffs.items():
            if e:
                v = dom.mul(c, dom.from_int(e))
                if not dom.is_zero(v):
                    out[e - 1] = v
        return UniPoly(dom, out, self.var)

    def evaluate(self, x: El) -> El:
        """Horner evaluation at a raw domain value."""
        dom = self.domain
        if not self.coeffs:
            return dom.zero()
        exps = sorted(self.coeffs, reverse=True)
        acc = self.coeffs[exps[0]]
        prev = exps[0]
        for e in exps[1:]:
            acc = dom.mul(acc, dom.pow(x, prev - e))
            acc = dom.add(acc, self.coeffs[e])
            prev = e
        if prev:
            acc = dom.mul(acc, dom.pow(x, prev))
        return acc

    def map_domain(self, dst: Domain) -> "UniPoly":
        """Embed all coefficients into a structurally larger domain."""
        src = self.domain
        return UniPoly(dst, {e: embed(src, dst, c) for e, c in self.coeffs.items()}, self.var)

    def rename(self, var: str) -> "UniPoly":
        return UniPoly(self.domain, dict(self.coeffs), var)

    # -- printing ----------------------------------------------------------

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        from .rings import _format_term

        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            mono = self.var if e == 1 else (f"{self.var}^{e}" if e else "")
            parts.append(_format_term(self.domain, self.coeffs[e], mono, first=not parts))
        return "".join(parts)


def compose(f: UniPoly, g: UniPoly) -> UniPoly:
    """f(g(x)) by Horner evaluation over the polynomial ring."""
    f._same(g)
    dom = f.domain
    if not f.coeffs:
        return UniPoly.zero(dom, g.var)
    df = max(f.coeffs)
    if g.coeffs:
        _check_cap(df * max(g.coeffs))
    out = UniPoly.constant(dom, f.coeff(df), g.var)
    for e in range(df - 1, -1, -1):
        out = out * g
        c = f.coeffs.get(e)
        if c is not None:
            out = out + UniPoly.constant(dom, c, g.var)
    return out


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over a field coefficient domain.

    Rational coefficients go through a primitive pseudo-remainder sequence
    over the integers and rational-function coefficients through the
    multivariate gcd with x adjoined as an extra variable; both avoid the
    coefficient explosion of naive Euclid.  Other field domains (finite
    fields, number-field towers) use monic Euclid directly.
    """
    from .rings import FunctionField, Rationals, mpq

    f._same(g)
    dom = f.domain
    if isinstance(dom, Rationals):
        return _qq_gcd(f, g)
    if isinstance(dom, FunctionField):
        return _ff_gcd(f, g)
    if dom.char == 0:
        return _tower_gcd(f, g)
    a, b = f, g
    while b.coeffs:
        a, b = b, a % b
    if not a.coeffs:
        return a
    return a.monic()


def _iter_rational_leaves(raw):
    if isinstance(raw, tuple):
        for part in raw:
            yield from _iter_rational_leaves(part)
    else:
        yield raw


def _strip_rational_content(f: UniPoly) -> UniPoly:
    """Divide out the gcd of all rational coordinates (numerators over the
    lcm of denominators); keeps pseudo-remainder chains from exploding."""
    from math import gcd as igcd

    from .rings import mpq

    num_gcd = 0
    den_lcm = 1
    for c in f.coeffs.values():
        for leaf in _iter_rational_leaves(c):
            num_gcd = igcd(num_gcd, abs(int(leaf.numerator)))
            d = int(leaf.denominator)
            den_lcm = den_lcm * d // igcd(den_lcm, d)
    if num_gcd in (0, den_lcm):
        return f
    return f.scale(_embed_mpq(f.domain, mpq(den_lcm, num_gcd)))


def _embed_mpq(dom, q):
    return dom.div(dom.from_int(int(q.numerator)), dom.from_int(int(q.denominator)))


def _tower_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Primitive pseudo-remainder gcd for characteristic-zero quotient
    towers, avoiding the coefficient growth of naive monic Euclid."""
    a, b = _strip_rational_content(f), _strip_rational_content(g)
    if not a.coeffs:
        return b.monic() if b.coeffs else b
    if not b.coeffs:
        return a.monic()
    if a.degree() < b.degree():
        a, b = b, a
    while b.coeffs:
        r = _prem(a, b)
        r = _strip_rational_content(r)
        a, b = b, r
    return a.monic()


def _qq_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    from math import gcd as igcd

    from .rings import mpq

    def primitive_ints(p: UniPoly) -> dict[int, int]:
        if not p.coeffs:
            return {}
        den = 1
        for c in p.coeffs.values():
            den = den * int(c.denominator) // igcd(den, int(c.denominator))
        ints = {e: int(c * den) for e, c in p.coeffs.items()}
        content = 0
        for v in ints.values():
            content = igcd(content, abs(v))
        return {e: v // content for e, v in ints.items()}

    a, b = primitive_ints(f), primitive_ints(g)
    if not a or not b:
        chosen = a or b
        out = UniPoly(QQ_, {e: mpq(c) for e, c in chosen.items()}, f.var)
        return out.monic() if out.coeffs else out
    if max(a) < max(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b, then primitive part
        da, db = max(a), max(b)
        lb = b[db]
        r = dict(a)
        while r and max(r) >= db:
            dr = max(r)
            lr = r.pop(dr)
            new = {e: c * lb for e, c in r.items()}
            for e, c in b.items():
                if e == db:
                    continue
                t = e + dr - db
                v = new.get(t, 0) - lr * c
                if v:
                    new[t] = v
                else:
                    new.pop(t, None)
            r = new
        content = 0
        for v in r.values():
            content = igcd(content, abs(v))
        if content:
            r = {e: v // content for e, v in r.items()}
        a, b = b, r
    out = UniPoly(QQ_, {e: mpq(c) for e, c in a.items()}, f.var)
    return out.monic()


def _ff_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    from .rings import mp_gcd, mp_mul

    dom = f.domain
    base = dom.base
    nv = dom.nvars

    def as_poly_dict(p: UniPoly) -> dict:
        # clear denominators: multiply through by the product of them
        den = {(0,) * nv: base.one()}
        for c in p.coeffs.values():
            den = mp_mul(base, den, c[1])
        out: dict = {}
        for e, c in p.coeffs.items():
            num, cden = c
            q = mp_mul(base, num, _mp_quotient(base, den, cden))
            for mono, coeff in q.items():
                out[mono + (e,)] = coeff
        return {k: v for k, v in out.items() if not base.is_zero(v)}

    def _mp_quotient(bb, num, den):
        from .rings import mp_exact_div

        q = mp_exact_div(bb, num, den)
        assert q is not None
        return q

    big = mp_gcd(base, as_poly_dict(f), as_poly_dict(g))
    out_coeffs: dict[int, Any] = {}
    for mono, coeff in big.items():
        e = mono[-1]
        part = out_coeffs.setdefault(e, {})
        part[mono[:-1]] = coeff
    result = UniPoly(
        dom, {e: dom.from_poly(part) for e, part in out_coeffs.items()}, f.var
    )
    return result.monic()


def polys_coprime(f: UniPoly, g: UniPoly) -> bool:
    """Exact coprimality test.

    In characteristic zero a reduction modulo a prime can only enlarge the
    gcd, so a constant gcd after reduction certifies coprimality; when no
    usable prime is found (bad denominators, modulus collisions) the exact
    gcd decides.  This keeps the hot squarefree and disjointness checks off
    the coefficient-explosion path of number-field Euclid.
    """
    if f.is_zero() or g.is_zero():
        return False
    if f.is_constant() or g.is_constant():
        return True
    if f.domain.char == 0:
        for p in (65537, 2147483647, 39916801):
            verdict = _coprime_mod_p(f, g, p)
            if verdict:
                return True
            if verdict is False:
                break  # nontrivial common factor mod p: decide exactly
    return poly_gcd(f, g).degree() == 0


def _coprime_mod_p(f: UniPoly, g: UniPoly, p: int) -> bool | None:
    from .rings import PrimeField, ZeroDivisorError

    try:
        dom_p = _mod_p_domain(f.domain, p)
        fp = UniPoly(dom_p, {e: _mod_p_raw(f.domain, c, dom_p) for e, c in f.coeffs.items()}, f.var)
        gp = UniPoly(dom_p, {e: _mod_p_raw(g.domain, c, dom_p) for e, c in g.coeffs.items()}, g.var)
        if fp.degree() != f.degree() or gp.degree() != g.degree():
            return None  # leading coefficient vanished: bad prime
        return poly_gcd(fp, gp).degree() == 0
    except (ZeroDivisorError, ZeroDivisionError, ValueError):
        return None


def _mod_p_domain(dom: Domain, p: int) -> Domain:
    from .rings import FunctionField, PrimeField, QuotientRing, Rationals

    if isinstance(dom, Rationals):
        return PrimeField(p)
    if isinstance(dom, QuotientRing):
        base_p = _mod_p_domain(dom.base, p)
        minpoly = tuple(_mod_p_raw(dom.base, c, base_p) for c in dom.minpoly)
        return QuotientRing(base_p, dom.name, minpoly, field=True)
    if isinstance(dom, FunctionField):
        return FunctionField(_mod_p_domain(dom.base, p), dom.names)
    raise ValueError("no modular image for this domain")


def _mod_p_raw(dom: Domain, raw, dom_p: Domain):
    from .rings import FunctionField, QuotientRing, Rationals

    if isinstance(dom, Rationals):
        den = int(raw.denominator) % dom_p.p  # type: ignore[attr-defined]
        if den == 0:
            raise ValueError("prime divides a denominator")
        return dom_p.mul(dom_p.from_int(int(raw.numerator)), dom_p.inv(den))
    if isinstance(dom, QuotientRing):
        return tuple(_mod_p_raw(dom.base, c, dom_p.base) for c in raw)
    if isinstance(dom, FunctionField):
        num, den = raw
        lift = lambda d: {e: _mod_p_raw(dom.base, c, dom_p.base) for e, c in d.items()}
        return dom_p._reduce(lift(num), lift(den))
    raise ValueError("no modular image for this value")


def squarefree_test(f: UniPoly) -> bool:
    """True iff f has no repeated roots, i.e. gcd(f, f') is constant.

    Over a prime field a vanishing derivative means f is a p-th power up to
    factors, so the gcd test still answers correctly.
    """
    if f.is_constant():
        return True
    df = f.derivative()
    if df.is_zero():
        return False
    return polys_coprime(f, df)


def proportional(f: UniPoly, g: UniPoly) -> El | None:
    """Constant c with f = c*g, if one exists; (0,0) -> 1 by convention."""
    f._same(g)
    dom = f.domain
    if not f.coeffs and not g.coeffs:
        return dom.one()
    if not f.coeffs or not g.coeffs:
        return None
    if f.degree() != g.degree() or set(f.coeffs) != set(g.coeffs):
        return None
    c = dom.div(f.lc(), g.lc())
    for e, v in g.coeffs.items():
        if not dom.eq(f.coeffs[e], dom.mul(c, v)):
            return None
    return c


# ---------------------------------------------------------------------------
# Mobius transformations
# ---------------------------------------------------------------------------


class Mobius:
    """An element of PGL(2) over a coefficient domain, as a matrix (a b; c d)
    acting by x -> (a x + b)/(c x + d).  The matrix is kept as given (no
    projective normalization); ``key()`` provides the scalar-normalized
    form used to compare group elements.
    """

    __slots__ = ("domain", "a", "b", "c", "d")

    def __init__(self, domain: Domain, a: El, b: El, c: El, d: El):
        det = domain.sub(domain.mul(a, d), domain.mul(b, c))
        if domain.is_zero(det):
            raise ValueError("singular matrix does not define a Mobius map")
        self.domain = domain
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def from_ints(cls, domain: Domain, a: int, b: int, c: int, d: int) -> "Mobius":
        fi = domain.from_int
        return cls(domain, fi(a), fi(b), fi(c), fi(d))

    @classmethod
    def identity(cls, domain: Domain) -> "Mobius":
        return cls.from_ints(domain, 1, 0, 0, 1)

    def entries(self) -> tuple[El, El, El, El]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "Mobius") -> "Mobius":
        if self.domain != other.domain:
            raise DomainMismatchError("Mobius maps over different domains")
        dom = self.domain
        a = dom.add(dom.mul(self.a, other.a), dom.mul(self.b, other.c))
        b = dom.add(dom.mul(self.a, other.b), dom.mul(self.b, other.d))
        c = dom.add(dom.mul(self.c, other.a), dom.mul(self.d, other.c))
        d = dom.add(dom.mul(self.c, other.b), dom.mul(self.d, other.d))
        return Mobius(dom, a, b, c, d)

    def inverse(self) -> "Mobius":
        dom = self.domain
        return Mobius(dom, self.d, dom.neg(self.b), dom.neg(self.c), self.a)

    def apply(self, pt):
        """Image of a point (raw value or INF) on the projective line."""
        dom = self.domain
        if pt is INF:
            if dom.is_zero(self.c):
                return INF
            return dom.div(self.a, self.c)
        num = dom.add(dom.mul(self.a, pt), self.b)
        den = dom.add(dom.mul(self.c, pt), self.d)
        if dom.is_zero(den):
            return INF
        return dom.div(num, den)

    def key(self):
        """Hashable canonical key modulo scalars (first nonzero entry -> 1)."""
        dom = self.domain
        ent = self.entries()
        for v in ent:
            if not dom.is_zero(v):
                inv = dom.inv(v)
                return tuple(dom.key(dom.mul(e, inv)) for e in ent)
        raise AssertionError("zero matrix")

    def map_domain(self, dst: Domain) -> "Mobius":
        src = self.domain
        return Mobius(dst, *(embed(src, dst, e) for e in self.entries()))

    def __eq__(self, other):
        if not isinstance(other, Mobius):
            return NotImplemented
        return self.domain == other.domain and self.key() == other.key()

    def __hash__(self):
        return hash((self.domain, self.key()))

    def __repr__(self):
        fmt = self.domain.fmt
        return f"Mobius[({fmt(self.a)})x + ({fmt(self.b)}) : ({fmt(self.c)})x + ({fmt(self.d)})]"


def mobius_transport(f: UniPoly, m: Mobius) -> UniPoly:
    """Numerator of f((a x + b)/(c x + d)) * (c x + d)^deg(f).

    The roots of the result are the preimages under the map of the roots of
    f; the degree drops by the number of roots whose preimage is infinity.
    The result is not re-monicized.
    """
    if f.is_zero():
        raise ValueError("transport of the zero polynomial")
    if f.domain != m.domain:
        raise DomainMismatchError("polynomial and matrix over different domains")
    dom = f.domain
    n = int(f.degree())
    lin_num = UniPoly(dom, {1: m.a, 0: m.b}, f.var)
    lin_den = UniPoly(dom, {1: m.c, 0: m.d}, f.var)
    out = UniPoly.constant(dom, f.coeff(n), f.var)
    den_pow = UniPoly.one(dom, f.var)
    for e in range(n - 1, -1, -1):
        den_pow = den_pow * lin_den
        out = out * lin_num
        c = f.coeffs.get(e)
        if c is not None:
            out = out + den_pow.scale(c)
    return out


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[El]]:
    f._same(g)
    dom = f.domain
    m, n = int(f.degree()), int(g.degree())
    if m < 0 or n < 0:
        raise ValueError("resultant of the zero polynomial")
    size = m + n
    z = dom.zero()
    rows = []
    fl = [f.coeff(m - i) for i in range(m + 1)]
    gl = [g.coeff(n - i) for i in range(n + 1)]
    for i in range(n):
        rows.append([z] * i + fl + [z] * (size - i - m - 1))
    for i in range(m):
        rows.append([z] * i + gl + [z] * (size - i - n - 1))
    return rows


def bareiss_determinant(rows: list[list[El]], dom: Domain) -> El:
    """Fraction-free determinant (Bareiss); divisions are exact in the domain."""
    a = [row[:] for row in rows]
    n = len(a)
    if n == 0:
        return dom.one()
    sign = False
    prev = dom.one()
    for k in range(n - 1):
        if dom.is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not dom.is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = not sign
                    break
            else:
                return dom.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            if dom.is_zero(aik):
                for j in range(k + 1, n):
                    row_i[j] = dom.exact_div(dom.mul(row_i[j], pivot), prev)
            else:
                for j in range(k + 1, n):
                    v = dom.sub(dom.mul(row_i[j], pivot), dom.mul(row_k[j], aik))
                    row_i[j] = dom.exact_div(v, prev)
            row_i[k] = dom.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return dom.neg(det) if sign else det


def _prem(f: UniPoly, g: UniPoly) -> UniPoly:
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, fraction-free."""
    dom = f.domain
    df, dg = int(f.degree()), int(g.degree())
    lg = g.lc()
    r = dict(f.coeffs)
    steps = df - dg + 1
    while r:
        dr = max(r)
        if dr < dg:
            break
        lr = r.pop(dr)
        # r = lc(g)*r - lr * x^(dr-dg) * g
        new: dict[int, El] = {}
        for e, c in r.items():
            new[e] = dom.mul(c, lg)
        for e, c in g.coeffs.items():
            if e == dg:
                continue
            t = e + dr - dg
            v = dom.sub(new.get(t, dom.zero()), dom.mul(lr, c))
            if dom.is_zero(v):
                new.pop(t, None)
            else:
                new[t] = v
        r = new
        steps -= 1
    if steps > 0:
        scale = dom.pow(lg, steps)
        r = {e: dom.mul(c, scale) for e, c in r.items()}
    return UniPoly(dom, r, f.var)


def _prs_resultant(f: UniPoly, g: UniPoly) -> El:
    """Resultant via the subresultant PRS (Brown, fraction-free)."""
    dom = f.domain
    n, m = int(f.degree()), int(g.degree())
    sign_swap = False
    if n < m:
        f, g = g, f
        n, m = m, n
        sign_swap = (n * m) % 2 == 1
    if m == 0:
        res = dom.pow(g.lc(), n)
        return dom.neg(res) if sign_swap else res
    d = n - m
    b = dom.from_int(-1) if d % 2 == 0 else dom.one()
    h = _prem(f, g).scale(b)
    lc = g.lc()
    c = dom.pow(lc, d)
    s_last = c
    c = dom.neg(c)
    while h.coeffs:
        k = int(h.degree())
        f, g = g, h
        m, d = k, m - k
        b = dom.neg(dom.mul(lc, dom.pow(c, d)))
        h = _prem(f, g)
        h = UniPoly(dom, {e: dom.exact_div(v, b) for e, v in h.coeffs.items()}, f.var)
        lc = g.lc()
        if d > 1:
            q = dom.pow(c, d - 1)
            c = dom.exact_div(dom.pow(dom.neg(lc), d), q)
        else:
            c = dom.neg(lc)
        s_last = dom.neg(c)
    if int(g.degree()) > 0:
        return dom.zero()
    res = s_last
    return dom.neg(res) if sign_swap else res


def resultant(f: UniPoly, g: UniPoly, method: str = "subresultant") -> El:
    """Determinant of the Sylvester matrix of f and g.

    ``method="subresultant"`` (default) runs the fraction-free PRS;
    ``method="sylvester"`` evaluates the determinant directly by Bareiss
    elimination, as an independent route for cross-checking.
    """
    f._same(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if method == "sylvester":
        m, n = int(f.degree()), int(g.degree())
        if m + n == 0:
            return f.domain.one()
        return bareiss_determinant(sylvester_matrix(f, g), f.domain)
    if method != "subresultant":
        raise ValueError(f"unknown resultant method {method!r}")
    if f.is_constant() and g.is_constant():
        return f.domain.one()
    return _prs_resultant(f, g)


def support_gcd(f: UniPoly) -> int:
    """GCD of the exponents carrying nonzero coefficients (0 for f = 0)."""
    from math import gcd

    g = 0
    for e in f.coeffs:
        g = gcd(g, e)
    return g


def deflate(f: UniPoly, delta: int) -> UniPoly:
    """F with f = F(x^delta); every exponent must be divisible by delta."""
    if any(e % delta for e in f.coeffs):
        raise ValueError(f"not a polynomial in x^{delta}")
    return UniPoly(f.domain, {e // delta: c for e, c in f.coeffs.items()}, f.var)


def _res_with_derivative(f: UniPoly) -> El:
    """Res(f, f'), using the composition identity for f = F(x^delta):

        Res(f, f') = delta^(r*delta) * (-1)^(r*delta*(delta-1))
                     * f(0)^(delta-1) * Res(F, F')^delta,   r = deg F,

    which follows from the root-product form of the resultant.  Falls back
    to the subresultant PRS when no deflation applies.
    """
    dom = f.domain
    delta = support_gcd(f)
    p = dom.char
    while p and delta % p == 0:
        delta //= p
    a0 = f.coeff(0)
    if delta >= 2 and not dom.is_zero(a0):
        big = deflate(f, delta)
        r = int(big.degree())
        inner = _res_with_derivative(big)
        res = dom.mul(dom.pow(dom.from_int(delta), r * delta), dom.pow(inner, delta))
        res = dom.mul(res, dom.pow(a0, delta - 1))
        if (r * delta * (delta - 1)) % 2 == 1:
            res = dom.neg(res)
        return res
    df = f.derivative()
    if df.is_zero():
        raise ValueError("inseparable polynomial: derivative is zero")
    return resultant(f, df)


def discriminant(f: UniPoly) -> El:
    """disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f) for d = deg f >= 2."""
    dom = f.domain
    d = f.degree()
    if d is NEG_INF or int(d) < 2:
        raise ValueError("discriminant requires degree >= 2")
    d = int(d)
    res = _res_with_derivative(f)
    res = dom.exact_div(res, f.lc())
    if (d * (d - 1) // 2) % 2 == 1:
        res = dom.neg(res)
    return res
