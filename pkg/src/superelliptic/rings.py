"""Exact coefficient domains.

Supported domains, with the raw Python value used for their elements:

* ``Rationals``         -- arbitrary-precision rationals (``gmpy2.mpq`` when
                           available, ``fractions.Fraction`` otherwise)
* ``PrimeField(p)``     -- residues stored as ``int`` in ``[0, p)``
* ``QuotientRing``      -- one extension step ``K[t]/(m(t))``; elements are
                           tuples of base raws of length ``deg m``
* ``FunctionField``     -- rational functions in named parameters over a
                           field; elements are reduced ``(num, den)`` pairs
                           of term dicts ``{exponent tuple: base raw}``

Domains are immutable and hashable; every operation is a pure function of
raw values, so values can be shared freely between threads.  Operations on
mismatched domains raise :class:`DomainMismatchError`; inverting a nonzero
zero divisor in a quotient ring raises :class:`ZeroDivisorError` carrying a
proper factor of the modulus.

Quotient-ring steps are *not* required to be fields (the modulus may be
reducible); construct them with ``field=True`` only when the caller knows
the modulus is irreducible.  Rational-function fields require a field base.
"""

from __future__ import annotations

import itertools
from typing import Any, Iterator

try:
    from gmpy2 import mpq, mpz, iroot as _iroot, is_prime as _is_prime_fast

    _HAVE_GMPY = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as mpq  # type: ignore[assignment]

    _HAVE_GMPY = False

El = Any  # raw element of some domain


class DomainMismatchError(TypeError):
    """Operands belong to different coefficient domains."""


class ZeroDivisorError(ArithmeticError):
    """A noninvertible, nonzero residue was inverted in a quotient ring.

    ``factor`` holds the coefficient tuple (constant term first) of a proper
    monic factor of the modulus discovered by the extended Euclidean
    algorithm; ``domain`` is the base domain of those coefficients.
    """

    def __init__(self, message: str, domain: "Domain", factor: tuple):
        super().__init__(message)
        self.domain = domain
        self.factor = factor


def _int_nth_root(n: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of n >= 0 and whether it is exact."""
    if _HAVE_GMPY:
        r, exact = _iroot(mpz(n), k)
        return int(r), bool(exact)
    if n < 2:
        return n, True
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo, lo**k == n


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if _HAVE_GMPY:
        return bool(_is_prime_fast(n))
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Domain:
    """Abstract base for coefficient domains."""

    char: int
    is_field: bool

    # -- construction -------------------------------------------------

    def zero(self) -> El:
        raise NotImplementedError

    def one(self) -> El:
        raise NotImplementedError

    def from_int(self, n: int) -> El:
        raise NotImplementedError

    # -- arithmetic ----------------------------------------------------

    def add(self, a: El, b: El) -> El:
        raise NotImplementedError

    def neg(self, a: El) -> El:
        raise NotImplementedError

    def mul(self, a: El, b: El) -> El:
        raise NotImplementedError

    def inv(self, a: El) -> El:
        raise NotImplementedError

    def sub(self, a: El, b: El) -> El:
        return self.add(a, self.neg(b))

    def div(self, a: El, b: El) -> El:
        return self.mul(a, self.inv(b))

    def exact_div(self, a: El, b: El) -> El:
        """Division known to be exact in the domain (used by fraction-free
        elimination); the default works for fields."""
        return self.div(a, b)

    def pow(self, a: El, n: int) -> El:
        if n < 0:
            a, n = self.inv(a), -n
        out = self.one()
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    # -- predicates ----------------------------------------------------

    def eq(self, a: El, b: El) -> bool:
        return a == b

    def is_zero(self, a: El) -> bool:
        return self.eq(a, self.zero())

    def is_one(self, a: El) -> bool:
        return self.eq(a, self.one())

    # -- misc ------------------------------------------------------------

    def key(self, a: El):
        """Hashable canonical key of a raw value."""
        return a

    def fmt(self, a: El, atom: bool = False) -> str:
        raise NotImplementedError

    def nth_root(self, a: El, n: int) -> El | None:
        """Exact n-th root when the domain can find one, else None."""
        return None

    def iter_elements(self) -> Iterator[El]:
        """Enumerate all elements of a finite domain."""
        raise TypeError(f"{self} is not a finite domain")

    @property
    def is_finite(self) -> bool:
        return False

    def _signature(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Domain) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())


class Rationals(Domain):
    """The field of rational numbers."""

    char = 0
    is_field = True

    def zero(self):
        return mpq(0)

    def one(self):
        return mpq(1)

    def from_int(self, n):
        return mpq(n)

    def from_ratio(self, num: int, den: int):
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        return mpq(num, den)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def sub(self, a, b):
        return a - b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def pow(self, a, n):
        if n < 0 and not a:
            raise ZeroDivisionError("inverse of zero")
        return a**n

    def is_zero(self, a):
        return not a

    def is_one(self, a):
        return a == 1

    def fmt(self, a, atom=False):
        s = str(a)
        if atom and a < 0:
            return f"({s})"
        return s

    def nth_root(self, a, n):
        if n <= 0:
            raise ValueError("root index must be positive")
        neg = a < 0
        if neg and n % 2 == 0:
            return None
        num, den = abs(a).numerator, a.denominator
        rn, okn = _int_nth_root(int(num), n)
        if not okn:
            return None
        rd, okd = _int_nth_root(int(den), n)
        if not okd:
            return None
        root = mpq(rn, rd)
        return -root if neg else root

    def _signature(self):
        return ("Q",)

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class PrimeField(Domain):
    """The prime field F_p, elements stored as reduced residues."""

    is_field = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def is_one(self, a):
        return a % self.p == 1

    def fmt(self, a, atom=False):
        return str(a)

    def nth_root(self, a, n):
        for c in range(self.p):
            if pow(c, n, self.p) == a:
                return c
        return None

    def iter_elements(self):
        return iter(range(self.p))

    @property
    def is_finite(self):
        return True

    @property
    def order(self) -> int:
        return self.p

    def _signature(self):
        return ("Fp", self.p)

    def __repr__(self):
        return f"GF({self.p})"


# ---------------------------------------------------------------------------
# dense univariate helpers over an arbitrary base domain (coefficient lists,
# constant term first) -- shared by QuotientRing reduction and inversion
# ---------------------------------------------------------------------------


def _ul_trim(c: list) -> None:
    pass  # lists used internally always carry explicit length


def _ul_deg(base: Domain, c: list) -> int:
    for i in range(len(c) - 1, -1, -1):
        if not base.is_zero(c[i]):
            return i
    return -1


def _ul_divmod(base: Domain, a: list, b: list) -> tuple[list, list]:
    """Long division of coefficient lists; leading coeff of b must be invertible."""
    db = _ul_deg(base, b)
    if db < 0:
        raise ZeroDivisionError("division by zero polynomial")
    lead_inv = base.inv(b[db])
    rem = list(a)
    dr = _ul_deg(base, rem)
    quo = [base.zero()] * max(dr - db + 1, 0)
    while dr >= db:
        f = base.mul(rem[dr], lead_inv)
        quo[dr - db] = f
        for i in range(db + 1):
            rem[dr - db + i] = base.sub(rem[dr - db + i], base.mul(f, b[i]))
        dr = _ul_deg(base, rem)
    return quo, rem


class QuotientRing(Domain):
    """One extension step K[t]/(m(t)) with monic modulus m.

    Elements are coordinate tuples of length ``deg m`` over the base, in
    increasing powers of the generator.  The base must support inversion of
    the elements met during extended-gcd inversion; a field base always
    does.  Inverting a nonzero noninvertible element raises
    :class:`ZeroDivisorError` with a discovered proper factor of ``m``.
    """

    def __init__(self, base: Domain, name: str, minpoly: tuple, *, field: bool | None = None):
        deg = len(minpoly) - 1
        if deg < 2:
            raise ValueError("modulus must have degree >= 2")
        if not base.is_one(minpoly[-1]):
            raise ValueError("modulus must be monic")
        self.base = base
        self.name = name
        self.minpoly = tuple(minpoly)
        self.degree = deg
        self.char = base.char
        self.is_field = bool(field)

    def zero(self):
        z = self.base.zero()
        return (z,) * self.degree

    def one(self):
        z = self.base.zero()
        return (self.base.one(),) + (z,) * (self.degree - 1)

    def gen(self):
        z = self.base.zero()
        if self.degree == 1:  # unreachable; degree >= 2 enforced
            raise ValueError
        return (z, self.base.one()) + (z,) * (self.degree - 2)

    def from_int(self, n):
        z = self.base.zero()
        return (self.base.from_int(n),) + (z,) * (self.degree - 1)

    def from_base(self, a):
        z = self.base.zero()
        return (a,) + (z,) * (self.degree - 1)

    def from_coeffs(self, coeffs) -> tuple:
        """Element from an iterable of base raws (constant first), reducing mod m."""
        lst = list(coeffs)
        if len(lst) < self.degree:
            lst += [self.base.zero()] * (self.degree - len(lst))
        if _ul_deg(self.base, lst) >= self.degree:
            _, lst = _ul_divmod(self.base, lst, list(self.minpoly))
            lst += [self.base.zero()] * (self.degree - len(lst))
        return tuple(lst[: self.degree])

    def add(self, a, b):
        add = self.base.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sub = self.base.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        neg = self.base.neg
        return tuple(neg(x) for x in a)

    def mul(self, a, b):
        base = self.base
        d = self.degree
        prod = [base.zero()] * (2 * d - 1)
        for i, x in enumerate(a):
            if base.is_zero(x):
                continue
            for j, y in enumerate(b):
                if base.is_zero(y):
                    continue
                prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        # reduce modulo the monic modulus
        m = self.minpoly
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if base.is_zero(c):
                continue
            prod[i] = base.zero()
            for j in range(d):
                prod[i - d + j] = base.sub(prod[i - d + j], base.mul(c, m[j]))
        return tuple(prod[:d])

    def scale(self, a, c):
        mul = self.base.mul
        return tuple(mul(x, c) for x in a)

    def inv(self, a):
        base = self.base
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid on (a, m) over the base
        r0, r1 = list(self.minpoly), list(a)
        s0, s1 = [base.zero()], [base.one()]
        while True:
            d1 = _ul_deg(base, r1)
            if d1 < 0:
                # gcd is r0
                d0 = _ul_deg(base, r0)
                if d0 == 0:
                    c = base.inv(r0[0])
                    out = [base.mul(x, c) for x in s0]
                    return self.from_coeffs(out)
                lead = base.inv(r0[d0])
                factor = tuple(base.mul(x, lead) for x in r0[: d0 + 1])
                raise ZeroDivisorError(
                    f"zero divisor in {self!r}: modulus has factor of degree {d0}",
                    self.base,
                    factor,
                )
            quo, rem = _ul_divmod(base, r0, r1)
            r0, r1 = r1, rem
            # s0 - quo*s1
            prod = [base.zero()] * (len(quo) + len(s1))
            for i, q in enumerate(quo):
                if base.is_zero(q):
                    continue
                for j, s in enumerate(s1):
                    prod[i + j] = base.add(prod[i + j], base.mul(q, s))
            ln = max(len(s0), len(prod))
            s0 = s0 + [base.zero()] * (ln - len(s0))
            new = [base.sub(s0[i], prod[i] if i < len(prod) else base.zero()) for i in range(ln)]
            s0, s1 = s1, new

    def eq(self, a, b):
        eqb = self.base.eq
        return all(eqb(x, y) for x, y in zip(a, b))

    def is_zero(self, a):
        zb = self.base.is_zero
        return all(zb(x) for x in a)

    def is_one(self, a):
        base = self.base
        return base.is_one(a[0]) and all(base.is_zero(x) for x in a[1:])

    def key(self, a):
        kb = self.base.key
        return tuple(kb(x) for x in a)

    def fmt(self, a, atom=False):
        base = self.base
        parts = []
        for e in range(self.degree - 1, -1, -1):
            c = a[e]
            if base.is_zero(c):
                continue
            mono = self.name if e == 1 else (f"{self.name}^{e}" if e else "")
            parts.append(_format_term(base, c, mono, first=not parts))
        if not parts:
            return "0"
        s = "".join(parts)
        if atom and (len(parts) > 1 or s.startswith("-")):
            return f"({s})"
        return s

    def iter_elements(self):
        if not self.base.is_finite:
            raise TypeError(f"{self} is not a finite domain")
        pools = [list(self.base.iter_elements()) for _ in range(self.degree)]
        return (tuple(c) for c in itertools.product(*pools))

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def order(self) -> int:
        return self.base.order**self.degree  # type: ignore[attr-defined]

    def nth_root(self, a, n):
        # brute force is exact and cheap for the small finite towers in use
        if self.is_finite and self.order <= 4096:
            for c in self.iter_elements():
                if self.eq(self.pow(c, n), a):
                    return c
            return None
        if all(self.base.is_zero(c) for c in a[1:]):
            r = self.base.nth_root(a[0], n)
            return self.from_base(r) if r is not None else None
        return None

    def _signature(self):
        return ("quot", self.base._signature(), self.name, tuple(self.base.key(c) for c in self.minpoly))

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/({self.fmt_minpoly()})"

    def fmt_minpoly(self, var: str | None = None) -> str:
        var = var or self.name
        base = self.base
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.minpoly[e] if e < len(self.minpoly) else base.zero()
            if base.is_zero(c):
                continue
            mono = var if e == 1 else (f"{var}^{e}" if e else "")
            parts.append(_format_term(base, c, mono, first=not parts))
        return "".join(parts) if parts else "0"


def adjoin(base: Domain, name: str, minpoly, *, field: bool | None = None) -> QuotientRing:
    """Adjoin a generator with the given monic minimal polynomial.

    ``minpoly`` is an iterable of base raws, constant term first.  The
    result is a quotient ring; pass ``field=True`` when the modulus is known
    irreducible so that downstream constructions requiring a field accept it.
    """
    return QuotientRing(base, name, tuple(minpoly), field=field)


# ---------------------------------------------------------------------------
# multivariate term-dict helpers over a field base
# ---------------------------------------------------------------------------


def _grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


def mp_zero() -> dict:
    return {}


def mp_const(base: Domain, c: El, nvars: int) -> dict:
    if base.is_zero(c):
        return {}
    return {(0,) * nvars: c}


def mp_gen(base: Domain, i: int, nvars: int) -> dict:
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): base.one()}


def mp_add(base: Domain, f: dict, g: dict) -> dict:
    out = dict(f)
    for e, c in g.items():
        if e in out:
            s = base.add(out[e], c)
            if base.is_zero(s):
                del out[e]
            else:
                out[e] = s
        else:
            out[e] = c
    return out


def mp_neg(base: Domain, f: dict) -> dict:
    neg = base.neg
    return {e: neg(c) for e, c in f.items()}


def mp_sub(base: Domain, f: dict, g: dict) -> dict:
    return mp_add(base, f, mp_neg(base, g))


def mp_mul(base: Domain, f: dict, g: dict) -> dict:
    if not f or not g:
        return {}
    if len(f) > len(g):
        f, g = g, f
    mul, add, is_zero = base.mul, base.add, base.is_zero
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(map(int.__add__, e1, e2))
            p = mul(c1, c2)
            if e in out:
                s = add(out[e], p)
                if is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            elif not is_zero(p):
                out[e] = p
    return out


def mp_scale(base: Domain, f: dict, c: El) -> dict:
    if base.is_zero(c):
        return {}
    mul = base.mul
    return {e: mul(v, c) for e, v in f.items()}


def mp_pow(base: Domain, f: dict, n: int) -> dict:
    if n < 0:
        raise ValueError("negative power of a polynomial")
    nv = len(next(iter(f))) if f else 0
    out = mp_const(base, base.one(), nv)
    while n:
        if n & 1:
            out = mp_mul(base, out, f)
        f = mp_mul(base, f, f)
        n >>= 1
    return out


def mp_lead(f: dict) -> tuple:
    return max(f, key=_grlex_key)


def mp_total_deg(f: dict) -> int:
    return max((sum(e) for e in f), default=-1)


def mp_exact_div(base: Domain, f: dict, g: dict) -> dict | None:
    """f / g in the polynomial ring, or None if the division is not exact."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return {}
    rem = dict(f)
    out: dict = {}
    ge = mp_lead(g)
    gc = g[ge]
    gc_inv = base.inv(gc)
    while rem:
        re = mp_lead(rem)
        diff = tuple(map(int.__sub__, re, ge))
        if any(d < 0 for d in diff):
            return None
        q = base.mul(rem[re], gc_inv)
        out[diff] = q
        rem = mp_sub(base, rem, mp_mul(base, {diff: q}, g))
    return out


def mp_eval(base: Domain, f: dict, dst: Domain, values: list) -> El:
    """Evaluate a term dict at raws of dst; base raws must embed into dst."""
    out = dst.zero()
    for e, c in f.items():
        term = embed(base, dst, c)
        for i, ei in enumerate(e):
            if ei:
                term = dst.mul(term, dst.pow(values[i], ei))
        out = dst.add(out, term)
    return out


def _mv_deg(f: dict, v: int) -> int:
    return max((e[v] for e in f), default=-1)


def _mv_coeff(f: dict, v: int, d: int) -> dict:
    """Coefficient of x_v^d as a term dict with the v-slot zeroed."""
    out = {}
    for e, c in f.items():
        if e[v] == d:
            ez = list(e)
            ez[v] = 0
            out[tuple(ez)] = c
    return out


def _mv_shift(f: dict, v: int, d: int) -> dict:
    out = {}
    for e, c in f.items():
        ez = list(e)
        ez[v] += d
        out[tuple(ez)] = c
    return out


def mp_gcd(base: Domain, f: dict, g: dict) -> dict:
    """GCD in k[x_1..x_n] over a field k, normalized so the graded-lex
    leading coefficient is 1.  Primitive PRS recursion over the last
    variable that occurs."""
    if not f and not g:
        return {}
    if not f:
        return _mp_monic(base, g)
    if not g:
        return _mp_monic(base, f)
    nv = len(next(iter(f)))
    v = -1
    for i in range(nv - 1, -1, -1):
        if _mv_deg(f, i) > 0 or _mv_deg(g, i) > 0:
            v = i
            break
    if v < 0:
        return mp_const(base, base.one(), nv)
    cf, pf = _mp_content_pp(base, f, v)
    cg, pg = _mp_content_pp(base, g, v)
    cont = mp_gcd(base, cf, cg)
    a, b = pf, pg
    while True:
        r = _mp_prem(base, a, b, v)
        if not r:
            break
        _, r = _mp_content_pp(base, r, v)
        a, b = b, r
    _, pp = _mp_content_pp(base, b, v)
    return _mp_monic(base, mp_mul(base, cont, pp))


def _mp_monic(base: Domain, f: dict) -> dict:
    if not f:
        return {}
    lc = f[mp_lead(f)]
    if base.is_one(lc):
        return dict(f)
    return mp_scale(base, f, base.inv(lc))


def _mp_content_pp(base: Domain, f: dict, v: int) -> tuple[dict, dict]:
    """(content, primitive part) of f along variable v."""
    deg = _mv_deg(f, v)
    if deg <= 0:
        return _mp_monic(base, f), mp_const(base, base.one(), len(next(iter(f))))
    coeffs = [_mv_coeff(f, v, d) for d in range(deg + 1)]
    cont: dict = {}
    for c in coeffs:
        if c:
            cont = mp_gcd(base, cont, c)
        if mp_total_deg(cont) == 0 and cont:
            break
    pp = mp_exact_div(base, f, cont)
    assert pp is not None
    return cont, pp


def _mp_prem(base: Domain, a: dict, b: dict, v: int) -> dict:
    """Pseudo-remainder of a by b along variable v (content-agnostic)."""
    da, db = _mv_deg(a, v), _mv_deg(b, v)
    lb = _mv_coeff(b, v, db)
    r = dict(a)
    dr = da
    while r and dr >= db:
        lr = _mv_coeff(r, v, dr)
        r = mp_sub(
            base,
            mp_mul(base, r, lb),
            mp_mul(base, _mv_shift(lr, v, dr - db), b),
        )
        dr = _mv_deg(r, v)
    return r


def mp_fmt(base: Domain, f: dict, names: tuple[str, ...], atom: bool = False) -> str:
    if not f:
        return "0"
    parts = []
    for e in sorted(f, key=_grlex_key, reverse=True):
        monos = []
        for name, exp in zip(names, e):
            if exp == 1:
                monos.append(name)
            elif exp:
                monos.append(f"{name}^{exp}")
        parts.append(_format_term(base, f[e], "*".join(monos), first=not parts))
    s = "".join(parts)
    if atom and (len(parts) > 1 or s.startswith("-")):
        return f"({s})"
    return s


def _format_term(base: Domain, c: El, mono: str, first: bool) -> str:
    """One term 'c*mono' with sign folding for single-term coefficients."""
    s = base.fmt(c)
    if " " not in s and s.startswith("-"):
        sign, body = "-", s[1:]
    else:
        sign = "+"
        body = f"({s})" if " " in s else s
    if sign == "+":
        joiner = "" if first else " + "
    else:
        joiner = "-" if first else " - "
    if not mono:
        return f"{joiner}{body}"
    if body == "1":
        return f"{joiner}{mono}"
    return f"{joiner}{body}*{mono}"


class FunctionField(Domain):
    """Rational functions in named parameters over a field base.

    Elements are pairs ``(num, den)`` of term dicts, gcd-reduced with a
    monic (graded-lex leading coefficient 1) denominator; equality is
    structural on that canonical form.
    """

    is_field = True

    def __init__(self, base: Domain, names: tuple[str, ...]):
        if not base.is_field:
            raise ValueError("function field requires a field base")
        if len(set(names)) != len(names):
            raise ValueError("duplicate parameter names")
        self.base = base
        self.names = tuple(names)
        self.nvars = len(names)
        self.char = base.char

    # construction

    def zero(self):
        return ({}, self._one_dict())

    def one(self):
        return (self._one_dict(), self._one_dict())

    def _one_dict(self):
        return {(0,) * self.nvars: self.base.one()}

    def from_int(self, n):
        c = self.base.from_int(n)
        return (mp_const(self.base, c, self.nvars), self._one_dict())

    def from_base(self, c):
        return (mp_const(self.base, c, self.nvars), self._one_dict())

    def param(self, name: str):
        return (mp_gen(self.base, self.names.index(name), self.nvars), self._one_dict())

    def from_poly(self, terms: dict):
        return self._reduce(terms, self._one_dict())

    # canonical reduction

    def _reduce(self, num: dict, den: dict):
        base = self.base
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ({}, self._one_dict())
        if len(den) == 1 and not any(next(iter(den))):
            c = den[next(iter(den))]
            if base.is_one(c):
                return (num, den)
            return (mp_scale(base, num, base.inv(c)), self._one_dict())
        g = mp_gcd(base, num, den)
        if mp_total_deg(g) > 0:
            num = mp_exact_div(base, num, g)  # type: ignore[assignment]
            den = mp_exact_div(base, den, g)  # type: ignore[assignment]
        lc = den[mp_lead(den)]
        if not base.is_one(lc):
            li = base.inv(lc)
            num = mp_scale(base, num, li)
            den = mp_scale(base, den, li)
        return (num, den)

    @staticmethod
    def _den_is_one(base, den):
        if len(den) != 1:
            return False
        (e, c), = den.items()
        return not any(e) and base.is_one(c)

    # arithmetic

    def add(self, a, b):
        base = self.base
        n1, d1 = a
        n2, d2 = b
        if self._den_is_one(base, d1) and self._den_is_one(base, d2):
            return (mp_add(base, n1, n2), d1)
        num = mp_add(base, mp_mul(base, n1, d2), mp_mul(base, n2, d1))
        return self._reduce(num, mp_mul(base, d1, d2))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return (mp_neg(self.base, a[0]), a[1])

    def mul(self, a, b):
        base = self.base
        n1, d1 = a
        n2, d2 = b
        if self._den_is_one(base, d1) and self._den_is_one(base, d2):
            return (mp_mul(base, n1, n2), d1)
        return self._reduce(mp_mul(base, n1, n2), mp_mul(base, d1, d2))

    def inv(self, a):
        num, den = a
        if not num:
            raise ZeroDivisionError("inverse of zero")
        return self._reduce(den, num)

    def exact_div(self, a, b):
        base = self.base
        n1, d1 = a
        n2, d2 = b
        if self._den_is_one(base, d1) and self._den_is_one(base, d2):
            if not n2:
                raise ZeroDivisionError("division by zero")
            q = mp_exact_div(base, n1, n2)
            if q is not None:
                return (q, d1)
        return self.div(a, b)

    def eq(self, a, b):
        base = self.base
        n1, d1 = a
        n2, d2 = b
        if len(n1) != len(n2) or len(d1) != len(d2):
            return False
        return self._dict_eq(n1, n2) and self._dict_eq(d1, d2)

    def _dict_eq(self, f, g):
        eqb = self.base.eq
        for e, c in f.items():
            if e not in g or not eqb(c, g[e]):
                return False
        return True

    def is_zero(self, a):
        return not a[0]

    def is_one(self, a):
        return self._den_is_one(self.base, a[1]) and self._den_is_one(self.base, a[0])

    def key(self, a):
        kb = self.base.key
        num, den = a
        return (
            tuple(sorted((e, kb(c)) for e, c in num.items())),
            tuple(sorted((e, kb(c)) for e, c in den.items())),
        )

    def fmt(self, a, atom=False):
        num, den = a
        if self._den_is_one(self.base, den):
            return mp_fmt(self.base, num, self.names, atom=atom)
        ns = mp_fmt(self.base, num, self.names, atom=True)
        ds = mp_fmt(self.base, den, self.names, atom=True)
        s = f"{ns}/{ds}"
        return f"({s})" if atom else s

    def nth_root(self, a, n):
        num, den = a
        if not self._den_is_one(self.base, den):
            return None
        if not num:
            return self.zero() if n > 0 else None
        if len(num) == 1:
            (e, c), = num.items()
            if not any(e):
                r = self.base.nth_root(c, n)
                return self.from_base(r) if r is not None else None
        return None

    def is_polynomial(self, a) -> bool:
        return self._den_is_one(self.base, a[1])

    def numerator(self, a) -> dict:
        return a[0]

    def denominator(self, a) -> dict:
        return a[1]

    def _signature(self):
        return ("rf", self.base._signature(), self.names)

    def __repr__(self):
        return f"{self.base!r}({', '.join(self.names)})"


# ---------------------------------------------------------------------------
# structural embeddings between compatible domains
# ---------------------------------------------------------------------------


def embed(src: Domain, dst: Domain, raw: El) -> El:
    """Lift a raw value of ``src`` into the structurally larger ``dst``.

    Supported lifts: identity; rationals into any characteristic-zero
    domain; a prime field into towers over it; a quotient ring or function
    field into one built over it; a function field into one with an extended
    parameter list (existing names must form a prefix) or a larger base.
    """
    if src == dst:
        return raw
    if isinstance(dst, QuotientRing):
        return dst.from_base(embed(src, dst.base, raw))
    if isinstance(dst, FunctionField):
        if isinstance(src, FunctionField):
            if src.names != dst.names[: src.nvars]:
                raise DomainMismatchError(f"cannot embed {src!r} into {dst!r}")
            pad = dst.nvars - src.nvars
            num, den = raw
            lift = lambda d: {
                e + (0,) * pad: embed(src.base, dst.base, c) for e, c in d.items()
            }
            return dst._reduce(lift(num), lift(den))
        return dst.from_base(embed(src, dst.base, raw))
    raise DomainMismatchError(f"cannot embed {src!r} into {dst!r}")


def common_rational(domain: Domain, raw: El):
    """Return the value as a rational if it lies in the prime subfield Q,
    else None.  Used to compare invariants across unrelated towers."""
    if isinstance(domain, Rationals):
        return raw
    if isinstance(domain, QuotientRing):
        if all(domain.base.is_zero(c) for c in raw[1:]):
            return common_rational(domain.base, raw[0])
        return None
    if isinstance(domain, FunctionField):
        num, den = raw
        if not domain._den_is_one(domain.base, den):
            return None
        if not num:
            return common_rational(domain.base, domain.base.zero())
        if len(num) == 1:
            (e, c), = num.items()
            if not any(e):
                return common_rational(domain.base, c)
        return None
    return None


def tower_chain(domain: Domain) -> list[Domain]:
    """The chain of domains from the prime field up to ``domain``."""
    chain = [domain]
    cur = domain
    while isinstance(cur, (QuotientRing, FunctionField)):
        cur = cur.base
        chain.append(cur)
    chain.reverse()
    return chain
