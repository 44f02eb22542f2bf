"""Exact arithmetic in finite chain rings and finite principal ideal rings.

Chain rings are realized as Galois rings GR(p^e, r): quotients
Z[x] / (p^e, f(x)) with f monic of degree r and irreducible modulo p.  This
covers both Z_{p^e} (r = 1) and the fields F_{p^r} (e = 1).  Elements are
coefficient tuples (c0, ..., c_{r-1}), low degree first, with 0 <= ci < p^e.
The maximal ideal is generated by gamma = p and gamma^e = 0.

A finite principal ideal ring is an ordered product of chain rings; its
elements are tuples holding one chain-ring element per component.  When every
component is Z_{p^e} for pairwise distinct primes, the product is Z_m for
m = prod p^e, and integers can be moved in and out through the residue maps.
"""

from __future__ import annotations

import itertools
from math import prod

from .errors import NotInvertibleError, ValidationError

__all__ = ["ChainRing", "ProductRing", "default_modulus", "is_prime", "factorize"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of m >= 2 as a sorted list of (prime, exponent)."""
    if m < 2:
        raise ValidationError(f"cannot factor modulus {m}; need m >= 2")
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1
    if m > 1:
        out.append((m, 1))
    return out


# ---------------------------------------------------------------------------
# polynomial helpers over the prime field F_p (coefficients low degree first)


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Polynomial division a = q*b + rem over F_p; b must be nonzero."""
    a = _fp_trim([c % p for c in a])
    b = _fp_trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = (a[-1] * inv_lead) % p
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _fp_trim(a)
    return q, a


def _fp_is_irreducible(f: list[int], p: int) -> bool:
    """Monic f over F_p has no monic factor of degree in [1, deg(f)/2]."""
    r = len(_fp_trim(list(f))) - 1
    if r < 1:
        return False
    for d in range(1, r // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            _, rem = _fp_divmod(list(f), list(tail) + [1], p)
            if not rem:
                return False
    return True


def _fp_poly_inverse(a: list[int], f: list[int], p: int) -> list[int]:
    """Inverse of a modulo the monic irreducible f over F_p (extended Euclid)."""
    r0, r1 = [c % p for c in f], _fp_trim([c % p for c in a])
    t0, t1 = [0], [1]
    while len(r1) > 1:
        q, rem = _fp_divmod(r0, r1, p)
        r0, r1 = r1, rem
        width = max(len(t0), len(t1) + len(q))
        t2 = [0] * width
        for i, tc in enumerate(t0):
            t2[i] = tc
        for i, qc in enumerate(q):
            if qc:
                for j, tc in enumerate(t1):
                    t2[i + j] = (t2[i + j] - qc * tc) % p
        t0, t1 = t1, _fp_trim(t2)
    if not r1:
        raise NotInvertibleError("element shares a factor with the modulus")
    c_inv = pow(r1[0], p - 2, p)
    _, out = _fp_divmod([(c * c_inv) % p for c in t1], f, p)
    return out


def default_modulus(p: int, e: int, r: int) -> tuple[int, ...]:
    """Deterministic monic degree-r modulus for GR(p^e, r), irreducible mod p.

    For r >= 2 this is the lexicographically smallest monic irreducible
    polynomial over F_p (coefficient tuples compared low degree first), lifted
    coefficientwise.  r = 1 uses the degenerate modulus x, so the ring is
    plain Z mod p^e.
    """
    if not is_prime(p):
        raise ValidationError(f"p = {p} is not prime")
    if e < 1 or r < 1:
        raise ValidationError("need e >= 1 and r >= 1")
    if r == 1:
        return (0, 1)
    if r > 6:
        raise ValidationError(f"residue degree r = {r} out of supported range (r <= 6)")
    for tail in itertools.product(range(p), repeat=r):
        f = list(tail) + [1]
        if _fp_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class ChainRing:
    """Galois ring GR(p^e, r) with gamma = p generating the maximal ideal.

    The ideal chain is <gamma^0> > <gamma^1> > ... > <gamma^e> = {0}; the
    residue field has q = p^r elements and the ring has p^(e*r).
    """

    def __init__(self, p: int, e: int = 1, r: int = 1, modulus=None):
        if not is_prime(p):
            raise ValidationError(f"p = {p} is not prime")
        if e < 1:
            raise ValidationError(f"nilpotency index e = {e} must be >= 1")
        if r < 1:
            raise ValidationError(f"residue degree r = {r} must be >= 1")
        self.p = p
        self.e = e
        self.r = r
        self.pe = p**e
        self.q = p**r
        self.size = p ** (e * r)
        if modulus is None:
            modulus = default_modulus(p, e, r)
        else:
            modulus = tuple(int(c) % self.pe for c in modulus)
            if len(modulus) != r + 1 or modulus[r] != 1:
                raise ValidationError("modulus must be monic of degree r")
            if r >= 2 and not _fp_is_irreducible([c % p for c in modulus], p):
                raise ValidationError("modulus is not irreducible modulo p")
        self.modulus = modulus
        self._mtail = modulus[:r]
        self.zero = (0,) * r
        self.one = (1,) + (0,) * (r - 1)
        self.gamma = (p % self.pe,) + (0,) * (r - 1)
        self._key = (p, e, r, self.modulus)
        self._elements = None
        self._transversals: dict[int, list] = {}
        self._inv_cache: dict[tuple, tuple] = {}

    # -- identity / display ------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, ChainRing) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.r == 1:
            return f"F{self.p}" if self.e == 1 else f"Z{self.pe}"
        if self.e == 1:
            return f"F{self.q}"
        return f"GR({self.p}^{self.e},{self.r})"

    def describe(self) -> dict:
        return {"p": self.p, "e": self.e, "r": self.r, "modulus": list(self.modulus), "size": self.size}

    def format_element(self, a) -> str:
        if self.r == 1:
            return str(a[0])
        terms = []
        for k in range(self.r - 1, -1, -1):
            c = a[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                xs = "x" if k == 1 else f"x^{k}"
                terms.append(xs if c == 1 else f"{c}{xs}")
        return "+".join(terms) if terms else "0"

    # -- element plumbing ---------------------------------------------------

    def check(self, a):
        """Validate an element and return it as a canonical tuple."""
        if len(a) != self.r:
            raise ValidationError(f"element {a!r} has arity {len(a)}, ring {self!r} needs {self.r}")
        for c in a:
            if not isinstance(c, int) or not 0 <= c < self.pe:
                raise ValidationError(f"coefficient {c!r} of {a!r} outside [0, {self.pe})")
        return tuple(a)

    def from_int(self, k: int):
        """Constant polynomial k mod p^e."""
        return (k % self.pe,) + (0,) * (self.r - 1)

    def elements(self) -> list:
        """All ring elements as tuples, in a fixed lexicographic order."""
        if self._elements is None:
            self._elements = list(itertools.product(range(self.pe), repeat=self.r))
        return self._elements

    def transversal(self, k: int) -> list:
        """Canonical representatives of the quotient mod <gamma^k>, k in [0, e].

        These are the tuples with every coefficient in [0, p^k); there are
        q^k of them and they enumerate residues mod gamma^k exactly once.
"""
        if k not in self._transversals:
            self._transversals[k] = list(itertools.product(range(self.p**k), repeat=self.r))
        return self._transversals[k]

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if len(a) != self.r or len(b) != self.r:
            raise ValidationError(f"arity mismatch: {a!r} + {b!r} in {self!r}")
        pe = self.pe
        return tuple((x + y) % pe for x, y in zip(a, b))

    def sub(self, a, b):
        if len(a) != self.r or len(b) != self.r:
            raise ValidationError(f"arity mismatch: {a!r} - {b!r} in {self!r}")
        pe = self.pe
        return tuple((x - y) % pe for x, y in zip(a, b))

    def neg(self, a):
        pe = self.pe
        return tuple((-x) % pe for x in a)

    def mul(self, a, b):
        if len(a) != self.r or len(b) != self.r:
            raise ValidationError(f"arity mismatch: {a!r} * {b!r} in {self!r}")
        pe = self.pe
        r = self.r
        if r == 1:
            return ((a[0] * b[0]) % pe,)
        conv = [0] * (2 * r - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        # fold high-degree terms using x^r = -(m_0 + ... + m_{r-1} x^{r-1})
        mtail = self._mtail
        for d in range(2 * r - 2, r - 1, -1):
            c = conv[d] % pe
            if c:
                for k in range(r):
                    conv[d - r + k] -= c * mtail[k]
        return tuple(x % pe for x in conv[:r])

    def is_unit(self, a) -> bool:
        p = self.p
        return any(c % p for c in a)

    def valuation(self, a) -> int:
        """Largest t with a in <gamma^t>; the zero element gets e."""
        p, best = self.p, self.e
        for c in a:
            if c:
                w = 0
                while c % p == 0:
                    c //= p
                    w += 1
                if w < best:
                    best = w
                    if best == 0:
                        break
        return best

    def inverse(self, a):
        """Multiplicative inverse: invert in the residue field, Newton-lift."""
        a = self.check(a)
        if not self.is_unit(a):
            raise NotInvertibleError(f"{a} is not a unit in {self!r}")
        cached = self._inv_cache.get(a)
        if cached is not None:
            return cached
        p = self.p
        if self.r == 1:
            b = (pow(a[0] % p, p - 2, p),)
        else:
            res = _fp_poly_inverse([c % p for c in a], [c % p for c in self.modulus], p)
            b = tuple(res) + (0,) * (self.r - len(res))
        two = self.from_int(2)
        guard = 0
        while self.mul(a, b) != self.one:
            b = self.mul(b, self.sub(two, self.mul(a, b)))
            guard += 1
            if guard > self.e + 2:
                raise AssertionError("inverse lifting failed to converge")
        self._inv_cache[a] = b
        return b

    # -- gamma bookkeeping (used heavily by the linear algebra) --------------

    def gamma_power(self, t: int):
        """gamma^t as a ring element (zero for t >= e)."""
        if t >= self.e:
            return self.zero
        return (self.p**t,) + (0,) * (self.r - 1)

    def div_gamma(self, a, t: int):
        """Exact division by gamma^t; requires valuation(a) >= t."""
        pt = self.p**t
        return tuple(c // pt for c in a)

    def reduce_mod_gamma(self, a, t: int):
        """Canonical representative of a modulo <gamma^t>."""
        pt = self.p**t
        return tuple(c % pt for c in a)


class ProductRing:
    """Finite principal ideal ring as an ordered product of chain rings."""

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise ValidationError("a product ring needs at least one component")
        for c in comps:
            if not isinstance(c, ChainRing):
                raise ValidationError(f"component {c!r} is not a chain ring")
        self.components = comps
        self.s = len(comps)
        self.size = prod(c.size for c in comps)
        self.zero = tuple(c.zero for c in comps)
        self.one = tuple(c.one for c in comps)
        # integer I/O works only for Z_m with pairwise coprime prime powers
        primes = [c.p for c in comps]
        self._integer_like = all(c.r == 1 for c in comps) and len(set(primes)) == len(primes)
        self._elements = None

    @classmethod
    def from_modulus(cls, m: int) -> "ProductRing":
        """Z_m decomposed into its prime-power residue rings."""
        return cls([ChainRing(p, e, 1) for p, e in factorize(m)])

    # -- identity / display ---------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, ProductRing) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return " x ".join(repr(c) for c in self.components)

    def format_element(self, a) -> str:
        if self._integer_like:
            if self.s == 1:
                return str(a[0][0])
            return str(self.lift(a))
        parts = [c.format_element(x) for c, x in zip(self.components, a)]
        if self.s == 1:
            return parts[0]
        return "(" + ", ".join(parts) + ")"

    # -- element plumbing -------------------------------------------------------

    def check(self, a):
        if len(a) != self.s:
            raise ValidationError(f"element {a!r} has arity {len(a)}, ring has {self.s} components")
        return tuple(c.check(part) for c, part in zip(self.components, a))

    def elements(self) -> list:
        if self._elements is None:
            self._elements = [
                tuple(combo)
                for combo in itertools.product(*(c.elements() for c in self.components))
            ]
        return self._elements

    def project(self, x: int):
        """Residues of an integer in each component (the CRT direction)."""
        if not self._integer_like:
            raise ValidationError(
                "integer projection needs pairwise-coprime Z_{p^e} components"
            )
        return tuple((x % c.pe,) for c in self.components)

    def lift(self, a) -> int:
        """The unique integer in [0, m) with the given residues."""
        if not self._integer_like:
            raise ValidationError("integer lifting needs pairwise-coprime Z_{p^e} components")
        a = self.check(a)
        m = prod(c.pe for c in self.components)
        x = 0
        for c, part in zip(self.components, a):
            cof = m // c.pe
            x += part[0] * cof * pow(cof, -1, c.pe)
        return x % m

    # -- componentwise arithmetic ----------------------------------------------

    def _arity(self, a, b):
        if len(a) != self.s or len(b) != self.s:
            raise ValidationError(f"arity mismatch in {self!r}: {a!r}, {b!r}")

    def add(self, a, b):
        self._arity(a, b)
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def sub(self, a, b):
        self._arity(a, b)
        return tuple(c.sub(x, y) for c, x, y in zip(self.components, a, b))

    def neg(self, a):
        return tuple(c.neg(x) for c, x in zip(self.components, a))

    def mul(self, a, b):
        self._arity(a, b)
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, a, b))

    def is_unit(self, a) -> bool:
        return all(c.is_unit(x) for c, x in zip(self.components, a))
