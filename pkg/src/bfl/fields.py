"""Finite field arithmetic GF(q), q = r^k, with table-driven operations.

Field elements are plain ints in range(q).  For extension fields the int
packs the coefficient vector of the residue polynomial in base r, least
significant coefficient first, so the residue class of x itself has code r.
All binary operations go through precomputed q x q lookup tables, which is
fast enough for every field this package ships (q <= 81 by default).
"""

from functools import lru_cache

# monic irreducible moduli, coefficients low degree first, constant term first
DEFAULT_MODULI = {
    4: (1, 1, 1),         # x^2 + x + 1
    8: (1, 1, 0, 1),      # x^3 + x + 1
    9: (1, 0, 1),         # x^2 + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 0, 1),        # x^2 + 2
    27: (1, 2, 0, 1),     # x^3 + 2x + 1
    49: (1, 0, 1),        # x^2 + 1
    81: (2, 1, 0, 0, 1),  # x^4 + x + 2
}

FIELD_SIZES = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 49, 81)

_TABLE_CAP = 2048  # build full q x q tables only below this


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n):
    """Prime factorization as a dict prime -> exponent (trial division)."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _polydivmod(num, den, r):
    """Divide coefficient lists over Z_r (monic den), return (quot, rem)."""
    num = list(num)
    dd = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        raise ValueError("denominator not normalized")
    quot = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * dc) % r
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


class FieldSpec:
    """GF(q) with q = r^k: arithmetic tables plus the element codec."""

    def __init__(self, r, k=1, modulus=None):
        if not _is_prime(r):
            raise ValueError("characteristic %r is not prime" % (r,))
        if k < 1:
            raise ValueError("degree must be >= 1")
        q = r ** k
        if q > 2 ** 20:
            raise ValueError("field size %d exceeds cap 2^20" % q)
        if k == 1:
            modulus = (0, 1) if modulus is None else tuple(m % r for m in modulus)
        else:
            if modulus is None:
                if q not in DEFAULT_MODULI:
                    raise ValueError("no shipped modulus for GF(%d); pass one" % q)
                modulus = DEFAULT_MODULI[q]
            modulus = tuple(m % r for m in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree %d" % k)
            self._check_irreducible(modulus, r, k)
        self.r = r
        self.k = k
        self.q = q
        self.modulus = modulus
        if q <= _TABLE_CAP:
            self._build_tables()
        else:
            self.ADD = self.MUL = None
        self._prim = None

    @staticmethod
    def _check_irreducible(modulus, r, k):
        # no root in the prime field
        for a in range(r):
            acc = 0
            for c in reversed(modulus):
                acc = (acc * a + c) % r
            if acc == 0:
                raise ValueError("modulus has root %d mod %d" % (a, r))
        # for k = 4: also rule out quadratic factors (k=2,3 done by the root scan)
        if k == 4:
            for b in range(r):
                for c in range(r):
                    den = (c, b, 1)
                    _, rem = _polydivmod(modulus, den, r)
                    if all(x == 0 for x in rem):
                        raise ValueError("modulus has a quadratic factor")

    # ---- codec -------------------------------------------------------

    def coeffs(self, a):
        """Coefficient tuple of element code a, low degree first."""
        out = []
        for _ in range(self.k):
            out.append(a % self.r)
            a //= self.r
        return tuple(out)

    def encode(self, coeffs):
        a = 0
        for c in reversed(coeffs):
            a = a * self.r + (c % self.r)
        return a

    def encode_int(self, n):
        """The image of the integer n (lands in the prime subfield)."""
        return n % self.r

    # ---- raw polynomial arithmetic (used to build the tables) --------

    def _mul_raw(self, a, b):
        r, k = self.r, self.k
        if k == 1:
            return (a * b) % r
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % r
        _, rem = _polydivmod(prod, self.modulus, r)
        rem += [0] * (k - len(rem))
        return self.encode(rem)

    def _add_raw(self, a, b):
        r, k = self.r, self.k
        if k == 1:
            return (a + b) % r
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.encode([(x + y) % r for x, y in zip(ca, cb)])

    def _build_tables(self):
        q = self.q
        self.ADD = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self.MUL = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        self.NEG = [self.ADD[a].index(0) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.MUL[a].index(1)
        self.INV = inv

    # ---- public ops --------------------------------------------------

    def add(self, a, b):
        return self.ADD[a][b] if self.ADD else self._add_raw(a, b)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.ADD:
            return self.NEG[a]
        return self.encode([(-c) % self.r for c in self.coeffs(a)])

    def mul(self, a, b):
        return self.MUL[a][b] if self.MUL else self._mul_raw(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.q)
        if self.ADD:
            return self.INV[a]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def frobenius(self, a, e=1):
        """a ^ (r^e), the field automorphism applied e times."""
        out = a
        for _ in range(e % self.k):
            out = self.pow(out, self.r)
        return out

    def elements(self):
        return range(self.q)

    def element_mult_order(self, a):
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.q - 1
        order = n
        for p in factorize(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    def primitive(self):
        """A fixed generator of the multiplicative group (smallest code)."""
        if self._prim is None:
            for a in range(1, self.q):
                if self.element_mult_order(a) == self.q - 1:
                    self._prim = a
                    break
        return self._prim

    # ---- identity ----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and self.q == other.q and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.q, self.modulus))

    def __repr__(self):
        return "GF(%d)" % self.q


@lru_cache(maxsize=None)
def GF(q):
    """The cached field of size q with the shipped modulus."""
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError("%d is not a prime power" % q)
    [(r, k)] = fac.items()
    return FieldSpec(r, k)


class FieldElement:
    """Operator sugar over (FieldSpec, code); handy in scripts and parsers."""

    __slots__ = ("F", "a")

    def __init__(self, F, a):
        self.F = F
        self.a = a % F.q if isinstance(a, int) else a

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.F != self.F:
                raise ValueError("mixed fields %r / %r" % (self.F, other.F))
            return other.a
        if isinstance(other, int):
            return other % self.F.r  # ints embed through the prime field
        return NotImplemented

    def __add__(self, other):
        b = self._lift(other)
        return FieldElement(self.F, self.F.add(self.a, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._lift(other)
        return FieldElement(self.F, self.F.sub(self.a, b))

    def __rsub__(self, other):
        b = self._lift(other)
        return FieldElement(self.F, self.F.sub(b, self.a))

    def __mul__(self, other):
        b = self._lift(other)
        return FieldElement(self.F, self.F.mul(self.a, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.F, self.F.neg(self.a))

    def __truediv__(self, other):
        b = self._lift(other)
        return FieldElement(self.F, self.F.div(self.a, b))

    def __pow__(self, n):
        return FieldElement(self.F, self.F.pow(self.a, n))

    def frob(self, e=1):
        return FieldElement(self.F, self.F.frobenius(self.a, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.F == other.F and self.a == other.a
        if isinstance(other, int):
            return self.a == other % self.F.r  # ints embed via the prime field
        return NotImplemented

    def __hash__(self):
        return hash((self.F.q, self.a))

    def __repr__(self):
        return "FieldElement(%r, %d)" % (self.F, self.a)
