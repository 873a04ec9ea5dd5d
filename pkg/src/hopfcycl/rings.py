"""Exact coefficient rings: Z, Q, Z/m, prime fields F_p and cyclotomic fields Q(zeta_n).

Ring elements are plain Python payloads (int, Fraction, residue int, or a
tuple of Fractions for cyclotomic numbers); the ring object carries the
arithmetic.  Containers such as sparse matrices store payloads and a single
ring reference, which keeps tensor-power computations cheap.

All arithmetic is exact: integers are arbitrary precision, fractions are kept
reduced, residues canonical in [0, m), and cyclotomic payloads reduced modulo
the n-th cyclotomic polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import NotAUnit, ParseError, UnsupportedRing

# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod_exact(num, den):
    """Exact division of integer polynomials; the remainder must come out zero."""
    num = list(num)
    den = _poly_trim(den)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        lead = num[k + len(den) - 1]
        q, r = divmod(lead, den[-1])
        assert r == 0, "non-exact cyclotomic division"
        out[k] = q
        for j, d in enumerate(den):
            num[k + j] -= q * d
    assert not _poly_trim(num), "nonzero remainder in cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """The n-th cyclotomic polynomial as an integer coefficient tuple.

    Computed by exact division of x^n - 1 by the product of all lower
    cyclotomic polynomials indexed by proper divisors of n.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_divmod_exact(num, den))


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# ring objects
# ---------------------------------------------------------------------------


class Ring:
    """Base class: exact arithmetic on raw payloads.

    Subclasses fix the payload representation and override the core
    operations.  Ring objects are immutable and hashable; two rings compare
    equal iff they are the same ring (same kind and parameters).
    """

    is_field = False
    contains_rationals = False
    characteristic = 0
    name = "?"

    # -- payload arithmetic --------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, c: int):
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out, base = self.one, a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def sum(self, items):
        out = self.zero
        for a in items:
            out = self.add(out, a)
        return out

    # -- formatting ----------------------------------------------------------
    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class IntegerRing(Ring):
    """Z with int payloads."""

    name = "Z"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, c):
        return c

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise NotAUnit(f"{a} is not a unit in Z")
        return a


class RationalField(Ring):
    """Q with Fraction payloads."""

    name = "Q"
    is_field = True
    contains_rationals = True

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, c):
        return Fraction(c)

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not a unit in Q")
        return 1 / Fraction(a)


class IntegersMod(Ring):
    """Z/m with canonical residues in [0, m)."""

    def __init__(self, m: int):
        if m < 2:
            raise ValueError("modulus must be >= 2")
        self.m = m
        self.characteristic = m
        self.name = f"Z/{m}"

    def _key(self):
        return (self.m,)

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def from_int(self, c):
        return c % self.m

    def is_zero(self, a):
        return a % self.m == 0

    def is_unit(self, a):
        return gcd(a, self.m) == 1

    def inv(self, a):
        if gcd(a, self.m) != 1:
            raise NotAUnit(f"{a} is not a unit mod {self.m}")
        return pow(a, -1, self.m)


class PrimeField(IntegersMod):
    """F_p; same payloads as Z/p but flagged as a field."""

    is_field = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        super().__init__(p)
        self.name = f"F{p}"


class CyclotomicField(Ring):
    """Q(zeta_n) = Q[x] / Phi_n(x); payloads are Fraction tuples of length phi(n).

    zeta is the class of x, a primitive n-th root of unity.  For n = 1, 2 the
    field degenerates to Q with zeta = 1 resp. -1.
    """

    is_field = True
    contains_rationals = True

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        self.name = f"Q(zeta{n})"

    def _key(self):
        return (self.n,)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1 if d > 0 else 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def _reduce(self, coeffs):
        d = self.degree
        c = list(coeffs)
        mod = self.modulus
        for k in range(len(c) - 1, d - 1, -1):
            lead = c[k]
            if lead:
                # subtract lead * x^(k-d) * Phi_n  (Phi_n is monic)
                for j in range(d + 1):
                    c[k - d + j] -= lead * mod[j]
        c = c[:d]
        c += [Fraction(0)] * (d - len(c))
        return tuple(c)

    def from_int(self, c):
        return tuple([Fraction(c)] + [Fraction(0)] * (self.degree - 1))

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def is_unit(self, a):
        return not self.is_zero(a)

    @property
    def zeta(self):
        if self.degree == 1:
            # x = zeta reduces to the rational root of Phi_n (n = 1 or 2)
            return self._reduce([Fraction(0), Fraction(1)])
        return tuple(
            [Fraction(0), Fraction(1)] + [Fraction(0)] * (self.degree - 2)
        )

    def zeta_pow(self, k: int):
        return self.pow(self.zeta, k % self.n)

    def inv(self, a):
        if self.is_zero(a):
            raise NotAUnit("0 is not a unit")
        # extended gcd of a and Phi_n in Q[x]
        mod = [Fraction(c) for c in self.modulus]
        r0, r1 = mod, _poly_trim(a)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant (Phi_n is irreducible)
        assert len(r0) == 1
        c = r0[0]
        return self._reduce([x / c for x in s0])

    def format(self, a) -> str:
        if self.is_zero(a):
            return "0"
        parts = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*z" if c != 1 else "z")
            else:
                parts.append(f"{c}*z^{i}" if c != 1 else f"z^{i}")
        return " + ".join(parts)


def _qpoly_divmod(a, b):
    a = list(a)
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for k in range(len(out) - 1, -1, -1):
        q = a[k + len(b) - 1] / b[-1]
        out[k] = q
        for j, d in enumerate(b):
            a[k + j] -= q * d
    return _poly_trim(out), _poly_trim(a)


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, y in enumerate(b):
        a[j] -= y
    return _poly_trim(a)


ZZ = IntegerRing()
QQ = RationalField()


def Zmod(m: int) -> IntegersMod:
    return IntegersMod(m)


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def Cyclotomic(n: int) -> CyclotomicField:
    return CyclotomicField(n)


_RING_RE = re.compile(r"^(Z|Q|Z/(\d+)|F(\d+)|Q\(zeta(\d+)\))$")


def parse_ring(spec: str) -> Ring:
    """Parse a ring spec string: "Z", "Q", "Z/4", "F7", "Q(zeta3)"."""
    m = _RING_RE.match(spec.strip())
    if not m:
        raise ParseError(f"cannot parse ring spec {spec!r}")
    if m.group(2):
        return Zmod(int(m.group(2)))
    if m.group(3):
        return GF(int(m.group(3)))
    if m.group(4):
        return Cyclotomic(int(m.group(4)))
    return QQ if spec.strip() == "Q" else ZZ


def primitive_root_of_unity(ring: Ring, m: int):
    """A primitive m-th root of unity in the ring, if one is available."""
    from .errors import MissingRootOfUnity

    if m == 1:
        return ring.one
    if isinstance(ring, CyclotomicField) and ring.n % m == 0:
        return ring.zeta_pow(ring.n // m)
    if m == 2 and ring.characteristic == 0:
        return ring.neg(ring.one)
    raise MissingRootOfUnity(f"{ring} has no primitive {m}-th root of unity")


# ---------------------------------------------------------------------------
# homology result descriptors
# ---------------------------------------------------------------------------


def _invariant_chain(torsion):
    """Normalize a multiset of cyclic orders into an invariant-factor chain."""
    powers: dict[int, list[int]] = {}
    for d in torsion:
        if d < 2:
            continue
        x, p = d, 2
        while x > 1:
            if p * p > x:
                p = x
            if x % p == 0:
                e = 0
                while x % p == 0:
                    x //= p
                    e += 1
                powers.setdefault(p, []).append(p**e)
            else:
                p += 1
    for p in powers:
        powers[p].sort(reverse=True)
    depth = max((len(v) for v in powers.values()), default=0)
    chain = []
    for j in range(depth):
        f = 1
        for p, v in powers.items():
            if j < len(v):
                f *= v[j]
        chain.append(f)
    chain.reverse()
    return tuple(chain)


@dataclass(frozen=True)
class HomologyModule:
    """A homology group: free rank plus invariant-factor torsion list.

    Over a field the torsion list is empty and free_rank is the dimension.
    Over Z/m, modules are recorded purely by their torsion chain (a free
    rank-1 module over Z/m is the cyclic group of order m).
    """

    ring: Ring
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", _invariant_chain(self.torsion))
        if self.ring.is_field and self.torsion:
            raise ValueError("field homology cannot carry torsion")

    @property
    def dim(self) -> int:
        if not self.ring.is_field:
            raise UnsupportedRing("dim is only defined over a field")
        return self.free_rank

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __add__(self, other: "HomologyModule") -> "HomologyModule":
        if self.ring != other.ring:
            from .errors import RingMismatch

            raise RingMismatch("direct sum over different rings")
        return HomologyModule(
            self.ring, self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    def __str__(self):
        parts = []
        if self.free_rank:
            base = self.ring.name
            parts.append(base if self.free_rank == 1 else f"{base}^{self.free_rank}")
        for d in self.torsion:
            parts.append(f"Z/{d}")
        return " + ".join(parts) if parts else "0"


def zero_module(ring: Ring) -> HomologyModule:
    return HomologyModule(ring)


def free_module(ring: Ring, rank: int) -> HomologyModule:
    """Rank-r free module; over Z/m recorded as r copies of Z/m."""
    if isinstance(ring, IntegersMod) and not ring.is_field:
        return HomologyModule(ring, 0, (ring.m,) * rank)
    return HomologyModule(ring, rank)


def annihilator_and_quotient(m: int, ring: Ring) -> tuple[HomologyModule, HomologyModule]:
    """Descriptors of Ann(m) = {x : m x = 0} and k/mk over the ring.

    Supported over Z, Q, Z/M and F_p; cyclotomic fields are out of scope.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if isinstance(ring, CyclotomicField):
        raise UnsupportedRing("Ann/quotient not provided over cyclotomic fields")
    if ring == ZZ:
        if m == 0:
            return free_module(ring, 1), free_module(ring, 1)
        ann = zero_module(ring)
        quot = zero_module(ring) if m == 1 else HomologyModule(ring, 0, (m,))
        return ann, quot
    if ring.is_field:
        if ring.is_zero(ring.from_int(m)):
            return free_module(ring, 1), free_module(ring, 1)
        return zero_module(ring), zero_module(ring)
    if isinstance(ring, IntegersMod):
        g = gcd(m, ring.m)
        mod = zero_module(ring) if g == 1 else HomologyModule(ring, 0, (g,))
        return mod, mod
    raise UnsupportedRing(f"Ann/quotient not defined over {ring}")
