"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored on the power basis {zeta_n^i : 0 <= i < phi(n)} with
rational coefficients, reduced modulo the n-th cyclotomic polynomial.
Internally a Cyc keeps one common positive denominator and an integer
numerator vector; the public `coeffs` view is a tuple of Fractions.

All arithmetic is exact.  Floating point enters only through `Cyc.embed`,
which returns a certified complex interval (midpoint plus radius) used for
sign decisions; every sign decision first runs an exact zero test, so the
interval loop terminates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import mpmath

__all__ = [
    "Cyc",
    "RootOfUnity",
    "ComplexInterval",
    "root_of_unity",
    "rational",
    "euler_phi",
    "divisors",
    "units_mod",
    "unit_group_generators",
    "cyclotomic_poly",
    "real_subfield_degree",
]


# ---------------------------------------------------------------------------
# elementary number theory


@lru_cache(maxsize=None)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    assert n >= 1
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    phi = 1
    for p, e in _factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    out = [1]
    for p, e in _factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def units_mod(n: int) -> tuple[int, ...]:
    """Representatives of (Z/n)*, with (1,) for n <= 2 kept nonempty."""
    if n <= 2:
        return (1,)
    return tuple(k for k in range(1, n) if math.gcd(k, n) == 1)


def _primitive_root(q: int) -> int:
    # q an odd prime power
    p = _factorize(q)[0][0]
    phi = euler_phi(q)
    prime_divs = [f for f, _ in _factorize(phi)]
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, phi // f, q) != 1 for f in prime_divs):
            return g
    raise ArithmeticError(f"no primitive root mod {q}")


@lru_cache(maxsize=None)
def unit_group_generators(n: int) -> tuple[int, ...]:
    """Generators of (Z/n)*, assembled by CRT from prime power parts."""
    if n <= 2:
        return ()
    gens = []
    for p, e in _factorize(n):
        q = p**e
        rest = n // q
        if p == 2:
            local = [] if e == 1 else ([3] if e == 2 else [q - 1, 5])
        else:
            local = [_primitive_root(q)]
        for g in local:
            # lift to be g mod q and 1 mod rest
            if rest == 1:
                gens.append(g % n)
            else:
                inv = pow(q, -1, rest)
                x = (g + q * ((1 - g) * inv % rest)) % n
                gens.append(x)
    return tuple(gens)


def real_subfield_degree(n: int) -> int:
    """Degree of the maximal real subfield of Q(zeta_n) over Q.

    Complex conjugation is the automorphism k = -1, which is trivial exactly
    for n <= 2, so the degree is phi(n)/2 once n >= 3.
    """
    if n <= 2:
        return 1
    return euler_phi(n) // 2


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the reduction table


def _polydiv_exact(a: list[int], b: tuple[int, ...]) -> list[int]:
    # exact division of integer polynomials, b monic; raises if inexact
    a = list(a)
    db = len(b) - 1
    assert b[-1] == 1
    out = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            out[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, computed by dividing x^n - 1
    by the cyclotomic polynomials of the proper divisors of n."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _polydiv_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_basis(n: int) -> tuple[tuple[int, ...], ...]:
    """Row j is x^j reduced mod Phi_n on the power basis (phi(n) integers).

    Since Phi_n divides x^n - 1, exponents only matter mod n and n rows
    suffice for every reduction this module performs.
    """
    phi = euler_phi(n)
    Phi = cyclotomic_poly(n)
    rows = []
    row = [0] * phi
    row[0] = 1
    for _ in range(n):
        rows.append(tuple(row))
        carry = row[phi - 1]
        row = [0] + row[: phi - 1]
        if carry:
            for i in range(phi):
                if Phi[i]:
                    row[i] -= carry * Phi[i]
    return tuple(rows)


# ---------------------------------------------------------------------------
# certified embeddings


@dataclass(frozen=True)
class ComplexInterval:
    """Complex ball: |true value - (re + i*im)| <= radius."""

    re: object
    im: object
    radius: object

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    @property
    def width(self):
        return 2 * self.radius


# ---------------------------------------------------------------------------
# field elements


def _normalize(n: int, den: int, num: list[int]) -> "Cyc":
    if not any(num):
        return Cyc(n, 1, (0,) * len(num))
    g = den
    for v in num:
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        den //= g
        num = [v // g for v in num]
    return Cyc(n, den, tuple(num))


class Cyc:
    """An element of Q(zeta_n) in reduced power-basis form.

    Mixed-conductor arithmetic lifts both operands to the least common
    conductor before operating; results are not automatically pushed down
    to their minimal conductor (call `reduce_conductor` for that).
    Equality is semantic: values are compared after lifting.
    """

    __slots__ = ("n", "den", "num")

    def __init__(self, n: int, den: int, num: tuple[int, ...]):
        self.n = n
        self.den = den
        self.num = num

    # -- constructors

    @staticmethod
    def from_rational(q) -> "Cyc":
        q = Fraction(q)
        return Cyc(1, q.denominator, (q.numerator,))

    # -- views

    @property
    def conductor(self) -> int:
        return self.n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational number: {self}")
        return Fraction(self.num[0], self.den)

    # -- conductor changes

    def lift(self, m: int) -> "Cyc":
        """Rewrite at conductor m, a multiple of the current one."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot lift conductor {self.n} to {m}")
        rows = _power_basis(m)
        step = m // self.n
        acc = [0] * euler_phi(m)
        for i, v in enumerate(self.num):
            if v:
                row = rows[(i * step) % m]
                for idx, rv in enumerate(row):
                    if rv:
                        acc[idx] += v * rv
        return _normalize(m, self.den, acc)

    def _express_at(self, d: int):
        # coefficients over the power basis of Q(zeta_d) inside Q(zeta_n),
        # or None when the value does not lie in the subfield
        rows = _power_basis(self.n)
        step = self.n // d
        cols = [rows[(j * step) % self.n] for j in range(euler_phi(d))]
        sol = _solve_columns(cols, self.num)
        if sol is None:
            return None
        den = 1
        for f in sol:
            den = den * f.denominator // math.gcd(den, f.denominator)
        return _normalize(d, den * self.den, [int(f * den) for f in sol])

    def reduce_conductor(self) -> "Cyc":
        """Rewrite at the smallest conductor containing the value."""
        if self.n == 1:
            return self
        if self.is_rational():
            return Cyc(1, self.den, (self.num[0],))
        for d in divisors(self.n)[:-1]:
            if d == 1:
                continue
            low = self._express_at(d)
            if low is not None:
                return low
        return self

    # -- ring operations

    def _coerce(self, other):
        if isinstance(other, Cyc):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.from_rational(other)
        return None

    def _common(self, other: "Cyc"):
        if self.n == other.n:
            return self, other
        m = self.n * other.n // math.gcd(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        g = math.gcd(a.den, b.den)
        fa, fb = b.den // g, a.den // g
        num = [x * fa + y * fb for x, y in zip(a.num, b.num)]
        return _normalize(a.n, a.den * fa, num)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, self.den, tuple(-v for v in self.num))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            q = Fraction(o.num[0], o.den)
            return _normalize(
                self.n, self.den * q.denominator, [v * q.numerator for v in self.num]
            )
        if self.is_rational():
            return o * self
        a, b = self._common(o)
        la, lb = a.num, b.num
        raw = [0] * (len(la) + len(lb) - 1)
        for i, v in enumerate(la):
            if v:
                for j, w in enumerate(lb):
                    if w:
                        raw[i + j] += v * w
        phi = len(la)
        acc = list(raw[:phi])
        if len(raw) > phi:
            rows = _power_basis(a.n)
            for j in range(phi, len(raw)):
                c = raw[j]
                if c:
                    row = rows[j % a.n]
                    for idx, rv in enumerate(row):
                        if rv:
                            acc[idx] += c * rv
        return _normalize(a.n, a.den * b.den, acc)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            q = 1 / Fraction(self.num[0], self.den)
            return Cyc.from_rational(q)
        # extended gcd against Phi_n over Q; Phi_n is irreducible so any
        # nonzero element of degree < phi(n) is invertible
        f = [Fraction(v, self.den) for v in self.num]
        g = [Fraction(c) for c in cyclotomic_poly(self.n)]
        r0, r1 = g, _ftrim(f)
        t0, t1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _fdivmod(r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, _fsub(t0, _fmul(q, t1))
        if not r1:
            raise ZeroDivisionError("inverse of zero")
        c = r1[0]
        inv = [t / c for t in t1]
        phi = euler_phi(self.n)
        inv = (inv + [Fraction(0)] * phi)[:phi]
        den = 1
        for x in inv:
            den = den * x.denominator // math.gcd(den, x.denominator)
        return _normalize(self.n, den, [int(x * den) for x in inv])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            q = Fraction(o.num[0], o.den)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "Cyc":
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyc.from_rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.n == o.n:
            return self.den == o.den and self.num == o.num
        a, b = self._common(o)
        return a.den == b.den and a.num == b.num

    __hash__ = None  # semantic equality across conductors; not hashable

    # -- Galois action

    def galois(self, k: int) -> "Cyc":
        """Image under the automorphism zeta_n -> zeta_n^k; k must be a unit."""
        n = self.n
        k %= n
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit mod {n}")
        if n <= 2 or k == 1:
            return self
        rows = _power_basis(n)
        acc = [0] * len(self.num)
        for i, v in enumerate(self.num):
            if v:
                row = rows[(i * k) % n]
                for idx, rv in enumerate(row):
                    if rv:
                        acc[idx] += v * rv
        return _normalize(n, self.den, acc)

    def conj(self) -> "Cyc":
        """Complex conjugation, the automorphism k = -1."""
        if self.n <= 2:
            return self
        return self.galois(self.n - 1)

    def is_totally_real(self) -> bool:
        return self.conj() == self

    def conjugates(self) -> list["Cyc"]:
        """The distinct Galois conjugates (one per embedding of Q(self))."""
        out: list[Cyc] = []
        for k in units_mod(self.n):
            v = self.galois(k)
            if not any(v == w for w in out):
                out.append(v)
        return out

    def degree(self) -> int:
        """Degree of Q(self) over Q."""
        return len(self.conjugates())

    def trace_norm(self) -> tuple[Fraction, Fraction]:
        """Trace and norm of self over Q(self)/Q (sum and product of the
        distinct conjugates)."""
        cs = self.conjugates()
        tr = cs[0]
        nm = cs[0]
        for c in cs[1:]:
            tr = tr + c
            nm = nm * c
        return tr.as_fraction(), nm.as_fraction()

    def m_measure(self) -> Fraction:
        """Normalized second moment Tr(a^2 over Q(a)) / [Q(a):Q] for totally
        real a; this is the mean square of the conjugates."""
        if not self.is_totally_real():
            raise ValueError("m_measure requires a totally real argument")
        cs = self.conjugates()
        s = cs[0] * cs[0]
        for c in cs[1:]:
            s = s + c * c
        return s.as_fraction() / len(cs)

    def minimal_polynomial(self) -> tuple[Fraction, ...]:
        """Coefficients of the minimal polynomial over Q, monic, low degree
        first: the product of (x - c) over the distinct conjugates c."""
        poly = [Cyc.from_rational(1)]
        for c in self.conjugates():
            nxt = [Cyc.from_rational(0)] * (len(poly) + 1)
            for i, p in enumerate(poly):
                nxt[i + 1] = nxt[i + 1] + p
                nxt[i] = nxt[i] - c * p
            poly = nxt
        return tuple(p.as_fraction() for p in poly)

    def is_algebraic_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.minimal_polynomial())

    def is_root_of_unity(self):
        """Multiplicative order when self is a root of unity, else None.

        Torsion in Q(zeta_n)* is generated by -zeta_n, so it suffices to
        test exponent lcm(2, n) and then minimize over its divisors.
        """
        if self.is_zero():
            return None
        L = self.n if self.n % 2 == 0 else 2 * self.n
        if self**L != 1:
            return None
        for d in divisors(L):
            if self**d == 1:
                return d
        raise AssertionError("unreachable")

    # -- analytic layer

    def embed(self, precision: int = 53) -> ComplexInterval:
        """Certified complex ball around the principal embedding
        zeta_n -> exp(2*pi*i/n), with radius at most 2**-(precision+1)."""
        scale = sum(abs(v) for v in self.num) // self.den + 2
        guard = scale.bit_length() + (len(self.num) + 3).bit_length() + 12
        with mpmath.workprec(precision + guard):
            z = mpmath.mpc(0)
            for i, v in enumerate(self.num):
                if v:
                    z += v * mpmath.expjpi(mpmath.mpf(2 * i) / self.n)
            z = z / self.den
            rad = mpmath.mpf(2) ** (-(precision + 1))
            return ComplexInterval(z.real, z.imag, rad)

    def sign(self) -> int:
        """Sign of a totally real value under the principal embedding.

        Exact zero test first, then interval evaluation at doubling
        precision; the loop terminates because a nonzero algebraic number
        is bounded away from zero.
        """
        if not self.is_totally_real():
            raise ValueError("sign requires a totally real argument")
        if self.is_zero():
            return 0
        prec = 64
        while prec <= 1 << 16:
            iv = self.embed(prec)
            if abs(iv.re) > iv.radius:
                return 1 if iv.re > 0 else -1
            prec *= 2
        raise ArithmeticError(f"sign of {self} unresolved at precision {prec}")

    def compare_real(self, other) -> int:
        """Exact three-way comparison of totally real values."""
        diff = self - (other if isinstance(other, Cyc) else Cyc.from_rational(other))
        return diff.sign()

    def is_totally_positive(self) -> bool:
        """True when every real embedding of the value is positive."""
        if not self.is_totally_real():
            raise ValueError("is_totally_positive requires a totally real argument")
        if self.is_zero():
            return False
        return all(c.sign() > 0 for c in self.conjugates())

    # -- presentation and serialization

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, v in enumerate(self.num):
            if not v:
                continue
            coeff = Fraction(v, self.den)
            if i == 0:
                parts.append(str(coeff))
                continue
            mag = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
            power = f"z{self.n}" if i == 1 else f"z{self.n}^{i}"
            term = f"{mag}{power}"
            parts.append(f"-{term}" if coeff < 0 else (f"+{term}" if parts else term))
        s = parts[0]
        for p in parts[1:]:
            s += f" {p[0]} {p[1:]}" if p[0] in "+-" else f" + {p}"
        return s

    def __repr__(self) -> str:
        return f"Cyc({self})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "c": [[str(f.numerator), str(f.denominator)] for f in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> "Cyc":
        if not isinstance(obj, dict) or "n" not in obj or "c" not in obj:
            raise ValueError("field element must be {'n': ..., 'c': [[num, den], ...]}")
        n = obj["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"bad conductor {n!r}")
        c = obj["c"]
        if len(c) != euler_phi(n):
            raise ValueError(
                f"coefficient length {len(c)} does not match phi({n}) = {euler_phi(n)}"
            )
        coeffs = []
        for pair in c:
            num, den = pair
            coeffs.append(Fraction(int(num), int(den)))
        den = 1
        for f in coeffs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        return _normalize(n, den, [int(f * den) for f in coeffs])


def rational(q) -> Cyc:
    """The rational number q as a conductor-1 element."""
    return Cyc.from_rational(q)


def root_of_unity(n: int, k: int = 1) -> Cyc:
    """zeta_n^k as an exact element, stored at the reduced conductor
    n / gcd(n, k)."""
    r = RootOfUnity.make(n, k)
    if r.order == 1:
        return Cyc.from_rational(1)
    return Cyc(r.order, 1, _power_basis(r.order)[r.exponent])


# ---------------------------------------------------------------------------
# roots of unity as (order, exponent) pairs


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_order^exponent in lowest terms: gcd(exponent, order) = 1 and the
    stored order is the true multiplicative order."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1 or not 0 <= self.exponent < max(self.order, 1):
            raise ValueError(f"bad root of unity ({self.order}, {self.exponent})")
        if self.order == 1:
            if self.exponent != 0:
                raise ValueError("order 1 forces exponent 0")
        elif math.gcd(self.exponent, self.order) != 1:
            raise ValueError(
                f"({self.order}, {self.exponent}) is not in lowest terms"
            )

    @staticmethod
    def make(m: int, k: int) -> "RootOfUnity":
        if m < 1:
            raise ValueError(f"bad order {m}")
        k %= m
        if k == 0:
            return RootOfUnity(1, 0)
        g = math.gcd(k, m)
        return RootOfUnity(m // g, k // g)

    @staticmethod
    def one() -> "RootOfUnity":
        return RootOfUnity(1, 0)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        L = self.order * other.order // math.gcd(self.order, other.order)
        return RootOfUnity.make(
            L, self.exponent * (L // self.order) + other.exponent * (L // other.order)
        )

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity.make(self.order, -self.exponent)

    def __pow__(self, e: int) -> "RootOfUnity":
        return RootOfUnity.make(self.order, self.exponent * e)

    def to_cyc(self) -> Cyc:
        return root_of_unity(self.order, self.exponent)

    def __str__(self) -> str:
        if self.order == 1:
            return "1"
        if self.order == 2:
            return "-1"
        e = "" if self.exponent == 1 else f"^{self.exponent}"
        return f"z{self.order}{e}"

    def to_json(self) -> dict:
        return {"m": self.order, "k": self.exponent}

    @staticmethod
    def from_json(obj: dict) -> "RootOfUnity":
        if not isinstance(obj, dict) or "m" not in obj or "k" not in obj:
            raise ValueError("root of unity must be {'m': ..., 'k': ...}")
        m, k = obj["m"], obj["k"]
        if not isinstance(m, int) or not isinstance(k, int):
            raise ValueError("root of unity fields must be integers")
        return RootOfUnity.make(m, k)


# ---------------------------------------------------------------------------
# small exact linear algebra helpers


def _ftrim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _fsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return _ftrim(out)


def _fmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, v in enumerate(a):
        if v:
            for j, w in enumerate(b):
                if w:
                    out[i + j] += v * w
    return _ftrim(out)


def _fdivmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i] * inv
        if c:
            q[i - len(b) + 1] = c
            for j, w in enumerate(b):
                a[i - len(b) + 1 + j] -= c * w
    return _ftrim(q), _ftrim(a)


def _solve_columns(cols: list[tuple[int, ...]], rhs: tuple[int, ...]):
    """Solve sum_j x_j cols[j] = rhs exactly; None when inconsistent."""
    rows = len(rhs)
    ncols = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(ncols)] + [Fraction(rhs[i])] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][ncols]
    return sol
