"""Constructors for the families of modular data this library ships.

Pointed data come from a finite abelian group with a nondegenerate
quadratic form; the remaining families (two-dimensional Ising-shaped data,
Fibonacci-shaped data, a rank six family at conductor nine, and hyperbolic
doubles) are written down entry by entry.  Everything returns a
ModularDatum whose entries are exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .cyclo import Cyc, RootOfUnity, rational, root_of_unity
from .modular import DataFormatError, ModularDatum

__all__ = [
    "MetricGroup",
    "CocycleSpec",
    "pointed",
    "ising",
    "fibonacci",
    "so5_level9",
    "double_abelian",
    "deligne_product",
    "fsexp_vec_g_omega",
]


# ---------------------------------------------------------------------------
# pointed data


@dataclass(frozen=True)
class MetricGroup:
    """A finite abelian group prod_i Z/orders[i] together with a quadratic
    form q into the roots of unity, tabulated on the elements in row major
    order (itertools.product order)."""

    orders: tuple[int, ...]
    q: tuple[RootOfUnity, ...]

    def __post_init__(self):
        if not self.orders or any(n < 1 for n in self.orders):
            raise DataFormatError(f"bad group orders {self.orders}")
        if len(self.q) != self.size:
            raise DataFormatError(
                f"q has {len(self.q)} values for a group of size {self.size}"
            )

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(n) for n in self.orders)))

    def index(self, g: tuple[int, ...]) -> int:
        idx = 0
        for gi, n in zip(g, self.orders):
            idx = idx * n + (gi % n)
        return idx

    def add(self, g, h) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.orders))

    def neg(self, g) -> tuple[int, ...]:
        return tuple((-a) % n for a, n in zip(g, self.orders))

    def q_at(self, g) -> RootOfUnity:
        return self.q[self.index(g)]

    @staticmethod
    def generator_form(orders, exps) -> "MetricGroup":
        """q(g) = prod_i zeta^(exps[i] * g_i^2) where the i-th root is of
        order orders[i] for odd orders[i] and 2*orders[i] for even."""
        orders = tuple(int(n) for n in orders)
        exps = tuple(int(a) for a in exps)
        if len(exps) != len(orders):
            raise DataFormatError("one exponent per cyclic factor is required")
        moduli = tuple(n if n % 2 else 2 * n for n in orders)
        vals = []
        for g in itertools.product(*(range(n) for n in orders)):
            acc = RootOfUnity.one()
            for gi, a, m in zip(g, exps, moduli):
                acc = acc * RootOfUnity.make(m, a * gi * gi)
            vals.append(acc)
        return MetricGroup(orders, tuple(vals))


def _bilinear_table(mg: MetricGroup) -> list[list[RootOfUnity]]:
    """b(g, h) = q(g + h) / (q(g) q(h)); also validates that q is quadratic
    and that b is bimultiplicative and nondegenerate."""
    elems = mg.elements()
    size = mg.size
    for g in elems:
        if mg.q_at(mg.neg(g)) != mg.q_at(g):
            raise DataFormatError(f"q({g}) differs from q(-{g}); not a quadratic form")
    b = [[None] * size for _ in range(size)]
    for i, g in enumerate(elems):
        qi_inv = mg.q_at(g).inverse()
        for j in range(i, size):
            h = elems[j]
            v = mg.q_at(mg.add(g, h)) * qi_inv * mg.q_at(h).inverse()
            b[i][j] = v
            b[j][i] = v
    gens = []
    k = len(mg.orders)
    for axis in range(k):
        e = tuple(1 if t == axis else 0 for t in range(k))
        gens.append(mg.index(e))
    for ge in gens:
        grow = b[ge]
        for i, g in enumerate(elems):
            shifted = mg.index(mg.add(g, elems[ge]))
            for j in range(size):
                if b[shifted][j] != b[i][j] * grow[j]:
                    raise DataFormatError(
                        "q is not a quadratic form: the associated b is not bimultiplicative"
                    )
    for i in range(size):
        if i != 0 and all(b[i][j].order == 1 for j in range(size)):
            raise DataFormatError(
                f"the form is degenerate: {elems[i]} pairs trivially with everything"
            )
    return b


def _element_label(g: tuple[int, ...], single: bool) -> str:
    if all(v == 0 for v in g):
        return "1"
    if single:
        return f"g{g[0]}"
    return "g(" + ",".join(str(v) for v in g) + ")"


def pointed(mg: MetricGroup, name: str | None = None) -> ModularDatum:
    """Modular data of a pointed fusion ring: S[g][h] = b(g, h) and
    T[g] = q(g)^(-1), for a nondegenerate quadratic form q."""
    elems = mg.elements()
    b = _bilinear_table(mg)
    cache: dict[tuple[int, int], Cyc] = {}

    def as_cyc(r: RootOfUnity) -> Cyc:
        key = (r.order, r.exponent)
        if key not in cache:
            cache[key] = r.to_cyc()
        return cache[key]

    size = mg.size
    S = [[as_cyc(b[i][j]) for j in range(size)] for i in range(size)]
    T = [mg.q_at(g).inverse() for g in elems]
    single = len(mg.orders) == 1
    labels = [_element_label(g, single) for g in elems]
    if name is None:
        name = "pointed-" + "x".join(f"c{n}" for n in mg.orders)
    return ModularDatum(labels, S, T, name=name, _trusted=True)


def double_abelian(orders, name: str | None = None) -> ModularDatum:
    """The hyperbolic double of an abelian group A: the group is A x A with
    q((g, h)) = prod_i zeta_{n_i}^(g_i h_i).  Always modular, with trivial
    anomaly and global dimension |A|^2."""
    orders = tuple(int(n) for n in orders)
    if not orders or any(n < 1 for n in orders):
        raise DataFormatError(f"bad group orders {orders}")
    dbl = orders + orders
    k = len(orders)
    vals = []
    for gh in itertools.product(*(range(n) for n in dbl)):
        acc = RootOfUnity.one()
        for i in range(k):
            acc = acc * RootOfUnity.make(orders[i], gh[i] * gh[k + i])
        vals.append(acc)
    mg = MetricGroup(dbl, tuple(vals))
    if name is None:
        name = "double-" + "x".join(f"c{n}" for n in orders)
    return pointed(mg, name=name)


# ---------------------------------------------------------------------------
# named small families


def ising(j: int = 1, eps: int = 1) -> ModularDatum:
    """Rank three data with objects 1, psi, sigma and S built from
    d = zeta_16^j + zeta_16^(-j) (j odd mod 16, eps = +-1):

        S = [[1, 1, e*d], [1, 1, -e*d], [e*d, -e*d, 0]]
        T = diag(1, -1, eps * zeta_16^(-j))
    """
    j %= 16
    if j % 2 == 0:
        raise ValueError(f"j must be odd mod 16, got {j}")
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    d = root_of_unity(16, 2 * j) + root_of_unity(16, -2 * j)
    ed = d if eps == 1 else -d
    one = rational(1)
    S = [
        [one, one, ed],
        [one, one, -ed],
        [ed, -ed, rational(0)],
    ]
    t_sigma = RootOfUnity.make(16, -j if eps == 1 else 8 - j)
    T = [RootOfUnity.one(), RootOfUnity.make(2, 1), t_sigma]
    tag = "p" if eps == 1 else "m"
    return ModularDatum(
        ["1", "psi", "sigma"], S, T, name=f"ising-{j}-{tag}", _trusted=True
    )


def fibonacci(j: int = 1) -> ModularDatum:
    """Rank two data with objects 1, tau:

        S = [[1, d], [d, -1]],  d = 1 + zeta_5^j + zeta_5^(-j)
        T = diag(1, zeta_5^(2j))

    for j not divisible by 5.  j = 1, 4 give the golden ratio for d; j = 2, 3
    give its conjugate 1 - 1/phi, which is negative.
    """
    if j % 5 == 0:
        raise ValueError(f"j must be a unit mod 5, got {j}")
    d = rational(1) + root_of_unity(5, j) + root_of_unity(5, -j)
    S = [[rational(1), d], [d, rational(-1)]]
    T = [RootOfUnity.one(), RootOfUnity.make(5, 2 * j)]
    return ModularDatum(["1", "tau"], S, T, name=f"fibonacci-{j % 5}", _trusted=True)


def so5_level9(j: int = 1) -> ModularDatum:
    """A rank six family at conductor nine built from
    u = zeta_9^j - zeta_9^(2j) - zeta_9^(5j) and its images u1, u2 under
    doubling the exponent.  Global dimension 9 with all T orders dividing 9.
    """
    if math.gcd(j, 9) != 1:
        raise ValueError(f"j must be a unit mod 9, got {j}")

    def z(e: int) -> Cyc:
        return root_of_unity(9, j * e)

    u = [z(2**m) - z(2 * 2**m) - z(5 * 2**m) for m in range(3)]
    u0, u1, u2 = u
    one = rational(1)
    S = [
        [one, -one, one, u0, u1, u2],
        [-one, one, -one, -u1, -u2, -u0],
        [one, -one, one, u2, u0, u1],
        [u0, -u1, u2, one, one, one],
        [u1, -u2, u0, one, one, one],
        [u2, -u0, u1, one, one, one],
    ]
    T = [
        RootOfUnity.one(),
        RootOfUnity.make(9, 6 * j),
        RootOfUnity.make(9, 3 * j),
        RootOfUnity.make(9, 5 * j),
        RootOfUnity.make(9, 8 * j),
        RootOfUnity.make(9, 2 * j),
    ]
    labels = ["1", "a", "b", "u0", "u1", "u2"]
    return ModularDatum(labels, S, T, name=f"so5level9-{j % 9}", _trusted=True)


# ---------------------------------------------------------------------------
# products


def deligne_product(a: ModularDatum, b: ModularDatum) -> ModularDatum:
    """Tensor (Kronecker) product of two modular data.  S is the Kronecker
    product of the S matrices, T multiplies entrywise, and labels pair up."""
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    S = []
    for ia in range(a.rank):
        for ib in range(b.rank):
            row = []
            for ja in range(a.rank):
                va = a.S[ia][ja]
                for jb in range(b.rank):
                    row.append(va * b.S[ib][jb])
            S.append(row)
    T = [ta * tb for ta in a.T for tb in b.T]
    na = a.name or "a"
    nb = b.name or "b"
    return ModularDatum(labels, S, T, name=f"({na})x({nb})", _trusted=True)


# ---------------------------------------------------------------------------
# twisted group data without a full construction


@dataclass(frozen=True)
class CocycleSpec:
    """A 3-cocycle on prod_i Z/orders[i] given by per-factor exponents:
    on the factor Z/n with exponent a it restricts, on the cyclic subgroup
    of order d generated by any g of that order, to the class a mod d.

    For several factors the restriction to a general cyclic subgroup mixes
    the exponents; `restriction_orders` can then supply the order of the
    restricted class per element (as a mapping from element tuples)."""

    orders: tuple[int, ...]
    exps: tuple[int, ...]
    restriction_orders: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self):
        if len(self.exps) != len(self.orders):
            raise DataFormatError("one exponent per cyclic factor is required")
        for a, n in zip(self.exps, self.orders):
            if not 0 <= a < n:
                raise DataFormatError(f"exponent {a} out of range for Z/{n}")


def fsexp_vec_g_omega(spec: CocycleSpec) -> int:
    """The invariant lcm_g |g| * ord(omega restricted to <g>) for graded
    vector spaces twisted by the cocycle described by spec.

    For a single cyclic factor Z/n with exponent a the restriction to the
    subgroup of order d has order d / gcd(d, a), computed from the standard
    generator cocycle.  Multi-factor specs need explicit restriction orders
    unless the cocycle is trivial.
    """
    multi = len(spec.orders) > 1 and any(spec.exps)
    lookup = dict(spec.restriction_orders)
    acc = 1
    for g in itertools.product(*(range(n) for n in spec.orders)):
        d = 1
        for gi, n in zip(g, spec.orders):
            d = math.lcm(d, n // math.gcd(n, gi))
        if any(v for v in g) and multi:
            if g not in lookup:
                raise ValueError(
                    f"restriction order for {g} is required for multi-factor cocycles"
                )
            w = lookup[g]
        elif g in lookup:
            w = lookup[g]
        elif len(spec.orders) == 1:
            a = spec.exps[0]
            w = d // math.gcd(d, a)
        else:
            w = 1
        acc = math.lcm(acc, d * w)
    return acc
