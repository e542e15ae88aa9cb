"""Arithmetic bounds on modular data.

The central statement: when the T order is a power of an odd prime it is
at most the integer norm of the global dimension, and when it is a power
of two it is at most four times that norm.  `bound_check` evaluates this
and flags the extremal cases; `extremal_classify` matches the fusion ring
of an extremal datum against the short list of shapes that can occur.
`lemma_orbit_bound` and `siegel_check` expose the two ingredients the
bound rests on, per object: a Galois orbit sum against a trace measure,
and the trace lower bound for totally positive algebraic integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import Cyc, rational, units_mod
from .construct import ising
from .galois import orbit_t
from .modular import (
    FusionTensor,
    ModularDatum,
    NotModularError,
    dims,
    fs_exponent,
    global_dim,
    invertibles,
    ndim,
    normalized_t_order,
    verlinde_fusion,
)

__all__ = [
    "BoundVerdict",
    "prime_power",
    "LemmaVerdict",
    "bound_check",
    "lemma_orbit_bound",
    "key_object",
    "siegel_check",
    "extremal_classify",
]


def prime_power(n: int) -> int | None:
    """The prime p when n = p^a with a >= 1, else None."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            return n
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of the T order bound for one datum.

    prime is None when the T order is not a prime power (the bound is then
    vacuous and holds by convention).  tier records which multiple of the
    norm is attained in the extremal case: 1, 2 or 4 for p = 2 and always
    1 for odd p.
    """

    name: str
    fsexp: int
    ndim: int
    prime: int | None
    bound_holds: bool
    extremal: bool
    tier: int | None
    extremal_class: str | None = None

    def __str__(self):
        if self.prime is None:
            shape = "not a prime power; bound vacuous"
        else:
            cap = 4 * self.ndim if self.prime == 2 else self.ndim
            rel = "<=" if self.bound_holds else ">"
            shape = f"p = {self.prime}: {self.fsexp} {rel} {cap}"
        extra = ""
        if self.extremal:
            extra = f"  extremal (tier {self.tier})"
            if self.extremal_class:
                extra += f" class {self.extremal_class}"
        status = "ok" if self.bound_holds else "VIOLATED"
        return f"[{status}] {self.name}: FSexp = {self.fsexp}, Ndim = {self.ndim}; {shape}{extra}"


def bound_check(md: ModularDatum, classify: bool = False) -> BoundVerdict:
    """Evaluate the prime power bound FSexp <= Ndim (odd p) or
    FSexp <= 4 Ndim (p = 2) and detect equality tiers."""
    fs = fs_exponent(md)
    nd = ndim(md)
    p = prime_power(fs)
    if p is None:
        holds, tier = True, None
    elif p == 2:
        holds = fs <= 4 * nd
        tier = next((t for t in (1, 2, 4) if fs == t * nd), None)
    else:
        holds = fs <= nd
        tier = 1 if fs == nd else None
    extremal = p is not None and tier is not None
    cls = None
    if classify and extremal:
        cls = extremal_classify(md)
    return BoundVerdict(
        name=md.name or "datum",
        fsexp=fs,
        ndim=nd,
        prime=p,
        bound_holds=holds,
        extremal=extremal,
        tier=tier,
        extremal_class=cls,
    )


# ---------------------------------------------------------------------------
# the per-object orbit bound


@dataclass(frozen=True)
class LemmaVerdict:
    """Result of the orbit bound for one object: the sum of squared
    dimensions over the squared-Galois suborbit must be at least
    [Q(t[X]) real part : Q] * M(dim X), where M is the mean squared
    conjugate.  Only stated for data with integer global dimension."""

    label: str
    applicable: bool
    note: str = ""
    orbit_labels: tuple[str, ...] = ()
    orbit_sum: Cyc | None = None
    degree: int | None = None
    m_value: Fraction | None = None
    holds: bool | None = None

    def __str__(self):
        if not self.applicable:
            return f"[skip] {self.label}: {self.note}"
        status = "ok" if self.holds else "FAIL"
        return (
            f"[{status}] {self.label}: orbit sum {self.orbit_sum} vs "
            f"{self.degree} * {self.m_value}"
        )


def _square_galois_degree(m: int) -> int:
    # number of distinct squares in the unit group mod m, which is the
    # size of the image of squaring on Gal(Q(zeta_m)/Q); the squared
    # orbit of an object with twist of order m is separated by at least
    # this many distinct twist values, so it is the factor the orbit
    # bound can support.  It equals phi(m)/2 exactly when the unit
    # group has a single element of order two (m = 4, p^k, 2p^k) and is
    # smaller otherwise, e.g. 1 at m = 12 and phi(m)/4 at 2-powers >= 8
    return len({k * k % m for k in units_mod(m)})


def lemma_orbit_bound(md: ModularDatum, label: str) -> LemmaVerdict:
    """Evaluate the orbit bound at one object.  The comparison is exact:
    the orbit sum is totally real and is compared with the rational bound
    through a certified sign computation."""
    D = global_dim(md)
    if not (D.is_rational() and D.as_fraction().denominator == 1):
        return LemmaVerdict(
            label=label,
            applicable=False,
            note="global dimension is not a rational integer",
        )
    x = md.index(label)
    gamma, _ = normalized_t_order(md)
    t_x = md.T[x] * gamma.inverse()
    deg = _square_galois_degree(t_x.order)
    m_val = dims(md)[x].m_measure()
    labels, total = orbit_t(md, label)
    bound = Fraction(deg) * m_val
    holds = total.compare_real(rational(bound)) >= 0
    return LemmaVerdict(
        label=label,
        applicable=True,
        orbit_labels=tuple(sorted(labels)),
        orbit_sum=total,
        degree=deg,
        m_value=m_val,
        holds=holds,
    )


def key_object(md: ModularDatum) -> str:
    """For data whose T order is a prime power, a label X with
    FSexp | ord(t[X]) for the normalized T; such an object always exists
    because the lcm of the normalized orders is a multiple of FSexp."""
    fs = fs_exponent(md)
    if prime_power(fs) is None:
        raise NotModularError(f"T order {fs} is not a prime power")
    gamma, _ = normalized_t_order(md)
    ginv = gamma.inverse()
    for i, t in enumerate(md.T):
        if (t * ginv).order % fs == 0:
            return md.labels[i]
    raise NotModularError("no object attains the full T order after normalization")


def siegel_check(alpha) -> bool:
    """Trace bound for a totally positive algebraic integer alpha: either
    alpha = 1 or Tr(alpha) >= (3/2) [Q(alpha):Q].  Raises ValueError when
    alpha is not a totally positive algebraic integer."""
    a = alpha if isinstance(alpha, Cyc) else rational(alpha)
    if not a.is_totally_real():
        raise ValueError("siegel_check requires a totally real argument")
    if not a.is_totally_positive():
        raise ValueError("siegel_check requires a totally positive argument")
    if not a.is_algebraic_integer():
        raise ValueError("siegel_check requires an algebraic integer")
    if a == 1:
        return True
    tr, _ = a.trace_norm()
    return tr >= Fraction(3, 2) * a.degree()


# ---------------------------------------------------------------------------
# classification of the extremal fusion rings


def _group_fusion(orders: tuple[int, ...]) -> FusionTensor:
    import itertools

    elems = list(itertools.product(*(range(n) for n in orders)))
    index = {g: i for i, g in enumerate(elems)}
    r = len(elems)
    N = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i, g in enumerate(elems):
        for j, h in enumerate(elems):
            s = tuple((a + b) % n for a, b, n in zip(g, h, orders))
            N[i][j][index[s]] = 1
    labels = tuple(str(g) for g in elems)
    return FusionTensor(labels, tuple(tuple(tuple(row) for row in plane) for plane in N))


def _tensor_fusion(a: FusionTensor, b: FusionTensor) -> FusionTensor:
    ra, rb = a.rank, b.rank
    labels = tuple(f"{la}*{lb}" for la in a.labels for lb in b.labels)
    N = []
    for xa in range(ra):
        for xb in range(rb):
            plane = []
            for ya in range(ra):
                for yb in range(rb):
                    row = []
                    for za in range(ra):
                        for zb in range(rb):
                            row.append(a.N[xa][ya][za] * b.N[xb][yb][zb])
                    plane.append(tuple(row))
            N.append(tuple(plane))
    return FusionTensor(labels, tuple(N))


@lru_cache(maxsize=None)
def _ising_fusion() -> FusionTensor:
    return verlinde_fusion(ising(1, 1))


@lru_cache(maxsize=None)
def _templates(rank: int) -> tuple[tuple[str, FusionTensor], ...]:
    base = _ising_fusion()
    if rank == 3:
        return (("ising-x-pointed(1)", base),)
    if rank == 6:
        return (("ising-x-pointed(2)", _tensor_fusion(base, _group_fusion((2,)))),)
    if rank == 9:
        return (("ising-x-ising", _tensor_fusion(base, base)),)
    if rank == 12:
        return (
            ("ising-x-pointed(4)", _tensor_fusion(base, _group_fusion((4,)))),
            ("ising-x-pointed(4)", _tensor_fusion(base, _group_fusion((2, 2)))),
        )
    return ()


def _signature(ft: FusionTensor, x: int) -> tuple:
    flat = tuple(sorted(v for row in ft.N[x] for v in row))
    return (flat, ft.N[x][x][x], ft.N[x][x][0], ft.dual(x) == x)


def _fusion_isomorphic(a: FusionTensor, b: FusionTensor) -> bool:
    r = a.rank
    if b.rank != r:
        return False
    siga = [_signature(a, x) for x in range(r)]
    sigb = [_signature(b, x) for x in range(r)]
    if sorted(siga) != sorted(sigb):
        return False

    assign = [-1] * r
    used = [False] * r

    def consistent(x: int) -> bool:
        for y in range(r):
            if assign[y] < 0:
                continue
            for z in range(r):
                if assign[z] < 0:
                    continue
                if a.N[x][y][z] != b.N[assign[x]][assign[y]][assign[z]]:
                    return False
                if a.N[y][x][z] != b.N[assign[y]][assign[x]][assign[z]]:
                    return False
                if a.N[y][z][x] != b.N[assign[y]][assign[z]][assign[x]]:
                    return False
        return True

    def place(x: int) -> bool:
        if x == r:
            return True
        for cand in range(r):
            if used[cand] or sigb[cand] != siga[x]:
                continue
            if x == 0 and cand != 0:
                continue
            assign[x] = cand
            used[cand] = True
            if consistent(x) and place(x + 1):
                return True
            assign[x] = -1
            used[cand] = False
        return False

    return place(0)


def _invertible_group_cyclic(ft: FusionTensor) -> bool:
    r = ft.rank
    prod = {}
    for x in range(r):
        for y in range(r):
            zs = [z for z in range(r) if ft.N[x][y][z]]
            prod[(x, y)] = zs[0]
    for x in range(r):
        order = 1
        y = x
        while y != 0:
            y = prod[(x, y)]
            order += 1
        if order == r:
            return True
    return r == 1


def extremal_classify(md: ModularDatum) -> str:
    """Name the fusion ring of an extremal datum.

    Returns one of pointed-cyclic, pointed-other, fibonacci, ising-x-ising,
    ising-x-pointed(1), ising-x-pointed(2), ising-x-pointed(4), or
    unclassified when the ring matches none of the shapes."""
    ft = verlinde_fusion(md)
    r = md.rank
    if len(invertibles(ft)) == r:
        return "pointed-cyclic" if _invertible_group_cyclic(ft) else "pointed-other"
    if r == 2 and ft.N[1][1][1] == 1 and ft.N[1][1][0] == 1:
        return "fibonacci"
    for name, tmpl in _templates(r):
        if _fusion_isomorphic(ft, tmpl):
            return name
    return "unclassified"
