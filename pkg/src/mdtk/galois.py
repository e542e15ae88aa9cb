"""Galois action on modular data.

Every automorphism zeta -> zeta^k of a cyclotomic field containing the S
entries and the normalized T entries permutes the objects of a modular
datum.  The permutation is recovered by matching conjugated ratio columns
S[x][y] / S[0][y] against the original ones; the working conductor is the
lcm of 12 times the T order with the conductors of the stored S entries,
which contains every value the identities mention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclo import Cyc, rational, unit_group_generators, units_mod
from .construct import deligne_product
from .modular import (
    Check,
    DegenerateDataError,
    ModularDatum,
    NotModularError,
    VerificationReport,
    dims,
    fs_exponent,
    global_dim,
    ndim,
    normalized_t_order,
    verify,
)

__all__ = [
    "GaloisPermutation",
    "working_conductor",
    "galois_permutation",
    "orbit",
    "orbit_t",
    "conjugate_category",
    "bar_category",
    "verify_galois_identities",
]


@dataclass(frozen=True)
class GaloisPermutation:
    """The permutation of objects induced by zeta -> zeta^k."""

    k: int
    mapping: tuple[int, ...]
    labels: tuple[str, ...]

    def index(self, i: int) -> int:
        return self.mapping[i]

    def __call__(self, label: str) -> str:
        return self.labels[self.mapping[self.labels.index(label)]]

    def compose(self, other: "GaloisPermutation") -> tuple[int, ...]:
        """Mapping of self applied after other."""
        return tuple(self.mapping[other.mapping[i]] for i in range(len(self.mapping)))


@lru_cache(maxsize=None)
def working_conductor(md: ModularDatum) -> int:
    """Conductor of a cyclotomic field containing the S entries and every
    normalized T entry: lcm of 12 * (T order) and the stored S conductors."""
    N = 12 * fs_exponent(md)
    for row in md.S:
        for e in row:
            N = math.lcm(N, e.n)
    return N


@lru_cache(maxsize=None)
def _ratio_columns(md: ModularDatum) -> tuple[tuple[Cyc, ...], ...]:
    r = md.rank
    S = md.S
    cols = []
    for y in range(r):
        if S[0][y].is_zero():
            raise NotModularError(
                f"S[0][{md.labels[y]}] is zero; ratio columns undefined"
            )
        inv = S[0][y].inverse()
        cols.append(tuple(S[x][y] * inv for x in range(r)))
    return tuple(cols)


@lru_cache(maxsize=None)
def galois_permutation(md: ModularDatum, k: int) -> GaloisPermutation:
    """The permutation sigma-hat with
    sigma_k(S[x][y] / S[0][y]) = S[x][sigma-hat(y)] / S[0][sigma-hat(y)].

    Raises NotModularError when some conjugated column matches no object
    and DegenerateDataError when it matches more than one.
    """
    N = working_conductor(md)
    k %= N
    if math.gcd(k, N) != 1:
        raise ValueError(f"{k} is not a unit mod {N}")
    r = md.rank
    cols = _ratio_columns(md)
    mapping = []
    for y in range(r):
        target = tuple(e.galois(k) for e in cols[y])
        hits = [
            y2
            for y2 in range(r)
            if all(cols[y2][x] == target[x] for x in range(r))
        ]
        if not hits:
            raise NotModularError(
                f"no object realizes the conjugate of column {md.labels[y]} under k = {k}"
            )
        if len(hits) > 1:
            raise DegenerateDataError(
                f"columns {[md.labels[h] for h in hits]} coincide; Galois matching is ambiguous"
            )
        mapping.append(hits[0])
    if sorted(mapping) != list(range(r)):
        raise NotModularError(f"Galois matching for k = {k} is not a permutation")
    return GaloisPermutation(k, tuple(mapping), md.labels)


def orbit(md: ModularDatum, label: str) -> set[str]:
    """Labels reachable from the given object under all sigma-hat."""
    x = md.index(label)
    N = working_conductor(md)
    out = set()
    for k in units_mod(N):
        out.add(md.labels[galois_permutation(md, k).index(x)])
    return out


def orbit_t(md: ModularDatum, label: str) -> tuple[set[str], Cyc]:
    """The suborbit of the object under the squared units (the image of
    sigma-hat restricted to k^2) and the sum of squared dimensions over it."""
    x = md.index(label)
    N = working_conductor(md)
    idxs = set()
    for k in units_mod(N):
        idxs.add(galois_permutation(md, (k * k) % N).index(x))
    d = dims(md)
    total = rational(0)
    for i in idxs:
        total = total + d[i] * d[i]
    return {md.labels[i] for i in idxs}, total


def conjugate_category(md: ModularDatum, k: int) -> ModularDatum:
    """Entrywise Galois conjugate: sigma_k on S and exponent scaling on T.
    The result is verified; failure means the input was not modular."""
    N = working_conductor(md)
    k %= N
    if math.gcd(k, N) != 1:
        raise ValueError(f"{k} is not a unit mod {N}")
    if k == 1:
        return md
    S = [[e.galois(k) for e in row] for row in md.S]
    T = [t**k for t in md.T]
    name = f"{md.name or 'datum'}^s{k}"
    out = ModularDatum(md.labels, S, T, name=name, _trusted=True)
    rep = verify(out)
    if not rep.ok:
        raise NotModularError(
            f"Galois conjugate k = {k} fails verification: "
            + "; ".join(c.name for c in rep.failures)
        )
    return out


def bar_category(md: ModularDatum) -> ModularDatum:
    """Product of one conjugate per embedding of Q(global dim): the result
    has global dimension equal to the integer norm of the original and the
    same T order."""
    D = global_dim(md)
    N = working_conductor(md)
    reps = []
    seen: list[Cyc] = []
    for k in units_mod(N):
        v = D.galois(k)
        if not any(v == w for w in seen):
            seen.append(v)
            reps.append(k)
    out = None
    for k in reps:
        c = conjugate_category(md, k)
        out = c if out is None else deligne_product(out, c)
    if len(reps) > 1:
        out.name = f"bar({md.name or 'datum'})"
    if global_dim(out) != ndim(md):
        raise NotModularError("product over conjugates does not have norm dimension")
    if fs_exponent(out) != fs_exponent(md):
        raise NotModularError("product over conjugates changed the T order")
    return out


def verify_galois_identities(
    md: ModularDatum, generators_only: bool = False
) -> VerificationReport:
    """Check the Galois identities: existence of the permutation,
    multiplicativity on the generators, the dimension identity

        dim(sigma-hat X)^2 = (D / sigma(D)) * sigma(dim(X)^2)

    and the squared action on the normalized T:

        sigma^2(t[X]) = t[sigma-hat X].

    By default every unit of the working conductor is swept.  With
    generators_only the pointwise identities run on the unit group
    generators alone; since each identity for a product of units follows
    from the identities for the factors, this is a sound spot check.
    """
    checks: list[Check] = []
    N = working_conductor(md)
    units = (
        unit_group_generators(N) or (1,) if generators_only else units_mod(N)
    )
    r = md.rank

    missing = None
    for k in units:
        try:
            galois_permutation(md, k)
        except (NotModularError, DegenerateDataError) as e:
            missing = f"k = {k}: {e}"
            break
    checks.append(Check("permutation-exists", missing is None, missing or ""))
    if missing is not None:
        return VerificationReport(tuple(checks))

    gens = unit_group_generators(N) or (1,)
    hom_bad = None
    for g1 in gens:
        p1 = galois_permutation(md, g1)
        for g2 in gens:
            p2 = galois_permutation(md, g2)
            combined = galois_permutation(md, (g1 * g2) % N)
            if combined.mapping != p1.compose(p2):
                hom_bad = f"sigma-hat({g1}*{g2}) differs from the composite"
                break
        if hom_bad:
            break
    checks.append(Check("homomorphism", hom_bad is None, hom_bad or ""))

    D = global_dim(md)
    d = dims(md)
    dim_bad = None
    for k in units:
        perm = galois_permutation(md, k)
        factor = D * D.galois(k).inverse()
        for x in range(r):
            lhs = d[perm.index(x)] * d[perm.index(x)]
            rhs = factor * (d[x] * d[x]).galois(k)
            if lhs != rhs:
                dim_bad = f"dimension identity fails at k = {k}, X = {md.labels[x]}"
                break
        if dim_bad:
            break
    checks.append(Check("dim-identity", dim_bad is None, dim_bad or ""))

    try:
        gamma, _ = normalized_t_order(md)
        # the matrix satisfying the squared-Galois law is T * gamma, the
        # entrywise inverse of theta / gamma; T * gamma^(-1) is its complex
        # conjugate and obeys the law only on self-conjugate data
        t_entries = [(t * gamma).to_cyc() for t in md.T]
        t_bad = None
        for k in units:
            perm = galois_permutation(md, k)
            k2 = (k * k) % N
            for x in range(r):
                if t_entries[x].galois(k2) != t_entries[perm.index(x)]:
                    t_bad = f"t identity fails at k = {k}, X = {md.labels[x]}"
                    break
            if t_bad:
                break
        checks.append(Check("t-squared-identity", t_bad is None, t_bad or ""))
    except NotModularError as e:
        checks.append(Check("t-squared-identity", False, str(e)))

    return VerificationReport(tuple(checks))
