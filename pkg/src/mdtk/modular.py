"""Modular data: an exact S matrix and T matrix with the invariants and
consistency checks that make sense for them.

A ModularDatum is a lightweight container validated structurally on
construction.  The mathematically expensive consistency conditions live in
`verify`, which returns a report of named checks instead of raising, so a
broken datum can be inspected.  Everything downstream (fusion rules, Gauss
sums, the normalized T matrix) raises NotModularError when the data fails
the property it depends on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cyclo import Cyc, RootOfUnity, rational


__all__ = [
    "MdtkError",
    "DataFormatError",
    "NotModularError",
    "DegenerateDataError",
    "ModularDatum",
    "Check",
    "VerificationReport",
    "FusionTensor",
    "dims",
    "global_dim",
    "fs_exponent",
    "verlinde_fusion",
    "verify",
    "gauss_sum",
    "ndim",
    "anomaly",
    "normalized_t_order",
    "fpdim_pseudounitary",
    "invertibles",
    "subcategory_generated",
    "centralizes",
    "symmetric_center",
    "data_equal",
]


class MdtkError(Exception):
    """Base class for all library errors."""


class DataFormatError(MdtkError):
    """Malformed or structurally invalid input data."""


class NotModularError(MdtkError):
    """The data violates a property required of modular data."""


class DegenerateDataError(MdtkError):
    """An operation needed distinct columns or objects and found a collision."""


class ModularDatum:
    """Exact modular data: labels, a symmetric S matrix over cyclotomic
    numbers with S[0][0] = 1, and a diagonal T of roots of unity with
    T[0] = 1.  Row and column 0 always refer to the unit object.

    Construction enforces shape and normalization only; run `verify` for
    the full battery.  Instances are compared and cached by identity.
    """

    def __init__(self, labels, S, T, name=None, _trusted=False):
        labels = tuple(str(x) for x in labels)
        r = len(labels)
        if r < 1:
            raise DataFormatError("empty object list")
        if len(set(labels)) != r:
            raise DataFormatError("labels must be unique")
        if len(S) != r or any(len(row) != r for row in S):
            raise DataFormatError(f"S must be {r} x {r}")
        if len(T) != r:
            raise DataFormatError(f"T must have length {r}")
        S = tuple(tuple(_as_cyc(e) for e in row) for row in S)
        T = tuple(_as_rou(t) for t in T)
        if S[0][0] != 1:
            raise DataFormatError("unit normalization violated: S[0][0] must be 1")
        if T[0].order != 1:
            raise DataFormatError("unit normalization violated: T[0] must be 1")
        if not _trusted:
            for i in range(r):
                for j in range(i + 1, r):
                    if S[i][j] != S[j][i]:
                        raise DataFormatError(
                            f"S is not symmetric at ({labels[i]}, {labels[j]})"
                        )
        self.labels = labels
        self.S = S
        self.T = T
        self.name = name

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no object labeled {label!r}") from None

    def __repr__(self):
        tag = self.name or "unnamed"
        return f"<ModularDatum {tag} rank {self.rank}>"


def _as_cyc(e) -> Cyc:
    if isinstance(e, Cyc):
        return e
    if isinstance(e, (int, Fraction)):
        return rational(e)
    raise DataFormatError(f"S entries must be field elements, got {type(e).__name__}")


def _as_rou(t) -> RootOfUnity:
    if isinstance(t, RootOfUnity):
        return t
    if t == 1:
        return RootOfUnity.one()
    raise DataFormatError(f"T entries must be roots of unity, got {type(t).__name__}")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""

    def __str__(self):
        mark = "ok" if self.passed else "FAIL"
        tail = f"  ({self.witness})" if self.witness and not self.passed else ""
        return f"[{mark:4}] {self.name}{tail}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


# ---------------------------------------------------------------------------
# cached basic invariants


@lru_cache(maxsize=None)
def dims(md: ModularDatum) -> tuple[Cyc, ...]:
    """dim(X) = S[0][X] for each object, read off the unit row."""
    return md.S[0]


@lru_cache(maxsize=None)
def global_dim(md: ModularDatum) -> Cyc:
    """Sum of the squared object dimensions; totally real and nonzero for
    sane data."""
    d = rational(0)
    for v in dims(md):
        d = d + v * v
    if d.is_zero():
        raise NotModularError("global dimension is zero")
    if not d.is_totally_real():
        raise NotModularError("global dimension is not totally real")
    return d


@lru_cache(maxsize=None)
def fs_exponent(md: ModularDatum) -> int:
    """lcm of the orders of the T entries."""
    return math.lcm(*(t.order for t in md.T))


def gauss_sum(md: ModularDatum, sign: int = 1) -> Cyc:
    """sum_X dim(X)^2 theta_X^(sign) with theta_X the inverse of T[X]."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    d = dims(md)
    acc = rational(0)
    for i in range(md.rank):
        theta_pow = md.T[i] ** (-sign)
        acc = acc + d[i] * d[i] * theta_pow.to_cyc()
    return acc


@lru_cache(maxsize=None)
def ndim(md: ModularDatum) -> int:
    """Product of the Galois conjugates of the global dimension (its field
    norm); a positive rational integer for modular data."""
    _, nm = global_dim(md).trace_norm()
    if nm.denominator != 1 or nm <= 0:
        raise NotModularError(f"norm of the global dimension is {nm}, not a positive integer")
    return int(nm)


@lru_cache(maxsize=None)
def anomaly(md: ModularDatum) -> RootOfUnity:
    """The root of unity gauss_sum(+1)^2 / global_dim."""
    x = gauss_sum(md, 1)
    x = x * x / global_dim(md)
    order = x.is_root_of_unity()
    if order is None:
        raise NotModularError("squared Gauss sum over the global dimension is not a root of unity")
    for k in range(order):
        if math.gcd(k, order) == 1 or order == 1:
            if x == RootOfUnity.make(order, k).to_cyc():
                return RootOfUnity.make(order, k)
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# fusion rules


@dataclass(frozen=True)
class FusionTensor:
    """Nonnegative integer fusion multiplicities N[x][y][z] with unit object
    at index 0.  Validated for unit behaviour, commutativity and rigidity
    (every object has exactly one dual, and duality is an involution)."""

    labels: tuple[str, ...]
    N: tuple[tuple[tuple[int, ...], ...], ...]
    duals: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        r = len(self.labels)
        N = self.N
        for x in range(r):
            for z in range(r):
                if N[0][x][z] != (1 if x == z else 0):
                    raise DataFormatError("fusion with the unit must be the identity")
        for x in range(r):
            for y in range(x + 1, r):
                if N[x][y] != N[y][x]:
                    raise DataFormatError(
                        f"fusion is not commutative at ({self.labels[x]}, {self.labels[y]})"
                    )
        duals = []
        for x in range(r):
            ds = [y for y in range(r) if N[x][y][0] != 0]
            if len(ds) != 1 or N[x][ds[0]][0] != 1:
                raise DataFormatError(f"object {self.labels[x]} has no unique dual")
            duals.append(ds[0])
        if any(duals[duals[x]] != x for x in range(r)):
            raise DataFormatError("duality is not an involution")
        object.__setattr__(self, "duals", tuple(duals))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def dual(self, x: int) -> int:
        return self.duals[x]

    def matrix(self, x: int) -> tuple[tuple[int, ...], ...]:
        """Left multiplication matrix (N_x)_{zy} = N[x][y][z]."""
        r = self.rank
        return tuple(tuple(self.N[x][y][z] for y in range(r)) for z in range(r))


@lru_cache(maxsize=None)
def verlinde_fusion(md: ModularDatum) -> FusionTensor:
    """Fusion multiplicities from the S matrix:

        N[x][y][z] = sum_r S[x][r] S[y][r] conj(S[z][r]) / (D * S[0][r])

    with D the global dimension.  Raises NotModularError if any value is
    not a nonnegative integer (or a column of S is zero at the unit row).
    """
    r = md.rank
    S = md.S
    D = global_dim(md)
    inv_cols = []
    for c in range(r):
        if S[0][c].is_zero():
            raise NotModularError(f"S[0][{md.labels[c]}] is zero; Verlinde weights undefined")
        inv_cols.append((D * S[0][c]).inverse())
    cbar = [[S[z][c].conj() * inv_cols[c] for c in range(r)] for z in range(r)]
    N = []
    for x in range(r):
        plane = []
        for y in range(x + 1):
            row = []
            pxy = [S[x][c] * S[y][c] for c in range(r)]
            for z in range(r):
                acc = rational(0)
                for c in range(r):
                    acc = acc + pxy[c] * cbar[z][c]
                if not acc.is_rational():
                    raise NotModularError(
                        f"fusion multiplicity N({md.labels[x]},{md.labels[y]};{md.labels[z]}) = {acc} is irrational"
                    )
                v = acc.as_fraction()
                if v.denominator != 1 or v < 0:
                    raise NotModularError(
                        f"fusion multiplicity N({md.labels[x]},{md.labels[y]};{md.labels[z]}) = {v} is not a nonnegative integer"
                    )
                row.append(int(v))
            plane.append(tuple(row))
        N.append(plane)
    full = tuple(
        tuple(N[max(x, y)][min(x, y)] for y in range(r)) for x in range(r)
    )
    return FusionTensor(md.labels, full)


# ---------------------------------------------------------------------------
# verification


def verify(md: ModularDatum) -> VerificationReport:
    """Run the consistency battery and report named checks.

    Checks: S symmetry, the unitarity relation S Sbar = D I, charge
    conjugation (S^2 / D is an involutive permutation), Verlinde
    integrality, duality against the fusion rules, the balancing relation,
    the modulus of the Gauss sum, and finiteness of the T orders.
    """
    checks: list[Check] = []
    r = md.rank
    S = md.S
    labels = md.labels

    sym_bad = next(
        (
            (i, j)
            for i in range(r)
            for j in range(i + 1, r)
            if S[i][j] != S[j][i]
        ),
        None,
    )
    checks.append(
        Check(
            "s-symmetric",
            sym_bad is None,
            "" if sym_bad is None else f"S[{labels[sym_bad[0]]}][{labels[sym_bad[1]]}] != transpose",
        )
    )

    try:
        D = global_dim(md)
    except NotModularError as e:
        checks.append(Check("s-unitary-scale", False, str(e)))
        return VerificationReport(tuple(checks))

    Sbar = [[S[i][j].conj() for j in range(r)] for i in range(r)]
    unitary_bad = None
    for i in range(r):
        for j in range(r):
            acc = rational(0)
            for k in range(r):
                acc = acc + S[i][k] * Sbar[j][k]
            want = D if i == j else rational(0)
            if acc != want:
                unitary_bad = f"(S Sbar)[{labels[i]}][{labels[j]}] = {acc}"
                break
        if unitary_bad:
            break
    checks.append(Check("s-unitary-scale", unitary_bad is None, unitary_bad or ""))

    # S^2 = D C with C the charge conjugation permutation
    charge = None
    charge_bad = None
    perm = []
    Dinv = D.inverse()
    for i in range(r):
        hit = None
        ok = True
        for j in range(r):
            acc = rational(0)
            for k in range(r):
                acc = acc + S[i][k] * S[k][j]
            v = acc * Dinv
            if v == 1:
                if hit is not None:
                    ok = False
                    break
                hit = j
            elif not v.is_zero():
                ok = False
                break
        if not ok or hit is None:
            charge_bad = f"row {labels[i]} of S^2/D is not a permutation row"
            break
        perm.append(hit)
    if charge_bad is None:
        if sorted(perm) != list(range(r)):
            charge_bad = "S^2/D is not a permutation"
        elif any(perm[perm[i]] != i for i in range(r)):
            charge_bad = "charge conjugation is not an involution"
        elif perm[0] != 0:
            charge_bad = "charge conjugation moves the unit"
        else:
            charge = perm
    checks.append(Check("charge-conjugation", charge_bad is None, charge_bad or ""))

    ft = None
    try:
        ft = verlinde_fusion(md)
        checks.append(Check("verlinde-integrality", True))
    except (NotModularError, DataFormatError) as e:
        checks.append(Check("verlinde-integrality", False, str(e)))

    if ft is not None and charge is not None:
        mismatch = next((x for x in range(r) if ft.dual(x) != charge[x]), None)
        checks.append(
            Check(
                "duality-match",
                mismatch is None,
                "" if mismatch is None else f"fusion dual of {labels[mismatch]} differs from charge conjugation",
            )
        )
    else:
        checks.append(Check("duality-match", False, "prerequisite check failed"))

    if ft is not None:
        # theta_X theta_Y S[X][Y] = sum_Z N[X][Y][Z] dim(Z) theta_Z, the
        # trace of the ribbon axiom on X tensor Y; stating it with the dual
        # of X on the right requires S[X*][Y] on the left, so the undualized
        # form is the one that holds for every datum
        d = dims(md)
        theta = [t.inverse().to_cyc() for t in md.T]
        bal_bad = None
        for x in range(r):
            for y in range(x, r):
                lhs = theta[x] * theta[y] * S[x][y]
                rhs = rational(0)
                for z in range(r):
                    m = ft.N[x][y][z]
                    if m:
                        rhs = rhs + m * d[z] * theta[z]
                if lhs != rhs:
                    bal_bad = f"balancing fails at ({labels[x]}, {labels[y]})"
                    break
            if bal_bad:
                break
        checks.append(Check("balancing", bal_bad is None, bal_bad or ""))
    else:
        checks.append(Check("balancing", False, "fusion rules unavailable"))

    tau = gauss_sum(md, 1)
    gm_ok = tau * tau.conj() == D
    checks.append(
        Check("gauss-sum-modulus", gm_ok, "" if gm_ok else "tau+ conj(tau+) != global dimension")
    )

    # T entries are RootOfUnity instances, so finite order holds by type
    checks.append(Check("t-finite-order", True))

    return VerificationReport(tuple(checks))


# ---------------------------------------------------------------------------
# the normalized T matrix


def _certify_equal_with_sqrt(g3: Cyc, tau: Cyc, dim: Cyc) -> bool:
    """Decide g3 * sqrt(dim) == tau given (g3 * sqrt(dim))^2 == tau^2.

    The difference is either 0 or -2 tau, and |2 tau| = 2 sqrt(dim) >= 2,
    so interval evaluation at growing precision always separates the two.
    """
    import mpmath

    prec = 64
    while prec <= 1 << 16:
        with mpmath.workprec(prec + 32):
            ivd = dim.embed(prec)
            lo = ivd.re - ivd.radius
            hi = ivd.re + ivd.radius
            if lo > 0:
                s_lo, s_hi = mpmath.sqrt(lo), mpmath.sqrt(hi)
                smid = (s_lo + s_hi) / 2
                srad = (s_hi - s_lo) / 2 + mpmath.mpf(2) ** (-prec)
                ivg = g3.embed(prec)
                ivt = tau.embed(prec)
                gabs = mpmath.hypot(ivg.re, ivg.im) + ivg.radius
                prad = gabs * srad + smid * ivg.radius
                m = mpmath.hypot(ivg.re * smid - ivt.re, ivg.im * smid - ivt.im)
                rad = prad + ivt.radius + mpmath.mpf(2) ** (-prec)
                if m > rad:
                    return False
                if m + rad < s_lo:
                    return True
        prec *= 2
    raise ArithmeticError("could not certify the Gauss sum sign")


@lru_cache(maxsize=None)
def normalized_t_order(md: ModularDatum) -> tuple[RootOfUnity, int]:
    """A distinguished scalar gamma with gamma^3 = tau+ / sqrt(D), and the
    order n_t of the rescaled matrix t = T * gamma^(-1).

    gamma is found among the six sixth roots of the anomaly: each candidate
    g satisfies g^6 = anomaly, hence (g^3)^2 D = tau+^2, and exactly three
    satisfy g^3 sqrt(D) = tau+ on the nose; of those the one with smallest
    (order, exponent) is returned.  The order n_t is checked to be a
    multiple of the T order and a divisor of 12 times it.
    """
    xi = anomaly(md)
    tau = gauss_sum(md, 1)
    D = global_dim(md)
    M = xi.order
    winners = []
    for j in range(6):
        g = RootOfUnity.make(6 * M, xi.exponent + j * M)
        g3 = (g**3).to_cyc()
        if _certify_equal_with_sqrt(g3, tau, D):
            winners.append(g)
    if not winners:
        raise NotModularError("no sixth root of the anomaly matches the Gauss sum")
    gamma = min(winners, key=lambda g: (g.order, g.exponent))
    ginv = gamma.inverse()
    n_t = math.lcm(*((t * ginv).order for t in md.T))
    fs = fs_exponent(md)
    if n_t % fs != 0 or (12 * fs) % n_t != 0:
        raise NotModularError(
            f"normalized T order {n_t} is not between the T order {fs} and 12 times it"
        )
    return gamma, n_t


# ---------------------------------------------------------------------------
# Frobenius-Perron dimensions (the one floating point computation)


def fpdim_pseudounitary(md: ModularDatum) -> tuple[float, bool]:
    """Frobenius-Perron dimension of the whole datum (sum over objects of
    FPdim(X)^2) and whether it matches the global dimension numerically.

    FPdim(X)^2 is the top eigenvalue of N_x N_x^T, computed by power
    iteration on that symmetric nonnegative matrix.  Iterating N_x alone
    can oscillate when the fusion graph is bipartite; the symmetrized
    product always converges.  Eigenvalues are resolved to 1e-12 and the
    pseudounitarity decision uses a 1e-9 window.
    """
    import numpy as np

    ft = verlinde_fusion(md)
    r = md.rank
    total = 0.0
    for x in range(r):
        M = np.array(ft.matrix(x), dtype=float)
        A = M @ M.T
        v = np.full(r, 1.0 / math.sqrt(r))
        lam_prev = -1.0
        for _ in range(100000):
            w = A @ v
            nrm = float(np.linalg.norm(w))
            if nrm == 0.0:
                raise NotModularError(f"fusion matrix of {md.labels[x]} is nilpotent")
            v = w / nrm
            lam = float(v @ (A @ v))
            if abs(lam - lam_prev) <= 1e-12 * max(1.0, abs(lam)):
                break
            lam_prev = lam
        else:
            raise ArithmeticError("power iteration did not converge")
        total += lam
    iv = global_dim(md).embed(64)
    return total, abs(total - float(iv.re)) < 1e-9


# ---------------------------------------------------------------------------
# structure carried by the fusion rules


def invertibles(ft: FusionTensor) -> set[str]:
    """Labels whose fusion matrix is a permutation (dimension one objects)."""
    out = set()
    r = ft.rank
    for x in range(r):
        if all(sum(ft.N[x][y]) == 1 for y in range(r)):
            out.add(ft.labels[x])
    return out


def subcategory_generated(ft: FusionTensor, seed) -> set[str]:
    """Labels of the smallest fusion subcategory containing the seed set:
    close under fusion products and duals, always including the unit."""
    idx = {lab: i for i, lab in enumerate(ft.labels)}
    current = {0}
    for lab in seed:
        if lab not in idx:
            raise KeyError(f"no object labeled {lab!r}")
        current.add(idx[lab])
    changed = True
    while changed:
        changed = False
        for x in list(current):
            d = ft.dual(x)
            if d not in current:
                current.add(d)
                changed = True
        for x in list(current):
            for y in list(current):
                for z in range(ft.rank):
                    if ft.N[x][y][z] and z not in current:
                        current.add(z)
                        changed = True
    return {ft.labels[i] for i in current}


def centralizes(md: ModularDatum, x: str, y: str) -> bool:
    """Whether S[x][y] = dim(x) dim(y), the exact transparency condition."""
    i, j = md.index(x), md.index(y)
    d = dims(md)
    return md.S[i][j] == d[i] * d[j]


def symmetric_center(md: ModularDatum) -> set[str]:
    """Labels transparent against every object.  Exactly the unit label for
    data whose S matrix is nondegenerate."""
    out = set()
    for x in md.labels:
        if all(centralizes(md, x, y) for y in md.labels):
            out.add(x)
    return out


def data_equal(a: ModularDatum, b: ModularDatum) -> bool:
    """Entrywise equality of labels, S and T (names are ignored)."""
    if a.labels != b.labels or a.T != b.T:
        return False
    return all(
        a.S[i][j] == b.S[i][j] for i in range(a.rank) for j in range(a.rank)
    )
