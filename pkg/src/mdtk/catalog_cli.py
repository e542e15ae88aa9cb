"""Serialization, the builtin catalog, and the command line interface.

Files are JSON with decimal-string rationals, so round trips are exact:

    {"name": ..., "labels": [...],
     "S": [[{"n": conductor, "c": [["num", "den"], ...]}, ...], ...],
     "T": [{"m": order, "k": exponent}, ...]}

The builtin catalog covers the families the library constructs, at every
parameter that yields genuinely different invariants."""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from functools import lru_cache

from .cyclo import Cyc, RootOfUnity
from .modular import (
    DataFormatError,
    MdtkError,
    ModularDatum,
    anomaly,
    data_equal,
    dims,
    fpdim_pseudounitary,
    fs_exponent,
    gauss_sum,
    global_dim,
    invertibles,
    ndim,
    normalized_t_order,
    symmetric_center,
    verify,
    verlinde_fusion,
)
from .construct import (
    MetricGroup,
    deligne_product,
    double_abelian,
    fibonacci,
    ising,
    pointed,
    so5_level9,
)
from .galois import (
    conjugate_category,
    orbit,
    orbit_t,
    verify_galois_identities,
    working_conductor,
)
from .bounds import BoundVerdict, bound_check, lemma_orbit_bound, prime_power

__all__ = [
    "save",
    "load",
    "CatalogEntry",
    "builtin_names",
    "builtin",
    "catalog_entries",
    "main",
]


# ---------------------------------------------------------------------------
# serialization


def to_dict(md: ModularDatum) -> dict:
    return {
        "name": md.name,
        "labels": list(md.labels),
        "S": [[e.to_json() for e in row] for row in md.S],
        "T": [t.to_json() for t in md.T],
    }


def save(md: ModularDatum, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(to_dict(md), fh, indent=1)
        fh.write("\n")


def from_dict(obj: dict) -> ModularDatum:
    if not isinstance(obj, dict):
        raise DataFormatError("top level must be an object")
    for key in ("labels", "S", "T"):
        if key not in obj:
            raise DataFormatError(f"missing required key {key!r}")
    try:
        S = [[Cyc.from_json(e) for e in row] for row in obj["S"]]
        T = [RootOfUnity.from_json(t) for t in obj["T"]]
    except (ValueError, TypeError) as e:
        raise DataFormatError(f"bad matrix entry: {e}") from None
    md = ModularDatum(obj["labels"], S, T, name=obj.get("name"))
    _check_field_membership(md)
    return md


def _check_field_membership(md: ModularDatum) -> None:
    """S entries must lie in the cyclotomic field whose conductor is the
    lcm of the T orders (valid modular data always satisfies this)."""
    N = fs_exponent(md)
    for i, row in enumerate(md.S):
        for j, e in enumerate(row):
            if N % e.n == 0:
                continue
            m = math.lcm(e.n, N)
            for k in range(1 + N, m, N):
                if math.gcd(k, m) == 1 and e.galois(k) != e:
                    raise DataFormatError(
                        f"S[{md.labels[i]}][{md.labels[j]}] does not lie in "
                        f"Q(zeta_{N}), the field of the T entries"
                    )


def load(path: str) -> ModularDatum:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as e:
        raise DataFormatError(f"not valid JSON: {e}") from None
    return from_dict(obj)


# ---------------------------------------------------------------------------
# builtin catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    source: str
    notes: str

    @property
    def datum(self) -> ModularDatum:
        return builtin(self.name)


def _builtin_defs():
    defs = []
    for j in (1, 3, 5, 7, 9, 11, 13, 15):
        for eps, tag in ((1, "p"), (-1, "m")):
            defs.append(
                (
                    f"ising-{j}-{tag}",
                    lambda j=j, eps=eps: ising(j, eps),
                    "rank 3; T order 16; the square root of two object",
                )
            )
    for j in (1, 2, 3, 4):
        defs.append(
            (
                f"fibonacci-{j}",
                lambda j=j: fibonacci(j),
                "rank 2; golden ratio dimensions; T order 5",
            )
        )
    for j in (1, 2, 4, 5, 7, 8):
        defs.append(
            (
                f"so5level9-{j}",
                lambda j=j: so5_level9(j),
                "rank 6 at conductor 9; integer global dimension 9, "
                "irrational object dimensions",
            )
        )
    for n in (3, 5, 7, 9):
        defs.append(
            (
                f"pointed-c{n}",
                lambda n=n: pointed(MetricGroup.generator_form((n,), (1,))),
                f"pointed on Z/{n} with q(g) = zeta^(g^2)",
            )
        )
    for n in (2, 3):
        defs.append(
            (
                f"double-c{n}",
                lambda n=n: double_abelian((n,)),
                f"hyperbolic double of Z/{n}; trivial anomaly",
            )
        )
    return defs


_DEFS = {name: (fn, notes) for name, fn, notes in _builtin_defs()}


def builtin_names() -> tuple[str, ...]:
    return tuple(_DEFS)


@lru_cache(maxsize=None)
def builtin(name: str) -> ModularDatum:
    if name not in _DEFS:
        raise DataFormatError(f"no builtin named {name!r}")
    return _DEFS[name][0]()


def catalog_entries() -> tuple[CatalogEntry, ...]:
    return tuple(
        CatalogEntry(name=name, source="builtin", notes=notes)
        for name, (fn, notes) in _DEFS.items()
    )


def _resolve(spec: str) -> ModularDatum:
    """A file path, or failing that a builtin name."""
    import os

    if os.path.exists(spec):
        return load(spec)
    if spec in _DEFS:
        return builtin(spec)
    raise DataFormatError(f"{spec!r} is neither a readable file nor a builtin name")


# ---------------------------------------------------------------------------
# catalog health sweep


def _integral(md: ModularDatum) -> bool:
    return all(
        d.is_rational() and d.as_fraction().denominator == 1 for d in dims(md)
    )


def _product_bound(a: ModularDatum, b: ModularDatum) -> BoundVerdict | None:
    """Bound verdict for the tensor product, computed from the factors:
    the T order is the lcm and the global dimension multiplies.  Returns
    None when the product T order is not a prime power."""
    fs = math.lcm(fs_exponent(a), fs_exponent(b))
    p = prime_power(fs)
    if p is None:
        return None
    D = global_dim(a) * global_dim(b)
    _, nm = D.trace_norm()
    nd = int(nm)
    if p == 2:
        holds = fs <= 4 * nd
        tier = next((t for t in (1, 2, 4) if fs == t * nd), None)
    else:
        holds = fs <= nd
        tier = 1 if fs == nd else None
    return BoundVerdict(
        name=f"({a.name})x({b.name})",
        fsexp=fs,
        ndim=nd,
        prime=p,
        bound_holds=holds,
        extremal=tier is not None,
        tier=tier,
    )


def catalog_sweep(out=None) -> bool:
    """Verify every builtin, check the bound, run the orbit bound on the
    integral entries, spot check the Galois identities on unit group
    generators, and re-check the bound on every pairwise tensor product
    with prime power T order.  Returns True when everything is clean."""

    def emit(line: str):
        if out is not None:
            out.write(line + "\n")

    clean = True
    data = [(name, builtin(name)) for name in builtin_names()]
    for name, md in data:
        rep = verify(md)
        if not rep.ok:
            clean = False
            emit(f"[FAIL] {name}: " + "; ".join(c.name for c in rep.failures))
            continue
        verdict = bound_check(md, classify=True)
        if not verdict.bound_holds:
            clean = False
        grep = verify_galois_identities(md, generators_only=True)
        if not grep.ok:
            clean = False
            emit(f"[FAIL] {name} galois: " + "; ".join(c.name for c in grep.failures))
        if _integral(md):
            for label in md.labels:
                lv = lemma_orbit_bound(md, label)
                if lv.applicable and not lv.holds:
                    clean = False
                    emit(f"[FAIL] {name} orbit bound at {label}")
        emit(str(verdict))
    pairs = 0
    extremal_pairs = 0
    product_violations = 0
    for i, (na, a) in enumerate(data):
        for nb, b in data[i:]:
            v = _product_bound(a, b)
            if v is None:
                continue
            pairs += 1
            if v.extremal:
                extremal_pairs += 1
            if not v.bound_holds:
                clean = False
                product_violations += 1
                emit(f"[FAIL] product {v.name}: FSexp {v.fsexp} > cap")
    emit(
        f"products with prime power T order: {pairs} checked, "
        f"{extremal_pairs} extremal, {product_violations} violations"
    )
    return clean


# ---------------------------------------------------------------------------
# command line


def _float_str(e: Cyc) -> str:
    iv = e.embed(64)
    re, im = float(iv.re), float(iv.im)
    if abs(im) < 1e-15:
        return f"{re:.10g}"
    return f"{re:.10g}{im:+.10g}i"


def _report_dict(md: ModularDatum) -> dict:
    d = dims(md)
    D = global_dim(md)
    gamma, n_t = normalized_t_order(md)
    xi = anomaly(md)
    fp, pu = fpdim_pseudounitary(md)
    ft = verlinde_fusion(md)
    return {
        "name": md.name,
        "rank": md.rank,
        "labels": list(md.labels),
        "dims": [str(v) for v in d],
        "dims_float": [_float_str(v) for v in d],
        "global_dim": str(D),
        "global_dim_float": _float_str(D),
        "ndim": ndim(md),
        "fs_exponent": fs_exponent(md),
        "normalized_t_order": n_t,
        "gamma": str(gamma),
        "anomaly": str(xi),
        "anomaly_order": xi.order,
        "gauss_sum_plus": str(gauss_sum(md, 1)),
        "gauss_sum_minus": str(gauss_sum(md, -1)),
        "fpdim": fp,
        "pseudounitary": pu,
        "invertibles": sorted(invertibles(ft)),
        "symmetric_center": sorted(symmetric_center(md)),
    }


def _print_report(rep: dict, out):
    out.write(f"name:            {rep['name']}\n")
    out.write(f"rank:            {rep['rank']}\n")
    for lab, ds, df in zip(rep["labels"], rep["dims"], rep["dims_float"]):
        out.write(f"  dim({lab}) = {ds}  ~ {df}\n")
    out.write(f"global dim:      {rep['global_dim']}  ~ {rep['global_dim_float']}\n")
    out.write(f"Ndim (norm):     {rep['ndim']}\n")
    out.write(f"FSexp:           {rep['fs_exponent']}\n")
    out.write(f"normalized T:    order {rep['normalized_t_order']}, gamma = {rep['gamma']}\n")
    out.write(f"anomaly:         {rep['anomaly']} (order {rep['anomaly_order']})\n")
    out.write(f"gauss sums:      {rep['gauss_sum_plus']} / {rep['gauss_sum_minus']}\n")
    out.write(f"FPdim:           {rep['fpdim']:.12g} (pseudounitary: {rep['pseudounitary']})\n")
    out.write(f"invertibles:     {', '.join(rep['invertibles'])}\n")
    out.write(f"symmetric center: {', '.join(rep['symmetric_center'])}\n")


def _emit_datum(md: ModularDatum, path: str | None, out) -> None:
    if path:
        save(md, path)
    else:
        json.dump(to_dict(md), out, indent=1)
        out.write("\n")


def _cmd_construct(args, out) -> int:
    try:
        if args.family == "pointed":
            orders = tuple(args.orders)
            exps = tuple(args.exps) if args.exps else (1,) * len(orders)
            md = pointed(MetricGroup.generator_form(orders, exps))
        elif args.family == "ising":
            md = ising(args.j, args.eps)
        elif args.family == "fibonacci":
            md = fibonacci(args.j)
        elif args.family == "so5level9":
            md = so5_level9(args.j)
        else:
            md = double_abelian(tuple(args.orders))
    except ValueError as e:
        raise DataFormatError(str(e)) from None
    _emit_datum(md, args.output, out)
    return 0


def _cmd_verify(args, out) -> int:
    md = _resolve(args.datum)
    rep = verify(md)
    if args.json:
        json.dump(
            {
                "name": md.name,
                "ok": rep.ok,
                "checks": [
                    {"name": c.name, "passed": c.passed, "witness": c.witness}
                    for c in rep.checks
                ],
            },
            out,
        )
        out.write("\n")
    else:
        out.write(str(rep) + "\n")
    return 0 if rep.ok else 1


def _cmd_report(args, out) -> int:
    md = _resolve(args.datum)
    rep = _report_dict(md)
    if args.json:
        json.dump(rep, out)
        out.write("\n")
    else:
        _print_report(rep, out)
    return 0


def _cmd_fusion(args, out) -> int:
    md = _resolve(args.datum)
    ft = verlinde_fusion(md)
    r = ft.rank
    if args.json:
        entries = []
        for x in range(r):
            for y in range(x, r):
                for z in range(r):
                    if ft.N[x][y][z]:
                        entries.append(
                            {
                                "x": ft.labels[x],
                                "y": ft.labels[y],
                                "z": ft.labels[z],
                                "n": ft.N[x][y][z],
                            }
                        )
        json.dump({"name": md.name, "fusion": entries}, out)
        out.write("\n")
    else:
        for x in range(r):
            for y in range(x, r):
                terms = []
                for z in range(r):
                    m = ft.N[x][y][z]
                    if m == 1:
                        terms.append(ft.labels[z])
                    elif m > 1:
                        terms.append(f"{m}*{ft.labels[z]}")
                out.write(f"{ft.labels[x]} * {ft.labels[y]} = {' + '.join(terms)}\n")
    return 0


def _cmd_orbits(args, out) -> int:
    md = _resolve(args.datum)
    rows = []
    for lab in md.labels:
        full = sorted(orbit(md, lab))
        sub_labels, sub_sum = orbit_t(md, lab)
        rows.append(
            {
                "label": lab,
                "orbit": full,
                "squared_orbit": sorted(sub_labels),
                "squared_orbit_dim_sum": str(sub_sum),
            }
        )
    if args.json:
        json.dump(
            {"name": md.name, "working_conductor": working_conductor(md), "orbits": rows},
            out,
        )
        out.write("\n")
    else:
        out.write(f"working conductor: {working_conductor(md)}\n")
        for row in rows:
            out.write(
                f"{row['label']}: orbit {{{', '.join(row['orbit'])}}}, "
                f"squared orbit {{{', '.join(row['squared_orbit'])}}} "
                f"(dim^2 sum {row['squared_orbit_dim_sum']})\n"
            )
    return 0


def _cmd_conjugate(args, out) -> int:
    md = _resolve(args.datum)
    try:
        res = conjugate_category(md, args.k)
    except ValueError as e:
        raise DataFormatError(str(e)) from None
    _emit_datum(res, args.output, out)
    return 0


def _cmd_product(args, out) -> int:
    a = _resolve(args.left)
    b = _resolve(args.right)
    _emit_datum(deligne_product(a, b), args.output, out)
    return 0


def _cmd_bound_check(args, out) -> int:
    md = _resolve(args.datum)
    v = bound_check(md, classify=args.classify)
    if args.json:
        json.dump(
            {
                "name": v.name,
                "fsexp": v.fsexp,
                "ndim": v.ndim,
                "prime": v.prime,
                "bound_holds": v.bound_holds,
                "extremal": v.extremal,
                "tier": v.tier,
                "extremal_class": v.extremal_class,
            },
            out,
        )
        out.write("\n")
    else:
        out.write(str(v) + "\n")
    return 0 if v.bound_holds else 1


def _cmd_catalog(args, out) -> int:
    if args.all:
        clean = catalog_sweep(out if not args.json else None)
        if args.json:
            json.dump({"ok": clean}, out)
            out.write("\n")
        return 0 if clean else 1
    rows = []
    for entry in catalog_entries():
        md = entry.datum
        rows.append(
            {
                "name": entry.name,
                "rank": md.rank,
                "fs_exponent": fs_exponent(md),
                "ndim": ndim(md),
                "notes": entry.notes,
            }
        )
    if args.json:
        json.dump(rows, out)
        out.write("\n")
    else:
        for row in rows:
            out.write(
                f"{row['name']:16} rank {row['rank']:3}  FSexp {row['fs_exponent']:3}  "
                f"Ndim {row['ndim']:3}  {row['notes']}\n"
            )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mdtk",
        description="Exact computations with modular data: invariants, "
        "Galois orbits, and the prime power bound on the T order.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a datum from a named family")
    cs = c.add_subparsers(dest="family", required=True)
    cp = cs.add_parser("pointed", help="pointed datum from a quadratic form")
    cp.add_argument("--orders", type=int, nargs="+", required=True)
    cp.add_argument("--exps", type=int, nargs="+", default=None)
    ci = cs.add_parser("ising", help="rank 3 datum at conductor 16")
    ci.add_argument("--j", type=int, default=1)
    ci.add_argument("--eps", type=int, default=1, choices=(1, -1))
    cf = cs.add_parser("fibonacci", help="rank 2 golden ratio datum")
    cf.add_argument("--j", type=int, default=1)
    cso = cs.add_parser("so5level9", help="rank 6 datum at conductor 9")
    cso.add_argument("--j", type=int, default=1)
    cd = cs.add_parser("double-abelian", help="hyperbolic double of an abelian group")
    cd.add_argument("--orders", type=int, nargs="+", required=True)
    for sp in (cp, ci, cf, cso, cd):
        sp.add_argument("-o", "--output", default=None)

    v = sub.add_parser("verify", help="run the consistency battery")
    v.add_argument("datum")
    v.add_argument("--json", action="store_true")

    r = sub.add_parser("report", help="print the invariants of a datum")
    r.add_argument("datum")
    r.add_argument("--json", action="store_true")

    f = sub.add_parser("fusion", help="print the fusion rules")
    f.add_argument("datum")
    f.add_argument("--json", action="store_true")

    o = sub.add_parser("orbits", help="Galois orbits of the objects")
    o.add_argument("datum")
    o.add_argument("--json", action="store_true")

    cj = sub.add_parser("conjugate", help="apply a Galois automorphism")
    cj.add_argument("datum")
    cj.add_argument("--k", type=int, required=True)
    cj.add_argument("-o", "--output", default=None)

    pr = sub.add_parser("product", help="tensor product of two data")
    pr.add_argument("left")
    pr.add_argument("right")
    pr.add_argument("-o", "--output", default=None)

    b = sub.add_parser("bound-check", help="check the prime power T order bound")
    b.add_argument("datum")
    b.add_argument("--json", action="store_true")
    b.add_argument("--classify", action="store_true")

    cat = sub.add_parser("catalog", help="list builtins; --all runs the full sweep")
    cat.add_argument("--all", action="store_true")
    cat.add_argument("--json", action="store_true")

    return p


_COMMANDS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "report": _cmd_report,
    "fusion": _cmd_fusion,
    "orbits": _cmd_orbits,
    "conjugate": _cmd_conjugate,
    "product": _cmd_product,
    "bound-check": _cmd_bound_check,
    "catalog": _cmd_catalog,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except MdtkError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
