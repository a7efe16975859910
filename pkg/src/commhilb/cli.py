"""Command-line front end: ``commhilb <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from commhilb import __version__, checks, molien
from commhilb.cartan import group_preset
from commhilb.series import UniPoly, q_bound
from commhilb.weylgen import (FORMAT_VERSION, CensusError, EnumerationError, enumerate_census,
                              read_census, write_census)

log = logging.getLogger("commhilb")

SCHEMA_VERSION = 1
CACHE_ENV = "COMMHILB_CACHE"
# E8 (696,729,600 elements) must be supplied as a census file
ENUMERATION_CEILING = 10 ** 7


def cache_dir():
    return Path(os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "commhilb")


def _spec(args):
    return group_preset(args.group, getattr(args, "rank", None))


def load_census(spec, census_path=None, use_cache=True):
    """Census from ``census_path``, else the cache, else a fresh enumeration."""
    if census_path:
        return read_census(census_path, spec)
    path = cache_dir() / f"{spec.name}.v{FORMAT_VERSION}.json"
    if use_cache and path.exists():
        try:
            return read_census(path, spec)
        except (CensusError, KeyError, ValueError) as exc:
            log.warning("ignoring invalid cached census %s: %s", path, exc)
    if spec.expected_order > ENUMERATION_CEILING:
        raise EnumerationError(f"{spec.name} has {spec.expected_order} elements; enumeration "
                               "is out of scope, supply --census <path>")
    census = enumerate_census(spec)
    if use_cache:
        try:
            write_census(census, path, spec)
        except OSError as exc:
            log.warning("could not write census cache %s: %s", path, exc)
    return census


def _emit(args, text, doc):
    if getattr(args, "format", "text") == "json":
        doc = {"schema_version": SCHEMA_VERSION, **doc}
        print(json.dumps(doc, indent=1))
    else:
        print(text)


def cmd_census(args):
    spec = _spec(args)
    census = enumerate_census(spec, args.limit)
    write_census(census, args.out, spec)
    print(f"{spec.name}: {census.total} elements, {len(census.entries)} characteristic "
          f"polynomials -> {args.out}")
    return 0


def _caps_from(args):
    caps = (args.qmax, args.smax, args.tmax)
    if min(caps) < 0:
        raise ValueError(f"caps must be non-negative, got {caps}")
    return caps


def cmd_hilb(args):
    spec = _spec(args)
    caps = _caps_from(args)
    census = load_census(spec, args.census, not args.no_cache)
    F = molien.trigraded_hilb(census, spec.degrees, caps)
    lines = [f"# {spec.name} caps (q,s,t) = {caps}; q-exact if qmax >= {q_bound(spec.degrees)}"]
    for m in range(caps[2] + 1):
        lines.append(f"t^{m}: {F.t_slice(m).render()}")
    _emit(args, "\n".join(lines),
          {"group": spec.name, "caps": list(caps), "coefficients": F.to_records()})
    return 0


def _series_for_betti(spec, census, dmax, tmax):
    qb = q_bound(spec.degrees)
    caps = (min(max(dmax - 1, 0), qb), dmax, tmax)
    return molien.trigraded_hilb(census, spec.degrees, caps), qb


def cmd_betti(args):
    spec = _spec(args)
    census = load_census(spec, args.census, not args.no_cache)
    F, qb = _series_for_betti(spec, census, args.dmax, args.m)
    table = molien.hom_betti(F, args.m, args.dmax, spec.name, q_degree=qb)
    row = table.row(args.m)
    text = "\n".join(f"d={d}: {r}" for d, r in enumerate(row))
    _emit(args, f"# reduced Betti numbers of Hom(Z^{args.m}, {spec.name})\n{text}",
          {"group": spec.name, "m": args.m, "ranks": row})
    return 0


def cmd_comm_betti(args):
    spec = _spec(args)
    census = load_census(spec, args.census, not args.no_cache)
    F, qb = _series_for_betti(spec, census, args.dmax, args.dmax)
    b = molien.comm_betti(F, args.dmax, q_degree=qb)
    text = "\n".join(f"d={d}: {r}" for d, r in enumerate(b))
    _emit(args, f"# Betti numbers of Comm({spec.name})_1\n{text}",
          {"group": spec.name, "betti": b})
    return 0


def cmd_ungraded(args):
    spec = _spec(args)
    p = molien.ungraded_comm_hilb(spec.rank, args.tmax)
    coeffs = [int(p[k]) for k in range(args.tmax + 1)]
    _emit(args, f"# 1/(2-(1+t)^{spec.rank}) for {spec.name}\n{p.render('t')}",
          {"group": spec.name, "rank": spec.rank, "coefficients": coeffs})
    return 0


def cmd_james(args):
    hx = UniPoly([int(x) for x in args.poly.split(",")])
    p = molien.james_hilb(hx, args.tmax)
    coeffs = [str(p[k]) for k in range(args.tmax + 1)]
    _emit(args, p.render("t"), {"poincare": [str(c) for c in hx.coeffs], "coefficients": coeffs})
    return 0


def cmd_so3(args):
    n = molien.so3_components(args.n)
    _emit(args, str(n), {"n": args.n, "components": n})
    return 0


def cmd_verify(args):
    spec = _spec(args)
    census = load_census(spec, args.census, not args.no_cache)
    for res in checks.run_checks(spec, census, deep=args.deep):
        status = "PASS" if res.ok else "FAIL"
        line = f"{status} {spec.name}: {res.name}"
        if not res.ok:
            print(f"{line}: {res.detail}")
            return 1
        print(line)
    return 0


def _group_args(p, census=True):
    p.add_argument("--group", required=True, help="preset label, e.g. U2, SU3, Spin7, E6")
    p.add_argument("--rank", type=int, help="numeric parameter for a bare family label")
    if census:
        p.add_argument("--census", help="census file to use instead of enumerating")
        p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")


def build_parser():
    parser = argparse.ArgumentParser(prog="commhilb", description=__doc__)
    parser.add_argument("--version", action="version", version=f"commhilb {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="enumerate a Weyl group and write its census")
    _group_args(p, census=False)
    p.add_argument("--out", required=True)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("hilb", help="trigraded Hilbert-Poincare series")
    _group_args(p)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--smax", type=int, required=True)
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_hilb)

    p = sub.add_parser("betti", help="reduced Betti numbers of Hom(Z^m, G)")
    _group_args(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("comm-betti", help="Betti numbers of Comm(G)_1")
    _group_args(p)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_comm_betti)

    p = sub.add_parser("ungraded", help="ungraded series 1/(2-(1+t)^rank)")
    _group_args(p, census=False)
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_ungraded)

    p = sub.add_parser("james", help="1/(2-P(t)) for a Poincare polynomial P")
    p.add_argument("--poly", required=True, help="ascending coefficients, e.g. 1,0,1 for S^2")
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_james)

    p = sub.add_parser("so3", help="non-identity components of Hom(Z^n, SO(3))")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_so3)

    p = sub.add_parser("verify", help="run the invariant and oracle suite")
    _group_args(p)
    p.add_argument("--deep", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, CensusError, EnumerationError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
