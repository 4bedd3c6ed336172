"""Command-line surface.

Subcommands cover enumeration (fvector, hvector, gcheck, hilbert),
classification (classify), ring reductions (reduce, socle), Lefschetz
searches (wlp), bistellar walks with the g-vector ledger (walk), manifold
h-vector corrections (manifold-g), and fan cohomology (toric).

Exit codes: 0 success, 2 a checked property is violated, 3 input or
precondition error, 4 a randomized search exhausted its budget.

Structured output is one line of canonical JSON (sorted keys, no spaces)
with a schema_version field; identical command line and seed give
byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import errors, homology, toric, wlp
from .complexes import load_complex, format_facets, random_pachner_walk
from .exactla import as_rng, parse_field
from .facering import (
    GradedQuotient,
    hilbert_function,
    hilbert_series,
    random_lsop,
    socle,
)
from .vectors import (
    check_g_conditions,
    f_vector,
    g_vector,
    h_vector,
    pachner_g_delta,
)

SCHEMA_VERSION = 1

_INPUT_ERRORS = (
    errors.ParseError,
    errors.EmptyFace,
    errors.NotAFace,
    errors.VertexCollision,
    errors.NotPure,
    errors.BadIndex,
    errors.InvalidMove,
    errors.NoMoveAvailable,
    errors.DegreeOutOfRange,
    errors.ShapeMismatch,
    errors.LengthMismatch,
    errors.InvalidFan,
    errors.NotLsop,
    errors.NotCohenMacaulay,
    errors.NotGorensteinStar,
    errors.NotBuchsbaum,
    errors.NotAManifold,
    errors.NotConnected,
    errors.NotOrientableManifold,
    errors.HypothesisViolated,
)
_SEARCH_ERRORS = (
    errors.GenericityExhausted,
    errors.SearchExhausted,
    errors.TransferFailed,
)
_PROPERTY_ERRORS = (
    errors.LawViolated,
    errors.SchenzelMismatch,
    errors.FormulaMismatch,
    errors.CertificationFailed,
)


def _vec(v):
    return [int(x) for x in v]


def _fmt_vec(v):
    return ",".join(str(int(x)) for x in v)


def _fmt_mono(mono):
    if not mono:
        return "1"
    out = []
    seen = sorted(set(mono))
    for v in seen:
        e = mono.count(v)
        out.append("x%d" % v if e == 1 else "x%d^%d" % (v, e))
    return "*".join(out)


def _yesno(flag):
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _payload(args, **fields):
    data = {"schema_version": SCHEMA_VERSION, "command": args.command,
            "input": args.path, "seed": getattr(args, "seed", None)}
    data.update(fields)
    return data


# ---- handlers ---------------------------------------------------------------


def cmd_fvector(args):
    c = load_complex(args.path)
    f = f_vector(c)
    data = _payload(args, f=_vec(f), dim=c.dim)
    return data, ["f=%s" % _fmt_vec(f)], 0


def cmd_hvector(args):
    c = load_complex(args.path)
    f, h = f_vector(c), h_vector(c)
    data = _payload(args, f=_vec(f), h=_vec(h), dim=c.dim)
    return data, ["f=%s" % _fmt_vec(f), "h=%s" % _fmt_vec(h)], 0


def cmd_gcheck(args):
    c = load_complex(args.path)
    f, h = f_vector(c), h_vector(c)
    rep = check_g_conditions(h)
    data = _payload(args, f=_vec(f), h=_vec(h), g=_vec(rep.g),
                    symmetric=rep.symmetric, unimodal=rep.unimodal,
                    g_is_m=rep.g_is_m, ok=rep.all_hold)
    lines = [
        "f=%s h=%s g=%s" % (_fmt_vec(f), _fmt_vec(h), _fmt_vec(rep.g)),
        "symmetric (h_i = h_{d-i}): %s" % _yesno(rep.symmetric),
        "unimodal up to middle: %s" % _yesno(rep.unimodal),
        "g is an M-sequence: %s" % _yesno(rep.g_is_m),
        "g-conditions: %s" % ("pass" if rep.all_hold else "FAIL"),
    ]
    return data, lines, 0 if rep.all_hold else 2


def cmd_classify(args):
    c = load_complex(args.path)
    f = parse_field(args.field)
    cl = homology.classify(c, f)
    betti = homology.reduced_betti(c, f)
    data = _payload(
        args, field=f.name, dim=c.dim,
        reduced_betti=_vec(betti.entries),
        connected=cl.connected, homology_manifold=cl.homology_manifold,
        homology_sphere=cl.homology_sphere, cohen_macaulay=cl.cohen_macaulay,
        gorenstein_star=cl.gorenstein_star, buchsbaum=cl.buchsbaum,
        orientable=cl.orientable)
    lines = [
        "field: %s" % f.name,
        "reduced betti (deg -1..%d): %s" % (c.dim, _fmt_vec(betti.entries)),
        "connected: %s" % _yesno(cl.connected),
        "homology manifold: %s" % _yesno(cl.homology_manifold),
        "homology sphere: %s" % _yesno(cl.homology_sphere),
        "cohen-macaulay: %s" % _yesno(cl.cohen_macaulay),
        "gorenstein*: %s" % _yesno(cl.gorenstein_star),
        "buchsbaum: %s" % _yesno(cl.buchsbaum),
        "orientable: %s" % _yesno(cl.orientable),
    ]
    return data, lines, 0


def cmd_wlp(args):
    c = load_complex(args.path)
    f = parse_field(args.field)
    cert = wlp.find_wle(c, f, args.seed, max_tries=args.max_tries)
    if args.certify:
        cert = wlp.certify_over_q(c, cert)
    data = _payload(args, field=f.name, certificate=cert.to_dict(), ok=cert.ok)
    lines = ["WLE found after %d tries (search field %s, certificate field %s)"
             % (cert.tries, f.name, cert.field_name)]
    for v in cert.verdicts:
        lines.append("degree %d: %d -> %d, rank %d, %s"
                     % (v.degree, v.dim_from, v.dim_to, v.rank, v.verdict))
    lines.append("certified over Q: %s" % _yesno(cert.certified_over_q))
    lines.append("seed: %d" % args.seed)
    return data, lines, 0


def cmd_walk(args):
    c = load_complex(args.path)
    walk = random_pachner_walk(c, args.steps, args.seed,
                               policy=args.policy, vertex_cap=args.vertex_cap)
    sphere_start = homology.is_homology_sphere(c)
    steps = []
    lines = ["start: f=%s" % _fmt_vec(f_vector(c))]
    prev = None
    for idx, (cur, move) in enumerate(walk):
        f, h = f_vector(cur), h_vector(cur)
        g = g_vector(h)
        entry = {"step": idx, "f": _vec(f), "h": _vec(h), "g": _vec(g),
                 "move": None if move is None else move.to_dict()}
        if move is not None:
            pachner_g_delta(prev, cur, move)
            if sphere_start and any(x < 0 for x in g):
                raise errors.LawViolated(
                    "negative g entry %s at step %d" % (_fmt_vec(g), idx))
            lines.append("step %d: %d-move, f=%s g=%s"
                         % (idx, move.index, _fmt_vec(f), _fmt_vec(g)))
        steps.append(entry)
        prev = cur
    lines.append("end: f=%s h=%s g=%s" % (
        _fmt_vec(f_vector(prev)), _fmt_vec(h_vector(prev)),
        _fmt_vec(g_vector(h_vector(prev)))))
    lines.append("g-vector law: pass (%d moves)" % args.steps)
    data = _payload(args, steps=steps, sphere_start=sphere_start,
                    policy=args.policy, law_ok=True)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for idx, (cur, _) in enumerate(walk):
            name = os.path.join(args.out, "step%03d.txt" % idx)
            with open(name, "w", encoding="utf-8") as fh:
                fh.write(format_facets(cur))
        with open(os.path.join(args.out, "walk.json"), "w",
                  encoding="utf-8") as fh:
            json.dump(data, fh, sort_keys=True, separators=(",", ":"))
            fh.write("\n")
        lines.append("wrote %d complexes to %s" % (len(walk), args.out))
    return data, lines, 0


def cmd_manifold_g(args):
    c = load_complex(args.path)
    f = parse_field(args.field)
    hp = wlp.h_prime(c, f, args.seed)
    hpp = wlp.h_doubleprime(c, f, args.seed)
    rep = wlp.kalai_g_check(c, f, args.seed)
    soc_data = None
    lines = [
        "h =%s" % _fmt_vec(h_vector(c)),
        "h' =%s" % _fmt_vec(hp),
        "h''=%s" % _fmt_vec(hpp),
        "g''=%s" % _fmt_vec(rep.g_doubleprime),
        "g'' is an M-sequence: %s" % _yesno(rep.ok),
    ]
    if homology.is_homology_manifold(c, f) and homology.is_connected(c) \
            and homology.is_orientable(c, f):
        ns = wlp.novik_swartz_check(c, f, args.seed)
        soc_data = {"socle_dims": _vec(ns.socle_dims),
                    "expected": _vec(ns.expected_socle_dims),
                    "quotient_dims": _vec(ns.quotient_dims),
                    "pairing_ok": ns.pairing_ok}
        lines.append("socle dims (deg 1..d-1): %s" % _fmt_vec(ns.socle_dims))
        lines.append("duality pairing after socle quotient: %s"
                     % ("full rank" if ns.pairing_ok else "DEGENERATE"))
    data = _payload(args, field=f.name, h=_vec(h_vector(c)), h_prime=_vec(hp),
                    h_doubleprime=_vec(hpp), g_doubleprime=_vec(rep.g_doubleprime),
                    g_is_m=rep.ok, socle=soc_data)
    return data, lines, 0 if rep.ok else 2


def cmd_toric(args):
    fan = toric.load_fan(args.path)
    rep = toric.toric_m_check(fan)
    cert = toric.toric_wle(fan, args.seed, max_tries=args.max_tries)
    data = _payload(args, betti=_vec(rep.mu), differences=_vec(rep.differences),
                    m_ok=rep.ok, wle=cert.to_dict(), ok=rep.ok and cert.ok)
    lines = [
        "even cohomology dims: %s (odd degrees all 0)" % _fmt_vec(rep.mu),
        "difference vector: %s" % _fmt_vec(rep.differences),
        "M-sequence: %s" % _yesno(rep.ok),
        "WLE for the ray forms: found after %d tries" % cert.tries,
        "seed: %d" % args.seed,
    ]
    return data, lines, 0 if rep.ok else 2


def cmd_reduce(args):
    c = load_complex(args.path)
    f = parse_field(args.field)
    system = random_lsop(c, f, as_rng(args.seed))
    q = GradedQuotient(c, system, strategy=args.strategy)
    dims = q.dims
    bases = {str(i): [list(m) for m in q.basis(i)] for i in range(q.d + 1)}
    data = _payload(args, field=f.name, dims=_vec(dims), strategy=q.strategy,
                    theta=[[str(x) for x in row] for row in system.rows],
                    bases=bases)
    lines = ["dims=%s" % _fmt_vec(dims), "strategy=%s" % q.strategy,
             "seed: %d" % args.seed]
    if sum(dims) <= 60:
        for i in range(q.d + 1):
            lines.append("basis[%d] = %s"
                         % (i, ", ".join(_fmt_mono(m) for m in q.basis(i))))
    return data, lines, 0


def cmd_hilbert(args):
    c = load_complex(args.path)
    d = c.dim + 1
    hf = hilbert_function(c, d + 3)
    hs = hilbert_series(c)
    expanded = hs.expand(d + 3)
    data = _payload(args, hilbert=_vec(hf), series_numerator=_vec(hs.numerator),
                    series_denominator_power=hs.denominator_power,
                    expansion=_vec(expanded),
                    consistent=tuple(hf) == tuple(expanded))
    lines = [
        "hilbert function (deg 0..%d): %s" % (d + 3, _fmt_vec(hf)),
        "series: (%s) / (1-t)^%d" % (_fmt_vec(hs.numerator), hs.denominator_power),
        "series expansion matches: %s" % _yesno(tuple(hf) == tuple(expanded)),
    ]
    return data, lines, 0 if tuple(hf) == tuple(expanded) else 2


def cmd_socle(args):
    c = load_complex(args.path)
    f = parse_field(args.field)
    system = random_lsop(c, f, as_rng(args.seed))
    q = GradedQuotient(c, system)
    soc = socle(q)
    data = _payload(args, field=f.name, dims=_vec(q.dims),
                    socle_dims=_vec(soc.dims),
                    theta=[[str(x) for x in row] for row in system.rows])
    lines = ["dims=%s" % _fmt_vec(q.dims),
             "socle dims (deg 1..%d)=%s" % (q.d, _fmt_vec(soc.dims)),
             "seed: %d" % args.seed]
    return data, lines, 0


# ---- parser ------------------------------------------------------------------


def _add_common(sp, field=None, seed=True, tries=False):
    sp.add_argument("path", help="input file")
    if field is not None:
        sp.add_argument("--field", default=field,
                        help="q, fp, or fp:<prime> (default %(default)s)")
    if seed:
        sp.add_argument("--seed", type=int, default=0,
                        help="rng seed (default %(default)s)")
    if tries:
        sp.add_argument("--max-tries", type=int, default=5,
                        help="search budget (default %(default)s)")
    sp.add_argument("--format", choices=("human", "structured"),
                    default="human", help="output format")


def _build_parser():
    p = argparse.ArgumentParser(
        prog="lefschetz",
        description="Exact computations on simplicial complexes, their "
                    "Stanley-Reisner reductions, and fan cohomology.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("fvector", help="face counts")
    _add_common(sp)
    sp.set_defaults(func=cmd_fvector)

    sp = sub.add_parser("hvector", help="f- and h-vectors")
    _add_common(sp)
    sp.set_defaults(func=cmd_hvector)

    sp = sub.add_parser("gcheck", help="g-conditions on the h-vector")
    _add_common(sp)
    sp.set_defaults(func=cmd_gcheck)

    sp = sub.add_parser("classify", help="homology-based classification")
    _add_common(sp, field="q")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("wlp", help="search a weak Lefschetz element")
    _add_common(sp, field="fp", tries=True)
    sp.add_argument("--certify", action="store_true",
                    help="re-verify the witness over Q")
    sp.set_defaults(func=cmd_wlp)

    sp = sub.add_parser("walk", help="random bistellar walk with g-ledger")
    _add_common(sp)
    sp.add_argument("--steps", type=int, default=10)
    sp.add_argument("--policy", choices=("uniform", "index-uniform"),
                    default="uniform")
    sp.add_argument("--vertex-cap", type=int, default=None,
                    help="suppress vertex-adding moves above this many vertices")
    sp.add_argument("--out", default=None, help="directory for step files")
    sp.set_defaults(func=cmd_walk)

    sp = sub.add_parser("manifold-g", help="h', h'', g'' and socle report")
    _add_common(sp, field="q")
    sp.set_defaults(func=cmd_manifold_g)

    sp = sub.add_parser("toric", help="fan cohomology dims, M-check, WLE")
    _add_common(sp, tries=True)
    sp.set_defaults(func=cmd_toric)

    sp = sub.add_parser("reduce", help="Artinian reduction dims and bases")
    _add_common(sp, field="q")
    sp.add_argument("--strategy", choices=("auto", "macaulay", "substitution"),
                    default="auto")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("hilbert", help="Hilbert function and series")
    _add_common(sp)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("socle", help="socle dimensions of a reduction")
    _add_common(sp, field="q")
    sp.set_defaults(func=cmd_socle)

    return p


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        data, lines, code = args.func(args)
    except _PROPERTY_ERRORS as e:
        print("property violated: %s" % e, file=sys.stderr)
        return 2
    except _SEARCH_ERRORS as e:
        print("search exhausted: %s" % e, file=sys.stderr)
        return 4
    except _INPUT_ERRORS as e:
        print("input error: %s" % e, file=sys.stderr)
        return 3
    except OSError as e:
        print("input error: %s" % e, file=sys.stderr)
        return 3
    except ValueError as e:
        print("input error: %s" % e, file=sys.stderr)
        return 3
    if args.format == "structured":
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
