"""Command-line front end.

Exit status: 0 on success, 1 for malformed input, 2 for a domain error.
"""

from __future__ import annotations

import argparse
import sys

from . import documents
from .census import census_d1, census_d2
from .documents import DocumentError
from .errors import FieldError, LeonardError, PrimaryDataInvalid
from .exactfield import parse_field
from .flatbip import bipartite_contraction, flat_part
from .matrixcore import verify_leonard_pair
from .nearbip import classify_near_bipartite, expansions_dual_q_krawtchouk, expansions_krawtchouk
from .params import (
    ParameterArray,
    TddSequence,
    parameter_arrays_from_tdd,
    realize_matrices,
    tdd_from_parameter_array,
    validate_parameter_array,
)
from .primary import TYPE_I, TYPE_II, fundamental_type, parameter_array_from_primary_data
from .sampling import FAMILIES, sample_primary_list


class DomainError(LeonardError):
    pass


def _out(line=""):
    print(line)


def _fmt(seq):
    return "(" + ", ".join(str(x) for x in seq) + ")"


def _as_array(doc):
    v = doc.value
    if isinstance(v, ParameterArray):
        return v
    if isinstance(v, TddSequence):
        return parameter_arrays_from_tdd(v)[0]
    if doc.kind == "primary_data":
        return parameter_array_from_primary_data(v, doc.d)
    raise DomainError(f"expected a parameter array, TD/D sequence or primary data, got {doc.kind}")


def _as_pair(doc):
    v = doc.value
    if doc.kind == "matrix_pair":
        return v
    if isinstance(v, TddSequence):
        return realize_matrices(v)
    return realize_matrices(tdd_from_parameter_array(_valid_array(doc)))


def _valid_array(doc):
    p = _as_array(doc)
    rep = validate_parameter_array(p)
    if not rep.valid:
        raise DomainError("not a parameter array: " + "; ".join(rep.violations))
    return p


def cmd_validate(args):
    doc = documents.load(args.file)
    p = _as_array(doc)
    rep = validate_parameter_array(p)
    if not rep.valid:
        _out("Invalid; " + "; ".join(rep.violations))
        return 2
    if p.d >= 3:
        _out(f"Valid; beta={rep.beta}; type={fundamental_type(p).tag}")
    else:
        _out("Valid; beta=undefined for d<3; type=undefined")
    return 0


def cmd_tdd(args):
    p = _valid_array(documents.load(args.file))
    _out(documents.render(tdd_from_parameter_array(p)))
    return 0


def cmd_array(args):
    doc = documents.load(args.file)
    if doc.kind != "tdd":
        raise DomainError("array expects a tdd document")
    for p in parameter_arrays_from_tdd(doc.value):
        _out(documents.render(p))
    return 0


def cmd_realize(args):
    doc = documents.load(args.file)
    _out(documents.render(_as_pair(doc)))
    return 0


def cmd_verify(args):
    P = _as_pair(documents.load(args.file))
    rep = verify_leonard_pair(P)
    if rep.is_leonard:
        _out(f"LeonardPair; theta={_fmt(rep.theta_orders[0])}; thetastar={_fmt(rep.thetastar_orders[0])}")
    else:
        _out(f"{rep.status}; {rep.reason}")
    return 0


def cmd_flat(args):
    P = _as_pair(documents.load(args.file))
    fp = flat_part(P)
    _out(f"F diagonal={_fmt(fp.F.diagonal())}")
    _out(f"bipartite={fp.F.is_zero()}; essentially_bipartite={fp.a_common is not None}"
         + (f"; alpha={fp.a_common}" if fp.a_common is not None else ""))
    return 0


def cmd_classify(args):
    p = _valid_array(documents.load(args.file))
    c = classify_near_bipartite(p)
    reasons = ", ".join(c.reasons)
    if c.near_bipartite:
        head = f"near-bipartite; reasons=[{reasons}]"
    else:
        head = f"not near-bipartite; reasons=[{reasons}]"
    if c.notes:
        head += "; notes=[" + ", ".join(c.notes) + "]"
    if not c.consistent:
        head += "; INTERNAL INCONSISTENCY between formula and matrix routes"
    if c.contraction is not None:
        _out(head + "; contraction written to stdout")
        _out(documents.render(c.contraction))
    elif c.contraction_tdd is not None:
        _out(head + "; contraction TD/D sequence written to stdout")
        _out(documents.render(c.contraction_tdd))
    else:
        _out(head)
    return 0 if c.consistent else 2


def cmd_contract(args):
    doc = documents.load(args.file)
    P = _as_pair(doc)
    try:
        con = bipartite_contraction(P)
        _out("matrix route: " + ("no contraction (A - F, A* is not a Leonard pair)" if con is None
                                 else "A - F, A* is a Leonard pair"))
    except LeonardError as exc:
        con = None
        _out(f"matrix route: {type(exc).__name__}: {exc}")
    if doc.kind != "matrix_pair":
        c = classify_near_bipartite(_valid_array(doc))
        _out(f"formula route: near_bipartite={c.near_bipartite}; reasons=[{', '.join(c.reasons)}]"
             + (f"; notes=[{', '.join(c.notes)}]" if c.notes else ""))
        if c.contraction is not None:
            _out(documents.render(c.contraction))
        elif c.contraction_tdd is not None:
            _out(documents.render(c.contraction_tdd))
        return 0
    if con is not None:
        _out(documents.render(con.array))
    return 0


def cmd_expand(args):
    doc = documents.load(args.file)
    if doc.kind != "primary_data":
        raise DomainError("expand expects a primary_data document for a bipartite pair")
    b, d, F = doc.value, doc.d, doc.field
    delta, mu = F.parse(args.delta), F.parse(args.mu)
    if b.tag == TYPE_I:
        exps = [expansions_dual_q_krawtchouk(b, d, delta, mu)]
    elif b.tag == TYPE_II:
        exps = expansions_krawtchouk(b, d, delta, mu, args.tau_sign)
    else:
        raise DomainError("expansions are defined for dual q-Krawtchouk and Krawtchouk types")
    for e in exps:
        _out(f"expansion tau={e.primary.tau} ({e.tau_sign})")
        _out(documents.render(e.primary, d))
        _out(documents.render(e.array))
        _out(documents.render(e.pair))
    return 0


def cmd_sample(args):
    F = parse_field(args.field)
    if args.count < 0 or args.d < 1:
        raise DocumentError("count must be non-negative and d positive")
    q = F.parse(args.q)
    for pd in sample_primary_list(args.family, args.d, F, args.count, args.seed, q):
        _out(documents.render(pd, args.d))
    return 0


def cmd_census(args, fn):
    F = parse_field(args.field)
    if not F.p:
        raise DocumentError("census needs --field p=P")
    res = fn(F)
    _out(res.summary())
    _out(f"field={F}; seconds={res.seconds:.2f}; " + "; ".join(f"{k}={v}" for k, v in res.counts.items()))
    return 0 if res.mismatches == 0 else 2


def build_parser():
    ap = argparse.ArgumentParser(prog="leonardpairs", description="Exact computations with Leonard pairs.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, fn, help_ in [
        ("validate", cmd_validate, "check the parameter array conditions, report beta and type"),
        ("tdd", cmd_tdd, "parameter array to TD/D sequence"),
        ("array", cmd_array, "TD/D sequence to its parameter arrays"),
        ("realize", cmd_realize, "emit the normalized TD/D matrix pair"),
        ("verify", cmd_verify, "brute-force Leonard pair check"),
        ("flat", cmd_flat, "flat part and bipartite status"),
        ("classify", cmd_classify, "near-bipartite classification"),
        ("contract", cmd_contract, "bipartite contraction by matrix and formula routes"),
    ]:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("expand", help="near-bipartite expansions of a bipartite pair")
    sp.add_argument("file")
    sp.add_argument("--delta", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--tau-sign", choices=["+", "-"], default=None)
    sp.set_defaults(func=cmd_expand)
    sp = sub.add_parser("sample", help="random valid primary data, one JSON document per line")
    sp.add_argument("--family", required=True, choices=FAMILIES)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--field", required=True)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--q", default="2", help="q for the type I families")
    sp.set_defaults(func=cmd_sample)
    for name, fn in (("census-d1", census_d1), ("census-d2", census_d2)):
        sp = sub.add_parser(name, help=f"exhaustive sweep, diameter {name[-1]}")
        sp.add_argument("--field", required=True)
        sp.set_defaults(func=lambda a, fn=fn: cmd_census(a, fn))
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except (DocumentError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PrimaryDataInvalid as exc:
        print("error: PrimaryDataInvalid: " + "; ".join(exc.violations), file=sys.stderr)
        return 2
    except LeonardError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
