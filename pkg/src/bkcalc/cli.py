"""Command-line front end.

    bkcalc info         --input problem.json
    bkcalc polytope     --input problem.json [--reps V1,V2]
    bkcalc degree       --input problem.json [--reps V1]
    bkcalc mixed-degree --input problem.json --reps V1,V2 --mult 1,2
    bkcalc chi          --input problem.json --reps V1
    bkcalc curve        --input problem.json --reps V1,V2
    bkcalc adjunction   --input problem.json --reps V1,V2   (or --m 2)
    bkcalc check        [--input problem.json]

Exit codes: 0 ok, 2 schema error, 3 mathematical precondition failed,
4 resource cap exceeded, 1 internal error.
"""
from __future__ import annotations

import argparse
import sys

from . import adjunction, degrees
from .checks import run_invariant_suite
from .document import (SPECIAL_2RHO, ProblemDocument, dumps, encode_group, encode_polytope,
                       encode_rational, encode_vector, load_document)
from .errors import InternalError, PreconditionError, ResourceCapError, SchemaError
from .polytope import RationalPolytope, weight_polytope
from .rootsys import DEFAULT_WEYL_CAP, RootSystemData, build_root_system

EXIT_OK, EXIT_INTERNAL, EXIT_SCHEMA, EXIT_MATH, EXIT_CAP = 0, 1, 2, 3, 4

COMMANDS = ("info", "polytope", "degree", "mixed-degree", "chi", "curve", "adjunction", "check")


def _split(s: str | None) -> list[str]:
    if not s:
        return []
    return [x.strip() for x in s.split(",") if x.strip()]


class Session:
    def __init__(self, doc: ProblemDocument, weyl_cap: int, degree_cap: int):
        self.doc = doc
        self.rs: RootSystemData = build_root_system(doc.group, weyl_cap)
        self.degree_cap = degree_cap
        self._polys: dict[str, RationalPolytope] = {}

    def polytope(self, name: str) -> RationalPolytope:
        if name not in self._polys:
            if name == SPECIAL_2RHO:
                self._polys[name] = degrees.chern1_polytope(self.rs)
            elif name in self.doc.polytopes:
                self._polys[name] = self.doc.polytopes[name]
            else:
                self._polys[name] = weight_polytope(self.rs, self.doc.representations[name])
        return self._polys[name]

    def selection(self, flag: str | None, default_all: bool = False) -> list[str]:
        names = _split(flag) or list(self.doc.reps)
        if not names and default_all:
            names = self.doc.names()
        if not names:
            raise SchemaError("no representations selected (use --reps or 'reps' in the input)")
        self.doc.check_names(names)
        return names


def _num(x):
    return encode_rational(x)


def cmd_info(s: Session, args):
    rs = s.rs
    return {
        "group": s.doc.group.label(),
        "n": rs.n,
        "k": rs.k,
        "positive_roots": len(rs.positive_roots),
        "weyl_order": rs.weyl_order,
        "rho": encode_vector(rs.rho),
    }


def cmd_polytope(s: Session, args):
    names = s.selection(args.reps, default_all=True)
    out = {"group": encode_group(s.doc.group), "polytopes": []}
    for name in dict.fromkeys(names):
        out["polytopes"].append(encode_polytope(s.polytope(name), name))
    return out


def cmd_degree(s: Session, args):
    names = s.selection(args.reps, default_all=True)
    rows = []
    for name in dict.fromkeys(names):
        p = s.polytope(name)
        d = degrees.bk_degree(s.rs, p, s.degree_cap)
        rows.append({"name": name, "degree": _num(d.value),
                     "torus_degree": _num(degrees.torus_degree(s.rs, p).value)})
    return {"degrees": rows}


def _multiplicities(s: Session, args, names, total):
    mult = [int(x) for x in _split(args.mult)] if args.mult else s.doc.multiplicities
    if mult is None:
        mult = [1] * len(names)
    if len(mult) != len(names):
        raise SchemaError(f"{len(names)} names but {len(mult)} multiplicities")
    if sum(mult) != total:
        raise PreconditionError(f"multiplicities sum to {sum(mult)}, need {total}")
    return mult


def cmd_mixed_degree(s: Session, args):
    names = s.selection(args.reps)
    mult = _multiplicities(s, args, names, s.rs.n)
    pairs = [(s.polytope(n), m) for n, m in zip(names, mult)]
    d = degrees.mixed_degree(s.rs, pairs, max_positive_roots=s.degree_cap)
    return {"reps": names, "multiplicities": mult, "mixed_degree": _num(d.value)}


def _encode_term(t: adjunction.AdjunctionTerm):
    return {"chern_index": t.chern_index, "exponents": list(t.exponents), "sign": t.sign,
           "evaluable": t.evaluable, "label": str(t)}


def cmd_chi(s: Session, args):
    names = s.selection(args.reps)
    res = adjunction.chi_complete_intersection(s.rs, [s.polytope(n) for n in names])
    return {
        "reps": names,
        "chi": None if res.value is None else _num(res.value),
        "numeric": res.is_numeric,
        "terms": [dict(_encode_term(t), value=_num(v)) for t, v in res.evaluated],
        "partial_value": _num(res.partial_value),
        "symbolic_residual": [str(t) for t in res.symbolic_residual],
    }


def cmd_curve(s: Session, args):
    names = s.selection(args.reps)
    inv = adjunction.curve_invariants(s.rs, [s.polytope(n) for n in names])
    return {"reps": names, "chi": inv.chi, "boundary_points": inv.boundary_points,
            "chi_compactified": inv.chi_compact, "genus": inv.genus}


def cmd_adjunction(s: Session, args):
    if args.m is not None:
        m = args.m
        names = None
    else:
        names = s.selection(args.reps)
        m = len(names)
    terms = adjunction.adjunction_series(m, s.rs.n, s.rs.k)
    out = {"m": m, "n": s.rs.n, "k": s.rs.k, "terms": [_encode_term(t) for t in terms]}
    if names:
        out["reps"] = names
    return out


def cmd_check(doc: ProblemDocument | None, args):
    specs = [doc.group] if doc is not None else None
    results = run_invariant_suite(specs, seed=args.seed)
    return {"passed": all(r.passed for r in results),
            "results": [{"group": r.group, "name": r.name, "passed": r.passed,
                         "detail": r.detail} for r in results]}


HANDLERS = {
    "info": cmd_info,
    "polytope": cmd_polytope,
    "degree": cmd_degree,
    "mixed-degree": cmd_mixed_degree,
    "chi": cmd_chi,
    "curve": cmd_curve,
    "adjunction": cmd_adjunction,
}


# ------------------------------------------------------------ text output


def _text(command: str, r: dict) -> str:
    lines = []
    if command == "info":
        lines += [f"group: {r['group']}", f"dimension n = {r['n']}", f"rank k = {r['k']}",
                  f"|R+| = {r['positive_roots']}", f"|W| = {r['weyl_order']}",
                  f"rho = ({', '.join(map(str, r['rho']))})"]
    elif command == "polytope":
        for p in r["polytopes"]:
            lines.append(f"{p['name']}: affine dimension {p['affine_dim']} "
                         f"in rank {p['dim_ambient']}")
            lines.append("  vertices:")
            lines += [f"    ({', '.join(map(str, v))})" for v in p["vertices"]]
            lines.append("  facets (<normal, x> <= offset):")
            lines += [f"    ({', '.join(map(str, f['normal']))}) <= {f['offset']}"
                      for f in p["facets"]]
            for e in p.get("equations", []):
                lines.append(f"  equation: ({', '.join(map(str, e['normal']))}) = {e['offset']}")
    elif command == "degree":
        for row in r["degrees"]:
            lines.append(f"{row['name']}: deg = {row['degree']}  "
                         f"(torus degree {row['torus_degree']})")
    elif command == "mixed-degree":
        args = ", ".join(f"{n}^{m}" if m > 1 else n
                         for n, m in zip(r["reps"], r["multiplicities"]))
        lines.append(f"D_pol({args}) = {r['mixed_degree']}")
    elif command == "chi":
        for t in r["terms"]:
            lines.append(f"  {t['label']} = {t['value']}")
        for t in r["symbolic_residual"]:
            lines.append(f"  {t}  [no formula: kept symbolic]")
        if r["numeric"]:
            lines.append(f"chi = {r['chi']}")
        else:
            lines.append(f"chi = {r['partial_value']} " + " ".join(r["symbolic_residual"]))
    elif command == "curve":
        lines += [f"chi(C) = {r['chi']}", f"boundary points = {r['boundary_points']}",
                  f"chi(compactified C) = {r['chi_compactified']}", f"genus = {r['genus']}"]
    elif command == "adjunction":
        lines.append(f"degree-{r['n']} terms for m = {r['m']} (n = {r['n']}, k = {r['k']}):")
        for t in r["terms"]:
            lines.append(f"  {t['label']}" + ("" if t["evaluable"] else "  [symbolic]"))
    elif command == "check":
        for row in r["results"]:
            mark = "PASS" if row["passed"] else "FAIL"
            detail = f" ({row['detail']})" if row["detail"] else ""
            lines.append(f"[{mark}] {row['group']}: {row['name']}{detail}")
        lines.append("all checks passed" if r["passed"] else "SOME CHECKS FAILED")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bkcalc",
        description="Exact intersection numbers and Euler characteristics "
                    "for hyperplane sections of reductive groups.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", "-i", help="JSON problem document")
    p.add_argument("--output", "-o", choices=("json", "text"), default="text")
    p.add_argument("--reps", help="comma-separated representation/polytope names "
                                  f"('{SPECIAL_2RHO}' selects the weight polytope of 2 rho)")
    p.add_argument("--mult", help="comma-separated multiplicities for mixed-degree")
    p.add_argument("--m", type=int, help="number of sections for 'adjunction' without --reps")
    p.add_argument("--weyl-cap", type=int, default=DEFAULT_WEYL_CAP)
    p.add_argument("--degree-cap", type=int, default=degrees.MAX_POSITIVE_ROOTS,
                   help="largest number of positive roots accepted by the integrator")
    p.add_argument("--seed", type=int, default=0, help="seed for 'check'")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        doc = load_document(args.input) if args.input else None
        if args.command == "check":
            result = cmd_check(doc, args)
            status = EXIT_OK if result["passed"] else EXIT_INTERNAL
        else:
            if doc is None:
                raise SchemaError(f"'{args.command}' needs --input")
            session = Session(doc, args.weyl_cap, args.degree_cap)
            result = HANDLERS[args.command](session, args)
            status = EXIT_OK
    except SchemaError as exc:
        print(f"schema error: {exc}", file=stderr)
        return EXIT_SCHEMA
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=stderr)
        return EXIT_MATH
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=stderr)
        return EXIT_CAP
    except InternalError as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    if args.output == "json":
        print(dumps(result), file=stdout)
    else:
        print(_text(args.command, result), file=stdout)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
