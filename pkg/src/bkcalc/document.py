"""JSON problem documents and exact serialization.

Schema::

    {
      "group": {"factors": [{"type": "A", "rank": 1}],
                "torus_rank": 0,
                "lattice": "weight"},            # or one entry per factor
      "representations": [
        {"name": "V3", "summands": [{"weight": [[3]], "central": []}]}
      ],
      "polytopes": [                             # explicit vertex lists
        {"name": "square", "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]}
      ],
      "reps": ["V3"],                            # optional default selection
      "multiplicities": [3]                      # optional, for mixed-degree
    }

Rationals are written as JSON integers when integral and as ``"p/q"``
strings otherwise.  Floats are rejected.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import SchemaError
from .polytope import Facet, RationalPolytope, RepresentationSpec, Summand, convex_hull
from .rootsys import GroupSpec

SPECIAL_2RHO = "2rho"


def parse_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise SchemaError(f"expected a rational number, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"cannot parse rational {x!r}") from exc
    raise SchemaError(f"expected an integer or a 'p/q' string, got {x!r}")


def parse_int(x, what="value") -> int:
    q = parse_rational(x)
    if q.denominator != 1:
        raise SchemaError(f"{what} must be an integer, got {x!r}")
    return int(q)


def encode_rational(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def encode_vector(v):
    return [encode_rational(x) for x in v]


def encode_facet(f: Facet) -> dict:
    return {"normal": list(f.normal), "offset": encode_rational(f.offset)}


def encode_polytope(p: RationalPolytope, name: str | None = None) -> dict:
    out = {
        "vertices": [encode_vector(v) for v in p.vertices],
        "facets": [encode_facet(f) for f in p.facets],
        "affine_dim": p.affine_dim,
        "dim_ambient": p.dim_ambient,
    }
    if p.equations:
        out["equations"] = [encode_facet(e) for e in p.equations]
    if name is not None:
        out["name"] = name
    return out


def decode_polytope(d: dict) -> RationalPolytope:
    if not isinstance(d, dict) or "vertices" not in d:
        raise SchemaError("a polytope needs a 'vertices' list")
    verts = d["vertices"]
    if not isinstance(verts, list) or not verts:
        raise SchemaError("'vertices' must be a nonempty list")
    pts = []
    for v in verts:
        if not isinstance(v, list):
            raise SchemaError(f"vertex {v!r} is not a list")
        pts.append(tuple(parse_rational(x) for x in v))
    return convex_hull(pts)


def decode_group(d: dict) -> GroupSpec:
    if not isinstance(d, dict):
        raise SchemaError("'group' must be an object")
    factors = []
    for f in d.get("factors", []):
        if not isinstance(f, dict) or "type" not in f or "rank" not in f:
            raise SchemaError(f"factor {f!r} needs 'type' and 'rank'")
        factors.append((str(f["type"]), parse_int(f["rank"], "rank")))
    lattice = d.get("lattice", "weight")
    if isinstance(lattice, list):
        lattice = tuple(lattice)
    return GroupSpec(tuple(factors), parse_int(d.get("torus_rank", 0), "torus_rank"), lattice)


def encode_group(g: GroupSpec) -> dict:
    lat = g.lattice
    return {
        "factors": [{"type": t, "rank": r} for t, r in g.factors],
        "torus_rank": g.torus_rank,
        "lattice": lat[0] if len(set(lat)) == 1 and lat else list(lat),
    }


def decode_representation(d: dict, nfactors: int) -> RepresentationSpec:
    if not isinstance(d, dict) or "summands" not in d:
        raise SchemaError("a representation needs a 'summands' list")
    summands = []
    for s in d["summands"]:
        if not isinstance(s, dict) or "weight" not in s:
            raise SchemaError(f"summand {s!r} needs a 'weight'")
        w = s["weight"]
        if not isinstance(w, list):
            raise SchemaError("'weight' must be a list of per-factor lists")
        if nfactors == 1 and w and not isinstance(w[0], list):
            w = [w]
        blocks = []
        for b in w:
            if not isinstance(b, list):
                raise SchemaError("'weight' must be a list of per-factor lists")
            blocks.append(tuple(parse_int(x, "weight coordinate") for x in b))
        central = tuple(parse_int(x, "central character") for x in s.get("central", []))
        summands.append(Summand(tuple(blocks), central))
    return RepresentationSpec(tuple(summands), d.get("name"))


@dataclass
class ProblemDocument:
    group: GroupSpec
    representations: dict[str, RepresentationSpec] = field(default_factory=dict)
    polytopes: dict[str, RationalPolytope] = field(default_factory=dict)
    reps: list[str] = field(default_factory=list)
    multiplicities: list[int] | None = None

    def names(self) -> list[str]:
        return list(self.representations) + list(self.polytopes)

    def check_names(self, names):
        known = set(self.names()) | {SPECIAL_2RHO}
        for n in names:
            if n not in known:
                raise SchemaError(f"unknown representation or polytope {n!r}")


def parse_document(data: Any) -> ProblemDocument:
    if not isinstance(data, dict):
        raise SchemaError("the document must be a JSON object")
    if "group" not in data:
        raise SchemaError("missing 'group'")
    g = decode_group(data["group"])
    reps: dict[str, RepresentationSpec] = {}
    for i, r in enumerate(data.get("representations", [])):
        rep = decode_representation(r, len(g.factors))
        name = rep.name or f"rep{i}"
        if name in reps:
            raise SchemaError(f"duplicate name {name!r}")
        reps[name] = rep
    polys: dict[str, RationalPolytope] = {}
    for i, p in enumerate(data.get("polytopes", [])):
        name = p.get("name") if isinstance(p, dict) else None
        name = name or f"poly{i}"
        if name in reps or name in polys:
            raise SchemaError(f"duplicate name {name!r}")
        poly = decode_polytope(p)
        if poly.dim_ambient != g.rank:
            raise SchemaError(f"polytope {name!r} has dimension {poly.dim_ambient}, "
                              f"group rank is {g.rank}")
        polys[name] = poly
    sel = data.get("reps", [])
    if not isinstance(sel, list):
        raise SchemaError("'reps' must be a list of names")
    mult = data.get("multiplicities")
    if mult is not None:
        if not isinstance(mult, list):
            raise SchemaError("'multiplicities' must be a list of integers")
        mult = [parse_int(x, "multiplicity") for x in mult]
    doc = ProblemDocument(g, reps, polys, [str(s) for s in sel], mult)
    doc.check_names(doc.reps)
    return doc


def load_document(path: str) -> ProblemDocument:
    try:
        with open(path) as fh:
            data = json.load(fh, parse_float=_reject_float)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from exc
    return parse_document(data)


def _reject_float(s):
    raise SchemaError(f"floating-point literal {s} is not allowed; use 'p/q'")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
