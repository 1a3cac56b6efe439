"""Command line front end.

Every subcommand reads JSON files, calls one library function and writes
canonical JSON (sorted keys, integers only) to stdout or ``--output``.

Schemas
-------
complex::

    {"vertices": [label, ...], "maximal_faces": [[label, ...], ...]}

polytope::

    {"dimension": n, "facets": [label, ...], "vertices": [[label, ...], ...]}

matrix::

    {"rows": r, "cols": c, "data": [[int, ...], ...], "column_labels": [label, ...]}

``column_labels`` is optional.  A label is a string, an integer or a list of
labels; lists are read back as tuples, so the pair labels ``(i, k)`` emitted
by ``wedge`` and ``charmat-j`` round-trip as ``[i, k]``.

Exit status: 0 on success, 1 on a domain error (a JSON object with ``error``
and ``message`` goes to stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import jsonschema

from . import characteristic as ch
from .constructions import (
    JSequence,
    composed_complex,
    parameter_transform_composed,
    parameter_transform_wedge,
    simplicial_wedge,
)
from .errors import InputError, ToricWedgeError
from .homology import BettiTable, hochster_betti, reduced_homology
from .intlinalg import IntMatrix, Lattice
from .simplicial import (
    SimplePolytope,
    SimplicialComplex,
    complex_from_minimal_non_faces,
    minimal_non_faces,
    nerve_of_simple_polytope,
)
from .toric_cohomology import RingPresentation, cohomology_presentation, toric_betti

_LABEL = {"anyOf": [{"type": "string"}, {"type": "integer"},
                    {"type": "array", "items": {"$ref": "#/$defs/label"}}]}
_DEFS = {"label": _LABEL}

COMPLEX_SCHEMA = {
    "type": "object",
    "$defs": _DEFS,
    "required": ["vertices", "maximal_faces"],
    "properties": {
        "vertices": {"type": "array", "items": {"$ref": "#/$defs/label"}},
        "maximal_faces": {"type": "array",
                          "items": {"type": "array", "items": {"$ref": "#/$defs/label"}}},
    },
}

MNF_SCHEMA = {
    "type": "object",
    "$defs": _DEFS,
    "required": ["vertices", "minimal_non_faces"],
    "properties": {
        "vertices": {"type": "array", "items": {"$ref": "#/$defs/label"}},
        "minimal_non_faces": {"type": "array",
                              "items": {"type": "array", "items": {"$ref": "#/$defs/label"}}},
    },
}

POLYTOPE_SCHEMA = {
    "type": "object",
    "$defs": _DEFS,
    "required": ["dimension", "facets", "vertices"],
    "properties": {
        "dimension": {"type": "integer", "minimum": 0},
        "facets": {"type": "array", "items": {"$ref": "#/$defs/label"}},
        "vertices": {"type": "array",
                     "items": {"type": "array", "items": {"$ref": "#/$defs/label"}}},
    },
}

MATRIX_SCHEMA = {
    "type": "object",
    "$defs": _DEFS,
    "required": ["rows", "cols", "data"],
    "properties": {
        "rows": {"type": "integer", "minimum": 0},
        "cols": {"type": "integer", "minimum": 0},
        "data": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "column_labels": {"type": "array", "items": {"$ref": "#/$defs/label"}},
    },
}


class SchemaError(ToricWedgeError):
    code = "schema_error"


class FileReadError(ToricWedgeError):
    code = "file_error"


class UsageError(Exception):
    pass


# -- JSON <-> values ---------------------------------------------------------

def _label_in(x):
    return tuple(_label_in(y) for y in x) if isinstance(x, list) else x


def _label_out(x):
    return [_label_out(y) for y in x] if isinstance(x, tuple) else x


def _load(path: str, schema: dict):
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise FileReadError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    try:
        jsonschema.validate(obj, schema)
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"{path}: {exc.message}") from exc
    return obj


def complex_from_json(obj) -> SimplicialComplex:
    return SimplicialComplex([_label_in(v) for v in obj["vertices"]],
                             ([_label_in(v) for v in f] for f in obj["maximal_faces"]))


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"vertices": [_label_out(v) for v in K.vertices],
            "maximal_faces": [[_label_out(v) for v in f] for f in K.ordered_maximal_faces()
                              if f]}


def polytope_from_json(obj) -> SimplePolytope:
    return SimplePolytope(obj["dimension"], tuple(_label_in(f) for f in obj["facets"]),
                          tuple(frozenset(_label_in(f) for f in v) for v in obj["vertices"]))


def matrix_from_json(obj) -> IntMatrix:
    labels = obj.get("column_labels")
    return IntMatrix(obj["rows"], obj["cols"], tuple(map(tuple, obj["data"])),
                     None if labels is None else tuple(_label_in(v) for v in labels))


def matrix_to_json(M: IntMatrix, labels=None) -> dict:
    out = {"rows": M.rows, "cols": M.cols, "data": M.to_list()}
    labels = labels if labels is not None else M.column_labels
    if labels is not None:
        out["column_labels"] = [_label_out(v) for v in labels]
    return out


def charmat_from_json(obj, default_labels=None) -> ch.CharacteristicMatrix:
    M = matrix_from_json(obj)
    labels = M.column_labels
    if labels is None:
        labels = default_labels if default_labels is not None else range(1, M.cols + 1)
    return ch.CharacteristicMatrix(IntMatrix(M.rows, M.cols, M.data), tuple(labels))


def charmat_to_json(C: ch.CharacteristicMatrix) -> dict:
    return matrix_to_json(C.matrix, C.column_labels)


def lattice_to_json(L: Lattice) -> dict:
    return {"ambient": L.ambient, "rank": L.rank, "basis": [list(b) for b in L.basis]}


def betti_to_json(B: BettiTable) -> dict:
    out = {"ranks": {str(k): v for k, v in B.ranks.items()},
           "torsion": {str(k): list(v) for k, v in B.torsion.items()}}
    if B.warning:
        out["warning"] = B.warning
    return out


def presentation_to_json(R: RingPresentation) -> dict:
    return {"generators": [_label_out(g) for g in R.generators],
            "monomial_relations": [[_label_out(v) for v in rel] for rel in R.monomial_relations],
            "linear_relations": [list(row) for row in R.linear_relations]}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# -- subcommands -------------------------------------------------------------

def _complex(args):
    return complex_from_json(_load(args.complex, COMPLEX_SCHEMA))


def _lambda(args, K=None):
    return charmat_from_json(_load(args.lam, MATRIX_SCHEMA),
                             None if K is None else K.vertices)


def _parts_matrices(args):
    return [charmat_from_json(_load(p, MATRIX_SCHEMA)) for p in args.part]


def _jseq(args):
    return JSequence.parse(args.j)


def cmd_nerve(args):
    return complex_to_json(nerve_of_simple_polytope(polytope_from_json(
        _load(args.polytope, POLYTOPE_SCHEMA))))


def cmd_wedge(args):
    return complex_to_json(simplicial_wedge(_complex(args), _jseq(args)))


def cmd_compose(args):
    parts = [complex_from_json(_load(p, COMPLEX_SCHEMA)) for p in args.part]
    return complex_to_json(composed_complex(_complex(args), parts))


def cmd_mnf(args):
    if args.inverse:
        obj = _load(args.complex, MNF_SCHEMA)
        K = complex_from_minimal_non_faces(
            [_label_in(v) for v in obj["vertices"]],
            [[_label_in(v) for v in s] for s in obj["minimal_non_faces"]])
        return complex_to_json(K)
    K = _complex(args)
    mnfs = sorted((K.sort_face(s) for s in minimal_non_faces(K)),
                  key=lambda f: (len(f), [K.index(v) for v in f]))
    return {"vertices": [_label_out(v) for v in K.vertices],
            "minimal_non_faces": [[_label_out(v) for v in s] for s in mnfs]}


def cmd_charmat_j(args):
    return charmat_to_json(ch.build_lambda_J(_lambda(args), _jseq(args)))


def cmd_charmat_jn(args):
    return charmat_to_json(ch.build_lambda_JN(_lambda(args), _parts_matrices(args)))


def cmd_check_regular(args):
    K = _complex(args)
    report = ch.check_regularity(K, _lambda(args, K), args.mode)
    out = {"ok": report.ok}
    if not report.ok:
        out["failures"] = [{"face": [_label_out(v) for v in face],
                            "value": list(val) if isinstance(val, tuple) else val}
                           for face, val in report.failures]
    return out


def cmd_kernel(args):
    r, L = ch.rank_and_kernel(charmat_from_json(_load(args.matrix, MATRIX_SCHEMA)))
    return {"rank": r, "kernel": lattice_to_json(L)}


def cmd_q_test(args):
    parts = _parts_matrices(args)
    lam_jn = ch.build_lambda_JN(_lambda(args), parts)
    Q = ch.q_subgroup(parts)
    report = ch.kernel_in_q_report(lam_jn, Q)
    return {"column_labels": [_label_out(v) for v in lam_jn.column_labels],
            "q": lattice_to_json(Q),
            "kernel": [{"vector": list(v), "class": c.value} for v, c in report.classes],
            "summary": report.summary.value}


def cmd_betti_toric(args):
    return betti_to_json(toric_betti(_complex(args), args.n, polytopal=not args.non_polytopal))


def cmd_betti_zk(args):
    return betti_to_json(hochster_betti(_complex(args), max_vertices=args.max_vertices))


def cmd_homology(args):
    return betti_to_json(reduced_homology(_complex(args)))


def cmd_presentation(args):
    K = _complex(args)
    R = cohomology_presentation(K, _lambda(args, K))
    return R.to_text() if args.text else presentation_to_json(R)


def cmd_transform(args):
    J = _jseq(args)
    if args.part_dims is not None:
        dims = [int(x) for x in args.part_dims.split(",") if x.strip()]
        T = parameter_transform_composed(args.m, args.n, J, dims)
    elif args.N is not None:
        T = parameter_transform_composed(args.m, args.n, J, args.N)
    else:
        T = parameter_transform_wedge(args.m, args.n, J)
    return {"d": T.d, "n": T.n, "coker": T.coker}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="toricwedge", description=__doc__.split("\n\n")[0])
    p.add_argument("-o", "--output", help="write result here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, *opts):
        sp = sub.add_parser(name, help=help)
        for opt in opts:
            opt(sp)
        sp.set_defaults(func=func)
        return sp

    cx = lambda sp: sp.add_argument("--complex", required=True)
    lam = lambda sp: sp.add_argument("--lambda", dest="lam", required=True)
    jj = lambda sp: sp.add_argument("--j", required=True, help="comma separated, e.g. 1,2,3")
    parts = lambda sp: sp.add_argument("--part", action="append", required=True,
                                       help="repeat once per vertex, in vertex order")

    add("nerve", cmd_nerve, "nerve of a simple polytope",
        lambda sp: sp.add_argument("--polytope", required=True))
    add("wedge", cmd_wedge, "simplicial wedge K(J)", cx, jj)
    add("compose", cmd_compose, "composed complex K(K_1,...,K_m)", cx, parts)
    add("mnf", cmd_mnf, "minimal non-faces (or --inverse to rebuild a complex)", cx,
        lambda sp: sp.add_argument("--inverse", action="store_true"))
    add("charmat-j", cmd_charmat_j, "assemble λ(J)", lam, jj)
    add("charmat-jn", cmd_charmat_jn, "assemble λ(J,N) from part matrices", lam, parts)
    add("check-regular", cmd_check_regular, "regularity of λ on K", cx, lam,
        lambda sp: sp.add_argument("--mode", choices=["faces", "vertices"], default="faces"))
    add("kernel", cmd_kernel, "rank and saturated kernel of a matrix",
        lambda sp: sp.add_argument("--matrix", required=True))
    add("q-test", cmd_q_test, "classify ker λ(J,N) against Q", lam, parts)
    add("betti-toric", cmd_betti_toric, "Betti numbers of the toric manifold over K", cx,
        lambda sp: sp.add_argument("--n", type=int),
        lambda sp: sp.add_argument("--non-polytopal", action="store_true"))
    add("betti-zk", cmd_betti_zk, "Betti numbers of the moment-angle complex", cx,
        lambda sp: sp.add_argument("--max-vertices", type=int, default=14))
    add("homology", cmd_homology, "reduced integral homology", cx)
    add("presentation", cmd_presentation, "cohomology ring presentation", cx, lam,
        lambda sp: sp.add_argument("--text", action="store_true"))
    add("transform", cmd_transform, "parameter transform of (m, n, m-n)",
        lambda sp: sp.add_argument("--m", type=int, required=True),
        lambda sp: sp.add_argument("--n", type=int, required=True), jj,
        lambda sp: sp.add_argument("--N", type=int),
        lambda sp: sp.add_argument("--part-dims"))
    return p


def _fail(code: str, message: str, status: int) -> int:
    print(dumps({"error": code, "message": message}), file=sys.stderr)
    return status


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("usage_error", str(exc), 2)
    try:
        result = args.func(args)
    except ToricWedgeError as exc:
        return _fail(exc.code, str(exc), 1)
    text = result if isinstance(result, str) else dumps(result)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
