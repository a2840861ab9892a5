"""Command line front end.  Exit codes: 0 positive, 1 negative, 2 error."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .circular import canonical_arc, circular_ones, consecutive_ones
from .classes import (
    ClassTag,
    canonical_arc_model,
    canonical_label,
    interval_graph_model,
    is_interval_graph,
    is_pca,
    isomorphic,
    proper_arc_model_pca,
    recognize,
)
from .core import EMPTY, FULL, ArcModel, Graph, Hypergraph, classify_model, sort_vertices
from .errors import ArcanonError, NoSolution, NotInClass, NotInterval
from .intervals import canonical_interval
from .io import ParseError, emit_graph, format_name, parse_matrix, parse_structure
from .ssp import ssp_ca, ssp_coconvex, ssp_proper_interval

OK, NEGATIVE, ERROR = 0, 1, 2


class CliError(Exception):
    pass


class Outcome:
    def __init__(self, code: int, lines: list[str], result=None, labeling=None):
        self.code = code
        self.lines = lines
        self.result = result
        self.labeling = labeling


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    return parse_structure(_read(path))


def _load_graph(path: str) -> Graph:
    s = _load(path)
    if not isinstance(s, Graph):
        raise CliError(f"{path}: expected a graph file")
    return s


def _load_hypergraph(path: str) -> Hypergraph:
    s = _load(path)
    if not isinstance(s, Hypergraph):
        raise CliError(f"{path}: expected a hypergraph file")
    return s


def _labeling_pairs(labeling: dict) -> list[list]:
    return [[v, labeling[v]] for v in sorted(labeling, key=labeling.__getitem__)]


def _labeling_lines(labeling: dict) -> list[str]:
    return [f"{format_name(v)} {p}" for v, p in _labeling_pairs(labeling)]


def _arc_text(arc) -> str:
    if arc.kind == EMPTY:
        return "empty"
    if arc.kind == FULL:
        return "full"
    return f"{arc.start} {arc.end}"


def _model_lines(model, keys_are_vertices: bool) -> list[str]:
    head = "circle" if isinstance(model, ArcModel) else "segment"
    lines = [f"{head} {model.size}"]
    keys = sort_vertices(model.arcs) if keys_are_vertices else sorted(model.arcs)
    for k in keys:
        name = format_name(k) if keys_are_vertices else f"e{k}"
        extra = ""
        if model.color(k):
            extra += f" color={model.color(k)}"
        if model.mult(k) != 1:
            extra += f" mult={model.mult(k)}"
        lines.append(f"{name} {_arc_text(model.arcs[k])}{extra}")
    return lines


def _model_json(model) -> dict:
    return {
        "kind": "circle" if isinstance(model, ArcModel) else "segment",
        "size": model.size,
        "arcs": [
            [k, model.arcs[k].kind, model.arcs[k].start, model.arcs[k].end, model.color(k), model.mult(k)]
            for k in sort_vertices(model.arcs)
        ],
    }


def _hypergraph_canon(h: Hypergraph):
    try:
        return canonical_interval(h)
    except NotInterval:
        return canonical_arc(h)


# --------------------------------------------------------------------------
# subcommands


def cmd_recognize(args) -> Outcome:
    g = _load_graph(args.file)
    tags = sorted(str(t) for t in recognize(g))
    return Outcome(OK, tags, tags)


def cmd_canon(args) -> Outcome:
    s = _load(args.file)
    kind = args.kind or ("graph" if isinstance(s, Graph) else "hypergraph")
    if kind == "graph":
        if not isinstance(s, Graph):
            raise CliError("--kind graph needs a graph file")
        res = canonical_label(s, args.cls)
        form = res.form.decode()
        return Outcome(OK, [f"form {s.n} {form}", *_labeling_lines(res.labeling)], form, _labeling_pairs(res.labeling))
    if not isinstance(s, Hypergraph):
        raise CliError("--kind hypergraph needs a hypergraph file")
    res = _hypergraph_canon(s)
    form = res.serialized.decode()
    return Outcome(OK, [f"form {form}", *_labeling_lines(res.labeling)], form, _labeling_pairs(res.labeling))


def cmd_model(args) -> Outcome:
    s = _load(args.file)
    if isinstance(s, Hypergraph):
        res = _hypergraph_canon(s)
        if args.proper and not classify_model(res.model).is_proper:
            raise CliError("hypergraph has inclusions, so no model is proper")
        lines = _model_lines(res.model, False) + [f"vertex {format_name(v)} {p}" for v, p in _labeling_pairs(res.labeling)]
        return Outcome(OK, lines, _model_json(res.model), _labeling_pairs(res.labeling))
    if args.proper:
        if not is_pca(s):
            raise CliError("graph is not PCA, so it has no proper arc model")
        res = proper_arc_model_pca(s)
        model, labeling = res.model, res.labeling
    else:
        try:
            res = canonical_arc_model(s)
            model, labeling = res.model, res.labeling
        except NotInClass:
            if not is_interval_graph(s):
                raise
            model, labeling = interval_graph_model(s), None
    return Outcome(OK, _model_lines(model, True), _model_json(model), _labeling_pairs(labeling) if labeling else None)


def cmd_iso(args) -> Outcome:
    a, b = _load_graph(args.file_a), _load_graph(args.file_b)
    res = isomorphic(a, b, args.cls)
    if not res:
        return Outcome(NEGATIVE, ["NOT-ISOMORPHIC"], False)
    pairs = [[v, res.mapping[v]] for v in a.vertices]
    lines = ["ISOMORPHIC"] + [f"{format_name(v)} {format_name(w)}" for v, w in pairs]
    return Outcome(OK, lines, True, pairs)


_SSP = {
    None: ssp_ca,
    "ProperInterval": ssp_proper_interval,
    "PCA": ssp_ca,
    "TCA": ssp_ca,
    "CoConvex": ssp_coconvex,
}


def cmd_ssp(args) -> Outcome:
    h = _load_hypergraph(args.file)
    if args.cls not in _SSP:
        raise CliError(f"ssp supports --class {', '.join(k for k in _SSP if k)}")
    try:
        g = _SSP[args.cls](h)
        if args.cls == "PCA" and not is_pca(g):
            raise NoSolution("solution is not PCA")
    except NoSolution:
        return Outcome(NEGATIVE, ["NO-SOLUTION"], None)
    text = emit_graph(g).rstrip("\n").split("\n")
    return Outcome(OK, text, [[u, v] for u, v in g.edges()])


def _cmd_ones(finder):
    def run(args) -> Outcome:
        m = parse_matrix(_read(args.file))
        perm = finder(m)
        if perm is None:
            return Outcome(NEGATIVE, ["NO"], None)
        return Outcome(OK, [" ".join(map(str, perm))], perm)

    return run


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object {status, result, labeling}")
    p = argparse.ArgumentParser(prog="arcanon", description="Canonical arc and interval models of hypergraphs and graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    tags = [t.value for t in ClassTag if t is not ClassTag.None_]

    s = sub.add_parser("recognize", parents=[common], help="list the graph classes a graph belongs to")
    s.add_argument("file")
    s.set_defaults(run=cmd_recognize)

    s = sub.add_parser("canon", parents=[common], help="canonical form and labeling")
    s.add_argument("--kind", choices=["hypergraph", "graph"])
    s.add_argument("--class", dest="cls", choices=tags)
    s.add_argument("file")
    s.set_defaults(run=cmd_canon)

    s = sub.add_parser("model", parents=[common], help="canonical arc or interval model")
    s.add_argument("--proper", action="store_true")
    s.add_argument("file")
    s.set_defaults(run=cmd_model)

    s = sub.add_parser("iso", parents=[common], help="isomorphism test by canonical forms")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--class", dest="cls", choices=tags)
    s.set_defaults(run=cmd_iso)

    s = sub.add_parser("ssp", parents=[common], help="find G with N[G] equal to the given hypergraph")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", choices=[k for k in _SSP if k])
    s.set_defaults(run=cmd_ssp)

    s = sub.add_parser("circ-ones", parents=[common], help="circular-ones column permutation")
    s.add_argument("file")
    s.set_defaults(run=_cmd_ones(circular_ones))

    s = sub.add_parser("cons-ones", parents=[common], help="consecutive-ones column permutation")
    s.add_argument("file")
    s.set_defaults(run=_cmd_ones(consecutive_ones))
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.run(args)
    except (CliError, ParseError, ArcanonError, ValueError) as exc:
        if args.json:
            print(json.dumps({"status": "error", "result": str(exc), "labeling": None}, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return ERROR
    if args.json:
        status = "ok" if out.code == OK else "negative"
        print(json.dumps({"status": status, "result": out.result, "labeling": out.labeling}, sort_keys=True))
    else:
        for line in out.lines:
            print(line)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
