"""Command-line front end.

Subcommands cover primality verdicts, non-critical vertex sets, the
critical-set and minimal-set condition reports, minimal-subtree extraction,
family generation, exhaustive enumeration, and the formula-vs-enumeration
count tables.  Exit status: 0 when every requested check passes, 1 when a
check fails (a witness is printed), 2 on usage or input errors.

Output is deterministic: identical invocations produce identical bytes.
With `--format records` each output line is one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import selftest as selftest_suites
from .counting import count_table, is_3_minimal, is_minus2_critical
from .critical import (
    ConditionReport,
    check_noncritical_set,
    classify_critical_family,
    is_k_critical,
    noncritical_vertices,
)
from .enumeration import all_trees, canonical_form
from .families import FAMILY_BUILDERS, FamilyTree, build_family
from .graph import (
    Graph,
    GraphError,
    TreeCert,
    certify_tree,
    format_edge_list,
    read_edge_list,
)
from .minimal import (
    check_minimal_set,
    extract_minimal_subtree,
    is_k_minimal,
    is_minimal_brute_force,
    prime_proper_subgraph_witness,
)
from .modules import (
    BRUTE_FORCE_GUARD,
    find_nontrivial_module,
    is_prime_brute_force,
    tree_is_prime,
    tree_module_witness,
)


@dataclass
class Report:
    """What a command produced: text lines, record objects, exit status."""

    exit_code: int = 0
    lines: list[str] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)
    format: str = "text"

    def add(self, line: str, record: dict | None = None) -> None:
        self.lines.append(line)
        if record is not None:
            self.records.append(record)


# ---------------------------------------------------------------------------
# input helpers


def _load_graph(path: str) -> tuple[Graph, dict[str, str]]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    return read_edge_list(text)


def _load_tree(path: str) -> tuple[TreeCert, dict[str, str]]:
    graph, annotations = _load_graph(path)
    return certify_tree(graph), annotations


def _labels_from_annotations(annotations: dict[str, str]) -> dict[str, int] | None:
    raw = annotations.get("labels")
    if raw is None:
        return None
    labels: dict[str, int] = {}
    for chunk in raw.split():
        name, _, value = chunk.partition("=")
        try:
            labels[name] = int(value)
        except ValueError:
            raise GraphError(f"malformed labels annotation near {chunk!r}") from None
    return labels


def _parse_set(arg: str, labels: dict[str, int] | None, graph: Graph) -> tuple[int, ...]:
    """Comma-separated vertex set; names resolve through the label map when
    the input file carries one, bare integers are internal ids."""
    ids = []
    for token in arg.split(","):
        token = token.strip()
        if not token:
            continue
        if labels and token in labels:
            ids.append(labels[token])
            continue
        try:
            v = int(token)
        except ValueError:
            raise GraphError(f"unknown vertex {token!r} (not a label, not an id)") from None
        graph.check_vertex(v)
        ids.append(v)
    if not ids:
        raise GraphError("empty vertex set")
    return tuple(sorted(set(ids)))


def _display_ids(ids, labels: dict[str, int] | None) -> str:
    if not labels:
        return " ".join(str(v) for v in ids) or "(empty)"
    back = {v: k for k, v in labels.items()}
    return " ".join(f"{back.get(v, '?')}({v})" for v in ids) or "(empty)"


def _label_list(ids, labels: dict[str, int] | None) -> list[str] | None:
    if not labels:
        return None
    back = {v: k for k, v in labels.items()}
    return [back.get(v, "?") for v in ids]


def _family_annotations(family: FamilyTree) -> dict[str, str]:
    annotations = {
        "family": f"{family.tag} {' '.join(map(str, family.params))}",
        "labels": " ".join(f"{name}={idx}" for name, idx in family.labels.items()),
    }
    if tree_is_prime(family.cert):
        sigma = noncritical_vertices(family.cert)
        back = family.id_to_label
        annotations["sigma"] = " ".join(back[v] for v in sigma.vertices)
    return annotations


def _dot_text(graph: Graph, labels: dict[str, int] | None = None) -> str:
    back = {v: k for k, v in (labels or {}).items()}
    lines = ["graph tree {"]
    for v in range(graph.n):
        name = back.get(v)
        if name is not None:
            lines.append(f'  {v} [label="{name}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _condition_lines(report: Report, cond_report: ConditionReport, record: dict) -> None:
    conds = []
    for cond in cond_report.conditions:
        status = "ok" if cond.holds else "FAIL"
        suffix = "" if cond.witness is None else f" [witness: {' '.join(map(str, cond.witness))}]"
        report.lines.append(f"condition {cond.index}: {status} - {cond.note}{suffix}")
        conds.append(
            {
                "index": cond.index,
                "holds": cond.holds,
                "witness": list(cond.witness) if cond.witness is not None else None,
                "note": cond.note,
            }
        )
    record["conditions"] = conds
    record["overall"] = cond_report.overall


# ---------------------------------------------------------------------------
# subcommands


def _cmd_prime(args) -> Report:
    report = Report()
    graph, _ = _load_graph(args.file)
    is_tree = graph.n >= 1 and graph.edge_count == graph.n - 1 and graph.is_connected()
    if is_tree:
        cert = certify_tree(graph)
        verdict = tree_is_prime(cert)
        witness = None if verdict else tree_module_witness(cert)
    else:
        verdict = is_prime_brute_force(graph, args.guard)
        witness = None if verdict else find_nontrivial_module(graph, args.guard)
    rec = {"command": "prime", "n": graph.n, "prime": verdict, "witness": None}
    report.lines.append(f"n: {graph.n}")
    report.lines.append(f"prime: {str(verdict).lower()}")
    if witness is not None:
        rec["witness"] = list(witness.members)
        report.lines.append(f"module witness: {' '.join(map(str, witness.members))}")
    elif not verdict:
        report.lines.append("module witness: none (fewer than 4 vertices)")
    report.records.append(rec)
    report.exit_code = 0 if verdict else 1
    return report


def _cmd_sigma(args) -> Report:
    report = Report()
    graph, annotations = _load_graph(args.file)
    labels = _labels_from_annotations(annotations)
    sigma = noncritical_vertices(graph, args.guard)
    report.lines.append(f"n: {graph.n}")
    report.lines.append(f"sigma: {_display_ids(sigma.vertices, labels)}")
    report.lines.append(f"k: {sigma.k}")
    report.records.append(
        {
            "command": "sigma",
            "n": graph.n,
            "ids": list(sigma.vertices),
            "labels": _label_list(sigma.vertices, labels),
            "k": sigma.k,
        }
    )
    return report


def _cmd_classify_critical(args) -> Report:
    report = Report()
    tree, annotations = _load_tree(args.file)
    labels = _labels_from_annotations(annotations)
    sigma = noncritical_vertices(tree)
    family = classify_critical_family(tree)
    rec = {
        "command": "classify-critical",
        "n": tree.n,
        "k": sigma.k,
        "sigma_ids": list(sigma.vertices),
        "sigma_labels": _label_list(sigma.vertices, labels),
        "family": family.kind,
        "params": list(family.params),
    }
    report.lines.append(f"n: {tree.n}")
    report.lines.append(f"sigma: {_display_ids(sigma.vertices, labels)}")
    report.lines.append(f"k: {sigma.k}")
    report.lines.append(f"family: {family}")
    if family.kind == "Pkt" and family.params[0] == 4:
        report.lines.append(
            "note: single-hub members with a 4-vertex backbone have exactly one "
            "non-critical vertex"
        )
    if tree.n >= 5 and sigma.k >= 1:
        cond_report = check_noncritical_set(tree, sigma.vertices)
        _condition_lines(report, cond_report, rec)
        report.exit_code = 0 if cond_report.overall else 1
    else:
        report.lines.append("conditions: skipped (stated for >= 5 vertices and a nonempty set)")
        rec["conditions"] = None
        rec["overall"] = None
    report.records.append(rec)
    return report


def _cmd_check_minimal(args) -> Report:
    report = Report()
    tree, annotations = _load_tree(args.file)
    labels = _labels_from_annotations(annotations)
    chosen = _parse_set(args.set, labels, tree.graph)
    rec = {
        "command": "check-minimal",
        "n": tree.n,
        "set_ids": list(chosen),
        "set_labels": _label_list(chosen, labels),
    }
    report.lines.append(f"n: {tree.n}")
    report.lines.append(f"set: {_display_ids(chosen, labels)}")
    if tree.n == 4:
        if not tree_is_prime(tree):
            raise GraphError("minimality is defined for prime trees only")
        minimal = is_minimal_brute_force(tree, chosen)
        report.lines.append("conditions: skipped (4-vertex tree, certified by brute force)")
        rec["conditions"] = None
    else:
        cond_report = check_minimal_set(tree, chosen)
        _condition_lines(report, cond_report, rec)
        minimal = cond_report.overall
    rec["minimal"] = minimal
    rec["brute"] = None
    report.lines.append(f"minimal: {str(minimal).lower()}")
    if args.brute:
        if not tree_is_prime(tree):
            # a decomposable tree is minimal for nothing; the scan presumes prime
            report.lines.append("brute-force: skipped (tree is not prime)")
        else:
            witness = prime_proper_subgraph_witness(tree, chosen, args.guard)
            brute = witness is None
            rec["brute"] = brute
            report.lines.append(f"brute-force: {str(brute).lower()}")
            if witness is not None:
                rec["brute_witness"] = list(witness)
                report.lines.append(
                    f"proper prime subgraph witness: {_display_ids(witness, labels)}"
                )
            if brute != minimal:
                report.lines.append("DISAGREEMENT between conditions and brute force")
                report.exit_code = 1
                report.records.append(rec)
                return report
    report.exit_code = 0 if minimal else 1
    report.records.append(rec)
    return report


def _cmd_extract_minimal(args) -> Report:
    report = Report()
    tree, annotations = _load_tree(args.file)
    labels = _labels_from_annotations(annotations)
    chosen = _parse_set(args.set, labels, tree.graph)
    sub, idmap = extract_minimal_subtree(tree, chosen)
    out_annotations = {
        "command": f"extract-minimal --set {args.set}",
        "vertices": " ".join(str(v) for v in idmap),
    }
    if labels:
        back = {v: k for k, v in labels.items()}
        sub_labels = {back[orig]: new for new, orig in enumerate(idmap) if orig in back}
        out_annotations["labels"] = " ".join(
            f"{name}={idx}" for name, idx in sub_labels.items()
        )
    body = _dot_text(sub.graph) if args.dot else format_edge_list(sub.graph, out_annotations)
    report.lines.extend(body.rstrip("\n").split("\n"))
    report.records.append(
        {
            "command": "extract-minimal",
            "n": sub.n,
            "edges": [list(e) for e in sub.graph.edges()],
            "vertices": list(idmap),
            "set_ids": list(chosen),
        }
    )
    return report


def _cmd_gen(args) -> Report:
    report = Report()
    family = build_family(args.family, args.params)
    annotations = _family_annotations(family)
    body = (
        _dot_text(family.cert.graph, family.labels)
        if args.dot
        else format_edge_list(family.cert.graph, annotations)
    )
    report.lines.extend(body.rstrip("\n").split("\n"))
    report.records.append(
        {
            "command": "gen",
            "family": family.tag,
            "params": list(family.params),
            "n": family.cert.n,
            "edges": [list(e) for e in family.cert.graph.edges()],
            "labels": dict(family.labels),
            "sigma": annotations.get("sigma", "").split() if "sigma" in annotations else None,
        }
    )
    return report


def _parse_predicate(expr: str | None):
    if expr is None:
        return None
    if expr == "prime":
        return lambda tree: tree_is_prime(tree)
    name, _, value = expr.partition("=")
    if name == "critical" and value:
        k = int(value)
        return lambda tree: tree_is_prime(tree) and is_k_critical(tree, k)
    if name == "minimal" and value:
        k = int(value)
        return lambda tree: is_k_minimal(tree, k)
    raise GraphError(
        f"unknown predicate {expr!r}; use prime, critical=K, or minimal=K"
    )


def _cmd_enumerate(args) -> Report:
    report = Report()
    predicate = _parse_predicate(args.predicate)
    for tree in all_trees(args.n):
        if predicate is not None and not predicate(tree):
            continue
        code = canonical_form(tree).hex()
        edges = tree.graph.edges()
        parts = [code, str(tree.n)] + [f"{u}-{v}" for u, v in edges]
        report.add(
            " ".join(parts),
            {
                "command": "enumerate",
                "code": code,
                "n": tree.n,
                "edges": [list(e) for e in edges],
            },
        )
    return report


def _cmd_count(args) -> Report:
    report = Report()
    table = count_table(args.what, args.nmax, verify=args.verify)
    report.lines.append(f"what: {args.what}")
    columns = ["n", "formula"] + (["enumerated", "agree"] if args.verify else [])
    cells = []
    for row in table.rows:
        cell = [str(row.n), str(row.formula)]
        if args.verify:
            cell += [str(row.enumerated), "yes" if row.agree else "NO"]
        cells.append(cell)
    widths = [
        max(len(name), *(len(cell[i]) for cell in cells)) if cells else len(name)
        for i, name in enumerate(columns)
    ]
    report.lines.append("  ".join(name.rjust(w) for name, w in zip(columns, widths)))
    for cell in cells:
        report.lines.append("  ".join(value.rjust(w) for value, w in zip(cell, widths)))
    for row in table.rows:
        report.records.append(
            {
                "command": "count",
                "what": args.what,
                "n": row.n,
                "formula": row.formula,
                "enumerated": row.enumerated,
                "agree": row.agree,
            }
        )
    if args.verify:
        if args.what == "critical2":
            report.lines.append(
                "note: single-hub trees with a 4-vertex backbone are counted under "
                "k=1 (one non-critical vertex), not here"
            )
        if table.all_agree:
            report.lines.append("all rows agree")
        else:
            report.lines.append("DISAGREEMENT; witness trees follow")
            predicate = is_minus2_critical if args.what == "critical2" else is_3_minimal
            for row in table.disagreements():
                for tree in all_trees(row.n):
                    if predicate(tree):
                        family = classify_critical_family(tree)
                        edges = " ".join(f"{u}-{v}" for u, v in tree.graph.edges())
                        report.lines.append(
                            f"witness n={row.n} family={family} edges: {edges}"
                        )
            report.exit_code = 1
    return report


def _cmd_selftest(args) -> Report:
    report = Report()
    results = selftest_suites.run_suites(full=args.full, seed=args.seed)
    failed = 0
    for result in results:
        status = "PASS" if result.ok else "FAIL"
        report.add(
            f"{status} {result.name}: {result.detail}",
            {
                "command": "selftest",
                "suite": result.name,
                "ok": result.ok,
                "detail": result.detail,
            },
        )
        if not result.ok:
            failed += 1
    report.lines.append(
        f"{len(results) - failed}/{len(results)} suites passed"
        + (" (full ranges)" if args.full else " (quick ranges)")
    )
    report.exit_code = 0 if failed == 0 else 1
    return report


# ---------------------------------------------------------------------------
# parser and entry points


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primetrees",
        description="Prime trees under modular decomposition: checks, families, counts.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "records"),
        default="text",
        help="text lines (default) or one JSON object per line",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prime", parents=[common], help="primality verdict with a module witness")
    p.add_argument("file")
    p.add_argument("--guard", type=int, default=BRUTE_FORCE_GUARD)

    p = sub.add_parser("sigma", parents=[common], help="non-critical vertices of a prime graph")
    p.add_argument("file")
    p.add_argument("--guard", type=int, default=BRUTE_FORCE_GUARD)

    p = sub.add_parser("classify-critical", parents=[common], help="condition report and family tag")
    p.add_argument("file")

    p = sub.add_parser("check-minimal", parents=[common], help="minimality conditions for a vertex set")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma-separated labels or ids")
    p.add_argument("--brute", action="store_true", help="confirm by definitional scan")
    p.add_argument("--guard", type=int, default=16)

    p = sub.add_parser("extract-minimal", parents=[common], help="greedy minimal subtree for a vertex set")
    p.add_argument("file")
    p.add_argument("--set", required=True)
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("gen", parents=[common], help="emit a named family member as an edge list")
    p.add_argument("--family", required=True, choices=sorted(FAMILY_BUILDERS))
    p.add_argument("--params", required=True, type=int, nargs="+")
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("enumerate", parents=[common], help="all unlabeled trees on n vertices")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--predicate", help="prime, critical=K, or minimal=K")

    p = sub.add_parser("count", parents=[common], help="formula table, optionally verified by enumeration")
    p.add_argument("--what", required=True, choices=("critical2", "minimal3"))
    p.add_argument("--nmax", required=True, type=int)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suites")
    p.add_argument("--full", action="store_true", help="full ranges (slower)")
    p.add_argument("--seed", type=int, default=20240901)
    return parser


_COMMANDS = {
    "prime": _cmd_prime,
    "sigma": _cmd_sigma,
    "classify-critical": _cmd_classify_critical,
    "check-minimal": _cmd_check_minimal,
    "extract-minimal": _cmd_extract_minimal,
    "gen": _cmd_gen,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "selftest": _cmd_selftest,
}


def run(argv: list[str]) -> Report:
    """Parse and execute; never raises for bad input, returns exit code 2."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return Report(exit_code=2 if code != 0 else 0)
    try:
        report = _COMMANDS[args.command](args)
    except ValueError as exc:  # GraphError included: bad input, not a bug
        return Report(
            exit_code=2,
            lines=[f"error: {exc}"],
            records=[{"error": str(exc)}],
            format=args.format,
        )
    report.format = args.format
    return report


def render(report: Report) -> str:
    """The exact bytes `main` would print, for tests and embedding."""
    if report.format == "records":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in report.records)
    return "".join(line + "\n" for line in report.lines)


def main() -> None:
    report = run(sys.argv[1:])
    sys.stdout.write(render(report))
    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()
