"""Command-line interface.

Exit status: 0 success, 2 usage error, 3 domain error, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .boundary_graph import build_graph, connected_components, isolation_report
from .connector import arrange, arrangement_surface, case_formula, connector_surface
from .degeneration import collar_bound
from .errors import InadmissibleMPlus, PGonalError
from .monodromy import admissible_mplus_set, branch_count, genus_of
from .oracle import TUPLE_GUARD, verify
from .report import Report, fmt_float, graph_to_dot
from .residue import prime_value
from .strata import classify_r4_type, enumerate_strata, trigonal_mplus_values

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4

# the genus-4 names of the three 5-gonal pieces differ from the general labels
P5_ALIASES = {"P(1)": "P_1", "P(2)": "P_2", "P(4)": "P_3"}


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__("oracle mismatch")
        self.report = report


def _stratum_json(s, with_type=True):
    out = {"canonical": list(s.canonical), "key": s.key, "genus": s.genus}
    if with_type and s.r == 4:
        tag = classify_r4_type(s)
        out["type"] = tag.type
        out["type_params"] = list(tag.params)
        out["tag"] = str(tag)
    if s.p == 3:
        out["mplus"] = sorted(trigonal_mplus_values(s))
    return out


def _point_json(b):
    return {"pieces": list(b.pieces), "label": str(b), "multiplicity": b.multiplicity, "key": b.key}


def _check(p, r) -> bool:
    if (p - 1) ** r > TUPLE_GUARD:
        return False
    result = verify(p, r)
    if not result["ok"]:
        raise VerificationFailed(result)
    return True


def cmd_strata(args) -> Report:
    p = prime_value(args.p)
    r = args.r if args.r is not None else branch_count(p, args.genus)
    strata = enumerate_strata(p, r, threads=args.threads)
    results = {
        "p": p,
        "r": r,
        "genus": genus_of(p, r),
        "count": len(strata),
        "classes": [_stratum_json(s) for s in strata],
    }
    if p == 3 and r >= 4:
        results["admissible_mplus"] = sorted(admissible_mplus_set(r - 2))
    params = {"p": p, "r": args.r, "genus": args.genus}
    return Report("strata", params, results, __version__, args.check and _check(p, r))


def _boundary_results(graph):
    tables = []
    for s in graph.strata:
        row = _stratum_json(s)
        row["boundary"] = [_point_json(b) for b in sorted(graph.incidence[s])]
        tables.append(row)
    shared = [
        {"point": _point_json(b), "strata": [s.key for s in graph.strata_at(b)]}
        for b in graph.points
        if len(graph.strata_at(b)) > 1
    ]
    results = {
        "p": graph.p,
        "genus": graph.p - 1,
        "strata": tables,
        "components": [[s.key for s in comp] for comp in connected_components(graph)],
        "shared_points": shared,
    }
    if graph.p == 5:
        results["aliases"] = P5_ALIASES
    return results


def _require_p5(p):
    p = prime_value(p)
    if p < 5:
        raise PGonalError(f"boundary graphs need p >= 5, got {p}")
    return p


def cmd_boundary(args) -> Report:
    p = _require_p5(args.p)
    graph = build_graph(p)
    return Report("boundary", {"p": p}, _boundary_results(graph), __version__, args.check and _check(p, 4))


def cmd_graph(args):
    p = _require_p5(args.p)
    graph = build_graph(p)
    if args.format == "dot":
        tags = {s: str(classify_r4_type(s)) for s in graph.strata}
        return graph_to_dot(graph, tags)
    results = _boundary_results(graph)
    results["nodes"] = [s.key for s in graph.strata] + [b.key for b in graph.points]
    results["edges"] = [[s.key, b.key] for s in graph.strata for b in sorted(graph.incidence[s])]
    results["isolation"] = _isolation_rows(isolation_report(p, graph))
    return Report("graph", {"p": p, "format": "json"}, results, __version__, args.check and _check(p, 4))


def cmd_connector(args) -> Report:
    g = args.genus
    conn = connector_surface(g)
    s = conn.surface
    results = {
        "genus": g,
        "r": g + 2,
        "chain": conn.chain,
        "formula": conn.formula,
        "template": conn.template,
        "case_formula": case_formula(g + 2),
        "matches_case_formula": conn.formula == case_formula(g + 2),
        "arithmetic_genus": s.arithmetic_genus,
        "components": [{"label": c.name, "genus": c.genus, "cusps": c.cusps} for c in s.components],
        "multiplicities": list(s.multiplicities),
        "mplus_values": sorted(conn.per_k),
        "identical_for_all_mplus": True,
    }
    if args.mplus is not None:
        if args.mplus not in admissible_mplus_set(g):
            raise InadmissibleMPlus(
                f"m_plus = {args.mplus} is not admissible for genus {g}: {sorted(admissible_mplus_set(g))}"
            )
        arr = arrange(g, args.mplus)
        results["derivation"] = {
            "mplus": arr.counts.m_plus,
            "mminus": arr.counts.m_minus,
            "ordering": list(arr.ordering),
            "triple_count": arr.triple_count,
            "leftover": arr.leftover.name,
            "chain": arrangement_surface(arr).chain_string(),
        }
    return Report("connector", {"genus": g, "mplus": args.mplus}, results, __version__)


def _isolation_rows(entries):
    rows = []
    for e in entries:
        rows.append(
            {
                "stratum": e.stratum.key,
                "canonical": list(e.stratum.canonical),
                "type": e.tag.type,
                "tag": str(e.tag),
                "isolated": e.isolated,
                "overlaps": [
                    {"stratum": o.key, "shared": [str(b) for b in sorted(pts)]}
                    for o, pts in sorted(e.overlaps.items())
                ],
                "stabilizers": [
                    {"pair": list(pair), "stabilizer": [list(x) for x in sorted(stab)]}
                    for pair, stab in sorted(e.stabilizers.items())
                ],
                "symmetric_pieces": [list(x) for x in e.symmetric_pieces],
            }
        )
    return rows


def cmd_isolation(args) -> Report:
    p = _require_p5(args.p)
    entries = isolation_report(p)
    t5 = [e for e in entries if e.tag.type == "T5"]
    results = {
        "p": p,
        "genus": p - 1,
        "entries": _isolation_rows(entries),
        "type5_count": len(t5),
        "type5_all_isolated": all(e.isolated for e in t5),
        "type5_trivial_stabilizers": all(not e.symmetric_pieces for e in t5),
    }
    return Report("isolation", {"p": p}, results, __version__, args.check and _check(p, 4))


def cmd_collar(args) -> Report:
    return Report("collar", {"order": args.order}, {"order": args.order, "bound": fmt_float(collar_bound(args.order))}, __version__)


def cmd_verify(args) -> Report:
    result = verify(args.p, args.r)
    report = Report("verify", {"p": args.p, "r": args.r}, result, __version__, result["ok"])
    if not result["ok"]:
        raise VerificationFailed(report)
    return report


def render_text(report: Report) -> str:
    res, cmd = report.results, report.command
    lines = []
    if cmd == "strata":
        lines.append(f"p={res['p']} r={res['r']} genus={res['genus']}: {res['count']} strata")
        for c in res["classes"]:
            extra = f"  {c['tag']}" if "tag" in c else ""
            if "mplus" in c:
                extra += f"  m+ in {c['mplus']}"
            lines.append("  (" + ",".join(map(str, c["canonical"])) + ")" + extra)
        if "admissible_mplus" in res:
            lines.append(f"I = {{{', '.join(map(str, res['admissible_mplus']))}}}")
    elif cmd in ("boundary", "graph"):
        for row in res["strata"]:
            pts = ", ".join(b["label"] for b in row["boundary"])
            lines.append(f"({','.join(map(str, row['canonical']))}) {row['tag']}: {{{pts}}}")
        lines.append("components: " + " | ".join("{" + ", ".join(c) + "}" for c in res["components"]))
    elif cmd == "connector":
        ks = ",".join(map(str, res["mplus_values"]))
        lines.append(f"{res['chain']}; arithmetic genus {res['arithmetic_genus']}; identical for m+ in {{{ks}}}")
        if "derivation" in res:
            d = res["derivation"]
            lines.append(f"m+={d['mplus']}: ordering {d['ordering']} T={d['triple_count']} {d['leftover']}")
    elif cmd == "isolation":
        for e in res["entries"]:
            flag = "isolated" if e["isolated"] else "meets " + ", ".join(o["stratum"] for o in e["overlaps"])
            lines.append(f"({','.join(map(str, e['canonical']))}) {e['tag']}: {flag}")
    elif cmd == "collar":
        lines.append(f"{res['bound']:.12g}")
    elif cmd == "verify":
        lines.append(f"p={res['p']} r={res['r']}: {'ok' if res['ok'] else 'MISMATCH'}")
        lines.extend(res["strata_mismatches"] + res["pclass_mismatches"])
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pgonal", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=None, help="worker processes for enumeration (default: all cores)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "text")):
        sp.add_argument("--out", help="write output to FILE instead of stdout")
        sp.add_argument("--format", choices=formats, default=formats[0])

    sp = sub.add_parser("strata", help="enumerate equisymmetric strata")
    sp.add_argument("--p", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--r", type=int)
    group.add_argument("--genus", type=int)
    sp.add_argument("--check", action="store_true", help="cross-check against the brute-force oracle")
    common(sp)
    sp.set_defaults(func=cmd_strata)

    sp = sub.add_parser("boundary", help="boundary points of the r = 4 strata")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--check", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_boundary)

    sp = sub.add_parser("graph", help="strata/boundary incidence graph")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--check", action="store_true")
    common(sp, formats=("dot", "json"))
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("connector", help="trigonal connector surface")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--mplus", type=int)
    common(sp)
    sp.set_defaults(func=cmd_connector)

    sp = sub.add_parser("isolation", help="isolation report for r = 4 strata")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--check", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_isolation)

    sp = sub.add_parser("collar", help="collar lower bound for an automorphism order")
    sp.add_argument("--order", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_collar)

    sp = sub.add_parser("verify", help="compare engine with brute-force orbit enumeration")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return parser


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    try:
        result = args.func(args)
    except VerificationFailed as exc:
        result, status = exc.report, EXIT_MISMATCH
        if not isinstance(result, Report):
            result = Report(args.command, vars_params(args), result, __version__, False)
    except PGonalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if isinstance(result, str):
        text = result
    elif args.format == "text":
        text = render_text(result)
    else:
        text = result.to_json()
    _emit(text, args.out)
    return status


def vars_params(args) -> dict:
    skip = {"func", "command", "out", "format", "threads"}
    return {k: v for k, v in vars(args).items() if k not in skip}


if __name__ == "__main__":
    sys.exit(main())
