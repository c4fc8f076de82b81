"""Command-line front end: batch relation verification and products.

Subcommands
    verify-quiver   the (H1)-(H3) families for the shifted quiver generators
    verify-disk     (R1)-(R3) plus the cyclic ladders for one marked disk
    verify-skein    interior/boundary/local skein identities
    multiply        evaluate a product of generators in the Hall algebra
    presentation    emit (and verify, when possible) a surface presentation

Exit codes: 0 all checks pass, 1 at least one identity failed,
2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .freealg import Generator, NCPolynomial, iterated_bracket, q_bracket, zab, zgen
from .hall import simples_assignment
from .presentation import (cyclic_family, minimal_disk_relations, naive_presentation,
                           psi_map, quiver_relations, s_relations, shared_algebra,
                           verify_relation_set)
from .scalar import V, is_prime_power
from .surface import (FoliationData, GradedChord, MarkedDisk, boundary_skein,
                      crossing, load_config, self_skein, skein_commutator,
                      standard_form)


class UsageError(Exception):
    pass


def _parse_window(text: str):
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not m:
        raise UsageError(f"bad shift window {text!r}; expected lo..hi")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError(f"bad shift window {text!r}: {lo} > {hi}")
    return lo, hi


def _parse_qs(text: str):
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            q = int(part)
        except ValueError:
            raise UsageError(f"bad q value {part!r}")
        if q < 2 or not is_prime_power(q):
            raise UsageError(f"q = {q} is not a prime power >= 2")
        out.append(q)
    return out


def _parse_ints(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad integer list {text!r}")


def _emit(payload: dict, fmt: str, out_path):
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    else:
        lines = [f"{payload['command']}: {payload['status']}"]
        for rep in payload.get("reports", []):
            lines.append(f"  [{rep['name']}] {rep['total'] - rep['failed']}/"
                         f"{rep['total']} passed (q={','.join(map(str, rep['q']))})")
            for row in rep["results"]:
                if not row["passed"]:
                    lines.append(f"    FAIL q={row['q']} {row['label']}: "
                                 f"diff = {row['diff']}")
        for extra in payload.get("lines", []):
            lines.append(f"  {extra}")
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _finish(payload, args):
    _emit(payload, args.format, args.out)
    return 0 if payload["status"] == "pass" else 1


def _report_payload(command: str, reports):
    status = "pass" if all(r["passed"] for r in reports) else "fail"
    return {"schema": 1, "command": command, "status": status, "reports": reports}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_verify_quiver(args) -> int:
    if args.m < 2:
        raise UsageError(f"need m >= 2 for the quiver suite, got m = {args.m}")
    rs = quiver_relations(args.m, args.shifts)
    rep = verify_relation_set(rs, args.q, jobs=args.jobs)
    return _finish(_report_payload("verify-quiver", [rep]), args)


def cmd_verify_disk(args) -> int:
    if args.h is None:
        raise UsageError("verify-disk requires --h")
    if len(args.h) != args.m or sum(args.h) != args.m - 2:
        raise UsageError(
            f"foliation data must have m = {args.m} entries with sum m - 2 = "
            f"{args.m - 2}; got {list(args.h)} (sum {sum(args.h)})")
    disk = MarkedDisk(FoliationData(args.m, args.h))
    reports = [verify_relation_set(minimal_disk_relations(disk, args.shifts),
                                   args.q, jobs=args.jobs)]
    for i in range(1, args.m + 1):
        reports.append(verify_relation_set(cyclic_family(disk, i), args.q,
                                           jobs=args.jobs))
    return _finish(_report_payload("verify-disk", reports), args)


def _local_skein_relations(window=(-2, 3)):
    """The two-bracket commutator on the standard 4-gon, all suspensions.

    With X = [E_{2,1}, E_{1,h(1)}]_v and Y = [E_{3,1-h(2)}, E_{2,0}]_v,
    the commutator [X, s^l Y]_1 picks out exactly the l = 0 and l = 1
    resolutions.
    """
    from .freealg import Relation, egen
    disk = standard_form()
    h = disk.foliation
    X = q_bracket(egen(2, 1), egen(1, h.at(1)), V)
    Y = q_bracket(egen(3, 1 - h.at(2)), egen(2, 0), V)
    coeff = V - V ** -1
    rels = []
    for l in range(window[0], window[1] + 1):
        if l == 1:
            rhs = (egen(2, 1) * egen(4, h.at(4) + h.at(1))).scale(coeff)
        elif l == 0:
            rhs = -(egen(1, h.at(1)) * egen(3, 1 - h.at(2))).scale(coeff)
        else:
            rhs = NCPolynomial.zero()
        rels.append(Relation(f"local skein l={l}",
                             q_bracket(X, Y.suspend(l), 1), rhs))
    from .presentation import RelationSet, _used_generators
    return RelationSet("local skein (standard form)", _used_generators(rels),
                       tuple(rels), oracle_m=4, expand=psi_map(disk))


def _chord_skein_set(m: int, window=(-2, 3)):
    from .presentation import RelationSet, _used_generators
    rels = []
    seen = set()
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            for c in range(b + 1, m + 1):
                for d in range(c + 1, m + 1):
                    for k in range(window[0], window[1] + 1):
                        r = skein_commutator(GradedChord(a, c, k), GradedChord(b, d, 0))
                        rels.append(r)
    # boundary pairs on one shared interval, shift differences across the window
    chords = [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)]
    for (a, b) in chords:
        for (c, d) in chords:
            x0, y0 = GradedChord(a, b, 0), GradedChord(c, d, 0)
            if crossing(x0, y0) != "shared-endpoint-interval":
                continue
            for k in range(window[0], window[1] + 1):
                r = boundary_skein(GradedChord(a, b, k), y0)
                if r.label in seen:
                    continue
                seen.add(r.label)
                rels.append(r)
    for (a, b) in chords:
        for k in range(window[0], window[1] + 1):
            r = self_skein(GradedChord(a, b, 0), GradedChord(a, b, k))
            if r.label not in seen:
                seen.add(r.label)
                rels.append(r)
    from .freealg import expand_arcs
    return RelationSet(f"chord skein m={m}", _used_generators(rels), tuple(rels),
                       oracle_m=m, expand=lambda g: expand_arcs(
                           NCPolynomial.generator(g), m))


def cmd_verify_skein(args) -> int:
    reports = [verify_relation_set(_local_skein_relations(args.shifts), args.q,
                                   jobs=args.jobs)]
    for m in (4, 5):
        reports.append(verify_relation_set(_chord_skein_set(m, args.shifts),
                                           args.q, jobs=args.jobs))
    return _finish(_report_payload("verify-skein", reports), args)


_GEN_RE = re.compile(r"([A-Za-z]+)\[(?:\((\d+),(\d+)\)|(\d+)),(-?\d+)\]")


def _parse_expr(text: str, m: int) -> NCPolynomial:
    out = NCPolynomial.one()
    toks = [t for t in re.split(r"[\s*]+", text.strip()) if t]
    if not toks:
        raise UsageError("empty expression")
    for tok in toks:
        mm = _GEN_RE.fullmatch(tok)
        if mm:
            fam, a, b, i, n = mm.groups()
            if fam != "z":
                raise UsageError(f"unknown generator family {fam!r}; use z[i,n]")
            if a is not None:
                out = out * zab(int(a), int(b), int(n), m)
            else:
                idx = int(i)
                if not 1 <= idx < m:
                    raise UsageError(f"generator index {idx} out of range 1..{m - 1}")
                out = out * zgen(idx, int(n))
            continue
        try:
            out = out.scale(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse token {tok!r}")
    return out


def cmd_multiply(args) -> int:
    if args.m < 2:
        raise UsageError(f"need m >= 2, got m = {args.m}")
    qs = args.q
    lhs = _parse_expr(args.lhs, args.m)
    rhs = _parse_expr(args.rhs, args.m)
    assign = simples_assignment(args.m)
    lines = []
    terms = []
    for q in qs:
        alg = shared_algebra(args.m, q)
        value = alg.evaluate(lhs * rhs, assign)
        lines.append(f"q={q}: {value}")
        terms.append({"q": q, "value": str(value),
                      "terms": [{"object": str(obj), "coeff": {"a": str(c.a),
                                                               "b": str(c.b), "q": q}}
                                for obj, c in value.sorted_terms()]})
    payload = {"schema": 1, "command": "multiply", "status": "pass",
               "lines": lines, "products": terms}
    _emit(payload, args.format, args.out)
    return 0


def cmd_presentation(args) -> int:
    try:
        with open(args.config) as fh:
            raw = json.load(fh)
    except OSError as ex:
        raise UsageError(f"cannot read config: {ex}")
    except json.JSONDecodeError as ex:
        raise UsageError(f"config is not valid JSON: {ex}")
    try:
        cfg = load_config(raw)
    except ValueError as ex:
        raise UsageError(str(ex))
    rs = naive_presentation(cfg, args.shifts)
    payload = {"schema": 1, "command": "presentation", "status": "pass",
               "presentation": rs.to_dict(), "reports": []}
    if rs.verifiable and not args.emit_only:
        rep = verify_relation_set(rs, args.q, jobs=args.jobs)
        payload["reports"] = [rep]
        if not rep["passed"]:
            payload["status"] = "fail"
    if args.format == "text":
        lines = [f"presentation: {payload['status']}",
                 f"  generators: {len(rs.generators)}  relations: {len(rs.relations)}"
                 f"  verifiable: {rs.verifiable}"]
        lines += [f"  {r}" for r in rs.relations]
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(payload, "json", args.out)
    return 0 if payload["status"] == "pass" else 1


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _add_common(p, with_m=True):
    if with_m:
        p.add_argument("--m", type=int, default=3, help="number of marked intervals")
    p.add_argument("--q", type=str, default="2,3",
                   help="comma-separated prime powers (default 2,3)")
    p.add_argument("--shifts", type=str, default="-2..3",
                   help="shift window lo..hi (default -2..3)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", type=str, default=None, help="write report to a file")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="diskhall",
        description="Exact verification of shifted-generator relation families "
                    "in derived Hall algebras of type-A quivers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-quiver", help="(H1)-(H3) relation suite")
    _add_common(p)
    p.set_defaults(func=cmd_verify_quiver)

    p = sub.add_parser("verify-disk", help="(R1)-(R3) and cyclic ladders")
    _add_common(p)
    p.add_argument("--h", type=str, default=None,
                   help="comma-separated foliation weights (sum m-2)")
    p.set_defaults(func=cmd_verify_disk)

    p = sub.add_parser("verify-skein", help="interior/boundary/local skein suite")
    _add_common(p, with_m=False)
    p.set_defaults(func=cmd_verify_skein)

    p = sub.add_parser("multiply", help="product of two expressions in the Hall algebra")
    p.add_argument("lhs")
    p.add_argument("rhs")
    _add_common(p)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("presentation", help="emit/verify a surface presentation")
    p.add_argument("config", help="surface config JSON file")
    _add_common(p, with_m=False)
    p.add_argument("--emit-only", action="store_true",
                   help="skip oracle verification even when available")
    p.set_defaults(func=cmd_presentation)
    return ap


def _merge_dash_values(argv):
    """Join `--shifts -1..2` style pairs so argparse accepts the value."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--shifts", "--h", "--q") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = ap.parse_args(_merge_dash_values(list(argv)))
    try:
        args.q = _parse_qs(args.q)
        args.shifts = _parse_window(args.shifts)
        if getattr(args, "h", None) is not None:
            args.h = _parse_ints(args.h)
        return args.func(args)
    except UsageError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
