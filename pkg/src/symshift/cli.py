"""Command-line front end: ``symshift <subcommand> ...``.

Exit codes: 0 ok, 1 usage or input error, 2 verification failure,
3 budget exceeded (a partial report is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decomp, differential, invariants, oracle, polymatroid, symideal as si, toric
from . import partitions as pt
from ._config import BudgetExceeded, NotEquigenerated, NotShifted, NotStronglyShifted, SymshiftError, VerificationError

SCHEMA_VERSION = si.SCHEMA_VERSION


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _parse_lambda(text: str) -> tuple:
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
    except ValueError:
        raise UsageError(f"--lambda expects comma separated integers, got {text!r}")
    return pt.as_partition(parts)


def _load_ideal(path: str) -> si.SymmetricIdeal:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}")
    closure = obj.pop("closure", None) if isinstance(obj, dict) else None
    I = si.SymmetricIdeal.from_json(obj)
    if closure == "sss":
        I = si.sss_closure(I.gens)
    elif closure == "ss":
        I = si.ss_closure(I.gens)
    elif closure is not None:
        raise UsageError("field 'closure' must be 'sss' or 'ss'")
    return I


def _ideal(args, which: str = "") -> si.SymmetricIdeal:
    lam = getattr(args, f"{which}lambda_", None)
    path = getattr(args, f"{which}ideal", None)
    if (lam is None) == (path is None):
        pre = which.replace("_", "-")
        raise UsageError(f"give exactly one of --{pre}lambda or --{pre}ideal")
    if lam is not None:
        return si.sss_closure([_parse_lambda(lam)])
    return _load_ideal(path)


def _add_input(p, prefix: str = ""):
    p.add_argument(f"--{prefix}ideal", metavar="FILE", help="JSON {n, generators[, closure]}")
    p.add_argument(f"--{prefix}lambda", dest=f"{prefix.replace('-', '_')}lambda_", metavar="L",
                   help="principal Borel ideal of the partition, e.g. 1,2,2,4,4")


def _ideal_json(I):
    return {"n": I.n, "generators": [list(g) for g in I.gens]}


# -- subcommands -----------------------------------------------------------------


def cmd_check(args) -> tuple:
    I = _ideal(args)
    rep = {
        "ideal": _ideal_json(I),
        "equigenerated": I.is_equigenerated,
        "shifted": I.is_shifted,
        "strongly_shifted": I.is_strongly_shifted,
    }
    if I.is_strongly_shifted:
        rep["borel_generators"] = [list(b) for b in I.borel_generators]
        rep["principal_borel"] = I.is_principal_borel
    lines = [f"shifted: {str(rep['shifted']).lower()}, strongly_shifted: {str(rep['strongly_shifted']).lower()}"]
    if "borel_generators" in rep:
        lines.append("borel generators: " + " ".join(str(tuple(b)) for b in rep["borel_generators"]))
    return rep, lines, 0


_OPS = ("add", "intersect", "multiply", "power", "saturate", "radical", "ass-heights", "symbolic-power", "expand")


def cmd_op(args) -> tuple:
    I = _ideal(args)
    name = args.operation
    if name in ("add", "intersect", "multiply"):
        J = _ideal(args, "other_")
        fn = {"add": si.add, "intersect": si.intersect, "multiply": si.multiply}[name]
        res = fn(I, J)
        ref = lambda: {"add": lambda a, b: a + b, "intersect": oracle.MonomialIdeal.intersect,
                       "multiply": lambda a, b: a * b}[name](si.expand(I), si.expand(J))
    elif name == "power":
        res = si.power(I, args.k)
        ref = lambda: si.expand(I).power(args.k)
    elif name == "saturate":
        res = si.saturate_veronese(I, args.c)
        ref = lambda: si.expand(I).saturate(si.expand(si.SymmetricIdeal.veronese(I.n, args.c)))
    elif name == "radical":
        res = si.radical(I)
        ref = lambda: oracle.MonomialIdeal.of(
            I.n, [tuple(1 if x else 0 for x in g) for g in si.expand(I).gens]
        )
    elif name == "symbolic-power":
        res = si.symbolic_power(I, args.m, args.mode)
        ref = lambda: oracle.symbolic_power(si.expand(I), args.m, args.mode)
    elif name == "ass-heights":
        hs = si.ass_heights(I)
        rep = {"operation": name, "ideal": _ideal_json(I), "heights": hs}
        code = 0
        lines = ["ass heights: " + " ".join(map(str, hs))]
        if args.verify:
            ok = hs == sorted({len(p) for p in oracle.ass(si.expand(I))})
            rep["verify"] = {"oracle_heights": ok}
            lines.append(f"oracle_heights: {'PASS' if ok else 'FAIL'}")
            code = 0 if ok else 2
        return rep, lines, code
    else:  # expand
        E = si.expand(I)
        rep = {"operation": name, "ideal": _ideal_json(I), "monomials": [list(g) for g in E.gens]}
        return rep, [" ".join(map(str, g)) for g in E.gens], 0
    rep = {"operation": name, "ideal": _ideal_json(I), "result": _ideal_json(res)}
    lines = [f"result: {res}"]
    code = 0
    if args.verify:
        ok = si.expand(res) == ref()
        rep["verify"] = {"oracle_equal": ok}
        lines.append(f"oracle_equal: {'PASS' if ok else 'FAIL'}")
        code = 0 if ok else 2
    return rep, lines, code


def cmd_invariants(args) -> tuple:
    I = _ideal(args)
    rep: dict = {"ideal": _ideal_json(I)}
    lines = []
    code = 0
    if I.is_shifted:
        table = invariants.betti(I)
        rep["betti"] = table.to_json()
        rep["pd"] = invariants.proj_dim(I)
        rep["depth"] = invariants.depth_quotient(I)
        lines.append(f"pd(R/I) = {rep['pd']}, depth(R/I) = {rep['depth']}")
        for i in range(table.top_index + 1):
            row = {j: v for (a, j), v in sorted(table.entries.items()) if a == i and v}
            lines.append(f"beta_{i}: " + " ".join(f"{j}:{v}" for j, v in row.items()))
        if args.verify:
            ok = table.numerator() == oracle.hilbert_numerator(si.expand(I))
            rep.setdefault("verify", {})["hilbert_numerator"] = ok
            lines.append(f"hilbert_numerator: {'PASS' if ok else 'FAIL'}")
            code = code or (0 if ok else 2)
    else:
        lines.append("not shifted: Betti formula does not apply")
    if I.is_equigenerated and not I.is_zero:
        sp = invariants.analytic_spread(I)
        rep["analytic_spread"] = sp["value"]
        lines.append(f"analytic spread = {sp['value']}")
        if I.is_strongly_shifted and args.kmax:
            rows = invariants.depth_powers(I, args.kmax)
            rep["depth_powers"] = rows
            rep["stabilization"] = invariants.stab_report(I, args.kmax)
            for r in rows:
                lines.append(f"k={r['k']}: depth {r['depth']}, ass heights {r['ass_heights']}")
            st = rep["stabilization"]
            lines.append(f"astab observed {st['astab_observed']}, dstab observed {st['dstab_observed']}")
    return rep, lines, code


def cmd_decompose(args) -> tuple:
    lam = _parse_lambda(args.lambda_)
    dec = decomp.irredundant_components(lam, args.k)
    rep = dec.to_json()
    kept = ", ".join(f"{j}:{m}" for j, m in dec.kept())
    dropped = [c.j for c in dec.components if c.redundant]
    lines = [f"components {{{kept}}}"]
    if dropped:
        lines.append("redundant heights: " + " ".join(map(str, dropped)))
    code = 0
    if args.verify:
        checks = decomp.verify_decomposition(dec, oracle=True)
        rep["verify"] = checks
        for key, ok in checks.items():
            lines.append(f"{key}: {'PASS' if ok else 'FAIL'}")
        code = 0 if all(checks.values()) else 2
    return rep, lines, code


def cmd_polymatroid(args) -> tuple:
    I = _ideal(args)
    exch = polymatroid.is_polymatroidal(I, record_pairs=False)
    rep: dict = {"ideal": _ideal_json(I), "polymatroidal": exch.polymatroidal}
    if exch.witness:
        u, v, i = exch.witness
        rep["witness"] = {"u": list(u), "v": list(v), "i": i}
    rep["theorem_check"] = polymatroid.verify_thmC(I)
    lines = [f"polymatroidal: {str(exch.polymatroidal).lower()}"]
    if I.is_principal_borel:
        (lam,) = I.borel_generators
        sep = polymatroid.classify_sep(lam)
        tr = polymatroid.transversal_classify(lam)
        rep["sep_type"] = sep["type"]
        rep["transversal"] = tr["transversal"]
        rep["factorization"] = [list(f) for f in polymatroid.veronese_factorization(lam)]
        lines.append(f"sep type: {sep['type']}")
        lines.append(f"transversal: {str(tr['transversal']).lower()} (a = {tr['a']})")
        lines.append("factorization: " + " * ".join(f"I_{{{I.n},{c}}}^{e}" for c, e in rep["factorization"]))
    return rep, lines, 0


def cmd_toric(args) -> tuple:
    I = _ideal(args)
    rep = toric.check_quadratic_generation(I, args.kmax)
    rep = {"ideal": _ideal_json(I), **rep}
    lines = [f"generators: {rep['generators']}, exchange quadrics: {rep['quadrics']}"]
    counts = ", ".join(f"deg{k}={v}" for k, v in sorted(rep["minimal_relation_counts"].items()))
    lines.append(f"new minimal relations: {counts}")
    lines.append(f"generated by quadrics up to degree {rep['generated_by_quadrics_up_to']}")
    if args.quadrics:
        q = toric.exchange_quadrics(I)
        rep["quadric_list"] = [[list(a), list(b)] for a, b in q]
    if args.fiber_type:
        ft = toric.fiber_type_check(I, args.fiber_type[0], args.fiber_type[1])
        rep["fiber_type"] = ft
        lines.append(f"fiber type window certified: {str(ft['certified']).lower()}")
        rep["truncated"] = rep["truncated"] or ft["truncated"]
    if rep["truncated"]:
        lines.append("truncated: fiber budget exceeded, certificate is partial")
    return rep, lines, 3 if rep["truncated"] else 0


def cmd_oracle_verify(args) -> tuple:
    rep = differential.run(args.cases, args.seed, args.nmax, args.dmax)
    lines = []
    for name, t in rep["operations"].items():
        status = "PASS" if t["disagree"] == 0 else "FAIL"
        lines.append(f"{status} {name}: {t['agree']} agree, {t['disagree']} disagree")
    return rep, lines, 2 if rep["failures"] else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    p = _Parser(prog="symshift", description="Symmetric shifted monomial ideals.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="shifted / strongly shifted / Borel generators")
    _add_input(c)
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("op", parents=[common], help="ideal operations on the compressed side")
    o.add_argument("operation", choices=_OPS)
    _add_input(o)
    _add_input(o, "other-")
    o.add_argument("--k", type=int, default=2)
    o.add_argument("--c", type=int, default=1)
    o.add_argument("--m", type=int, default=2)
    o.add_argument("--mode", choices=("min", "ass"), default="min")
    o.add_argument("--verify", "--oracle", action="store_true", help="compare with the expanded oracle")
    o.set_defaults(func=cmd_op)

    i = sub.add_parser("invariants", parents=[common], help="Betti table, pd, analytic spread, depth of powers")
    _add_input(i)
    i.add_argument("--kmax", type=int, default=0, help="depth/ass table for powers up to kmax")
    i.add_argument("--verify", "--oracle", action="store_true")
    i.set_defaults(func=cmd_invariants)

    d = sub.add_parser("decompose", parents=[common], help="irredundant decomposition of a principal Borel power")
    d.add_argument("--lambda", dest="lambda_", required=True, metavar="L")
    d.add_argument("--k", type=int, default=1)
    d.add_argument("--verify", "--oracle", action="store_true")
    d.set_defaults(func=cmd_decompose)

    m = sub.add_parser("polymatroid", parents=[common], help="exchange properties and factorizations")
    _add_input(m)
    m.set_defaults(func=cmd_polymatroid)

    t = sub.add_parser("toric", parents=[common], help="fiber-graph certificates for the toric ring")
    _add_input(t)
    t.add_argument("--kmax", type=int, default=3)
    t.add_argument("--quadrics", action="store_true", help="list the exchange quadrics")
    t.add_argument("--fiber-type", nargs=2, type=int, metavar=("DMAX", "KMAX"))
    t.set_defaults(func=cmd_toric)

    v = sub.add_parser("oracle-verify", parents=[common], help="randomized compressed-vs-oracle comparison")
    v.add_argument("--cases", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--nmax", type=int, default=5)
    v.add_argument("--dmax", type=int, default=8)
    v.set_defaults(func=cmd_oracle_verify)
    return p


def _emit(rep, lines, as_json, out):
    if as_json:
        rep = {"schema_version": SCHEMA_VERSION, **rep}
        out.write(json.dumps(rep, sort_keys=True, default=_jsonable) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _jsonable(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    return str(obj)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    try:
        rep, lines, code = args.func(args)
    except VerificationError as exc:
        _emit({"error": "verification", "message": str(exc)}, [f"verification failure: {exc}"], args.json, out)
        return 2
    except BudgetExceeded as exc:
        _emit({"error": "budget", "message": str(exc), "partial": exc.partial},
              [f"budget exceeded: {exc}"], args.json, out)
        return 3
    except (UsageError, ValueError, NotShifted, NotStronglyShifted, NotEquigenerated, SymshiftError) as exc:
        sys.stderr.write(f"symshift: error: {exc}\n")
        return 1
    _emit(rep, lines, args.json, out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
