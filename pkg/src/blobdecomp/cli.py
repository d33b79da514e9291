"""Command-line interface.

    blobdecomp params --l 5 --m 2 --n 13
    blobdecomp walk ++++-+ --l 5 --m 2
    blobdecomp walk --l 5 --m 2 -- -+----     (a leading '-' needs the separator)
    blobdecomp orbit --lambda -19 --l 5 --m 2 --n 19
    blobdecomp dims --lambda -16 --l 5 --m 2 --n 16
    blobdecomp decomp --l 5 --m 2 --n 6 --format csv
    blobdecomp verify --l 5 --m 2 --max-n 13

Exit codes: 0 success, 1 verification or internal failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .alcove import (
    AlcoveSystem,
    classify_weight,
    degree_word,
    m_set,
    orbit,
    render_triangle,
    wall_word_of,
)
from .errors import BlobError, InconsistentData, NotSolvable
from .oracle import enumerate_residue_class, oracle_decomposition_column
from .params import validate_params
from .repdims import Check, cell_dims_subalgebra, decomposition_column, decomposition_matrix, verify_consistency
from .tableaux import (
    Bitableau,
    Walk,
    degree_g,
    degree_walk,
    residue_of_tableau,
    t_lambda_of_weight,
    tableau_of,
    walk_of,
    weights,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _Output:
    def __init__(self, path: str | None):
        self.path = path
        self.parts: list[str] = []

    def write(self, text: str) -> None:
        self.parts.append(text if text.endswith("\n") else text + "\n")

    def flush(self) -> None:
        data = "".join(self.parts)
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(data)
        else:
            sys.stdout.write(data)


def _lambda_arg(args) -> int:
    if args.bipartition is not None:
        a, b = (int(x) for x in args.bipartition.split(","))
        return a - b
    if args.lam is None:
        raise ValueError("one of --lambda or --bipartition is required")
    return args.lam


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_params(args, out: _Output) -> int:
    p = validate_params(args.l, args.m, args.n)
    sys_ = AlcoveSystem.of(p)
    walls = sys_.walls(-p.n, p.n)
    doc = {
        "l": p.l, "m": p.m, "k": p.k, "n": p.n,
        "fundamental_alcove": [sys_.left_wall, sys_.right_wall],
        "walls": walls,
    }
    if args.format == "json":
        out.write(json.dumps(doc, indent=2))
    elif args.format == "csv":
        out.write(_csv([list(doc)[:4] + ["walls"], [p.l, p.m, p.k, p.n, " ".join(map(str, walls))]]))
    elif args.format == "ascii":
        out.write(render_triangle(p))
    else:
        out.write(f"l={p.l} m={p.m} k={p.k} n={p.n}")
        out.write(f"fundamental alcove: ({sys_.left_wall}, {sys_.right_wall})")
        out.write("walls: " + ",".join(map(str, walls)))
    return EXIT_OK


def cmd_walk(args, out: _Output) -> int:
    if args.as_weights:
        t = tableau_of(Walk.parse(args.as_weights))
    elif args.tableau:
        t = Bitableau(args.tableau)
    else:
        raise ValueError("give a sign string or --as-weights")
    p = validate_params(args.l, args.m, t.n)
    w = walk_of(t)
    br = degree_walk(t, p)
    res = residue_of_tableau(t, p)
    doc = {
        "tableau": t.signs,
        "weights": list(w.weights),
        "residues": list(res),
        "A": sorted(br.a_positions),
        "R": sorted(br.r_positions),
        "degree_g": degree_g(t, p),
        "degree_walk": br.degree,
    }
    # a residue sequence of some t^lambda is the residue sequence of at most one of them
    for lam in weights(t.n):
        if residue_of_tableau(t_lambda_of_weight(lam, t.n), p) == res:
            word = wall_word_of(t, lam, p)
            doc["class_of"] = lam
            doc["wall_word"] = word.letters
            doc["final_direction"] = word.final_direction
            doc["degree_word"] = degree_word(word)
            break
    if args.format == "json":
        out.write(json.dumps(doc, indent=2))
        return EXIT_OK
    if args.format == "csv":
        out.write(_csv([list(doc), [" ".join(map(str, v)) if isinstance(v, list) else v for v in doc.values()]]))
        return EXIT_OK
    out.write(render_triangle(p, w))
    if args.format == "ascii":
        return EXIT_OK
    out.write(f"tableau:  {t.signs}  shape {t.shape} (weight {t.weight})")
    out.write(f"weights:  {w}")
    out.write(f"residues: {','.join(map(str, res))}")
    out.write(f"A_t = {doc['A']}  R_t = {doc['R']}")
    out.write(f"degree (addable/removable nodes): {doc['degree_g']}")
    out.write(f"degree (walls, |A|-|R|):          {doc['degree_walk']}")
    if "class_of" in doc:
        word = doc["wall_word"] or "(empty)"
        out.write(f"in the residue class of t^{doc['class_of']}: word {word}, "
                  f"final segment {doc['final_direction'] or 'absent'}")
        out.write(f"degree (wall word):               {doc['degree_word']}")
    else:
        out.write("no t^lambda shares this residue sequence; wall-word degree not applicable")
    return EXIT_OK


def cmd_orbit(args, out: _Output) -> int:
    p = validate_params(args.l, args.m, args.n)
    lam = _lambda_arg(args)
    sys_ = AlcoveSystem.of(p)
    pos = classify_weight(lam, sys_)
    idx = m_set(lam, p)
    orb = orbit(lam, sys_, p.n)
    doc = {
        "lambda": lam,
        "classification": pos.classification.value,
        "side": pos.side,
        "kappa": pos.kappa,
        "orbit": list(orb),
        "m_set": list(idx.entries),
    }
    if args.format == "json":
        out.write(json.dumps(doc, indent=2))
    elif args.format == "csv":
        out.write(_csv([["k", "weight"]] + [[k, w] for k, w in enumerate(idx.entries, 1)]))
    elif args.format == "ascii":
        out.write(render_triangle(p, walk_of(t_lambda_of_weight(lam, p.n))))
    else:
        out.write(f"lambda={lam}: {pos.classification.value}"
                  + (f", {pos.side} side" if pos.side else "") + f", kappa={pos.kappa}")
        out.write("orbit O_n: " + ",".join(map(str, orb)))
        for k, w in enumerate(idx.entries, 1):
            out.write(f"lambda_{k} = {w}")
    return EXIT_OK


def cmd_dims(args, out: _Output) -> int:
    p = validate_params(args.l, args.m, args.n)
    lam = _lambda_arg(args)
    dims = cell_dims_subalgebra(lam, p)
    col = decomposition_column(lam, p)
    rows = [
        {"k": k, "mu": w, "cell": str(dims.cell[w]), "simple": str(dims.simple[w]), "decomp": str(col[w])}
        for k, w in enumerate(dims.index.entries, 1)
    ]
    if args.format == "json":
        out.write(json.dumps({
            "lambda": lam, "kappa": dims.index.kappa,
            "entries": [
                {"k": r["k"], "mu": r["mu"], "cell": dims.cell[r["mu"]].to_pairs(),
                 "simple": dims.simple[r["mu"]].to_pairs(), "decomp": col[r["mu"]].to_pairs()}
                for r in rows
            ],
        }, indent=2))
    elif args.format == "csv":
        out.write(_csv([list(rows[0])] + [list(r.values()) for r in rows]))
    else:
        for r in rows:
            out.write(f"lambda_{r['k']} = {r['mu']}: dim_t Delta = {r['cell']}; "
                      f"dim_t L = {r['simple']}; [Delta:L({lam})] = {r['decomp']}")
    return EXIT_OK


def cmd_decomp(args, out: _Output) -> int:
    p = validate_params(args.l, args.m, args.n)
    matrix = decomposition_matrix(p)
    if args.format == "json":
        out.write(matrix.to_json())
    elif args.format == "csv":
        out.write(matrix.to_csv())
    else:
        ws = matrix.weights
        cells = [[str(matrix.entry(mu, lam)) if matrix.entry(mu, lam) else "." for lam in ws] for mu in ws]
        width = max(len(c) for row in cells for c in row + [str(w) for w in ws])
        out.write("mu\\lam " + " ".join(f"{w:>{width}}" for w in ws))
        for mu, row in zip(ws, cells):
            out.write(f"{mu:>6} " + " ".join(f"{c:>{width}}" for c in row))
    return EXIT_OK


def _verify_one(l: int, m: int, n: int) -> tuple[bool, list[str], int]:
    p = validate_params(l, m, n)
    report = verify_consistency(p)
    recovery = Check("enumeration recovers decomposition columns and M-sets")
    for lam in weights(n):
        if enumerate_residue_class(lam, p).shapes() != frozenset(m_set(lam, p).entries):
            recovery.fail(f"M_{n}({lam}) differs from the class shapes")
        try:
            if oracle_decomposition_column(lam, p) != decomposition_column(lam, p):
                recovery.fail(f"column {lam} differs from the recovered one")
        except NotSolvable as exc:
            recovery.fail(str(exc))
    report.checks.append(recovery)
    return report.passed, report.lines(), len(report.warnings)


def cmd_verify(args, out: _Output) -> int:
    validate_params(args.l, args.m, 1)
    if args.max_n is not None:
        ns = list(range(1, args.max_n + 1))
    elif args.n is not None:
        ns = [args.n]
    else:
        raise ValueError("give --n or --max-n")
    ls, ms = [args.l] * len(ns), [args.m] * len(ns)
    if args.parallel and args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            results = list(pool.map(_verify_one, ls, ms, ns))
    else:
        results = list(map(_verify_one, ls, ms, ns))
    ok = all(r[0] for r in results)
    n_warn = sum(r[2] for r in results)
    if args.format == "json":
        out.write(json.dumps({
            "params": {"l": args.l, "m": args.m, "n": ns},
            "passed": ok, "warnings": n_warn,
            "lines": [line for r in results for line in r[1]],
        }, indent=2))
    else:
        for r in results:
            for line in r[1]:
                if args.verbose or not line.startswith("[ok]"):
                    out.write(line)
        out.write("all checks passed" if ok else "verification FAILED")
        if n_warn:
            out.write(f"{n_warn} warning(s)")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blobdecomp",
        description="Graded dimensions and decomposition numbers for the blob algebra b_n(q, m).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, need_n=True):
        sp.add_argument("--l", type=int, required=True, help="quantum characteristic (odd, >= 3)")
        sp.add_argument("--m", type=int, required=True, help="blob parameter, 2 <= m <= l-2")
        if need_n:
            sp.add_argument("--n", type=int, required=True, help="number of strands")
        sp.add_argument("--format", choices=["pretty", "json", "csv", "ascii"], default="pretty")
        sp.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
        sp.add_argument("--parallel", type=int, default=1, metavar="N")

    def weight_args(sp):
        sp.add_argument("--lambda", dest="lam", type=int, help="weight a-b")
        sp.add_argument("--bipartition", metavar="A,B", help="one-line bipartition ((A),(B))")

    common(sub.add_parser("params", help="validate parameters, list walls"))
    sp = sub.add_parser("walk", help="walk, residues and degree of a bitableau")
    sp.add_argument("tableau", nargs="?", help="sign string such as ++++-+")
    sp.add_argument("--as-weights", metavar="W0,W1,...")
    common(sp, need_n=False)
    sp = sub.add_parser("orbit", help="kappa, orbit and indexed M_n(lambda)")
    common(sp)
    weight_args(sp)
    sp = sub.add_parser("dims", help="truncated cell and simple dimensions")
    common(sp)
    weight_args(sp)
    common(sub.add_parser("decomp", help="full graded decomposition matrix"))
    sp = sub.add_parser("verify", help="consistency checks against brute-force enumeration")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--format", choices=["pretty", "json"], default="pretty")
    sp.add_argument("--out", metavar="PATH")
    sp.add_argument("--parallel", type=int, default=1, metavar="N")
    sp.add_argument("-v", "--verbose", action="store_true")
    return parser


COMMANDS = {
    "params": cmd_params,
    "walk": cmd_walk,
    "orbit": cmd_orbit,
    "dims": cmd_dims,
    "decomp": cmd_decomp,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = _Output(args.out)
    try:
        code = COMMANDS[args.command](args, out)
    except (InconsistentData, NotSolvable) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (BlobError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
