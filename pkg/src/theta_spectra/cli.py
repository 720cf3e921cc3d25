"""Command-line entry point: ``python -m theta_spectra`` or ``theta-spectra``.

Exit codes: 0 on success, 1 when a gating verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from typing import Sequence

from . import __version__
from . import families as fam
from .canonical import canonical_form
from .enumeration import enumerate_bicyclic, iter_bicyclic
from .exactpoly import char_poly_exact
from .graphs import GraphError, SignedCompleteGraph, SimpleGraph, adjacency_matrix, negative_support
from .perturb import local_search_max
from .reports import VerificationReport, report_json, to_plain, write_report
from .spectra import eig_symmetric
from . import verify as V

WORKERS_ENV = "THETA_SPECTRA_WORKERS"


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``a``, ``a:b`` or ``a:b:step``, inclusive at both ends."""
    try:
        parts = [int(p) for p in text.split(":")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if len(parts) == 1:
        return parts
    if len(parts) > 3 or (len(parts) == 3 and parts[2] <= 0):
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    step = parts[2] if len(parts) == 3 else 1
    out = list(range(parts[0], parts[1] + 1, step))
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def parse_seeds(text: str) -> list[int]:
    """A count ``N`` (seeds 0..N-1) or an explicit range ``a:b[:step]``."""
    if ":" in text:
        return parse_range(text)
    try:
        count = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed count {text!r}") from None
    if count < 1:
        raise argparse.ArgumentTypeError("need at least one seed")
    return list(range(count))


def resolve_workers(flag: int | None) -> int:
    if flag is not None:
        n = flag
    elif os.environ.get(WORKERS_ENV):
        try:
            n = int(os.environ[WORKERS_ENV])
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer") from None
    else:
        n = os.cpu_count() or 1
    if n < 1:
        raise UsageError("worker count must be >= 1")
    return n


# -- graph selection ----------------------------------------------------------------

def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="negative part as graph6 (its order is n unless --n is larger)")
    p.add_argument("--family", choices=("theta1", "theta2"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)


def _family_params(args) -> dict:
    if args.n is None:
        raise UsageError("--family needs --n")
    if args.family == "theta1":
        s, t = args.s, args.t
        if s is None and t is None:
            raise UsageError("theta1 needs two of --k, --s, --t")
        if t is None:
            if args.k is None:
                raise UsageError("theta1 needs two of --k, --s, --t")
            t = args.k - 6 - s
        elif s is None:
            if args.k is None:
                raise UsageError("theta1 needs two of --k, --s, --t")
            s = args.k - 6 - t
        elif args.k is not None and args.k != s + t + 6:
            raise UsageError("--k must equal s + t + 6")
        return {"family": "theta1", "n": args.n, "k": s + t + 6, "s": s, "t": t}
    if args.k is None:
        raise UsageError("theta2 needs --k")
    return {"family": "theta2", "n": args.n, "k": args.k}


def _select_graph(args) -> tuple[SignedCompleteGraph, dict]:
    if (args.graph6 is None) == (args.family is None):
        raise UsageError("give exactly one of --graph6 and --family")
    if args.family:
        params = _family_params(args)
        if params["family"] == "theta1":
            return fam.theta1(params["n"], params["s"], params["t"]), params
        return fam.theta2(params["n"], params["k"]), params
    b = SimpleGraph.from_graph6(args.graph6)
    n = args.n if args.n is not None else b.vertex_count
    if n < b.vertex_count:
        raise UsageError(f"--n {n} is smaller than the graph order {b.vertex_count}")
    return SignedCompleteGraph(n, SimpleGraph(n, b.edges)), {"graph6": args.graph6, "n": n}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {out}: {exc.strerror}") from exc


def _dump(obj) -> str:
    return json.dumps(to_plain(obj), indent=2) + "\n"


# -- subcommands ----------------------------------------------------------------------

def cmd_index(args) -> int:
    g, params = _select_graph(args)
    res = eig_symmetric(adjacency_matrix(g))
    _emit(_dump({"graph": params, "k": g.k, "index": float(res.index),
                 "spectrum": [float(x) for x in res.eigenvalues], "residual": float(res.residual)}),
          args.out)
    return 0


def cmd_charpoly(args) -> int:
    g, params = _select_graph(args)
    if args.quotient:
        if args.family is None:
            raise UsageError("--quotient needs --family")
        if params["family"] == "theta1":
            poly = fam.F_poly(params["n"], params["k"], params["s"])
            factor = {"root": -1, "power": params["n"] - 7}
        else:
            poly = fam.P_poly(params["n"], params["k"])
            factor = {"root": -1, "power": params["n"] - 5}
        body = {"graph": params, "quotient": True, "cofactor": factor}
    else:
        poly = char_poly_exact(adjacency_matrix(g).tolist())
        body = {"graph": params, "quotient": False}
    body["order"] = "ascending"
    body["coefficients"] = list(poly.coefficients)
    _emit(_dump(body), args.out)
    return 0


def cmd_family(args) -> int:
    if args.name == "theta1":
        g = fam.theta1(args.n, args.s, args.t)
    else:
        g = fam.theta2(args.n, args.k)
    b = negative_support(g) if args.support else g.negative_edges
    _emit(b.to_graph6().decode("ascii") + "\n", args.out)
    return 0


def cmd_enumerate(args) -> int:
    lines = [c.certificate.decode("ascii") for c in enumerate_bicyclic(args.vertices)]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def cmd_search(args) -> int:
    target = canonical_form(SimpleGraph(args.k - 1, frozenset(fam.theta2_edges(args.k)))).certificate
    runs = []
    hits = Counter()
    for seed in args.seeds:
        res = local_search_max(args.n, args.k, seed, args.max_iters)
        cert = canonical_form(negative_support(res.best)).certificate
        hits[cert] += 1
        runs.append({"seed": seed, "index": res.index, "local_optimum": res.local_optimum,
                     "steps": len(res.trace) - 1, "negative_part": cert, "is_theta2": cert == target,
                     "trace": [[None if m is None else [m.r, m.s, m.t], lam] for m, lam in res.trace]})
    body = {"n": args.n, "k": args.k, "max_iters": args.max_iters, "theta2": target,
            "theta2_frequency": hits[target] / len(runs),
            "optima": [{"negative_part": c, "count": hits[c]} for c in sorted(hits)],
            "runs": runs}
    _emit(_dump(body), args.out)
    return 0


def _pairs(args, default_n) -> list[tuple[int, int]]:
    ks = args.k or [8, 9, 10, 11, 12, 13, 14]
    out = []
    for k in ks:
        ns = args.n if args.n else default_n(k)
        out.extend((n, k) for n in ns if n >= k)
    return sorted(set(out), key=lambda nk: (nk[1], nk[0]))


def _verify_report(args, workers: int) -> VerificationReport:
    suite = args.suite
    region = lambda k: [k + 20]
    if suite == "factorizations":
        pairs = _pairs(args, lambda k: [12, 16, 20, 24, 28, 32, 36])
        grid = [(n, k, s) for n, k in pairs for s in (args.s or range(k - 5)) if 0 <= s <= k - 6]
        return V.verify_factorizations(grid)
    if suite == "identities":
        return V.verify_appendix_identities(_pairs(args, lambda k: [12, 16, 20, 24, 28, 32, 36]))
    if suite == "signs":
        if not args.k:
            args.k = [15, 16, 17, 18]
        return V.verify_appendix_signs(_pairs(args, lambda k: [k + 20, k + 25]))
    if suite in ("ordering", "dominance"):
        if not args.k:
            args.k = [15, 16] if suite == "ordering" else [15, 16, 17, 18]
        fn = V.verify_ordering_lemma if suite == "ordering" else V.verify_theta2_dominates
        return _merge(suite, [fn(n, k) for n, k in _pairs(args, region)])
    if suite == "bounds":
        pairs = _pairs(args, lambda k: [12, 16, 20, 24, 28, 32, 36])
        insts = V.family_instances([(n, k, s) for n, k in pairs for s in range(k - 5)])
        if args.vertices:
            n_embed = args.embed_n or args.vertices + 21
            insts += [V.BoundInstance(f"bicyclic#{i} in K_{n_embed}", SignedCompleteGraph(n_embed, SimpleGraph(n_embed, b.edges)))
                      for i, b in enumerate(iter_bicyclic(args.vertices))]
        return V.verify_bounds(insts)
    # theorem
    if not args.n or not args.k or len(args.n) != 1 or len(args.k) != 1:
        raise UsageError("verify theorem needs a single --n and --k")
    return V.verify_theorem(args.n[0], args.k[0], workers=workers, top=args.top)


def _merge(claim: str, reports: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(claim)
    for r in reports:
        out.points.extend(r.points)
        out.notes.extend(r.notes)
        out.wall_time += r.wall_time
        out.timestamp = out.timestamp or r.timestamp
    return out


def cmd_verify(args) -> int:
    workers = resolve_workers(args.workers)
    rep = _verify_report(args, workers)
    if args.out:
        write_report(rep, args.out, args.csv)
    else:
        if args.csv:
            write_report(VerificationReport(rep.claim, table=rep.table), os.devnull, args.csv)
        sys.stdout.write(report_json(rep, include_meta=not args.no_meta))
    t = rep.totals
    print(f"{rep.claim}: {'PASS' if rep.passed else 'FAIL'} "
          + " ".join(f"{k}={v}" for k, v in t.items()), file=sys.stderr)
    return 0 if rep.passed else 1


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="theta-spectra",
                                 description="Index of signed complete graphs with bicyclic negative part.")
    ap.add_argument("--version", action="version", version=f"theta-spectra {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="largest eigenvalue and spectrum as JSON")
    _add_graph_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial as JSON")
    _add_graph_args(p)
    p.add_argument("--quotient", action="store_true", help="only the quotient factor F or P")
    p.add_argument("--out")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("family", help="graph6 of a family's negative part")
    fsub = p.add_subparsers(dest="name", required=True)
    for name in ("theta1", "theta2"):
        q = fsub.add_parser(name)
        q.add_argument("--n", type=int, required=True)
        if name == "theta1":
            q.add_argument("--s", type=int, required=True)
            q.add_argument("--t", type=int, required=True)
        else:
            q.add_argument("--k", type=int, required=True)
        q.add_argument("--support", action="store_true", help="drop vertices outside the negative part")
        q.add_argument("--out")
        q.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="certificates of all connected bicyclic graphs")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="seeded hill climbing over sign swaps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seeds", type=parse_seeds, default=list(range(10)),
                   help="seed count N (seeds 0..N-1) or a range a:b")
    p.add_argument("--max-iters", type=int, default=5000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("factorizations", "identities", "signs", "ordering",
                                     "dominance", "bounds", "theorem"))
    p.add_argument("--n", type=parse_range)
    p.add_argument("--k", type=parse_range)
    p.add_argument("--s", type=parse_range)
    p.add_argument("--vertices", type=int, help="bounds: also check every bicyclic graph on this many vertices")
    p.add_argument("--embed-n", type=int, help="bounds: order of the complete graph for --vertices")
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--workers", type=int)
    p.add_argument("--out", help="JSON report path (default stdout)")
    p.add_argument("--csv", help="CSV path for the theorem ranking")
    p.add_argument("--no-meta", action="store_true", help="omit timing fields from stdout JSON")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"theta-spectra: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"theta-spectra: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
