"""Command line front end.

    brimlab analyze <file> [--format text|json|csv] [--t-range a..b] [--nmax K]
    brimlab verify [<file> | --corpus]
    brimlab corpus [name ...]
    brimlab spread <file> --samples N --seed S

Exit codes: 0 success, 1 invariant or expectation violation, 2 input
error, 3 budget exhausted.  Budgets apply per command via
--budget-pairs / --budget-degree.
"""

import argparse
import json
import sys
import time

from . import corpus as corpus_mod
from . import report as report_mod
from .dsl import ParseError, build, parse
from .groebner import Budget
from .multiplicity import SamplingError, StabilizationError, buchsbaum_spread, theorem_check
from .poly import AlgebraError, BudgetExceededError, ContractError
from .verify import check_corpus, corpus_table, verify_instance

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_trange(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError("t range must look like a..b, e.g. -1..2")
    return int(lo), int(hi)


def _merged_options(spec, args):
    """File options with command line flags taking precedence."""
    opts = dict(spec.options)
    if getattr(args, "t_range", None):
        opts["tmin"], opts["tmax"] = _parse_trange(args.t_range)
    if getattr(args, "nmax", None):
        opts["nmax"] = args.nmax
    if getattr(args, "budget_pairs", None):
        opts["pairs"] = args.budget_pairs
    if getattr(args, "budget_degree", None):
        opts["degree"] = args.budget_degree
    if getattr(args, "format", None):
        opts["format"] = args.format
    if getattr(args, "samples", None):
        opts["samples"] = args.samples
    if getattr(args, "seed", None) is not None:
        opts["seed"] = args.seed
    return opts


def _budget(opts):
    return Budget(
        max_pairs=opts.get("pairs", Budget().max_pairs),
        max_degree=opts.get("degree", Budget().max_degree),
    )


def _trange(opts):
    if "tmin" in opts or "tmax" in opts:
        if not ("tmin" in opts and "tmax" in opts):
            raise ContractError("tmin and tmax must be given together")
        return opts["tmin"], opts["tmax"]
    return None


def cmd_analyze(args):
    spec = parse(_read_text(args.file))
    opts = _merged_options(spec, args)
    budget = _budget(opts)
    ring, matrix = build(spec, budget)
    started = time.monotonic()
    rep = theorem_check(matrix, trange=_trange(opts), budget=budget,
                        n_max=opts.get("nmax"))
    elapsed = int((time.monotonic() - started) * 1000)
    doc = report_mod.build_report(rep, elapsed, budget.pairs_used)
    fmt = opts.get("format", "text")
    if fmt == "json":
        sys.stdout.write(report_mod.to_json(doc))
    elif fmt == "csv":
        sys.stdout.write(report_mod.to_csv(doc))
    else:
        sys.stdout.write(report_mod.render_text(doc))
    return EXIT_OK


def _mutator(flip):
    p, row, col = (int(v) for v in flip.split(","))

    def mutate(cx):
        mat = cx.differentials.get(p)
        assert mat is not None and 0 <= row < len(mat) and 0 <= col < len(mat[0])
        mat[row][col] = -mat[row][col]

    return mutate


def cmd_verify(args):
    if args.corpus:
        rows, violations = check_corpus(budget=_budget(_merged_options_bare(args)))
        sys.stdout.write(corpus_table(rows))
    else:
        if not args.file:
            raise ContractError("verify needs a problem file or --corpus")
        spec = parse(_read_text(args.file))
        opts = _merged_options(spec, args)
        budget = _budget(opts)
        ring, matrix = build(spec, budget)
        mutate = _mutator(args.flip_sign) if args.flip_sign else None
        rep, violations = verify_instance(ring, matrix, budget,
                                          trange=_trange(opts),
                                          n_max=opts.get("nmax"),
                                          mutate=mutate)
        checked = sum(1 for v in rep.verdicts.values() if v is not None)
        sys.stdout.write("checked %d verdicts, %d violation(s)\n" % (checked, len(violations)))
    for v in violations:
        sys.stdout.write(str(v) + "\n")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_corpus(args):
    entries = corpus_mod.ENTRIES
    if args.names:
        wanted = set(args.names)
        unknown = wanted - {e.name for e in entries}
        if unknown:
            raise ContractError("unknown corpus entries: %s" % ", ".join(sorted(unknown)))
        entries = tuple(e for e in entries if e.name in wanted)
    rows, violations = check_corpus(entries, budget=_budget(_merged_options_bare(args)))
    sys.stdout.write(corpus_table(rows))
    for v in violations:
        sys.stdout.write(str(v) + "\n")
    return EXIT_VIOLATION if violations else EXIT_OK


def _merged_options_bare(args):
    opts = {}
    if getattr(args, "budget_pairs", None):
        opts["pairs"] = args.budget_pairs
    if getattr(args, "budget_degree", None):
        opts["degree"] = args.budget_degree
    return opts


def cmd_spread(args):
    spec = parse(_read_text(args.file))
    opts = _merged_options(spec, args)
    samples = opts.get("samples")
    if not samples:
        raise ContractError("spread needs --samples (or a samples option)")
    seed = opts.get("seed", 0)
    budget = _budget(opts)
    ring, matrix = build(spec, budget)
    result = buchsbaum_spread(ring, matrix.r, samples, seed,
                              budget=budget, n_max=opts.get("nmax"))
    fmt = opts.get("format", "text")
    if fmt == "json":
        ring_doc = {
            "p": ring.p,
            "vars": list(ring.names),
            "ideal": [str(g) for g in ring.ideal_gens],
            "dim": ring.dimension,
        }
        doc = report_mod.spread_json(result, ring_doc)
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        quot = " / (%s)" % ", ".join(str(g) for g in ring.ideal_gens) if ring.ideal_gens else ""
        line = "F_%d[%s]%s, rank %d" % (ring.p, ", ".join(ring.names), quot, matrix.r)
        sys.stdout.write(report_mod.render_spread_text(result, line))
    return EXIT_OK


def _add_budget_flags(sub):
    sub.add_argument("--budget-pairs", type=int, metavar="N",
                     help="abort Groebner runs after N S-pairs (default %d)" % Budget().max_pairs)
    sub.add_argument("--budget-degree", type=int, metavar="N",
                     help="abort Groebner runs past degree N (default %d)" % Budget().max_degree)


def make_parser():
    ap = argparse.ArgumentParser(
        prog="brimlab",
        description="Buchsbaum-Rim multiplicities and generalized Koszul complexes "
                    "over graded quotient rings, exactly.",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    a = sp.add_parser("analyze", help="full report for one problem file")
    a.add_argument("file", help="problem file, or - for stdin")
    a.add_argument("--format", choices=("text", "json", "csv"))
    a.add_argument("--t-range", metavar="a..b", help="complex family range, e.g. -1..2")
    a.add_argument("--nmax", type=int, metavar="K", help="cap on symmetric powers for the length table")
    _add_budget_flags(a)
    a.set_defaults(func=cmd_analyze)

    v = sp.add_parser("verify", help="assert every theorem-backed invariant")
    v.add_argument("file", nargs="?", help="problem file, or - for stdin")
    v.add_argument("--corpus", action="store_true", help="verify the built-in corpus instead")
    v.add_argument("--t-range", metavar="a..b")
    v.add_argument("--nmax", type=int, metavar="K")
    v.add_argument("--flip-sign", metavar="p,row,col", help=argparse.SUPPRESS)
    _add_budget_flags(v)
    v.set_defaults(func=cmd_verify)

    c = sp.add_parser("corpus", help="analyze the built-in corpus and diff expected values")
    c.add_argument("names", nargs="*", help="restrict to these entries (default: all)")
    _add_budget_flags(c)
    c.set_defaults(func=cmd_corpus)

    s = sp.add_parser("spread", help="sample random parameter modules and report colength - e0")
    s.add_argument("file", help="problem file giving the ring and rank")
    s.add_argument("--samples", type=int, metavar="N")
    s.add_argument("--seed", type=int, metavar="S")
    s.add_argument("--nmax", type=int, metavar="K")
    s.add_argument("--format", choices=("text", "json"))
    _add_budget_flags(s)
    s.set_defaults(func=cmd_spread)
    return ap


def main(argv=None):
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT
    except (ContractError, ValueError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT
    except (BudgetExceededError, StabilizationError, SamplingError) as exc:
        sys.stderr.write("budget exhausted: %s\n" % exc)
        return EXIT_BUDGET
    except AlgebraError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT
    except OSError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
