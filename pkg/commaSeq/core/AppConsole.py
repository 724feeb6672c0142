# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
Console entry point script for commaSeq.
"""

from argparse import ArgumentParser, ArgumentTypeError, RawDescriptionHelpFormatter, SUPPRESS
import itertools
import logging
import signal
import sys
import commaSeq
from commaSeq.core.Utils import SQLiteHandler, excepthook, parseRange
from commaSeq.core.ConfigFiles import ConfigFileLoader
from commaSeq.core.Exceptions import CommaRuntimeError
from commaSeq.core import Base3, Classifier, Kangaroo, Paths, Runner
from commaSeq.core.Numeral import BaseNumber
from commaSeq.core.Stepper import commaParent, commaSuccessor
from commaSeq.core.Transform import commaTransform, isCommaSequence, isCommaSuccessorChain
from commaSeq.services.OeisClient import OeisClient
from commaSeq.services.Output import Output, FORMATS
from commaSeq.services.Recorder import writeRun
from commaSeq.services.Verification import verifyAgainstOeis

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

def _positive(value):
    try:
        res = int(value)
    except ValueError as e:
        raise ArgumentTypeError(f"{value!r} is not an integer") from e
    if res < 1:
        raise ArgumentTypeError(f"{value!r} is not positive")
    return res

def _nonNegative(value):
    try:
        res = int(value)
    except ValueError as e:
        raise ArgumentTypeError(f"{value!r} is not an integer") from e
    if res < 0:
        raise ArgumentTypeError(f"{value!r} is negative")
    return res

def _base(value):
    res = _positive(value)
    if res < 2:
        raise ArgumentTypeError("the base must be >= 2")
    return res

def _range(value):
    try:
        return parseRange(value)
    except ValueError as e:
        raise ArgumentTypeError(str(e)) from e

def _choices(value):
    try:
        return Paths.ChoiceString.parse(value)
    except ValueError as e:
        raise ArgumentTypeError(str(e)) from e

def _termsUpTo(terms, maxTerms, maxValue):
    # the first term >= maxValue is the last one
    for i, n in enumerate(terms):
        if maxTerms is not None and i >= maxTerms:
            return
        yield n
        if maxValue is not None and n >= maxValue:
            return

def _differences(terms):
    terms, nxt = itertools.tee(terms)
    next(nxt, None)
    return (b - a for a, b in zip(terms, nxt))

def _cmdRun(args, settings, out):
    base, start = args.base, args.start
    points = settings["ratioPoints"]
    if args.emit in ("terms", "commas"):
        if base == 2 and args.max_terms is None and args.max_value is None:
            raise CommaRuntimeError("base-2 comma sequences do not terminate; give --max-terms or --max-value")
        terms = _termsUpTo(Runner.iterNaive(start, base), args.max_terms, args.max_value)
        out.stream("term" if args.emit == "terms" else "commaNumber",
                   terms if args.emit == "terms" else _differences(terms))
        return EXIT_OK
    if args.naive:
        if args.max_value is not None:
            raise CommaRuntimeError("--max-value is not supported by the naive runner")
        outcome = Runner.runNaive(start, base, args.max_terms)
    elif args.emit == "stats":
        stats = Runner.runStats(start, base, maxTerms=args.max_terms, maxValue=args.max_value)
        outcome = stats.outcome
    else:
        outcome = Runner.runFast(start, base, maxTerms=args.max_terms, maxValue=args.max_value)
    series = None
    if args.emit == "summary":
        out.summary({"length": outcome.length, "final": outcome.finalTerm})
    elif args.emit == "stats":
        if args.naive:
            stats = Runner.runStats(start, base, maxTerms=outcome.length)
        out.summary({"start": start, "base": base, "status": outcome.status, "length": outcome.length,
                     "final": outcome.finalTerm, "commaSum": outcome.commaSum,
                     "meanCommaNumber": stats.meanCommaNumber, "jumps": stats.jumps,
                     "singleSteps": stats.singleSteps})
    elif args.emit == "ratio-series":
        series = Runner.ratioSeries(start, base, points=points, maxTerms=args.max_terms, maxValue=args.max_value)
        out.table({"n": i, "a": v, "ratio": r} for i, v, r in series)
    elif args.emit == "regions":
        regions = Runner.decomposeRegions(start, base, maxTerms=args.max_terms, maxValue=args.max_value)
        out.table({"leadingDigit": r.leadingDigit, "numDigits": r.numDigits, "firstIndex": r.firstIndex,
                   "lastIndex": r.lastIndex, "firstTerm": r.firstTerm, "lastTerm": r.lastTerm,
                   "commaCount": r.commaCount, "periodSum": r.periodSum, "fullPeriods": r.fullPeriods(base),
                   "remainderSum": r.remainderSum(base)} for r in regions)
    if args.hdf5 is not None:
        if series is None:
            series = Runner.ratioSeries(start, base, points=points, maxTerms=args.max_terms,
                                        maxValue=args.max_value)
        regions = Runner.decomposeRegions(start, base, maxTerms=args.max_terms, maxValue=args.max_value)
        writeRun(args.hdf5, outcome, series, regions, overwrite=args.overwrite)
    return EXIT_OK

def _cmdClassify(args, settings, out): # pylint: disable=unused-argument
    base = args.base
    records = []
    for n in args.n:
        nc = Classifier.classify(n, base)
        succ = commaSuccessor(n, base)
        records.append({"n": n, "digits": str(BaseNumber(n, base)), "children": nc.childCount,
                        "successor": succ, "landmine": nc.isLandmine, "branchPoint": nc.isBranchPoint,
                        "parent": commaParent(n, base), "hasChildGraphParent": nc.hasChildGraphParent,
                        "hasSuccessorGraphParent": nc.hasSuccessorGraphParent})
    out.table(records)
    return EXIT_OK

def _cmdLandmines(args, settings, out): # pylint: disable=unused-argument
    out.values("landmine", Classifier.landminesUpTo(args.max, args.base))
    return EXIT_OK

def _cmdBranchPoints(args, settings, out): # pylint: disable=unused-argument
    out.values("branchPoint", Classifier.branchPointsUpTo(args.max, args.base))
    return EXIT_OK

def _cmdSuccessors(args, settings, out): # pylint: disable=unused-argument
    out.table({"n": n, "successor": s} for n, s in Classifier.successorList(args.max, args.base))
    return EXIT_OK

def _cmdNonSuccessors(args, settings, out): # pylint: disable=unused-argument
    out.values("n", Classifier.nonSuccessorsBelow(args.below, args.base))
    return EXIT_OK

def _cmdNonChildren(args, settings, out): # pylint: disable=unused-argument
    out.values("n", Classifier.nonChildrenBelow(args.base*args.base, args.base))
    return EXIT_OK

def _cmdIsolated(args, settings, out): # pylint: disable=unused-argument
    out.values("n", Classifier.isolatedNodesUpTo(args.max, args.base))
    return EXIT_OK

def _cmdAncestor(args, settings, out):
    records = []
    for n in args.n:
        res = Classifier.rootAncestor(n, args.base, graph=args.graph, budget=settings["ancestorBudget"])
        records.append({"n": n, "root": res.root, "steps": res.steps, "complete": res.complete})
    out.table(records)
    return EXIT_OK

def _pathRecord(root, base, report):
    # lengths as decimal strings, terms as base-b digit strings
    return {"root": str(BaseNumber(root, base)), "choices": report.choices, "outcome": report.outcome,
            "length": str(report.length), "final": str(BaseNumber(report.finalTerm, base))}

def _cmdPath(args, settings, out): # pylint: disable=unused-argument
    if args.infinite:
        if args.base != 3:
            raise CommaRuntimeError("--infinite is only available in base 3")
        out.stream("term", Paths.base3InfinitePath(args.count))
        return EXIT_OK
    if args.start is None:
        raise CommaRuntimeError("path needs --start or --infinite")
    choices = args.choices
    if args.emit == "terms":
        if args.max_terms is None and args.max_value is None and args.base == 2:
            raise CommaRuntimeError("base-2 paths do not terminate; give --max-terms or --max-value")
        out.stream("term", _termsUpTo(Paths.iterPath(args.start, args.base, choices), args.max_terms,
                                      args.max_value))
        return EXIT_OK
    report = Paths.walkWithChoices(args.start, args.base, choices, maxTerms=args.max_terms,
                                   maxValue=args.max_value)
    out.summary(_pathRecord(args.start, args.base, report))
    return EXIT_OK

def _cmdExplore(args, settings, out):
    if args.max_value is None and args.max_branch_points is None and not args.stretch:
        raise CommaRuntimeError("unbounded exploration may take hours; give --max-value, --max-branch-points "
                                "or --stretch")
    report = Paths.exploreTree(args.root, args.base, maxValue=args.max_value, policy=args.policy,
                               maxBranchPoints=args.max_branch_points, workers=settings["workers"])
    logger.info("%d branch-points, %d dead paths", report.branchPoints, report.deadPaths)
    out.table(_pathRecord(args.root, args.base, p) for p in report.paths)
    return EXIT_OK

def _readIntegers(stream):
    res = []
    for token in stream.read().split():
        try:
            res.append(int(token))
        except ValueError as e:
            raise CommaRuntimeError(f"cannot parse {token!r} as an integer") from e
    return res

def _cmdTransform(args, settings, out): # pylint: disable=unused-argument
    if args.input == "-":
        terms = _readIntegers(sys.stdin)
    else:
        with open(args.input, "r", encoding="utf-8") as f:
            terms = _readIntegers(f)
    if args.check:
        out.summary({"commaSequence": isCommaSequence(terms, args.base),
                     "successorChain": isCommaSuccessorChain(terms, args.base)})
    else:
        out.values("commaNumber", commaTransform(terms, args.base))
    return EXIT_OK

def _cmdBase3(args, settings, out): # pylint: disable=unused-argument
    if args.action == "verify-predictor":
        res = Base3.verifyPredictor(args.limit)
        out.summary({"checked": args.limit, "mismatches": len(res)})
        return EXIT_OK if not res else EXIT_FAILURE
    if args.action == "verify-transitions":
        res = Base3.verifyTransitions(args.h_max)
        out.summary({"hMax": args.h_max, "mismatches": len(res)})
        return EXIT_OK if not res else EXIT_FAILURE
    if args.action == "trace":
        nodes = Base3.traceTransitions(args.s, args.t, args.h)
        out.values("node", [str(n) for n in nodes])
        return EXIT_OK
    report = Base3.base3AllTerminate(args.x_max)
    out.summary({"runs": report.runs, "allTerminate": report.allTerminate,
                 "longestStart": report.longest[0], "longestLength": report.longest[1]})
    return EXIT_OK if report.allTerminate else EXIT_FAILURE

def _cmdKangaroo(args, settings, out):
    reports = Kangaroo.survivalSweep(args.bases, m=args.m, workers=settings["workers"])
    records = []
    for r in reports:
        rec = {"base": r.base, "starts": r.starts, "deaths": r.deaths, "survivors": r.starts - r.deaths,
               "asymptotic": round(r.asymptoticEstimate, 3), "lengthLog10": round(r.expectedLengthLog10, 3),
               "naiveLog10": None if r.naiveLengthLog10 is None else round(r.naiveLengthLog10, 3)}
        if args.check_gf:
            rec["gf"] = r.gfCoefficient
            rec["match"] = r.matches
        records.append(rec)
    out.table(records)
    if args.check_gf and not all(r.matches for r in reports):
        return EXIT_FAILURE
    return EXIT_OK

def _cmdVerify(args, settings, out):
    client = OeisClient(settings["cacheDir"], offline=settings["offline"], timeout=settings["timeout"])
    res = verifyAgainstOeis(client, args.oeis, args.generator)
    mismatch = res.firstMismatch or (None, None, None)
    out.summary({"aNumber": res.aNumber, "compared": res.compared, "ok": res.ok, "index": mismatch[0],
                 "expected": mismatch[1], "actual": mismatch[2]})
    return EXIT_OK if res.ok else EXIT_FAILURE

def _commonOptions():
    # defaults are SUPPRESSed so that the options can be given before or after the subcommand
    common = ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=SUPPRESS, help="output format (default: plain)")
    common.add_argument("--cache-dir", default=SUPPRESS, help="OEIS b-file cache directory.")
    common.add_argument("--offline", action="store_true", default=SUPPRESS,
                        help="serve b-files from the cache only.")
    common.add_argument("--config", default=SUPPRESS, help=".json configuration file.")
    common.add_argument("--workers", type=_nonNegative, default=SUPPRESS,
                        help="number of worker processes for explore and kangaroo.")
    common.add_argument("-l", "--logfile", default=SUPPRESS, type=str,
                        help="log file location (.db extension will use sqlite).")
    common.add_argument("-v", "--verbosity", default=SUPPRESS,
                        choices=["INTERNAL", "DEBUG", "INFO", "WARN", "ERROR", "FATAL", "CRITICAL"],
                        help="sets the log verbosity (default: WARN)")
    common.add_argument("-q", "--quiet", action="store_true", default=SUPPRESS, help="disable logging to stderr.")
    return common

def _runOptions(parser):
    parser.add_argument("--max-terms", type=_positive, default=None, help="term budget.")
    parser.add_argument("--max-value", type=_positive, default=None,
                        help="value ceiling; the run stops at the first term >= this value.")

def createParser():
    """
    Creates the argument parser of the command line tool.

    :return: an ArgumentParser instance
    """
    common = _commonOptions()
    parser = ArgumentParser(prog="commaSeq", description="commaSeq: comma sequences in arbitrary bases",
                            parents=[common], formatter_class=RawDescriptionHelpFormatter,
                            epilog="""\
The following environment variables have effect on commaSeq's behaviour:

COMMASEQ_CACHE_DIR:
    overrides the OEIS b-file cache directory (the --cache-dir flag wins).

COMMASEQ_OFFLINE:
    if set to '1', b-files are served from the cache only (like --offline).
""")
    parser.add_argument("--version", action="version", version=f"%(prog)s {commaSeq.__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, helpText):
        p = sub.add_parser(name, parents=[common], help=helpText, description=helpText)
        p.set_defaults(func=func)
        p.add_argument("--base", type=_base, default=10, help="the base (default: 10).")
        return p

    p = add("run", _cmdRun, "run the comma sequence from a start value.")
    p.add_argument("--start", type=_positive, required=True, help="the first term.")
    p.add_argument("--naive", action="store_true", help="use the term-by-term reference runner.")
    _runOptions(p)
    p.add_argument("--emit", choices=["summary", "terms", "commas", "ratio-series", "regions", "stats"],
                   default="summary", help="what to output (default: summary).")
    p.add_argument("--points", type=_positive, default=None, help="maximal number of ratio-series points.")
    p.add_argument("--hdf5", default=None, help="additionally write the ratio series and the regions to this file.")
    p.add_argument("--overwrite", action="store_true", help="silently overwrite an existing HDF5 file.")

    p = add("classify", _cmdClassify, "classify numbers as nodes of the comma graphs.")
    p.add_argument("n", type=_positive, nargs="+", help="the numbers.")

    p = add("landmines", _cmdLandmines, "list the landmines (numbers without comma-children).")
    p.add_argument("--max", type=_positive, required=True, help="upper limit (inclusive).")

    p = add("branch-points", _cmdBranchPoints, "list the branch-points (numbers with two comma-children).")
    p.add_argument("--max", type=_positive, required=True, help="upper limit (inclusive).")

    p = add("successors", _cmdSuccessors, "list the comma-successors of 1..max (-1: none).")
    p.add_argument("--max", type=_positive, required=True, help="upper limit (inclusive).")

    p = add("non-successors", _cmdNonSuccessors, "list the numbers which are no comma-successor.")
    p.add_argument("--below", type=_positive, required=True, help="upper limit (exclusive).")

    add("non-children", _cmdNonChildren, "list the roots of the child graph.")

    p = add("isolated", _cmdIsolated, "list the isolated nodes of the successor graph.")
    p.add_argument("--max", type=_positive, required=True, help="upper limit (inclusive).")

    p = add("ancestor", _cmdAncestor, "find the most remote ancestor of numbers.")
    p.add_argument("--graph", choices=[Classifier.GRAPH_CHILD, Classifier.GRAPH_SUCCESSOR],
                   default=Classifier.GRAPH_CHILD, help="the graph (default: child).")
    p.add_argument("n", type=_positive, nargs="+", help="the numbers.")

    p = add("path", _cmdPath, "walk a path of the child graph.")
    p.add_argument("--start", type=_positive, default=None, help="the first term.")
    p.add_argument("--choices", type=_choices, default=None, help="bits chosen at branch-points, e.g. 0110.")
    p.add_argument("--infinite", action="store_true", help="stream the infinite base-3 path.")
    p.add_argument("--count", type=_positive, default=20, help="number of terms of the infinite path.")
    p.add_argument("--emit", choices=["summary", "terms"], default="summary", help="what to output.")
    _runOptions(p)

    p = add("explore", _cmdExplore, "explore the tree of the child graph below a root.")
    p.add_argument("--root", type=_positive, required=True, help="the root.")
    p.add_argument("--max-value", type=_positive, default=None, help="value ceiling for every path.")
    p.add_argument("--max-branch-points", type=_positive, default=None,
                   help="maximal number of branch-points per path.")
    p.add_argument("--policy", choices=[Paths.POLICY_EXHAUSTIVE, Paths.POLICY_LONGEST_SURVIVOR],
                   default=Paths.POLICY_EXHAUSTIVE, help="report all leaves or only the survivors.")
    p.add_argument("--stretch", action="store_true",
                   help="allow an unbounded exploration (the tree of 30 in base 10 takes hours).")

    p = add("transform", _cmdTransform, "compute the comma transform of a sequence.")
    p.add_argument("--input", required=True, help="file with whitespace separated integers ('-' for stdin).")
    p.add_argument("--check", action="store_true", help="check whether the input is a comma sequence.")

    p = sub.add_parser("base3", parents=[common], help="base-3 theory checks.")
    p.set_defaults(func=_cmdBase3)
    b3 = p.add_subparsers(dest="action", required=True, metavar="action")
    q = b3.add_parser("verify-predictor", parents=[common], help="check the comma-number predictor.")
    q.add_argument("--limit", type=_positive, default=3**10, help="check all n <= limit (default: 3^10).")
    q = b3.add_parser("verify-transitions", parents=[common], help="check the transition table.")
    q.add_argument("--h-max", type=_positive, default=5, help="largest exponent block (default: 5).")
    q = b3.add_parser("trace", parents=[common], help="list the transition nodes passed from 3^(4h+s)+t.")
    q.add_argument("--s", type=int, required=True, choices=range(4), help="exponent residue.")
    q.add_argument("--t", type=int, required=True, choices=Base3.OFFSETS, help="offset.")
    q.add_argument("--h", type=_nonNegative, default=1, help="exponent block.")
    q = b3.add_parser("all-terminate", parents=[common], help="check that all runs from x <= x-max terminate.")
    q.add_argument("--x-max", type=_positive, default=3**7, help="largest start (default: 3^7).")

    p = sub.add_parser("kangaroo", parents=[common], help="survival model statistics.")
    p.set_defaults(func=_cmdKangaroo)
    p.add_argument("--bases", type=_range, default=range(2, 25), help="bases, e.g. 2..24.")
    p.add_argument("--m", type=int, default=2, help="window exponent (>= 2).")
    p.add_argument("--check-gf", action="store_true", help="compare with the generating function.")

    p = sub.add_parser("verify", parents=[common], help="compare a generator with an OEIS b-file.")
    p.set_defaults(func=_cmdVerify)
    p.add_argument("--oeis", required=True, help="the A-number, e.g. A121805.")
    p.add_argument("--generator", required=True, help="generator specification, e.g. run:base=10,start=1.")
    return parser

def _setupLogging(args):
    rootLogger = logging.getLogger()
    rootLogger.setLevel(getattr(args, "verbosity", "WARN"))
    rootLogger.debug("Setting verbosity: %s", rootLogger.level)
    if getattr(args, "quiet", False):
        for h in list(rootLogger.handlers):
            if type(h) is logging.StreamHandler: # pylint: disable=unidiomatic-typecheck
                rootLogger.removeHandler(h)
    handler = None
    logfile = getattr(args, "logfile", None)
    if logfile is not None:
        if logfile.endswith(".db"):
            handler = SQLiteHandler(logfile)
        else:
            handler = logging.FileHandler(logfile)
            handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        rootLogger.addHandler(handler)
    return handler

def main(argv=None, stream=None):
    """
    main function used as entry point

    :param argv: the command line arguments (default: sys.argv[1:])
    :param stream: the output stream (default: sys.stdout)
    :return: the exit status
    """
    parser = createParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    handler = _setupLogging(args)
    try:
        settings = ConfigFileLoader.resolve(
            getattr(args, "config", None),
            overrides={"cacheDir": getattr(args, "cache_dir", None),
                       "offline": True if getattr(args, "offline", False) else None,
                       "format": getattr(args, "format", None),
                       "workers": getattr(args, "workers", None),
                       "ratioPoints": getattr(args, "points", None)})
        out = Output(settings["format"], stream)
        return args.func(args, settings, out)
    except (CommaRuntimeError, ValueError, OSError) as e:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"commaSeq: error: {e}\n")
        return EXIT_FAILURE
    finally:
        if handler is not None:
            logging.getLogger().removeHandler(handler)
            handler.close()

def mainConsole():
    """
    entry point for console application
    :return:
    """
    signal.signal(signal.SIGINT, signal.SIG_DFL)
    sys.excepthook = excepthook
    sys.exit(main())

if __name__ == "__main__":
    mainConsole()
