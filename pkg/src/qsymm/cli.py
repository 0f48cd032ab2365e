"""Command-line front end.

Subcommands:

  compute   print one object (Macdonald, Hall-Littlewood, classical-type
            Hall-Littlewood, Koornwinder, rectangular pair polynomials,
            classical Schur functions, Rogers-Szego, q-series) in the
            canonical text form, which round-trips through
            LaurentPoly.from_canonical.
  verify    run one named identity check and optionally write a JSON
            report.
  suite     run a list of verification jobs from a flat text config
            file, optionally in parallel, and write a merged report.
  cache     stats / clear / verify-integrity for the Koornwinder table
            cache (directory overridable via the QSYMM_CACHE variable).

Exit codes: 0 success, 1 verification or integrity failure, 2 argument
or config errors, 3 degenerate parameter point (re-run with a new seed).

Suite config grammar (one directive per line, '#' starts a comment):

  seed <int>                    global seed, mandatory
  report <path>                 optional default report path
  cache <dir>                   optional cache directory override
  job <identity> key=value ...  one verification job

Job keys are the flags of `verify` without dashes (n, m, points, seed,
order, degree, maxsize, family, kind, which, radius); a per-job seed
overrides the global one.  Unknown identities or keys are rejected when
the config is parsed.
"""

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .core import DegenerateError, LaurentPoly
from .partitions import Partition
from .qfact import rogers_szego, series_poch_fin, series_poch_inf, \
    series_theta
from .symfunc import hall_littlewood, macdonald_p
from .weylsym import even_orthogonal_schur, hl_b, hl_bc, hl_c, hl_d, \
    odd_orthogonal_schur, schur, symplectic_schur
from .koornwinder import KTable, koornwinder_k, prs_macdonald
from .hyperq import RR_FAMILIES, series_to_poly
from . import verify as V

__all__ = ["main"]


class CliError(ValueError):
    """Bad arguments or config; maps to exit code 2."""


def parse_partition(text):
    """Parse '3,2,1' or '5/2,3/2' (or '' / '0' / '-' for empty)."""
    text = (text or "").strip()
    if text in ("", "0", "-"):
        return Partition.from_doubled(())
    doubled = []
    for piece in text.split(","):
        try:
            f = 2 * Fraction(piece.strip())
        except (ValueError, ZeroDivisionError):
            raise CliError("bad partition part %r" % piece)
        if f <= 0 or f.denominator != 1:
            raise CliError("partition parts must be positive halves "
                           "or integers, got %r" % piece)
        doubled.append(int(f))
    if any(a < b for a, b in zip(doubled, doubled[1:])):
        raise CliError("partition parts must be weakly decreasing")
    try:
        return Partition.from_doubled(tuple(doubled))
    except ValueError as exc:
        raise CliError(str(exc))


def parse_fraction(text, flag):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError("%s expects a rational number, got %r" % (flag, text))


def _need(args, *flags):
    out = []
    for flag in flags:
        v = getattr(args, flag, None)
        if v is None:
            raise CliError("--%s is required here" % flag)
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _compute_object(args):
    obj = args.object
    if obj == "macdonald":
        la, n, q, t = _need(args, "lam", "n", "q", "t")
        return macdonald_p(la, n, q, t)
    if obj == "hl":
        la, n, t = _need(args, "lam", "n", "t")
        return hall_littlewood(la, n, t)
    if obj == "hlR":
        kind, la, n, t = _need(args, "kind", "lam", "n", "t")
        if kind == "BC":
            return hl_bc(la, n, t, *_need(args, "t2", "t3"))
        if kind == "B":
            return hl_b(la, n, t, *_need(args, "t2"))
        if kind == "C":
            return hl_c(la, n, t, *_need(args, "s"))
        if kind == "D":
            return hl_d(la, n, t)
        raise CliError("hlR kind must be one of BC, B, C, D")
    if obj == "koornwinder":
        la, n = _need(args, "lam", "n")
        keys = ("q", "t", "t0", "t1", "t2", "t3")
        params = dict(zip(keys, _need(args, *keys)))
        return koornwinder_k(la, n, params)
    if obj == "prs":
        kind, la, n, qh, t = _need(args, "kind", "lam", "n", "qh", "t")
        if kind not in ("BB", "BC", "CB", "DD", "DDbar"):
            raise CliError("prs kind must be one of BB, BC, CB, DD, DDbar")
        if kind == "CB":
            return prs_macdonald(kind, la, n, qh, t, s2=_need(args, "s")[0])
        t2 = args.t2 if kind in ("BB", "BC") else None
        if kind in ("BB", "BC") and t2 is None:
            raise CliError("--t2 is required here")
        return prs_macdonald(kind, la, n, qh, t, t2=t2)
    if obj == "classicalSchur":
        kind, la, n = _need(args, "kind", "lam", "n")
        fns = {"gl": schur, "sp": symplectic_schur,
               "so": odd_orthogonal_schur, "oe": even_orthogonal_schur}
        if kind not in fns:
            raise CliError("classicalSchur kind must be one of gl, sp, "
                           "so, oe")
        return fns[kind](la, n)
    if obj == "phi":
        m, q = _need(args, "m", "q")
        if m < 0:
            raise CliError("--m must be nonnegative")
        z = args.z if args.z is not None else LaurentPoly.var("z")
        return LaurentPoly.const(1) * rogers_szego(m, z, q)
    if obj == "series":
        kind, var, coeff, exp, order = _need(
            args, "kind", "var", "coeff", "exp", "order")
        if kind == "pochinf":
            s = series_poch_inf(var, coeff, exp, *_need(args, "step"),
                                order)
        elif kind == "pochfin":
            s = series_poch_fin(var, coeff, exp,
                                *_need(args, "step", "count"), order)
        elif kind == "theta":
            s = series_theta(var, coeff, exp, *_need(args, "modulus"),
                             order)
        else:
            raise CliError("series kind must be one of pochinf, pochfin, "
                           "theta")
        return series_to_poly(s)
    raise CliError("unknown object %r" % obj)


def cmd_compute(args):
    poly = _compute_object(args)
    if not isinstance(poly, LaurentPoly):
        poly = LaurentPoly.const(poly)
    sys.stdout.write(poly.canonical())
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _run_identity(name, opt):
    """Dispatch one identity by name with an option dict; raises
    CliError on unknown names or missing/invalid options."""

    def need(*keys):
        out = []
        for k in keys:
            if opt.get(k) is None:
                raise CliError("identity %r needs --%s" % (name, k))
            out.append(opt[k])
        return out

    pts = {"npoints": opt["points"], "seed": opt["seed"]}
    try:
        if name.startswith("bounded") and name[7:] in V.BOUNDED_THMS:
            return V.verify_bounded(name[7:], *need("n", "m"), **pts)
        if name in V.COROLLARIES:
            return V.verify_corollary(name, *need("n", "m"), **pts)
        if name in V.UNBOUNDED_KINDS:
            n, deg = need("n", "degree")
            return V.verify_unbounded(name, n, deg, **pts)
        if name == "fik":
            return V.verify_prop_fik(*need("n", "m"), **pts)
        if name in V.EVALUATIONS:
            (n,) = need("n")
            return V.verify_evaluation(name, n, maxsize=opt["maxsize"],
                                       **pts)
        if name == "rr":
            fam, n, m, order = need("family", "n", "m", "order")
            if fam not in RR_FAMILIES:
                raise CliError("unknown family %r" % fam)
            return V.verify_rr(fam, n, m, order)
        if name == "character":
            kind, n, m = need("kind", "n", "m")
            if kind not in ("B", "C"):
                raise CliError("character kind must be B or C")
            return V.verify_character(kind, n, m, order=opt["order"] or 5)
        if name == "appendix":
            (which,) = need("which")
            if which not in ("B", "A"):
                raise CliError("appendix which must be B or A")
            return V.verify_appendix(which, order=opt["order"] or 7,
                                     radius=opt["radius"])
        if name in V.PROP_KINDS:
            return V.verify_props(name, *need("n", "m"), **pts)
    except ValueError as exc:
        raise CliError(str(exc))
    raise CliError("unknown identity %r" % name)


def _print_report(rep, out=sys.stdout):
    for p in rep["points"]:
        tag = "pass" if p["equal"] else "FAIL"
        label = p["point"] or rep["identity"]
        out.write("%s  %s: %s\n" % (tag, rep["identity"], label))
    out.write("%s %s %s (%d ms)\n" % (
        rep["identity"], json.dumps(rep["params"], sort_keys=True),
        rep["status"], rep["millis"]))
    if rep["witness"]:
        out.write("  first discrepancy at %(monomial)s: "
                  "lhs %(lhs)s vs rhs %(rhs)s\n" % rep["witness"])


def _write_report(path, payload):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def cmd_verify(args):
    opt = {k: getattr(args, k, None) for k in
           ("n", "m", "points", "seed", "order", "degree", "maxsize",
            "family", "kind", "which", "radius")}
    opt["points"] = 3 if opt["points"] is None else opt["points"]
    opt["seed"] = 0 if opt["seed"] is None else opt["seed"]
    opt["maxsize"] = 6 if opt["maxsize"] is None else opt["maxsize"]
    opt["radius"] = 3 if opt["radius"] is None else opt["radius"]
    rep = _run_identity(args.identity, opt)
    _print_report(rep)
    if args.report:
        _write_report(args.report, rep)
    return 0 if rep["status"] == "pass" else 1


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

_JOB_KEYS = ("n", "m", "points", "seed", "order", "degree", "maxsize",
             "family", "kind", "which", "radius")
_INT_KEYS = ("n", "m", "points", "seed", "order", "degree", "maxsize",
             "radius")

_KNOWN_IDENTITIES = tuple(
    ["bounded" + t for t in V.BOUNDED_THMS] + list(V.COROLLARIES)
    + list(V.UNBOUNDED_KINDS) + ["fik"] + list(V.EVALUATIONS)
    + ["rr", "character", "appendix"] + list(V.PROP_KINDS))


def parse_suite_config(text):
    """Parse the flat suite config; see the module docstring for the
    grammar.  Returns (jobs, settings)."""
    jobs = []
    settings = {"seed": None, "report": None, "cache": None}
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if head in ("seed", "report", "cache"):
            if len(words) != 2:
                raise CliError("line %d: %s takes one value"
                               % (lineno, head))
            settings[head] = int(words[1]) if head == "seed" else words[1]
            continue
        if head != "job":
            raise CliError("line %d: unknown directive %r" % (lineno, head))
        if len(words) < 2:
            raise CliError("line %d: job needs an identity name" % lineno)
        identity = words[1]
        if identity not in _KNOWN_IDENTITIES:
            raise CliError("line %d: unknown identity %r"
                           % (lineno, identity))
        opt = dict.fromkeys(_JOB_KEYS)
        for pair in words[2:]:
            if "=" not in pair:
                raise CliError("line %d: expected key=value, got %r"
                               % (lineno, pair))
            key, val = pair.split("=", 1)
            if key not in _JOB_KEYS:
                raise CliError("line %d: unknown key %r" % (lineno, key))
            try:
                opt[key] = int(val) if key in _INT_KEYS else val
            except ValueError:
                raise CliError("line %d: %s expects an integer"
                               % (lineno, key))
        jobs.append((identity, opt))
    if jobs and settings["seed"] is None:
        raise CliError("config must set a global seed")
    return jobs, settings


def cmd_suite(args):
    try:
        with open(args.config) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(str(exc))
    jobs, settings = parse_suite_config(text)
    if settings["cache"]:
        os.environ["QSYMM_CACHE"] = settings["cache"]

    def run(job):
        identity, opt = job
        opt = dict(opt)
        opt["seed"] = settings["seed"] if opt["seed"] is None \
            else opt["seed"]
        opt["points"] = 3 if opt["points"] is None else opt["points"]
        opt["maxsize"] = 6 if opt["maxsize"] is None else opt["maxsize"]
        opt["radius"] = 3 if opt["radius"] is None else opt["radius"]
        return _run_identity(identity, opt)

    njobs = max(1, args.jobs)
    if njobs == 1 or len(jobs) <= 1:
        reports = [run(j) for j in jobs]
    else:
        with ThreadPoolExecutor(max_workers=njobs) as pool:
            reports = list(pool.map(run, jobs))
    for rep in reports:
        _print_report(rep)
    failed = [r["identity"] for r in reports if r["status"] != "pass"]
    path = args.report or settings["report"]
    if path:
        _write_report(path, reports)
    if failed:
        sys.stdout.write("failed: %s\n" % ", ".join(failed))
        return 1
    sys.stdout.write("suite: %d job(s), all pass\n" % len(reports))
    return 0


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def cmd_cache(args):
    table = KTable(args.dir)
    if args.action == "stats":
        for key, val in sorted(table.stats().items()):
            sys.stdout.write("%s: %s\n" % (key, val))
        return 0
    if args.action == "clear":
        table.clear()
        sys.stdout.write("cache cleared\n")
        return 0
    # verify-integrity: re-parse and re-canonicalize every entry
    bad = []
    names = []
    if os.path.isdir(table.dir):
        names = sorted(n for n in os.listdir(table.dir)
                       if n.endswith(".kw"))
    for name in names:
        path = os.path.join(table.dir, name)
        with open(path) as fh:
            text = fh.read()
        parsed = KTable._parse(text)
        if parsed is None:
            bad.append(name)
            continue
        blocks = []
        for la in sorted(parsed, key=lambda p: (p.size(), p.parts2)):
            blocks.append("shape: " + " ".join(str(p) for p in la.parts2)
                          + "\n" + parsed[la].canonical())
        body = "\n".join(blocks)
        check = hashlib.sha256(body.encode()).hexdigest()[:24]
        if "checksum: %s\n%s" % (check, body) != text:
            bad.append(name)
    sys.stdout.write("checked %d entr%s\n"
                     % (len(names), "y" if len(names) == 1 else "ies"))
    for name in bad:
        sys.stdout.write("corrupted: %s\n" % name)
    return 1 if bad else 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _frac(text):
    return parse_fraction(text, "value")


def build_parser():
    top = argparse.ArgumentParser(
        prog="qsymm", description="exact symmetric-function calculator "
        "and identity verifier")
    sub = top.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="print one object")
    pc.add_argument("object", choices=(
        "macdonald", "hl", "hlR", "koornwinder", "prs", "classicalSchur",
        "phi", "series"))
    pc.add_argument("--lambda", dest="lam", type=parse_partition,
                    help="partition, e.g. 3,2,1 or 5/2,3/2")
    pc.add_argument("--n", type=int)
    pc.add_argument("--m", type=int)
    pc.add_argument("--kind")
    for flag in ("q", "qh", "t", "t0", "t1", "t2", "t3", "s", "z",
                 "coeff"):
        pc.add_argument("--" + flag, type=_frac)
    pc.add_argument("--var", default="q")
    for flag in ("exp", "step", "modulus"):
        pc.add_argument("--" + flag, type=_frac)
    pc.add_argument("--count", type=int)
    pc.add_argument("--order", type=_frac)
    pc.set_defaults(run=cmd_compute)

    pv = sub.add_parser("verify", help="check one named identity")
    pv.add_argument("identity")
    for flag in ("n", "m", "points", "seed", "order", "degree",
                 "maxsize", "radius"):
        pv.add_argument("--" + flag, type=int)
    for flag in ("family", "kind", "which"):
        pv.add_argument("--" + flag)
    pv.add_argument("--report", help="write a JSON report here")
    pv.set_defaults(run=cmd_verify)

    ps = sub.add_parser("suite", help="run jobs from a config file")
    ps.add_argument("config")
    ps.add_argument("--jobs", type=int, default=1)
    ps.add_argument("--report", help="overrides the config report path")
    ps.set_defaults(run=cmd_suite)

    pk = sub.add_parser("cache", help="manage the Koornwinder cache")
    pk.add_argument("action", choices=("stats", "clear",
                                       "verify-integrity"))
    pk.add_argument("--dir", help="cache directory (default: "
                    "QSYMM_CACHE or the per-user cache)")
    pk.set_defaults(run=cmd_cache)
    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.run(args)
    except CliError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except DegenerateError as exc:
        sys.stderr.write("degenerate parameter point: %s\n"
                         "re-run with a different --seed\n" % exc)
        return 3


if __name__ == "__main__":
    sys.exit(main())
