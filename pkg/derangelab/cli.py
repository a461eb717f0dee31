# -*- coding: utf-8 -*-
"""The ``derange-lab`` command line tool.

Subcommands: ``verify`` certifies an identity (or runs a probe) over a
range of n, ``trace`` applies one of the involutions to a word,
``table`` prints one of the census tables, ``stats`` prints the
statistics of a permutation and ``enumerate`` lists a family of words.
"""
import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import __version__
from . import budget as _budget
from .biderangement import Biderangement, enumerate_biderangements
from .config import FORMATS, load_run_config
from .errors import DerangeLabError, UsageError
from .identities import (biderangement_identity, chapman_count,
                         derangement_exc_mono, exc_sum_fixed, exc_sum_sn,
                         main_theorem_indices, main_theorem_values,
                         mr_counting, rlm_derangement_sum, rlm_signed_counts,
                         rlm_sum_sn, stirling_check, subsets_lex)
from .involutions import beta, iota, kappa, zeta
from .permutation import (Permutation, enumerate_derangements, enumerate_sn,
                          stats)
from .probes import (bider_counts, case_transition_rows, decisive_rows,
                     fixed_rlm_probe, rlm_derangement_table,
                     single_cycle_census, single_cycle_counts,
                     type_restricted_sum)
from .psi import psi, psi_hat
from .sef import SubexcedantFunction, enumerate_derangement_sef, enumerate_sef
from .words import format_word

log = logging.getLogger(__name__)

# identity name -> (verifier, smallest meaningful n)
PROVEN = {
    "main-values": (main_theorem_values, 2),
    "main-indices": (main_theorem_indices, 2),
    "exc-sn": (exc_sum_sn, 1),
    "der-exc": (derangement_exc_mono, 1),
    "rlm-sn": (rlm_sum_sn, 1),
    "rlm-der": (rlm_derangement_sum, 1),
    "bider": (biderangement_identity, 1),
    "chapman": (chapman_count, 1),
    "stirling": (stirling_check, 1),
}
SPECIAL = ("mr-count", "exc-fixed")
PROBES = ("conjecture", "single-cycle", "rlm-table", "fix-rlm-probe")
IDENTITIES = tuple(sorted(set(PROVEN) | set(SPECIAL) | set(PROBES)))

MAPS = ("psi", "psi-hat", "iota", "kappa", "zeta", "beta")
TABLES = ("rlm-der", "case-transitions", "decisive-counts", "bider-counts",
          "single-cycle")
# table name -> (default size, budget family)
TABLE_DEFAULTS = {"rlm-der": (8, _budget.SWEEP),
                  "case-transitions": (7, _budget.SWEEP),
                  "decisive-counts": (7, _budget.SWEEP),
                  "bider-counts": (4, _budget.BIDER),
                  "single-cycle": (8, _budget.SWEEP)}
FAMILIES = ("sn", "der", "sef", "der-sef", "bider")

# subsets of [n] tried by exc-fixed and fix-rlm-probe when --t is absent
ALL_SUBSETS_UP_TO = 6
SUBSET_SAMPLE = 50


def parse_range(text):
    """``"a..b"`` (inclusive) or a single ``"n"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError("bad range %r, expected a..b or n" % text)
    if lo < 1 or hi < lo:
        raise UsageError("bad range %r" % text)
    return range(lo, hi + 1)


def parse_set(text):
    text = text.strip().strip("{}")
    if not text:
        return frozenset()
    try:
        return frozenset(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError("bad set %r, expected comma separated integers" % text)


@dataclass(frozen=True)
class VerifyJob(object):
    identity: str
    n: int
    budgets: _budget.Budgets
    timings: bool = False
    k: Optional[int] = None
    subset: Optional[frozenset] = None


def _subsets_for(n, job):
    if job.subset is not None:
        return [job.subset]
    if n <= ALL_SUBSETS_UP_TO:
        return [frozenset(s) for s in subsets_lex(n)]
    return [frozenset(s) for s in subsets_lex(n, SUBSET_SAMPLE)]


def run_verify_job(job):
    """Records for one n. Proven identities carry an ``equal`` field;
    probe records carry ``probe`` instead. Module level so that it can
    be sent to worker processes."""
    n, budgets = job.n, job.budgets
    if job.identity in PROVEN:
        verifier = PROVEN[job.identity][0]
        records = [verifier(n, budgets).to_dict(job.timings)]
        if job.identity == "rlm-sn":
            counts = rlm_signed_counts(n, budgets)
            records.append({"identity": "rlm-sn-counts", "n": n,
                            "counts": [counts[k][0] for k in sorted(counts)],
                            "expected": [counts[k][1] for k in sorted(counts)],
                            "equal": all(a == b for a, b in counts.values())})
        return records
    if job.identity == "mr-count":
        ks = [job.k] if job.k is not None else range(1, n)
        expected = -1 if (n - 1) % 2 else 1
        records = []
        for k in ks:
            value = mr_counting(n, k, budgets)
            records.append({"identity": "mr-count", "n": n, "k": k,
                            "value": value, "expected": expected,
                            "equal": value == expected})
        return records
    if job.identity == "exc-fixed":
        return [exc_sum_fixed(n, s, budgets).to_dict(job.timings)
                for s in _subsets_for(n, job)]
    if job.identity == "conjecture":
        ks = [job.k] if job.k is not None else range(1, n + 1)
        return [type_restricted_sum(n, k, budgets).to_dict() for k in ks]
    if job.identity == "single-cycle":
        poly, terms = single_cycle_census(n, budgets)
        return [{"probe": "single-cycle", "n": n, "terms": terms,
                 "polynomial": str(poly)}]
    if job.identity == "rlm-table":
        table = rlm_derangement_table(n, budgets)
        first = dict((m, c) for m, *c in table.first_column_checks())
        diagonal = dict((d["n"], d) for d in table.diagonal_checks())
        record = {"probe": "rlm-table", "n": n,
                  "row": list(table.rows.get(n, ()))}
        if n in first:
            got, predicted, holds = first[n]
            record["first_column"] = {"value": got, "predicted": predicted,
                                      "holds": holds}
        if n in diagonal:
            d = diagonal[n]
            record["diagonal"] = {"formula": d["formula"],
                                  "value": d["literal"],
                                  "holds": d["literal_holds"]}
        if n - 1 in diagonal:
            d = diagonal[n - 1]
            record["diagonal_shifted"] = {"formula": d["formula"],
                                          "value": d["shifted"],
                                          "holds": d["shifted_holds"]}
        return [record]
    if job.identity == "fix-rlm-probe":
        return [fixed_rlm_probe(n, s, budgets).to_dict()
                for s in _subsets_for(n, job)]
    raise UsageError("unknown identity %s" % job.identity)


class Emitter(object):
    """Writes records (dicts) or table rows in the configured format."""

    def __init__(self, output_format, stream):
        self.output_format = output_format
        self.stream = stream
        self._header = None
        self._writer = csv.writer(stream, lineterminator="\n",
                                  quoting=csv.QUOTE_NONE, escapechar="\\")

    def record(self, record):
        if self.output_format == "json":
            self.stream.write(json.dumps(record) + "\n")
        elif self.output_format == "csv":
            header = list(record)
            if header != self._header:
                self._writer.writerow(header)
                self._header = header
            self._writer.writerow([_cell(v) for v in record.values()])
        else:
            self.stream.write(" ".join("%s=%s" % (k, _cell(v))
                                       for k, v in record.items()) + "\n")

    def table(self, header, rows):
        if self.output_format == "json":
            for row in rows:
                self.record(dict(zip(header, row)))
        elif self.output_format == "csv":
            self._writer.writerow(header)
            for row in rows:
                self._writer.writerow([_cell(v) for v in row])
        else:
            self.stream.write(" ".join(header) + "\n")
            for row in rows:
                self.stream.write(" ".join(_cell(v) for v in row) + "\n")


def _cell(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join("%s:%s" % (k, _cell(v)) for k, v in value.items())
    return str(value)


def cmd_verify(args, config, out):
    if args.identity in PROVEN:
        min_n = PROVEN[args.identity][1]
    else:
        min_n = 2 if args.identity == "mr-count" else 1
    if args.n:
        ns = parse_range(args.n)
    elif args.identity == "bider":
        ns = range(1, min(4, config.budgets.limit(_budget.BIDER)) + 1)
    else:
        ns = range(min_n, config.budgets.limit(_budget.SWEEP) + 1)
    family = _budget.BIDER if args.identity == "bider" else _budget.SWEEP
    # every verifier also enumerates S_n or D_n of the same size
    for n in ns:
        config.budgets.check(family, n)
        config.budgets.check(_budget.PERM, n)
    subset = parse_set(args.t) if args.t is not None else None
    jobs = [VerifyJob(args.identity, n, config.budgets, config.timings,
                      args.k, subset) for n in ns]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            batches = list(pool.map(run_verify_job, jobs))
    else:
        batches = [run_verify_job(job) for job in jobs]
    ok = True
    for batch in batches:
        for record in batch:
            out.record(record)
            if record.get("equal") is False:
                ok = False
    if not ok:
        log.warning("%s: some identity did not verify", args.identity)
    return 0 if ok else 1


def cmd_trace(args, config, out):
    name = args.map
    if name == "psi":
        trace = psi(SubexcedantFunction.parse(args.word))
        record = trace.to_dict()
    else:
        if name == "beta":
            value = Biderangement.parse(args.word)
            result = beta(value)
        else:
            value = Permutation.parse(args.word)
            result = {"psi-hat": psi_hat, "iota": iota, "kappa": kappa,
                      "zeta": zeta}[name](value)
        record = {"input": str(value), "output": str(result)}
    record = dict([("map", name)] + list(record.items()))
    out.record(record)
    return 0


def _table(name, size, budgets):
    if name == "rlm-der":
        table = rlm_derangement_table(size, budgets)
        header = ["n"] + ["k%s" % k for k in range(1, size)]
        return header, [[n] + list(table.rows[n]) for n in sorted(table.rows)]
    if name == "case-transitions":
        return (["n", "case", "image_case", "shift", "count", "permitted"],
                case_transition_rows(size, budgets))
    if name == "decisive-counts":
        return ["n", "k", "count", "sign"], decisive_rows(size, budgets)
    if name == "bider-counts":
        return ["n", "count"], bider_counts(size, budgets)
    if name == "single-cycle":
        return ["n", "terms"], single_cycle_counts(size, budgets)
    raise UsageError("unknown table %s" % name)


def cmd_table(args, config, out):
    default_size, family = TABLE_DEFAULTS[args.table]
    size = config.max_n or default_size
    config.budgets.check(family, size)
    header, rows = _table(args.table, size, config.budgets)
    out.table(header, rows)
    return 0


def cmd_stats(args, config, out):
    p = Permutation.parse(args.word)
    record = {"word": str(p)}
    record.update(stats(p).to_dict())
    out.record(record)
    return 0


def cmd_enumerate(args, config, out):
    budgets = config.budgets
    source = {"sn": enumerate_sn,
              "der": enumerate_derangements,
              "sef": enumerate_sef,
              "der-sef": enumerate_derangement_sef,
              "bider": enumerate_biderangements}[args.family]
    for item in source(args.n, budgets):
        out.record({"word": format_word(item.word)})
    return 0


def _global_options(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=FORMATS, default=default,
                        help="output format (default text)")
    parser.add_argument("--max-n", type=int, dest="max_n", default=default,
                        help="budget override for every command family, "
                        "also the size of tables")
    parser.add_argument("--config", default=default,
                        help="INI or YAML settings file")
    parser.add_argument("--jobs", type=int, default=default,
                        help="worker processes for verify ranges")
    parser.add_argument("--timings", action="store_const", const=True,
                        default=default, help="fill in elapsed_ms")
    parser.add_argument("-v", "--verbose", action="store_const", const=True,
                        default=default, help="debug logging on stderr")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="derange-lab",
        description="Permutation statistics, sign-reversing involutions "
        "and brute force identity certification.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="certify an identity or run a probe")
    p.add_argument("identity", choices=IDENTITIES)
    p.add_argument("--n", help="a..b or n")
    p.add_argument("--k", type=int, help="k for mr-count and conjecture")
    p.add_argument("--t", help="comma separated fixed points for "
                   "exc-fixed and fix-rlm-probe")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trace", parents=[common],
                       help="apply an involution to a word")
    p.add_argument("word")
    p.add_argument("map", choices=MAPS)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("table", parents=[common], help="print a census table")
    p.add_argument("table", choices=TABLES)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("stats", parents=[common],
                       help="statistics of a permutation")
    p.add_argument("word")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list the words of a family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None, environ=None, stdout=None):
    stdout = stdout or sys.stdout
    args = make_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if getattr(args, "verbose", None)
                        else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = load_run_config(args, environ)
        return args.func(args, config, Emitter(config.output_format, stdout))
    except DerangeLabError as e:
        sys.stderr.write("derange-lab: %s\n" % e)
        return e.exit_status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
