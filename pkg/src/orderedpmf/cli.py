"""Command-line front end.

Records come from positional arguments or ``--input FILE`` (``-`` for
stdin), one per line::

    # comment
    alice=90,95,85,90
    6/5,1,1,5/6

Values are ``p/q`` rationals or decimals, both read exactly (``0.85`` is
``17/20``).  A JSON file written by ``--format json`` is accepted as input
too, and reproduces the same results.

Subcommands: ``pmf``, ``search``, ``compare``, ``identity``.  Exit status
is 0 on success, 1 on input or domain errors and 2 on usage errors.
"""

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .evaluator import DEFAULT_TOL_TIE, compare
from .exceptions import OPMError
from .numeric import ValueSequence, geometric_normalize, random_unit_product
from .ordering import DEFAULT_MAX_EXHAUSTIVE, DEFAULT_RESTARTS, SearchConfig, min_variance_ordering
from .pmf import apm, gpm, moments, opm, verify_partition_identity

FORMAT_ENV = "ORDEREDPMF_FORMAT"


class InputError(OPMError):
    """Malformed input record, with 1-based line and column."""

    def __init__(self, message, line=None, column=None, source="<args>"):
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class InputRecord:
    __slots__ = ("name", "values")

    def __init__(self, name, values):
        self.name = name
        self.values = values

    def __repr__(self):
        return f"InputRecord({self.name!r}, {self.values!r})"


def parse_value(token):
    """Parse ``p/q`` or a decimal literal to an exact positive Fraction."""
    text = token.strip()
    if not text:
        raise ValueError("empty value")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a number: {text!r}") from None
    if value <= 0:
        raise ValueError(f"value {text} is not positive")
    return value


def parse_record(line, default_name, lineno=None, source="<args>"):
    """Parse ``[name=]v1,v2,...`` into an :class:`InputRecord`."""
    name = default_name
    body, offset = line, 0
    head, sep, rest = line.partition("=")
    if sep:
        name = head.strip()
        if not name:
            raise InputError("empty record name", lineno, 1, source)
        body, offset = rest, len(head) + 1
    values = []
    col = offset
    for token in body.split(","):
        lead = len(token) - len(token.lstrip())
        try:
            values.append(parse_value(token))
        except ValueError as exc:
            raise InputError(str(exc), lineno, col + lead + 1, source) from None
        col += len(token) + 1
    return InputRecord(name, values)


def _parse_lines(lines, source, start_index=1):
    records = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        records.append(parse_record(line, f"seq{start_index + len(records)}", lineno, source))
    return records


def _parse_json(text, source):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, exc.lineno, exc.colno, source) from None
    items = doc.get("records") if isinstance(doc, dict) else None
    if not isinstance(items, list):
        raise InputError("JSON input needs a top-level 'records' array", source=source)
    records = []
    for k, item in enumerate(items, 1):
        if not isinstance(item, dict) or not isinstance(item.get("values"), list):
            raise InputError(f"record {k} has no 'values' list", source=source)
        values = []
        for v in item["values"]:
            try:
                values.append(parse_value(str(v) if not isinstance(v, float) else repr(v)))
            except ValueError as exc:
                raise InputError(f"record {k}: {exc}", source=source) from None
        records.append(InputRecord(str(item.get("name") or f"seq{k}"), values))
    return records


def load_records(positional, input_path=None, stdin=None):
    """Collect records from positional strings and an optional input file."""
    records = []
    if input_path is not None:
        if input_path == "-":
            text, source = (stdin or sys.stdin).read(), "<stdin>"
        else:
            source = input_path
            try:
                with open(input_path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(exc.strerror or str(exc), source=source) from None
        if text.lstrip().startswith("{"):
            records.extend(_parse_json(text, source))
        else:
            records.extend(_parse_lines(text.splitlines(), source))
    for k, arg in enumerate(positional, 1):
        records.append(parse_record(arg, f"seq{len(records) + 1}", 1, f"<arg {k}>"))
    if not records:
        raise InputError("no input records (give them as arguments or with --input)")
    return records


# --- rendering -------------------------------------------------------------


def _num(value):
    """JSON form of a number: 'p/q' string when exact, float otherwise."""
    if isinstance(value, Fraction):
        return str(value)
    return float(value)


def _sig(value):
    return f"{float(value):.6g}"


def _prob_text(probs):
    if all(isinstance(p, Fraction) for p in probs):
        return " ".join(str(p) for p in probs)
    return " ".join(_sig(p) for p in probs)


def _row(name, probs, mom, width):
    text = f"{name:<{width}}  {_prob_text(probs)} | {_sig(mom.expectation)} | {_sig(mom.variance)}"
    if isinstance(mom.variance, Fraction):
        text += f"\n{'':<{width}}  exact: E = {mom.expectation}, Var = {mom.variance}"
    return text


def _dump(payload):
    return json.dumps(payload, sort_keys=True, indent=2)


# --- commands --------------------------------------------------------------


def cmd_pmf(records, kind="opm", normalize=False, tol_prod=None):
    """Per-record distribution and moments.  Returns (payload, text)."""
    builders = {"apm": apm, "gpm": gpm, "opm": lambda s: opm(s, tol_prod)}
    out, lines = [], []
    width = max(len(r.name) for r in records)
    for rec in records:
        seq = ValueSequence(rec.values)
        entry = {"name": rec.name, "values": [_num(v) for v in seq], "kind": kind.upper()}
        if normalize:
            norm = geometric_normalize(seq)
            seq = norm.normalized
            entry["scale"] = _num(norm.scale)
            entry["normalized"] = [_num(v) for v in seq]
        try:
            dist = builders[kind](seq)
        except OPMError as exc:
            raise OPMError(f"{rec.name}: {exc}") from exc
        mom = moments(dist)
        entry.update(
            probs=[_num(p) for p in dist.probs],
            expectation=_num(mom.expectation),
            variance=_num(mom.variance),
            mode=seq.mode,
        )
        out.append(entry)
        lines.append(_row(rec.name, dist.probs, mom, width))
    header = f"{kind.upper()}  (probabilities | expectation | variance)"
    return {"command": "pmf", "records": out}, "\n".join([header] + lines)


def cmd_search(records, config=None):
    """Minimum-variance ordering for each (normalized) record."""
    config = config or SearchConfig()
    out, lines = [], []
    for rec in records:
        seq = ValueSequence(rec.values)
        norm = geometric_normalize(seq)
        # Map normalized values back to raw ones to report the ordering.
        raw_of = dict(zip(norm.normalized, seq))
        try:
            result = min_variance_ordering(norm.normalized, config)
        except OPMError as exc:
            raise OPMError(f"{rec.name}: {exc}") from exc
        ordering = [raw_of[v] for v in result.best_ordering]
        mom = moments(result.best_distribution)
        out.append(
            {
                "name": rec.name,
                "values": [_num(v) for v in seq],
                "best_ordering": [_num(v) for v in ordering],
                "probs": [_num(p) for p in result.best_distribution.probs],
                "expectation": _num(mom.expectation),
                "variance": _num(result.best_variance),
                "method": result.method,
                "classes_examined": result.classes_examined,
                "seed": result.seed,
                "mode": result.best_ordering.mode,
            }
        )
        lines.append(
            "\n".join(
                [
                    f"{rec.name}: best ordering {', '.join(str(v) for v in ordering)}",
                    f"  OPM: {_prob_text(result.best_distribution.probs)}",
                    f"  expectation {_sig(mom.expectation)}  variance {_sig(result.best_variance)}",
                    f"  method {result.method}, {result.classes_examined} orderings examined",
                ]
            )
        )
    return {"command": "search", "records": out}, "\n".join(lines)


def cmd_compare(records, tol_tie=None, extras=False):
    """Rank records by ascending OPM variance after normalization."""
    report = compare([(r.name, r.values) for r in records], tol_tie=tol_tie, extras=extras)
    out, lines = [], []
    width = max(len(r.name) for r in records)
    for ev in report.evaluations:
        entry = {
            "name": ev.name,
            "values": [_num(v) for v in ev.raw],
            "scale": _num(ev.normalization.scale),
            "probs": [_num(p) for p in ev.distribution.probs],
            "expectation": _num(ev.expectation),
            "variance": _num(ev.variance),
        }
        lines.append(_row(ev.name, ev.distribution.probs, ev.moments, width))
        if ev.extras:
            for kind, (dist, mom) in ev.extras.items():
                entry[kind.lower()] = {
                    "probs": [_num(p) for p in dist.probs],
                    "expectation": _num(mom.expectation),
                    "variance": _num(mom.variance),
                }
                lines.append(_row(f"  {kind}", dist.probs, mom, width))
        out.append(entry)
    winner = list(report.winner) if report.tie else report.winner
    if report.tie:
        lines.append(f"tie: {', '.join(report.winner)}")
    else:
        lines.append(f"winner: {report.winner}")
    lines.append(f"ranking: {' < '.join(report.ranking)}")
    lines.extend(f"warning: {w}" for w in report.warnings)
    header = f"{'':<{width}}  OPM | expectation | variance"
    payload = {
        "command": "compare",
        "records": out,
        "ranking": report.ranking,
        "winner": winner,
        "tie": report.tie,
        "warnings": report.warnings,
    }
    return payload, "\n".join([header] + lines)


def cmd_identity(n, trials, seed=0):
    """Check the partition identity on random exact unit-product sequences."""
    if n < 1 or trials < 1:
        raise OPMError("n and trials must both be at least 1")
    rng = random.Random(seed)
    zeros = 0
    worst = Fraction(0)
    worst_float = 0.0
    for _ in range(trials):
        seq = random_unit_product(n, rng)
        residual = verify_partition_identity(seq)
        zeros += residual == 0
        worst = max(worst, abs(residual))
        # The float copy only has a product of one up to rounding.
        worst_float = max(worst_float, abs(verify_partition_identity(seq.as_approx(), 1e-9)))
    payload = {
        "command": "identity",
        "n": n,
        "trials": trials,
        "seed": seed,
        "exact_zeros": zeros,
        "max_abs_residual": _num(worst),
        "max_abs_residual_float": worst_float,
    }
    text = (
        f"n={n} trials={trials} seed={seed}\n"
        f"exact zeros: {zeros}/{trials}\n"
        f"max |residual| exact: {worst}  float: {worst_float:.3g}"
    )
    return payload, text


# --- entry point -----------------------------------------------------------


def _add_input(p):
    p.add_argument("records", nargs="*", help="records as [name=]v1,v2,...")
    p.add_argument("--input", "-i", metavar="PATH", help="record file, or - for stdin")


def build_parser():
    default_format = os.environ.get(FORMAT_ENV, "table")
    if default_format not in ("table", "json"):
        default_format = "table"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default=default_format)

    parser = argparse.ArgumentParser(
        prog="orderedpmf", description="Ordered probability mass functions of positive sequences."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pmf", parents=[common], help="APM, GPM or OPM of each record")
    _add_input(p)
    p.add_argument("--kind", choices=("apm", "gpm", "opm"), default="opm")
    p.add_argument("--normalize", action="store_true", help="divide by the geometric mean first")
    p.add_argument("--tol-prod", type=float, default=None)

    p = sub.add_parser("search", parents=[common], help="minimum-variance OPM ordering")
    _add_input(p)
    p.add_argument("--max-exhaustive", type=int, default=DEFAULT_MAX_EXHAUSTIVE)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("auto", "exhaustive", "local"), default="auto")

    p = sub.add_parser("compare", parents=[common], help="rank records by OPM variance")
    _add_input(p)
    p.add_argument("--tol-tie", type=float, default=None,
                   help=f"tie tolerance (default 0 exact, {DEFAULT_TOL_TIE:g} approx)")
    p.add_argument("--extras", action="store_true", help="also show APM and GPM rows")

    p = sub.add_parser("identity", parents=[common], help="check the partition identity")
    p.add_argument("-n", "--n", type=int, required=True, dest="n")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(args, stdin=None):
    if args.command == "identity":
        return cmd_identity(args.n, args.trials, args.seed)
    records = load_records(args.records, args.input, stdin)
    if args.command == "pmf":
        return cmd_pmf(records, args.kind, args.normalize, args.tol_prod)
    if args.command == "search":
        config = SearchConfig(
            max_exhaustive=args.max_exhaustive,
            restarts=args.restarts,
            seed=args.seed,
            mode=args.mode,
        )
        return cmd_search(records, config)
    if args.command == "compare":
        return cmd_compare(records, args.tol_tie, args.extras)
    raise AssertionError(args.command)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text = run(args)
    except (OPMError, ValueError) as exc:
        print(f"orderedpmf {args.command}: error: {exc}", file=sys.stderr)
        return 1
    print(_dump(payload) if args.format == "json" else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
