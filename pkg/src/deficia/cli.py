"""Command-line interface.

Every subcommand emits JSON lines (one object per result) or a short text
summary.  All numbers in JSON output are decimal strings so that
arbitrarily large integers survive any downstream JSON parser.  Exit codes:
0 on success (and all verifications passing), 1 when a verification fails
or a claim is refuted, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .classify import Side, classify_full
from .search import (
    SearchConfig,
    search_range,
    search_structured,
    sigma_sieve,
    verify_lemma1,
    verify_lemma2,
    verify_theorem,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class Sink:
    """Collects structured records and renders them in the requested
    format: jsonl (one object per line), json (single array), or csv
    (flattened columns; nested values become JSON strings).  Plain-text
    lines pass straight through via write()."""

    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self._records: list[dict] = []

    def emit(self, obj: dict) -> None:
        if self.fmt == "jsonl":
            json.dump(obj, self.out, sort_keys=True, separators=(",", ":"))
            self.out.write("\n")
        else:
            self._records.append(obj)

    def write(self, text: str) -> None:
        self.out.write(text)

    def close(self) -> None:
        if self.fmt == "json":
            json.dump(self._records, self.out, sort_keys=True, indent=2)
            self.out.write("\n")
        elif self.fmt == "csv" and self._records:
            fields = sorted({k for r in self._records for k in r})
            writer = csv.DictWriter(self.out, fieldnames=fields)
            writer.writeheader()
            for r in self._records:
                writer.writerow({
                    k: v if isinstance(v, (str, int, float, bool)) or v is None
                    else json.dumps(v, sort_keys=True)
                    for k, v in r.items()
                })


def _emit(obj: dict, out) -> None:
    out.emit(obj)


def _side(name: str) -> Side:
    return Side.DEFICIENT if name == "deficient" else Side.NEAR


def _threads() -> int:
    raw = os.environ.get("DEFICIA_THREADS", "1")
    try:
        val = int(raw)
    except ValueError as exc:
        raise SystemExit(f"DEFICIA_THREADS must be an integer, got {raw!r}") from exc
    return max(1, val)


def _record_json(rec) -> dict:
    return {
        "n": str(rec.n),
        "sigma": str(rec.sigma),
        "delta": str(rec.delta),
        "status": rec.status.value,
        "witnesses": {
            str(k): [[str(d) for d in w.divisors] for w in ws]
            for k, ws in sorted(rec.witnesses.items())
        },
    }


def _cmd_classify(args, out) -> int:
    for n in args.n:
        rec = classify_full(n, kmax=args.kmax, limit=args.witness_limit)
        if args.format != "text":
            _emit(_record_json(rec), out)
        else:
            ws = "; ".join(
                f"k={k}: " + ", ".join("{" + ",".join(map(str, w.divisors)) + "}"
                                       for w in sets)
                for k, sets in sorted(rec.witnesses.items())
            )
            out.write(
                f"n={rec.n} sigma={rec.sigma} delta={rec.delta} "
                f"status={rec.status.value}" + (f" witnesses: {ws}" if ws else "")
                + "\n"
            )
    return EXIT_OK


def _cmd_search(args, out) -> int:
    config = SearchConfig(
        lo=args.lo,
        hi=args.hi,
        kset=frozenset(args.k),
        side=_side(args.side),
        odd_only=args.odd_only,
        omega_max=args.omega_max,
        segment_size=args.segment_size,
        checkpoint_path=args.checkpoint,
        hits_path=args.hits_path,
        witness_limit=args.witness_limit,
    )
    count = 0
    for hit in search_range(config):
        count += 1
        if args.format != "text":
            _emit(hit.to_json_dict(), out)
        else:
            rec = hit.record
            out.write(f"n={rec.n} delta={rec.delta} "
                      f"k={sorted(hit.matched_k)}\n")
    if args.format == "text":
        out.write(f"{count} hit(s) in [{args.lo}, {args.hi}]\n")
    return EXIT_OK


def _cmd_search_structured(args, out) -> int:
    hits = search_structured(
        p1_range=(args.p1_min, args.p1_max),
        p2_range=(args.p2_min, args.p2_max),
        alpha_max=args.alpha_max,
        beta_max=args.beta_max,
        k=args.k,
        witness_limit=args.witness_limit,
    )
    for hit in hits:
        if args.format != "text":
            _emit(hit.to_json_dict(), out)
        else:
            out.write(f"n={hit.record.n} delta={hit.record.delta}\n")
    return EXIT_OK


def _cmd_verify_lemma1(args, out) -> int:
    rep = verify_lemma1(args.bound, args.kmax, segment_size=args.segment_size)
    payload = {
        "check": "square-iff-odd-k",
        "bound": str(rep.bound),
        "kmax": str(rep.kmax),
        "passed": rep.passed,
        "counterexamples": [[str(n), str(k)] for n, k in rep.counterexamples],
        "counts": {
            f"k={k},square={sq}": str(c) for (k, sq), c in sorted(rep.counts.items())
        },
    }
    _report(payload, args.format, out)
    return EXIT_OK if rep.passed else EXIT_FAILED


def _cmd_verify_lemma2(args, out) -> int:
    rep = verify_lemma2(args.bound, args.kmax, prime=args.prime)
    payload = {
        "check": "prime-power-witnesses",
        "bound": str(rep.bound),
        "kmax": str(rep.kmax),
        "passed": rep.passed,
        "hits": [[str(n), str(k)] for n, k in rep.hits],
        "counterexamples": [[str(n), str(k)] for n, k in rep.counterexamples],
    }
    _report(payload, args.format, out)
    return EXIT_OK if rep.passed else EXIT_FAILED


def _cmd_verify_theorem(args, out) -> int:
    rep = verify_theorem(args.bound, segment_size=args.segment_size)
    payload = {
        "check": "unique-exactly-3-deficient",
        "bound": str(rep.bound),
        "passed": rep.passed,
        "hits": [str(n) for n in rep.hits],
    }
    _report(payload, args.format, out)
    return EXIT_OK if rep.passed else EXIT_FAILED


def _cmd_verify_cases(args, out) -> int:
    from .caseproof import SHIPPED_LEDGER, ledger_from_json, run_case_ledger

    if args.ledger is not None:
        with open(args.ledger) as fh:
            entries = ledger_from_json(fh.read())
    else:
        entries = SHIPPED_LEDGER
    result = run_case_ledger(entries)
    passed = result.all_proved and result.coverage_complete
    payload = {
        "check": "case-ledger",
        "entries": str(len(entries)),
        "all_proved": result.all_proved,
        "coverage_complete": result.coverage_complete,
        "missing_tags": list(result.missing_tags),
        "unknown_tags": list(result.unknown_tags),
        "anchors": list(result.anchors),
        "survivors": [str(n) for n in result.survivors],
        "passed": passed,
    }
    if args.format != "text":
        for eid, v in result.verdicts.items():
            _emit({"entry": eid, "status": v.status.value,
                   "evidence": v.evidence}, out)
        _emit(payload, out)
    else:
        _report(payload, "text", out)
        if not passed:
            from .caseproof import VerdictStatus

            for eid, v in result.verdicts.items():
                if v.status is not VerdictStatus.PROVED:
                    out.write(f"  {eid}: {v.status.value}: {v.evidence}\n")
    return EXIT_OK if passed else EXIT_FAILED


def _sieve_chunk(span: tuple[int, int]) -> list[int]:
    return sigma_sieve(span[0], span[1])


def _cmd_sieve(args, out) -> int:
    spans = []
    lo = args.lo
    while lo <= args.hi:
        hi = min(lo + args.segment_size - 1, args.hi)
        spans.append((lo, hi))
        lo = hi + 1
    workers = _threads()
    if workers > 1 and len(spans) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_sieve_chunk, spans))
    else:
        chunks = [_sieve_chunk(s) for s in spans]
    for (slo, _), values in zip(spans, chunks):
        for i, s in enumerate(values):
            n = slo + i
            if args.format != "text":
                _emit({"n": str(n), "sigma": str(s)}, out)
            else:
                out.write(f"{n} {s}\n")
    return EXIT_OK


def _report(payload: dict, fmt: str, out) -> None:
    if fmt != "text":
        _emit(payload, out)
    else:
        for key, val in payload.items():
            out.write(f"{key}: {val}\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "jsonl", "csv", "text"),
                   default="jsonl")
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deficia",
        description="search and proof-verification for numbers whose "
        "divisor sum misses perfection by an exact sum of k divisors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one or more integers")
    p.add_argument("n", type=int, nargs="+")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--witness-limit", type=int, default=16)
    _add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("search", help="scan a range for exact-k hits")
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", "--bound", type=int, required=True, dest="hi")
    p.add_argument("--k", type=int, action="append", required=True,
                   help="repeatable: witness-count values to match")
    p.add_argument("--side", choices=("deficient", "near"),
                   default="deficient")
    p.add_argument("--odd-only", action="store_true")
    p.add_argument("--omega-max", type=int, default=None)
    p.add_argument("--segment-size", type=int, default=1 << 16)
    p.add_argument("--checkpoint", metavar="PATH", default=None)
    p.add_argument("--hits-path", metavar="PATH", default=None)
    p.add_argument("--witness-limit", type=int, default=16)
    _add_common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser(
        "search-structured",
        help="scan square candidates p1^2a * p2^2b directly",
    )
    p.add_argument("--p1-min", type=int, default=3)
    p.add_argument("--p1-max", type=int, required=True)
    p.add_argument("--p2-min", type=int, default=3)
    p.add_argument("--p2-max", type=int, required=True)
    p.add_argument("--alpha-max", type=int, default=4)
    p.add_argument("--beta-max", type=int, default=4)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--witness-limit", type=int, default=16)
    _add_common(p)
    p.set_defaults(func=_cmd_search_structured)

    p = sub.add_parser(
        "verify-lemma1",
        help="odd n has an exact-k deficient witness only when "
        "squareness matches the parity of k",
    )
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--segment-size", type=int, default=1 << 16)
    _add_common(p)
    p.set_defaults(func=_cmd_verify_lemma1)

    p = sub.add_parser(
        "verify-lemma2",
        help="the only prime powers with an exact-k witness are 2^a, k=1",
    )
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--prime", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_verify_lemma2)

    p = sub.add_parser(
        "verify-theorem",
        help="scan odd n with at most two prime factors for exactly-3 "
        "deficient hits; expect exactly 1521",
    )
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--segment-size", type=int, default=1 << 16)
    _add_common(p)
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser(
        "verify-cases",
        help="replay the machine-checkable case ledger",
    )
    p.add_argument("--ledger", metavar="PATH", default=None,
                   help="JSON ledger file (defaults to the shipped ledger)")
    _add_common(p)
    p.set_defaults(func=_cmd_verify_cases)

    p = sub.add_parser("sieve", help="emit sigma(n) over a range")
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--segment-size", type=int, default=1 << 18)
    _add_common(p)
    p.set_defaults(func=_cmd_sieve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already; re-raise as-is
        return int(exc.code or 0)
    out = sys.stdout
    close = False
    if args.out is not None:
        out = open(args.out, "w")
        close = True
    sink = Sink(args.format, out)
    try:
        try:
            code = args.func(args, sink)
            sink.close()
            return code
        except (ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    finally:
        if close:
            out.close()


if __name__ == "__main__":
    raise SystemExit(main())
