"""Command line entry point: ``braidsig <subcommand> ...``.

Exit codes: 0 success, 1 violations found, 2 usage error, 3 input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import theorems
from .braid import BraidParseError, closure_stats, parse_braid
from .garside3 import NAMES, StrandCountError, conjugate_to_positive, left_canonical_form, murasugi_class
from .seifert import link_signature
from .twobridge import ConwayError, components, family_invariants, fraction, parse_conway

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

CLAIMS = ("main", "t2c", "inequality", "smoothing", "signature-formula", "positivity", "two-bridge", "geography",
          "candidates")


class InputError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _word(text: str):
    return parse_braid(text)


def cmd_nf(text: str, args) -> tuple[dict, str]:
    w = _word(text)
    nf = left_canonical_form(w)
    data = {"word": str(w), "delta_power": nf.delta_power, "factors": [NAMES[f] for f in nf.factors],
            "inf": nf.inf, "sup": nf.sup, "normal_form": str(nf)}
    return data, str(nf)


def cmd_classify(text: str, args) -> tuple[dict, str]:
    w = _word(text)
    cls = murasugi_class(w)
    positive, witness = conjugate_to_positive(w)
    data = {
        "word": str(w),
        "family": cls.family,
        "n": cls.n,
        "p": cls.p,
        "q": cls.q,
        "pairs": [list(x) for x in cls.pairs],
        "class": str(cls),
        "conjugate_to_positive": positive,
        "positive_witness": str(witness) if witness is not None else None,
    }
    human = f"{cls}\nconjugate to positive: {'yes, ' + str(witness) if positive else 'no'}"
    return data, human


def cmd_sig(text: str, args) -> tuple[dict, str]:
    w = _word(text)
    sig, null = link_signature(w)
    stats = closure_stats(w)
    data = {"word": str(w), "sigma": sig, "nullity": null, "components": stats.components, "betti": stats.betti}
    human = f"sigma={sig} nullity={null} components={stats.components} b1={stats.betti}"
    return data, human


def _link(text: str):
    return parse_conway(text) if text.strip().startswith("C") else _word(text)


def cmd_invariants(text: str, args) -> tuple[dict, str]:
    rep = theorems.link_report(_link(text))
    data = {"input": text.strip(), **rep.to_dict()}
    cr = "?" if rep.crossing_number is None else rep.crossing_number
    human = (f"{rep.name}: sigma={rep.sigma} nullity={rep.nullity} components={rep.components} "
             f"cr={cr} ({rep.status}) braid_index={rep.braid_index}")
    return data, human


def cmd_two_bridge(text: str, args) -> tuple[dict, str]:
    d = parse_conway(text)
    rep = theorems.link_report(d)
    num, den = fraction(d)
    data = {"diagram": str(d), "fraction": [num, den], "components": components(d), "crossing_number": rep.crossing_number,
            "sigma": rep.sigma, "nullity": rep.nullity}
    if d.family != "generic":
        data["closed_form"] = list(family_invariants(d))
    human = f"{d}: fraction {num}/{den} components={components(d)} cr={rep.crossing_number} sigma={rep.sigma}"
    return data, human


def cmd_smooth(text: str, args) -> tuple[dict, str]:
    w = _word(text)
    if args.position is None:
        raise InputError("smooth needs a position")
    try:
        res = theorems.smooth(w, args.position)
    except IndexError as exc:
        raise InputError(str(exc)) from None
    before, after = link_signature(w)[0], link_signature(res)[0]
    data = {"word": str(w), "position": args.position, "result": str(res), "sigma_before": before, "sigma_after": after,
            "delta_sigma": after - before}
    return data, f"{res}  (sigma {before} -> {after}, change {after - before:+d})"


WORD_COMMANDS = {
    "nf": cmd_nf,
    "classify": cmd_classify,
    "sig": cmd_sig,
    "invariants": cmd_invariants,
    "two-bridge": cmd_two_bridge,
    "smooth": cmd_smooth,
}


def _run_verify(args) -> dict:
    claim = args.claim
    if claim == "geography":
        return theorems.geography_table(args.max_crossings or 12)
    if claim == "candidates":
        return theorems.verify_smoothing_candidates(args.max_crossings or 12)
    if claim == "two-bridge":
        return theorems.verify_two_bridge()

    def one(shards: int, index: int) -> dict:
        kw = {"shards": shards, "shard_index": index}
        if claim == "main":
            return theorems.verify_main_theorem(args.max_crossings or 12, **kw)
        if claim == "t2c":
            return theorems.verify_t2c_theorem(args.max_crossings or 12, **kw)
        if claim == "inequality":
            return theorems.verify_inequality(args.max_crossings or 10, args.strands or 3, seed=args.seed, **kw)
        if claim == "smoothing":
            return theorems.verify_smoothing_lemma(args.max_crossings or 8, seed=args.seed, strands=args.strands or 3, **kw)
        if claim == "signature-formula":
            return theorems.verify_signature_formula(**kw)
        return theorems.verify_positivity(**kw)

    if args.shard_index is not None:
        return one(args.shards, args.shard_index)
    if args.shards == 1:
        return one(1, 0)
    return theorems.merge_reports([one(args.shards, i) for i in range(args.shards)])


def _human_report(rep: dict) -> str:
    lines = [f"claim: {rep['claim']}", f"parameters: {_dump(rep['parameters'])}", f"checked: {rep['checked']}",
             f"violations: {len(rep['violations'])}"]
    lines += [f"  {_dump(v)}" for v in rep["violations"][:20]]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidsig", description="Signatures and classifications of braid closures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--csv", action="store_true", help="CSV output (tables only)")
        p.add_argument("--max-crossings", type=int, default=None)
        p.add_argument("--strands", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--shards", type=int, default=1)
        p.add_argument("--shard-index", type=int, default=None)

    for name in WORD_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="braid word, Conway text, or '-' to read one per line from stdin")
        if name == "smooth":
            p.add_argument("position", type=int, nargs="?")
        common(p)
    p = sub.add_parser("verify")
    p.add_argument("claim", choices=CLAIMS)
    common(p)
    p = sub.add_parser("geography")
    common(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.shards < 1 or (args.shard_index is not None and not 0 <= args.shard_index < args.shards):
        print("error: need shards >= 1 and 0 <= shard-index < shards", file=sys.stderr)
        return EXIT_USAGE
    out = sys.stdout

    if args.command == "geography":
        table = theorems.geography_table(args.max_crossings or 12)
        if args.csv:
            out.write(theorems.geography_csv(table))
        elif args.json:
            out.write(_dump(table) + "\n")
        else:
            for row in table["details"]["cells"]:
                mark = row["witness"] if row["realizable"] else "-"
                out.write(f"c={row['c']:>2} d={row['d']:>3}  {mark}\n")
        return EXIT_VIOLATIONS if table["violations"] else EXIT_OK

    if args.command == "verify":
        rep = _run_verify(args)
        if args.csv and args.claim == "geography":
            out.write(theorems.geography_csv(rep))
        else:
            out.write((_dump(rep) if args.json else _human_report(rep)) + "\n")
        return EXIT_VIOLATIONS if rep["violations"] else EXIT_OK

    handler = WORD_COMMANDS[args.command]
    lines = sys.stdin.read().splitlines() if args.input == "-" else [args.input]
    status = EXIT_OK
    for lineno, text in enumerate(lines, 1):
        if not text.strip() and args.input == "-":
            continue
        try:
            data, human = handler(text, args)
        except (BraidParseError, ConwayError, StrandCountError, InputError, ValueError) as exc:
            where = f"line {lineno}: " if args.input == "-" else ""
            print(f"error: {where}{exc}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        out.write((_dump(data) if args.json else human) + "\n")
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
