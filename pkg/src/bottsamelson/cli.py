"""
Command line entry point ``bottsamelson``.

Exit codes: 0 success or agreement, 1 malformed input or guard violation,
2 a mathematical disagreement or a failed membership test.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import configgeom as cg
from .characters import bott_samelson_char, demazure_char, full_char, weyl_char_oracle
from .diagrams import render_wiring, render_young
from .families import (MultFamily, chamber_family, find_embedding_word, format_subset,
                       full_chamber_family, inversion_family, parse_family,
                       parse_mult_family, separation_violation)
from .schubert import schubert_ascending, schubert_descending, verify_kp
from .verify import config_sweep, conjecture_sweep, operator_identities, oracle_sweep
from .weyl import Permutation, is_reduced

OK, INPUT_ERROR, DISAGREE = 0, 1, 2


class InputError(ValueError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    """``"2,4,1"`` or ``"241"``."""
    text = text.strip()
    try:
        if "," in text or " " in text:
            return tuple(int(t) for t in text.replace(" ", ",").split(",") if t)
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise InputError(f"cannot parse integer list {text!r}") from None


def _perm(text: str) -> Permutation:
    try:
        return Permutation(_ints(text))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _infer_n(family_text: str) -> int:
    digits = [int(ch) for ch in family_text if ch.isdigit()]
    if any(ch in family_text for ch in "{}"):
        raise InputError("--n is required for brace-delimited subsets")
    return max(digits, default=1)


def _word(text: str, n: int) -> tuple[int, ...]:
    word = _ints(text) if text.strip() else ()
    if any(not 1 <= i < n for i in word):
        raise InputError(f"letters of {word} must lie in 1..{n - 1}")
    return word


def _emit(args, text: str, payload: dict):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- subcommands -------------------------------------------------------------

def run_schubert(args) -> int:
    w = _perm(args.perm)
    polys = {}
    if args.method in ("descending", "both"):
        polys["descending"] = schubert_descending(w)
    if args.method in ("ascending", "both"):
        polys["ascending"] = schubert_ascending(w)
    agree = len(set(polys.values())) == 1
    payload = {"perm": list(w), "n": w.n,
               "polys": {k: v.to_json() for k, v in polys.items()},
               "text": {k: str(v) for k, v in polys.items()}}
    if args.method == "both":
        payload["agree"] = agree
        text = "\n".join(f"{k}: {v}" for k, v in polys.items())
        text += "\n" + ("AGREE" if agree else "DISAGREE")
    else:
        text = str(next(iter(polys.values())))
    _emit(args, text, payload)
    return OK if agree else DISAGREE


def run_verify(args) -> int:
    suite = args.suite
    if suite == "kp":
        report = verify_kp(args.n)
        payload = {"suite": "kp", "n": args.n, "total": report.total, "agree": report.agree,
                   "mismatches": [str(m[0]) for m in report.mismatches]}
        _emit(args, str(report), payload)
        return OK if report.ok else DISAGREE
    if suite == "oracle":
        report = oracle_sweep(args.n, args.max_boxes)
    elif suite == "operators":
        report = operator_identities()
    elif suite == "config":
        report = config_sweep(args.n, args.samples, args.seed)
    else:
        report = conjecture_sweep(args.n, samples=args.samples, seed=args.seed)
    text = str(report)
    if report.failures:
        text += "\n" + "\n".join(f"  FAIL {f}" for f in report.failures[:20])
    _emit(args, text, report.to_json())
    return OK if report.ok else DISAGREE


def run_chamber(args) -> int:
    n = args.n
    word = _word(args.word, n)
    if not is_reduced(word, n):
        raise InputError(f"word {word} is not reduced")
    family = full_chamber_family(word, n) if args.full else chamber_family(word, n)
    payload = {"word": list(word), **family.to_json()}
    if args.render == "wiring":
        text = render_wiring(word, n, ascii=args.ascii)
    elif args.render == "young":
        text = render_young(MultFamily.ones(family), ascii=args.ascii)
    else:
        text = str(family)
    _emit(args, text, payload)
    return OK


def run_strongsep(args) -> int:
    n = args.n or _infer_n(args.family)
    family = parse_family(args.family, n)
    bad = separation_violation(family)
    payload = {**family.to_json(), "strongly_separated": bad is None}
    if bad is None:
        word = find_embedding_word(family)
        payload["certificate"] = list(word)
        text = "YES" + (f" (embeds in D+ of {''.join(map(str, word))})" if args.certificate else "")
    else:
        pair = [format_subset(c, n) for c in bad]
        payload["violation"] = pair
        text = f"NO: ({pair[0]}, {pair[1]})"
    _emit(args, text, payload)
    return OK


def run_inversion(args) -> int:
    w = _perm(args.perm)
    dm = inversion_family(w)
    _emit(args, str(dm), {"perm": list(w), **dm.to_json()})
    return OK


def run_char(args) -> int:
    n = args.n or _infer_n(args.family)
    dm = parse_mult_family(args.family, n, args.mult)
    bad = separation_violation([c for c in dm.members if c])
    if bad is not None and args.word is None:
        pair = [format_subset(c, n) for c in bad]
        _emit(args, f"NOT STRONGLY SEPARATED: ({pair[0]}, {pair[1]})",
              {**dm.to_json(), "strongly_separated": False, "violation": pair})
        return DISAGREE
    word = None if args.word is None else _word(args.word, n)
    f = full_char(dm, word) if args.unflagged else demazure_char(dm, word)
    payload = {**dm.to_json(), "flagged": not args.unflagged, "poly": f.to_json(), "text": str(f)}
    text = str(f)
    status = OK
    if args.oracle:
        g = weyl_char_oracle(dm, flagged=not args.unflagged)
        payload["oracle_agrees"] = g == f
        text += "\noracle: " + ("AGREE" if g == f else f"DISAGREE ({g})")
        status = OK if g == f else DISAGREE
    _emit(args, text, payload)
    return status


def run_bschar(args) -> int:
    n = args.n
    word = _word(args.word, n)
    mult = _ints(args.mult) if "," in args.mult else tuple(int(t) for t in args.mult.split())
    if len(mult) != len(word):
        raise InputError("one multiplicity per letter is required")
    f = bott_samelson_char(word, mult, n)
    _emit(args, str(f), {"word": list(word), "mult": list(mult), "n": n,
                         "poly": f.to_json(), "text": str(f)})
    return OK


def run_config(args) -> int:
    n = args.n
    word = _word(args.word, n)
    if not is_reduced(word, n):
        raise InputError(f"word {word} is not reduced")
    raw = Path(args.file).read_text() if args.file != "-" else sys.stdin.read()
    try:
        fmt = args.format or ("json" if raw.lstrip().startswith("{") else "text")
        spaces = cg.config_from_json(raw) if fmt == "json" else cg.parse_config_text(raw, n)
    except (ValueError, KeyError) as exc:
        raise InputError(f"cannot read configuration: {exc}") from None
    l = len(word)
    mode = args.mode
    if mode == "auto":
        mode = "inclusion" if len(spaces) == n + l else "theta"
    if mode == "inclusion":
        if len(spaces) != n + l:
            raise InputError(f"expected {n + l} subspaces indexed by D+, got {len(spaces)}")
        members = tuple(full_chamber_family(word, n).members)
        config = cg.Configuration(members, tuple(spaces))
        verdict = cg.is_inclusion_point(word, config)
    else:
        if len(spaces) != l:
            raise InputError(f"expected {l} subspaces in word order, got {len(spaces)}")
        verdict = cg.theta_image_conditions(word, spaces)
    _emit(args, "MEMBER" if verdict else "NOT A MEMBER",
          {"word": list(word), "n": n, "mode": mode, "member": verdict})
    return OK if verdict else DISAGREE


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bottsamelson",
                                description="Chamber families, Demazure characters and "
                                            "Schubert polynomials for GL(n).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("schubert", parents=[common], help="Schubert polynomial of a permutation")
    s.add_argument("--perm", required=True)
    s.add_argument("--method", choices=("descending", "ascending", "both"), default="descending")
    s.set_defaults(func=run_schubert)

    s = sub.add_parser("verify", parents=[common], help="batch verification suites")
    s.add_argument("suite", choices=("kp", "oracle", "operators", "config", "conjecture"))
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--max-boxes", type=int, default=6)
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=run_verify)

    s = sub.add_parser("chamber", parents=[common], help="chamber family of a reduced word")
    s.add_argument("--word", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--full", action="store_true", help="prepend [1], ..., [n]")
    s.add_argument("--render", choices=("wiring", "young"))
    s.add_argument("--ascii", action="store_true")
    s.set_defaults(func=run_chamber)

    s = sub.add_parser("strongsep", parents=[common], help="strong separation test")
    s.add_argument("--family", required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--certificate", action="store_true", help="print an embedding word")
    s.set_defaults(func=run_strongsep)

    s = sub.add_parser("inversion", parents=[common], help="inversion family I(w)")
    s.add_argument("--perm", required=True)
    s.set_defaults(func=run_inversion)

    s = sub.add_parser("char", parents=[common], help="character of a (flagged) Weyl module")
    s.add_argument("--family", required=True, help='"12,24" or "12:1,24:2"')
    s.add_argument("--mult", help="multiplicities, one per member")
    s.add_argument("--n", type=int)
    s.add_argument("--word", help="reduced word embedding the family")
    s.add_argument("--unflagged", action="store_true")
    s.add_argument("--oracle", action="store_true", help="cross-check against minor products")
    s.set_defaults(func=run_char)

    s = sub.add_parser("bschar", parents=[common], help="Bott-Samelson character, any word")
    s.add_argument("--word", required=True)
    s.add_argument("--mult", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=run_bschar)

    s = sub.add_parser("config", help="configuration membership")
    csub = s.add_subparsers(dest="action", required=True)
    c = csub.add_parser("check", parents=[common])
    c.add_argument("--word", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--file", required=True, help="matrix file, or - for stdin")
    c.add_argument("--format", choices=("text", "json"))
    c.add_argument("--mode", choices=("auto", "inclusion", "theta"), default="auto",
                   help="inclusion: n+l spaces indexed by D+; theta: l spaces in word order")
    c.set_defaults(func=run_config)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
