"""schubtwist command line.

Weights are read in fundamental-weight coordinates (``--weight 1,-2``) or in
the simple-root basis (``--weight-root-basis 1,1``).  Words are 1-based and
comma separated (``--word 1,2,1``).

Exit codes: 0 success, 1 input error or failed verification, 2 the engine
could not certify the answer (Bounds) or a requested hypothesis failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .cache import ResultCache, cached
from .charring import CharacterError, FormalCharacter, demazure_char
from .cohomology import h_full_flag, h_line_bundle, h_module_coefficients
from .rootsys import RootSystemError, build
from .strings import MODES
from .tangent import bsdh_tangent, j_set, schubert_stabilizer
from .twisted import TwistedError, twisted_bsdh_report, twisted_schubert_report
from .verify import SUITES, run_suite
from .weyl import (
    WeylError,
    all_reduced_words,
    bruhat_leq,
    enumerate_parabolic,
    format_word,
    from_word,
    left_descents,
    longest_element,
    parse_word,
    right_descents,
)

INPUT_ERRORS = (RootSystemError, WeylError, CharacterError, TwistedError, ValueError, KeyError)
VALUE_FLAGS = ("--weight", "--weight-root-basis", "--module", "--word", "--other")


def _fix_negative_values(argv):
    # argparse reads "-1,0" as an option; glue such values to their flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def parse_ints(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ValueError(f"cannot parse integer vector {text!r}") from None


def read_weight(rs, args):
    if getattr(args, "weight_root_basis", None):
        coords = parse_ints(args.weight_root_basis)
        if len(coords) != rs.rank:
            raise ValueError(f"expected {rs.rank} root coordinates, got {len(coords)}")
        return rs.from_root_coords(coords)
    if getattr(args, "weight", None) is None:
        raise ValueError("a weight is required (--weight or --weight-root-basis)")
    return rs.check_weight(parse_ints(args.weight))


def read_module(rs, text, root_basis=False):
    """'w1;w2:3;...' -> FormalCharacter; ':m' gives a multiplicity."""
    terms = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        wt, _, mult = chunk.partition(":")
        coords = parse_ints(wt)
        w = rs.from_root_coords(coords) if root_basis else rs.check_weight(coords)
        terms[w] = terms.get(w, 0) + (int(mult) if mult else 1)
    ch = FormalCharacter(terms)
    if not ch.is_nonnegative():
        raise CharacterError("module multiplicities must be positive")
    return ch


def read_word(rs, args, required=True):
    if args.word is None:
        if required:
            raise ValueError("--word is required")
        return None
    word = parse_word(args.word) if args.word.strip() else ()
    for i in word:
        if not 0 <= i < rs.rank:
            raise ValueError(f"letter {i + 1} out of range for rank {rs.rank}")
    return word


def _elt_json(w):
    return {"word": format_word(w.word), "length": w.length()}


# ---------------------------------------------------------------------------
# commands: each returns (request, compute)


def cmd_roots(rs, args):
    return {}, rs.to_dict


def cmd_weyl(rs, args):
    action = args.action
    if action == "enumerate":
        J = parse_word(args.J) if args.J else None

        def compute():
            return [_elt_json(w) for w in enumerate_parabolic(rs, J)]

        return {"action": action, "J": args.J}, compute
    if action == "longest":
        J = parse_word(args.J) if args.J else None
        return {"action": action, "J": args.J}, lambda: _elt_json(longest_element(rs, J))
    word = read_word(rs, args)
    w = from_word(rs, word)
    req = {"action": action, "word": list(word)}
    if action == "length":
        return req, lambda: {"length": w.length(), "reduced": w.length() == len(word)}
    if action == "descents":
        return req, lambda: {
            "left": [i + 1 for i in sorted(left_descents(w))],
            "right": [i + 1 for i in sorted(right_descents(w))],
        }
    if action == "reduced-words":
        return req, lambda: [format_word(x) for x in all_reduced_words(w, cap=args.cap)]
    if action == "bruhat":
        if args.other is None:
            raise ValueError("bruhat needs --other")
        v = from_word(rs, parse_word(args.other))
        req["other"] = list(v.word)
        return req, lambda: {"leq": bruhat_leq(v, w)}
    raise ValueError(f"unknown weyl action {action!r}")


def cmd_demazure(rs, args):
    word = read_word(rs, args)
    lam = read_weight(rs, args)
    return {"word": list(word), "weight": list(lam)}, lambda: {"character": demazure_char(rs, word, lam).to_json()}


def cmd_hcoh(rs, args):
    word = read_word(rs, args)
    lam = read_weight(rs, args)
    req = {"word": list(word), "weight": list(lam), "mode": args.mode}
    return req, lambda: h_line_bundle(rs, word, lam, args.mode).to_json()


def cmd_hcoh_mod(rs, args):
    if not args.module:
        raise ValueError("--module is required")
    module = read_module(rs, args.module, args.root_basis)
    word = read_word(rs, args, required=False)
    if word is None:
        word = longest_element(rs).word
    req = {"word": list(word), "module": module.to_json(), "mode": args.mode}
    return req, lambda: h_module_coefficients(rs, word, module, args.mode).to_json()


def cmd_bwb(rs, args):
    lam = read_weight(rs, args)
    return {"weight": list(lam)}, lambda: h_full_flag(rs, lam).to_json()


def cmd_bsdh_tangent(rs, args):
    word = read_word(rs, args)
    return {"word": list(word), "mode": args.mode}, lambda: bsdh_tangent(rs, word, args.mode).to_json()


def cmd_stab(rs, args):
    word = read_word(rs, args)
    w = from_word(rs, word, check_reduced=True)

    def compute():
        return {
            "I(w)": [i + 1 for i in sorted(schubert_stabilizer(w))],
            "J(w,i)": [i + 1 for i in sorted(j_set(rs, word))],
        }

    return {"word": list(word)}, compute


def cmd_twisted_schubert(rs, args):
    word = read_word(rs, args)
    return {"word": list(word), "mode": args.mode}, lambda: twisted_schubert_report(rs, word, args.mode).to_json()


def cmd_twisted_bsdh(rs, args):
    word = read_word(rs, args)
    from_word(rs, word, check_reduced=True)
    return {"word": list(word), "mode": args.mode}, lambda: twisted_bsdh_report(rs, word, args.mode).to_json()


COMMANDS = {
    "roots": cmd_roots,
    "weyl": cmd_weyl,
    "demazure": cmd_demazure,
    "hcoh": cmd_hcoh,
    "hcoh-mod": cmd_hcoh_mod,
    "bwb": cmd_bwb,
    "bsdh-tangent": cmd_bsdh_tangent,
    "stab": cmd_stab,
    "twisted-schubert": cmd_twisted_schubert,
    "twisted-bsdh": cmd_twisted_bsdh,
}


def uncertified(obj) -> bool:
    if not isinstance(obj, dict):
        return False
    if obj.get("certified") is False:
        return True
    status = obj.get("status")
    return isinstance(status, dict) and "bounds" in status


# ---------------------------------------------------------------------------
# table output


def _fmt_char(terms):
    if not terms:
        return "0"
    return "  ".join(f"{tuple(t['weight'])}" + (f"x{t['mult']}" if t.get("mult", 1) != 1 else "") for t in terms)


def render_table(obj, indent=""):
    lines = []
    if isinstance(obj, dict) and "degrees" in obj:
        degrees = obj["degrees"]
        if not degrees:
            lines.append(f"{indent}all H^j = 0")
        for d, terms in degrees.items():
            lines.append(f"{indent}H^{d}: {_fmt_char(terms)}")
        status = obj["status"]
        if status == "exact":
            lines.append(f"{indent}status: exact")
        else:
            b = status["bounds"]
            lines.append(f"{indent}status: bounds (upper = degrees above)")
            for d, terms in b["lower"].items():
                lines.append(f"{indent}  lower H^{d}: {_fmt_char(terms)}")
            for r in b["reasons"]:
                lines.append(f"{indent}  reason: {r}")
        lines.append(f"{indent}euler: {_fmt_char(obj['euler'])}")
        return lines
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, dict) and ("degrees" in v or len(json.dumps(v)) > 70):
                lines.append(f"{indent}{k}:")
                lines.extend(render_table(v, indent + "  "))
            elif isinstance(v, list) and v and isinstance(v[0], dict) and "weight" in v[0]:
                lines.append(f"{indent}{k}: {_fmt_char(v)}")
            elif isinstance(v, list) and len(json.dumps(v)) > 70:
                lines.append(f"{indent}{k}:")
                lines.extend(f"{indent}  {json.dumps(x)}" for x in v)
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
        return lines
    if isinstance(obj, list):
        if obj and isinstance(obj[0], dict) and "weight" in obj[0]:
            return [indent + _fmt_char(obj)]
        return [indent + json.dumps(x) for x in obj]
    return [indent + json.dumps(obj)]


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "table"), default="json")
    common.add_argument("--cache-dir", default=None, help="result store (default: $SCHUBTWIST_CACHE, else none)")

    typed = argparse.ArgumentParser(add_help=False, parents=[common])
    typed.add_argument("--type", required=True, help="Cartan type, e.g. B2")
    typed.add_argument("--mode", choices=MODES, default="greedy")

    word = argparse.ArgumentParser(add_help=False)
    word.add_argument("--word", help="1-based letters, e.g. 1,2,1")

    weight = argparse.ArgumentParser(add_help=False)
    weight.add_argument("--weight", help="fundamental-weight coordinates")
    weight.add_argument("--weight-root-basis", help="simple-root coordinates")

    p = argparse.ArgumentParser(prog="schubtwist", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[typed], help="print the root system")
    pw = sub.add_parser("weyl", parents=[typed, word], help="Weyl group queries")
    pw.add_argument("action", choices=("enumerate", "length", "descents", "reduced-words", "longest", "bruhat"))
    pw.add_argument("--J", help="parabolic subset for enumerate/longest, e.g. 1,3")
    pw.add_argument("--other", help="u in the test u <= w")
    pw.add_argument("--cap", type=int, default=12)
    sub.add_parser("demazure", parents=[typed, word, weight], help="Demazure character")
    sub.add_parser("hcoh", parents=[typed, word, weight], help="H^j(w, lambda) on a BSDH variety")
    pm = sub.add_parser("hcoh-mod", parents=[typed, word], help="H^j(w, V), default word of w0")
    pm.add_argument("--module", help="weights separated by ';', optional ':mult'")
    pm.add_argument("--root-basis", action="store_true", help="module weights in simple-root coordinates")
    sub.add_parser("bwb", parents=[typed, weight], help="Borel-Weil-Bott closed form on G/B")
    sub.add_parser("bsdh-tangent", parents=[typed, word], help="H^j(Z, Theta_Z)")
    sub.add_parser("stab", parents=[typed, word], help="I(w) and J(w, word)")
    sub.add_parser("twisted-schubert", parents=[typed, word], help="report for G x_B X(w)")
    sub.add_parser("twisted-bsdh", parents=[typed, word], help="report for G x_B Z(w, word)")
    pv = sub.add_parser("verify", parents=[common], help="run verification suites")
    g = pv.add_mutually_exclusive_group(required=True)
    g.add_argument("--suite", choices=sorted(SUITES))
    g.add_argument("--all", action="store_true")
    return p


def run_verify(args, cache, out):
    names = sorted(SUITES) if args.all else [args.suite]
    results = [run_suite(n, cache) for n in names]
    if args.output == "json":
        out.write(json.dumps([r.to_json() for r in results], sort_keys=True) + "\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({len(r.results)} cases, {r.elapsed:.2f}s)\n")
            for f in r.failures:
                out.write(f"    {f['case']}: {json.dumps(f['detail'], sort_keys=True)}\n")
    return 0 if all(r.passed for r in results) else 1


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    argv = _fix_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        cache = ResultCache.from_env(args.cache_dir)
        if args.command == "verify":
            return run_verify(args, cache, out)
        rs = build(args.type)
        request, compute = COMMANDS[args.command](rs, args)
        text = cached(cache, rs.cartan_type, args.command, request, compute)
    except INPUT_ERRORS as exc:
        err.write(f"error: {exc}\n")
        return 1
    obj = json.loads(text)
    if args.output == "json":
        out.write(text + "\n")
    else:
        out.write("\n".join(render_table(obj)) + "\n")
    return 2 if uncertified(obj) else 0


if __name__ == "__main__":
    sys.exit(main())
