"""Command-line frontend for the braid decision procedures and reports.

Exit codes: 0 for mathematical true / successful computation, 1 for
mathematical false (or a failed verification report), 2 for usage or parse
errors.  With --json, output is canonical JSON (sorted keys, compact
separators), so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import artin, bhat3, braidword, burau, linrep, redfree


def _jsonify(value):
    if isinstance(value, burau.LaurentPoly):
        return value.terms()
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return value


def _emit(args, command: str, inputs, result, status: int) -> int:
    if args.json:
        payload = {
            "command": command,
            "input": _jsonify(inputs),
            "result": _jsonify(result),
            "status": status,
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        _print_human(result)
    return status


def _print_human(result, indent: str = ""):
    if isinstance(result, dict):
        for key, value in result.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                print(f"{indent}{key}:")
                _print_human(value, indent + "  ")
            else:
                print(f"{indent}{key}: {_jsonify(value)}")
    elif isinstance(result, list):
        for item in result:
            if isinstance(item, dict):
                line = "  ".join(f"{k}={_jsonify(v)}" for k, v in item.items())
                print(f"{indent}{line}")
            else:
                print(f"{indent}{_jsonify(item)}")
    else:
        print(f"{indent}{_jsonify(result)}")


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _read_words(args, count: int) -> list[str]:
    if getattr(args, "stdin", False):
        lines = [line.strip() for line in sys.stdin if line.strip()]
        if len(lines) < count:
            raise ValueError(f"expected {count} word(s) on stdin, got {len(lines)}")
        return lines[:count]
    words = [w for w in (getattr(args, "word", None), getattr(args, "word2", None)) if w]
    if len(words) < count:
        raise ValueError(f"expected {count} word argument(s)")
    return words[:count]


def _parse_word(text: str, strands: int) -> braidword.BraidWord:
    return braidword.parse(text, strands)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homotopybraid",
        description="Decision procedures for braid words up to link homotopy, "
        "normal forms in the 3-strand homotopy braid group, and verification "
        "reports (Burau obstructions, torsion certificate, relation suites).",
    )
    parser.add_argument("--json", action="store_true", help="emit canonical JSON")
    parser.add_argument(
        "--strands", type=int, default=3, help="strand count n (default 3)"
    )
    parser.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="override the generator-count cap (default 7; factorial growth)",
    )
    parser.add_argument(
        "--stdin", action="store_true", help="read word arguments from stdin"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, words: int = 0, extra=None):
        p = sub.add_parser(name, help=help_text)
        if words >= 1:
            p.add_argument("word", nargs="?", help="braid word (tokens or JSON array)")
        if words >= 2:
            p.add_argument("word2", nargs="?", help="second braid word")
        if extra:
            extra(p)
        return p

    add("reduce", "freely reduce a braid word", words=1)
    add("perm", "permutation image of a braid word", words=1)
    add("heq", "are two words equal up to link homotopy?", words=2)
    add("htrivial", "is the word homotopically trivial?", words=1)
    add("nf3", "normal form in the 3-strand homotopy braid group", words=1)
    add("order3", "order (1 or infinite) of a 3-strand homotopy braid", words=1)
    add(
        "power3",
        "normal form of the m-th power of a 3-strand homotopy braid",
        words=1,
        extra=lambda p: p.add_argument("exponent", type=int),
    )
    add("burau", "Burau matrix of a braid word", words=1)
    add("prop2", "Burau obstruction system for factoring through link homotopy")
    add("lemma1", "verdicts for the eight weight-3 commutators of K_3")
    add("relations", "verify braid/pure-braid/conjugation relations in Aut K_n")
    add("torsion3", "torsion-freeness certificate for the 3-strand group")
    add("goldsmith", "run the Goldsmith braid demo")
    add(
        "k2rep",
        "unitriangular matrix of x1^alpha x2^beta [x1,x2]^gamma in K_2",
        extra=lambda p: (
            p.add_argument("exponents", type=int, nargs=3, metavar="E"),
            p.add_argument("--a", type=int, default=1),
            p.add_argument("--b", type=int, default=1),
        ),
    )
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.max_n is not None:
        redfree.DEFAULT_MAX_RANK = args.max_n
    try:
        return _dispatch(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    command = args.command
    n = args.strands

    if command == "reduce":
        (text,) = _read_words(args, 1)
        word = braidword.free_reduce(_parse_word(text, n))
        return _emit(args, command, {"word": text, "strands": n},
                     {"letters": list(word.letters), "tokens": word.as_tokens()}, 0)

    if command == "perm":
        (text,) = _read_words(args, 1)
        perm = braidword.permutation(_parse_word(text, n))
        return _emit(args, command, {"word": text, "strands": n},
                     {"images": list(perm.images), "identity": perm.is_identity()}, 0)

    if command == "heq":
        texts = _read_words(args, 2)
        verdict = artin.homotopy_equal(
            _parse_word(texts[0], n), _parse_word(texts[1], n)
        )
        return _emit(args, command, {"words": texts, "strands": n},
                     {"homotopy_equal": verdict}, 0 if verdict else 1)

    if command == "htrivial":
        (text,) = _read_words(args, 1)
        verdict = artin.is_homotopy_trivial(_parse_word(text, n))
        return _emit(args, command, {"word": text, "strands": n},
                     {"homotopy_trivial": verdict}, 0 if verdict else 1)

    if command == "nf3":
        (text,) = _read_words(args, 1)
        element = bhat3.from_braid_word(_parse_word(text, 3))
        return _emit(args, command, {"word": text}, json.loads(element.to_json()), 0)

    if command == "order3":
        (text,) = _read_words(args, 1)
        result = bhat3.order(bhat3.from_braid_word(_parse_word(text, 3)))
        return _emit(args, command, {"word": text},
                     {"order": 1 if result == 1 else "infinite"}, 0)

    if command == "power3":
        (text,) = _read_words(args, 1)
        element = bhat3.power(bhat3.from_braid_word(_parse_word(text, 3)), args.exponent)
        return _emit(args, command, {"word": text, "exponent": args.exponent},
                     json.loads(element.to_json()), 0)

    if command == "burau":
        (text,) = _read_words(args, 1)
        matrix = burau.burau(_parse_word(text, n))
        return _emit(args, command, {"word": text, "strands": n},
                     {"matrix": [[e.terms() for e in row] for row in matrix]}, 0)

    if command == "prop2":
        report = burau.homotopy_obstruction_system()
        report["specialized_image_order_at_t1"] = burau.specialized_image_order(1)
        ok = (
            report["all_vanish_at_t1"]
            and report["sole_rational_common_root_is_one"]
            and report["specialized_image_order_at_t1"] == 6
        )
        report["pass"] = ok
        return _emit(args, command, {}, report, 0 if ok else 1)

    if command == "lemma1":
        report = artin.weight3_report()
        ok = all(row["pass"] for row in report)
        return _emit(args, command, {}, {"verdicts": report, "pass": ok}, 0 if ok else 1)

    if command == "relations":
        if not (2 <= n <= 5):
            raise ValueError("relation suites are supported for 2 <= n <= 5")
        report = artin.verify_relations(n)
        ok = all(row["pass"] for row in report)
        return _emit(args, command, {"strands": n},
                     {"checks": report, "total": len(report), "pass": ok},
                     0 if ok else 1)

    if command == "torsion3":
        report = bhat3.torsion_certificate()
        return _emit(args, command, {}, report, 0 if report["all_pass"] else 1)

    if command == "goldsmith":
        word = braidword.goldsmith_word()
        nf = bhat3.from_braid_word(word)
        report = {
            "word": list(word.letters),
            "free_action_nontrivial": not artin.artin_free(word).is_identity(),
            "burau_nontrivial": burau.burau(word) != burau.identity_matrix(3),
            "permutation_identity": braidword.permutation(word).is_identity(),
            "aut_k3_identity": artin.artin_k(word).is_identity(),
            "normal_form": json.loads(nf.to_json()),
            "normal_form_identity": nf.is_identity(),
        }
        ok = (
            report["free_action_nontrivial"]
            and report["burau_nontrivial"]
            and report["permutation_identity"]
            and report["aut_k3_identity"]
            and report["normal_form_identity"]
        )
        report["pass"] = ok
        return _emit(args, command, {}, report, 0 if ok else 1)

    if command == "k2rep":
        alpha, beta, gamma = args.exponents
        matrix = linrep.k2_rep(args.a, args.b, (alpha, beta, gamma))
        return _emit(args, command,
                     {"exponents": [alpha, beta, gamma], "a": args.a, "b": args.b},
                     {"matrix": [list(row) for row in matrix]}, 0)

    raise ValueError(f"unknown command {command!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
