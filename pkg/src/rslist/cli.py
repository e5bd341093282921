"""Command-line interface.

Symbols are written as comma-separated canonical field integers and
polynomials as comma-separated coefficients, lowest degree first.

Exit codes: 0 success, 1 usage error or fault, 2 decoding failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .bench import CSV_COLUMNS, grid, sweep, to_csv
from .decoder import list_decode, unique_decode
from .errors import NoCodewordInRange, RSListError
from .gf import parse_field
from .poly import UniPoly
from .rootfind import y_roots
from .rs import RSCode, hamming_distance

EXIT_OK = 0
EXIT_FAULT = 1
EXIT_DECODE_FAILURE = 2
FAILURE_MARKER = "NoCodewordInRange"

REF_V = [6, 2, 4, 4, 4, 2]
REF_HV = [6, 4, 4, 5, 1]
REF_ETA = [6, 0, 0, 0, 0, 0, 1]
REF_Q = [
    [6, 1, 2, 4, 3, 3, 4, 4],
    [2, 6, 6, 4, 6, 3],
    [5, 4, 0, 6],
    [1],
]
REF_ROOTS = [[1, 3, 4], [5, 2, 6]]


def _ints(text: str) -> list[int]:
    text = text.strip()
    return [int(t) for t in text.split(",")] if text else []


def _fmt(values: Sequence[int]) -> str:
    return ",".join(str(int(v)) for v in values)


def _read_word(args) -> list[int]:
    text = args.word if args.word is not None else sys.stdin.read()
    return _ints(text)


def _code(args) -> RSCode:
    F = parse_field(args.field)
    alphas = _ints(args.alphas) if args.alphas else None
    return RSCode(F, args.n, args.k, alphas)


def _emit(pairs: list[tuple[str, object]], as_json: bool) -> None:
    if as_json:
        print(json.dumps(dict(pairs), indent=2))
    else:
        for key, val in pairs:
            print(f"{key}={val}")


def cmd_encode(args) -> int:
    code = _code(args)
    print(_fmt(code.encode(UniPoly(code.field, _ints(args.message)))))
    return EXIT_OK


def cmd_corrupt(args) -> int:
    F = parse_field(args.field)
    word = [F.check(s) for s in _read_word(args)]
    if not 0 <= args.errors <= len(word):
        raise ValueError(f"cannot place {args.errors} errors in {len(word)} symbols")
    rng = random.Random(args.seed)
    for pos in sorted(rng.sample(range(len(word)), args.errors)):
        # a nonzero offset guarantees the symbol actually changes
        word[pos] = F.add(word[pos], rng.randrange(1, F.q))
    print(_fmt(word))
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _code(args)
    v = [code.field.check(s) for s in _read_word(args)]
    if args.list or args.mult > 1:
        res = list_decode(code, v, args.mult, args.l)
        pairs: list[tuple[str, object]] = [
            ("status", "ok" if res.candidates else FAILURE_MARKER),
            ("decoder", "list"),
            ("n", code.n), ("k", code.k), ("m", res.params.m), ("l", res.params.l),
            ("w", res.w), ("guarantee_radius", res.guarantee_radius),
        ]
        if args.json:
            pairs.append(("Q", [list(r.coeffs) for r in res.Q.rows]))
            pairs.append(("candidates", [
                {"message": list(c.message.coeffs), "codeword": c.codeword, "distance": c.distance}
                for c in res.candidates
            ]))
        else:
            pairs += [(f"Q.y{j}", _fmt(r.coeffs)) for j, r in enumerate(res.Q.rows)]
            pairs.append(("candidates", len(res.candidates)))
            for i, c in enumerate(res.candidates):
                pairs += [
                    (f"candidate.{i}.message", _fmt(c.message.coeffs)),
                    (f"candidate.{i}.codeword", _fmt(c.codeword)),
                    (f"candidate.{i}.distance", c.distance),
                ]
        _emit(pairs, args.json)
        return EXIT_OK if res.candidates else EXIT_DECODE_FAILURE
    try:
        h = unique_decode(code, v)
    except NoCodewordInRange:
        _emit([("status", FAILURE_MARKER), ("decoder", "unique"), ("tau", code.tau)], args.json)
        return EXIT_DECODE_FAILURE
    c = code.evaluate(h)
    msg = list(h.coeffs) + [0] * (code.k - len(h.coeffs))
    if args.json:
        _emit([("status", "ok"), ("decoder", "unique"), ("message", msg),
               ("codeword", c), ("distance", hamming_distance(c, v))], True)
    else:
        _emit([("status", "ok"), ("decoder", "unique"), ("message", _fmt(msg)),
               ("codeword", _fmt(c)), ("distance", hamming_distance(c, v))], False)
    return EXIT_OK


def worked_example() -> dict[str, object]:
    """Run the RS(6,3) over GF(7) example and compare with the golden values."""
    F = parse_field("7")
    code = RSCode(F, 6, 3, [1, 2, 3, 4, 5, 6])
    hv = code.interpolate(REF_V)
    res = list_decode(code, REF_V, 2)
    Q = res.Q.y_monic()
    roots = [list(h.coeffs) for h in y_roots(res.Q, 3)]
    checks = {
        "h_v": list(hv.coeffs) == REF_HV,
        "eta": list(code.eta.coeffs) == REF_ETA,
        "l": res.params.l == 3,
        "Q": [list(r.coeffs) for r in Q.rows] == REF_Q,
        "roots": sorted(roots) == sorted(REF_ROOTS),
    }
    return {"h_v": hv, "eta": code.eta, "Q": Q, "roots": roots, "w": res.w,
            "candidates": res.candidates, "checks": checks}


def cmd_worked_example(args) -> int:
    out = worked_example()
    print(f"h_v={out['h_v']}")
    print(f"eta={out['eta']}")
    print(f"Q={out['Q']}")
    print(f"w={out['w']}")
    for c in out["candidates"]:
        print(f"candidate={c.message} distance={c.distance}")
    for name, ok in out["checks"].items():
        print(f"check.{name}={'pass' if ok else 'FAIL'}")
    ok = all(out["checks"].values())
    print(f"match={'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_FAULT


def cmd_bench(args) -> int:
    points = grid(_ints(args.n), _ints(args.m), args.rate, args.k)
    rows = sweep(points, args.field, args.seed, args.jobs)
    text = to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import plot_bench

        plot_bench(rows, args.plot)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for decode failure
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAULT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rslist", description="Reed-Solomon list decoding toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def code_flags(p, need_code=True):
        p.add_argument("--field", default="7", help="field order as p or p^m (default 7)")
        if need_code:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--alphas", help="evaluation points (default: 1, 2, ..., n)")

    p = sub.add_parser("encode", help="encode a message polynomial")
    code_flags(p)
    p.add_argument("--message", required=True, help="coefficients, lowest degree first")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="add random symbol errors to a word")
    code_flags(p, need_code=False)
    p.add_argument("--word", help="symbols (default: read stdin)")
    p.add_argument("--errors", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode", help="decode a received word")
    code_flags(p)
    p.add_argument("--word", help="symbols (default: read stdin)")
    p.add_argument("--mult", type=int, default=1, help="interpolation multiplicity m")
    p.add_argument("--list", action="store_true", help="use the list decoder even for m=1")
    p.add_argument("--l", type=int, default=None, help="override the y-degree bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("worked-example", help="replay the RS(6,3) over GF(7) example")
    p.set_defaults(func=cmd_worked_example)

    p = sub.add_parser("bench", help="multiplication counts over an (n, m) grid")
    p.add_argument("--n", default="16,32,64")
    p.add_argument("--m", default="1,2,3")
    p.add_argument("--rate", type=float, default=0.5, help="k = round(rate * n)")
    p.add_argument("--k", type=int, default=None, help="fixed k for every n")
    p.add_argument("--field", default=None, help="default: smallest prime above n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help=f"CSV path ({','.join(CSV_COLUMNS)}); default stdout")
    p.add_argument("--plot", help="also render a figure to this path")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RSListError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAULT


if __name__ == "__main__":
    sys.exit(main())
