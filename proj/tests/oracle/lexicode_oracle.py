"""Slow, independent reference for the greedy lexicode construction.

Plain tuples and sets, written from the definitions without sharing code or
encodings with the C++ library. Used to derive expected values and to
cross-check the CLI on small cases.

    python3 lexicode_oracle.py build --ring z4 --criterion self-inner-zero --basis canonical --n 4
    python3 lexicode_oracle.py fixture data/fixtures/table3.txt 7
"""

import argparse
import json
import math
import re
import sys

SYMBOLS = {"z4": "0123", "f2u": "01uv"}


# f2u elements a + u b are stored as the integer a + 2b: 0, 1, u = 2, v = 3.
def add(ring, x, y):
    return (x + y) % 4 if ring == "z4" else x ^ y


def mul(ring, x, y):
    if ring == "z4":
        return (x * y) % 4
    a1, b1 = x & 1, x >> 1
    a2, b2 = y & 1, y >> 1
    # (a1 + u b1)(a2 + u b2) = a1 a2 + u (a1 b2 + a2 b1)
    return (a1 & a2) | (((a1 & b2) ^ (a2 & b1)) << 1)


def parse(ring, text):
    return tuple(SYMBOLS[ring].index(c) for c in text)


def fmt(ring, v):
    return "".join(SYMBOLS[ring][c] for c in v)


def vadd(ring, x, y):
    return tuple(add(ring, a, b) for a, b in zip(x, y))


def smul(ring, a, x):
    return tuple(mul(ring, a, b) for b in x)


def lee(x):
    return sum((0, 1, 2, 1)[c] for c in x)


def euclid(x):
    return sum((0, 1, 4, 1)[c] for c in x)


def hamming(x):
    return sum(1 for c in x if c)


def inner(ring, x, y):
    s = 0
    for a, b in zip(x, y):
        s = add(ring, s, mul(ring, a, b))
    return s


def criterion(ring, name, delta=None):
    table = {
        "self-inner-zero": lambda x: inner(ring, x, x) == 0,
        "euclid-mod8": lambda x: euclid(x) % 8 == 0,
        "lee-even": lambda x: lee(x) % 2 == 0,
        "min-lee": lambda x: lee(x) >= delta,
        "min-hamming": lambda x: hamming(x) >= delta,
        "min-euclidean": lambda x: euclid(x) >= delta,
    }
    return table[name]


def span(ring, gens, n):
    code = {(0,) * n}
    for g in gens:
        code = {vadd(ring, smul(ring, a, g), c) for a in range(4) for c in code}
    return code


def code_type(ring, code):
    # |C| = 4^k1 2^k2 and the residue code C mod gamma has 2^k1 words
    residue = {tuple(c & 1 for c in w) for w in code}
    k1 = int(round(math.log2(len(residue))))
    k2 = int(round(math.log2(len(code)))) - 2 * k1
    return k1, k2


def type_string(k1, k2):
    parts = []
    if k1:
        parts.append("4^%d" % k1)
    if k2:
        parts.append("2^%d" % k2)
    return " ".join(parts) or "4^0"


def build(ring, basis, pred):
    """Literal transcription: V_i = V_{i-1}, 1 b_i + V_{i-1}, ... with scalars 0,1,2,3."""
    n = len(basis)
    zero = (0,) * n
    layer_prev = [zero]
    code = {zero}
    gens = []
    for b in basis:
        new = []
        found = None
        for alpha in (1, 2, 3):
            ab = smul(ring, alpha, b)
            for v in layer_prev:
                x = vadd(ring, ab, v)
                new.append(x)
                if found is None and all(
                    pred(vadd(ring, smul(ring, g, x), c)) for g in (1, 2) for c in code
                ):
                    found = x
        layer_prev = layer_prev + new
        if found is not None:
            gens.append(found)
            code = {vadd(ring, smul(ring, a, found), c) for a in range(4) for c in code}
    return gens, code


def report(ring, gens, code):
    k1, k2 = code_type(ring, code)
    nonzero = [c for c in code if any(c)]
    return {
        "generators": [fmt(ring, g) for g in gens],
        "type": type_string(k1, k2),
        "size": len(code),
        "d_L": min(lee(c) for c in nonzero) if nonzero else None,
    }


def load_fixture(path):
    header, rows, cur = {}, [], None
    for line in open(path):
        line = line.split("#")[0].strip()
        if not line:
            continue
        m = re.match(r"\[row (\S+)\]", line)
        if m:
            cur = {"id": m.group(1)}
            rows.append(cur)
            continue
        k, v = [s.strip() for s in line.split("=", 1)]
        (cur if cur is not None else header)[k] = v
    return header, rows


def canonical(n):
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def main(argv):
    ap = argparse.ArgumentParser()
    sub = ap.add_subparsers(dest="cmd", required=True)
    b = sub.add_parser("build")
    b.add_argument("--ring", required=True, choices=["z4", "f2u"])
    b.add_argument("--criterion", required=True)
    b.add_argument("--delta", type=int)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--basis", nargs="+", required=True)
    f = sub.add_parser("fixture")
    f.add_argument("path")
    f.add_argument("row")
    f.add_argument("--basis", nargs="+", help="override the printed basis")
    s = sub.add_parser("span")
    s.add_argument("--ring", required=True, choices=["z4", "f2u"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("generators", nargs="*")
    args = ap.parse_args(argv)

    if args.cmd == "span":
        gens = [parse(args.ring, g) for g in args.generators]
        print(json.dumps(report(args.ring, gens, span(args.ring, gens, args.n)), sort_keys=True))
        return 0
    if args.cmd == "build":
        ring, n = args.ring, args.n
        basis = canonical(n) if args.basis == ["canonical"] else [parse(ring, t) for t in args.basis]
        pred = criterion(ring, args.criterion, args.delta)
    else:
        header, rows = load_fixture(args.path)
        row = next(r for r in rows if r["id"] == args.row)
        ring, n = header["ring"], int(row["n"])
        text = args.basis or row["basis"].split()
        basis = canonical(n) if text == ["canonical"] else [parse(ring, t) for t in text]
        pred = criterion(ring, header["criterion"], int(row["delta"]) if "delta" in row else None)
    gens, code = build(ring, basis, pred)
    print(json.dumps(report(ring, gens, code), sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
