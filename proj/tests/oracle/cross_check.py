"""Compare `ringlex build` with the Python oracle on small cases.

Fixture rows with n <= 6 (printed basis, or the erratum basis) and seeded
random bases for every criterion over both rings.
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import lexicode_oracle as oracle  # noqa: E402

CRITERIA = {
    "z4": ["min-hamming", "min-lee", "min-euclidean", "self-inner-zero", "euclid-mod8", "lee-even"],
    "f2u": ["min-hamming", "min-lee", "self-inner-zero", "lee-even"],
}


def run_cli(cli, args):
    p = subprocess.run([cli] + args, capture_output=True, text=True)
    return p.returncode, p.stdout


def cli_build(cli, ring, n, basis, criterion, delta):
    with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
        f.write("ring=%s n=%d\n" % (ring, n))
        f.write("\n".join(basis) + "\n")
        path = f.name
    try:
        args = ["build", "--basis", path, "--criterion", criterion, "--out", "json"]
        if delta is not None:
            args += ["--delta", str(delta)]
        code, out = run_cli(cli, args)
    finally:
        os.unlink(path)
    if code != 0:
        return code, None
    j = json.loads(out)
    return 0, {
        "generators": [g["vector"] for g in j["build"]["generators"]],
        "type": j["report"]["type"],
        "size": j["report"]["code_size"],
        "d_L": j["report"]["d_L"],
    }


def oracle_build(ring, basis, criterion, delta):
    gens, code = oracle.build(ring, [oracle.parse(ring, b) for b in basis], oracle.criterion(ring, criterion, delta))
    return oracle.report(ring, gens, code)


def compare(label, cli, ring, n, basis, criterion, delta, failures):
    code, got = cli_build(cli, ring, n, basis, criterion, delta)
    if code == 3:
        return False  # not a basis; the oracle does not check
    want = oracle_build(ring, basis, criterion, delta)
    if got != want:
        failures.append("%s: cli %s (exit %d) vs oracle %s" % (label, got, code, want))
    return True


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--fixtures", required=True)
    args = ap.parse_args()

    failures, checked = [], 0
    for name in sorted(os.listdir(args.fixtures)):
        if not name.startswith("table"):
            continue
        header, rows = oracle.load_fixture(os.path.join(args.fixtures, name))
        ring, crit = header["ring"], header["criterion"]
        for row in rows:
            n = int(row["n"])
            if n > 6:
                continue
            basis = (row.get("erratum.basis") or row["basis"]).split()
            if basis == ["canonical"]:
                basis = [oracle.fmt(ring, b) for b in oracle.canonical(n)]
            if any(len(b) != n for b in basis) or len(basis) != n:
                continue
            delta = int(row["delta"]) if "delta" in row else None
            checked += compare("%s row %s" % (name, row["id"]), args.cli, ring, n, basis, crit, delta, failures)

    for ring, crits in CRITERIA.items():
        for n in (2, 3, 4):
            for seed in (1, 2):
                code, out = run_cli(args.cli, ["rand-basis", "--ring", ring, "--n", str(n), "--seed", str(seed)])
                if code != 0:
                    failures.append("rand-basis %s n=%d seed=%d exit %d" % (ring, n, seed, code))
                    continue
                basis = [l.strip() for l in out.splitlines()[1:] if l.strip()]
                for crit in crits:
                    deltas = range(1, 2 * n + 1) if crit.startswith("min-") else [None]
                    for delta in deltas:
                        label = "%s n=%d seed=%d %s delta=%s" % (ring, n, seed, crit, delta)
                        checked += compare(label, args.cli, ring, n, basis, crit, delta, failures)

    for f in failures:
        print("MISMATCH " + f)
    print("%d cases checked, %d mismatches" % (checked, len(failures)))
    return 1 if failures or checked == 0 else 0


if __name__ == "__main__":
    sys.exit(main())
