"""Batch command-line front end with deterministic, machine-readable output.

Verbs: lrcoef, tensor, branch, restrict-tensor, enumerate, char, verify.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .alphabets import GradedAlphabet
from .branching import (branch_table, gl_tensor_restriction, lr_set_branch,
                        lr_set_tensor, stable_branch_count,
                        stable_branch_forward, stable_branch_inverse,
                        stable_tensor_count, stable_tensor_forward,
                        stable_tensor_inverse)
from .characters import char_spinor, char_unitarizable, verify_oscillator_identity
from .groups import GroupSpec, family_for, in_group_range
from .oracle import (lr_coef_latticeword, sp_restriction_oracle,
                     sp_tensor_oracle, spinor_dimension)
from .partitions import base_type, length, normalize, partitions_upto
from .spinor import crystal_set, enumerate_spinor
from .tableaux import lr_coef


def max_threads() -> int:
    """Worker cap for the verify suites, taken from SPINOR_THREADS."""
    raw = os.environ.get("SPINOR_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return max(1, min(4, os.cpu_count() or 1))


def parse_partition(text: str | None):
    if text is None or text.strip() in ("", "0"):
        return ()
    return normalize(tuple(int(x) for x in text.split(",")))


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _group(args) -> GroupSpec:
    if args.group:
        return GroupSpec(args.group, args.n)
    return family_for(args.type, args.n)


def cmd_lrcoef(args) -> int:
    lam, mu, nu = (parse_partition(args.lam[0] if args.lam else None),
                   parse_partition(args.mu), parse_partition(args.nu))
    value = lr_coef_latticeword(lam, mu, nu)
    if args.format == "json":
        _print_json({"lambda": list(lam), "mu": list(mu), "nu": list(nu),
                     "coef": value})
    else:
        print(value)
    return 0


def cmd_tensor(args) -> int:
    lam = parse_partition(args.lam[0] if args.lam else None)
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    count = lr_set_tensor(args.type, args.m, args.n, lam, mu, nu,
                          as_count=True)
    stable = 2 * length(lam) <= min(args.m, args.n)
    if args.format == "json":
        _print_json({"lambda": list(lam), "mu": list(mu), "nu": list(nu),
                     "type": args.type, "count": count, "stable": stable})
    else:
        print(count)
    return 0


def cmd_branch(args) -> int:
    lam = parse_partition(args.lam[0] if args.lam else None)
    group = _group(args)
    table = branch_table(args.type, group, lam)
    rows = sorted(table.items())
    if args.format == "json":
        _print_json({
            "type": args.type,
            "group": group.to_json(),
            "lambda": list(lam),
            "rows": [{"mu": list(mu), "multiplicity": c} for mu, c in rows],
        })
    else:
        print(f"# group={group.family}_{group.n} lambda="
              f"{','.join(map(str, lam)) or '0'}")
        print("mu\tmultiplicity")
        for mu, c in rows:
            print(f"{','.join(map(str, mu)) or '0'}\t{c}")
    return 0


def cmd_restrict_tensor(args) -> int:
    lams = [parse_partition(x) for x in (args.lam or [])]
    mu = parse_partition(args.mu)
    group = _group(args)
    value = gl_tensor_restriction(args.type or group.gtype, group, lams, mu)
    if args.format == "json":
        _print_json({"group": group.to_json(),
                     "lambdas": [list(p) for p in lams],
                     "mu": list(mu), "multiplicity": value})
    else:
        print(value)
    return 0


def cmd_enumerate(args) -> int:
    lam = parse_partition(args.lam[0] if args.lam else None)
    group = _group(args)
    content = None
    if args.content:
        content = tuple(int(x) for x in args.content.split(","))
    for t in enumerate_spinor(args.type, group, lam,
                              GradedAlphabet.natural(args.k),
                              content=content, limit=args.limit):
        _print_json(t.to_json())
    return 0


def cmd_char(args) -> int:
    lam = parse_partition(args.lam[0] if args.lam else None)
    if args.plain:
        group = _group(args)
        series = char_spinor(args.type, group, lam,
                             GradedAlphabet.natural(args.k), args.degree)
    else:
        series = char_unitarizable(args.type, args.k, lam, args.n, args.degree)
    _print_json(series.to_json())
    return 0


# ---------------------------------------------------------------------------
# verification suites (compact versions of the acceptance checks)

def _suite_golden_examples() -> list[str]:
    failures = []
    expected = {
        ((2, 2), 4): {(2, 2): 1, (2,): 1, (): 1},
        ((2, 2), 3): {(2,): 1, (): 1},
        ((2, 2), 2): {(): 1},
        ((3, 1), 4): {(3, 1): 1, (2,): 1, (1, 1): 1},
        ((3, 1), 3): {(3, 1): 1, (2,): 1, (1, 1): 1},
        ((3, 1), 2): {(2,): 1, (1, 1): 1},
    }
    for (lam, n), want in expected.items():
        got = branch_table("d", GroupSpec("O", n), lam)
        if got != want:
            failures.append(f"branch O_{n} {lam}: {got} != {want}")
    return failures


def _suite_dimension() -> list[str]:
    failures = []
    for g, fam in (("c", "Sp"), ("b", "Pin"), ("b", "Spin"), ("d", "O")):
        for n in range(2, 7):
            try:
                grp = GroupSpec(fam, n)
            except ValueError:
                continue
            for lam in partitions_upto(3):
                if not in_group_range(lam, grp):
                    continue
                for k in (2, 3):
                    if lam and lam[0] > k:
                        continue
                    cnt = len(crystal_set(g, grp, lam, k))
                    dim = spinor_dimension(g, k, n, lam)
                    if cnt != dim:
                        failures.append(
                            f"dim {g} {fam}_{n} {lam} k={k}: {cnt} != {dim}")
    return failures


def _suite_oracle() -> list[str]:
    failures = []
    for lam in partitions_upto(4):
        for n in (2, 4):
            if length(lam) > n:
                continue
            want = {normalize(mu): c
                    for mu, c in sp_restriction_oracle(lam, n).items() if c}
            got = {}
            for mu in partitions_upto(sum(lam), max_length=n // 2):
                c = lr_set_branch("c", GroupSpec("Sp", n), mu, lam,
                                  as_count=True)
                if c:
                    got[mu] = c
            if got != want:
                failures.append(f"sp restriction {lam} n={n}: {got} != {want}")
    return failures


def _suite_stable_bijection() -> list[str]:
    failures = []
    for g in ("b", "c", "d"):
        for lam in partitions_upto(3):
            n = m = 4 * max(1, length(lam))
            if g == "b" and m % 2:
                m = n = m + 1
            try:
                gm = family_for(g, m)
            except ValueError:
                continue
            for mu in partitions_upto(sum(lam)):
                if not in_group_range(mu, gm):
                    continue
                for nu in partitions_upto(sum(lam) - sum(mu)):
                    if not in_group_range(nu, family_for(g, n)):
                        continue
                    elems = lr_set_tensor(g, m, n, lam, mu, nu)
                    if len(elems) != stable_tensor_count(g, lam, mu, nu):
                        failures.append(
                            f"tensor count {g} {lam} {mu} {nu}")
                        continue
                    for t in elems:
                        img = stable_tensor_forward(t, m, lam, mu)
                        back = stable_tensor_inverse(
                            g, m, n, lam, mu, nu, img.body, img.tail)
                        if back != t:
                            failures.append(
                                f"tensor roundtrip {g} {lam} {mu} {nu}")
    return failures


def _suite_oscillator() -> list[str]:
    failures = []
    for g in ("bb", "c", "d"):
        for k in (1, 2):
            for lam in partitions_upto(2, max_length=k):
                try:
                    ok, diff = verify_oscillator_identity(g, k, lam, 2 * k, 6)
                except ValueError:
                    continue
                if not ok:
                    failures.append(f"oscillator {g} k={k} {lam}: {diff}")
    return failures


_SUITES = {
    "golden-examples": _suite_golden_examples,
    "dimension": _suite_dimension,
    "oracle": _suite_oracle,
    "stable-bijection": _suite_stable_bijection,
    "oscillator": _suite_oscillator,
}


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite in (None, "all") else [args.suite]
    for name in names:
        if name not in _SUITES:
            print(f"unknown suite {name!r}", file=sys.stderr)
            return 2
    failed = False
    with ThreadPoolExecutor(max_workers=max_threads()) as pool:
        results = {name: pool.submit(_SUITES[name]) for name in names}
        for name in names:
            failures = results[name].result()
            if failures:
                failed = True
                print(f"FAIL {name}")
                for line in failures[:10]:
                    print(f"  {line}")
            else:
                print(f"ok {name}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spinorcrystals",
        description="tensor and branching multiplicities for classical "
                    "groups via the spinor model")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, group=True):
        sp.add_argument("--type", choices=("b", "c", "d", "bb"), default="c")
        if group:
            sp.add_argument("--group", choices=("Sp", "O", "Spin", "Pin"))
        sp.add_argument("--n", type=int, default=2)
        sp.add_argument("--m", type=int, default=2)
        sp.add_argument("--k", type=int, default=2)
        sp.add_argument("--lambda", dest="lam", action="append")
        sp.add_argument("--mu")
        sp.add_argument("--nu")
        sp.add_argument("--degree", type=int, default=8)
        sp.add_argument("--format", choices=("json", "tsv"), default="tsv")
        sp.add_argument("--limit", type=int)

    for verb, fn in (("lrcoef", cmd_lrcoef), ("tensor", cmd_tensor),
                     ("branch", cmd_branch),
                     ("restrict-tensor", cmd_restrict_tensor),
                     ("enumerate", cmd_enumerate), ("char", cmd_char)):
        sp = sub.add_parser(verb)
        common(sp)
        sp.set_defaults(func=fn)
    sub.choices["enumerate"].add_argument("--content")
    sub.choices["char"].add_argument("--plain", action="store_true")

    sp = sub.add_parser("verify")
    sp.add_argument("--suite")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
