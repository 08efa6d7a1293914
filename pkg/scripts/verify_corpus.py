#!/usr/bin/env python3
"""Run every bundled verification suite and report per-check verdicts.

Equivalent to ``malgrange verify --all`` but importable and flag-compatible
with the experiment scripts; exits 1 if any check fails.
"""

import argparse
import sys

from malgrange.cli import run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", dest="json_out")
    ap.add_argument("--seed", type=int, default=0,
                    help="add seeded random modules to the main-theorem suite")
    args = ap.parse_args()
    code, out = run(None, "verify", json_out=args.json_out,
                    seed=args.seed, all_corpus=True)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
