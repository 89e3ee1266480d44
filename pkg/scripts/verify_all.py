#!/usr/bin/env python3
"""Run every verification suite and print a one-line-per-check summary."""

import sys

from qhermite import verify


def main() -> int:
    failures = 0
    for report in verify.run_suites("all", q=0.5, seed=1234):
        for chk in report.checks:
            tag = "ok " if chk.passed else "FAIL"
            print(f"[{tag}] {report.suite:<10} {chk.name:<60} {chk.measured:.3e} / {chk.bound:.1e}")
            failures += 0 if chk.passed else 1
    print(f"\n{failures} failing check(s)" if failures else "\nall checks passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
