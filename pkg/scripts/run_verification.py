#!/usr/bin/env python3
"""Run every verification suite at full scale and print one line per suite.

Usage:
    python scripts/run_verification.py [--quick]

Honors SPINBRANCH_THREADS for the raising-oracle sweep.
"""
import argparse
import sys
import time

from spinbranch import verify


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="reduced sweep sizes")
    args = parser.parse_args()

    plans = {
        "reduction": {"samples": 2000 if args.quick else 10000},
        "flows": {"max_domain": 5 if args.quick else 6},
        "poly-identities": {"width": 4 if args.quick else 6},
        "raising-oracle": {"width": 3 if args.quick else 5},
        "signature-bridge": {"samples": 1000 if args.quick else 10000},
        "duality": {"samples": 1000 if args.quick else 10000},
        "certificates": {"samples": 1000 if args.quick else 10000},
    }
    all_ok = True
    for name in verify.SUITES:
        start = time.time()
        report = verify.run_suite(name, **plans.get(name, {}))
        status = "pass" if report.passed else "FAIL"
        print(
            f"{name:18s} {status}  cases={report.cases:7d}"
            f"  time={time.time() - start:6.1f}s"
        )
        for failure in report.failures[:5]:
            print("   ", failure)
        all_ok = all_ok and report.passed
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
